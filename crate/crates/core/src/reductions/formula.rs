use std::fmt;

/// A possibly negated variable, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    pub variable: usize,
    pub negated: bool,
}

impl Literal {
    pub fn pos(variable: usize) -> Self {
        Literal {
            variable,
            negated: false,
        }
    }

    pub fn neg(variable: usize) -> Self {
        Literal {
            variable,
            negated: true,
        }
    }

    /// `None` for 0, which DIMACS reserves as the clause terminator.
    pub fn from_dimacs(lit: i64) -> Option<Self> {
        let variable = usize::try_from(lit.unsigned_abs())
            .ok()
            .filter(|&v| v != 0)?;
        Some(Literal {
            variable,
            negated: lit < 0,
        })
    }

    pub fn to_dimacs(self) -> i64 {
        let v = self.variable as i64;
        if self.negated {
            -v
        } else {
            v
        }
    }

    /// `assignment[0]` is x1.
    pub fn eval(self, assignment: &[bool]) -> bool {
        assignment[self.variable - 1] != self.negated
    }

    /// The value of the variable that makes this literal false.
    pub fn falsifying_value(self) -> bool {
        self.negated
    }
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            write!(f, "¬x{}", self.variable)
        } else {
            write!(f, "x{}", self.variable)
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FormulaError {
    #[error("literal on x{variable} outside 1..={num_vars}")]
    LiteralOutOfRange { variable: usize, num_vars: usize },
    #[error("clause {clause} is empty")]
    EmptyClause { clause: usize },
    #[error("clause {clause} has {len} literals, at most 3 allowed")]
    ClauseTooLong { clause: usize, len: usize },
    #[error("quantified formulas need an even number of variables, got {0}")]
    OddVariableCount(usize),
}

/// Conjunction of clauses with one to three literals each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
}

impl CnfFormula {
    pub fn new(num_vars: usize, clauses: Vec<Vec<Literal>>) -> Result<Self, FormulaError> {
        for (j, clause) in clauses.iter().enumerate() {
            if clause.is_empty() {
                return Err(FormulaError::EmptyClause { clause: j + 1 });
            }
            if clause.len() > 3 {
                return Err(FormulaError::ClauseTooLong {
                    clause: j + 1,
                    len: clause.len(),
                });
            }
            if let Some(l) = clause
                .iter()
                .find(|l| l.variable == 0 || l.variable > num_vars)
            {
                return Err(FormulaError::LiteralOutOfRange {
                    variable: l.variable,
                    num_vars,
                });
            }
        }
        Ok(CnfFormula { num_vars, clauses })
    }

    /// Clauses written as DIMACS integers without the terminating 0.
    pub fn from_dimacs_clauses(num_vars: usize, clauses: &[&[i64]]) -> Result<Self, FormulaError> {
        let mut out = Vec::with_capacity(clauses.len());
        for (j, c) in clauses.iter().enumerate() {
            let lits: Option<Vec<Literal>> = c.iter().map(|&l| Literal::from_dimacs(l)).collect();
            let lits = lits.ok_or(FormulaError::LiteralOutOfRange {
                variable: 0,
                num_vars,
            })?;
            if lits.is_empty() {
                return Err(FormulaError::EmptyClause { clause: j + 1 });
            }
            out.push(lits);
        }
        Self::new(num_vars, out)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<Literal>] {
        &self.clauses
    }

    pub fn eval(&self, assignment: &[bool]) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|l| l.eval(assignment)))
    }

    /// Every clause brought to exactly three literals by repeating its last one.
    pub fn padded(&self) -> Vec<[Literal; 3]> {
        self.clauses
            .iter()
            .map(|c| {
                let last = *c.last().expect("clauses are non-empty");
                [c[0], *c.get(1).unwrap_or(&last), *c.get(2).unwrap_or(&last)]
            })
            .collect()
    }

    pub fn to_dimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars, self.clauses.len());
        for c in &self.clauses {
            for l in c {
                s.push_str(&l.to_dimacs().to_string());
                s.push(' ');
            }
            s.push_str("0\n");
        }
        s
    }
}

impl fmt::Display for CnfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.clauses.is_empty() {
            return f.write_str("⊤");
        }
        for (j, c) in self.clauses.iter().enumerate() {
            if j > 0 {
                f.write_str(" ∧ ")?;
            }
            f.write_str("(")?;
            for (k, l) in c.iter().enumerate() {
                if k > 0 {
                    f.write_str(" ∨ ")?;
                }
                write!(f, "{l}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// `∀x1 ∃x2 … ∀x(n-1) ∃xn φ` with `n` even.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QbfFormula {
    matrix: CnfFormula,
}

impl QbfFormula {
    pub fn new(matrix: CnfFormula) -> Result<Self, FormulaError> {
        if !matrix.num_vars().is_multiple_of(2) {
            return Err(FormulaError::OddVariableCount(matrix.num_vars()));
        }
        Ok(QbfFormula { matrix })
    }

    pub fn num_vars(&self) -> usize {
        self.matrix.num_vars()
    }

    pub fn matrix(&self) -> &CnfFormula {
        &self.matrix
    }

    pub fn to_qdimacs(&self) -> String {
        let mut s = format!("p cnf {} {}\n", self.num_vars(), self.matrix.num_clauses());
        for v in 1..=self.num_vars() {
            s.push_str(if v % 2 == 1 { "a " } else { "e " });
            s.push_str(&format!("{v} 0\n"));
        }
        let body = self.matrix.to_dimacs();
        s.push_str(body.split_once('\n').map_or("", |(_, rest)| rest));
        s
    }
}

impl fmt::Display for QbfFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in 1..=self.num_vars() {
            write!(f, "{}x{v}", if v % 2 == 1 { '∀' } else { '∃' })?;
        }
        if self.num_vars() > 0 {
            f.write_str(" ")?;
        }
        write!(f, "{}", self.matrix)
    }
}
