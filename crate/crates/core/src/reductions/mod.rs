//! Compilers from 3-SAT and QBF instances to pomax posets of height 2 and
//! 3, with the formula parsers and brute-force oracles they are checked by.

mod dimacs;
mod formula;
mod oracle;

use std::collections::BTreeSet;
use std::fmt;

pub use dimacs::{parse_dimacs, parse_qdimacs, ParseError};
pub use formula::{CnfFormula, FormulaError, Literal, QbfFormula};
pub use oracle::{
    qbf_bruteforce, sat_bruteforce, OracleError, QBF_ORACLE_MAX_VARS, SAT_ORACLE_MAX_VARS,
};

use crate::poset::{Color, ColoredPoset, PosetError};
use crate::rules::GameState;
use crate::solver::{first_mover_wins, game_value_with, GameValue, SolveError, SolverConfig};

/// What an element of a reduction poset stands for. Indices are 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    Assignment { var: usize, value: bool },
    Clause(usize),
    Candy { var: usize, k: usize },
    Isolated(usize),
    GadgetA { i: usize, beta: bool },
    GadgetB { i: usize, alpha: bool, beta: bool },
}

impl Role {
    /// The element label used in emitted posets.
    pub fn label(self) -> String {
        let b = |v: bool| u8::from(v);
        match self {
            Role::Assignment { var, value } => format!("x{var}={}", b(value)),
            Role::Clause(j) => format!("c{j}"),
            Role::Candy { var, k } => format!("candy{var}_{k}"),
            Role::Isolated(t) => format!("iso{t}"),
            Role::GadgetA { i, beta } => format!("a{i}^{}", b(beta)),
            Role::GadgetB { i, alpha, beta } => format!("b{i}^{}{}", b(alpha), b(beta)),
        }
    }

    pub fn kind_name(self) -> &'static str {
        match self {
            Role::Assignment { .. } => "assignment",
            Role::Clause(_) => "clause",
            Role::Candy { .. } => "candy",
            Role::Isolated(_) => "isolated",
            Role::GadgetA { .. } => "gadget_a",
            Role::GadgetB { .. } => "gadget_b",
        }
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let b = |v: bool| u8::from(v);
        match *self {
            Role::Assignment { var, value } => write!(f, "assignment({var},{})", b(value)),
            Role::Clause(j) => write!(f, "clause({j})"),
            Role::Candy { var, k } => write!(f, "candy({var},{k})"),
            Role::Isolated(t) => write!(f, "isolated({t})"),
            Role::GadgetA { i, beta } => write!(f, "gadget_a({i},{})", b(beta)),
            Role::GadgetB { i, alpha, beta } => write!(f, "gadget_b({i},{}{})", b(alpha), b(beta)),
        }
    }
}

/// A compiled poset together with the role of every element, indexed like
/// the poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionPoset {
    pub poset: ColoredPoset,
    pub roles: Vec<Role>,
}

impl ReductionPoset {
    pub fn index_of(&self, role: Role) -> Option<usize> {
        self.roles.iter().position(|&r| r == role)
    }

    pub fn count(&self, kind: &str) -> usize {
        self.roles.iter().filter(|r| r.kind_name() == kind).count()
    }
}

#[derive(Default)]
struct Builder {
    roles: Vec<Role>,
    colors: Vec<Color>,
    covers: Vec<(usize, usize)>,
}

impl Builder {
    fn add(&mut self, role: Role, color: Color) -> usize {
        self.roles.push(role);
        self.colors.push(color);
        self.roles.len() - 1
    }

    fn cover(&mut self, lower: usize, upper: usize) {
        self.covers.push((lower, upper));
    }

    fn finish(self) -> Result<ReductionPoset, PosetError> {
        let labels = self.roles.iter().map(|r| r.label()).collect();
        let poset = ColoredPoset::from_index_covers(labels, self.colors, &self.covers)?;
        Ok(ReductionPoset {
            poset,
            roles: self.roles,
        })
    }

    /// Adds `c{j}` under the assignment elements that falsify clause `j`.
    fn clauses(&mut self, formula: &CnfFormula, assign: &[[usize; 2]]) {
        for (j, clause) in formula.padded().iter().enumerate() {
            let c = self.add(Role::Clause(j + 1), Color::Black);
            let falsifiers: BTreeSet<usize> = clause
                .iter()
                .map(|l| assign[l.variable - 1][usize::from(l.falsifying_value())])
                .collect();
            for x in falsifiers {
                self.cover(c, x);
            }
        }
    }
}

/// Height-2 poset whose pomax game is zero exactly when `formula` is
/// satisfiable, and negative otherwise. Contains `3n + m + n` elements.
pub fn reduce_3sat(formula: &CnfFormula) -> Result<ReductionPoset, PosetError> {
    let n = formula.num_vars();
    let mut b = Builder::default();
    let mut assign = Vec::with_capacity(n);
    for var in 1..=n {
        let x0 = b.add(Role::Assignment { var, value: false }, Color::White);
        let x1 = b.add(Role::Assignment { var, value: true }, Color::White);
        let candy = b.add(Role::Candy { var, k: 1 }, Color::Black);
        b.cover(candy, x0);
        b.cover(candy, x1);
        assign.push([x0, x1]);
    }
    b.clauses(formula, &assign);
    for t in 1..=n {
        b.add(Role::Isolated(t), Color::Black);
    }
    b.finish()
}

/// Height-3 poset whose pomax game is zero exactly when `formula` is true,
/// and negative otherwise. Contains
/// `2n + m + (m+1)·n/2 + n/2 + 6(n-1)` elements for `n ≥ 2`.
pub fn reduce_qbf(formula: &QbfFormula) -> Result<ReductionPoset, PosetError> {
    let n = formula.num_vars();
    let m = formula.matrix().num_clauses();
    let odd = |i: usize| i % 2 == 1;
    let mut b = Builder::default();
    let mut assign = Vec::with_capacity(n);
    for var in 1..=n {
        let color = if odd(var) { Color::Black } else { Color::White };
        let x0 = b.add(Role::Assignment { var, value: false }, color);
        let x1 = b.add(Role::Assignment { var, value: true }, color);
        let candies = if odd(var) { m + 1 } else { 1 };
        for k in 1..=candies {
            let d = b.add(Role::Candy { var, k }, color.opposite());
            b.cover(d, x0);
            b.cover(d, x1);
        }
        assign.push([x0, x1]);
    }
    b.clauses(formula.matrix(), &assign);
    for i in 1..n {
        let a_color = if odd(i) { Color::Black } else { Color::White };
        let mut a = [0; 2];
        for beta in [false, true] {
            let ai = b.add(Role::GadgetA { i, beta }, a_color);
            b.cover(ai, assign[i][usize::from(beta)]);
            a[usize::from(beta)] = ai;
        }
        for alpha in [false, true] {
            for beta in [false, true] {
                let bi = b.add(Role::GadgetB { i, alpha, beta }, a_color.opposite());
                b.cover(bi, a[usize::from(beta)]);
                b.cover(bi, assign[i - 1][usize::from(alpha)]);
            }
        }
    }
    b.finish()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Formula {
    Cnf(CnfFormula),
    Qbf(QbfFormula),
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ReductionError {
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

/// Solver and oracle side by side for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionReport {
    pub kind: &'static str,
    pub elements: usize,
    pub height: usize,
    pub value: GameValue,
    /// Satisfiable (3-SAT) or true (QBF), per the brute-force oracle.
    pub oracle: bool,
    /// `value == 0` exactly when the oracle says yes.
    pub agree: bool,
    pub nonpositive: bool,
    /// 3-SAT only: White loses when moving first.
    pub white_first_loses: Option<bool>,
}

impl ReductionReport {
    /// Agreement plus the side conditions of the construction.
    pub fn holds(&self) -> bool {
        self.agree && self.nonpositive && self.white_first_loses.unwrap_or(true)
    }
}

impl fmt::Display for ReductionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yn = |b: bool| if b { "yes" } else { "no" };
        write!(
            f,
            "value={}, {}={}, agree={}, nonpositive={}",
            self.value,
            self.kind,
            self.oracle,
            yn(self.agree),
            yn(self.nonpositive)
        )?;
        if let Some(w) = self.white_first_loses {
            write!(f, ", white_first_loses={}", yn(w))?;
        }
        write!(f, ", elements={}, height={}", self.elements, self.height)
    }
}

/// Compiles the formula and checks the solved value against the matching
/// oracle.
pub fn verify_reduction(
    formula: &Formula,
    config: SolverConfig,
) -> Result<ReductionReport, ReductionError> {
    let (kind, reduced, oracle) = match formula {
        Formula::Cnf(f) => ("sat", reduce_3sat(f)?, sat_bruteforce(f)?.is_some()),
        Formula::Qbf(f) => ("qbf", reduce_qbf(f)?, qbf_bruteforce(f)?),
    };
    let elements = reduced.poset.len();
    let height = reduced.poset.height();
    let state = GameState::pomax(reduced.poset);
    let value = game_value_with(&state, config)?;
    let white_first_loses = match formula {
        Formula::Cnf(_) => Some(!first_mover_wins(&state, Color::White, config)?),
        Formula::Qbf(_) => None,
    };
    Ok(ReductionReport {
        kind,
        elements,
        height,
        value,
        oracle,
        agree: (value.0 == 0) == oracle,
        nonpositive: value.0 <= 0,
        white_first_loses,
    })
}
