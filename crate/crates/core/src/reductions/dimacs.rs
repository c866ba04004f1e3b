//! DIMACS CNF and QDIMACS readers.

use super::formula::{CnfFormula, Literal, QbfFormula};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParseError {
    #[error("line {line}: clause data before the `p cnf` header")]
    MissingHeader { line: usize },
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("line {line}: unexpected token `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error("line {line}: literal {literal} outside 1..={num_vars}")]
    LiteralOutOfRange {
        line: usize,
        literal: i64,
        num_vars: usize,
    },
    #[error("line {line}: last clause is missing its terminating 0")]
    UnterminatedClause { line: usize },
    #[error("line {line}: clause has {len} literals, at most 3 allowed")]
    ClauseTooLong { line: usize, len: usize },
    #[error("line {line}: empty clause")]
    EmptyClause { line: usize },
    #[error("header declares {declared} clauses, found {found}")]
    ClauseCountMismatch { declared: usize, found: usize },
    #[error("line {line}: quantifier line after the first clause")]
    MisplacedQuantifier { line: usize },
    #[error("line {line}: prefix is not ∀x1 ∃x2 … ∃xn: {reason}")]
    NonAlternatingPrefix { line: usize, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Quantifier {
    Forall,
    Exists,
}

struct Parsed {
    header_line: usize,
    num_vars: usize,
    clauses: Vec<Vec<Literal>>,
    /// `(line, quantifier, variables)` per prefix block.
    blocks: Vec<(usize, Quantifier, Vec<usize>)>,
}

fn parse(text: &str, allow_prefix: bool) -> Result<Parsed, ParseError> {
    let mut header: Option<(usize, usize)> = None;
    let mut header_line = 0;
    let mut clauses = Vec::new();
    let mut blocks = Vec::new();
    let mut current: Vec<Literal> = Vec::new();
    let mut current_line = 0;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('c') {
            continue;
        }
        if trimmed.starts_with('%') {
            break;
        }
        let mut tokens = trimmed.split_whitespace();
        let first = tokens.next().expect("line is non-empty");

        if first == "p" {
            if header.is_some() {
                return Err(ParseError::MalformedHeader {
                    line,
                    reason: "second header".into(),
                });
            }
            let rest: Vec<&str> = tokens.collect();
            let [fmt, n, m] = rest[..] else {
                return Err(ParseError::MalformedHeader {
                    line,
                    reason: "expected `p cnf <vars> <clauses>`".into(),
                });
            };
            if fmt != "cnf" {
                return Err(ParseError::MalformedHeader {
                    line,
                    reason: format!("format `{fmt}` is not cnf"),
                });
            }
            let n = n.parse().map_err(|_| ParseError::MalformedHeader {
                line,
                reason: format!("bad variable count `{n}`"),
            })?;
            let m = m.parse().map_err(|_| ParseError::MalformedHeader {
                line,
                reason: format!("bad clause count `{m}`"),
            })?;
            header = Some((n, m));
            header_line = line;
            continue;
        }
        let Some((num_vars, _)) = header else {
            return Err(ParseError::MissingHeader { line });
        };

        if first == "a" || first == "e" {
            if !allow_prefix {
                return Err(ParseError::InvalidToken {
                    line,
                    token: first.into(),
                });
            }
            if !clauses.is_empty() || !current.is_empty() {
                return Err(ParseError::MisplacedQuantifier { line });
            }
            let q = if first == "a" {
                Quantifier::Forall
            } else {
                Quantifier::Exists
            };
            let mut vars = Vec::new();
            let mut closed = false;
            for tok in tokens {
                if closed {
                    return Err(ParseError::InvalidToken {
                        line,
                        token: tok.into(),
                    });
                }
                let v: i64 = tok.parse().map_err(|_| ParseError::InvalidToken {
                    line,
                    token: tok.into(),
                })?;
                if v == 0 {
                    closed = true;
                } else if v < 0 || v as usize > num_vars {
                    return Err(ParseError::LiteralOutOfRange {
                        line,
                        literal: v,
                        num_vars,
                    });
                } else {
                    vars.push(v as usize);
                }
            }
            if !closed {
                return Err(ParseError::UnterminatedClause { line });
            }
            blocks.push((line, q, vars));
            continue;
        }

        for tok in std::iter::once(first).chain(tokens) {
            let lit: i64 = tok.parse().map_err(|_| ParseError::InvalidToken {
                line,
                token: tok.into(),
            })?;
            if current.is_empty() {
                current_line = line;
            }
            if lit == 0 {
                if current.is_empty() {
                    return Err(ParseError::EmptyClause { line });
                }
                clauses.push(std::mem::take(&mut current));
                continue;
            }
            if lit.unsigned_abs() as usize > num_vars {
                return Err(ParseError::LiteralOutOfRange {
                    line,
                    literal: lit,
                    num_vars,
                });
            }
            current.push(Literal::from_dimacs(lit).expect("non-zero"));
            if current.len() > 3 {
                return Err(ParseError::ClauseTooLong {
                    line: current_line,
                    len: current.len(),
                });
            }
        }
    }

    let Some((num_vars, declared)) = header else {
        return Err(ParseError::MissingHeader {
            line: last_line.max(1),
        });
    };
    if !current.is_empty() {
        return Err(ParseError::UnterminatedClause { line: current_line });
    }
    if clauses.len() != declared {
        return Err(ParseError::ClauseCountMismatch {
            declared,
            found: clauses.len(),
        });
    }
    Ok(Parsed {
        header_line,
        num_vars,
        clauses,
        blocks,
    })
}

/// Reads a DIMACS CNF document with clauses of at most three literals.
pub fn parse_dimacs(text: &str) -> Result<CnfFormula, ParseError> {
    let p = parse(text, false)?;
    Ok(CnfFormula::new(p.num_vars, p.clauses).expect("parser validates clauses"))
}

/// Reads a QDIMACS document.
///
/// Without `normalize` the prefix must quantify `x1, x2, …, xn` in order,
/// alternating `a`/`e` and starting with `a`, with `n` even.
///
/// With `normalize`, unquantified variables become outermost existentials
/// and all variables are renumbered in prefix order. Fresh dummy variables
/// that the matrix never mentions fill in wherever the alternation breaks
/// or the count is odd.
pub fn parse_qdimacs(text: &str, normalize: bool) -> Result<QbfFormula, ParseError> {
    let p = parse(text, true)?;
    let header_line = p.header_line;
    let mut order: Vec<(usize, Quantifier, usize)> = Vec::new();
    let mut seen = vec![false; p.num_vars + 1];
    for (line, q, vars) in &p.blocks {
        for &v in vars {
            if seen[v] {
                return Err(ParseError::NonAlternatingPrefix {
                    line: *line,
                    reason: format!("x{v} quantified twice"),
                });
            }
            seen[v] = true;
            order.push((*line, *q, v));
        }
    }

    if !normalize {
        for (k, &(line, q, v)) in order.iter().enumerate() {
            let want_q = if k % 2 == 0 {
                Quantifier::Forall
            } else {
                Quantifier::Exists
            };
            if v != k + 1 || q != want_q {
                let name = if want_q == Quantifier::Forall {
                    "a"
                } else {
                    "e"
                };
                return Err(ParseError::NonAlternatingPrefix {
                    line,
                    reason: format!("expected `{name} {}` at position {}", k + 1, k + 1),
                });
            }
        }
        if order.len() != p.num_vars {
            let line = p.blocks.last().map_or(header_line, |b| b.0);
            return Err(ParseError::NonAlternatingPrefix {
                line,
                reason: format!("{} of {} variables quantified", order.len(), p.num_vars),
            });
        }
        if p.num_vars % 2 != 0 {
            return Err(ParseError::NonAlternatingPrefix {
                line: header_line,
                reason: "odd number of variables".into(),
            });
        }
        return Ok(
            QbfFormula::new(CnfFormula::new(p.num_vars, p.clauses).expect("validated"))
                .expect("even"),
        );
    }

    let free = (1..=p.num_vars)
        .filter(|&v| !seen[v])
        .map(|v| (0, Quantifier::Exists, v));
    let flat: Vec<(Quantifier, usize)> = free.chain(order).map(|(_, q, v)| (q, v)).collect();
    let mut renumber = vec![0usize; p.num_vars + 1];
    let mut next = 0usize;
    for (q, v) in flat {
        let slot_q = |k: usize| {
            if k.is_multiple_of(2) {
                Quantifier::Forall
            } else {
                Quantifier::Exists
            }
        };
        if slot_q(next) != q {
            next += 1;
        }
        next += 1;
        renumber[v] = next;
    }
    if !next.is_multiple_of(2) {
        next += 1;
    }
    let clauses = p
        .clauses
        .into_iter()
        .map(|c| {
            c.into_iter()
                .map(|l| Literal {
                    variable: renumber[l.variable],
                    negated: l.negated,
                })
                .collect()
        })
        .collect();
    Ok(
        QbfFormula::new(CnfFormula::new(next, clauses).expect("renumbering stays in range"))
            .expect("even"),
    )
}
