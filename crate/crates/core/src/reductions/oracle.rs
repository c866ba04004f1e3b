//! Exhaustive truth oracles for small formulas.

use super::formula::{CnfFormula, QbfFormula};

pub const SAT_ORACLE_MAX_VARS: usize = 24;
pub const QBF_ORACLE_MAX_VARS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{num_vars} variables exceed the brute-force limit of {max}")]
pub struct OracleError {
    pub num_vars: usize,
    pub max: usize,
}

/// First satisfying assignment in lexicographic order (x1 most significant,
/// false before true), or `None`.
pub fn sat_bruteforce(formula: &CnfFormula) -> Result<Option<Vec<bool>>, OracleError> {
    let n = formula.num_vars();
    if n > SAT_ORACLE_MAX_VARS {
        return Err(OracleError {
            num_vars: n,
            max: SAT_ORACLE_MAX_VARS,
        });
    }
    let mut assignment = vec![false; n];
    for mask in 0u32..(1 << n) {
        for (i, a) in assignment.iter_mut().enumerate() {
            *a = mask >> (n - 1 - i) & 1 == 1;
        }
        if formula.eval(&assignment) {
            return Ok(Some(assignment));
        }
    }
    Ok(None)
}

/// Evaluates `∀x1 ∃x2 … ∃xn φ` by full recursion.
pub fn qbf_bruteforce(formula: &QbfFormula) -> Result<bool, OracleError> {
    let n = formula.num_vars();
    if n > QBF_ORACLE_MAX_VARS {
        return Err(OracleError {
            num_vars: n,
            max: QBF_ORACLE_MAX_VARS,
        });
    }
    let mut assignment = vec![false; n];
    Ok(eval_from(formula.matrix(), &mut assignment, 0))
}

fn eval_from(matrix: &CnfFormula, assignment: &mut [bool], depth: usize) -> bool {
    if depth == assignment.len() {
        return matrix.eval(assignment);
    }
    let branch = |value: bool, a: &mut [bool]| {
        a[depth] = value;
        eval_from(matrix, a, depth + 1)
    };
    if depth.is_multiple_of(2) {
        branch(false, assignment) && branch(true, assignment)
    } else {
        branch(false, assignment) || branch(true, assignment)
    }
}
