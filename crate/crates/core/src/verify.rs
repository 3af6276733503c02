//! Grid runner for every long-arm family check.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::salem::{check_nonintegrality, convergence_sweep, salem_from_tree, sweep_is_monotone, verify_equal_radius};
use crate::spectral::{check_bounds, is_hyperbolic};
use crate::trees::StarlikeTree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    /// `S(n, k·1)` and `S(k·(n+1))` share `λ₁`, exactly and numerically.
    EqualRadius,
    /// `√(k+1) ≤ λ₁ < k/√(k−1)`, lower equality only at `n = 1`.
    LongArmBounds,
    /// `S(n, k·1)` is hyperbolic for `n ≥ 2`.
    Hyperbolic,
    /// `λ₁` is not an integer for `n ≥ 2`.
    NonIntegral,
    /// `Q_{n,k}` classifies as predicted and `ρ + 1/ρ` meets `λ₁² − 2`.
    Salem,
    /// Largest roots of `Q_{n,k}` increase strictly in `n` and stay below `k − 1`.
    Convergence,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub check: CheckKind,
    pub k: u32,
    /// `None` for checks over a whole row of `n`.
    pub n: Option<u32>,
    pub pass: bool,
}

fn run_cell(check: CheckKind, n: u32, k: u32) -> Result<bool> {
    let tol = crate::default_tol();
    Ok(match check {
        CheckKind::EqualRadius => verify_equal_radius(n, k)?.pass(),
        CheckKind::LongArmBounds => {
            let report = check_bounds(&StarlikeTree::long_arm(n, k)?, &tol)?;
            let long_arm = report.bounds.last().expect("long-arm bound present");
            report.bounds_hold && long_arm.lower_attained == (n == 1)
        }
        CheckKind::Hyperbolic => is_hyperbolic(&StarlikeTree::long_arm(n, k)?)?,
        CheckKind::NonIntegral => check_nonintegrality(n, k)?.pass(),
        CheckKind::Salem => salem_from_tree(n, k, &tol)?.pass(),
        CheckKind::Convergence => {
            let ns: Vec<u32> = (2..=n.max(2)).collect();
            let rows = convergence_sweep(k, &ns, &tol)?;
            sweep_is_monotone(&rows) && rows.iter().all(|r| r.below_limit)
        }
    })
}

/// Run all checks for `n ∈ [1, n_max]`, `k ∈ [3, k_max]`.
///
/// Results come back in canonical `(k, check, n)` order regardless of how
/// the cells were scheduled.
pub fn verify_all(n_max: u32, k_max: u32) -> Result<Vec<CheckOutcome>> {
    if n_max < 1 {
        return Err(Error::Domain(format!("n-max = {n_max}; needs at least 1")));
    }
    if k_max < 3 {
        return Err(Error::Domain(format!("k-max = {k_max}; needs at least 3")));
    }
    let mut cells = Vec::new();
    for k in 3..=k_max {
        for n in 1..=n_max {
            cells.push((CheckKind::EqualRadius, k, Some(n)));
            cells.push((CheckKind::LongArmBounds, k, Some(n)));
            cells.push((CheckKind::Salem, k, Some(n)));
            if n >= 2 {
                cells.push((CheckKind::Hyperbolic, k, Some(n)));
                cells.push((CheckKind::NonIntegral, k, Some(n)));
            }
        }
        if n_max >= 2 {
            cells.push((CheckKind::Convergence, k, None));
        }
    }
    let mut outcomes = cells
        .into_par_iter()
        .map(|(check, k, n)| {
            let pass = run_cell(check, n.unwrap_or(n_max), k)?;
            Ok(CheckOutcome { check, k, n, pass })
        })
        .collect::<Result<Vec<_>>>()?;
    outcomes.sort_by_key(|o| (o.k, o.check, o.n));
    Ok(outcomes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_grid_passes() {
        let out = verify_all(4, 4).unwrap();
        assert!(out.iter().all(|o| o.pass), "{out:?}");
        // 2 values of k × (3·4 + 2·3 + 1)
        assert_eq!(out.len(), 2 * 19);
    }

    #[test]
    fn hypothesis_violations_are_errors() {
        assert!(matches!(verify_all(4, 2), Err(Error::Domain(_))));
        assert!(matches!(verify_all(0, 4), Err(Error::Domain(_))));
    }
}
