//! Turns a block partition into a rectangle, and dispatches every
//! admissible parameter triple to the construction that serves it.

use crate::base::{fixed_smr_4_12, mr_to_smr, smr3_even};
use crate::error::Error;
use crate::even_k::build_partition_even;
use crate::odd_k::{build_partition_odd, smr_square_k3_with_budget};
use crate::search::{search_mr, search_smr, SearchBudget, SearchOutcome};
use crate::types::{column_partition, Params, Partition, SparseRectangle};
use crate::verify::{is_near_orthogonal, verify_smr};

/// Places block `i` of `p2` as row `i` of a fresh rectangle, each value in
/// the column it occupies in `base`.
///
/// `base` must be a fully filled signed magic rectangle, `p2` a partition
/// of its symbol set into `params.ell` zero-sum blocks of size `params.k`
/// near orthogonal to its columns. Row `i` then carries exactly block `i`
/// and every column of the result carries the same values as the matching
/// base column, so all line sums stay zero.
pub fn assemble(
    base: &SparseRectangle,
    p2: &Partition,
    params: &Params,
) -> Result<SparseRectangle, Error> {
    let base_params = Params::relaxed(base.rows(), base.cols(), base.cols(), base.rows());
    let report = verify_smr(base, &base_params)?;
    if !report.passed() {
        return Err(Error::InvalidInput {
            what: "base rectangle",
            report: Box::new(report),
        });
    }
    if p2.ground() != &base.entry_set()? {
        return Err(Error::GroundMismatch);
    }
    if p2.len() != params.ell {
        return Err(Error::Defect {
            stage: "assembly",
            detail: format!("{} blocks for {} rows", p2.len(), params.ell),
        });
    }
    for block in p2.blocks() {
        if block.len() != params.k {
            return Err(Error::Defect {
                stage: "assembly",
                detail: format!("block {:?} has size {}, wants {}", block, block.len(), params.k),
            });
        }
        if block.sum() != 0 {
            return Err(Error::Defect {
                stage: "assembly",
                detail: format!("block {:?} sums to {}", block, block.sum()),
            });
        }
    }
    if !is_near_orthogonal(p2, &column_partition(base)?)? {
        return Err(Error::Defect {
            stage: "assembly",
            detail: "partition meets a base column twice".into(),
        });
    }
    let column_of = base.column_of_value()?;
    let mut rect = SparseRectangle::new(params.ell, base.cols());
    for (row, block) in p2.blocks().iter().enumerate() {
        for v in block.iter() {
            rect.set(row, column_of[&v], v)?;
        }
    }
    let report = verify_smr(&rect, params)?;
    if !report.passed() {
        return Err(Error::Defect {
            stage: "assembly",
            detail: report.summary(),
        });
    }
    Ok(rect)
}

/// Builds a signed magic rectangle for any admissible `(m, n, k)` with the
/// default search budget; see [`generate_with_budget`].
pub fn generate(m: usize, n: usize, k: usize) -> Result<SparseRectangle, Error> {
    generate_with_budget(m, n, k, &SearchBudget::default())
}

/// Builds a signed magic rectangle for any admissible `(m, n, k)`.
///
/// Even `n` is fully constructive: the `3 x n` base directly when `m = 3`,
/// the fixed array for `(4, 12, 9)`, the cyclic squares for `k = 3`, and
/// the even-`k` or odd-`k` block partition plus [`assemble`] otherwise.
/// Odd `n` (where `m` and `k` are both odd) searches for a plain magic
/// rectangle of the same shape and shifts it, falling back to a direct
/// signed search; the budget bounds each attempt. Every path ends at the
/// verifier, so a wrong array is never returned.
pub fn generate_with_budget(
    m: usize,
    n: usize,
    k: usize,
    budget: &SearchBudget,
) -> Result<SparseRectangle, Error> {
    let params = Params::new(m, n, k)?;
    let rect = if n % 2 == 0 {
        if (m, n, k) == (4, 12, 9) {
            fixed_smr_4_12()
        } else if k == 3 {
            // mk = 3n with k = 3 forces m = n.
            smr_square_k3_with_budget(n, budget)?
        } else if m == 3 {
            smr3_even(n)?
        } else if k % 2 == 0 {
            assemble(&smr3_even(n)?, &build_partition_even(n, k)?, &params)?
        } else {
            assemble(&smr3_even(n)?, &build_partition_odd(n, k)?, &params)?
        }
    } else {
        // The plain search space is smaller, so try the shift route first.
        match search_mr(&params, budget) {
            SearchOutcome::Found(mr) => mr_to_smr(&mr, &params)?,
            _ => match search_smr(&params, budget) {
                SearchOutcome::Found(rect) => rect,
                _ => {
                    return Err(Error::SearchExhausted {
                        what: format!("odd-n instance ({m},{n},{k}) at desk scale"),
                    })
                }
            },
        }
    };
    let report = verify_smr(&rect, &params)?;
    if !report.passed() {
        return Err(Error::Defect {
            stage: "generate",
            detail: report.summary(),
        });
    }
    Ok(rect)
}

/// All admissible triples with `n <= n_max`, sorted by `(n, m)`.
pub fn enumerate_params(n_max: usize) -> Vec<Params> {
    let mut out = Vec::new();
    for n in 3..=n_max {
        for m in 3..=n {
            if (3 * n) % m != 0 {
                continue;
            }
            let k = 3 * n / m;
            if let Ok(params) = Params::new(m, n, k) {
                out.push(params);
            }
        }
    }
    out
}
