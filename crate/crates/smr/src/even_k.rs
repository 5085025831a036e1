//! Block partitions for even `k >= 4`: splits the symbol set of the `3 x n`
//! base rectangle into `3n/k` zero-sum `k`-blocks that meet every base
//! column at most once.
//!
//! Every row of the base is closed under negation, so its `n/2` pairs
//! `{x, -x}` are the atoms here. With `n = kq + r` and `r` one of `0`,
//! `k/3`, `2k/3`, each row contributes `q` whole blocks of `k/2` pairs;
//! a nonzero remainder leaves `k/6` pairs per row, which one or two mixed
//! blocks absorb under a column-disjointness constraint.

use std::collections::BTreeSet;

use crate::error::Error;
use crate::types::{column_partition, Block, Params, Partition, SparseRectangle};
use crate::verify::is_near_orthogonal;

/// The `{x, -x}` pairs of one row of the base rectangle with the columns
/// holding the two members, ordered by ascending magnitude.
///
/// Fails if the row's entries are not closed under negation.
pub fn negation_pairs(
    rect: &SparseRectangle,
    row: usize,
) -> Result<Vec<(i32, usize, usize)>, Error> {
    let cells = rect.row_cells(row);
    let mut col_of = std::collections::BTreeMap::new();
    for &(col, v) in &cells {
        if col_of.insert(v, col).is_some() {
            return Err(Error::DuplicateEntry { value: v });
        }
    }
    let mut pairs = Vec::with_capacity(cells.len() / 2);
    for (&v, &col) in &col_of {
        if v <= 0 {
            continue;
        }
        match col_of.get(&-v) {
            Some(&neg_col) => pairs.push((v, col, neg_col)),
            None => return Err(Error::NotNegationClosed { row }),
        }
    }
    if pairs.len() * 2 != cells.len() {
        // Unmatched non-positive values (e.g. a lone 0 or -x without x).
        return Err(Error::NotNegationClosed { row });
    }
    pairs.sort_by_key(|&(v, _, _)| v);
    Ok(pairs)
}

/// Picks `want` pairs from `pool` whose columns avoid `claimed`, greedily
/// in pool order with backtracking. Returns indices into `pool` and extends
/// `claimed` with the columns of the chosen pairs.
pub(crate) fn pick_column_disjoint_pairs(
    pool: &[(i32, usize, usize)],
    used: &BTreeSet<usize>,
    claimed: &mut BTreeSet<usize>,
    want: usize,
) -> Option<Vec<usize>> {
    fn go(
        pool: &[(i32, usize, usize)],
        used: &BTreeSet<usize>,
        claimed: &mut BTreeSet<usize>,
        want: usize,
        start: usize,
        picked: &mut Vec<usize>,
    ) -> bool {
        if want == 0 {
            return true;
        }
        for idx in start..pool.len() {
            if used.contains(&idx) {
                continue;
            }
            let (_, c1, c2) = pool[idx];
            if claimed.contains(&c1) || claimed.contains(&c2) {
                continue;
            }
            claimed.insert(c1);
            claimed.insert(c2);
            picked.push(idx);
            if go(pool, used, claimed, want - 1, idx + 1, picked) {
                return true;
            }
            picked.pop();
            claimed.remove(&c1);
            claimed.remove(&c2);
        }
        false
    }
    let mut picked = Vec::with_capacity(want);
    go(pool, used, claimed, want, 0, &mut picked).then_some(picked)
}

/// Partitions `{±1, ..., ±3n/2}` into `3n/k` zero-sum `k`-blocks near
/// orthogonal to the columns of the even base rectangle, for even
/// `k >= 4` with `k | 3n` and `k <= n`.
pub fn build_partition_even(n: usize, k: usize) -> Result<Partition, Error> {
    let inadmissible = |reason: String| Error::Inadmissible {
        m: if k == 0 { 0 } else { 3 * n / k },
        n,
        k,
        reason,
    };
    if n % 2 != 0 || k % 2 != 0 {
        return Err(inadmissible("n and k must be even".into()));
    }
    if k < 4 {
        return Err(inadmissible("k must be at least 4".into()));
    }
    if k > n {
        return Err(inadmissible(format!("k = {k} > n = {n}")));
    }
    if (3 * n) % k != 0 {
        return Err(inadmissible(format!("k = {k} does not divide 3n = {}", 3 * n)));
    }
    let params = Params::relaxed(3 * n / k, n, k, 3);
    let (q, r) = (params.q, params.r);
    if params.family_min().is_none() {
        return Err(inadmissible(format!(
            "remainder {r} is none of 0, k/3, 2k/3"
        )));
    }
    let base = crate::base::smr3_even(n)?;
    let row_pairs: Vec<Vec<(i32, usize, usize)>> = (0..3)
        .map(|row| negation_pairs(&base, row))
        .collect::<Result<_, _>>()?;

    // Mixed blocks first: they constrain which pairs the row blocks keep.
    let mixed_count = match r {
        0 => 0,
        _ if 3 * r == k => 1,
        _ => 2,
    };
    let mut used: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); 3];
    let mut mixed_blocks = Vec::new();
    for _ in 0..mixed_count {
        let mut claimed = BTreeSet::new();
        let mut block = Block::new();
        for row in 0..3 {
            let picked = pick_column_disjoint_pairs(
                &row_pairs[row],
                &used[row],
                &mut claimed,
                k / 6,
            )
            .ok_or_else(|| Error::Defect {
                stage: "even mixed block",
                detail: format!("no column-disjoint pair selection in row {row} for ({n},{k})"),
            })?;
            for idx in picked {
                let (v, _, _) = row_pairs[row][idx];
                block.insert(v);
                block.insert(-v);
                used[row].insert(idx);
            }
        }
        mixed_blocks.push(block);
    }

    // Remaining pairs of each row make q whole blocks of k/2 pairs.
    let mut blocks = Vec::with_capacity(params.ell);
    for row in 0..3 {
        let free: Vec<usize> = (0..row_pairs[row].len())
            .filter(|idx| !used[row].contains(idx))
            .collect();
        debug_assert_eq!(free.len(), q * k / 2);
        for chunk in free.chunks(k / 2) {
            let mut block = Block::new();
            for &idx in chunk {
                let (v, _, _) = row_pairs[row][idx];
                block.insert(v);
                block.insert(-v);
            }
            blocks.push(block);
        }
    }
    blocks.extend(mixed_blocks);

    let ground = base.entry_set()?;
    let partition = Partition::new(blocks, ground)?;
    validate_partition(&partition, &base, &params)?;
    Ok(partition)
}

/// Shared gate for the block constructions: correct block count and sizes,
/// zero sums, and near orthogonality against the base columns.
pub(crate) fn validate_partition(
    partition: &Partition,
    base: &SparseRectangle,
    params: &Params,
) -> Result<(), Error> {
    let defect = |detail: String| Error::Defect {
        stage: "block partition",
        detail,
    };
    if partition.len() != params.ell {
        return Err(defect(format!(
            "{} blocks, wanted {}",
            partition.len(),
            params.ell
        )));
    }
    for block in partition.blocks() {
        if block.len() != params.k {
            return Err(defect(format!("block {:?} has size {}", block, block.len())));
        }
        if block.sum() != 0 {
            return Err(defect(format!("block {:?} sums to {}", block, block.sum())));
        }
    }
    let columns = column_partition(base)?;
    if !is_near_orthogonal(partition, &columns)? {
        return Err(defect("partition not near orthogonal to base columns".into()));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::smr3_even;

    #[test]
    fn pairs_of_small_bases() {
        let base = smr3_even(4).unwrap();
        let pairs = negation_pairs(&base, 0).unwrap();
        assert_eq!(pairs, vec![(1, 0, 1), (2, 2, 3)]);
        let base = smr3_even(10).unwrap();
        let pairs = negation_pairs(&base, 1).unwrap();
        assert!(pairs.contains(&(8, 7, 9)));
    }

    #[test]
    fn pairs_reject_open_row() {
        let rect = SparseRectangle::from_rows(&[vec![1, 2, -3]]);
        assert!(matches!(
            negation_pairs(&rect, 0),
            Err(Error::NotNegationClosed { row: 0 })
        ));
    }

    #[test]
    fn whole_rows_when_k_equals_n() {
        let p = build_partition_even(4, 4).unwrap();
        assert_eq!(p.blocks().len(), 3);
        assert_eq!(p.blocks()[0], Block::from_slice(&[1, -1, 2, -2]));
        assert_eq!(p.blocks()[1], Block::from_slice(&[5, 4, -5, -4]));
        assert_eq!(p.blocks()[2], Block::from_slice(&[-6, -3, 3, 6]));
    }

    #[test]
    fn r_zero_splits_rows() {
        let p = build_partition_even(8, 4).unwrap();
        assert_eq!(p.blocks().len(), 6);
        assert_eq!(p.blocks()[0], Block::from_slice(&[1, -1, 2, -2]));
        assert_eq!(p.blocks()[1], Block::from_slice(&[4, -4, 5, -5]));
    }

    #[test]
    fn r_third_adds_one_mixed_block() {
        // n = 8, k = 6: remainder k/3 = 2, four blocks, one mixed.
        let p = build_partition_even(8, 6).unwrap();
        assert_eq!(p.blocks().len(), 4);
        let base = smr3_even(8).unwrap();
        let mixed = &p.blocks()[3];
        assert_eq!(mixed.len(), 6);
        // Two members from each base row, six distinct columns.
        let column_of = base.column_of_value().unwrap();
        let cols: BTreeSet<usize> = mixed.iter().map(|v| column_of[&v]).collect();
        assert_eq!(cols.len(), 6);
        for row in 0..3 {
            let row_vals: Block = base.row_values(row).into_iter().collect();
            assert_eq!(mixed.iter().filter(|&v| row_vals.contains(v)).count(), 2);
        }
    }

    #[test]
    fn r_two_thirds_adds_two_mixed_blocks() {
        // n = 10, k = 6: remainder 2k/3 = 4, five blocks, two mixed.
        let p = build_partition_even(10, 6).unwrap();
        assert_eq!(p.blocks().len(), 5);
    }

    #[test]
    fn rejects_bad_shapes() {
        assert!(build_partition_even(9, 4).is_err()); // n odd
        assert!(build_partition_even(8, 5).is_err()); // k odd
        assert!(build_partition_even(8, 2).is_err()); // k < 4
        assert!(build_partition_even(4, 8).is_err()); // k > n
        assert!(build_partition_even(10, 4).is_err()); // 4 does not divide 30
    }

    #[test]
    fn partitions_verify_for_all_small_even_pairs() {
        for n in (4..=60).step_by(2) {
            for k in (4..=n).step_by(2) {
                if (3 * n) % k != 0 {
                    continue;
                }
                let p = build_partition_even(n, k).unwrap_or_else(|e| {
                    panic!("({n},{k}): {e}");
                });
                assert_eq!(p.len(), 3 * n / k);
            }
        }
    }
}
