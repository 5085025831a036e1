//! Closed-form and table-driven building blocks: the fully filled `3 x n`
//! family for even `n`, its row sets, the half-range shift from plain magic
//! rectangles, one fixed `4 x 12` array, and the tabulated small-case seed
//! families.

use crate::error::Error;
use crate::types::{Block, Params, RowSets, SparseRectangle};
use crate::verify::{verify_mr, verify_smr};

/// The fully filled signed magic rectangle with 3 rows and `n` columns,
/// `n` even. Row 1 carries a `±` pair of each value not divisible by 3 up
/// to `3n/4`-ish, row 3 a `±` pair of each multiple of 3 up to `3n/2`, and
/// row 2 the negated column sums of the other two; every row is closed
/// under negation, which the block constructions rely on.
///
/// `n = 2` and `n = 4` are fixed arrays; the closed form covers `n >= 6`.
pub fn smr3_even(n: usize) -> Result<SparseRectangle, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    if n % 2 != 0 {
        return Err(Error::OddSide { n });
    }
    let rect = match n {
        2 => SparseRectangle::from_rows(&[vec![1, -1], vec![2, -2], vec![-3, 3]]),
        4 => SparseRectangle::from_rows(&[
            vec![1, -1, 2, -2],
            vec![5, 4, -5, -4],
            vec![-6, -3, 3, 6],
        ]),
        _ => {
            let half = (n / 2) as i32;
            let mut top = Vec::with_capacity(n);
            let mut bottom = Vec::with_capacity(n);
            for j in 1..=(n as i32) {
                let p = (j + 1) / 2;
                top.push(match j % 4 {
                    0 => -(3 * p - 2) / 2,
                    1 => (3 * p - 1) / 2,
                    2 => -(3 * p - 1) / 2,
                    _ => (3 * p - 2) / 2,
                });
                bottom.push(if j == 1 {
                    -3 * half
                } else if j == n as i32 {
                    3 * half
                } else {
                    match j % 4 {
                        0 | 2 => -3 * (half - p),
                        _ => 3 * (half - p + 1),
                    }
                });
            }
            let middle: Vec<i32> = top
                .iter()
                .zip(&bottom)
                .map(|(&a, &c)| -(a + c))
                .collect();
            SparseRectangle::from_rows(&[top, middle, bottom])
        }
    };
    debug_assert!(verify_smr(&rect, &Params::relaxed(3, n, n, 3))?.passed());
    Ok(rect)
}

/// The entry sets of the three rows of [`smr3_even`] in closed form.
///
/// Row 3 is `{±3i | 1 <= i <= n/2}` for every even `n`; rows 1 and 2 split
/// the remaining values below and above roughly `3n/4`, with the exact
/// index ranges depending on `n mod 4`.
pub fn row_sets(n: usize) -> Result<RowSets, Error> {
    if n < 2 {
        return Err(Error::TooSmall { n });
    }
    if n % 2 != 0 {
        return Err(Error::OddSide { n });
    }
    let n = n as i64;
    let pm = |block: &mut Block, v: i64| {
        block.insert(v as i32);
        block.insert(-v as i32);
    };
    let mut r1 = Block::new();
    let mut r2 = Block::new();
    let mut r3 = Block::new();
    if n % 4 == 0 {
        for i in 0..=(n - 4) / 4 {
            pm(&mut r1, 3 * i + 1);
            pm(&mut r1, 3 * i + 2);
        }
        for i in n / 4..=(n - 2) / 2 {
            pm(&mut r2, 3 * i + 1);
            pm(&mut r2, 3 * i + 2);
        }
    } else {
        for i in 0..=(n - 2) / 4 {
            pm(&mut r1, 3 * i + 1);
        }
        // Empty range for n = 2, where the upper bound goes negative.
        for i in 0..=(n - 6) / 4 {
            pm(&mut r1, 3 * i + 2);
        }
        for i in (n + 2) / 4..=(n - 2) / 2 {
            pm(&mut r2, 3 * i + 1);
        }
        for i in (n - 2) / 4..=(n - 2) / 2 {
            pm(&mut r2, 3 * i + 2);
        }
    }
    for i in 1..=n / 2 {
        pm(&mut r3, 3 * i);
    }
    Ok(RowSets { r1, r2, r3 })
}

/// Turns a plain magic rectangle with an odd number of filled cells into a
/// signed one by shifting every entry down by `(mk-1)/2`.
///
/// The input must verify as a magic rectangle for `params`; the output is
/// gated through the signed verifier before being returned.
pub fn mr_to_smr(mr: &SparseRectangle, params: &Params) -> Result<SparseRectangle, Error> {
    let mk = params.cells();
    if mk % 2 == 0 {
        return Err(Error::EvenShift { mk });
    }
    let report = verify_mr(mr, params)?;
    if !report.passed() {
        return Err(Error::InvalidInput {
            what: "magic rectangle",
            report: Box::new(report),
        });
    }
    let shift = ((mk - 1) / 2) as i32;
    let mut out = SparseRectangle::new(mr.rows(), mr.cols());
    for (r, c, v) in mr.iter() {
        out.set(r, c, v - shift)?;
    }
    let report = verify_smr(&out, params)?;
    if !report.passed() {
        return Err(Error::Defect {
            stage: "half-range shift",
            detail: report.summary(),
        });
    }
    Ok(out)
}

/// A fixed `4 x 12` signed magic rectangle with 9 filled cells per row and
/// 3 per column; the one admissible shape the odd-`k` block construction
/// does not cover.
pub fn fixed_smr_4_12() -> SparseRectangle {
    const CELLS: [&[(usize, i32)]; 4] = [
        &[(0, 1), (1, 16), (2, -17), (3, -12), (4, 12), (7, -6), (8, 6), (9, -3), (10, 3)],
        &[(0, 17), (1, -1), (4, -16), (5, 13), (6, 5), (7, -5), (8, -13), (10, 8), (11, -8)],
        &[(2, 2), (3, -2), (4, 4), (5, -9), (6, 9), (8, 7), (9, 10), (10, -11), (11, -10)],
        &[(0, -18), (1, -15), (2, 15), (3, 14), (5, -4), (6, -14), (7, 11), (9, -7), (11, 18)],
    ];
    let mut rect = SparseRectangle::new(4, 12);
    for (row, cells) in CELLS.iter().enumerate() {
        for &(col, v) in *cells {
            rect.set(row, col, v).expect("static data is well formed");
        }
    }
    rect
}

/// Tabulated seed families `(s1, s2)` for the pairs where the closed-form
/// triples do not apply, i.e. every admissible odd-`k` pair with `n <= 30`.
/// Blocks are listed with each base triple immediately followed by its
/// negation.
pub fn small_case_s12(n: usize, k: usize) -> Result<(Vec<Block>, Vec<Block>), Error> {
    // (n, k, m-triples, n-triples)
    #[rustfmt::skip]
    const TABLE: &[(usize, usize, &[[i32; 3]], &[[i32; 3]])] = &[
        (10, 5,  &[[1, 13, -14]],                             &[[4, 7, -11]]),
        (12, 9,  &[[1, 16, -17]],                             &[[4, 7, -11]]),
        (14, 7,  &[[1, 19, -20]],                             &[[4, 10, -14]]),
        (18, 9,  &[[1, 25, -26]],                             &[[4, 13, -17]]),
        (20, 5,  &[[1, 28, -29], [2, 23, -25]],               &[[4, 13, -17], [5, 11, -16]]),
        (20, 15, &[[1, 28, -29]],                             &[[4, 13, -17]]),
        (22, 11, &[[1, 31, -32]],                             &[[4, 16, -20]]),
        (24, 9,  &[[1, 34, -35], [2, 29, -31]],               &[[4, 16, -20], [5, 14, -19]]),
        (26, 13, &[[1, 37, -38]],                             &[[4, 19, -23]]),
        (28, 7,  &[[1, 40, -41], [2, 35, -37]],               &[[4, 19, -23], [5, 17, -22]]),
        (28, 21, &[[1, 40, -41]],                             &[[4, 19, -23]]),
        (30, 5,  &[[1, 43, -44], [2, 38, -40], [4, 31, -35]], &[[7, 22, -29], [10, 16, -26], [8, 20, -28]]),
        (30, 9,  &[[1, 43, -44], [2, 38, -40]],               &[[4, 22, -26], [5, 20, -25]]),
        (30, 15, &[[1, 43, -44]],                             &[[4, 22, -26]]),
    ];
    let entry = TABLE
        .iter()
        .find(|&&(tn, tk, _, _)| (tn, tk) == (n, k))
        .ok_or(Error::NotTabulated { n, k })?;
    let expand = |triples: &[[i32; 3]]| -> Vec<Block> {
        triples
            .iter()
            .flat_map(|t| {
                let block = Block::from_slice(t);
                let negated = block.negated();
                [block, negated]
            })
            .collect()
    };
    Ok((expand(entry.2), expand(entry.3)))
}

/// Tabulated third families for the special shapes the closed-form triples
/// skip: `n = 2k` at any size, and a handful of small pairs.
pub fn special_s3(n: usize, k: usize) -> Result<Vec<Block>, Error> {
    #[rustfmt::skip]
    let triples: &[[i32; 3]] = if n == 2 * k || [(12, 9), (20, 15), (28, 21)].contains(&(n, k)) {
        &[[3, 6, -9]]
    } else if [(20, 5), (24, 9), (28, 7), (30, 9)].contains(&(n, k)) {
        &[[3, 27, -30], [6, 12, -18]]
    } else if (n, k) == (30, 5) {
        &[[3, 42, -45], [6, 33, -39], [9, 21, -30]]
    } else {
        return Err(Error::NotTabulated { n, k });
    };
    Ok(triples
        .iter()
        .flat_map(|t| {
            let block = Block::from_slice(t);
            let negated = block.negated();
            [block, negated]
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::{verify_s12, verify_s3};

    #[test]
    fn smr3_even_2_and_4_are_the_fixed_arrays() {
        let a2 = smr3_even(2).unwrap();
        assert_eq!(a2.row_values(0), vec![1, -1]);
        assert_eq!(a2.row_values(1), vec![2, -2]);
        assert_eq!(a2.row_values(2), vec![-3, 3]);
        let a4 = smr3_even(4).unwrap();
        assert_eq!(a4.row_values(0), vec![1, -1, 2, -2]);
        assert_eq!(a4.row_values(1), vec![5, 4, -5, -4]);
        assert_eq!(a4.row_values(2), vec![-6, -3, 3, 6]);
    }

    #[test]
    fn smr3_even_10_matches_known_array() {
        let a = smr3_even(10).unwrap();
        assert_eq!(a.row_values(0), vec![1, -1, 2, -2, 4, -4, 5, -5, 7, -7]);
        assert_eq!(
            a.row_values(1),
            vec![14, 13, -14, 11, -13, 10, -11, 8, -10, -8]
        );
        assert_eq!(
            a.row_values(2),
            vec![-15, -12, 12, -9, 9, -6, 6, -3, 3, 15]
        );
    }

    #[test]
    fn smr3_even_6_hand_applied() {
        let a = smr3_even(6).unwrap();
        assert_eq!(a.row_values(0), vec![1, -1, 2, -2, 4, -4]);
        assert_eq!(a.row_values(1), vec![8, 7, -8, 5, -7, -5]);
        assert_eq!(a.row_values(2), vec![-9, -6, 6, -3, 3, 9]);
    }

    #[test]
    fn smr3_even_rejects_bad_sides() {
        assert!(matches!(smr3_even(7), Err(Error::OddSide { n: 7 })));
        assert!(matches!(smr3_even(0), Err(Error::TooSmall { n: 0 })));
    }

    #[test]
    fn smr3_even_verifies_up_to_120() {
        for n in (2..=120).step_by(2) {
            let a = smr3_even(n).unwrap();
            let report = verify_smr(&a, &Params::relaxed(3, n, n, 3)).unwrap();
            assert!(report.passed(), "n = {n}: {}", report.summary());
        }
    }

    #[test]
    fn row_sets_small_cases() {
        let rs = row_sets(4).unwrap();
        assert_eq!(rs.r1, Block::from_slice(&[1, -1, 2, -2]));
        assert_eq!(rs.r2, Block::from_slice(&[4, -4, 5, -5]));
        assert_eq!(rs.r3, Block::from_slice(&[3, -3, 6, -6]));
        let rs = row_sets(2).unwrap();
        assert_eq!(rs.r1, Block::from_slice(&[1, -1]));
        assert_eq!(rs.r2, Block::from_slice(&[2, -2]));
        assert_eq!(rs.r3, Block::from_slice(&[3, -3]));
    }

    #[test]
    fn row_sets_n10() {
        let rs = row_sets(10).unwrap();
        assert_eq!(
            rs.r1,
            Block::from_slice(&[1, -1, 2, -2, 4, -4, 5, -5, 7, -7])
        );
        assert_eq!(
            rs.r2,
            Block::from_slice(&[8, -8, 10, -10, 11, -11, 13, -13, 14, -14])
        );
        assert_eq!(
            rs.r3,
            Block::from_slice(&[3, -3, 6, -6, 9, -9, 12, -12, 15, -15])
        );
    }

    #[test]
    fn row_sets_match_rows_up_to_200() {
        for n in (2..=200).step_by(2) {
            let a = smr3_even(n).unwrap();
            let rs = row_sets(n).unwrap();
            for (row, expected) in [(0, &rs.r1), (1, &rs.r2), (2, &rs.r3)] {
                let got: Block = a.row_values(row).into_iter().collect();
                assert_eq!(&got, expected, "row {row} of n = {n}");
            }
        }
    }

    #[test]
    fn shift_lo_shu() {
        let mr = SparseRectangle::from_rows(&[vec![7, 0, 5], vec![2, 4, 6], vec![3, 8, 1]]);
        let params = Params::relaxed(3, 3, 3, 3);
        let smr = mr_to_smr(&mr, &params).unwrap();
        assert_eq!(smr.row_values(0), vec![3, -4, 1]);
        assert_eq!(smr.row_values(1), vec![-2, 0, 2]);
        assert_eq!(smr.row_values(2), vec![-1, 4, -3]);
    }

    #[test]
    fn shift_trivial_1x1() {
        let mr = SparseRectangle::from_rows(&[vec![0]]);
        let params = Params::relaxed(1, 1, 1, 1);
        let smr = mr_to_smr(&mr, &params).unwrap();
        assert_eq!(smr.get(0, 0), Some(0));
    }

    #[test]
    fn shift_rejects_even_cell_count() {
        let mr = SparseRectangle::from_rows(&[vec![0, 1], vec![3, 2]]);
        let params = Params::relaxed(2, 2, 2, 2);
        assert!(matches!(
            mr_to_smr(&mr, &params),
            Err(Error::EvenShift { mk: 4 })
        ));
    }

    #[test]
    fn shift_rejects_invalid_mr() {
        let bad = SparseRectangle::from_rows(&[vec![0, 1, 2], vec![3, 4, 5], vec![6, 7, 8]]);
        let params = Params::relaxed(3, 3, 3, 3);
        assert!(matches!(
            mr_to_smr(&bad, &params),
            Err(Error::InvalidInput { .. })
        ));
    }

    #[test]
    fn fixed_4x12_layout_and_validity() {
        let a = fixed_smr_4_12();
        assert_eq!(a.row_cells(0)[0], (0, 1));
        assert_eq!(a.get(0, 1), Some(16));
        assert_eq!(a.col_values(0), vec![1, 17, -18]);
        let report = verify_smr(&a, &Params::new(4, 12, 9).unwrap()).unwrap();
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn tabulated_s12_entries() {
        let (s1, s2) = small_case_s12(10, 5).unwrap();
        assert_eq!(s1[0], Block::from_slice(&[1, 13, -14]));
        assert_eq!(s1[1], Block::from_slice(&[-1, -13, 14]));
        assert_eq!(s2[0], Block::from_slice(&[4, 7, -11]));
        let (s1, s2) = small_case_s12(20, 15).unwrap();
        assert_eq!(s1[0], Block::from_slice(&[1, 28, -29]));
        assert_eq!(s2[0], Block::from_slice(&[4, 13, -17]));
        let (s1, _) = small_case_s12(30, 9).unwrap();
        assert!(s1.contains(&Block::from_slice(&[2, 38, -40])));
        assert!(matches!(
            small_case_s12(16, 5),
            Err(Error::NotTabulated { .. })
        ));
    }

    #[test]
    fn every_tabulated_s12_verifies() {
        for (n, k) in [
            (10, 5), (12, 9), (14, 7), (18, 9), (20, 5), (20, 15), (22, 11),
            (24, 9), (26, 13), (28, 7), (28, 21), (30, 5), (30, 9), (30, 15),
        ] {
            let (s1, s2) = small_case_s12(n, k).unwrap();
            let params = Params::relaxed(3 * n / k, n, k, 3);
            let rs = row_sets(n).unwrap();
            let report = verify_s12(&s1, &s2, &rs, &params);
            assert!(report.passed(), "({n},{k}): {}", report.summary());
        }
    }

    #[test]
    fn special_s3_families() {
        assert_eq!(
            special_s3(10, 5).unwrap(),
            vec![Block::from_slice(&[3, 6, -9]), Block::from_slice(&[-3, -6, 9])]
        );
        let s3 = special_s3(20, 5).unwrap();
        assert_eq!(s3.len(), 4);
        assert!(s3.contains(&Block::from_slice(&[6, 12, -18])));
        let s3 = special_s3(30, 5).unwrap();
        assert!(s3.contains(&Block::from_slice(&[3, 42, -45])));
        assert!(s3.contains(&Block::from_slice(&[9, 21, -30])));
        assert!(matches!(special_s3(40, 5), Err(Error::NotTabulated { .. })));
    }

    #[test]
    fn every_special_s3_verifies() {
        for (n, k) in [
            (10, 5), (14, 7), (18, 9), (22, 11), (26, 13), (30, 15), (34, 17),
            (12, 9), (20, 15), (28, 21), (20, 5), (24, 9), (28, 7), (30, 9), (30, 5),
        ] {
            let s3 = special_s3(n, k).unwrap();
            let params = Params::relaxed(3 * n / k, n, k, 3);
            let rs = row_sets(n).unwrap();
            let report = verify_s3(&s3, &rs, &params);
            assert!(report.passed(), "({n},{k}): {}", report.summary());
        }
    }
}
