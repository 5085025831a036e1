//! Checks every defining axiom of signed and plain magic rectangles, and of
//! the zero-sum triple families feeding the odd-`k` construction.
//!
//! All constructive code in this crate funnels its output through these
//! functions before returning it. Checks are exact integer comparisons; a
//! report carries the first offending cell or block per rule so failures
//! shrink to something readable.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;
use crate::types::{symbol_set, Block, Params, Partition, RowSets, SparseRectangle};

/// Identifies which axiom a violation belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Rule {
    RowFillCount,
    ColFillCount,
    SymbolOutOfRange,
    SymbolDuplicate,
    SymbolMissing,
    RowSum,
    ColSum,
    BlockSize,
    BlockSum,
    BlockMembership,
    NegationClosure,
    FamilySize,
    Disjointness,
}

/// Where a violation was observed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Row(usize),
    Col(usize),
    Cell(usize, usize),
    Value(i32),
    Block(Block),
    None,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub rule: Rule,
    pub detail: String,
    pub witness: Witness,
}

/// The outcome of a verification: passed exactly when no rule was violated.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct VerificationReport {
    violations: Vec<Violation>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn summary(&self) -> String {
        if self.passed() {
            "pass".to_string()
        } else {
            let lines: Vec<String> = self
                .violations
                .iter()
                .map(|v| format!("{:?}: {}", v.rule, v.detail))
                .collect();
            format!("{} violation(s): {}", lines.len(), lines.join("; "))
        }
    }

    fn push(&mut self, rule: Rule, detail: String, witness: Witness) {
        // Keep only the first witness per rule.
        if self.violations.iter().all(|v| v.rule != rule) {
            self.violations.push(Violation {
                rule,
                detail,
                witness,
            });
        }
    }
}

fn check_fill_counts(rect: &SparseRectangle, params: &Params, report: &mut VerificationReport) {
    for row in 0..rect.rows() {
        let got = rect.row_values(row).len();
        if got != params.k {
            report.push(
                Rule::RowFillCount,
                format!("row {row} has {got} filled cells, wants {}", params.k),
                Witness::Row(row),
            );
        }
    }
    for col in 0..rect.cols() {
        let got = rect.col_values(col).len();
        if got != params.s {
            report.push(
                Rule::ColFillCount,
                format!("column {col} has {got} filled cells, wants {}", params.s),
                Witness::Col(col),
            );
        }
    }
}

fn check_symbols<F>(
    rect: &SparseRectangle,
    expected_len: usize,
    in_range: F,
    range_name: &str,
    report: &mut VerificationReport,
) -> BTreeSet<i32>
where
    F: Fn(i32) -> bool,
{
    let mut seen = BTreeSet::new();
    for (r, c, v) in rect.iter() {
        if !in_range(v) {
            report.push(
                Rule::SymbolOutOfRange,
                format!("entry {v} at ({r},{c}) outside {range_name}"),
                Witness::Cell(r, c),
            );
        }
        if !seen.insert(v) {
            report.push(
                Rule::SymbolDuplicate,
                format!("entry {v} appears more than once"),
                Witness::Value(v),
            );
        }
    }
    // With the counts above, in-range and distinct entries cover the set
    // exactly when there are enough of them.
    if seen.len() == rect.filled() && rect.filled() < expected_len {
        report.push(
            Rule::SymbolMissing,
            format!(
                "only {} of {} symbols are used",
                rect.filled(),
                expected_len
            ),
            Witness::None,
        );
    }
    seen
}

/// Verifies a signed magic rectangle against `params`: exact fill counts,
/// the exact symbol set each value once, and zero row and column sums.
///
/// Only a shape mismatch is an error; every property failure is reported.
pub fn verify_smr(rect: &SparseRectangle, params: &Params) -> Result<VerificationReport, Error> {
    if (rect.rows(), rect.cols()) != (params.m, params.n) {
        return Err(Error::DimensionMismatch {
            expected: (params.m, params.n),
            got: (rect.rows(), rect.cols()),
        });
    }
    let mut report = VerificationReport::default();
    check_fill_counts(rect, params, &mut report);
    let symbols = symbol_set(params);
    check_symbols(
        rect,
        symbols.len(),
        |v| symbols.contains(v),
        "the symbol set",
        &mut report,
    );
    for row in 0..rect.rows() {
        let sum: i64 = rect.row_values(row).iter().map(|&v| v as i64).sum();
        if sum != 0 {
            report.push(
                Rule::RowSum,
                format!("row {row} sums to {sum}"),
                Witness::Row(row),
            );
        }
    }
    for col in 0..rect.cols() {
        let sum: i64 = rect.col_values(col).iter().map(|&v| v as i64).sum();
        if sum != 0 {
            report.push(
                Rule::ColSum,
                format!("column {col} sums to {sum}"),
                Witness::Col(col),
            );
        }
    }
    Ok(report)
}

/// Verifies a plain magic rectangle: exact fill counts, entries exactly
/// `{0, ..., mk-1}`, all row sums equal and all column sums equal.
pub fn verify_mr(rect: &SparseRectangle, params: &Params) -> Result<VerificationReport, Error> {
    if (rect.rows(), rect.cols()) != (params.m, params.n) {
        return Err(Error::DimensionMismatch {
            expected: (params.m, params.n),
            got: (rect.rows(), rect.cols()),
        });
    }
    let mut report = VerificationReport::default();
    check_fill_counts(rect, params, &mut report);
    let count = params.cells() as i32;
    check_symbols(
        rect,
        params.cells(),
        |v| (0..count).contains(&v),
        "0..mk",
        &mut report,
    );
    let row_sums: Vec<i64> = (0..rect.rows())
        .map(|r| rect.row_values(r).iter().map(|&v| v as i64).sum())
        .collect();
    if let Some((&first, rest)) = row_sums.split_first() {
        for (i, &s) in rest.iter().enumerate() {
            if s != first {
                report.push(
                    Rule::RowSum,
                    format!("row {} sums to {s}, row 0 to {first}", i + 1),
                    Witness::Row(i + 1),
                );
            }
        }
    }
    let col_sums: Vec<i64> = (0..rect.cols())
        .map(|c| rect.col_values(c).iter().map(|&v| v as i64).sum())
        .collect();
    if let Some((&first, rest)) = col_sums.split_first() {
        for (i, &s) in rest.iter().enumerate() {
            if s != first {
                report.push(
                    Rule::ColSum,
                    format!("column {} sums to {s}, column 0 to {first}", i + 1),
                    Witness::Col(i + 1),
                );
            }
        }
    }
    Ok(report)
}

/// Two partitions of the same ground set are near orthogonal when every
/// pair of blocks meets in at most one element.
pub fn is_near_orthogonal(p1: &Partition, p2: &Partition) -> Result<bool, Error> {
    if p1.ground() != p2.ground() {
        return Err(Error::GroundMismatch);
    }
    let mut index_in_p2 = BTreeMap::new();
    for (j, block) in p2.blocks().iter().enumerate() {
        for v in block.iter() {
            index_in_p2.insert(v, j);
        }
    }
    for block in p1.blocks() {
        let mut hits: BTreeMap<usize, u32> = BTreeMap::new();
        for v in block.iter() {
            let j = index_in_p2[&v];
            let count = hits.entry(j).or_insert(0);
            *count += 1;
            if *count > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn check_family_common(
    name: &str,
    blocks: &[Block],
    report: &mut VerificationReport,
    seen: &mut BTreeSet<i32>,
) {
    for block in blocks {
        if block.len() != 3 {
            report.push(
                Rule::BlockSize,
                format!("{name} block {:?} has {} members, wants 3", block, block.len()),
                Witness::Block(block.clone()),
            );
        }
        if block.sum() != 0 {
            report.push(
                Rule::BlockSum,
                format!("{name} block {:?} sums to {}", block, block.sum()),
                Witness::Block(block.clone()),
            );
        }
        for v in block.iter() {
            if !seen.insert(v) {
                report.push(
                    Rule::Disjointness,
                    format!("value {v} appears in two blocks"),
                    Witness::Value(v),
                );
            }
        }
    }
    let set: BTreeSet<&Block> = blocks.iter().collect();
    for block in blocks {
        if !set.contains(&block.negated()) {
            report.push(
                Rule::NegationClosure,
                format!("{name} lacks the negation of {:?}", block),
                Witness::Block(block.clone()),
            );
        }
    }
}

fn family_min_size(params: &Params, report: &mut VerificationReport) -> usize {
    match params.family_min() {
        Some(min) => min,
        None => {
            report.push(
                Rule::FamilySize,
                format!(
                    "remainder {} is none of 0, k/3, 2k/3 for k = {}",
                    params.r, params.k
                ),
                Witness::None,
            );
            0
        }
    }
}

/// Verifies the paired seed families for odd `k`: zero-sum 3-blocks, the
/// first family with one member in `r1` and two in `r2`, the second the
/// reverse, each family closed under blockwise negation, sizes equal and
/// at least `q`, `q+1`, `q+2` according to the remainder, and all blocks of
/// both families pairwise disjoint.
pub fn verify_s12(
    s1: &[Block],
    s2: &[Block],
    rowsets: &RowSets,
    params: &Params,
) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut seen = BTreeSet::new();
    check_family_common("s1", s1, &mut report, &mut seen);
    check_family_common("s2", s2, &mut report, &mut seen);
    for (name, blocks, in_r1, in_r2) in [("s1", s1, 1, 2), ("s2", s2, 2, 1)] {
        for block in blocks {
            let c1 = block.iter().filter(|&v| rowsets.r1.contains(v)).count();
            let c2 = block.iter().filter(|&v| rowsets.r2.contains(v)).count();
            if (c1, c2) != (in_r1, in_r2) {
                report.push(
                    Rule::BlockMembership,
                    format!(
                        "{name} block {:?} has {c1} members in r1 and {c2} in r2, wants {in_r1}/{in_r2}",
                        block
                    ),
                    Witness::Block(block.clone()),
                );
            }
        }
    }
    let min = family_min_size(params, &mut report);
    if s1.len() != s2.len() || s1.len() < min {
        report.push(
            Rule::FamilySize,
            format!(
                "family sizes |s1| = {}, |s2| = {}, want equal and >= {min}",
                s1.len(),
                s2.len()
            ),
            Witness::None,
        );
    }
    report
}

/// Verifies the third seed family: zero-sum 3-blocks inside `r3`, pairwise
/// disjoint, closed under blockwise negation, with the same size floor as
/// the paired families.
pub fn verify_s3(s3: &[Block], rowsets: &RowSets, params: &Params) -> VerificationReport {
    let mut report = VerificationReport::default();
    let mut seen = BTreeSet::new();
    check_family_common("s3", s3, &mut report, &mut seen);
    for block in s3 {
        for v in block.iter() {
            if !rowsets.r3.contains(v) {
                report.push(
                    Rule::BlockMembership,
                    format!("s3 block {:?} member {v} lies outside r3", block),
                    Witness::Block(block.clone()),
                );
            }
        }
    }
    let min = family_min_size(params, &mut report);
    if s3.len() < min {
        report.push(
            Rule::FamilySize,
            format!("family size |s3| = {} below {min}", s3.len()),
            Witness::None,
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::column_partition;

    fn fig1_3x2() -> SparseRectangle {
        SparseRectangle::from_rows(&[vec![1, -1], vec![2, -2], vec![-3, 3]])
    }

    #[test]
    fn smr_3x2_passes() {
        let params = Params::relaxed(3, 2, 2, 3);
        let report = verify_smr(&fig1_3x2(), &params).unwrap();
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn smr_3x2_mutation_fails() {
        let rect = SparseRectangle::from_rows(&[vec![1, -1], vec![2, -2], vec![-2, 3]]);
        let params = Params::relaxed(3, 2, 2, 3);
        let report = verify_smr(&rect, &params).unwrap();
        assert!(!report.passed());
        let rules: Vec<Rule> = report.violations().iter().map(|v| v.rule).collect();
        assert!(rules.contains(&Rule::SymbolDuplicate));
        assert!(rules.contains(&Rule::ColSum));
    }

    #[test]
    fn smr_dimension_mismatch_errors() {
        let params = Params::new(3, 4, 4).unwrap();
        assert!(matches!(
            verify_smr(&fig1_3x2(), &params),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn mr_lo_shu_passes() {
        let rect = SparseRectangle::from_rows(&[vec![7, 0, 5], vec![2, 4, 6], vec![3, 8, 1]]);
        let params = Params::relaxed(3, 3, 3, 3);
        let report = verify_mr(&rect, &params).unwrap();
        assert!(report.passed(), "{}", report.summary());
    }

    #[test]
    fn mr_rejects_signed_entries() {
        let params = Params::relaxed(3, 2, 2, 3);
        let report = verify_mr(&fig1_3x2(), &params).unwrap();
        assert!(!report.passed());
        assert!(report
            .violations()
            .iter()
            .any(|v| v.rule == Rule::SymbolOutOfRange));
    }

    #[test]
    fn mr_trivial_1x1() {
        let rect = SparseRectangle::from_rows(&[vec![0]]);
        let params = Params::relaxed(1, 1, 1, 1);
        assert!(verify_mr(&rect, &params).unwrap().passed());
    }

    #[test]
    fn near_orthogonal_rows_vs_columns() {
        let rect = fig1_3x2();
        let cols = column_partition(&rect).unwrap();
        let ground = rect.entry_set().unwrap();
        let rows = Partition::new(
            (0..3).map(|r| rect.row_values(r).into_iter().collect()).collect(),
            ground,
        )
        .unwrap();
        assert!(is_near_orthogonal(&rows, &cols).unwrap());
        // A partition always meets itself in whole blocks.
        assert!(!is_near_orthogonal(&cols, &cols).unwrap());
    }

    #[test]
    fn near_orthogonal_counterexample_and_mismatch() {
        let ground: BTreeSet<i32> = [1, 2, 3, 4].into_iter().collect();
        let p = Partition::new(
            vec![Block::from_slice(&[1, 2]), Block::from_slice(&[3, 4])],
            ground.clone(),
        )
        .unwrap();
        assert!(!is_near_orthogonal(&p, &p).unwrap());
        let other = Partition::new(vec![Block::from_slice(&[1])], [1].into_iter().collect())
            .unwrap();
        assert!(matches!(
            is_near_orthogonal(&p, &other),
            Err(Error::GroundMismatch)
        ));
    }
}
