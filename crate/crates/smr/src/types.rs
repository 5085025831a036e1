//! Core objects: validated parameters, the symmetric symbol set, sparse
//! integer grids, and zero-sum block machinery.
//!
//! Everything here is immutable after construction and uses exact integer
//! arithmetic. Indices are 0-based throughout; closed-form constructions
//! that are naturally 1-based translate once at their own boundary.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::Error;

/// Validated shape parameters of a (signed) magic rectangle: `m x n`, `k`
/// filled cells per row, `s` per column, together with the derived
/// quantities used by the block constructions.
///
/// `s` is fixed at 3 by [`Params::new`]; the relaxed constructor keeps it
/// general so the verifier and the search oracle can handle plain magic
/// rectangles and deliberately inadmissible probes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Params {
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub s: usize,
    /// `floor(n / k)`.
    pub q: usize,
    /// `n - k * q`.
    pub r: usize,
    /// Row count written as `s*n/k`; equals `m` whenever `mk = sn`.
    pub ell: usize,
}

impl Params {
    /// Validates `(m, n, k)` for a signed magic rectangle with three filled
    /// cells per column. Rejects exactly the triples for which no such
    /// rectangle exists: `mk != 3n`, or any of `m`, `k` outside `[3, n]`.
    pub fn new(m: usize, n: usize, k: usize) -> Result<Params, Error> {
        let fail = |reason: String| Error::Inadmissible { m, n, k, reason };
        if m.checked_mul(k) != Some(3 * n) {
            return Err(fail(format!("mk = {} but 3n = {}", m * k, 3 * n)));
        }
        if m < 3 {
            return Err(fail(format!("m = {m} < 3")));
        }
        if k < 3 {
            return Err(fail(format!("k = {k} < 3")));
        }
        if m > n {
            return Err(fail(format!("m = {m} > n = {n}")));
        }
        if k > n {
            return Err(fail(format!("k = {k} > n = {n}")));
        }
        Ok(Self::relaxed(m, n, k, 3))
    }

    /// Builds parameters without the admissibility bounds, only requiring
    /// the counting identity `mk = ns`. Used for plain magic rectangles and
    /// for forcing inadmissible probes through the search oracle.
    pub fn relaxed(m: usize, n: usize, k: usize, s: usize) -> Params {
        assert_eq!(m * k, n * s, "cell count mismatch: mk != ns");
        assert!(k <= n && s <= m, "per-line fill exceeds line length");
        let q = if k == 0 { 0 } else { n / k };
        Params {
            m,
            n,
            k,
            s,
            q,
            r: n - k * q,
            ell: if k == 0 { 0 } else { s * n / k },
        }
    }

    /// Total number of filled cells, `m * k`.
    pub fn cells(&self) -> usize {
        self.m * self.k
    }

    /// Minimum number of triples each seed family must provide:
    /// `q`, `q+1` or `q+2` according to `r = 0`, `k/3` or `2k/3`.
    /// `None` when `r` is none of those residues.
    pub fn family_min(&self) -> Option<usize> {
        if self.r == 0 {
            Some(self.q)
        } else if 3 * self.r == self.k {
            Some(self.q + 1)
        } else if 3 * self.r == 2 * self.k {
            Some(self.q + 2)
        } else {
            None
        }
    }
}

/// The symbol set `X` of a signed magic rectangle: all integers of magnitude
/// at most `hi`, including zero exactly when the cell count is odd.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymbolSet {
    pub lo: i32,
    pub hi: i32,
    pub contains_zero: bool,
}

impl SymbolSet {
    /// The symbol set for `params.cells()` filled cells:
    /// `{0, ±1, ..., ±(mk-1)/2}` when `mk` is odd, `{±1, ..., ±mk/2}` when even.
    pub fn for_params(params: &Params) -> SymbolSet {
        let mk = params.cells();
        let odd = mk % 2 == 1;
        let hi = if odd { (mk - 1) / 2 } else { mk / 2 } as i32;
        SymbolSet {
            lo: -hi,
            hi,
            contains_zero: odd,
        }
    }

    pub fn contains(&self, v: i32) -> bool {
        v >= self.lo && v <= self.hi && (v != 0 || self.contains_zero)
    }

    /// Number of symbols; always equals the filled cell count.
    pub fn len(&self) -> usize {
        let span = 2 * self.hi as usize;
        if self.contains_zero {
            span + 1
        } else {
            span
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// All symbols in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        let zero = self.contains_zero;
        (self.lo..=self.hi).filter(move |&v| v != 0 || zero)
    }
}

/// The symbol set of an admissible triple; see [`SymbolSet::for_params`].
pub fn symbol_set(params: &Params) -> SymbolSet {
    SymbolSet::for_params(params)
}

/// An `rows x cols` integer grid storing only its filled cells.
///
/// Construction enforces only well-formedness (indices in range, one value
/// per cell); the magic properties are the verifier's business.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SparseRectangle {
    rows: usize,
    cols: usize,
    cells: BTreeMap<(usize, usize), i32>,
}

impl SparseRectangle {
    pub fn new(rows: usize, cols: usize) -> SparseRectangle {
        SparseRectangle {
            rows,
            cols,
            cells: BTreeMap::new(),
        }
    }

    /// Builds a fully filled rectangle from row-major values.
    pub fn from_rows(values: &[Vec<i32>]) -> SparseRectangle {
        let rows = values.len();
        let cols = values.first().map_or(0, Vec::len);
        let mut rect = SparseRectangle::new(rows, cols);
        for (r, row) in values.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged rows");
            for (c, &v) in row.iter().enumerate() {
                rect.set(r, c, v).expect("fresh cell");
            }
        }
        rect
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Fills one cell. Rejects out-of-range indices and double writes.
    pub fn set(&mut self, row: usize, col: usize, value: i32) -> Result<(), Error> {
        if row >= self.rows || col >= self.cols {
            return Err(Error::CellOutOfRange { row, col });
        }
        if self.cells.contains_key(&(row, col)) {
            return Err(Error::CellOccupied { row, col });
        }
        self.cells.insert((row, col), value);
        Ok(())
    }

    pub fn get(&self, row: usize, col: usize) -> Option<i32> {
        self.cells.get(&(row, col)).copied()
    }

    /// Filled cells in row-major order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, i32)> + '_ {
        self.cells.iter().map(|(&(r, c), &v)| (r, c, v))
    }

    pub fn filled(&self) -> usize {
        self.cells.len()
    }

    /// Values filled in the given row, in column order.
    pub fn row_values(&self, row: usize) -> Vec<i32> {
        self.cells
            .range((row, 0)..=(row, usize::MAX))
            .map(|(_, &v)| v)
            .collect()
    }

    /// `(column, value)` pairs of the given row, in column order.
    pub fn row_cells(&self, row: usize) -> Vec<(usize, i32)> {
        self.cells
            .range((row, 0)..=(row, usize::MAX))
            .map(|(&(_, c), &v)| (c, v))
            .collect()
    }

    /// Values filled in the given column, in row order.
    pub fn col_values(&self, col: usize) -> Vec<i32> {
        (0..self.rows)
            .filter_map(|r| self.get(r, col))
            .collect()
    }

    /// Map from value to the column holding it. Fails on duplicates.
    pub fn column_of_value(&self) -> Result<BTreeMap<i32, usize>, Error> {
        let mut map = BTreeMap::new();
        for (_, c, v) in self.iter() {
            if map.insert(v, c).is_some() {
                return Err(Error::DuplicateEntry { value: v });
            }
        }
        Ok(map)
    }

    /// The set of filled values. Fails on duplicates.
    pub fn entry_set(&self) -> Result<BTreeSet<i32>, Error> {
        let mut set = BTreeSet::new();
        for (_, _, v) in self.iter() {
            if !set.insert(v) {
                return Err(Error::DuplicateEntry { value: v });
            }
        }
        Ok(set)
    }
}

/// A finite set of integers; the carrier for zero-sum blocks, row sets and
/// partition classes.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Default)]
pub struct Block(BTreeSet<i32>);

impl Block {
    pub fn new() -> Block {
        Block::default()
    }

    pub fn from_slice(values: &[i32]) -> Block {
        Block(values.iter().copied().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: i32) -> bool {
        self.0.contains(&v)
    }

    pub fn insert(&mut self, v: i32) -> bool {
        self.0.insert(v)
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().map(|&v| v as i64).sum()
    }

    /// The elementwise negation `{-a | a in self}`.
    pub fn negated(&self) -> Block {
        Block(self.0.iter().map(|&v| -v).collect())
    }

    pub fn is_negation_closed(&self) -> bool {
        self.0.iter().all(|&v| self.0.contains(&-v))
    }

    pub fn is_disjoint(&self, other: &Block) -> bool {
        self.0.is_disjoint(&other.0)
    }

    pub fn union(&self, other: &Block) -> Block {
        Block(self.0.union(&other.0).copied().collect())
    }

    pub fn iter(&self) -> impl Iterator<Item = i32> + '_ {
        self.0.iter().copied()
    }

    pub fn as_set(&self) -> &BTreeSet<i32> {
        &self.0
    }
}

impl FromIterator<i32> for Block {
    fn from_iter<T: IntoIterator<Item = i32>>(iter: T) -> Block {
        Block(iter.into_iter().collect())
    }
}

/// A partition of an explicit ground set into pairwise disjoint blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    blocks: Vec<Block>,
    ground: BTreeSet<i32>,
}

impl Partition {
    /// Checks disjointness and exact coverage of the ground set.
    pub fn new(blocks: Vec<Block>, ground: BTreeSet<i32>) -> Result<Partition, Error> {
        let mut seen = BTreeSet::new();
        for block in &blocks {
            for v in block.iter() {
                if !seen.insert(v) {
                    return Err(Error::DuplicateEntry { value: v });
                }
            }
        }
        if seen != ground {
            return Err(Error::GroundMismatch);
        }
        Ok(Partition { blocks, ground })
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn ground(&self) -> &BTreeSet<i32> {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }
}

/// One block per column of the rectangle, over the ground set of all filled
/// values. Duplicate entries anywhere in the grid are rejected.
pub fn column_partition(rect: &SparseRectangle) -> Result<Partition, Error> {
    let ground = rect.entry_set()?;
    let mut blocks = vec![Block::new(); rect.cols()];
    for (_, c, v) in rect.iter() {
        blocks[c].insert(v);
    }
    Partition::new(blocks, ground)
}

/// The entry sets of the three rows of the fully filled `3 x n` base
/// rectangle. Each is closed under negation, pairwise disjoint from the
/// others, and of size `n`; together they cover `{±1, ..., ±3n/2}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RowSets {
    pub r1: Block,
    pub r2: Block,
    pub r3: Block,
}

impl RowSets {
    /// 1, 2 or 3 according to which row set holds `v`; `None` if none does.
    pub fn row_of(&self, v: i32) -> Option<u8> {
        if self.r1.contains(v) {
            Some(1)
        } else if self.r2.contains(v) {
            Some(2)
        } else if self.r3.contains(v) {
            Some(3)
        } else {
            None
        }
    }

    pub fn get(&self, index: u8) -> &Block {
        match index {
            1 => &self.r1,
            2 => &self.r2,
            3 => &self.r3,
            _ => panic!("row set index must be 1, 2 or 3"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_full_3xn() {
        let p = Params::new(3, 10, 10).unwrap();
        assert_eq!((p.s, p.q, p.r, p.ell), (3, 1, 0, 3));
    }

    #[test]
    fn params_example_10_30_9() {
        let p = Params::new(10, 30, 9).unwrap();
        assert_eq!((p.q, p.r, p.ell), (3, 3, 10));
        assert_eq!(p.family_min(), Some(4));
    }

    #[test]
    fn params_rejects_counting_violation() {
        let err = Params::new(3, 5, 4).unwrap_err();
        assert!(matches!(err, Error::Inadmissible { .. }), "{err}");
    }

    #[test]
    fn params_rejects_bounds() {
        assert!(Params::new(2, 2, 3).is_err()); // m < 3
        assert!(Params::new(9, 3, 1).is_err()); // k < 3
        assert!(Params::new(3, 2, 2).is_err()); // m > n
        assert!(Params::new(12, 4, 1).is_err()); // k < 3 before k > n
    }

    /// The admissibility filter agrees with the brute-force definition on
    /// every triple with n <= 50.
    #[test]
    fn params_matches_brute_force_filter() {
        for n in 0..=50usize {
            for m in 0..=n + 2 {
                for k in 0..=n + 2 {
                    let expected = m * k == 3 * n && 3 <= m && m <= n && 3 <= k && k <= n;
                    assert_eq!(
                        Params::new(m, n, k).is_ok(),
                        expected,
                        "disagreement at ({m},{n},{k})"
                    );
                }
            }
        }
    }

    #[test]
    fn symbols_even_cell_count() {
        let p = Params::new(3, 10, 10).unwrap();
        let x = symbol_set(&p);
        assert_eq!((x.lo, x.hi, x.contains_zero), (-15, 15, false));
        assert_eq!(x.len(), 30);
    }

    #[test]
    fn symbols_odd_cell_count() {
        let p = Params::new(3, 3, 3).unwrap();
        let x = symbol_set(&p);
        assert_eq!((x.lo, x.hi, x.contains_zero), (-4, 4, true));
        assert_eq!(x.len(), 9);
        assert!(x.contains(0));
    }

    #[test]
    fn symbols_10_by_30() {
        let p = Params::new(10, 30, 9).unwrap();
        let x = symbol_set(&p);
        assert_eq!((x.lo, x.hi), (-45, 45));
        assert!(!x.contains(0));
        assert_eq!(x.len(), 90);
    }

    #[test]
    fn symbols_negation_symmetric_for_all_admissible() {
        for n in 3..=40 {
            for m in 3..=n {
                if (3 * n) % m != 0 {
                    continue;
                }
                let k = 3 * n / m;
                if let Ok(p) = Params::new(m, n, k) {
                    let x = symbol_set(&p);
                    assert_eq!(x.len(), p.cells());
                    for v in x.iter() {
                        assert!(x.contains(-v));
                    }
                }
            }
        }
    }

    #[test]
    fn rectangle_set_rejections() {
        let mut rect = SparseRectangle::new(2, 2);
        rect.set(0, 0, 5).unwrap();
        assert!(matches!(
            rect.set(0, 0, 6),
            Err(Error::CellOccupied { .. })
        ));
        assert!(matches!(
            rect.set(2, 0, 1),
            Err(Error::CellOutOfRange { .. })
        ));
    }

    #[test]
    fn column_partition_of_3x2() {
        let rect = SparseRectangle::from_rows(&[vec![1, -1], vec![2, -2], vec![-3, 3]]);
        let p = column_partition(&rect).unwrap();
        assert_eq!(p.blocks()[0], Block::from_slice(&[1, 2, -3]));
        assert_eq!(p.blocks()[1], Block::from_slice(&[-1, -2, 3]));
    }

    #[test]
    fn column_partition_of_empty_grid() {
        let rect = SparseRectangle::new(3, 4);
        let p = column_partition(&rect).unwrap();
        assert_eq!(p.len(), 4);
        assert!(p.blocks().iter().all(Block::is_empty));
        assert!(p.ground().is_empty());
    }

    #[test]
    fn column_partition_rejects_duplicates() {
        let mut rect = SparseRectangle::new(1, 2);
        rect.set(0, 0, 7).unwrap();
        rect.set(0, 1, 7).unwrap();
        assert!(matches!(
            column_partition(&rect),
            Err(Error::DuplicateEntry { value: 7 })
        ));
    }

    #[test]
    fn block_negation() {
        let b = Block::from_slice(&[1, 13, -14]);
        assert_eq!(b.sum(), 0);
        assert_eq!(b.negated(), Block::from_slice(&[-1, -13, 14]));
        assert!(!b.is_negation_closed());
        assert!(b.union(&b.negated()).is_negation_closed());
    }
}
