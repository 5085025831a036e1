//! Exhaustive backtracking search over cell positions and values for small
//! signed and plain magic rectangle instances, plus a block-family search
//! used as a fallback when a closed-form seed family fails verification.
//!
//! The rectangle search fills row by row. Within a row it enumerates column
//! combinations in a fixed per-row order (columns that must be filled in
//! every remaining row first, then by descending remaining capacity) and
//! values in ascending magnitude with the positive sign first. Pruning uses
//! row-sum bounds from the extremes of the unused pool, column capacity
//! counting, and forced values for almost-complete columns and row ends.
//! The first value placed on any path is normalized non-negative, which is
//! sound for existence and refutation alike because negating every entry is
//! a solution symmetry; counting disables the normalization.
//!
//! "None exists" is only ever reported after the full tree has been
//! explored; running out of nodes or time yields a distinct outcome.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use crate::error::Error;
use crate::types::{symbol_set, Block, Params, RowSets, SparseRectangle};
use crate::verify::{verify_mr, verify_smr};

/// Node and wall-clock limits for one search call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_nodes: u64,
    pub max_millis: u64,
}

impl SearchBudget {
    pub fn new(max_nodes: u64, max_millis: u64) -> SearchBudget {
        assert!(max_nodes > 0 && max_millis > 0, "budget must be positive");
        SearchBudget {
            max_nodes,
            max_millis,
        }
    }
}

impl Default for SearchBudget {
    /// Ten million nodes, one minute: enough for every odd side length up
    /// to 15 and all the even desk-scale instances.
    fn default() -> SearchBudget {
        SearchBudget {
            max_nodes: 10_000_000,
            max_millis: 60_000,
        }
    }
}

/// Result of a bounded exhaustive search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome<T> {
    Found(T),
    /// The budget ran out before the tree was exhausted; says nothing about
    /// existence.
    BudgetExhausted,
    /// The full tree was explored and holds no solution.
    NoneExists,
}

impl<T> SearchOutcome<T> {
    pub fn found(self) -> Option<T> {
        match self {
            SearchOutcome::Found(t) => Some(t),
            _ => None,
        }
    }
}

/// Exact or saturated solution count from [`count_smr`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CountResult {
    Exact(u64),
    AtLeast(u64),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Signed,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Flow {
    Found,
    Exhausted,
    Abort,
}

struct RectSearch<'a> {
    params: &'a Params,
    row_target: i64,
    col_target: i64,
    /// Symbols in branch order: ascending magnitude, positive first.
    order: Vec<i32>,
    unused: BTreeSet<i32>,
    col_filled: Vec<usize>,
    col_sum: Vec<i64>,
    placed: Vec<(usize, usize, i32)>,
    /// Fixed cell pattern per row; `None` searches over patterns too.
    pattern: Option<&'a [Vec<usize>]>,
    normalize_sign: bool,
    counting: Option<u64>,
    count: u64,
    nodes: u64,
    budget: &'a SearchBudget,
    started: Instant,
}

impl<'a> RectSearch<'a> {
    fn new(params: &'a Params, kind: Kind, budget: &'a SearchBudget) -> RectSearch<'a> {
        let (order, row_target, col_target) = match kind {
            Kind::Signed => {
                let symbols = symbol_set(params);
                let mut order: Vec<i32> = symbols.iter().collect();
                order.sort_by_key(|&v| (v.abs(), v < 0));
                (order, 0, 0)
            }
            Kind::Plain => {
                let mk = params.cells() as i64;
                let total = mk * (mk - 1) / 2;
                let order: Vec<i32> = (0..params.cells() as i32).collect();
                // A fractional line target makes the equations unsatisfiable;
                // the root check in `run` refutes without any branching.
                let row_target = if total % params.m as i64 == 0 {
                    total / params.m as i64
                } else {
                    i64::MIN
                };
                let col_target = if total % params.n as i64 == 0 {
                    total / params.n as i64
                } else {
                    i64::MIN
                };
                (order, row_target, col_target)
            }
        };
        RectSearch {
            params,
            row_target,
            col_target,
            unused: order.iter().copied().collect(),
            order,
            col_filled: vec![0; params.n],
            col_sum: vec![0; params.n],
            placed: Vec::with_capacity(params.cells()),
            pattern: None,
            normalize_sign: kind == Kind::Signed,
            counting: None,
            count: 0,
            nodes: 0,
            budget,
            started: Instant::now(),
        }
    }

    fn charge_node(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes > self.budget.max_nodes {
            return false;
        }
        if self.nodes % 4096 == 0
            && self.started.elapsed().as_millis() as u64 > self.budget.max_millis
        {
            return false;
        }
        true
    }

    /// Min and max sums of `take` values from the unused pool, skipping `v`.
    fn unused_sum_bounds(&self, take: usize, skip: i32) -> Option<(i64, i64)> {
        let mut lo = 0i64;
        let mut got = 0;
        for &u in self.unused.iter() {
            if u == skip {
                continue;
            }
            lo += u as i64;
            got += 1;
            if got == take {
                break;
            }
        }
        if got < take {
            return None;
        }
        let mut hi = 0i64;
        got = 0;
        for &u in self.unused.iter().rev() {
            if u == skip {
                continue;
            }
            hi += u as i64;
            got += 1;
            if got == take {
                break;
            }
        }
        Some((lo, hi))
    }

    fn row_candidates(&self, row: usize) -> Vec<usize> {
        if let Some(pattern) = self.pattern {
            return pattern[row].clone();
        }
        let rows_left = self.params.m - row;
        let mut cols: Vec<usize> = (0..self.params.n)
            .filter(|&c| self.col_filled[c] < self.params.s)
            .collect();
        // Must-fill columns first, then the slackest ones.
        cols.sort_by_key(|&c| {
            let deficit = self.params.s - self.col_filled[c];
            (deficit != rows_left, std::cmp::Reverse(deficit), c)
        });
        cols
    }

    fn column_ok(&self, col: usize, v: i32) -> bool {
        let filled = self.col_filled[col] + 1;
        let sum = self.col_sum[col] + v as i64;
        if filled == self.params.s {
            return sum == self.col_target;
        }
        if filled + 1 == self.params.s {
            // The final value of this column is already determined.
            let needed = self.col_target - sum;
            if needed < i32::MIN as i64 || needed > i32::MAX as i64 {
                return false;
            }
            let needed = needed as i32;
            return needed != v && self.unused.contains(&needed);
        }
        true
    }

    fn place(&mut self, row: usize, col: usize, v: i32) {
        self.unused.remove(&v);
        self.col_filled[col] += 1;
        self.col_sum[col] += v as i64;
        self.placed.push((row, col, v));
    }

    fn unplace(&mut self) {
        let (_, col, v) = self.placed.pop().expect("place/unplace pairing");
        self.col_filled[col] -= 1;
        self.col_sum[col] -= v as i64;
        self.unused.insert(v);
    }

    fn solve_row(&mut self, row: usize) -> Flow {
        if row == self.params.m {
            if let Some(cap) = self.counting {
                self.count += 1;
                if self.count >= cap {
                    return Flow::Found;
                }
                return Flow::Exhausted;
            }
            return Flow::Found;
        }
        let rows_left = self.params.m - row;
        let mut must_fill = 0;
        for c in 0..self.params.n {
            let deficit = self.params.s - self.col_filled[c];
            if deficit > rows_left {
                return Flow::Exhausted;
            }
            if deficit == rows_left {
                must_fill += 1;
            }
        }
        if must_fill > self.params.k {
            return Flow::Exhausted;
        }
        let candidates = self.row_candidates(row);
        if candidates.len() < self.params.k {
            return Flow::Exhausted;
        }
        self.extend_row(row, &candidates, 0, 0, 0)
    }

    fn extend_row(
        &mut self,
        row: usize,
        candidates: &[usize],
        start: usize,
        picked: usize,
        row_sum: i64,
    ) -> Flow {
        if picked == self.params.k {
            debug_assert_eq!(row_sum, self.row_target);
            return self.solve_row(row + 1);
        }
        let remaining = self.params.k - picked;
        let rows_left = self.params.m - row;
        for pos in start..candidates.len() {
            if candidates.len() - pos < remaining {
                break;
            }
            match self.try_values(row, candidates, pos, picked, row_sum) {
                Flow::Exhausted => {}
                other => return other,
            }
            // A column needed by every remaining row cannot be skipped.
            if self.params.s - self.col_filled[candidates[pos]] == rows_left {
                break;
            }
        }
        Flow::Exhausted
    }

    fn try_values(
        &mut self,
        row: usize,
        candidates: &[usize],
        pos: usize,
        picked: usize,
        row_sum: i64,
    ) -> Flow {
        let after = self.params.k - picked - 1;
        let first_cell = self.placed.is_empty();
        if after == 0 {
            // Last cell of the row: its value is forced by the row sum.
            let needed = self.row_target - row_sum;
            if needed < i32::MIN as i64 || needed > i32::MAX as i64 {
                return Flow::Exhausted;
            }
            let v = needed as i32;
            if !self.unused.contains(&v) || (first_cell && self.normalize_sign && v < 0) {
                return Flow::Exhausted;
            }
            return self.attempt(row, candidates, pos, picked, row_sum, v);
        }
        for idx in 0..self.order.len() {
            let v = self.order[idx];
            if !self.unused.contains(&v) {
                continue;
            }
            if first_cell && self.normalize_sign && v < 0 {
                continue;
            }
            let partial = row_sum + v as i64;
            match self.unused_sum_bounds(after, v) {
                Some((lo, hi)) => {
                    if partial + lo > self.row_target || partial + hi < self.row_target {
                        continue;
                    }
                }
                None => return Flow::Exhausted,
            }
            match self.attempt(row, candidates, pos, picked, row_sum, v) {
                Flow::Exhausted => {}
                other => return other,
            }
        }
        Flow::Exhausted
    }

    fn attempt(
        &mut self,
        row: usize,
        candidates: &[usize],
        pos: usize,
        picked: usize,
        row_sum: i64,
        v: i32,
    ) -> Flow {
        let col = candidates[pos];
        if !self.column_ok(col, v) {
            return Flow::Exhausted;
        }
        if !self.charge_node() {
            return Flow::Abort;
        }
        self.place(row, col, v);
        let flow = self.extend_row(row, candidates, pos + 1, picked + 1, row_sum + v as i64);
        if matches!(flow, Flow::Found) {
            return flow;
        }
        self.unplace();
        flow
    }

    fn run(&mut self) -> SearchOutcome<SparseRectangle> {
        if self.row_target == i64::MIN || self.col_target == i64::MIN {
            return SearchOutcome::NoneExists;
        }
        match self.solve_row(0) {
            Flow::Found => {
                let mut rect = SparseRectangle::new(self.params.m, self.params.n);
                for &(r, c, v) in &self.placed {
                    rect.set(r, c, v).expect("search placements are distinct");
                }
                SearchOutcome::Found(rect)
            }
            Flow::Exhausted => SearchOutcome::NoneExists,
            Flow::Abort => SearchOutcome::BudgetExhausted,
        }
    }
}

fn gate<F>(outcome: SearchOutcome<SparseRectangle>, check: F) -> SearchOutcome<SparseRectangle>
where
    F: Fn(&SparseRectangle) -> bool,
{
    if let SearchOutcome::Found(rect) = &outcome {
        assert!(check(rect), "search produced an array its verifier rejects");
    }
    outcome
}

/// Searches for a signed magic rectangle matching `params`, which may be an
/// inadmissible probe built with [`Params::relaxed`].
pub fn search_smr(params: &Params, budget: &SearchBudget) -> SearchOutcome<SparseRectangle> {
    let mut search = RectSearch::new(params, Kind::Signed, budget);
    gate(search.run(), |rect| {
        verify_smr(rect, params).map(|r| r.passed()).unwrap_or(false)
    })
}

/// Searches for a plain magic rectangle: entries `0..mk`, constant row sums
/// and constant column sums.
pub fn search_mr(params: &Params, budget: &SearchBudget) -> SearchOutcome<SparseRectangle> {
    let mut search = RectSearch::new(params, Kind::Plain, budget);
    gate(search.run(), |rect| {
        verify_mr(rect, params).map(|r| r.passed()).unwrap_or(false)
    })
}

/// Signed search restricted to a fixed cell pattern (one column list per
/// row); only the values are branched on.
pub(crate) fn search_smr_on_pattern(
    params: &Params,
    pattern: &[Vec<usize>],
    budget: &SearchBudget,
) -> SearchOutcome<SparseRectangle> {
    assert_eq!(pattern.len(), params.m);
    assert!(pattern.iter().all(|cols| cols.len() == params.k));
    let mut search = RectSearch::new(params, Kind::Signed, budget);
    search.pattern = Some(pattern);
    gate(search.run(), |rect| {
        verify_smr(rect, params).map(|r| r.passed()).unwrap_or(false)
    })
}

/// Counts signed magic rectangles for `params` with no symmetry reduction,
/// saturating at `cap`.
///
/// Returns an exact count only when the full tree fit inside the budget;
/// exceeding the budget below `cap` is an error, never a wrong number.
pub fn count_smr(params: &Params, cap: u64, budget: &SearchBudget) -> Result<CountResult, Error> {
    assert!(cap > 0, "cap must be positive");
    let mut search = RectSearch::new(params, Kind::Signed, budget);
    search.normalize_sign = false;
    search.counting = Some(cap);
    match search.run() {
        SearchOutcome::Found(_) => Ok(CountResult::AtLeast(cap)),
        SearchOutcome::NoneExists => Ok(CountResult::Exact(search.count)),
        SearchOutcome::BudgetExhausted => Err(Error::SearchExhausted {
            what: format!(
                "count for {}x{} stopped at {} solutions after {} nodes",
                params.m, params.n, search.count, search.nodes
            ),
        }),
    }
}

/// How many blocks a family must contribute and how many members each of
/// its blocks takes from the three row sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FamilySpec {
    pub count: usize,
    pub quota: [usize; 3],
}

struct BlockSearch<'a> {
    ground: Vec<i32>,
    available: BTreeSet<i32>,
    column_of: &'a BTreeMap<i32, usize>,
    block_size: usize,
    specs: &'a [FamilySpec],
    rowsets: &'a RowSets,
    families: Vec<Vec<Block>>,
    nodes: u64,
    budget: &'a SearchBudget,
    started: Instant,
}

impl<'a> BlockSearch<'a> {
    fn charge(&mut self) -> bool {
        self.nodes += 1;
        self.nodes <= self.budget.max_nodes
            && (self.nodes % 1024 != 0
                || self.started.elapsed().as_millis() as u64 <= self.budget.max_millis)
    }

    fn rowset_index(&self, v: i32) -> Option<usize> {
        self.rowsets.row_of(v).map(|row| row as usize - 1)
    }

    fn solve(&mut self, family: usize, pairs_left: usize, floor: i32) -> Flow {
        if pairs_left == 0 {
            let next = family + 1;
            if next == self.specs.len() {
                return Flow::Found;
            }
            self.families.push(Vec::new());
            let flow = self.solve(next, self.specs[next].count / 2, i32::MIN);
            if !matches!(flow, Flow::Found) {
                self.families.pop();
            }
            return flow;
        }
        let mut prefix = Vec::with_capacity(self.block_size);
        let mut counts = [0usize; 3];
        self.pick_element(family, pairs_left, floor, &mut prefix, &mut counts, 0)
    }

    fn pick_element(
        &mut self,
        family: usize,
        pairs_left: usize,
        floor: i32,
        prefix: &mut Vec<i32>,
        counts: &mut [usize; 3],
        sum: i64,
    ) -> Flow {
        let spec = self.specs[family];
        if prefix.len() + 1 == self.block_size {
            // Zero sum forces the last element.
            let needed = -sum;
            if needed < i32::MIN as i64 || needed > i32::MAX as i64 {
                return Flow::Exhausted;
            }
            let v = needed as i32;
            if v <= *prefix.last().expect("block size >= 2") || !self.available.contains(&v) {
                return Flow::Exhausted;
            }
            return self.complete_block(family, pairs_left, prefix, counts, v);
        }
        for idx in 0..self.ground.len() {
            let v = self.ground[idx];
            // Base blocks of one family are ordered by ascending first
            // element; disjointness makes that a total order.
            if prefix.is_empty() && v <= floor {
                continue;
            }
            if let Some(&last) = prefix.last() {
                if v <= last {
                    continue;
                }
            }
            if !self.available.contains(&v) {
                continue;
            }
            let row = match self.rowset_index(v) {
                Some(i) => i,
                None => continue,
            };
            if counts[row] == spec.quota[row] {
                continue;
            }
            counts[row] += 1;
            prefix.push(v);
            let flow =
                self.pick_element(family, pairs_left, floor, prefix, counts, sum + v as i64);
            prefix.pop();
            counts[row] -= 1;
            if !matches!(flow, Flow::Exhausted) {
                return flow;
            }
        }
        Flow::Exhausted
    }

    fn complete_block(
        &mut self,
        family: usize,
        pairs_left: usize,
        prefix: &[i32],
        counts: &[usize; 3],
        last: i32,
    ) -> Flow {
        let spec = self.specs[family];
        // Canonical representative of the pair {B, -B}: the one whose
        // minimum is strictly more negative. Without 0 in the ground set a
        // zero-sum block can never equal its own negation.
        if prefix[0] + last >= 0 {
            return Flow::Exhausted;
        }
        let mut counts = *counts;
        match self.rowset_index(last) {
            Some(i) => {
                counts[i] += 1;
                if counts != spec.quota {
                    return Flow::Exhausted;
                }
            }
            None => return Flow::Exhausted,
        }
        let mut members: Vec<i32> = prefix.to_vec();
        members.push(last);
        if members.iter().any(|&v| members.contains(&-v)) {
            return Flow::Exhausted;
        }
        if members.iter().any(|&v| !self.available.contains(&-v)) {
            return Flow::Exhausted;
        }
        // Both the block and its negation must meet every base column at
        // most once.
        for negate in [false, true] {
            let mut cols = BTreeSet::new();
            for &v in &members {
                let v = if negate { -v } else { v };
                match self.column_of.get(&v) {
                    Some(&c) => {
                        if !cols.insert(c) {
                            return Flow::Exhausted;
                        }
                    }
                    None => return Flow::Exhausted,
                }
            }
        }
        if !self.charge() {
            return Flow::Abort;
        }
        for &v in &members {
            self.available.remove(&v);
            self.available.remove(&-v);
        }
        let block = Block::from_slice(&members);
        let negated = block.negated();
        self.families[family].push(block);
        self.families[family].push(negated);
        let flow = self.solve(family, pairs_left - 1, members[0]);
        if !matches!(flow, Flow::Found) {
            self.families[family].pop();
            self.families[family].pop();
            for &v in &members {
                self.available.insert(v);
                self.available.insert(-v);
            }
        }
        flow
    }
}

/// Searches for pairwise disjoint zero-sum blocks of the given size over
/// `ground`, grouped into families per `specs`: each family is closed under
/// blockwise negation, each block draws the prescribed number of members
/// from each row set, and neither a block nor its negation meets any base
/// column twice.
///
/// Families with an unsatisfiable quota, or an odd block count (closure
/// would need a self-negating block, impossible without 0 in the ground),
/// are refuted immediately.
pub fn search_zero_sum_blocks(
    ground: &Block,
    block_size: usize,
    column_of: &BTreeMap<i32, usize>,
    specs: &[FamilySpec],
    rowsets: &RowSets,
    budget: &SearchBudget,
) -> SearchOutcome<Vec<Vec<Block>>> {
    assert!(block_size >= 2);
    if specs.is_empty() {
        return SearchOutcome::Found(Vec::new());
    }
    for spec in specs {
        if spec.quota.iter().sum::<usize>() != block_size || spec.count % 2 != 0 {
            return SearchOutcome::NoneExists;
        }
    }
    let mut search = BlockSearch {
        ground: ground.iter().collect(),
        available: ground.iter().collect(),
        column_of,
        block_size,
        specs,
        rowsets,
        families: vec![Vec::new()],
        nodes: 0,
        budget,
        started: Instant::now(),
    };
    match search.solve(0, specs[0].count / 2, i32::MIN) {
        Flow::Found => SearchOutcome::Found(search.families),
        Flow::Exhausted => SearchOutcome::NoneExists,
        Flow::Abort => SearchOutcome::BudgetExhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::base::{row_sets, smr3_even};

    fn budget() -> SearchBudget {
        SearchBudget::default()
    }

    #[test]
    fn finds_3x2_full() {
        let params = Params::relaxed(3, 2, 2, 3);
        let rect = search_smr(&params, &budget()).found().expect("exists");
        assert!(verify_smr(&rect, &params).unwrap().passed());
    }

    #[test]
    fn finds_3x4_full() {
        let params = Params::new(3, 4, 4).unwrap();
        let rect = search_smr(&params, &budget()).found().expect("exists");
        assert!(verify_smr(&rect, &params).unwrap().passed());
    }

    #[test]
    fn refutes_3x3_with_two_per_row() {
        let params = Params::relaxed(3, 3, 2, 2);
        assert_eq!(search_smr(&params, &budget()), SearchOutcome::NoneExists);
    }

    #[test]
    fn finds_mr_3x3() {
        let params = Params::relaxed(3, 3, 3, 3);
        let rect = search_mr(&params, &budget()).found().expect("exists");
        let report = verify_mr(&rect, &params).unwrap();
        assert!(report.passed(), "{}", report.summary());
        let sum: i32 = rect.row_values(0).iter().sum();
        assert_eq!(sum, 12);
    }

    #[test]
    fn refutes_mr_2x2() {
        let params = Params::relaxed(2, 2, 2, 2);
        assert_eq!(search_mr(&params, &budget()), SearchOutcome::NoneExists);
    }

    #[test]
    fn search_is_deterministic() {
        let params = Params::new(3, 4, 4).unwrap();
        let a = search_smr(&params, &budget()).found().unwrap();
        let b = search_smr(&params, &budget()).found().unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn count_tiny_instances() {
        let params = Params::relaxed(3, 2, 2, 3);
        let exact = count_smr(&params, 1_000, &budget()).unwrap();
        assert!(matches!(exact, CountResult::Exact(c) if c >= 1));
        let params = Params::relaxed(3, 3, 2, 2);
        assert_eq!(
            count_smr(&params, 10, &budget()).unwrap(),
            CountResult::Exact(0)
        );
    }

    #[test]
    fn block_search_matches_small_family() {
        let rs = row_sets(10).unwrap();
        let base = smr3_even(10).unwrap();
        let column_of = base.column_of_value().unwrap();
        let spec = [FamilySpec {
            count: 2,
            quota: [0, 0, 3],
        }];
        let found = search_zero_sum_blocks(&rs.r3, 3, &column_of, &spec, &rs, &budget())
            .found()
            .expect("a two-block family exists");
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].len(), 2);
        for block in &found[0] {
            assert_eq!(block.sum(), 0);
            assert!(block.iter().all(|v| rs.r3.contains(v)));
        }
    }

    #[test]
    fn block_search_rejects_impossible_quota() {
        let rs = row_sets(10).unwrap();
        let base = smr3_even(10).unwrap();
        let column_of = base.column_of_value().unwrap();
        let spec = [FamilySpec {
            count: 2,
            quota: [4, 0, 0],
        }];
        assert_eq!(
            search_zero_sum_blocks(&rs.r1, 3, &column_of, &spec, &rs, &budget()),
            SearchOutcome::NoneExists
        );
    }

    #[test]
    fn block_search_finds_paired_families() {
        // The shape of the first two seed families for (n,k) = (10,5).
        let rs = row_sets(10).unwrap();
        let base = smr3_even(10).unwrap();
        let column_of = base.column_of_value().unwrap();
        let ground = rs.r1.union(&rs.r2);
        let specs = [
            FamilySpec {
                count: 2,
                quota: [1, 2, 0],
            },
            FamilySpec {
                count: 2,
                quota: [2, 1, 0],
            },
        ];
        let families = search_zero_sum_blocks(&ground, 3, &column_of, &specs, &rs, &budget())
            .found()
            .expect("families exist");
        let params = Params::relaxed(6, 10, 5, 3);
        let report = crate::verify::verify_s12(&families[0], &families[1], &rs, &params);
        assert!(report.passed(), "{}", report.summary());
    }
}
