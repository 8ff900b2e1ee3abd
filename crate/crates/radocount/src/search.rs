//! Extremal-coloring search.
//!
//! Four strategies, all exact about what they report:
//! - [`exhaustive`] — every coloring (optionally restricted to fixed
//!   per-color counts), visited in an order where consecutive colorings
//!   differ in one cell so the objective updates incrementally;
//! - [`local_search`] — steepest single-flip descent/ascent with seeded
//!   random restarts; heuristic, flagged as such in the report;
//! - [`block_sweep`] — exact evaluation of every block coloring of a fixed
//!   color pattern with boundaries on a grid.
//!
//! Reports distinguish `explored` (colorings the result is valid for,
//! counting symmetry images) from `evaluated` (objective evaluations
//! actually performed); the two differ only under the color-swap reduction.

use std::collections::BTreeSet;
use std::time::Instant;

use rand_core::{RngCore, SeedableRng};
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::counting::{class_deltas, count_classes};
use crate::equations::Equation;
use crate::packed::fast_mono_count;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("search space of {needed} evaluations exceeds budget {budget}")]
    BudgetExceeded { needed: u128, budget: u64 },
    #[error("infeasible constraint: {0}")]
    InfeasibleConstraint(String),
    #[error("objective not valid here: {0}")]
    BadObjective(String),
    #[error("bad block pattern: {0}")]
    BadPattern(String),
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ObjectiveClass {
    Mono,
    Rainbow,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Min,
    Max,
}

/// What to optimize: one class count of one equation, minimized or
/// maximized.  Rainbow objectives need 3 colors and a 3-variable equation.
#[derive(Clone, Copy, Debug)]
pub struct Objective {
    pub equation: Equation,
    pub class: ObjectiveClass,
    pub direction: Direction,
}

impl Objective {
    pub fn new(equation: Equation, class: ObjectiveClass, direction: Direction) -> Objective {
        Objective { equation, class, direction }
    }

    fn check(&self, r: u8) -> Result<(), SearchError> {
        if self.class == ObjectiveClass::Rainbow {
            if r != 3 {
                return Err(SearchError::BadObjective(format!(
                    "rainbow objective needs r=3, got r={r}"
                )));
            }
            if !self.equation.supports_rainbow() {
                return Err(SearchError::BadObjective(format!(
                    "rainbow objective undefined for {}",
                    self.equation
                )));
            }
        }
        Ok(())
    }

    fn better(&self, a: u64, b: u64) -> bool {
        match self.direction {
            Direction::Min => a < b,
            Direction::Max => a > b,
        }
    }

    /// Exact objective value of one coloring.
    pub fn eval(&self, coloring: &Coloring) -> u64 {
        match self.class {
            ObjectiveClass::Mono => fast_mono_count(&self.equation, coloring),
            ObjectiveClass::Rainbow => count_classes(&self.equation, coloring).rainbow,
        }
    }

    fn delta(&self, coloring: &Coloring, pos: usize, color: Color) -> i64 {
        let d = class_deltas(&self.equation, coloring, pos, color)
            .expect("in-range flip");
        match self.class {
            ObjectiveClass::Mono => d.mono,
            ObjectiveClass::Rainbow => d.rainbow,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SearchConfig {
    /// Maximum number of objective evaluations an exhaustive or sweep run
    /// may take; the run refuses up front instead of truncating.
    pub budget: u64,
    pub threads: usize,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 1 << 30, threads: 1 }
    }
}

/// Search result.  Every witness re-evaluates to `best_value` (asserted
/// before the report is returned); witnesses are the lexicographically
/// smallest cell sequences among the optima, capped at 16, deduplicated
/// under color swap when the color-swap reduction applied.
#[derive(Clone, Debug, Serialize)]
pub struct ExtremumReport {
    pub best_value: u64,
    pub witnesses: Vec<Coloring>,
    pub explored: u64,
    pub evaluated: u64,
    pub constraint: Option<Vec<u64>>,
    pub heuristic: bool,
    pub wall_seconds: f64,
}

const WITNESS_CAP: usize = 16;

#[derive(Default)]
struct Best {
    value: Option<u64>,
    witnesses: BTreeSet<Vec<u8>>,
}

impl Best {
    fn offer(&mut self, objective: &Objective, value: u64, cells: &[u8]) {
        match self.value {
            Some(v) if objective.better(value, v) => {
                self.value = Some(value);
                self.witnesses.clear();
                self.witnesses.insert(cells.to_vec());
            }
            Some(v) if v == value => {
                self.witnesses.insert(cells.to_vec());
                while self.witnesses.len() > WITNESS_CAP {
                    self.witnesses.pop_last();
                }
            }
            Some(_) => {}
            None => {
                self.value = Some(value);
                self.witnesses.insert(cells.to_vec());
            }
        }
    }

    fn merge(&mut self, objective: &Objective, other: Best) {
        if let Some(v) = other.value {
            for w in &other.witnesses {
                self.offer(objective, v, w);
            }
        }
    }

    fn into_report(
        self,
        objective: &Objective,
        r: u8,
        explored: u64,
        evaluated: u64,
        constraint: Option<Vec<u64>>,
        heuristic: bool,
        started: Instant,
    ) -> ExtremumReport {
        let best_value = self.value.expect("nonempty search space");
        let witnesses: Vec<Coloring> = self
            .witnesses
            .into_iter()
            .map(|cells| {
                Coloring::new(r, cells.into_iter().map(Color).collect()).expect("valid witness")
            })
            .collect();
        for w in &witnesses {
            let counts = count_classes(&objective.equation, w);
            let v = match objective.class {
                ObjectiveClass::Mono => counts.mono,
                ObjectiveClass::Rainbow => counts.rainbow,
            };
            assert_eq!(v, best_value, "witness must reproduce the reported optimum");
        }
        ExtremumReport {
            best_value,
            witnesses,
            explored,
            evaluated,
            constraint,
            heuristic,
            wall_seconds: started.elapsed().as_secs_f64(),
        }
    }
}

fn checked_pow(r: u128, n: u32) -> u128 {
    r.checked_pow(n).unwrap_or(u128::MAX)
}

/// Exact optimum over all r-colorings of `[1, n]`, or over all colorings
/// with exactly `constraint[c]` cells of color c.
///
/// Unconstrained enumeration walks a reflected Gray order (binary for r=2,
/// mixed-radix for r=3) so each step is one cell flip and one incremental
/// delta.  For 2-color mono objectives the first cell is pinned to R and
/// each evaluation stands for its color-swapped image as well (`explored`
/// = 2 * `evaluated`); mono counts are invariant under the swap, which the
/// test suite checks as its own property.  Constrained enumeration visits
/// the distinct permutations of the cell multiset in lexicographic order
/// and evaluates each coloring fresh.
pub fn exhaustive(
    n: usize,
    r: u8,
    objective: &Objective,
    constraint: Option<&[u64]>,
    config: &SearchConfig,
) -> Result<ExtremumReport, SearchError> {
    assert!(n >= 1 && (2..=3).contains(&r));
    objective.check(r)?;
    let started = Instant::now();

    if let Some(counts) = constraint {
        return constrained_exhaustive(n, r, objective, counts, config, started);
    }

    // color-swap reduction applies to 2-color mono objectives only
    let reduce = r == 2 && objective.class == ObjectiveClass::Mono && n >= 1;
    let free_lo = if reduce { 2 } else { 1 };
    let evaluated_total = checked_pow(r as u128, (n + 1 - free_lo) as u32);
    if evaluated_total > config.budget as u128 {
        return Err(SearchError::BudgetExceeded {
            needed: evaluated_total,
            budget: config.budget,
        });
    }
    let explored_total = checked_pow(r as u128, n as u32) as u64;

    // partition by fixing the topmost cells, one sub-enumeration per
    // assignment, distributed round-robin over workers
    let threads = config.threads.max(1);
    let mut fixed_hi = 0usize; // number of topmost fixed cells
    while threads > 1
        && (r as usize).pow(fixed_hi as u32) < 4 * threads
        && n - fixed_hi > free_lo.max(1)
    {
        fixed_hi += 1;
    }
    let assignments = (r as u64).pow(fixed_hi as u32);
    let free_count = n + 1 - free_lo - fixed_hi;

    let run_assignment = |assignment: u64| -> Best {
        let mut cells = vec![Color::R; n];
        let mut idx = assignment;
        for i in 0..fixed_hi {
            cells[n - 1 - i] = Color((idx % r as u64) as u8);
            idx /= r as u64;
        }
        let mut coloring = Coloring::new(r, cells).expect("valid start");
        let mut value = objective.eval(&coloring) as i64;
        let mut best = Best::default();
        best.offer(objective, value as u64, coloring.cell_bytes());

        let flip_to = |coloring: &mut Coloring, value: &mut i64, pos: usize, color: Color| {
            *value += objective.delta(coloring, pos, color);
            coloring.set(pos, color);
        };

        if r == 2 {
            for step in 1u64..(1u64 << free_count) {
                let bit = step.trailing_zeros() as usize;
                let pos = free_lo + bit;
                let color = Color(1 - coloring.color_at(pos).0);
                flip_to(&mut coloring, &mut value, pos, color);
                best.offer(objective, value as u64, coloring.cell_bytes());
            }
        } else {
            // loopless reflected mixed-radix Gray walk: each step moves one
            // digit by +-1, so the cell changes color by a single flip
            let m = free_count;
            let mut digit = vec![0u8; m];
            let mut focus: Vec<usize> = (0..=m).collect();
            let mut dir = vec![1i8; m];
            loop {
                let j = focus[0];
                focus[0] = 0;
                if j == m {
                    break;
                }
                let next = (digit[j] as i8 + dir[j]) as u8;
                digit[j] = next;
                let pos = free_lo + j;
                flip_to(&mut coloring, &mut value, pos, Color(next));
                best.offer(objective, value as u64, coloring.cell_bytes());
                if next == 0 || next == r - 1 {
                    dir[j] = -dir[j];
                    focus[j] = focus[j + 1];
                    focus[j + 1] = j + 1;
                }
            }
        }
        best
    };

    let mut best = Best::default();
    if threads <= 1 || assignments == 1 {
        for assignment in 0..assignments {
            best.merge(objective, run_assignment(assignment));
        }
    } else {
        let results: Vec<Best> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    let run = &run_assignment;
                    scope.spawn(move || {
                        let mut acc = Best::default();
                        let mut a = w as u64;
                        while a < assignments {
                            let sub = run(a);
                            if let Some(v) = sub.value {
                                for wit in &sub.witnesses {
                                    acc.offer(objective, v, wit);
                                }
                            }
                            a += threads as u64;
                        }
                        acc
                    })
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("worker panicked")).collect()
        });
        for sub in results {
            best.merge(objective, sub);
        }
    }

    Ok(best.into_report(
        objective,
        r,
        explored_total,
        evaluated_total as u64,
        None,
        false,
        started,
    ))
}

/// Number of distinct cell sequences with the given per-color counts.
fn multiset_size(counts: &[u64]) -> u128 {
    let n: u64 = counts.iter().sum();
    let mut size: u128 = 1;
    let mut remaining = n;
    for &c in counts {
        // multiply C(remaining, c) in, factor by factor
        for i in 0..c {
            size = size.saturating_mul((remaining - i) as u128) / (i + 1) as u128;
        }
        remaining -= c;
    }
    size
}

fn constrained_exhaustive(
    n: usize,
    r: u8,
    objective: &Objective,
    counts: &[u64],
    config: &SearchConfig,
    started: Instant,
) -> Result<ExtremumReport, SearchError> {
    if counts.len() != r as usize {
        return Err(SearchError::InfeasibleConstraint(format!(
            "need {r} per-color counts, got {}",
            counts.len()
        )));
    }
    if counts.iter().sum::<u64>() != n as u64 {
        return Err(SearchError::InfeasibleConstraint(format!(
            "counts {counts:?} do not sum to n={n}"
        )));
    }
    let space = multiset_size(counts);
    if space > config.budget as u128 {
        return Err(SearchError::BudgetExceeded { needed: space, budget: config.budget });
    }

    // lexicographic multiset permutations, starting from sorted cells
    let mut cells: Vec<u8> = Vec::with_capacity(n);
    for (c, &k) in counts.iter().enumerate() {
        cells.extend(std::iter::repeat(c as u8).take(k as usize));
    }
    let mut best = Best::default();
    let mut evaluated = 0u64;
    loop {
        let coloring =
            Coloring::new(r, cells.iter().map(|&c| Color(c)).collect()).expect("valid cells");
        best.offer(objective, objective.eval(&coloring), coloring.cell_bytes());
        evaluated += 1;
        if !next_permutation(&mut cells) {
            break;
        }
    }
    debug_assert_eq!(evaluated as u128, space);

    Ok(best.into_report(
        objective,
        r,
        evaluated,
        evaluated,
        Some(counts.to_vec()),
        false,
        started,
    ))
}

/// Advance to the lexicographically next permutation; false after the last.
fn next_permutation(seq: &mut [u8]) -> bool {
    if seq.len() < 2 {
        return false;
    }
    let mut i = seq.len() - 1;
    while i > 0 && seq[i - 1] >= seq[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = seq.len() - 1;
    while seq[j] <= seq[i - 1] {
        j -= 1;
    }
    seq.swap(i - 1, j);
    seq[i..].reverse();
    true
}

/// Steepest single-flip descent (ascent for max objectives) to a local
/// optimum, from an all-R start plus `restarts` seeded random starts.
/// Ties among equally steepest moves break toward the first (position,
/// color) in scan order; the walk stops when no flip strictly improves.
/// The report is flagged heuristic: the value is an optimum certificate
/// for nothing beyond the visited neighborhoods.
pub fn local_search(
    n: usize,
    r: u8,
    objective: &Objective,
    restarts: u32,
    seed: u64,
) -> Result<ExtremumReport, SearchError> {
    assert!(n >= 1 && (2..=3).contains(&r));
    objective.check(r)?;
    let started = Instant::now();
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut best = Best::default();
    let mut evaluated = 0u64;

    for start in 0..=restarts {
        let cells: Vec<Color> = if start == 0 {
            vec![Color::R; n]
        } else {
            (0..n).map(|_| Color((rng.next_u32() % r as u32) as u8)).collect()
        };
        let mut coloring = Coloring::new(r, cells).expect("valid start");
        let mut value = objective.eval(&coloring) as i64;
        evaluated += 1;
        loop {
            let mut move_choice: Option<(usize, Color, i64)> = None;
            for pos in 1..=n {
                let current = coloring.color_at(pos);
                for c in 0..r {
                    let color = Color(c);
                    if color == current {
                        continue;
                    }
                    let d = objective.delta(&coloring, pos, color);
                    evaluated += 1;
                    let improving = match objective.direction {
                        Direction::Min => d < 0,
                        Direction::Max => d > 0,
                    };
                    if !improving {
                        continue;
                    }
                    let steeper = match (&move_choice, objective.direction) {
                        (None, _) => true,
                        (Some((_, _, bd)), Direction::Min) => d < *bd,
                        (Some((_, _, bd)), Direction::Max) => d > *bd,
                    };
                    if steeper {
                        move_choice = Some((pos, color, d));
                    }
                }
            }
            match move_choice {
                Some((pos, color, d)) => {
                    coloring.set(pos, color);
                    value += d;
                }
                None => break,
            }
        }
        best.offer(objective, value as u64, coloring.cell_bytes());
    }

    Ok(best.into_report(objective, r, evaluated, evaluated, None, true, started))
}

/// Exact objective at every realization of a block color pattern with
/// boundaries on the grid `{0, g, 2g, ...} ∪ {n}`.  A pattern of k blocks
/// has k-1 nondecreasing boundaries; empty blocks are allowed (so coarser
/// patterns are included).  Returns the grid optimum.
pub fn block_sweep(
    n: usize,
    objective: &Objective,
    pattern: &[Color],
    granularity: usize,
    config: &SearchConfig,
) -> Result<ExtremumReport, SearchError> {
    assert!(n >= 1);
    if pattern.is_empty() || pattern.len() > 4 {
        return Err(SearchError::BadPattern(format!(
            "pattern must have 1..=4 blocks, got {}",
            pattern.len()
        )));
    }
    let g = granularity.max(1);
    let r = if pattern.contains(&Color::G) { 3 } else { 2 };
    objective.check(r)?;
    let started = Instant::now();

    let mut grid: Vec<usize> = (0..=n).step_by(g).collect();
    if *grid.last().unwrap() != n {
        grid.push(n);
    }
    let k = pattern.len();
    let m = grid.len() as u128;
    // nondecreasing (k-1)-tuples over the grid
    let tuples: u128 = match k {
        1 => 1,
        2 => m,
        3 => m * (m + 1) / 2,
        _ => m * (m + 1) * (m + 2) / 6,
    };
    if tuples > config.budget as u128 {
        return Err(SearchError::BudgetExceeded { needed: tuples, budget: config.budget });
    }

    let mut best = Best::default();
    let mut evaluated = 0u64;
    let mut step = |bounds: &[usize]| {
        let mut cells = vec![Color::R; n];
        for (block, &color) in pattern.iter().enumerate() {
            for cell in cells.iter_mut().take(bounds[block + 1]).skip(bounds[block]) {
                *cell = color;
            }
        }
        let coloring = Coloring::new(r, cells).expect("valid block coloring");
        evaluated += 1;
        best.offer(objective, objective.eval(&coloring), coloring.cell_bytes());
    };

    let idxs = grid.len();
    match k {
        1 => step(&[0, n]),
        2 => {
            for &b1 in &grid {
                step(&[0, b1, n]);
            }
        }
        3 => {
            for i in 0..idxs {
                for j in i..idxs {
                    step(&[0, grid[i], grid[j], n]);
                }
            }
        }
        _ => {
            for i in 0..idxs {
                for j in i..idxs {
                    for l in j..idxs {
                        step(&[0, grid[i], grid[j], grid[l], n]);
                    }
                }
            }
        }
    }
    drop(step);

    Ok(best.into_report(objective, r, evaluated, evaluated, None, false, started))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn min_mono(eq: Equation) -> Objective {
        Objective::new(eq, ObjectiveClass::Mono, Direction::Min)
    }

    #[test]
    fn exhaustive_tiny_frozen() {
        let obj = min_mono(Equation::schur());
        let rep = exhaustive(2, 2, &obj, None, &SearchConfig::default()).unwrap();
        assert_eq!(rep.best_value, 0);
        assert_eq!(rep.explored, 4);
        assert_eq!(rep.evaluated, 2);

        let rep = exhaustive(5, 2, &obj, None, &SearchConfig::default()).unwrap();
        assert_eq!(rep.best_value, 1);
        // n=12 minimum, and the reduction report shape
        let rep = exhaustive(12, 2, &obj, None, &SearchConfig::default()).unwrap();
        assert_eq!(rep.best_value, 6);
        assert_eq!(rep.explored, 1 << 12);
        assert_eq!(rep.evaluated, 1 << 11);
        assert!(rep.witnesses.len() <= 16);
        for w in &rep.witnesses {
            assert_eq!(w.color_at(1), Color::R);
        }
    }

    #[test]
    fn exhaustive_matches_full_recount_small() {
        // Gray-walk incremental values vs evaluating every coloring from
        // scratch, r=2 and r=3
        for (n, r) in [(7usize, 2u8), (8, 2), (5, 3), (6, 3)] {
            for eq in [Equation::schur(), Equation::schur_like(2).unwrap()] {
                for direction in [Direction::Min, Direction::Max] {
                    let obj = Objective::new(eq, ObjectiveClass::Mono, direction);
                    let rep = exhaustive(n, r, &obj, None, &SearchConfig::default()).unwrap();
                    let mut best: Option<u64> = None;
                    let total = (r as u64).pow(n as u32);
                    for code in 0..total {
                        let mut cells = Vec::with_capacity(n);
                        let mut idx = code;
                        for _ in 0..n {
                            cells.push(Color((idx % r as u64) as u8));
                            idx /= r as u64;
                        }
                        let c = Coloring::new(r, cells).unwrap();
                        let v = count_classes(&eq, &c).mono;
                        best = Some(match best {
                            None => v,
                            Some(b) if obj.better(v, b) => v,
                            Some(b) => b,
                        });
                    }
                    assert_eq!(rep.best_value, best.unwrap(), "{eq} n={n} r={r} {direction:?}");
                }
            }
        }
    }

    #[test]
    fn exhaustive_rainbow_small() {
        let obj = Objective::new(Equation::schur(), ObjectiveClass::Rainbow, Direction::Max);
        let rep = exhaustive(6, 3, &obj, None, &SearchConfig::default()).unwrap();
        // brute check
        let mut best = 0;
        for code in 0..3u64.pow(6) {
            let mut cells = Vec::new();
            let mut idx = code;
            for _ in 0..6 {
                cells.push(Color((idx % 3) as u8));
                idx /= 3;
            }
            let c = Coloring::new(3, cells).unwrap();
            best = best.max(count_classes(&Equation::schur(), &c).rainbow);
        }
        assert_eq!(rep.best_value, best);
        assert_eq!(rep.evaluated, 3u64.pow(6));

        // rainbow with r=2 refuses
        assert!(exhaustive(6, 2, &obj, None, &SearchConfig::default()).is_err());
        // rainbow for the 4-variable family refuses
        let obj4 = Objective::new(Equation::four_var(), ObjectiveClass::Rainbow, Direction::Max);
        assert!(exhaustive(6, 3, &obj4, None, &SearchConfig::default()).is_err());
    }

    #[test]
    fn exhaustive_budget_refusal() {
        let obj = min_mono(Equation::schur());
        let config = SearchConfig { budget: 1 << 10, threads: 1 };
        let err = exhaustive(20, 2, &obj, None, &config).unwrap_err();
        assert!(matches!(err, SearchError::BudgetExceeded { .. }));
    }

    #[test]
    fn exhaustive_threads_agree() {
        let obj = min_mono(Equation::schur());
        let single = exhaustive(10, 2, &obj, None, &SearchConfig::default()).unwrap();
        let multi = exhaustive(
            10,
            2,
            &obj,
            None,
            &SearchConfig { budget: 1 << 30, threads: 4 },
        )
        .unwrap();
        assert_eq!(single.best_value, multi.best_value);
        assert_eq!(single.evaluated, multi.evaluated);
        let w1: Vec<String> = single.witnesses.iter().map(|w| w.to_string()).collect();
        let w2: Vec<String> = multi.witnesses.iter().map(|w| w.to_string()).collect();
        assert_eq!(w1, w2);

        let obj3 = Objective::new(Equation::schur(), ObjectiveClass::Mono, Direction::Min);
        let s3 = exhaustive(7, 3, &obj3, None, &SearchConfig::default()).unwrap();
        let m3 = exhaustive(7, 3, &obj3, None, &SearchConfig { budget: 1 << 30, threads: 3 })
            .unwrap();
        assert_eq!(s3.best_value, m3.best_value);
    }

    #[test]
    fn constrained_exhaustive_counts_and_union() {
        let obj = min_mono(Equation::schur());
        let n = 6;
        // union over all feasible constraints equals the unconstrained optimum
        let unconstrained = exhaustive(n, 2, &obj, None, &SearchConfig::default()).unwrap();
        let mut best_over_constraints = u64::MAX;
        let mut space_total = 0u64;
        for blue in 0..=n as u64 {
            let rep = exhaustive(
                n,
                2,
                &obj,
                Some(&[n as u64 - blue, blue]),
                &SearchConfig::default(),
            )
            .unwrap();
            best_over_constraints = best_over_constraints.min(rep.best_value);
            space_total += rep.evaluated;
            assert_eq!(rep.constraint, Some(vec![n as u64 - blue, blue]));
        }
        assert_eq!(best_over_constraints, unconstrained.best_value);
        assert_eq!(space_total, 1 << n);

        // infeasible constraints refuse
        assert!(exhaustive(n, 2, &obj, Some(&[1, 2]), &SearchConfig::default()).is_err());
        assert!(exhaustive(n, 2, &obj, Some(&[6]), &SearchConfig::default()).is_err());
    }

    #[test]
    fn multiset_sizes() {
        assert_eq!(multiset_size(&[3, 3]), 20);
        assert_eq!(multiset_size(&[10, 10]), 184_756);
        assert_eq!(multiset_size(&[2, 2, 2]), 90);
        assert_eq!(multiset_size(&[0, 5]), 1);
    }

    #[test]
    fn next_permutation_walks_multisets() {
        let mut seq = vec![0u8, 0, 1, 1];
        let mut seen = vec![seq.clone()];
        while next_permutation(&mut seq) {
            seen.push(seq.clone());
        }
        assert_eq!(seen.len(), 6);
        assert_eq!(seen.first().unwrap(), &vec![0, 0, 1, 1]);
        assert_eq!(seen.last().unwrap(), &vec![1, 1, 0, 0]);
        let mut sorted = seen.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 6);
    }

    #[test]
    fn local_search_descends_and_is_seeded() {
        let obj = min_mono(Equation::schur());
        // never better than the exhaustive optimum, never worse than the
        // all-red start
        let exact = exhaustive(10, 2, &obj, None, &SearchConfig::default()).unwrap();
        let local = local_search(10, 2, &obj, 5, 7).unwrap();
        assert!(local.heuristic);
        assert!(local.best_value >= exact.best_value);
        assert!(local.best_value <= Equation::schur().total_count(10));

        let again = local_search(10, 2, &obj, 5, 7).unwrap();
        assert_eq!(local.best_value, again.best_value);
        assert_eq!(
            local.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            again.witnesses.iter().map(|w| w.to_string()).collect::<Vec<_>>()
        );

        // restarts=0: single descent from all-red
        let single = local_search(5, 2, &obj, 0, 1).unwrap();
        assert!(single.best_value <= 6);
    }

    #[test]
    fn block_sweep_basics() {
        let obj = min_mono(Equation::schur());
        // single all-blue block: the only coloring, value = total
        let rep = block_sweep(9, &obj, &[Color::B], 1, &SearchConfig::default()).unwrap();
        assert_eq!(rep.best_value, Equation::schur().total_count(9));
        assert_eq!(rep.evaluated, 1);

        // RBR sweep at small n covers the exhaustive optimum of that family
        let rep = block_sweep(11, &obj, &[Color::R, Color::B, Color::R], 1, &SearchConfig::default())
            .unwrap();
        assert_eq!(rep.best_value, 5); // R4 B6 R1 realizes it
        assert!(rep
            .witnesses
            .iter()
            .any(|w| w.to_string() == "R4 B6 R1"));

        // granularity coarsens the grid and can only lose quality
        let coarse =
            block_sweep(11, &obj, &[Color::R, Color::B, Color::R], 4, &SearchConfig::default())
                .unwrap();
        assert!(coarse.best_value >= rep.best_value);
        assert!(coarse.evaluated < rep.evaluated);

        // pattern cap
        let too_long = vec![Color::R; 5];
        assert!(block_sweep(11, &obj, &too_long, 1, &SearchConfig::default()).is_err());
    }
}
