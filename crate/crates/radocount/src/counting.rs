//! Exact counters over one coloring: solution classes, single-flip deltas,
//! region statistics, symmetric-pair products, and the integer-exact
//! residuals of the identities and bounds that relate them.
//!
//! Everything here is integer arithmetic; "residual" and "slack" functions
//! return signed values so callers can assert exact zeros or one-sided
//! bounds without tolerance juggling.

use serde::Serialize;
use thiserror::Error;

use crate::coloring::{Color, Coloring};
use crate::equations::{solutions, Equation, Solution};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CountingError {
    #[error("operation requires a 2-coloring (got r={0})")]
    NotTwoColors(u8),
    #[error("operation requires the x+ay=z family (got {0})")]
    NotSchurLike(String),
    #[error("split parameter a={0} out of range for this operation")]
    BadSplit(u32),
    #[error("cell {pos} out of range 1..={n}")]
    CellOutOfRange { pos: usize, n: usize },
    #[error("color index {color} out of range for r={r}")]
    ColorOutOfRange { color: u8, r: u8 },
}

/// Exact partition of the solution set by color class.
///
/// `rainbow` is nonzero only for 3-colorings and 3-variable equations; a
/// solution with a repeated value (like (x, x, 2x)) can never be rainbow.
/// `nonmono` is everything else: neither monochromatic nor rainbow.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ClassCounts {
    pub mono: u64,
    pub nonmono: u64,
    pub rainbow: u64,
}

impl ClassCounts {
    pub fn total(&self) -> u64 {
        self.mono + self.nonmono + self.rainbow
    }
}

/// Classify every solution of `eq` in `[1, n]` under `coloring`.
///
/// Always asserts (in release builds too) that the three classes tile the
/// solution set: mono + nonmono + rainbow equals the closed-form total.
pub fn count_classes(eq: &Equation, coloring: &Coloring) -> ClassCounts {
    let n = coloring.n();
    let cells = coloring.cell_bytes();
    let track_rainbow = coloring.r() == 3 && eq.supports_rainbow();
    let mut mono = 0u64;
    let mut rainbow = 0u64;
    let mut total = 0u64;
    for s in solutions(eq, n) {
        total += 1;
        match s {
            Solution::Triple { x, y, z } => {
                let (cx, cy, cz) = (cells[x - 1], cells[y - 1], cells[z - 1]);
                if cx == cy && cy == cz {
                    mono += 1;
                } else if track_rainbow && cx != cy && cy != cz && cx != cz {
                    rainbow += 1;
                }
            }
            Solution::Quad { x, y, w, z } => {
                let (cx, cy, cw, cz) = (cells[x - 1], cells[y - 1], cells[w - 1], cells[z - 1]);
                if cx == cy && cy == cw && cw == cz {
                    mono += 1;
                }
            }
        }
    }
    let counts = ClassCounts { mono, nonmono: total - mono - rainbow, rainbow };
    assert_eq!(
        counts.total(),
        eq.total_count(n),
        "solution classes must tile the solution set exactly"
    );
    counts
}

/// Change in each class count caused by recoloring one cell.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub struct ClassDeltas {
    pub mono: i64,
    pub rainbow: i64,
}

/// Exact class-count deltas for recoloring `pos` to `new_color`, computed by
/// scanning only the solutions that contain `pos`.  Time is proportional to
/// the number of such solutions: O(n) for the 3-variable families, O(n^2)
/// for x+y+w=z.
pub fn class_deltas(
    eq: &Equation,
    coloring: &Coloring,
    pos: usize,
    new_color: Color,
) -> Result<ClassDeltas, CountingError> {
    let n = coloring.n();
    if pos < 1 || pos > n {
        return Err(CountingError::CellOutOfRange { pos, n });
    }
    if new_color.0 >= coloring.r() {
        return Err(CountingError::ColorOutOfRange { color: new_color.0, r: coloring.r() });
    }
    let old = coloring.color_at(pos);
    if old == new_color {
        return Ok(ClassDeltas::default());
    }
    let cells = coloring.cell_bytes();
    let track_rainbow = coloring.r() == 3 && eq.supports_rainbow();
    let col = |p: usize, flipped: bool| -> u8 {
        if p == pos {
            if flipped {
                new_color.0
            } else {
                old.0
            }
        } else {
            cells[p - 1]
        }
    };

    let mut d = ClassDeltas::default();
    let mut visit3 = |x: usize, y: usize, z: usize| {
        for flipped in [false, true] {
            let sign = if flipped { 1 } else { -1 };
            let (cx, cy, cz) = (col(x, flipped), col(y, flipped), col(z, flipped));
            if cx == cy && cy == cz {
                d.mono += sign;
            } else if track_rainbow && cx != cy && cy != cz && cx != cz {
                d.rainbow += sign;
            }
        }
    };

    match *eq {
        Equation::SchurLike { a: 1 } => {
            // pos as a pair element {pos, q}, z = pos + q; each q once
            for q in 1..=n.saturating_sub(pos) {
                visit3(pos.min(q), pos.max(q), pos + q);
            }
            // pos as the sum; disjoint from the above since z exceeds both
            // pair elements
            for x in 1..=pos / 2 {
                visit3(x, pos - x, pos);
            }
        }
        Equation::SchurLike { a } => {
            let a = a as usize;
            // pos as x (covers the x = y = pos solution at y = pos)
            for y in 1..=n.saturating_sub(pos) / a {
                visit3(pos, y, pos + a * y);
            }
            // pos as y; skip x == pos, already visited
            for x in 1..=n.saturating_sub(a * pos) {
                if x != pos {
                    visit3(x, pos, x + a * pos);
                }
            }
            // pos as z; x and y here are both < pos, so no overlap
            for y in 1..=(pos - 1) / a {
                visit3(pos - a * y, y, pos);
            }
        }
        Equation::TwoCoef { a, b } => {
            let (a, b) = (a as usize, b as usize);
            // pos as x
            for t in 1..=(n / a).min(n.saturating_sub(pos) / b) {
                visit3(pos, a * t, pos + b * t);
            }
            // pos as y (= a*t); skip x == pos, counted as x above
            if pos % a == 0 {
                let t = pos / a;
                for x in 1..=n.saturating_sub(b * t) {
                    if x != pos {
                        visit3(x, pos, x + b * t);
                    }
                }
            }
            // pos as z; skip y == pos (happens when a > b at t = pos/a),
            // counted as y above
            for t in 1..=((pos - 1) / b).min(n / a) {
                if a * t != pos {
                    visit3(pos - b * t, a * t, pos);
                }
            }
        }
        Equation::FourVar => {
            let mut visit4 = |x: usize, y: usize, w: usize, z: usize| {
                for flipped in [false, true] {
                    let sign = if flipped { 1 } else { -1 };
                    let (cx, cy, cw, cz) =
                        (col(x, flipped), col(y, flipped), col(w, flipped), col(z, flipped));
                    if cx == cy && cy == cw && cw == cz {
                        d.mono += sign;
                    }
                }
            };
            // pos in the multiset {pos, u, v}: one visit per unordered {u, v}
            let mut u = 1;
            while pos + 2 * u <= n {
                for v in u..=n - pos - u {
                    visit4(pos, u, v, pos + u + v);
                }
                u += 1;
            }
            // pos as the sum; the parts are < pos, so no overlap
            for x in 1..=pos / 3 {
                for y in x..=(pos - x) / 2 {
                    visit4(x, y, pos - x - y, pos);
                }
            }
        }
    }
    Ok(d)
}

/// Mono-count delta of one flip; see [`class_deltas`].
pub fn mono_delta(
    eq: &Equation,
    coloring: &Coloring,
    pos: usize,
    new_color: Color,
) -> Result<i64, CountingError> {
    Ok(class_deltas(eq, coloring, pos, new_color)?.mono)
}

/// Rainbow-count delta of one flip; see [`class_deltas`].
pub fn rainbow_delta(
    eq: &Equation,
    coloring: &Coloring,
    pos: usize,
    new_color: Color,
) -> Result<i64, CountingError> {
    Ok(class_deltas(eq, coloring, pos, new_color)?.rainbow)
}

/// Per-color prefix counts; `count_not(c, lo, hi)` is the number of cells in
/// `[lo, hi]` whose color differs from `c`.
struct Prefix {
    pref: Vec<[u32; 3]>,
}

impl Prefix {
    fn new(coloring: &Coloring) -> Prefix {
        let cells = coloring.cell_bytes();
        let mut pref = vec![[0u32; 3]; cells.len() + 1];
        for (i, &c) in cells.iter().enumerate() {
            pref[i + 1] = pref[i];
            pref[i + 1][c as usize] += 1;
        }
        Prefix { pref }
    }

    fn count_not(&self, c: u8, lo: usize, hi: usize) -> u64 {
        if lo > hi {
            return 0;
        }
        let len = (hi - lo + 1) as u64;
        let same = (self.pref[hi][c as usize] - self.pref[lo - 1][c as usize]) as u64;
        len - same
    }
}

/// Counts of bichromatic variable pairs per region, the signed region
/// difference `d`, and the per-solution slot bichromaticity counts.
///
/// For `x + y = z` (a = 1), pairs (x, y) range over `[1, n]^2` and the
/// regions are split by the lines `x + y = n` and `x = y`:
/// `n_minus = #{x + y <= n, x > y}`, `n_plus = #{x + y > n, x < y}`,
/// both restricted to `color(x) != color(y)`; `d = n_minus - n_plus`.
///
/// For `x + ay = z` (a >= 2), pairs range over `[1, n] x [1, floor(n/a)]`
/// and the split lines are `x + ay = n` and `x = ay` (colors of x and y
/// compared, not of x and ay):
/// `nx_minus = #{x + ay <= n, x > ay}`, `nx_plus = #{x + ay > n, x > ay}`,
/// `ny_minus = #{x + ay <= n, x < ay}`, `ny_plus = #{x + ay > n, x < ay}`;
/// `d = nx_minus - ny_plus`.
///
/// `nu1`, `nu2`, `nu3` count, over the emitted solutions, how many have a
/// bichromatic (x, y), (y, z), (x, z) slot pair respectively.  Under two
/// colors every non-monochromatic triple has exactly two bichromatic slot
/// pairs, so `nu1 + nu2 + nu3 = 2 * nonmono` holds structurally.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RegionStats {
    pub a: u32,
    pub n_minus: u64,
    pub n_plus: u64,
    pub nx_minus: u64,
    pub nx_plus: u64,
    pub ny_minus: u64,
    pub ny_plus: u64,
    pub d: i64,
    pub nu1: u64,
    pub nu2: u64,
    pub nu3: u64,
}

pub fn region_stats(eq: &Equation, coloring: &Coloring) -> Result<RegionStats, CountingError> {
    if coloring.r() != 2 {
        return Err(CountingError::NotTwoColors(coloring.r()));
    }
    let a = match *eq {
        Equation::SchurLike { a } => a,
        other => return Err(CountingError::NotSchurLike(other.to_string())),
    };
    let n = coloring.n();
    let cells = coloring.cell_bytes();
    let prefix = Prefix::new(coloring);

    let mut stats = RegionStats {
        a,
        n_minus: 0,
        n_plus: 0,
        nx_minus: 0,
        nx_plus: 0,
        ny_minus: 0,
        ny_plus: 0,
        d: 0,
        nu1: 0,
        nu2: 0,
        nu3: 0,
    };

    if a == 1 {
        for x in 1..=n {
            let c = cells[x - 1];
            // y < x with x + y <= n
            stats.n_minus += prefix.count_not(c, 1, (x - 1).min(n - x));
        }
        for y in 2..=n {
            let c = cells[y - 1];
            // x < y with x + y > n
            let lo = (n - y + 1).max(1);
            if lo <= y - 1 {
                stats.n_plus += prefix.count_not(c, lo, y - 1);
            }
        }
        stats.d = stats.n_minus as i64 - stats.n_plus as i64;
    } else {
        let au = a as usize;
        for y in 1..=n / au {
            let c = cells[y - 1];
            let ay = au * y;
            // x > ay, x + ay <= n
            stats.nx_minus += prefix.count_not(c, ay + 1, n.saturating_sub(ay));
            // x > ay, x + ay > n
            stats.nx_plus += prefix.count_not(c, (ay + 1).max(n - ay + 1), n);
            // x < ay, x + ay <= n
            stats.ny_minus += prefix.count_not(c, 1, (ay - 1).min(n.saturating_sub(ay)));
            // x < ay, x + ay > n
            if n - ay + 1 <= ay - 1 {
                stats.ny_plus += prefix.count_not(c, n - ay + 1, ay - 1);
            }
        }
        stats.d = stats.nx_minus as i64 - stats.ny_plus as i64;
    }

    for s in solutions(eq, n) {
        if let Solution::Triple { x, y, z } = s {
            let (cx, cy, cz) = (cells[x - 1], cells[y - 1], cells[z - 1]);
            stats.nu1 += (cx != cy) as u64;
            stats.nu2 += (cy != cz) as u64;
            stats.nu3 += (cx != cz) as u64;
        }
    }
    Ok(stats)
}

/// Bichromatic pairs (x, y) in the closed region
/// `{x + ay >= n + a + 1, ay - x >= a}`, the image of the lower region
/// `{x + ay <= n, x > ay}` under the two mid-interval reflections
/// `x -> n + 1 - x`, `y -> floor(n/a) + 1 - y`.  This is the plus-side set
/// the pair-product decomposition tiles exactly; the open region
/// `{x + ay > n, x < ay}` differs from it by a boundary band.
pub fn interior_plus_count(coloring: &Coloring, a: u32) -> Result<u64, CountingError> {
    if coloring.r() != 2 {
        return Err(CountingError::NotTwoColors(coloring.r()));
    }
    if a < 2 {
        return Err(CountingError::BadSplit(a));
    }
    let n = coloring.n();
    let au = a as usize;
    let cells = coloring.cell_bytes();
    let prefix = Prefix::new(coloring);
    let mut count = 0;
    for y in 1..=n / au {
        let ay = au * y;
        let lo = (n + au + 1).saturating_sub(ay).max(1);
        let hi = ay.saturating_sub(au).min(n);
        if lo <= hi {
            count += prefix.count_not(cells[y - 1], lo, hi);
        }
    }
    Ok(count)
}

/// Count pairs of symmetric cell pairs with prescribed color patterns under
/// the cross condition `a*y < x`: X = {x, n+1-x} for `1 <= x <= n/2` colored
/// `xpat` in position order (smaller cell first), Y = {y, floor(n/a)+1-y}
/// for `1 <= y <= floor(n/(2a))` colored `ypat`.
pub fn direct_product(
    coloring: &Coloring,
    a: u32,
    xpat: (Color, Color),
    ypat: (Color, Color),
) -> Result<u64, CountingError> {
    if coloring.r() != 2 {
        return Err(CountingError::NotTwoColors(coloring.r()));
    }
    if a < 2 {
        return Err(CountingError::BadSplit(a));
    }
    let n = coloring.n();
    let au = a as usize;
    let cells = coloring.cell_bytes();
    let half = n / 2;
    // prefix over x of the X-pattern indicator
    let mut px = vec![0u64; half + 1];
    for x in 1..=half {
        let hit = cells[x - 1] == xpat.0 .0 && cells[n - x] == xpat.1 .0;
        px[x] = px[x - 1] + hit as u64;
    }
    let lo_len = n / au;
    let mut count = 0;
    for y in 1..=n / (2 * au) {
        if cells[y - 1] == ypat.0 .0 && cells[lo_len - y] == ypat.1 .0 {
            // x strictly above a*y, up to n/2
            count += px[half] - px[(au * y).min(half)];
        }
    }
    Ok(count)
}

/// Residual of the pair-product decomposition of the region difference for
/// `x + 2y = z`:
///
/// `(nx_minus - interior_plus) - 2*(D(RR,BR) + D(BB,RB) - D(RR,RB) - D(BB,BR))`
///
/// where `D` is [`direct_product`] at a=2 and `interior_plus` is
/// [`interior_plus_count`].  The quadruple grouping
/// `{x, n+1-x} x {y, floor(n/2)+1-y}` with `2y < x` covers the lower region
/// and the closed reflected region exactly twice each, which makes the
/// residual identically zero whenever n is even; odd n leaves an O(n)
/// boundary defect from the unpaired middle cells.
pub fn d2_identity_residual(coloring: &Coloring) -> Result<i64, CountingError> {
    let a = 2;
    let eq = Equation::SchurLike { a };
    let stats = region_stats(&eq, coloring)?;
    let interior = interior_plus_count(coloring, a)?;
    let lhs = stats.nx_minus as i64 - interior as i64;
    let (r, b) = (Color::R, Color::B);
    let rhs = 2 * (direct_product(coloring, a, (r, r), (b, r))? as i64
        + direct_product(coloring, a, (b, b), (r, b))? as i64
        - direct_product(coloring, a, (r, r), (r, b))? as i64
        - direct_product(coloring, a, (b, b), (b, r))? as i64);
    Ok(lhs - rhs)
}

/// Slack of the cap on the region difference by the majority color count:
/// `floor(mu^2/4) - d` where `mu = max(mu_R, mu_B)` and `d` is the a=1
/// region difference.  (`d` only counts bichromatic pairs, so it is
/// invariant under swapping the two colors; taking the larger count is the
/// usual relabeling.)  The cap holds up to an O(n) boundary term; observed
/// slack in calibration was never negative.
pub fn d_bound_slack(coloring: &Coloring) -> Result<i64, CountingError> {
    let stats = region_stats(&Equation::schur(), coloring)?;
    let counts = coloring.color_counts();
    let mu = counts[0].max(counts[1]) as i64;
    Ok(mu * mu / 4 - stats.d)
}

/// Twice-scaled error of the pair estimate for the non-monochromatic count
/// at a=1: returns `2*nonmono - (2*mu_R*mu_B - n_plus)`, which the estimate
/// says is O(n).  Kept in doubled form so it stays an exact integer.
pub fn pair_estimate_gap2(coloring: &Coloring) -> Result<i64, CountingError> {
    let eq = Equation::schur();
    let stats = region_stats(&eq, coloring)?;
    let counts = count_classes(&eq, coloring);
    let mu = coloring.color_counts();
    Ok(2 * counts.nonmono as i64 - (2 * (mu[0] * mu[1]) as i64 - stats.n_plus as i64))
}

/// Slack (scaled by 2a) of the region upper bound on the non-monochromatic
/// count for `x + ay = z`, a >= 2:
///
/// `mu_R*mu_B + a*(mu_R*mu_B1 + mu_B*mu_R1 + nx_minus - ny_plus) - 2a*nonmono`
///
/// where `mu_R1`, `mu_B1` are the color counts on `[1, floor(n/a)]`.  The
/// bound says this is  >= -2a*c*n for small c; calibration observed it
/// nonnegative throughout.
pub fn region_bound_slack(coloring: &Coloring, a: u32) -> Result<i64, CountingError> {
    if a < 2 {
        return Err(CountingError::BadSplit(a));
    }
    let eq = Equation::SchurLike { a };
    let stats = region_stats(&eq, coloring)?;
    let counts = count_classes(&eq, coloring);
    let mu = coloring.mu_stats(a);
    let (mur, mub) = (mu.mu[0] as i64, mu.mu[1] as i64);
    let (mur1, mub1) = (mu.mu_lo[0] as i64, mu.mu_lo[1] as i64);
    let ai = a as i64;
    let rhs2a = mur * mub + ai * (mur * mub1 + mub * mur1 + stats.nx_minus as i64 - stats.ny_plus as i64);
    Ok(rhs2a - 2 * ai * counts.nonmono as i64)
}
