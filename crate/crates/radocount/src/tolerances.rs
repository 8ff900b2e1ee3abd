//! Frozen headroom constants for the O(n)-level assertions.
//!
//! The cap, estimate, and bound checked by the counting module are exact
//! only at leading order; their O(n) terms carry no stated constants.  The
//! constants below were calibrated once — random 2-colorings at
//! n in {100, 200, 400} (10^4 samples per n for the cap slack, 2*10^3 for
//! the estimate and the region bound) plus three-block colorings over a
//! full boundary sweep, including odd n — and then frozen with at least 2x
//! margin over the worst observation.  Tests assert against these exact
//! values; nothing here adapts at run time.

/// `d_bound_slack(c) >= -D_BOUND_HEADROOM_PER_N * n`.
/// Calibration never observed a negative slack at all: the minimum was
/// +0.26*n over the block family and +5.7*n over random colorings.  One
/// unit per cell is a conservative floor.
pub const D_BOUND_HEADROOM_PER_N: i64 = 1;

/// `|pair_estimate_gap2(c)| <= 2 * PAIR_ESTIMATE_HEADROOM_PER_N * n`
/// (the gap is kept doubled so it stays integer).  Worst observed gap was
/// 0.36*n doubled, so 1 per cell is a 2.8x margin.
pub const PAIR_ESTIMATE_HEADROOM_PER_N: i64 = 1;

/// `region_bound_slack(c, a) >= -2 * a * REGION_BOUND_HEADROOM_PER_N * n`.
/// Calibration observed the slack nonnegative on every sample at
/// a in {2, 3}.
pub const REGION_BOUND_HEADROOM_PER_N: i64 = 1;

/// Relative tolerance for fitted leading coefficients of the 3-variable
/// minimum counts (least squares on the (n^2, n) design over a doubling
/// ladder of n).  Observed relative error is below 0.1% at every a; the
/// asserted tolerance is 5%.
pub const ALPHA_FIT_REL_TOL_TRIPLES: f64 = 0.05;

/// Same for the 4-variable family on the (n^3, n^2) design; observed
/// relative error 0.065%, asserted tolerance 10%.
pub const ALPHA_FIT_REL_TOL_FOURVAR: f64 = 0.10;

/// Closed-form recipe colorings must come within `RECIPE_GAP_PER_N * n` of
/// the exhaustive (or constrained-exhaustive) optimum wherever the optimum
/// is computable.  Observed worst gap is 1 cell-count unit (a=1 and a=2
/// exhaustive floors) and 0 (constrained recipes); 2 per cell keeps the
/// assertion far from the boundary.
pub const RECIPE_GAP_PER_N: u64 = 2;

/// The whole frozen set, in serializable form for run manifests.
#[derive(Clone, Copy, Debug, serde::Serialize)]
pub struct FrozenTolerances {
    pub d_bound_headroom_per_n: i64,
    pub pair_estimate_headroom_per_n: i64,
    pub region_bound_headroom_per_n: i64,
    pub alpha_fit_rel_tol_triples: f64,
    pub alpha_fit_rel_tol_fourvar: f64,
    pub recipe_gap_per_n: u64,
}

pub fn frozen() -> FrozenTolerances {
    FrozenTolerances {
        d_bound_headroom_per_n: D_BOUND_HEADROOM_PER_N,
        pair_estimate_headroom_per_n: PAIR_ESTIMATE_HEADROOM_PER_N,
        region_bound_headroom_per_n: REGION_BOUND_HEADROOM_PER_N,
        alpha_fit_rel_tol_triples: ALPHA_FIT_REL_TOL_TRIPLES,
        alpha_fit_rel_tol_fourvar: ALPHA_FIT_REL_TOL_FOURVAR,
        recipe_gap_per_n: RECIPE_GAP_PER_N,
    }
}
