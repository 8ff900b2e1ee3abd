//! Exact solution counting and extremal-coloring search for linear equations
//! over colored integer intervals.
//!
//! The objects here are `r`-colorings of `[1, n]` (`r` = 2 or 3) and the
//! solutions of one fixed linear equation inside that interval.  The crate
//! answers three kinds of question about them, exactly (all counts are
//! integers; no floating point is involved until a least-squares fit at the
//! very end):
//!
//! - **count**: how many solutions of the equation are monochromatic,
//!   non-monochromatic, or rainbow under a given coloring
//!   ([`counting::count_classes`]);
//! - **verify**: do the structural identities and bounds that govern those
//!   counts hold — pair-statistic identities, region decompositions, and the
//!   closed-form predictions for extremal counts ([`theory`]);
//! - **search**: which colorings minimize or maximize a class count, by
//!   exhaustive Gray-code enumeration, enumeration constrained to fixed color
//!   counts, steepest-descent local search, or block-boundary sweeps
//!   ([`search`]).
//!
//! # Modules
//!
//! - [`coloring`] — colorings, run-length text form, block realization,
//!   interval and pair statistics
//! - [`equations`] — the supported equation families and their solution
//!   iterators
//! - [`counting`] — class counts, single-flip deltas, region statistics, and
//!   the integer-exact identity/bound residuals
//! - [`packed`] — bitset-packed fast path for the counters used in search
//!   inner loops
//! - [`search`] — extremal-coloring search strategies
//! - [`theory`] — closed-form predictions, optimal-coloring recipes, and
//!   their verification harness
//! - [`exact`] — scalar arithmetic in `Q(sqrt(3))` for block weights
//! - [`tolerances`] — the frozen numeric tolerances and calibration headroom
//!   constants used by the verification harness
//! - [`cli`] — the `radocount` command-line interface (`count`, `search`,
//!   `verify`)
//!
//! # Examples
//!
//! Each major capability has a runnable example under `examples/`:
//!
//! - `count_coloring` — count solution classes for one coloring
//! - `canonical_colorings` — build the closed-form near-optimal colorings
//! - `exhaustive_min` — exhaustive minimum over all 2-colorings of a small
//!   interval
//! - `constrained_search` — extremal counts with the blue cell count fixed
//! - `local_search` — steepest single-flip descent from random starts
//! - `block_sweep` — sweep two block boundaries over a coarse grid
//! - `verify_theorems` — run the full identity/bound/prediction harness
//! - `identity_checks` — the pair-product identity and region bound on
//!   random colorings
//! - `rainbow_max` — rainbow-solution maximum for 3-colorings
//!
//! ```
//! use radocount::coloring::Coloring;
//! use radocount::counting::count_classes;
//! use radocount::equations::Equation;
//!
//! let eq = Equation::schur();
//! let c = Coloring::parse_runlength("R4 B6 R1").unwrap();
//! let counts = count_classes(&eq, &c);
//! assert_eq!(counts.mono, 5);
//! assert_eq!(counts.total(), 30);
//! ```

pub mod cli;
pub mod coloring;
pub mod counting;
pub mod equations;
pub mod exact;
pub mod packed;
pub mod search;
pub mod theory;
pub mod tolerances;

pub use coloring::{Color, Coloring};
pub use equations::{Equation, Solution};
