//! The exact structural identities, evaluated on concrete colorings:
//! region partition, per-slot bichromaticity split, the even-n product
//! identity, and the calibrated bound slacks.

use rand_core::{RngCore, SeedableRng};

use radocount::counting::{
    count_classes, d2_identity_residual, d_bound_slack, pair_estimate_gap2, region_bound_slack,
    region_stats,
};
use radocount::search::Direction;
use radocount::theory::canonical_coloring;
use radocount::{Color, Coloring, Equation};

fn main() {
    let n = 100usize;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
    let random = Coloring::new(
        2,
        (0..n).map(|_| Color((rng.next_u32() % 2) as u8)).collect(),
    )
    .unwrap();
    let canonical =
        canonical_coloring(&Equation::schur_like(2).unwrap(), n, None, Direction::Min).unwrap();

    for (label, c) in [("random", &random), ("canonical-a2", &canonical)] {
        println!("{label}: {c}");
        let schur = Equation::schur();
        let stats = region_stats(&schur, c).unwrap();
        let mu = c.color_counts();
        // the two regions partition the bichromatic pairs
        assert_eq!((stats.n_minus + stats.n_plus) as u64, mu[0] * mu[1]);
        println!(
            "  regions  n-={} n+={} d={}  (mu_R*mu_B = {})",
            stats.n_minus,
            stats.n_plus,
            stats.d,
            mu[0] * mu[1]
        );

        // each non-monochromatic triple is bichromatic in exactly two of
        // its three variable pairs
        let nonmono = count_classes(&schur, c).nonmono;
        assert_eq!(stats.nu1 + stats.nu2 + stats.nu3, 2 * nonmono);
        println!(
            "  nu split {} + {} + {} = 2 * {}",
            stats.nu1, stats.nu2, stats.nu3, nonmono
        );

        // even n: the region difference matches the reflected-pair product
        // expansion with residual exactly zero
        println!("  product identity residual = {}", d2_identity_residual(c).unwrap());

        println!(
            "  slacks   d-bound {}  pair-estimate/2 {}  region-bound(a=2) {}",
            d_bound_slack(c).unwrap(),
            pair_estimate_gap2(c).unwrap(),
            region_bound_slack(c, 2).unwrap()
        );
    }
}
