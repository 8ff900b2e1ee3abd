//! Randomized invariants: representation round-trips, the class partition,
//! flip deltas vs full recounts, region/pair bookkeeping, and block
//! realization staying proportional.

use proptest::prelude::*;

use radocount::coloring::{from_blocks, BlockSpec};
use radocount::counting::{class_deltas, count_classes, region_stats};
use radocount::packed::fast_mono_count;
use radocount::{Color, Coloring, Equation};

fn arb_coloring(max_n: usize) -> impl Strategy<Value = Coloring> {
    (2u8..=3, 1usize..=max_n)
        .prop_flat_map(|(r, n)| {
            prop::collection::vec(0u8..r, n).prop_map(move |cells| {
                Coloring::new(r, cells.into_iter().map(Color).collect()).unwrap()
            })
        })
}

fn arb_equation() -> impl Strategy<Value = Equation> {
    prop_oneof![
        Just(Equation::schur()),
        (2u32..=5).prop_map(|a| Equation::schur_like(a).unwrap()),
        Just(Equation::two_coef(3, 2).unwrap()),
        Just(Equation::two_coef(2, 3).unwrap()),
        Just(Equation::two_coef(5, 3).unwrap()),
        Just(Equation::four_var()),
    ]
}

proptest! {
    #[test]
    fn runlength_round_trip(c in arb_coloring(120)) {
        let text = c.format_runlength();
        let back = Coloring::parse_runlength(&text).unwrap();
        prop_assert_eq!(back.cell_bytes(), c.cell_bytes());
        if c.cell_bytes().contains(&2) {
            prop_assert_eq!(back.r(), 3);
        }
    }

    #[test]
    fn class_partition_matches_closed_form(eq in arb_equation(), c in arb_coloring(90)) {
        let counts = count_classes(&eq, &c);
        prop_assert_eq!(counts.mono + counts.nonmono + counts.rainbow, eq.total_count(c.n()));
        prop_assert_eq!(counts.total(), eq.total_count(c.n()));
    }

    #[test]
    fn flip_deltas_match_recount(
        eq in arb_equation(),
        c in arb_coloring(60),
        pos_ix in any::<prop::sample::Index>(),
        shift in 1u8..=2,
    ) {
        let pos = 1 + pos_ix.index(c.n());
        // nonzero offset mod r, so the new color is always different
        let offset = 1 + (shift - 1) % (c.r() - 1);
        let new_color = Color((c.color_at(pos).0 + offset) % c.r());
        let before = count_classes(&eq, &c);
        let deltas = class_deltas(&eq, &c, pos, new_color).unwrap();
        let flipped = c.flip(pos, new_color).unwrap();
        let after = count_classes(&eq, &flipped);
        prop_assert_eq!(before.mono as i64 + deltas.mono, after.mono as i64);
        prop_assert_eq!(before.rainbow as i64 + deltas.rainbow, after.rainbow as i64);
    }

    #[test]
    fn flip_back_restores(c in arb_coloring(60), pos_ix in any::<prop::sample::Index>()) {
        let pos = 1 + pos_ix.index(c.n());
        let old = c.color_at(pos);
        let new_color = Color((old.0 + 1) % c.r());
        let there = c.flip(pos, new_color).unwrap();
        prop_assert_eq!(there.color_at(pos), new_color);
        let back = there.flip(pos, old).unwrap();
        prop_assert_eq!(back.cell_bytes(), c.cell_bytes());
    }

    #[test]
    fn mu_split_totals(c in arb_coloring(120), a in 1u32..=5) {
        let mu = c.mu_stats(a);
        prop_assert_eq!(mu.lo_len, c.n() / a as usize);
        let mut total = 0u64;
        for i in 0..3 {
            prop_assert_eq!(mu.mu_lo[i] + mu.mu_hi[i], mu.mu[i]);
            total += mu.mu[i];
        }
        prop_assert_eq!(total, c.n() as u64);
    }

    #[test]
    fn pair_patterns_cover_all_pairs(c in arb_coloring(120), len_ix in any::<prop::sample::Index>()) {
        let len = 1 + len_ix.index(c.n());
        let pairs = c.pair_stats(len).unwrap();
        let mut total = 0u64;
        let mut bichromatic = 0u64;
        for lo in 0..3 {
            for hi in 0..3 {
                total += pairs.mu_cc[lo][hi];
                if lo != hi {
                    bichromatic += pairs.mu_cc[lo][hi];
                }
            }
        }
        prop_assert_eq!(total, (len / 2) as u64);
        prop_assert_eq!(bichromatic, pairs.gamma);
    }

    #[test]
    fn regions_partition_bichromatic_pairs(
        cells in prop::collection::vec(0u8..2, 1..=100),
        a in 1u32..=4,
    ) {
        let c = Coloring::new(2, cells.into_iter().map(Color).collect()).unwrap();
        let eq = Equation::schur_like(a).unwrap();
        let stats = region_stats(&eq, &c).unwrap();
        let bytes = c.cell_bytes();
        let n = c.n();
        if a == 1 {
            // unordered bichromatic pairs split by x + y <= n
            let mu = c.color_counts();
            prop_assert_eq!(stats.n_minus + stats.n_plus, mu[0] * mu[1]);
        } else {
            let mut off_line = 0u64;
            for y in 1..=n / a as usize {
                for x in 1..=n {
                    if bytes[x - 1] != bytes[y - 1] && x != a as usize * y {
                        off_line += 1;
                    }
                }
            }
            prop_assert_eq!(
                stats.nx_minus + stats.nx_plus + stats.ny_minus + stats.ny_plus,
                off_line
            );
        }
    }

    #[test]
    fn bitset_count_agrees_with_stream(eq in arb_equation(), c in arb_coloring(90)) {
        prop_assert_eq!(fast_mono_count(&eq, &c), count_classes(&eq, &c).mono);
    }

    #[test]
    fn block_realization_stays_proportional(
        weights in prop::collection::vec((0u8..2, 1i64..=9), 1..=5),
        n in 1usize..=200,
    ) {
        let blocks: Vec<(Color, i64)> =
            weights.iter().map(|&(c, w)| (Color(c), w)).collect();
        let spec = BlockSpec::from_ints(&blocks).unwrap();
        let realized = from_blocks(n, &spec).unwrap();
        prop_assert_eq!(realized.n(), n);

        // each block's realized length is within one cell of its exact share
        let total: i64 = blocks.iter().map(|&(_, w)| w).sum();
        let bytes = realized.cell_bytes();
        let mut cursor = 0usize;
        let mut acc = 0i64;
        let mut prev_hi = 0i64;
        for &(color, w) in &blocks {
            acc += w;
            let hi = n as i64 * acc / total;
            let len = (hi - prev_hi) as usize;
            // |total*len - n*w| < 2*total  (two floors, one cell of slack each)
            prop_assert!((total * len as i64 - n as i64 * w).abs() < 2 * total);
            for _ in 0..len {
                prop_assert_eq!(bytes[cursor], color.0);
                cursor += 1;
            }
            prev_hi = hi;
        }
        prop_assert_eq!(cursor, n);
    }
}
