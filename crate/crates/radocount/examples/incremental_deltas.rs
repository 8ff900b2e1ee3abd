//! The two fast paths behind the search loops: per-flip class deltas that
//! scan only the solutions through one cell, and word-parallel
//! monochromatic counting over packed color masks.

use std::time::Instant;

use rand_core::{RngCore, SeedableRng};

use radocount::counting::{class_deltas, count_classes};
use radocount::packed::fast_mono_count;
use radocount::{Color, Coloring, Equation};

fn main() {
    let n = 2000usize;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
    let mut c = Coloring::new(
        2,
        (0..n).map(|_| Color((rng.next_u32() % 2) as u8)).collect(),
    )
    .unwrap();
    let eq = Equation::schur();

    let before = count_classes(&eq, &c);
    let pos = 777;
    let new_color = Color(1 - c.color_at(pos).index() as u8);
    let t = Instant::now();
    let delta = class_deltas(&eq, &c, pos, new_color).unwrap();
    let delta_time = t.elapsed();

    c.set(pos, new_color);
    let after = count_classes(&eq, &c);
    assert_eq!(after.mono as i64 - before.mono as i64, delta.mono);
    println!(
        "flip cell {pos}: mono {} -> {} (delta {:+}), O(n) scan in {delta_time:?}",
        before.mono, after.mono, delta.mono
    );

    let t = Instant::now();
    let fast = fast_mono_count(&eq, &c);
    let fast_time = t.elapsed();
    let t = Instant::now();
    let slow = count_classes(&eq, &c).mono;
    let slow_time = t.elapsed();
    assert_eq!(fast, slow);
    println!("mono count {fast}: packed masks {fast_time:?} vs solution stream {slow_time:?}");
}
