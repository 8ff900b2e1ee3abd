//! Word-packed per-color bitsets and shifted-AND popcount counting.
//!
//! The full-evaluation paths in search (block sweeps, constrained
//! enumeration) spend almost all their time counting monochromatic
//! solutions of a fresh coloring.  With one bitset per color, the pairs
//! `(x, x + s)` that are both color C are exactly the set bits of
//! `mask_C & (mask_C >> s)`, so each outer variable costs one masked AND +
//! popcount pass of n/64 words instead of an O(n) scan.  The contract is
//! bit-for-bit agreement with [`count_classes`], which the tests check
//! differentially.

use crate::coloring::Coloring;
use crate::counting::count_classes;
use crate::equations::Equation;

/// Per-color bitsets of one coloring; bit `i` of a mask is cell `i + 1`.
pub struct PackedColoring {
    n: usize,
    masks: [Vec<u64>; 3],
}

impl PackedColoring {
    pub fn new(coloring: &Coloring) -> PackedColoring {
        let n = coloring.n();
        let words = n.div_ceil(64);
        let mut masks = [vec![0u64; words], vec![0u64; words], vec![0u64; words]];
        for (i, &c) in coloring.cell_bytes().iter().enumerate() {
            masks[c as usize][i / 64] |= 1u64 << (i % 64);
        }
        PackedColoring { n, masks }
    }

    fn mask(&self, color: u8) -> &[u64] {
        &self.masks[color as usize]
    }

    /// popcount of `mask & (mask >> shift)`: the number of cells x with x
    /// and x + shift both set.  shift >= n gives 0.
    fn shifted_and_count(mask: &[u64], shift: usize) -> u64 {
        let words = mask.len();
        let (q, r) = (shift / 64, shift % 64);
        let mut total = 0u64;
        for i in 0..words.saturating_sub(q) {
            let hi = mask[i + q];
            let shifted = if r == 0 {
                hi
            } else {
                let carry = if i + q + 1 < words { mask[i + q + 1] << (64 - r) } else { 0 };
                (hi >> r) | carry
            };
            total += (mask[i] & shifted).count_ones() as u64;
        }
        total
    }

    fn cell_set(mask: &[u64], pos: usize) -> bool {
        mask[(pos - 1) / 64] >> ((pos - 1) % 64) & 1 == 1
    }

    /// Monochromatic solution count for the 3-variable families; the
    /// 4-variable family has no packed path (callers fall back to the
    /// enumerating counter).
    pub fn mono_count(&self, eq: &Equation) -> Option<u64> {
        let n = self.n;
        match *eq {
            Equation::SchurLike { a: 1 } => {
                let mut mono = 0;
                for c in 0..3 {
                    let mask = self.mask(c);
                    if mask.iter().all(|&w| w == 0) {
                        continue;
                    }
                    // ordered pairs (x, y) with x, y, x+y all color c, then
                    // fold to unordered: diagonal solutions appear once in
                    // the ordered sum
                    let mut ordered = 0u64;
                    for x in 1..n {
                        if Self::cell_set(mask, x) {
                            ordered += Self::shifted_and_count(mask, x);
                        }
                    }
                    let mut diag = 0u64;
                    for x in 1..=n / 2 {
                        if Self::cell_set(mask, x) && Self::cell_set(mask, 2 * x) {
                            diag += 1;
                        }
                    }
                    mono += (ordered + diag) / 2;
                }
                Some(mono)
            }
            Equation::SchurLike { a } => {
                let a = a as usize;
                let mut mono = 0;
                for c in 0..3 {
                    let mask = self.mask(c);
                    for y in 1..=n.saturating_sub(1) / a {
                        if Self::cell_set(mask, y) {
                            mono += Self::shifted_and_count(mask, a * y);
                        }
                    }
                }
                Some(mono)
            }
            Equation::TwoCoef { a, b } => {
                let (a, b) = (a as usize, b as usize);
                let mut mono = 0;
                for c in 0..3 {
                    let mask = self.mask(c);
                    let mut t = 1;
                    while a * t <= n && b * t <= n.saturating_sub(1) {
                        if Self::cell_set(mask, a * t) {
                            mono += Self::shifted_and_count(mask, b * t);
                        }
                        t += 1;
                    }
                }
                Some(mono)
            }
            Equation::FourVar => None,
        }
    }
}

/// Monochromatic solution count by the fastest available route: packed
/// bitsets for 3-variable families, full enumeration otherwise.  Always
/// equal to `count_classes(eq, coloring).mono`.
pub fn fast_mono_count(eq: &Equation, coloring: &Coloring) -> u64 {
    match PackedColoring::new(coloring).mono_count(eq) {
        Some(v) => v,
        None => count_classes(eq, coloring).mono,
    }
}
