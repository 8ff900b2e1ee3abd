//! Colorings of the integer interval `[1, n]` with 2 or 3 colors, plus the
//! interval statistics every counter and bound in this crate is phrased in:
//! per-color cell counts over `[1, n]` and its `a`-split, and color patterns
//! of the symmetric pairs `{s, L+1-s}`.
//!
//! Conventions pinned here and relied on everywhere else:
//! - cells are 1-based positions `1..=n`;
//! - the lo-interval for split parameter `a` is `[1, floor(n/a)]` (all of
//!   `[1, n]` when `a = 1`), the hi-interval is the rest;
//! - a symmetric pair of `[1, L]` is `{s, L+1-s}` for `s <= floor(L/2)`; for
//!   odd `L` the middle cell belongs to no pair;
//! - pair patterns are read "in this order": first the color of the smaller
//!   element, then the color of the larger one;
//! - block realization rounds by cumulative floors: block `k` of a weight
//!   list occupies positions `(floor(n*W_{k-1}/W), floor(n*W_k/W)]` where
//!   `W_k` is the prefix weight sum.  Each realized block length then differs
//!   from its exact proportion by less than one cell.

use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::exact::Exact;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ColoringError {
    #[error("empty run-length input")]
    EmptyInput,
    #[error("bad run-length token {0:?}: expected <letter><count> with count >= 1")]
    BadToken(String),
    #[error("unknown color letter {0:?} (expected R, B, or G)")]
    UnknownLetter(char),
    #[error("color count r={0} unsupported (expected 2 or 3)")]
    BadColorCount(u8),
    #[error("cell {pos} out of range 1..={n}")]
    CellOutOfRange { pos: usize, n: usize },
    #[error("color index {color} out of range for r={r}")]
    ColorOutOfRange { color: u8, r: u8 },
    #[error("coloring has no cells")]
    EmptyColoring,
    #[error("pair interval length {len} exceeds n={n}")]
    PairLenTooLarge { len: usize, n: usize },
    #[error("bad block spec: {0}")]
    BadBlockSpec(String),
    #[error("cannot narrow r from {from} to {to}")]
    CannotNarrow { from: u8, to: u8 },
}

/// One of the cell colors. Index 0 prints as `R`, 1 as `B`, 2 as `G`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Color(pub u8);

impl Color {
    pub const R: Color = Color(0);
    pub const B: Color = Color(1);
    pub const G: Color = Color(2);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn letter(self) -> char {
        match self.0 {
            0 => 'R',
            1 => 'B',
            2 => 'G',
            _ => '?',
        }
    }

    pub fn from_letter(c: char) -> Option<Color> {
        match c {
            'R' => Some(Color::R),
            'B' => Some(Color::B),
            'G' => Some(Color::G),
            _ => None,
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// An `r`-coloring of `[1, n]`, stored as one byte per cell.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Coloring {
    n: usize,
    r: u8,
    cells: Vec<u8>,
}

impl Coloring {
    pub fn new(r: u8, cells: Vec<Color>) -> Result<Self, ColoringError> {
        if !(2..=3).contains(&r) {
            return Err(ColoringError::BadColorCount(r));
        }
        if cells.is_empty() {
            return Err(ColoringError::EmptyColoring);
        }
        for c in &cells {
            if c.0 >= r {
                return Err(ColoringError::ColorOutOfRange { color: c.0, r });
            }
        }
        let n = cells.len();
        Ok(Coloring { n, r, cells: cells.into_iter().map(|c| c.0).collect() })
    }

    pub fn uniform(n: usize, r: u8, color: Color) -> Result<Self, ColoringError> {
        if !(2..=3).contains(&r) {
            return Err(ColoringError::BadColorCount(r));
        }
        if color.0 >= r {
            return Err(ColoringError::ColorOutOfRange { color: color.0, r });
        }
        if n == 0 {
            return Err(ColoringError::EmptyColoring);
        }
        Ok(Coloring { n, r, cells: vec![color.0; n] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> u8 {
        self.r
    }

    /// Color of 1-based cell `pos`. Panics if `pos` is out of range.
    #[inline]
    pub fn color_at(&self, pos: usize) -> Color {
        Color(self.cells[pos - 1])
    }

    /// Raw cell bytes, index 0 = position 1. Hot counting loops index this.
    #[inline]
    pub fn cell_bytes(&self) -> &[u8] {
        &self.cells
    }

    /// In-place recolor of one cell.  Search workers use this on a coloring
    /// they own exclusively; shared colorings should use [`Coloring::flip`].
    pub fn set(&mut self, pos: usize, color: Color) {
        assert!(pos >= 1 && pos <= self.n, "cell {} out of range 1..={}", pos, self.n);
        assert!(color.0 < self.r, "color {} out of range for r={}", color.0, self.r);
        self.cells[pos - 1] = color.0;
    }

    /// Copy of this coloring with one cell recolored.
    pub fn flip(&self, pos: usize, color: Color) -> Result<Self, ColoringError> {
        if pos < 1 || pos > self.n {
            return Err(ColoringError::CellOutOfRange { pos, n: self.n });
        }
        if color.0 >= self.r {
            return Err(ColoringError::ColorOutOfRange { color: color.0, r: self.r });
        }
        let mut out = self.clone();
        out.cells[pos - 1] = color.0;
        Ok(out)
    }

    /// Same cells under a larger color count (2 -> 3). Narrowing is an error.
    pub fn widen(&self, r: u8) -> Result<Self, ColoringError> {
        if !(2..=3).contains(&r) {
            return Err(ColoringError::BadColorCount(r));
        }
        if r < self.r {
            return Err(ColoringError::CannotNarrow { from: self.r, to: r });
        }
        Ok(Coloring { n: self.n, r, cells: self.cells.clone() })
    }

    /// Cells used by each color, indexed by color; entries at or above `r`
    /// stay zero.
    pub fn color_counts(&self) -> [u64; 3] {
        let mut out = [0u64; 3];
        for &c in &self.cells {
            out[c as usize] += 1;
        }
        out
    }

    /// Parse `"R4 B6 R1"` style run-length text.  Adjacent runs of the same
    /// letter are legal and merge; `r` is 3 when a `G` run appears, else 2.
    pub fn parse_runlength(text: &str) -> Result<Self, ColoringError> {
        let mut cells: Vec<u8> = Vec::new();
        let mut r = 2u8;
        let mut saw_token = false;
        for tok in text.split_whitespace() {
            saw_token = true;
            let mut chars = tok.chars();
            let letter = chars.next().ok_or_else(|| ColoringError::BadToken(tok.into()))?;
            let color = Color::from_letter(letter).ok_or(ColoringError::UnknownLetter(letter))?;
            let count: usize = chars
                .as_str()
                .parse()
                .map_err(|_| ColoringError::BadToken(tok.into()))?;
            if count == 0 {
                return Err(ColoringError::BadToken(tok.into()));
            }
            if color == Color::G {
                r = 3;
            }
            cells.extend(std::iter::repeat(color.0).take(count));
        }
        if !saw_token {
            return Err(ColoringError::EmptyInput);
        }
        let n = cells.len();
        Ok(Coloring { n, r, cells })
    }

    /// Run-length text with maximal runs: `format(parse(s))` is the normal
    /// form of `s`.
    pub fn format_runlength(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.n {
            let c = self.cells[i];
            let mut j = i + 1;
            while j < self.n && self.cells[j] == c {
                j += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            out.push(Color(c).letter());
            out.push_str(&(j - i).to_string());
            i = j;
        }
        out
    }

    /// Per-color cell counts over `[1, n]`, `[1, floor(n/a)]`, and the rest.
    pub fn mu_stats(&self, a: u32) -> MuStats {
        assert!(a >= 1, "split parameter a must be >= 1");
        let lo_len = self.n / a as usize;
        let mut mu = [0u64; 3];
        let mut mu_lo = [0u64; 3];
        for (i, &c) in self.cells.iter().enumerate() {
            mu[c as usize] += 1;
            if i < lo_len {
                mu_lo[c as usize] += 1;
            }
        }
        let mut mu_hi = [0u64; 3];
        for c in 0..3 {
            mu_hi[c] = mu[c] - mu_lo[c];
        }
        MuStats { a, lo_len, mu, mu_lo, mu_hi }
    }

    /// Color patterns of the symmetric pairs `{s, len+1-s}` of `[1, len]`,
    /// `s <= floor(len/2)`; requires `len <= n`.  For odd `len` the middle
    /// cell is in no pair and is not counted.
    pub fn pair_stats(&self, len: usize) -> Result<PairStats, ColoringError> {
        if len > self.n {
            return Err(ColoringError::PairLenTooLarge { len, n: self.n });
        }
        let mut mu_cc = [[0u64; 3]; 3];
        for s in 1..=(len / 2) {
            let lo = self.cells[s - 1] as usize;
            let hi = self.cells[len - s] as usize;
            mu_cc[lo][hi] += 1;
        }
        let mut gamma = 0u64;
        for lo in 0..3 {
            for hi in 0..3 {
                if lo != hi {
                    gamma += mu_cc[lo][hi];
                }
            }
        }
        Ok(PairStats { len, mu_cc, gamma })
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_runlength())
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    n: usize,
    r: u8,
    runs: String,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        ColoringRepr { n: self.n, r: self.r, runs: self.format_runlength() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let repr = ColoringRepr::deserialize(deserializer)?;
        let parsed = Coloring::parse_runlength(&repr.runs).map_err(D::Error::custom)?;
        if parsed.n != repr.n {
            return Err(D::Error::custom(format!(
                "runs describe {} cells but n={}",
                parsed.n, repr.n
            )));
        }
        let out = if repr.r >= parsed.r {
            parsed.widen(repr.r).map_err(D::Error::custom)?
        } else {
            return Err(D::Error::custom(format!(
                "runs use colors outside r={}",
                repr.r
            )));
        };
        Ok(out)
    }
}

/// Per-color counts over the full interval and its `a`-split.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MuStats {
    pub a: u32,
    /// `floor(n/a)`, the length of the lo-interval.
    pub lo_len: usize,
    pub mu: [u64; 3],
    pub mu_lo: [u64; 3],
    pub mu_hi: [u64; 3],
}

impl MuStats {
    pub fn mu(&self, c: Color) -> u64 {
        self.mu[c.index()]
    }

    pub fn mu_lo(&self, c: Color) -> u64 {
        self.mu_lo[c.index()]
    }

    pub fn mu_hi(&self, c: Color) -> u64 {
        self.mu_hi[c.index()]
    }
}

/// Color-pattern counts of symmetric pairs of `[1, len]`.
///
/// `mu_cc[c][d]` counts pairs whose smaller element has color `c` and larger
/// element color `d`; `gamma` is the number of bichromatic pairs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PairStats {
    pub len: usize,
    pub mu_cc: [[u64; 3]; 3],
    pub gamma: u64,
}

impl PairStats {
    pub fn pattern(&self, lo: Color, hi: Color) -> u64 {
        self.mu_cc[lo.index()][hi.index()]
    }

    pub fn pair_count(&self) -> u64 {
        (self.len / 2) as u64
    }
}

/// Weighted block list; weights are exact (rational or `p + q*sqrt(3)`) and
/// must be nonnegative with positive total.
#[derive(Clone, Debug)]
pub struct BlockSpec {
    blocks: Vec<(Color, Exact)>,
}

impl BlockSpec {
    pub fn new(blocks: Vec<(Color, Exact)>) -> Result<Self, ColoringError> {
        if blocks.is_empty() {
            return Err(ColoringError::BadBlockSpec("no blocks".into()));
        }
        let mut total = Exact::zero();
        for (_, w) in &blocks {
            if w.sign() == std::cmp::Ordering::Less {
                return Err(ColoringError::BadBlockSpec(format!("negative weight {w}")));
            }
            total = total + *w;
        }
        if total.sign() != std::cmp::Ordering::Greater {
            return Err(ColoringError::BadBlockSpec("total weight is zero".into()));
        }
        Ok(BlockSpec { blocks })
    }

    pub fn from_ints(blocks: &[(Color, i64)]) -> Result<Self, ColoringError> {
        Self::new(blocks.iter().map(|&(c, w)| (c, Exact::from_int(w as i128))).collect())
    }

    pub fn blocks(&self) -> &[(Color, Exact)] {
        &self.blocks
    }

    pub fn total_weight(&self) -> Exact {
        let mut total = Exact::zero();
        for (_, w) in &self.blocks {
            total = total + *w;
        }
        total
    }
}

/// Realize a block spec over `[1, n]` by cumulative floors: block `k` covers
/// `(floor(n*W_{k-1}/W), floor(n*W_k/W)]`.  Blocks may round to empty; every
/// realized block differs from its exact share `n*w_k/W` by less than 1.
///
/// `r` is 3 when a `G` block is present, else 2.
pub fn from_blocks(n: usize, spec: &BlockSpec) -> Result<Coloring, ColoringError> {
    if n == 0 {
        return Err(ColoringError::EmptyColoring);
    }
    let total = spec.total_weight();
    let r = if spec.blocks.iter().any(|(c, _)| *c == Color::G) { 3 } else { 2 };
    let mut cells = vec![0u8; n];
    let mut acc = Exact::zero();
    let mut prev = 0usize;
    for (color, w) in &spec.blocks {
        acc = acc + *w;
        let hi = (Exact::from_int(n as i128) * acc / total).floor_i128();
        debug_assert!(hi >= prev as i128 && hi <= n as i128);
        let hi = hi as usize;
        for cell in cells.iter_mut().take(hi).skip(prev) {
            *cell = color.0;
        }
        prev = hi;
    }
    debug_assert_eq!(prev, n, "block weights must tile the whole interval");
    Ok(Coloring { n, r, cells })
}
