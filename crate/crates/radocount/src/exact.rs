//! Exact scalar arithmetic for block weights: rational numbers extended by
//! sqrt(3), i.e. values `p + q*sqrt(3)` with rational `p`, `q`.
//!
//! Block proportions in the canonical colorings are rationals except for the
//! four-variable family, whose optimal proportions involve sqrt(3).  Carrying
//! them exactly means rounding happens in exactly one place (cell realization)
//! and comparisons between weights are decidable.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num::rational::Ratio;
use num::traits::ToPrimitive;
use num::{Signed, Zero};

type Q = Ratio<i128>;

/// `rat + irr * sqrt(3)` with both parts rational.
///
/// Representation equality is value equality: sqrt(3) is irrational, so
/// `p + q*sqrt(3) = p' + q'*sqrt(3)` forces `p = p'` and `q = q'`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Exact {
    rat: Q,
    irr: Q,
}

impl Exact {
    pub fn new(rat: Q, irr: Q) -> Self {
        Exact { rat, irr }
    }

    pub fn from_int(v: i128) -> Self {
        Exact { rat: Q::from_integer(v), irr: Q::zero() }
    }

    /// `num/den`; panics if `den == 0`.
    pub fn from_ratio(num: i128, den: i128) -> Self {
        Exact { rat: Q::new(num, den), irr: Q::zero() }
    }

    /// `(num/den) * sqrt(3)`; panics if `den == 0`.
    pub fn sqrt3_ratio(num: i128, den: i128) -> Self {
        Exact { rat: Q::zero(), irr: Q::new(num, den) }
    }

    pub fn zero() -> Self {
        Self::from_int(0)
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn rational_part(&self) -> Q {
        self.rat
    }

    pub fn sqrt3_part(&self) -> Q {
        self.irr
    }

    pub fn is_rational(&self) -> bool {
        self.irr.is_zero()
    }

    pub fn is_zero(&self) -> bool {
        self.rat.is_zero() && self.irr.is_zero()
    }

    /// Sign of the value: exact, no floating point involved.
    pub fn sign(&self) -> Ordering {
        let (p, q) = (self.rat, self.irr);
        if q.is_zero() {
            return p.cmp(&Q::zero());
        }
        if p.is_zero() {
            return q.cmp(&Q::zero());
        }
        match (p.is_positive(), q.is_positive()) {
            (true, true) => Ordering::Greater,
            (false, false) => Ordering::Less,
            // p > 0, q < 0: sign of p^2 - 3q^2 (equality impossible: sqrt(3)
            // is irrational, so p^2 = 3q^2 with q != 0 cannot happen).
            (true, false) => (p * p).cmp(&(Q::from_integer(3) * q * q)),
            // p < 0, q > 0: sign of 3q^2 - p^2.
            (false, true) => (Q::from_integer(3) * q * q).cmp(&(p * p)),
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.rat.to_f64().unwrap_or(f64::NAN) + self.irr.to_f64().unwrap_or(f64::NAN) * 3f64.sqrt()
    }

    /// Largest integer `m` with `m <= self`, computed exactly (a float guess
    /// corrected by exact comparisons).
    pub fn floor_i128(&self) -> i128 {
        if self.irr.is_zero() {
            return self.rat.floor().to_integer();
        }
        let mut m = self.to_f64().floor() as i128;
        while Exact::from_int(m + 1) <= *self {
            m += 1;
        }
        while Exact::from_int(m) > *self {
            m -= 1;
        }
        m
    }
}

impl Add for Exact {
    type Output = Exact;
    fn add(self, rhs: Exact) -> Exact {
        Exact { rat: self.rat + rhs.rat, irr: self.irr + rhs.irr }
    }
}

impl Sub for Exact {
    type Output = Exact;
    fn sub(self, rhs: Exact) -> Exact {
        Exact { rat: self.rat - rhs.rat, irr: self.irr - rhs.irr }
    }
}

impl Neg for Exact {
    type Output = Exact;
    fn neg(self) -> Exact {
        Exact { rat: -self.rat, irr: -self.irr }
    }
}

impl Mul for Exact {
    type Output = Exact;
    fn mul(self, rhs: Exact) -> Exact {
        // (p + q r3)(u + v r3) = pu + 3qv + (pv + qu) r3
        Exact {
            rat: self.rat * rhs.rat + Q::from_integer(3) * self.irr * rhs.irr,
            irr: self.rat * rhs.irr + self.irr * rhs.rat,
        }
    }
}

impl Div for Exact {
    type Output = Exact;
    /// Panics if `rhs` is zero.
    fn div(self, rhs: Exact) -> Exact {
        // Multiply by the conjugate: (u + v r3)(u - v r3) = u^2 - 3v^2, which
        // is zero only for u = v = 0.
        let conj = Exact { rat: rhs.rat, irr: -rhs.irr };
        let denom = rhs.rat * rhs.rat - Q::from_integer(3) * rhs.irr * rhs.irr;
        assert!(!denom.is_zero(), "division by zero Exact value");
        let num = self * conj;
        Exact { rat: num.rat / denom, irr: num.irr / denom }
    }
}

impl PartialOrd for Exact {
    fn partial_cmp(&self, other: &Exact) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Exact {
    fn cmp(&self, other: &Exact) -> Ordering {
        (*self - *other).sign()
    }
}

impl fmt::Display for Exact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn ratio(f: &mut fmt::Formatter<'_>, q: &Q) -> fmt::Result {
            if q.is_integer() {
                write!(f, "{}", q.numer())
            } else {
                write!(f, "{}/{}", q.numer(), q.denom())
            }
        }
        if self.irr.is_zero() {
            return ratio(f, &self.rat);
        }
        if !self.rat.is_zero() {
            ratio(f, &self.rat)?;
            write!(f, "{}", if self.irr.is_negative() { " - " } else { " + " })?;
        } else if self.irr.is_negative() {
            write!(f, "-")?;
        }
        let a = self.irr.abs();
        if a != Q::from_integer(1) {
            ratio(f, &a)?;
            write!(f, "*")?;
        }
        write!(f, "sqrt(3)")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordering_crosses_sqrt3() {
        // 12/7 < sqrt(3) < 7/4
        let r3 = Exact::sqrt3_ratio(1, 1);
        assert!(Exact::from_ratio(12, 7) < r3);
        assert!(r3 < Exact::from_ratio(7, 4));
        assert_eq!(r3.cmp(&r3), Ordering::Equal);
        // both signs of the irrational part near a rational
        assert!(Exact::from_ratio(-12, 7) > -r3);
        assert!(-r3 > Exact::from_ratio(-7, 4));
    }

    #[test]
    fn floor_of_irrational_values() {
        let r3 = Exact::sqrt3_ratio(1, 1);
        assert_eq!(r3.floor_i128(), 1);
        assert_eq!((Exact::from_int(10) * r3).floor_i128(), 17); // 17.32...
        assert_eq!((-r3).floor_i128(), -2);
        assert_eq!(Exact::from_ratio(-7, 2).floor_i128(), -4);
        assert_eq!(Exact::from_ratio(6, 3).floor_i128(), 2);
    }

    #[test]
    fn four_var_weights_sum_to_one() {
        // 3(10-r3)/97 + (6+r3)(10-r3)/97 + (10-r3)/97 = 1
        let ten_less = Exact::from_int(10) - Exact::sqrt3_ratio(1, 1);
        let w1 = Exact::from_int(3) * ten_less / Exact::from_int(97);
        let w2 = (Exact::from_int(6) + Exact::sqrt3_ratio(1, 1)) * ten_less / Exact::from_int(97);
        let w3 = ten_less / Exact::from_int(97);
        assert_eq!(w1 + w2 + w3, Exact::one());
    }

    #[test]
    fn division_round_trips() {
        let a = Exact::new(Q::new(5, 7), Q::new(-2, 3));
        let b = Exact::new(Q::new(1, 2), Q::new(4, 9));
        assert_eq!(a * b / b, a);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Exact::from_ratio(5, 22).to_string(), "5/22");
        assert_eq!(Exact::from_int(-3).to_string(), "-3");
        let v = Exact::new(Q::new(57, 97), Q::new(4, 97));
        assert_eq!(v.to_string(), "57/97 + 4/97*sqrt(3)");
        let w = Exact::new(Q::zero(), Q::new(-1, 1));
        assert_eq!(w.to_string(), "-sqrt(3)");
    }
}
