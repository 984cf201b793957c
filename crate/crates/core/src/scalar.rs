//! Field scalars for the generic evaluators.
//!
//! [`Scalar`] is implemented for `f32`, `f64` and [`Rat`]. Exact callers use
//! `Rat`; the float impls exist so the same evaluators can produce quick
//! numeric previews.

use std::fmt::Debug;
use std::ops::Neg;

use num_bigint::BigInt;
use num_traits::{Num, One, ToPrimitive, Zero};

use crate::Rat;

pub trait Scalar: Clone + Debug + Num + Neg<Output = Self> {
    fn from_int(value: &BigInt) -> Self;

    fn from_rat(value: &Rat) -> Self;

    fn from_i64(value: i64) -> Self {
        Self::from_int(&BigInt::from(value))
    }

    /// `self^exp` by repeated squaring.
    fn powu(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            exp >>= 1;
        }
        acc
    }
}

impl Scalar for Rat {
    fn from_int(value: &BigInt) -> Self {
        Rat::from_integer(value.clone())
    }

    fn from_rat(value: &Rat) -> Self {
        value.clone()
    }
}

macro_rules! impl_float_scalar {
    ($t:ty, $conv:ident) => {
        impl Scalar for $t {
            fn from_int(value: &BigInt) -> Self {
                value.$conv().unwrap_or(<$t>::NAN)
            }

            fn from_rat(value: &Rat) -> Self {
                rat_to_f64(value) as $t
            }
        }
    };
}

impl_float_scalar!(f32, to_f32);
impl_float_scalar!(f64, to_f64);

/// Converts a rational to the nearest `f64`, including when numerator and
/// denominator individually overflow.
pub fn rat_to_f64(value: &Rat) -> f64 {
    if let Some(v) = value.to_f64() {
        if v.is_finite() {
            return v;
        }
    }
    let numer = value.numer();
    let denom = value.denom();
    if numer.is_zero() {
        return 0.0;
    }
    let ln = ln_abs_bigint(numer) - ln_abs_bigint(denom);
    let sign = if *numer < BigInt::zero() { -1.0 } else { 1.0 };
    sign * ln.exp()
}

/// Natural logarithm of `|value|`, accurate to f64 precision for any size.
pub fn ln_abs_bigint(value: &BigInt) -> f64 {
    let magnitude = value.magnitude();
    let bits = magnitude.bits();
    if bits <= 1000 {
        return magnitude.to_f64().unwrap_or(f64::INFINITY).ln();
    }
    let shift = bits - 64;
    let top = (magnitude >> shift).to_f64().unwrap_or(f64::INFINITY);
    top.ln() + shift as f64 * std::f64::consts::LN_2
}

/// Exact `value` as an integer, if it is one.
pub fn rat_to_int(value: &Rat) -> Option<BigInt> {
    value.is_integer().then(|| value.to_integer())
}

/// `n!` as a big integer.
pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Binomial coefficient, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Determinant by Gaussian elimination, pivoting on the first nonzero entry.
///
/// Exact for [`Rat`]; for floats it is only as stable as unpivoted
/// elimination allows.
pub fn determinant<T: Scalar>(mut rows: Vec<Vec<T>>) -> T {
    let n = rows.len();
    let mut det = T::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !rows[r][col].is_zero()) else {
            return T::zero();
        };
        if pivot != col {
            rows.swap(pivot, col);
            det = -det;
        }
        let p = rows[col][col].clone();
        det = det * p.clone();
        for r in col + 1..n {
            if rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone() / p.clone();
            for c in col..n {
                let delta = factor.clone() * rows[col][c].clone();
                rows[r][c] = rows[r][c].clone() - delta;
            }
        }
    }
    det
}
