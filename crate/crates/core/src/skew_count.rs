//! Counting SYT of skew shape three independent ways.
//!
//! - [`f_skew_brute`]: grow the filling one value at a time from the inner
//!   shape, memoized on the filled region.
//! - [`f_skew_det`]: `n! det[1/(outer_i - inner_j - i + j)!]`.
//! - [`f_skew_char`]: the character sum
//!   `sum_{nu |- k} z_nu^{-1} chi^outer(nu, 1^{n-k}) chi^inner(nu)`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::characters::character;
use crate::partitions::{partitions_of, Partition, SkewShape};
use crate::scalar::{determinant, factorial};
use crate::{Error, Rat, Result};

/// Largest cell count [`f_skew_brute`] accepts.
pub const BRUTE_FORCE_CAP: usize = 25;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SkewMethod {
    Brute,
    Determinant,
    Character,
}

impl SkewMethod {
    pub const ALL: [SkewMethod; 3] = [SkewMethod::Brute, SkewMethod::Determinant, SkewMethod::Character];

    pub fn name(self) -> &'static str {
        match self {
            SkewMethod::Brute => "brute",
            SkewMethod::Determinant => "det",
            SkewMethod::Character => "char",
        }
    }

    pub fn count(self, shape: &SkewShape) -> Result<BigInt> {
        match self {
            SkewMethod::Brute => f_skew_brute(shape),
            SkewMethod::Determinant => f_skew_det(shape),
            SkewMethod::Character => f_skew_char(shape),
        }
    }
}

impl fmt::Display for SkewMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SkewMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "brute" => Ok(SkewMethod::Brute),
            "det" => Ok(SkewMethod::Determinant),
            "char" => Ok(SkewMethod::Character),
            other => Err(Error::Precondition(format!("unknown skew method {other:?}"))),
        }
    }
}

/// Counts fillings of `shape` by placing `1, 2, ..., n` in turn at every
/// addable corner of the filled region.
pub fn f_skew_brute(shape: &SkewShape) -> Result<BigInt> {
    let cells = shape.size();
    if cells > BRUTE_FORCE_CAP {
        return Err(Error::CapExceeded {
            context: "brute-force skew enumeration",
            size: cells,
            cap: BRUTE_FORCE_CAP,
        });
    }
    let outer = shape.outer().parts().to_vec();
    let start: Vec<usize> = (0..outer.len()).map(|i| shape.inner().part(i)).collect();
    let mut memo = HashMap::new();
    Ok(place(&outer, start, &mut memo))
}

fn place(outer: &[usize], filled: Vec<usize>, memo: &mut HashMap<Vec<usize>, BigInt>) -> BigInt {
    if filled.as_slice() == outer {
        return BigInt::one();
    }
    if let Some(v) = memo.get(&filled) {
        return v.clone();
    }
    let mut total = BigInt::zero();
    for r in 0..outer.len() {
        let room = filled[r] < outer[r];
        let supported = r == 0 || filled[r - 1] > filled[r];
        if room && supported {
            let mut next = filled.clone();
            next[r] += 1;
            total += place(outer, next, memo);
        }
    }
    memo.insert(filled, total.clone());
    total
}

/// Determinant formula over exact rationals, with `1/m! = 0` for `m < 0`.
pub fn f_skew_det(shape: &SkewShape) -> Result<BigInt> {
    let outer = shape.outer();
    let inner = shape.inner();
    let len = outer.len();
    let inv_fact = |m: i64| -> Rat {
        if m < 0 {
            Rat::zero()
        } else {
            Rat::new(BigInt::one(), factorial(m as usize))
        }
    };
    let matrix: Vec<Vec<Rat>> = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| inv_fact(outer.part(i) as i64 - inner.part(j) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    let value = Rat::from_integer(factorial(shape.size())) * determinant(matrix);
    into_count(value, "the skew determinant")
}

/// Character sum over classes of the inner weight.
pub fn f_skew_char(shape: &SkewShape) -> Result<BigInt> {
    let outer = shape.outer();
    let inner = shape.inner();
    let k = inner.weight();
    let pad = outer.weight() - k;
    let mut total = Rat::zero();
    for nu in partitions_of(k) {
        let big = character(outer, &nu.with_ones(pad))?;
        if big.is_zero() {
            continue;
        }
        let small = character(inner, &nu)?;
        total += Rat::new(big * small, nu.centralizer_order());
    }
    into_count(total, "the skew character sum")
}

/// `sum_{mu |- m, mu ⊆ alpha} f^{alpha/mu}`.
pub fn f_skew_sum_over_inner(alpha: &Partition, m: usize) -> BigInt {
    if m > alpha.weight() {
        return BigInt::zero();
    }
    partitions_of(m)
        .into_par_iter()
        .filter(|mu| alpha.contains(mu))
        .map(|mu| {
            let shape = SkewShape::new(alpha.clone(), mu).expect("containment checked");
            f_skew_det(&shape).expect("determinant of a valid skew shape is integral")
        })
        .sum()
}

fn into_count(value: Rat, context: &'static str) -> Result<BigInt> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NonIntegral { context, value });
    }
    Ok(value.to_integer())
}
