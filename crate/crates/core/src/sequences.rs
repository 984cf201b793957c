//! The scalar sequences the containment formulas consume.
//!
//! - `t_n`: involutions of degree `n` (equivalently, all SYT with `n` cells).
//! - `q_j`: coefficients of `e^{-x - x^2/2} / (1 - x)`, so `j! q_j` counts
//!   permutations with no fixed points and no 2-cycles.
//! - `b_n`: `n!` times the coefficients of `e^{u^2/2 + 2u}`.
//! - `A_n(x)`: `A_0 = 1`, `A_{n+1} = A_n' + (x + 1) A_n`.
//!
//! Values are memoized in a [`SeriesTable`]; the free functions share one
//! process-wide table.

use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::scalar::factorial;
use crate::Rat;

/// Dense polynomial with integer coefficients, lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        IntPoly::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn one() -> Self {
        IntPoly::new(vec![BigInt::one()])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Degree, with the zero polynomial reported as `None`.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn derivative(&self) -> IntPoly {
        IntPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * i)
                .collect(),
        )
    }

    /// `(x + 1) * self`.
    pub fn times_x_plus_one(&self) -> IntPoly {
        let mut out = vec![BigInt::zero(); self.coeffs.len() + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            out[i] += c;
            out[i + 1] += c;
        }
        IntPoly::new(out)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (i, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{c}*x")?,
                (_, true) => write!(f, "x^{i}")?,
                (_, false) => write!(f, "{c}*x^{i}")?,
            }
        }
        Ok(())
    }
}

/// Truncated `exp(g)` for a series `g` with zero constant term, using
/// `m c_m = sum_i i g_i c_{m-i}`.
pub fn exp_series(g: &[Rat], len: usize) -> Vec<Rat> {
    let mut c = Vec::with_capacity(len);
    if len == 0 {
        return c;
    }
    c.push(Rat::one());
    for m in 1..len {
        let mut acc = Rat::zero();
        for i in 1..=m {
            if let Some(gi) = g.get(i) {
                if !gi.is_zero() {
                    acc += gi * Rat::from_integer(BigInt::from(i)) * &c[m - i];
                }
            }
        }
        c.push(acc / Rat::from_integer(BigInt::from(m)));
    }
    c
}

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Memo tables for `t`, `q`, `b` and `A`.
#[derive(Debug)]
pub struct SeriesTable {
    t: RwLock<Vec<BigInt>>,
    q: RwLock<Vec<Rat>>,
    b: RwLock<Vec<BigInt>>,
    a: RwLock<Vec<IntPoly>>,
}

impl Default for SeriesTable {
    fn default() -> Self {
        SeriesTable {
            t: RwLock::new(vec![BigInt::one(), BigInt::one()]),
            q: RwLock::new(Vec::new()),
            b: RwLock::new(Vec::new()),
            a: RwLock::new(vec![IntPoly::one()]),
        }
    }
}

impl SeriesTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn global() -> &'static SeriesTable {
        static GLOBAL: OnceLock<SeriesTable> = OnceLock::new();
        GLOBAL.get_or_init(SeriesTable::new)
    }

    /// Involution number; zero for negative `n`.
    pub fn t(&self, n: i64) -> BigInt {
        if n < 0 {
            return BigInt::zero();
        }
        let n = n as usize;
        if let Some(v) = self.t.read().expect("series table poisoned").get(n) {
            return v.clone();
        }
        let mut t = self.t.write().expect("series table poisoned");
        while t.len() <= n {
            let m = t.len();
            let next = &t[m - 1] + &t[m - 2] * (m - 1);
            t.push(next);
        }
        t[n].clone()
    }

    pub fn q(&self, j: usize) -> Rat {
        if let Some(v) = self.q.read().expect("series table poisoned").get(j) {
            return v.clone();
        }
        let len = (j + 1).max(16);
        let exp = exp_series(&[Rat::zero(), rat(-1, 1), rat(-1, 2)], len);
        // dividing by 1 - x turns coefficients into partial sums
        let mut sums = Vec::with_capacity(len);
        let mut acc = Rat::zero();
        for c in exp {
            acc += c;
            sums.push(acc.clone());
        }
        let mut q = self.q.write().expect("series table poisoned");
        if q.len() < sums.len() {
            *q = sums;
        }
        q[j].clone()
    }

    pub fn b(&self, n: usize) -> BigInt {
        if let Some(v) = self.b.read().expect("series table poisoned").get(n) {
            return v.clone();
        }
        let len = (n + 1).max(16);
        let exp = exp_series(&[Rat::zero(), rat(2, 1), rat(1, 2)], len);
        let values: Vec<BigInt> = exp
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let scaled = c * Rat::from_integer(factorial(i));
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        let mut b = self.b.write().expect("series table poisoned");
        if b.len() < values.len() {
            *b = values;
        }
        b[n].clone()
    }

    pub fn a_poly(&self, n: usize) -> IntPoly {
        if let Some(v) = self.a.read().expect("series table poisoned").get(n) {
            return v.clone();
        }
        let mut a = self.a.write().expect("series table poisoned");
        while a.len() <= n {
            let last = a.last().expect("A_0 is seeded");
            let next = last.derivative().add(&last.times_x_plus_one());
            a.push(next);
        }
        a[n].clone()
    }
}

/// Involution number `t_n`, zero for `n < 0`.
pub fn t(n: i64) -> BigInt {
    SeriesTable::global().t(n)
}

pub fn q(j: usize) -> Rat {
    SeriesTable::global().q(j)
}

pub fn b(n: usize) -> BigInt {
    SeriesTable::global().b(n)
}

pub fn a_poly(n: usize) -> IntPoly {
    SeriesTable::global().a_poly(n)
}
