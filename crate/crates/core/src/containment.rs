//! `N(n; alpha)`: the number of SYT with `n` cells that contain a fixed SYT
//! of shape `alpha`.
//!
//! Three independent evaluations are provided:
//!
//! - [`n_direct`] sums `f^{lambda/alpha}` over every `lambda |- n`.
//! - [`n_thm1`] is the finite expansion `sum_j e_j(alpha) t_{n-j}`, whose
//!   coefficients are character values on the classes `(mu~, 1^{k-j})`.
//! - [`n_eq8`] is `sum_j C(n, j) (sum_{mu |- k-j} f^{alpha/mu}) t_{n-j}` with
//!   `n + k` cells.
//!
//! Single-row shapes get the closed forms in [`n_row`], [`check_genpoly`]
//! and [`check_stability`]. Division only ever happens in [`Rat`]; every
//! integer result is checked before it is returned.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::characters::{character, f_count};
use crate::partitions::{partitions_no_small_parts, partitions_of, Partition, SkewShape};
use crate::scalar::{binomial, factorial};
use crate::sequences::{a_poly, b, q, t};
use crate::skew_count::{f_skew_det, f_skew_sum_over_inner};
use crate::{Error, Rat, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ContainmentMethod {
    Direct,
    Thm1,
    Eq8,
    RowClosedForm,
}

impl ContainmentMethod {
    /// The three methods that work for every shape.
    pub const GENERAL: [ContainmentMethod; 3] =
        [ContainmentMethod::Direct, ContainmentMethod::Thm1, ContainmentMethod::Eq8];

    pub fn name(self) -> &'static str {
        match self {
            ContainmentMethod::Direct => "direct",
            ContainmentMethod::Thm1 => "thm1",
            ContainmentMethod::Eq8 => "eq8",
            ContainmentMethod::RowClosedForm => "row-closed-form",
        }
    }
}

impl fmt::Display for ContainmentMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ContainmentMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "direct" => Ok(ContainmentMethod::Direct),
            "thm1" => Ok(ContainmentMethod::Thm1),
            "eq8" => Ok(ContainmentMethod::Eq8),
            "row-closed-form" | "row" => Ok(ContainmentMethod::RowClosedForm),
            other => Err(Error::Precondition(format!("unknown containment method {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContainmentResult {
    pub n: usize,
    pub alpha: Partition,
    pub value: BigInt,
    pub method: ContainmentMethod,
}

/// Evaluates `N(n; alpha)` with `method`.
pub fn containment(n: usize, alpha: &Partition, method: ContainmentMethod) -> Result<ContainmentResult> {
    let value = match method {
        ContainmentMethod::Direct => n_direct(n, alpha),
        ContainmentMethod::Thm1 => n_thm1(n, alpha)?,
        ContainmentMethod::Eq8 => n_eq8(n, alpha),
        ContainmentMethod::RowClosedForm => {
            let k = alpha.weight();
            if alpha.len() > 1 && alpha.first() > 1 {
                return Err(Error::Precondition(format!(
                    "the row closed form needs a single row or column, got {alpha}"
                )));
            }
            if n < k {
                BigInt::zero()
            } else {
                n_row(n, k)?
            }
        }
    };
    Ok(ContainmentResult {
        n,
        alpha: alpha.clone(),
        value,
        method,
    })
}

/// `sum_{lambda |- n} f^{lambda/alpha}`, fanned out across `lambda`.
pub fn n_direct(n: usize, alpha: &Partition) -> BigInt {
    if n < alpha.weight() {
        return BigInt::zero();
    }
    partitions_of(n)
        .into_par_iter()
        .filter(|lambda| lambda.first() >= alpha.first() && lambda.len() >= alpha.len())
        .filter(|lambda| lambda.contains(alpha))
        .map(|lambda| {
            let shape = SkewShape::new(lambda, alpha.clone()).expect("containment checked");
            f_skew_det(&shape).expect("determinant of a valid skew shape is integral")
        })
        .sum()
}

/// `e_j(alpha)`, the coefficient of `t_{n-j}`: zero for `j > |alpha|`.
pub fn e_coeff(j: usize, alpha: &Partition) -> Result<Rat> {
    let k = alpha.weight();
    if j > k {
        return Ok(Rat::zero());
    }
    let mut sum = Rat::zero();
    for mu in partitions_no_small_parts(j) {
        let class = Partition::from_unsorted(mu.tilde().with_ones(k - j).into_parts());
        let chi = character(alpha, &class)?;
        sum += Rat::new(chi, mu.centralizer_order());
    }
    Ok(sum / Rat::from_integer(factorial(k - j)))
}

/// `sum_{j=0}^{k} e_j(alpha) t_{n-j}`; zero for `n < |alpha|`.
pub fn n_thm1(n: usize, alpha: &Partition) -> Result<BigInt> {
    let k = alpha.weight();
    if n < k {
        return Ok(BigInt::zero());
    }
    let mut total = Rat::zero();
    for j in 0..=k {
        let e = e_coeff(j, alpha)?;
        if !e.is_zero() {
            total += e * Rat::from_integer(t(n as i64 - j as i64));
        }
    }
    if !total.is_integer() || total.is_negative() {
        return Err(Error::NonIntegral {
            context: "the character expansion of N(n; alpha)",
            value: total,
        });
    }
    Ok(total.to_integer())
}

/// `N(n + k; alpha) = sum_j C(n, j) (sum_{mu |- k-j} f^{alpha/mu}) t_{n-j}`,
/// taking the total cell count `n_plus_k`.
pub fn n_eq8(n_plus_k: usize, alpha: &Partition) -> BigInt {
    let k = alpha.weight();
    if n_plus_k < k {
        return BigInt::zero();
    }
    let n = n_plus_k - k;
    (0..=k.min(n))
        .map(|j| binomial(n, j) * f_skew_sum_over_inner(alpha, k - j) * t((n - j) as i64))
        .sum()
}

/// `P(n; alpha) = N(n; alpha) / t_n`.
pub fn p_prob(n: usize, alpha: &Partition) -> Result<Rat> {
    Ok(Rat::new(n_thm1(n, alpha)?, t(n as i64)))
}

/// `N(n + k; k)` for the single row `(k)`, by both
/// `sum_j C(n, j) t_{n-j}` and `sum_j q_j / (k-j)! t_{n+k-j}`.
pub fn n_row(n_plus_k: usize, k: usize) -> Result<BigInt> {
    if n_plus_k < k {
        return Err(Error::Precondition(format!(
            "row closed form needs n + k >= k, got n + k = {n_plus_k}, k = {k}"
        )));
    }
    let n = n_plus_k - k;
    let binomial_form: BigInt = (0..=k.min(n))
        .map(|j| binomial(n, j) * t((n - j) as i64))
        .sum();
    let q_form: Rat = (0..=k)
        .map(|j| q(j) / Rat::from_integer(factorial(k - j)) * Rat::from_integer(t((n_plus_k - j) as i64)))
        .sum();
    if q_form != Rat::from_integer(binomial_form.clone()) {
        return Err(Error::Mismatch {
            context: "row closed forms",
            left: binomial_form.to_string(),
            right: q_form.to_string(),
        });
    }
    Ok(binomial_form)
}

/// Checks `sum_k N(n + k; k) x^k = A_n(x) / (1 - x)` through `x^max_k`.
pub fn check_genpoly(n: usize, max_k: usize) -> Result<bool> {
    let poly = a_poly(n);
    let mut prefix = BigInt::zero();
    for k in 0..=max_k {
        prefix += poly.coeff(k);
        if n_row(n + k, k)? != prefix {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks `N(n + k; k) = b_n` for every `n <= k`.
pub fn check_stability(k: usize) -> Result<bool> {
    for n in 0..=k {
        if n_row(n + k, k)? != b(n) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A closed form `N(n; alpha) = (1/d) sum_i c_i t_{n - s_i}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedForm {
    /// Every shape the form covers, including conjugates.
    pub shapes: &'static [&'static [usize]],
    pub denominator: i64,
    /// `(coefficient, shift)` pairs.
    pub terms: &'static [(i64, usize)],
}

impl ClosedForm {
    pub fn shapes(&self) -> Vec<Partition> {
        self.shapes
            .iter()
            .map(|s| Partition::new(s.to_vec()).expect("closed-form shapes are partitions"))
            .collect()
    }

    pub fn weight(&self) -> usize {
        self.shapes[0].iter().sum()
    }

    pub fn evaluate(&self, n: usize) -> Rat {
        let sum: BigInt = self
            .terms
            .iter()
            .map(|&(c, shift)| BigInt::from(c) * t(n as i64 - shift as i64))
            .sum();
        Rat::new(sum, BigInt::from(self.denominator))
    }

    /// Human-readable right-hand side, e.g. `(t_n + 2 t_{n-3})/6`.
    pub fn describe(&self) -> String {
        let mut body = String::new();
        for (i, &(c, shift)) in self.terms.iter().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if i > 0 {
                body.push_str(&format!(" {sign} "));
            } else if c < 0 {
                body.push('-');
            }
            let mag = c.abs();
            if mag != 1 {
                body.push_str(&format!("{mag} "));
            }
            if shift == 0 {
                body.push_str("t_n");
            } else {
                body.push_str(&format!("t_{{n-{shift}}}"));
            }
        }
        if self.denominator == 1 {
            body
        } else {
            format!("({body})/{}", self.denominator)
        }
    }
}

/// Exact formulas for every `alpha` with `|alpha| <= 5`.
pub const CLOSED_FORMS: &[ClosedForm] = &[
    ClosedForm { shapes: &[&[1]], denominator: 1, terms: &[(1, 0)] },
    ClosedForm { shapes: &[&[2], &[1, 1]], denominator: 2, terms: &[(1, 0)] },
    ClosedForm { shapes: &[&[3], &[1, 1, 1]], denominator: 6, terms: &[(1, 0), (2, 3)] },
    ClosedForm { shapes: &[&[2, 1]], denominator: 3, terms: &[(1, 0), (-1, 3)] },
    ClosedForm { shapes: &[&[4], &[1, 1, 1, 1]], denominator: 24, terms: &[(1, 0), (8, 3), (6, 4)] },
    ClosedForm { shapes: &[&[3, 1], &[2, 1, 1]], denominator: 8, terms: &[(1, 0), (-2, 4)] },
    ClosedForm { shapes: &[&[2, 2]], denominator: 12, terms: &[(1, 0), (-4, 3), (6, 4)] },
    ClosedForm {
        shapes: &[&[5], &[1, 1, 1, 1, 1]],
        denominator: 120,
        terms: &[(1, 0), (20, 3), (30, 4), (24, 5)],
    },
    ClosedForm { shapes: &[&[4, 1], &[2, 1, 1, 1]], denominator: 30, terms: &[(1, 0), (5, 3), (-6, 5)] },
    ClosedForm { shapes: &[&[3, 2], &[2, 2, 1]], denominator: 24, terms: &[(1, 0), (-4, 3), (6, 4)] },
    ClosedForm { shapes: &[&[3, 1, 1]], denominator: 20, terms: &[(1, 0), (-10, 4), (4, 5)] },
];

/// The closed form covering `alpha`, if `|alpha| <= 5`.
pub fn closed_form_for(alpha: &Partition) -> Option<&'static ClosedForm> {
    CLOSED_FORMS
        .iter()
        .find(|form| form.shapes.iter().any(|s| *s == alpha.parts()))
}

/// `f^alpha / k!`, the leading coefficient.
pub fn leading_coefficient(alpha: &Partition) -> Rat {
    Rat::new(f_count(alpha), factorial(alpha.weight()))
}
