//! Asymptotic estimates and the symmetric-function evaluations behind them.
//!
//! Estimates are floating point and evaluated in the log domain where the
//! magnitudes would overflow. Every comparison against an exact value goes
//! through [`LogScaled::relative_error`] or through exact [`Rat`] arithmetic.
//!
//! The evaluators [`powersum_eval`], [`schur_eval`], [`super_schur_eval`]
//! and [`rectangle_product`] are generic over [`Scalar`], so they run on
//! exact rationals and on floats alike.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Float, FromPrimitive, One, Signed, Zero};
use rayon::prelude::*;

use crate::characters::{character, chi_transposition, f_count};
use crate::containment::{e_coeff, leading_coefficient, p_prob};
use crate::partitions::{partitions_of, Partition};
use crate::scalar::{determinant, factorial, ln_abs_bigint, rat_to_f64};
use crate::sequences::t;
use crate::{Error, Rat, Result, Scalar};

/// A value `factor * exp(ln_scale)`, kept split so that huge magnitudes
/// survive in floating point.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct LogScaled<F> {
    pub ln_scale: F,
    pub factor: F,
}

impl<F: Float> LogScaled<F> {
    /// The plain value; infinite if it overflows `F`.
    pub fn value(&self) -> F {
        self.factor * self.ln_scale.exp()
    }

    /// `self / exact - 1`, computed without forming either magnitude.
    pub fn relative_error(&self, exact: &BigInt) -> F {
        let ln_exact = F::from(ln_abs_bigint(exact)).expect("finite log");
        self.factor * (self.ln_scale - ln_exact).exp() - F::one()
    }
}

fn cast<F: FromPrimitive>(x: f64) -> F {
    F::from_f64(x).expect("representable constant")
}

fn involution_series<F: Float + FromPrimitive>(n: u64, shift: u64, order: u8) -> Result<LogScaled<F>> {
    if n == 0 {
        return Err(Error::Precondition("the involution expansion needs n >= 1".into()));
    }
    if order > 2 {
        return Err(Error::Precondition(format!("expansion order {order} > 2")));
    }
    if shift > n {
        return Err(Error::Precondition(format!("shift {shift} exceeds n = {n}")));
    }
    let nf: F = cast(n as f64);
    let j: F = cast(shift as f64);
    let half: F = cast(0.5);
    let root = nf.sqrt();
    let ln_scale = -half * cast::<F>(2.0).ln() + (nf - j) * half * nf.ln() - nf * half + root - cast(0.25);
    let mut factor = F::one();
    if order >= 1 {
        factor = factor + (cast::<F>(7.0 / 24.0) - j * half) / root;
    }
    if order >= 2 {
        let c = cast::<F>(119.0 / 1152.0) + cast::<F>(7.0 / 48.0) * j - cast::<F>(3.0 / 8.0) * j * j;
        factor = factor - c / nf;
    }
    Ok(LogScaled { ln_scale, factor })
}

/// `t_n ~ n^{n/2} e^{-n/2 + sqrt(n) - 1/4} / sqrt(2) * (1 + 7/(24 sqrt n) - 119/(1152 n))`,
/// keeping `order` of the two correction terms.
pub fn mw_t_estimate<F: Float + FromPrimitive>(n: u64, order: u8) -> Result<LogScaled<F>> {
    involution_series(n, 0, order)
}

/// Estimate of `t_{n-j}` expanded around `n`, with both corrections.
pub fn mw_t_shift_estimate<F: Float + FromPrimitive>(n: u64, j: u64) -> Result<LogScaled<F>> {
    involution_series(n, j, 2)
}

fn e_as<F: FromPrimitive>(j: usize, alpha: &Partition) -> Result<F> {
    Ok(cast(rat_to_f64(&e_coeff(j, alpha)?)))
}

/// `P(n; alpha) ~ f^alpha/k! + e_3/n^{3/2} - (3 e_3 - 2 e_4)/(2 n^2)`.
///
/// The `n^-2` coefficient comes from `t_{n-j}/t_n = n^{-j/2} (1 - j/(2 sqrt n) + O(1/n))`,
/// leaving an `O(n^{-5/2})` residual.
pub fn p_expansion_estimate<F: Float + FromPrimitive>(n: u64, alpha: &Partition) -> Result<F> {
    p_expansion(n, alpha, cast(0.5))
}

/// Same truncation with the `n^-2` coefficient taken as `-(3 e_3 - 2 e_4)`,
/// twice the consistent value. Its residual only decays like `n^-2`; kept
/// so the two can be compared.
pub fn p_expansion_estimate_doubled<F: Float + FromPrimitive>(n: u64, alpha: &Partition) -> Result<F> {
    p_expansion(n, alpha, F::one())
}

fn p_expansion<F: Float + FromPrimitive>(n: u64, alpha: &Partition, second_scale: F) -> Result<F> {
    if n == 0 {
        return Err(Error::Precondition("the probability expansion needs n >= 1".into()));
    }
    let nf: F = cast(n as f64);
    let lead: F = cast(rat_to_f64(&leading_coefficient(alpha)));
    let e3: F = e_as(3, alpha)?;
    let e4: F = e_as(4, alpha)?;
    let three: F = cast(3.0);
    let two: F = cast(2.0);
    Ok(lead + e3 / nf.powf(cast(1.5)) - second_scale * (three * e3 - two * e4) / (nf * nf))
}

/// One row of the probability-expansion comparison.
#[derive(Clone, Debug, PartialEq)]
pub struct PExpansionRow {
    pub n: u64,
    pub exact: Rat,
    pub estimate: f64,
    /// `exact - estimate`.
    pub residual: f64,
    /// `residual * n^{5/2}`.
    pub scaled_residual: f64,
}

pub fn p_expansion_row(n: u64, alpha: &Partition) -> Result<PExpansionRow> {
    let exact = p_prob(n as usize, alpha)?;
    let estimate: f64 = p_expansion_estimate(n, alpha)?;
    let residual = rat_to_f64(&(&exact - Rat::from_float(estimate).expect("finite estimate")));
    Ok(PExpansionRow {
        n,
        exact,
        estimate,
        residual,
        scaled_residual: residual * (n as f64).powf(2.5),
    })
}

/// `f^lambda (f^alpha/k! + C_3 chi^alpha(2,1^{k-2}) / (2 (k-2)! sqrt n))`.
///
/// For `|alpha| < 2` the transposition class does not exist and only the
/// leading term is returned.
pub fn biane_estimate(f_lambda: &BigInt, n: u64, alpha: &Partition, c3: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::Precondition("the character estimate needs n >= 1".into()));
    }
    let k = alpha.weight();
    let f = rat_to_f64(&Rat::from_integer(f_lambda.clone()));
    let lead = rat_to_f64(&leading_coefficient(alpha));
    if k < 2 {
        return Ok(f * lead);
    }
    let chi = rat_to_f64(&chi_transposition(alpha)?);
    let denom = 2.0 * rat_to_f64(&Rat::from_integer(factorial(k - 2)));
    Ok(f * (lead + c3 * chi / (denom * (n as f64).sqrt())))
}

/// Partitions of `n` with `(2 - eps) sqrt n < lambda_1, len(lambda) < (2 + eps) sqrt n`.
pub fn par_eps(n: usize, eps: &Rat) -> Result<Vec<Partition>> {
    let bounds = SqrtBounds::new(n, eps)?;
    Ok(partitions_of(n)
        .into_iter()
        .filter(|l| bounds.inside(l.first()) && bounds.inside(l.len()))
        .collect())
}

/// `sum_{lambda in Par_eps(n)} f^lambda / t_n`.
pub fn par_eps_mass(n: usize, eps: &Rat) -> Result<Rat> {
    if n == 0 {
        return Err(Error::Precondition("the mass needs n >= 1".into()));
    }
    let bounds = SqrtBounds::new(n, eps)?;
    let total: BigInt = partitions_of(n)
        .into_par_iter()
        .filter(|l| bounds.inside(l.first()) && bounds.inside(l.len()))
        .map(|l| f_count(&l))
        .sum();
    Ok(Rat::new(total, t(n as i64)))
}

/// Strict bounds `(2 - eps) sqrt n < x < (2 + eps) sqrt n`, compared by
/// squaring so they stay exact.
struct SqrtBounds {
    n: Rat,
    low: Rat,
    high: Rat,
}

impl SqrtBounds {
    fn new(n: usize, eps: &Rat) -> Result<Self> {
        if !eps.is_positive() {
            return Err(Error::Precondition(format!("eps must be positive, got {eps}")));
        }
        let two = Rat::from_integer(BigInt::from(2));
        Ok(SqrtBounds {
            n: Rat::from_integer(BigInt::from(n)),
            low: &two - eps,
            high: two + eps,
        })
    }

    fn inside(&self, x: usize) -> bool {
        let x = Rat::from_integer(BigInt::from(x));
        let x2 = &x * &x;
        let above_low = !self.low.is_positive() || &self.low * &self.low * &self.n < x2;
        let below_high = x2 < &self.high * &self.high * &self.n;
        above_low && below_high
    }
}

/// `p_r(v) = sum_i v_i^r`.
pub fn powersum_eval<T: Scalar>(r: u32, v: &[T]) -> T {
    v.iter().fold(T::zero(), |acc, x| acc + x.powu(r))
}

/// Complete homogeneous symmetric polynomials `h_0..=h_max` at `v`.
fn complete_homogeneous<T: Scalar>(max: usize, v: &[T]) -> Vec<T> {
    let mut h = vec![T::zero(); max + 1];
    h[0] = T::one();
    for x in v {
        for k in 1..=max {
            h[k] = h[k].clone() + x.clone() * h[k - 1].clone();
        }
    }
    h
}

/// Schur polynomial `s_mu(v)` via the Jacobi–Trudi determinant
/// `det[h_{mu_i - i + j}]`.
pub fn schur_eval<T: Scalar>(mu: &Partition, v: &[T]) -> T {
    if mu.len() > v.len() {
        return T::zero();
    }
    let len = mu.len();
    let h = complete_homogeneous(mu.first() + len, v);
    let entry = |index: i64| -> T {
        if index < 0 {
            T::zero()
        } else {
            h[index as usize].clone()
        }
    };
    let matrix = (0..len)
        .map(|i| {
            (0..len)
                .map(|j| entry(mu.part(i) as i64 - i as i64 + j as i64))
                .collect()
        })
        .collect();
    determinant(matrix)
}

/// `s_alpha(a / -b)` from the power-sum expansion
/// `sum_{nu |- k} z_nu^{-1} chi^alpha(nu) prod_j (p_{nu_j}(a) + (-1)^{nu_j - 1} p_{nu_j}(b))`.
pub fn super_schur_eval<T: Scalar>(alpha: &Partition, a: &[T], b: &[T]) -> Result<T> {
    let mut total = T::zero();
    for nu in partitions_of(alpha.weight()) {
        let chi = character(alpha, &nu)?;
        if chi.is_zero() {
            continue;
        }
        let mut product = T::from_rat(&Rat::new(chi, nu.centralizer_order()));
        for &part in nu.parts() {
            let pa = powersum_eval(part as u32, a);
            let pb = powersum_eval(part as u32, b);
            product = product * if part.is_odd() { pa + pb } else { pa - pb };
        }
        total = total + product;
    }
    Ok(total)
}

/// The shape made of an `i x j` rectangle with `mu` attached on the right
/// and `nu'` attached below.
pub fn rectangle_shape(i: usize, j: usize, mu: &Partition, nu: &Partition) -> Result<Partition> {
    if mu.len() > i || nu.len() > j {
        return Err(Error::Precondition(format!(
            "rectangle {i}x{j} cannot carry mu = ({mu}) and nu = ({nu})"
        )));
    }
    let mut parts: Vec<usize> = (0..i).map(|r| mu.part(r) + j).collect();
    parts.extend(nu.conjugate().parts());
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect())
}

/// `s_mu(a) s_nu(b) prod_{r,s} (a_r + b_s)`, returned with the shape
/// `alpha` it factorizes.
pub fn rectangle_product<T: Scalar>(
    i: usize,
    j: usize,
    mu: &Partition,
    nu: &Partition,
    a: &[T],
    b: &[T],
) -> Result<(Partition, T)> {
    if a.len() != i || b.len() != j {
        return Err(Error::Precondition(format!(
            "rectangle {i}x{j} needs {i} row and {j} column variables, got {} and {}",
            a.len(),
            b.len()
        )));
    }
    let alpha = rectangle_shape(i, j, mu, nu)?;
    let mut value = schur_eval(mu, a) * schur_eval(nu, b);
    for x in a {
        for y in b {
            value = value * (x.clone() + y.clone());
        }
    }
    Ok((alpha, value))
}

/// Row and column frequencies `(a; b)` of a Thoma–Vershik–Kerov limit,
/// with optional character constants `C_2, C_3, ...`.
#[derive(Clone, Debug, PartialEq)]
pub struct LimitSpec {
    a: Vec<Rat>,
    b: Vec<Rat>,
    biane_c: Option<Vec<f64>>,
}

impl LimitSpec {
    /// Requires nonnegative, weakly decreasing frequencies with total at
    /// most one.
    pub fn new(a: Vec<Rat>, b: Vec<Rat>) -> Result<Self> {
        for (name, list) in [("a", &a), ("b", &b)] {
            if list.iter().any(|x| x.is_negative()) {
                return Err(Error::InvalidLimitSpec(format!("{name} has a negative entry")));
            }
            if list.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::InvalidLimitSpec(format!("{name} is not weakly decreasing")));
            }
        }
        let spec = LimitSpec { a, b, biane_c: None };
        if spec.total() > Rat::one() {
            return Err(Error::InvalidLimitSpec(format!("frequencies sum to {} > 1", spec.total())));
        }
        Ok(spec)
    }

    /// Attaches `C_2, C_3, ...`; `C_2` must be 1.
    pub fn with_biane_constants(mut self, constants: Vec<f64>) -> Result<Self> {
        match constants.first() {
            Some(&c2) if c2 == 1.0 => {}
            _ => return Err(Error::InvalidLimitSpec("C_2 must be present and equal to 1".into())),
        }
        self.biane_c = Some(constants);
        Ok(self)
    }

    pub fn a(&self) -> &[Rat] {
        &self.a
    }

    pub fn b(&self) -> &[Rat] {
        &self.b
    }

    /// `C_i` for `i >= 2`, when constants were supplied.
    pub fn biane_constant(&self, i: usize) -> Option<f64> {
        self.biane_c.as_ref()?.get(i.checked_sub(2)?).copied()
    }

    pub fn total(&self) -> Rat {
        self.a.iter().chain(&self.b).sum()
    }

    pub fn is_full(&self) -> bool {
        self.total() == Rat::one()
    }

    /// A shape whose scaled rows and columns hit the frequencies exactly.
    ///
    /// With `d` the common denominator and `n = scale * d`, row `i` has
    /// `a_i n + c` cells (`c` the number of nonzero `b`s) and the columns
    /// hanging below the rows have `b_j n` cells.
    pub fn sample_shape(&self, scale: usize) -> Partition {
        let rows: Vec<&Rat> = self.a.iter().filter(|x| !x.is_zero()).collect();
        let cols: Vec<&Rat> = self.b.iter().filter(|x| !x.is_zero()).collect();
        let d = rows
            .iter()
            .chain(&cols)
            .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
        let n = Rat::from_integer(d * scale);
        let to_len = |x: &Rat| -> usize {
            let v = (x * &n).to_integer();
            v.try_into().expect("shape size fits in usize")
        };
        let mut parts: Vec<usize> = rows.iter().map(|x| to_len(x) + cols.len()).collect();
        let col_lens: Vec<usize> = cols.iter().map(|x| to_len(x)).collect();
        let depth = col_lens.iter().copied().max().unwrap_or(0);
        for level in 1..=depth {
            parts.push(col_lens.iter().filter(|&&c| c >= level).count());
        }
        Partition::from_unsorted(parts)
    }
}

/// Limit ratio `s_alpha(a / -b)` of `f^{lambda/alpha} / f^lambda`.
pub fn vk_ratio(alpha: &Partition, spec: &LimitSpec) -> Result<Rat> {
    if !spec.is_full() {
        return Err(Error::InvalidLimitSpec(format!(
            "frequencies must sum to 1, got {}",
            spec.total()
        )));
    }
    super_schur_eval(alpha, spec.a(), spec.b())
}

/// `f^lambda * s_alpha(a / -b)`.
pub fn vk_skew_estimate(f_lambda: &BigInt, alpha: &Partition, spec: &LimitSpec) -> Result<f64> {
    let ratio = vk_ratio(alpha, spec)?;
    Ok(rat_to_f64(&(Rat::from_integer(f_lambda.clone()) * ratio)))
}

/// `sum_{lambda |- n} s_lambda(v) == sum_{lambda |- n} z_lambda^{-1} p_{lambda~}(v)`.
pub fn ssum_identity_check<T: Scalar>(n: usize, v: &[T]) -> bool {
    let shapes = partitions_of(n);
    let schur_side = shapes.iter().fold(T::zero(), |acc, l| acc + schur_eval(l, v));
    let power_side = shapes.iter().fold(T::zero(), |acc, l| {
        let z = T::from_rat(&Rat::new(BigInt::one(), l.centralizer_order()));
        let p = l
            .tilde()
            .parts()
            .iter()
            .fold(T::one(), |prod, &part| prod * powersum_eval(part as u32, v));
        acc + z * p
    });
    schur_side == power_side
}
