//! Irreducible characters of the symmetric group and straight-shape SYT
//! counts.
//!
//! [`character`] evaluates the Murnaghan–Nakayama border-strip recursion
//! over beta-sets, memoized in a [`CharacterCache`]. The cache takes
//! concurrent readers and serializes inserts behind an `RwLock`, so one
//! process-wide instance is shared by every caller.
//!
//! [`character_oracle`] computes the same values a different way, by
//! extracting a coefficient of `a_delta * p_mu`, and is meant for tests.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;
use crate::scalar::{binomial, factorial};
use crate::{Error, Rat, Result};

/// Largest weight accepted by [`character_oracle`].
pub const ORACLE_CAP: usize = 8;

/// Number of SYT of straight shape `shape`, by the hook-length formula.
pub fn f_count(shape: &Partition) -> BigInt {
    let conj = shape.conjugate();
    let mut hooks = BigInt::one();
    for (r, &len) in shape.parts().iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = conj.part(c) - r - 1;
            hooks *= arm + leg + 1;
        }
    }
    factorial(shape.weight()) / hooks
}

/// Memo table for character values keyed by `(shape, class)`.
///
/// With a cap set, an insert that would exceed it clears the whole table
/// first. Without one the table grows without bound.
#[derive(Debug, Default)]
pub struct CharacterCache {
    table: RwLock<HashMap<(Partition, Partition), BigInt>>,
    cap: Option<usize>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_cap(cap: usize) -> Self {
        CharacterCache {
            table: RwLock::default(),
            cap: Some(cap),
        }
    }

    /// The process-wide cache used by [`character`].
    pub fn global() -> &'static CharacterCache {
        static GLOBAL: OnceLock<CharacterCache> = OnceLock::new();
        GLOBAL.get_or_init(CharacterCache::new)
    }

    pub fn len(&self) -> usize {
        self.table.read().expect("character cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.table.write().expect("character cache poisoned").clear();
    }

    /// `chi^shape(class)`; `class` need not be sorted.
    pub fn character(&self, shape: &Partition, class: &Partition) -> Result<BigInt> {
        if shape.weight() != class.weight() {
            return Err(Error::WeightMismatch {
                shape: shape.clone(),
                class: class.clone(),
            });
        }
        Ok(self.lookup(shape, class))
    }

    fn lookup(&self, shape: &Partition, class: &Partition) -> BigInt {
        if class.is_empty() {
            return BigInt::one();
        }
        // one-row and one-column shapes are the trivial and sign characters
        if shape.len() == 1 {
            return BigInt::one();
        }
        if shape.first() == 1 {
            let odd = (class.weight() - class.len()) % 2 == 1;
            return if odd { -BigInt::one() } else { BigInt::one() };
        }
        let key = (shape.clone(), class.clone());
        if let Some(v) = self.table.read().expect("character cache poisoned").get(&key) {
            return v.clone();
        }
        let value = self.border_strip_sum(shape, class);
        let mut table = self.table.write().expect("character cache poisoned");
        if let Some(cap) = self.cap {
            if table.len() >= cap {
                table.clear();
            }
        }
        table.insert(key, value.clone());
        value
    }

    /// Removes every border strip of length `class_1` and recurses on the
    /// remaining class.
    fn border_strip_sum(&self, shape: &Partition, class: &Partition) -> BigInt {
        let strip = class.first();
        let rest = Partition::from_unsorted(class.parts()[1..].to_vec());
        let beta = beta_set(shape);
        let mut total = BigInt::zero();
        for &b in &beta {
            if b < strip || beta.contains(&(b - strip)) {
                continue;
            }
            let target = b - strip;
            let height = beta.iter().filter(|&&x| x > target && x < b).count();
            let moved: Vec<usize> = beta.iter().map(|&x| if x == b { target } else { x }).collect();
            let smaller = from_beta_set(moved);
            let term = self.lookup(&smaller, &rest);
            if height % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
}

fn beta_set(shape: &Partition) -> Vec<usize> {
    let len = shape.len();
    shape.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect()
}

fn from_beta_set(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let len = beta.len();
    Partition::from_unsorted(beta.iter().enumerate().map(|(i, &b)| b - (len - 1 - i)).collect())
}

/// `chi^shape(class)` through the shared global cache.
pub fn character(shape: &Partition, class: &Partition) -> Result<BigInt> {
    CharacterCache::global().character(shape, class)
}

type Monomial = Vec<usize>;

/// Frobenius coefficient formula: `chi^shape(class)` is the coefficient of
/// `x^{shape + delta}` in `a_delta * p_class`, in `len(shape)` variables.
pub fn character_oracle(shape: &Partition, class: &Partition) -> Result<BigInt> {
    if shape.weight() != class.weight() {
        return Err(Error::WeightMismatch {
            shape: shape.clone(),
            class: class.clone(),
        });
    }
    if shape.weight() > ORACLE_CAP {
        return Err(Error::CapExceeded {
            context: "the character oracle",
            size: shape.weight(),
            cap: ORACLE_CAP,
        });
    }
    let vars = shape.len();
    if vars == 0 {
        return Ok(BigInt::one());
    }

    let mut power_sum: HashMap<Monomial, BigInt> = HashMap::new();
    power_sum.insert(vec![0; vars], BigInt::one());
    for &r in class.parts() {
        let mut next: HashMap<Monomial, BigInt> = HashMap::new();
        for (mono, coeff) in &power_sum {
            for v in 0..vars {
                let mut m = mono.clone();
                m[v] += r;
                *next.entry(m).or_default() += coeff;
            }
        }
        power_sum = next;
    }

    let target: Vec<usize> = (0..vars).map(|i| shape.part(i) + vars - 1 - i).collect();
    let delta: Vec<usize> = (0..vars).map(|i| vars - 1 - i).collect();
    let mut total = BigInt::zero();
    for (perm, sign) in signed_permutations(vars) {
        // a_delta contributes sign(perm) * x^{delta permuted}
        let needed: Option<Monomial> = (0..vars)
            .map(|i| target[i].checked_sub(delta[perm[i]]))
            .collect();
        if let Some(mono) = needed {
            if let Some(c) = power_sum.get(&mono) {
                total += sign * c;
            }
        }
    }
    Ok(total)
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (perm, sign) in signed_permutations(n - 1) {
        // insert n-1 at every position; each step right past an element is a transposition
        for pos in 0..=perm.len() {
            let mut p = perm.clone();
            p.insert(pos, n - 1);
            let inversions_added = perm.len() - pos;
            let s = if inversions_added % 2 == 0 { sign } else { -sign };
            out.push((p, s));
        }
    }
    out
}

/// `chi^alpha(2, 1^{k-2})` from the content formula
/// `f^alpha * (sum C(alpha_i, 2) - sum C(alpha'_i, 2)) / C(k, 2)`.
pub fn chi_transposition(alpha: &Partition) -> Result<Rat> {
    let k = alpha.weight();
    if k < 2 {
        return Err(Error::ClassUndefined(k));
    }
    let pairs = |p: &Partition| -> BigInt { p.parts().iter().map(|&x| binomial(x, 2)).sum() };
    let numer = f_count(alpha) * (pairs(alpha) - pairs(&alpha.conjugate()));
    Ok(Rat::new(numer, binomial(k, 2)))
}

/// Like [`chi_transposition`] but insists on an integer result.
pub fn chi_transposition_int(alpha: &Partition) -> Result<BigInt> {
    let value = chi_transposition(alpha)?;
    if !value.denom().is_one() {
        return Err(Error::NonIntegral {
            context: "the transposition character",
            value,
        });
    }
    Ok(value.to_integer())
}
