//! Integer partitions, skew shapes, and the maps the counting formulas index
//! over.
//!
//! Enumeration order is reverse-lexicographic: `(4), (3,1), (2,2), (2,1,1),
//! (1,1,1,1)`. Sums never depend on it, but fixture files do.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::scalar::factorial;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The single-row partition `(n)`, empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        Partition::from_unsorted(vec![n])
    }

    /// The single-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.0
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> usize {
        self.part(0)
    }

    /// Number of parts equal to `i`.
    pub fn multiplicity(&self, i: usize) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first();
        let parts = (1..=cols)
            .map(|i| self.0.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition(parts)
    }

    /// Cycle type of `w^2` when `w` has cycle type `self`: each even part
    /// `2i` splits into `i, i`.
    pub fn tilde(&self) -> Partition {
        let mut parts = Vec::with_capacity(2 * self.len());
        for &p in &self.0 {
            if p % 2 == 0 {
                parts.push(p / 2);
                parts.push(p / 2);
            } else {
                parts.push(p);
            }
        }
        Partition::from_unsorted(parts)
    }

    /// Order of the centralizer of a permutation of this cycle type,
    /// `prod_i i^{m_i} m_i!`.
    pub fn centralizer_order(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let part = self.0[i];
            let run = self.0[i..].iter().take_while(|&&p| p == part).count();
            z *= BigInt::from(part).pow(run as u32) * factorial(run);
            i += run;
        }
        z
    }

    /// `self` with `count` extra parts equal to one.
    pub fn with_ones(&self, count: usize) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat(1).take(count));
        Partition(parts)
    }

    /// True iff `inner_i <= self_i` for every `i`, padding with zeros.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.0.iter().zip(&self.0).all(|(a, l)| a <= l)
    }

    /// Partitions obtained by adding one cell.
    pub fn add_cell_neighbours(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.len() {
            if i == 0 || self.part(i) < self.part(i - 1) {
                let mut parts = self.0.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition(parts));
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.0 {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"6,6,5,4,2,1"`; the empty (or all-blank) string is the empty
    /// partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Reverse-lexicographic iterator over the partitions of `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    current: Option<Vec<usize>>,
    min_part: usize,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        Partitions::with_min_part(n, 1)
    }

    /// Partitions of `n` whose parts are all at least `min_part`.
    pub fn with_min_part(n: usize, min_part: usize) -> Self {
        let min_part = min_part.max(1);
        let current = if n == 0 {
            Some(Vec::new())
        } else {
            Partitions::fill(Vec::new(), n, n, min_part)
        };
        Partitions { current, min_part }
    }

    /// Appends the reverse-lex first partition of `rest` with parts in
    /// `[min_part, cap]`, or `None` if there is none.
    fn fill(prefix: Vec<usize>, rest: usize, cap: usize, min_part: usize) -> Option<Vec<usize>> {
        if rest == 0 {
            return Some(prefix);
        }
        let top = cap.min(rest);
        if top < min_part {
            return None;
        }
        (min_part..=top).rev().find_map(|p| {
            let mut next = prefix.clone();
            next.push(p);
            Partitions::fill(next, rest - p, p, min_part)
        })
    }

    fn advance(&self, parts: &[usize]) -> Option<Vec<usize>> {
        // walk back, trying to decrement a part and refill the tail
        let mut tail: usize = 0;
        for i in (0..parts.len()).rev() {
            tail += parts[i];
            for p in (self.min_part..parts[i]).rev() {
                let mut prefix = parts[..i].to_vec();
                prefix.push(p);
                if let Some(next) = Partitions::fill(prefix, tail - p, p, self.min_part) {
                    return Some(next);
                }
            }
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        self.current = self.advance(&parts);
        Some(Partition(parts))
    }
}

/// Every partition of `n`, reverse-lexicographic.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// Partitions of `j` with no part equal to 1 or 2.
pub fn partitions_no_small_parts(j: usize) -> Vec<Partition> {
    Partitions::with_min_part(j, 3).collect()
}

/// An outer/inner partition pair with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !outer.contains(&inner) {
            return Err(Error::InvalidSkewShape { outer, inner });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.weight() - self.inner.weight()
    }

    /// 1-based `(row, column)` cells, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut cells = Vec::with_capacity(self.size());
        for (r, &len) in self.outer.parts().iter().enumerate() {
            for c in self.inner.part(r)..len {
                cells.push((r + 1, c + 1));
            }
        }
        cells
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.outer, self.inner)
    }
}

/// Cells of `outer / inner`; fails unless `inner ⊆ outer`.
pub fn skew_cells(outer: &Partition, inner: &Partition) -> Result<Vec<(usize, usize)>> {
    Ok(SkewShape::new(outer.clone(), inner.clone())?.cells())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    /// Euler's pentagonal recurrence, independent of the iterator.
    fn partition_count(n: usize) -> i64 {
        let mut table = vec![0i64; n + 1];
        table[0] = 1;
        for i in 1..=n {
            let mut k: i64 = 1;
            loop {
                let g1 = (k * (3 * k - 1) / 2) as usize;
                if g1 > i {
                    break;
                }
                let sign = if k % 2 == 1 { 1 } else { -1 };
                table[i] += sign * table[i - g1];
                let g2 = (k * (3 * k + 1) / 2) as usize;
                if g2 <= i {
                    table[i] += sign * table[i - g2];
                }
                k += 1;
            }
        }
        table[n]
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(p(&[6, 6, 5, 4, 2, 1]).conjugate(), p(&[6, 5, 4, 4, 3, 2]));
    }

    #[test]
    fn tilde_examples() {
        assert_eq!(p(&[6, 6, 5, 4, 2, 1]).tilde(), p(&[5, 3, 3, 3, 3, 2, 2, 1, 1, 1]));
        assert_eq!(p(&[1, 1, 1]).tilde(), p(&[1, 1, 1]));
        assert_eq!(p(&[4]).tilde(), p(&[2, 2]));
    }

    #[test]
    fn centralizer_examples() {
        assert_eq!(Partition::empty().centralizer_order(), BigInt::from(1));
        assert_eq!(p(&[2, 2, 1]).centralizer_order(), BigInt::from(8));
        assert_eq!(p(&[3, 1, 1]).centralizer_order(), BigInt::from(6));
    }

    /// Counts permutations commuting with `sigma` by trying all of S_n.
    fn brute_centralizer(sigma: &[usize]) -> usize {
        let n = sigma.len();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut count = 0;
        loop {
            if (0..n).all(|i| perm[sigma[i]] == sigma[perm[i]]) {
                count += 1;
            }
            if !next_permutation(&mut perm) {
                return count;
            }
        }
    }

    fn next_permutation(v: &mut [usize]) -> bool {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return false;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        true
    }

    #[test]
    fn centralizer_matches_brute_force() {
        // (12)(34) and (123) in S_5
        assert_eq!(brute_centralizer(&[1, 0, 3, 2, 4]), 8);
        assert_eq!(brute_centralizer(&[1, 2, 0, 3, 4]), 6);
    }

    #[test]
    fn enumeration_small() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(25).len(), 1958);
        assert_eq!(partition_count(25), 1958);
    }

    #[test]
    fn enumeration_matches_pentagonal_recurrence() {
        for n in 0..=20 {
            assert_eq!(partitions_of(n).len() as i64, partition_count(n), "n = {n}");
        }
    }

    #[test]
    fn enumeration_is_strictly_reverse_lex() {
        for n in 1..=12 {
            let all = partitions_of(n);
            for w in all.windows(2) {
                assert!(w[0].parts() > w[1].parts());
            }
            assert!(all.iter().all(|q| q.weight() == n));
        }
    }

    #[test]
    fn no_small_parts() {
        assert!(partitions_no_small_parts(1).is_empty());
        assert!(partitions_no_small_parts(2).is_empty());
        assert_eq!(partitions_no_small_parts(6), vec![p(&[6]), p(&[3, 3])]);
        assert_eq!(partitions_no_small_parts(0), vec![Partition::empty()]);
        for j in 0..=14 {
            let filtered: Vec<_> = partitions_of(j)
                .into_iter()
                .filter(|q| q.parts().iter().all(|&x| x >= 3))
                .collect();
            assert_eq!(partitions_no_small_parts(j), filtered, "j = {j}");
        }
    }

    #[test]
    fn tilde_is_even_and_weight_preserving() {
        for j in 0..=10 {
            for mu in partitions_of(j) {
                let t = mu.tilde();
                assert_eq!(t.weight(), j);
                assert_eq!((t.weight() - t.len()) % 2, 0, "{mu}");
            }
        }
    }

    #[test]
    fn class_sizes_sum_to_group_order() {
        for n in 0..=10 {
            let total: BigInt = partitions_of(n)
                .iter()
                .map(|mu| factorial(n) / mu.centralizer_order())
                .sum();
            assert_eq!(total, factorial(n));
        }
    }

    #[test]
    fn conjugate_is_involution() {
        for n in 0..=12 {
            for lambda in partitions_of(n) {
                assert_eq!(lambda.conjugate().conjugate(), lambda);
            }
        }
    }

    #[test]
    fn containment_and_cells() {
        assert!(!p(&[2, 1]).contains(&p(&[2, 2])));
        assert_eq!(
            skew_cells(&p(&[2, 2, 1]), &p(&[1])).unwrap(),
            vec![(1, 2), (2, 1), (2, 2), (3, 1)]
        );
        assert!(skew_cells(&p(&[3]), &p(&[3])).unwrap().is_empty());
        assert!(matches!(
            skew_cells(&p(&[2, 1]), &p(&[2, 2])),
            Err(Error::InvalidSkewShape { .. })
        ));
    }

    #[test]
    fn parsing() {
        assert_eq!("6,6,5,4,2,1".parse::<Partition>().unwrap(), p(&[6, 6, 5, 4, 2, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(" 3, 1 ".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert!("1,2".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert_eq!(p(&[6, 6, 5]).to_string(), "6,6,5");
    }

    #[test]
    fn add_cell_neighbours_of_21() {
        assert_eq!(
            p(&[2, 1]).add_cell_neighbours(),
            vec![p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1])]
        );
        assert_eq!(Partition::empty().add_cell_neighbours(), vec![p(&[1])]);
    }
}
