//! Integer partitions and the statistics built on them.
//!
//! `P(0)` is `{()}` here: the empty partition is the unique partition of 0,
//! and it has rank 0. Both conventions are needed for the bijection checks at
//! weights `n = b(j)`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::{BigInt, BigUint};

use crate::qseries::{check_residues, pochhammer, triple_product};
use crate::{Error, Result};

/// A non-increasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    weight: usize,
}

impl Partition {
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Validates that `parts` is non-increasing with every part `>= 1`.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let sorted = parts.windows(2).all(|w| w[0] >= w[1]);
        if !sorted || parts.last() == Some(&0) {
            return Err(Error::NotAPartition { parts });
        }
        let weight = parts.iter().sum();
        Ok(Partition { parts, weight })
    }

    /// Sorts into non-increasing order and drops zero parts.
    pub fn from_multiset(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let weight = parts.iter().sum();
        Partition { parts, weight }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    /// Number of parts `t`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part `λ₁`, or 0 for the empty partition.
    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Dyson's rank: largest part minus number of parts. `rank(()) = 0`.
    pub fn rank(&self) -> i64 {
        self.largest() as i64 - self.len() as i64
    }

    /// Transpose of the Young diagram: `λ'_i = #{j : λ_j >= i}`.
    pub fn conjugate(&self) -> Partition {
        let mut parts = Vec::with_capacity(self.largest());
        for i in 1..=self.largest() {
            // parts are sorted, so the count is the length of a prefix
            parts.push(self.parts.partition_point(|&p| p >= i));
        }
        Partition { parts, weight: self.weight }
    }

    pub fn multiplicity(&self, part: usize) -> usize {
        self.parts.iter().filter(|&&p| p == part).count()
    }

    pub fn into_parts(self) -> Vec<usize> {
        self.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Partitions of `n` in lexicographically decreasing order, starting at
/// `(n)` and ending at `(1, ..., 1)`.
pub struct Partitions {
    current: Option<Vec<usize>>,
}

impl Partitions {
    pub fn new(n: usize) -> Self {
        let first = if n == 0 { vec![] } else { vec![n] };
        Partitions { current: Some(first) }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { weight: cur.iter().sum(), parts: cur.clone() };

        // Successor: strip the trailing ones, lower the last part v > 1 to
        // v - 1 and refill the freed weight greedily with parts <= v - 1.
        let mut next = cur;
        let mut freed = 0;
        while next.last() == Some(&1) {
            next.pop();
            freed += 1;
        }
        if let Some(v) = next.pop() {
            let cap = v - 1;
            freed += v;
            while freed > 0 {
                let part = freed.min(cap);
                next.push(part);
                freed -= part;
            }
            self.current = Some(next);
        }
        Some(out)
    }
}

/// All partitions of `n`, lexicographically decreasing; `enumerate(0)` is
/// the single empty partition.
pub fn enumerate(n: usize) -> Vec<Partition> {
    Partitions::new(n).collect()
}

/// Generalized pentagonal number `b(j) = j(3j+1)/2`, for any integer `j`.
pub fn gpn(j: i64) -> i64 {
    j * (3 * j + 1) / 2
}

/// Table of `p(0..=max)` from the pentagonal recurrence
/// `Σ_{j∈ℤ} (-1)^j p(n - b(j)) = 0`.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    values: Vec<BigUint>,
}

impl PartitionTable {
    pub fn new(max: usize) -> Self {
        let mut signed: Vec<BigInt> = Vec::with_capacity(max + 1);
        signed.push(BigInt::from(1));
        for n in 1..=max {
            let mut acc = BigInt::ZERO;
            for j in 1i64.. {
                let (b_pos, b_neg) = (gpn(j), gpn(-j));
                if b_neg > n as i64 {
                    break;
                }
                let neg = &signed[n - b_neg as usize];
                let pos = if b_pos <= n as i64 { Some(&signed[n - b_pos as usize]) } else { None };
                // p(n) = Σ_{j≠0} (-1)^{j+1} p(n - b(j))
                if j % 2 == 1 {
                    acc += neg;
                    if let Some(p) = pos {
                        acc += p;
                    }
                } else {
                    acc -= neg;
                    if let Some(p) = pos {
                        acc -= p;
                    }
                }
            }
            signed.push(acc);
        }
        let values = signed
            .into_iter()
            .map(|v| v.to_biguint().expect("partition numbers are nonnegative"))
            .collect();
        PartitionTable { values }
    }

    pub fn max(&self) -> usize {
        self.values.len() - 1
    }

    /// `p(n)`, with `p(n) = 0` for negative `n`. Panics past the table.
    pub fn get(&self, n: i64) -> BigUint {
        if n < 0 {
            return BigUint::ZERO;
        }
        self.values[n as usize].clone()
    }

    /// `p(n)` as a signed integer, convenient for alternating sums.
    pub fn signed(&self, n: i64) -> BigInt {
        BigInt::from(self.get(n))
    }
}

/// `p(n)` from the pentagonal recurrence; 0 for negative `n`.
pub fn p_euler(n: i64) -> BigUint {
    if n < 0 {
        return BigUint::ZERO;
    }
    PartitionTable::new(n as usize).get(n)
}

/// Which half of `P(n - b(j))` a rank filter keeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ASet {
    /// `A_j^(1)(n)`: rank at most `3j`.
    RankAtMost,
    /// `A_j^(2)(n)`: rank greater than `3j`.
    RankAbove,
}

impl ASet {
    pub fn contains(self, j: i64, lambda: &Partition) -> bool {
        let low = lambda.rank() <= 3 * j;
        match self {
            ASet::RankAtMost => low,
            ASet::RankAbove => !low,
        }
    }

    /// `1` for `A^(1)`, `2` for `A^(2)`.
    pub fn variant(self) -> u8 {
        match self {
            ASet::RankAtMost => 1,
            ASet::RankAbove => 2,
        }
    }
}

fn residual_weight(j: i64, n: usize) -> Option<usize> {
    let m = n as i64 - gpn(j);
    (m >= 0).then_some(m as usize)
}

/// The set `A_j^(1)(n)` or `A_j^(2)(n)` inside `P(n - b(j))`, in
/// enumeration order. Empty when `n < b(j)`.
pub fn set_a(which: ASet, j: i64, n: usize) -> Vec<Partition> {
    match residual_weight(j, n) {
        Some(m) => Partitions::new(m).filter(|l| which.contains(j, l)).collect(),
        None => Vec::new(),
    }
}

/// `|A_j^(1)(n)|` or `|A_j^(2)(n)|` without collecting the partitions.
pub fn set_a_len(which: ASet, j: i64, n: usize) -> usize {
    match residual_weight(j, n) {
        Some(m) => Partitions::new(m).filter(|l| which.contains(j, l)).count(),
        None => 0,
    }
}

/// `M_k(n)`: partitions of `n` whose least missing part is `k` (so `1..k`
/// all occur and `k` does not) with more parts above `k` than below it.
///
/// Counted by filtering every partition of `n`, independently of any
/// generating function.
pub fn m_k(k: usize, n: usize) -> Result<u64> {
    if k == 0 {
        return Err(Error::ZeroParameter { name: "k" });
    }
    let count = Partitions::new(n)
        .filter(|l| {
            let parts = l.parts();
            if parts.contains(&k) || !(1..k).all(|i| parts.contains(&i)) {
                return false;
            }
            let above = parts.iter().filter(|&&p| p > k).count();
            let below = parts.iter().filter(|&&p| p < k).count();
            above > below
        })
        .count();
    Ok(count as u64)
}

/// `d_{S,R}(n) - d_{R-S,R}(n)`: divisors of `n` that are `≡ S (mod R)` minus
/// those `≡ R - S (mod R)`.
pub fn divisor_diff(n: usize, r: u32, s: u32) -> Result<i64> {
    check_residues(r, s)?;
    if n == 0 {
        return Err(Error::ZeroParameter { name: "n" });
    }
    let (r, s) = (r as usize, s as usize);
    let mut diff = 0i64;
    for d in (1..).take_while(|d| d * d <= n).filter(|d| n % d == 0) {
        let pair = n / d;
        let divs = [d, pair];
        for e in &divs[..if pair == d { 1 } else { 2 }] {
            if e % r == s {
                diff += 1;
            }
            if e % r == r - s {
                diff -= 1;
            }
        }
    }
    Ok(diff)
}

fn nonneg(v: Vec<BigInt>) -> Vec<BigUint> {
    v.into_iter().map(|c| c.to_biguint().expect("counting sequence went negative")).collect()
}

/// First `order + 1` coefficients of `1/(q^S, q^{R-S}, q^R; q^R)_∞`.
///
/// `(4,1)` counts partitions with distinct odd parts, `(2,1)` counts
/// overpartitions and `(3,1)` gives `p(n)`.
pub fn product_counts(r: u32, s: u32, order: usize) -> Result<Vec<BigUint>> {
    let inv = triple_product(r, s, order)?.invert()?;
    Ok(nonneg(inv.to_vec()))
}

/// `t(0..=order)`, the number of 3-coloured partitions: `1/(q;q)_∞^3`.
pub fn t_counts(order: usize) -> Vec<BigUint> {
    let euler = pochhammer(1, 1, order).expect("valid base");
    let inv = euler.pow(3).invert().expect("unit constant term");
    nonneg(inv.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;

    fn part(p: &[usize]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn partition_validation() {
        assert!(Partition::new(vec![3, 1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        let p = part(&[5, 3, 1, 1]);
        assert_eq!(p.weight(), 10);
        assert_eq!(p.len(), 4);
        assert_eq!(p.largest(), 5);
        assert_eq!(Partition::from_multiset(vec![1, 0, 3, 1]), part(&[3, 1, 1]));
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate(0), vec![Partition::empty()]);
        let four: Vec<Vec<usize>> = enumerate(4).into_iter().map(Partition::into_parts).collect();
        assert_eq!(four, vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]);
        let ten = enumerate(10);
        assert_eq!(ten.len(), 42);
        assert!(ten.contains(&part(&[5, 3, 1, 1])));
    }

    #[test]
    fn enumeration_is_strictly_lex_decreasing_and_complete() {
        for n in 0..=18 {
            let all = enumerate(n);
            assert!(all.windows(2).all(|w| w[0].parts() > w[1].parts()));
            assert!(all.iter().all(|l| l.weight() == n));
            let distinct: BTreeSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn p_values() {
        assert_eq!(p_euler(0), BigUint::from(1u32));
        assert_eq!(p_euler(-3), BigUint::ZERO);
        assert_eq!(p_euler(5), BigUint::from(7u32));
        assert_eq!(p_euler(5), BigUint::from(enumerate(5).len()));
        assert_eq!(p_euler(15), BigUint::from(176u32));
        assert_eq!(p_euler(15), BigUint::from(enumerate(15).len()));
        // p(100) is a classical check value
        assert_eq!(p_euler(100), BigUint::from(190_569_292u64));
    }

    #[test]
    fn p_exceeds_u64_without_loss() {
        let table = PartitionTable::new(450);
        // the p(n) generating function inverted as a series agrees far past 2^64
        let inv = pochhammer(1, 1, 450).unwrap().invert().unwrap();
        assert_eq!(BigInt::from(table.get(450)), inv.coeff(450).unwrap());
        assert!(table.get(450) > BigUint::from(u64::MAX));
    }

    #[test]
    fn ranks() {
        assert_eq!(part(&[5, 3, 1, 1]).rank(), 1);
        assert_eq!(part(&[13]).rank(), 12);
        assert_eq!(Partition::empty().rank(), 0);
    }

    #[test]
    fn conjugates_at_weight_ten() {
        assert_eq!(part(&[2, 2, 1, 1, 1, 1, 1, 1]).conjugate(), part(&[8, 2]));
        assert_eq!(part(&[10]).conjugate(), part(&[1; 10]));
        assert_eq!(part(&[1; 10]).conjugate(), part(&[10]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn conjugation_involution_negates_rank() {
        for n in 0..=25 {
            for l in enumerate(n) {
                let c = l.conjugate();
                assert_eq!(c.weight(), n);
                assert_eq!(c.conjugate(), l);
                assert_eq!(c.rank(), -l.rank());
            }
        }
    }

    #[test]
    fn pentagonal_numbers() {
        assert_eq!(gpn(0), 0);
        assert_eq!([gpn(1), gpn(-1), gpn(2), gpn(-2), gpn(-3)], [2, 1, 7, 5, 12]);
        let values: BTreeSet<i64> = (-50..=50).map(gpn).collect();
        assert_eq!(values.len(), 101);
        assert!(values.iter().all(|&v| v >= 0));
    }

    #[test]
    fn a_sets_at_fifteen() {
        let low = set_a(ASet::RankAtMost, -2, 15);
        let want = vec![part(&[2, 2, 1, 1, 1, 1, 1, 1]), part(&[2, 1, 1, 1, 1, 1, 1, 1, 1]), part(&[1; 10])];
        assert_eq!(low, want);
        let high = set_a(ASet::RankAbove, 1, 15);
        assert_eq!(high.len(), 21);
        assert_eq!(set_a_len(ASet::RankAbove, 1, 15), 21);
        for p in [&[13][..], &[12, 1], &[7, 3, 3], &[9, 1, 1, 1, 1]] {
            assert!(high.contains(&part(p)));
        }
        assert!(high.iter().all(|l| l.weight() == 13));
    }

    #[test]
    fn a_sets_split_p() {
        let table = PartitionTable::new(30);
        for n in 1..=30usize {
            for j in -6..=6 {
                let total = set_a_len(ASet::RankAtMost, j, n) + set_a_len(ASet::RankAbove, j, n);
                assert_eq!(BigUint::from(total), table.get(n as i64 - gpn(j)));
            }
        }
    }

    #[test]
    fn a_set_boundary_includes_empty_partition() {
        // n = b(1) = 2: P(0) = {()} with rank 0 <= 3
        assert_eq!(set_a(ASet::RankAtMost, 1, 2), vec![Partition::empty()]);
        assert!(set_a(ASet::RankAbove, 1, 2).is_empty());
        // n = b(-1) = 1: rank 0 > -3
        assert_eq!(set_a(ASet::RankAbove, -1, 1), vec![Partition::empty()]);
        assert!(set_a(ASet::RankAtMost, 3, 5).is_empty());
    }

    #[test]
    fn m_k_values() {
        assert_eq!(m_k(1, 5).unwrap(), 2);
        assert_eq!(m_k(2, 15).unwrap(), 18);
        assert_eq!(m_k(3, 1).unwrap(), 0);
        assert!(m_k(0, 5).is_err());
    }

    #[test]
    fn m_k_one_is_first_difference_of_p() {
        let table = PartitionTable::new(30);
        for n in 1..=30 {
            let expected = table.signed(n) - table.signed(n - 1);
            assert_eq!(BigInt::from(m_k(1, n as usize).unwrap()), expected);
        }
    }

    #[test]
    fn divisor_differences() {
        assert_eq!(divisor_diff(7, 3, 1).unwrap(), 2);
        assert_eq!(divisor_diff(6, 3, 1).unwrap(), 0);
        assert_eq!(divisor_diff(1, 3, 1).unwrap(), 1);
        for n in 1..=100 {
            assert_eq!(divisor_diff(n, 2, 1).unwrap(), 0);
        }
        assert!(divisor_diff(5, 3, 3).is_err());
        assert!(divisor_diff(0, 3, 1).is_err());
    }

    #[test]
    fn product_counts_match_enumeration() {
        let nat = |v: &[u32]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(product_counts(3, 1, 5).unwrap(), nat(&[1, 1, 2, 3, 5, 7]));
        assert_eq!(product_counts(2, 1, 5).unwrap(), nat(&[1, 2, 4, 8, 14, 24]));

        let pod = product_counts(4, 1, 16).unwrap();
        let over = product_counts(2, 1, 16).unwrap();
        for n in 0..=16 {
            let odd_distinct = enumerate(n)
                .iter()
                .filter(|l| l.parts().iter().all(|&p| p % 2 == 0 || l.multiplicity(p) == 1))
                .count();
            assert_eq!(pod[n], BigUint::from(odd_distinct));
            // each distinct part size may carry an overline on its last copy
            let overpartitions: u64 = enumerate(n)
                .iter()
                .map(|l| {
                    let sizes: BTreeSet<_> = l.parts().iter().collect();
                    1u64 << sizes.len()
                })
                .sum();
            assert_eq!(over[n], BigUint::from(overpartitions));
        }
        assert_eq!(&pod[..8], &nat(&[1, 1, 1, 2, 3, 4, 5, 7])[..]);
    }

    #[test]
    fn three_coloured_partitions() {
        let nat = |v: &[u32]| v.iter().map(|&x| BigUint::from(x)).collect::<Vec<_>>();
        assert_eq!(t_counts(0), nat(&[1]));
        assert_eq!(t_counts(2), nat(&[1, 3, 9]));
        // brute force: triples of partitions with total weight n
        let t = t_counts(12);
        for n in 0..=12usize {
            let mut triples = 0usize;
            for a in 0..=n {
                for b in 0..=n - a {
                    triples += enumerate(a).len() * enumerate(b).len() * enumerate(n - a - b).len();
                }
            }
            assert_eq!(t[n], BigUint::from(triples));
        }
    }

    #[test]
    fn t_recurrence_from_jacobi_cube() {
        let t: Vec<BigInt> = t_counts(50).into_iter().map(BigInt::from).collect();
        for n in 1..=50usize {
            let mut acc = BigInt::ZERO;
            for j in 0usize.. {
                let tri = j * (j + 1) / 2;
                if tri > n {
                    break;
                }
                let term = BigInt::from(2 * j + 1) * &t[n - tri];
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            assert_eq!(acc, BigInt::ZERO, "n = {n}");
        }
    }
}
