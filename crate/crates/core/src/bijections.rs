//! The sign-reversing involution `phi` on `⋃_j P(n - b(j))` and the
//! conjugation injection `psi : A_{-k}^(1)(n) → A_{k-1}^(2)(n)`.
//!
//! Both maps come with exhaustive checkers that enumerate every partition of
//! the relevant weights and report each failure with its witness.

use alloc::format;
use alloc::vec::Vec;

use alloc::collections::BTreeSet;
use num_bigint::BigInt;

use crate::partitions::{gpn, set_a, set_a_len, ASet, Partition, PartitionTable, Partitions};
use crate::report::{CheckReport, Params, Violation, Witness};
use crate::{Error, Result};

pub(crate) const EMPTY_RANK_NOTE: &str =
    "convention: rank(()) = 0 and P(0) = {()}; phi on the empty partition uses the boundary rule";

/// A partition `λ` of `n - b(j)` tagged with its pentagonal index `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IndexedPartition {
    pub partition: Partition,
    pub j: i64,
    pub n: usize,
}

impl IndexedPartition {
    pub fn new(partition: Partition, j: i64, n: usize) -> Result<Self> {
        let expected = n as i64 - gpn(j);
        if expected < 0 || partition.weight() as i64 != expected {
            return Err(Error::WeightMismatch { expected, actual: partition.weight() });
        }
        Ok(IndexedPartition { partition, j, n })
    }

    fn witness(&self) -> Witness {
        Witness::Partition { parts: self.partition.parts().to_vec(), j: self.j }
    }
}

/// Which branch of `phi` fired.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiCase {
    /// `t + 3j >= λ₁`: index drops to `j - 1`.
    One,
    /// `t + 3j < λ₁`: index rises to `j + 1`.
    Two,
}

/// Apply the involution.
///
/// Case 1 gives `(t+3j-1, λ₁-1, ..., λ_t-1)` at index `j-1` (zero parts
/// dropped); Case 2 gives `(λ₂+1, ..., λ_t+1, 1^{λ₁-t-3j-1})` at `j+1`.
/// On the empty partition: `(3j-1)` at `j-1` for `j >= 1`, and `1^{-3j-2}`
/// at `j+1` for `j <= -1`.
pub fn phi(x: &IndexedPartition) -> Result<(IndexedPartition, PhiCase)> {
    let lambda = &x.partition;
    let j = x.j;
    let t = lambda.len() as i64;
    let largest = lambda.largest() as i64;

    if lambda.is_empty() {
        return match j {
            0 => Err(Error::EmptyAtIndexZero),
            j if j > 0 => {
                let image = Partition::from_multiset(alloc::vec![(3 * j - 1) as usize]);
                Ok((IndexedPartition { partition: image, j: j - 1, n: x.n }, PhiCase::One))
            }
            j => {
                let image = Partition::from_multiset(alloc::vec![1; (-3 * j - 2) as usize]);
                Ok((IndexedPartition { partition: image, j: j + 1, n: x.n }, PhiCase::Two))
            }
        };
    }

    if t + 3 * j >= largest {
        let mut parts = Vec::with_capacity(lambda.len() + 1);
        parts.push((t + 3 * j - 1) as usize);
        parts.extend(lambda.parts().iter().map(|p| p - 1));
        let image = Partition::from_multiset(parts);
        Ok((IndexedPartition { partition: image, j: j - 1, n: x.n }, PhiCase::One))
    } else {
        let ones = (largest - (t + 3 * j) - 1) as usize;
        let mut parts: Vec<usize> = lambda.parts()[1..].iter().map(|p| p + 1).collect();
        parts.extend(core::iter::repeat_n(1, ones));
        let image = Partition::from_multiset(parts);
        Ok((IndexedPartition { partition: image, j: j + 1, n: x.n }, PhiCase::Two))
    }
}

/// `psi(λ) = (λ'₁ + 2k - 1, λ'₂, ..., λ'_s)` where `λ'` is the conjugate.
///
/// Requires `rank(λ) <= -3k`, i.e. `λ ∈ A_{-k}^(1)`.
pub fn psi(lambda: &Partition, k: usize) -> Result<Partition> {
    if k == 0 {
        return Err(Error::ZeroParameter { name: "k" });
    }
    let bound = -3 * k as i64;
    if lambda.is_empty() || lambda.rank() > bound {
        return Err(Error::RankConstraint { rank: lambda.rank(), bound });
    }
    let mut parts = lambda.conjugate().into_parts();
    parts[0] += 2 * k - 1;
    Ok(Partition::from_multiset(parts))
}

/// Indices `j` with `b(j) <= n`, ascending.
pub fn pentagonal_indices(n: usize) -> Vec<i64> {
    let n = n as i64;
    let mut lo = 0;
    while gpn(lo - 1) <= n {
        lo -= 1;
    }
    let mut hi = 0;
    while gpn(hi + 1) <= n {
        hi += 1;
    }
    (lo..=hi).collect()
}

/// Exhaustively check `phi` at weight `n`: involution, parity flip, weight
/// bookkeeping and the exchange `A_j^(1) ↔ A_{j-1}^(2)`.
///
/// Also checks the counting corollary
/// `Σ_{j even} p(n - b(j)) = Σ_{j odd} p(n - b(j))` from the same run.
pub fn verify_phi(n: usize) -> CheckReport {
    let mut report = CheckReport::new("phi", Params::default().with_n(n as u64));
    if n == 0 {
        report.push(Violation::new(Witness::Label("n".into()), ">= 1", 0));
        return report;
    }
    report.note(EMPTY_RANK_NOTE);
    let mut even = 0u64;
    let mut odd = 0u64;
    for j in pentagonal_indices(n) {
        let m = (n as i64 - gpn(j)) as usize;
        for lambda in Partitions::new(m) {
            if j % 2 == 0 {
                even += 1;
            } else {
                odd += 1;
            }
            let x = IndexedPartition { partition: lambda, j, n };
            check_phi_point(&x, &mut report);
        }
    }
    if even != odd {
        report.push(Violation::new(
            Witness::Label("even/odd index counts".into()),
            format!("{even} = {odd}"),
            format!("{even} != {odd}"),
        ));
    }
    report
}

fn check_phi_point(x: &IndexedPartition, report: &mut CheckReport) {
    let (y, case) = match phi(x) {
        Ok(v) => v,
        Err(e) => {
            report.push(Violation::new(x.witness(), "image", e));
            return;
        }
    };
    let expected_weight = x.n as i64 - gpn(y.j);
    if y.partition.weight() as i64 != expected_weight {
        report.push(Violation::new(
            x.witness(),
            format!("image weight {expected_weight}"),
            format!("{} of weight {}", y.partition, y.partition.weight()),
        ));
    }
    if (y.j - x.j).rem_euclid(2) != 1 {
        report.push(Violation::new(x.witness(), "index parity flip", format!("j -> {}", y.j)));
    }
    let low = ASet::RankAtMost.contains(x.j, &x.partition);
    let (want_j, in_target) = if low {
        (x.j - 1, ASet::RankAbove.contains(x.j - 1, &y.partition))
    } else {
        (x.j + 1, ASet::RankAtMost.contains(x.j + 1, &y.partition))
    };
    if y.j != want_j || !in_target || (case == PhiCase::One) != low {
        let target = if low { "A^(2)" } else { "A^(1)" };
        report.push(Violation::new(
            x.witness(),
            format!("image in {target} at j={want_j}"),
            format!("{} at j={} ({case:?})", y.partition, y.j),
        ));
    }
    match phi(&y) {
        Ok((back, _)) if back == *x => {}
        Ok((back, _)) => report.push(Violation::new(
            x.witness(),
            "phi(phi(x)) = x",
            format!("{} at j={}", back.partition, back.j),
        )),
        Err(e) => report.push(Violation::new(x.witness(), "phi(phi(x)) = x", e)),
    }
}

/// Apply `psi` to every element of `A_{-k}^(1)(n)` and check that the images
/// are distinct members of `A_{k-1}^(2)(n)`.
pub fn verify_psi(n: usize, k: usize) -> CheckReport {
    let mut report =
        CheckReport::new("psi", Params::default().with_n(n as u64).with_k(k as u32));
    if n == 0 || k == 0 {
        report.push(Violation::new(Witness::Label("n, k".into()), ">= 1", 0));
        return report;
    }
    let kk = k as i64;
    let mut images = BTreeSet::new();
    for lambda in set_a(ASet::RankAtMost, -kk, n) {
        let witness = Witness::Partition { parts: lambda.parts().to_vec(), j: -kk };
        match psi(&lambda, k) {
            Ok(img) => {
                let expected_weight = n as i64 - gpn(kk - 1);
                if img.weight() as i64 != expected_weight
                    || !ASet::RankAbove.contains(kk - 1, &img)
                {
                    report.push(Violation::new(
                        witness.clone(),
                        format!("member of A_{}^(2)({n})", kk - 1),
                        &img,
                    ));
                }
                if !images.insert(img.clone()) {
                    report.push(Violation::new(witness, "distinct image", &img));
                }
            }
            Err(e) => report.push(Violation::new(witness, "psi defined", e)),
        }
    }
    let target = set_a_len(ASet::RankAbove, kk - 1, n);
    if images.len() > target {
        report.push(Violation::new(
            Witness::Label("|image| <= |A^(2)|".into()),
            target,
            images.len(),
        ));
    }
    report
}

/// Cardinalities for one `(n, k)` pair of the truncated-sum identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ASetCounts {
    /// `|A_k^(1)(n)|`
    pub upper_low: usize,
    /// `|A_{k-1}^(2)(n)|`
    pub upper: usize,
    /// `|A_{-k}^(1)(n)|`
    pub lower: usize,
    /// `(-1)^{k-1} Σ_{j=0}^{k-1} (-1)^j (p(n - j(3j+1)/2) - p(n - j(3j+5)/2 - 1))`
    pub partial_sum: BigInt,
}

impl ASetCounts {
    pub fn difference(&self) -> i64 {
        self.upper as i64 - self.lower as i64
    }
}

/// The alternating partial sum of the pentagonal recurrence, sign-normalised so
/// that it is the quantity claimed nonnegative.
pub fn euler_partial_sum(table: &PartitionTable, n: usize, k: usize) -> BigInt {
    let n = n as i64;
    let mut acc = BigInt::ZERO;
    for j in 0..k as i64 {
        let term = table.signed(n - j * (3 * j + 1) / 2) - table.signed(n - j * (3 * j + 5) / 2 - 1);
        if j % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    if k % 2 == 0 {
        -acc
    } else {
        acc
    }
}

pub fn a_set_counts(table: &PartitionTable, n: usize, k: usize) -> ASetCounts {
    let kk = k as i64;
    ASetCounts {
        upper_low: set_a_len(ASet::RankAtMost, kk, n),
        upper: set_a_len(ASet::RankAbove, kk - 1, n),
        lower: set_a_len(ASet::RankAtMost, -kk, n),
        partial_sum: euler_partial_sum(table, n, k),
    }
}

/// The A-set form of the truncated pentagonal sum at `(n, k)`:
/// the partial sum equals `|A_{k-1}^(2)(n)| - |A_{-k}^(1)(n)|`, and
/// `|A_k^(1)(n)| = |A_{k-1}^(2)(n)| >= |A_{-k}^(1)(n)|`.
pub fn theorem12_report(table: &PartitionTable, n: usize, k: usize) -> CheckReport {
    let mut report =
        CheckReport::new("theorem12", Params::default().with_n(n as u64).with_k(k as u32));
    report.note(EMPTY_RANK_NOTE);
    if n == 0 || k == 0 {
        report.push(Violation::new(Witness::Label("n, k".into()), ">= 1", 0));
        return report;
    }
    let c = a_set_counts(table, n, k);
    if c.partial_sum != BigInt::from(c.difference()) {
        report.push(Violation::new(
            Witness::Label("partial sum = |A_{k-1}^(2)| - |A_{-k}^(1)|".into()),
            &c.partial_sum,
            c.difference(),
        ));
    }
    if c.upper_low != c.upper {
        report.push(Violation::new(
            Witness::Label("|A_k^(1)| = |A_{k-1}^(2)|".into()),
            c.upper,
            c.upper_low,
        ));
    }
    if c.upper < c.lower {
        report.push(Violation::new(
            Witness::Label("|A_{k-1}^(2)| >= |A_{-k}^(1)|".into()),
            format!(">= {}", c.lower),
            c.upper,
        ));
    }
    report
}
