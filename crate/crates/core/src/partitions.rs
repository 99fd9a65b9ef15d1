//! Integer partitions, signed partitions, embedding counts and Stirling
//! numbers: the index sets of the refined series formulas.
//!
//! Conventions:
//! - partition parts are stored weakly increasing;
//! - a signed partition is an ordered sequence of nonzero integers whose
//!   absolute values form a partition, so `(1,-1,2)` and `(-1,1,2)` are
//!   distinct;
//! - `theta` is the centralizer-order factor: product of the distinct part
//!   values times the factorials of their multiplicities.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Integer partition with weakly increasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Self {
        assert!(parts.iter().all(|&p| p > 0), "parts must be positive");
        parts.sort_unstable();
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts, written `l(lambda)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The partitioned integer.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Run-length encoding `(value, multiplicity)` over distinct parts.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((v, m)) if *v == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }
}

/// Signed partition: nonzero parts whose absolute values weakly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPartition {
    parts: Vec<i64>,
}

impl SignedPartition {
    pub fn new(parts: Vec<i64>) -> Self {
        assert!(parts.iter().all(|&p| p != 0), "parts must be nonzero");
        assert!(
            parts.windows(2).all(|w| w[0].unsigned_abs() <= w[1].unsigned_abs()),
            "absolute values must weakly increase"
        );
        SignedPartition { parts }
    }

    pub fn empty() -> Self {
        SignedPartition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The underlying unsigned partition `lambda^+`.
    pub fn abs(&self) -> Partition {
        Partition::new(self.parts.iter().map(|p| p.unsigned_abs() as u32).collect())
    }

    pub fn sum_abs(&self) -> u32 {
        self.parts.iter().map(|p| p.unsigned_abs() as u32).sum()
    }

    /// Product of the signs of all parts.
    pub fn sign(&self) -> i8 {
        if self.parts.iter().filter(|&&p| p < 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All partitions of `k`, each exactly once, in lexicographic order on the
/// ascending part sequences. `k = 0` yields the empty partition.
pub fn enum_partitions(k: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn rec(remaining: u32, min_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition {
                parts: current.clone(),
            });
            return;
        }
        for p in min_part..=remaining {
            current.push(p);
            rec(remaining - p, p, current, out);
            current.pop();
        }
    }
    rec(k, 1, &mut current, &mut out);
    out
}

/// All signed partitions of `k`: every partition of `k` equipped with every
/// sign vector. Order: partitions lexicographically, then sign vectors with
/// `+` before `-` position by position.
pub fn enum_signed_partitions(k: u32) -> Vec<SignedPartition> {
    let mut out = Vec::new();
    for lambda in enum_partitions(k) {
        let l = lambda.len();
        for code in 0u64..(1u64 << l) {
            let parts = lambda
                .parts()
                .iter()
                .enumerate()
                .map(|(i, &p)| {
                    if code & (1 << (l - 1 - i)) != 0 {
                        -(p as i64)
                    } else {
                        p as i64
                    }
                })
                .collect();
            out.push(SignedPartition { parts });
        }
    }
    out
}

/// `theta(lambda)`: the centralizer order of the cycle type, the product
/// of all parts times the factorials of the multiplicities; 1 on the empty
/// partition. This is the weight that makes the embedding-count lemma and
/// the refined series formulas come out right.
pub fn theta(lambda: &Partition) -> BigUint {
    let mut acc = BigUint::one();
    for (value, mult) in lambda.multiplicities() {
        for _ in 0..mult {
            acc *= BigUint::from(value);
        }
        acc *= factorial(mult);
    }
    acc
}

pub fn factorial(n: u32) -> BigUint {
    let mut acc = BigUint::one();
    for i in 2..=n {
        acc *= BigUint::from(i);
    }
    acc
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= BigUint::from(n - i);
        acc /= BigUint::from(i + 1);
    }
    acc
}

/// Number of subsequences of `lambda` equal to `mu` as multisets of
/// positions: the product over distinct values of `C(mult_lambda, mult_mu)`.
pub fn emb_count(mu: &Partition, lambda: &Partition) -> u64 {
    let lm = lambda.multiplicities();
    let mut count = 1u64;
    for (value, m_mu) in mu.multiplicities() {
        let m_lambda = lm
            .iter()
            .find(|(v, _)| *v == value)
            .map(|(_, m)| *m)
            .unwrap_or(0);
        if m_mu > m_lambda {
            return 0;
        }
        let b: BigUint = binomial(m_lambda as u64, m_mu as u64);
        count *= u64::try_from(&b).expect("embedding count fits u64");
    }
    count
}

/// Number of ordered subsequences of `lambda` equal to `mu`, respecting
/// positions (signed partitions are ordered sequences).
pub fn emb_count_signed(mu: &SignedPartition, lambda: &SignedPartition) -> u64 {
    let k = mu.len();
    // dp[j] = ways to match the first j entries of mu within the prefix
    // scanned so far.
    let mut dp = vec![0u64; k + 1];
    dp[0] = 1;
    for &x in lambda.parts() {
        for j in (1..=k).rev() {
            if mu.parts()[j - 1] == x {
                dp[j] += dp[j - 1];
            }
        }
    }
    dp[k]
}

/// Product of the signs of the entries of `lambda` outside an embedded copy
/// of `mu`; independent of the choice of embedding.
pub fn sgn_rel(mu: &SignedPartition, lambda: &SignedPartition) -> Result<i8> {
    if emb_count_signed(mu, lambda) == 0 {
        return Err(Error::UndefinedSign);
    }
    Ok(lambda.sign() * mu.sign())
}

/// Triangles are memoized once up to this row; larger arguments fall back
/// to direct row recursion. `stirling1(20, ·)` already exceeds 64 bits, so
/// everything stays in `BigUint`.
const STIRLING_MEMO_ROWS: u32 = 24;

fn stirling_triangle(second_kind: bool) -> &'static Vec<Vec<BigUint>> {
    use std::sync::OnceLock;
    static FIRST: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    static SECOND: OnceLock<Vec<Vec<BigUint>>> = OnceLock::new();
    let cell = if second_kind { &SECOND } else { &FIRST };
    cell.get_or_init(|| {
        let mut rows = vec![vec![BigUint::one()]];
        for n in 1..=STIRLING_MEMO_ROWS {
            rows.push(stirling_next_row(rows.last().unwrap(), n, second_kind));
        }
        rows
    })
}

fn stirling_next_row(row: &[BigUint], n: u32, second_kind: bool) -> Vec<BigUint> {
    let mut next = vec![BigUint::zero(); row.len() + 1];
    for (k, v) in row.iter().enumerate() {
        let weight = if second_kind { k as u32 } else { n - 1 };
        next[k] += v * BigUint::from(weight);
        next[k + 1] += v;
    }
    next
}

fn stirling(n: u32, k: u32, second_kind: bool) -> Result<BigUint> {
    if k > n {
        return Err(Error::StirlingIndex(n, k));
    }
    if n <= STIRLING_MEMO_ROWS {
        return Ok(stirling_triangle(second_kind)[n as usize][k as usize].clone());
    }
    let mut row = stirling_triangle(second_kind)[STIRLING_MEMO_ROWS as usize].clone();
    for i in STIRLING_MEMO_ROWS + 1..=n {
        row = stirling_next_row(&row, i, second_kind);
    }
    Ok(row[k as usize].clone())
}

/// Unsigned Stirling number of the first kind: permutations of `n` letters
/// with `k` cycles.
pub fn stirling1(n: u32, k: u32) -> Result<BigUint> {
    stirling(n, k, false)
}

/// Stirling number of the second kind: partitions of an `n`-set into `k`
/// nonempty blocks.
pub fn stirling2(n: u32, k: u32) -> Result<BigUint> {
    stirling(n, k, true)
}
