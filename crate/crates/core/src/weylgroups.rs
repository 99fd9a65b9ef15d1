//! Concrete Weyl groups: symmetric groups, signed symmetric groups and
//! their index-two subgroups via (signed) permutations, and the exceptional
//! groups via integer reflection-matrix closure from Cartan data.
//!
//! Provides:
//! - [`GroupSpec`] / [`Family`]: which Weyl group, at which rank
//! - [`WeylElement`]: permutation, signed permutation, or integer matrix in
//!   the simple-root basis
//! - [`enumerate_group`] / [`stream_elements`]: full enumeration under a
//!   budget cap
//! - [`cycle_partition`] / [`signed_cycle_partition`]: cycle types
//! - [`char_factors`]: the pair `(det(1+tw), det(1-t^2 w))`

use std::collections::HashSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Poly, Rational};
use crate::partitions::{factorial, Partition, SignedPartition};
use crate::refdata;

/// Compact-group family. `U`/`SU` have Weyl group `Sigma_n`, `Sp`/`SOodd`
/// have `B_n`, `SOeven` has `B_n^+`; exceptional labels have fixed rank.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    U,
    SU,
    Sp,
    SOOdd,
    SOEven,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            Family::U | Family::SU | Family::Sp | Family::SOOdd | Family::SOEven
        )
    }

    pub fn exceptional_label(self) -> Option<&'static str> {
        match self {
            Family::G2 => Some("G2"),
            Family::F4 => Some("F4"),
            Family::E6 => Some("E6"),
            Family::E7 => Some("E7"),
            Family::E8 => Some("E8"),
            _ => None,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::U => "U",
            Family::SU => "SU",
            Family::Sp => "Sp",
            Family::SOOdd => "SO-odd",
            Family::SOEven => "SO-even",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        }
    }
}

/// A family together with its rank parameter (the `n` of `U(n)`, `Sp(n)`,
/// `SO(2n+1)`, `SO(2n)`; fixed for exceptional groups).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub rank_param: u32,
}

impl GroupSpec {
    pub fn new(family: Family, rank_param: u32) -> Result<GroupSpec> {
        let fixed = match family {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        };
        if let Some(r) = fixed {
            return Ok(GroupSpec {
                family,
                rank_param: r,
            });
        }
        if rank_param == 0 {
            return Err(Error::Precondition(format!(
                "{} requires rank >= 1",
                family.name()
            )));
        }
        Ok(GroupSpec { family, rank_param })
    }

    /// Rank of the compact group = number of characteristic degrees.
    pub fn rank(&self) -> u32 {
        match self.family {
            Family::SU => self.rank_param - 1,
            _ => self.rank_param,
        }
    }

    /// Size of the underlying (signed) permutation domain, for classical
    /// families.
    pub fn letters(&self) -> u32 {
        self.rank_param
    }

    pub fn characteristic_degrees(&self) -> Vec<u32> {
        refdata::load_degrees(self).expect("degree table is total on valid specs")
    }

    /// `dim G = sum (2 d_i - 1)` over the characteristic degrees.
    pub fn dim_group(&self) -> u32 {
        self.characteristic_degrees()
            .iter()
            .map(|&d| 2 * d - 1)
            .sum()
    }

    pub fn group_order(&self) -> BigUint {
        let n = self.rank_param;
        match self.family {
            Family::U | Family::SU => factorial(n),
            Family::Sp | Family::SOOdd => factorial(n) << n,
            Family::SOEven => {
                if n == 1 {
                    BigUint::one()
                } else {
                    factorial(n) << (n - 1)
                }
            }
            Family::G2 => BigUint::from(12u32),
            Family::F4 => BigUint::from(1152u32),
            Family::E6 => BigUint::from(51840u32),
            Family::E7 => BigUint::from(2_903_040u32),
            Family::E8 => BigUint::from(696_729_600u32),
        }
    }
}

// ---------------------------------------------------------------------------
// Elements
// ---------------------------------------------------------------------------

/// Permutation of `{0, .., n-1}`: `images[j]` is the image of `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Perm {
    pub images: Vec<u32>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n as u32).collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// Cycles in standard order: sorted by length, ties by least letter.
    /// 1-cycles are kept.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i as u32);
                i = self.images[i] as usize;
            }
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| (c.len(), c[0]));
        cycles
    }
}

/// Signed permutation: `w(e_j) = signs[j] * e_{perm[j]}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPerm {
    pub perm: Vec<u32>,
    pub signs: Vec<i8>,
}

impl SignedPerm {
    pub fn identity(n: usize) -> SignedPerm {
        SignedPerm {
            perm: (0..n as u32).collect(),
            signs: vec![1; n],
        }
    }

    pub fn n(&self) -> usize {
        self.perm.len()
    }

    /// Total sign: product over all letters.
    pub fn total_sign(&self) -> i8 {
        if self.signs.iter().filter(|&&s| s < 0).count() % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn underlying(&self) -> Perm {
        Perm {
            images: self.perm.clone(),
        }
    }

    pub fn compose(&self, rhs: &SignedPerm) -> SignedPerm {
        let n = self.n();
        assert_eq!(n, rhs.n());
        let mut perm = vec![0u32; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            let mid = rhs.perm[j] as usize;
            perm[j] = self.perm[mid];
            signs[j] = rhs.signs[j] * self.signs[mid];
        }
        SignedPerm { perm, signs }
    }

    pub fn inverse(&self) -> SignedPerm {
        let n = self.n();
        let mut perm = vec![0u32; n];
        let mut signs = vec![1i8; n];
        for j in 0..n {
            perm[self.perm[j] as usize] = j as u32;
            signs[self.perm[j] as usize] = self.signs[j];
        }
        SignedPerm { perm, signs }
    }
}

/// Square integer matrix, row major; Weyl elements of the exceptional
/// groups stay integral in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    pub n: usize,
    pub a: Vec<i32>,
}

impl IntMat {
    pub fn identity(n: usize) -> IntMat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        IntMat { n, a }
    }

    pub fn at(&self, i: usize, j: usize) -> i32 {
        self.a[i * self.n + j]
    }

    pub fn mul(&self, rhs: &IntMat) -> IntMat {
        let n = self.n;
        let mut a = vec![0i32; n * n];
        for i in 0..n {
            for k in 0..n {
                let v = self.a[i * n + k];
                if v == 0 {
                    continue;
                }
                let v = v as i64;
                for j in 0..n {
                    a[i * n + j] = (a[i * n + j] as i64 + v * rhs.a[k * n + j] as i64)
                        .try_into()
                        .expect("entry fits i32");
                }
            }
        }
        IntMat { n, a }
    }

    /// Coefficients `c_0..c_n` of `det(xI - M)` (monic) by the
    /// Faddeev-LeVerrier recursion; exact in `i128`.
    pub fn char_poly(&self) -> Vec<i128> {
        let n = self.n;
        let m: Vec<i128> = self.a.iter().map(|&v| v as i128).collect();
        let mut c = vec![0i128; n + 1];
        c[n] = 1;
        let mut aux = m.clone();
        let trace = |mat: &Vec<i128>| -> i128 { (0..n).map(|i| mat[i * n + i]).sum() };
        if n == 0 {
            return c;
        }
        c[n - 1] = -trace(&aux);
        for k in 2..=n {
            // aux <- M * (aux + c_{n-k+1} I)
            let mut shifted = aux.clone();
            for i in 0..n {
                shifted[i * n + i] += c[n - k + 1];
            }
            let mut next = vec![0i128; n * n];
            for i in 0..n {
                for l in 0..n {
                    let v = m[i * n + l];
                    if v == 0 {
                        continue;
                    }
                    for j in 0..n {
                        next[i * n + j] += v * shifted[l * n + j];
                    }
                }
            }
            aux = next;
            let t = trace(&aux);
            debug_assert_eq!(t % (k as i128), 0);
            c[n - k] = -t / (k as i128);
        }
        c
    }
}

/// An element of a Weyl group in one of its concrete realizations.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum WeylElement {
    Perm(Perm),
    Signed(SignedPerm),
    Matrix(IntMat),
}

impl WeylElement {
    pub fn dim(&self) -> usize {
        match self {
            WeylElement::Perm(p) => p.n(),
            WeylElement::Signed(s) => s.n(),
            WeylElement::Matrix(m) => m.n,
        }
    }
}

/// Cycle type of a plain permutation as an ascending partition; 1-cycles
/// are not omitted.
pub fn cycle_partition(w: &WeylElement) -> Result<Partition> {
    match w {
        WeylElement::Perm(p) => Ok(Partition::new(
            p.cycles().iter().map(|c| c.len() as u32).collect(),
        )),
        _ => Err(Error::Precondition(
            "cycle_partition needs a plain permutation".into(),
        )),
    }
}

/// Signed cycle type: per cycle of the underlying permutation, the cycle
/// length carrying the product of the signs met along the cycle. Parts are
/// listed in the standard decomposition order, so the total sign equals the
/// element's total sign.
pub fn signed_cycle_partition(w: &WeylElement) -> Result<SignedPartition> {
    let s = match w {
        WeylElement::Signed(s) => s,
        _ => {
            return Err(Error::Precondition(
                "signed_cycle_partition needs a signed permutation".into(),
            ))
        }
    };
    let cycles = s.underlying().cycles();
    let parts = cycles
        .iter()
        .map(|cycle| {
            let sign: i64 = cycle
                .iter()
                .map(|&j| s.signs[j as usize] as i64)
                .product();
            sign * cycle.len() as i64
        })
        .collect();
    Ok(SignedPartition::new(parts))
}

/// `(det(1 + t w), det(1 - t^2 w))` in the canonical reflection
/// representation. Cycle-type products for (signed) permutations, the
/// characteristic polynomial for matrices.
pub fn char_factors(w: &WeylElement) -> (Poly, Poly) {
    match w {
        WeylElement::Perm(p) => {
            let mut num = Poly::one();
            let mut den = Poly::one();
            for cycle in p.cycles() {
                let (cn, cd) = cycle_factor(cycle.len(), 1);
                num = &num * &cn;
                den = &den * &cd;
            }
            (num, den)
        }
        WeylElement::Signed(s) => {
            let mut num = Poly::one();
            let mut den = Poly::one();
            for cycle in s.underlying().cycles() {
                let sign: i32 = cycle
                    .iter()
                    .map(|&j| s.signs[j as usize] as i32)
                    .product();
                let (cn, cd) = cycle_factor(cycle.len(), sign);
                num = &num * &cn;
                den = &den * &cd;
            }
            (num, den)
        }
        WeylElement::Matrix(m) => {
            let n = m.n;
            let c = m.char_poly();
            // det(1 + tM): coefficient of t^j is (-1)^j c_{n-j};
            // det(1 - t^2 M): coefficient of t^{2j} is c_{n-j}.
            let mut num = vec![Rational::zero(); n + 1];
            let mut den = vec![Rational::zero(); 2 * n + 1];
            for j in 0..=n {
                let v = rat_int(c[n - j] as i64);
                num[j] = if j % 2 == 0 { v.clone() } else { -v.clone() };
                den[2 * j] = v;
            }
            (Poly::from_coeffs(num), Poly::from_coeffs(den))
        }
    }
}

/// Per-cycle determinant factors: a cycle of length `l` and sign `s`
/// contributes `1 + (-1)^{l+1} s t^l` and `1 - s t^{2l}`.
fn cycle_factor(l: usize, sign: i32) -> (Poly, Poly) {
    let s = rat_int(sign as i64);
    let flip = if l % 2 == 0 { -s.clone() } else { s.clone() };
    let mut num = vec![Rational::zero(); l + 1];
    num[0] = Rational::one();
    num[l] = flip;
    let mut den = vec![Rational::zero(); 2 * l + 1];
    den[0] = Rational::one();
    den[2 * l] = -s;
    (Poly::from_coeffs(num), Poly::from_coeffs(den))
}

/// Explicit signed-permutation matrix, for cross-checking the cycle-type
/// determinant factors.
pub fn to_matrix(w: &WeylElement) -> Result<IntMat> {
    match w {
        WeylElement::Perm(p) => {
            let n = p.n();
            let mut m = IntMat {
                n,
                a: vec![0; n * n],
            };
            for j in 0..n {
                m.a[p.images[j] as usize * n + j] = 1;
            }
            Ok(m)
        }
        WeylElement::Signed(s) => {
            let n = s.n();
            let mut m = IntMat {
                n,
                a: vec![0; n * n],
            };
            for j in 0..n {
                m.a[s.perm[j] as usize * n + j] = s.signs[j] as i32;
            }
            Ok(m)
        }
        WeylElement::Matrix(m) => Ok(m.clone()),
    }
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

fn check_budget(spec: &GroupSpec, cap: u128) -> Result<()> {
    let order = &spec.group_order();
    let order_u128 = u128::try_from(order).unwrap_or(u128::MAX);
    if order_u128 > cap {
        return Err(Error::BudgetExceeded {
            order: order_u128,
            cap,
        });
    }
    Ok(())
}

fn permutations(n: usize) -> Vec<Perm> {
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Perm>) {
        if remaining.is_empty() {
            out.push(Perm {
                images: current.clone(),
            });
            return;
        }
        for i in 0..remaining.len() {
            let v = remaining.remove(i);
            current.push(v);
            rec(remaining, current, out);
            current.pop();
            remaining.insert(i, v);
        }
    }
    let mut out = Vec::new();
    rec(&mut (0..n as u32).collect(), &mut Vec::new(), &mut out);
    out
}

fn sign_vectors(n: usize) -> Vec<Vec<i8>> {
    let mut out = Vec::new();
    for code in 0u64..(1 << n) {
        out.push(
            (0..n)
                .map(|i| if code & (1 << (n - 1 - i)) != 0 { -1 } else { 1 })
                .collect(),
        );
    }
    out
}

/// Visit every element of the Weyl group exactly once; returns the count.
pub fn stream_elements(
    spec: &GroupSpec,
    cap: u128,
    f: &mut dyn FnMut(&WeylElement),
) -> Result<u128> {
    check_budget(spec, cap)?;
    let n = spec.letters() as usize;
    match spec.family {
        Family::U | Family::SU => {
            let mut count = 0u128;
            for p in permutations(n) {
                f(&WeylElement::Perm(p));
                count += 1;
            }
            Ok(count)
        }
        Family::Sp | Family::SOOdd | Family::SOEven => {
            let even_only = spec.family == Family::SOEven;
            let mut count = 0u128;
            for p in permutations(n) {
                for s in sign_vectors(n) {
                    let w = SignedPerm {
                        perm: p.images.clone(),
                        signs: s,
                    };
                    if even_only && w.total_sign() != 1 {
                        continue;
                    }
                    f(&WeylElement::Signed(w));
                    count += 1;
                }
            }
            Ok(count)
        }
        _ => {
            let label = spec.family.exceptional_label().unwrap();
            let cartan = refdata::load_cartan(label)?;
            let gens = simple_reflections(&cartan.matrix);
            let mut count = 0u128;
            closure_bfs(&gens, &mut |m| {
                f(&WeylElement::Matrix(m.clone()));
                count += 1;
            });
            Ok(count)
        }
    }
}

/// Full enumeration as a vector, canonically sorted for determinism.
pub fn enumerate_group(spec: &GroupSpec, cap: u128) -> Result<Vec<WeylElement>> {
    let mut out = Vec::new();
    stream_elements(spec, cap, &mut |w| out.push(w.clone()))?;
    if !spec.family.is_classical() {
        out.sort_by(|a, b| match (a, b) {
            (WeylElement::Matrix(x), WeylElement::Matrix(y)) => x.a.cmp(&y.a),
            _ => unreachable!(),
        });
    }
    Ok(out)
}

/// Simple reflections in the simple-root basis: `s_i(e_j) = e_j - C_ij e_i`.
pub fn simple_reflections(cartan: &[Vec<i64>]) -> Vec<IntMat> {
    let n = cartan.len();
    (0..n)
        .map(|i| {
            let mut m = IntMat::identity(n);
            for (j, &c) in cartan[i].iter().enumerate() {
                m.a[i * n + j] -= c as i32;
            }
            m
        })
        .collect()
}

/// Breadth-first closure of the generated matrix group.
fn closure_bfs(gens: &[IntMat], visit: &mut dyn FnMut(&IntMat)) {
    let n = gens.first().map(|g| g.n).unwrap_or(0);
    let id = IntMat::identity(n);
    let mut seen: HashSet<Vec<i32>> = HashSet::new();
    seen.insert(id.a.clone());
    visit(&id);
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for w in &frontier {
            for g in gens {
                let prod = w.mul(g);
                if seen.insert(prod.a.clone()) {
                    visit(&prod);
                    next.push(prod);
                }
            }
        }
        frontier = next;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Poly;

    fn perm(images: &[u32]) -> WeylElement {
        WeylElement::Perm(Perm {
            images: images.to_vec(),
        })
    }

    fn signed(perm: &[u32], signs: &[i8]) -> WeylElement {
        WeylElement::Signed(SignedPerm {
            perm: perm.to_vec(),
            signs: signs.to_vec(),
        })
    }

    fn spec(family: Family, n: u32) -> GroupSpec {
        GroupSpec::new(family, n).unwrap()
    }

    #[test]
    fn sigma_3_has_six_elements() {
        let els = enumerate_group(&spec(Family::U, 3), 1 << 20).unwrap();
        assert_eq!(els.len(), 6);
    }

    #[test]
    fn group_orders_match_table() {
        assert_eq!(spec(Family::U, 5).group_order(), BigUint::from(120u32));
        assert_eq!(spec(Family::Sp, 4).group_order(), BigUint::from(384u32));
        assert_eq!(spec(Family::SOOdd, 4).group_order(), BigUint::from(384u32));
        assert_eq!(spec(Family::SOEven, 4).group_order(), BigUint::from(192u32));
        assert_eq!(spec(Family::SOEven, 1).group_order(), BigUint::from(1u32));
        assert_eq!(
            spec(Family::E8, 8).group_order(),
            BigUint::from(696_729_600u32)
        );
    }

    #[test]
    fn enumeration_sizes_match_orders() {
        for (fam, n) in [
            (Family::U, 4),
            (Family::SU, 4),
            (Family::Sp, 3),
            (Family::SOOdd, 3),
            (Family::SOEven, 3),
            (Family::SOEven, 1),
        ] {
            let s = spec(fam, n);
            let els = enumerate_group(&s, 1 << 20).unwrap();
            assert_eq!(BigUint::from(els.len()), s.group_order(), "{:?}", s);
        }
    }

    #[test]
    fn g2_closure_has_twelve_elements() {
        let els = enumerate_group(&spec(Family::G2, 2), 1 << 20).unwrap();
        assert_eq!(els.len(), 12);
    }

    #[test]
    fn f4_closure_has_1152_elements() {
        let els = enumerate_group(&spec(Family::F4, 4), 1 << 20).unwrap();
        assert_eq!(els.len(), 1152);
    }

    #[test]
    fn e6_closure_has_51840_elements() {
        let mut count = 0u128;
        stream_elements(&spec(Family::E6, 6), 1 << 20, &mut |_| count += 1).unwrap();
        assert_eq!(count, 51840);
    }

    #[test]
    fn e8_exceeds_default_budget() {
        let err = enumerate_group(&spec(Family::E8, 8), 100_000).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
    }

    #[test]
    fn generators_are_reflections() {
        for label in ["G2", "F4", "E6", "E7", "E8"] {
            let cartan = refdata::load_cartan(label).unwrap();
            for s in simple_reflections(&cartan.matrix) {
                let sq = s.mul(&s);
                assert_eq!(sq, IntMat::identity(s.n), "{} generator not involutive", label);
                let c = s.char_poly();
                // det(s) = (-1)^n c_0 must be -1 for a reflection.
                let det = if s.n % 2 == 0 { c[0] } else { -c[0] };
                assert_eq!(det, -1, "{} generator not a reflection", label);
            }
        }
    }

    #[test]
    fn closure_invariant_under_generator_conjugation() {
        for (family, label) in [(Family::G2, "G2"), (Family::F4, "F4")] {
            let cartan = refdata::load_cartan(label).unwrap();
            let gens = simple_reflections(&cartan.matrix);
            let els = enumerate_group(&spec(family, 0), 1 << 20).unwrap();
            let set: HashSet<Vec<i32>> = els
                .iter()
                .map(|w| match w {
                    WeylElement::Matrix(m) => m.a.clone(),
                    _ => unreachable!(),
                })
                .collect();
            for g in &gens {
                for w in &els {
                    if let WeylElement::Matrix(m) = w {
                        let conj = g.mul(&m.mul(g));
                        assert!(set.contains(&conj.a), "{}", label);
                    }
                }
            }
        }
    }

    #[test]
    fn identity_cycle_type() {
        let id = perm(&[0, 1, 2, 3]);
        assert_eq!(
            cycle_partition(&id).unwrap(),
            Partition::new(vec![1, 1, 1, 1])
        );
    }

    #[test]
    fn standard_decomposition_example() {
        // (1 6)(2 5)(3 4 7) on 7 letters, 0-based images.
        let w = perm(&[5, 4, 3, 6, 1, 0, 2]);
        assert_eq!(
            cycle_partition(&w).unwrap(),
            Partition::new(vec![2, 2, 3])
        );
    }

    #[test]
    fn full_cycle_type() {
        let w = perm(&[1, 2, 3, 0]);
        assert_eq!(cycle_partition(&w).unwrap(), Partition::new(vec![4]));
    }

    #[test]
    fn signed_identity_cycle_type() {
        let id = signed(&[0, 1, 2], &[1, 1, 1]);
        assert_eq!(
            signed_cycle_partition(&id).unwrap(),
            SignedPartition::new(vec![1, 1, 1])
        );
    }

    #[test]
    fn single_flip_cycle_type() {
        // Flip letter 1 (0-based letter 0), identity permutation, in B_2:
        // two 1-cycles, the first carrying the minus.
        let w = signed(&[0, 1], &[-1, 1]);
        assert_eq!(
            signed_cycle_partition(&w).unwrap(),
            SignedPartition::new(vec![-1, 1])
        );
    }

    #[test]
    fn signed_cycle_sign_matches_total_sign_in_b3() {
        let els = enumerate_group(&spec(Family::Sp, 3), 1 << 20).unwrap();
        assert_eq!(els.len(), 48);
        for w in &els {
            if let WeylElement::Signed(s) = w {
                let c = signed_cycle_partition(w).unwrap();
                assert_eq!(c.sign(), s.total_sign());
            }
        }
    }

    #[test]
    fn b_plus_has_index_two() {
        let all = enumerate_group(&spec(Family::Sp, 4), 1 << 20).unwrap();
        let plus = enumerate_group(&spec(Family::SOEven, 4), 1 << 20).unwrap();
        assert_eq!(all.len(), 2 * plus.len());
    }

    #[test]
    fn char_factors_identity() {
        let id = perm(&[0, 1, 2]);
        let (num, den) = char_factors(&id);
        assert_eq!(num, Poly::from_int_coeffs(&[1, 1]).pow(3));
        assert_eq!(den, Poly::from_int_coeffs(&[1, 0, -1]).pow(3));
    }

    #[test]
    fn char_factors_transposition() {
        // Eigenvalues +1, -1: det(1+tw) = 1 - t^2, det(1-t^2 w) = 1 - t^4.
        let w = perm(&[1, 0]);
        let (num, den) = char_factors(&w);
        assert_eq!(num, Poly::from_int_coeffs(&[1, 0, -1]));
        assert_eq!(den, Poly::from_int_coeffs(&[1, 0, 0, 0, -1]));
    }

    #[test]
    fn cycle_factors_match_matrix_determinants() {
        // Cross-check the cycle-type shortcut against the characteristic
        // polynomial of the explicit (signed) permutation matrix, over all
        // of Sigma_6 and B_4.
        for n in 2..=6 {
            for w in enumerate_group(&spec(Family::U, n), 1 << 20).unwrap() {
                let fast = char_factors(&w);
                let slow = char_factors(&WeylElement::Matrix(to_matrix(&w).unwrap()));
                assert_eq!(fast, slow, "{:?}", w);
            }
        }
        for w in enumerate_group(&spec(Family::Sp, 4), 1 << 20).unwrap() {
            let fast = char_factors(&w);
            let slow = char_factors(&WeylElement::Matrix(to_matrix(&w).unwrap()));
            assert_eq!(fast, slow, "{:?}", w);
        }
    }

    #[test]
    fn signed_compose_closure_spot_checks() {
        let els = enumerate_group(&spec(Family::Sp, 2), 1 << 20).unwrap();
        let set: HashSet<SignedPerm> = els
            .iter()
            .map(|w| match w {
                WeylElement::Signed(s) => s.clone(),
                _ => unreachable!(),
            })
            .collect();
        let mut identities = 0;
        for a in &set {
            for b in &set {
                assert!(set.contains(&a.compose(b)));
            }
            assert!(set.contains(&a.inverse()));
            assert_eq!(a.compose(&a.inverse()), SignedPerm::identity(2));
            if *a == SignedPerm::identity(2) {
                identities += 1;
            }
        }
        assert_eq!(identities, 1);
    }

    #[test]
    fn characteristic_degrees_table() {
        assert_eq!(spec(Family::SU, 4).characteristic_degrees(), vec![2, 3, 4]);
        assert_eq!(spec(Family::U, 4).characteristic_degrees(), vec![1, 2, 3, 4]);
        assert_eq!(spec(Family::Sp, 3).characteristic_degrees(), vec![2, 4, 6]);
        assert_eq!(
            spec(Family::SOEven, 4).characteristic_degrees(),
            vec![2, 4, 6, 4]
        );
        assert_eq!(
            spec(Family::E8, 8).characteristic_degrees(),
            vec![2, 8, 12, 14, 18, 20, 24, 30]
        );
    }

    #[test]
    fn dims_of_simple_groups() {
        assert_eq!(spec(Family::SU, 2).dim_group(), 3);
        assert_eq!(spec(Family::G2, 2).dim_group(), 14);
        assert_eq!(spec(Family::F4, 4).dim_group(), 52);
        assert_eq!(spec(Family::E6, 6).dim_group(), 78);
        assert_eq!(spec(Family::E7, 7).dim_group(), 133);
        assert_eq!(spec(Family::E8, 8).dim_group(), 248);
    }
}
