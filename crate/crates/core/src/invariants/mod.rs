//! Brute-force invariant theory in the polynomial-tensor-exterior algebra
//! `P(n) ⊗ Λ(y_j^i)`: the invariant generators `z(d,I)` / `w(d,I)`, graded
//! dimensions of the invariant ring by group averaging, Newton-type and
//! coinvariant identities, and the least-term order.
//!
//! Degrees: `|x_j| = 2`, `|y_j^i| = 1`. Exterior generators are kept in the
//! normal form `y_j^i` ordered by row `j` first and superscript `i` inside
//! a row; every product computes its reordering sign against this normal
//! form.

mod reduction;

pub use reduction::{check_coinv, check_su3_relations, generator_minimality, invariant_dim};

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Poly, Rational};
use crate::weylgroups::{Family, WeylElement};

// ---------------------------------------------------------------------------
// Monomials and polynomials
// ---------------------------------------------------------------------------

/// Monomial of `P(n) ⊗ Λ(y_j^i)` in normal form: `xs[j]` is the exponent
/// of `x_{j+1}`, `ys[j]` the bitmask of superscripts `i` with `y_{j+1}^i`
/// present.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExtMonomial {
    pub xs: Vec<u32>,
    pub ys: Vec<u32>,
}

impl ExtMonomial {
    pub fn one(n: usize) -> ExtMonomial {
        ExtMonomial {
            xs: vec![0; n],
            ys: vec![0; n],
        }
    }

    pub fn x_power(n: usize, row: usize, e: u32) -> ExtMonomial {
        let mut m = ExtMonomial::one(n);
        m.xs[row] = e;
        m
    }

    /// `y_{row+1}^I` for a superscript set given as a bitmask.
    pub fn y_set(n: usize, row: usize, mask: u32) -> ExtMonomial {
        let mut m = ExtMonomial::one(n);
        m.ys[row] = mask;
        m
    }

    pub fn n(&self) -> usize {
        self.xs.len()
    }

    pub fn x_degree(&self) -> u32 {
        self.xs.iter().sum()
    }

    pub fn ext_degree(&self) -> u32 {
        self.ys.iter().map(|m| m.count_ones()).sum()
    }

    /// Cohomological degree `2 * x_degree + ext_degree`.
    pub fn degree(&self) -> u32 {
        2 * self.x_degree() + self.ext_degree()
    }

    /// Exterior generators in normal order, as `(row, superscript)` pairs.
    fn gens(&self) -> Vec<(u32, u32)> {
        let mut out = Vec::new();
        for (j, &mask) in self.ys.iter().enumerate() {
            for i in 0..32 {
                if mask & (1 << i) != 0 {
                    out.push((j as u32, i));
                }
            }
        }
        out
    }

    /// Product with reordering sign; `None` when an odd generator repeats.
    fn mul(&self, rhs: &ExtMonomial) -> Option<(ExtMonomial, i32)> {
        let n = self.n();
        debug_assert_eq!(n, rhs.n());
        for j in 0..n {
            if self.ys[j] & rhs.ys[j] != 0 {
                return None;
            }
        }
        let a = self.gens();
        let b = rhs.gens();
        let mut inversions = 0usize;
        for &bg in &b {
            inversions += a.iter().filter(|&&ag| ag > bg).count();
        }
        let sign = if inversions % 2 == 0 { 1 } else { -1 };
        let mut xs = self.xs.clone();
        let mut ys = self.ys.clone();
        for j in 0..n {
            xs[j] += rhs.xs[j];
            ys[j] |= rhs.ys[j];
        }
        Some((ExtMonomial { xs, ys }, sign))
    }
}

impl fmt::Display for ExtMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (j, &e) in self.xs.iter().enumerate() {
            if e > 0 {
                if wrote {
                    write!(f, " ")?;
                }
                write!(f, "x{}", j + 1)?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
                wrote = true;
            }
        }
        for (j, &mask) in self.ys.iter().enumerate() {
            for i in 0..32 {
                if mask & (1 << i) != 0 {
                    if wrote {
                        write!(f, " ")?;
                    }
                    write!(f, "y{}^{}", j + 1, i + 1)?;
                    wrote = true;
                }
            }
        }
        if !wrote {
            write!(f, "1")?;
        }
        Ok(())
    }
}

/// Element of `P(n) ⊗ Λ^{⊗ m}` with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtPoly {
    pub n: usize,
    pub m: usize,
    terms: BTreeMap<ExtMonomial, Rational>,
}

impl ExtPoly {
    pub fn zero(n: usize, m: usize) -> ExtPoly {
        ExtPoly {
            n,
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize, m: usize) -> ExtPoly {
        ExtPoly::from_monomial(ExtMonomial::one(n), Rational::one(), m)
    }

    pub fn from_monomial(mono: ExtMonomial, coeff: Rational, m: usize) -> ExtPoly {
        let n = mono.n();
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(mono, coeff);
        }
        ExtPoly { n, m, terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&ExtMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, mono: &ExtMonomial) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn add_term(&mut self, mono: ExtMonomial, coeff: Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(mono);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let new = o.get() + &coeff;
                if new.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = new;
                }
            }
        }
    }

    pub fn add(&self, rhs: &ExtPoly) -> ExtPoly {
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(mono.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &ExtPoly) -> ExtPoly {
        let mut out = self.clone();
        for (mono, c) in &rhs.terms {
            out.add_term(mono.clone(), -c);
        }
        out
    }

    pub fn scale(&self, c: &Rational) -> ExtPoly {
        if c.is_zero() {
            return ExtPoly::zero(self.n, self.m);
        }
        ExtPoly {
            n: self.n,
            m: self.m,
            terms: self
                .terms
                .iter()
                .map(|(mono, v)| (mono.clone(), v * c))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &ExtPoly) -> ExtPoly {
        let mut out = ExtPoly::zero(self.n, self.m);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                if let Some((mono, sign)) = ma.mul(mb) {
                    out.add_term(mono, ca * cb * rat_int(sign as i64));
                }
            }
        }
        out
    }

    /// Action of a Weyl-group element realized on indices: a permutation
    /// relabels rows, a signed permutation additionally negates `x_j` and
    /// `y_j^i` per its sign vector. A ring homomorphism.
    pub fn apply_weyl(&self, w: &WeylElement) -> Result<ExtPoly> {
        let (perm, signs): (&[u32], Option<&[i8]>) = match w {
            WeylElement::Perm(p) => (&p.images, None),
            WeylElement::Signed(s) => (&s.perm, Some(&s.signs)),
            WeylElement::Matrix(_) => {
                return Err(Error::Precondition(
                    "index action needs a (signed) permutation".into(),
                ))
            }
        };
        if perm.len() != self.n {
            return Err(Error::RankMismatch {
                expected: self.n,
                found: perm.len(),
            });
        }
        let mut out = ExtPoly::zero(self.n, self.m);
        for (mono, c) in &self.terms {
            let (new_mono, sign) = apply_to_monomial(mono, perm, signs);
            out.add_term(new_mono, c * rat_int(sign as i64));
        }
        Ok(out)
    }
}

/// Relabel a monomial along a permutation (and signs); returns the normal
/// form and the reordering sign.
pub(crate) fn apply_to_monomial(
    mono: &ExtMonomial,
    perm: &[u32],
    signs: Option<&[i8]>,
) -> (ExtMonomial, i32) {
    let n = mono.n();
    let mut xs = vec![0u32; n];
    let mut ys = vec![0u32; n];
    for (j, &target) in perm.iter().enumerate() {
        xs[target as usize] = mono.xs[j];
        ys[target as usize] = mono.ys[j];
    }
    // Reordering parity of the mapped generator list: blocks land intact,
    // so inversions only arise between blocks whose order flips.
    let mut inversions = 0u64;
    for j1 in 0..n {
        let p1 = mono.ys[j1].count_ones() as u64;
        if p1 == 0 {
            continue;
        }
        for j2 in j1 + 1..n {
            if perm[j1] > perm[j2] {
                inversions += p1 * mono.ys[j2].count_ones() as u64;
            }
        }
    }
    let mut sign: i32 = if inversions % 2 == 0 { 1 } else { -1 };
    if let Some(s) = signs {
        for (j, &sj) in s.iter().enumerate() {
            let weight = mono.xs[j] + mono.ys[j].count_ones();
            if sj < 0 && weight % 2 == 1 {
                sign = -sign;
            }
        }
    }
    (ExtMonomial { xs, ys }, sign)
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Generator family flavor: `z(d, I)` (type A invariants) or `w(d, I)`
/// (type B/C invariants, with the exponent `2d + eps(|I|) - 2` on `x`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenFlavor {
    ZType,
    WType,
}

/// One invariant generator, determined by the positive integer `d` and the
/// nonempty superscript set `I` (bitmask).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GeneratorSpec {
    pub d: u32,
    pub set: u32,
    pub flavor: GenFlavor,
}

fn eps(card: u32) -> u32 {
    card % 2
}

impl GeneratorSpec {
    pub fn card(&self) -> u32 {
        self.set.count_ones()
    }

    pub fn x_exponent(&self) -> u32 {
        match self.flavor {
            GenFlavor::ZType => self.d - 1,
            GenFlavor::WType => 2 * self.d + eps(self.card()) - 2,
        }
    }

    /// Cohomological degree.
    pub fn degree(&self) -> u32 {
        2 * self.x_exponent() + self.card()
    }
}

impl fmt::Display for GeneratorSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.flavor {
            GenFlavor::ZType => "z",
            GenFlavor::WType => "w",
        };
        let elems: Vec<String> = (0..32)
            .filter(|i| self.set & (1 << i) != 0)
            .map(|i| (i + 1).to_string())
            .collect();
        write!(f, "{}({}, {{{}}})", letter, self.d, elems.join(","))
    }
}

/// `z(d,I) = sum_j x_j^{d-1} y_j^I`, or the `w` analogue.
pub fn z_elem(g: &GeneratorSpec, n: usize, m: usize) -> ExtPoly {
    let mut out = ExtPoly::zero(n, m);
    let e = g.x_exponent();
    for j in 0..n {
        let mut mono = ExtMonomial::one(n);
        mono.xs[j] = e;
        mono.ys[j] = g.set;
        out.add_term(mono, Rational::one());
    }
    out
}

/// All injections `[k] -> [n]` as row tuples.
fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, n: usize, used: &mut Vec<bool>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if acc.len() == k {
            out.push(acc.clone());
            return;
        }
        for r in 0..n {
            if !used[r] {
                used[r] = true;
                acc.push(r);
                rec(k, n, used, acc, out);
                acc.pop();
                used[r] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(k, n, &mut vec![false; n], &mut Vec::new(), &mut out);
    out
}

/// `e(d,I) = sum over injections sigma of x_{sigma(1)}^d y_{sigma(1)}^{i_1}
/// ... y_{sigma(k)}^{i_k}`, the elementary-symmetric analogue entering the
/// Newton identity.
pub fn e_elem(d: u32, set: u32, n: usize, m: usize) -> ExtPoly {
    let supers: Vec<u32> = (0..32).filter(|i| set & (1 << i) != 0).collect();
    let k = supers.len();
    let mut out = ExtPoly::zero(n, m);
    if k == 0 || k > n {
        return out;
    }
    for rows in injections(k, n) {
        let mut acc = ExtPoly::from_monomial(
            ExtMonomial::x_power(n, rows[0], d),
            Rational::one(),
            m,
        );
        for (idx, &row) in rows.iter().enumerate() {
            let y = ExtPoly::from_monomial(
                ExtMonomial::y_set(n, row, 1 << supers[idx]),
                Rational::one(),
                m,
            );
            acc = acc.mul(&y);
        }
        out = out.add(&acc);
    }
    out
}

/// Subsets of `[m]` of fixed cardinality, lexicographic on element lists.
fn subsets_of_card(m: u32, card: u32) -> Vec<u32> {
    let mut out = Vec::new();
    fn rec(start: u32, m: u32, left: u32, acc: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(acc);
            return;
        }
        for i in start..m {
            rec(i + 1, m, left - 1, acc | (1 << i), out);
        }
    }
    rec(0, m, card, 0, &mut out);
    out
}

/// The minimal generating set for a family, deterministically ordered by
/// (|I|, d, I).
pub fn gen_set(family: Family, m: u32, n: u32) -> Result<Vec<GeneratorSpec>> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("gen_set needs m, n >= 1".into()));
    }
    let mut out = Vec::new();
    match family {
        Family::U | Family::SU => {
            for card in 1..=m {
                for d in 1..=n {
                    // membership: d + |I| - 1 <= n
                    if d + card - 1 > n {
                        continue;
                    }
                    if family == Family::SU && d == 1 && card == 1 {
                        continue;
                    }
                    for set in subsets_of_card(m, card) {
                        out.push(GeneratorSpec {
                            d,
                            set,
                            flavor: GenFlavor::ZType,
                        });
                    }
                }
            }
        }
        Family::Sp | Family::SOOdd => {
            for card in 1..=m {
                let mut d = 1;
                // membership: 2d + |I| + eps(|I|) - 2 <= 2n
                while 2 * d + card + eps(card) - 2 <= 2 * n {
                    for set in subsets_of_card(m, card) {
                        out.push(GeneratorSpec {
                            d,
                            set,
                            flavor: GenFlavor::WType,
                        });
                    }
                    d += 1;
                }
            }
        }
        _ => {
            return Err(Error::Unsupported(format!(
                "no generating set construction for {}",
                family.name()
            )))
        }
    }
    Ok(out)
}

/// Poincaré series of the free graded-commutative algebra on generators of
/// the given cohomological degrees, truncated at `trunc`: odd degrees give
/// exterior factors `1 + t^deg`, even degrees polynomial factors.
pub fn free_gca_hilbert(degrees: &[usize], trunc: usize) -> Poly {
    let mut acc = Poly::one();
    for &deg in degrees {
        assert!(deg >= 1, "generator degrees must be positive");
        let factor = if deg % 2 == 1 {
            let mut f = vec![Rational::zero(); deg + 1];
            f[0] = Rational::one();
            if deg <= trunc {
                f[deg] = Rational::one();
            }
            Poly::from_coeffs(f)
        } else {
            let mut f = vec![Rational::zero(); trunc + 1];
            let mut e = 0;
            while e <= trunc {
                f[e] = Rational::one();
                e += deg;
            }
            Poly::from_coeffs(f)
        };
        acc = (&acc * &factor).truncated(trunc);
    }
    acc
}

// ---------------------------------------------------------------------------
// The monomial order and least terms
// ---------------------------------------------------------------------------

/// Rank of a subset of `[m]` in the order by cardinality first,
/// lexicographic on element lists next.
pub fn subset_rank(mask: u32, m: u32) -> u32 {
    let mut all: Vec<u32> = (0..(1u32 << m)).collect();
    all.sort_by_key(|&s| subset_sort_key(s));
    all.iter().position(|&s| s == mask).unwrap() as u32
}

fn subset_sort_key(mask: u32) -> (u32, Vec<u32>) {
    let elems: Vec<u32> = (0..32).filter(|i| mask & (1 << i) != 0).collect();
    (mask.count_ones(), elems)
}

/// Multiplicity vector of the row subsets, indexed by the subset order on
/// the nonempty subsets of `[m]`.
fn d_vector(mono: &ExtMonomial, m: u32) -> Vec<u32> {
    let mut ordered: Vec<u32> = (1..(1u32 << m)).collect();
    ordered.sort_by_key(|&s| subset_sort_key(s));
    let mut counts = vec![0u32; ordered.len()];
    for &mask in &mono.ys {
        if mask != 0 {
            let idx = ordered.iter().position(|&s| s == mask).unwrap();
            counts[idx] += 1;
        }
    }
    counts
}

/// The total order on canonical monomials: total degree, then exterior
/// degree (larger first), then word length `r` (larger first), then the
/// subset multiplicity vector, then the exponent vector (lexicographically
/// larger exponent vectors are smaller, piling weight onto low rows).
pub fn cmp_m_order(a: &ExtMonomial, b: &ExtMonomial, m: u32) -> Ordering {
    a.degree()
        .cmp(&b.degree())
        .then_with(|| b.ext_degree().cmp(&a.ext_degree()))
        .then_with(|| {
            let ra = a.ys.iter().filter(|&&y| y != 0).count();
            let rb = b.ys.iter().filter(|&&y| y != 0).count();
            rb.cmp(&ra)
        })
        .then_with(|| d_vector(a, m).cmp(&d_vector(b, m)))
        .then_with(|| b.xs.cmp(&a.xs))
}

/// Canonical orbit representative: rows carrying exterior sets first, in
/// the subset order, with `x` exponents sorted descending inside tied
/// blocks; the least element of the row orbit in the monomial order.
pub fn canonical_rep(mono: &ExtMonomial) -> ExtMonomial {
    let n = mono.n();
    let mut rows: Vec<(u32, u32)> = (0..n).map(|j| (mono.xs[j], mono.ys[j])).collect();
    rows.sort_by(|&(xa, ya), &(xb, yb)| {
        match (ya, yb) {
            (0, 0) => {}
            (0, _) => return Ordering::Greater,
            (_, 0) => return Ordering::Less,
            _ => {
                let c = subset_sort_key(ya).cmp(&subset_sort_key(yb));
                if c != Ordering::Equal {
                    return c;
                }
            }
        }
        xb.cmp(&xa)
    });
    ExtMonomial {
        xs: rows.iter().map(|r| r.0).collect(),
        ys: rows.iter().map(|r| r.1).collect(),
    }
}

/// Least canonical monomial carried by a (symmetric-group invariant)
/// element with nonzero coefficient.
pub fn least_term(p: &ExtPoly) -> Result<ExtMonomial> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let m = p.m as u32;
    Ok(p.terms
        .keys()
        .map(canonical_rep)
        .min_by(|a, b| cmp_m_order(a, b, m))
        .unwrap())
}

// ---------------------------------------------------------------------------
// Identity checks in the free algebra
// ---------------------------------------------------------------------------

fn factorial_rational(k: u32) -> Rational {
    Rational::from_integer(crate::partitions::factorial(k).into())
}

/// Position-sum sign `d(J)` of a subset `J` of `I` (`J` given by indices
/// into the sorted elements of `I`): `sum of positions - |J|(|J|+1)/2`.
fn newton_sign_exponent(positions: &[usize]) -> usize {
    let s: usize = positions.iter().map(|p| p + 1).sum();
    let l = positions.len();
    s - l * (l + 1) / 2
}

/// The polynomial-tensor-exterior Newton identity: with `I = {i_1 < ... <
/// i_k}`,
/// `sum_{l=0}^{k-2} sum_{i_1 in J, |J| = l+1} (-1)^{l + d(J)} l! z(d,J)
/// e(0, I-J) + (-1)^{k+1} (k-1)! z(d,I)` equals `e(d-1, I)` for `k <= n`
/// and `0` for `k > n`.
pub fn check_newton(d: u32, set: u32, n: usize, m: usize) -> Result<bool> {
    if d == 0 || set == 0 {
        return Err(Error::Precondition("check_newton needs d >= 1, I nonempty".into()));
    }
    let elems: Vec<u32> = (0..32).filter(|i| set & (1 << i) != 0).collect();
    let k = elems.len();
    let mut lhs = ExtPoly::zero(n, m);
    // Subsets J of I containing the least element, by position masks.
    for l in 0..k.saturating_sub(1) {
        for pmask in 0u32..(1 << k) {
            if pmask & 1 == 0 || pmask.count_ones() as usize != l + 1 {
                continue;
            }
            let positions: Vec<usize> = (0..k).filter(|p| pmask & (1 << p) != 0).collect();
            let jset: u32 = positions.iter().map(|&p| 1u32 << elems[p]).sum();
            let sign_exp = l + newton_sign_exponent(&positions);
            let sign = if sign_exp % 2 == 0 { 1 } else { -1 };
            let coeff = rat_int(sign) * factorial_rational(l as u32);
            let term = z_elem(
                &GeneratorSpec {
                    d,
                    set: jset,
                    flavor: GenFlavor::ZType,
                },
                n,
                m,
            )
            .mul(&e_elem(0, set & !jset, n, m))
            .scale(&coeff);
            lhs = lhs.add(&term);
        }
    }
    let last_sign = if (k + 1) % 2 == 0 { 1 } else { -1 };
    let last_coeff = rat_int(last_sign) * factorial_rational(k as u32 - 1);
    lhs = lhs.add(
        &z_elem(
            &GeneratorSpec {
                d,
                set,
                flavor: GenFlavor::ZType,
            },
            n,
            m,
        )
        .scale(&last_coeff),
    );
    let rhs = if k <= n {
        e_elem(d - 1, set, n, m)
    } else {
        ExtPoly::zero(n, m)
    };
    Ok(lhs == rhs)
}

/// `q_{k_1} ... q_{k_n} = q_{k_1,...,k_n} y_1 ... y_n` where
/// `q_i = sum_j x_j^i y_j` and `q_{k_1,...,k_n}` is the alternating sum
/// over permutations.
pub fn check_antisym(k_list: &[u32], n: usize) -> Result<bool> {
    if k_list.len() != n {
        return Err(Error::Precondition("need exactly n exponents".into()));
    }
    let m = 1usize;
    let mut lhs = ExtPoly::one(n, m);
    for &k in k_list {
        let mut q = ExtPoly::zero(n, m);
        for j in 0..n {
            let mut mono = ExtMonomial::one(n);
            mono.xs[j] = k;
            mono.ys[j] = 1;
            q.add_term(mono, Rational::one());
        }
        lhs = lhs.mul(&q);
    }
    // Alternating polynomial part.
    let mut rhs = ExtPoly::zero(n, m);
    let perms = all_perms(n);
    for p in &perms {
        let mut mono = ExtMonomial::one(n);
        for (slot, &k) in k_list.iter().enumerate() {
            mono.xs[p[slot] as usize] += k;
        }
        rhs.add_term(mono, rat_int(perm_sign(p)));
    }
    let mut ymono = ExtMonomial::one(n);
    for j in 0..n {
        ymono.ys[j] = 1;
    }
    let rhs = rhs.mul(&ExtPoly::from_monomial(ymono, Rational::one(), m));
    Ok(lhs == rhs)
}

fn all_perms(n: usize) -> Vec<Vec<u32>> {
    fn rec(remaining: &mut Vec<u32>, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining.is_empty() {
            out.push(current.clone());
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

fn perm_sign(p: &[u32]) -> i64 {
    let mut inv = 0;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}
