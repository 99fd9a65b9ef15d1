//! Coinvariant reduction by exact linear algebra: per-degree quotients of
//! the polynomial ring by the ideal of fundamental Weyl invariants, the
//! group-averaging projector on the reduced slices, and the checks built
//! on top (invariant dimensions, the coinvariant identity, generator
//! minimality, the SU(3) relation table).

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Rational};
use crate::refdata;
use crate::weylgroups::{enumerate_group, Family, GroupSpec, WeylElement};

use super::{
    apply_to_monomial, gen_set, z_elem, ExtMonomial, ExtPoly, GenFlavor, GeneratorSpec,
};

type XMono = Vec<u32>;

/// Multivariate polynomial in the `x_j` alone; internal helper for ideal
/// slices.
#[derive(Clone, Debug, PartialEq, Eq)]
struct XPoly {
    n: usize,
    terms: BTreeMap<XMono, Rational>,
}

impl XPoly {
    fn zero(n: usize) -> XPoly {
        XPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, mono: XMono, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let new = o.get() + &c;
                if new.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = new;
                }
            }
        }
    }

    fn mul_monomial(&self, mono: &XMono) -> XPoly {
        let mut out = XPoly::zero(self.n);
        for (m, c) in &self.terms {
            let merged: XMono = m.iter().zip(mono).map(|(a, b)| a + b).collect();
            out.add_term(merged, c.clone());
        }
        out
    }

    fn degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.iter().sum())
            .next()
            .unwrap_or(0)
    }
}

/// Elementary symmetric polynomial `e_i(x_1^s, ..., x_n^s)` with each
/// variable raised to the power `s` (s = 1 or 2).
fn elementary_symmetric(n: usize, i: usize, s: u32) -> XPoly {
    let mut out = XPoly::zero(n);
    fn rec(start: usize, left: usize, n: usize, s: u32, acc: &mut XMono, out: &mut XPoly) {
        if left == 0 {
            out.add_term(acc.clone(), Rational::one());
            return;
        }
        for j in start..n {
            acc[j] = s;
            rec(j + 1, left - 1, n, s, acc, out);
            acc[j] = 0;
        }
    }
    rec(0, i, n, s, &mut vec![0; n], &mut out);
    out
}

/// Fundamental invariant polynomials generating `P(n)^W`.
fn fundamental_invariants(family: Family, n: usize) -> Result<Vec<XPoly>> {
    match family {
        Family::U => Ok((1..=n).map(|i| elementary_symmetric(n, i, 1)).collect()),
        Family::Sp | Family::SOOdd => {
            Ok((1..=n).map(|i| elementary_symmetric(n, i, 2)).collect())
        }
        Family::SOEven => {
            let mut out: Vec<XPoly> =
                (1..n).map(|i| elementary_symmetric(n, i, 2)).collect();
            // The n-th invariant of B_n^+ is the product x_1 ... x_n.
            out.push(elementary_symmetric(n, n, 1));
            Ok(out)
        }
        _ => Err(Error::Unsupported(format!(
            "no polynomial-invariant model for {}",
            family.name()
        ))),
    }
}

fn monomials_of_degree(n: usize, a: u32) -> Vec<XMono> {
    let mut out = Vec::new();
    fn rec(pos: usize, n: usize, left: u32, acc: &mut XMono, out: &mut Vec<XMono>) {
        if pos == n {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for e in (0..=left).rev() {
            acc[pos] = e;
            rec(pos + 1, n, left - e, acc, out);
        }
        acc[pos] = 0;
    }
    rec(0, n, a, &mut vec![0; n], &mut out);
    out
}

/// Reduced row echelon form in place; returns the pivot column of each
/// surviving row.
fn rref(rows: &mut Vec<Vec<Rational>>) -> Vec<usize> {
    let width = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..width {
        let Some(sel) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, sel);
        let inv = rows[rank][col].recip();
        for v in rows[rank][col..].iter_mut() {
            let scaled = &*v * &inv;
            *v = scaled;
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                let reduced = &*v - &(&factor * p);
                *v = reduced;
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    pivots
}

fn matrix_rank(mut rows: Vec<Vec<Rational>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(&mut rows).len()
}

/// One graded slice of the coinvariant quotient: monomial basis of the
/// degree, and the reduction of every monomial to coordinates over the
/// free (non-pivot) monomials.
struct SliceTable {
    monos: Vec<XMono>,
    index: HashMap<XMono, usize>,
    free: Vec<usize>,
    reduce: Vec<Vec<(usize, Rational)>>,
}

impl SliceTable {
    fn dim(&self) -> usize {
        self.free.len()
    }
}

/// Per-degree reduction tables for `P(n)` modulo the ideal generated by
/// the fundamental invariants.
pub(crate) struct QuotientTable {
    n: usize,
    slices: Vec<SliceTable>,
}

impl QuotientTable {
    fn slice(&self, a: u32) -> &SliceTable {
        &self.slices[a as usize]
    }
}

fn build_quotient(family: Family, n: usize, max_xdeg: u32) -> Result<QuotientTable> {
    let invariants = fundamental_invariants(family, n)?;
    let mut slices = Vec::new();
    for a in 0..=max_xdeg {
        let monos = monomials_of_degree(n, a);
        let index: HashMap<XMono, usize> = monos
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut rows = Vec::new();
        for f in &invariants {
            let df = f.degree();
            if df > a {
                continue;
            }
            for g in monomials_of_degree(n, a - df) {
                let prod = f.mul_monomial(&g);
                let mut row = vec![Rational::zero(); monos.len()];
                for (m, c) in &prod.terms {
                    row[index[m]] = c.clone();
                }
                rows.push(row);
            }
        }
        let pivots = rref(&mut rows);
        let pivot_of_col: HashMap<usize, usize> =
            pivots.iter().enumerate().map(|(r, &c)| (c, r)).collect();
        let free: Vec<usize> = (0..monos.len())
            .filter(|c| !pivot_of_col.contains_key(c))
            .collect();
        let slot: HashMap<usize, usize> =
            free.iter().enumerate().map(|(s, &c)| (c, s)).collect();
        let reduce: Vec<Vec<(usize, Rational)>> = (0..monos.len())
            .map(|c| {
                if let Some(&s) = slot.get(&c) {
                    vec![(s, Rational::one())]
                } else {
                    let row = &rows[pivot_of_col[&c]];
                    free.iter()
                        .enumerate()
                        .filter(|(_, &fc)| !row[fc].is_zero())
                        .map(|(s, &fc)| (s, -&row[fc]))
                        .collect()
                }
            })
            .collect();
        slices.push(SliceTable {
            monos,
            index,
            free,
            reduce,
        });
    }
    Ok(QuotientTable { n, slices })
}

/// Exterior monomials (`ys` masks per row) of total degree `e`.
fn ext_monomials(n: usize, m: usize, e: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    fn rec(row: usize, n: usize, m: usize, left: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if row == n {
            if left == 0 {
                out.push(acc.clone());
            }
            return;
        }
        for mask in 0u32..(1 << m) {
            let pop = mask.count_ones();
            if pop > left {
                continue;
            }
            acc[row] = mask;
            rec(row + 1, n, m, left - pop, acc, out);
        }
        acc[row] = 0;
    }
    rec(0, n, m, e, &mut vec![0; n], &mut out);
    out
}

/// Basis of one cohomological degree of the reduced algebra
/// `P(n)_W ⊗ Λ^{⊗m}`: pairs of a free coinvariant monomial and an exterior
/// monomial.
pub(crate) struct HBasis {
    n: usize,
    m: usize,
    degree: u32,
    items: Vec<(u32, usize, Vec<u32>)>,
    pos: HashMap<(u32, usize, Vec<u32>), usize>,
}

impl HBasis {
    pub(crate) fn len(&self) -> usize {
        self.items.len()
    }
}

fn h_basis(table: &QuotientTable, m: usize, degree: u32) -> HBasis {
    let n = table.n;
    let mut items = Vec::new();
    for a in 0..=degree / 2 {
        let e = degree - 2 * a;
        if e > (n * m) as u32 {
            continue;
        }
        let slice = table.slice(a);
        for slot in 0..slice.dim() {
            for ys in ext_monomials(n, m, e) {
                items.push((a, slot, ys));
            }
        }
    }
    let pos = items
        .iter()
        .enumerate()
        .map(|(i, item)| (item.clone(), i))
        .collect();
    HBasis {
        n,
        m,
        degree,
        items,
        pos,
    }
}

/// Reduce a homogeneous element to coordinates over an [`HBasis`].
fn reduce_ext(p: &ExtPoly, table: &QuotientTable, basis: &HBasis) -> Result<Vec<Rational>> {
    let mut out = vec![Rational::zero(); basis.len()];
    for (mono, c) in p.terms() {
        if mono.degree() != basis.degree {
            return Err(Error::Precondition(format!(
                "element is not homogeneous of degree {}",
                basis.degree
            )));
        }
        let a = mono.x_degree();
        let slice = table.slice(a);
        let idx = slice.index[&mono.xs];
        for (slot, coeff) in &slice.reduce[idx] {
            let key = (a, *slot, mono.ys.clone());
            let pos = basis.pos[&key];
            out[pos] += c * coeff;
        }
    }
    Ok(out)
}

/// Lift basis coordinates back to a representative in the free algebra.
fn lift(basis: &HBasis, table: &QuotientTable, coords: &[Rational]) -> ExtPoly {
    let mut out = ExtPoly::zero(basis.n, basis.m);
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let (a, slot, ys) = &basis.items[i];
        let slice = table.slice(*a);
        let mono = ExtMonomial {
            xs: slice.monos[slice.free[*slot]].clone(),
            ys: ys.clone(),
        };
        out.add_term(mono, c.clone());
    }
    out
}

/// Columns of the averaging projector `(1/|W|) sum_w w` on one degree of
/// the reduced algebra. Their span is the invariant subspace.
fn projector_columns(
    group: &[WeylElement],
    table: &QuotientTable,
    basis: &HBasis,
) -> Result<Vec<Vec<Rational>>> {
    let order = rat_int(group.len() as i64);
    let scale = order.recip();
    let mut cols = vec![vec![Rational::zero(); basis.len()]; basis.len()];
    for w in group {
        let (perm, signs): (&[u32], Option<&[i8]>) = match w {
            WeylElement::Perm(p) => (&p.images, None),
            WeylElement::Signed(s) => (&s.perm, Some(&s.signs)),
            WeylElement::Matrix(_) => {
                return Err(Error::Precondition(
                    "averaging needs (signed) permutations".into(),
                ))
            }
        };
        for (i, (a, slot, ys)) in basis.items.iter().enumerate() {
            let slice = table.slice(*a);
            let mono = ExtMonomial {
                xs: slice.monos[slice.free[*slot]].clone(),
                ys: ys.clone(),
            };
            let (image, sign) = apply_to_monomial(&mono, perm, signs);
            let factor = rat_int(sign as i64) * &scale;
            let idx = slice.index[&image.xs];
            for (s, coeff) in &slice.reduce[idx] {
                let key = (*a, *s, image.ys.clone());
                let pos = basis.pos[&key];
                cols[i][pos] += coeff * &factor;
            }
        }
    }
    Ok(cols)
}

fn weyl_group_for(family: Family, n: u32) -> Result<Vec<WeylElement>> {
    let spec_family = match family {
        Family::U => Family::U,
        Family::Sp | Family::SOOdd => Family::Sp,
        Family::SOEven => Family::SOEven,
        _ => {
            return Err(Error::Unsupported(format!(
                "invariant model covers classical families, not {}",
                family.name()
            )))
        }
    };
    enumerate_group(&GroupSpec::new(spec_family, n)?, 1 << 24)
}

const SLICE_BUDGET: usize = 20_000;

/// Dimension of the degree-`d` part of the invariant ring
/// `(P(n)_W ⊗ Λ^{⊗m})^W`, computed by averaging on the reduced slice and
/// taking the rank of the projector image. This is the brute-force side of
/// the identification of the cohomology with the invariant ring, checked
/// against the series coefficient.
pub fn invariant_dim(family: Family, m: u32, n: u32, d: u32) -> Result<usize> {
    if family == Family::SU {
        return Err(Error::Precondition(
            "invariant_dim works in the U(n) model; divide the series instead".into(),
        ));
    }
    let group = weyl_group_for(family, n)?;
    let table = build_quotient(family, n as usize, d / 2)?;
    let mut total = 0usize;
    for a in 0..=d / 2 {
        let e = d - 2 * a;
        if e > n * m {
            continue;
        }
        let slice_dim = table.slice(a).dim();
        let ext_count = ext_monomials(n as usize, m as usize, e).len();
        let block = slice_dim * ext_count;
        if block > SLICE_BUDGET {
            return Err(Error::BudgetExceeded {
                order: block as u128,
                cap: SLICE_BUDGET as u128,
            });
        }
        if block == 0 {
            continue;
        }
        // Build the projector restricted to this bidegree block.
        let basis = h_block_basis(&table, m as usize, a, e);
        let cols = projector_columns(&group, &table, &basis)?;
        total += matrix_rank(cols);
    }
    Ok(total)
}

/// Basis restricted to one `(x-degree, exterior-degree)` block; the
/// averaging preserves both gradings, so ranks add up block by block.
fn h_block_basis(table: &QuotientTable, m: usize, a: u32, e: u32) -> HBasis {
    let n = table.n;
    let mut items = Vec::new();
    let slice = table.slice(a);
    for slot in 0..slice.dim() {
        for ys in ext_monomials(n, m, e) {
            items.push((a, slot, ys));
        }
    }
    let pos = items
        .iter()
        .enumerate()
        .map(|(i, item)| (item.clone(), i))
        .collect();
    HBasis {
        n,
        m,
        degree: 2 * a + e,
        items,
        pos,
    }
}

/// The complete-homogeneous identity in the coinvariant algebra:
/// `sum_{i_1 + ... + i_k = n-k+1} x_1^{i_1} ... x_k^{i_k} = 0` in
/// `P(n)_{Sigma_n}`, verified by ideal-membership linear algebra.
pub fn check_coinv(k: u32, n: u32) -> Result<bool> {
    if k == 0 || k > n {
        return Err(Error::Precondition("check_coinv needs 1 <= k <= n".into()));
    }
    let a = n - k + 1;
    let table = build_quotient(Family::U, n as usize, a)?;
    let slice = table.slice(a);
    // h_{n-k+1}(x_1..x_k): all exponent vectors supported on the first k
    // variables.
    let mut reduced = vec![Rational::zero(); slice.dim()];
    for mono in monomials_of_degree(n as usize, a) {
        if mono[k as usize..].iter().any(|&e| e != 0) {
            continue;
        }
        let idx = slice.index[&mono];
        for (slot, coeff) in &slice.reduce[idx] {
            reduced[*slot] += coeff;
        }
    }
    Ok(reduced.iter().all(|c| c.is_zero()))
}

/// Spanning vectors (projector columns) of the invariant subspace in one
/// degree, plus the basis/table context needed to multiply and reduce.
struct InvariantSlice {
    basis: HBasis,
    span: Vec<Vec<Rational>>,
}

fn invariant_slice(
    group: &[WeylElement],
    table: &QuotientTable,
    m: usize,
    degree: u32,
) -> Result<InvariantSlice> {
    let basis = h_basis(table, m, degree);
    let span = if basis.len() == 0 {
        Vec::new()
    } else {
        projector_columns(group, table, &basis)?
    };
    Ok(InvariantSlice { basis, span })
}

/// Rank of a set of vectors together with the dimension check that `extra`
/// lies in their span.
fn in_span(span: &[Vec<Rational>], extra: &[Rational]) -> bool {
    if extra.iter().all(|c| c.is_zero()) {
        return true;
    }
    let base = matrix_rank(span.to_vec());
    let mut with = span.to_vec();
    with.push(extra.to_vec());
    matrix_rank(with) == base
}

/// Products of the given generators of exactly the target degree, as
/// elements of the free algebra.
fn products_of_degree(
    gens: &[GeneratorSpec],
    target: u32,
    n: usize,
    m: usize,
) -> Vec<ExtPoly> {
    let mut out = Vec::new();
    fn rec(
        gens: &[GeneratorSpec],
        start: usize,
        left: u32,
        acc: &ExtPoly,
        n: usize,
        m: usize,
        out: &mut Vec<ExtPoly>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for i in start..gens.len() {
            let deg = gens[i].degree();
            if deg > left {
                continue;
            }
            let next = acc.mul(&z_elem(&gens[i], n, m));
            if next.is_zero() {
                continue;
            }
            rec(gens, i, left - deg, &next, n, m, out);
        }
    }
    rec(gens, 0, target, &ExtPoly::one(n, m), n, m, &mut out);
    out
}

/// Minimality of the generating set for `U(n)`: dropping any single
/// generator strictly loses rank at that generator's degree, while the
/// full set reaches the invariant dimension there.
pub fn generator_minimality(m: u32, n: u32) -> Result<()> {
    let gens = gen_set(Family::U, m, n)?;
    let max_deg = gens.iter().map(|g| g.degree()).max().unwrap();
    let table = build_quotient(Family::U, n as usize, max_deg / 2)?;
    for g in &gens {
        let target = g.degree();
        let basis = h_basis(&table, m as usize, target);
        let dim = invariant_dim(Family::U, m, n, target)?;
        let full_rows: Vec<Vec<Rational>> = products_of_degree(&gens, target, n as usize, m as usize)
            .iter()
            .map(|p| reduce_ext(p, &table, &basis))
            .collect::<Result<_>>()?;
        let full_rank = matrix_rank(full_rows);
        if full_rank != dim {
            return Err(Error::ValidationFailure(format!(
                "generators span {} of {} at degree {} (m={}, n={})",
                full_rank, dim, target, m, n
            )));
        }
        let others: Vec<GeneratorSpec> = gens.iter().filter(|h| *h != g).cloned().collect();
        let rows: Vec<Vec<Rational>> = products_of_degree(&others, target, n as usize, m as usize)
            .iter()
            .map(|p| reduce_ext(p, &table, &basis))
            .collect::<Result<_>>()?;
        let rank = matrix_rank(rows);
        if rank >= dim {
            return Err(Error::ValidationFailure(format!(
                "dropping {} still spans degree {} (m={}, n={})",
                g, target, m, n
            )));
        }
    }
    Ok(())
}

/// The SU(3) relation table at `m = 2`: all six relations vanish in the
/// quotient of the invariant ring by the two degree-one classes, every
/// triple product of the six generators vanishes there, and the quotient
/// dimensions reproduce the SU(3) series through degree 8.
pub fn check_su3_relations() -> Result<()> {
    let n = 3usize;
    let m = 2usize;
    let zg = |d: u32, set: u32| -> ExtPoly {
        z_elem(
            &GeneratorSpec {
                d,
                set,
                flavor: GenFlavor::ZType,
            },
            n,
            m,
        )
    };
    let a1 = zg(2, 0b01);
    let a2 = zg(3, 0b01);
    let b1 = zg(2, 0b10);
    let b2 = zg(3, 0b10);
    let c1 = zg(1, 0b11);
    let c2 = zg(2, 0b11);
    let sigma = zg(1, 0b01);
    let tau = zg(1, 0b10);

    let group = weyl_group_for(Family::U, n as u32)?;
    let max_deg = 15u32;
    let table = build_quotient(Family::U, n, max_deg / 2)?;

    // Invariant spans per degree and the ideal J = (sigma, tau) inside the
    // invariant ring: J_D = sigma * Inv_{D-1} + tau * Inv_{D-1}.
    let mut inv: Vec<InvariantSlice> = Vec::new();
    for degree in 0..=max_deg {
        inv.push(invariant_slice(&group, &table, m, degree)?);
    }
    let mut ideal: Vec<Vec<Vec<Rational>>> = vec![Vec::new()];
    for degree in 1..=max_deg {
        let prev = &inv[(degree - 1) as usize];
        let basis = &inv[degree as usize].basis;
        let mut rows = Vec::new();
        for col in &prev.span {
            if col.iter().all(|c| c.is_zero()) {
                continue;
            }
            let v = lift(&prev.basis, &table, col);
            for gen in [&sigma, &tau] {
                let prod = gen.mul(&v);
                rows.push(reduce_ext(&prod, &table, basis)?);
            }
        }
        ideal.push(rows);
    }

    // Quotient dimensions match the SU(3) m = 2 series through degree 8.
    let fixture = refdata::load_fixture("SU3/m2")?;
    for degree in 0..=8u32 {
        let inv_dim = matrix_rank(inv[degree as usize].span.clone());
        let ideal_dim = matrix_rank(ideal[degree as usize].clone());
        let expect = fixture
            .coefficients
            .get(degree as usize)
            .copied()
            .unwrap_or(0) as usize;
        if inv_dim != expect + ideal_dim {
            return Err(Error::ValidationFailure(format!(
                "SU(3) model dimension {} at degree {}, series says {}",
                inv_dim as i64 - ideal_dim as i64,
                degree,
                expect
            )));
        }
    }

    // The six relations vanish in the quotient. The mixed relations hold
    // with the relative sign the normal form itself produces; the opposite
    // sign is checked to survive, so the list is sharp.
    let relations: Vec<(&str, ExtPoly, Option<ExtPoly>)> = vec![
        ("c1 c2", c1.mul(&c2), None),
        ("a2 c2", a2.mul(&c2), None),
        ("b2 c2", b2.mul(&c2), None),
        (
            "a2 c1 + a1 c2",
            a2.mul(&c1).add(&a1.mul(&c2)),
            Some(a2.mul(&c1).sub(&a1.mul(&c2))),
        ),
        (
            "b2 c1 + b1 c2",
            b2.mul(&c1).add(&b1.mul(&c2)),
            Some(b2.mul(&c1).sub(&b1.mul(&c2))),
        ),
        (
            "a2 b1 - b2 a1",
            a2.mul(&b1).sub(&b2.mul(&a1)),
            Some(a2.mul(&b1).add(&b2.mul(&a1))),
        ),
    ];
    for (name, r, flipped) in &relations {
        if r.is_zero() {
            continue;
        }
        let degree = r.terms().next().unwrap().0.degree();
        let coords = reduce_ext(r, &table, &inv[degree as usize].basis)?;
        if !in_span(&ideal[degree as usize], &coords) {
            return Err(Error::ValidationFailure(format!(
                "relation {} does not vanish in the SU(3) model",
                name
            )));
        }
        if let Some(other) = flipped {
            let coords = reduce_ext(other, &table, &inv[degree as usize].basis)?;
            if in_span(&ideal[degree as usize], &coords) {
                return Err(Error::ValidationFailure(format!(
                    "sign-flipped variant of {} vanishes too; relation list is degenerate",
                    name
                )));
            }
        }
    }

    // Every triple product of generators dies in the quotient.
    let generators = [&a1, &a2, &b1, &b2, &c1, &c2];
    for i in 0..6 {
        for j in i..6 {
            for k in j..6 {
                let p = generators[i].mul(generators[j]).mul(generators[k]);
                if p.is_zero() {
                    continue;
                }
                let degree = p.terms().next().unwrap().0.degree();
                let coords = reduce_ext(&p, &table, &inv[degree as usize].basis)?;
                if !in_span(&ideal[degree as usize], &coords) {
                    return Err(Error::ValidationFailure(format!(
                        "triple product ({},{},{}) survives in the SU(3) model",
                        i, j, k
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poincare::series_formula;


    #[test]
    fn coinvariant_dimensions_match_named_basis() {
        // Sigma_n coinvariants: slice dims multiply out to n!; the basis
        // x_1^{i_1} ... x_{n-1}^{i_{n-1}}, i_k <= n-k, gives the per-degree
        // counts.
        for n in 2..=4usize {
            let max: u32 = (n * (n - 1) / 2) as u32;
            let table = build_quotient(Family::U, n, max + 1).unwrap();
            let mut total = 0usize;
            for a in 0..=max {
                let named = monomials_of_degree(n, a)
                    .into_iter()
                    .filter(|mono| {
                        mono[n - 1] == 0
                            && mono
                                .iter()
                                .enumerate()
                                .all(|(k, &e)| e <= (n - 1 - k) as u32)
                    })
                    .count();
                assert_eq!(table.slice(a).dim(), named, "n={} a={}", n, a);
                total += table.slice(a).dim();
            }
            assert_eq!(table.slice(max + 1).dim(), 0);
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn hyperoctahedral_coinvariants_match_named_basis() {
        // B_n coinvariants: x_1^{2i_1+e_1} ... x_{n-1}^{2i_{n-1}+e_{n-1}}
        // x_n^{e_n} with i_k <= n-k and e_k in {0,1}; total 2^n n!.
        for n in 2..=3usize {
            let max: u32 = (n * n) as u32;
            let table = build_quotient(Family::Sp, n, max).unwrap();
            let mut total = 0;
            for a in 0..=max {
                let named = monomials_of_degree(n, a)
                    .into_iter()
                    .filter(|mono| {
                        mono.iter().enumerate().all(|(k, &e)| {
                            let i = e / 2;
                            if k == n - 1 {
                                e <= 1
                            } else {
                                i <= (n - 1 - k) as u32
                            }
                        })
                    })
                    .count();
                assert_eq!(table.slice(a).dim(), named, "n={} a={}", n, a);
                total += table.slice(a).dim();
            }
            assert_eq!(total, (1 << n) * (1..=n).product::<usize>());
        }
    }

    #[test]
    fn invariant_dim_counts_constants() {
        for family in [Family::U, Family::Sp, Family::SOOdd, Family::SOEven] {
            assert_eq!(invariant_dim(family, 2, 2, 0).unwrap(), 1);
        }
    }

    #[test]
    fn invariant_dim_sp1_matches_sphere() {
        // Sp(1) = S^3 at m = 1: series 1 + t^3.
        assert_eq!(invariant_dim(Family::Sp, 1, 1, 3).unwrap(), 1);
        assert_eq!(invariant_dim(Family::Sp, 1, 1, 2).unwrap(), 0);
    }

    #[test]
    fn invariant_dim_matches_series_u2_m2() {
        let spec = GroupSpec::new(Family::U, 2).unwrap();
        let series = series_formula(&spec, 2).unwrap();
        for d in 0..=6u32 {
            let coeff = series.coeff(d as usize);
            assert_eq!(
                rat_int(invariant_dim(Family::U, 2, 2, d).unwrap() as i64),
                coeff,
                "degree {}",
                d
            );
        }
    }

    #[test]
    fn coinv_identity_small_cases() {
        // k = n: h_1 = e_1 is itself an invariant.
        assert!(check_coinv(2, 2).unwrap());
        // k = 1, n = 2: x_1^2 = e_1 x_1 - e_2 lies in the ideal.
        assert!(check_coinv(1, 2).unwrap());
        // k = 2, n = 3: degree-2 membership.
        assert!(check_coinv(2, 3).unwrap());
    }

    #[test]
    fn coinv_identity_rejects_bad_range() {
        assert!(check_coinv(0, 2).is_err());
        assert!(check_coinv(4, 3).is_err());
    }
}
