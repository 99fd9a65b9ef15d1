//! Named verification suites: the counting lemmas, formula/oracle
//! equivalence grids, top-term and palindromy grids, stability ranges,
//! invariant-ring checks, and fixture reproduction. The CLI `verify`
//! subcommand and the acceptance tests both run these.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::analysis::{
    is_palindromic, predicted_top, predicted_top_general, stability_scan, top_term,
    hyperbolicity_witness,
};
use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Poly};
use crate::invariants::{
    check_antisym, check_coinv, check_newton, check_su3_relations, cmp_m_order, free_gca_hilbert,
    gen_set, generator_minimality, invariant_dim, least_term, subset_rank, z_elem, ExtMonomial,
    ExtPoly, GenFlavor, GeneratorSpec,
};
use crate::partitions::{
    emb_count, emb_count_signed, enum_partitions, enum_signed_partitions, factorial, stirling1,
    theta, Partition, SignedPartition,
};
use crate::poincare::{
    classical_poincare_polynomial, series_formula, series_oracle, series_product, Budget,
};
use crate::refdata;
use crate::weylgroups::{
    cycle_partition, enumerate_group, signed_cycle_partition, Family, GroupSpec, WeylElement,
};

/// Outcome of one named check.
#[derive(Clone, Debug)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skipped(String),
}

#[derive(Clone, Debug)]
pub struct CheckReport {
    pub name: &'static str,
    pub outcome: Outcome,
}

#[derive(Clone, Debug, Default)]
pub struct SuiteReport {
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        !self
            .checks
            .iter()
            .any(|c| matches!(c.outcome, Outcome::Fail(_)))
    }

    fn merge(mut self, other: SuiteReport) -> SuiteReport {
        self.checks.extend(other.checks);
        self
    }
}

type Check = (&'static str, Box<dyn Fn() -> Result<()> + Send + Sync>);

fn run_checks(checks: Vec<Check>) -> SuiteReport {
    let outcomes: Vec<CheckReport> = checks
        .into_par_iter()
        .map(|(name, f)| {
            let outcome = match f() {
                Ok(()) => Outcome::Pass,
                Err(Error::BudgetExceeded { order, cap }) => Outcome::Skipped(format!(
                    "budget: group order {} over cap {}",
                    order, cap
                )),
                Err(e) => Outcome::Fail(e.to_string()),
            };
            CheckReport { name, outcome }
        })
        .collect();
    SuiteReport { checks: outcomes }
}

fn fail(msg: String) -> Error {
    Error::ValidationFailure(msg)
}

fn fixture_poly(key: &str) -> Result<Poly> {
    let fixture = refdata::load_fixture(key)?;
    Ok(Poly::from_coeffs(
        fixture
            .coefficients
            .iter()
            .map(|&c| rat_int(c as i64))
            .collect(),
    ))
}

// ---------------------------------------------------------------------------
// Combinatorics
// ---------------------------------------------------------------------------

/// `sum_k [n k] x^k = x (x+1) ... (x+n-1)` for n up to `max_n`.
pub fn stirling_rising_factorial(max_n: u32) -> Result<()> {
    for n in 1..=max_n {
        let mut coeffs = Vec::with_capacity(n as usize + 1);
        for k in 0..=n {
            coeffs.push(crate::exactalg::Rational::from_integer(
                stirling1(n, k)?.into(),
            ));
        }
        let lhs = Poly::from_coeffs(coeffs);
        let mut rhs = Poly::from_int_coeffs(&[0, 1]);
        for a in 1..n {
            rhs = &rhs * &Poly::from_int_coeffs(&[a as i64, 1]);
        }
        if lhs != rhs {
            return Err(fail(format!("rising-factorial identity fails at n={}", n)));
        }
    }
    Ok(())
}

/// `sum_{k=1}^n (-1)^k (k-1)! {n k} = 0` for `2 <= n <= max_n`.
pub fn stirling2_alternating(max_n: u32) -> Result<()> {
    for n in 2..=max_n {
        let mut plus = BigUint::zero();
        let mut minus = BigUint::zero();
        for k in 1..=n {
            let term = crate::partitions::stirling2(n, k)? * factorial(k - 1);
            if k % 2 == 0 {
                plus += term;
            } else {
                minus += term;
            }
        }
        if plus != minus {
            return Err(fail(format!("alternating Stirling-2 sum nonzero at n={}", n)));
        }
    }
    Ok(())
}

/// Embedding-count identity over the symmetric group:
/// `sum over w with l(c(w)) - l(lambda) = i of |Emb(lambda, c(w))| =
/// n!/(theta(lambda) (n-k)!) [n-k, i]`.
pub fn counting_lemma_symmetric(max_n: u32) -> Result<()> {
    for n in 1..=max_n {
        let spec = GroupSpec::new(Family::U, n)?;
        let mut type_counts: Vec<(Partition, u64)> = Vec::new();
        for w in enumerate_group(&spec, 1 << 24)? {
            let c = cycle_partition(&w)?;
            match type_counts.iter_mut().find(|(p, _)| *p == c) {
                Some((_, cnt)) => *cnt += 1,
                None => type_counts.push((c, 1)),
            }
        }
        for k in 0..=n {
            for lambda in enum_partitions(k) {
                for i in 0..=(n - k) {
                    let lhs: u64 = type_counts
                        .iter()
                        .filter(|(c, _)| c.len() == lambda.len() + i as usize)
                        .map(|(c, cnt)| cnt * emb_count(&lambda, c))
                        .sum();
                    let rhs = factorial(n) * stirling1(n - k, i)?
                        / (theta(&lambda) * factorial(n - k));
                    if BigUint::from(lhs) != rhs {
                        return Err(fail(format!(
                            "symmetric counting lemma fails at n={} lambda={:?} i={}: {} vs {}",
                            n,
                            lambda.parts(),
                            i,
                            lhs,
                            rhs
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Signed version over the full signed symmetric group, with the weight
/// `2^{n - l(lambda^+)}`.
pub fn counting_lemma_signed(max_n: u32) -> Result<()> {
    for n in 1..=max_n {
        let spec = GroupSpec::new(Family::Sp, n)?;
        let mut type_counts: Vec<(SignedPartition, u64)> = Vec::new();
        for w in enumerate_group(&spec, 1 << 24)? {
            let c = signed_cycle_partition(&w)?;
            match type_counts.iter_mut().find(|(p, _)| *p == c) {
                Some((_, cnt)) => *cnt += 1,
                None => type_counts.push((c, 1)),
            }
        }
        for k in 0..=n {
            for lambda in enum_signed_partitions(k) {
                for i in 0..=(n - k) {
                    let lhs: u64 = type_counts
                        .iter()
                        .filter(|(c, _)| c.len() == lambda.len() + i as usize)
                        .map(|(c, cnt)| cnt * emb_count_signed(&lambda, c))
                        .sum();
                    let pow = BigUint::one() << (n as usize - lambda.len());
                    let rhs = pow * factorial(n) * stirling1(n - k, i)?
                        / (theta(&lambda.abs()) * factorial(n - k));
                    if BigUint::from(lhs) != rhs {
                        return Err(fail(format!(
                            "signed counting lemma fails at n={} lambda={:?} i={}",
                            n,
                            lambda.parts(),
                            i
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Over `B_n^+`, embedding counts of signed partitions of `n-1` differing
/// in a single sign agree.
pub fn counting_lemma_even_signed(max_n: u32) -> Result<()> {
    for n in 2..=max_n {
        let spec = GroupSpec::new(Family::SOEven, n)?;
        let types: Vec<SignedPartition> = enumerate_group(&spec, 1 << 24)?
            .iter()
            .map(signed_cycle_partition)
            .collect::<Result<_>>()?;
        let total = |lambda: &SignedPartition| -> u64 {
            types.iter().map(|c| emb_count_signed(lambda, c)).sum()
        };
        for lambda in enum_signed_partitions(n - 1) {
            for pos in 0..lambda.len() {
                let mut flipped = lambda.parts().to_vec();
                flipped[pos] = -flipped[pos];
                let flipped = SignedPartition::new(flipped);
                if total(&lambda) != total(&flipped) {
                    return Err(fail(format!(
                        "B_{}^+ embedding totals differ: {:?} vs {:?}",
                        n,
                        lambda.parts(),
                        flipped.parts()
                    )));
                }
            }
        }
    }
    Ok(())
}

/// `sgn(c(w)) = sgn(w)` exhaustively.
pub fn signed_cycle_sign_consistency(max_n: u32) -> Result<()> {
    for n in 1..=max_n {
        let spec = GroupSpec::new(Family::Sp, n)?;
        for w in enumerate_group(&spec, 1 << 24)? {
            if let WeylElement::Signed(s) = &w {
                if signed_cycle_partition(&w)?.sign() != s.total_sign() {
                    return Err(fail(format!("cycle-type sign mismatch at n={}", n)));
                }
            }
        }
    }
    Ok(())
}

pub fn suite_combinatorics() -> SuiteReport {
    run_checks(vec![
        ("stirling rising factorial (n<=12)", Box::new(|| stirling_rising_factorial(12))),
        ("stirling-2 alternating sum (n<=12)", Box::new(|| stirling2_alternating(12))),
        ("counting lemma over symmetric groups (n<=7)", Box::new(|| counting_lemma_symmetric(7))),
        ("counting lemma over signed groups (n<=5)", Box::new(|| counting_lemma_signed(5))),
        ("even-signed embedding totals (n<=5)", Box::new(|| counting_lemma_even_signed(5))),
        ("signed cycle-type signs (n<=4)", Box::new(|| signed_cycle_sign_consistency(4))),
    ])
}

// ---------------------------------------------------------------------------
// Formulas
// ---------------------------------------------------------------------------

fn grid_classical() -> Vec<(Family, u32)> {
    let mut cells = Vec::new();
    for n in 1..=5 {
        cells.push((Family::U, n));
        cells.push((Family::SU, n));
    }
    for n in 1..=4 {
        cells.push((Family::Sp, n));
        cells.push((Family::SOOdd, n));
        cells.push((Family::SOEven, n));
    }
    cells
}

/// Exact equality of the closed forms and the Weyl-average oracle over the
/// whole classical grid, m in {1, 2, 3}.
pub fn formula_oracle_equivalence() -> Result<()> {
    let cells: Vec<(Family, u32, u32)> = grid_classical()
        .into_iter()
        .flat_map(|(f, n)| (1..=3).map(move |m| (f, n, m)))
        .collect();
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(family, n, m)| {
            let spec = GroupSpec::new(family, n).ok()?;
            let formula = series_formula(&spec, m);
            let oracle = series_oracle(&spec, m, Budget::small());
            match (formula, oracle) {
                (Ok(a), Ok(b)) if a == b => None,
                (Ok(a), Ok(b)) => Some(format!(
                    "{}({}) m={}: formula {} vs oracle {}",
                    family.name(),
                    n,
                    m,
                    a,
                    b
                )),
                (Err(e), _) | (_, Err(e)) => {
                    Some(format!("{}({}) m={}: {}", family.name(), n, m, e))
                }
            }
        })
        .collect();
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(fail(f.clone())),
    }
}

/// `SO(2n+1)` and `Sp(n)` series agree.
pub fn so_odd_equals_sp() -> Result<()> {
    for n in 1..=4 {
        for m in 1..=3 {
            let a = series_formula(&GroupSpec::new(Family::SOOdd, n)?, m)?;
            let b = series_formula(&GroupSpec::new(Family::Sp, n)?, m)?;
            if a != b {
                return Err(fail(format!("SO(2n+1) vs Sp mismatch at n={} m={}", n, m)));
            }
        }
    }
    Ok(())
}

/// `U(n) = SU(n) x (torus)` at the series level.
pub fn u_torus_factorization() -> Result<()> {
    for n in 1..=5 {
        for m in 1..=3 {
            let u = series_formula(&GroupSpec::new(Family::U, n)?, m)?;
            let su = series_formula(&GroupSpec::new(Family::SU, n)?, m)?;
            let torus = Poly::from_int_coeffs(&[1, 1]).pow(m);
            if u != &su * &torus {
                return Err(fail(format!("U/SU torus split fails at n={} m={}", n, m)));
            }
        }
    }
    Ok(())
}

/// At `m = 1` every series is the classical Poincaré polynomial
/// `prod (1 + t^{2 d_i - 1})`, including the exceptional groups via the
/// oracle.
pub fn m1_classical_sanity() -> Result<()> {
    for (family, n) in grid_classical() {
        let spec = GroupSpec::new(family, n)?;
        if series_formula(&spec, 1)? != classical_poincare_polynomial(&spec) {
            return Err(fail(format!("m=1 sanity fails for {}({})", family.name(), n)));
        }
    }
    for family in [Family::G2, Family::F4] {
        let spec = GroupSpec::new(family, 0)?;
        if series_oracle(&spec, 1, Budget::small())? != classical_poincare_polynomial(&spec) {
            return Err(fail(format!("m=1 sanity fails for {}", family.name())));
        }
    }
    Ok(())
}

/// `SO(4)` splits as two copies of `SU(2)`.
pub fn so4_splits() -> Result<()> {
    for m in 1..=4 {
        let su2 = series_formula(&GroupSpec::new(Family::SU, 2)?, m)?;
        let so4 = series_formula(&GroupSpec::new(Family::SOEven, 2)?, m)?;
        if so4 != series_product(&[su2.clone(), su2]) {
            return Err(fail(format!("SO(4) split fails at m={}", m)));
        }
    }
    Ok(())
}

pub fn suite_formulas() -> SuiteReport {
    run_checks(vec![
        ("formula == oracle on the classical grid", Box::new(formula_oracle_equivalence)),
        ("SO(2n+1) series == Sp(n) series", Box::new(so_odd_equals_sp)),
        ("U(n) == SU(n) x torus", Box::new(u_torus_factorization)),
        ("m=1 series are classical Poincare polynomials", Box::new(m1_classical_sanity)),
        ("SO(4) == SU(2)^2", Box::new(so4_splits)),
    ])
}

// ---------------------------------------------------------------------------
// Top terms and palindromy
// ---------------------------------------------------------------------------

/// Computed vs predicted top terms over the classical grid, m <= 4.
pub fn top_term_grid() -> Result<()> {
    let cells: Vec<(Family, u32, u32)> = grid_classical()
        .into_iter()
        .flat_map(|(f, n)| (1..=4).map(move |m| (f, n, m)))
        .collect();
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(family, n, m)| {
            let spec = GroupSpec::new(family, n).ok()?;
            let series = match series_formula(&spec, m) {
                Ok(s) => s,
                Err(e) => return Some(format!("{}({}) m={}: {}", family.name(), n, m, e)),
            };
            let got = top_term(&series).ok()?;
            let predicted = match predicted_top(&spec, m) {
                Ok(p) => p,
                Err(e) => return Some(format!("{}({}) m={}: {}", family.name(), n, m, e)),
            };
            if got != predicted {
                Some(format!(
                    "{}({}) m={}: top {:?} predicted {:?}",
                    family.name(),
                    n,
                    m,
                    got,
                    predicted
                ))
            } else {
                None
            }
        })
        .collect();
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(fail(f.clone())),
    }
}

/// Top terms of the exceptional fixtures: coefficient `rank + 1` at degree
/// `dim G`.
pub fn exceptional_fixture_tops() -> Result<()> {
    for (key, family) in [
        ("G2/m2", Family::G2),
        ("F4/m2", Family::F4),
        ("E6/m2", Family::E6),
        ("E7/m2", Family::E7),
        ("E8/m2", Family::E8),
    ] {
        let spec = GroupSpec::new(family, 0)?;
        let t = top_term(&fixture_poly(key)?)?;
        if t.degree != spec.dim_group() as usize
            || t.coefficient != (spec.rank() + 1).into()
        {
            return Err(fail(format!(
                "{}: fixture top term {:?}, expected ({}, {})",
                key,
                t,
                spec.rank() + 1,
                spec.dim_group()
            )));
        }
    }
    Ok(())
}

/// Palindromic exactly for odd m, over the grid minus the trivial and
/// circle cases.
pub fn palindromicity_grid() -> Result<()> {
    for (family, n) in grid_classical() {
        // SU(1) is trivial; U(1) and SO(2) are circles.
        if (family == Family::SU || family == Family::U) && n == 1 {
            continue;
        }
        if family == Family::SOEven && n == 1 {
            continue;
        }
        for m in 1..=4 {
            let spec = GroupSpec::new(family, n)?;
            let series = series_formula(&spec, m)?;
            let palindromic = is_palindromic(&series)?;
            if palindromic != (m % 2 == 1) {
                return Err(fail(format!(
                    "palindromy fails for {}({}) m={}",
                    family.name(),
                    n,
                    m
                )));
            }
        }
    }
    Ok(())
}

/// Product decompositions agree with the general m = 2 top-term rule.
pub fn product_top_terms() -> Result<()> {
    let su2 = series_formula(&GroupSpec::new(Family::SU, 2)?, 2)?;
    let su3 = series_formula(&GroupSpec::new(Family::SU, 3)?, 2)?;
    let torus2 = Poly::from_int_coeffs(&[1, 1]).pow(2);
    let cases: Vec<(&str, Poly, crate::analysis::TopTerm)> = vec![
        (
            "SU(2) x SU(2)",
            series_product(&[su2.clone(), su2.clone()]),
            predicted_top_general(&[(1, 3), (1, 3)], 0, 0),
        ),
        (
            "SU(2) x T^1",
            series_product(&[su2.clone(), torus2]),
            predicted_top_general(&[(1, 3)], 1, 1),
        ),
        (
            "SU(3) x SU(2)",
            series_product(&[su3, su2]),
            predicted_top_general(&[(2, 8), (1, 3)], 0, 0),
        ),
    ];
    for (name, series, predicted) in cases {
        let got = top_term(&series)?;
        if got != predicted {
            return Err(fail(format!(
                "{}: top {:?} predicted {:?}",
                name, got, predicted
            )));
        }
    }
    Ok(())
}

/// Leading coefficients witness hyperbolicity where they should.
pub fn hyperbolicity_checks() -> Result<()> {
    let b = Budget::small();
    if !hyperbolicity_witness(&GroupSpec::new(Family::SU, 2)?, 2, b)? {
        return Err(fail("SU(2) m=2 witness missing".into()));
    }
    if hyperbolicity_witness(&GroupSpec::new(Family::Sp, 1)?, 1, b)? {
        return Err(fail("Sp(1) m=1 should have no witness".into()));
    }
    if !hyperbolicity_witness(&GroupSpec::new(Family::G2, 0)?, 2, b)? {
        return Err(fail("G2 m=2 witness missing".into()));
    }
    Ok(())
}

pub fn suite_topterms() -> SuiteReport {
    run_checks(vec![
        ("top terms match predictions on the grid", Box::new(top_term_grid)),
        ("exceptional fixture top terms", Box::new(exceptional_fixture_tops)),
        ("palindromic iff m odd", Box::new(palindromicity_grid)),
        ("product top terms (m=2)", Box::new(product_top_terms)),
        ("hyperbolicity witnesses", Box::new(hyperbolicity_checks)),
    ])
}

// ---------------------------------------------------------------------------
// Stability
// ---------------------------------------------------------------------------

/// Stability ranges: agreement through `d_{m,n}` and strict growth right
/// after, over the stated grids.
pub fn stability_grid() -> Result<()> {
    let mut cells: Vec<(Family, u32, u32)> = Vec::new();
    for family in [Family::U, Family::SU] {
        for m in 1..=3 {
            for n in m..=5 {
                cells.push((family, m, n));
            }
        }
    }
    for family in [Family::Sp, Family::SOOdd] {
        for m in 2..=3 {
            for n in 1..=3 {
                cells.push((family, m, n));
            }
        }
    }
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(family, m, n)| {
            let report = match stability_scan(family, m, n) {
                Ok(r) => r,
                Err(e) => return Some(format!("{} m={} n={}: {}", family.name(), m, n, e)),
            };
            if report.agreement_degree != report.expected
                || report.strict_growth_at != Some(report.expected + 1)
            {
                Some(format!(
                    "{} m={} n={}: agreement {} growth {:?}, expected {}",
                    family.name(),
                    m,
                    n,
                    report.agreement_degree,
                    report.strict_growth_at,
                    report.expected
                ))
            } else {
                None
            }
        })
        .collect();
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(fail(f.clone())),
    }
}

pub fn suite_stability() -> SuiteReport {
    run_checks(vec![(
        "stability ranges over U/SU/Sp/SO(2n+1)",
        Box::new(stability_grid),
    )])
}

// ---------------------------------------------------------------------------
// Invariant theory
// ---------------------------------------------------------------------------

/// Invariant-ring dimensions equal series coefficients over the stated
/// grid.
pub fn invariant_dimension_grid() -> Result<()> {
    let mut cells: Vec<(Family, u32, u32, u32)> = Vec::new();
    for family in [Family::U, Family::Sp, Family::SOOdd] {
        for n in 1..=3 {
            for m in 1..=2 {
                for d in 0..=8 {
                    cells.push((family, m, n, d));
                }
            }
        }
    }
    for d in 0..=6 {
        cells.push((Family::SOEven, 2, 3, d));
    }
    let failures: Vec<String> = cells
        .par_iter()
        .filter_map(|&(family, m, n, d)| {
            let spec = GroupSpec::new(family, n).ok()?;
            let series = match series_formula(&spec, m) {
                Ok(s) => s,
                Err(e) => return Some(e.to_string()),
            };
            let expect = series.coeff(d as usize);
            let got = match invariant_dim(family, m, n, d) {
                Ok(v) => v,
                Err(e) => return Some(format!("{}({}) m={} d={}: {}", family.name(), n, m, d, e)),
            };
            if rat_int(got as i64) != expect {
                Some(format!(
                    "{}({}) m={} d={}: invariant dim {} vs coefficient {}",
                    family.name(),
                    n,
                    m,
                    d,
                    got,
                    expect
                ))
            } else {
                None
            }
        })
        .collect();
    match failures.first() {
        None => Ok(()),
        Some(f) => Err(fail(f.clone())),
    }
}

/// The free algebra on the minimal generators agrees with the series
/// through the low-dimensional range.
pub fn low_dim_isomorphism() -> Result<()> {
    let mut cells: Vec<(Family, u32, u32, usize)> = Vec::new();
    for family in [Family::U, Family::SU] {
        for n in 1..=4u32 {
            for m in 1..=n.min(3) {
                if 2 * n < m {
                    continue;
                }
                cells.push((family, m, n, (2 * n - m) as usize));
            }
        }
    }
    for family in [Family::Sp, Family::SOOdd] {
        for n in 1..=4u32 {
            for m in 1..=3 {
                cells.push((family, m, n, (2 * n + 1) as usize));
            }
        }
    }
    for (family, m, n, range) in cells {
        let degrees: Vec<usize> = gen_set(family, m, n)?
            .iter()
            .map(|g| g.degree() as usize)
            .collect();
        let free = free_gca_hilbert(&degrees, range);
        let series = series_formula(&GroupSpec::new(family, n)?, m)?.truncated(range);
        if free != series {
            return Err(fail(format!(
                "low-dim isomorphism fails for {}({}) m={} through degree {}: {} vs {}",
                family.name(),
                n,
                m,
                range,
                free,
                series
            )));
        }
    }
    Ok(())
}

/// Newton identities over the budgeted grid, including the worked
/// three-superscript case at n = 2.
pub fn newton_grid() -> Result<()> {
    if !check_newton(1, 0b111, 2, 3)? {
        return Err(fail("worked n=2, m=3 Newton identity fails".into()));
    }
    for n in 1..=4usize {
        for m in 1..=3u32 {
            for set in 1u32..(1 << m) {
                for d in 1..=3 {
                    if !check_newton(d, set, n, m as usize)? {
                        return Err(fail(format!(
                            "Newton identity fails at n={} m={} I={:b} d={}",
                            n, m, set, d
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

pub fn coinv_grid() -> Result<()> {
    for n in 1..=4 {
        for k in 1..=n {
            if !check_coinv(k, n)? {
                return Err(fail(format!("coinvariant identity fails at k={} n={}", k, n)));
            }
        }
    }
    Ok(())
}

pub fn antisym_grid() -> Result<()> {
    fn rec(n: usize, max: u32, acc: &mut Vec<u32>) -> Result<()> {
        if acc.len() == n {
            if !check_antisym(acc, n)? {
                return Err(fail(format!("antisymmetry fails at n={} ks={:?}", n, acc)));
            }
            return Ok(());
        }
        for k in 0..=max {
            acc.push(k);
            rec(n, max, acc)?;
            acc.pop();
        }
        Ok(())
    }
    for n in 1..=3 {
        rec(n, 3, &mut Vec::new())?;
    }
    rec(4, 2, &mut Vec::new())
}

/// Least terms of generator products match the closed form
/// `x_1^{d_1 - 1} ... x_k^{d_k - 1} y^{I_1} ... y^{I_k}`.
pub fn least_term_closed_form() -> Result<()> {
    // Deterministic sample of tuples (d_i, I_i), k <= n <= 4.
    let mut state = 0x9e3779b97f4a7c15u64;
    let mut next = move |bound: u64| -> u64 {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        state % bound
    };
    for n in 2..=4usize {
        let m = 2u32;
        for _ in 0..40 {
            let k = 1 + next(n as u64) as usize;
            let mut tuple: Vec<(u32, u32)> = (0..k)
                .map(|_| {
                    let d = 1 + next(3) as u32;
                    let set = 1 + next(3) as u32;
                    (d, set)
                })
                .collect();
            tuple.sort_by_key(|&(d, set)| (subset_rank(set, m), std::cmp::Reverse(d)));
            let mut p = ExtPoly::one(n, m as usize);
            for &(d, set) in &tuple {
                p = p.mul(&z_elem(
                    &GeneratorSpec {
                        d,
                        set,
                        flavor: GenFlavor::ZType,
                    },
                    n,
                    m as usize,
                ));
            }
            if p.is_zero() {
                continue;
            }
            let mut expect = ExtMonomial::one(n);
            for (row, &(d, set)) in tuple.iter().enumerate() {
                expect.xs[row] = d - 1;
                expect.ys[row] = set;
            }
            let got = least_term(&p)?;
            if got != expect {
                return Err(fail(format!(
                    "least term mismatch for {:?} at n={}: {} vs {}",
                    tuple, n, got, expect
                )));
            }
        }
    }
    Ok(())
}

/// Products with strictly increasing superscript sets and bounded data
/// have pairwise distinct least terms.
pub fn distinct_least_terms() -> Result<()> {
    for n in 2..=3usize {
        for m in 1..=2u32 {
            let subsets: Vec<u32> = (1..(1u32 << m)).collect();
            let mut products: Vec<(Vec<(u32, u32)>, ExtMonomial)> = Vec::new();
            // Enumerate tuples with I_1 < I_2 < ... (subset order) and
            // k + max d - 1 <= n, degree <= 8.
            fn rec(
                subsets: &[u32],
                start: usize,
                n: usize,
                tuple: &mut Vec<(u32, u32)>,
                out: &mut Vec<Vec<(u32, u32)>>,
            ) {
                if !tuple.is_empty() {
                    out.push(tuple.clone());
                }
                if tuple.len() >= n {
                    return;
                }
                for si in start..subsets.len() {
                    for d in 1..=n as u32 {
                        let k = tuple.len() + 1;
                        let maxd = tuple
                            .iter()
                            .map(|&(dd, _)| dd)
                            .chain(std::iter::once(d))
                            .max()
                            .unwrap();
                        if k as u32 + maxd - 1 > n as u32 {
                            continue;
                        }
                        let degree: u32 = tuple
                            .iter()
                            .chain(std::iter::once(&(d, subsets[si])))
                            .map(|&(dd, ss)| 2 * dd + ss.count_ones() - 2)
                            .sum();
                        if degree > 8 {
                            continue;
                        }
                        tuple.push((d, subsets[si]));
                        rec(subsets, si + 1, n, tuple, out);
                        tuple.pop();
                    }
                }
            }
            let mut tuples = Vec::new();
            rec(&subsets, 0, n, &mut Vec::new(), &mut tuples);
            for tuple in tuples {
                let mut p = ExtPoly::one(n, m as usize);
                for &(d, set) in &tuple {
                    p = p.mul(&z_elem(
                        &GeneratorSpec {
                            d,
                            set,
                            flavor: GenFlavor::ZType,
                        },
                        n,
                        m as usize,
                    ));
                }
                if p.is_zero() {
                    return Err(fail(format!("product {:?} vanishes unexpectedly", tuple)));
                }
                products.push((tuple, least_term(&p)?));
            }
            for i in 0..products.len() {
                for j in i + 1..products.len() {
                    if products[i].1 == products[j].1 {
                        return Err(fail(format!(
                            "least terms collide: {:?} and {:?} (n={}, m={})",
                            products[i].0, products[j].0, n, m
                        )));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Dropping any single generator loses the generated slice.
pub fn minimality_grid() -> Result<()> {
    for n in 1..=3 {
        generator_minimality(2, n)?;
    }
    Ok(())
}

/// Every generator is fixed by the whole group: exhaustive through rank 3,
/// sampled at rank 4.
pub fn generator_invariance() -> Result<()> {
    for n in 1..=4u32 {
        for m in 1..=2u32 {
            for family in [Family::U, Family::Sp] {
                let gens = gen_set(family, m, n)?;
                let group = enumerate_group(&GroupSpec::new(family, n)?, 1 << 24)?;
                let stride = if n <= 3 { 1 } else { 7 };
                for g in &gens {
                    let el = z_elem(g, n as usize, m as usize);
                    for w in group.iter().step_by(stride) {
                        if el.apply_weyl(w)? != el {
                            return Err(fail(format!(
                                "{} moves under the Weyl action (n={}, m={})",
                                g, n, m
                            )));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// The printed ordering fixture for the degree-2 slice at m = 3, n = 2.
pub fn ordering_fixture() -> Result<()> {
    let n = 2;
    let mk = |xs: &[(usize, u32)], ys: &[(usize, u32)]| {
        let mut mono = ExtMonomial::one(n);
        for &(j, e) in xs {
            mono.xs[j] = e;
        }
        for &(j, mask) in ys {
            mono.ys[j] = mask;
        }
        mono
    };
    let chain = vec![
        mk(&[], &[(0, 0b100), (1, 0b100)]),
        mk(&[], &[(0, 0b010), (1, 0b100)]),
        mk(&[], &[(0, 0b010), (1, 0b010)]),
        mk(&[], &[(0, 0b001), (1, 0b100)]),
        mk(&[], &[(0, 0b001), (1, 0b010)]),
        mk(&[], &[(0, 0b001), (1, 0b001)]),
        mk(&[], &[(0, 0b110)]),
        mk(&[], &[(0, 0b101)]),
        mk(&[], &[(0, 0b011)]),
        mk(&[(0, 1)], &[]),
        mk(&[(1, 1)], &[]),
    ];
    for pair in chain.windows(2) {
        if cmp_m_order(&pair[0], &pair[1], 3) != std::cmp::Ordering::Less {
            return Err(fail(format!(
                "ordering fixture violated: {} !< {}",
                pair[0], pair[1]
            )));
        }
    }
    Ok(())
}

pub fn su3_relations() -> Result<()> {
    check_su3_relations()
}

pub fn suite_invariants() -> SuiteReport {
    run_checks(vec![
        ("invariant dimensions match series coefficients", Box::new(invariant_dimension_grid)),
        ("free algebra on generators matches series in low degrees", Box::new(low_dim_isomorphism)),
        ("Newton identities", Box::new(newton_grid)),
        ("coinvariant identities", Box::new(coinv_grid)),
        ("antisymmetrization identities", Box::new(antisym_grid)),
        ("least terms of generator products", Box::new(least_term_closed_form)),
        ("distinct least terms on V(m,n)", Box::new(distinct_least_terms)),
        ("generator minimality (U, m=2)", Box::new(minimality_grid)),
        ("generator invariance", Box::new(generator_invariance)),
        ("degree-2 ordering fixture", Box::new(ordering_fixture)),
        ("SU(3) relations and quotient dimensions", Box::new(su3_relations)),
    ])
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// Closed forms reproduce the SU(n) m = 2 fixture series, n = 2..6.
pub fn su_fixture_reproduction() -> Result<()> {
    for n in 2..=6u32 {
        let key = format!("SU{}/m2", n);
        let expect = fixture_poly(&key)?;
        let got = series_formula(&GroupSpec::new(Family::SU, n)?, 2)?;
        if got != expect {
            return Err(fail(format!("{}: computed {} vs fixture {}", key, got, expect)));
        }
    }
    Ok(())
}

/// Oracle recomputation of an exceptional fixture.
pub fn exceptional_oracle_fixture(family: Family, budget: Budget) -> Result<()> {
    let spec = GroupSpec::new(family, 0)?;
    let key = format!("{}/m2", family.name());
    let expect = fixture_poly(&key)?;
    let got = series_oracle(&spec, 2, budget)?;
    if got != expect {
        return Err(fail(format!("{}: oracle disagrees with fixture", key)));
    }
    Ok(())
}

/// Structural validation of all fixture records, including the serialize /
/// parse round trip.
pub fn fixture_integrity() -> Result<()> {
    let fixtures = refdata::load_fixtures()?;
    if fixtures.len() < 10 {
        return Err(fail("fixture table is incomplete".into()));
    }
    for f in &fixtures {
        if f.coefficients.first() != Some(&1) {
            return Err(fail(format!("{}: constant term is not 1", f.key)));
        }
    }
    Ok(())
}

/// Degree tables satisfy `|W| = prod d_i` for every family.
pub fn degree_table_consistency() -> Result<()> {
    let mut specs: Vec<GroupSpec> = grid_classical()
        .into_iter()
        .map(|(f, n)| GroupSpec::new(f, n))
        .collect::<Result<_>>()?;
    for family in [Family::G2, Family::F4, Family::E6, Family::E7, Family::E8] {
        specs.push(GroupSpec::new(family, 0)?);
    }
    for spec in specs {
        let prod = spec
            .characteristic_degrees()
            .iter()
            .fold(BigUint::one(), |acc, &d| acc * BigUint::from(d));
        if prod != spec.group_order() {
            return Err(fail(format!(
                "{}({}): prod d_i = {} but |W| = {}",
                spec.family.name(),
                spec.rank_param,
                prod,
                spec.group_order()
            )));
        }
    }
    Ok(())
}

pub fn suite_fixtures(budget: Budget) -> SuiteReport {
    let medium = budget.cap >= Budget::medium().cap;
    let mut checks: Vec<Check> = vec![
        ("SU(2..6) m=2 fixtures reproduced by the closed form", Box::new(su_fixture_reproduction)),
        ("fixture table integrity", Box::new(fixture_integrity)),
        ("degree tables: |W| = prod d_i", Box::new(degree_table_consistency)),
        ("exceptional fixture top terms", Box::new(exceptional_fixture_tops)),
        (
            "G2 m=2 fixture reproduced by the oracle",
            Box::new(move || exceptional_oracle_fixture(Family::G2, budget)),
        ),
        (
            "F4 m=2 fixture reproduced by the oracle",
            Box::new(move || exceptional_oracle_fixture(Family::F4, budget)),
        ),
    ];
    if medium {
        checks.push((
            "E6 m=2 fixture reproduced by the oracle",
            Box::new(move || exceptional_oracle_fixture(Family::E6, budget)),
        ));
    }
    run_checks(checks)
}

/// All suites, in a deterministic order.
pub fn suite_all(budget: Budget) -> SuiteReport {
    suite_combinatorics()
        .merge(suite_formulas())
        .merge(suite_topterms())
        .merge(suite_stability())
        .merge(suite_invariants())
        .merge(suite_fixtures(budget))
}
