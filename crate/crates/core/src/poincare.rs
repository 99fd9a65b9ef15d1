//! The series engine: partition-indexed closed forms for the classical
//! families and the brute-force Weyl-group trace oracle for any enumerable
//! group.
//!
//! The oracle evaluates the Molien-type average
//! `(1/|W|) prod_i (1 - t^{2 d_i}) sum_w det(1+tw)^m / det(1-t^2 w)`
//! exactly. The closed forms replace the `|W|`-sized sum by polynomially
//! many (signed-)partition terms built from the per-cycle blocks
//! `q_k^m(t)`.

use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactalg::{rat_int, Poly, RatFn, Rational};
use crate::partitions::{
    enum_partitions, enum_signed_partitions, theta, Partition, SignedPartition,
};
use crate::weylgroups::{char_factors, stream_elements, Family, GroupSpec};

/// How a series should be produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Formula,
    Oracle,
}

/// A single request: which group, how many commuting coordinates, and the
/// computation route.
#[derive(Clone, Copy, Debug)]
pub struct SeriesRequest {
    pub spec: GroupSpec,
    pub m: u32,
    pub method: Method,
}

/// Enumeration budget for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub cap: u128,
}

impl Budget {
    /// Default cap; covers every classical group in the verification grids
    /// plus G2, F4 and E6.
    pub fn small() -> Budget {
        Budget { cap: 100_000 }
    }

    pub fn medium() -> Budget {
        Budget { cap: 6_000_000 }
    }

    /// Covers E7 (runtime is minutes); E8 stays out of reach of every
    /// preset.
    pub fn large() -> Budget {
        Budget { cap: 10_000_000 }
    }
}

/// Summation strategy for the oracle.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OracleMode {
    /// Pick [`OracleMode::Exact`] below 50 000 elements, truncated above.
    Auto,
    /// Sum exact rational functions and divide exactly at the end; the
    /// division acts as a built-in correctness check.
    Exact,
    /// Expand each term as a truncated power series up to the dimension
    /// bound `dim(G/T x T^m)` plus a guard band asserted to vanish.
    Truncated,
}

/// The per-cycle building block `q_k^m(t)`. For `k > 0` the signed and
/// unsigned variants agree; negative `k` is only legal in signed mode.
pub fn q_term(k: i64, m: u32, signed: bool) -> Result<RatFn> {
    if k == 0 {
        return Err(Error::ZeroCycleLength);
    }
    if !signed && k < 0 {
        return Err(Error::Precondition(
            "unsigned q-terms need k > 0".into(),
        ));
    }
    let a = k.unsigned_abs() as usize;
    let sgn: i64 = if k < 0 { -1 } else { 1 };
    let parity = |e: i64| -> i64 { if e.rem_euclid(2) == 0 { 1 } else { -1 } };

    // (-1)^{m(k+1)} sgn(k)^{m+1} t^{(m-2)|k|}
    let mut lead_sign = parity(m as i64 * (k + 1));
    if sgn < 0 && (m + 1) % 2 == 1 {
        lead_sign = -lead_sign;
    }
    let lead = RatFn::laurent(rat_int(lead_sign), (m as i64 - 2) * a as i64);

    // (1 + (-1)^{k+1} sgn(k) t^{|k|})^m / (1 - sgn(k) t^{2|k|})
    let eps = parity(k + 1) * sgn;
    let mut base = vec![Rational::zero(); a + 1];
    base[0] = Rational::one();
    base[a] = rat_int(eps);
    let num = Poly::from_coeffs(base).pow(m);
    let mut den = vec![Rational::zero(); 2 * a + 1];
    den[0] = Rational::one();
    den[2 * a] = rat_int(-sgn);
    let frac = RatFn::new(num, Poly::from_coeffs(den))?;
    Ok(lead.add(&frac))
}

/// A `q_k^m` value together with its defining data.
#[derive(Clone, Debug)]
pub struct QTerm {
    pub k: i64,
    pub m: u32,
    pub value: RatFn,
}

impl QTerm {
    pub fn new(k: i64, m: u32, signed: bool) -> Result<QTerm> {
        Ok(QTerm {
            k,
            m,
            value: q_term(k, m, signed)?,
        })
    }
}

/// `q_lambda^{m,n} = t^{(m-2)(n-k)} prod_i q_{lambda_i}^m` for a partition
/// of `k <= n`; the empty partition yields `t^{(m-2)n}`.
pub fn q_lambda(lambda: &Partition, m: u32, n: u32) -> Result<RatFn> {
    let k = lambda.sum();
    if k > n {
        return Err(Error::PartitionTooLarge(format!("{:?}", lambda.parts())));
    }
    let mut acc = RatFn::laurent(Rational::one(), (m as i64 - 2) * (n - k) as i64);
    for &part in lambda.parts() {
        acc = acc.mul(&q_term(part as i64, m, false)?);
    }
    Ok(acc)
}

/// Signed analogue of [`q_lambda`].
pub fn q_lambda_signed(lambda: &SignedPartition, m: u32, n: u32) -> Result<RatFn> {
    let k = lambda.sum_abs();
    if k > n {
        return Err(Error::PartitionTooLarge(format!("{:?}", lambda.parts())));
    }
    let mut acc = RatFn::laurent(Rational::one(), (m as i64 - 2) * (n - k) as i64);
    for &part in lambda.parts() {
        acc = acc.mul(&q_term(part, m, true)?);
    }
    Ok(acc)
}

fn rational_from_biguint(b: BigUint) -> Rational {
    Rational::from_integer(BigInt::from(b))
}

/// `prod (1 - t^{e d})` over `d` in `degrees`.
fn product_one_minus_powers(degrees: &[u32], e: u32) -> Poly {
    let mut acc = Poly::one();
    for &d in degrees {
        let mut f = vec![Rational::zero(); (e * d) as usize + 1];
        f[0] = Rational::one();
        f[(e * d) as usize] = -Rational::one();
        acc = &acc * &Poly::from_coeffs(f);
    }
    acc
}

/// Checks the universal shape of a Poincaré series: integer nonnegative
/// coefficients and constant term 1.
fn validate_series(p: Poly) -> Result<Poly> {
    for (d, c) in p.coeffs().iter().enumerate() {
        if !c.is_integer() {
            return Err(Error::NonIntegerCoefficient {
                degree: d,
                coeff: c.to_string(),
            });
        }
        if c.is_negative() {
            return Err(Error::NegativeCoefficient {
                degree: d,
                coeff: c.to_string(),
            });
        }
    }
    if p.coeff(0) != Rational::one() {
        return Err(Error::ValidationFailure(format!(
            "series constant term is {} instead of 1",
            p.coeff(0)
        )));
    }
    Ok(p)
}

/// Balanced pairwise summation; exact field arithmetic makes the result
/// independent of the reduction order.
pub fn sum_ratfns(mut terms: Vec<RatFn>) -> RatFn {
    if terms.is_empty() {
        return RatFn::zero();
    }
    while terms.len() > 1 {
        terms = terms
            .chunks(2)
            .map(|c| {
                if c.len() == 2 {
                    c[0].add(&c[1])
                } else {
                    c[0].clone()
                }
            })
            .collect();
    }
    terms.pop().unwrap()
}

fn u_family_series(n: u32, m: u32, special: bool) -> Result<Poly> {
    let sign = |e: i64| -> Rational { rat_int(if e.rem_euclid(2) == 0 { 1 } else { -1 }) };
    let ks: Vec<u32> = if m % 2 == 0 {
        (n.saturating_sub(1)..=n).collect()
    } else {
        (0..=n).collect()
    };
    let mut terms = Vec::new();
    for k in ks {
        for lambda in enum_partitions(k) {
            let coeff = sign((n + k) as i64)
                / rational_from_biguint(theta(&lambda));
            terms.push(q_lambda(&lambda, m, n)?.scale(&coeff));
        }
    }
    let mut sum = sum_ratfns(terms);
    if special {
        let torus = RatFn::from_poly(Poly::from_int_coeffs(&[1, 1]).pow(m));
        sum = sum.div(&torus)?;
    }
    let degrees: Vec<u32> = (1..=n).collect();
    let prefactor = product_one_minus_powers(&degrees, 2);
    let total = RatFn::from_poly(prefactor).mul(&sum);
    validate_series(total.to_poly()?)
}

/// Weight `1 / (2^{l(lambda^+)} theta(lambda^+))`.
fn signed_weight(lambda: &SignedPartition) -> Rational {
    let denom = BigUint::from(1u32) << lambda.len();
    Rational::new(
        BigInt::one(),
        BigInt::from(denom * theta(&lambda.abs())),
    )
}

fn sp_family_series(n: u32, m: u32) -> Result<Poly> {
    let mut terms = Vec::new();
    if m % 2 == 0 {
        for lambda in enum_signed_partitions(n) {
            terms.push(q_lambda_signed(&lambda, m, n)?.scale(&signed_weight(&lambda)));
        }
    } else {
        for k in 0..=n {
            let outer = rat_int(if (n - k) % 2 == 0 { 1 } else { -1 });
            for lambda in enum_signed_partitions(k) {
                let coeff = &outer * &signed_weight(&lambda);
                terms.push(q_lambda_signed(&lambda, m, n)?.scale(&coeff));
            }
        }
    }
    let sum = sum_ratfns(terms);
    let degrees: Vec<u32> = (1..=n).collect();
    let prefactor = product_one_minus_powers(&degrees, 4);
    validate_series(RatFn::from_poly(prefactor).mul(&sum).to_poly()?)
}

/// The `B_n^+` case. The `k = n` sum only receives signed partitions of
/// positive total sign (full-length cycle types of elements of `B_n^+` all
/// have sign one), expressed below by the weight `1 + sgn(lambda)`.
fn so_even_series(n: u32, m: u32) -> Result<Poly> {
    let mut terms = Vec::new();
    if m % 2 == 0 {
        for lambda in enum_signed_partitions(n - 1) {
            let coeff = rat_int(-(lambda.sign() as i64)) * signed_weight(&lambda);
            terms.push(q_lambda_signed(&lambda, m, n)?.scale(&coeff));
        }
    } else {
        for k in 0..n {
            let outer = rat_int(if (n - k) % 2 == 0 { 1 } else { -1 });
            for lambda in enum_signed_partitions(k) {
                let coeff = &outer * &signed_weight(&lambda);
                terms.push(q_lambda_signed(&lambda, m, n)?.scale(&coeff));
            }
        }
    }
    for lambda in enum_signed_partitions(n) {
        let coeff = rat_int(1 + lambda.sign() as i64) * signed_weight(&lambda);
        if coeff.is_zero() {
            continue;
        }
        terms.push(q_lambda_signed(&lambda, m, n)?.scale(&coeff));
    }
    let sum = sum_ratfns(terms);
    let mut prefactor = product_one_minus_powers(&[n], 2);
    let lower: Vec<u32> = (1..n).collect();
    prefactor = &prefactor * &product_one_minus_powers(&lower, 4);
    validate_series(RatFn::from_poly(prefactor).mul(&sum).to_poly()?)
}

/// Closed-form Poincaré series of the identity component of the space of
/// commuting `m`-tuples, for a classical family.
pub fn series_formula(spec: &GroupSpec, m: u32) -> Result<Poly> {
    if m == 0 {
        return Err(Error::Precondition("m >= 1".into()));
    }
    let n = spec.rank_param;
    match spec.family {
        Family::U => u_family_series(n, m, false),
        Family::SU => u_family_series(n, m, true),
        Family::Sp | Family::SOOdd => sp_family_series(n, m),
        Family::SOEven => so_even_series(n, m),
        _ => Err(Error::Unsupported(format!(
            "no closed-form series for {}; use the oracle",
            spec.family.name()
        ))),
    }
}

/// `det`-factor pair of an element, adjusted for SU (quotient by the
/// trivial summand of the permutation representation).
fn bucket_key(spec: &GroupSpec, w: &crate::weylgroups::WeylElement) -> (Poly, Poly) {
    let (num, den) = char_factors(w);
    if spec.family == Family::SU {
        let num = num
            .exact_div(&Poly::from_int_coeffs(&[1, 1]))
            .expect("det(1+tw) divisible by 1+t");
        let den = den
            .exact_div(&Poly::from_int_coeffs(&[1, 0, -1]))
            .expect("det(1-t^2w) divisible by 1-t^2");
        (num, den)
    } else {
        (num, den)
    }
}

/// Brute-force oracle: the Weyl-group average evaluated term by term, with
/// elements bucketed by their det-factor pair first.
pub fn series_oracle(spec: &GroupSpec, m: u32, budget: Budget) -> Result<Poly> {
    series_oracle_with_mode(spec, m, budget, OracleMode::Auto)
}

pub fn series_oracle_with_mode(
    spec: &GroupSpec,
    m: u32,
    budget: Budget,
    mode: OracleMode,
) -> Result<Poly> {
    if m == 0 {
        return Err(Error::Precondition("m >= 1".into()));
    }
    let mut buckets: HashMap<(Poly, Poly), u64> = HashMap::new();
    let count = stream_elements(spec, budget.cap, &mut |w| {
        *buckets.entry(bucket_key(spec, w)).or_insert(0) += 1;
    })?;
    let order = rational_from_biguint(spec.group_order());
    debug_assert_eq!(rat_int(count as i64), order);

    let degrees = spec.characteristic_degrees();
    let prefactor = product_one_minus_powers(&degrees, 2);
    let mode = match mode {
        OracleMode::Auto => {
            if count >= 50_000 {
                OracleMode::Truncated
            } else {
                OracleMode::Exact
            }
        }
        m => m,
    };

    match mode {
        OracleMode::Exact => {
            let terms: Vec<RatFn> = buckets
                .into_iter()
                .map(|((num, den), mult)| {
                    RatFn::new(num.pow(m).scale(&rat_int(mult as i64)), den)
                })
                .collect::<Result<_>>()?;
            let sum = sum_ratfns(terms);
            let total = RatFn::from_poly(prefactor)
                .mul(&sum)
                .scale(&order.recip());
            validate_series(total.to_poly()?)
        }
        OracleMode::Truncated | OracleMode::Auto => {
            // dim(G/T x T^m) bounds the series degree.
            let rank = degrees.len() as u32;
            let dsum: u32 = degrees.iter().sum();
            let bound = (2 * dsum - 2 * rank + m * rank) as usize;
            let guard = 8;
            let trunc = bound + guard;
            let mut acc = Poly::zero();
            for ((num, den), mult) in buckets {
                let term = RatFn::new(num.pow(m).scale(&rat_int(mult as i64)), den)?;
                acc = &acc + &term.expand_truncated(trunc)?;
            }
            let total = (&acc * &prefactor)
                .truncated(trunc)
                .scale(&order.recip());
            for d in bound + 1..=trunc {
                if !total.coeff(d).is_zero() {
                    return Err(Error::ValidationFailure(format!(
                        "truncated oracle: nonzero guard-band coefficient at degree {}",
                        d
                    )));
                }
            }
            validate_series(total.truncated(bound))
        }
    }
}

/// Product of component series; a torus factor of dimension `d`
/// contributes `(1+t)^{m d}` supplied by the caller as a factor.
pub fn series_product(factors: &[Poly]) -> Poly {
    factors.iter().fold(Poly::one(), |acc, f| &acc * f)
}

/// Route a request through the formula or the oracle.
pub fn compute_series(req: &SeriesRequest, budget: Budget) -> Result<Poly> {
    match req.method {
        Method::Formula => series_formula(&req.spec, req.m),
        Method::Oracle => series_oracle(&req.spec, req.m, budget),
    }
}

/// Classical Poincaré polynomial of the group itself:
/// `prod (1 + t^{2 d_i - 1})`. The `m = 1` series must equal this.
pub fn classical_poincare_polynomial(spec: &GroupSpec) -> Poly {
    let mut acc = Poly::one();
    for d in spec.characteristic_degrees() {
        let deg = (2 * d - 1) as usize;
        let mut f = vec![Rational::zero(); deg + 1];
        f[0] = Rational::one();
        f[deg] = Rational::one();
        acc = &acc * &Poly::from_coeffs(f);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::refdata;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn spec(family: Family, n: u32) -> GroupSpec {
        GroupSpec::new(family, n).unwrap()
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    #[test]
    fn q_term_k1_m2() {
        // q_1^2 = 1 + (1+t)^2/(1-t^2) = 1 + (1+t)/(1-t)
        let got = q_term(1, 2, false).unwrap();
        let expect = RatFn::from_poly(Poly::one())
            .add(&RatFn::new(poly(&[1, 1]), poly(&[1, -1])).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn q_term_k1_m1_is_laurent() {
        // q_1^1 = t^{-1} + (1+t)/(1-t^2); the negative power stays exact.
        let got = q_term(1, 1, false).unwrap();
        let expect = RatFn::laurent(rat_int(1), -1)
            .add(&RatFn::new(poly(&[1, 1]), poly(&[1, 0, -1])).unwrap());
        assert_eq!(got, expect);
    }

    #[test]
    fn q_term_signed_negative_one_m2() {
        // q_{-1}^2 = -1 + (1-t)^2/(1+t^2) = -2t/(1+t^2)
        let got = q_term(-1, 2, true).unwrap();
        let expect = RatFn::new(poly(&[0, -2]), poly(&[1, 0, 1])).unwrap();
        assert_eq!(got, expect);
    }

    #[test]
    fn q_term_signed_agrees_with_unsigned_at_positive_k() {
        for k in 1..=6 {
            for m in 1..=4 {
                assert_eq!(
                    q_term(k, m, false).unwrap(),
                    q_term(k, m, true).unwrap(),
                    "k={} m={}",
                    k,
                    m
                );
            }
        }
    }

    #[test]
    fn q_term_rejects_zero() {
        assert_eq!(q_term(0, 2, true), Err(Error::ZeroCycleLength));
        assert!(q_term(-2, 2, false).is_err());
        assert!(QTerm::new(0, 2, true).is_err());
    }

    #[test]
    fn q_term_wrapper_carries_value() {
        let q = QTerm::new(-3, 2, true).unwrap();
        assert_eq!(q.value, q_term(-3, 2, true).unwrap());
        assert_eq!((q.k, q.m), (-3, 2));
    }

    #[test]
    fn q_lambda_empty_partition() {
        let got = q_lambda(&Partition::empty(), 3, 2).unwrap();
        assert_eq!(got, RatFn::from_poly(Poly::t_power(2)));
    }

    #[test]
    fn q_lambda_full_partition_has_no_prefactor() {
        let n = 3;
        let got = q_lambda(&Partition::new(vec![n]), 2, n).unwrap();
        assert_eq!(got, q_term(n as i64, 2, false).unwrap());
    }

    #[test]
    fn q_lambda_splits_as_product() {
        let got = q_lambda(&Partition::new(vec![1, 1]), 2, 2).unwrap();
        let q1 = q_term(1, 2, false).unwrap();
        assert_eq!(got, q1.mul(&q1));
    }

    #[test]
    fn q_lambda_rejects_oversized_partition() {
        assert!(matches!(
            q_lambda(&Partition::new(vec![3]), 2, 2),
            Err(Error::PartitionTooLarge(_))
        ));
    }

    #[test]
    fn su2_m2_matches_fixture() {
        let got = series_formula(&spec(Family::SU, 2), 2).unwrap();
        assert_eq!(got, poly(&[1, 0, 1, 2]));
    }

    #[test]
    fn su3_m2_matches_fixture() {
        let got = series_formula(&spec(Family::SU, 3), 2).unwrap();
        assert_eq!(got, poly(&[1, 0, 1, 2, 2, 4, 1, 2, 3]));
    }

    #[test]
    fn u1_m3_is_torus_cube() {
        let got = series_formula(&spec(Family::U, 1), 3).unwrap();
        assert_eq!(got, poly(&[1, 1]).pow(3));
    }

    #[test]
    fn m1_series_is_classical_poincare_polynomial() {
        for (fam, n) in [
            (Family::U, 1),
            (Family::U, 4),
            (Family::SU, 3),
            (Family::Sp, 2),
            (Family::SOOdd, 3),
            (Family::SOEven, 2),
            (Family::SOEven, 3),
        ] {
            let s = spec(fam, n);
            assert_eq!(
                series_formula(&s, 1).unwrap(),
                classical_poincare_polynomial(&s),
                "{:?}",
                s
            );
        }
    }

    #[test]
    fn so2_is_a_torus() {
        for m in 1..=4 {
            assert_eq!(
                series_formula(&spec(Family::SOEven, 1), m).unwrap(),
                poly(&[1, 1]).pow(m)
            );
        }
    }

    #[test]
    fn so4_is_su2_squared() {
        for m in 1..=3 {
            let su2 = series_formula(&spec(Family::SU, 2), m).unwrap();
            let so4 = series_formula(&spec(Family::SOEven, 2), m).unwrap();
            assert_eq!(so4, series_product(&[su2.clone(), su2]), "m={}", m);
        }
    }

    #[test]
    fn u_splits_off_torus_factor() {
        for n in 1..=4 {
            for m in 1..=3 {
                let u = series_formula(&spec(Family::U, n), m).unwrap();
                let su = series_formula(&spec(Family::SU, n), m).unwrap();
                let torus = poly(&[1, 1]).pow(m);
                assert_eq!(u, &su * &torus, "n={} m={}", n, m);
            }
        }
    }

    #[test]
    fn oracle_on_trivial_group() {
        let got = series_oracle(&spec(Family::U, 1), 2, Budget::small()).unwrap();
        assert_eq!(got, poly(&[1, 2, 1]));
    }

    #[test]
    fn oracle_matches_formula_spot_checks() {
        for (fam, n, m) in [
            (Family::U, 3, 2),
            (Family::SU, 3, 3),
            (Family::Sp, 2, 2),
            (Family::SOOdd, 2, 3),
            (Family::SOEven, 2, 2),
            (Family::SOEven, 3, 1),
        ] {
            let s = spec(fam, n);
            assert_eq!(
                series_oracle(&s, m, Budget::small()).unwrap(),
                series_formula(&s, m).unwrap(),
                "{:?} m={}",
                s,
                m
            );
        }
    }

    #[test]
    fn g2_oracle_matches_fixture() {
        let got = series_oracle(&spec(Family::G2, 2), 2, Budget::small()).unwrap();
        let fixture = refdata::load_fixture("G2/m2").unwrap();
        let expect = Poly::from_int_coeffs(
            &fixture.coefficients.iter().map(|&c| c as i64).collect::<Vec<_>>(),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn truncated_mode_agrees_with_exact() {
        for (fam, n, m) in [(Family::G2, 2, 2), (Family::Sp, 3, 2), (Family::U, 4, 3)] {
            let s = spec(fam, n);
            let exact =
                series_oracle_with_mode(&s, m, Budget::small(), OracleMode::Exact).unwrap();
            let trunc =
                series_oracle_with_mode(&s, m, Budget::small(), OracleMode::Truncated).unwrap();
            assert_eq!(exact, trunc, "{:?} m={}", s, m);
        }
    }

    #[test]
    fn e8_oracle_exceeds_every_preset() {
        for budget in [Budget::small(), Budget::medium(), Budget::large()] {
            let err = series_oracle(&spec(Family::E8, 8), 2, budget).unwrap_err();
            assert!(matches!(err, Error::BudgetExceeded { .. }));
        }
    }

    #[test]
    fn empty_product_is_one() {
        assert_eq!(series_product(&[]), Poly::one());
    }

    #[test]
    fn summation_order_does_not_change_the_result() {
        let mut terms = Vec::new();
        for k in 1..=5i64 {
            terms.push(q_term(k, 2, false).unwrap());
            terms.push(q_term(-k, 3, true).unwrap());
        }
        let base = sum_ratfns(terms.clone());
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        for _ in 0..5 {
            terms.shuffle(&mut rng);
            assert_eq!(sum_ratfns(terms.clone()), base);
        }
    }

    #[test]
    fn q_lambda_degree_bound() {
        // As rational functions, deg q_lambda^{m,n} <= (m-2) n - k for
        // lambda |- k: the t^{(m-2)k} head of each block cancels against
        // the fraction's leading behavior. The top-term predictions rest
        // on this bound.
        for n in 1..=4u32 {
            for m in 1..=4u32 {
                for k in 0..=n {
                    for lambda in enum_partitions(k) {
                        let q = q_lambda(&lambda, m, n).unwrap();
                        let bound = (m as i64 - 2) * n as i64 - k as i64;
                        assert!(
                            q.fn_degree().is_none_or(|d| d <= bound),
                            "lambda={:?} m={} n={}: degree {:?} exceeds {}",
                            lambda.parts(),
                            m,
                            n,
                            q.fn_degree(),
                            bound
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn series_evaluates_finitely_at_one() {
        // Smoke test that no rational-function pole survives to the final
        // polynomial.
        for n in 1..=4 {
            for m in 1..=3 {
                let p = series_formula(&spec(Family::U, n), m).unwrap();
                let total = p.eval(&rat_int(1));
                assert!(total > Rational::zero());
            }
        }
    }
}
