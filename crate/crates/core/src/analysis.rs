//! Structural consequences of the series: top-term prediction, palindromy,
//! a rational-hyperbolicity witness, and homological-stability range
//! measurement.

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactalg::Poly;
use crate::partitions::binomial;
use crate::poincare::{series_formula, series_oracle, Budget};
use crate::weylgroups::{Family, GroupSpec};

/// Leading term of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TopTerm {
    pub coefficient: BigInt,
    pub degree: usize,
}

impl TopTerm {
    fn new(coefficient: BigInt, degree: usize) -> TopTerm {
        TopTerm {
            coefficient,
            degree,
        }
    }
}

/// Extract the leading coefficient and degree.
pub fn top_term(p: &Poly) -> Result<TopTerm> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    let lead = p.coeff(deg);
    debug_assert!(lead.is_integer());
    Ok(TopTerm::new(lead.to_integer(), deg))
}

/// `c(m, G)`: the binomial parameter of the even-m top coefficient.
fn c_param(family: Family, m: u32, n: u32) -> u64 {
    match family {
        Family::U | Family::SU => (m + n - 2) as u64,
        _ => (m + n - 1) as u64,
    }
}

/// `d(m, G)`: the odd-m top degree. Signed arithmetic: the `m - 2` factor
/// of the even orthogonal case dips negative at m = 1.
fn d_param(family: Family, m: u32, n: u32) -> usize {
    let (m, n) = (m as i64, n as i64);
    let v = match family {
        Family::U => n * n + (m - 1) * n,
        Family::SU => n * n + (m - 1) * (n - 1) - 1,
        Family::Sp | Family::SOOdd => 2 * n * n + m * n,
        Family::SOEven => 2 * n * n + (m - 2) * n,
        _ => unreachable!("classical families only"),
    };
    usize::try_from(v).expect("top degree is nonnegative")
}

fn epsilon(family: Family) -> usize {
    if family == Family::U {
        1
    } else {
        0
    }
}

/// Predicted top term for a classical family. `SO(2)` and `SO(4)` are the
/// torus and `SU(2)^2` special cases; every other case follows the general
/// prediction: `t^{d(m,G)}` for odd `m`, and
/// `binom(c(m,G), m-1) t^{d(m-1,G) + eps(G)}` for even `m`.
pub fn predicted_top(spec: &GroupSpec, m: u32) -> Result<TopTerm> {
    if m == 0 {
        return Err(Error::Precondition("m >= 1".into()));
    }
    let n = spec.rank_param;
    if !spec.family.is_classical() {
        return Err(Error::Unsupported(
            "predictions for exceptional groups go through predicted_top_general at m = 2"
                .into(),
        ));
    }
    if spec.family == Family::SOEven && n == 1 {
        return Ok(TopTerm::new(BigInt::one(), m as usize));
    }
    if spec.family == Family::SOEven && n == 2 {
        let su2 = predicted_top(&GroupSpec::new(Family::SU, 2)?, m)?;
        return Ok(TopTerm::new(
            &su2.coefficient * &su2.coefficient,
            2 * su2.degree,
        ));
    }
    if m % 2 == 1 {
        Ok(TopTerm::new(BigInt::one(), d_param(spec.family, m, n)))
    } else {
        let coeff = binomial(c_param(spec.family, m, n), (m - 1) as u64);
        Ok(TopTerm::new(
            BigInt::from(coeff),
            d_param(spec.family, m - 1, n) + epsilon(spec.family),
        ))
    }
}

/// Top term of the `m = 2` series of a compact connected group given its
/// simple factors (rank, dim), torus dimension and fundamental-group rank:
/// coefficient `prod (rank_i + 1)`, degree `dim G + rank pi_1(G)`.
pub fn predicted_top_general(
    simple_factors: &[(u32, u32)],
    torus_dim: u32,
    pi1_rank: u32,
) -> TopTerm {
    let coefficient = simple_factors
        .iter()
        .fold(BigInt::one(), |acc, &(rank, _)| acc * BigInt::from(rank + 1));
    let dim_g: u32 = simple_factors.iter().map(|&(_, dim)| dim).sum::<u32>() + torus_dim;
    TopTerm::new(coefficient, (dim_g + pi1_rank) as usize)
}

/// Coefficient sequence equal to its reverse.
pub fn is_palindromic(p: &Poly) -> Result<bool> {
    let deg = p.degree().ok_or(Error::ZeroPolynomial)?;
    Ok((0..=deg / 2).all(|i| p.coeff(i) == p.coeff(deg - i)))
}

/// True when the leading coefficient exceeds one, which rules out Poincaré
/// duality and hence witnesses rational hyperbolicity for `m >= 2` on a
/// simply-connected group. At `m = 1` the series is the group's own
/// Poincaré polynomial and the witness is always absent.
pub fn hyperbolicity_witness(spec: &GroupSpec, m: u32, budget: Budget) -> Result<bool> {
    let series = if spec.family.is_classical() {
        series_formula(spec, m)?
    } else {
        series_oracle(spec, m, budget)?
    };
    Ok(top_term(&series)?.coefficient > BigInt::one())
}

/// A computed series bundled with its provenance and the structural facts
/// read off it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    pub spec: GroupSpec,
    pub m: u32,
    /// `"formula"` or `"oracle"`.
    pub method: &'static str,
    pub series: Poly,
    pub top: TopTerm,
    pub palindromic: bool,
}

impl SeriesReport {
    pub fn build(
        spec: GroupSpec,
        m: u32,
        method: &'static str,
        series: Poly,
    ) -> Result<SeriesReport> {
        let top = top_term(&series)?;
        let palindromic = is_palindromic(&series)?;
        Ok(SeriesReport {
            spec,
            m,
            method,
            series,
            top,
            palindromic,
        })
    }
}

/// Stability measurement between consecutive ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityReport {
    pub family: Family,
    pub m: u32,
    pub n: u32,
    /// Largest degree D with coefficient-wise agreement through D.
    pub agreement_degree: usize,
    /// The predicted stable range `d_{m,n}`.
    pub expected: usize,
    /// First degree where the rank-(n+1) coefficient strictly exceeds.
    pub strict_growth_at: Option<usize>,
}

/// Predicted stable range: `2n - m + 1` for `U`/`SU`, `2n + 1` for
/// `Sp`/`SO(2n+1)`.
pub fn stable_range(family: Family, m: u32, n: u32) -> Result<usize> {
    match family {
        Family::U | Family::SU => Ok((2 * n + 1 - m) as usize),
        Family::Sp | Family::SOOdd => Ok((2 * n + 1) as usize),
        _ => Err(Error::Unsupported(
            "stability ranges cover U, SU, Sp and SO(2n+1)".into(),
        )),
    }
}

/// Compare the rank-`n` and rank-`n+1` series coefficient by coefficient.
pub fn stability_scan(family: Family, m: u32, n: u32) -> Result<StabilityReport> {
    match family {
        Family::U | Family::SU => {
            if n < m {
                return Err(Error::Precondition("U/SU stability needs n >= m".into()));
            }
        }
        Family::Sp | Family::SOOdd => {
            if m < 2 {
                return Err(Error::Precondition(
                    "Sp/SO(2n+1) stability needs m >= 2".into(),
                ));
            }
        }
        _ => {
            return Err(Error::Unsupported(
                "stability ranges cover U, SU, Sp and SO(2n+1)".into(),
            ))
        }
    }
    let low = series_formula(&GroupSpec::new(family, n)?, m)?;
    let high = series_formula(&GroupSpec::new(family, n + 1)?, m)?;
    let top = low.degree().unwrap_or(0).max(high.degree().unwrap_or(0));
    let mut agreement_degree = top;
    for d in 0..=top {
        if low.coeff(d) != high.coeff(d) {
            agreement_degree = d - 1;
            break;
        }
    }
    let strict_growth_at = (0..=top).find(|&d| high.coeff(d) > low.coeff(d));
    Ok(StabilityReport {
        family,
        m,
        n,
        agreement_degree,
        expected: stable_range(family, m, n)?,
        strict_growth_at,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactalg::Poly;

    fn spec(family: Family, n: u32) -> GroupSpec {
        GroupSpec::new(family, n).unwrap()
    }

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_int_coeffs(coeffs)
    }

    fn tt(c: i64, d: usize) -> TopTerm {
        TopTerm::new(BigInt::from(c), d)
    }

    #[test]
    fn top_term_reads_leading_entry() {
        assert_eq!(top_term(&poly(&[1, 0, 1, 2])).unwrap(), tt(2, 3));
        assert_eq!(top_term(&poly(&[1])).unwrap(), tt(1, 0));
        assert_eq!(top_term(&poly(&[0, 0, 1, 0, 0, 3])).unwrap(), tt(3, 5));
        assert_eq!(top_term(&Poly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn predicted_top_u_family() {
        // m odd: t^{n^2 + (m-1) n}; m even: binom(m+n-2, m-1) at
        // n^2 + (m-2) n + 1.
        assert_eq!(predicted_top(&spec(Family::U, 3), 3).unwrap(), tt(1, 15));
        assert_eq!(predicted_top(&spec(Family::U, 3), 2).unwrap(), tt(3, 10));
        assert_eq!(predicted_top(&spec(Family::SU, 2), 2).unwrap(), tt(2, 3));
    }

    #[test]
    fn predicted_top_so4_is_su2_squared() {
        assert_eq!(predicted_top(&spec(Family::SOEven, 2), 2).unwrap(), tt(4, 6));
        assert_eq!(predicted_top(&spec(Family::SOEven, 2), 3).unwrap(), tt(1, 10));
        assert_eq!(predicted_top(&spec(Family::SOEven, 1), 3).unwrap(), tt(1, 3));
    }

    #[test]
    fn predicted_top_matches_series_spot_checks() {
        for (fam, n, m) in [
            (Family::U, 2, 2),
            (Family::U, 3, 3),
            (Family::SU, 3, 2),
            (Family::Sp, 2, 2),
            (Family::SOOdd, 2, 3),
            (Family::SOEven, 3, 2),
            (Family::SOEven, 2, 2),
        ] {
            let s = spec(fam, n);
            let series = series_formula(&s, m).unwrap();
            assert_eq!(
                top_term(&series).unwrap(),
                predicted_top(&s, m).unwrap(),
                "{:?} m={}",
                s,
                m
            );
        }
    }

    #[test]
    fn predicted_top_general_cases() {
        // Single SU(2) factor.
        assert_eq!(predicted_top_general(&[(1, 3)], 0, 0), tt(2, 3));
        // A torus alone: series (1+t)^{2d}.
        assert_eq!(predicted_top_general(&[], 4, 4), tt(1, 8));
        // SU(2) x SU(2).
        assert_eq!(predicted_top_general(&[(1, 3), (1, 3)], 0, 0), tt(4, 6));
    }

    #[test]
    fn palindromic_checks() {
        assert!(is_palindromic(&poly(&[1])).unwrap());
        assert!(!is_palindromic(&poly(&[1, 0, 1, 2])).unwrap());
        let su2_m3 = series_formula(&spec(Family::SU, 2), 3).unwrap();
        assert!(is_palindromic(&su2_m3).unwrap());
    }

    #[test]
    fn hyperbolicity_witnesses() {
        let b = Budget::small();
        assert!(hyperbolicity_witness(&spec(Family::SU, 2), 2, b).unwrap());
        // m = 1 negative control: the group itself is elliptic.
        assert!(!hyperbolicity_witness(&spec(Family::Sp, 1), 1, b).unwrap());
        assert!(hyperbolicity_witness(&spec(Family::G2, 2), 2, b).unwrap());
    }

    #[test]
    fn stability_u_m2_n2() {
        let r = stability_scan(Family::U, 2, 2).unwrap();
        assert_eq!(r.agreement_degree, 3);
        assert_eq!(r.expected, 3);
        assert_eq!(r.strict_growth_at, Some(4));
    }

    #[test]
    fn stability_su_m2_matches_observed_range() {
        for n in 2..=5 {
            let r = stability_scan(Family::SU, 2, n).unwrap();
            assert_eq!(r.agreement_degree, (2 * n - 1) as usize, "n={}", n);
            assert_eq!(r.strict_growth_at, Some((2 * n) as usize));
        }
    }

    #[test]
    fn stability_sp_m2_n2() {
        let r = stability_scan(Family::Sp, 2, 2).unwrap();
        assert_eq!(r.agreement_degree, 5);
        assert_eq!(r.strict_growth_at, Some(6));
    }

    #[test]
    fn stability_preconditions() {
        assert!(stability_scan(Family::U, 3, 2).is_err());
        assert!(stability_scan(Family::Sp, 1, 2).is_err());
        assert!(stability_scan(Family::G2, 2, 2).is_err());
    }
}
