//! Mean power sums of polynomial root multisets.
//!
//! The `k`-th moment of a degree-`n` polynomial is the mean `(1/n) sum z_i^k`
//! over its roots with multiplicity. Two routes are provided: directly from
//! a root list, and from the coefficients alone through Newton's identities.

use crate::poly::{hermite_mult_scaled, mult_heat_apply, x_minus_one_pow, Polynomial};
use crate::scalar::{BigComplex, BigReal};

/// Errors from moment extraction.
#[derive(Debug, thiserror::Error)]
pub enum MomentError {
    #[error("moments need a positive-degree polynomial")]
    ZeroDegree,
    #[error("moments of an empty root list are undefined")]
    NoRoots,
}

/// Mean power sums `m_0 = 1, m_1, ..., m_k_max` of a root multiset.
#[derive(Clone, Debug, PartialEq)]
pub struct MomentSequence {
    moments: Vec<BigComplex>,
}

impl MomentSequence {
    pub fn from_moments(moments: Vec<BigComplex>) -> Self {
        assert!(!moments.is_empty(), "m_0 is always present");
        MomentSequence { moments }
    }

    pub fn k_max(&self) -> usize {
        self.moments.len() - 1
    }

    pub fn moment(&self, k: usize) -> &BigComplex {
        &self.moments[k]
    }

    pub fn moments(&self) -> &[BigComplex] {
        &self.moments
    }

    /// Rescales each `m_k` by `factor^k`, the moment map of scaling every
    /// root by `factor`.
    pub fn scale_roots(&self, factor: &BigComplex) -> MomentSequence {
        let mut f = BigComplex::one(factor.prec());
        let moments = self
            .moments
            .iter()
            .map(|m| {
                let out = m * &f;
                f = &f * factor;
                out
            })
            .collect();
        MomentSequence { moments }
    }
}

/// Largest relative deviation `|a_k - b_k| / max(|a_k|, |b_k|)` over
/// `k = 1 ..= min(k_max)`; zero-against-zero counts as agreement.
pub fn max_rel_deviation(a: &MomentSequence, b: &MomentSequence) -> f64 {
    let k_max = a.k_max().min(b.k_max());
    let mut worst = 0.0f64;
    for k in 1..=k_max {
        let x = a.moment(k);
        let y = b.moment(k);
        let scale = x.abs().to_f64().max(y.abs().to_f64());
        if scale == 0.0 {
            continue;
        }
        worst = worst.max((x - y).abs().to_f64() / scale);
    }
    worst
}

/// Mean power sums of an explicit root list.
pub fn moments_from_roots(roots: &[BigComplex], k_max: usize) -> Result<MomentSequence, MomentError> {
    if roots.is_empty() {
        return Err(MomentError::NoRoots);
    }
    let prec = roots.iter().map(BigComplex::prec).max().unwrap_or(64);
    let n_inv = &BigReal::one(prec) / &BigReal::from_u64(roots.len() as u64, prec);
    let mut powers: Vec<BigComplex> = vec![BigComplex::one(prec); roots.len()];
    let mut moments = Vec::with_capacity(k_max + 1);
    moments.push(BigComplex::one(prec));
    for _ in 1..=k_max {
        let mut sum = BigComplex::zero(prec);
        for (p, r) in powers.iter_mut().zip(roots) {
            *p = &*p * r;
            sum = &sum + p;
        }
        moments.push(sum.scale(&n_inv));
    }
    Ok(MomentSequence { moments })
}

/// Mean power sums from coefficients alone, by Newton's identities on the
/// elementary symmetric functions `e_k = (-1)^k a_(n-k) / a_n`.
///
/// Valid for any `k_max`, also beyond the degree. Runs internally with extra
/// guard bits because the identities alternate in sign.
pub fn moments_from_coeffs(p: &Polynomial, k_max: usize) -> Result<MomentSequence, MomentError> {
    let n = p.degree();
    if n == 0 {
        return Err(MomentError::ZeroDegree);
    }
    let out_prec = p.prec();
    let work_prec = out_prec + 2 * k_max as u32 + 32;
    let lead_inv = p.leading().with_prec(work_prec).recip();

    // e[k] for k = 0 ..= min(n, k_max).
    let e: Vec<BigComplex> = (0..=n.min(k_max))
        .map(|k| {
            let mut v = &p.coeff(n - k).with_prec(work_prec) * &lead_inv;
            if k % 2 == 1 {
                v = -&v;
            }
            v
        })
        .collect();

    // Newton: p_k = (-1)^(k-1) k e_k + sum_{i=max(1,k-n)}^{k-1} (-1)^(k-1+i) e_(k-i) p_i.
    let mut power_sums: Vec<BigComplex> = Vec::with_capacity(k_max + 1);
    power_sums.push(BigComplex::from_real(BigReal::from_u64(n as u64, work_prec)));
    for k in 1..=k_max {
        let mut acc = BigComplex::zero(work_prec);
        if k <= n {
            acc = e[k].scale(&BigReal::from_u64(k as u64, work_prec));
            if k % 2 == 0 {
                acc = -&acc;
            }
        }
        for i in (1.max(k.saturating_sub(n)))..k {
            let term = &e[k - i] * &power_sums[i];
            if (k - 1 + i) % 2 == 0 {
                acc = &acc + &term;
            } else {
                acc = &acc - &term;
            }
        }
        power_sums.push(acc);
    }

    let n_inv = &BigReal::one(work_prec) / &BigReal::from_u64(n as u64, work_prec);
    let mut moments = Vec::with_capacity(k_max + 1);
    moments.push(BigComplex::one(out_prec));
    for pk in power_sums.into_iter().skip(1) {
        moments.push(pk.scale(&n_inv).with_prec(out_prec));
    }
    Ok(MomentSequence { moments })
}

/// The two computational routes to the moment flow of the scaled Hermite
/// realization at time `s`:
///
/// * `via_moment_scaling`: apply the multiplicative heat flow to `(x-1)^n`,
///   take coefficient moments, then multiply `m_k` by `exp(s k / 2)`.
/// * `via_argument_scaling`: build the argument-scaled realization directly
///   and take its coefficient moments.
///
/// Both compute the same sequence; their agreement exercises the heat
/// operator, the direct constructor, and the Newton identities together.
pub struct BridgePair {
    pub via_moment_scaling: MomentSequence,
    pub via_argument_scaling: MomentSequence,
}

pub fn hermite_moment_bridge(
    n: usize,
    s: &BigComplex,
    k_max: usize,
    prec: u32,
) -> Result<BridgePair, MomentError> {
    let s = s.with_prec(prec);
    let heat = mult_heat_apply(&x_minus_one_pow(n, prec), &s, n)
        .expect("degree n input is within order n");
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let growth = s.scale(&half).exp();
    let via_moment_scaling = moments_from_coeffs(&heat, k_max)?.scale_roots(&growth);
    let via_argument_scaling = moments_from_coeffs(&hermite_mult_scaled(n, &s, prec), k_max)?;
    Ok(BridgePair { via_moment_scaling, via_argument_scaling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::x_minus_one_pow;

    #[test]
    fn moments_of_unit_binomial_are_all_one() {
        let p = 192;
        for n in [1usize, 3, 8] {
            let m = moments_from_coeffs(&x_minus_one_pow(n, p), 10).unwrap();
            for k in 0..=10 {
                assert!((m.moment(k) - &BigComplex::one(p)).abs().to_f64() < 1e-45);
            }
        }
    }

    #[test]
    fn coefficient_route_matches_root_route() {
        let p = 256;
        let roots = [
            BigComplex::from_f64s(2.0, 0.0, p),
            BigComplex::from_f64s(-1.0, 0.0, p),
            BigComplex::from_f64s(0.5, 1.25, p),
            BigComplex::from_f64s(0.5, -1.25, p),
            BigComplex::from_f64s(-0.25, 0.75, p),
        ];
        let mut poly = Polynomial::from_f64_coeffs(&[(1.0, 0.0)], p);
        for r in &roots {
            poly = poly.mul(&Polynomial::new(vec![-r, BigComplex::one(p)]));
        }
        // k_max well beyond the degree exercises the tail of the recurrence.
        let from_coeffs = moments_from_coeffs(&poly, 14).unwrap();
        let from_roots = moments_from_roots(&roots, 14).unwrap();
        assert!(max_rel_deviation(&from_coeffs, &from_roots) < 1e-60);
    }

    #[test]
    fn hermite_degree_two_first_moment() {
        // Mean root of x^2 - 2 e^{1/2} x + 1 is e^{1/2}.
        let p = 256;
        let h = crate::poly::hermite_mult(2, &BigComplex::one(p), p);
        let m = moments_from_coeffs(&h, 2).unwrap();
        let e_half = BigReal::parse_decimal("0.5", p).unwrap().exp();
        assert!((m.moment(1).re() - &e_half).abs().to_f64() < 1e-70);
        assert!(m.moment(1).im().abs().to_f64() < 1e-70);
    }

    #[test]
    fn scaled_hermite_moments_match_reference_values() {
        // Mean power sums of the scaled realization at n = 10, s = -1,
        // reference digits from an independent implementation.
        let p = 256;
        let s = BigComplex::from_real(BigReal::from_i64(-1, p));
        let m = moments_from_coeffs(&hermite_mult_scaled(10, &s, p), 4).unwrap();
        let expected = [
            "0.3867410234545012069154617740359593303569",
            "0.007996198232071681738878207147422545749083",
            "-0.03488919938016253490390614868306696068731",
            "0.005250709238297019399835771502672120719887",
        ];
        for (k, digits) in expected.iter().enumerate() {
            let want = BigReal::parse_decimal(digits, p).unwrap();
            let got = m.moment(k + 1);
            let rel = (got.re() - &want).abs().to_f64() / want.abs().to_f64();
            assert!(rel < 1e-38, "k={} rel={:e}", k + 1, rel);
            assert!(got.im().abs().to_f64() < 1e-60);
        }
    }

    #[test]
    fn bridge_routes_agree_at_high_precision() {
        let p = 256;
        let s = BigComplex::from_real(BigReal::from_i64(-1, p));
        let pair = hermite_moment_bridge(10, &s, 8, p).unwrap();
        assert!(max_rel_deviation(&pair.via_moment_scaling, &pair.via_argument_scaling) < 1e-20);

        let s = BigComplex::from_f64s(0.5, -0.25, p);
        let pair = hermite_moment_bridge(6, &s, 6, p).unwrap();
        assert!(max_rel_deviation(&pair.via_moment_scaling, &pair.via_argument_scaling) < 1e-40);
    }

    #[test]
    fn moments_beyond_degree_follow_roots() {
        // (x-2)(x-1/2): m_3 = (8 + 0.125) / 2.
        let p = 192;
        let poly = Polynomial::from_f64_coeffs(&[(1.0, 0.0), (-2.5, 0.0), (1.0, 0.0)], p);
        let m = moments_from_coeffs(&poly, 3).unwrap();
        assert!((m.moment(3).re().to_f64() - 4.0625).abs() < 1e-40);
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let p = 128;
        let constant = Polynomial::from_f64_coeffs(&[(3.0, 0.0)], p);
        assert!(matches!(moments_from_coeffs(&constant, 2), Err(MomentError::ZeroDegree)));
        assert!(matches!(moments_from_roots(&[], 2), Err(MomentError::NoRoots)));
    }
}
