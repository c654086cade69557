//! Limit laws of the two polynomial families and their transform calculus.
//!
//! As the degree grows, the scaled Hermite realization's empirical root
//! distribution converges to a one-parameter multiplicative normal family,
//! and the Laguerre realization's to a two-parameter multiplicative Poisson
//! family. Both laws are handled here through their moment and cumulant
//! sequences and through the S- and R-transforms that linearize the free
//! multiplicative convolution.
//!
//! Every quantity with more than one natural formula is computed along each
//! route; the public constructors cross-check the routes against each other
//! and fail loudly on disagreement instead of returning silently wrong data.

use crate::moments::{max_rel_deviation, MomentSequence};
use crate::scalar::{binomial, BigComplex, BigReal};
use crate::series::{lagrange_coeffs, PowerSeries, SeriesError};

/// Errors from limit-law constructors and transform identities.
#[derive(Debug, thiserror::Error)]
pub enum LimitError {
    #[error("independent routes disagree for {what}: deviation {deviation:e} > {tolerance:e}")]
    RouteMismatch { what: &'static str, deviation: f64, tolerance: f64 },
    #[error("first moment is zero; the S-transform needs an invertible mean")]
    FirstMomentZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error(transparent)]
    Series(#[from] SeriesError),
}

/// Free cumulants `kappa_1 ..= kappa_k_max`; the index-0 slot is unused.
#[derive(Clone, Debug, PartialEq)]
pub struct CumulantSequence {
    cumulants: Vec<BigComplex>,
}

impl CumulantSequence {
    pub fn from_cumulants(cumulants: Vec<BigComplex>) -> Self {
        assert!(!cumulants.is_empty());
        CumulantSequence { cumulants }
    }

    pub fn k_max(&self) -> usize {
        self.cumulants.len() - 1
    }

    pub fn cumulant(&self, k: usize) -> &BigComplex {
        assert!(k >= 1, "cumulants start at k = 1");
        &self.cumulants[k]
    }

    /// The R-transform series: coefficient of `w^j` is `kappa_(j+1)`.
    pub fn to_r_series(&self) -> PowerSeries {
        PowerSeries::from_coeffs(self.cumulants[1..].to_vec())
    }

    /// Largest relative disagreement with another sequence over shared `k`.
    pub fn max_rel_deviation(&self, other: &CumulantSequence) -> f64 {
        let k_max = self.k_max().min(other.k_max());
        let mut worst = 0.0f64;
        for k in 1..=k_max {
            let x = self.cumulant(k);
            let y = other.cumulant(k);
            let scale = x.abs().to_f64().max(y.abs().to_f64());
            if scale == 0.0 {
                continue;
            }
            worst = worst.max((x - y).abs().to_f64() / scale);
        }
        worst
    }
}

/// Relative tolerance for route cross-checks at a working precision:
/// `2^(-prec/2)` leaves half the mantissa as agreement margin.
pub fn route_check_tolerance(prec: u32) -> f64 {
    BigReal::exp2_of(-((prec / 2) as i32), 64).to_f64()
}

/// Generalized Laguerre polynomial value `L_n^(alpha)(x)` by the three-term
/// recurrence `k L_k = (2k - 1 + alpha - x) L_(k-1) - (k - 1 + alpha) L_(k-2)`.
fn laguerre_poly_value(n: usize, alpha: i64, x: &BigComplex, prec: u32) -> BigComplex {
    let x = x.with_prec(prec);
    let mut prev = BigComplex::one(prec);
    if n == 0 {
        return prev;
    }
    let mut cur = &BigComplex::from_real(BigReal::from_i64(1 + alpha, prec)) - &x;
    for k in 2..=n {
        let a = &BigComplex::from_real(BigReal::from_i64(2 * k as i64 - 1 + alpha, prec)) - &x;
        let b = BigReal::from_i64(k as i64 - 1 + alpha, prec);
        let num = &(&a * &cur) - &prev.scale(&b);
        let next = num.scale(&(&BigReal::one(prec) / &BigReal::from_u64(k as u64, prec)));
        prev = cur;
        cur = next;
    }
    cur
}

/// Series `1 / (1 + beta + t)` up to `order`.
fn shifted_geometric_series(
    beta: &BigComplex,
    order: usize,
    prec: u32,
) -> Result<PowerSeries, LimitError> {
    let one_plus_beta = &BigComplex::one(prec) + &beta.with_prec(prec);
    if one_plus_beta.is_zero() {
        return Err(LimitError::InvalidParameter("beta = -1 is outside the family".into()));
    }
    let mut denom = PowerSeries::identity(order, prec);
    denom = denom.add(&PowerSeries::from_coeffs(vec![one_plus_beta; 1]).truncated(order));
    Ok(PowerSeries::one(order, prec).div(&denom)?)
}

// ---------------------------------------------------------------------------
// Multiplicative normal limit family, parameterized by a time s.
// ---------------------------------------------------------------------------

/// Moments by Lagrange extraction: `m_k = e^(sk/2)/k [u^(k-1)] ((1+u)^k e^(sku))`.
pub fn mu_moments_via_lagrange(
    s: &BigComplex,
    k_max: usize,
    prec: u32,
) -> Result<MomentSequence, LimitError> {
    let s = s.with_prec(prec);
    let order = k_max.max(1);
    let exp_su = PowerSeries::identity(order, prec).scale(&s).exp();
    let phi = PowerSeries::one(order, prec)
        .add(&PowerSeries::identity(order, prec))
        .mul(&exp_su);
    let base = lagrange_coeffs(&phi, k_max)?;
    let mut moments = vec![BigComplex::one(prec)];
    moments.extend(base);
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let growth = s.scale(&half).exp();
    Ok(MomentSequence::from_moments(moments).scale_roots(&growth))
}

/// Moments by the explicit binomial sum:
/// `m_k = e^(sk/2)/k sum_(j=0)^(k-1) binom(k, j+1) (sk)^j / j!`.
pub fn mu_moments_via_sum(s: &BigComplex, k_max: usize, prec: u32) -> MomentSequence {
    let s = s.with_prec(prec);
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let mut moments = vec![BigComplex::one(prec)];
    for k in 1..=k_max {
        let k_real = BigReal::from_u64(k as u64, prec);
        let sk = s.scale(&k_real);
        let mut term = BigComplex::one(prec);
        let mut sum = BigComplex::zero(prec);
        for j in 0..k {
            if j > 0 {
                term = (&term * &sk).scale(&(&BigReal::one(prec) / &BigReal::from_u64(j as u64, prec)));
            }
            let c = BigReal::from_integer(&binomial(k, j + 1), prec);
            sum = &sum + &term.scale(&c);
        }
        let growth = sk.scale(&half).exp();
        let m = (&sum * &growth).scale(&(&BigReal::one(prec) / &k_real));
        moments.push(m);
    }
    MomentSequence::from_moments(moments)
}

/// Moments through the associated-Laguerre value:
/// `m_k = e^(sk/2)/k L_(k-1)^(1)(-ks)`, with the polynomial evaluated by its
/// three-term recurrence.
pub fn mu_moments_via_laguerre_recurrence(
    s: &BigComplex,
    k_max: usize,
    prec: u32,
) -> MomentSequence {
    let s = s.with_prec(prec);
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let mut moments = vec![BigComplex::one(prec)];
    for k in 1..=k_max {
        let k_real = BigReal::from_u64(k as u64, prec);
        let sk = s.scale(&k_real);
        let value = laguerre_poly_value(k - 1, 1, &(-&sk), prec);
        let growth = sk.scale(&half).exp();
        let m = (&value * &growth).scale(&(&BigReal::one(prec) / &k_real));
        moments.push(m);
    }
    MomentSequence::from_moments(moments)
}

/// All three moment routes of the multiplicative normal family, in the order
/// Lagrange extraction, binomial sum, Laguerre recurrence.
pub fn mu_moment_routes(
    s: &BigComplex,
    k_max: usize,
    prec: u32,
) -> Result<[MomentSequence; 3], LimitError> {
    Ok([
        mu_moments_via_lagrange(s, k_max, prec)?,
        mu_moments_via_sum(s, k_max, prec),
        mu_moments_via_laguerre_recurrence(s, k_max, prec),
    ])
}

/// Moments of the multiplicative normal family, cross-checked across all
/// three routes to [`route_check_tolerance`].
pub fn mu_moments(s: &BigComplex, k_max: usize, prec: u32) -> Result<MomentSequence, LimitError> {
    let routes = mu_moment_routes(s, k_max, prec)?;
    let tolerance = route_check_tolerance(prec);
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        let deviation = max_rel_deviation(&routes[a], &routes[b]);
        if deviation > tolerance {
            return Err(LimitError::RouteMismatch {
                what: "multiplicative normal moments",
                deviation,
                tolerance,
            });
        }
    }
    let [first, _, _] = routes;
    Ok(first)
}

/// Free cumulants of the multiplicative normal family, in closed form:
/// `kappa_k = (sk)^(k-1) e^(sk/2) / k!`.
pub fn mu_cumulants(s: &BigComplex, k_max: usize, prec: u32) -> CumulantSequence {
    let s = s.with_prec(prec);
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let mut cumulants = vec![BigComplex::zero(prec)];
    let mut factorial = BigReal::one(prec);
    for k in 1..=k_max {
        let k_real = BigReal::from_u64(k as u64, prec);
        factorial = &factorial * &k_real;
        let sk = s.scale(&k_real);
        let power = sk.pow_u64(k as u64 - 1);
        let growth = sk.scale(&half).exp();
        cumulants.push((&power * &growth).scale(&(&BigReal::one(prec) / &factorial)));
    }
    CumulantSequence::from_cumulants(cumulants)
}

/// The S-transform of the multiplicative normal family as a series in `y`:
/// `S(y) = exp(-s (y + 1/2))`.
pub fn mu_s_transform_series(s: &BigComplex, order: usize, prec: u32) -> PowerSeries {
    let s = s.with_prec(prec);
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let linear = PowerSeries::identity(order, prec)
        .add(&PowerSeries::from_coeffs(vec![BigComplex::from_real(half)]).truncated(order));
    linear.scale(&(-&s)).exp()
}

/// R-transform coefficients of the multiplicative normal family computed
/// through the principal branch of the Lambert function:
/// `R(w) = W(-s e^(s/2) w) / (-s w)`, with `W` obtained by functional
/// inversion of `t e^t`. Needs `s != 0`.
pub fn mu_r_lambert_series(
    s: &BigComplex,
    order: usize,
    prec: u32,
) -> Result<PowerSeries, LimitError> {
    let s = s.with_prec(prec);
    if s.is_zero() {
        return Err(LimitError::InvalidParameter(
            "the Lambert route needs s != 0; at s = 0 the R-transform is constant 1".into(),
        ));
    }
    // W inverts t e^t, so W(z) = sum_k (-k)^(k-1) z^k / k!.
    let t = PowerSeries::identity(order + 1, prec);
    let w_series = t.mul(&t.exp()).compose_inverse()?;
    let half = &BigReal::one(prec) / &BigReal::from_u64(2, prec);
    let lambda = -&(&s * &s.scale(&half).exp());
    // [w^j] W(lambda w) / (-s w) = W_(j+1) lambda^(j+1) / (-s).
    let neg_s_inv = (-&s).recip();
    let mut lambda_pow = lambda.clone();
    let coeffs = (0..=order)
        .map(|j| {
            let c = &(w_series.coeff(j + 1) * &lambda_pow) * &neg_s_inv;
            lambda_pow = &lambda_pow * &lambda;
            c
        })
        .collect();
    Ok(PowerSeries::from_coeffs(coeffs))
}

// ---------------------------------------------------------------------------
// Multiplicative Poisson limit family, parameterized by beta and gamma.
// ---------------------------------------------------------------------------

/// Moments by Lagrange extraction:
/// `m_k = 1/k [t^(k-1)] ((1+t) exp(-gamma/(1+beta+t)))^k`.
pub fn nu_moments_via_lagrange(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<MomentSequence, LimitError> {
    let gamma = gamma.with_prec(prec);
    let order = k_max.max(1);
    let geo = shifted_geometric_series(beta, order, prec)?;
    let expo = geo.scale(&BigComplex::from_real(-&gamma)).exp();
    let phi = PowerSeries::one(order, prec)
        .add(&PowerSeries::identity(order, prec))
        .mul(&expo);
    let base = lagrange_coeffs(&phi, k_max)?;
    let mut moments = vec![BigComplex::one(prec)];
    moments.extend(base);
    Ok(MomentSequence::from_moments(moments))
}

/// Moments by the explicit sum over associated-Laguerre values:
/// `m_k = e^(-k gamma/(1+beta))/k sum_(j=0)^(k-1) binom(k, j+1)
///        (-1/(1+beta))^j L_j^(-1)(k gamma/(1+beta))`.
pub fn nu_moments_via_laguerre_sum(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<MomentSequence, LimitError> {
    let beta = beta.with_prec(prec);
    let gamma = gamma.with_prec(prec);
    let one_plus_beta = &BigComplex::one(prec) + &beta;
    if one_plus_beta.is_zero() {
        return Err(LimitError::InvalidParameter("beta = -1 is outside the family".into()));
    }
    let inv_1pb = one_plus_beta.recip();
    let neg_inv = -&inv_1pb;
    let gamma_scaled = inv_1pb.scale(&gamma);
    let mut moments = vec![BigComplex::one(prec)];
    for k in 1..=k_max {
        let k_real = BigReal::from_u64(k as u64, prec);
        let x = gamma_scaled.scale(&k_real);
        let mut sum = BigComplex::zero(prec);
        let mut pow = BigComplex::one(prec);
        for j in 0..k {
            let c = BigReal::from_integer(&binomial(k, j + 1), prec);
            let l = laguerre_poly_value(j, -1, &x, prec);
            sum = &sum + &(&pow * &l).scale(&c);
            if j + 1 < k {
                pow = &pow * &neg_inv;
            }
        }
        let damping = (-&x).exp();
        moments.push((&sum * &damping).scale(&(&BigReal::one(prec) / &k_real)));
    }
    Ok(MomentSequence::from_moments(moments))
}

/// Both moment routes of the multiplicative Poisson family, in the order
/// Lagrange extraction, Laguerre sum.
pub fn nu_moment_routes(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<[MomentSequence; 2], LimitError> {
    Ok([
        nu_moments_via_lagrange(beta, gamma, k_max, prec)?,
        nu_moments_via_laguerre_sum(beta, gamma, k_max, prec)?,
    ])
}

/// Moments of the multiplicative Poisson family, cross-checked across both
/// routes to [`route_check_tolerance`].
pub fn nu_moments(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<MomentSequence, LimitError> {
    let routes = nu_moment_routes(beta, gamma, k_max, prec)?;
    let tolerance = route_check_tolerance(prec);
    let deviation = max_rel_deviation(&routes[0], &routes[1]);
    if deviation > tolerance {
        return Err(LimitError::RouteMismatch {
            what: "multiplicative Poisson moments",
            deviation,
            tolerance,
        });
    }
    let [first, _] = routes;
    Ok(first)
}

/// Free cumulants by series extraction: `kappa_k = 1/k [t^(k-1)] e^(-k gamma/(1+beta+t))`.
pub fn nu_cumulants_via_series(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<CumulantSequence, LimitError> {
    let gamma = gamma.with_prec(prec);
    let order = k_max.max(1);
    let geo = shifted_geometric_series(beta, order, prec)?;
    let base = geo.scale(&BigComplex::from_real(-&gamma)).exp();
    let mut cumulants = vec![BigComplex::zero(prec)];
    let mut power = base.clone();
    for k in 1..=k_max {
        let inv_k = &BigReal::one(prec) / &BigReal::from_u64(k as u64, prec);
        cumulants.push(power.coeff(k - 1).scale(&inv_k));
        if k < k_max {
            power = power.mul(&base);
        }
    }
    Ok(CumulantSequence::from_cumulants(cumulants))
}

/// Free cumulants in closed form:
/// `kappa_k = e^(-k gamma/(1+beta))/k (-1/(1+beta))^(k-1) L_(k-1)^(-1)(k gamma/(1+beta))`.
pub fn nu_cumulants_closed(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<CumulantSequence, LimitError> {
    let beta = beta.with_prec(prec);
    let gamma = gamma.with_prec(prec);
    let one_plus_beta = &BigComplex::one(prec) + &beta;
    if one_plus_beta.is_zero() {
        return Err(LimitError::InvalidParameter("beta = -1 is outside the family".into()));
    }
    let inv_1pb = one_plus_beta.recip();
    let neg_inv = -&inv_1pb;
    let gamma_scaled = inv_1pb.scale(&gamma);
    let mut cumulants = vec![BigComplex::zero(prec)];
    for k in 1..=k_max {
        let k_real = BigReal::from_u64(k as u64, prec);
        let x = gamma_scaled.scale(&k_real);
        let l = laguerre_poly_value(k - 1, -1, &x, prec);
        let pow = neg_inv.pow_u64(k as u64 - 1);
        let damping = (-&x).exp();
        let kappa = (&(&l * &pow) * &damping).scale(&(&BigReal::one(prec) / &k_real));
        cumulants.push(kappa);
    }
    Ok(CumulantSequence::from_cumulants(cumulants))
}

/// Cumulants of the multiplicative Poisson family, cross-checked between the
/// series and closed-form routes.
pub fn nu_cumulants(
    beta: &BigComplex,
    gamma: &BigReal,
    k_max: usize,
    prec: u32,
) -> Result<CumulantSequence, LimitError> {
    let a = nu_cumulants_via_series(beta, gamma, k_max, prec)?;
    let b = nu_cumulants_closed(beta, gamma, k_max, prec)?;
    let tolerance = route_check_tolerance(prec);
    let deviation = a.max_rel_deviation(&b);
    if deviation > tolerance {
        return Err(LimitError::RouteMismatch {
            what: "multiplicative Poisson cumulants",
            deviation,
            tolerance,
        });
    }
    Ok(a)
}

/// The S-transform of the multiplicative Poisson family as a series in `y`:
/// `S(y) = exp(gamma / (beta + 1 + y))`.
pub fn nu_s_transform_series(
    beta: &BigComplex,
    gamma: &BigReal,
    order: usize,
    prec: u32,
) -> Result<PowerSeries, LimitError> {
    let gamma = gamma.with_prec(prec);
    let geo = shifted_geometric_series(beta, order, prec)?;
    Ok(geo.scale(&BigComplex::from_real(gamma)).exp())
}

// ---------------------------------------------------------------------------
// Transform calculus on moment sequences.
// ---------------------------------------------------------------------------

/// S-transform series from a moment sequence: with `psi(t) = sum m_k t^k`,
/// `S(y) = psi_inverse(y) (1 + y) / y`. The output order is one less than
/// the moment order. Needs `m_1 != 0`.
pub fn s_transform_from_moments(m: &MomentSequence) -> Result<PowerSeries, LimitError> {
    let k_max = m.k_max();
    let prec = m.moment(0).prec();
    if m.moment(1).is_zero() {
        return Err(LimitError::FirstMomentZero);
    }
    let mut psi_coeffs = m.moments().to_vec();
    psi_coeffs[0] = BigComplex::zero(prec);
    let psi = PowerSeries::from_coeffs(psi_coeffs);
    let inverse = psi.compose_inverse()?;
    // psi_inverse(y)/y is the unit series of the shifted coefficients.
    let shifted = PowerSeries::from_coeffs(inverse.coeffs()[1..].to_vec());
    let one_plus_y = PowerSeries::one(k_max - 1, prec).add(&PowerSeries::identity(k_max - 1, prec));
    Ok(shifted.mul(&one_plus_y))
}

/// Moment sequence from an S-transform series, by Lagrange extraction of
/// `phi(y) = (1 + y) / S(y)`: `m_k = 1/k [u^(k-1)] phi^k`.
pub fn moments_from_s_transform(
    s_series: &PowerSeries,
    k_max: usize,
) -> Result<MomentSequence, LimitError> {
    let prec = s_series.prec();
    let order = s_series.order();
    let one_plus_y = PowerSeries::one(order, prec).add(&PowerSeries::identity(order, prec));
    let phi = one_plus_y.div(s_series)?;
    let base = lagrange_coeffs(&phi, k_max)?;
    let mut moments = vec![BigComplex::one(prec)];
    moments.extend(base);
    Ok(MomentSequence::from_moments(moments))
}

/// R-transform series from a moment sequence: with `psi(t) = sum m_k t^k`
/// and `u(t) = t (1 + psi(t))`, the R-transform is `(psi/u)` composed with
/// the functional inverse of `u`. Coefficient `j` is the free cumulant
/// `kappa_(j+1)`.
pub fn r_transform_from_moments(m: &MomentSequence) -> Result<PowerSeries, LimitError> {
    let k_max = m.k_max();
    let prec = m.moment(0).prec();
    if m.moment(1).is_zero() {
        return Err(LimitError::FirstMomentZero);
    }
    let mut psi_coeffs = m.moments().to_vec();
    psi_coeffs[0] = BigComplex::zero(prec);
    let psi = PowerSeries::from_coeffs(psi_coeffs);
    let one = PowerSeries::one(k_max, prec);
    let m_series = one.add(&psi);
    // psi / u = (psi / t) / (1 + psi), a unit series of order k_max - 1.
    let psi_over_t = PowerSeries::from_coeffs(psi.coeffs()[1..].to_vec());
    let quotient = psi_over_t.div(&m_series.truncated(k_max - 1))?;
    // u = t (1 + psi) has the shifted coefficients of (1 + psi).
    let mut u_coeffs = vec![BigComplex::zero(prec)];
    u_coeffs.extend(m_series.coeffs()[..k_max].iter().cloned());
    let u = PowerSeries::from_coeffs(u_coeffs);
    let u_inverse = u.compose_inverse()?;
    Ok(quotient.compose(&u_inverse.truncated(k_max - 1))?)
}

/// Largest coefficient of `S(z) R(z S(z)) - 1` through the shared order:
/// the S- and R-transforms of one distribution must compose to the constant
/// series 1.
pub fn s_r_identity_deviation(
    s_series: &PowerSeries,
    r_series: &PowerSeries,
) -> Result<BigReal, LimitError> {
    let order = s_series.order().min(r_series.order());
    let prec = s_series.prec().max(r_series.prec());
    let s_t = s_series.truncated(order);
    let r_t = r_series.truncated(order);
    // z S(z): shift the S coefficients up one slot.
    let mut zs_coeffs = vec![BigComplex::zero(prec)];
    zs_coeffs.extend(s_t.coeffs()[..order].iter().cloned());
    let zs = PowerSeries::from_coeffs(zs_coeffs);
    let composed = r_t.compose(&zs)?;
    let product = s_t.mul(&composed);
    let one = PowerSeries::one(order, prec);
    let diff = product.sub(&one);
    let mut worst = BigReal::zero(prec);
    for k in 0..=order {
        worst = worst.max_of(&diff.coeff(k).abs());
    }
    Ok(worst)
}

/// Moments of the free multiplicative convolution of two distributions,
/// through the product of their S-transforms. Both inputs need nonzero
/// first moments.
pub fn free_mult_convolve_moments(
    a: &MomentSequence,
    b: &MomentSequence,
    k_max: usize,
) -> Result<MomentSequence, LimitError> {
    let s_a = s_transform_from_moments(a)?;
    let s_b = s_transform_from_moments(b)?;
    moments_from_s_transform(&s_a.mul(&s_b), k_max)
}

/// Largest coefficient of `T - w (1 + T) exp(-gamma/(beta + 1 + T))` where
/// `T(w) = sum m_k w^k`: the moment generating series of the multiplicative
/// Poisson family satisfies this implicit relation exactly.
pub fn nu_implicit_relation_deviation(
    beta: &BigComplex,
    gamma: &BigReal,
    m: &MomentSequence,
) -> Result<BigReal, LimitError> {
    let k_max = m.k_max();
    let prec = m.moment(0).prec();
    let gamma = gamma.with_prec(prec);
    let mut t_coeffs = m.moments().to_vec();
    t_coeffs[0] = BigComplex::zero(prec);
    let t_series = PowerSeries::from_coeffs(t_coeffs);

    let geo = shifted_geometric_series(beta, k_max, prec)?;
    let e_series = geo.scale(&BigComplex::from_real(-&gamma)).exp();
    let e_of_t = e_series.compose(&t_series)?;
    let one_plus_t = PowerSeries::one(k_max, prec).add(&t_series);
    let inner = one_plus_t.mul(&e_of_t);
    // w * inner: shift up one slot.
    let mut shifted = vec![BigComplex::zero(prec)];
    shifted.extend(inner.coeffs()[..k_max].iter().cloned());
    let rhs = PowerSeries::from_coeffs(shifted);
    let diff = t_series.sub(&rhs);
    let mut worst = BigReal::zero(prec);
    for k in 0..=k_max {
        worst = worst.max_of(&diff.coeff(k).abs());
    }
    Ok(worst)
}
