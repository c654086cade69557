//! Polynomial families and the finite free multiplicative convolution.
//!
//! Polynomials are dense coefficient vectors, lowest degree first, over
//! [`BigComplex`]. The two generating families here are multiplicative
//! analogues of the Hermite and Laguerre polynomials: both arise from the
//! binomial expansion of `(x-1)^n` by reweighting the coefficient of `x^j`
//! with an exponential (heat) or polynomial (differential) factor in `j`.

use serde::{Deserialize, Serialize};

use crate::scalar::{binomial, BigComplex, BigReal};

/// Errors from polynomial constructors and operators.
#[derive(Debug, thiserror::Error)]
pub enum PolyError {
    #[error("degree {degree} exceeds convolution order {order}")]
    DegreeExceedsOrder { degree: usize, order: usize },
    #[error("leading coefficient vanishes: (b + n)^c = 0 at n = {n}")]
    DegenerateLeadingCoefficient { n: usize },
    #[error("cannot deflate {requested} roots from degree {degree}")]
    DeflationTooDeep { requested: usize, degree: usize },
    #[error("invalid serialized polynomial: {0}")]
    Parse(String),
}

/// Dense univariate polynomial, coefficients lowest degree first.
///
/// The zero polynomial is stored as a single zero coefficient; otherwise the
/// leading coefficient is nonzero.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    coeffs: Vec<BigComplex>,
}

impl Polynomial {
    /// Builds a polynomial, trimming exactly-zero leading coefficients.
    pub fn new(mut coeffs: Vec<BigComplex>) -> Self {
        while coeffs.len() > 1 && coeffs.last().map_or(false, BigComplex::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(BigComplex::zero(crate::scalar::MIN_PRECISION_BITS));
        }
        Polynomial { coeffs }
    }

    pub fn from_f64_coeffs(pairs: &[(f64, f64)], prec: u32) -> Self {
        Polynomial::new(
            pairs.iter().map(|&(re, im)| BigComplex::from_f64s(re, im, prec)).collect(),
        )
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }

    pub fn coeff(&self, j: usize) -> &BigComplex {
        &self.coeffs[j]
    }

    pub fn coeffs(&self) -> &[BigComplex] {
        &self.coeffs
    }

    pub fn leading(&self) -> &BigComplex {
        self.coeffs.last().expect("coefficient vector is never empty")
    }

    /// Largest mantissa width among the coefficients.
    pub fn prec(&self) -> u32 {
        self.coeffs.iter().map(BigComplex::prec).max().unwrap_or(64)
    }

    /// Copy with every coefficient carried to `prec` bits (exact when
    /// extending).
    pub fn with_prec(&self, prec: u32) -> Self {
        Polynomial { coeffs: self.coeffs.iter().map(|c| c.with_prec(prec)).collect() }
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: &BigComplex) -> BigComplex {
        let mut acc = self.leading().clone();
        for a in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * z) + a;
        }
        acc
    }

    /// Joint Horner evaluation of the polynomial and its derivative.
    pub fn evaluate_with_deriv(&self, z: &BigComplex) -> (BigComplex, BigComplex) {
        let mut acc = self.leading().clone();
        let mut dacc = BigComplex::zero(self.prec());
        for a in self.coeffs.iter().rev().skip(1) {
            dacc = &(&dacc * z) + &acc;
            acc = &(&acc * z) + a;
        }
        (acc, dacc)
    }

    /// Upper bound `sum_j |a_j| r^j` for `|P(z)|` on `|z| = r`.
    pub fn eval_abs_bound(&self, r: &BigReal) -> BigReal {
        let mut acc = self.leading().abs();
        for a in self.coeffs.iter().rev().skip(1) {
            acc = &(&acc * r) + &a.abs();
        }
        acc
    }

    /// Coefficient-vector product (naive convolution).
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let prec = self.prec().max(other.prec());
        let mut out = vec![BigComplex::zero(prec); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::new(out)
    }

    /// `P(lambda * x)`: multiplies the coefficient of `x^j` by `lambda^j`.
    pub fn scale_argument(&self, lambda: &BigComplex) -> Polynomial {
        let mut factor = BigComplex::one(self.prec().max(lambda.prec()));
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| {
                let scaled = a * &factor;
                factor = &factor * lambda;
                scaled
            })
            .collect();
        Polynomial::new(coeffs)
    }

    /// `x^d P(1/x)` with `d = deg P`: reverses the coefficient vector.
    pub fn reverse_reciprocal(&self) -> Polynomial {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Polynomial::new(coeffs)
    }

    /// Divides out `(x - 1)^m` by repeated synthetic division, discarding the
    /// remainders. Intended for polynomials with a known root of multiplicity
    /// at least `m` at `x = 1`.
    pub fn deflate_unit_root(&self, m: usize) -> Result<Polynomial, PolyError> {
        if m > self.degree() {
            return Err(PolyError::DeflationTooDeep { requested: m, degree: self.degree() });
        }
        let mut coeffs = self.coeffs.clone();
        for _ in 0..m {
            // Synthetic division by (x - 1): quotient coefficients appear as
            // the running sums from the top; the final sum is the remainder.
            let mut quotient = Vec::with_capacity(coeffs.len() - 1);
            let mut carry = coeffs.last().expect("nonempty").clone();
            for a in coeffs.iter().rev().skip(1).take(coeffs.len() - 1) {
                quotient.push(carry.clone());
                carry = &carry + a;
            }
            quotient.reverse();
            coeffs = quotient;
        }
        Ok(Polynomial::new(coeffs))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json_str(s: &str) -> Result<Polynomial, PolyError> {
        serde_json::from_str(s).map_err(|e| PolyError::Parse(e.to_string()))
    }
}

/// Largest coefficient-wise distance between two polynomials, treating
/// missing coefficients as zero.
pub fn max_coeff_distance(a: &Polynomial, b: &Polynomial) -> BigReal {
    let prec = a.prec().max(b.prec());
    let zero = BigComplex::zero(prec);
    let len = a.coeffs.len().max(b.coeffs.len());
    let mut worst = BigReal::zero(prec);
    for j in 0..len {
        let x = a.coeffs.get(j).unwrap_or(&zero);
        let y = b.coeffs.get(j).unwrap_or(&zero);
        worst = worst.max_of(&(x - y).abs());
    }
    worst
}

/// `(x - 1)^n` with exact integer coefficients.
pub fn x_minus_one_pow(n: usize, prec: u32) -> Polynomial {
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = binomial(n, j);
            if (n - j) % 2 == 1 {
                c = -c;
            }
            BigComplex::from_real(BigReal::from_integer(&c, prec))
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Multiplicative Hermite polynomial of degree `n` at time `s`:
/// the coefficient of `x^j` is `(-1)^(n-j) binom(n,j) exp(-(s/2)(j^2 - n j))`.
///
/// At `s = 0` this is `(x - 1)^n`. The family is a semigroup in `s` under
/// the order-`n` finite free multiplicative convolution.
pub fn hermite_mult(n: usize, s: &BigComplex, prec: u32) -> Polynomial {
    let s = s.with_prec(prec);
    let two = BigReal::from_u64(2, prec);
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = binomial(n, j);
            if (n - j) % 2 == 1 {
                c = -c;
            }
            // Exponent -(s/2)(j^2 - n j) = (s/2) j (n - j).
            let jnj = j as u64 * (n - j) as u64;
            let half_jnj = &BigReal::from_u64(jnj, prec) / &two;
            let weight = s.scale(&half_jnj).exp();
            weight.scale(&BigReal::from_integer(&c, prec))
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Argument-scaled multiplicative Hermite realization: the coefficient of
/// `x^j` is `(-1)^(n-j) binom(n,j) exp(-s j^2 / (2n))`.
///
/// Equals the degree-`n` multiplicative Hermite polynomial at time `s/n`
/// with its argument scaled by `exp(-s/2)`, so its mean power sums start at
/// all ones for `s = 0` and follow the closed moment flow in `s`.
pub fn hermite_mult_scaled(n: usize, s: &BigComplex, prec: u32) -> Polynomial {
    let s = s.with_prec(prec);
    let two_n = BigReal::from_u64(2 * n as u64, prec);
    let coeffs = (0..=n)
        .map(|j| {
            let mut c = binomial(n, j);
            if (n - j) % 2 == 1 {
                c = -c;
            }
            let jj = j as u64 * j as u64;
            let ratio = &BigReal::from_u64(jj, prec) / &two_n;
            let weight = (-&s.scale(&ratio)).exp();
            weight.scale(&BigReal::from_integer(&c, prec))
        })
        .collect();
    Polynomial::new(coeffs)
}

/// Multiplicative Laguerre polynomial of degree `n` with shift `b` and
/// exponent `c`: the coefficient of `x^j` is `(-1)^(n-j) binom(n,j) (j+b)^c`.
///
/// Fails when `b = -n` and `c >= 1`, which would annihilate the leading
/// coefficient.
pub fn laguerre_mult(
    n: usize,
    b: &BigComplex,
    c: u64,
    prec: u32,
) -> Result<Polynomial, PolyError> {
    let b = b.with_prec(prec);
    let n_plus_b = &BigComplex::from_real(BigReal::from_u64(n as u64, prec)) + &b;
    if n_plus_b.is_zero() && c >= 1 {
        return Err(PolyError::DegenerateLeadingCoefficient { n });
    }
    let coeffs = (0..=n)
        .map(|j| {
            let mut cf = binomial(n, j);
            if (n - j) % 2 == 1 {
                cf = -cf;
            }
            let j_plus_b = &BigComplex::from_real(BigReal::from_u64(j as u64, prec)) + &b;
            let weight = j_plus_b.pow_u64(c);
            weight.scale(&BigReal::from_integer(&cf, prec))
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Order-`n` finite free multiplicative convolution: with inputs
/// `P = sum p_j x^j` and `Q = sum q_j x^j` of degree at most `n`, the result
/// has coefficients `r_j = (-1)^(n-j) p_j q_j / binom(n,j)`.
///
/// `(x - 1)^n` is the identity element.
pub fn finite_free_mult_convolve(
    p: &Polynomial,
    q: &Polynomial,
    n: usize,
) -> Result<Polynomial, PolyError> {
    for poly in [p, q] {
        if poly.degree() > n {
            return Err(PolyError::DegreeExceedsOrder { degree: poly.degree(), order: n });
        }
    }
    let prec = p.prec().max(q.prec());
    let zero = BigComplex::zero(prec);
    let coeffs = (0..=n)
        .map(|j| {
            let pj = p.coeffs().get(j).unwrap_or(&zero);
            let qj = q.coeffs().get(j).unwrap_or(&zero);
            let mut denom = BigReal::from_integer(&binomial(n, j), prec);
            if (n - j) % 2 == 1 {
                denom = -denom;
            }
            let inv = &BigReal::one(prec) / &denom;
            (pj * qj).scale(&inv)
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Multiplicative heat flow for time `s` at order `n`: multiplies the
/// coefficient of `x^j` by `exp(-(s/(2n))(j^2 - n j))`.
///
/// Equals convolving with the degree-`n` multiplicative Hermite polynomial
/// at time `s/n`.
pub fn mult_heat_apply(p: &Polynomial, s: &BigComplex, n: usize) -> Result<Polynomial, PolyError> {
    if p.degree() > n {
        return Err(PolyError::DegreeExceedsOrder { degree: p.degree(), order: n });
    }
    let prec = p.prec().max(s.prec());
    let s = s.with_prec(prec);
    let two_n = BigReal::from_u64(2 * n as u64, prec);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let jnj = j as u64 * (n - j) as u64;
            let ratio = &BigReal::from_u64(jnj, prec) / &two_n;
            a * &s.scale(&ratio).exp()
        })
        .collect();
    Ok(Polynomial::new(coeffs))
}

/// Applies `(x d/dx + b)^c` coefficient-wise: multiplies the coefficient of
/// `x^j` by `(j + b)^c`.
///
/// Equals convolving with the degree-`n` multiplicative Laguerre polynomial
/// with the same `b` and `c`, for any order `n >= deg P`.
pub fn xdx_plus_b_power_apply(p: &Polynomial, b: &BigComplex, c: u64) -> Polynomial {
    let prec = p.prec().max(b.prec());
    let b = b.with_prec(prec);
    let coeffs = p
        .coeffs()
        .iter()
        .enumerate()
        .map(|(j, a)| {
            let j_plus_b = &BigComplex::from_real(BigReal::from_u64(j as u64, prec)) + &b;
            a * &j_plus_b.pow_u64(c)
        })
        .collect();
    Polynomial::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rel_distance(a: &Polynomial, b: &Polynomial) -> f64 {
        let scale: f64 = a
            .coeffs()
            .iter()
            .map(|c| c.abs().to_f64())
            .fold(1.0, f64::max);
        max_coeff_distance(a, b).to_f64() / scale
    }

    #[test]
    fn hermite_at_time_zero_is_binomial() {
        let p = 192;
        let s = BigComplex::zero(p);
        for n in [1usize, 2, 5, 9] {
            let h = hermite_mult(n, &s, p);
            assert_eq!(h, x_minus_one_pow(n, p));
        }
    }

    #[test]
    fn hermite_degree_two_time_one_coefficients() {
        // Degree 2 at s = 1: x^2 - 2 e^{1/2} x + 1.
        let p = 256;
        let h = hermite_mult(2, &BigComplex::one(p), p);
        assert_eq!(h.degree(), 2);
        let e_half = BigReal::parse_decimal("0.5", p).unwrap().exp();
        let mid = BigComplex::from_real(-(&e_half + &e_half));
        assert!((h.coeff(1) - &mid).abs().to_f64() < 1e-70);
        assert!((h.coeff(0) - &BigComplex::one(p)).abs().to_f64() < 1e-75);
        assert!((h.coeff(2) - &BigComplex::one(p)).abs().to_f64() < 1e-75);
    }

    #[test]
    fn hermite_palindrome_up_to_sign() {
        // x^n H(1/x; s) = (-1)^n H(x; s) for real and complex s.
        let p = 192;
        for (n, sre, sim) in [(5usize, 0.7, 0.0), (6, -1.3, 0.0), (7, 0.25, -0.5)] {
            let s = BigComplex::from_f64s(sre, sim, p);
            let h = hermite_mult(n, &s, p);
            let rev = h.reverse_reciprocal();
            let signed = if n % 2 == 1 { Polynomial::new(h.coeffs().iter().map(|c| -c).collect()) } else { h };
            assert!(rel_distance(&rev, &signed) < 1e-50);
        }
    }

    #[test]
    fn scaled_hermite_is_argument_scaled_family_member() {
        let p = 256;
        let n = 9usize;
        for (sre, sim) in [(1.0, 0.0), (-0.6, 0.0), (0.4, -0.8)] {
            let s = BigComplex::from_f64s(sre, sim, p);
            let scaled = hermite_mult_scaled(n, &s, p);
            let n_real = BigComplex::from_real(BigReal::from_u64(n as u64, p));
            let h = hermite_mult(n, &(&s / &n_real), p);
            let half = BigReal::parse_decimal("0.5", p).unwrap();
            let lambda = (-&s.scale(&half)).exp();
            let expected = h.scale_argument(&lambda);
            assert!(rel_distance(&scaled, &expected) < 1e-55);
        }
    }

    #[test]
    fn laguerre_degree_one_example() {
        // n=1, b=1, c=2: coefficient of x^0 is -(0+1)^2, of x^1 is (1+1)^2.
        let p = 192;
        let l = laguerre_mult(1, &BigComplex::one(p), 2, p).unwrap();
        assert_eq!(l.degree(), 1);
        assert!((l.coeff(0).re().to_f64() + 1.0).abs() < 1e-30);
        assert!((l.coeff(1).re().to_f64() - 4.0).abs() < 1e-30);
    }

    #[test]
    fn laguerre_exponent_one_factorization() {
        // c = 1 collapses to (x-1)^(n-1) ((b+n) x - b).
        let p = 192;
        for (n, bre, bim) in [(4usize, 2.5, 0.0), (6, -0.75, 1.5)] {
            let b = BigComplex::from_f64s(bre, bim, p);
            let l = laguerre_mult(n, &b, 1, p).unwrap();
            let bn = &b + &BigComplex::from_real(BigReal::from_u64(n as u64, p));
            let linear = Polynomial::new(vec![-&b, bn]);
            let expected = x_minus_one_pow(n - 1, p).mul(&linear);
            assert!(rel_distance(&l, &expected) < 1e-50);
        }
    }

    #[test]
    fn laguerre_reversal_symmetry() {
        // L(x; -n-b, c) = (-1)^(n+c) x^n L(1/x; b, c).
        let p = 192;
        let n = 6usize;
        let c = 3u64;
        let b = BigComplex::from_f64s(2.5, -0.5, p);
        let lhs_b = -&(&b + &BigComplex::from_real(BigReal::from_u64(n as u64, p)));
        let lhs = laguerre_mult(n, &lhs_b, c, p).unwrap();
        let rhs = laguerre_mult(n, &b, c, p).unwrap().reverse_reciprocal();
        let rhs = if (n + c as usize) % 2 == 1 {
            Polynomial::new(rhs.coeffs().iter().map(|x| -x).collect())
        } else {
            rhs
        };
        assert!(rel_distance(&lhs, &rhs) < 1e-50);
    }

    #[test]
    fn laguerre_unit_root_multiplicity_is_exact() {
        // Integer b: coefficients are exact integers, so the value at 1 is an
        // iterated finite difference and vanishes exactly while c < n.
        let p = 256;
        let n = 8usize;
        let c = 5u64;
        let b = BigComplex::from_real(BigReal::from_u64(3, p));
        let l = laguerre_mult(n, &b, c, p).unwrap();
        let one = BigComplex::one(p);
        assert!(l.evaluate(&one).is_zero());
        let deflated = l.deflate_unit_root(n - c as usize).unwrap();
        assert_eq!(deflated.degree(), c as usize);
        assert!(!deflated.evaluate(&one).is_zero());
    }

    #[test]
    fn laguerre_degenerate_leading_is_rejected() {
        let p = 192;
        let b = BigComplex::from_real(BigReal::from_i64(-4, p));
        assert!(matches!(
            laguerre_mult(4, &b, 2, p),
            Err(PolyError::DegenerateLeadingCoefficient { n: 4 })
        ));
        // c = 0 keeps the leading coefficient: (x-1)^n.
        assert_eq!(laguerre_mult(4, &b, 0, p).unwrap(), x_minus_one_pow(4, p));
    }

    #[test]
    fn heat_flow_matches_hermite_convolution() {
        let p = 256;
        let n = 7usize;
        let s = BigComplex::from_f64s(0.8, 0.3, p);
        let q = Polynomial::from_f64_coeffs(
            &[(2.0, 0.0), (-1.5, 0.5), (0.0, 0.0), (1.0, -1.0), (0.25, 0.0), (0.0, 0.0), (0.0, 0.0), (3.0, 0.0)],
            p,
        );
        let direct = mult_heat_apply(&q, &s, n).unwrap();
        let n_real = BigComplex::from_real(BigReal::from_u64(n as u64, p));
        let h = hermite_mult(n, &(&s / &n_real), p);
        let via_conv = finite_free_mult_convolve(&q, &h, n).unwrap();
        assert!(rel_distance(&direct, &via_conv) < 1e-60);
    }

    #[test]
    fn differential_operator_matches_laguerre_convolution() {
        let p = 256;
        let n = 6usize;
        let b = BigComplex::from_f64s(1.25, -0.75, p);
        let c = 4u64;
        let q = Polynomial::from_f64_coeffs(
            &[(1.0, 0.0), (0.5, -2.0), (-3.0, 0.0), (0.0, 1.0), (2.0, 0.0), (0.0, 0.0), (1.0, 1.0)],
            p,
        );
        let direct = xdx_plus_b_power_apply(&q, &b, c);
        let l = laguerre_mult(n, &b, c, p).unwrap();
        let via_conv = finite_free_mult_convolve(&q, &l, n).unwrap();
        assert!(rel_distance(&direct, &via_conv) < 1e-60);
    }

    #[test]
    fn hermite_semigroup_under_convolution() {
        let p = 256;
        let n = 5usize;
        let s = BigComplex::from_f64s(0.3, 0.0, p);
        let t = BigComplex::from_f64s(0.4, -0.2, p);
        let conv = finite_free_mult_convolve(
            &hermite_mult(n, &s, p),
            &hermite_mult(n, &t, p),
            n,
        )
        .unwrap();
        let sum = hermite_mult(n, &(&s + &t), p);
        assert!(rel_distance(&conv, &sum) < 1e-60);
    }

    #[test]
    fn laguerre_semigroup_in_exponent() {
        let p = 256;
        let n = 5usize;
        let b = BigComplex::from_f64s(2.0, 1.0, p);
        let conv = finite_free_mult_convolve(
            &laguerre_mult(n, &b, 2, p).unwrap(),
            &laguerre_mult(n, &b, 3, p).unwrap(),
            n,
        )
        .unwrap();
        let sum = laguerre_mult(n, &b, 5, p).unwrap();
        assert!(rel_distance(&conv, &sum) < 1e-55);
    }

    #[test]
    fn deflation_peels_unit_roots() {
        let p = 192;
        let pure = x_minus_one_pow(5, p);
        let deflated = pure.deflate_unit_root(5).unwrap();
        assert_eq!(deflated.degree(), 0);
        assert!((deflated.coeff(0) - &BigComplex::one(p)).abs().to_f64() < 1e-40);

        // (x-1)^2 (x-3) -> (x-3) after two deflations.
        let shifted = Polynomial::from_f64_coeffs(&[(-3.0, 0.0), (1.0, 0.0)], p);
        let prod = x_minus_one_pow(2, p).mul(&shifted);
        let out = prod.deflate_unit_root(2).unwrap();
        assert!(rel_distance(&out, &shifted) < 1e-40);
        assert!(matches!(
            shifted.deflate_unit_root(2),
            Err(PolyError::DeflationTooDeep { requested: 2, degree: 1 })
        ));
    }

    #[test]
    fn json_round_trip_preserves_coefficients() {
        let p = 256;
        let h = hermite_mult(4, &BigComplex::from_f64s(-0.5, 0.25, p), p);
        let text = h.to_json_string();
        assert!(text.starts_with('['));
        let back = Polynomial::from_json_str(&text).unwrap();
        assert_eq!(h, back);
        assert!(Polynomial::from_json_str("{\"bad\":1}").is_err());
    }

    #[test]
    fn evaluate_with_deriv_matches_finite_difference() {
        let p = 256;
        let poly = Polynomial::from_f64_coeffs(&[(1.0, 0.0), (-2.0, 1.0), (0.5, 0.0), (3.0, -1.0)], p);
        let z = BigComplex::from_f64s(0.7, -0.4, p);
        let (v, d) = poly.evaluate_with_deriv(&z);
        assert!((&v - &poly.evaluate(&z)).abs().to_f64() < 1e-70);
        let h = BigComplex::from_f64s(1e-30, 0.0, p);
        let fd = &(&poly.evaluate(&(&z + &h)) - &v) / &h;
        assert!((&fd - &d).abs().to_f64() < 1e-25);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn prop_identity_element_of_convolution(
            n in 1usize..9,
            seed in proptest::collection::vec((-5.0f64..5.0, -5.0f64..5.0), 9),
        ) {
            let p = 192;
            let coeffs: Vec<(f64, f64)> = seed.into_iter().take(n + 1).collect();
            let q = Polynomial::from_f64_coeffs(&coeffs, p);
            prop_assume!(q.degree() <= n);
            let conv = finite_free_mult_convolve(&q, &x_minus_one_pow(n, p), n).unwrap();
            prop_assert!(rel_distance(&conv, &q) < 1e-40);
        }

        #[test]
        fn prop_convolution_commutes(
            n in 1usize..8,
            sa in (-3.0f64..3.0, -3.0f64..3.0),
            sb in (-3.0f64..3.0, -3.0f64..3.0),
        ) {
            let p = 192;
            let a = hermite_mult(n, &BigComplex::from_f64s(sa.0, sa.1, p), p);
            let b = laguerre_mult(n, &BigComplex::from_f64s(sb.0, sb.1, p), 2, p);
            prop_assume!(b.is_ok());
            let b = b.unwrap();
            let ab = finite_free_mult_convolve(&a, &b, n).unwrap();
            let ba = finite_free_mult_convolve(&b, &a, n).unwrap();
            prop_assert!(rel_distance(&ab, &ba) < 1e-40);
        }
    }
}
