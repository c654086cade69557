//! Truncated formal power series and ordinary Bell polynomials.
//!
//! A [`PowerSeries`] stores coefficients of `t^0 .. t^K` for a fixed
//! truncation order `K`. Binary operations truncate to the smaller operand
//! order, so results are exact as formal series through their stated order.

use crate::scalar::{BigComplex, BigReal};

/// Errors from series operations whose preconditions fail.
#[derive(Debug, thiserror::Error)]
pub enum SeriesError {
    #[error("constant term is zero; {op} needs an invertible constant term")]
    ConstantTermZero { op: &'static str },
    #[error("inner series has nonzero constant term; composition needs order >= 1 terms only")]
    InnerConstantNonzero,
    #[error("linear term is zero; functional inversion needs an invertible linear term")]
    LinearTermZero,
    #[error("truncation order {have} is too short; need at least {need}")]
    TruncationTooShort { need: usize, have: usize },
}

/// Formal power series truncated at a fixed order.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSeries {
    coeffs: Vec<BigComplex>,
}

impl PowerSeries {
    pub fn from_coeffs(coeffs: Vec<BigComplex>) -> Self {
        assert!(!coeffs.is_empty(), "a series carries at least its constant term");
        PowerSeries { coeffs }
    }

    pub fn zero(order: usize, prec: u32) -> Self {
        PowerSeries { coeffs: vec![BigComplex::zero(prec); order + 1] }
    }

    pub fn one(order: usize, prec: u32) -> Self {
        let mut s = Self::zero(order, prec);
        s.coeffs[0] = BigComplex::one(prec);
        s
    }

    /// The series `t`.
    pub fn identity(order: usize, prec: u32) -> Self {
        let mut s = Self::zero(order, prec);
        if order >= 1 {
            s.coeffs[1] = BigComplex::one(prec);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &BigComplex {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[BigComplex] {
        &self.coeffs
    }

    pub fn prec(&self) -> u32 {
        self.coeffs.iter().map(BigComplex::prec).max().unwrap_or(64)
    }

    /// Copy truncated (or zero-padded) to the given order.
    pub fn truncated(&self, order: usize) -> Self {
        let prec = self.prec();
        let coeffs = (0..=order)
            .map(|k| self.coeffs.get(k).cloned().unwrap_or_else(|| BigComplex::zero(prec)))
            .collect();
        PowerSeries { coeffs }
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] + &rhs.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order).map(|k| &self.coeffs[k] - &rhs.coeffs[k]).collect();
        PowerSeries { coeffs }
    }

    pub fn scale(&self, factor: &BigComplex) -> PowerSeries {
        PowerSeries { coeffs: self.coeffs.iter().map(|c| c * factor).collect() }
    }

    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let prec = self.prec().max(rhs.prec());
        let mut coeffs = vec![BigComplex::zero(prec); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().take(order + 1 - i).enumerate() {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        PowerSeries { coeffs }
    }

    /// Integer power by binary exponentiation; `p^0 = 1` at this order.
    pub fn pow(&self, e: u64) -> PowerSeries {
        let mut acc = PowerSeries::one(self.order(), self.prec());
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `exp` of the series; the constant term may be any complex number.
    pub fn exp(&self) -> PowerSeries {
        // g = exp(f) satisfies g' = f' g: k g_k = sum_{j=1}^{k} j f_j g_{k-j}.
        let order = self.order();
        let prec = self.prec();
        let mut g = Vec::with_capacity(order + 1);
        g.push(self.coeffs[0].exp());
        for k in 1..=order {
            let mut acc = BigComplex::zero(prec);
            for j in 1..=k {
                let jf = self.coeffs[j].scale(&BigReal::from_u64(j as u64, prec));
                acc = &acc + &(&jf * &g[k - j]);
            }
            let inv_k = &BigReal::one(prec) / &BigReal::from_u64(k as u64, prec);
            g.push(acc.scale(&inv_k));
        }
        PowerSeries { coeffs: g }
    }

    /// Principal `log` of a series with nonzero constant term.
    pub fn log(&self) -> Result<PowerSeries, SeriesError> {
        if self.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermZero { op: "log" });
        }
        // f = log(g) satisfies k g_k = sum_{j=1}^{k} j f_j g_{k-j}.
        let order = self.order();
        let prec = self.prec();
        let g0_inv = self.coeffs[0].recip();
        let mut f = Vec::with_capacity(order + 1);
        f.push(self.coeffs[0].ln());
        for k in 1..=order {
            let k_real = BigReal::from_u64(k as u64, prec);
            let mut acc = self.coeffs[k].scale(&k_real);
            for j in 1..k {
                let jf = f[j].scale(&BigReal::from_u64(j as u64, prec));
                acc = &acc - &(&jf * &self.coeffs[k - j]);
            }
            let inv_k = &BigReal::one(prec) / &k_real;
            f.push((&acc * &g0_inv).scale(&inv_k));
        }
        Ok(PowerSeries { coeffs: f })
    }

    /// Quotient of series; the divisor needs a nonzero constant term.
    pub fn div(&self, rhs: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        if rhs.coeffs[0].is_zero() {
            return Err(SeriesError::ConstantTermZero { op: "div" });
        }
        let order = self.order().min(rhs.order());
        let b0_inv = rhs.coeffs[0].recip();
        let mut c: Vec<BigComplex> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let mut acc = self.coeffs[k].clone();
            for (j, cj) in c.iter().enumerate() {
                acc = &acc - &(cj * &rhs.coeffs[k - j]);
            }
            c.push(&acc * &b0_inv);
        }
        Ok(PowerSeries { coeffs: c })
    }

    /// Composition `self(inner)`; the inner series must have zero constant
    /// term so the result is a well-defined truncation.
    pub fn compose(&self, inner: &PowerSeries) -> Result<PowerSeries, SeriesError> {
        if !inner.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantNonzero);
        }
        let order = self.order().min(inner.order());
        let prec = self.prec().max(inner.prec());
        let mut acc = PowerSeries::zero(order, prec);
        for a in self.coeffs.iter().take(order + 1).rev() {
            acc = acc.mul(inner);
            acc.coeffs[0] = &acc.coeffs[0] + a;
        }
        Ok(acc)
    }

    /// Functional inverse of a series with zero constant term and nonzero
    /// linear term, through the same truncation order.
    ///
    /// Uses Lagrange inversion: the `k`-th coefficient of the inverse is
    /// `(1/k) [u^(k-1)] (u/self)^k`.
    pub fn compose_inverse(&self) -> Result<PowerSeries, SeriesError> {
        if !self.coeffs[0].is_zero() {
            return Err(SeriesError::InnerConstantNonzero);
        }
        if self.order() < 1 || self.coeffs[1].is_zero() {
            return Err(SeriesError::LinearTermZero);
        }
        let order = self.order();
        let prec = self.prec();
        // phi = u / self, a unit series of order `order - 1`.
        let shifted = PowerSeries::from_coeffs(self.coeffs[1..].to_vec());
        let phi = PowerSeries::one(order - 1, prec).div(&shifted)?;
        let inv_coeffs = lagrange_coeffs(&phi, order)?;
        let mut coeffs = Vec::with_capacity(order + 1);
        coeffs.push(BigComplex::zero(prec));
        coeffs.extend(inv_coeffs);
        Ok(PowerSeries { coeffs })
    }
}

/// The Lagrange coefficients `(1/k) [u^(k-1)] phi^k` for `k = 1 ..= k_max`,
/// computed with one running power of `phi`.
///
/// These are the power-sum coefficients of the functional inverse of
/// `u / phi(u)` when `phi(0) != 0`.
pub fn lagrange_coeffs(phi: &PowerSeries, k_max: usize) -> Result<Vec<BigComplex>, SeriesError> {
    if k_max >= 1 && phi.order() < k_max - 1 {
        return Err(SeriesError::TruncationTooShort { need: k_max - 1, have: phi.order() });
    }
    let prec = phi.prec();
    let mut out = Vec::with_capacity(k_max);
    let mut power = phi.clone();
    for k in 1..=k_max {
        let inv_k = &BigReal::one(prec) / &BigReal::from_u64(k as u64, prec);
        out.push(power.coeff(k - 1).scale(&inv_k));
        if k < k_max {
            power = power.mul(phi);
        }
    }
    Ok(out)
}

/// Single Lagrange coefficient `(1/k) [u^(k-1)] phi^k`.
pub fn lagrange_coeff(phi: &PowerSeries, k: usize) -> Result<BigComplex, SeriesError> {
    assert!(k >= 1, "Lagrange coefficients start at k = 1");
    if phi.order() < k - 1 {
        return Err(SeriesError::TruncationTooShort { need: k - 1, have: phi.order() });
    }
    let prec = phi.prec();
    let inv_k = &BigReal::one(prec) / &BigReal::from_u64(k as u64, prec);
    Ok(phi.pow(k as u64).coeff(k - 1).scale(&inv_k))
}

/// Table of ordinary (multiplicative) partial Bell polynomials
/// `B_{l,r}(x_1, x_2, ...)`: the coefficient sums over compositions of `l`
/// into exactly `r` parts, each part `m` contributing a factor `x_m`.
///
/// Satisfies `B_{0,0} = 1`, `B_{l,0} = 0` for `l >= 1`, and the recurrence
/// `B_{l,r} = sum_{m=1}^{l-r+1} x_m B_{l-m,r-1}`.
pub struct BellTable {
    rows: Vec<Vec<BigComplex>>,
    prec: u32,
}

impl BellTable {
    /// Builds all `B_{l,r}` for `0 <= r <= l <= max_order`. Needs
    /// `xs.len() >= max_order`, with `xs[m-1]` holding `x_m`.
    pub fn new(xs: &[BigComplex], max_order: usize) -> Self {
        assert!(
            xs.len() >= max_order,
            "need x_1 ..= x_{max_order}, got {} entries",
            xs.len()
        );
        let prec = xs.iter().map(BigComplex::prec).max().unwrap_or(64);
        let mut rows: Vec<Vec<BigComplex>> = Vec::with_capacity(max_order + 1);
        rows.push(vec![BigComplex::one(prec)]);
        for l in 1..=max_order {
            let mut row = Vec::with_capacity(l + 1);
            row.push(BigComplex::zero(prec));
            for r in 1..=l {
                let mut acc = BigComplex::zero(prec);
                for m in 1..=(l - r + 1) {
                    acc = &acc + &(&xs[m - 1] * &rows[l - m][r - 1]);
                }
                row.push(acc);
            }
            rows.push(row);
        }
        BellTable { rows, prec }
    }

    pub fn max_order(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn partial(&self, l: usize, r: usize) -> &BigComplex {
        &self.rows[l][r]
    }

    /// Weighted row sum `sum_{r=0}^{m} y^r B_{m,r}`.
    pub fn weighted(&self, m: usize, y: &BigComplex) -> BigComplex {
        let mut acc = BigComplex::zero(self.prec.max(y.prec()));
        let mut y_pow = BigComplex::one(acc.prec());
        for r in 0..=m {
            acc = &acc + &(&self.rows[m][r] * &y_pow);
            if r < m {
                y_pow = &y_pow * y;
            }
        }
        acc
    }
}
