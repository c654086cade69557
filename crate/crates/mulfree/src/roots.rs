//! Simultaneous root finding with certified backward-error residuals.
//!
//! The solver runs synchronized Aberth sweeps: every estimate receives the
//! Newton correction damped by the repulsion of all other estimates, computed
//! from one common snapshot per sweep. An estimate is accepted once
//! `|P(z)| <= tol * sum_j |a_j| |z|^j`, which certifies `z` as an exact root
//! of a polynomial whose coefficients are relatively perturbed by at most
//! `tol`. The reported residual is that same backward-error quotient.

use crate::poly::Polynomial;
use crate::scalar::{BigComplex, BigReal};

/// Errors from the root solver.
#[derive(Debug, thiserror::Error)]
pub enum RootError {
    #[error("the zero polynomial has no root set")]
    ZeroPolynomial,
    #[error(
        "{unconverged} of {total} roots unconverged after {sweeps} sweeps \
         (final working precision {precision_bits} bits)"
    )]
    NonConvergence { unconverged: usize, total: usize, sweeps: usize, precision_bits: u32 },
}

/// Roots with their backward-error residuals, sorted by argument and then by
/// modulus.
#[derive(Clone, Debug, serde::Serialize)]
pub struct RootSet {
    pub roots: Vec<BigComplex>,
    pub residuals: Vec<BigReal>,
    pub sweeps: usize,
    pub precision_bits: u32,
}

/// Default acceptance threshold at a given working precision: `2^(-prec/3)`.
/// Two Newton polishing steps afterwards push the backward error far below
/// this bound for simple roots.
pub fn default_tolerance(prec: u32) -> BigReal {
    BigReal::exp2_of(-((prec / 3) as i32), prec)
}

/// Finds all roots of `p` with multiplicity. `max_sweeps` bounds the Aberth
/// sweeps per precision stage.
///
/// The iteration always runs two stages: first at the polynomial's own
/// precision, then with the coefficients lifted exactly to twice that
/// precision. A root's backward error bounds its forward error only through
/// the local condition number, which grows exponentially with the degree for
/// clustered root sets, so the second stage iterates to a far tighter
/// residual than the first and the polish steps run on the lifted
/// coefficients. An explicit `tol` replaces the stage defaults of
/// [`default_tolerance`] at each stage's precision and is enforced in both
/// stages.
pub fn find_roots(
    p: &Polynomial,
    tol: Option<&BigReal>,
    max_sweeps: usize,
) -> Result<RootSet, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let prec = p.prec();

    // Exact zero roots split off before iteration.
    let origin_zeros = p.coeffs().iter().take_while(|c| c.is_zero()).count();
    let work = Polynomial::new(p.coeffs()[origin_zeros..].to_vec());
    let d = work.degree();

    let mut z = newton_polygon_guesses(&work, prec);
    let mut converged = vec![false; d];
    let mut sweeps_total = 0usize;
    let mut cur_prec = prec;
    let mut cur_poly = work.clone();

    for stage in 0..2 {
        if d == 0 {
            break;
        }
        if stage == 1 {
            // Exact lift: extending the mantissa adds zero bits, so the
            // iteration continues on the same polynomial, just evaluated
            // more accurately.
            cur_prec = prec * 2;
            cur_poly = work.with_prec(cur_prec);
            for zi in z.iter_mut() {
                *zi = zi.with_prec(cur_prec);
            }
            converged.fill(false);
        }
        let tol = match tol {
            Some(t) => t.clone(),
            None => default_tolerance(cur_prec),
        };

        for _ in 0..max_sweeps {
            sweeps_total += 1;
            let mut next = z.clone();
            let mut all_done = true;
            for i in 0..d {
                if converged[i] {
                    continue;
                }
                let (value, deriv) = cur_poly.evaluate_with_deriv(&z[i]);
                let gamma = cur_poly.eval_abs_bound(&z[i].abs());
                if value.abs() <= &tol * &gamma {
                    converged[i] = true;
                    continue;
                }
                all_done = false;
                if deriv.is_zero() {
                    // Saddle of the iteration map; nudge off it.
                    let eps = BigReal::exp2_of(-((cur_prec / 2) as i32), cur_prec);
                    next[i] = &z[i] + &BigComplex::new(eps.clone(), eps);
                    continue;
                }
                let newton = &value / &deriv;
                let mut repulsion = BigComplex::zero(cur_prec);
                for (j, zj) in z.iter().enumerate() {
                    if j == i {
                        continue;
                    }
                    let diff = &z[i] - zj;
                    if diff.is_zero() {
                        continue;
                    }
                    repulsion = &repulsion + &diff.recip();
                }
                let denom = &BigComplex::one(cur_prec) - &(&newton * &repulsion);
                let step = if denom.is_zero() { newton } else { &newton / &denom };
                next[i] = &z[i] - &step;
            }
            z = next;
            if all_done {
                break;
            }
        }
    }

    let unconverged = converged.iter().filter(|&&c| !c).count();
    if unconverged > 0 {
        return Err(RootError::NonConvergence {
            unconverged,
            total: d,
            sweeps: sweeps_total,
            precision_bits: cur_prec,
        });
    }

    // Two Newton polishing steps sharpen each accepted root toward full
    // working precision.
    for zi in z.iter_mut() {
        for _ in 0..2 {
            let (value, deriv) = cur_poly.evaluate_with_deriv(zi);
            if deriv.is_zero() {
                break;
            }
            *zi = &*zi - &(&value / &deriv);
        }
    }

    let mut entries: Vec<(BigComplex, BigReal)> = Vec::with_capacity(p.degree());
    for _ in 0..origin_zeros {
        entries.push((BigComplex::zero(prec), BigReal::zero(prec)));
    }
    for zi in z {
        let residual = {
            let value = cur_poly.evaluate(&zi).abs();
            let gamma = cur_poly.eval_abs_bound(&zi.abs());
            (&value / &gamma).with_prec(prec)
        };
        entries.push((zi.with_prec(prec), residual));
    }
    entries.sort_by(|a, b| {
        let (aa, ab) = (a.0.arg(), a.0.abs());
        let (ba, bb) = (b.0.arg(), b.0.abs());
        aa.partial_cmp(&ba)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(ab.partial_cmp(&bb).unwrap_or(std::cmp::Ordering::Equal))
    });
    let (roots, residuals) = entries.into_iter().unzip();
    Ok(RootSet { roots, residuals, sweeps: sweeps_total, precision_bits: prec })
}

/// Finds all roots of a polynomial known to have `x = 1` as a root of
/// multiplicity at least `m`: divides `(x-1)^m` out by synthetic division,
/// solves the quotient, and reports the unit root `m` times with the
/// backward error of the original polynomial at `1`.
///
/// Iterating on the full polynomial instead would stall: a multiplicity-`m`
/// cluster can only be resolved to diameter around `tol^(1/m)`.
pub fn find_roots_with_unit_multiplicity(
    p: &Polynomial,
    m: usize,
    tol: Option<&BigReal>,
    max_sweeps: usize,
) -> Result<RootSet, RootError> {
    if p.is_zero() {
        return Err(RootError::ZeroPolynomial);
    }
    let prec = p.prec();
    let quotient = p.deflate_unit_root(m).map_err(|_| RootError::ZeroPolynomial)?;
    let solved = find_roots(&quotient, tol, max_sweeps)?;

    let one = BigComplex::one(prec);
    let unit_residual = {
        let value = p.evaluate(&one).abs();
        let gamma = p.eval_abs_bound(&one.abs());
        &value / &gamma
    };
    let mut entries: Vec<(BigComplex, BigReal)> = solved
        .roots
        .into_iter()
        .zip(solved.residuals)
        .collect();
    for _ in 0..m {
        entries.push((one.clone(), unit_residual.clone()));
    }
    entries.sort_by(|a, b| {
        let (aa, ab) = (a.0.arg(), a.0.abs());
        let (ba, bb) = (b.0.arg(), b.0.abs());
        aa.partial_cmp(&ba)
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(ab.partial_cmp(&bb).unwrap_or(std::cmp::Ordering::Equal))
    });
    let (roots, residuals) = entries.into_iter().unzip();
    Ok(RootSet { roots, residuals, sweeps: solved.sweeps, precision_bits: prec })
}

/// Initial estimates on circles read off the upper convex hull of the
/// points `(j, log2 |a_j|)`: an edge from `k1` to `k2` predicts `k2 - k1`
/// root moduli near `(|a_(k1)| / |a_(k2)|)^(1/(k2-k1))`.
fn newton_polygon_guesses(p: &Polynomial, prec: u32) -> Vec<BigComplex> {
    let pts: Vec<(f64, f64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(j, c)| (j as f64, c.abs_log2()))
        .collect();

    // Monotone chain, keeping only clockwise turns: the upper hull.
    let mut hull: Vec<(f64, f64)> = Vec::with_capacity(pts.len());
    for &q in &pts {
        while hull.len() >= 2 {
            let a = hull[hull.len() - 2];
            let b = hull[hull.len() - 1];
            let cross = (b.0 - a.0) * (q.1 - b.1) - (b.1 - a.1) * (q.0 - b.0);
            if cross >= 0.0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(q);
    }

    let mut guesses = Vec::with_capacity(p.degree());
    for edge in hull.windows(2) {
        let (k1, h1) = edge[0];
        let (k2, h2) = edge[1];
        let m = (k2 - k1).round() as usize;
        let radius = BigReal::exp2_from_f64((h1 - h2) / (k2 - k1), prec);
        let two_pi = &BigReal::pi(prec) * &BigReal::from_u64(2, prec);
        for i in 0..m {
            // Irrational phase offset keeps estimates off the real axis and
            // off any symmetry axis of the root set.
            let frac = (i as f64 + 0.261_803_398_874_989_5) / m as f64;
            let theta = &two_pi * &BigReal::from_f64(frac, prec);
            let point = BigComplex::new(theta.cos(), theta.sin()).scale(&radius);
            guesses.push(point);
        }
    }
    guesses
}

/// Which support geometry a root set is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SupportMode {
    PositiveReal,
    UnitCircle,
}

/// Measured deviations of a root set from its claimed support.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SupportReport {
    pub mode: SupportMode,
    /// Largest `| |z| - 1 |` (unit-circle mode).
    pub max_unit_deviation: Option<f64>,
    /// Largest `|Im z| / |z|` (positive-real mode).
    pub max_imag_ratio: Option<f64>,
    /// Smallest real part (positive-real mode).
    pub min_real_part: Option<f64>,
}

impl SupportReport {
    /// True when every measured deviation is within `tol` and, in
    /// positive-real mode, all roots lie strictly right of zero.
    pub fn certifies(&self, tol: f64) -> bool {
        match self.mode {
            SupportMode::UnitCircle => self.max_unit_deviation.map_or(false, |d| d <= tol),
            SupportMode::PositiveReal => {
                self.max_imag_ratio.map_or(false, |d| d <= tol)
                    && self.min_real_part.map_or(false, |m| m > 0.0)
            }
        }
    }
}

/// Measures how far the roots sit from the claimed support set.
pub fn classify_support(roots: &[BigComplex], mode: SupportMode) -> SupportReport {
    match mode {
        SupportMode::UnitCircle => {
            let max_dev = roots
                .iter()
                .map(|z| {
                    let one = BigReal::one(z.prec());
                    (&z.abs() - &one).abs().to_f64()
                })
                .fold(0.0, f64::max);
            SupportReport {
                mode,
                max_unit_deviation: Some(max_dev),
                max_imag_ratio: None,
                min_real_part: None,
            }
        }
        SupportMode::PositiveReal => {
            let mut max_ratio = 0.0f64;
            let mut min_re = f64::INFINITY;
            for z in roots {
                let modulus = z.abs();
                if !modulus.is_zero() {
                    max_ratio = max_ratio.max((&z.im().abs() / &modulus).to_f64());
                } else {
                    min_re = 0.0;
                }
                min_re = min_re.min(z.re().to_f64());
            }
            SupportReport {
                mode,
                max_unit_deviation: None,
                max_imag_ratio: Some(max_ratio),
                min_real_part: Some(min_re),
            }
        }
    }
}

/// Greedily pairs each root with the closest candidate for its reciprocal
/// and returns the largest `|z_i * z_j - 1|` over the pairing. Small values
/// witness the reciprocal-pair symmetry of the root set.
pub fn reciprocal_pairing_deviation(roots: &[BigComplex]) -> f64 {
    let n = roots.len();
    let mut used = vec![false; n];
    let mut worst = 0.0f64;
    for i in 0..n {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut best: Option<(usize, f64)> = None;
        for (j, cand) in roots.iter().enumerate() {
            if used[j] && j != i {
                continue;
            }
            let one = BigComplex::one(cand.prec());
            let dev = (&(&roots[i] * cand) - &one).abs().to_f64();
            if best.map_or(true, |(_, b)| dev < b) {
                best = Some((j, dev));
            }
        }
        if let Some((j, dev)) = best {
            used[j] = true;
            worst = worst.max(dev);
        }
    }
    worst
}
