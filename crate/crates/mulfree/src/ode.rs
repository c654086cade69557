//! Moment evolution systems in the family time parameters.
//!
//! The scaled Hermite realization's mean power sums close into a quadratic
//! ODE system in `s`; the Laguerre realization's close into an exact
//! difference recursion in the exponent `c`, which becomes an ODE in
//! `gamma = c/n` in the large-degree limit. The continuous flows are
//! integrated with classical fourth-order Runge-Kutta; the discrete one is
//! iterated exactly.

use crate::scalar::{BigComplex, BigReal};
use crate::series::BellTable;

/// Errors from evolution-system setup.
#[derive(Debug, thiserror::Error)]
pub enum OdeError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Degree regime of a moment flow: a finite degree keeps the dissipative
/// `k^2/(2n)` term, the limit drops it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Finite(usize),
    Limit,
}

fn axpy(y: &[BigComplex], k: &[BigComplex], h: &BigReal) -> Vec<BigComplex> {
    y.iter().zip(k).map(|(yi, ki)| yi + &ki.scale(h)).collect()
}

/// Classical fourth-order Runge-Kutta with a fixed step count from `t0` to
/// `t1` (either direction). The observer sees every grid point, including
/// the initial one.
pub fn rk4_integrate<F>(
    rhs: F,
    y0: Vec<BigComplex>,
    t0: &BigReal,
    t1: &BigReal,
    steps: usize,
    mut observer: impl FnMut(&BigReal, &[BigComplex]),
) -> Vec<BigComplex>
where
    F: Fn(&BigReal, &[BigComplex]) -> Vec<BigComplex>,
{
    assert!(steps > 0, "integration needs at least one step");
    let prec = t0.prec().max(t1.prec());
    let h = &(t1 - t0) / &BigReal::from_u64(steps as u64, prec);
    let half = &h / &BigReal::from_u64(2, prec);
    let sixth = &h / &BigReal::from_u64(6, prec);
    let two = BigReal::from_u64(2, prec);

    let mut t = t0.clone();
    let mut y = y0;
    observer(&t, &y);
    for step in 0..steps {
        let t_half = &t + &half;
        let k1 = rhs(&t, &y);
        let k2 = rhs(&t_half, &axpy(&y, &k1, &half));
        let k3 = rhs(&t_half, &axpy(&y, &k2, &half));
        // Full-step node computed from the start point to avoid drift.
        let t_next = t0 + &(&h * &BigReal::from_u64(step as u64 + 1, prec));
        let k4 = rhs(&t_next, &axpy(&y, &k3, &h));
        y = y
            .iter()
            .enumerate()
            .map(|(i, yi)| {
                let sum = &(&k1[i] + &k4[i]) + &(&(&k2[i] + &k3[i]).scale(&two));
                yi + &sum.scale(&sixth)
            })
            .collect();
        t = t_next;
        observer(&t, &y);
    }
    y
}

/// Right-hand side of the closed moment flow of the scaled Hermite
/// realization: with `sigma_0 = 1`,
/// `sigma_k' = (k/2) sum_(j=0)^(k) sigma_j sigma_(k-j) - k^2/(2n) sigma_k`,
/// the last term dropped in the limit regime.
fn hermite_rhs(degree: Degree, state: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let k_max = state.len();
    let one = BigComplex::one(prec);
    let at = |j: usize| -> &BigComplex {
        if j == 0 {
            &one
        } else {
            &state[j - 1]
        }
    };
    (1..=k_max)
        .map(|k| {
            let mut conv = BigComplex::zero(prec);
            for j in 0..=k {
                conv = &conv + &(at(j) * at(k - j));
            }
            let half_k = &BigReal::from_u64(k as u64, prec) / &BigReal::from_u64(2, prec);
            let mut out = conv.scale(&half_k);
            if let Degree::Finite(n) = degree {
                let damp = &BigReal::from_u64((k * k) as u64, prec)
                    / &BigReal::from_u64(2 * n as u64, prec);
                out = &out - &state[k - 1].scale(&damp);
            }
            out
        })
        .collect()
}

/// Integrates the moment flow from all-ones initial data at `s = 0` to
/// `s_target`, returning the grid trajectory of `(s, sigma_1 ..= sigma_k_max)`.
pub fn hermite_moment_flow_trajectory(
    degree: Degree,
    k_max: usize,
    s_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Vec<(BigReal, Vec<BigComplex>)> {
    let s_target = s_target.with_prec(prec);
    let y0 = vec![BigComplex::one(prec); k_max];
    let mut trajectory = Vec::with_capacity(steps + 1);
    rk4_integrate(
        |_, y| hermite_rhs(degree, y, prec),
        y0,
        &BigReal::zero(prec),
        &s_target,
        steps,
        |t, y| trajectory.push((t.clone(), y.to_vec())),
    );
    trajectory
}

/// Endpoint state of [`hermite_moment_flow_trajectory`].
pub fn hermite_moment_flow(
    degree: Degree,
    k_max: usize,
    s_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Vec<BigComplex> {
    let s_target = s_target.with_prec(prec);
    let y0 = vec![BigComplex::one(prec); k_max];
    rk4_integrate(
        |_, y| hermite_rhs(degree, y, prec),
        y0,
        &BigReal::zero(prec),
        &s_target,
        steps,
        |_, _| {},
    )
}

/// Right-hand side of the interaction-picture system: substituting
/// `sigma_k = exp((k - k^2/(2n)) s) eta_k` removes the linear part and leaves
/// `eta_k' = (k/2) sum_(j=1)^(k-1) exp(j(k-j) s/n) eta_j eta_(k-j)`,
/// with unit weights in the limit regime. `eta_1` is conserved.
fn eta_rhs(degree: Degree, s: &BigReal, state: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let k_max = state.len();
    (1..=k_max)
        .map(|k| {
            let mut acc = BigComplex::zero(prec);
            for j in 1..k {
                let mut term = &state[j - 1] * &state[k - j - 1];
                if let Degree::Finite(n) = degree {
                    let expo = &(s * &BigReal::from_u64((j * (k - j)) as u64, prec))
                        / &BigReal::from_u64(n as u64, prec);
                    term = term.scale(&expo.exp());
                }
                acc = &acc + &term;
            }
            let half_k = &BigReal::from_u64(k as u64, prec) / &BigReal::from_u64(2, prec);
            acc.scale(&half_k)
        })
        .collect()
}

/// Integrates the interaction-picture system from all-ones data to
/// `s_target` for one regime.
pub fn hermite_eta_flow(
    degree: Degree,
    k_max: usize,
    s_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Vec<BigComplex> {
    let s_target = s_target.with_prec(prec);
    let y0 = vec![BigComplex::one(prec); k_max];
    rk4_integrate(
        |s, y| eta_rhs(degree, s, y, prec),
        y0,
        &BigReal::zero(prec),
        &s_target,
        steps,
        |_, _| {},
    )
}

/// Supremum over the integration grid of `|eta_(k;n) - eta_(k;limit)|` for
/// each `k`, with both systems integrated jointly on the same grid. The gap
/// decays like `1/n` at fixed `s`.
pub fn hermite_eta_gaps(
    n: usize,
    k_max: usize,
    s_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Vec<f64> {
    let s_target = s_target.with_prec(prec);
    // Joint state: first k_max entries finite-n, last k_max entries limit.
    let y0 = vec![BigComplex::one(prec); 2 * k_max];
    let mut gaps = vec![0.0f64; k_max];
    rk4_integrate(
        |s, y| {
            let mut out = eta_rhs(Degree::Finite(n), s, &y[..k_max], prec);
            out.extend(eta_rhs(Degree::Limit, s, &y[k_max..], prec));
            out
        },
        y0,
        &BigReal::zero(prec),
        &s_target,
        steps,
        |_, y| {
            for k in 0..k_max {
                let gap = (&y[k] - &y[k_max + k]).abs().to_f64();
                if gap > gaps[k] {
                    gaps[k] = gap;
                }
            }
        },
    );
    gaps
}

/// Exact difference recursion for the Laguerre realization's mean power sums
/// in the exponent: one step changes the moments by
/// `sigma_k(c+1) - sigma_k(c) =
///  -1/(b+n) sum_(j=1)^(k) j sigma_j(c) B_(k-j)(sigma; -n/(b+n))`,
/// where `B_m(x; y)` is the weighted ordinary Bell polynomial row sum.
///
/// Returns the trajectory `sigma(0), ..., sigma(c_max)`, each entry holding
/// `sigma_1 ..= sigma_k_max`; the start is all ones.
pub fn laguerre_moment_recursion(
    n: usize,
    b: &BigComplex,
    k_max: usize,
    c_max: usize,
    prec: u32,
) -> Result<Vec<Vec<BigComplex>>, OdeError> {
    let b = b.with_prec(prec);
    let b_plus_n = &b + &BigComplex::from_real(BigReal::from_u64(n as u64, prec));
    if b_plus_n.is_zero() {
        return Err(OdeError::InvalidParameter("b = -n makes the recursion singular".into()));
    }
    let neg_inv = -&b_plus_n.recip();
    let weight = neg_inv.scale(&BigReal::from_u64(n as u64, prec));

    let mut sigma = vec![BigComplex::one(prec); k_max];
    let mut trajectory = Vec::with_capacity(c_max + 1);
    trajectory.push(sigma.clone());
    for _ in 0..c_max {
        let bell = BellTable::new(&sigma, k_max.saturating_sub(1));
        let next: Vec<BigComplex> = (1..=k_max)
            .map(|k| {
                let mut acc = BigComplex::zero(prec);
                for j in 1..=k {
                    let j_real = BigReal::from_u64(j as u64, prec);
                    let term = sigma[j - 1].scale(&j_real);
                    acc = &acc + &(&term * &bell.weighted(k - j, &weight));
                }
                &sigma[k - 1] + &(&acc * &neg_inv)
            })
            .collect();
        sigma = next;
        trajectory.push(sigma.clone());
    }
    Ok(trajectory)
}

/// One grid point of the limit flow in `gamma`: the interaction-picture
/// state `g` and the physical moments `f_k = exp(alpha gamma k) g_k`, which
/// converge to the multiplicative Poisson moments.
#[derive(Clone, Debug)]
pub struct LimitFlowPoint {
    pub gamma: BigReal,
    pub g: Vec<BigComplex>,
    pub f: Vec<BigComplex>,
}

/// Right-hand side of the limit flow: with `alpha = -1/(1+beta)`,
/// `g_k' = alpha sum_(j=1)^(k-1) j g_j B_(k-j)(g; alpha)`.
fn laguerre_limit_rhs(alpha: &BigComplex, state: &[BigComplex], prec: u32) -> Vec<BigComplex> {
    let k_max = state.len();
    let bell = BellTable::new(state, k_max.saturating_sub(1));
    (1..=k_max)
        .map(|k| {
            let mut acc = BigComplex::zero(prec);
            for j in 1..k {
                let j_real = BigReal::from_u64(j as u64, prec);
                let term = state[j - 1].scale(&j_real);
                acc = &acc + &(&term * &bell.weighted(k - j, alpha));
            }
            &acc * alpha
        })
        .collect()
}

/// Integrates the limit flow from all-ones data at `gamma = 0` to
/// `gamma_target`, returning the grid trajectory with both state pictures.
pub fn laguerre_limit_flow_trajectory(
    beta: &BigComplex,
    k_max: usize,
    gamma_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Result<Vec<LimitFlowPoint>, OdeError> {
    let beta = beta.with_prec(prec);
    let gamma_target = gamma_target.with_prec(prec);
    let one_plus_beta = &BigComplex::one(prec) + &beta;
    if one_plus_beta.is_zero() {
        return Err(OdeError::InvalidParameter("beta = -1 is outside the family".into()));
    }
    let alpha = -&one_plus_beta.recip();

    let y0 = vec![BigComplex::one(prec); k_max];
    let mut trajectory = Vec::with_capacity(steps + 1);
    rk4_integrate(
        |_, y| laguerre_limit_rhs(&alpha, y, prec),
        y0,
        &BigReal::zero(prec),
        &gamma_target,
        steps,
        |gamma, g| {
            let factor = alpha.scale(gamma).exp();
            let mut f = Vec::with_capacity(k_max);
            let mut pow = BigComplex::one(prec);
            for gk in g {
                pow = &pow * &factor;
                f.push(gk * &pow);
            }
            trajectory.push(LimitFlowPoint { gamma: gamma.clone(), g: g.to_vec(), f });
        },
    );
    Ok(trajectory)
}

/// Endpoint of [`laguerre_limit_flow_trajectory`].
pub fn laguerre_limit_flow(
    beta: &BigComplex,
    k_max: usize,
    gamma_target: &BigReal,
    steps: usize,
    prec: u32,
) -> Result<LimitFlowPoint, OdeError> {
    let mut trajectory = laguerre_limit_flow_trajectory(beta, k_max, gamma_target, steps, prec)?;
    Ok(trajectory.pop().expect("trajectory contains at least the initial point"))
}
