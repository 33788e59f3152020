//! Evaluating kernel α-harmonic mappings two ways — series with analytic
//! Wirtinger derivatives, and Poisson-type integral against boundary data —
//! plus the residual check of the defining equation.

use num_complex::Complex;
use rayon::prelude::*;

use crate::boundary::BoundaryFunction;
use crate::error::{Error, Result};
use crate::kernel::{kernel_value_unchecked, DiskPoint};
use crate::quad::{gauss_doubling_complex, periodic_mean_complex};
use crate::scalar::FloatScalar;
use crate::specfun::{p_alpha_k_family, p_alpha_k_prime_family, AlphaParameter, EvalPolicy};
use crate::spectrum::CoefficientSpectrum;

/// Pointwise record of a mapping: value, Wirtinger derivatives, and the
/// derived quantities `J_u = |u_z|² - |u_z̄|²`, `Λ_u = |u_z| + |u_z̄|`,
/// `λ_u = ||u_z| - |u_z̄||`, and the dilatation `ω = conj(u_z̄)/u_z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MapEvaluation<T> {
    pub u: Complex<T>,
    pub u_z: Complex<T>,
    pub u_zbar: Complex<T>,
    pub jacobian: T,
    pub lambda_big: T,
    pub lambda_small: T,
    /// `None` at critical points (u_z = 0).
    pub dilatation: Option<Complex<T>>,
}

impl<T: FloatScalar> MapEvaluation<T> {
    pub fn from_derivatives(u: Complex<T>, u_z: Complex<T>, u_zbar: Complex<T>) -> Self {
        let nz = u_z.norm();
        let nzb = u_zbar.norm();
        let jacobian = u_z.norm_sqr() - u_zbar.norm_sqr();
        let dilatation = if nz > T::zero() { Some(u_zbar.conj() / u_z) } else { None };
        Self {
            u,
            u_z,
            u_zbar,
            jacobian,
            lambda_big: nz + nzb,
            lambda_small: (nz - nzb).abs(),
            dilatation,
        }
    }
}

/// Tri-state sense-preservation verdict at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SenseVerdict {
    /// |u_z| > |u_z̄| strictly.
    Preserving,
    /// Both derivatives vanish here; whether the point is an isolated
    /// critical point needs global information, so it is only flagged.
    CriticalPoint,
    /// |u_z| ≤ |u_z̄| with the derivatives not both zero.
    NotPreserving,
}

/// Radius limit for the quadrature solver. The kernel peak narrows like
/// 1-|z|, so past this radius the advertised tolerances would quietly rot;
/// near-boundary work belongs to the series evaluator with a large K.
pub fn solver_radius_limit<T: FloatScalar>() -> T {
    T::from(0.95).unwrap()
}

/// Series evaluation of the mapping defined by `s` at `z`:
///
/// `u(z) = Σ_{k≥0} c_k z^k + Σ_{k≥1} c_{-k} P_{α,k}(|z|²) z̄^k`
///
/// with analytic derivatives. Writing x = |z|² (so ∂x/∂z = z̄, ∂x/∂z̄ = z),
/// each anti-analytic term contributes
/// `∂_z = c_{-k} P'_{α,k}(x) z̄^{k+1}` and
/// `∂_z̄ = c_{-k} (P'_{α,k}(x) z z̄^k + k P_{α,k}(x) z̄^{k-1})`.
pub fn eval_series<T: FloatScalar>(
    s: &CoefficientSpectrum<T>,
    z: DiskPoint<T>,
    policy: &EvalPolicy<T>,
) -> Result<MapEvaluation<T>> {
    let zc = z.get();
    let zb = zc.conj();
    let x = z.norm_sqr();
    let zero = Complex::new(T::zero(), T::zero());

    let neg_max = s
        .iter()
        .filter(|(k, _)| *k < 0)
        .map(|(k, _)| k.unsigned_abs())
        .max()
        .unwrap_or(0);
    let (p, dp) = if neg_max > 0 {
        (
            p_alpha_k_family(s.alpha(), neg_max, x, policy)?,
            p_alpha_k_prime_family(s.alpha(), neg_max, x, policy)?,
        )
    } else {
        (Vec::new(), Vec::new())
    };

    let mut u = zero;
    let mut u_z = zero;
    let mut u_zbar = zero;
    for (k, c) in s.iter() {
        if k >= 0 {
            let kk = k as u32;
            u = u + c * zc.powu(kk);
            if kk >= 1 {
                u_z = u_z + c * zc.powu(kk - 1) * T::from(kk).unwrap();
            }
        } else {
            let kk = k.unsigned_abs();
            let pk = p[(kk - 1) as usize];
            let dpk = dp[(kk - 1) as usize];
            let zb_pow = zb.powu(kk - 1);
            u = u + c * zb_pow * zb * pk;
            u_z = u_z + c * zb_pow * zb * zb * dpk;
            u_zbar = u_zbar + c * (zb_pow * zb * zc * dpk + zb_pow * (T::from(kk).unwrap() * pk));
        }
    }
    Ok(MapEvaluation::from_derivatives(u, u_z, u_zbar))
}

/// Poisson-type integral solution of the weighted Dirichlet problem at `z`:
/// `(1/2π) ∫ 𝒫_α(z e^{-iφ}) b(φ) dφ`.
///
/// Step boundaries are integrated arc by arc (the integrand jumps at arc
/// ends, where uniform rules lose their accuracy); smooth boundaries use the
/// periodic trapezoid rule. Refuses `|z|` beyond [`solver_radius_limit`].
pub fn solve_dirichlet<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    b: &BoundaryFunction<T>,
    z: DiskPoint<T>,
    policy: &EvalPolicy<T>,
) -> Result<Complex<T>> {
    let r = z.norm_sqr().sqrt();
    if r > solver_radius_limit() {
        return Err(Error::Domain(format!(
            "quadrature solver refuses |z| = {r} > {}; evaluate the series instead",
            solver_radius_limit::<T>()
        )));
    }
    let a = alpha.get();
    let zc = z.get();
    let two_pi = T::PI() + T::PI();
    let kernel_at = move |phi: T| kernel_value_unchecked(a, zc * Complex::from_polar(T::one(), -phi));

    match b {
        BoundaryFunction::StepPhase { arcs } => {
            let n = arcs.len();
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                let a0 = arcs[j].phi_start;
                let a1 = if j + 1 < n { arcs[j + 1].phi_start } else { two_pi };
                let val = Complex::from_polar(T::one(), arcs[j].theta);
                let piece = gauss_doubling_complex(
                    &kernel_at,
                    a0,
                    a1,
                    policy.rel_tol,
                    policy.quadrature_order.max(16),
                    18,
                )?;
                acc = acc + val * piece;
            }
            Ok(acc / two_pi)
        }
        _ => {
            let f = move |phi: T| kernel_at(phi) * b.value_at(phi);
            periodic_mean_complex(&f, policy.rel_tol, 64, 20)
        }
    }
}

/// Dirichlet solution on the `grid_n × grid_n` Cartesian grid over
/// `[-1,1]²`, keeping points with `|z| ≤` [`solver_radius_limit`]. Row-major
/// order (y from -1 up, x from -1 up within a row); evaluation is
/// parallelized per point, which cannot change any value.
pub fn solve_grid<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    b: &BoundaryFunction<T>,
    grid_n: usize,
    policy: &EvalPolicy<T>,
) -> Result<Vec<(DiskPoint<T>, Complex<T>)>> {
    grid_points(grid_n, solver_radius_limit::<T>())?
        .into_par_iter()
        .map(|z| solve_dirichlet(alpha, b, z, policy).map(|u| (z, u)))
        .collect()
}

/// Series evaluation on the same Cartesian grid with a configurable radius
/// cap (the series stays accurate closer to the boundary than the
/// quadrature solver does).
pub fn series_grid<T: FloatScalar>(
    s: &CoefficientSpectrum<T>,
    grid_n: usize,
    radius_cap: T,
    policy: &EvalPolicy<T>,
) -> Result<Vec<(DiskPoint<T>, MapEvaluation<T>)>> {
    if !(radius_cap > T::zero()) || radius_cap >= T::one() {
        return Err(Error::Domain("radius cap must lie in (0, 1)".into()));
    }
    grid_points(grid_n, radius_cap)?
        .into_par_iter()
        .map(|z| eval_series(s, z, policy).map(|ev| (z, ev)))
        .collect()
}

fn grid_points<T: FloatScalar>(grid_n: usize, cap: T) -> Result<Vec<DiskPoint<T>>> {
    if grid_n < 2 {
        return Err(Error::Domain("grid_n must be at least 2".into()));
    }
    let n1 = T::from(grid_n - 1).unwrap();
    let two = T::from(2.0).unwrap();
    let cap_sq = cap * cap;
    let mut pts = Vec::new();
    for iy in 0..grid_n {
        let y = -T::one() + two * T::from(iy).unwrap() / n1;
        for ix in 0..grid_n {
            let x = -T::one() + two * T::from(ix).unwrap() / n1;
            if x * x + y * y <= cap_sq {
                pts.push(DiskPoint::new(Complex::new(x, y)).expect("inside the disk"));
            }
        }
    }
    Ok(pts)
}

/// Residual of the defining equation `∂_z ((1-|z|²)^{-α} ∂_z̄ u) = 0` at `z`.
///
/// The inner factor `w = (1-|·|²)^{-α} u_z̄` is evaluated analytically from
/// the series at the four stencil points `z ± h, z ± ih`; only the outer
/// `∂_z` is discretized (`(∂_x - i∂_y)/2`, central differences). Keeping the
/// inner derivative analytic makes the residual sensitive to mistakes in the
/// derivative formulas instead of drowning them in double-discretization
/// error.
pub fn pde_residual<T: FloatScalar>(
    s: &CoefficientSpectrum<T>,
    z: DiskPoint<T>,
    h: T,
) -> Result<T> {
    let lo = T::from(1e-6).unwrap();
    let hi = T::from(1e-2).unwrap();
    if !(h > lo) || !(h < hi) {
        return Err(Error::Domain(format!("stencil width h={h} outside (1e-6, 1e-2)")));
    }
    let two = T::from(2.0).unwrap();
    if z.norm_sqr().sqrt() + two * h >= T::one() {
        return Err(Error::Domain("stencil must stay inside the disk: need |z| + 2h < 1".into()));
    }
    let policy = EvalPolicy::default();
    let a = s.alpha().get();
    let w_at = |p: Complex<T>| -> Result<Complex<T>> {
        let dp = DiskPoint::new(p).expect("stencil stays inside the disk");
        let ev = eval_series(s, dp, &policy)?;
        let weight = (T::one() - p.norm_sqr()).powf(-a);
        Ok(ev.u_zbar * weight)
    };
    let zc = z.get();
    let re_h = Complex::new(h, T::zero());
    let im_h = Complex::new(T::zero(), h);
    let dx = (w_at(zc + re_h)? - w_at(zc - re_h)?) / (two * h);
    let dy = (w_at(zc + im_h)? - w_at(zc - im_h)?) / (two * h);
    let dz = (dx - Complex::<T>::i() * dy) / two;
    Ok(dz.norm())
}

/// Sense-preservation at a point: strictly `|u_z| > |u_z̄|`. A point where
/// both derivatives vanish is reported as [`SenseVerdict::CriticalPoint`]
/// (it may be an isolated critical point of a sense-preserving map, which
/// only global information can decide); `u_z = 0` with `u_z̄ ≠ 0` means
/// J < 0 and is definitively [`SenseVerdict::NotPreserving`].
pub fn sense_preserving_at<T: FloatScalar>(
    s: &CoefficientSpectrum<T>,
    z: DiskPoint<T>,
    policy: &EvalPolicy<T>,
) -> Result<SenseVerdict> {
    let ev = eval_series(s, z, policy)?;
    if ev.u_z.norm() == T::zero() && ev.u_zbar.norm() == T::zero() {
        return Ok(SenseVerdict::CriticalPoint);
    }
    if ev.u_z.norm() > ev.u_zbar.norm() {
        Ok(SenseVerdict::Preserving)
    } else {
        Ok(SenseVerdict::NotPreserving)
    }
}
