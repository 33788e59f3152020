//! The complex-valued Poisson-type kernel, the radial weight, and the kernel
//! mass that bounds solutions.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::quad::periodic_mean_real;
use crate::scalar::FloatScalar;
use crate::specfun::{p_alpha_k, AlphaParameter, EvalPolicy};
use crate::specfun::p_alpha_k_at_one;

/// A point of the open unit disk; constructors reject |z| ≥ 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DiskPoint<T>(Complex<T>);

impl<T: FloatScalar> DiskPoint<T> {
    pub fn new(z: Complex<T>) -> Result<Self> {
        if !z.re.is_finite() || !z.im.is_finite() || z.norm_sqr() >= T::one() {
            return Err(Error::Domain(format!(
                "disk points require |z| < 1, got |z| = {}",
                z.norm_sqr().sqrt()
            )));
        }
        Ok(Self(z))
    }

    pub fn from_re_im(re: T, im: T) -> Result<Self> {
        Self::new(Complex::new(re, im))
    }

    pub fn get(self) -> Complex<T> {
        self.0
    }

    /// |z|²
    pub fn norm_sqr(self) -> T {
        self.0.norm_sqr()
    }
}

/// The radial weight `(1-|z|²)^α`; positive on the whole disk.
pub fn weight<T: FloatScalar>(alpha: AlphaParameter<T>, z: DiskPoint<T>) -> T {
    (T::one() - z.norm_sqr()).powf(alpha.get())
}

/// Kernel value at an arbitrary interior complex argument. Kept separate from
/// [`poisson_kernel`] so integrators can rotate `z e^{-iφ}` without paying a
/// domain check per node.
pub(crate) fn kernel_value_unchecked<T: FloatScalar>(alpha: T, w: Complex<T>) -> Complex<T> {
    let one = T::one();
    let a1 = alpha + one;
    let num = (one - w.norm_sqr()).powf(a1);
    let den = (Complex::new(one, T::zero()) - w) * (Complex::new(one, T::zero()) - w.conj()).powf(a1);
    Complex::new(num, T::zero()) / den
}

/// The Poisson-type kernel `(1-|z|²)^{α+1} / ((1-z)(1-z̄)^{α+1})`.
///
/// The complex power takes the principal branch; `Re(1-z̄) > 0` on the disk,
/// so the branch cut is never approached. At α = 0 this reduces to the
/// classical Poisson kernel `(1-|z|²)/|1-z|²`.
pub fn poisson_kernel<T: FloatScalar>(alpha: AlphaParameter<T>, z: DiskPoint<T>) -> Complex<T> {
    kernel_value_unchecked(alpha.get(), z.get())
}

/// Radius beyond which the kernel-mass quadrature refuses to run; the kernel
/// peak narrows like 1-|z| and uniform sampling loses accuracy there.
pub fn kernel_mass_radius_limit<T: FloatScalar>() -> T {
    T::from(0.999).unwrap()
}

/// `(1/2π) ∫₀^{2π} |𝒫_α(z e^{-iφ})| dφ`, by periodic trapezoid doubling.
///
/// The mean of the modulus dominates the modulus of the mean, and the zeroth
/// Fourier mode of the kernel is 1, so the result is ≥ 1. Its supremum over
/// the disk is bounded by the Gamma ratio `g(α)` (a measured bound; see the
/// verification suite).
pub fn kernel_mass<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    z: DiskPoint<T>,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    let r = z.norm_sqr().sqrt();
    if r > kernel_mass_radius_limit() {
        return Err(Error::Convergence(format!(
            "kernel mass quadrature refuses |z| = {r} > {}",
            kernel_mass_radius_limit::<T>()
        )));
    }
    let a = alpha.get();
    let zc = z.get();
    // |𝒫_α(w)| = (1-|z|²)^{α+1} / |1-w|^{α+2}: smooth and periodic in φ.
    let f = move |phi: T| {
        let w = zc * Complex::from_polar(T::one(), -phi);
        let one = T::one();
        let num = (one - w.norm_sqr()).powf(a + one);
        let den = (Complex::new(one, T::zero()) - w).norm().powf(a + one + one);
        num / den
    };
    periodic_mean_real(&f, policy.rel_tol.max(T::from(1e-14).unwrap()), 64, 22)
}

/// One term of the kernel's two-sided expansion: `z^k` for k ≥ 0, and
/// `P_{α,|k|}(|z|²) z̄^{|k|} / B(|k|, α+1)` for k < 0.
pub fn kernel_expansion_term<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k: i32,
    z: DiskPoint<T>,
    policy: &EvalPolicy<T>,
) -> Result<Complex<T>> {
    if k >= 0 {
        return Ok(z.get().powu(k as u32));
    }
    let m = k.unsigned_abs();
    let p = p_alpha_k(alpha, m, z.norm_sqr(), policy)?;
    let b = p_alpha_k_at_one(alpha, m);
    Ok(z.get().conj().powu(m) * (p / b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quad::periodic_mean_complex;
    use crate::specfun::g_ratio;
    use approx::assert_relative_eq;

    type C = Complex<f64>;

    fn alpha(a: f64) -> AlphaParameter<f64> {
        AlphaParameter::new(a).unwrap()
    }

    fn pt(re: f64, im: f64) -> DiskPoint<f64> {
        DiskPoint::from_re_im(re, im).unwrap()
    }

    #[test]
    fn disk_point_rejects_boundary_and_outside() {
        assert!(DiskPoint::from_re_im(1.0, 0.0).is_err());
        assert!(DiskPoint::from_re_im(0.8, 0.7).is_err());
        assert!(DiskPoint::from_re_im(f64::NAN, 0.0).is_err());
        assert!(DiskPoint::from_re_im(0.99, 0.0).is_ok());
    }

    #[test]
    fn weight_values() {
        assert_relative_eq!(weight(alpha(3.3), pt(0.0, 0.0)), 1.0);
        // |z|² = 0.5, α = 2 → 0.25
        let z = pt(0.5f64.sqrt(), 0.0);
        assert_relative_eq!(weight(alpha(2.0), z), 0.25, max_relative = 1e-13);
        // |z|² = 0.75, α = -1/2 → 2
        let z = pt(0.75f64.sqrt(), 0.0);
        assert_relative_eq!(weight(alpha(-0.5), z), 2.0, max_relative = 1e-13);
    }

    #[test]
    fn kernel_simple_values() {
        assert_relative_eq!(
            poisson_kernel(alpha(1.7), pt(0.0, 0.0)).re,
            1.0,
            max_relative = 1e-15
        );
        // classical kernel at z = 1/2: 0.75/0.25 = 3
        let v = poisson_kernel(alpha(0.0), pt(0.5, 0.0));
        assert_relative_eq!(v.re, 3.0, max_relative = 1e-14);
        assert_relative_eq!(v.im, 0.0, epsilon = 1e-15);
        // α = 1 at z = 1/2: 0.5625/0.125 = 4.5
        let v = poisson_kernel(alpha(1.0), pt(0.5, 0.0));
        assert_relative_eq!(v.re, 4.5, max_relative = 1e-14);
    }

    #[test]
    fn kernel_alpha_zero_reduction() {
        // 𝒫₀(z) = (1-|z|²)/|1-z|² for every z, real-valued
        for &(re, im) in &[(0.3, 0.4), (-0.7, 0.2), (0.0, 0.9), (0.55, -0.55)] {
            let z = pt(re, im);
            let v = poisson_kernel(alpha(0.0), z);
            let w = z.get();
            let classical = (1.0 - w.norm_sqr()) / (C::new(1.0, 0.0) - w).norm_sqr();
            assert_relative_eq!(v.re, classical, max_relative = 1e-13);
            assert!(v.im.abs() < 1e-14);
        }
    }

    #[test]
    fn kernel_real_on_real_axis() {
        for &a in &[-0.5, 0.3, 2.5] {
            for &x in &[-0.9, -0.2, 0.6] {
                let v = poisson_kernel(alpha(a), pt(x, 0.0));
                assert!(v.im.abs() < 1e-14, "kernel not real at real z={x}, α={a}");
            }
        }
    }

    #[test]
    fn mass_trivial_cases() {
        let pol = EvalPolicy::default();
        assert_relative_eq!(
            kernel_mass(alpha(2.2), pt(0.0, 0.0), &pol).unwrap(),
            1.0,
            max_relative = 1e-12
        );
        // classical kernel is positive with unit mean
        for &(re, im) in &[(0.5, 0.0), (0.2, -0.6), (0.0, 0.9)] {
            let m = kernel_mass(alpha(0.0), pt(re, im), &pol).unwrap();
            assert_relative_eq!(m, 1.0, max_relative = 1e-10);
        }
    }

    #[test]
    fn mass_reference_and_bound() {
        let pol = EvalPolicy::default();
        // mpmath: 1.08450773158 at α=-1/2, z=0.9
        let m = kernel_mass(alpha(-0.5), pt(0.9, 0.0), &pol).unwrap();
        assert_relative_eq!(m, 1.08450773158, max_relative = 1e-8);
        assert!(m <= g_ratio(alpha(-0.5)) + 1e-6);
        // mpmath: 2.28262683375 at α=2.5, z=0.9
        let m = kernel_mass(alpha(2.5), pt(0.9, 0.0), &pol).unwrap();
        assert_relative_eq!(m, 2.28262683375, max_relative = 1e-8);
        assert!(m >= 1.0 - 1e-12);
    }

    #[test]
    fn mass_refuses_near_boundary() {
        let pol = EvalPolicy::default();
        let z = pt(0.9995, 0.0);
        assert!(matches!(
            kernel_mass(alpha(0.5), z, &pol),
            Err(Error::Convergence(_))
        ));
    }

    #[test]
    fn expansion_term_shapes() {
        let pol = EvalPolicy::default();
        let z = pt(0.3, -0.2);
        let one = kernel_expansion_term(alpha(1.3), 0, z, &pol).unwrap();
        assert_relative_eq!(one.re, 1.0, max_relative = 1e-15);
        let sq = kernel_expansion_term(alpha(1.3), 2, z, &pol).unwrap();
        let w = z.get() * z.get();
        assert_relative_eq!(sq.re, w.re, max_relative = 1e-14);
        assert_relative_eq!(sq.im, w.im, max_relative = 1e-14);
        // k = -1 term carries (α+1)·P_{α,1}(|z|²)·z̄
        let a = 0.7;
        let term = kernel_expansion_term(alpha(a), -1, z, &pol).unwrap();
        let p = p_alpha_k(alpha(a), 1, z.norm_sqr(), &pol).unwrap();
        let expect = z.get().conj() * ((a + 1.0) * p);
        assert_relative_eq!(term.re, expect.re, max_relative = 1e-12);
        assert_relative_eq!(term.im, expect.im, max_relative = 1e-12);
    }

    #[test]
    fn expansion_matches_fourier_modes_of_kernel() {
        // (1/2π)∫ 𝒫_α(z e^{-iφ}) e^{ikφ} dφ recovers each expansion term.
        let pol = EvalPolicy::default();
        let mut state = 123456789u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1);
            (state >> 11) as f64 / (1u64 << 53) as f64
        };
        for &a in &[-0.5, 0.0, 1.0, 2.5] {
            for _ in 0..5 {
                let r = 0.9 * next().sqrt();
                let t = 2.0 * std::f64::consts::PI * next();
                let z = pt(r * t.cos(), r * t.sin());
                for k in -4i32..=4 {
                    let quad = periodic_mean_complex(
                        &|phi: f64| {
                            let w = z.get() * C::from_polar(1.0, -phi);
                            kernel_value_unchecked(a, w) * C::from_polar(1.0, k as f64 * phi)
                        },
                        1e-12,
                        64,
                        18,
                    )
                    .unwrap();
                    let term = kernel_expansion_term(alpha(a), k, z, &pol).unwrap();
                    assert!(
                        (quad - term).norm() <= 1e-8,
                        "mode {k} mismatch at α={a}, z={:?}: {:?} vs {:?}",
                        z.get(),
                        quad,
                        term
                    );
                }
            }
        }
    }
}
