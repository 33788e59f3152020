//! Special functions the rest of the toolkit is built on: Γ, B, digamma,
//! the kernel coefficient functions `P_{α,k}` with derivative, and the
//! Gamma ratio `g(α) = Γ(α+1)/Γ(α/2+1)²`.
//!
//! Everything here is a pure function of its arguments and safe to call
//! concurrently.

mod coeff;
mod gamma;

pub use coeff::{
    p_alpha_k, p_alpha_k_family, p_alpha_k_prime, p_alpha_k_prime_family, p_alpha_k_quadrature,
    p_alpha_k_series,
};

use crate::error::{Error, Result};
use crate::scalar::FloatScalar;

/// The weight exponent α > -1 governing every kernel and coefficient.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AlphaParameter<T>(T);

impl<T: FloatScalar> AlphaParameter<T> {
    /// Rejects anything not strictly above -1 (or non-finite).
    pub fn new(alpha: T) -> Result<Self> {
        if !alpha.is_finite() || alpha <= -T::one() {
            return Err(Error::Domain(format!(
                "weight exponent must satisfy alpha > -1, got {alpha}"
            )));
        }
        Ok(Self(alpha))
    }

    pub fn get(self) -> T {
        self.0
    }
}

/// Budget and tolerance knobs for series and quadrature evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalPolicy<T> {
    /// Relative tolerance targeted by iterative evaluators.
    pub rel_tol: T,
    /// Series term budget before a convergence failure is reported.
    pub max_terms: usize,
    /// Gauss rule order used by quadrature routes.
    pub quadrature_order: usize,
}

impl<T: FloatScalar> EvalPolicy<T> {
    pub fn new(rel_tol: T, max_terms: usize, quadrature_order: usize) -> Result<Self> {
        if !(rel_tol > T::zero()) {
            return Err(Error::Domain("rel_tol must be positive".into()));
        }
        if max_terms < 1 {
            return Err(Error::Domain("max_terms must be at least 1".into()));
        }
        if quadrature_order < 2 {
            return Err(Error::Domain("quadrature_order must be at least 2".into()));
        }
        Ok(Self { rel_tol, max_terms, quadrature_order })
    }

    /// Same policy with a different relative tolerance.
    pub fn with_rel_tol(mut self, rel_tol: T) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

impl<T: FloatScalar> Default for EvalPolicy<T> {
    fn default() -> Self {
        Self {
            rel_tol: T::from(1e-12).unwrap(),
            max_terms: 10_000,
            quadrature_order: 64,
        }
    }
}

fn check_positive<T: FloatScalar>(x: T, what: &str) -> Result<()> {
    if !(x > T::zero()) || !x.is_finite() {
        return Err(Error::Domain(format!("{what} requires a positive argument, got {x}")));
    }
    Ok(())
}

/// Γ(x) for x > 0.
pub fn gamma_fn<T: FloatScalar>(x: T) -> Result<T> {
    check_positive(x, "gamma")?;
    Ok(gamma::gamma_raw(x))
}

/// ln Γ(x) for x > 0.
pub fn ln_gamma_fn<T: FloatScalar>(x: T) -> Result<T> {
    check_positive(x, "ln_gamma")?;
    Ok(gamma::ln_gamma_raw(x))
}

/// B(a, b) = Γ(a)Γ(b)/Γ(a+b) for a, b > 0.
///
/// Small arguments go through Γ directly; once Γ(a+b) would overflow the
/// ratio is assembled in log space.
pub fn beta_fn<T: FloatScalar>(a: T, b: T) -> Result<T> {
    check_positive(a, "beta")?;
    check_positive(b, "beta")?;
    let cutoff = T::from(170.0).unwrap();
    if a + b < cutoff {
        Ok(gamma::gamma_raw(a) * gamma::gamma_raw(b) / gamma::gamma_raw(a + b))
    } else {
        let ln = gamma::ln_gamma_raw(a) + gamma::ln_gamma_raw(b) - gamma::ln_gamma_raw(a + b);
        Ok(ln.exp())
    }
}

/// ψ(x) = Γ'(x)/Γ(x) for x > 0; strictly increasing there.
pub fn digamma_fn<T: FloatScalar>(x: T) -> Result<T> {
    check_positive(x, "digamma")?;
    Ok(gamma::digamma_raw(x))
}

/// `P_{α,k}(1) = B(k, α+1)`, the limit of the coefficient function at x = 1.
pub fn p_alpha_k_at_one<T: FloatScalar>(alpha: AlphaParameter<T>, k: u32) -> T {
    let kt = T::from(k.max(1)).unwrap();
    beta_fn(kt, alpha.get() + T::one()).expect("arguments are positive by construction")
}

/// The Gamma ratio `g(α) = Γ(α+1)/Γ(α/2+1)²` that bounds the kernel mass.
pub fn g_ratio<T: FloatScalar>(alpha: AlphaParameter<T>) -> T {
    let a = alpha.get();
    let half = T::from(0.5).unwrap();
    let num = gamma::gamma_raw(a + T::one());
    let den = gamma::gamma_raw(a * half + T::one());
    num / (den * den)
}
