//! The kernel coefficient functions `P_{α,k}(x) = ∫₀¹ t^{k-1}(1-tx)^α dt`
//! and their derivative, evaluated two independent ways.
//!
//! The default route expands the weight binomially,
//! `P_{α,k}(x) = Σ_{j≥0} C(α,j) (-x)^j / (k+j)`, whose tail is geometric with
//! ratio `x`; the cross-check route integrates the definition by adaptive
//! Gauss quadrature. A stable backward recurrence produces whole families
//! `P_{α,1..K}(x)` in O(K) once one member is known.

use crate::error::{Error, Result};
use crate::quad::GaussLegendre;
use crate::scalar::FloatScalar;
use crate::specfun::{AlphaParameter, EvalPolicy};

/// Σ_{j≥0} C(β,j) (-x)^j / (m0+j), the series form of
/// ∫₀¹ t^{m0-1}(1-tx)^β dt, for β > -2 and 0 ≤ x < 1.
///
/// Binomial coefficients follow the product recurrence
/// `C(β,j) = C(β,j-1)·(β-j+1)/j`, which avoids Gamma-function cancellation.
/// Truncation uses a rigorous tail bound: past `j ≥ β` the step ratio is at
/// most `x·(1 + 1/(j+1))`, so the remaining mass is bounded by
/// `|term_j| · x/(1-x) · (1 + 1/((j+1)(1-x)))`.
pub(crate) fn binomial_series<T: FloatScalar>(
    beta: T,
    m0: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    debug_assert!(m0 >= 1);
    let one = T::one();
    let m0t = T::from(m0).unwrap();
    let mut coeff = one; // C(β, 0)
    let mut xpow = one;
    let mut sum = one / m0t;
    let mut j = 0usize;
    loop {
        j += 1;
        if j > policy.max_terms {
            return Err(Error::Convergence(format!(
                "coefficient series for (beta={beta}, m0={m0}, x={x}) \
                 did not settle within {} terms",
                policy.max_terms
            )));
        }
        let jt = T::from(j).unwrap();
        coeff = coeff * (beta - jt + one) / jt;
        if coeff == T::zero() {
            // Integer β: the binomial expansion terminates exactly.
            return Ok(sum);
        }
        xpow = xpow * (-x);
        let term = coeff * xpow / (m0t + jt);
        sum = sum + term;
        if jt > beta {
            let geo = x / (one - x);
            let tail = term.abs() * geo * (one + one / ((jt + one) * (one - x)));
            if tail <= policy.rel_tol * sum.abs() {
                return Ok(sum);
            }
        }
    }
}

/// ∫₀¹ t^{m0-1}(1-tx)^β dt by composite Gauss quadrature on panels graded
/// geometrically toward t = 1, where the integrand steepens as x → 1 (for
/// β < 0 it grows like (1-x)^β there). Each dyadic shell
/// `[1-2^{-j}, 1-2^{-j-1}]` sees a smooth integrand, so a fixed-order rule
/// per shell is accurate; shells stop once they resolve the 1-x scale.
pub(crate) fn integral_route<T: FloatScalar>(
    beta: T,
    m0: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    let p = (m0 - 1) as i32;
    let f = move |t: T| t.powi(p) * (T::one() - t * x).powf(beta);
    let rule = GaussLegendre::new(policy.quadrature_order.clamp(16, 64));
    let one = T::one();
    let half = T::from(0.5).unwrap();
    let floor = T::from(1e-16).unwrap().max((one - x) * T::from(0.125).unwrap());
    let mut acc = T::zero();
    let mut left = T::zero(); // 1 - 2^{-j}
    let mut rem = T::one(); // 2^{-j}
    loop {
        let next_rem = rem * half;
        let right = one - next_rem;
        acc = acc + rule.integrate(f, left, right);
        left = right;
        rem = next_rem;
        if rem <= floor {
            return Ok(acc + rule.integrate(f, left, one));
        }
    }
}

fn check_x_range<T: FloatScalar>(x: T) -> Result<()> {
    if x < T::zero() || x >= T::one() || !x.is_finite() {
        return Err(Error::Domain(format!(
            "coefficient functions are defined for 0 <= x < 1, got {x}"
        )));
    }
    Ok(())
}

fn check_k(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("coefficient index k must be >= 1".into()));
    }
    Ok(())
}

/// `P_{α,k}(x)`: series first, quadrature as fallback when the series budget
/// runs out (x very close to 1).
pub fn p_alpha_k<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    check_k(k)?;
    check_x_range(x)?;
    match binomial_series(alpha.get(), k, x, policy) {
        Ok(v) => Ok(v),
        Err(Error::Convergence(_)) => integral_route(alpha.get(), k, x, policy),
        Err(e) => Err(e),
    }
}

/// Series route of `P_{α,k}`, exposed so it can be checked against the
/// quadrature route.
pub fn p_alpha_k_series<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    check_k(k)?;
    check_x_range(x)?;
    binomial_series(alpha.get(), k, x, policy)
}

/// Quadrature route of `P_{α,k}`.
pub fn p_alpha_k_quadrature<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    check_k(k)?;
    check_x_range(x)?;
    integral_route(alpha.get(), k, x, policy)
}

/// `P'_{α,k}(x) = -α ∫₀¹ t^k (1-tx)^{α-1} dt`, by differentiating under the
/// integral sign. Nonpositive for α ≥ 0 and positive for α ∈ (-1,0).
pub fn p_alpha_k_prime<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<T> {
    check_k(k)?;
    check_x_range(x)?;
    let a = alpha.get();
    if a == T::zero() {
        return Ok(T::zero());
    }
    let inner = match binomial_series(a - T::one(), k + 1, x, policy) {
        Ok(v) => v,
        Err(Error::Convergence(_)) => integral_route(a - T::one(), k + 1, x, policy)?,
        Err(e) => return Err(e),
    };
    Ok(-a * inner)
}

/// The whole family `P_{β,1}(x), ..., P_{β,m_max}(x)` for a raw exponent
/// `β > -2`, via the backward recurrence
///
/// `P_{β,k} = ((k+β+1)·x·P_{β,k+1} + (1-x)^{β+1}) / k`,
///
/// seeded with a series evaluation at `k = m_max + 1`. Running the recurrence
/// downward is stable (the homogeneous solutions grow upward), so every entry
/// inherits the seed's accuracy. Entry `k` lands at index `k-1`.
pub(crate) fn family_raw<T: FloatScalar>(
    beta: T,
    m_max: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<Vec<T>> {
    debug_assert!(m_max >= 1);
    check_x_range(x)?;
    let one = T::one();
    if x < T::from(1e-300).unwrap() {
        return Ok((1..=m_max).map(|k| one / T::from(k).unwrap()).collect());
    }
    let seed = match binomial_series(beta, m_max + 1, x, policy) {
        Ok(v) => v,
        Err(Error::Convergence(_)) => integral_route(beta, m_max + 1, x, policy)?,
        Err(e) => return Err(e),
    };
    let pow = (one - x).powf(beta + one);
    let mut values = vec![T::zero(); m_max as usize];
    let mut upper = seed;
    for k in (1..=m_max).rev() {
        let kt = T::from(k).unwrap();
        let v = ((kt + beta + one) * x * upper + pow) / kt;
        values[(k - 1) as usize] = v;
        upper = v;
    }
    Ok(values)
}

/// `P_{α,k}(x)` for every k = 1..=k_max at a fixed x; index k-1 holds order k.
pub fn p_alpha_k_family<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k_max: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<Vec<T>> {
    check_k(k_max)?;
    family_raw(alpha.get(), k_max, x, policy)
}

/// `P'_{α,k}(x)` for every k = 1..=k_max at a fixed x, through
/// `P'_{α,k} = -α · ∫₀¹ t^k (1-tx)^{α-1} dt`.
pub fn p_alpha_k_prime_family<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    k_max: u32,
    x: T,
    policy: &EvalPolicy<T>,
) -> Result<Vec<T>> {
    check_k(k_max)?;
    let a = alpha.get();
    if a == T::zero() {
        return Ok(vec![T::zero(); k_max as usize]);
    }
    let inner = family_raw(a - T::one(), k_max + 1, x, policy)?;
    Ok((1..=k_max).map(|k| -a * inner[k as usize]).collect())
}
