//! Truncated two-sided coefficient families `{c_k}_{-K..K}` defining a
//! mapping through its series expansion.

use std::collections::BTreeMap;

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::FloatScalar;
use crate::specfun::AlphaParameter;

/// A truncated spectrum: the weight exponent plus coefficients on
/// `k ∈ {-K, ..., K}`. Absent keys mean zero.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSpectrum<T> {
    alpha: AlphaParameter<T>,
    k_max: u32,
    coeffs: BTreeMap<i32, Complex<T>>,
}

impl<T: FloatScalar> CoefficientSpectrum<T> {
    /// Empty spectrum (the zero mapping) with truncation `k_max`.
    pub fn new(alpha: AlphaParameter<T>, k_max: u32) -> Self {
        Self { alpha, k_max, coeffs: BTreeMap::new() }
    }

    /// Build from `(k, c_k)` pairs; rejects non-finite coefficients and
    /// indices beyond the truncation.
    pub fn from_entries<I>(alpha: AlphaParameter<T>, k_max: u32, entries: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i32, Complex<T>)>,
    {
        let mut s = Self::new(alpha, k_max);
        for (k, c) in entries {
            s.set(k, c)?;
        }
        Ok(s)
    }

    pub fn set(&mut self, k: i32, c: Complex<T>) -> Result<()> {
        if k.unsigned_abs() > self.k_max {
            return Err(Error::Domain(format!(
                "coefficient index {k} outside truncation K={}",
                self.k_max
            )));
        }
        if !c.re.is_finite() || !c.im.is_finite() {
            return Err(Error::Domain(format!("coefficient c_{k} must be finite")));
        }
        if c == Complex::new(T::zero(), T::zero()) {
            self.coeffs.remove(&k);
        } else {
            self.coeffs.insert(k, c);
        }
        Ok(())
    }

    pub fn alpha(&self) -> AlphaParameter<T> {
        self.alpha
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    /// `c_k`, zero when absent.
    pub fn coeff(&self, k: i32) -> Complex<T> {
        self.coeffs
            .get(&k)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero()))
    }

    /// Stored (nonzero) entries in ascending index order.
    pub fn iter(&self) -> impl Iterator<Item = (i32, Complex<T>)> + '_ {
        self.coeffs.iter().map(|(&k, &c)| (k, c))
    }

    /// True when every coefficient has negligible imaginary part.
    pub fn is_real(&self, tol: T) -> bool {
        self.coeffs.values().all(|c| c.im.abs() <= tol)
    }

    /// The identity map `u(z) = z`.
    pub fn identity(alpha: AlphaParameter<T>) -> Self {
        let mut s = Self::new(alpha, 1);
        s.set(1, Complex::new(T::one(), T::zero())).expect("valid");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn absent_keys_are_zero() {
        let alpha = AlphaParameter::new(1.0f64).unwrap();
        let s = CoefficientSpectrum::new(alpha, 4);
        assert_eq!(s.coeff(3), Complex::new(0.0, 0.0));
        assert_eq!(s.coeff(-4), Complex::new(0.0, 0.0));
    }

    #[test]
    fn rejects_out_of_range_and_non_finite() {
        let alpha = AlphaParameter::new(0.0f64).unwrap();
        let mut s = CoefficientSpectrum::new(alpha, 2);
        assert!(s.set(3, Complex::new(1.0, 0.0)).is_err());
        assert!(s.set(-2, Complex::new(f64::NAN, 0.0)).is_err());
        assert!(s.set(-2, Complex::new(0.5, 1.0)).is_ok());
        assert_eq!(s.coeff(-2), Complex::new(0.5, 1.0));
    }

    #[test]
    fn identity_spectrum() {
        let alpha = AlphaParameter::new(-0.5f64).unwrap();
        let s = CoefficientSpectrum::identity(alpha);
        assert_eq!(s.coeff(1), Complex::new(1.0, 0.0));
        assert!(s.is_real(0.0));
    }
}
