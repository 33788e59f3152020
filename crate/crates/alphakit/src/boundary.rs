//! Unit-modulus boundary data `e^{iθ(φ)}` and its two-sided Fourier
//! coefficients.
//!
//! Three representations are supported: step phases (piecewise-constant θ,
//! integrated arc-by-arc in closed form), trigonometric polynomials (exact
//! coefficients), and uniform samples (discrete transform; accuracy O(N⁻²)
//! for twice-differentiable data). A boundary is *admissible* when its phase
//! is nondecreasing with total rise 2π over one period — for step phases the
//! jumps are read modulo 2π, so a final arc that wraps back to the first
//! value counts as monotone.

use std::collections::BTreeMap;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::scalar::FloatScalar;
use crate::specfun::{p_alpha_k_at_one, AlphaParameter};
use crate::spectrum::CoefficientSpectrum;

/// One constant-phase arc: θ = `theta` on `[phi_start, next arc's start)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StepArc<T> {
    pub phi_start: T,
    pub theta: T,
}

/// Boundary data on the unit circle.
#[derive(Debug, Clone, PartialEq)]
pub enum BoundaryFunction<T> {
    /// Piecewise-constant phase; arcs partition `[0, 2π)`, first start at 0,
    /// starts strictly increasing.
    StepPhase { arcs: Vec<StepArc<T>> },
    /// Finite Fourier sum `Σ c_m e^{imφ}`.
    TrigPoly { coeffs: BTreeMap<i32, Complex<T>> },
    /// Values on the uniform grid `φ_n = 2πn/N`; evaluated by periodic
    /// linear interpolation in between.
    Sampled { values: Vec<Complex<T>> },
}

impl<T: FloatScalar> BoundaryFunction<T> {
    /// Step-phase boundary from `(phi_start, theta)` pairs.
    pub fn step(arcs: Vec<(T, T)>) -> Result<Self> {
        if arcs.is_empty() {
            return Err(Error::Domain("a step boundary needs at least one arc".into()));
        }
        let two_pi = T::PI() + T::PI();
        if arcs[0].0 != T::zero() {
            return Err(Error::Domain("the first arc must start at φ = 0".into()));
        }
        let mut prev = -T::one();
        for &(phi, theta) in &arcs {
            if !phi.is_finite() || !theta.is_finite() {
                return Err(Error::Domain("arc entries must be finite".into()));
            }
            if phi <= prev {
                return Err(Error::Domain("arc starts must be strictly increasing".into()));
            }
            if phi >= two_pi {
                return Err(Error::Domain("arc starts must lie in [0, 2π)".into()));
            }
            prev = phi;
        }
        Ok(Self::StepPhase {
            arcs: arcs
                .into_iter()
                .map(|(phi_start, theta)| StepArc { phi_start, theta })
                .collect(),
        })
    }

    pub fn trig_poly<I>(coeffs: I) -> Self
    where
        I: IntoIterator<Item = (i32, Complex<T>)>,
    {
        Self::TrigPoly { coeffs: coeffs.into_iter().collect() }
    }

    pub fn sampled(values: Vec<Complex<T>>) -> Result<Self> {
        if values.len() < 2 {
            return Err(Error::Domain("sampled boundaries need at least two samples".into()));
        }
        Ok(Self::Sampled { values })
    }

    /// The sharp-case boundary: phase steps 0, 2π/3, 4π/3, 0 on the arcs
    /// `[0,π/3), [π/3,π), [π,5π/3), [5π/3,2π)`. Admissible: each jump is
    /// +2π/3 modulo 2π, for a total rise of exactly 2π.
    pub fn extremal_triple_step() -> Self {
        let pi = T::PI();
        let third = pi / T::from(3.0).unwrap();
        let two_third_pi = third + third;
        Self::step(vec![
            (T::zero(), T::zero()),
            (third, two_third_pi),
            (pi, two_third_pi + two_third_pi),
            (pi + two_third_pi, T::zero()),
        ])
        .expect("static arcs are valid")
    }

    /// Random admissible step boundary: `n_arcs` arcs with sorted uniform
    /// starts and nondecreasing phase values whose rise over the full period
    /// is exactly 2π. Deterministic in `seed`.
    pub fn random_admissible_step(n_arcs: usize, seed: u64) -> Result<Self> {
        if n_arcs < 2 {
            return Err(Error::Domain("need at least 2 arcs".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let two_pi = 2.0 * std::f64::consts::PI;
        let starts: Vec<f64> = loop {
            let mut s: Vec<f64> = (0..n_arcs - 1).map(|_| rng.gen_range(0.0..two_pi)).collect();
            s.sort_by(|a, b| a.partial_cmp(b).unwrap());
            let mut all = vec![0.0];
            all.extend(s);
            if all.windows(2).all(|w| w[1] - w[0] > 1e-6) && two_pi - all[n_arcs - 1] > 1e-6 {
                break all;
            }
        };
        let mut jumps: Vec<f64> = (0..n_arcs).map(|_| rng.gen_range(0.0..1.0)).collect();
        let total: f64 = jumps.iter().sum();
        for j in &mut jumps {
            *j *= two_pi / total;
        }
        let theta0 = rng.gen_range(0.0..two_pi);
        let mut thetas = vec![theta0];
        for j in &jumps[..n_arcs - 1] {
            let last = *thetas.last().unwrap();
            thetas.push(last + j);
        }
        let arcs = starts
            .into_iter()
            .zip(thetas)
            .map(|(p, t)| (T::from(p).unwrap(), T::from(t).unwrap()))
            .collect();
        Self::step(arcs)
    }

    /// Random admissible step boundary with the reflection symmetry
    /// `θ(-φ) = -θ(φ) (mod 2π)`, which makes every Fourier coefficient real.
    /// `n_half` is the number of jumps strictly inside `(0, π)`.
    pub fn random_symmetric_admissible_step(n_half: usize, seed: u64) -> Result<Self> {
        if n_half < 1 {
            return Err(Error::Domain("need at least one interior jump".into()));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let pi = std::f64::consts::PI;
        let mut pts: Vec<f64> = (0..n_half).map(|_| rng.gen_range(0.05..pi - 0.05)).collect();
        pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut vals: Vec<f64> = (0..n_half).map(|_| rng.gen_range(0.0..pi)).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut arcs: Vec<(f64, f64)> = vec![(0.0, 0.0)];
        for (&p, &v) in pts.iter().zip(&vals) {
            arcs.push((p, v));
        }
        arcs.push((pi, 2.0 * pi - vals[n_half - 1]));
        for i in (1..n_half).rev() {
            arcs.push((2.0 * pi - pts[i], 2.0 * pi - vals[i - 1]));
        }
        arcs.push((2.0 * pi - pts[0], 2.0 * pi));
        // collapse any duplicate starts introduced by mirroring
        arcs.dedup_by(|a, b| (a.0 - b.0).abs() < 1e-12);
        let arcs = arcs
            .into_iter()
            .map(|(p, t)| (T::from(p).unwrap(), T::from(t).unwrap()))
            .collect();
        Self::step(arcs)
    }

    /// Boundary value at angle φ (taken modulo 2π).
    pub fn value_at(&self, phi: T) -> Complex<T> {
        match self {
            Self::StepPhase { .. } => {
                let theta = self.phase_at(phi).expect("step phase always defined");
                Complex::from_polar(T::one(), theta)
            }
            Self::TrigPoly { coeffs } => {
                let mut acc = Complex::new(T::zero(), T::zero());
                for (&m, &c) in coeffs {
                    acc = acc + c * Complex::from_polar(T::one(), T::from(m).unwrap() * phi);
                }
                acc
            }
            Self::Sampled { values } => {
                let n = values.len();
                let two_pi = T::PI() + T::PI();
                let mut t = (phi / two_pi).fract() * T::from(n).unwrap();
                if t < T::zero() {
                    t = t + T::from(n).unwrap();
                }
                let i0 = t.floor().to_usize().unwrap_or(0).min(n - 1);
                let frac = t - T::from(i0).unwrap();
                let a = values[i0];
                let b = values[(i0 + 1) % n];
                a * (T::one() - frac) + b * frac
            }
        }
    }

    /// Phase θ(φ) where the representation carries one exactly (step phases).
    pub fn phase_at(&self, phi: T) -> Option<T> {
        match self {
            Self::StepPhase { arcs } => {
                let two_pi = T::PI() + T::PI();
                let mut p = phi % two_pi;
                if p < T::zero() {
                    p = p + two_pi;
                }
                let idx = arcs.partition_point(|a| a.phi_start <= p);
                Some(arcs[idx.saturating_sub(1)].theta)
            }
            _ => None,
        }
    }

    /// True when sampled values stay within `tol` of the unit circle
    /// (step phases are unit-modulus by construction).
    pub fn is_unit_modulus(&self, tol: T) -> bool {
        match self {
            Self::StepPhase { .. } => true,
            Self::TrigPoly { .. } => {
                let n = 512;
                let two_pi = T::PI() + T::PI();
                (0..n).all(|i| {
                    let phi = two_pi * T::from(i).unwrap() / T::from(n).unwrap();
                    (self.value_at(phi).norm() - T::one()).abs() <= tol
                })
            }
            Self::Sampled { values } => {
                values.iter().all(|v| (v.norm() - T::one()).abs() <= tol)
            }
        }
    }

    /// Admissibility: θ nondecreasing with θ(φ+2π) = θ(φ) + 2π.
    ///
    /// Step phases are checked exactly: every jump, read modulo 2π into
    /// `[0, 2π)`, is nonnegative by construction, and the jumps must sum to
    /// one full turn (winding number one). Trig-poly and sampled boundaries
    /// are checked on a 1024-point grid: unit modulus, no decreasing phase
    /// increment, total increase 2π. Sampling cannot tell a jump larger than
    /// π from a decrease, so steep non-step data should use `StepPhase`.
    pub fn is_admissible(&self) -> bool {
        let two_pi_f = 2.0 * std::f64::consts::PI;
        match self {
            Self::StepPhase { arcs } => {
                let n = arcs.len();
                let mut total = 0.0f64;
                for i in 0..n {
                    let a = arcs[i].theta.to_f64().unwrap();
                    let b = arcs[(i + 1) % n].theta.to_f64().unwrap();
                    let mut d = (b - a).rem_euclid(two_pi_f);
                    if d > two_pi_f - 1e-9 {
                        d = 0.0;
                    }
                    total += d;
                }
                (total - two_pi_f).abs() <= 1e-9 * (n as f64).max(4.0)
            }
            _ => {
                if !self.is_unit_modulus(T::from(1e-9).unwrap()) {
                    return false;
                }
                let n = 1024;
                let mut total = 0.0f64;
                let two_pi = T::PI() + T::PI();
                let mut prev = self.value_at(T::zero());
                for i in 1..=n {
                    let phi = two_pi * T::from(i).unwrap() / T::from(n).unwrap();
                    let cur = self.value_at(phi);
                    let d = (cur * prev.conj()).arg().to_f64().unwrap();
                    if d < -1e-9 {
                        return false;
                    }
                    total += d;
                    prev = cur;
                }
                (total - two_pi_f).abs() <= 1e-6
            }
        }
    }
}

/// Raw Fourier coefficient `(1/2π) ∫₀^{2π} e^{-imφ} b(φ) dφ` for any sign
/// of m. Step phases integrate in closed form per arc; trig polynomials read
/// the coefficient off; samples use the discrete transform.
pub fn raw_fourier_coefficient<T: FloatScalar>(b: &BoundaryFunction<T>, m: i32) -> Complex<T> {
    let two_pi = T::PI() + T::PI();
    match b {
        BoundaryFunction::StepPhase { arcs } => {
            let n = arcs.len();
            let mut acc = Complex::new(T::zero(), T::zero());
            for j in 0..n {
                let a0 = arcs[j].phi_start;
                let a1 = if j + 1 < n { arcs[j + 1].phi_start } else { two_pi };
                let phase = Complex::from_polar(T::one(), arcs[j].theta);
                let seg = if m == 0 {
                    Complex::new(a1 - a0, T::zero())
                } else {
                    let mt = T::from(m).unwrap();
                    let e0 = Complex::from_polar(T::one(), -mt * a0);
                    let e1 = Complex::from_polar(T::one(), -mt * a1);
                    (e0 - e1) / Complex::new(T::zero(), mt)
                };
                acc = acc + phase * seg;
            }
            acc / two_pi
        }
        BoundaryFunction::TrigPoly { coeffs } => coeffs
            .get(&m)
            .copied()
            .unwrap_or_else(|| Complex::new(T::zero(), T::zero())),
        BoundaryFunction::Sampled { values } => {
            let n = values.len();
            let nt = T::from(n).unwrap();
            let mt = T::from(m).unwrap();
            let mut acc = Complex::new(T::zero(), T::zero());
            for (i, &v) in values.iter().enumerate() {
                let phi = two_pi * T::from(i).unwrap() / nt;
                acc = acc + v * Complex::from_polar(T::one(), -mt * phi);
            }
            acc / nt
        }
    }
}

/// Series coefficient `c_k` for k ≥ 0: the raw Fourier coefficient at
/// frequency k.
pub fn fourier_coefficient_pos<T: FloatScalar>(b: &BoundaryFunction<T>, k: u32) -> Complex<T> {
    raw_fourier_coefficient(b, k as i32)
}

/// Series coefficient `c_{-k}` for k ≥ 1: the raw Fourier coefficient at
/// frequency -k divided by `B(k, α+1)` (the anti-analytic terms carry
/// `P_{α,k}`, which tends to `B(k, α+1)` at the boundary).
pub fn fourier_coefficient_neg<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    b: &BoundaryFunction<T>,
    k: u32,
) -> Result<Complex<T>> {
    if k == 0 {
        return Err(Error::Domain("negative-side index k must be >= 1".into()));
    }
    let raw = raw_fourier_coefficient(b, -(k as i32));
    Ok(raw / p_alpha_k_at_one(alpha, k))
}

/// Extracts the truncated spectrum `{c_k}_{|k| ≤ K}` of the mapping with
/// boundary data `b`.
pub fn spectrum_from_boundary<T: FloatScalar>(
    alpha: AlphaParameter<T>,
    b: &BoundaryFunction<T>,
    k_max: u32,
) -> Result<CoefficientSpectrum<T>> {
    let mut s = CoefficientSpectrum::new(alpha, k_max.max(1));
    for k in 0..=k_max {
        s.set(k as i32, fourier_coefficient_pos(b, k))?;
    }
    for k in 1..=k_max {
        s.set(-(k as i32), fourier_coefficient_neg(alpha, b, k)?)?;
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    type C = Complex<f64>;
    const TWO_PI: f64 = 2.0 * std::f64::consts::PI;

    fn alpha(a: f64) -> AlphaParameter<f64> {
        AlphaParameter::new(a).unwrap()
    }

    fn extremal() -> BoundaryFunction<f64> {
        BoundaryFunction::extremal_triple_step()
    }

    #[test]
    fn extremal_values_on_arcs() {
        let b = extremal();
        let pi = std::f64::consts::PI;
        let v = b.value_at(0.1);
        assert_relative_eq!(v.re, 1.0, epsilon = 1e-15);
        let v = b.value_at(2.0);
        let w = C::from_polar(1.0, 2.0 * pi / 3.0);
        assert_relative_eq!(v.re, w.re, epsilon = 1e-15);
        assert_relative_eq!(v.im, w.im, epsilon = 1e-15);
        let v = b.value_at(4.0);
        let w = C::from_polar(1.0, 4.0 * pi / 3.0);
        assert_relative_eq!(v.re, w.re, epsilon = 1e-15);
        assert_relative_eq!(v.im, w.im, epsilon = 1e-15);
        assert!(b.is_admissible());
    }

    #[test]
    fn extremal_headline_coefficients() {
        let b = extremal();
        let c1 = fourier_coefficient_pos(&b, 1);
        let expected = 3.0 * 3.0f64.sqrt() / TWO_PI;
        assert!((c1 - C::new(expected, 0.0)).norm() <= 1e-13);
        assert!(fourier_coefficient_pos(&b, 0).norm() <= 1e-14);
        for &a in &[-0.5, 0.0, 1.0, 2.5] {
            let cm1 = fourier_coefficient_neg(alpha(a), &b, 1).unwrap();
            assert!(cm1.norm() <= 1e-14, "c_-1 not zero at α={a}");
        }
    }

    #[test]
    fn extremal_mod_three_selection() {
        // Rotating the arcs by 2π/3 multiplies c_k by e^{2πi(k-1)/3}, and the
        // boundary is invariant up to that rotation, so c_k = 0 unless
        // k ≡ 1 (mod 3). Checked directly on the extracted spectrum.
        let b = extremal();
        let s = spectrum_from_boundary(alpha(0.7), &b, 4).unwrap();
        for k in -4i32..=4 {
            let c = s.coeff(k);
            if k.rem_euclid(3) == 1 {
                continue;
            }
            assert!(c.norm() <= 1e-13, "c_{k} should vanish, got {c}");
        }
        assert!(s.coeff(4).norm() > 0.1);
        assert!(s.coeff(-2).norm() > 0.1);
    }

    #[test]
    fn arc_rotation_rotates_coefficients() {
        // Shifting every arc start by δ multiplies the frequency-k raw
        // coefficient by e^{-ikδ}; the triple-step boundary is invariant
        // under the δ = 2π/3 shift combined with a phase bump of 2π/3, which
        // is why only k ≡ 1 (mod 3) survives.
        let b = extremal();
        let arcs = match &b {
            BoundaryFunction::StepPhase { arcs } => arcs.clone(),
            _ => unreachable!(),
        };
        let delta = 2.0 * std::f64::consts::PI / 3.0;
        // rotate: new arc starts a_j + δ (mod 2π), re-sorted to start at 0
        let mut rotated: Vec<(f64, f64)> = arcs
            .iter()
            .map(|a| ((a.phi_start + delta) % TWO_PI, a.theta))
            .collect();
        rotated.sort_by(|x, y| x.0.partial_cmp(&y.0).unwrap());
        // the rotated partition no longer starts at 0: insert the wrapped arc
        let last = *rotated.last().unwrap();
        if rotated[0].0 > 1e-12 {
            rotated.insert(0, (0.0, last.1));
        }
        let br = BoundaryFunction::step(rotated).unwrap();
        for k in [-4i32, -2, 1, 4] {
            let orig = raw_fourier_coefficient(&b, k);
            let rot = raw_fourier_coefficient(&br, k);
            let phase = C::from_polar(1.0, -(k as f64) * delta);
            assert!(
                (rot - orig * phase).norm() <= 1e-13,
                "rotation law fails at k={k}: {rot} vs {}",
                orig * phase
            );
        }
    }

    #[test]
    fn identity_boundary_orthogonality() {
        let b = BoundaryFunction::trig_poly([(1, C::new(1.0, 0.0))]);
        assert!(b.is_admissible());
        assert_relative_eq!(fourier_coefficient_pos(&b, 1).re, 1.0);
        for k in [0u32, 2, 3, 7] {
            assert_eq!(fourier_coefficient_pos(&b, k), C::new(0.0, 0.0));
        }
        for k in [1u32, 2, 5] {
            assert_eq!(
                fourier_coefficient_neg(alpha(1.0), &b, k).unwrap(),
                C::new(0.0, 0.0)
            );
        }
    }

    #[test]
    fn conjugate_mode_picks_up_beta_factor() {
        // boundary e^{-iφ}: raw coefficient at frequency -1 is 1, so
        // c_{-1} = 1/B(1, α+1) = α+1.
        let b = BoundaryFunction::trig_poly([(-1, C::new(1.0, 0.0))]);
        for &a in &[-0.5, 0.0, 1.0, 2.5] {
            let c = fourier_coefficient_neg(alpha(a), &b, 1).unwrap();
            assert_relative_eq!(c.re, a + 1.0, max_relative = 1e-13);
            assert!(c.im.abs() < 1e-15);
        }
    }

    #[test]
    fn step_analytic_matches_dense_transform() {
        for seed in 0..5u64 {
            let b = BoundaryFunction::<f64>::random_admissible_step(2 + (seed as usize % 7), seed)
                .unwrap();
            let n = 1 << 16;
            let values: Vec<C> =
                (0..n).map(|i| b.value_at(TWO_PI * i as f64 / n as f64)).collect();
            let sampled = BoundaryFunction::sampled(values).unwrap();
            for k in [-32i32, -5, -1, 0, 1, 2, 17, 32] {
                let a = raw_fourier_coefficient(&b, k);
                let s = raw_fourier_coefficient(&sampled, k);
                assert!(
                    (a - s).norm() <= 1e-4,
                    "arc-analytic vs transform mismatch at k={k}: {a} vs {s}"
                );
            }
        }
    }

    #[test]
    fn sampled_pure_mode() {
        let n = 4096;
        let values: Vec<C> =
            (0..n).map(|i| C::from_polar(1.0, TWO_PI * i as f64 / n as f64)).collect();
        let b = BoundaryFunction::sampled(values).unwrap();
        assert!(b.is_admissible());
        assert!((fourier_coefficient_pos(&b, 1) - C::new(1.0, 0.0)).norm() < 1e-6);
        assert!(fourier_coefficient_pos(&b, 0).norm() < 1e-12);
    }

    #[test]
    fn random_step_admissible_and_deterministic() {
        let b1 = BoundaryFunction::<f64>::random_admissible_step(3, 7).unwrap();
        let b2 = BoundaryFunction::<f64>::random_admissible_step(3, 7).unwrap();
        assert_eq!(b1, b2);
        assert!(b1.is_admissible());
        for seed in 0..30u64 {
            let n = 2 + (seed as usize % 9);
            let b = BoundaryFunction::<f64>::random_admissible_step(n, seed).unwrap();
            assert!(b.is_admissible(), "seed {seed} produced inadmissible boundary");
        }
        assert!(BoundaryFunction::<f64>::random_admissible_step(1, 0).is_err());
    }

    #[test]
    fn decreasing_phase_is_not_admissible() {
        let b = BoundaryFunction::step(vec![(0.0, 0.0), (2.0, 5.0), (4.0, 2.0)]).unwrap();
        // jumps mod 2π: 5, (2-5) mod 2π ≈ 3.28, (0-2) mod 2π ≈ 4.28 → winding 2
        assert!(!b.is_admissible());
        let constant = BoundaryFunction::step(vec![(0.0, 0.0)]).unwrap();
        assert!(!constant.is_admissible());
    }

    #[test]
    fn symmetric_boundaries_have_real_coefficients() {
        for seed in 0..20u64 {
            let b = BoundaryFunction::<f64>::random_symmetric_admissible_step(
                1 + (seed as usize % 4),
                seed,
            )
            .unwrap();
            assert!(b.is_admissible(), "seed {seed}");
            for k in -8i32..=8 {
                let c = raw_fourier_coefficient(&b, k);
                assert!(
                    c.im.abs() <= 1e-10,
                    "coefficient c_{k} not real for symmetric boundary: {c}"
                );
            }
        }
    }

    #[test]
    fn parseval_truncation() {
        // Unit-modulus boundary ⟹ Σ|raw_k|² = 1; the K=1024 truncation
        // keeps all of it but a sub-1e-3 tail.
        let check = |b: &BoundaryFunction<f64>| {
            let mut sum = 0.0;
            for k in -1024i32..=1024 {
                sum += raw_fourier_coefficient(b, k).norm_sqr();
            }
            assert!(sum <= 1.0 + 1e-12, "Parseval sum {sum} exceeds 1");
            assert!(sum >= 1.0 - 1e-3, "Parseval sum {sum} lost too much mass");
        };
        check(&extremal());
        check(&BoundaryFunction::random_admissible_step(12, 3).unwrap());
        check(&BoundaryFunction::random_admissible_step(5, 11).unwrap());
    }

    #[test]
    fn step_constructor_rejects_bad_partitions() {
        assert!(BoundaryFunction::<f64>::step(vec![]).is_err());
        assert!(BoundaryFunction::step(vec![(0.1, 0.0)]).is_err());
        assert!(BoundaryFunction::step(vec![(0.0, 0.0), (0.0, 1.0)]).is_err());
        assert!(BoundaryFunction::step(vec![(0.0, 0.0), (7.0, 1.0)]).is_err());
        assert!(BoundaryFunction::step(vec![(0.0, f64::NAN)]).is_err());
    }

    #[test]
    fn spectrum_extraction_identity() {
        let b = BoundaryFunction::trig_poly([(1, C::new(1.0, 0.0))]);
        let s = spectrum_from_boundary(alpha(2.5), &b, 3).unwrap();
        assert_eq!(s.coeff(1), C::new(1.0, 0.0));
        for k in [-3i32, -2, -1, 0, 2, 3] {
            assert_eq!(s.coeff(k), C::new(0.0, 0.0));
        }
    }
}
