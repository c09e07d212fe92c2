//! Complex special functions: principal-branch log-gamma, local Euler
//! factors, the spectral weight densities, `zeta(1/2 + is)` by
//! Euler–Maclaurin summation, and the Riemann–Landau Xi function.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::C64;

/// Largest `|s|` accepted by [`zeta_critical`] and [`xi_function`].
///
/// The Euler–Maclaurin tail bound is checked explicitly on every call; the
/// cap keeps the direct sum (`N = max(20, 2|s|)` terms) at desk scale.
pub const ZETA_S_MAX: f64 = 100.0;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpecFunError {
    #[error("gamma pole at z = {0}")]
    GammaPole(C64),
    #[error("local factor pole at place {place:?}, z = {z}")]
    FactorPole { place: Place, z: C64 },
    #[error("|s| = {0} exceeds the configured zeta bound {1}")]
    OutOfRange(f64, f64),
    #[error("euler-maclaurin tail bound {0:.3e} exceeds budget {1:.3e}")]
    TailBound(f64, f64),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("places must be strictly increasing, got {0} after {1}")]
    UnsortedPlaces(u64, u64),
    #[error("imaginary residue {0:.3e} exceeds {1:.3e} in a real-valued product")]
    ImaginaryResidue(f64, f64),
}

// ---------------------------------------------------------------------------
// log-gamma
// ---------------------------------------------------------------------------

// Lanczos rational approximation, g = 607/128, 15 coefficients.  Uniform
// relative accuracy ~1e-14 for Re z >= 1/2; the reflection formula covers the
// left half-strip.
const LANCZOS_G: f64 = 607.0 / 128.0;
const LANCZOS_COEFF: [f64; 15] = [
    0.999_999_999_999_997_1,
    57.156_235_665_862_92,
    -59.597_960_355_475_49,
    14.136_097_974_741_746,
    -0.491_913_816_097_620_2,
    3.399_464_998_481_189e-5,
    4.652_362_892_704_858e-5,
    -9.837_447_530_487_956e-5,
    1.580_887_032_249_125e-4,
    -2.102_644_417_241_048e-4,
    2.174_396_181_152_126e-4,
    -1.643_181_065_367_639e-4,
    8.441_822_398_385_275e-5,
    -2.619_083_840_158_141e-5,
    3.689_918_265_953_162e-6,
];

fn is_nonpositive_integer(z: C64) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re.fract() == 0.0
}

/// Principal-branch `log Gamma(z)`.
///
/// Relative accuracy of `exp(log_gamma(z))` against `Gamma(z)` is below
/// 1e-13 for `|z| <= 100`.  Errors on the poles `z = 0, -1, -2, ...`.
pub fn log_gamma(z: C64) -> Result<C64, SpecFunError> {
    if is_nonpositive_integer(z) {
        return Err(SpecFunError::GammaPole(z));
    }
    if z.re >= 0.5 {
        return Ok(log_gamma_lanczos(z));
    }
    // Reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z).
    // The chosen branch of log sin keeps exp(result) exact; continuity
    // across branch cuts is not required by the callers (all consumers use
    // exp or the real part).
    let log_pi = Complex64::new(std::f64::consts::PI.ln(), 0.0);
    Ok(log_pi - log_sin_pi(z) - log_gamma_lanczos(C64::new(1.0, 0.0) - z))
}

fn log_gamma_lanczos(z: C64) -> C64 {
    let mut acc = Complex64::new(LANCZOS_COEFF[0], 0.0);
    for (k, c) in LANCZOS_COEFF.iter().enumerate().skip(1) {
        acc += c / (z + (k as f64 - 1.0));
    }
    let t = z + (LANCZOS_G - 0.5);
    let half_log_two_pi = 0.5 * (2.0 * std::f64::consts::PI).ln();
    half_log_two_pi + (z - 0.5) * t.ln() - t + acc.ln()
}

// log sin(pi z), written to avoid overflow of sin for large |Im z|.
fn log_sin_pi(z: C64) -> C64 {
    let pi = std::f64::consts::PI;
    if z.im.abs() < 20.0 {
        return (pi * z).sin().ln();
    }
    // sin(pi z) = (i/2) e^{-i pi z} (1 - e^{2 i pi z})  for Im z > 0,
    // and the conjugate arrangement below the axis.
    let i = Complex64::i();
    if z.im > 0.0 {
        let small = (2.0 * i * pi * z).exp();
        (i / 2.0).ln() - i * pi * z + (Complex64::new(1.0, 0.0) - small).ln()
    } else {
        let small = (-2.0 * i * pi * z).exp();
        (-i / 2.0).ln() + i * pi * z + (Complex64::new(1.0, 0.0) - small).ln()
    }
}

// ---------------------------------------------------------------------------
// Places and local Euler factors
// ---------------------------------------------------------------------------

/// A place of the rationals: the archimedean one or a finite prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Place {
    Archimedean,
    FinitePrime(u64),
}

fn check_prime(p: u64) -> Result<(), SpecFunError> {
    if p < 2 {
        return Err(SpecFunError::NotPrime(p));
    }
    let mut d = 2u64;
    while d * d <= p {
        if p % d == 0 {
            return Err(SpecFunError::NotPrime(p));
        }
        d += 1;
    }
    Ok(())
}

/// A finite set of places; the archimedean place is always implicitly
/// included, so `primes` lists only the finite ones, strictly increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSet {
    primes: Vec<u64>,
}

impl PlaceSet {
    /// `S = {infinity}`.
    pub fn archimedean() -> Self {
        PlaceSet { primes: Vec::new() }
    }

    /// Builds a place set from finite primes; validates primality and strict
    /// ordering.
    pub fn new(primes: &[u64]) -> Result<Self, SpecFunError> {
        for (k, &p) in primes.iter().enumerate() {
            check_prime(p)?;
            if k > 0 && primes[k - 1] >= p {
                return Err(SpecFunError::UnsortedPlaces(p, primes[k - 1]));
            }
        }
        Ok(PlaceSet {
            primes: primes.to_vec(),
        })
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    /// All places including the archimedean one.
    pub fn places(&self) -> Vec<Place> {
        let mut v = vec![Place::Archimedean];
        v.extend(self.primes.iter().map(|&p| Place::FinitePrime(p)));
        v
    }

    pub fn is_archimedean_only(&self) -> bool {
        self.primes.is_empty()
    }
}

/// Local Euler factor: `L_inf(z) = pi^{-z/2} Gamma(z/2)` at the archimedean
/// place, `L_p(z) = (1 - p^{-z})^{-1}` at a finite prime.
pub fn local_factor(v: Place, z: C64) -> Result<C64, SpecFunError> {
    match v {
        Place::Archimedean => {
            let half = z / 2.0;
            if is_nonpositive_integer(half) {
                return Err(SpecFunError::FactorPole { place: v, z });
            }
            let lg = log_gamma(half)?;
            Ok((lg - half * std::f64::consts::PI.ln()).exp())
        }
        Place::FinitePrime(p) => {
            check_prime(p)?;
            let w = Complex64::new(1.0, 0.0) - (-z * (p as f64).ln()).exp();
            if w.norm() < 1e-300 {
                return Err(SpecFunError::FactorPole { place: v, z });
            }
            Ok(1.0 / w)
        }
    }
}

// ---------------------------------------------------------------------------
// Spectral weight densities
// ---------------------------------------------------------------------------

/// Which side of the transform pair the weight lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Side {
    /// Density `norm * |prod_{v in S} L_v(1/2 - is)|^2`.
    Euler,
    /// Density `norm * |prod_{v in S} L_v(1/2 + is)|^{-2}` (the dual weight;
    /// the product includes the archimedean factor).
    DualInverse,
}

/// An even positive weight on the real line built from local factors.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MeasureSpec {
    pub places: PlaceSet,
    pub side: Side,
    /// Multiplies the raw factor-product formula; 1.0 is the raw formula.
    pub normalization: f64,
}

/// Normalization constant that turns the raw archimedean weight
/// `|L_inf(1/2 - is)|^2 = pi^{-1/2} |Gamma(1/4 + is/2)|^2` into the
/// probability density `(2 pi)^{-3/2} |Gamma(1/4 + is/2)|^2`.
pub fn probability_normalization() -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    std::f64::consts::PI.sqrt() * two_pi.powf(-1.5)
}

impl MeasureSpec {
    /// Raw weight (normalization 1.0) for the given places and side.
    pub fn raw(places: PlaceSet, side: Side) -> Self {
        MeasureSpec {
            places,
            side,
            normalization: 1.0,
        }
    }

    /// The archimedean probability measure
    /// `(2 pi)^{-3/2} |Gamma(1/4 + is/2)|^2 ds`.
    pub fn probability_archimedean() -> Self {
        MeasureSpec {
            places: PlaceSet::archimedean(),
            side: Side::Euler,
            normalization: probability_normalization(),
        }
    }

    /// Raw semilocal weight `|prod_{v in S} L_v(1/2 - is)|^2 ds`.
    pub fn semilocal(places: PlaceSet) -> Self {
        MeasureSpec::raw(places, Side::Euler)
    }

    /// Total mass by composite Gauss–Legendre quadrature on
    /// `[-halfwidth, halfwidth]`.  The weight decays like
    /// `exp(-pi |s| / 2)`, so `halfwidth = 60` already bounds the tail by
    /// ~1e-41 relative.
    pub fn total_mass(&self, halfwidth: f64, panels: usize) -> f64 {
        let rule = crate::quadrature::CompositeGl::symmetric(halfwidth, panels, 20);
        rule.integrate(|s| measure_density(self, s))
    }
}

/// Pointwise density of the weight described by `spec`.
///
/// Finite and positive for all real `s` (the factors have no poles on the
/// line `Re z = 1/2`).
pub fn measure_density(spec: &MeasureSpec, s: f64) -> f64 {
    let z = match spec.side {
        Side::Euler => Complex64::new(0.5, -s),
        Side::DualInverse => Complex64::new(0.5, s),
    };
    let mut prod = 1.0f64;
    for v in spec.places.places() {
        let f = local_factor(v, z).expect("no poles on the critical line");
        prod *= f.norm_sqr();
    }
    match spec.side {
        Side::Euler => spec.normalization * prod,
        Side::DualInverse => spec.normalization / prod,
    }
}

// ---------------------------------------------------------------------------
// zeta on the critical line
// ---------------------------------------------------------------------------

// B_2, B_4, ..., B_18.
const BERNOULLI: [f64; 9] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
];

/// `zeta(1/2 + is)` by Euler–Maclaurin with `N = max(20, 2|s|)` direct terms
/// and 8 Bernoulli corrections; the remainder bound is evaluated explicitly
/// and must stay below 1e-12.
pub fn zeta_critical(s: f64) -> Result<C64, SpecFunError> {
    zeta_em(C64::new(0.5, s), 20.0_f64.max(2.0 * s.abs()) as usize, 8, ZETA_S_MAX, s)
}

/// Euler–Maclaurin evaluation of `zeta(z)` with explicit parameters.
/// Exposed for the doubled-parameter oracle used in tests.
pub fn zeta_em(
    z: C64,
    n_terms: usize,
    m_bernoulli: usize,
    s_bound: f64,
    s: f64,
) -> Result<C64, SpecFunError> {
    if s.abs() > s_bound {
        return Err(SpecFunError::OutOfRange(s.abs(), s_bound));
    }
    assert!(m_bernoulli <= 8, "only B_2..B_18 are tabulated");
    let n = n_terms.max(2);
    let nf = n as f64;

    let mut sum = Complex64::new(0.0, 0.0);
    for k in 1..n {
        sum += (-z * (k as f64).ln()).exp();
    }
    let n_pow = (-z * nf.ln()).exp(); // N^{-z}
    sum += n_pow * nf / (z - 1.0); // N^{1-z} / (z-1)
    sum += n_pow / 2.0;

    // rising = z (z+1) ... (z+2k-2), maintained incrementally.
    let mut rising = z;
    let mut n_shift = n_pow / nf; // N^{-z-2k+1} at k=1
    for k in 1..=m_bernoulli {
        let b = BERNOULLI[k - 1];
        let fact = factorial_f64(2 * k);
        sum += rising * n_shift * (b / fact);
        // extend rising by (z+2k-1)(z+2k) and shift N by N^{-2}
        rising *= (z + (2 * k - 1) as f64) * (z + (2 * k) as f64);
        n_shift /= nf * nf;
    }
    // Remainder bound with B_{2M+2}:
    //   |R| <= |B_{2M+2}/(2M+2)!| |z(z+1)...(z+2M)| N^{-Re z-2M-1}
    //          * |z+2M+1| / (Re z + 2M + 1)
    let m = m_bernoulli;
    let b_next = BERNOULLI[m].abs();
    let bound = b_next / factorial_f64(2 * m + 2) * rising.norm() * nf.powf(-z.re - (2 * m + 1) as f64)
        * (z + (2 * m + 1) as f64).norm()
        / (z.re + (2 * m + 1) as f64);
    if bound > 1e-12 {
        return Err(SpecFunError::TailBound(bound, 1e-12));
    }
    Ok(sum)
}

fn factorial_f64(n: usize) -> f64 {
    (1..=n).map(|k| k as f64).product::<f64>().max(1.0)
}

// ---------------------------------------------------------------------------
// Riemann–Landau Xi
// ---------------------------------------------------------------------------

/// `Xi(s) = (z(z-1)/2) Gamma(z/2) pi^{-z/2} zeta(z)` with `z = 1/2 + is`.
///
/// Accumulated in log space so the Gamma decay never underflows the product;
/// the imaginary residue is checked below `1e-10 |Xi|` and discarded.
pub fn xi_function(s: f64) -> Result<f64, SpecFunError> {
    let z = Complex64::new(0.5, s);
    let half = z / 2.0;
    let log_pre = log_gamma(half)? - half * std::f64::consts::PI.ln();
    let quadratic = z * (z - 1.0) / 2.0; // = -(1/4 + s^2)/2, real for real s
    let value = quadratic * log_pre.exp() * zeta_critical(s)?;
    let tol = 1e-10 * value.norm().max(1e-300);
    if value.im.abs() > tol {
        return Err(SpecFunError::ImaginaryResidue(value.im.abs(), tol));
    }
    Ok(value.re)
}

/// All sign-change zeros of `Xi` on `(0, s_max]`, bracketed on a uniform grid
/// and bisected to 1e-9.
///
/// `grid_step` defaults to 0.05; steps above 0.25 risk missing close pairs
/// and are rejected.
pub fn xi_zeros(s_max: f64, grid_step: Option<f64>) -> Result<Vec<f64>, SpecFunError> {
    let step = grid_step.unwrap_or(0.05);
    if step > 0.25 {
        return Err(SpecFunError::OutOfRange(step, 0.25));
    }
    if s_max > ZETA_S_MAX {
        return Err(SpecFunError::OutOfRange(s_max, ZETA_S_MAX));
    }
    let mut zeros = Vec::new();
    let mut prev_s = step.min(s_max);
    let mut prev_v = xi_function(prev_s)?;
    let mut s = prev_s + step;
    while s <= s_max + 1e-12 {
        let v = xi_function(s.min(s_max))?;
        if prev_v == 0.0 {
            zeros.push(prev_s);
        } else if prev_v.signum() != v.signum() && v != 0.0 {
            zeros.push(bisect_xi(prev_s, s.min(s_max), prev_v)?);
        }
        prev_s = s.min(s_max);
        prev_v = v;
        s += step;
    }
    Ok(zeros)
}

fn bisect_xi(mut lo: f64, mut hi: f64, v_lo: f64) -> Result<f64, SpecFunError> {
    let mut sign_lo = v_lo.signum();
    while hi - lo > 1e-9 {
        let mid = 0.5 * (lo + hi);
        let v = xi_function(mid)?;
        if v == 0.0 {
            return Ok(mid);
        }
        if v.signum() == sign_lo {
            lo = mid;
        } else {
            hi = mid;
        }
        sign_lo = xi_function(lo)?.signum();
    }
    Ok(0.5 * (lo + hi))
}
