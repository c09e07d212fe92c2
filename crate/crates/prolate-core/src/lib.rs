//! Numerical core for a spectral toolkit built around even measures on the
//! real line whose densities are squared moduli of Euler-factor products.
//!
//! The crate is organised around five subsystems:
//!
//! * [`specfun`] — complex log-gamma, local Euler factors, the spectral
//!   weight densities, zeta on the critical line and the Riemann–Landau Xi
//!   function with a zero finder.
//! * [`orthopoly`] — exact rational moment sequences, Hankel and Stieltjes
//!   recurrence extraction, closed-form orthonormal polynomials, Hermite
//!   functions and Gauss quadrature.
//! * [`jacobi`] (with the [`tridiag`] eigensolvers) — Jacobi-matrix
//!   realisations of the scaling operator, its parity squares, the prolate
//!   operators (explicit, generic and semilocal), truncation-convergence
//!   control, the x-space quadrature oracle and the spectral distance.
//! * [`mellin`] and [`padic`] — numerical Mellin transforms, the lattice-sum
//!   maps over smooth integers, the Euler-factor identity checks, p-adic
//!   shell functions with their exact Fourier transform and the Sonin
//!   generator.
//! * [`metaplectic`] — exact banded-matrix algebra for the number operator,
//!   the tridiagonal multiplication operator and the associated sl2 triple,
//!   commutator identity suites and moment reconstruction.
//!
//! All operations are pure functions of their value inputs and are safe to
//! call concurrently.

pub mod jacobi;
pub mod mellin;
pub mod metaplectic;
pub mod orthopoly;
pub mod padic;
pub mod quadrature;
pub mod specfun;
pub mod tridiag;

pub use jacobi::{CyclicPairSpec, Spectrum, SymmetricTridiagonal};
pub use orthopoly::{Phase, PolynomialCoeffs, RationalMomentSequence, RecurrenceCoefficients};
pub use padic::PadicShellFunction;
pub use specfun::{MeasureSpec, Place, PlaceSet, Side};

/// Complex double used throughout.
pub type C64 = num_complex::Complex64;
