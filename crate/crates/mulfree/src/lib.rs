//! Multiplicative Hermite and Laguerre polynomial families, finite free
//! multiplicative convolution, and the limit laws they converge to.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`]: extended-precision real/complex numbers with explicit
//!   mantissa widths and tagged serialization.
//! * [`poly`]: coefficient-level polynomial families and the finite free
//!   multiplicative convolution.
//! * [`series`]: truncated power series, composition, Lagrange inversion,
//!   and ordinary Bell polynomials.
//! * [`moments`]: power sums from roots or coefficients (Newton identities).
//! * [`roots`]: simultaneous root finding with certified residuals and
//!   support classification.
//! * [`limits`]: moment/cumulant sequences of the limit measures and the
//!   S/R-transform machinery.
//! * [`ode`]: moment evolution systems in the time parameters (RK4 for the
//!   continuous flows, exact difference iteration for the discrete one).
//! * [`experiments`]: orchestration of convergence studies, the identity
//!   suite, and file export.

pub mod experiments;
pub mod limits;
pub mod moments;
pub mod ode;
pub mod poly;
pub mod roots;
pub mod scalar;
pub mod series;

pub use experiments::{
    ConvergenceCell, ConvergenceReport, ExperimentError, HermiteStudy, IdentityCheck,
    LaguerreRegime, LaguerreStudy, RateFit, SupportCell,
};
pub use limits::{CumulantSequence, LimitError};
pub use ode::{Degree, OdeError};

pub use moments::{MomentError, MomentSequence};
pub use poly::{Polynomial, PolyError};
pub use roots::{RootError, RootSet, SupportMode, SupportReport};
pub use scalar::{required_bits, BigComplex, BigReal, ScalarError};
pub use series::{BellTable, PowerSeries, SeriesError};
