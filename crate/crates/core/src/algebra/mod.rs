//! Exact arithmetic: rationals, quadratic towers, polynomials, rational
//! functions, truncated Puiseux series and Sturm sequences.

pub mod number;
pub mod poly;
pub mod ratfun;
pub mod rational;
pub mod tower;

pub use number::AlgebraicNumber;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use rational::Q;
pub use tower::RealAlgebraic;
pub mod series;
pub mod sturm;

pub use series::PuiseuxSeries;
