//! Exact arithmetic: rationals, Laurent polynomials in `r`, the field Q(r)
//! and signed monomials `±r^k`.

mod laurent;
mod monomial;
mod parse;
mod poly;
mod ratfunc;
mod roots;

use thiserror::Error;

pub use laurent::LaurentPolynomial;
pub use monomial::{Sign, SignedMonomial};
pub use parse::parse_rational_function;
pub use poly::QPoly;
pub use ratfunc::RationalFunction;
pub use roots::rational_roots;

#[allow(unused_imports)]
pub(crate) use laurent::int;

/// Arbitrary-precision rational number in lowest terms with positive
/// denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at r = {point}: denominator {denominator} vanishes")]
    Pole { point: String, denominator: String },
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },
}

/// The Hecke parameter `m = 1/r - r`, written in the inverted `r` used
/// throughout this crate.
pub fn hecke_m() -> RationalFunction {
    RationalFunction::r().inv().expect("r is nonzero") - RationalFunction::r()
}

/// Parses a decimal or fractional rational such as `-5/3` or `7`.
pub fn parse_rational(s: &str) -> Result<Rational, ArithError> {
    let f = parse_rational_function(s)?;
    f.as_constant().ok_or(ArithError::Parse {
        position: 0,
        message: format!("`{s}` is not a rational constant"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hecke_m_values() {
        let m = hecke_m();
        assert_eq!(
            m.eval(&int(2)).unwrap(),
            Rational::new((-3).into(), 2.into())
        );
        assert_eq!(m.eval(&int(1)).unwrap(), int(0));
        assert_eq!(m, "(1 - r^2)/r".parse().unwrap());
    }

    #[test]
    fn parse_rational_constants() {
        assert_eq!(
            parse_rational("-5/3").unwrap(),
            Rational::new((-5).into(), 3.into())
        );
        assert!(parse_rational("r").is_err());
    }
}
