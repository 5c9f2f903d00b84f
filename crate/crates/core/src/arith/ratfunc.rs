use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::{int, LaurentPolynomial};
use super::poly::QPoly;
use super::{ArithError, Rational};

/// An element of Q(r) in canonical form.
///
/// `numerator` is a Laurent polynomial; `denominator` is an ordinary
/// polynomial with nonzero constant term and leading coefficient one, coprime
/// to the numerator's polynomial body. Structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn zero() -> Self {
        RationalFunction {
            num: LaurentPolynomial::zero(),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn one() -> Self {
        RationalFunction::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        RationalFunction {
            num: LaurentPolynomial::constant(c),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn integer(n: i64) -> Self {
        RationalFunction::constant(int(n))
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        RationalFunction::monomial(Rational::one(), 1)
    }

    /// `c r^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        RationalFunction {
            num: LaurentPolynomial::monomial(c, k),
            den: LaurentPolynomial::one(),
        }
    }

    pub fn from_laurent(p: LaurentPolynomial) -> Self {
        RationalFunction {
            num: p,
            den: LaurentPolynomial::one(),
        }
    }

    /// Builds `num / den` and brings it to canonical form.
    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    fn normalize(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        if num.is_zero() {
            return RationalFunction::zero();
        }
        let shift = num.min_exponent() - den.min_exponent();
        let (n0, d0) = (num.body(), den.body());
        let (n1, d1) = if d0.degree() == Some(0) {
            (n0.clone(), d0.clone())
        } else {
            let g = n0.gcd(d0);
            if g.is_one() {
                (n0.clone(), d0.clone())
            } else {
                (n0.div_exact(&g), d0.div_exact(&g))
            }
        };
        let lc = d1.leading().expect("nonzero denominator").clone();
        let (n1, d1) = if lc.is_one() {
            (n1, d1)
        } else {
            let inv = lc.recip();
            (n1.scale(&inv), d1.scale(&inv))
        };
        RationalFunction {
            num: LaurentPolynomial::from_poly(n1, shift),
            den: LaurentPolynomial::from_poly(d1, 0),
        }
    }

    pub fn numerator(&self) -> &LaurentPolynomial {
        &self.num
    }

    /// Monic, with lowest exponent zero.
    pub fn denominator(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// Whether the value is a Laurent polynomial (denominator one).
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    /// The rational constant, if the value does not depend on `r`.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        (self.den.is_one() && self.num.is_monomial() && self.num.min_exponent() == 0)
            .then(|| self.num.coefficient(0))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(Self::normalize(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative powers invert.
    pub fn pow(&self, k: i64) -> Result<Self, ArithError> {
        let base = if k < 0 { self.inv()? } else { self.clone() };
        Ok(RationalFunction {
            num: base.num.pow(k.unsigned_abs() as u32),
            den: base.den.pow(k.unsigned_abs() as u32),
        })
    }

    /// Exact specialisation at `r = r0`.
    pub fn eval(&self, r0: &Rational) -> Result<Rational, ArithError> {
        let den = self
            .den
            .eval(r0)
            .expect("denominator has no negative exponents");
        if den.is_zero() {
            return Err(ArithError::Pole {
                point: r0.to_string(),
                denominator: self.den_text(),
            });
        }
        let num = self.num.eval(r0).ok_or_else(|| ArithError::Pole {
            point: r0.to_string(),
            denominator: format_power(-self.num.min_exponent()),
        })?;
        Ok(num / den)
    }

    fn den_text(&self) -> String {
        let (_, q) = self.integer_parts();
        format_poly(&q)
    }

    /// Integer polynomials `(P, Q)` (ascending coefficient vectors, no
    /// negative exponents) with `self = P/Q`, `Q` having positive leading
    /// coefficient and `gcd(content P, content Q) = 1`.
    fn integer_parts(&self) -> (Vec<BigInt>, Vec<BigInt>) {
        let lcm = self
            .num
            .terms()
            .map(|(_, c)| c.denom().clone())
            .chain(self.den.terms().map(|(_, c)| c.denom().clone()))
            .fold(BigInt::one(), |acc, d| acc.lcm(&d));
        let scale = |p: &LaurentPolynomial, offset: i64| -> Vec<BigInt> {
            let len = (p.max_exponent() - offset + 1).max(0) as usize;
            let mut v = vec![BigInt::zero(); len];
            for (e, c) in p.terms() {
                v[(e - offset) as usize] = (c * Rational::from_integer(lcm.clone())).to_integer();
            }
            v
        };
        let shift = self.num.min_exponent();
        let (mut p, mut q) = (scale(&self.num, shift.min(0)), scale(&self.den, 0));
        if shift < 0 {
            let mut shifted = vec![BigInt::zero(); (-shift) as usize];
            shifted.extend(q);
            q = shifted;
        }
        let content = p
            .iter()
            .chain(q.iter())
            .fold(BigInt::zero(), |acc, c| acc.gcd(c));
        if !content.is_zero() && !content.is_one() {
            p.iter_mut().for_each(|c| *c /= &content);
            q.iter_mut().for_each(|c| *c /= &content);
        }
        (p, q)
    }

    fn add_impl(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Self::normalize(self.num.add(&other.num), self.den.clone());
        }
        let g = self.den.body().gcd(other.den.body());
        let a_co = LaurentPolynomial::from_poly(other.den.body().div_exact(&g), 0);
        let b_co = LaurentPolynomial::from_poly(self.den.body().div_exact(&g), 0);
        let num = self.num.mul(&a_co).add(&other.num.mul(&b_co));
        Self::normalize(num, self.den.mul(&a_co))
    }

    fn mul_impl(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && other.den.is_one() {
            return RationalFunction {
                num: self.num.mul(&other.num),
                den: LaurentPolynomial::one(),
            };
        }
        Self::normalize(self.num.mul(&other.num), self.den.mul(&other.den))
    }
}

fn format_power(k: i64) -> String {
    match k {
        1 => "r".to_string(),
        _ => format!("r^{k}"),
    }
}

/// Formats an ascending integer coefficient vector in descending powers.
fn format_poly(coeffs: &[BigInt]) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        match (k, abs.is_one()) {
            (0, _) => out.push_str(&abs.to_string()),
            (_, true) => out.push_str(&format_power(k as i64)),
            (_, false) => {
                out.push_str(&abs.to_string());
                out.push('*');
                out.push_str(&format_power(k as i64));
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn term_count(coeffs: &[BigInt]) -> usize {
    coeffs.iter().filter(|c| !c.is_zero()).count()
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (p, q) = self.integer_parts();
        let p_text = format_poly(&p);
        if q.len() == 1 && q[0].is_one() {
            return write!(f, "{p_text}");
        }
        let p_text = if term_count(&p) > 1 {
            format!("({p_text})")
        } else {
            p_text
        };
        // a bare power of r or a plain integer needs no parentheses
        let bare_q = term_count(&q) == 1 && (q.len() == 1 || q.last().is_some_and(|c| c.is_one()));
        let q_text = format_poly(&q);
        if bare_q {
            write!(f, "{p_text}/{q_text}")
        } else {
            write!(f, "{p_text}/({q_text})")
        }
    }
}

impl FromStr for RationalFunction {
    type Err = ArithError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        super::parse::parse_rational_function(s)
    }
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        RationalFunction::constant(c)
    }
}

impl From<i64> for RationalFunction {
    fn from(n: i64) -> Self {
        RationalFunction::integer(n)
    }
}

impl From<LaurentPolynomial> for RationalFunction {
    fn from(p: LaurentPolynomial) -> Self {
        RationalFunction::from_laurent(p)
    }
}

impl From<QPoly> for RationalFunction {
    fn from(p: QPoly) -> Self {
        RationalFunction::from_laurent(LaurentPolynomial::from_poly(p, 0))
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                self.$imp(rhs)
            }
        }
        impl $trait<RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$imp(&rhs)
            }
        }
        impl $trait<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: &RationalFunction) -> RationalFunction {
                (&self).$imp(rhs)
            }
        }
        impl $trait<RationalFunction> for &RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                self.$imp(&rhs)
            }
        }
    };
}

impl RationalFunction {
    fn sub_impl(&self, other: &Self) -> Self {
        self.add_impl(&-other)
    }

    /// Panics on division by zero; use [`RationalFunction::checked_div`]
    /// for a recoverable error.
    fn div_impl(&self, other: &Self) -> Self {
        self.checked_div(other).expect("division by zero in Q(r)")
    }
}

forward_binop!(Add, add, add_impl);
forward_binop!(Sub, sub, sub_impl);
forward_binop!(Mul, mul, mul_impl);
forward_binop!(Div, div, div_impl);

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rf(s: &str) -> RationalFunction {
        s.parse().unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn common_denominator() {
        assert_eq!(rf("1/(r-1)") + rf("1/(r+1)"), rf("2*r/(r^2-1)"));
    }

    #[test]
    fn cancellation() {
        let f = rf("(r^2-1)/(r-1)");
        assert_eq!(f, rf("r+1"));
        assert!(f.is_laurent());
    }

    #[test]
    fn denominator_is_monic_without_r_factor() {
        let f = rf("(2*r^4 - r^2 + 1)/(r - r^3)");
        assert!(f.denominator().terms().next_back().unwrap().1.is_one());
        assert_eq!(f.denominator().min_exponent(), 0);
        assert_eq!(f.numerator().min_exponent(), -1);
    }

    #[test]
    fn eval_examples() {
        assert_eq!(rf("r - 1/r").eval(&q(2, 1)).unwrap(), q(3, 2));
        let err = rf("1/(r-1)").eval(&q(1, 1)).unwrap_err();
        match err {
            ArithError::Pole { denominator, .. } => assert_eq!(denominator, "r - 1"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(rf("1/r^2").eval(&q(0, 1)).is_err());
    }

    #[test]
    fn display_examples() {
        assert_eq!(rf("1/r^9").to_string(), "1/r^9");
        assert_eq!(rf("-r^3").to_string(), "-r^3");
        assert_eq!(rf("5/3").to_string(), "5/3");
        assert_eq!(rf("1/r - r").to_string(), "(-r^2 + 1)/r");
        assert_eq!(rf("2*r/(r^2-1)").to_string(), "2*r/(r^2 - 1)");
        assert_eq!(rf("r/(2*r+1)").to_string(), "r/(2*r + 1)");
        assert_eq!(rf("(r+1)/2").to_string(), "(r + 1)/2");
        assert_eq!(rf("0").to_string(), "0");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            rf("r").checked_div(&RationalFunction::zero()),
            Err(ArithError::DivisionByZero)
        );
        assert!(RationalFunction::zero().inv().is_err());
    }

    #[test]
    fn negative_power() {
        assert_eq!(rf("r+1").pow(-2).unwrap(), rf("1/(r^2+2*r+1)"));
    }
}
