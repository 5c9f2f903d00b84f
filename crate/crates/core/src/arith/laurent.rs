use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::poly::QPoly;
use super::Rational;

/// A Laurent polynomial in `r` with rational coefficients.
///
/// Stored as `r^low * body` where `body` is an ordinary polynomial with a
/// nonzero constant term, so exponents may be negative and no zero
/// coefficient is ever kept.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct LaurentPolynomial {
    low: i64,
    body: QPoly,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        LaurentPolynomial {
            low: 0,
            body: QPoly::zero(),
        }
    }

    pub fn one() -> Self {
        LaurentPolynomial::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPolynomial::from_poly(QPoly::constant(c), 0)
    }

    /// `c r^k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        LaurentPolynomial::from_poly(QPoly::constant(c), k)
    }

    /// `r^shift * p`, normalised.
    pub fn from_poly(p: QPoly, shift: i64) -> Self {
        if p.is_zero() {
            return LaurentPolynomial::zero();
        }
        let v = p.x_valuation();
        LaurentPolynomial {
            low: shift + v as i64,
            body: p.shift_down(v),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, Rational)>>(terms: I) -> Self {
        let map: BTreeMap<i64, Rational> =
            terms.into_iter().fold(BTreeMap::new(), |mut m, (e, c)| {
                *m.entry(e).or_insert_with(Rational::zero) += c;
                m
            });
        let Some((&lo, _)) = map.iter().find(|(_, c)| !c.is_zero()) else {
            return LaurentPolynomial::zero();
        };
        let hi = *map.keys().next_back().unwrap();
        let mut coeffs = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (e, c) in map.into_iter().filter(|(e, _)| *e >= lo) {
            coeffs[(e - lo) as usize] = c;
        }
        LaurentPolynomial::from_poly(QPoly::from_coeffs(coeffs), lo)
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &Rational)> + '_ {
        let low = self.low;
        self.body
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (low + k as i64, c))
    }

    pub fn coefficient(&self, e: i64) -> Rational {
        if e < self.low {
            return Rational::zero();
        }
        self.body.coeff((e - self.low) as usize)
    }

    pub fn is_zero(&self) -> bool {
        self.body.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.body.is_one()
    }

    /// Lowest exponent present (0 for the zero polynomial).
    pub fn min_exponent(&self) -> i64 {
        self.low
    }

    pub fn max_exponent(&self) -> i64 {
        self.low + self.body.degree().unwrap_or(0) as i64
    }

    /// The polynomial part after factoring out `r^min_exponent`; its
    /// constant term is nonzero.
    pub fn body(&self) -> &QPoly {
        &self.body
    }

    pub fn is_monomial(&self) -> bool {
        self.body.degree() == Some(0)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            low: self.low,
            body: self.body.neg(),
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LaurentPolynomial::from_poly(self.body.scale(c), self.low)
    }

    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPolynomial {
            low: self.low + k,
            body: self.body.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let a = self.body.shift_up((self.low - low) as usize);
        let b = other.body.shift_up((other.low - low) as usize);
        LaurentPolynomial::from_poly(a.add(&b), low)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return LaurentPolynomial::zero();
        }
        LaurentPolynomial::from_poly(self.body.mul(&other.body), self.low + other.low)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(LaurentPolynomial::one(), |acc, _| acc.mul(self))
    }

    /// Exact evaluation. `r0 = 0` is only allowed when no negative exponent
    /// is present.
    pub fn eval(&self, r0: &Rational) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        if r0.is_zero() {
            return if self.low < 0 {
                None
            } else if self.low == 0 {
                Some(self.body.coeff(0))
            } else {
                Some(Rational::zero())
            };
        }
        let body = self.body.eval(r0);
        Some(body * pow_rational(r0, self.low))
    }
}

pub(crate) fn pow_rational(x: &Rational, k: i64) -> Rational {
    let base = if k < 0 { x.recip() } else { x.clone() };
    let mut acc = Rational::one();
    for _ in 0..k.unsigned_abs() {
        acc *= &base;
    }
    acc
}

pub(crate) fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn from_terms_merges_and_drops_zeros() {
        let p =
            LaurentPolynomial::from_terms([(-2, int(3)), (1, int(1)), (-2, int(-3)), (4, int(0))]);
        assert_eq!(p, LaurentPolynomial::monomial(int(1), 1));
        assert_eq!(p.min_exponent(), 1);
    }

    #[test]
    fn product_of_laurent_terms() {
        // (r - 1/r)(r + 1/r) = r^2 - r^-2
        let a = LaurentPolynomial::from_terms([(1, int(1)), (-1, int(-1))]);
        let b = LaurentPolynomial::from_terms([(1, int(1)), (-1, int(1))]);
        let expect = LaurentPolynomial::from_terms([(2, int(1)), (-2, int(-1))]);
        assert_eq!(a.mul(&b), expect);
    }

    #[test]
    fn eval_with_negative_exponents() {
        let a = LaurentPolynomial::from_terms([(1, int(1)), (-1, int(-1))]);
        assert_eq!(a.eval(&int(2)), Some(Rational::new(3.into(), 2.into())));
        assert_eq!(a.eval(&int(0)), None);
    }
}
