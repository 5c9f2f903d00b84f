//! Rational roots of univariate polynomials over Q, found without
//! factorisation: Sturm isolation of the real roots, bisection to a width
//! below `1/a_d^2`, then the simplest rational in each interval.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::poly::QPoly;
use super::Rational;

/// Distinct rational roots of `p`, ascending. The zero polynomial has none.
pub fn rational_roots(p: &QPoly) -> Vec<Rational> {
    let mut roots = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return roots;
    }
    let mut f = p.squarefree();
    'restart: loop {
        if f.degree().unwrap_or(0) == 0 {
            break;
        }
        let lead = f
            .primitive_integer()
            .last()
            .cloned()
            .expect("nonzero")
            .abs();
        let width = Rational::new(BigInt::one(), &lead * &lead);
        let chain = sturm_chain(&f);
        let bound = cauchy_bound(&f);
        let mut stack = vec![(-bound.clone(), bound)];
        while let Some((a, b)) = stack.pop() {
            let count = variations(&chain, &a) - variations(&chain, &b);
            if count == 0 {
                continue;
            }
            let mid = (&a + &b) / Rational::from_integer(2.into());
            if f.eval(&mid).is_zero() {
                roots.push(mid.clone());
                f = f.div_exact(&QPoly::linear(&mid));
                continue 'restart;
            }
            if count > 1 {
                stack.push((a, mid.clone()));
                stack.push((mid, b));
                continue;
            }
            match refine(&f, a, b, &width) {
                Refined::Root(x) => {
                    roots.push(x.clone());
                    f = f.div_exact(&QPoly::linear(&x));
                    continue 'restart;
                }
                Refined::Irrational => {}
            }
        }
        break;
    }
    roots.sort();
    roots
}

enum Refined {
    Root(Rational),
    Irrational,
}

/// `f` has exactly one simple root in `(a, b]`, and neither end is a root.
fn refine(f: &QPoly, mut a: Rational, mut b: Rational, width: &Rational) -> Refined {
    let two = Rational::from_integer(2.into());
    let sign_a = f.eval(&a).is_positive();
    while &b - &a >= *width {
        let mid = (&a + &b) / &two;
        let v = f.eval(&mid);
        if v.is_zero() {
            return Refined::Root(mid);
        }
        if v.is_positive() == sign_a {
            a = mid;
        } else {
            b = mid;
        }
    }
    let candidate = simplest_between(&a, &b);
    if f.eval(&candidate).is_zero() {
        Refined::Root(candidate)
    } else {
        Refined::Irrational
    }
}

fn sturm_chain(f: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![f.clone(), f.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].degree().unwrap_or(0) == 0 {
            break;
        }
        let (_, rem) = chain[n - 2].div_rem(&chain[n - 1]);
        if rem.is_zero() {
            break;
        }
        chain.push(rem.neg());
    }
    chain
}

fn variations(chain: &[QPoly], x: &Rational) -> i64 {
    let signs: Vec<bool> = chain
        .iter()
        .map(|p| p.eval(x))
        .filter(|v| !v.is_zero())
        .map(|v| v.is_positive())
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count() as i64
}

/// Every real root lies strictly inside `(-B, B)`.
fn cauchy_bound(f: &QPoly) -> Rational {
    let lead = f.leading().expect("nonzero").abs();
    let max = f.coeffs()[..f.coeffs().len() - 1]
        .iter()
        .map(|c| c.abs() / &lead)
        .max()
        .unwrap_or_else(Rational::zero);
    max + Rational::from_integer(2.into())
}

/// The rational of least denominator in `[a, b]`.
fn simplest_between(a: &Rational, b: &Rational) -> Rational {
    debug_assert!(a <= b);
    if !a.is_positive() && !b.is_negative() {
        return Rational::zero();
    }
    if b.is_negative() {
        return -simplest_between(&-b, &-a);
    }
    let fl = a.floor();
    if &fl == a {
        return fl;
    }
    let next = &fl + Rational::one();
    if &next <= b {
        return next;
    }
    let lo = (b - &fl).recip();
    let hi = (a - &fl).recip();
    fl + simplest_between(&lo, &hi).recip()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    fn from_roots(roots: &[Rational]) -> QPoly {
        roots
            .iter()
            .fold(QPoly::one(), |acc, x| acc.mul(&QPoly::linear(x)))
    }

    #[test]
    fn finds_all_rational_roots() {
        let rs = vec![q(-29, 6), q(28, 3), q(0, 1), q(5, 3)];
        let p = from_roots(&rs).mul(&QPoly::from_ints(&[-2, 0, 1]));
        let mut expect = rs.clone();
        expect.sort();
        assert_eq!(rational_roots(&p), expect);
    }

    #[test]
    fn repeated_and_close_roots() {
        let rs = vec![q(1, 1000), q(1, 999), q(1, 1000), q(-7, 2)];
        let p = from_roots(&rs);
        assert_eq!(rational_roots(&p), vec![q(-7, 2), q(1, 1000), q(1, 999)]);
    }

    #[test]
    fn no_rational_roots() {
        assert!(rational_roots(&QPoly::from_ints(&[1, 0, 1])).is_empty());
        assert!(rational_roots(&QPoly::from_ints(&[-3, 0, 1])).is_empty());
        assert!(rational_roots(&QPoly::from_ints(&[5])).is_empty());
    }

    #[test]
    fn simplest_rational() {
        assert_eq!(simplest_between(&q(3, 10), &q(4, 10)), q(1, 3));
        assert_eq!(simplest_between(&q(-4, 10), &q(-3, 10)), q(-1, 3));
        assert_eq!(simplest_between(&q(7, 2), &q(7, 2)), q(7, 2));
    }
}
