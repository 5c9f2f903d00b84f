//! Named vectors of the Cohen-Wales space, stored as abstract coordinates
//! on the basis `w_ij`, `ŵ_ij` (`i < j`). No generator action is modelled.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::arith::{hecke_m, RationalFunction};

type Rf = RationalFunction;

/// The basis vector `w_ij`, or `ŵ_ij` when `hat` is set.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Coord {
    pub i: u32,
    pub j: u32,
    pub hat: bool,
}

impl fmt::Display for Coord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.hat {
            write!(f, "hat_w({},{})", self.i, self.j)
        } else {
            write!(f, "w({},{})", self.i, self.j)
        }
    }
}

/// A finite linear combination of `w_ij` and `ŵ_ij` with nonzero
/// coefficients in Q(r).
#[derive(Clone, PartialEq, Debug, Default)]
pub struct BasisVectorFormula {
    terms: BTreeMap<Coord, Rf>,
}

impl BasisVectorFormula {
    pub fn new() -> Self {
        BasisVectorFormula::default()
    }

    /// Adds `c` to the coefficient of `w_ij` (or `ŵ_ij`).
    pub fn add(&mut self, i: u32, j: u32, hat: bool, c: &Rf) {
        assert!(i < j, "coordinates need i < j");
        let key = Coord { i, j, hat };
        let v = self.terms.get(&key).cloned().unwrap_or_else(Rf::zero) + c;
        if v.is_zero() {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, v);
        }
    }

    /// Adds `c (w_ij - ŵ_ij)`.
    pub fn add_t(&mut self, i: u32, j: u32, c: &Rf) {
        self.add(i, j, false, c);
        self.add(i, j, true, &-c);
    }

    pub fn terms(&self) -> &BTreeMap<Coord, Rf> {
        &self.terms
    }

    pub fn coefficient(&self, i: u32, j: u32, hat: bool) -> Rf {
        self.terms
            .get(&Coord { i, j, hat })
            .cloned()
            .unwrap_or_else(Rf::zero)
    }

    pub fn has_hat_terms(&self) -> bool {
        self.terms.keys().any(|c| c.hat)
    }

    /// The part supported on `w_ij` (`hat = false`) or on `ŵ_ij`, with
    /// hats dropped from the keys.
    pub fn part(&self, hat: bool) -> BTreeMap<(u32, u32), Rf> {
        self.terms
            .iter()
            .filter(|(c, _)| c.hat == hat)
            .map(|(c, v)| ((c.i, c.j), v.clone()))
            .collect()
    }
}

impl Serialize for BasisVectorFormula {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_map(
            self.terms
                .iter()
                .map(|(c, v)| (c.to_string(), v.to_string())),
        )
    }
}

fn t_combination(terms: &[(u32, u32, Rf)]) -> BasisVectorFormula {
    let mut v = BasisVectorFormula::new();
    for (i, j, c) in terms {
        v.add_t(*i, *j, c);
    }
    v
}

/// `w_{j-2,j-1} - (1/r) w_{j-2,j} + (1/r^2) w_{j-1,j}`, free of hat terms.
pub fn w_vector(j: u32) -> BasisVectorFormula {
    assert!(j >= 3, "the W-vector needs j >= 3");
    let ri = Rf::r().inv().expect("r is nonzero");
    let mut v = BasisVectorFormula::new();
    v.add(j - 2, j - 1, false, &Rf::one());
    v.add(j - 2, j, false, &-&ri);
    v.add(j - 1, j, false, &(&ri * &ri));
    v
}

/// The vector `u1` spanning the `g_1, g_2, g_4` eigenline of the
/// two-dimensional module, normalised so its `w_13` coefficient is 1.
pub fn u1_two_dim() -> BasisVectorFormula {
    let r = Rf::r();
    let ri = r.inv().expect("r is nonzero");
    let r2 = &r * &r;
    let plain = [
        (1, 3, Rf::one()),
        (1, 4, -&ri),
        (2, 4, &ri * &ri),
        (2, 3, -&ri),
    ];
    let mut v = BasisVectorFormula::new();
    for (i, j, c) in &plain {
        v.add(*i, *j, false, c);
        v.add(*i, *j, true, &(&r2 * c));
    }
    v
}

/// The spanning vectors of `U` and `W` inside the `t_ij` module, the
/// two-dimensional module's `u1`, and the first W-vector.
pub fn named_vectors() -> BTreeMap<String, BasisVectorFormula> {
    let m = hecke_m();
    let one = Rf::one();
    let neg = -Rf::one();
    let one_minus_r2 = Rf::one() - Rf::r() * Rf::r();
    let mut out = BTreeMap::new();
    out.insert(
        "u1".into(),
        t_combination(&[(1, 2, m.clone()), (1, 3, one.clone()), (2, 4, one.clone())]),
    );
    out.insert(
        "u2".into(),
        t_combination(&[
            (1, 2, one_minus_r2.clone()),
            (2, 3, one.clone()),
            (1, 4, one.clone()),
            (2, 4, -&m),
        ]),
    );
    out.insert(
        "u3".into(),
        t_combination(&[(1, 2, one.clone()), (3, 4, one.clone())]),
    );
    out.insert(
        "w1".into(),
        t_combination(&[(1, 3, neg.clone()), (2, 3, m.clone()), (2, 4, one.clone())]),
    );
    out.insert(
        "w2".into(),
        t_combination(&[
            (1, 2, neg.clone()),
            (1, 3, m.clone()),
            (2, 3, one_minus_r2),
            (3, 4, one.clone()),
        ]),
    );
    out.insert("w3".into(), t_combination(&[(2, 3, neg), (1, 4, one)]));
    out.insert("u1_two_dim".into(), u1_two_dim());
    out.insert("W3".into(), w_vector(3));
    out
}

/// Index of `W_s^{(j)}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct WIndex {
    pub s: u32,
    pub j: u32,
}

/// Right-hand side of `g_k W_k^{(j)} = W_{k-1}^{(j)} + r W_k^{(j)} -
/// r^{j-k-1} W_{k-1}^{(k+1)}` for `2 <= k <= j - 2`.
pub fn w_recurrence(j: u32, k: u32) -> Vec<(WIndex, Rf)> {
    assert!(k >= 2 && k + 2 <= j, "recurrence needs 2 <= k <= j - 2");
    let e = j as i64 - k as i64 - 1;
    vec![
        (WIndex { s: k - 1, j }, Rf::one()),
        (WIndex { s: k, j }, Rf::r()),
        (
            WIndex { s: k - 1, j: k + 1 },
            Rf::monomial(crate::arith::int(-1), e),
        ),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn u3_coefficients() {
        let v = &named_vectors()["u3"];
        let expect: Vec<(Coord, Rf)> = vec![
            (
                Coord {
                    i: 1,
                    j: 2,
                    hat: false,
                },
                Rf::one(),
            ),
            (
                Coord {
                    i: 1,
                    j: 2,
                    hat: true,
                },
                -Rf::one(),
            ),
            (
                Coord {
                    i: 3,
                    j: 4,
                    hat: false,
                },
                Rf::one(),
            ),
            (
                Coord {
                    i: 3,
                    j: 4,
                    hat: true,
                },
                -Rf::one(),
            ),
        ];
        assert_eq!(v.terms().clone().into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn w_vector_has_no_hats() {
        let v = w_vector(3);
        assert!(!v.has_hat_terms());
        assert_eq!(v.coefficient(1, 3, false), "-1/r".parse().unwrap());
        assert_eq!(v.coefficient(2, 3, false), "1/r^2".parse().unwrap());
        assert_eq!(w_vector(7).terms().len(), 3);
    }

    #[test]
    fn hat_ratio_is_r_squared() {
        let v = u1_two_dim();
        let plain = v.part(false);
        let hat = v.part(true);
        assert_eq!(
            plain.keys().collect::<Vec<_>>(),
            hat.keys().collect::<Vec<_>>()
        );
        for (k, c) in &plain {
            assert_eq!(&hat[k] / c, Rf::r() * Rf::r());
        }
    }

    #[test]
    fn recurrence_shape() {
        let terms = w_recurrence(6, 3);
        assert_eq!(terms[2].0, WIndex { s: 2, j: 4 });
        assert_eq!(terms[2].1, "-r^2".parse().unwrap());
    }
}
