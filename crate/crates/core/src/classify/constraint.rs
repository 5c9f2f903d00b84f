use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::arith::{Sign, SignedMonomial};

use super::ClassifyError;

/// A condition on `r`: none, or `r^k = ±1` for a given `k >= 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum RConstraint {
    Generic,
    Root { k: u32, sign: Sign },
}

impl RConstraint {
    pub fn root(k: u32, sign: Sign) -> Result<Self, ClassifyError> {
        if k == 0 {
            return Err(ClassifyError::BadConstraint(
                "the exponent k must be at least 1".into(),
            ));
        }
        Ok(RConstraint::Root { k, sign })
    }

    /// Multiplicative orders `d` of a primitive root of unity `r` that
    /// satisfy the constraint; empty in generic mode.
    pub fn candidate_orders(&self) -> Vec<u64> {
        match *self {
            RConstraint::Generic => Vec::new(),
            RConstraint::Root { k, sign } => (1..=2 * k as u64)
                .filter(|&d| holds_at(d, k as i64, sign))
                .collect(),
        }
    }
}

/// Whether `r^e = sign` when `r` has multiplicative order exactly `d`.
pub fn holds_at(d: u64, e: i64, sign: Sign) -> bool {
    let d = d as i64;
    match sign {
        Sign::Plus => e.rem_euclid(d) == 0,
        Sign::Minus => d % 2 == 0 && e.rem_euclid(d) == d / 2,
    }
}

/// Whether `a = b` as values of `l` when `r` has order `d`.
pub fn monomials_equal_at(d: u64, a: SignedMonomial, b: SignedMonomial) -> bool {
    let q = a.ratio(b);
    holds_at(d, q.exponent, q.sign)
}

impl fmt::Display for RConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RConstraint::Generic => write!(f, "generic"),
            RConstraint::Root {
                k,
                sign: Sign::Plus,
            } => write!(f, "r^{k} = 1"),
            RConstraint::Root {
                k,
                sign: Sign::Minus,
            } => write!(f, "r^{k} = -1"),
        }
    }
}

impl FromStr for RConstraint {
    type Err = ClassifyError;

    /// `generic`, `k:+1`, `k:-1`, `r^k = 1` or `r^k = -1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t.eq_ignore_ascii_case("generic") {
            return Ok(RConstraint::Generic);
        }
        let bad =
            || ClassifyError::BadConstraint(format!("cannot read `{s}`; use k:+1, k:-1 or r^k=±1"));
        let (k, z) = if let Some(rest) = t.strip_prefix("r^") {
            rest.split_once('=').ok_or_else(bad)?
        } else {
            t.split_once(':').ok_or_else(bad)?
        };
        let k: u32 = k.parse().map_err(|_| bad())?;
        let sign = match z {
            "1" | "+1" => Sign::Plus,
            "-1" => Sign::Minus,
            _ => return Err(bad()),
        };
        RConstraint::root(k, sign)
    }
}

impl Serialize for RConstraint {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for RConstraint {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// One way a candidate order of `r` breaks semisimplicity.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Violation {
    pub order: u64,
    pub reason: String,
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct SemisimplicityReport {
    pub admissible: bool,
    /// Orders of `r` compatible with both the constraint and semisimplicity.
    pub admissible_orders: Vec<u64>,
    pub violations: Vec<Violation>,
}

/// First semisimplicity condition broken by a primitive `d`-th root of
/// unity: `r^{2j} = ±1` for some `1 <= j <= n-1`, or `r^{2n} = 1`.
pub fn order_violation(n: u32, d: u64) -> Option<String> {
    for j in 1..n as i64 {
        if holds_at(d, 2 * j, Sign::Plus) {
            return Some(format!("r^{} = 1", 2 * j));
        }
        if holds_at(d, 2 * j, Sign::Minus) {
            return Some(format!("r^{} = -1", 2 * j));
        }
    }
    holds_at(d, 2 * n as i64, Sign::Plus).then(|| format!("r^{} = 1", 2 * n))
}

/// Decides whether some value of `r` allowed by `rc` keeps the Hecke
/// algebras of types `D_n` and `A_{n-1}` semisimple.
pub fn semisimplicity_check(n: u32, rc: &RConstraint) -> SemisimplicityReport {
    if *rc == RConstraint::Generic {
        return SemisimplicityReport {
            admissible: true,
            admissible_orders: Vec::new(),
            violations: Vec::new(),
        };
    }
    let mut admissible_orders = Vec::new();
    let mut violations = Vec::new();
    for d in rc.candidate_orders() {
        match order_violation(n, d) {
            Some(reason) => violations.push(Violation { order: d, reason }),
            None => admissible_orders.push(d),
        }
    }
    SemisimplicityReport {
        admissible: !admissible_orders.is_empty(),
        admissible_orders,
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        let a: RConstraint = "16:-1".parse().unwrap();
        let b: RConstraint = "r^16 = -1".parse().unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "r^16 = -1");
        assert_eq!(
            "generic".parse::<RConstraint>().unwrap(),
            RConstraint::Generic
        );
        assert!("0:+1".parse::<RConstraint>().is_err());
        assert!("4:2".parse::<RConstraint>().is_err());
    }

    #[test]
    fn orders() {
        let rc = RConstraint::root(12, Sign::Minus).unwrap();
        assert_eq!(rc.candidate_orders(), vec![8, 24]);
        let rc = RConstraint::root(4, Sign::Plus).unwrap();
        assert_eq!(rc.candidate_orders(), vec![1, 2, 4]);
    }

    #[test]
    fn semisimplicity_examples() {
        for n in 4..=12 {
            let case_ii = RConstraint::root(4 * n - 4, Sign::Minus).unwrap();
            assert!(semisimplicity_check(n, &case_ii).admissible, "n = {n}");
            let bad = RConstraint::root(4 * n - 4, Sign::Plus).unwrap();
            assert!(!semisimplicity_check(n, &bad).admissible, "n = {n}");
        }
        assert!(!semisimplicity_check(5, &RConstraint::root(4, Sign::Plus).unwrap()).admissible);
        assert!(semisimplicity_check(5, &RConstraint::Generic).admissible);
    }
}
