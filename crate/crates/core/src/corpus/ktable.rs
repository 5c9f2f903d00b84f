//! Reference values of `k(n)`, the dimension of the distinguished
//! submodule `K(n)` of the Cohen-Wales space. They are recorded data, not
//! recomputed here.

use serde::Serialize;

use crate::arith::{Sign, SignedMonomial};
use crate::classify::RConstraint;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "kebab-case")]
pub enum KValue {
    Exact(u128),
    /// Only a lower bound is known.
    AtLeast(u128),
}

impl KValue {
    pub fn bound(self) -> u128 {
        match self {
            KValue::Exact(k) | KValue::AtLeast(k) => k,
        }
    }

    /// Whether a dimension `d` is compatible with this value.
    pub fn admits(self, d: u128) -> bool {
        match self {
            KValue::Exact(k) => d == k,
            KValue::AtLeast(k) => d >= k,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct KTableEntry {
    pub n: u32,
    pub l: SignedMonomial,
    pub condition: RConstraint,
    /// Side condition that only restricts which other values `l` avoids.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
    pub k: KValue,
}

fn entry(n: u32, l: SignedMonomial, condition: RConstraint, k: KValue) -> KTableEntry {
    KTableEntry {
        n,
        l,
        condition,
        note: None,
        k,
    }
}

pub fn k_table() -> Vec<KTableEntry> {
    use KValue::{AtLeast, Exact};
    use RConstraint::Generic;
    let p = SignedMonomial::plus;
    let q = SignedMonomial::minus;
    let mut t = vec![
        entry(4, p(-9), Generic, Exact(1)),
        entry(4, q(3), Generic, Exact(8)),
        entry(4, p(3), Generic, Exact(2)),
        entry(4, p(-1), Generic, Exact(9)),
        entry(
            4,
            q(3),
            RConstraint::Root {
                k: 12,
                sign: Sign::Minus,
            },
            Exact(9),
        ),
        entry(5, p(3), Generic, Exact(5)),
        KTableEntry {
            n: 5,
            l: p(-13),
            condition: Generic,
            note: Some("l != -r^3".into()),
            k: Exact(1),
        },
        entry(6, p(-17), Generic, Exact(1)),
        entry(6, p(3), Generic, Exact(9)),
        entry(6, p(-1), Generic, Exact(15)),
        entry(6, q(3), Generic, AtLeast(24)),
        entry(7, p(3), Generic, Exact(14)),
    ];
    for n in 4..=7u32 {
        t.push(entry(n, q(5 - 2 * n as i64), Generic, Exact(n as u128)));
    }
    t.sort_by_key(|e| (e.n, e.l, e.condition));
    t
}

pub fn lookup(n: u32, l: SignedMonomial, condition: &RConstraint) -> Option<KTableEntry> {
    k_table()
        .into_iter()
        .find(|e| e.n == n && e.l == l && e.condition == *condition)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookups() {
        let g = RConstraint::Generic;
        assert_eq!(
            lookup(4, SignedMonomial::minus(3), &g).unwrap().k,
            KValue::Exact(8)
        );
        assert_eq!(
            lookup(6, SignedMonomial::plus(-1), &g).unwrap().k,
            KValue::Exact(15)
        );
        assert_eq!(
            lookup(5, SignedMonomial::minus(-5), &g).unwrap().k,
            KValue::Exact(5)
        );
        assert_eq!(
            lookup(6, SignedMonomial::minus(3), &g).unwrap().k,
            KValue::AtLeast(24)
        );
        assert!(lookup(9, SignedMonomial::plus(3), &g).is_none());
    }

    #[test]
    fn no_duplicate_keys() {
        let t = k_table();
        for w in t.windows(2) {
            assert_ne!(
                (w[0].n, w[0].l, w[0].condition),
                (w[1].n, w[1].l, w[1].condition)
            );
        }
        assert_eq!(t.len(), 16);
    }
}
