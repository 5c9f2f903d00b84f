use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::partition::{binomial, Partition};
use super::SpechtError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Split {
    None,
    Plus,
    Minus,
}

/// A type-D Specht label: a double partition up to swapping, with a sign
/// when both components coincide.
///
/// Stored canonically: `|first| < |second|`, or equal sizes with `first`
/// lexicographically smaller; `first == second` exactly when split.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SpechtLabel {
    first: Partition,
    second: Partition,
    split: Split,
}

fn oriented(a: Partition, b: Partition) -> (Partition, Partition) {
    match (a.size(), &a).cmp(&(b.size(), &b)) {
        Ordering::Greater => (b, a),
        _ => (a, b),
    }
}

impl SpechtLabel {
    /// The label of `(a, b)` for `a != b`, in either order.
    pub fn new(a: Partition, b: Partition) -> Result<Self, SpechtError> {
        if a == b {
            return Err(SpechtError::MissingSplit(format!("({a},{b})")));
        }
        let (first, second) = oriented(a, b);
        Ok(SpechtLabel {
            first,
            second,
            split: Split::None,
        })
    }

    /// One of the two labels `(λ, λ)±`.
    pub fn split(lambda: Partition, sign: Split) -> Result<Self, SpechtError> {
        if sign == Split::None {
            return Err(SpechtError::MissingSplit(format!("({lambda},{lambda})")));
        }
        Ok(SpechtLabel {
            first: lambda.clone(),
            second: lambda,
            split: sign,
        })
    }

    /// `(a, b)` when `a != b`, otherwise both split labels.
    pub fn pair_or_split(a: Partition, b: Partition) -> Vec<Self> {
        if a == b {
            vec![
                SpechtLabel {
                    first: a.clone(),
                    second: a.clone(),
                    split: Split::Plus,
                },
                SpechtLabel {
                    first: a.clone(),
                    second: a,
                    split: Split::Minus,
                },
            ]
        } else {
            let (first, second) = oriented(a, b);
            vec![SpechtLabel {
                first,
                second,
                split: Split::None,
            }]
        }
    }

    /// Shorthand for `S^{(0),λ}`.
    pub fn zero(lambda: Partition) -> Self {
        let (first, second) = oriented(Partition::empty(), lambda);
        SpechtLabel {
            first,
            second,
            split: Split::None,
        }
    }

    /// Builds an unsplit label from part lists; panics on invalid input.
    pub fn of(a: &[u32], b: &[u32]) -> Self {
        SpechtLabel::new(
            Partition::new(a.to_vec()).unwrap(),
            Partition::new(b.to_vec()).unwrap(),
        )
        .expect("components differ")
    }

    pub fn first(&self) -> &Partition {
        &self.first
    }

    pub fn second(&self) -> &Partition {
        &self.second
    }

    pub fn split_marker(&self) -> Split {
        self.split
    }

    pub fn is_split(&self) -> bool {
        self.split != Split::None
    }

    pub fn n(&self) -> u32 {
        self.first.size() + self.second.size()
    }

    pub fn dim_big(&self) -> BigUint {
        let n = self.n();
        let fa = self.first.num_std_tableaux();
        match self.split {
            Split::None => binomial(n, self.first.size()) * fa * self.second.num_std_tableaux(),
            _ => binomial(n, n / 2) * &fa * &fa / 2u32,
        }
    }

    /// Dimension of the Specht module. Panics beyond `u128`.
    pub fn dim(&self) -> u128 {
        self.dim_big().to_u128().expect("dimension fits in u128")
    }

    /// Conjugating both components; a split label yields both signs.
    pub fn conjugates(&self) -> Vec<SpechtLabel> {
        SpechtLabel::pair_or_split(self.first.conjugate(), self.second.conjugate())
    }

    /// All labels for `n`, sorted.
    pub fn all(n: u32) -> Vec<SpechtLabel> {
        let mut out = Vec::new();
        for k in 0..=n / 2 {
            for a in Partition::all(k) {
                for b in Partition::all(n - k) {
                    if 2 * k == n && a > b {
                        continue;
                    }
                    out.extend(SpechtLabel::pair_or_split(a.clone(), b));
                }
            }
        }
        out.sort();
        out
    }
}

impl Ord for SpechtLabel {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.first.size(), &self.first, &self.second, self.split).cmp(&(
            other.first.size(),
            &other.first,
            &other.second,
            other.split,
        ))
    }
}

impl PartialOrd for SpechtLabel {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for SpechtLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.first, self.second)?;
        match self.split {
            Split::None => Ok(()),
            Split::Plus => write!(f, "+"),
            Split::Minus => write!(f, "-"),
        }
    }
}

impl FromStr for SpechtLabel {
    type Err = SpechtError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = LabelParser::new(s);
        p.expect(b'(')?;
        let a = p.partition()?;
        p.expect(b',')?;
        let b = p.partition()?;
        p.expect(b')')?;
        let at = p.pos;
        let split = if p.eat(b'+') {
            Split::Plus
        } else if p.eat(b'-') {
            Split::Minus
        } else {
            Split::None
        };
        p.finish()?;
        match split {
            Split::None => SpechtLabel::new(a, b),
            _ if a != b => Err(SpechtError::Parse {
                position: at,
                message: "a split marker needs equal components".to_string(),
            }),
            sign => SpechtLabel::split(a, sign),
        }
    }
}

impl Serialize for SpechtLabel {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SpechtLabel {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub(crate) struct LabelParser<'a> {
    src: &'a [u8],
    pub(crate) pos: usize,
}

impl<'a> LabelParser<'a> {
    pub(crate) fn new(s: &'a str) -> Self {
        LabelParser {
            src: s.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, message: &str) -> SpechtError {
        SpechtError::Parse {
            position: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn eat(&mut self, c: u8) -> bool {
        self.skip_ws();
        if self.src.get(self.pos) == Some(&c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), SpechtError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{}'", c as char)))
        }
    }

    fn number(&mut self) -> Result<u32, SpechtError> {
        self.skip_ws();
        let start = self.pos;
        while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a part"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .expect("ascii")
            .parse()
            .map_err(|_| SpechtError::Parse {
                position: start,
                message: "part out of range".to_string(),
            })
    }

    pub(crate) fn partition(&mut self) -> Result<Partition, SpechtError> {
        self.expect(b'(')?;
        let start = self.pos;
        let mut parts = Vec::new();
        if !self.eat(b')') {
            loop {
                parts.push(self.number()?);
                if self.eat(b')') {
                    break;
                }
                self.expect(b',')?;
            }
        }
        if parts == [0] {
            parts.clear();
        }
        Partition::new(parts).map_err(|e| SpechtError::Parse {
            position: start,
            message: e.to_string(),
        })
    }

    pub(crate) fn finish(&mut self) -> Result<(), SpechtError> {
        self.skip_ws();
        if self.pos == self.src.len() {
            Ok(())
        } else {
            Err(self.error("unexpected trailing input"))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_orientation() {
        assert_eq!(SpechtLabel::of(&[3], &[1]), SpechtLabel::of(&[1], &[3]));
        assert_eq!(SpechtLabel::of(&[2], &[1, 1]).first().parts(), &[1, 1]);
        assert!(SpechtLabel::new("(2)".parse().unwrap(), "(2)".parse().unwrap()).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(SpechtLabel::of(&[], &[6]).dim(), 1);
        assert_eq!(SpechtLabel::of(&[1], &[4, 1]).dim(), 24);
        let plus: SpechtLabel = "((2),(2))+".parse().unwrap();
        assert_eq!(plus.dim(), 3);
        assert_eq!("((3),(3))-".parse::<SpechtLabel>().unwrap().dim(), 10);
        assert_eq!("((4),(4))+".parse::<SpechtLabel>().unwrap().dim(), 35);
    }

    #[test]
    fn text_round_trip() {
        for text in [
            "((1),(4,1))",
            "((2,2),(2,2))+",
            "((),(3,2,1))",
            "((1,1),(2))",
        ] {
            let l: SpechtLabel = text.parse().unwrap();
            assert_eq!(l.to_string(), text);
        }
        let l: SpechtLabel = " ( (3) , (1) ) ".parse().unwrap();
        assert_eq!(l.to_string(), "((1),(3))");
        assert_eq!(
            "((0),(4))".parse::<SpechtLabel>().unwrap().to_string(),
            "((),(4))"
        );
    }

    #[test]
    fn parse_errors_carry_positions() {
        match "((1),(2)]".parse::<SpechtLabel>() {
            Err(SpechtError::Parse { position, .. }) => assert_eq!(position, 8),
            other => panic!("unexpected {other:?}"),
        }
        assert!("((2),(2))".parse::<SpechtLabel>().is_err());
        assert!("((1),(2))+".parse::<SpechtLabel>().is_err());
        assert!("((1,2),(2))".parse::<SpechtLabel>().is_err());
    }

    #[test]
    fn enumeration_of_small_n() {
        let all4 = SpechtLabel::all(4);
        let ones: Vec<String> = all4
            .iter()
            .filter(|l| l.dim() == 1)
            .map(ToString::to_string)
            .collect();
        assert_eq!(ones, vec!["((),(1,1,1,1))", "((),(4))"]);
        assert!(all4.windows(2).all(|w| w[0] < w[1]));
    }
}
