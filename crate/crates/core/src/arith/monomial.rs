use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::laurent::int;
use super::ratfunc::RationalFunction;
use super::ArithError;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

/// `sign * r^exponent`: the shape of every reducibility value of `l`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct SignedMonomial {
    pub sign: Sign,
    pub exponent: i64,
}

impl SignedMonomial {
    pub const fn new(sign: Sign, exponent: i64) -> Self {
        SignedMonomial { sign, exponent }
    }

    pub const fn plus(exponent: i64) -> Self {
        SignedMonomial {
            sign: Sign::Plus,
            exponent,
        }
    }

    pub const fn minus(exponent: i64) -> Self {
        SignedMonomial {
            sign: Sign::Minus,
            exponent,
        }
    }

    pub fn to_rational_function(self) -> RationalFunction {
        RationalFunction::monomial(int(self.sign.value()), self.exponent)
    }

    /// Inverse of [`SignedMonomial::to_rational_function`]; `None` unless the
    /// value is exactly `±r^k`.
    pub fn from_rational_function(f: &RationalFunction) -> Option<Self> {
        if !f.is_laurent() || !f.numerator().is_monomial() {
            return None;
        }
        let e = f.numerator().min_exponent();
        let c = f.numerator().coefficient(e);
        if !c.abs().is_one() {
            return None;
        }
        let sign = if c.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        };
        Some(SignedMonomial { sign, exponent: e })
    }

    /// The quotient `self / other`, again a signed monomial.
    pub fn ratio(self, other: SignedMonomial) -> SignedMonomial {
        SignedMonomial {
            sign: self.sign.times(other.sign),
            exponent: self.exponent - other.exponent,
        }
    }
}

impl fmt::Display for SignedMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign == Sign::Minus {
            write!(f, "-")?;
        }
        match self.exponent {
            0 => write!(f, "1"),
            1 => write!(f, "r"),
            -1 => write!(f, "1/r"),
            e if e > 0 => write!(f, "r^{e}"),
            e => write!(f, "1/r^{}", -e),
        }
    }
}

impl FromStr for SignedMonomial {
    type Err = ArithError;

    /// Accepts `r^k`, `1/r^k`, `-r^k`, `-1/r^k` (and the degenerate `r`,
    /// `1/r`, `1`, `-1`).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = |position: usize, message: &str| ArithError::Parse {
            position,
            message: message.to_string(),
        };
        let t = s.trim();
        let offset = s.len() - s.trim_start().len();
        let (sign, rest, at) = match t.strip_prefix('-') {
            Some(rest) => (Sign::Minus, rest, offset + 1),
            None => (Sign::Plus, t, offset),
        };
        let (invert, body, at) = match rest.strip_prefix("1/") {
            Some(body) => (true, body, at + 2),
            None => (false, rest, at),
        };
        let exponent: i64 = if body == "1" && !invert {
            0
        } else if body == "r" {
            1
        } else if let Some(k) = body.strip_prefix("r^") {
            k.parse()
                .map_err(|_| bad(at + 2, "expected an integer exponent"))?
        } else {
            return Err(bad(at, "expected r^k, 1/r^k, -r^k or -1/r^k"));
        };
        Ok(SignedMonomial {
            sign,
            exponent: if invert { -exponent } else { exponent },
        })
    }
}

impl Serialize for SignedMonomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SignedMonomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        for text in ["r^3", "-r^3", "1/r^9", "-1/r^5", "1/r", "r", "1", "-1"] {
            let m: SignedMonomial = text.parse().unwrap();
            assert_eq!(m.to_string(), text);
        }
        assert_eq!(
            "1/r^9".parse::<SignedMonomial>().unwrap(),
            SignedMonomial::plus(-9)
        );
        assert_eq!(
            "-r^3".parse::<SignedMonomial>().unwrap(),
            SignedMonomial::minus(3)
        );
    }

    #[test]
    fn rejects_other_shapes() {
        assert!("2*r".parse::<SignedMonomial>().is_err());
        assert!("r+1".parse::<SignedMonomial>().is_err());
        assert!("1/1".parse::<SignedMonomial>().is_err());
    }

    #[test]
    fn embedding_in_qr() {
        let m = SignedMonomial::minus(-7);
        let f = m.to_rational_function();
        assert_eq!(f, "-1/r^7".parse::<RationalFunction>().unwrap());
        assert_eq!(SignedMonomial::from_rational_function(&f), Some(m));
        assert_eq!(
            SignedMonomial::from_rational_function(&"2*r".parse().unwrap()),
            None
        );
    }
}
