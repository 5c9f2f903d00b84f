use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use super::SpechtError;

/// An integer partition: positive parts in weakly decreasing order. The
/// empty partition is the unique partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, SpechtError> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(SpechtError::InvalidPartition(parts));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-row partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Partition::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: u32) -> Self {
        Partition {
            parts: vec![1; k as usize],
        }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn first_row(&self) -> u32 {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn first_column(&self) -> u32 {
        self.parts.len() as u32
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.first_row();
        Partition {
            parts: (1..=cols)
                .map(|c| self.parts.iter().filter(|&&p| p >= c).count() as u32)
                .collect(),
        }
    }

    /// Rows whose last box can be removed leaving a partition.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.parts.len())
            .filter(|&i| i + 1 == self.parts.len() || self.parts[i] > self.parts[i + 1])
            .collect()
    }

    /// Removes the last box of row `i`; `i` must be a removable row.
    pub fn remove_box(&self, i: usize) -> Partition {
        let mut parts = self.parts.clone();
        parts[i] -= 1;
        if parts[i] == 0 {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size() as usize);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row as usize {
                let arm = row - j as u32 - 1;
                let leg = conj.parts[j] - i as u32 - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Number of standard Young tableaux `f^λ`, by the hook-length formula.
    pub fn num_std_tableaux(&self) -> BigUint {
        let hooks = self
            .hook_lengths()
            .iter()
            .fold(BigUint::one(), |acc, &h| acc * h);
        factorial(self.size()) / hooks
    }

    /// All partitions of `n`, in lexicographic order of their parts.
    pub fn all(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest.min(max) {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Compact exponent notation, e.g. `(2^3,1^2)`.
    pub fn to_exponent_string(&self) -> String {
        let mut groups: Vec<String> = Vec::new();
        let mut i = 0;
        while i < self.parts.len() {
            let p = self.parts[i];
            let mut k = 1;
            while i + k < self.parts.len() && self.parts[i + k] == p {
                k += 1;
            }
            groups.push(if k == 1 {
                p.to_string()
            } else {
                format!("{p}^{k}")
            });
            i += k;
        }
        format!("({})", groups.join(","))
    }
}

pub(crate) fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub(crate) fn binomial(n: u32, k: u32) -> BigUint {
    if k > n {
        return BigUint::default();
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = SpechtError;

    /// `(a,b,...)`; `()` and `(0)` denote the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = super::label::LabelParser::new(s);
        let part = p.partition()?;
        p.finish()?;
        Ok(part)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn hook_formula_values() {
        assert_eq!(p(&[3, 2, 1]).num_std_tableaux(), 16u32.into());
        assert_eq!(p(&[6, 3]).num_std_tableaux(), 48u32.into());
        assert_eq!(p(&[4, 1, 1, 1]).num_std_tableaux(), 20u32.into());
        assert_eq!(Partition::empty().num_std_tableaux(), 1u32.into());
        assert_eq!(p(&[7]).num_std_tableaux(), 1u32.into());
    }

    #[test]
    fn conjugate_and_removal() {
        assert_eq!(p(&[4, 2, 1]).conjugate(), p(&[3, 2, 1, 1]));
        assert_eq!(p(&[3, 3, 1]).removable_rows(), vec![1, 2]);
        assert_eq!(p(&[3, 3, 1]).remove_box(2), p(&[3, 3]));
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..10).map(|n| Partition::all(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30]);
        let all6 = Partition::all(6);
        assert!(all6.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn text_forms() {
        assert_eq!("(4,1,1)".parse::<Partition>().unwrap(), p(&[4, 1, 1]));
        assert_eq!("()".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(0)".parse::<Partition>().unwrap(), Partition::empty());
        assert!("(1,2)".parse::<Partition>().is_err());
        assert_eq!(p(&[2, 2, 2, 1, 1]).to_exponent_string(), "(2^3,1^2)");
    }
}
