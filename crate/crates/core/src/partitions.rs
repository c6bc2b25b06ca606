//! Marked partitions and their counting functions.
//!
//! A marked partition of `d` is a multiset of plain summands `n_i` together
//! with a multiset of bracketed pairs `(m_j+m_j)`, with total
//! `d = Σ n_i + 2 Σ m_j`. Both multisets are stored in descending order.

use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest `d` accepted by the counting functions.
pub const MAX_COUNT_DEGREE: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MarkedPartition {
    plain: Vec<usize>,
    bracketed: Vec<usize>,
}

impl MarkedPartition {
    /// Builds a partition from summands in any order; zero summands are rejected.
    pub fn new(mut plain: Vec<usize>, mut bracketed: Vec<usize>) -> Result<MarkedPartition> {
        if plain.contains(&0) || bracketed.contains(&0) {
            return Err(Error::PartitionSyntax("summands must be positive".into()));
        }
        plain.sort_unstable_by(|a, b| b.cmp(a));
        bracketed.sort_unstable_by(|a, b| b.cmp(a));
        Ok(MarkedPartition { plain, bracketed })
    }

    /// The partition of 0, the identity for [`MarkedPartition::sum`].
    pub fn empty() -> MarkedPartition {
        MarkedPartition::default()
    }

    /// A partition with only unbracketed summands.
    pub fn plain_only(parts: Vec<usize>) -> Result<MarkedPartition> {
        MarkedPartition::new(parts, Vec::new())
    }

    pub fn plain(&self) -> &[usize] {
        &self.plain
    }

    pub fn bracketed(&self) -> &[usize] {
        &self.bracketed
    }

    pub fn is_empty(&self) -> bool {
        self.plain.is_empty() && self.bracketed.is_empty()
    }

    /// The partitioned integer `d`.
    pub fn total(&self) -> usize {
        self.plain.iter().sum::<usize>() + 2 * self.bracketed.iter().sum::<usize>()
    }

    /// Multiset union of the summands.
    pub fn sum(&self, other: &MarkedPartition) -> MarkedPartition {
        let mut plain = self.plain.clone();
        plain.extend_from_slice(&other.plain);
        let mut bracketed = self.bracketed.clone();
        bracketed.extend_from_slice(&other.bracketed);
        MarkedPartition::new(plain, bracketed).expect("summands stay positive")
    }

    /// Replaces every pair `(m+m)` by the plain summand `2m`.
    pub fn bracket_erasure(&self) -> MarkedPartition {
        let mut plain = self.plain.clone();
        plain.extend(self.bracketed.iter().map(|m| 2 * m));
        MarkedPartition::new(plain, Vec::new()).expect("summands stay positive")
    }

    /// Realisable as the arc-type of a vertex-transitive graph: every
    /// non-empty marked partition except `1+1` and `(1+1)`.
    pub fn is_realisable(&self) -> bool {
        !(self.is_empty()
            || (self.plain == [1, 1] && self.bracketed.is_empty())
            || (self.plain.is_empty() && self.bracketed == [1]))
    }
}

/// See [`MarkedPartition::is_realisable`].
pub fn is_realisable(p: &MarkedPartition) -> bool {
    p.is_realisable()
}

impl Add for &MarkedPartition {
    type Output = MarkedPartition;

    fn add(self, rhs: &MarkedPartition) -> MarkedPartition {
        self.sum(rhs)
    }
}

impl PartialOrd for MarkedPartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for MarkedPartition {
    /// Lexicographic on (plain, bracketed), both stored descending.
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.plain, &self.bracketed).cmp(&(&other.plain, &other.bracketed))
    }
}

impl fmt::Display for MarkedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = self.plain.iter().map(usize::to_string).collect();
        parts.extend(self.bracketed.iter().map(|m| format!("({m}+{m})")));
        write!(f, "{}", parts.join("+"))
    }
}

impl FromStr for MarkedPartition {
    type Err = Error;

    /// Parses `summand` / `(k+k)` terms joined by `+`, without spaces.
    fn from_str(s: &str) -> Result<MarkedPartition> {
        if s.is_empty() {
            return Err(Error::EmptyPartition);
        }
        let bytes = s.as_bytes();
        let bad = |i: usize, what: &str| Error::PartitionSyntax(format!("`{s}` at offset {i}: {what}"));
        let number = |i: &mut usize| -> Result<usize> {
            let start = *i;
            while *i < bytes.len() && bytes[*i].is_ascii_digit() {
                *i += 1;
            }
            if start == *i {
                return Err(bad(start, "expected a positive integer"));
            }
            let v: usize = s[start..*i]
                .parse()
                .map_err(|_| bad(start, "integer out of range"))?;
            if v == 0 {
                return Err(bad(start, "summands must be at least 1"));
            }
            Ok(v)
        };
        let mut plain = Vec::new();
        let mut bracketed = Vec::new();
        let mut i = 0;
        loop {
            if bytes.get(i) == Some(&b'(') {
                i += 1;
                let a = number(&mut i)?;
                if bytes.get(i) != Some(&b'+') {
                    return Err(bad(i, "expected `+` inside a pair"));
                }
                i += 1;
                let b = number(&mut i)?;
                if bytes.get(i) != Some(&b')') {
                    return Err(bad(i, "expected `)`"));
                }
                i += 1;
                if a != b {
                    return Err(bad(i, "the two members of a pair must be equal"));
                }
                bracketed.push(a);
            } else {
                plain.push(number(&mut i)?);
            }
            match bytes.get(i) {
                None => break,
                Some(b'+') => i += 1,
                Some(_) => return Err(bad(i, "expected `+`")),
            }
        }
        MarkedPartition::new(plain, bracketed)
    }
}

/// All partitions of `d` into parts of size at most `max`, each in
/// descending order, listed in descending lexicographic order.
fn partitions_bounded(d: usize, max: usize) -> Vec<Vec<usize>> {
    if d == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(d)).rev() {
        for mut rest in partitions_bounded(d - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// All ordinary partitions of `d`, descending lexicographic order.
pub fn plain_partitions(d: usize) -> Vec<Vec<usize>> {
    partitions_bounded(d, d)
}

/// Every marked partition of `d` exactly once, in descending lexicographic
/// order of (plain, bracketed).
pub fn enumerate_marked(d: usize) -> Vec<MarkedPartition> {
    let mut out = Vec::new();
    for half in 0..=d / 2 {
        for b in plain_partitions(half) {
            for p in plain_partitions(d - 2 * half) {
                out.push(MarkedPartition {
                    plain: p,
                    bracketed: b.clone(),
                });
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Coefficients `c[d][k]` of `Π_n Π_(a,b) 1/(1 - y^a x^(b n))` up to `x^max_d`.
fn product_table(max_d: usize, factors: &[(usize, usize)]) -> Vec<Vec<u64>> {
    assert!(
        max_d <= MAX_COUNT_DEGREE,
        "counting functions are limited to d <= {MAX_COUNT_DEGREE}"
    );
    let kmax = 2 * max_d;
    let mut c = vec![vec![0u64; kmax + 1]; max_d + 1];
    c[0][0] = 1;
    for n in 1..=max_d {
        for &(a, b) in factors {
            let step = b * n;
            if step > max_d {
                continue;
            }
            for d in step..=max_d {
                for k in a..=kmax {
                    c[d][k] += c[d - step][k - a];
                }
            }
        }
    }
    c
}

/// `p(d)`, the number of partitions of `d`.
///
/// # Panics
/// If `d > MAX_COUNT_DEGREE`.
pub fn count_plain(d: usize) -> u64 {
    product_table(d, &[(1, 1)])[d].iter().sum()
}

/// `p(d,k)`, partitions of `d` into exactly `k` parts.
pub fn count_plain_parts(d: usize, k: usize) -> u64 {
    product_table(d, &[(1, 1)])[d].get(k).copied().unwrap_or(0)
}

/// `t(d)`, the number of marked partitions of `d`.
pub fn count_marked(d: usize) -> u64 {
    product_table(d, &[(1, 1), (2, 2)])[d].iter().sum()
}

/// `t'(d,k)`, marked partitions of `d` with `k` summands, a pair `(m+m)`
/// counting as two.
pub fn count_marked_parts(d: usize, k: usize) -> u64 {
    product_table(d, &[(1, 1), (2, 2)])[d].get(k).copied().unwrap_or(0)
}

/// `t*(d,k)`, partitions of `d` into `k` parts in which some even parts
/// carry a label.
pub fn count_labelled(d: usize, k: usize) -> u64 {
    product_table(d, &[(1, 1), (1, 2)])[d].get(k).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(s: &str) -> MarkedPartition {
        s.parse().unwrap()
    }

    #[test]
    fn parse_examples() {
        let p = mp("2+(1+1)");
        assert_eq!((p.plain(), p.bracketed()), (&[2][..], &[1][..]));
        let q = mp("(1+1)");
        assert!(q.plain().is_empty());
        assert_eq!(q.bracketed(), &[1]);
        assert!(matches!("(2+3)".parse::<MarkedPartition>(), Err(Error::PartitionSyntax(_))));
        assert_eq!("".parse::<MarkedPartition>(), Err(Error::EmptyPartition));
        for bad in ["0", "1+", "+1", "1 + 2", "(1+1", "((1+1))", "1++2", "a"] {
            assert!(bad.parse::<MarkedPartition>().is_err(), "{bad}");
        }
    }

    #[test]
    fn canonical_order() {
        assert_eq!(mp("1+3+(1+1)+(2+2)").to_string(), "3+1+(2+2)+(1+1)");
        assert_eq!(mp("(1+1)+2"), mp("2+(1+1)"));
        assert_eq!(MarkedPartition::empty().total(), 0);
    }

    #[test]
    fn small_enumerations() {
        let show = |d| -> Vec<String> { enumerate_marked(d).iter().map(|p| p.to_string()).collect() };
        assert_eq!(show(1), ["1"]);
        assert_eq!(show(2), ["2", "1+1", "(1+1)"]);
        assert_eq!(show(3), ["3", "2+1", "1+1+1", "1+(1+1)"]);
        assert_eq!(enumerate_marked(0), vec![MarkedPartition::empty()]);
    }

    #[test]
    fn counting_sequence() {
        let t: Vec<u64> = (0..=10).map(count_marked).collect();
        assert_eq!(t, [1, 1, 3, 4, 9, 12, 23, 31, 54, 73, 118]);
        assert_eq!(count_plain(4), 5);
        assert_eq!(count_plain(10), 42);
        assert_eq!((0..=6).map(|k| count_labelled(6, k)).sum::<u64>(), 23);
        assert_eq!(count_plain_parts(7, 3), 4);
        assert!(count_marked(64) > count_marked(63));
    }

    #[test]
    fn sums() {
        assert_eq!(mp("3").sum(&mp("1")).to_string(), "3+1");
        assert_eq!((&mp("(2+2)") + &mp("(1+1)")).to_string(), "(2+2)+(1+1)");
        assert_eq!(mp("2+1").sum(&MarkedPartition::empty()), mp("2+1"));
    }

    #[test]
    fn realisability() {
        assert!(!mp("1+1").is_realisable());
        assert!(!mp("(1+1)").is_realisable());
        assert!(mp("(3+3)+2+1").is_realisable());
        assert!(mp("1").is_realisable());
        assert!(!MarkedPartition::empty().is_realisable());
    }

    #[test]
    fn erasure() {
        assert_eq!(mp("2+(1+1)").bracket_erasure().to_string(), "2+2");
        assert_eq!(mp("(2+2)").bracket_erasure().to_string(), "4");
    }
}
