//! Integer partitions: the index set of every symmetric-function basis.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Within one weight, `Ord` puts lexicographically larger partitions first,
/// so `(n)` precedes `1^n`. Partitions of smaller weight sort before those of
/// larger weight.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Sorts the parts into decreasing order; rejects zero parts.
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.contains(&0) {
            return Err(Error::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The one-part partition `(k)`; empty for `k = 0`.
    pub fn row(k: u32) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: alloc::vec![k] }
        }
    }

    /// `1^k`.
    pub fn column(k: u32) -> Self {
        Partition { parts: alloc::vec![1; k as usize] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.parts.first().copied().unwrap_or(0);
        let parts = (0..first)
            .map(|i| self.parts.iter().filter(|&&p| p > i).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Pairs `(part, multiplicity)` in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union of the parts, as in `e_λ e_μ = e_{λ∪μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.parts.len() || j < other.parts.len() {
            let take_left = match (self.parts.get(i), other.parts.get(j)) {
                (Some(a), Some(b)) => a >= b,
                (Some(_), None) => true,
                _ => false,
            };
            if take_left {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition { parts }
    }

    /// Adds one part.
    pub fn with_part(&self, k: u32) -> Partition {
        if k == 0 {
            return self.clone();
        }
        self.union(&Partition::row(k))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.weight()
            .cmp(&other.weight())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// Accepts `3,1`, `(3,1)` and `[3,1]`; the empty string is the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s
            .trim()
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']'])
            .trim();
        if t.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Parse(String::from("bad partition part: ") + x.trim()))
            })
            .collect::<Result<Vec<u32>>>()?;
        Partition::new(parts).map_err(|e| Error::Parse(e.to_string()))
    }
}

/// All partitions of `n`, lexicographically decreasing.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition::from_sorted(acc.clone()));
            return;
        }
        for p in (1..=rest.min(max)).rev() {
            acc.push(p);
            rec(rest - p, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Outcome of comparing `μ` against `λ` in dominance order.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Dominance {
    /// `μ ≤ λ` (this includes equality).
    Leq,
    /// `μ ≥ λ` and `μ ≠ λ`.
    GeqOnly,
    Incomparable,
}

/// Compares prefix sums of `mu` and `lambda`.
pub fn dominance_leq(mu: &Partition, lambda: &Partition) -> Result<Dominance> {
    if mu.weight() != lambda.weight() {
        return Err(Error::UnequalWeights(mu.weight(), lambda.weight()));
    }
    let len = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u32, 0u32);
    let (mut leq, mut geq) = (true, true);
    for i in 0..len {
        a += mu.parts.get(i).copied().unwrap_or(0);
        b += lambda.parts.get(i).copied().unwrap_or(0);
        leq &= a <= b;
        geq &= a >= b;
    }
    Ok(if leq {
        Dominance::Leq
    } else if geq {
        Dominance::GeqOnly
    } else {
        Dominance::Incomparable
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[2, 2]).conjugate(), p(&[2, 2]));
        assert_eq!(p(&[5]).conjugate(), Partition::column(5));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn small_partition_lists() {
        assert_eq!(partitions_of(0), alloc::vec![Partition::empty()]);
        assert_eq!(partitions_of(1), alloc::vec![p(&[1])]);
        let four: Vec<Partition> = [&[4][..], &[3, 1], &[2, 2], &[2, 1, 1], &[1, 1, 1, 1]]
            .iter()
            .map(|x| p(x))
            .collect();
        assert_eq!(partitions_of(4), four);
    }

    #[test]
    fn dominance_examples() {
        assert_eq!(dominance_leq(&p(&[2, 2]), &p(&[3, 1])).unwrap(), Dominance::Leq);
        assert_eq!(dominance_leq(&p(&[3, 1]), &p(&[2, 2])).unwrap(), Dominance::GeqOnly);
        assert_eq!(dominance_leq(&p(&[3, 1]), &p(&[3, 1])).unwrap(), Dominance::Leq);
        assert_eq!(
            dominance_leq(&p(&[3, 1, 1, 1]), &p(&[2, 2, 2])).unwrap(),
            Dominance::Incomparable
        );
        assert!(dominance_leq(&p(&[3]), &p(&[2])).is_err());
    }

    #[test]
    fn constructor_sorts_and_validates() {
        assert_eq!(p(&[1, 3, 2]).parts(), &[3, 2, 1]);
        assert_eq!(Partition::new(alloc::vec![2, 0]), Err(Error::ZeroPart));
        assert_eq!("(3,1)".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("2,1,1".parse::<Partition>().unwrap().to_string(), "(2,1,1)");
    }

    #[test]
    fn ordering_is_lex_decreasing_within_weight() {
        let ps = partitions_of(6);
        for w in ps.windows(2) {
            assert!(w[0] < w[1]);
        }
        assert_eq!(p(&[2, 1]).union(&p(&[3, 1])), p(&[3, 2, 1, 1]));
    }
}
