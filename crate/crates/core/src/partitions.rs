//! Integer partitions, Young diagrams and skew shapes.
//!
//! Partitions are totally ordered by size first and then reverse
//! lexicographically, so `[n]` precedes `[1^n]` and every partition of `k`
//! precedes every partition of `k + 1`. This is the row/column order of every
//! matrix produced by the crate.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is
/// the partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    /// Sorts and drops zeros, so any multiset of part sizes is accepted.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub(crate) fn from_parts_unchecked(parts: Vec<usize>) -> Self {
        debug_assert!(Partition::new(parts.clone()).is_ok());
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `[k]`, the trivial representation of `S_k`.
    pub fn row(k: usize) -> Self {
        if k == 0 {
            Self::empty()
        } else {
            Partition { parts: vec![k] }
        }
    }

    /// `[1^k]`, the sign representation of `S_k`.
    pub fn sgn(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// `[2, 1^{k-2}]` for `k >= 2`.
    pub fn ds(k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::OutOfRange(format!("ds_k needs k >= 2, got {k}")));
        }
        let mut parts = vec![2];
        parts.extend(std::iter::repeat_n(1, k - 2));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of (nonzero) parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (zero based), zero beyond the length.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Multiplicity of each part size: `m[i]` = number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.part(0) + 1];
        for &p in &self.parts {
            m[p] += 1;
        }
        m
    }

    /// Whether the Young diagram of `self` fits inside that of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.parts.len() <= other.parts.len()
            && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(row, column)` of the diagram, row by row.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| (0..p).map(move |c| (r, c)))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
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
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `[2,1]`, `2,1`, `2 1`, `[]` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim().trim_start_matches('[').trim_end_matches(']');
        let parts = trimmed
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

/// A finite sequence of non-negative integers, e.g. the content of a tableau.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Composition {
    pub parts: Vec<usize>,
}

impl Composition {
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl From<&Partition> for Composition {
    fn from(p: &Partition) -> Self {
        Composition {
            parts: p.parts.clone(),
        }
    }
}

/// The diagram `outer / inner`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_contained_in(&outer) {
            return Err(Error::InvalidPartition(format!("{inner} does not fit inside {outer}")));
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Columns covered by row `r`, as a half-open range.
    pub fn row_range(&self, r: usize) -> std::ops::Range<usize> {
        self.inner.part(r)..self.outer.part(r)
    }

    pub fn rows(&self) -> usize {
        self.outer.len()
    }

    pub fn contains(&self, r: usize, c: usize) -> bool {
        self.row_range(r).contains(&c)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::from_parts_unchecked(prefix.clone()));
            return;
        }
        for p in (1..=max.min(remaining)).rev() {
            prefix.push(p);
            go(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Every partition of size `0..=n`, in global order.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

/// Diagrams obtained by removing one outer corner, top corner first.
pub fn removable_boxes(lambda: &Partition) -> Vec<Partition> {
    let parts = lambda.parts();
    (0..parts.len())
        .filter(|&i| i + 1 == parts.len() || parts[i] > parts[i + 1])
        .map(|i| {
            let mut q = parts.to_vec();
            q[i] -= 1;
            if q[i] == 0 {
                q.pop();
            }
            Partition::from_parts_unchecked(q)
        })
        .collect()
}

/// The set `Y^r(lambda)`: diagrams obtained by adding `r` boxes to `lambda`,
/// no two in the same column (horizontal strips), in global order.
pub fn add_boxes_no_two_same_column(lambda: &Partition, r: usize) -> Vec<Partition> {
    // gamma / lambda is a horizontal strip iff gamma_1 >= lambda_1 >= gamma_2 >= lambda_2 >= ...
    fn go(
        lambda: &Partition,
        row: usize,
        remaining: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if row > lambda.len() {
            if remaining == 0 {
                let mut parts = current.clone();
                while parts.last() == Some(&0) {
                    parts.pop();
                }
                out.push(Partition::from_parts_unchecked(parts));
            }
            return;
        }
        let lo = lambda.part(row);
        let hi = if row == 0 {
            lo + remaining
        } else {
            lambda.part(row - 1).min(lo + remaining)
        };
        for g in lo..=hi {
            current.push(g);
            go(lambda, row + 1, remaining - (g - lo), current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(lambda, 0, r, &mut Vec::new(), &mut out);
    out.sort();
    out.dedup();
    out
}

/// Number of standard Young tableaux of shape `lambda`, i.e. `dim S^lambda`,
/// by the hook length formula.
pub fn hook_dimension(lambda: &Partition) -> u64 {
    let conj = lambda.conjugate();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    let mut next = 1u128;
    for (r, c) in lambda.cells() {
        let hook = (lambda.part(r) - c) + (conj.part(c) - r) - 1;
        num *= next;
        next += 1;
        den *= hook as u128;
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    (num / den) as u64
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumerate_small() {
        assert_eq!(enumerate_partitions(0), vec![Partition::empty()]);
        assert_eq!(
            enumerate_partitions(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(enumerate_partitions(6).len(), 11);
    }

    #[test]
    fn global_order_is_size_then_reverse_lex() {
        let all = partitions_up_to(4);
        let mut sorted = all.clone();
        sorted.sort();
        assert_eq!(all, sorted);
        assert_eq!(all.len(), 12);
        assert_eq!(all[0], Partition::empty());
    }

    #[test]
    fn rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!("[2,x]".parse::<Partition>().is_err());
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("[3,1]".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[2, 1, 1]).to_string(), "[2,1,1]");
        assert_eq!(serde_json::to_string(&Partition::empty()).unwrap(), "[]");
        let q: Partition = serde_json::from_str("[4,2]").unwrap();
        assert_eq!(q, p(&[4, 2]));
        assert!(serde_json::from_str::<Partition>("[1,2]").is_err());
    }

    #[test]
    fn corners() {
        assert_eq!(removable_boxes(&p(&[2, 1])), vec![p(&[1, 1]), p(&[2])]);
        assert_eq!(removable_boxes(&p(&[1])), vec![Partition::empty()]);
        assert_eq!(
            removable_boxes(&p(&[3, 3, 2, 1])),
            vec![p(&[3, 2, 2, 1]), p(&[3, 3, 1, 1]), p(&[3, 3, 2])]
        );
        assert!(removable_boxes(&Partition::empty()).is_empty());
    }

    #[test]
    fn horizontal_strips() {
        assert_eq!(add_boxes_no_two_same_column(&Partition::empty(), 2), vec![p(&[2])]);
        assert_eq!(add_boxes_no_two_same_column(&p(&[1]), 2), vec![p(&[3]), p(&[2, 1])]);
        assert_eq!(add_boxes_no_two_same_column(&p(&[2, 1]), 0), vec![p(&[2, 1])]);
    }

    #[test]
    fn hook_dims() {
        assert_eq!(hook_dimension(&p(&[4])), 1);
        assert_eq!(hook_dimension(&p(&[2, 2])), 2);
        assert_eq!(hook_dimension(&p(&[3, 1])), 3);
        assert_eq!(hook_dimension(&Partition::empty()), 1);
        assert_eq!(hook_dimension(&p(&[3, 2, 1])), 16);
    }

    #[test]
    fn named_shapes() {
        assert_eq!(Partition::ds(4).unwrap(), p(&[2, 1, 1]));
        assert_eq!(Partition::ds(2).unwrap(), p(&[2]));
        assert!(Partition::ds(1).is_err());
        assert_eq!(Partition::sgn(3), p(&[1, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }

    #[test]
    fn skew_shape_requires_containment() {
        assert!(SkewShape::new(p(&[4, 3, 1]), p(&[2, 1])).is_ok());
        assert!(SkewShape::new(p(&[2, 1]), p(&[3])).is_err());
        let s = SkewShape::new(p(&[4, 3, 1]), p(&[2, 1])).unwrap();
        assert_eq!(s.size(), 5);
        assert_eq!(s.row_range(1), 1..3);
    }
}
