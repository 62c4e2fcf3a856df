//! Permutations of `{0, .., m-1}` stored as image tables.
//!
//! Composition follows function composition right to left:
//! `a.compose(&b)` is `x -> a(b(x))`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partitions::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm(Vec<u8>);

impl Perm {
    pub fn identity(m: usize) -> Self {
        Perm((0..m as u8).collect())
    }

    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let m = images.len();
        let mut seen = vec![false; m];
        for &x in &images {
            let x = x as usize;
            if x >= m || seen[x] {
                return Err(Error::OutOfRange(format!("{images:?} is not a permutation")));
            }
            seen[x] = true;
        }
        Ok(Perm(images))
    }

    /// Builds a permutation of `{1..m}` from one-based cycles.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<u8> = (0..m as u8).collect();
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                let y = cycle[(i + 1) % cycle.len()];
                if x == 0 || x > m || y == 0 || y > m {
                    return Err(Error::OutOfRange(format!("cycle {cycle:?} outside 1..{m}")));
                }
                images[x - 1] = (y - 1) as u8;
            }
        }
        Perm::from_images(images)
    }

    /// The canonical element of the class `mu`: consecutive cycles
    /// `(1 .. mu_1)(mu_1 + 1 ..)...`.
    pub fn class_representative(mu: &Partition) -> Self {
        let m = mu.size();
        let mut images = vec![0u8; m];
        let mut start = 0;
        for &len in mu.parts() {
            for i in 0..len {
                images[start + i] = (start + (i + 1) % len) as u8;
            }
            start += len;
        }
        Perm(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, x: usize) -> usize {
        self.0[x] as usize
    }

    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm(other.0.iter().map(|&x| self.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Perm(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    pub fn cycle_type(&self) -> Partition {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut lens = Vec::new();
        for s in 0..m {
            if seen[s] {
                continue;
            }
            let mut len = 0;
            let mut x = s;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x] as usize;
                len += 1;
            }
            lens.push(len);
        }
        Partition::from_unsorted(lens)
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i64 {
        let ct = self.cycle_type();
        if (ct.size() - ct.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Position in the lexicographic list returned by [`all_perms`].
    pub fn lex_rank(&self) -> usize {
        let m = self.degree();
        let mut rank = 0;
        for i in 0..m {
            let smaller = self.0[i + 1..].iter().filter(|&&x| x < self.0[i]).count();
            rank = rank * (m - i) + smaller;
        }
        rank
    }

    /// The permutation acting as `self` on `{0..m}` and fixing `{m..total}`.
    pub fn extend_to(&self, total: usize) -> Perm {
        let mut images = self.0.clone();
        images.extend(self.0.len() as u8..total as u8);
        Perm(images)
    }

    /// The permutation acting as `self` shifted by `offset` on `{offset..}`
    /// and fixing `{0..offset}`.
    pub fn shift(&self, offset: usize) -> Perm {
        let mut images: Vec<u8> = (0..offset as u8).collect();
        images.extend(self.0.iter().map(|&x| x + offset as u8));
        Perm(images)
    }

    /// Direct product `self x other` acting on `{0..a} ⊔ {a..a+b}`.
    pub fn juxtapose(&self, other: &Perm) -> Perm {
        let a = self.degree();
        let mut images = self.0.clone();
        images.extend(other.0.iter().map(|&x| x + a as u8));
        Perm(images)
    }
}

impl fmt::Display for Perm {
    /// One-based cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = self.degree();
        let mut seen = vec![false; m];
        let mut wrote = false;
        for s in 0..m {
            if seen[s] || self.0[s] as usize == s {
                seen[s] = true;
                continue;
            }
            write!(f, "(")?;
            let mut x = s;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x] as usize;
            }
            write!(f, ")")?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// All permutations of `{0..m}` in lexicographic order of image tables.
pub fn all_perms(m: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut current: Vec<u8> = (0..m as u8).collect();
    loop {
        out.push(Perm(current.clone()));
        // next lexicographic permutation
        let Some(i) = (1..m).rev().find(|&i| current[i - 1] < current[i]) else {
            break;
        };
        let j = (i..m).rev().find(|&j| current[j] > current[i - 1]).unwrap();
        current.swap(i - 1, j);
        current[i..].reverse();
    }
    out
}

pub fn factorial(m: usize) -> u64 {
    (1..=m as u64).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lex_order_and_rank_agree() {
        for m in 0..=5 {
            let perms = all_perms(m);
            assert_eq!(perms.len() as u64, factorial(m));
            for (i, p) in perms.iter().enumerate() {
                assert_eq!(p.lex_rank(), i);
            }
        }
    }

    #[test]
    fn compose_is_right_to_left() {
        let a = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        // a(b(2)) = a(3) = 3
        assert_eq!(a.compose(&b).apply(1), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn cycle_types() {
        let p = Perm::from_cycles(4, &[&[1, 3, 2, 4]]).unwrap();
        assert_eq!(p.cycle_type(), Partition::row(4));
        assert_eq!(p.to_string(), "(1 3 2 4)");
        let mu = Partition::new(vec![3, 2, 1]).unwrap();
        assert_eq!(Perm::class_representative(&mu).cycle_type(), mu);
        assert_eq!(Perm::identity(3).to_string(), "()");
    }

    #[test]
    fn rejects_non_permutations() {
        assert!(Perm::from_images(vec![0, 0]).is_err());
        assert!(Perm::from_cycles(2, &[&[1, 3]]).is_err());
    }
}
