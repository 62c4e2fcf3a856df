//! The group algebra `ℚS_k`: Young symmetrizers, Jucys-Murphy seminormal
//! idempotents and central idempotents, with exact certificates.

use std::collections::HashMap;
use std::ops::{Add, Mul, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::characters::{centralizer_order, mn_character};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partitions::{enumerate_partitions, hook_dimension, removable_boxes, Partition};
use crate::perm::{all_perms, factorial, Perm};

/// `S_k` with a precomputed multiplication table on lex ranks.
pub struct SymGroup {
    k: usize,
    perms: Vec<Perm>,
    mul: Vec<u32>,
    classes: Vec<usize>,
}

impl SymGroup {
    fn build(k: usize) -> Self {
        let perms = all_perms(k);
        let m = perms.len();
        let mut mul = Vec::with_capacity(m * m);
        for a in &perms {
            for b in &perms {
                mul.push(a.compose(b).lex_rank() as u32);
            }
        }
        let parts = enumerate_partitions(k);
        let classes = perms
            .iter()
            .map(|p| {
                let ct = p.cycle_type();
                parts.iter().position(|q| *q == ct).unwrap()
            })
            .collect();
        SymGroup { k, perms, mul, classes }
    }

    /// Cached instance.
    pub fn get(k: usize) -> Arc<SymGroup> {
        static CACHE: OnceLock<RwLock<HashMap<usize, Arc<SymGroup>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(g) = cache.read().unwrap().get(&k) {
            return g.clone();
        }
        let g = Arc::new(SymGroup::build(k));
        cache.write().unwrap().entry(k).or_insert(g).clone()
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn order(&self) -> usize {
        self.perms.len()
    }

    pub fn perms(&self) -> &[Perm] {
        &self.perms
    }

    /// Lex rank of `a ∘ b`.
    pub fn product(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.perms.len() + b] as usize
    }

    /// Index of the cycle type of the permutation with rank `a`, in
    /// partition order.
    pub fn class_of(&self, a: usize) -> usize {
        self.classes[a]
    }
}

/// An element of `ℚS_k`, dense over permutations in lex order.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupElement {
    k: usize,
    coeffs: Vec<BigRational>,
}

impl std::fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let group = SymGroup::get(self.k);
        let terms: Vec<String> = self
            .support()
            .map(|i| format!("{}·{}", self.coeffs[i], group.perms[i]))
            .collect();
        write!(f, "[{}]", terms.join(" + "))
    }
}

impl GroupElement {
    pub fn zero(k: usize) -> Self {
        GroupElement {
            k,
            coeffs: vec![BigRational::zero(); factorial(k) as usize],
        }
    }

    pub fn one(k: usize) -> Self {
        Self::basis(&Perm::identity(k))
    }

    pub fn basis(p: &Perm) -> Self {
        let mut e = Self::zero(p.degree());
        e.coeffs[p.lex_rank()] = BigRational::one();
        e
    }

    pub fn from_coeffs(k: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() as u64 != factorial(k) {
            return Err(Error::SizeMismatch(format!(
                "{} coefficients for S_{k}",
                coeffs.len()
            )));
        }
        Ok(GroupElement { k, coeffs })
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, p: &Perm) -> &BigRational {
        &self.coeffs[p.lex_rank()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lex ranks of permutations with nonzero coefficient.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.coeffs.len()).filter(|&i| !self.coeffs[i].is_zero())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        GroupElement {
            k: self.k,
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Embeds along `S_k ≤ S_m`, fixing `k+1..m`.
    pub fn extend_to(&self, m: usize) -> Self {
        let mut out = Self::zero(m);
        let group = SymGroup::get(self.k);
        for i in self.support() {
            out.coeffs[group.perms[i].extend_to(m).lex_rank()] = self.coeffs[i].clone();
        }
        out
    }

    /// `Σ c_σ σ⁻¹`.
    pub fn antipode(&self) -> Self {
        let group = SymGroup::get(self.k);
        let mut out = Self::zero(self.k);
        for i in self.support() {
            out.coeffs[group.perms[i].inverse().lex_rank()] = self.coeffs[i].clone();
        }
        out
    }

    /// Sum of the coefficients over each conjugacy class, in partition order.
    pub fn class_sums(&self) -> Vec<BigRational> {
        let group = SymGroup::get(self.k);
        let mut sums = vec![BigRational::zero(); enumerate_partitions(self.k).len()];
        for i in self.support() {
            sums[group.class_of(i)] += &self.coeffs[i];
        }
        sums
    }
}

impl Add for &GroupElement {
    type Output = GroupElement;
    fn add(self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.k, rhs.k);
        GroupElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &GroupElement {
    type Output = GroupElement;
    fn sub(self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.k, rhs.k);
        GroupElement {
            k: self.k,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &GroupElement {
    type Output = GroupElement;
    fn mul(self, rhs: &GroupElement) -> GroupElement {
        assert_eq!(self.k, rhs.k);
        let group = SymGroup::get(self.k);
        let mut out = GroupElement::zero(self.k);
        let right: Vec<usize> = rhs.support().collect();
        for a in self.support() {
            let x = &self.coeffs[a];
            for &b in &right {
                out.coeffs[group.product(a, b)] += x * &rhs.coeffs[b];
            }
        }
        out
    }
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// The tableau of shape `lambda` filled `1..k` along rows, as zero-based
/// entries.
fn row_filling(lambda: &Partition) -> Vec<Vec<usize>> {
    let mut next = 0;
    lambda
        .parts()
        .iter()
        .map(|&len| {
            let row: Vec<usize> = (next..next + len).collect();
            next += len;
            row
        })
        .collect()
}

/// All permutations preserving each block of `blocks` setwise.
fn block_stabilizer(k: usize, blocks: &[Vec<usize>]) -> Vec<Perm> {
    let mut out = vec![Perm::identity(k)];
    for block in blocks {
        let local = all_perms(block.len());
        let mut next = Vec::with_capacity(out.len() * local.len());
        for p in &out {
            for q in &local {
                let mut images = p.images().to_vec();
                for (i, &x) in block.iter().enumerate() {
                    images[x] = block[q.apply(i)] as u8;
                }
                next.push(Perm::from_images(images).unwrap());
            }
        }
        out = next;
    }
    out
}

/// Row symmetrizer `a` and column antisymmetrizer `b` of the row-filled
/// tableau of shape `lambda`.
pub fn row_and_column_symmetrizers(lambda: &Partition) -> (GroupElement, GroupElement) {
    let k = lambda.size();
    let rows = row_filling(lambda);
    let conj = lambda.conjugate();
    let cols: Vec<Vec<usize>> = (0..conj.len())
        .map(|c| (0..conj.part(c)).map(|r| rows[r][c]).collect())
        .collect();
    let mut a = GroupElement::zero(k);
    for p in block_stabilizer(k, &rows) {
        a.coeffs[p.lex_rank()] = BigRational::one();
    }
    let mut b = GroupElement::zero(k);
    for p in block_stabilizer(k, &cols) {
        b.coeffs[p.lex_rank()] = BigRational::from_integer(p.sign().into());
    }
    (a, b)
}

/// `(dim S^lambda / k!)·a·b` for the row-filled tableau.
pub fn young_symmetrizer(lambda: &Partition) -> GroupElement {
    let k = lambda.size();
    let (a, b) = row_and_column_symmetrizers(lambda);
    (&a * &b).scale(&rat(hook_dimension(lambda) as i64, factorial(k) as i64))
}

/// `(dim S^lambda / k!) Σ χ^lambda(σ) σ`.
pub fn central_idempotent(lambda: &Partition) -> GroupElement {
    let k = lambda.size();
    let group = SymGroup::get(k);
    let parts = enumerate_partitions(k);
    let chi: Vec<i64> = parts.iter().map(|mu| mn_character(lambda, mu).unwrap()).collect();
    let c = rat(hook_dimension(lambda) as i64, factorial(k) as i64);
    let coeffs = (0..group.order())
        .map(|i| &c * BigRational::from_integer(chi[group.class_of(i)].into()))
        .collect();
    GroupElement { k, coeffs }
}

/// A standard Young tableau, rows of one-based entries.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::from_unsorted(self.rows.iter().map(Vec::len).collect())
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// `col - row` of the cell containing `entry`.
    pub fn content(&self, entry: usize) -> i64 {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&x| x == entry) {
                return c as i64 - r as i64;
            }
        }
        panic!("entry {entry} not in tableau");
    }

    /// The tableau with the largest entry removed.
    pub fn parent(&self) -> StandardTableau {
        let k = self.size();
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&k) {
                row.pop();
            }
        }
        rows.retain(|r| !r.is_empty());
        StandardTableau { rows }
    }
}

/// Standard tableaux of shape `lambda`, ordered by the position of the
/// largest entry (top corner first), recursively.
pub fn standard_tableaux(lambda: &Partition) -> Vec<StandardTableau> {
    if lambda.is_empty() {
        return vec![StandardTableau { rows: Vec::new() }];
    }
    let k = lambda.size();
    let mut out = Vec::new();
    for mu in removable_boxes(lambda) {
        let row = (0..lambda.len()).find(|&r| mu.part(r) != lambda.part(r)).unwrap();
        for t in standard_tableaux(&mu) {
            let mut rows = t.rows;
            if rows.len() <= row {
                rows.push(Vec::new());
            }
            rows[row].push(k);
            out.push(StandardTableau { rows });
        }
    }
    out
}

/// Jucys-Murphy element `J_m = Σ_{j<m} (j m)` in `ℚS_k`.
pub fn jucys_murphy(k: usize, m: usize) -> GroupElement {
    let mut out = GroupElement::zero(k);
    for j in 1..m {
        let t = Perm::from_cycles(k, &[&[j, m]]).unwrap();
        out.coeffs[t.lex_rank()] = BigRational::one();
    }
    out
}

/// Contents `col - row` of the addable cells of `lambda`.
fn addable_contents(lambda: &Partition) -> Vec<i64> {
    let len = lambda.len();
    (0..=len)
        .filter(|&r| r == 0 || lambda.part(r) < lambda.part(r - 1))
        .map(|r| lambda.part(r) as i64 - r as i64)
        .collect()
}

/// The seminormal idempotent `E_T`, built from `E_{T'}` by the
/// Jucys-Murphy interpolation on the largest entry.
pub fn seminormal_idempotent(t: &StandardTableau) -> GroupElement {
    let k = t.size();
    if k == 0 {
        return GroupElement::one(0);
    }
    let parent = t.parent();
    let mut e = seminormal_idempotent(&parent).extend_to(k);
    let c = t.content(k);
    let j = jucys_murphy(k, k);
    for a in addable_contents(&parent.shape()) {
        if a == c {
            continue;
        }
        let factor = (&j - &GroupElement::one(k).scale(&rat(a, 1))).scale(&rat(1, c - a));
        e = &e * &factor;
    }
    e
}

/// `dim eℚS_k e` for an idempotent `e`, as the trace of `x ↦ exe`.
///
/// The trace is `Σ_{a,b} e(a)e(b)·#{σ : aσb = σ}`, and the count is the
/// centralizer order when `a⁻¹` and `b` are conjugate, so only the class
/// sums of `e` are needed.
pub fn corner_dimension_by_trace(e: &GroupElement) -> BigRational {
    let parts = enumerate_partitions(e.k);
    e.class_sums()
        .iter()
        .zip(&parts)
        .map(|(s, mu)| s * s * BigRational::from_integer(centralizer_order(mu).into()))
        .sum()
}

/// `dim eℚS_k e` as the rank of `{eσe}`.
///
/// Scaling `e` does not change the rank, so the products are taken on the
/// integer multiple of `e` with coprime coefficients.
pub fn corner_dimension_by_rank(e: &GroupElement) -> usize {
    let group = SymGroup::get(e.k);
    let m = group.order();
    let ints = crate::linalg::clear_denominators(&e.coeffs);
    let small: Option<Vec<i64>> = ints.iter().map(|x| x.to_i64()).collect();
    let mut ech = Echelon::new(m);
    match small {
        Some(u) if u.iter().map(|x| x.unsigned_abs()).sum::<u64>() < 1 << 31 => {
            let support: Vec<usize> = (0..m).filter(|&i| u[i] != 0).collect();
            for s in 0..m {
                let mut acc = vec![0i64; m];
                for &a in &support {
                    let left = group.product(a, s);
                    for &b in &support {
                        acc[group.product(left, b)] += u[a] * u[b];
                    }
                }
                ech.insert(acc.into_iter().map(BigInt::from).collect());
            }
        }
        _ => {
            for p in group.perms() {
                let x = &(e * &GroupElement::basis(p)) * e;
                ech.insert_rational(&x.coeffs);
            }
        }
    }
    ech.rank()
}

/// A complete set of orthogonal primitive idempotents of `ℚS_k` with their
/// tableaux, certified: each is a nonzero idempotent, they sum to `1`, and
/// each is primitive by [`corner_dimension_by_trace`].
///
/// Orthogonality is certified through the Jucys-Murphy eigenvalues: if
/// `E_S J_m = c_S(m) E_S` and `J_m E_T = c_T(m) E_T` then
/// `(c_S(m) - c_T(m)) E_S E_T = 0`, and distinct standard tableaux have
/// distinct content vectors.
pub fn complete_idempotents(k: usize) -> Result<Vec<(StandardTableau, GroupElement)>> {
    let mut set = Vec::new();
    for lambda in enumerate_partitions(k) {
        for t in standard_tableaux(&lambda) {
            let e = seminormal_idempotent(&t);
            set.push((t, e));
        }
    }
    let jm: Vec<GroupElement> = (1..=k).map(|m| jucys_murphy(k, m)).collect();
    let mut sum = GroupElement::zero(k);
    let mut contents = std::collections::HashSet::new();
    for (t, e) in &set {
        if e.is_zero() || &(e * e) != e {
            return Err(Error::Certificate(format!("E_T for {t:?} is not a nonzero idempotent")));
        }
        if !corner_dimension_by_trace(e).is_one() {
            return Err(Error::Certificate(format!("E_T for {t:?} is not primitive")));
        }
        for (m, j) in jm.iter().enumerate() {
            let expected = e.scale(&rat(t.content(m + 1), 1));
            if (e * j) != expected || (j * e) != expected {
                return Err(Error::Certificate(format!("E_T for {t:?} is not a J_{} eigenvector", m + 1)));
            }
        }
        let vector: Vec<i64> = (1..=k).map(|m| t.content(m)).collect();
        if !contents.insert(vector) {
            return Err(Error::Certificate(format!("content vector of {t:?} repeats")));
        }
        sum = &sum + e;
    }
    if sum != GroupElement::one(k) {
        return Err(Error::Certificate(format!("idempotents of S_{k} do not sum to 1")));
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_symmetrizers() {
        assert_eq!(young_symmetrizer(&p(&[1])), GroupElement::one(1));
        let half = rat(1, 2);
        let t = Perm::from_cycles(2, &[&[1, 2]]).unwrap();
        let e2 = young_symmetrizer(&p(&[2]));
        assert_eq!(e2.coeff(&Perm::identity(2)), &half);
        assert_eq!(e2.coeff(&t), &half);
        let e11 = young_symmetrizer(&p(&[1, 1]));
        assert_eq!(e11.coeff(&t), &-half);
        // [2,1]: a = id + (12), b = id - (13)
        let (a, b) = row_and_column_symmetrizers(&p(&[2, 1]));
        assert_eq!(a.support().count(), 2);
        assert_eq!(b.coeff(&Perm::from_cycles(3, &[&[1, 3]]).unwrap()), &rat(-1, 1));
        let e = young_symmetrizer(&p(&[2, 1]));
        assert_eq!(&e * &e, e);
    }

    #[test]
    fn symmetrizers_are_idempotent_and_primitive() {
        for k in 1..=4 {
            for lambda in enumerate_partitions(k) {
                let e = young_symmetrizer(&lambda);
                assert_eq!(&e * &e, e, "{lambda}");
                assert_eq!(corner_dimension_by_rank(&e), 1, "{lambda}");
                assert!(corner_dimension_by_trace(&e).is_one());
                assert_eq!(&central_idempotent(&lambda) * &e, e);
            }
        }
    }

    #[test]
    fn tableau_counts() {
        for k in 0..=6 {
            for lambda in enumerate_partitions(k) {
                assert_eq!(standard_tableaux(&lambda).len() as u64, hook_dimension(&lambda));
            }
        }
    }

    #[test]
    fn complete_sets() {
        for k in 0..=4 {
            let set = complete_idempotents(k).unwrap();
            assert_eq!(set.len(), enumerate_partitions(k).iter().map(hook_dimension).sum::<u64>() as usize);
            for (i, (_, e)) in set.iter().enumerate() {
                assert_eq!(corner_dimension_by_rank(e), 1);
                for (_, f) in &set[i + 1..] {
                    assert!((e * f).is_zero() && (f * e).is_zero());
                }
            }
        }
    }

    #[test]
    fn central_idempotents_sum_to_one() {
        for k in 1..=4 {
            let mut s = GroupElement::zero(k);
            for lambda in enumerate_partitions(k) {
                let z = central_idempotent(&lambda);
                assert_eq!(&z * &z, z);
                s = &s + &z;
            }
            assert_eq!(s, GroupElement::one(k));
        }
    }
}
