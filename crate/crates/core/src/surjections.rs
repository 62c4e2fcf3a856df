//! The skeletal category of finite surjections: objects `0..=n`, morphisms
//! `r -> k` the onto maps `{1..r} -> {1..k}`.
//!
//! Images are stored zero based and printed one based. The group
//! `S_k × S_r` acts on `hom(r, k)` by `(σ, π) · f = σ ∘ f ∘ π⁻¹`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::characters::{ClassFunction, Group};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};
use crate::perm::{all_perms, Perm};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Surjection {
    codomain: u8,
    images: Vec<u8>,
}

impl Surjection {
    /// Builds `f: {1..r} -> {1..k}` from one-based images.
    pub fn from_one_based(k: usize, images: &[usize]) -> Result<Self> {
        if images.iter().any(|&x| x == 0 || x > k) {
            return Err(Error::OutOfRange(format!("images {images:?} not in 1..={k}")));
        }
        let f = Surjection {
            codomain: k as u8,
            images: images.iter().map(|&x| (x - 1) as u8).collect(),
        };
        if !f.is_onto() {
            return Err(Error::OutOfRange(format!("{images:?} is not onto {{1..{k}}}")));
        }
        Ok(f)
    }

    pub fn identity(k: usize) -> Self {
        Surjection {
            codomain: k as u8,
            images: (0..k as u8).collect(),
        }
    }

    pub fn from_perm(p: &Perm) -> Self {
        Surjection {
            codomain: p.degree() as u8,
            images: p.images().to_vec(),
        }
    }

    fn is_onto(&self) -> bool {
        let mut hit = vec![false; self.codomain()];
        for &x in &self.images {
            hit[x as usize] = true;
        }
        hit.into_iter().all(|h| h)
    }

    pub fn domain(&self) -> usize {
        self.images.len()
    }

    pub fn codomain(&self) -> usize {
        self.codomain as usize
    }

    /// Zero-based image table.
    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize + 1).collect()
    }

    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Surjection) -> Result<Surjection> {
        if f.codomain() != self.domain() {
            return Err(Error::SizeMismatch(format!(
                "cannot compose {self} after {f}: {} != {}",
                f.codomain(),
                self.domain()
            )));
        }
        Ok(self.compose_unchecked(f))
    }

    pub(crate) fn compose_unchecked(&self, f: &Surjection) -> Surjection {
        Surjection {
            codomain: self.codomain,
            images: f.images.iter().map(|&x| self.images[x as usize]).collect(),
        }
    }

    /// Is this an endomorphism (a permutation)?
    pub fn is_bijective(&self) -> bool {
        self.domain() == self.codomain()
    }

    pub fn to_perm(&self) -> Option<Perm> {
        self.is_bijective()
            .then(|| Perm::from_images(self.images.clone()).expect("bijective onto map"))
    }
}

impl fmt::Display for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.images.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", x + 1)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Surjection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}:{}->{}", self.domain(), self.codomain())
    }
}

#[derive(Serialize, Deserialize)]
struct SurjectionRepr {
    k: usize,
    images: Vec<usize>,
}

impl Serialize for Surjection {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SurjectionRepr {
            k: self.codomain(),
            images: self.one_based(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Surjection {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = SurjectionRepr::deserialize(d)?;
        Surjection::from_one_based(repr.k, &repr.images).map_err(serde::de::Error::custom)
    }
}

/// All onto maps `{1..r} -> {1..k}` in lexicographic order of image tables.
pub fn enumerate_surjections(r: usize, k: usize) -> Vec<Surjection> {
    fn go(r: usize, k: usize, images: &mut Vec<u8>, hits: &mut [usize], missing: usize, out: &mut Vec<Surjection>) {
        let pos = images.len();
        if pos == r {
            if missing == 0 {
                out.push(Surjection {
                    codomain: k as u8,
                    images: images.clone(),
                });
            }
            return;
        }
        let left = r - pos;
        for v in 0..k {
            let new_missing = if hits[v] == 0 { missing - 1 } else { missing };
            if new_missing > left - 1 {
                continue;
            }
            hits[v] += 1;
            images.push(v as u8);
            go(r, k, images, hits, new_missing, out);
            images.pop();
            hits[v] -= 1;
        }
    }
    if r < k || (k == 0 && r > 0) {
        return Vec::new();
    }
    let mut out = Vec::new();
    go(r, k, &mut Vec::with_capacity(r), &mut vec![0; k], k, &mut out);
    out
}

fn hom_cache() -> &'static RwLock<HashMap<(usize, usize), Arc<Vec<Surjection>>>> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), Arc<Vec<Surjection>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Cached `hom(r, k)`. Concurrent population is idempotent.
pub fn hom_set(r: usize, k: usize) -> Arc<Vec<Surjection>> {
    if let Some(h) = hom_cache().read().unwrap().get(&(r, k)) {
        return h.clone();
    }
    let built = Arc::new(enumerate_surjections(r, k));
    hom_cache()
        .write()
        .unwrap()
        .entry((r, k))
        .or_insert(built)
        .clone()
}

/// `κ₁: {1..k+2} -> {1..k}`, the identity on `1..k` and `k+1, k+2 ↦ k`.
pub fn kappa1(k: usize) -> Result<Surjection> {
    if k < 1 {
        return Err(Error::OutOfRange(format!("kappa1 needs k >= 1, got {k}")));
    }
    let images: Vec<usize> = (1..=k + 2).map(|i| if i <= k { i } else { k }).collect();
    Surjection::from_one_based(k, &images)
}

/// `κ₂: {1..k+2} -> {1..k}` with `k ↦ k-1` and `k+1, k+2 ↦ k`.
pub fn kappa2(k: usize) -> Result<Surjection> {
    if k < 2 {
        return Err(Error::OutOfRange(format!("kappa2 needs k >= 2, got {k}")));
    }
    let images: Vec<usize> = (1..=k + 2)
        .map(|i| match i {
            i if i < k => i,
            i if i == k => k - 1,
            _ => k,
        })
        .collect();
    Surjection::from_one_based(k, &images)
}

/// Sizes of the fibres of `f`, as a partition of the domain size with one
/// part per codomain point.
pub fn kernel_type(f: &Surjection) -> Partition {
    let mut fibres = vec![0; f.codomain()];
    for &x in f.images() {
        fibres[x as usize] += 1;
    }
    Partition::from_unsorted(fibres)
}

/// `σ ∘ f ∘ π⁻¹`.
pub fn act(sigma: &Perm, pi: &Perm, f: &Surjection) -> Result<Surjection> {
    if sigma.degree() != f.codomain() || pi.degree() != f.domain() {
        return Err(Error::SizeMismatch(format!(
            "(S_{} x S_{}) cannot act on hom({}, {})",
            sigma.degree(),
            pi.degree(),
            f.domain(),
            f.codomain()
        )));
    }
    Ok(act_unchecked(sigma, pi, f))
}

fn act_unchecked(sigma: &Perm, pi: &Perm, f: &Surjection) -> Surjection {
    let inv = pi.inverse();
    Surjection {
        codomain: f.codomain,
        images: (0..f.domain())
            .map(|x| sigma.apply(f.apply(inv.apply(x))) as u8)
            .collect(),
    }
}

fn adjacent_transpositions(m: usize) -> Vec<Perm> {
    (0..m.saturating_sub(1))
        .map(|i| {
            let mut images: Vec<u8> = (0..m as u8).collect();
            images.swap(i, i + 1);
            Perm::from_images(images).unwrap()
        })
        .collect()
}

/// The orbit of `f` under `S_k × S_r`, by closure under generators.
pub fn orbit(f: &Surjection) -> HashSet<Surjection> {
    let (k, r) = (f.codomain(), f.domain());
    let mut gens: Vec<(Perm, Perm)> = adjacent_transpositions(k)
        .into_iter()
        .map(|s| (s, Perm::identity(r)))
        .collect();
    gens.extend(adjacent_transpositions(r).into_iter().map(|p| (Perm::identity(k), p)));
    let mut seen = HashSet::from([f.clone()]);
    let mut queue = VecDeque::from([f.clone()]);
    while let Some(g) = queue.pop_front() {
        for (s, p) in &gens {
            let h = act_unchecked(s, p, &g);
            if seen.insert(h.clone()) {
                queue.push_back(h);
            }
        }
    }
    seen
}

/// All orbits of `S_k × S_r` on `hom(r, k)`, each sorted, ordered by their
/// least element.
pub fn orbits(r: usize, k: usize) -> Vec<Vec<Surjection>> {
    let mut assigned: HashSet<Surjection> = HashSet::new();
    let mut out = Vec::new();
    for f in hom_set(r, k).iter() {
        if assigned.contains(f) {
            continue;
        }
        let mut o: Vec<Surjection> = orbit(f).into_iter().collect();
        o.sort();
        assigned.extend(o.iter().cloned());
        out.push(o);
    }
    out
}

/// Brute-force stabilizer `{(σ, π) : σ f π⁻¹ = f}`.
pub fn stabilizer(f: &Surjection) -> Vec<(Perm, Perm)> {
    let left = all_perms(f.codomain());
    let right = all_perms(f.domain());
    let mut out = Vec::new();
    for s in &left {
        for p in &right {
            if act_unchecked(s, p, f) == *f {
                out.push((s.clone(), p.clone()));
            }
        }
    }
    out
}

/// The two orbits of `hom(k+2, k)` for `k >= 2`: maps of kernel type
/// `[3, 1^{k-1}]` (containing `κ₁`) and `[2, 2, 1^{k-2}]` (containing `κ₂`).
/// Each class is checked to be a single orbit.
pub fn orbits_second_level(k: usize) -> Result<(Vec<Surjection>, Vec<Surjection>)> {
    if k < 2 {
        return Err(Error::OutOfRange(format!(
            "hom(k+2, k) splits into two orbits only for k >= 2, got k = {k}"
        )));
    }
    let t1 = kernel_type(&kappa1(k)?);
    let t2 = kernel_type(&kappa2(k)?);
    let mut o1 = Vec::new();
    let mut o2 = Vec::new();
    for f in hom_set(k + 2, k).iter() {
        let t = kernel_type(f);
        if t == t1 {
            o1.push(f.clone());
        } else if t == t2 {
            o2.push(f.clone());
        } else {
            return Err(Error::Certificate(format!("{f} has unexpected kernel type {t}")));
        }
    }
    for (class, rep) in [(&o1, kappa1(k)?), (&o2, kappa2(k)?)] {
        let closure = orbit(&rep);
        if closure.len() != class.len() || !class.iter().all(|f| closure.contains(f)) {
            return Err(Error::Certificate(format!("kernel class of {rep} is not a single orbit")));
        }
    }
    Ok((o1, o2))
}

/// Hom-set grouped by kernel type.
pub fn kernel_type_classes(r: usize, k: usize) -> BTreeMap<Partition, Vec<Surjection>> {
    let mut out: BTreeMap<Partition, Vec<Surjection>> = BTreeMap::new();
    for f in hom_set(r, k).iter() {
        out.entry(kernel_type(f)).or_default().push(f.clone());
    }
    out
}

/// The permutation character of `S_k × S_r` on `hom(r, k)`: the value at
/// `(mu, nu)` counts maps fixed by the class representatives `(σ_mu, π_nu)`.
pub fn hom_permutation_character(r: usize, k: usize) -> ClassFunction {
    let hom = hom_set(r, k);
    let left: Vec<Perm> = enumerate_partitions(k).iter().map(Perm::class_representative).collect();
    let right: Vec<Perm> = enumerate_partitions(r).iter().map(Perm::class_representative).collect();
    let mut values = Vec::with_capacity(left.len() * right.len());
    for s in &left {
        for p in &right {
            // σ f π⁻¹ = f  <=>  σ(f(x)) = f(π(x)) for all x
            let fixed = hom
                .iter()
                .filter(|f| (0..r).all(|x| s.apply(f.apply(x)) == f.apply(p.apply(x))))
                .count();
            values.push(fixed as i64);
        }
    }
    ClassFunction::from_integers(Group::SymProduct(k, r), &values).expect("class count matches")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    // oracle: filter all k^r maps
    fn brute_count(r: usize, k: usize) -> usize {
        if k == 0 {
            return usize::from(r == 0);
        }
        (0..k.pow(r as u32))
            .filter(|&code| {
                let mut hit = vec![false; k];
                let mut c = code;
                for _ in 0..r {
                    hit[c % k] = true;
                    c /= k;
                }
                hit.iter().all(|&h| h)
            })
            .count()
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_surjections(0, 0).len(), 1);
        assert_eq!(enumerate_surjections(4, 2).len(), 14);
        assert_eq!(enumerate_surjections(3, 1).len(), 1);
        assert!(enumerate_surjections(2, 3).is_empty());
        assert!(enumerate_surjections(2, 0).is_empty());
        for r in 0..=6 {
            for k in 0..=r {
                assert_eq!(enumerate_surjections(r, k).len(), brute_count(r, k), "({r}, {k})");
            }
        }
        let h = enumerate_surjections(5, 3);
        assert!(h.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn kappas() {
        assert_eq!(kappa1(2).unwrap().one_based(), vec![1, 2, 2, 2]);
        assert_eq!(kappa2(2).unwrap().one_based(), vec![1, 1, 2, 2]);
        assert!(kappa1(0).is_err());
        assert!(kappa2(1).is_err());
        for k in 2..=5 {
            let mut t1 = vec![3];
            t1.extend(vec![1; k - 1]);
            let mut t2 = vec![2, 2];
            t2.extend(vec![1; k - 2]);
            assert_eq!(kernel_type(&kappa1(k).unwrap()), p(&t1));
            assert_eq!(kernel_type(&kappa2(k).unwrap()), p(&t2));
        }
    }

    #[test]
    fn composition() {
        let f = Surjection::from_one_based(2, &[1, 2, 2, 2]).unwrap();
        assert_eq!(Surjection::identity(2).compose(&f).unwrap(), f);
        let k2 = kappa2(2).unwrap();
        assert_eq!(k2.compose(&Surjection::identity(4)).unwrap().one_based(), vec![1, 1, 2, 2]);
        assert!(f.compose(&f).is_err());
        let cycle = Surjection::from_perm(&Perm::from_cycles(4, &[&[1, 2, 3, 4]]).unwrap());
        let g = kappa1(2).unwrap().compose(&cycle).unwrap();
        assert_eq!(kernel_type(&g), p(&[3, 1]));
    }

    #[test]
    fn kernel_types() {
        assert_eq!(kernel_type(&Surjection::identity(3)), p(&[1, 1, 1]));
        assert_eq!(kernel_type(&Surjection::from_one_based(2, &[1, 1, 2, 2]).unwrap()), p(&[2, 2]));
        assert_eq!(kernel_type(&Surjection::from_one_based(2, &[1, 2, 2, 2]).unwrap()), p(&[3, 1]));
    }

    #[test]
    fn action_basics() {
        let f = kappa1(3).unwrap();
        assert_eq!(act(&Perm::identity(3), &Perm::identity(5), &f).unwrap(), f);
        assert!(act(&Perm::identity(2), &Perm::identity(5), &f).is_err());
        let s = Perm::from_cycles(3, &[&[1, 3]]).unwrap();
        let pi = Perm::from_cycles(5, &[&[2, 5, 4]]).unwrap();
        let g = act(&s, &pi, &f).unwrap();
        assert_eq!(kernel_type(&g), kernel_type(&f));
        // left action: (s1,p1)·((s2,p2)·f) = (s1 s2, p1 p2)·f
        let s2 = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let p2 = Perm::from_cycles(5, &[&[1, 2, 3]]).unwrap();
        let lhs = act(&s, &pi, &act(&s2, &p2, &f).unwrap()).unwrap();
        let rhs = act(&s.compose(&s2), &pi.compose(&p2), &f).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn second_level_orbits() {
        let (o1, o2) = orbits_second_level(2).unwrap();
        assert_eq!((o1.len(), o2.len()), (8, 6));
        let (o1, o2) = orbits_second_level(3).unwrap();
        assert_eq!((o1.len(), o2.len()), (60, 90));
        assert!(orbits_second_level(1).is_err());
        assert_eq!(orbits(3, 1).len(), 1);
    }

    #[test]
    fn orbit_count_is_kernel_type_count() {
        for r in 0..=5 {
            for k in 0..=r {
                let parts_with_k = enumerate_partitions(r).into_iter().filter(|l| l.len() == k).count();
                assert_eq!(orbits(r, k).len(), parts_with_k, "({r}, {k})");
                assert_eq!(kernel_type_classes(r, k).len(), parts_with_k);
            }
        }
    }

    #[test]
    fn stabilizer_orders() {
        for k in 2..=3 {
            let f1 = kappa1(k).unwrap();
            let f2 = kappa2(k).unwrap();
            let (kf, rf) = (crate::perm::factorial(k), crate::perm::factorial(k + 2));
            assert_eq!(stabilizer(&f1).len() as u64, crate::perm::factorial(k - 1) * 6);
            assert_eq!(stabilizer(&f2).len() as u64, crate::perm::factorial(k - 2) * 8);
            assert_eq!(orbit(&f1).len() as u64 * stabilizer(&f1).len() as u64, kf * rf);
        }
    }

    #[test]
    fn permutation_character_small() {
        let chi = hom_permutation_character(3, 1);
        let d = crate::characters::decompose(&chi).unwrap();
        let expected = BTreeMap::from([((p(&[1]), p(&[3])), 1)]);
        assert_eq!(d.as_product().unwrap(), &expected);
        let chi = hom_permutation_character(0, 0);
        assert_eq!(chi.values().len(), 1);
    }

    #[test]
    fn json_format() {
        let f = kappa1(2).unwrap();
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"k":2,"images":[1,2,2,2]}"#);
        let back: Surjection = serde_json::from_str(r#"{"k":2,"images":[1,2,2,2]}"#).unwrap();
        assert_eq!(back, f);
        assert!(serde_json::from_str::<Surjection>(r#"{"k":2,"images":[1,1]}"#).is_err());
    }
}
