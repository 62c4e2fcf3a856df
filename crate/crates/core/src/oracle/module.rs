//! Left `A`-modules realised inside `A e`, as graded subquotients `V / W`.
//!
//! A vector of level `k'` lives in the block `hom(k, k')`, `k` the level of
//! the idempotent `e`. Composition factors are obtained from traces of
//! permutations on the radical layers, independently of the idempotents
//! used to build the Cartan matrix.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::AlgebraRep;
use crate::characters::{decompose, ClassFunction, Group};
use crate::error::{Error, Result};
use crate::linalg::{to_rational, Echelon, Insert, Quotient};
use crate::partitions::{enumerate_partitions, Partition};
use crate::perm::Perm;
use crate::tableaux::Multiset;

/// Independent integer vectors per target level.
type Graded = BTreeMap<usize, Vec<Vec<BigInt>>>;

struct Part {
    sub: Vec<Vec<BigInt>>,
    reps: Vec<Vec<BigInt>>,
    quotient: Quotient,
}

pub struct ModuleRep<'a> {
    alg: &'a AlgebraRep,
    level: usize,
    parts: BTreeMap<usize, Part>,
}

fn independent(width: usize, rows: impl IntoIterator<Item = Vec<BigInt>>) -> Vec<Vec<BigInt>> {
    let mut ech = Echelon::new(width);
    rows.into_iter()
        .filter(|r| ech.insert(r.clone()) == Insert::Independent)
        .collect()
}

impl<'a> ModuleRep<'a> {
    /// `P(lambda) = A e_lambda`.
    pub fn projective(alg: &'a AlgebraRep, lambda: &Partition) -> Result<Self> {
        let level = lambda.size();
        Self::from_graded(alg, level, &projective_span(alg, lambda)?, &Graded::new())
    }

    /// `S(lambda) = P(lambda) / rad P(lambda)`.
    pub fn simple(alg: &'a AlgebraRep, lambda: &Partition) -> Result<Self> {
        let level = lambda.size();
        let v = projective_span(alg, lambda)?;
        let w = radical_of(alg, level, &v);
        Self::from_graded(alg, level, &v, &w)
    }

    fn from_graded(alg: &'a AlgebraRep, level: usize, v: &Graded, w: &Graded) -> Result<Self> {
        let mut parts = BTreeMap::new();
        for (&k, rows) in v {
            let width = alg.block(level, k).unwrap().len();
            let sub = w.get(&k).cloned().unwrap_or_default();
            let mut ech = Echelon::new(width);
            for s in &sub {
                ech.insert(s.clone());
            }
            let reps: Vec<Vec<BigInt>> = rows
                .iter()
                .filter(|r| ech.insert((*r).clone()) == Insert::Independent)
                .cloned()
                .collect();
            let quotient = Quotient::new(width, &sub, &reps)
                .ok_or_else(|| Error::Certificate("quotient representatives dependent".into()))?;
            parts.insert(k, Part { sub, reps, quotient });
        }
        Ok(ModuleRep { alg, level, parts })
    }

    pub fn dim(&self) -> usize {
        self.parts.values().map(|p| p.reps.len()).sum()
    }

    /// Dimension of the part supported on level `k`.
    pub fn dim_at(&self, k: usize) -> usize {
        self.parts.get(&k).map_or(0, |p| p.reps.len())
    }

    fn offsets(&self) -> BTreeMap<usize, usize> {
        let mut at = 0;
        self.parts
            .iter()
            .map(|(&k, p)| {
                let o = at;
                at += p.reps.len();
                (k, o)
            })
            .collect()
    }

    /// Matrix of the basis element `g` of `A`, `m[row][col]`.
    pub fn action_matrix(&self, g: usize) -> Result<Vec<Vec<BigRational>>> {
        let d = self.dim();
        let mut m = vec![vec![BigRational::zero(); d]; d];
        let f = self.alg.basis(g);
        let Some(part) = self.parts.get(&f.domain()) else {
            return Ok(m);
        };
        let offsets = self.offsets();
        let src = offsets[&f.domain()];
        let unit = unit_vector(self.alg, f.domain(), f.codomain(), g);
        for (t, rep) in part.reps.iter().enumerate() {
            let image = self.alg.block_product((f.domain(), f.codomain()), &unit, self.level, rep);
            let coords = match self.parts.get(&f.codomain()) {
                Some(target) => target.quotient.coords(&to_rational(&image)),
                None => image.iter().all(Zero::is_zero).then(Vec::new),
            }
            .ok_or_else(|| Error::Certificate(format!("basis element {g} leaves the module")))?;
            let dst = offsets.get(&f.codomain()).copied().unwrap_or(0);
            for (r, c) in coords.into_iter().enumerate() {
                m[dst + r][src + t] = c;
            }
        }
        Ok(m)
    }

    /// Checks `M(g)M(h) = M(gh)` for the given pairs of basis indices.
    pub fn check_action(&self, pairs: &[(usize, usize)]) -> Result<()> {
        for &(g, h) in pairs {
            let mg = self.action_matrix(g)?;
            let mh = self.action_matrix(h)?;
            let lhs = mat_mul(&mg, &mh);
            let rhs = match self.alg.product(g, h) {
                Some(gh) => self.action_matrix(gh)?,
                None => vec![vec![BigRational::zero(); self.dim()]; self.dim()],
            };
            if lhs != rhs {
                return Err(Error::Certificate(format!("action fails on pair ({g}, {h})")));
            }
        }
        Ok(())
    }

    /// Jordan-Hölder multiplicities of each radical layer, from characters
    /// of the level groups acting on the layer.
    pub fn radical_layers(&self) -> Result<Vec<Multiset>> {
        let mut v: Graded = self
            .parts
            .iter()
            .map(|(&k, p)| {
                let width = self.alg.block(self.level, k).unwrap().len();
                (k, independent(width, p.reps.iter().chain(&p.sub).cloned()))
            })
            .collect();
        let w0: Graded = self.parts.iter().map(|(&k, p)| (k, p.sub.clone())).collect();
        let mut layers = Vec::new();
        loop {
            let mut next = radical_of(self.alg, self.level, &v);
            // the quotient by W is carried along by adding W back
            for (k, rows) in &w0 {
                let width = self.alg.block(self.level, *k).unwrap().len();
                let all = next.remove(k).unwrap_or_default().into_iter().chain(rows.iter().cloned());
                next.insert(*k, independent(width, all));
            }
            let mut layer = Multiset::new();
            for (&k, rows) in &v {
                let lower = next.get(&k).cloned().unwrap_or_default();
                for (lambda, m) in layer_character(self.alg, self.level, k, rows, &lower)? {
                    *layer.entry(lambda).or_insert(0) += m;
                }
            }
            let same = v.iter().all(|(k, rows)| next.get(k).map_or(0, Vec::len) == rows.len());
            if layer.is_empty() && same {
                break;
            }
            layers.push(layer);
            v = next;
        }
        Ok(layers)
    }

    /// Total Jordan-Hölder multiplicities.
    pub fn composition_factors(&self) -> Result<Multiset> {
        let mut total = Multiset::new();
        for layer in self.radical_layers()? {
            for (lambda, m) in layer {
                *total.entry(lambda).or_insert(0) += m;
            }
        }
        Ok(total)
    }
}

fn unit_vector(alg: &AlgebraRep, r: usize, k: usize, g: usize) -> Vec<BigInt> {
    let block = alg.block(r, k).unwrap();
    let mut v = vec![BigInt::zero(); block.len()];
    v[g - block.offset] = 1.into();
    v
}

fn mat_mul(a: &[Vec<BigRational>], b: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let n = a.len();
    let mut out = vec![vec![BigRational::zero(); n]; n];
    for i in 0..n {
        for l in 0..n {
            if a[i][l].is_zero() {
                continue;
            }
            for j in 0..n {
                out[i][j] += &a[i][l] * &b[l][j];
            }
        }
    }
    out
}

/// `A e_lambda` graded by target level, spanned by `f · u_lambda`.
fn projective_span(alg: &AlgebraRep, lambda: &Partition) -> Result<Graded> {
    let level = lambda.size();
    let e = alg.young_idempotent(lambda)?;
    let k = level;
    let mut out = Graded::new();
    for target in 0..=k {
        let Some(block) = alg.block(k, target) else { continue };
        let rows = (0..block.len()).map(|h| {
            let mut v = vec![BigInt::zero(); block.len()];
            for &(t, c) in &e.integral {
                v[block.right[t][h] as usize] += c;
            }
            v
        });
        let basis = independent(block.len(), rows);
        if !basis.is_empty() {
            out.insert(target, basis);
        }
    }
    Ok(out)
}

/// `J · V` for a graded subspace `V` of `A e`, `e` at level `level`.
fn radical_of(alg: &AlgebraRep, level: usize, v: &Graded) -> Graded {
    let mut rows: BTreeMap<usize, Vec<Vec<BigInt>>> = BTreeMap::new();
    for (&k, basis) in v {
        for block in alg.blocks().iter().filter(|b| b.r == k && b.k < k) {
            for g in 0..block.len() {
                let unit = unit_vector(alg, k, block.k, block.offset + g);
                for x in basis {
                    let y = alg.block_product((k, block.k), &unit, level, x);
                    if y.iter().any(|c| !c.is_zero()) {
                        rows.entry(block.k).or_default().push(y);
                    }
                }
            }
        }
    }
    rows.into_iter()
        .map(|(k, r)| {
            let width = alg.block(level, k).unwrap().len();
            (k, independent(width, r))
        })
        .filter(|(_, r)| !r.is_empty())
        .collect()
}

/// Decomposes `upper / lower` (both inside the block `hom(level, k)`) as an
/// `S_k`-module, from traces of class representatives.
fn layer_character(
    alg: &AlgebraRep,
    level: usize,
    k: usize,
    upper: &[Vec<BigInt>],
    lower: &[Vec<BigInt>],
) -> Result<Multiset> {
    let block = alg.block(level, k).unwrap();
    let mut ech = Echelon::new(block.len());
    for w in lower {
        ech.insert(w.clone());
    }
    let reps: Vec<Vec<BigInt>> = upper
        .iter()
        .filter(|r| ech.insert((*r).clone()) == Insert::Independent)
        .cloned()
        .collect();
    if reps.is_empty() {
        return Ok(Multiset::new());
    }
    let quotient = Quotient::new(block.len(), lower, &reps).unwrap();
    let mut values = Vec::new();
    for mu in enumerate_partitions(k) {
        let sigma = Perm::class_representative(&mu);
        let s = sigma.lex_rank();
        let mut trace = BigRational::zero();
        for (t, rep) in reps.iter().enumerate() {
            let mut moved = vec![BigInt::zero(); block.len()];
            for (h, c) in rep.iter().enumerate() {
                if !c.is_zero() {
                    moved[block.left[s][h] as usize] += c;
                }
            }
            let coords = quotient
                .coords(&to_rational(&moved))
                .ok_or_else(|| Error::Certificate("layer is not stable under S_k".into()))?;
            trace += &coords[t];
        }
        values.push(trace);
    }
    let chi = ClassFunction::new(Group::Sym(k), values)?;
    Ok(decompose(&chi)?.as_sym().cloned().unwrap_or_default())
}
