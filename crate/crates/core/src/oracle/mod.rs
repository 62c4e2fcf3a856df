//! Brute-force model of `ℚSE_n` from structure constants.
//!
//! The basis is every surjection `r -> k` with `0 <= k <= r <= n`; the
//! product of two morphisms is their composite when defined and zero
//! otherwise. Distinguished idempotents are Young symmetrizers placed in the
//! endomorphism blocks. Everything claimed about the algebra is certified
//! at build time.

mod basic;
mod module;
mod resolution;

pub use basic::BasicAlgebra;
pub use module::ModuleRep;
pub use resolution::Resolution;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::group_algebra::{
    complete_idempotents, corner_dimension_by_rank, row_and_column_symmetrizers, GroupElement,
};
use crate::linalg::Echelon;
use crate::partitions::{enumerate_partitions, hook_dimension, partitions_up_to, Partition};
use crate::perm::{all_perms, factorial};
use crate::surjections::{hom_set, Surjection};

/// Largest `n` built without an explicit override.
pub const DEFAULT_GUARD: usize = 5;

/// Stirling numbers of the second kind by the usual recurrence.
pub fn stirling2(r: usize, k: usize) -> u64 {
    let mut s = vec![vec![0u64; k + 1]; r + 1];
    s[0][0] = 1;
    for i in 1..=r {
        for j in 1..=k.min(i) {
            s[i][j] = j as u64 * s[i - 1][j] + s[i - 1][j - 1];
        }
    }
    s[r][k]
}

/// `Σ_{k<=r<=n} k!·S(r,k)`, without enumerating anything.
pub fn algebra_dimension(n: usize) -> u64 {
    (0..=n)
        .flat_map(|r| (0..=r).map(move |k| factorial(k) * stirling2(r, k)))
        .sum()
}

/// The morphisms `r -> k` of `SE_n` with left and right action tables.
pub(crate) struct Block {
    pub r: usize,
    pub k: usize,
    pub offset: usize,
    pub maps: Arc<Vec<Surjection>>,
    codes: Vec<u32>,
    /// `left[σ][h]`: local index of `σ ∘ h`, `σ` by lex rank in `S_k`.
    left: Vec<Vec<u32>>,
    /// `right[τ][h]`: local index of `h ∘ τ`, `τ` by lex rank in `S_r`.
    right: Vec<Vec<u32>>,
}

impl Block {
    fn new(r: usize, k: usize, offset: usize) -> Self {
        let maps = hom_set(r, k);
        let mut codes = vec![u32::MAX; k.pow(r as u32).max(1)];
        for (i, f) in maps.iter().enumerate() {
            codes[code(f.images(), k)] = i as u32;
        }
        let mut block = Block {
            r,
            k,
            offset,
            maps,
            codes,
            left: Vec::new(),
            right: Vec::new(),
        };
        let mut images = vec![0u8; r];
        block.left = all_perms(k)
            .iter()
            .map(|s| {
                block
                    .maps
                    .iter()
                    .map(|h| {
                        for (x, &y) in h.images().iter().enumerate() {
                            images[x] = s.apply(y as usize) as u8;
                        }
                        block.local(&images) as u32
                    })
                    .collect()
            })
            .collect();
        block.right = all_perms(r)
            .iter()
            .map(|t| {
                block
                    .maps
                    .iter()
                    .map(|h| {
                        for (x, slot) in images.iter_mut().enumerate() {
                            *slot = h.images()[t.apply(x)];
                        }
                        block.local(&images) as u32
                    })
                    .collect()
            })
            .collect();
        block
    }

    pub fn len(&self) -> usize {
        self.maps.len()
    }

    /// Local index of the map with zero-based `images`.
    pub fn local(&self, images: &[u8]) -> usize {
        let c = self.codes[code(images, self.k)];
        debug_assert_ne!(c, u32::MAX, "not a surjection");
        c as usize
    }
}

fn code(images: &[u8], k: usize) -> usize {
    images.iter().rev().fold(0, |acc, &x| acc * k + x as usize)
}

/// Young symmetrizer data for one simple.
#[derive(Clone, Debug)]
pub struct Idempotent {
    lambda: Partition,
    element: GroupElement,
    /// `a·b` with integer coefficients, as `(lex rank, coefficient)`.
    integral: Vec<(usize, i64)>,
    /// `e = scale · a·b`.
    scale: BigRational,
}

impl Idempotent {
    fn new(lambda: &Partition) -> Self {
        let k = lambda.size();
        let (a, b) = row_and_column_symmetrizers(lambda);
        let ab = &a * &b;
        let integral = ab
            .support()
            .map(|i| (i, ab.coeffs()[i].to_integer().to_i64().unwrap()))
            .collect();
        let scale = BigRational::new(
            BigInt::from(hook_dimension(lambda)),
            BigInt::from(factorial(k)),
        );
        Idempotent {
            lambda: lambda.clone(),
            element: ab.scale(&scale),
            integral,
            scale,
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn level(&self) -> usize {
        self.lambda.size()
    }

    /// The exact element of `ℚS_k = ℚ hom(k, k)`.
    pub fn element(&self) -> &GroupElement {
        &self.element
    }

    pub fn scale(&self) -> &BigRational {
        &self.scale
    }
}

/// A named check run while building; the build fails unless all pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certificate {
    pub name: String,
    pub detail: String,
}

/// A sparse element of the algebra, by global basis index.
pub type AlgElement = BTreeMap<usize, BigRational>;

pub struct AlgebraRep {
    n: usize,
    blocks: Vec<Block>,
    block_of: HashMap<(usize, usize), usize>,
    dim: usize,
    idempotents: Vec<Idempotent>,
    certificates: Vec<Certificate>,
}

#[derive(Clone, Copy, Debug)]
pub struct BuildOptions {
    pub guard: usize,
    pub force: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            guard: DEFAULT_GUARD,
            force: false,
        }
    }
}

impl AlgebraRep {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with(n, BuildOptions::default(), &mut |_| {})
    }

    /// Builds and certifies; `progress` receives one line per phase.
    pub fn build_with(n: usize, options: BuildOptions, progress: &mut dyn FnMut(&str)) -> Result<Self> {
        if n > options.guard && !options.force {
            return Err(Error::Refused {
                n,
                guard: options.guard,
                dim: algebra_dimension(n),
            });
        }
        progress(&format!("building QSE_{n} (dimension {})", algebra_dimension(n)));
        let mut blocks = Vec::new();
        let mut block_of = HashMap::new();
        let mut offset = 0;
        for r in 0..=n {
            for k in 0..=r {
                let block = Block::new(r, k, offset);
                if block.len() == 0 {
                    continue;
                }
                offset += block.len();
                block_of.insert((r, k), blocks.len());
                blocks.push(block);
            }
        }
        let idempotents = partitions_up_to(n).iter().map(Idempotent::new).collect();
        let mut alg = AlgebraRep {
            n,
            blocks,
            block_of,
            dim: offset,
            idempotents,
            certificates: Vec::new(),
        };
        progress("certifying structure constants");
        alg.certify_structure()?;
        progress("certifying idempotents");
        alg.certify_idempotents()?;
        progress("certifying the radical");
        alg.certify_radical()?;
        Ok(alg)
    }

    fn pass(&mut self, name: &str, detail: String) {
        self.certificates.push(Certificate {
            name: name.to_string(),
            detail,
        });
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Certificates passed during the build, in order.
    pub fn certificates(&self) -> &[Certificate] {
        &self.certificates
    }

    /// The simples, in the global partition order.
    pub fn simples(&self) -> Vec<Partition> {
        self.idempotents.iter().map(|e| e.lambda.clone()).collect()
    }

    pub fn simple_position(&self, lambda: &Partition) -> Result<usize> {
        self.idempotents
            .iter()
            .position(|e| &e.lambda == lambda)
            .ok_or_else(|| Error::OutOfRange(format!("{lambda} is not a simple of QSE_{}", self.n)))
    }

    pub(crate) fn block(&self, r: usize, k: usize) -> Option<&Block> {
        self.block_of.get(&(r, k)).map(|&b| &self.blocks[b])
    }

    pub(crate) fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    fn locate(&self, i: usize) -> (&Block, usize) {
        let b = self.blocks.partition_point(|b| b.offset + b.len() <= i);
        (&self.blocks[b], i - self.blocks[b].offset)
    }

    pub fn basis(&self, i: usize) -> &Surjection {
        let (block, local) = self.locate(i);
        &block.maps[local]
    }

    pub fn basis_index(&self, f: &Surjection) -> Option<usize> {
        let block = self.block(f.domain(), f.codomain())?;
        (f.domain() <= self.n).then(|| block.offset + block.local(f.images()))
    }

    /// Structure constant: `b_i · b_j` is a basis element or zero.
    pub fn product(&self, i: usize, j: usize) -> Option<usize> {
        let g = self.basis(i);
        let f = self.basis(j);
        (g.domain() == f.codomain()).then(|| {
            let block = self.block(f.domain(), g.codomain()).expect("composite block exists");
            let images: Vec<u8> = f.images().iter().map(|&x| g.images()[x as usize]).collect();
            block.offset + block.local(&images)
        })
    }

    pub fn multiply(&self, x: &AlgElement, y: &AlgElement) -> AlgElement {
        let mut out = AlgElement::new();
        for (&i, a) in x {
            for (&j, b) in y {
                if let Some(t) = self.product(i, j) {
                    *out.entry(t).or_insert_with(BigRational::zero) += a * b;
                }
            }
        }
        out.retain(|_, v| !v.is_zero());
        out
    }

    /// `Σ_k id_k`.
    pub fn unit(&self) -> AlgElement {
        (0..=self.n)
            .map(|k| {
                let id = Surjection::identity(k);
                (self.basis_index(&id).unwrap(), BigRational::one())
            })
            .collect()
    }

    pub fn young_idempotent(&self, lambda: &Partition) -> Result<&Idempotent> {
        Ok(&self.idempotents[self.simple_position(lambda)?])
    }

    /// The idempotent as a sparse algebra element.
    pub fn idempotent_element(&self, lambda: &Partition) -> Result<AlgElement> {
        let e = self.young_idempotent(lambda)?;
        let k = e.level();
        let block = self.block(k, k).unwrap();
        Ok(e.element
            .support()
            .map(|i| (block.offset + i, e.element.coeffs()[i].clone()))
            .collect())
    }

    /// Indices of the strictly level-decreasing morphisms.
    pub fn radical_basis(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .filter(|b| b.r > b.k)
            .flat_map(|b| b.offset..b.offset + b.len())
            .collect()
    }

    /// `u_beta · f · u_alpha` over the block `|alpha| -> |beta|` for every
    /// basis morphism `f`, with `u` the integral symmetrizers.
    pub(crate) fn sandwiches(&self, beta: &Partition, alpha: &Partition) -> Result<Vec<Vec<i64>>> {
        let eb = self.young_idempotent(beta)?;
        let ea = self.young_idempotent(alpha)?;
        let Some(block) = self.block(alpha.size(), beta.size()) else {
            return Ok(Vec::new());
        };
        let mut out = Vec::with_capacity(block.len());
        for h in 0..block.len() {
            let mut acc = vec![0i64; block.len()];
            for &(t, ct) in &ea.integral {
                let h1 = block.right[t][h] as usize;
                for &(s, cs) in &eb.integral {
                    acc[block.left[s][h1] as usize] += cs * ct;
                }
            }
            out.push(acc);
        }
        Ok(out)
    }

    /// `dim e_beta A e_alpha`, the multiplicity of `S(beta)` in `P(alpha)`.
    pub fn cartan_via_dims(&self, beta: &Partition, alpha: &Partition) -> Result<usize> {
        let rows = self.sandwiches(beta, alpha)?;
        let Some(first) = rows.first() else {
            return Ok(0);
        };
        let mut ech = Echelon::new(first.len());
        for row in rows {
            ech.insert(row.into_iter().map(BigInt::from).collect());
        }
        Ok(ech.rank())
    }

    fn certify_structure(&mut self) -> Result<()> {
        let expected = algebra_dimension(self.n);
        if self.dim as u64 != expected {
            return Err(Error::Certificate(format!(
                "enumerated dimension {} != {expected}",
                self.dim
            )));
        }
        self.pass("dimension", format!("{} = Σ k!·S(r,k)", self.dim));

        let unit = self.unit();
        for i in 0..self.dim {
            let b: AlgElement = [(i, BigRational::one())].into();
            if self.multiply(&unit, &b) != b || self.multiply(&b, &unit) != b {
                return Err(Error::Certificate(format!("unit fails on {:?}", self.basis(i))));
            }
        }
        self.pass("unit", "Σ id_k is a two-sided identity".into());

        // every triple for small n, a fixed stride otherwise
        let stride = if self.n <= 3 { 1 } else { 7 };
        let mut checked = 0usize;
        for i in (0..self.dim).step_by(stride) {
            for j in (0..self.dim).step_by(stride) {
                let Some(ij) = self.product(i, j) else { continue };
                for k in (0..self.dim).step_by(stride) {
                    let left = self.product(ij, k);
                    let right = self.product(j, k).and_then(|jk| self.product(i, jk));
                    if left != right {
                        return Err(Error::Certificate(format!(
                            "associativity fails on basis elements {i}, {j}, {k}"
                        )));
                    }
                    checked += 1;
                }
            }
        }
        self.pass("associativity", format!("{checked} composable triples"));
        Ok(())
    }

    fn certify_idempotents(&mut self) -> Result<()> {
        for e in &self.idempotents {
            let x = &e.element;
            if x.is_zero() || &(x * x) != x {
                return Err(Error::Certificate(format!("e_{} is not a nonzero idempotent", e.lambda)));
            }
            if corner_dimension_by_rank(x) != 1 {
                return Err(Error::Certificate(format!("e_{} is not primitive", e.lambda)));
            }
        }
        for k in 0..=self.n {
            let level: Vec<&Idempotent> = self.idempotents.iter().filter(|e| e.level() == k).collect();
            for a in &level {
                for b in &level {
                    if a.lambda != b.lambda && !(&a.element * &b.element).is_zero() {
                        return Err(Error::Certificate(format!(
                            "e_{} e_{} != 0",
                            a.lambda, b.lambda
                        )));
                    }
                }
            }
        }
        self.pass(
            "young symmetrizers",
            format!("{} idempotent, primitive, orthogonal", self.idempotents.len()),
        );
        let mut total = 0;
        for k in 0..=self.n {
            total += complete_idempotents(k)?.len();
        }
        self.pass(
            "complete idempotent sets",
            format!("{total} seminormal idempotents summing to 1 level by level"),
        );
        Ok(())
    }

    fn certify_radical(&mut self) -> Result<()> {
        let radical = self.radical_basis();
        let is_radical = |alg: &AlgebraRep, i: usize| {
            let f = alg.basis(i);
            f.domain() > f.codomain()
        };
        for &f in &radical {
            for g in 0..self.dim {
                for p in [self.product(g, f), self.product(f, g)].into_iter().flatten() {
                    if !is_radical(self, p) {
                        return Err(Error::Certificate(format!(
                            "radical is not an ideal: {:?} times {:?}",
                            self.basis(g),
                            self.basis(f)
                        )));
                    }
                }
            }
        }
        self.pass("radical ideal", format!("{} level-decreasing morphisms", radical.len()));

        // J^m is spanned by composites of m radical morphisms
        let mut power: HashSet<usize> = radical.iter().copied().collect();
        let mut index = 1;
        while !power.is_empty() {
            let this = &*self;
            let next: HashSet<usize> = radical
                .iter()
                .flat_map(|&g| power.iter().filter_map(move |&f| this.product(g, f)))
                .collect();
            power = next;
            index += 1;
            if index > self.n + 1 && !power.is_empty() {
                return Err(Error::Certificate(format!("J^{} != 0", self.n + 1)));
            }
        }
        self.pass("radical nilpotent", format!("J^{index} = 0"));

        let quotient = self.dim - radical.len();
        let expected: u64 = (0..=self.n).map(factorial).sum();
        if quotient as u64 != expected {
            return Err(Error::Certificate(format!("dim A/J = {quotient} != {expected}")));
        }
        for k in 0..=self.n {
            let parts = enumerate_partitions(k);
            for b in &parts {
                for a in &parts {
                    let d = self.cartan_via_dims(b, a)?;
                    if d != usize::from(a == b) {
                        return Err(Error::Certificate(format!(
                            "A/J is not split semisimple: dim e_{b} (A/J) e_{a} = {d}"
                        )));
                    }
                }
            }
        }
        self.pass(
            "semisimple quotient",
            format!("dim A/J = {quotient}, Cartan matrix of A/J is the identity"),
        );
        Ok(())
    }

    /// Integral product of block vectors: `x` over `hom(r1, k1)` times `y`
    /// over `hom(r2, r1)`, landing in `hom(r2, k1)`.
    pub(crate) fn block_product(
        &self,
        (r1, k1): (usize, usize),
        x: &[BigInt],
        r2: usize,
        y: &[BigInt],
    ) -> Vec<BigInt> {
        let bx = self.block(r1, k1).unwrap();
        let by = self.block(r2, r1).unwrap();
        let bz = self.block(r2, k1).unwrap();
        let mut out = vec![BigInt::zero(); bz.len()];
        let ys: Vec<usize> = (0..y.len()).filter(|&h| !y[h].is_zero()).collect();
        let mut images = vec![0u8; r2];
        for (g, cx) in x.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            let gi = bx.maps[g].images();
            for &h in &ys {
                for (p, &q) in by.maps[h].images().iter().enumerate() {
                    images[p] = gi[q as usize];
                }
                out[bz.local(&images)] += cx * &y[h];
            }
        }
        out
    }
}

/// The algebra together with its basic algebra, the entry point for
/// homological computations.
pub struct Oracle {
    algebra: AlgebraRep,
    basic: BasicAlgebra,
}

impl Oracle {
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with(n, BuildOptions::default(), &mut |_| {})
    }

    pub fn build_with(n: usize, options: BuildOptions, progress: &mut dyn FnMut(&str)) -> Result<Self> {
        let algebra = AlgebraRep::build_with(n, options, progress)?;
        progress("building the basic algebra eAe");
        let basic = BasicAlgebra::new(&algebra)?;
        progress(&format!("basic algebra has dimension {}", basic.dim()));
        Ok(Oracle { algebra, basic })
    }

    pub fn n(&self) -> usize {
        self.algebra.n()
    }

    pub fn algebra(&self) -> &AlgebraRep {
        &self.algebra
    }

    pub fn basic(&self) -> &BasicAlgebra {
        &self.basic
    }

    pub fn simples(&self) -> &[Partition] {
        self.basic.simples()
    }

    /// Radical layers have at most `n + 1` levels, so this many steps
    /// always suffice.
    pub fn default_max_len(&self) -> usize {
        self.n() + 1
    }

    pub fn minimal_resolution(&self, lambda: &Partition, max_len: usize) -> Result<Resolution> {
        let i = self.algebra.simple_position(lambda)?;
        self.basic.minimal_resolution(i, max_len)
    }

    /// `dim Ext^m(S(i), S(j))`.
    pub fn ext_dim(&self, i: &Partition, j: &Partition, m: usize) -> Result<usize> {
        self.minimal_resolution(i, m)?.ext_dim(j, m)
    }

    pub fn projective_dimension(&self, lambda: &Partition) -> Result<usize> {
        self.minimal_resolution(lambda, self.default_max_len())?.length()
    }

    /// All resolutions, computed in parallel, in simple order.
    pub fn all_resolutions(&self) -> Result<Vec<Resolution>> {
        use rayon::prelude::*;
        let max_len = self.default_max_len();
        (0..self.simples().len())
            .into_par_iter()
            .map(|i| self.basic.minimal_resolution(i, max_len))
            .collect()
    }

    /// `max pd S(i)`.
    pub fn global_dimension(&self) -> Result<usize> {
        let mut g = 0;
        for r in self.all_resolutions()? {
            g = g.max(r.length()?);
        }
        Ok(g)
    }

    /// `C[j][i] = dim e_j A e_i` in simple order.
    pub fn cartan_matrix(&self) -> Vec<Vec<usize>> {
        let s = self.simples().len();
        (0..s)
            .map(|j| (0..s).map(|i| self.basic.cartan(j, i)).collect())
            .collect()
    }

    /// Jordan-Hölder factors of `P(lambda)` from its radical layers.
    pub fn composition_factors(&self, lambda: &Partition) -> Result<BTreeMap<Partition, usize>> {
        let i = self.algebra.simple_position(lambda)?;
        let mut out = BTreeMap::new();
        for layer in self.basic.loewy_layers(i) {
            for (j, m) in layer.into_iter().enumerate() {
                if m > 0 {
                    *out.entry(self.simples()[j].clone()).or_insert(0) += m;
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn dimensions() {
        let dims: Vec<u64> = (0..=5).map(algebra_dimension).collect();
        assert_eq!(dims, vec![1, 2, 5, 18, 93, 634]);
        assert_eq!(AlgebraRep::build(2).unwrap().dim(), 5);
    }

    #[test]
    fn guard() {
        assert!(matches!(
            AlgebraRep::build(6),
            Err(Error::Refused { n: 6, guard: 5, dim: 5317 })
        ));
    }

    #[test]
    fn small_radicals() {
        let a1 = AlgebraRep::build(1).unwrap();
        assert!(a1.radical_basis().is_empty());
        let a2 = AlgebraRep::build(2).unwrap();
        let rad = a2.radical_basis();
        assert_eq!(rad.len(), 1);
        assert_eq!(a2.basis(rad[0]).one_based(), vec![1, 1]);
        assert_eq!(a2.product(rad[0], rad[0]), None);
    }

    #[test]
    fn sandwich_ranks() {
        let a = AlgebraRep::build(4).unwrap();
        assert_eq!(a.cartan_via_dims(&p(&[2, 1]), &p(&[3, 1])).unwrap(), 2);
        assert_eq!(a.cartan_via_dims(&p(&[1]), &p(&[3])).unwrap(), 1);
        assert_eq!(a.cartan_via_dims(&p(&[3]), &p(&[1])).unwrap(), 0);
        for lambda in partitions_up_to(4) {
            assert_eq!(a.cartan_via_dims(&lambda, &lambda).unwrap(), 1);
        }
    }
}
