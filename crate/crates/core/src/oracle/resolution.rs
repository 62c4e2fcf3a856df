//! Minimal projective resolutions of simple modules over the basic algebra.
//!
//! Modules are subspaces of free modules `⊕_t B e_{l_t}`, given by a basis;
//! a projective cover is read off from the top `M / rad M`, and the next
//! syzygy is the exact kernel of the cover map.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::BasicAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{kernel, rank, to_rational, Echelon, Insert};
use crate::partitions::Partition;

/// `⊕_t B e_{summands[t]}` with coordinates over the basis of each `B e_l`.
#[derive(Clone, Debug)]
pub(crate) struct FreeModule {
    pub summands: Vec<usize>,
    /// `(summand, basis element)` per coordinate.
    pub coords: Vec<(usize, usize)>,
    index: HashMap<(usize, usize), usize>,
}

impl FreeModule {
    pub fn new(b: &BasicAlgebra, summands: Vec<usize>) -> Self {
        let mut coords = Vec::new();
        for (t, &l) in summands.iter().enumerate() {
            for x in b.projective_basis(l) {
                coords.push((t, x));
            }
        }
        let index = coords.iter().enumerate().map(|(c, &key)| (key, c)).collect();
        FreeModule {
            summands,
            coords,
            index,
        }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    /// `y · v` for a basis element `y` of `B`.
    pub fn act(&self, b: &BasicAlgebra, y: usize, v: &[BigRational]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); self.dim()];
        for (c, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            let (t, e) = self.coords[c];
            if let Some(terms) = b.product_ref(y, e) {
                for (z, coef) in terms {
                    out[self.index[&(t, *z)]] += x * coef;
                }
            }
        }
        out
    }

    /// `e_j · v`: the coordinates whose basis element has target `j`.
    pub fn project(&self, b: &BasicAlgebra, j: usize, v: &[BigRational]) -> Vec<BigRational> {
        v.iter()
            .zip(&self.coords)
            .map(|(x, &(_, e))| {
                if b.basis()[e].target == j {
                    x.clone()
                } else {
                    BigRational::zero()
                }
            })
            .collect()
    }

    /// Coordinate of the generator `e_{l_t}` of summand `t`.
    pub fn generator_coord(&self, b: &BasicAlgebra, t: usize) -> usize {
        self.index[&(t, b.identity(self.summands[t]))]
    }
}

/// The radical `J·M` of the submodule spanned by `basis`.
pub(crate) fn radical_of(b: &BasicAlgebra, f: &FreeModule, basis: &[Vec<BigRational>]) -> Vec<Vec<BigRational>> {
    let mut ech = Echelon::new(f.dim());
    let mut out = Vec::new();
    for y in (0..b.dim()).filter(|&y| b.is_radical(y)) {
        for v in basis {
            let w = f.act(b, y, v);
            if w.iter().any(|x| !x.is_zero()) && ech.insert_rational(&w) == Insert::Independent {
                out.push(w);
            }
        }
    }
    out
}

fn projected_rank(b: &BasicAlgebra, f: &FreeModule, j: usize, basis: &[Vec<BigRational>]) -> usize {
    let rows: Vec<Vec<BigRational>> = basis.iter().map(|v| f.project(b, j, v)).collect();
    rank(&rows)
}

/// Multiplicity of each simple in `M / rad M`, with `rad M` given.
pub(crate) fn top_multiplicities(
    b: &BasicAlgebra,
    f: &FreeModule,
    basis: &[Vec<BigRational>],
    rad: &[Vec<BigRational>],
) -> Vec<usize> {
    (0..b.simples().len())
        .map(|j| projected_rank(b, f, j, basis) - projected_rank(b, f, j, rad))
        .collect()
}

/// One map `P_m -> P_{m-1}` of a resolution: the image of each generator
/// of `P_m`, as coordinates in `P_{m-1}`.
#[derive(Clone, Debug, Serialize)]
pub struct Differential {
    pub source: Vec<Partition>,
    pub target: Vec<Partition>,
    #[serde(serialize_with = "serialize_rows")]
    pub images: Vec<Vec<BigRational>>,
}

fn serialize_rows<S: serde::Serializer>(rows: &[Vec<BigRational>], s: S) -> std::result::Result<S::Ok, S::Error> {
    let text: Vec<Vec<String>> = rows
        .iter()
        .map(|r| r.iter().map(|x| x.to_string()).collect())
        .collect();
    text.serialize(s)
}

/// A minimal projective resolution `… → P_1 → P_0 → S(i) → 0`.
#[derive(Clone, Debug, Serialize)]
pub struct Resolution {
    simple: Partition,
    index: Vec<Partition>,
    /// `terms[m][j]` = multiplicity of `P(index[j])` in `P_m`.
    terms: Vec<Vec<usize>>,
    #[serde(skip)]
    differentials: Vec<Differential>,
    truncated: bool,
}

impl Resolution {
    pub fn simple(&self) -> &Partition {
        &self.simple
    }

    /// Simples in the order used by [`Resolution::terms`].
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn terms(&self) -> &[Vec<usize>] {
        &self.terms
    }

    /// `d_m: P_m -> P_{m-1}` for `m >= 1`.
    pub fn differential(&self, m: usize) -> Option<&Differential> {
        m.checked_sub(1).and_then(|i| self.differentials.get(i))
    }

    pub fn is_truncated(&self) -> bool {
        self.truncated
    }

    /// Length of the resolution, the projective dimension of the simple.
    pub fn length(&self) -> Result<usize> {
        if self.truncated {
            return Err(Error::Truncated(self.simple.to_string(), self.terms.len() - 1));
        }
        Ok(self.terms.len() - 1)
    }

    /// `dim Ext^m(S(i), S(j))`.
    pub fn ext_dim(&self, j: &Partition, m: usize) -> Result<usize> {
        let pos = self
            .index
            .iter()
            .position(|p| p == j)
            .ok_or_else(|| Error::OutOfRange(format!("{j} is not a simple")))?;
        match self.terms.get(m) {
            Some(term) => Ok(term[pos]),
            None if self.truncated => Err(Error::Truncated(self.simple.to_string(), self.terms.len() - 1)),
            None => Ok(0),
        }
    }
}

impl BasicAlgebra {
    /// Minimal resolution of the simple at position `i`, stopping at the
    /// first zero syzygy or after `max_len` steps.
    pub fn minimal_resolution(&self, i: usize, max_len: usize) -> Result<Resolution> {
        let s = self.simples().len();
        let unit_row = |dim: usize, c: usize| {
            let mut v = vec![BigRational::zero(); dim];
            v[c] = BigRational::from_integer(1.into());
            v
        };
        let mut free = FreeModule::new(self, vec![i]);
        let top = free.generator_coord(self, 0);
        // syzygy Ω_1 = rad P(i)
        let mut syzygy: Vec<Vec<BigRational>> = (0..free.dim())
            .filter(|&c| c != top)
            .map(|c| unit_row(free.dim(), c))
            .collect();
        let mut first = vec![0; s];
        first[i] = 1;
        let mut terms = vec![first];
        let mut differentials = Vec::new();
        let mut truncated = false;
        let mut cover_images: Vec<Vec<BigRational>> = (0..free.dim())
            .map(|c| {
                let e = free.coords[c].1;
                if c == top {
                    unit_row(1, 0)
                } else {
                    debug_assert!(self.is_radical(e));
                    vec![BigRational::zero()]
                }
            })
            .collect();

        while !syzygy.is_empty() {
            if terms.len() > max_len {
                truncated = true;
                break;
            }
            let rad = radical_of(self, &free, &syzygy);
            let mut gens: Vec<(usize, Vec<BigRational>)> = Vec::new();
            for j in 0..s {
                let mut ech = Echelon::new(free.dim());
                for r in &rad {
                    ech.insert_rational(&free.project(self, j, r));
                }
                for v in &syzygy {
                    let w = free.project(self, j, v);
                    if w.iter().any(|x| !x.is_zero()) && ech.insert_rational(&w) == Insert::Independent {
                        gens.push((j, w));
                    }
                }
            }
            let next = FreeModule::new(self, gens.iter().map(|(j, _)| *j).collect());
            let images: Vec<Vec<BigRational>> = next
                .coords
                .iter()
                .map(|&(t, x)| free.act(self, x, &gens[t].1))
                .collect();
            if rank(&images) != syzygy.len() {
                return Err(Error::Certificate("projective cover is not onto the syzygy".into()));
            }
            // exactness: each generator lies in the kernel of the previous map
            for (_, g) in &gens {
                let mut acc = vec![BigRational::zero(); cover_images[0].len()];
                for (x, img) in g.iter().zip(&cover_images) {
                    if !x.is_zero() {
                        for (a, b) in acc.iter_mut().zip(img) {
                            *a += x * b;
                        }
                    }
                }
                if acc.iter().any(|x| !x.is_zero()) {
                    return Err(Error::Certificate("consecutive differentials do not compose to zero".into()));
                }
            }
            let ker: Vec<Vec<BigInt>> = kernel(&images, free.dim());
            if ker.len() + syzygy.len() != next.dim() {
                return Err(Error::Certificate("kernel dimension mismatch".into()));
            }
            let gen_coords: Vec<usize> = (0..gens.len()).map(|t| next.generator_coord(self, t)).collect();
            if ker.iter().any(|k| gen_coords.iter().any(|&c| !k[c].is_zero())) {
                return Err(Error::Certificate("syzygy leaves the radical: cover not minimal".into()));
            }
            let mut mult = vec![0; s];
            for (j, _) in &gens {
                mult[*j] += 1;
            }
            terms.push(mult);
            let simples = self.simples();
            differentials.push(Differential {
                source: gens.iter().map(|(j, _)| simples[*j].clone()).collect(),
                target: free.summands.iter().map(|&l| simples[l].clone()).collect(),
                images: gens.iter().map(|(_, g)| g.clone()).collect(),
            });
            syzygy = ker.iter().map(|k| to_rational(k)).collect();
            cover_images = images;
            free = next;
        }
        Ok(Resolution {
            simple: self.simples()[i].clone(),
            index: self.simples().to_vec(),
            terms,
            differentials,
            truncated,
        })
    }

    /// Multiplicities of the simples in each radical layer of `P(i)`.
    pub fn loewy_layers(&self, i: usize) -> Vec<Vec<usize>> {
        let free = FreeModule::new(self, vec![i]);
        let mut layer: Vec<Vec<BigRational>> = (0..free.dim())
            .map(|c| {
                let mut v = vec![BigRational::zero(); free.dim()];
                v[c] = BigRational::from_integer(1.into());
                v
            })
            .collect();
        let mut out = Vec::new();
        while !layer.is_empty() {
            let rad = radical_of(self, &free, &layer);
            out.push(top_multiplicities(self, &free, &layer, &rad));
            layer = rad;
        }
        out
    }
}
