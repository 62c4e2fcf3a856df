//! The basic algebra `B = eAe`, `e = Σ_i e_i` over one Young symmetrizer
//! per simple. `B` is Morita equivalent to `A`, every simple `B`-module is
//! one dimensional, and `e_j B e_i` has dimension equal to the Cartan entry.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::AlgebraRep;
use crate::error::{Error, Result};
use crate::linalg::{to_rational, Echelon, Insert, Quotient};
use crate::partitions::Partition;
use crate::surjections::Surjection;

/// A basis element `e_target · f · e_source` of `B`.
#[derive(Clone, Debug)]
pub struct BasisElement {
    pub target: usize,
    pub source: usize,
    /// The morphism `f` the element was built from.
    pub morphism: Surjection,
}

pub struct BasicAlgebra {
    simples: Vec<Partition>,
    basis: Vec<BasisElement>,
    by_pair: HashMap<(usize, usize), Vec<usize>>,
    identity: Vec<usize>,
    /// `mult[a][b]` for `source(a) = target(b)`: sparse coefficients of `b_a b_b`.
    mult: HashMap<(usize, usize), Vec<(usize, BigRational)>>,
}

impl BasicAlgebra {
    pub fn new(alg: &AlgebraRep) -> Result<Self> {
        let simples = alg.simples();
        let s = simples.len();
        let mut basis = Vec::new();
        let mut by_pair: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
        // integral vectors u_j f u_i over the block, per basis element
        let mut vectors: Vec<Vec<BigInt>> = Vec::new();
        let mut solvers: HashMap<(usize, usize), Quotient> = HashMap::new();
        for j in 0..s {
            for i in 0..s {
                let (kj, ki) = (simples[j].size(), simples[i].size());
                if kj > ki || (kj == ki && i != j) {
                    continue;
                }
                let Some(block) = alg.block(ki, kj) else { continue };
                let rows = alg.sandwiches(&simples[j], &simples[i])?;
                let mut ech = Echelon::new(block.len());
                let mut chosen = Vec::new();
                for (h, row) in rows.into_iter().enumerate() {
                    let row: Vec<BigInt> = row.into_iter().map(BigInt::from).collect();
                    if ech.insert(row.clone()) == Insert::Independent {
                        chosen.push(row);
                        by_pair.entry((j, i)).or_default().push(basis.len());
                        basis.push(BasisElement {
                            target: j,
                            source: i,
                            morphism: block.maps[h].clone(),
                        });
                    }
                }
                solvers.insert((j, i), Quotient::new(block.len(), &[], &chosen).unwrap());
                vectors.extend(chosen);
            }
        }
        let identity: Vec<usize> = (0..s)
            .map(|i| {
                let ids = &by_pair[&(i, i)];
                debug_assert_eq!(ids.len(), 1);
                ids[0]
            })
            .collect();
        let scales: Vec<&BigRational> = simples
            .iter()
            .map(|l| alg.young_idempotent(l).map(|e| e.scale()))
            .collect::<Result<_>>()?;

        // b_t = c_target c_source w_t, so
        // b_a b_b = c_j c_i^2 c_l (w_a w_b) = Σ_t c_i^2 y_t b_t
        let mut mult = HashMap::new();
        for (a, ea) in basis.iter().enumerate() {
            for &b in by_pair_with_target(&by_pair, ea.source, s) {
                let eb = &basis[b];
                let (kj, ki, kl) = (
                    simples[ea.target].size(),
                    simples[ea.source].size(),
                    simples[eb.source].size(),
                );
                let prod = alg.block_product((ki, kj), &vectors[a], kl, &vectors[b]);
                let coeffs: Vec<(usize, BigRational)> = if prod.iter().all(Zero::is_zero) {
                    Vec::new()
                } else {
                    let pair = (ea.target, eb.source);
                    let y = solvers
                        .get(&pair)
                        .and_then(|q| q.coords(&to_rational(&prod)))
                        .ok_or_else(|| {
                            Error::Certificate(format!(
                                "product of basis elements {a} and {b} leaves e_j A e_l"
                            ))
                        })?;
                    let c2 = scales[ea.source] * scales[ea.source];
                    by_pair[&pair]
                        .iter()
                        .zip(y)
                        .filter(|(_, yt)| !yt.is_zero())
                        .map(|(&t, yt)| (t, yt * &c2))
                        .collect()
                };
                mult.insert((a, b), coeffs);
            }
        }
        let out = BasicAlgebra {
            simples,
            basis,
            by_pair,
            identity,
            mult,
        };
        out.certify()?;
        Ok(out)
    }

    fn certify(&self) -> Result<()> {
        for (a, ea) in self.basis.iter().enumerate() {
            let left = self.product(self.identity[ea.target], a);
            let right = self.product(a, self.identity[ea.source]);
            let unit = vec![(a, BigRational::one())];
            if left != unit || right != unit {
                return Err(Error::Certificate(format!("e_i do not act as identities on {a}")));
            }
        }
        for a in 0..self.dim() {
            for b in self.composable_after(a) {
                let ab = self.product(a, b);
                for c in self.composable_after(b) {
                    let lhs = self.multiply(&ab, &[(c, BigRational::one())]);
                    let bc = self.product(b, c);
                    let rhs = self.multiply(&[(a, BigRational::one())], &bc);
                    if lhs != rhs {
                        return Err(Error::Certificate(format!(
                            "basic algebra not associative on ({a}, {b}, {c})"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn simples(&self) -> &[Partition] {
        &self.simples
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    /// The basis element equal to `e_i`.
    pub fn identity(&self, i: usize) -> usize {
        self.identity[i]
    }

    pub fn is_radical(&self, a: usize) -> bool {
        self.basis[a].target != self.basis[a].source
    }

    /// Basis of `e_j B e_i`.
    pub fn pair(&self, j: usize, i: usize) -> &[usize] {
        self.by_pair.get(&(j, i)).map_or(&[], Vec::as_slice)
    }

    /// `dim e_j B e_i`.
    pub fn cartan(&self, j: usize, i: usize) -> usize {
        self.pair(j, i).len()
    }

    /// Basis elements `b` with `target(b) = source(a)`.
    pub fn composable_after(&self, a: usize) -> Vec<usize> {
        let src = self.basis[a].source;
        (0..self.simples.len())
            .flat_map(|l| self.pair(src, l).iter().copied())
            .collect()
    }

    /// Basis of `B e_i`.
    pub fn projective_basis(&self, i: usize) -> Vec<usize> {
        (0..self.simples.len())
            .flat_map(|j| self.pair(j, i).iter().copied())
            .collect()
    }

    pub fn product(&self, a: usize, b: usize) -> Vec<(usize, BigRational)> {
        self.mult.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub(crate) fn product_ref(&self, a: usize, b: usize) -> Option<&[(usize, BigRational)]> {
        self.mult.get(&(a, b)).map(Vec::as_slice)
    }

    pub fn multiply(
        &self,
        x: &[(usize, BigRational)],
        y: &[(usize, BigRational)],
    ) -> Vec<(usize, BigRational)> {
        let mut acc: std::collections::BTreeMap<usize, BigRational> = Default::default();
        for (a, u) in x {
            for (b, v) in y {
                for (t, c) in self.product(*a, *b) {
                    *acc.entry(t).or_insert_with(BigRational::zero) += u * v * c;
                }
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

fn by_pair_with_target(by_pair: &HashMap<(usize, usize), Vec<usize>>, target: usize, s: usize) -> impl Iterator<Item = &usize> {
    (0..s).flat_map(move |l| by_pair.get(&(target, l)).into_iter().flatten())
}
