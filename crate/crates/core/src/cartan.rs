//! Cartan matrix of `ℚSE_n` by characters, by box-move rules on the first
//! two superdiagonals, or by the algebra oracle.
//!
//! Entry `(beta, alpha)` with `beta ⊢ k`, `alpha ⊢ r` is the multiplicity of
//! `S(beta)` in `P(alpha)`, i.e. of `S^beta ⊗ S^alpha` in the
//! `S_k × S_r`-module `ℚ hom(r, k)`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, OnceLock, RwLock};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::{decompose, restrict_to_young, ClassFunction};
use crate::error::{Error, Result};
use crate::oracle::{AlgebraRep, BuildOptions};
use crate::partitions::{partitions_up_to, removable_boxes, Partition};
use crate::surjections::hom_permutation_character;
use crate::tableaux::{lr_expand, pieri_expand};

/// A simple (equivalently, indecomposable projective) of `ℚSE_n`, labelled
/// by a partition; its level is the number of boxes.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SimpleIndex(Partition);

impl SimpleIndex {
    pub fn new(lambda: Partition) -> Self {
        SimpleIndex(lambda)
    }

    pub fn level(&self) -> usize {
        self.0.size()
    }

    pub fn partition(&self) -> &Partition {
        &self.0
    }
}

impl From<Partition> for SimpleIndex {
    fn from(p: Partition) -> Self {
        SimpleIndex(p)
    }
}

impl fmt::Display for SimpleIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// All simples for levels `0..=n` in the global order.
pub fn simples(n: usize) -> Vec<SimpleIndex> {
    partitions_up_to(n).into_iter().map(SimpleIndex).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Character,
    ClosedForm,
    Oracle,
}

impl FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "character" => Ok(Method::Character),
            "closed_form" => Ok(Method::ClosedForm),
            "oracle" => Ok(Method::Oracle),
            _ => Err(Error::Parse(format!("unknown method {s:?}"))),
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Character => "character",
            Method::ClosedForm => "closed_form",
            Method::Oracle => "oracle",
        })
    }
}

/// What the closed-form method does with entries it has no rule for.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum FillPolicy {
    /// Fail on the first such entry.
    #[default]
    Strict,
    /// Leave the entry unknown.
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanMatrix {
    n: usize,
    index: Vec<Partition>,
    entries: Vec<Vec<Option<u64>>>,
}

impl CartanMatrix {
    fn from_fn(n: usize, mut f: impl FnMut(&Partition, &Partition) -> Result<Option<u64>>) -> Result<Self> {
        let index = partitions_up_to(n);
        let mut entries = Vec::with_capacity(index.len());
        for beta in &index {
            entries.push(index.iter().map(|alpha| f(beta, alpha)).collect::<Result<Vec<_>>>()?);
        }
        Ok(CartanMatrix { n, index, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Row and column labels in the global order.
    pub fn index(&self) -> &[Partition] {
        &self.index
    }

    pub fn size(&self) -> usize {
        self.index.len()
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<u64> {
        self.entries[row][col]
    }

    pub fn get(&self, beta: &Partition, alpha: &Partition) -> Option<u64> {
        let r = self.index.iter().position(|p| p == beta)?;
        let c = self.index.iter().position(|p| p == alpha)?;
        self.entries[r][c]
    }

    pub fn rows(&self) -> &[Vec<Option<u64>>] {
        &self.entries
    }

    pub fn is_complete(&self) -> bool {
        self.entries.iter().flatten().all(Option::is_some)
    }

    /// Entries as plain integers; fails if any entry is unknown.
    pub fn to_integers(&self) -> Result<Vec<Vec<u64>>> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| e.ok_or_else(|| Error::OutOfRange("matrix has unknown entries".into())))
                    .collect()
            })
            .collect()
    }

    /// Zero below the block diagonal, identity diagonal blocks.
    pub fn check_unitriangular(&self) -> Result<()> {
        for (r, beta) in self.index.iter().enumerate() {
            for (c, alpha) in self.index.iter().enumerate() {
                let expected = if beta.size() > alpha.size() {
                    Some(0)
                } else if beta.size() == alpha.size() {
                    Some(u64::from(beta == alpha))
                } else {
                    None
                };
                if let (Some(want), Some(got)) = (expected, self.entries[r][c]) {
                    if want != got {
                        return Err(Error::Certificate(format!(
                            "entry ({beta}, {alpha}) = {got}, expected {want}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn to_json(&self, method: Method) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "method": method.to_string(),
            "index": self.index,
            "matrix": self.entries,
        })
    }

    /// CSV with a header of column labels; unknown entries are `?`.
    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["beta\\alpha".to_string()];
        header.extend(self.index.iter().map(ToString::to_string));
        w.write_record(&header).unwrap();
        for (beta, row) in self.index.iter().zip(&self.entries) {
            let mut rec = vec![beta.to_string()];
            rec.extend(row.iter().map(|e| e.map_or("?".to_string(), |v| v.to_string())));
            w.write_record(&rec).unwrap();
        }
        String::from_utf8(w.into_inner().unwrap()).unwrap()
    }
}

type HomDecomposition = Arc<BTreeMap<(Partition, Partition), u64>>;

fn hom_decomposition(r: usize, k: usize) -> Result<HomDecomposition> {
    static CACHE: OnceLock<RwLock<HashMap<(usize, usize), HomDecomposition>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(d) = cache.read().unwrap().get(&(r, k)) {
        return Ok(d.clone());
    }
    let chi = hom_permutation_character(r, k);
    let d = Arc::new(decompose(&chi)?.as_product().cloned().unwrap_or_default());
    Ok(cache.write().unwrap().entry((r, k)).or_insert(d).clone())
}

/// `<χ^beta ⊗ χ^alpha, χ_{hom(r,k)}>`, zero when `r < k`.
pub fn cartan_entry_character(beta: &Partition, alpha: &Partition) -> Result<u64> {
    let (k, r) = (beta.size(), alpha.size());
    if r < k {
        return Ok(0);
    }
    let d = hom_decomposition(r, k)?;
    Ok(d.get(&(beta.clone(), alpha.clone())).copied().unwrap_or(0))
}

fn check_offset(beta: &Partition, alpha: &Partition, offset: usize) -> Result<()> {
    if alpha.size() != beta.size() + offset {
        return Err(Error::SizeMismatch(format!(
            "|{alpha}| must be |{beta}| + {offset}"
        )));
    }
    Ok(())
}

/// Ways to remove one box from `beta` and add two, not in the same column,
/// to reach `alpha`.
pub fn cartan_first_superdiagonal(beta: &Partition, alpha: &Partition) -> Result<u64> {
    check_offset(beta, alpha, 1)?;
    Ok(removable_boxes(beta)
        .iter()
        .map(|mu| pieri_expand(mu, 2).get(alpha).copied().unwrap_or(0))
        .sum())
}

/// `Ind(S^gamma ⊗ tr̄₂)` and `Ind(S^gamma ⊗ sgn̄₂)` from `S_{k-2} × D₄`
/// to `S_{k-2} × S_4` replace the `S_2` factor by these `S_4` modules.
pub const D4_TRIVIAL_INDUCTION: &[(&[usize], u64)] = &[(&[4], 1), (&[2, 2], 1)];
pub const D4_SIGN_INDUCTION: &[(&[usize], u64)] = &[(&[3, 1], 1)];

fn substitution(table: &[(&[usize], u64)]) -> Vec<(Partition, u64)> {
    table
        .iter()
        .map(|(parts, m)| (Partition::new(parts.to_vec()).unwrap(), *m))
        .collect()
}

/// Multiplicity of `alpha` from the orbit of maps with a fibre of size
/// three: remove a box, then add three with no two in a column.
fn second_from_triple_fibre(beta: &Partition, alpha: &Partition) -> u64 {
    removable_boxes(beta)
        .iter()
        .map(|mu| pieri_expand(mu, 3).get(alpha).copied().unwrap_or(0))
        .sum()
}

/// Multiplicity of `alpha` from the orbit of maps with two fibres of size
/// two: restrict `beta` to `S_{k-2} × S_2`, inflate the `S_2` factor along
/// the dihedral group and induce.
fn second_from_double_pair(beta: &Partition, alpha: &Partition) -> Result<u64> {
    let k = beta.size();
    let res = restrict_to_young(&ClassFunction::irreducible(beta), k - 2, 2)?;
    let pieces = decompose(&res)?;
    let trivial = substitution(D4_TRIVIAL_INDUCTION);
    let sign = substitution(D4_SIGN_INDUCTION);
    let mut total = 0;
    for ((gamma, eps), m) in pieces.as_product().unwrap() {
        let deltas = if *eps == Partition::row(2) { &trivial } else { &sign };
        for (delta, md) in deltas {
            total += m * md * lr_expand(gamma, delta).get(alpha).copied().unwrap_or(0);
        }
    }
    Ok(total)
}

/// Entries two levels apart, as the sum over the two orbits of
/// `hom(k+2, k)`; for `k < 2` only the triple-fibre orbit exists.
pub fn cartan_second_superdiagonal(beta: &Partition, alpha: &Partition) -> Result<u64> {
    check_offset(beta, alpha, 2)?;
    let m1 = second_from_triple_fibre(beta, alpha);
    let m2 = if beta.size() >= 2 {
        second_from_double_pair(beta, alpha)?
    } else {
        0
    };
    Ok(m1 + m2)
}

/// Closed-form entry, `None` past the second superdiagonal.
pub fn cartan_entry_closed_form(beta: &Partition, alpha: &Partition) -> Result<Option<u64>> {
    let (k, r) = (beta.size(), alpha.size());
    if k > r {
        return Ok(Some(0));
    }
    if beta.is_empty() {
        // hom(r, 0) is empty for r > 0
        return Ok(Some(u64::from(alpha.is_empty())));
    }
    match r - k {
        0 => Ok(Some(u64::from(beta == alpha))),
        1 => cartan_first_superdiagonal(beta, alpha).map(Some),
        2 => cartan_second_superdiagonal(beta, alpha).map(Some),
        _ => Ok(None),
    }
}

pub fn full_cartan(n: usize, method: Method) -> Result<CartanMatrix> {
    full_cartan_with(n, method, FillPolicy::Strict, BuildOptions::default())
}

/// The full matrix; `policy` only affects the closed-form method and
/// `options` only the oracle method.
pub fn full_cartan_with(n: usize, method: Method, policy: FillPolicy, options: BuildOptions) -> Result<CartanMatrix> {
    let m = match method {
        Method::Character => {
            let index = partitions_up_to(n);
            let pairs: Vec<(usize, usize)> = (0..index.len())
                .flat_map(|r| (0..index.len()).map(move |c| (r, c)))
                .collect();
            let values: Vec<u64> = pairs
                .par_iter()
                .map(|&(r, c)| cartan_entry_character(&index[r], &index[c]))
                .collect::<Result<_>>()?;
            let mut it = values.into_iter();
            CartanMatrix::from_fn(n, |_, _| Ok(it.next()))?
        }
        Method::ClosedForm => CartanMatrix::from_fn(n, |beta, alpha| {
            match cartan_entry_closed_form(beta, alpha)? {
                None if policy == FillPolicy::Strict => Err(Error::ClosedFormUnavailable {
                    offset: alpha.size() - beta.size(),
                    beta: beta.to_string(),
                    alpha: alpha.to_string(),
                }),
                e => Ok(e),
            }
        })?,
        Method::Oracle => {
            let alg = AlgebraRep::build_with(n, options, &mut |_| {})?;
            cartan_from_oracle(&alg)?
        }
    };
    m.check_unitriangular()?;
    Ok(m)
}

/// `dim e_beta A e_alpha` for every pair.
pub fn cartan_from_oracle(alg: &AlgebraRep) -> Result<CartanMatrix> {
    CartanMatrix::from_fn(alg.n(), |beta, alpha| {
        alg.cartan_via_dims(beta, alpha).map(|d| Some(d as u64))
    })
}
