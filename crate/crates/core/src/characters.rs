//! Exact character theory of `S_k` and of Young-type products `S_a × S_b`.
//!
//! Class functions are stored densely over cycle types in partition order;
//! on a product group the classes are pairs `(mu, nu)` in lexicographic order
//! of the two factor orders.

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, hook_dimension, Partition};
use crate::perm::{all_perms, factorial, Perm};
use crate::tableaux::Multiset;

/// A conjugacy class of `S_k`, indexed by the cycle type.
pub type CycleType = Partition;

/// `z_mu = prod_i i^{m_i} m_i!`, the order of the centralizer of a element of type `mu`.
pub fn centralizer_order(mu: &CycleType) -> u64 {
    mu.multiplicities()
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &m)| (i as u64).pow(m as u32) * factorial(m))
        .product()
}

/// Number of permutations of cycle type `mu`.
pub fn class_size(mu: &CycleType) -> u64 {
    factorial(mu.size()) / centralizer_order(mu)
}

fn mn_cache() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `chi^lambda(mu)` by the Murnaghan-Nakayama rule, removing border strips of
/// length `mu_1` first.
pub fn mn_character(lambda: &Partition, mu: &CycleType) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(format!("chi^{lambda} evaluated at class {mu}")));
    }
    Ok(mn_rec(lambda, mu.parts()))
}

fn mn_rec(lambda: &Partition, mu: &[usize]) -> i64 {
    let Some((&h, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (lambda.clone(), Partition::from_parts_unchecked(mu.to_vec()));
    if let Some(&v) = mn_cache().lock().unwrap().get(&key) {
        return v;
    }
    // beta numbers: lambda_i + (L - 1 - i), strictly decreasing
    let len = lambda.len();
    let beads: Vec<usize> = (0..len).map(|i| lambda.part(i) + len - 1 - i).collect();
    let occupied: HashSet<usize> = beads.iter().copied().collect();
    let mut total = 0i64;
    for (idx, &b) in beads.iter().enumerate() {
        if b < h || occupied.contains(&(b - h)) {
            continue;
        }
        let between = beads.iter().filter(|&&x| x > b - h && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut moved = beads.clone();
        moved[idx] = b - h;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(i, &x)| x - (len - 1 - i))
            .collect();
        let smaller = Partition::from_unsorted(parts);
        total += sign * mn_rec(&smaller, rest);
    }
    mn_cache().lock().unwrap().insert(key, total);
    total
}

/// Rows indexed by `lambda`, columns by `mu`, both in partition order.
pub fn character_table(k: usize) -> Vec<Vec<i64>> {
    let parts = enumerate_partitions(k);
    parts
        .iter()
        .map(|l| parts.iter().map(|m| mn_character(l, m).unwrap()).collect())
        .collect()
}

/// The group a class function lives on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Group {
    Sym(usize),
    SymProduct(usize, usize),
}

impl Group {
    pub fn order(&self) -> u64 {
        match *self {
            Group::Sym(k) => factorial(k),
            Group::SymProduct(a, b) => factorial(a) * factorial(b),
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        match *self {
            Group::Sym(k) => vec![k],
            Group::SymProduct(a, b) => vec![a, b],
        }
    }

    pub fn from_degrees(degrees: &[usize]) -> Result<Self> {
        match *degrees {
            [k] => Ok(Group::Sym(k)),
            [a, b] => Ok(Group::SymProduct(a, b)),
            _ => Err(Error::Parse(format!("expected one or two degrees, got {degrees:?}"))),
        }
    }

    /// Class labels in storage order; product classes are `(mu, Some(nu))`.
    pub fn classes(&self) -> Vec<(Partition, Option<Partition>)> {
        match *self {
            Group::Sym(k) => enumerate_partitions(k).into_iter().map(|m| (m, None)).collect(),
            Group::SymProduct(a, b) => {
                let right = enumerate_partitions(b);
                enumerate_partitions(a)
                    .into_iter()
                    .flat_map(|m| right.iter().map(move |n| (m.clone(), Some(n.clone()))))
                    .collect()
            }
        }
    }

    fn class_sizes(&self) -> Vec<u64> {
        self.classes()
            .iter()
            .map(|(m, n)| class_size(m) * n.as_ref().map_or(1, class_size))
            .collect()
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Group::Sym(k) => write!(f, "S_{k}"),
            Group::SymProduct(a, b) => write!(f, "S_{a} x S_{b}"),
        }
    }
}

/// An exact rational-valued class function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassFunction {
    group: Group,
    values: Vec<BigRational>,
}

fn rat(x: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(x))
}

impl ClassFunction {
    pub fn new(group: Group, values: Vec<BigRational>) -> Result<Self> {
        let expected = group.classes().len();
        if values.len() != expected {
            return Err(Error::SizeMismatch(format!(
                "{group} has {expected} classes, got {} values",
                values.len()
            )));
        }
        Ok(ClassFunction { group, values })
    }

    pub fn from_integers(group: Group, values: &[i64]) -> Result<Self> {
        Self::new(group, values.iter().map(|&v| rat(v)).collect())
    }

    pub fn zero(group: Group) -> Self {
        let len = group.classes().len();
        ClassFunction {
            group,
            values: vec![BigRational::zero(); len],
        }
    }

    /// `chi^lambda` on `S_|lambda|`.
    pub fn irreducible(lambda: &Partition) -> Self {
        let k = lambda.size();
        let values = enumerate_partitions(k)
            .iter()
            .map(|mu| rat(mn_character(lambda, mu).unwrap()))
            .collect();
        ClassFunction {
            group: Group::Sym(k),
            values,
        }
    }

    /// `chi^beta ⊗ chi^alpha` on `S_|beta| × S_|alpha|`.
    pub fn irreducible_pair(beta: &Partition, alpha: &Partition) -> Self {
        Self::irreducible(beta).tensor(&Self::irreducible(alpha))
    }

    pub fn trivial(k: usize) -> Self {
        Self::irreducible(&Partition::row(k))
    }

    pub fn group(&self) -> Group {
        self.group
    }

    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    /// Value at the class `mu` of `S_k`.
    pub fn at(&self, mu: &Partition) -> Option<&BigRational> {
        let Group::Sym(k) = self.group else { return None };
        enumerate_partitions(k)
            .iter()
            .position(|m| m == mu)
            .map(|i| &self.values[i])
    }

    /// Value at the class `(mu, nu)` of `S_a × S_b`.
    pub fn at_pair(&self, mu: &Partition, nu: &Partition) -> Option<&BigRational> {
        let Group::SymProduct(a, b) = self.group else { return None };
        let i = enumerate_partitions(a).iter().position(|m| m == mu)?;
        let right = enumerate_partitions(b);
        let j = right.iter().position(|n| n == nu)?;
        Some(&self.values[i * right.len() + j])
    }

    /// Value at the identity, i.e. the degree for a genuine character.
    pub fn degree(&self) -> &BigRational {
        // The identity class [1^k] is last in partition order, and so is the
        // pair ([1^a], [1^b]).
        self.values.last().expect("every group has at least one class")
    }

    /// Outer tensor product: a class function on `S_a × S_b`.
    pub fn tensor(&self, other: &ClassFunction) -> ClassFunction {
        let (Group::Sym(a), Group::Sym(b)) = (self.group, other.group) else {
            panic!("tensor is only defined for two class functions on symmetric groups");
        };
        let values = self
            .values
            .iter()
            .flat_map(|x| other.values.iter().map(move |y| x * y))
            .collect();
        ClassFunction {
            group: Group::SymProduct(a, b),
            values,
        }
    }

    pub fn add(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.group != other.group {
            return Err(Error::GroupMismatch(self.group.to_string(), other.group.to_string()));
        }
        Ok(ClassFunction {
            group: self.group,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> ClassFunction {
        ClassFunction {
            group: self.group,
            values: self.values.iter().map(|v| v * c).collect(),
        }
    }

    pub fn is_integral(&self) -> bool {
        self.values.iter().all(|v| v.is_integer())
    }
}

/// `<phi, psi> = 1/|G| sum_g phi(g) psi(g)` (characters here are real).
pub fn inner_product(phi: &ClassFunction, psi: &ClassFunction) -> Result<BigRational> {
    if phi.group != psi.group {
        return Err(Error::GroupMismatch(phi.group.to_string(), psi.group.to_string()));
    }
    let sizes = phi.group.class_sizes();
    let mut sum = BigRational::zero();
    for ((a, b), &c) in phi.values.iter().zip(&psi.values).zip(&sizes) {
        if !a.is_zero() && !b.is_zero() {
            sum += a * b * rat(c as i64);
        }
    }
    Ok(sum / rat(phi.group.order() as i64))
}

fn merge(mu: &Partition, nu: &Partition) -> Partition {
    let mut parts = mu.parts().to_vec();
    parts.extend_from_slice(nu.parts());
    Partition::from_unsorted(parts)
}

/// Restriction from `S_{a+b}` to the Young subgroup `S_a × S_b`.
pub fn restrict_to_young(chi: &ClassFunction, a: usize, b: usize) -> Result<ClassFunction> {
    let Group::Sym(k) = chi.group else {
        return Err(Error::GroupMismatch(chi.group.to_string(), format!("S_{}", a + b)));
    };
    if a + b != k {
        return Err(Error::SizeMismatch(format!("{a} + {b} != {k}")));
    }
    let index: HashMap<Partition, usize> = enumerate_partitions(k)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    let values = Group::SymProduct(a, b)
        .classes()
        .iter()
        .map(|(mu, nu)| chi.values[index[&merge(mu, nu.as_ref().unwrap())]].clone())
        .collect();
    Ok(ClassFunction {
        group: Group::SymProduct(a, b),
        values,
    })
}

/// Induction from `S_a × S_b` to `S_{a+b}` by the class formula
/// `Ind phi(mu) = sum_{alpha ∪ beta = mu} z_mu / (z_alpha z_beta) phi(alpha, beta)`.
pub fn induce_young(phi: &ClassFunction) -> Result<ClassFunction> {
    let Group::SymProduct(a, b) = phi.group else {
        return Err(Error::GroupMismatch(phi.group.to_string(), "S_a x S_b".into()));
    };
    let k = a + b;
    let targets = enumerate_partitions(k);
    let index: HashMap<&Partition, usize> = targets.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut values = vec![BigRational::zero(); targets.len()];
    for ((alpha, beta), v) in phi.group.classes().iter().zip(&phi.values) {
        let beta = beta.as_ref().unwrap();
        let mu = merge(alpha, beta);
        let weight = BigRational::new(
            BigInt::from(centralizer_order(&mu)),
            BigInt::from(centralizer_order(alpha) * centralizer_order(beta)),
        );
        values[index[&mu]] += v * weight;
    }
    Ok(ClassFunction {
        group: Group::Sym(k),
        values,
    })
}

/// `Ind_{S_a × S_b}^{S_{a+b}} (chi1 ⊗ chi2)`.
pub fn induce_product(chi1: &ClassFunction, chi2: &ClassFunction) -> Result<ClassFunction> {
    check_sym(chi1)?;
    check_sym(chi2)?;
    induce_young(&chi1.tensor(chi2))
}

/// Same induced character, assembled from Frobenius reciprocity:
/// the multiplicity of `chi^gamma` is `<chi1 ⊗ chi2, Res chi^gamma>`.
pub fn induce_product_via_frobenius(chi1: &ClassFunction, chi2: &ClassFunction) -> Result<ClassFunction> {
    let a = check_sym(chi1)?;
    let b = check_sym(chi2)?;
    let phi = chi1.tensor(chi2);
    let mut out = ClassFunction::zero(Group::Sym(a + b));
    for gamma in enumerate_partitions(a + b) {
        let irr = ClassFunction::irreducible(&gamma);
        let m = inner_product(&phi, &restrict_to_young(&irr, a, b)?)?;
        if !m.is_zero() {
            out = out.add(&irr.scale(&m))?;
        }
    }
    Ok(out)
}

fn check_sym(chi: &ClassFunction) -> Result<usize> {
    match chi.group {
        Group::Sym(k) => Ok(k),
        g => Err(Error::GroupMismatch(g.to_string(), "a symmetric group".into())),
    }
}

fn check_group(elements: &[Perm]) -> Result<()> {
    let Some(first) = elements.first() else {
        return Err(Error::NotAGroup("empty element list".into()));
    };
    let m = first.degree();
    if elements.iter().any(|e| e.degree() != m) {
        return Err(Error::NotAGroup("elements of different degrees".into()));
    }
    let set: HashSet<&Perm> = elements.iter().collect();
    if set.len() != elements.len() {
        return Err(Error::NotAGroup("repeated elements".into()));
    }
    for x in elements {
        for y in elements {
            if !set.contains(&x.compose(y)) {
                return Err(Error::NotAGroup(format!("{x} ∘ {y} is missing")));
            }
        }
    }
    Ok(())
}

/// Induces a class function of a subgroup `H ≤ S_m`, given elementwise, by
/// direct summation over `S_m`:
/// `Ind chi(g) = 1/|H| sum_{x in S_m, x^-1 g x in H} chi(x^-1 g x)`.
pub fn induce_from_subgroup(elements: &[Perm], chi: &[BigRational]) -> Result<ClassFunction> {
    if elements.len() != chi.len() {
        return Err(Error::SizeMismatch(format!(
            "{} elements but {} character values",
            elements.len(),
            chi.len()
        )));
    }
    check_group(elements)?;
    let value: HashMap<&Perm, &BigRational> = elements.iter().zip(chi).collect();
    for h in elements {
        for g in elements {
            let conj = h.compose(g).compose(&h.inverse());
            if value[g] != value[&conj] {
                return Err(Error::NotACharacter(format!(
                    "values differ on the conjugate elements {g} and {conj}"
                )));
            }
        }
    }
    let m = elements[0].degree();
    let ambient = all_perms(m);
    let order = rat(elements.len() as i64);
    let values = enumerate_partitions(m)
        .iter()
        .map(|mu| {
            let g = Perm::class_representative(mu);
            let mut sum = BigRational::zero();
            for x in &ambient {
                let conj = x.inverse().compose(&g).compose(x);
                if let Some(v) = value.get(&conj) {
                    sum += *v;
                }
            }
            sum / &order
        })
        .collect();
    Ok(ClassFunction {
        group: Group::Sym(m),
        values,
    })
}

/// `Ind_K^{S_a × S_b} tr_K` for a subgroup `K` given by its elements `(σ, π)`,
/// via `Ind 1(g) = |C(g)| · |g^G ∩ K| / |K|`.
pub fn induce_trivial_from_product_subgroup(
    a: usize,
    b: usize,
    elements: &[(Perm, Perm)],
) -> Result<ClassFunction> {
    if elements.iter().any(|(s, p)| s.degree() != a || p.degree() != b) {
        return Err(Error::SizeMismatch(format!("elements must lie in S_{a} x S_{b}")));
    }
    let set: HashSet<&(Perm, Perm)> = elements.iter().collect();
    for (s1, p1) in elements {
        for (s2, p2) in elements {
            if !set.contains(&(s1.compose(s2), p1.compose(p2))) {
                return Err(Error::NotAGroup(format!("product of ({s1}, {p1}) and ({s2}, {p2}) is missing")));
            }
        }
    }
    let group = Group::SymProduct(a, b);
    let classes = group.classes();
    let index: HashMap<(Partition, Partition), usize> = classes
        .iter()
        .enumerate()
        .map(|(i, (m, n))| ((m.clone(), n.clone().unwrap()), i))
        .collect();
    let mut counts = vec![0u64; classes.len()];
    for (s, p) in elements {
        counts[index[&(s.cycle_type(), p.cycle_type())]] += 1;
    }
    let order = elements.len() as u64;
    let values = classes
        .iter()
        .zip(&counts)
        .map(|((m, n), &c)| {
            let z = centralizer_order(m) * centralizer_order(n.as_ref().unwrap());
            BigRational::new(BigInt::from(z * c), BigInt::from(order))
        })
        .collect();
    Ok(ClassFunction { group, values })
}

/// Multiplicities of irreducible constituents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Decomposition {
    Sym(Multiset),
    Product(BTreeMap<(Partition, Partition), u64>),
}

impl Decomposition {
    pub fn as_sym(&self) -> Option<&Multiset> {
        match self {
            Decomposition::Sym(m) => Some(m),
            Decomposition::Product(_) => None,
        }
    }

    pub fn as_product(&self) -> Option<&BTreeMap<(Partition, Partition), u64>> {
        match self {
            Decomposition::Product(m) => Some(m),
            Decomposition::Sym(_) => None,
        }
    }

    /// `sum mult · dim`, which equals the degree of the decomposed character.
    pub fn total_dimension(&self) -> u64 {
        match self {
            Decomposition::Sym(m) => m.iter().map(|(l, c)| c * hook_dimension(l)).sum(),
            Decomposition::Product(m) => m
                .iter()
                .map(|((b, a), c)| c * hook_dimension(b) * hook_dimension(a))
                .sum(),
        }
    }
}

/// `S_k`: `{"[2,1]": 1, ...}`; `S_a × S_b`: a list of
/// `{"left": [..], "right": [..], "multiplicity": m}`.
impl Serialize for Decomposition {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Decomposition::Sym(m) => serializer.collect_map(m.iter().map(|(l, c)| (l.to_string(), c))),
            Decomposition::Product(m) => {
                let rows: Vec<serde_json::Value> = m
                    .iter()
                    .map(|((l, r), c)| serde_json::json!({ "left": l, "right": r, "multiplicity": c }))
                    .collect();
                rows.serialize(serializer)
            }
        }
    }
}

fn multiplicity(value: BigRational, what: &dyn fmt::Display) -> Result<u64> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::NotACharacter(format!("multiplicity {value} of {what}")));
    }
    value
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotACharacter(format!("multiplicity of {what} overflows")))
}

/// Decomposes a genuine character into irreducibles; fails on any negative or
/// fractional multiplicity.
pub fn decompose(chi: &ClassFunction) -> Result<Decomposition> {
    match chi.group {
        Group::Sym(k) => {
            let mut out = Multiset::new();
            for lambda in enumerate_partitions(k) {
                let m = multiplicity(inner_product(chi, &ClassFunction::irreducible(&lambda))?, &lambda)?;
                if m > 0 {
                    out.insert(lambda, m);
                }
            }
            Ok(Decomposition::Sym(out))
        }
        Group::SymProduct(a, b) => {
            let left = enumerate_partitions(a);
            let right = enumerate_partitions(b);
            let mut out = BTreeMap::new();
            for l in &left {
                let chi_l = ClassFunction::irreducible(l);
                for r in &right {
                    let irr = chi_l.tensor(&ClassFunction::irreducible(r));
                    let label = format!("{l} ⊗ {r}");
                    let m = multiplicity(inner_product(chi, &irr)?, &label)?;
                    if m > 0 {
                        out.insert((l.clone(), r.clone()), m);
                    }
                }
            }
            Ok(Decomposition::Product(out))
        }
    }
}

/// Serialized form: `{"degrees": [k] or [a, b], "values": [...]}` where values
/// are integers or `"p/q"` strings.
#[derive(Serialize, Deserialize)]
struct ClassFunctionRepr {
    degrees: Vec<usize>,
    values: Vec<serde_json::Value>,
}

impl Serialize for ClassFunction {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let values = self
            .values
            .iter()
            .map(|v| match v.to_integer().to_i64() {
                Some(i) if v.is_integer() => serde_json::Value::from(i),
                _ => serde_json::Value::from(v.to_string()),
            })
            .collect();
        ClassFunctionRepr {
            degrees: self.group.degrees(),
            values,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ClassFunction {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = ClassFunctionRepr::deserialize(deserializer)?;
        let group = Group::from_degrees(&repr.degrees).map_err(D::Error::custom)?;
        let values = repr
            .values
            .iter()
            .map(|v| match v {
                serde_json::Value::Number(n) => n
                    .as_i64()
                    .map(rat)
                    .ok_or_else(|| D::Error::custom(format!("non-integer number {n}; use \"p/q\""))),
                serde_json::Value::String(s) => s
                    .trim()
                    .parse::<BigRational>()
                    .map_err(|_| D::Error::custom(format!("cannot parse rational {s:?}"))),
                other => Err(D::Error::custom(format!("unexpected value {other}"))),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ClassFunction::new(group, values).map_err(D::Error::custom)
    }
}

/// The dihedral group `D_4 ≤ S_4` generated by `a = (12)` and `b = (13)(24)`,
/// together with the homomorphism `ν: D_4 → S_2` with `ν(a) = id`, `ν(b) = (12)`.
pub mod dihedral {
    use super::*;

    /// The eight elements in the fixed order
    /// `id, (12), (34), (12)(34), (13)(24), (14)(23), (1324), (1423)`;
    /// the first four keep corners.
    pub fn d4_elements() -> Vec<Perm> {
        let cycles: [&[&[usize]]; 8] = [
            &[],
            &[&[1, 2]],
            &[&[3, 4]],
            &[&[1, 2], &[3, 4]],
            &[&[1, 3], &[2, 4]],
            &[&[1, 4], &[2, 3]],
            &[&[1, 3, 2, 4]],
            &[&[1, 4, 2, 3]],
        ];
        cycles
            .iter()
            .map(|c| Perm::from_cycles(4, c).expect("valid cycles"))
            .collect()
    }

    /// `ν(τ)` for `τ ∈ D_4`: the identity iff `τ` keeps the pairs `{1,2}` and
    /// `{3,4}` in place, the transposition otherwise.
    pub fn nu(tau: &Perm) -> Perm {
        if tau.apply(0) < 2 {
            Perm::identity(2)
        } else {
            Perm::from_images(vec![1, 0]).unwrap()
        }
    }

    /// The inflation of `sgn_2` along `ν`, in the order of [`d4_elements`].
    pub fn sgn_bar() -> Vec<BigRational> {
        [1, 1, 1, 1, -1, -1, -1, -1].iter().map(|&v| rat(v)).collect()
    }

    /// The inflation of `tr_2`, i.e. the trivial character of `D_4`.
    pub fn tr_bar() -> Vec<BigRational> {
        vec![BigRational::one(); 8]
    }
}

#[cfg(test)]
mod tests {
    use super::dihedral::*;
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn class_sizes() {
        assert_eq!(class_size(&p(&[1, 1, 1, 1])), 1);
        assert_eq!(class_size(&p(&[2, 2])), 3);
        assert_eq!(class_size(&p(&[4])), 6);
        let total: u64 = enumerate_partitions(6).iter().map(class_size).sum();
        assert_eq!(total, 720);
    }

    #[test]
    fn dihedral_character_table_values() {
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[1, 1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 2])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 1, 1])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[4])).unwrap(), 0);
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[2, 2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[2, 1, 1])).unwrap(), 1);
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[4])).unwrap(), -1);
        for mu in enumerate_partitions(5) {
            assert_eq!(mn_character(&p(&[5]), &mu).unwrap(), 1);
        }
        assert!(mn_character(&p(&[2]), &p(&[1])).is_err());
    }

    #[test]
    fn irreducibles_are_orthonormal() {
        for k in 0..=6 {
            let irr: Vec<_> = enumerate_partitions(k).iter().map(ClassFunction::irreducible).collect();
            for (i, a) in irr.iter().enumerate() {
                for (j, b) in irr.iter().enumerate() {
                    let expected = if i == j { BigRational::one() } else { BigRational::zero() };
                    assert_eq!(inner_product(a, b).unwrap(), expected);
                }
            }
        }
    }

    #[test]
    fn inner_product_group_mismatch() {
        let a = ClassFunction::trivial(2);
        let b = ClassFunction::trivial(3);
        assert!(matches!(inner_product(&a, &b), Err(Error::GroupMismatch(..))));
    }

    #[test]
    fn restriction_examples() {
        let tr = restrict_to_young(&ClassFunction::trivial(4), 1, 3).unwrap();
        assert_eq!(tr, ClassFunction::trivial(1).tensor(&ClassFunction::trivial(3)));
        assert!(restrict_to_young(&ClassFunction::trivial(4), 1, 2).is_err());

        let res = restrict_to_young(&ClassFunction::irreducible(&p(&[2, 1])), 2, 1).unwrap();
        for mu in [p(&[2]), p(&[1, 1])] {
            let irr = ClassFunction::irreducible(&mu).tensor(&ClassFunction::trivial(1));
            assert_eq!(inner_product(&res, &irr).unwrap(), BigRational::one());
        }

        let res = restrict_to_young(&ClassFunction::irreducible(&p(&[2, 2])), 2, 2).unwrap();
        let trtr = ClassFunction::trivial(2).tensor(&ClassFunction::trivial(2));
        assert_eq!(inner_product(&res, &trtr).unwrap(), BigRational::one());
    }

    #[test]
    fn induction_routes_agree_on_small_cases() {
        let a = ClassFunction::irreducible(&p(&[2, 1]));
        let b = ClassFunction::trivial(3);
        assert_eq!(
            induce_product(&a, &b).unwrap(),
            induce_product_via_frobenius(&a, &b).unwrap()
        );
        let decomposed = decompose(&induce_product(&a, &b).unwrap()).unwrap();
        assert_eq!(
            decomposed.as_sym().unwrap(),
            &crate::tableaux::pieri_expand(&p(&[2, 1]), 3)
        );
    }

    #[test]
    fn induce_trivial_pair_is_subset_permutation_character() {
        // S_5 acting on 2-subsets: fixed points of type mu
        let ind = induce_product(&ClassFunction::trivial(2), &ClassFunction::trivial(3)).unwrap();
        for (i, mu) in enumerate_partitions(5).iter().enumerate() {
            let g = Perm::class_representative(mu);
            let mut fixed = 0;
            for x in 0..5 {
                for y in x + 1..5 {
                    let (gx, gy) = (g.apply(x), g.apply(y));
                    if (gx.min(gy), gx.max(gy)) == (x, y) {
                        fixed += 1;
                    }
                }
            }
            assert_eq!(ind.values()[i], rat(fixed));
        }
    }

    #[test]
    fn d4_inductions() {
        let d4 = d4_elements();
        let tr = decompose(&induce_from_subgroup(&d4, &tr_bar()).unwrap()).unwrap();
        assert_eq!(tr.as_sym().unwrap(), &Multiset::from([(p(&[4]), 1), (p(&[2, 2]), 1)]));
        let sgn = decompose(&induce_from_subgroup(&d4, &sgn_bar()).unwrap()).unwrap();
        assert_eq!(sgn.as_sym().unwrap(), &Multiset::from([(p(&[3, 1]), 1)]));
    }

    #[test]
    fn nu_is_a_homomorphism() {
        let d4 = d4_elements();
        for x in &d4 {
            for y in &d4 {
                assert_eq!(nu(&x.compose(y)), nu(x).compose(&nu(y)));
            }
        }
        let a = Perm::from_cycles(4, &[&[1, 2]]).unwrap();
        let b = Perm::from_cycles(4, &[&[1, 3], &[2, 4]]).unwrap();
        assert!(nu(&a).is_identity());
        assert!(!nu(&b).is_identity());
        // sgn_bar is sgn_2 ∘ ν
        for (x, v) in d4.iter().zip(sgn_bar()) {
            assert_eq!(rat(nu(x).sign()), v);
        }
    }

    #[test]
    fn d4_restrictions_from_the_tables() {
        let d4 = d4_elements();
        let res = |lambda: &Partition| -> Vec<BigRational> {
            d4.iter().map(|g| rat(mn_character(lambda, &g.cycle_type()).unwrap())).collect()
        };
        let avg = |xs: Vec<BigRational>, ys: Vec<BigRational>| -> BigRational {
            xs.iter().zip(&ys).map(|(x, y)| x * y).fold(BigRational::zero(), |a, b| a + b) / rat(8)
        };
        assert_eq!(avg(res(&p(&[2, 2])), tr_bar()), BigRational::one());
        assert_eq!(avg(res(&p(&[3, 1])), sgn_bar()), BigRational::one());
        let row31: Vec<i64> = res(&p(&[3, 1])).iter().map(|v| v.to_integer().to_i64().unwrap()).collect();
        assert_eq!(row31, vec![3, 1, 1, -1, -1, -1, -1, -1]);
    }

    #[test]
    fn induce_from_trivial_subgroup_is_regular() {
        let ind = induce_from_subgroup(&[Perm::identity(2)], &[BigRational::one()]).unwrap();
        assert_eq!(ind, ClassFunction::from_integers(Group::Sym(2), &[0, 2]).unwrap());
    }

    #[test]
    fn induce_from_non_group_fails() {
        let t = Perm::from_cycles(3, &[&[1, 2]]).unwrap();
        let u = Perm::from_cycles(3, &[&[2, 3]]).unwrap();
        let err = induce_from_subgroup(&[Perm::identity(3), t, u], &[rat(1), rat(1), rat(1)]);
        assert!(matches!(err, Err(Error::NotAGroup(_))));
    }

    #[test]
    fn decompose_regular_and_rejects_virtual() {
        let regular = ClassFunction::from_integers(Group::Sym(3), &[0, 0, 6]).unwrap();
        let d = decompose(&regular).unwrap();
        assert_eq!(
            d.as_sym().unwrap(),
            &Multiset::from([(p(&[3]), 1), (p(&[2, 1]), 2), (p(&[1, 1, 1]), 1)])
        );
        assert_eq!(d.total_dimension(), 6);
        let virt = ClassFunction::trivial(3).scale(&rat(-1));
        assert!(matches!(decompose(&virt), Err(Error::NotACharacter(_))));
        let half = ClassFunction::trivial(3).scale(&BigRational::new(1.into(), 2.into()));
        assert!(matches!(decompose(&half), Err(Error::NotACharacter(_))));
    }

    #[test]
    fn json_round_trip() {
        let chi = ClassFunction::irreducible(&p(&[2, 1])).tensor(&ClassFunction::trivial(1));
        let s = serde_json::to_string(&chi).unwrap();
        assert_eq!(s, r#"{"degrees":[3,1],"values":[-1,0,2]}"#);
        let back: ClassFunction = serde_json::from_str(&s).unwrap();
        assert_eq!(back, chi);
        let frac: ClassFunction = serde_json::from_str(r#"{"degrees":[2],"values":["1/2",1]}"#).unwrap();
        assert_eq!(frac.values()[0], BigRational::new(1.into(), 2.into()));
        assert!(serde_json::from_str::<ClassFunction>(r#"{"degrees":[2],"values":[1]}"#).is_err());
    }
}
