//! Exact linear algebra over ℚ by fraction-free elimination on integer rows.
//!
//! Rational vectors are cleared of denominators before elimination; the
//! span is unchanged, and for augmented rows both halves scale together so
//! recorded relations stay valid.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Multiplies a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[BigRational]) -> Vec<BigInt> {
    let l = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

pub fn to_rational(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

fn normalize(v: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for x in v.iter() {
        if !x.is_zero() {
            g = g.gcd(x);
            if g.is_one() {
                return;
            }
        }
    }
    if g > BigInt::one() {
        for x in v.iter_mut() {
            *x /= &g;
        }
    }
}

/// Incremental row echelon form. Each row has `width` main columns followed
/// by `aug` augmentation columns; pivots are taken in the main part only.
#[derive(Clone, Debug)]
pub struct Echelon {
    width: usize,
    aug: usize,
    rows: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

/// Outcome of [`Echelon::insert`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Insert {
    Independent,
    /// The main part reduced to zero; the payload is the reduced
    /// augmentation part.
    Dependent(Vec<BigInt>),
}

impl Echelon {
    pub fn new(width: usize) -> Self {
        Self::with_augmentation(width, 0)
    }

    pub fn with_augmentation(width: usize, aug: usize) -> Self {
        Echelon {
            width,
            aug,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` (length `width + aug`) against the stored rows.
    pub fn reduce(&self, mut v: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(v.len(), self.width + self.aug, "row length");
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let a = &row[p];
            let b = v[p].clone();
            let g = a.gcd(&b);
            let (sa, sb) = (a / &g, &b / &g);
            for (x, y) in v.iter_mut().zip(row) {
                if y.is_zero() {
                    *x *= &sa;
                } else {
                    *x = &*x * &sa - &sb * y;
                }
            }
            normalize(&mut v);
        }
        v
    }

    pub fn insert(&mut self, v: Vec<BigInt>) -> Insert {
        let v = self.reduce(v);
        match v[..self.width].iter().position(|x| !x.is_zero()) {
            Some(p) => {
                let mut v = v;
                if v[p].is_negative() {
                    for x in v.iter_mut() {
                        *x = -&*x;
                    }
                }
                self.rows.push(v);
                self.pivots.push(p);
                Insert::Independent
            }
            None => Insert::Dependent(v[self.width..].to_vec()),
        }
    }

    pub fn insert_rational(&mut self, v: &[BigRational]) -> Insert {
        self.insert(clear_denominators(v))
    }

    /// Whether `v` (main part only) lies in the span.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut full = v.to_vec();
        full.resize(self.width + self.aug, BigInt::zero());
        self.reduce(full)[..self.width].iter().all(Zero::is_zero)
    }
}

/// Rank of a list of rational vectors.
pub fn rank(rows: &[Vec<BigRational>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let mut ech = Echelon::new(first.len());
    for r in rows {
        ech.insert_rational(r);
    }
    ech.rank()
}

/// `[v | e_slot]` with the unit marker scaled along with `v`.
fn augmented(v: &[BigRational], aug: usize, slot: usize) -> Vec<BigInt> {
    let mut full = v.to_vec();
    full.resize(v.len() + aug, BigRational::zero());
    full[v.len() + slot] = BigRational::one();
    clear_denominators(&full)
}

/// A basis of `{x : Σ x_s images[s] = 0}`, as integer vectors.
pub fn kernel(images: &[Vec<BigRational>], width: usize) -> Vec<Vec<BigInt>> {
    let m = images.len();
    let mut ech = Echelon::with_augmentation(width, m);
    let mut out = Vec::new();
    for (s, img) in images.iter().enumerate() {
        assert_eq!(img.len(), width, "image length");
        let row = augmented(img, m, s);
        if let Insert::Dependent(rel) = ech.insert(row) {
            out.push(rel);
        }
    }
    out
}

/// Coefficients `x` with `Σ x_t basis[t] = target`, if any.
pub fn solve(basis: &[Vec<BigRational>], target: &[BigRational]) -> Option<Vec<BigRational>> {
    let width = target.len();
    let m = basis.len();
    let mut ech = Echelon::with_augmentation(width, m + 1);
    for (t, b) in basis.iter().enumerate() {
        ech.insert(augmented(b, m + 1, t));
    }
    let row = augmented(target, m + 1, m);
    // s·target + Σ d_t basis_t = 0 with s the last coordinate
    let reduced = ech.reduce(row);
    if reduced[..width].iter().any(|x| !x.is_zero()) {
        return None;
    }
    let s = &reduced[width + m];
    debug_assert!(!s.is_zero());
    Some(
        reduced[width..width + m]
            .iter()
            .map(|d| BigRational::new(-d, s.clone()))
            .collect(),
    )
}

/// Coordinates in a quotient `V / W`, where `V` is spanned by `W` together
/// with the representative vectors `reps`.
#[derive(Clone, Debug)]
pub struct Quotient {
    width: usize,
    reps: usize,
    ech: Echelon,
}

impl Quotient {
    /// `sub` spans `W`; `reps` must be independent modulo `W`.
    pub fn new(width: usize, sub: &[Vec<BigInt>], reps: &[Vec<BigInt>]) -> Option<Self> {
        let m = reps.len();
        let mut ech = Echelon::with_augmentation(width, m + 1);
        for w in sub {
            let mut row = w.clone();
            row.resize(width + m + 1, BigInt::zero());
            ech.insert(row);
        }
        for (t, v) in reps.iter().enumerate() {
            let mut row = v.clone();
            row.resize(width + m + 1, BigInt::zero());
            row[width + t] = BigInt::one();
            if ech.insert(row) != Insert::Independent {
                return None;
            }
        }
        Some(Quotient { width, reps: m, ech })
    }

    pub fn dim(&self) -> usize {
        self.reps
    }

    /// Coordinates of `x + W` on the representatives, or `None` when `x` is
    /// outside `V`.
    pub fn coords(&self, x: &[BigRational]) -> Option<Vec<BigRational>> {
        let row = augmented(x, self.reps + 1, self.reps);
        let reduced = self.ech.reduce(row);
        if reduced[..self.width].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let s = &reduced[self.width + self.reps];
        Some(
            reduced[self.width..self.width + self.reps]
                .iter()
                .map(|d| BigRational::new(-d, s.clone()))
                .collect(),
        )
    }
}

/// Classic one-pass Bareiss elimination, used as an independent rank check.
pub fn bareiss_rank(matrix: &[Vec<BigInt>]) -> usize {
    let mut a: Vec<Vec<BigInt>> = matrix.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let v = (&a[r][c] * &a[i][j] - &a[i][c] * &a[r][j]) / &prev;
                a[i][j] = v;
            }
            a[i][c] = BigInt::zero();
        }
        prev = a[r][c].clone();
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn ints(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&x| x.into()).collect()).collect()
    }

    #[test]
    fn ranks_agree() {
        let m = ints(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1], &[1, 3, 4]]);
        assert_eq!(bareiss_rank(&m), 2);
        let rat: Vec<Vec<BigRational>> = m.iter().map(|r| to_rational(r)).collect();
        assert_eq!(rank(&rat), 2);
        assert_eq!(bareiss_rank(&ints(&[&[0, 0], &[0, 0]])), 0);
    }

    #[test]
    fn kernel_and_solve() {
        let imgs = vec![
            vec![q(1, 2), q(0, 1)],
            vec![q(1, 1), q(0, 1)],
            vec![q(0, 1), q(0, 1)],
        ];
        let k = kernel(&imgs, 2);
        assert_eq!(k.len(), 2);
        for rel in &k {
            for c in 0..2 {
                let s: BigRational = rel
                    .iter()
                    .zip(&imgs)
                    .map(|(x, img)| BigRational::from_integer(x.clone()) * &img[c])
                    .sum();
                assert!(s.is_zero());
            }
        }
        let basis = vec![vec![q(1, 1), q(1, 1)], vec![q(0, 1), q(2, 3)]];
        let x = solve(&basis, &[q(3, 1), q(5, 1)]).unwrap();
        assert_eq!(x, vec![q(3, 1), q(3, 1)]);
        assert!(solve(&basis[..1], &[q(1, 1), q(0, 1)]).is_none());
    }

    #[test]
    fn quotient_coordinates() {
        let sub = ints(&[&[1, 1, 0]]);
        let reps = ints(&[&[1, 0, 0]]);
        let quo = Quotient::new(3, &sub, &reps).unwrap();
        // (3,1,0) = 1·(1,1,0) + 2·(1,0,0)
        assert_eq!(quo.coords(&[q(3, 1), q(1, 1), q(0, 1)]).unwrap(), vec![q(2, 1)]);
        assert!(quo.coords(&[q(0, 1), q(0, 1), q(1, 1)]).is_none());
        assert!(Quotient::new(3, &sub, &ints(&[&[2, 2, 0]])).is_none());
    }
}
