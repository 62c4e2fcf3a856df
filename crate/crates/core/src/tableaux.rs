//! Skew tableaux, lattice words and the Littlewood-Richardson rule.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::partitions::{add_boxes_no_two_same_column, enumerate_partitions, Partition, SkewShape};

/// Map from partition to a positive multiplicity; zero entries are omitted.
pub type Multiset = BTreeMap<Partition, u64>;

/// A word in the positive integers.
pub type Word = Vec<usize>;

/// A filling of a skew shape, stored row by row (left to right within a row).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<usize>>,
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() > shape.rows() {
            return Err(Error::SizeMismatch(format!(
                "{} rows given for a shape with {} rows",
                rows.len(),
                shape.rows()
            )));
        }
        for r in 0..shape.rows() {
            let expected = shape.row_range(r).len();
            let got = rows.get(r).map_or(0, Vec::len);
            if expected != got {
                return Err(Error::SizeMismatch(format!(
                    "row {r} needs {expected} entries, got {got}"
                )));
            }
        }
        if rows.iter().flatten().any(|&x| x == 0) {
            return Err(Error::OutOfRange("tableau entries must be positive".into()));
        }
        let mut rows = rows;
        rows.resize(shape.rows(), Vec::new());
        Ok(SkewTableau { shape, rows })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    fn entry(&self, r: usize, c: usize) -> Option<usize> {
        let range = self.shape.row_range(r);
        range.contains(&c).then(|| self.rows[r][c - range.start])
    }

    /// Rows weakly increase, columns strictly increase.
    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.shape.rows()).all(|r| {
            self.shape
                .row_range(r)
                .all(|c| self.entry(r - 1, c).is_none_or(|above| above < self.entry(r, c).unwrap()))
        });
        rows_ok && cols_ok
    }

    /// Entries read right to left, top row first.
    pub fn row_word(&self) -> Word {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// `content[i]` = number of entries equal to `i + 1`.
    pub fn content(&self) -> Vec<usize> {
        let max = self.rows.iter().flatten().copied().max().unwrap_or(0);
        let mut content = vec![0; max];
        for &x in self.rows.iter().flatten() {
            content[x - 1] += 1;
        }
        content
    }
}

/// Whether every prefix of `word` has at least as many `i` as `i + 1`.
pub fn is_lattice(word: &[usize]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        if counts.len() < x {
            counts.resize(x, 0);
        }
        counts[x - 1] += 1;
        if x > 1 && counts[x - 1] > counts[x - 2] {
            return false;
        }
    }
    true
}

fn lr_cache() -> &'static Mutex<HashMap<(Partition, Partition, Partition), u64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition, Partition), u64>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `c^gamma_{lambda, delta}`: the number of semistandard fillings of
/// `gamma / lambda` with content `delta` whose row word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, delta: &Partition, gamma: &Partition) -> Result<u64> {
    if lambda.size() + delta.size() != gamma.size() {
        return Err(Error::SizeMismatch(format!(
            "|{lambda}| + |{delta}| != |{gamma}|"
        )));
    }
    if !lambda.is_contained_in(gamma) || !delta.is_contained_in(gamma) {
        return Ok(0);
    }
    let key = (lambda.clone(), delta.clone(), gamma.clone());
    if let Some(&c) = lr_cache().lock().unwrap().get(&key) {
        return Ok(c);
    }
    let shape = SkewShape::new(gamma.clone(), lambda.clone())?;
    let count = count_lr_fillings(&shape, delta.parts());
    lr_cache().lock().unwrap().insert(key, count);
    Ok(count)
}

/// Fills cells in row-word order, pruning on semistandardness, content and
/// the lattice condition of the prefix read so far.
fn count_lr_fillings(shape: &SkewShape, content: &[usize]) -> u64 {
    let cells: Vec<(usize, usize)> = (0..shape.rows())
        .flat_map(|r| shape.row_range(r).rev().map(move |c| (r, c)))
        .collect();
    let width = shape.outer().part(0);
    let mut grid = vec![vec![0usize; width]; shape.rows()];
    let mut counts = vec![0usize; content.len()];

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        shape: &SkewShape,
        content: &[usize],
        grid: &mut [Vec<usize>],
        counts: &mut [usize],
    ) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        // Right neighbour is already filled (right-to-left reading).
        let max = if shape.contains(r, c + 1) {
            grid[r][c + 1]
        } else {
            content.len()
        };
        let min = if r > 0 && shape.contains(r - 1, c) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        let mut total = 0;
        for v in min..=max {
            let i = v - 1;
            if counts[i] >= content[i] || (i > 0 && counts[i] + 1 > counts[i - 1]) {
                continue;
            }
            counts[i] += 1;
            grid[r][c] = v;
            total += go(idx + 1, cells, shape, content, grid, counts);
            counts[i] -= 1;
        }
        grid[r][c] = 0;
        total
    }

    go(0, &cells, shape, content, &mut grid, &mut counts)
}

/// `Ind(S^lambda ⊗ S^delta)` as a multiset `gamma -> c^gamma_{lambda,delta}`.
pub fn lr_expand(lambda: &Partition, delta: &Partition) -> Multiset {
    let n = lambda.size() + delta.size();
    enumerate_partitions(n)
        .into_iter()
        .filter_map(|gamma| {
            let c = lr_coefficient(lambda, delta, &gamma).expect("sizes agree by construction");
            (c > 0).then_some((gamma, c))
        })
        .collect()
}

/// Pieri's rule: `Ind(S^lambda ⊗ tr_r)` is multiplicity free with support `Y^r(lambda)`.
pub fn pieri_expand(lambda: &Partition, r: usize) -> Multiset {
    add_boxes_no_two_same_column(lambda, r)
        .into_iter()
        .map(|g| (g, 1))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn worked_tableau() -> SkewTableau {
        let shape = SkewShape::new(p(&[4, 3, 1]), p(&[2, 1])).unwrap();
        SkewTableau::new(shape, vec![vec![1, 1], vec![2, 3], vec![2]]).unwrap()
    }

    #[test]
    fn worked_tableau_row_word_is_not_lattice() {
        let t = worked_tableau();
        assert!(t.is_semistandard());
        assert_eq!(t.row_word(), vec![1, 1, 3, 2, 2]);
        assert_eq!(t.content(), vec![2, 2, 1]);
        // the prefix 1,1,3 has a 3 but no 2
        assert!(!is_lattice(&t.row_word()));
        assert!(!is_lattice(&[1, 1, 3]));
    }

    #[test]
    fn row_word_edge_cases() {
        let empty = SkewTableau::new(SkewShape::new(p(&[2]), p(&[2])).unwrap(), vec![vec![]]).unwrap();
        assert!(empty.row_word().is_empty());
        let single = SkewTableau::new(SkewShape::new(p(&[1]), Partition::empty()).unwrap(), vec![vec![5]]).unwrap();
        assert_eq!(single.row_word(), vec![5]);
    }

    #[test]
    fn lattice_words() {
        assert!(is_lattice(&[]));
        assert!(is_lattice(&[1, 1, 2, 2]));
        assert!(is_lattice(&[1, 2, 1, 2]));
        assert!(!is_lattice(&[2, 1, 1, 2]));
    }

    #[test]
    fn lr_basics() {
        assert!(lr_coefficient(&p(&[1]), &p(&[1]), &p(&[3])).is_err());
        assert_eq!(lr_coefficient(&p(&[2, 1]), &Partition::empty(), &p(&[2, 1])).unwrap(), 1);
        assert_eq!(lr_coefficient(&p(&[3]), &p(&[1]), &p(&[2, 2])).unwrap(), 0);
        let e = lr_expand(&p(&[1]), &p(&[1]));
        assert_eq!(e, Multiset::from([(p(&[2]), 1), (p(&[1, 1]), 1)]));
        // classic c^{[3,2,1]}_{[2,1],[2,1]} = 2
        assert_eq!(lr_coefficient(&p(&[2, 1]), &p(&[2, 1]), &p(&[3, 2, 1])).unwrap(), 2);
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(pieri_expand(&Partition::empty(), 3), Multiset::from([(p(&[3]), 1)]));
        assert_eq!(
            pieri_expand(&p(&[1]), 3),
            Multiset::from([(p(&[4]), 1), (p(&[3, 1]), 1)])
        );
        assert_eq!(
            pieri_expand(&p(&[2, 2]), 2),
            Multiset::from([(p(&[4, 2]), 1), (p(&[3, 2, 1]), 1), (p(&[2, 2, 2]), 1)])
        );
    }

    #[test]
    fn tableau_shape_validation() {
        let shape = SkewShape::new(p(&[2, 1]), p(&[1])).unwrap();
        assert!(SkewTableau::new(shape.clone(), vec![vec![1, 2]]).is_err());
        assert!(SkewTableau::new(shape, vec![vec![1], vec![0]]).is_err());
    }
}
