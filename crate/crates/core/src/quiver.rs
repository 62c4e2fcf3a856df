//! The quiver of `ℚSE_n`: arrows go one level down, from `alpha` to `beta`,
//! as many as there are ways to remove a box from `beta` and add two boxes
//! in different columns to get `alpha`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::cartan::cartan_first_superdiagonal;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partitions_up_to, Partition};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverGraph {
    vertices: Vec<Partition>,
    arrows: BTreeMap<(usize, usize), u64>,
}

#[derive(Serialize)]
struct ArrowJson<'a> {
    source: &'a Partition,
    target: &'a Partition,
    multiplicity: u64,
}

impl QuiverGraph {
    /// A graph on `vertices` with arrows `(source, target) -> multiplicity`
    /// given by vertex positions. Zero multiplicities are dropped.
    pub fn new(vertices: Vec<Partition>, arrows: BTreeMap<(usize, usize), u64>) -> Result<Self> {
        if let Some(&(s, t)) = arrows.keys().find(|(s, t)| *s >= vertices.len() || *t >= vertices.len()) {
            return Err(Error::OutOfRange(format!("arrow ({s}, {t}) has no vertex")));
        }
        let arrows = arrows.into_iter().filter(|(_, m)| *m > 0).collect();
        Ok(QuiverGraph { vertices, arrows })
    }

    pub fn vertices(&self) -> &[Partition] {
        &self.vertices
    }

    pub fn position(&self, v: &Partition) -> Option<usize> {
        self.vertices.iter().position(|p| p == v)
    }

    /// Arrows by vertex position.
    pub fn arrows(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.arrows
    }

    pub fn multiplicity(&self, source: &Partition, target: &Partition) -> u64 {
        match (self.position(source), self.position(target)) {
            (Some(s), Some(t)) => self.arrows.get(&(s, t)).copied().unwrap_or(0),
            _ => 0,
        }
    }

    /// Total number of arrows counted with multiplicity.
    pub fn arrow_count(&self) -> u64 {
        self.arrows.values().sum()
    }

    pub fn out_degree(&self, v: &Partition) -> u64 {
        let Some(s) = self.position(v) else { return 0 };
        self.arrows.iter().filter(|((a, _), _)| *a == s).map(|(_, m)| m).sum()
    }

    /// For each vertex, the longest path starting there; errors on a cycle.
    pub fn longest_paths_from(&self) -> Result<Vec<usize>> {
        let n = self.vertices.len();
        let mut indegree = vec![0usize; n];
        let mut succ = vec![Vec::new(); n];
        for &(s, t) in self.arrows.keys() {
            indegree[t] += 1;
            succ[s].push(t);
        }
        let mut queue: VecDeque<usize> = (0..n).filter(|&v| indegree[v] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &t in &succ[v] {
                indegree[t] -= 1;
                if indegree[t] == 0 {
                    queue.push_back(t);
                }
            }
        }
        if order.len() != n {
            return Err(Error::Cycle);
        }
        let mut best = vec![0usize; n];
        for &v in order.iter().rev() {
            best[v] = succ[v].iter().map(|&t| best[t] + 1).max().unwrap_or(0);
        }
        Ok(best)
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph quiver {\n  rankdir=TB;\n");
        let levels: BTreeMap<usize, Vec<&Partition>> =
            self.vertices.iter().fold(BTreeMap::new(), |mut m, v| {
                m.entry(v.size()).or_default().push(v);
                m
            });
        for vs in levels.values().rev() {
            out.push_str("  { rank=same;");
            for v in vs {
                write!(out, " \"{v}\";").unwrap();
            }
            out.push_str(" }\n");
        }
        for (&(s, t), &m) in &self.arrows {
            for _ in 0..m {
                writeln!(out, "  \"{}\" -> \"{}\";", self.vertices[s], self.vertices[t]).unwrap();
            }
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        let arrows: Vec<ArrowJson> = self
            .arrows
            .iter()
            .map(|(&(s, t), &m)| ArrowJson {
                source: &self.vertices[s],
                target: &self.vertices[t],
                multiplicity: m,
            })
            .collect();
        serde_json::json!({ "vertices": self.vertices, "arrows": arrows })
    }
}

pub fn quiver(n: usize) -> QuiverGraph {
    let vertices = partitions_up_to(n);
    let pos = |p: &Partition| vertices.iter().position(|v| v == p).unwrap();
    let mut arrows = BTreeMap::new();
    for k in 0..n {
        for beta in enumerate_partitions(k) {
            for alpha in enumerate_partitions(k + 1) {
                let m = cartan_first_superdiagonal(&beta, &alpha).expect("sizes differ by one");
                if m > 0 {
                    arrows.insert((pos(&alpha), pos(&beta)), m);
                }
            }
        }
    }
    QuiverGraph { vertices, arrows }
}

/// Maximum number of arrows on a directed path.
pub fn longest_path(q: &QuiverGraph) -> Result<usize> {
    Ok(q.longest_paths_from()?.into_iter().max().unwrap_or(0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_quivers() {
        let q = quiver(2);
        assert_eq!(q.vertices().len(), 4);
        assert_eq!(q.arrow_count(), 1);
        assert_eq!(q.multiplicity(&p(&[2]), &p(&[1])), 1);
        assert_eq!(longest_path(&quiver(1)).unwrap(), 0);
        assert_eq!(longest_path(&quiver(4)).unwrap(), 3);
    }

    #[test]
    fn cycle_is_rejected() {
        let mut arrows = BTreeMap::new();
        arrows.insert((0, 1), 1);
        arrows.insert((1, 0), 1);
        let q = QuiverGraph::new(vec![p(&[1]), p(&[2])], arrows).unwrap();
        assert!(matches!(longest_path(&q), Err(Error::Cycle)));
    }

    #[test]
    fn dot_repeats_multi_edges() {
        let dot = quiver(4).to_dot();
        assert_eq!(dot.matches("\"[3,1]\" -> \"[2,1]\";").count(), 2);
        assert_eq!(dot.matches(" -> ").count(), 15);
    }
}
