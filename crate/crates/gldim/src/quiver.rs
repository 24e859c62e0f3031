//! Finite quivers (directed multigraphs) and their paths.
//!
//! Paths are stored in *application order*: `arrows[0]` is applied first. The
//! displayed word follows the categorical convention in which a product `fg`
//! applies `g` first, so the word of a path is its label sequence reversed —
//! the path "x then y" prints as `yx`.

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuiverError {
    #[error("duplicate vertex name {0:?}")]
    DuplicateVertex(String),
    #[error("duplicate arrow label {0:?}")]
    DuplicateArrow(String),
    #[error("arrow {label:?} references unknown vertex {vertex:?}")]
    UnknownEndpoint { label: String, vertex: String },
    #[error("path enumeration exceeded the budget of {limit} paths; the quiver has too many paths up to length {max_len}")]
    PathBudget { limit: usize, max_len: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
}

impl Quiver {
    /// Builds a quiver from vertex names and `(label, source, target)`
    /// triples referring to vertices by name.
    pub fn new(
        vertices: Vec<String>,
        arrows: Vec<(String, String, String)>,
    ) -> Result<Self, QuiverError> {
        let mut seen = BTreeSet::new();
        for v in &vertices {
            if !seen.insert(v.clone()) {
                return Err(QuiverError::DuplicateVertex(v.clone()));
            }
        }
        let index = |name: &str, label: &str| {
            vertices
                .iter()
                .position(|v| v == name)
                .ok_or_else(|| QuiverError::UnknownEndpoint {
                    label: label.into(),
                    vertex: name.into(),
                })
        };
        let mut labels = BTreeSet::new();
        let mut built = Vec::with_capacity(arrows.len());
        for (label, src, tgt) in arrows {
            if !labels.insert(label.clone()) {
                return Err(QuiverError::DuplicateArrow(label));
            }
            let source = index(&src, &label)?;
            let target = index(&tgt, &label)?;
            built.push(Arrow { label, source, target });
        }
        Ok(Quiver { vertices, arrows: built })
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    pub fn is_acyclic(&self) -> bool {
        self.find_cycle().is_none()
    }

    /// A list of vertices forming a directed cycle, if one exists.
    pub fn find_cycle(&self) -> Option<Vec<usize>> {
        // Iterative DFS with colors: 0 unvisited, 1 on stack, 2 done.
        let n = self.vertices.len();
        let mut color = vec![0u8; n];
        let mut parent = vec![usize::MAX; n];
        for start in 0..n {
            if color[start] != 0 {
                continue;
            }
            let mut stack = vec![(start, 0usize)];
            color[start] = 1;
            while let Some(&mut (v, ref mut next)) = stack.last_mut() {
                let succ: Vec<usize> = self
                    .arrows
                    .iter()
                    .filter(|a| a.source == v)
                    .map(|a| a.target)
                    .collect();
                if *next < succ.len() {
                    let w = succ[*next];
                    *next += 1;
                    match color[w] {
                        0 => {
                            color[w] = 1;
                            parent[w] = v;
                            stack.push((w, 0));
                        }
                        1 => {
                            // Found a cycle: walk back from v to w.
                            let mut cycle = vec![w];
                            let mut cur = v;
                            while cur != w {
                                cycle.push(cur);
                                cur = parent[cur];
                            }
                            cycle.push(w);
                            cycle.reverse();
                            return Some(cycle);
                        }
                        _ => {}
                    }
                } else {
                    color[v] = 2;
                    stack.pop();
                }
            }
        }
        None
    }

    /// All paths of length at most `max_len`, sorted by length, then by word
    /// (label sequence in display order) lexicographically; trivial paths come
    /// first in vertex order. Fails if more than `budget` paths exist.
    pub fn paths_up_to(&self, max_len: usize, budget: usize) -> Result<Vec<Path>, QuiverError> {
        let mut by_len: Vec<Vec<Path>> = Vec::with_capacity(max_len + 1);
        by_len.push(
            (0..self.vertices.len())
                .map(|v| Path { arrows: Vec::new(), src: v, tgt: v })
                .collect(),
        );
        let mut total = self.vertices.len();
        for len in 1..=max_len {
            let mut next = Vec::new();
            for p in &by_len[len - 1] {
                for (i, a) in self.arrows.iter().enumerate() {
                    if a.source == p.tgt {
                        let mut arrows = p.arrows.clone();
                        arrows.push(i);
                        next.push(Path { arrows, src: p.src, tgt: a.target });
                    }
                }
            }
            total += next.len();
            if total > budget {
                return Err(QuiverError::PathBudget { limit: budget, max_len });
            }
            next.sort_by(|a, b| self.word_key(a).cmp(&self.word_key(b)));
            by_len.push(next);
        }
        Ok(by_len.into_iter().flatten().collect())
    }

    fn word_key<'a>(&'a self, p: &Path) -> Vec<&'a str> {
        p.arrows.iter().rev().map(|&i| self.arrows[i].label.as_str()).collect()
    }

    /// The display word of a path: labels in composition order (last applied
    /// first). Multi-character labels are joined with `*` for readability.
    pub fn word(&self, p: &Path) -> String {
        if p.arrows.is_empty() {
            return self.vertices[p.src].clone();
        }
        let labels: Vec<&str> =
            p.arrows.iter().rev().map(|&i| self.arrows[i].label.as_str()).collect();
        if labels.iter().all(|l| l.chars().count() == 1) {
            labels.concat()
        } else {
            labels.join("*")
        }
    }
}

/// A path in a quiver; `arrows` lists arrow indices in application order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub arrows: Vec<usize>,
    pub src: usize,
    pub tgt: usize,
}

impl Path {
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.arrows.is_empty()
    }

    /// `self` composed after `first` (i.e. `first` is applied first); `None`
    /// if the endpoints do not match.
    pub fn after(&self, first: &Path) -> Option<Path> {
        if first.tgt != self.src {
            return None;
        }
        let mut arrows = first.arrows.clone();
        arrows.extend(self.arrows.iter().copied());
        Some(Path { arrows, src: first.src, tgt: self.tgt })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle() -> Quiver {
        Quiver::new(
            vec!["e".into(), "f".into()],
            vec![
                ("x".into(), "e".into(), "f".into()),
                ("y".into(), "f".into(), "e".into()),
            ],
        )
        .unwrap()
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            Quiver::new(vec!["e".into(), "e".into()], vec![]),
            Err(QuiverError::DuplicateVertex(_))
        ));
        assert!(matches!(
            Quiver::new(
                vec!["e".into()],
                vec![("x".into(), "e".into(), "f".into())]
            ),
            Err(QuiverError::UnknownEndpoint { .. })
        ));
    }

    #[test]
    fn cycle_detection() {
        let q = two_cycle();
        assert!(!q.is_acyclic());
        let cycle = q.find_cycle().unwrap();
        assert!(cycle.len() >= 3);
        assert_eq!(cycle.first(), cycle.last());

        let a2 = Quiver::new(
            vec!["e".into(), "f".into()],
            vec![("a".into(), "e".into(), "f".into())],
        )
        .unwrap();
        assert!(a2.is_acyclic());
    }

    #[test]
    fn path_enumeration_order_and_words() {
        let q = two_cycle();
        let paths = q.paths_up_to(2, 1000).unwrap();
        let words: Vec<String> = paths.iter().map(|p| q.word(p)).collect();
        assert_eq!(words, vec!["e", "f", "x", "y", "xy", "yx"]);
        // xy starts at f (applies y first), yx starts at e.
        let xy = &paths[4];
        assert_eq!((xy.src, xy.tgt), (1, 1));
        let yx = &paths[5];
        assert_eq!((yx.src, yx.tgt), (0, 0));
    }

    #[test]
    fn path_budget_enforced() {
        let q = two_cycle();
        assert!(matches!(
            q.paths_up_to(20, 10),
            Err(QuiverError::PathBudget { .. })
        ));
    }

    #[test]
    fn composition_order() {
        let q = two_cycle();
        let paths = q.paths_up_to(1, 100).unwrap();
        let x = paths[2].clone();
        let y = paths[3].clone();
        let yx = y.after(&x).unwrap();
        assert_eq!(q.word(&yx), "yx");
        assert!(x.after(&x).is_none());
    }
}
