//! Undirected graphs on dense vertex labels `0..n`, loops permitted.
//!
//! Adjacency is stored as one bit row per vertex. The text format is
//!
//! ```text
//! n m
//! u v      (m lines, u <= v, a loop is written `u u`)
//! ```

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::perm::Permutation;

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    order: usize,
    words: usize,
    bits: Vec<u64>,
}

impl Graph {
    /// The edgeless graph on `order` vertices.
    pub fn empty(order: usize) -> Self {
        let words = order.div_ceil(WORD).max(1);
        Self {
            order,
            words,
            bits: vec![0; words * order],
        }
    }

    /// Builds a graph from an edge list, rejecting out-of-range labels and
    /// repeated edges (`{u, v}` and `{v, u}` count as the same edge).
    pub fn from_edges<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(order);
        for (u, v) in edges {
            for x in [u, v] {
                if x >= order {
                    return Err(Error::VertexOutOfRange { vertex: x, order });
                }
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.set(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from a symmetric predicate, evaluated on `u <= v`.
    pub fn from_fn(order: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut g = Self::empty(order);
        for u in 0..order {
            for v in u..order {
                if adjacent(u, v) {
                    g.set(u, v);
                }
            }
        }
        g
    }

    fn set(&mut self, u: usize, v: usize) {
        self.bits[u * self.words + v / WORD] |= 1 << (v % WORD);
        self.bits[v * self.words + u / WORD] |= 1 << (u % WORD);
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / WORD] >> (v % WORD) & 1 == 1
    }

    #[inline]
    pub fn has_loop(&self, v: usize) -> bool {
        self.has_edge(v, v)
    }

    pub fn loop_count(&self) -> usize {
        (0..self.order).filter(|&v| self.has_loop(v)).count()
    }

    pub fn has_loops(&self) -> bool {
        self.loop_count() > 0
    }

    fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    /// Neighbors of `v` in ascending order; `v` itself appears when looped.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut word = word;
            std::iter::from_fn(move || {
                if word == 0 {
                    return None;
                }
                let bit = word.trailing_zeros() as usize;
                word &= word - 1;
                Some(w * WORD + bit)
            })
        })
    }

    /// Size of the neighbor set; a loop contributes one.
    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Number of edges, loops included.
    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.order).map(|v| self.degree(v)).sum();
        (total + self.loop_count()) / 2
    }

    /// Edges `(u, v)` with `u <= v`, sorted lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| {
            self.neighbors(u)
                .filter(move |&v| v >= u)
                .map(move |v| (u, v))
        })
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut seq: Vec<usize> = (0..self.order).map(|v| self.degree(v)).collect();
        seq.sort_unstable();
        seq
    }

    /// Returns `d` when every vertex has exactly `d` neighbors.
    pub fn regular_degree(&self) -> Option<usize> {
        let d = if self.order == 0 { 0 } else { self.degree(0) };
        (0..self.order).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Adjacency-matrix complement `J - A`: distinct pairs are toggled and
    /// so is the loop at every vertex.
    pub fn complement(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| !self.has_edge(u, v))
    }

    pub fn without_loops(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| u != v && self.has_edge(u, v))
    }

    pub fn with_all_loops(&self) -> Graph {
        Graph::from_fn(self.order, |u, v| u == v || self.has_edge(u, v))
    }

    /// Image of the graph under `p`: `{p(u), p(v)}` is an edge iff `{u, v}` is.
    pub fn relabel(&self, p: &Permutation) -> Result<Graph> {
        if p.degree() != self.order {
            return Err(Error::DegreeMismatch {
                expected: self.order,
                actual: p.degree(),
            });
        }
        let inv = p.inverse();
        Ok(Graph::from_fn(self.order, |u, v| {
            self.has_edge(inv.apply(u), inv.apply(v))
        }))
    }

    /// Subgraph induced on `vertices`; vertex `k` of the result is
    /// `vertices[k]`.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Graph {
        Graph::from_fn(vertices.len(), |a, b| {
            self.has_edge(vertices[a], vertices[b])
        })
    }

    /// Disjoint union with `other`, whose vertices are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.order;
        Graph::from_fn(n + other.order, |u, v| match (u < n, v < n) {
            (true, true) => self.has_edge(u, v),
            (false, false) => other.has_edge(u - n, v - n),
            _ => false,
        })
    }

    /// A proper 2-coloring if one exists. In every component the
    /// smallest-labeled vertex goes to `part_a`. Loops make a graph
    /// non-bipartite.
    pub fn bipartition(&self) -> Option<Bipartition> {
        if self.has_loops() {
            return None;
        }
        let mut color: Vec<Option<bool>> = vec![None; self.order];
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.neighbors(u) {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (a, b): (Vec<usize>, Vec<usize>) =
            (0..self.order).partition(|&v| color[v] == Some(false));
        Some(Bipartition {
            part_a: a,
            part_b: b,
        })
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    pub fn connected_components(&self) -> ComponentReport {
        let mut assignment = vec![usize::MAX; self.order];
        let mut members: Vec<Vec<usize>> = Vec::new();
        let mut queue = VecDeque::new();
        for start in 0..self.order {
            if assignment[start] != usize::MAX {
                continue;
            }
            let idx = members.len();
            let mut comp = Vec::new();
            assignment[start] = idx;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                comp.push(u);
                for w in self.neighbors(u) {
                    if assignment[w] == usize::MAX {
                        assignment[w] = idx;
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            members.push(comp);
        }
        let components = members
            .into_iter()
            .map(|vertices| Component {
                graph: self.induced_subgraph(&vertices),
                vertices,
            })
            .collect();
        ComponentReport {
            assignment,
            components,
        }
    }

    pub fn is_connected(&self) -> bool {
        self.order <= 1 || self.connected_components().count() == 1
    }

    /// Serializes to the line-oriented text format.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.order, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("order", &self.order)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let parse_err = |line: usize, message: String| Error::Parse { line, message };
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());
        let pair = |line: usize, l: &str| -> Result<(usize, usize)> {
            let mut it = l.split_whitespace();
            let mut next = || {
                it.next()
                    .ok_or_else(|| parse_err(line, "expected two integers".into()))?
                    .parse::<usize>()
                    .map_err(|e| parse_err(line, e.to_string()))
            };
            let a = next()?;
            let b = next()?;
            if it.next().is_some() {
                return Err(parse_err(line, "trailing tokens".into()));
            }
            Ok((a, b))
        };
        let (line, header) = lines
            .next()
            .ok_or_else(|| parse_err(1, "missing header".into()))?;
        let (order, m) = pair(line, header)?;
        let mut edges = Vec::with_capacity(m);
        for (line, l) in lines {
            let (u, v) = pair(line, l)?;
            if u > v {
                return Err(parse_err(
                    line,
                    format!("edge {u} {v} not written with u <= v"),
                ));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(parse_err(
                line,
                format!("header declares {m} edges, found {}", edges.len()),
            ));
        }
        Graph::from_edges(order, edges)
    }
}

/// A proper 2-coloring of a loop-free graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bipartition {
    pub part_a: Vec<usize>,
    pub part_b: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// `vertices[k]` is the original label of vertex `k` of `graph`.
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

/// Connected components, indexed in order of their smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentReport {
    pub assignment: Vec<usize>,
    pub components: Vec<Component>,
}

impl ComponentReport {
    pub fn count(&self) -> usize {
        self.components.len()
    }
}
