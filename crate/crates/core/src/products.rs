//! Tensor and Cartesian products, named graphs, and the search for
//! bipartite double cover roots `g ≅ K2 ⊗ H`.

use std::collections::BTreeSet;

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;

/// Row-major pairing of product vertices: `(g, h) <-> g * |V(H)| + h`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProductVertexMap {
    pub left_order: usize,
    pub right_order: usize,
}

impl ProductVertexMap {
    pub fn new(left_order: usize, right_order: usize) -> Self {
        Self {
            left_order,
            right_order,
        }
    }

    pub fn order(&self) -> usize {
        self.left_order * self.right_order
    }

    #[inline]
    pub fn index(&self, g: usize, h: usize) -> usize {
        debug_assert!(g < self.left_order && h < self.right_order);
        g * self.right_order + h
    }

    #[inline]
    pub fn pair(&self, v: usize) -> (usize, usize) {
        (v / self.right_order, v % self.right_order)
    }
}

/// `(a, b) ~ (c, d)` iff `a ~ c` in `g` and `b ~ d` in `h`.
pub fn tensor(g: &Graph, h: &Graph) -> Graph {
    let map = ProductVertexMap::new(g.order(), h.order());
    Graph::from_fn(map.order(), |u, v| {
        let (a, b) = map.pair(u);
        let (c, d) = map.pair(v);
        g.has_edge(a, c) && h.has_edge(b, d)
    })
}

/// `(a, b) ~ (c, d)` iff the pairs agree in one coordinate and are adjacent
/// in the other. Looped factors are rejected.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.has_loops() || h.has_loops() {
        return Err(Error::Precondition(
            "Cartesian product of looped graphs is not supported".into(),
        ));
    }
    let map = ProductVertexMap::new(g.order(), h.order());
    Ok(Graph::from_fn(map.order(), |u, v| {
        let (a, b) = map.pair(u);
        let (c, d) = map.pair(v);
        (a == c && h.has_edge(b, d)) || (b == d && g.has_edge(a, c))
    }))
}

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| u != v)
}

/// `K*_n`: all-ones adjacency matrix.
pub fn kn_star(n: usize) -> Graph {
    Graph::from_fn(n, |_, _| true)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Graph {
    Graph::from_fn(a + b, |u, v| (u < a) != (v < a))
}

/// The cycle `C_n{1}`.
pub fn cycle(n: usize) -> Graph {
    CirculantSpec::new(n, [1])
        .expect("1 <= n/2 for n >= 2")
        .build()
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1)
}

/// Path on `n` vertices with a loop at each end vertex only.
pub fn looped_path(n: usize) -> Graph {
    Graph::from_fn(n, |u, v| v == u + 1 || (u == v && (u == 0 || u + 1 == n)))
}

/// Default cap on the part size searched by [`find_tensor_root_over_k2`].
pub const DEFAULT_ROOT_PART_BOUND: usize = 8;

/// [`find_tensor_root_over_k2_with_bound`] with the default part bound.
pub fn find_tensor_root_over_k2(g: &Graph) -> Result<Option<Graph>> {
    find_tensor_root_over_k2_with_bound(g, DEFAULT_ROOT_PART_BOUND)
}

/// Finds a graph `H` (loops allowed) with `K2 ⊗ H ≅ g`.
///
/// Among all solutions the result is the labeled `H` whose adjacency bits,
/// read column by column over the upper triangle (`(0,0), (0,1), (1,1),
/// (0,2), ...`), are lexicographically greatest. This is the first hit
/// when candidates are enumerated in descending order, and it favors
/// loops, so a looped path wins over an odd cycle when both are roots.
///
/// Every solution corresponds to a bijection `φ` from one side of a
/// 2-coloring to the other with `A[a][φ(b)]` symmetric; all such bijections
/// are enumerated, over every choice of side per connected component.
pub fn find_tensor_root_over_k2_with_bound(g: &Graph, part_bound: usize) -> Result<Option<Graph>> {
    let bip = g
        .bipartition()
        .ok_or_else(|| Error::Precondition("graph is not bipartite".into()))?;
    let m = bip.part_a.len();
    if m != bip.part_b.len() {
        return Err(Error::Precondition(format!(
            "parts have unequal sizes {} and {}",
            m,
            bip.part_b.len()
        )));
    }
    if m > part_bound {
        return Err(Error::OrderTooLarge {
            order: m,
            bound: part_bound,
        });
    }

    let report = g.connected_components();
    let in_a: Vec<bool> = {
        let mut v = vec![false; g.order()];
        for &a in &bip.part_a {
            v[a] = true;
        }
        v
    };
    let comps = report.count();
    let mut matrices: BTreeSet<Vec<bool>> = BTreeSet::new();
    let flips = if comps == 0 {
        1u64
    } else {
        1u64 << (comps - 1)
    };
    for flip in 0..flips {
        let side = |v: usize| {
            let c = report.assignment[v];
            let flipped = c > 0 && flip >> (c - 1) & 1 == 1;
            in_a[v] != flipped
        };
        let a: Vec<usize> = (0..g.order()).filter(|&v| side(v)).collect();
        let b: Vec<usize> = (0..g.order()).filter(|&v| !side(v)).collect();
        if a.len() != m {
            continue;
        }
        let mut phi = vec![usize::MAX; m];
        let mut used = vec![false; m];
        collect_roots(g, &a, &b, 0, &mut phi, &mut used, &mut matrices);
    }

    let best = matrices.iter().map(|mat| canonical_key(m, mat)).max();
    let Some(key) = best else {
        return Ok(None);
    };
    let root = graph_from_key(m, &key);
    debug_assert!(are_isomorphic(&tensor(&complete(2), &root), g).is_some());
    Ok(Some(root))
}

/// Enumerates bijections `phi: a-index -> b-index` with
/// `adj(a_i, b_phi(j)) == adj(a_j, b_phi(i))`, recording each matrix
/// `M[i][j] = adj(a_i, b_phi(j))` row-major.
fn collect_roots(
    g: &Graph,
    a: &[usize],
    b: &[usize],
    depth: usize,
    phi: &mut [usize],
    used: &mut [bool],
    out: &mut BTreeSet<Vec<bool>>,
) {
    let m = a.len();
    if depth == m {
        let mat = (0..m)
            .flat_map(|i| (0..m).map(move |j| (i, j)))
            .map(|(i, j)| g.has_edge(a[i], b[phi[j]]))
            .collect();
        out.insert(mat);
        return;
    }
    for c in 0..m {
        // deg(a_i) and deg(b_phi(i)) both equal the degree of i in H
        if used[c] || g.degree(a[depth]) != g.degree(b[c]) {
            continue;
        }
        let ok = (0..depth).all(|i| g.has_edge(a[i], b[c]) == g.has_edge(a[depth], b[phi[i]]));
        if !ok {
            continue;
        }
        phi[depth] = c;
        used[c] = true;
        collect_roots(g, a, b, depth + 1, phi, used, out);
        used[c] = false;
    }
}

/// Lexicographically greatest relabeling of a symmetric `m x m` matrix,
/// read column-wise over the upper triangle.
fn canonical_key(m: usize, mat: &[bool]) -> Vec<bool> {
    struct Search<'a> {
        m: usize,
        mat: &'a [bool],
        best: Vec<bool>,
        label: Vec<usize>,
        used: Vec<bool>,
        prefix: Vec<bool>,
    }
    impl Search<'_> {
        fn run(&mut self, k: usize) {
            if k == self.m {
                if self.prefix > self.best {
                    self.best = self.prefix.clone();
                }
                return;
            }
            for x in 0..self.m {
                if self.used[x] {
                    continue;
                }
                let start = self.prefix.len();
                self.label.push(x);
                for i in 0..=k {
                    let y = self.label[i];
                    self.prefix.push(self.mat[y * self.m + x]);
                }
                let behind =
                    !self.best.is_empty() && self.prefix[..] < self.best[..self.prefix.len()];
                if !behind {
                    self.used[x] = true;
                    self.run(k + 1);
                    self.used[x] = false;
                }
                self.prefix.truncate(start);
                self.label.pop();
            }
        }
    }
    let mut s = Search {
        m,
        mat,
        best: Vec::new(),
        label: Vec::with_capacity(m),
        used: vec![false; m],
        prefix: Vec::with_capacity(m * (m + 1) / 2),
    };
    s.run(0);
    s.best
}

fn graph_from_key(m: usize, key: &[bool]) -> Graph {
    // column k occupies positions k(k+1)/2 .. k(k+1)/2 + k
    Graph::from_fn(m, |i, j| key[j * (j + 1) / 2 + i])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_vertex_map_is_row_major() {
        let map = ProductVertexMap::new(3, 4);
        assert_eq!(map.index(2, 1), 9);
        assert_eq!(map.pair(9), (2, 1));
        for v in 0..12 {
            let (g, h) = map.pair(v);
            assert_eq!(map.index(g, h), v);
        }
    }

    #[test]
    fn k2_tensor_k2_is_a_matching() {
        let g = tensor(&complete(2), &complete(2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn tensor_loops_need_loops_in_both_factors() {
        let g = Graph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        let p = tensor(&g, &g);
        assert_eq!(p.loop_count(), 1);
        assert!(p.has_loop(0));
    }

    #[test]
    fn tensor_degree_is_multiplicative() {
        let p = tensor(&kn_star(3), &complete(4));
        assert_eq!(p.regular_degree(), Some(9));
    }

    #[test]
    fn cartesian_rejects_loops() {
        assert!(cartesian(&kn_star(2), &complete(2)).is_err());
        let sq = cartesian(&complete(2), &complete(2)).unwrap();
        assert!(are_isomorphic(&sq, &cycle(4)).is_some());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(kn_star(1).edges().collect::<Vec<_>>(), vec![(0, 0)]);
        assert_eq!(complete_bipartite(1, 3).edge_count(), 3);
        let lp = looped_path(4);
        assert_eq!(
            lp.edges().collect::<Vec<_>>(),
            vec![(0, 0), (0, 1), (1, 2), (2, 3), (3, 3)]
        );
        assert_eq!(path(3).edge_count(), 2);
    }

    #[test]
    fn root_search_rejects_bad_inputs() {
        assert!(find_tensor_root_over_k2(&complete_bipartite(1, 3)).is_err());
        assert!(find_tensor_root_over_k2(&complete(3)).is_err());
        assert!(matches!(
            find_tensor_root_over_k2_with_bound(&cycle(10), 4),
            Err(Error::OrderTooLarge { order: 5, bound: 4 })
        ));
    }

    #[test]
    fn root_of_k33_is_looped_triangle() {
        let g = CirculantSpec::new(6, [1, 3]).unwrap().build();
        let h = find_tensor_root_over_k2(&g).unwrap().unwrap();
        assert_eq!(h, kn_star(3));
    }

    #[test]
    fn root_of_q3_is_k4() {
        let q3 = tensor(&complete(2), &complete(4));
        let h = find_tensor_root_over_k2(&q3).unwrap().unwrap();
        assert!(are_isomorphic(&tensor(&complete(2), &h), &q3).is_some());
    }

    #[test]
    fn canonical_key_is_relabeling_invariant() {
        let p = looped_path(4);
        let mat = |g: &Graph| -> Vec<bool> {
            (0..4)
                .flat_map(|i| (0..4).map(move |j| (i, j)))
                .map(|(i, j)| g.has_edge(i, j))
                .collect()
        };
        let shuffled = p
            .relabel(&crate::perm::Permutation::new(vec![2, 0, 3, 1]).unwrap())
            .unwrap();
        assert_eq!(
            canonical_key(4, &mat(&p)),
            canonical_key(4, &mat(&shuffled))
        );
    }
}
