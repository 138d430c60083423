//! Brute-force oracles shared by the integration tests. None of them call
//! into the search code they are used to check.

#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tensorcirc::{Graph, Permutation};

pub fn spec(s: &str) -> tensorcirc::CirculantSpec {
    s.parse().expect("valid literal")
}

/// Some bijection maps every edge of `g` onto an edge of `h`; with equal
/// edge counts that is an isomorphism.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    g.order() == h.order()
        && edges.len() == h.edge_count()
        && Permutation::all(g.order()).any(|p| {
            edges
                .iter()
                .all(|&(u, v)| h.has_edge(p.apply(u), p.apply(v)))
        })
}

fn preserves(g: &Graph, p: &Permutation) -> bool {
    g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v)))
}

/// True iff some `n`-cycle on the vertices is an automorphism.
pub fn brute_circulant(g: &Graph) -> bool {
    Permutation::all(g.order()).any(|p| p.is_full_cycle() && preserves(g, &p))
}

pub fn brute_automorphism_count(g: &Graph) -> usize {
    Permutation::all(g.order())
        .filter(|p| preserves(g, p))
        .count()
}

/// Proper 2-colouring search over all `2^n` assignments.
pub fn brute_bipartite(g: &Graph) -> bool {
    let n = g.order();
    (0..1u64 << n).any(|mask| g.edges().all(|(u, v)| (mask >> u & 1) != (mask >> v & 1)))
}

pub fn shuffle(n: usize, seed: u64) -> Permutation {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(&mut rng);
    Permutation::new(v).expect("shuffled identity")
}
