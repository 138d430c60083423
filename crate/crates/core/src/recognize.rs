//! Exact circulance recognition.
//!
//! A graph on `n` vertices is circulant iff it has an automorphism that is
//! a single `n`-cycle. Equivalently its vertices admit a cyclic ordering
//! `v_0, ..., v_{n-1}` in which adjacency of `v_i, v_j` depends only on
//! `(j - i) mod n`. The search builds such orderings position by
//! position with `v_0` fixed to the smallest vertex, reading the
//! difference pattern off as it goes, and discards the mirror image of
//! every ordering (`v_1 < v_{n-1}`).
//!
//! Disconnected graphs are circulant iff their components are pairwise
//! isomorphic circulants; those are decided on one component and the
//! witness is interleaved across copies.

use serde::Serialize;

use crate::certificates::Certificate;
use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::iso::are_isomorphic;
use crate::perm::Permutation;
use crate::symmetry::is_automorphism;

/// No search is attempted on components larger than this.
pub const HARD_ORDER_GUARD: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecognitionConfig {
    /// Largest connected component the cyclic-ordering search accepts.
    pub max_order: usize,
}

impl RecognitionConfig {
    pub fn new(max_order: usize) -> Result<Self> {
        if max_order > HARD_ORDER_GUARD {
            return Err(Error::OrderTooLarge {
                order: max_order,
                bound: HARD_ORDER_GUARD,
            });
        }
        Ok(Self { max_order })
    }
}

impl Default for RecognitionConfig {
    fn default() -> Self {
        Self { max_order: 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Evidence {
    /// Every cyclic ordering was ruled out.
    Exhausted {
        order: usize,
    },
    Certificate(Certificate),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Circulant {
        /// A full-length cyclic automorphism.
        witness: Permutation,
        /// The connection set read off along `witness`.
        spec: CirculantSpec,
    },
    NotCirculant(Evidence),
}

impl Verdict {
    pub fn is_circulant(&self) -> bool {
        matches!(self, Verdict::Circulant { .. })
    }

    pub fn witness(&self) -> Option<&Permutation> {
        match self {
            Verdict::Circulant { witness, .. } => Some(witness),
            Verdict::NotCirculant(_) => None,
        }
    }

    pub fn spec(&self) -> Option<&CirculantSpec> {
        match self {
            Verdict::Circulant { spec, .. } => Some(spec),
            Verdict::NotCirculant(_) => None,
        }
    }
}

/// [`is_circulant_with`] under the default configuration.
pub fn is_circulant(g: &Graph) -> Result<Verdict> {
    is_circulant_with(g, RecognitionConfig::default())
}

pub fn is_circulant_with(g: &Graph, config: RecognitionConfig) -> Result<Verdict> {
    let n = g.order();
    if n == 0 {
        return Err(Error::Precondition("graph has no vertices".into()));
    }
    let report = g.connected_components();
    let largest = report
        .components
        .iter()
        .map(|c| c.vertices.len())
        .max()
        .unwrap_or(0);
    let bound = config.max_order.min(HARD_ORDER_GUARD);
    if largest > bound {
        return Err(Error::OrderTooLarge {
            order: largest,
            bound,
        });
    }
    let exhausted = Verdict::NotCirculant(Evidence::Exhausted { order: n });

    let first = &report.components[0];
    let copies = report.count();
    let mut embeddings = Vec::with_capacity(copies);
    for comp in &report.components {
        match are_isomorphic(&first.graph, &comp.graph) {
            Some(p) => embeddings.push(p),
            None => return Ok(exhausted),
        }
    }

    let Some(local) = cyclic_ordering(&first.graph) else {
        return Ok(exhausted);
    };

    // position j * copies + c holds copy c of the j-th vertex of the ordering
    let m = first.vertices.len();
    let mut sequence = vec![0usize; n];
    for (c, (comp, emb)) in report.components.iter().zip(&embeddings).enumerate() {
        for (j, &w) in local.iter().enumerate() {
            sequence[j * copies + c] = comp.vertices[emb.apply(w)];
        }
    }
    debug_assert_eq!(m * copies, n);
    let mut images = vec![0usize; n];
    for p in 0..n {
        images[sequence[p]] = sequence[(p + 1) % n];
    }
    let witness = Permutation::from_images_unchecked(images);
    let spec = connection_set_from_cycle(g, &witness)?;
    Ok(Verdict::Circulant { witness, spec })
}

/// Reads the connection set off a full-cycle automorphism: vertex
/// `sigma^k(0)` becomes `k`, and `S` collects the distances `d <= n/2`
/// with `0 ~ d` after relabeling.
pub fn connection_set_from_cycle(g: &Graph, sigma: &Permutation) -> Result<CirculantSpec> {
    let n = g.order();
    if sigma.degree() != n {
        return Err(Error::DegreeMismatch {
            expected: n,
            actual: sigma.degree(),
        });
    }
    if !sigma.is_full_cycle() {
        return Err(Error::NotFullCycle);
    }
    if !is_automorphism(g, sigma)? {
        return Err(Error::NotAutomorphism);
    }
    let orbit = sigma.orbit(0);
    CirculantSpec::new(n, (0..=n / 2).filter(|&d| g.has_edge(orbit[0], orbit[d])))
}

/// Relabeling that sends `sigma^k(0)` to `k`.
pub fn orbit_relabeling(sigma: &Permutation) -> Permutation {
    let mut images = vec![0usize; sigma.degree()];
    for (k, v) in sigma.orbit(0).into_iter().enumerate() {
        images[v] = k;
    }
    Permutation::from_images_unchecked(images)
}

/// Cyclic ordering of a connected graph (`order <= 64`), or `None`.
fn cyclic_ordering(g: &Graph) -> Option<Vec<usize>> {
    let n = g.order();
    let loop0 = g.has_loop(0);
    if (0..n).any(|v| g.has_loop(v) != loop0) {
        return None;
    }
    if n <= 2 {
        return Some((0..n).collect());
    }
    let degree = g.regular_degree()? - loop0 as usize;
    let rows: Vec<u64> = (0..n)
        .map(|v| {
            g.neighbors(v)
                .filter(|&w| w != v)
                .fold(0u64, |acc, w| acc | 1 << w)
        })
        .collect();
    let mut search = OrderingSearch {
        n,
        rows,
        degree,
        pattern: vec![None; n / 2 + 1],
        sequence: vec![0],
        used: 1,
    };
    search.place().then_some(search.sequence)
}

struct OrderingSearch {
    n: usize,
    rows: Vec<u64>,
    degree: usize,
    /// adjacency indicator per distance class `1..=n/2`
    pattern: Vec<Option<bool>>,
    sequence: Vec<usize>,
    used: u64,
}

impl OrderingSearch {
    fn class(&self, d: usize) -> usize {
        d.min(self.n - d)
    }

    fn weight(&self, class: usize) -> usize {
        if 2 * class == self.n {
            1
        } else {
            2
        }
    }

    /// Degree still reachable is within `[committed, committed + open]`.
    fn degree_feasible(&self) -> bool {
        let mut committed = 0;
        let mut open = 0;
        for c in 1..=self.n / 2 {
            match self.pattern[c] {
                Some(true) => committed += self.weight(c),
                Some(false) => {}
                None => open += self.weight(c),
            }
        }
        committed <= self.degree && self.degree <= committed + open
    }

    fn place(&mut self) -> bool {
        let k = self.sequence.len();
        if k == self.n {
            return true;
        }
        let full = if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        };
        // candidates must respect every difference already fixed by v_1..v_{k-1}
        let mut candidates = full & !self.used;
        for i in 1..k {
            let want = self.pattern[self.class(k - i)].expect("fixed at an earlier step");
            let row = self.rows[self.sequence[i]];
            candidates &= if want { row } else { !row };
        }
        let class = self.class(k);
        let known = self.pattern[class];
        if let Some(want) = known {
            let row = self.rows[self.sequence[0]];
            candidates &= if want { row } else { !row };
        }
        if k == self.n - 1 && self.n > 2 {
            // mirror symmetry: keep only orderings with v_1 < v_{n-1}
            candidates &= !((1u64 << (self.sequence[1] + 1)) - 1);
        }
        while candidates != 0 {
            let c = candidates.trailing_zeros() as usize;
            candidates &= candidates - 1;
            if known.is_none() {
                self.pattern[class] = Some(self.rows[self.sequence[0]] >> c & 1 == 1);
                if !self.degree_feasible() {
                    continue;
                }
            }
            self.sequence.push(c);
            self.used |= 1 << c;
            if self.place() {
                return true;
            }
            self.used &= !(1 << c);
            self.sequence.pop();
        }
        if known.is_none() {
            self.pattern[class] = None;
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{complete, tensor};

    fn spec(s: &str) -> CirculantSpec {
        s.parse().unwrap()
    }

    #[test]
    fn k2_tensor_k2_is_c4_2() {
        let v = is_circulant(&tensor(&complete(2), &complete(2))).unwrap();
        assert_eq!(v.spec(), Some(&spec("C 4 {2}")));
    }

    #[test]
    fn q3_is_not_circulant() {
        let v = is_circulant(&tensor(&complete(2), &complete(4))).unwrap();
        assert_eq!(v, Verdict::NotCirculant(Evidence::Exhausted { order: 8 }));
    }

    #[test]
    fn k3_tensor_k3_is_not_circulant() {
        let v = is_circulant(&tensor(&complete(3), &complete(3))).unwrap();
        assert!(!v.is_circulant());
    }

    #[test]
    fn witnesses_validate() {
        for lit in [
            "C 6 {1}",
            "C 6 {1,2}",
            "C 8 {2,4}",
            "C 9 {0,3}",
            "C 1 {}",
            "C 1 {0}",
            "C 2 {}",
        ] {
            let g = spec(lit).build();
            let v = is_circulant(&g).unwrap();
            let w = v.witness().unwrap();
            assert!(w.is_full_cycle(), "{lit}");
            assert!(is_automorphism(&g, w).unwrap(), "{lit}");
            let relabeled = g.relabel(&orbit_relabeling(w)).unwrap();
            assert_eq!(v.spec().unwrap().build(), relabeled, "{lit}");
        }
    }

    #[test]
    fn mixed_loops_are_rejected() {
        let g = Graph::from_edges(3, [(0, 0), (0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!is_circulant(&g).unwrap().is_circulant());
    }

    #[test]
    fn order_guard() {
        let big = crate::products::cycle(30);
        assert!(matches!(
            is_circulant(&big),
            Err(Error::OrderTooLarge { .. })
        ));
        assert!(RecognitionConfig::new(25).is_err());
        // components are what the guard measures
        let two = crate::products::cycle(12).disjoint_union(&crate::products::cycle(12));
        assert!(is_circulant(&two).unwrap().is_circulant());
    }

    #[test]
    fn connection_set_from_rotation() {
        let g = spec("C 6 {1}").build();
        assert_eq!(
            connection_set_from_cycle(&g, &Permutation::rotation(6, 1)).unwrap(),
            spec("C 6 {1}")
        );
    }

    #[test]
    fn connection_set_from_k2k2_cycle() {
        let g = tensor(&complete(2), &complete(2));
        let sigma = Permutation::parse_cycles(4, "(0 1 3 2)").unwrap();
        assert_eq!(
            connection_set_from_cycle(&g, &sigma).unwrap(),
            spec("C 4 {2}")
        );
        // the plain product-order cycle moves the edge {0,3} onto a non-edge
        let plain = Permutation::parse_cycles(4, "(0 1 2 3)").unwrap();
        assert_eq!(
            connection_set_from_cycle(&g, &plain),
            Err(Error::NotAutomorphism)
        );
        let not_full = Permutation::parse_cycles(4, "(0 3)(1 2)").unwrap();
        assert_eq!(
            connection_set_from_cycle(&g, &not_full),
            Err(Error::NotFullCycle)
        );
    }
}
