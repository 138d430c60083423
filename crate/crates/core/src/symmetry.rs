//! Automorphism checks, product actions, and explicit cyclic witnesses.

use num_integer::Integer;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::products::{tensor, ProductVertexMap};

/// True iff `p` maps the edge set (loops included) onto itself.
pub fn is_automorphism(g: &Graph, p: &Permutation) -> Result<bool> {
    if p.degree() != g.order() {
        return Err(Error::DegreeMismatch {
            expected: g.order(),
            actual: p.degree(),
        });
    }
    // a bijection that maps edges into edges maps them onto edges
    Ok(g.edges().all(|(u, v)| g.has_edge(p.apply(u), p.apply(v))))
}

/// `(g, h) -> (s(g), t(h))` on the row-major product vertex set.
pub fn pair_action(s: &Permutation, t: &Permutation) -> Permutation {
    let map = ProductVertexMap::new(s.degree(), t.degree());
    Permutation::from_images_unchecked(
        (0..map.order())
            .map(|v| {
                let (g, h) = map.pair(v);
                map.index(s.apply(g), t.apply(h))
            })
            .collect(),
    )
}

/// An element `(swap; tau1, tau2)` of `S_n ≀ S_2` acting on pairs.
///
/// Without swap: `(i1, i2) -> (tau1(i1), tau2(i2))`.
/// With swap: `(i1, i2) -> (tau2(i2), tau1(i1))`, which makes the square
/// `(e; tau2∘tau1, tau1∘tau2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WreathElement {
    pub swap: bool,
    pub tau1: Permutation,
    pub tau2: Permutation,
}

impl WreathElement {
    pub fn new(swap: bool, tau1: Permutation, tau2: Permutation) -> Result<Self> {
        if tau1.degree() != tau2.degree() {
            return Err(Error::DegreeMismatch {
                expected: tau1.degree(),
                actual: tau2.degree(),
            });
        }
        Ok(Self { swap, tau1, tau2 })
    }

    pub fn degree(&self) -> usize {
        self.tau1.degree()
    }

    pub fn random<R: Rng + ?Sized>(n: usize, swap: bool, rng: &mut R) -> Self {
        let shuffled = |rng: &mut R| {
            let mut v: Vec<usize> = (0..n).collect();
            v.shuffle(rng);
            Permutation::from_images_unchecked(v)
        };
        let tau1 = shuffled(rng);
        let tau2 = shuffled(rng);
        Self { swap, tau1, tau2 }
    }

    /// The action on `0..n*n`, row-major as in [`ProductVertexMap`].
    pub fn to_permutation(&self) -> Permutation {
        let n = self.degree();
        let map = ProductVertexMap::new(n, n);
        Permutation::from_images_unchecked(
            (0..n * n)
                .map(|v| {
                    let (a, b) = wreath_action_unchecked(self, map.pair(v));
                    map.index(a, b)
                })
                .collect(),
        )
    }

    /// Group product `self * other` (apply `other` first).
    pub fn compose(&self, other: &WreathElement) -> Result<WreathElement> {
        let (tau1, tau2) = if other.swap {
            (
                self.tau2.compose(&other.tau1)?,
                self.tau1.compose(&other.tau2)?,
            )
        } else {
            (
                self.tau1.compose(&other.tau1)?,
                self.tau2.compose(&other.tau2)?,
            )
        };
        Ok(WreathElement {
            swap: self.swap != other.swap,
            tau1,
            tau2,
        })
    }
}

fn wreath_action_unchecked(w: &WreathElement, (i1, i2): (usize, usize)) -> (usize, usize) {
    if w.swap {
        (w.tau2.apply(i2), w.tau1.apply(i1))
    } else {
        (w.tau1.apply(i1), w.tau2.apply(i2))
    }
}

pub fn wreath_action(w: &WreathElement, pair: (usize, usize)) -> Result<(usize, usize)> {
    let n = w.degree();
    for x in [pair.0, pair.1] {
        if x >= n {
            return Err(Error::VertexOutOfRange {
                vertex: x,
                order: n,
            });
        }
    }
    Ok(wreath_action_unchecked(w, pair))
}

/// `(i, j) -> (i, j+1)` for `j < m-1`, `(i, m-1) -> (i+1 mod n, 0)`, on the
/// row-major vertices of `K*_n ⊗ G` with `|V(G)| = m`.
pub fn lemma6_alpha(n: usize, m: usize) -> Permutation {
    let map = ProductVertexMap::new(n, m);
    Permutation::from_images_unchecked(
        (0..map.order())
            .map(|v| {
                let (i, j) = map.pair(v);
                if j + 1 < m {
                    map.index(i, j + 1)
                } else {
                    map.index((i + 1) % n, 0)
                }
            })
            .collect(),
    )
}

/// The reflection `v -> (N-1) - v` on a connected bipartite circulant of
/// even order `N`; it exchanges the even and odd vertices.
pub fn switching_automorphism(spec: &CirculantSpec) -> Result<Permutation> {
    if !spec.is_connected_bipartite() {
        return Err(Error::Precondition(format!(
            "{spec} is not a connected bipartite circulant"
        )));
    }
    Ok(Permutation::reflection(spec.order()))
}

/// Component 1 of `G ⊗ H` for connected bipartite circulants of orders
/// `2n`, `2m` with `gcd(n, m) = 1`, together with the restriction of the
/// pair action of the two rotations to it.
///
/// Component 1 consists of the pairs whose coordinates have equal parity;
/// its vertices are numbered in ascending product order.
pub fn theorem10_witness(g: &CirculantSpec, h: &CirculantSpec) -> Result<(Permutation, Graph)> {
    for s in [g, h] {
        if !s.is_connected_bipartite() {
            return Err(Error::Precondition(format!(
                "{s} is not a connected bipartite circulant"
            )));
        }
    }
    let (n, m) = (g.order() / 2, h.order() / 2);
    if n.gcd(&m) != 1 {
        return Err(Error::Precondition(format!(
            "half-orders {n} and {m} are not coprime"
        )));
    }
    let product = tensor(&g.build(), &h.build());
    let map = ProductVertexMap::new(g.order(), h.order());
    let members: Vec<usize> = (0..map.order())
        .filter(|&v| {
            let (a, b) = map.pair(v);
            a % 2 == b % 2
        })
        .collect();
    let mut local = vec![usize::MAX; map.order()];
    for (k, &v) in members.iter().enumerate() {
        local[v] = k;
    }
    let action = pair_action(
        &Permutation::rotation(g.order(), 1),
        &Permutation::rotation(h.order(), 1),
    );
    let images: Vec<usize> = members.iter().map(|&v| local[action.apply(v)]).collect();
    let witness = Permutation::new(images)
        .map_err(|_| Error::Precondition("pair action does not preserve component 1".into()))?;
    Ok((witness, product.induced_subgraph(&members)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::products::{complete, kn_star};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn spec(s: &str) -> CirculantSpec {
        s.parse().unwrap()
    }

    #[test]
    fn rotation_and_transposition_on_c6() {
        let g = spec("C 6 {1}").build();
        assert!(is_automorphism(&g, &Permutation::rotation(6, 1)).unwrap());
        let t = Permutation::parse_cycles(6, "(0 1)").unwrap();
        assert!(!is_automorphism(&g, &t).unwrap());
        assert!(is_automorphism(&g, &Permutation::identity(5)).is_err());
    }

    #[test]
    fn pair_action_on_k2_k3() {
        let g = tensor(&complete(2), &complete(3));
        let s = Permutation::parse_cycles(2, "(0 1)").unwrap();
        let t = Permutation::parse_cycles(3, "(0 1 2)").unwrap();
        let p = pair_action(&s, &t);
        assert!(is_automorphism(&g, &p).unwrap());
        assert_eq!(p.order(), 6);
        assert!(p.is_full_cycle());
        assert!(pair_action(&Permutation::identity(2), &Permutation::identity(3)).is_identity());
    }

    #[test]
    fn wreath_direct_case_and_square() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = WreathElement::random(4, false, &mut rng);
        assert_eq!(
            wreath_action(&w, (1, 2)).unwrap(),
            (w.tau1.apply(1), w.tau2.apply(2))
        );
        assert_eq!(w.to_permutation(), pair_action(&w.tau1, &w.tau2));
        let s = WreathElement::random(4, true, &mut rng);
        let sq = s.to_permutation().compose(&s.to_permutation()).unwrap();
        let gamma = s.tau2.compose(&s.tau1).unwrap();
        let delta = s.tau1.compose(&s.tau2).unwrap();
        assert_eq!(sq, pair_action(&gamma, &delta));
        assert!(wreath_action(&s, (4, 0)).is_err());
    }

    #[test]
    fn wreath_compose_matches_permutation_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for (a, b) in [(false, false), (false, true), (true, false), (true, true)] {
            let x = WreathElement::random(3, a, &mut rng);
            let y = WreathElement::random(3, b, &mut rng);
            let xy = x.compose(&y).unwrap();
            assert_eq!(
                xy.to_permutation(),
                x.to_permutation().compose(&y.to_permutation()).unwrap()
            );
        }
    }

    #[test]
    fn lemma6_alpha_is_full_cycle_automorphism() {
        let a = lemma6_alpha(2, 3);
        assert_eq!(a.cycle_type(), vec![6]);
        let g = tensor(&kn_star(2), &spec("C 3 {1}").build());
        assert!(is_automorphism(&g, &a).unwrap());
        assert_eq!(lemma6_alpha(1, 5), Permutation::rotation(5, 1));
    }

    #[test]
    fn switching_on_c6_13() {
        let b = switching_automorphism(&spec("C 6 {1,3}")).unwrap();
        assert_eq!(b.to_string(), "(0 5)(1 4)(2 3)");
        assert!(b.compose(&b).unwrap().is_identity());
        let mut evens: Vec<usize> = [0, 2, 4].iter().map(|&v| b.apply(v)).collect();
        evens.sort();
        assert_eq!(evens, vec![1, 3, 5]);
        assert!(switching_automorphism(&spec("C 6 {1,2}")).is_err());
        assert!(switching_automorphism(&spec("C 8 {2}")).is_err());
    }

    #[test]
    fn component_witness_c4_c6() {
        let (w, comp) = theorem10_witness(&spec("C 4 {1}"), &spec("C 6 {1,3}")).unwrap();
        assert_eq!(comp.order(), 12);
        assert!(w.is_full_cycle());
        assert_eq!(w.order(), 12);
        assert!(is_automorphism(&comp, &w).unwrap());
        assert!(comp.is_connected());
        assert!(theorem10_witness(&spec("C 4 {1}"), &spec("C 8 {1}")).is_err());
        assert!(theorem10_witness(&spec("C 4 {1}"), &spec("C 6 {1,2}")).is_err());
    }
}
