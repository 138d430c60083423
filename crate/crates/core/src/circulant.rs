//! Circulant specifications `C n S` and their arithmetic.
//!
//! Residues live in `0..=n/2`; `0 ∈ S` puts a loop on every vertex and
//! `n/2 ∈ S` (for even `n`) contributes a perfect matching.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CirculantSpec {
    order: usize,
    residues: BTreeSet<usize>,
}

impl CirculantSpec {
    pub fn new<I: IntoIterator<Item = usize>>(order: usize, residues: I) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidSpec("order must be at least 1".into()));
        }
        let mut set = BTreeSet::new();
        for s in residues {
            if s > order / 2 {
                return Err(Error::InvalidSpec(format!(
                    "residue {s} exceeds {} for order {order}",
                    order / 2
                )));
            }
            if !set.insert(s) {
                return Err(Error::InvalidSpec(format!("residue {s} repeated")));
            }
        }
        Ok(Self {
            order,
            residues: set,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Residues in ascending order.
    pub fn residues(&self) -> &BTreeSet<usize> {
        &self.residues
    }

    pub fn contains(&self, s: usize) -> bool {
        self.residues.contains(&s)
    }

    pub fn has_loops(&self) -> bool {
        self.contains(0)
    }

    /// Every spec of the given order, in ascending bitmask order of `S`.
    pub fn all_of_order(order: usize) -> impl Iterator<Item = CirculantSpec> {
        let width = order / 2 + 1;
        (0u64..1 << width).map(move |mask| CirculantSpec {
            order,
            residues: (0..width).filter(|s| mask >> s & 1 == 1).collect(),
        })
    }

    /// Minimal circular distance `min((i-j) mod n, (j-i) mod n)`.
    pub fn distance(&self, i: usize, j: usize) -> usize {
        let d = (i + self.order - j) % self.order;
        d.min(self.order - d)
    }

    pub fn build(&self) -> Graph {
        Graph::from_fn(self.order, |i, j| {
            self.residues.contains(&self.distance(i, j))
        })
    }

    /// Size of every neighbor set of the built graph.
    pub fn degree(&self) -> usize {
        self.residues
            .iter()
            .map(|&s| if s == 0 || 2 * s == self.order { 1 } else { 2 })
            .sum()
    }

    /// `(n, {0..=n/2} \ S)`; builds exactly the `J - A` complement.
    pub fn complement(&self) -> CirculantSpec {
        CirculantSpec {
            order: self.order,
            residues: (0..=self.order / 2)
                .filter(|s| !self.residues.contains(s))
                .collect(),
        }
    }

    /// `gcd(n, S \ {0})`, the number of connected components.
    pub fn component_count(&self) -> usize {
        self.residues
            .iter()
            .filter(|&&s| s != 0)
            .fold(self.order, |g, &s| g.gcd(&s))
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// `(2n, 2S)`: two disjoint copies of this graph.
    pub fn double(&self) -> CirculantSpec {
        CirculantSpec {
            order: 2 * self.order,
            residues: self.residues.iter().map(|s| 2 * s).collect(),
        }
    }

    /// k-partiteness of a connected circulant with the residue classes mod
    /// `k` as parts: `k | n` and no residue is a multiple of `k`. For `k = 2`
    /// this is plain bipartiteness; for larger `k` it is stronger than
    /// k-colourability (`C 5 {1}` is 3-colourable yet false here).
    pub fn is_k_partite(&self, k: usize) -> Result<bool> {
        if k < 2 {
            return Err(Error::Precondition(format!("k = {k} must be at least 2")));
        }
        if !self.is_connected() {
            return Err(Error::Precondition(format!("{self} is disconnected")));
        }
        if self.order == 1 {
            // a single vertex is trivially properly coloured, unless looped
            return Ok(!self.has_loops());
        }
        Ok(self.order % k == 0 && self.residues.iter().all(|s| s % k != 0))
    }

    /// Connected and bipartite: even order, every residue odd.
    pub fn is_connected_bipartite(&self) -> bool {
        self.is_connected() && self.is_k_partite(2).unwrap_or(false)
    }
}

impl fmt::Display for CirculantSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C {} {{", self.order)?;
        for (k, s) in self.residues.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for CirculantSpec {
    type Err = Error;

    /// Parses `C <n> {s1,s2,...}`. Whitespace around tokens is tolerated.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |msg: &str| Error::Parse {
            line: 1,
            message: format!("{msg} in spec literal {text:?}"),
        };
        let rest = text
            .trim()
            .strip_prefix('C')
            .ok_or_else(|| bad("expected 'C'"))?;
        let open = rest.find('{').ok_or_else(|| bad("expected '{'"))?;
        let order: usize = rest[..open].trim().parse().map_err(|_| bad("bad order"))?;
        let body = rest[open + 1..].trim_end();
        let body = body.strip_suffix('}').ok_or_else(|| bad("expected '}'"))?;
        let residues = body
            .split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| bad("bad residue")))
            .collect::<Result<Vec<_>>>()?;
        CirculantSpec::new(order, residues)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> CirculantSpec {
        s.parse().unwrap()
    }

    #[test]
    fn builds_c4_2() {
        let g = spec("C 4 {2}").build();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2), (1, 3)]);
    }

    #[test]
    fn builds_octahedron_and_looped_triangle() {
        let g = spec("C 6 {1,2}").build();
        assert_eq!(g.regular_degree(), Some(4));
        assert_eq!(g.edge_count(), 12);
        let k3star = spec("C 3 {0,1}").build();
        assert_eq!(k3star, Graph::from_fn(3, |_, _| true));
    }

    #[test]
    fn rejects_out_of_range_residue() {
        assert!(CirculantSpec::new(4, [3]).is_err());
        assert!(CirculantSpec::new(5, [3]).is_err());
        assert!(CirculantSpec::new(0, []).is_err());
        assert!("C 4 {1,1}".parse::<CirculantSpec>().is_err());
        assert!("C 4 {1".parse::<CirculantSpec>().is_err());
        assert!("K 4 {1}".parse::<CirculantSpec>().is_err());
    }

    #[test]
    fn literal_round_trip_is_bit_exact() {
        for lit in ["C 6 {1,3}", "C 5 {}", "C 1 {0}", "C 12 {0,1,6}"] {
            assert_eq!(spec(lit).to_string(), lit);
        }
        assert_eq!(spec(" C 6 { 3 , 1 } ").to_string(), "C 6 {1,3}");
    }

    #[test]
    fn complement_specs() {
        assert_eq!(spec("C 5 {1}").complement(), spec("C 5 {0,2}"));
        assert_eq!(spec("C 6 {1,3}").complement(), spec("C 6 {0,2}"));
        let x = spec("C 9 {0,2,3}");
        assert_eq!(x.complement().complement(), x);
    }

    #[test]
    fn component_counts() {
        assert_eq!(spec("C 4 {2}").component_count(), 2);
        assert_eq!(spec("C 6 {2,3}").component_count(), 1);
        assert_eq!(spec("C 6 {2}").component_count(), 2);
        assert_eq!(spec("C 6 {0,2}").component_count(), 2);
        assert_eq!(spec("C 5 {}").component_count(), 5);
    }

    #[test]
    fn doubling() {
        assert_eq!(spec("C 3 {1}").double(), spec("C 6 {2}"));
        assert_eq!(spec("C 2 {1}").double(), spec("C 4 {2}"));
        assert_eq!(spec("C 4 {1,2}").double(), spec("C 8 {2,4}"));
    }

    #[test]
    fn k_partite() {
        assert!(spec("C 6 {1,3}").is_k_partite(2).unwrap());
        assert!(!spec("C 6 {1,2}").is_k_partite(2).unwrap());
        assert!(spec("C 6 {1,2}").is_k_partite(3).unwrap());
        assert!(spec("C 6 {2}").is_k_partite(2).is_err());
        assert!(spec("C 6 {1}").is_k_partite(1).is_err());
    }

    #[test]
    fn degree_formula_matches_graph() {
        for n in 1..=12 {
            for s in CirculantSpec::all_of_order(n) {
                assert_eq!(s.build().regular_degree(), Some(s.degree()), "{s}");
            }
        }
    }
}
