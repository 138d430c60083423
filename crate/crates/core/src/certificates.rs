//! Closed-form connection sets for products of complete graphs, and
//! arithmetic certificates of non-circulance.
//!
//! A certificate carries the numbers its argument rests on, so that
//! [`Certificate::is_consistent`] can re-derive the contradiction without
//! trusting the issuer.

use num_integer::Integer;
use serde::Serialize;

use crate::circulant::CirculantSpec;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::perm::Permutation;
use crate::symmetry::{pair_action, WreathElement};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// `Aut(K_m ⊗ K_n) = S_m × S_n`; a transitive element needs full
    /// cycles in both coordinates, and such a pair has order
    /// `lcm(m, n) < mn`.
    LcmObstruction {
        m: usize,
        n: usize,
        gcd: usize,
        lcm: usize,
    },
    /// `Aut(K_n ⊗ K_n) = S_n ≀ S_2`; a transitive element would need a
    /// swap part whose square has `(1,1)`-orbit at most `n < n^2`.
    WreathObstruction { n: usize },
    /// A bipartite odd-regular graph of order `4k` cannot be circulant:
    /// odd degree forces the residue `2k`, which is even.
    ParityObstruction { order: usize, degree: usize },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::LcmObstruction { .. } => "lcm",
            Certificate::WreathObstruction { .. } => "wreath",
            Certificate::ParityObstruction { .. } => "parity",
        }
    }

    /// Re-checks the arithmetic the certificate relies on.
    pub fn is_consistent(&self) -> bool {
        match *self {
            Certificate::LcmObstruction { m, n, gcd, lcm } => {
                m != n && gcd == m.gcd(&n) && lcm == m.lcm(&n) && gcd > 1 && lcm < m * n
            }
            Certificate::WreathObstruction { n } => n > 2,
            Certificate::ParityObstruction { order, degree } => order % 4 == 0 && degree % 2 == 1,
        }
    }
}

impl std::fmt::Display for Certificate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Certificate::LcmObstruction { m, n, gcd, lcm } => {
                write!(
                    f,
                    "lcm obstruction m={m} n={n} gcd={gcd} lcm={lcm} < {}",
                    m * n
                )
            }
            Certificate::WreathObstruction { n } => write!(f, "wreath obstruction n={n}"),
            Certificate::ParityObstruction { order, degree } => {
                write!(f, "parity obstruction order={order} degree={degree}")
            }
        }
    }
}

fn require_coprime(m: usize, n: usize) -> Result<()> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!(
            "({m}, {n}) needs both orders >= 2"
        )));
    }
    if m.gcd(&n) != 1 {
        return Err(Error::Precondition(format!("({m}, {n}) are not coprime")));
    }
    Ok(())
}

/// `C_{mn}{ i in 1..=mn/2 : m ∤ i and n ∤ i }`, isomorphic to `K_m ⊗ K_n`
/// for coprime `m, n`.
pub fn km_kn_tensor_spec(m: usize, n: usize) -> Result<CirculantSpec> {
    require_coprime(m, n)?;
    let order = m * n;
    CirculantSpec::new(order, (1..=order / 2).filter(|i| i % m != 0 && i % n != 0))
}

/// `C_{mn}{ i in 1..=mn/2 : m | i or n | i }`, isomorphic to `K_m × K_n`
/// for coprime `m, n`.
pub fn km_kn_cartesian_spec(m: usize, n: usize) -> Result<CirculantSpec> {
    require_coprime(m, n)?;
    let order = m * n;
    CirculantSpec::new(order, (1..=order / 2).filter(|i| i % m == 0 || i % n == 0))
}

/// Certificate that `K_m ⊗ K_n` is not circulant, for `gcd(m, n) > 1`
/// and `(m, n) != (2, 2)`.
pub fn theorem2_certificate(m: usize, n: usize) -> Result<Certificate> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition(format!(
            "({m}, {n}) needs both orders >= 2"
        )));
    }
    let gcd = m.gcd(&n);
    if gcd == 1 {
        return Err(Error::Precondition(format!(
            "({m}, {n}) are coprime; the product is circulant"
        )));
    }
    if m == 2 && n == 2 {
        return Err(Error::Precondition(
            "K2 ⊗ K2 is the circulant C 4 {2}".into(),
        ));
    }
    Ok(if m == n {
        Certificate::WreathObstruction { n }
    } else {
        Certificate::LcmObstruction {
            m,
            n,
            gcd,
            lcm: m.lcm(&n),
        }
    })
}

/// Certificate that `g ⊗ h` is not circulant when `g` is connected,
/// bipartite and odd-regular and `h` is connected, odd-regular and not
/// bipartite.
pub fn theorem11_certificate(g: &Graph, h: &Graph) -> Result<Certificate> {
    let violation = |what: &str| Err(Error::HypothesisViolation(what.to_string()));
    if !g.is_connected() {
        return violation("G is not connected");
    }
    if !g.is_bipartite() {
        return violation("G is not bipartite");
    }
    let Some(dg) = g.regular_degree() else {
        return violation("G is not regular");
    };
    if dg % 2 == 0 {
        return violation(&format!("G has even degree {dg}"));
    }
    if !h.is_connected() {
        return violation("H is not connected");
    }
    if h.is_bipartite() {
        return violation("H is bipartite");
    }
    let Some(dh) = h.regular_degree() else {
        return violation("H is not regular");
    };
    if dh % 2 == 0 {
        return violation(&format!("H has even degree {dh}"));
    }
    let order = g.order() * h.order();
    // a looped odd-regular H can have odd order, which breaks the 4 | order step
    if order % 4 != 0 {
        return violation(&format!("product order {order} is not divisible by 4"));
    }
    Ok(Certificate::ParityObstruction {
        order,
        degree: dg * dh,
    })
}

/// Integer partitions of `n` into parts of size at most `max`, descending.
fn partitions(n: usize, max: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in (1..=max.min(n)).rev() {
        for mut rest in partitions(n - first, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn permutation_with_cycle_type(parts: &[usize]) -> Permutation {
    let n: usize = parts.iter().sum();
    let mut start = 0;
    let cycles: Vec<Vec<usize>> = parts
        .iter()
        .map(|&len| {
            let c = (start..start + len).collect();
            start += len;
            c
        })
        .collect();
    Permutation::from_cycles(n, &cycles).expect("disjoint cycles")
}

fn largest_orbit(p: &Permutation) -> usize {
    p.cycle_type().first().copied().unwrap_or(0)
}

/// Largest orbit of any element of `S_m × S_n` on `V(K_m ⊗ K_n)`, by
/// running one representative pair per pair of conjugacy classes.
pub fn max_direct_product_orbit(m: usize, n: usize) -> usize {
    let left: Vec<Permutation> = partitions(m, m)
        .iter()
        .map(|p| permutation_with_cycle_type(p))
        .collect();
    let right: Vec<Permutation> = partitions(n, n)
        .iter()
        .map(|p| permutation_with_cycle_type(p))
        .collect();
    left.iter()
        .flat_map(|s| right.iter().map(move |t| largest_orbit(&pair_action(s, t))))
        .max()
        .unwrap_or(0)
}

/// Largest orbit of any element of `S_n ≀ S_2` on `V(K_n ⊗ K_n)`, over all
/// `2 (n!)^2` elements.
pub fn max_wreath_orbit(n: usize) -> usize {
    let perms: Vec<Permutation> = Permutation::all(n).collect();
    let mut best = 0;
    for swap in [false, true] {
        for t1 in &perms {
            for t2 in &perms {
                let w = WreathElement {
                    swap,
                    tau1: t1.clone(),
                    tau2: t2.clone(),
                };
                best = best.max(largest_orbit(&w.to_permutation()));
            }
        }
    }
    best
}
