//! Exact isomorphism search for small graphs.
//!
//! Both graphs are first colored by joint color refinement (loop flag,
//! then iterated multisets of neighbor colors); mismatched color
//! histograms reject immediately. The remaining search assigns vertices
//! of `g` in a fixed order and tries images in `h` of the same color in
//! ascending label order, checking adjacency against every vertex already
//! placed. The witness returned is the first one this order reaches.

use std::collections::HashMap;

use crate::graph::Graph;
use crate::perm::Permutation;

/// Returns `p` with `g.relabel(p) == h`, or `None` if the graphs are not
/// isomorphic.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Option<Permutation> {
    let n = g.order();
    if g == h {
        return Some(Permutation::identity(n));
    }
    if n != h.order() || g.edge_count() != h.edge_count() || g.loop_count() != h.loop_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let (cg, ch) = refine_jointly(g, h)?;

    let order = assignment_order(g, &cg);
    let mut image = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if extend(g, h, &cg, &ch, &order, 0, &mut image, &mut used) {
        Some(Permutation::from_images_unchecked(image))
    } else {
        None
    }
}

/// Joint color refinement. Returns `None` when the histograms diverge.
fn refine_jointly(g: &Graph, h: &Graph) -> Option<(Vec<usize>, Vec<usize>)> {
    let n = g.order();
    let mut cg: Vec<usize> = (0..n).map(|v| g.has_loop(v) as usize).collect();
    let mut ch: Vec<usize> = (0..n).map(|v| h.has_loop(v) as usize).collect();
    let mut classes = count_classes(&cg);
    loop {
        let mut palette: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
        let recolor =
            |graph: &Graph, colors: &[usize], palette: &mut HashMap<(usize, Vec<usize>), usize>| {
                let mut sigs: Vec<(usize, Vec<usize>)> = (0..n)
                    .map(|v| {
                        let mut nb: Vec<usize> = graph.neighbors(v).map(|w| colors[w]).collect();
                        nb.sort_unstable();
                        (colors[v], nb)
                    })
                    .collect();
                // Colors are assigned in sorted signature order so both graphs
                // share one palette regardless of labeling.
                let mut sorted: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
                sorted.sort();
                for s in sorted {
                    let next = palette.len();
                    palette.entry(s.clone()).or_insert(next);
                }
                sigs.drain(..).map(|s| palette[&s]).collect::<Vec<usize>>()
            };
        let new_g = recolor(g, &cg, &mut palette);
        let new_h = recolor(h, &ch, &mut palette);
        if histogram(&new_g) != histogram(&new_h) {
            return None;
        }
        let new_classes = count_classes(&new_g);
        cg = new_g;
        ch = new_h;
        if new_classes == classes {
            break;
        }
        classes = new_classes;
    }
    Some((cg, ch))
}

fn count_classes(colors: &[usize]) -> usize {
    let mut c = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

fn histogram(colors: &[usize]) -> Vec<(usize, usize)> {
    let mut map: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *map.entry(c).or_default() += 1;
    }
    let mut hist: Vec<_> = map.into_iter().collect();
    hist.sort_unstable();
    hist
}

/// Vertices of `g` in assignment order: start from the smallest vertex of
/// the smallest color class, then repeatedly take the vertex with the most
/// already-ordered neighbors (ties by class size, then label).
fn assignment_order(g: &Graph, colors: &[usize]) -> Vec<usize> {
    let n = g.order();
    let mut class_size: HashMap<usize, usize> = HashMap::new();
    for &c in colors {
        *class_size.entry(c).or_default() += 1;
    }
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| (std::cmp::Reverse(links[v]), class_size[&colors[v]], v))
            .unwrap();
        placed[v] = true;
        order.push(v);
        for w in g.neighbors(v) {
            links[w] += 1;
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn extend(
    g: &Graph,
    h: &Graph,
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for c in 0..h.order() {
        if used[c] || ch[c] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.has_edge(u, v) == h.has_edge(image[u], c));
        if !consistent {
            continue;
        }
        image[v] = c;
        used[c] = true;
        if extend(g, h, cg, ch, order, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
    }
    image[v] = usize::MAX;
    false
}
