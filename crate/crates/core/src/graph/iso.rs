//! Canonical forms for small simple graphs (up to 64 vertices, practical for
//! a dozen or so): colour refinement plus individualisation, minimum code.

use super::Graph;
use std::collections::BTreeMap;

pub type Code = (usize, Vec<u64>);

fn rows(g: &Graph) -> Vec<u64> {
    let mut r = vec![0u64; g.n()];
    for &(u, v) in g.edges() {
        r[u] |= 1 << v;
        r[v] |= 1 << u;
    }
    r
}

/// Refines `colour` until stable. Colours are ranks of a canonical signature,
/// so equal inputs up to relabelling give equal outputs.
fn refine(adj: &[u64], colour: &mut Vec<usize>) {
    let n = adj.len();
    loop {
        let classes = colour.iter().max().map_or(0, |m| m + 1);
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut cnt = vec![0; classes];
                for w in 0..n {
                    if adj[v] >> w & 1 == 1 {
                        cnt[colour[w]] += 1;
                    }
                }
                (colour[v], cnt)
            })
            .collect();
        let mut ranks: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in &sigs {
            ranks.insert(s, 0);
        }
        for (i, r) in ranks.values_mut().enumerate() {
            *r = i;
        }
        let next: Vec<usize> = sigs.iter().map(|s| ranks[s]).collect();
        let stable = ranks.len() == classes;
        *colour = next;
        if stable {
            return;
        }
    }
}

fn code_for(adj: &[u64], colour: &[usize]) -> Vec<u64> {
    // colour is discrete here: it is the position of each vertex.
    let n = adj.len();
    let mut pos_to_v = vec![0; n];
    for v in 0..n {
        pos_to_v[colour[v]] = v;
    }
    (0..n)
        .map(|i| {
            let v = pos_to_v[i];
            (0..n).fold(0u64, |acc, j| acc | ((adj[v] >> pos_to_v[j] & 1) << j))
        })
        .collect()
}

fn search(adj: &[u64], colour: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = adj.len();
    let classes = colour.iter().max().map_or(0, |m| m + 1);
    if classes == n {
        let c = code_for(adj, &colour);
        if best.as_ref().is_none_or(|b| c < *b) {
            *best = Some(c);
        }
        return;
    }
    // first colour class with more than one member
    let mut size = vec![0; classes];
    for &c in &colour {
        size[c] += 1;
    }
    let target = (0..classes).find(|&c| size[c] > 1).expect("non-discrete");
    for v in (0..n).filter(|&v| colour[v] == target) {
        // individualise v: it goes just before the rest of its class
        let mut c2: Vec<usize> =
            colour.iter().map(|&c| if c > target { c + 1 } else { c }).collect();
        for w in 0..n {
            if colour[w] == target && w != v {
                c2[w] = target + 1;
            }
        }
        refine(adj, &mut c2);
        search(adj, c2, best);
    }
}

pub fn canonical_code(g: &Graph) -> Code {
    let adj = rows(g);
    let mut colour = vec![0; g.n()];
    refine(&adj, &mut colour);
    let mut best = None;
    search(&adj, colour, &mut best);
    (g.n(), best.unwrap_or_default())
}

pub fn isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.q() == b.q() && canonical_code(a) == canonical_code(b)
}
