//! Matchings, induced matchings and independent sets by bitset branch and bound.

use super::{low_bits, BitIter, Graph, VertexSet};
use crate::error::{Error, Result};

/// Size of a maximum matching, `m(G)`.
pub fn matching_number(g: &Graph) -> usize {
    let mut best = 0;
    matching_rec(g.adjacency(), live_vertices(g), 0, &mut best, false);
    best
}

/// Size of a maximum induced matching, `im(G)`.
pub fn induced_matching_number(g: &Graph) -> usize {
    let mut best = 0;
    matching_rec(g.adjacency(), live_vertices(g), 0, &mut best, true);
    best
}

fn live_vertices(g: &Graph) -> u64 {
    (0..g.n())
        .filter(|&v| g.adjacency()[v] != 0)
        .fold(0, |acc, v| acc | 1 << v)
}

/// Branches on the lowest available vertex: either it stays unmatched or it is
/// matched to one of its available neighbours. For induced matchings, picking
/// `{v, u}` also removes the closed neighbourhoods of both endpoints.
fn matching_rec(adj: &[u64], avail: u64, size: usize, best: &mut usize, induced: bool) {
    // drop vertices with no available neighbour; they can never be matched
    let mut avail = avail;
    loop {
        let dead = BitIter(avail).fold(0u64, |acc, v| {
            if adj[v] & avail == 0 {
                acc | 1 << v
            } else {
                acc
            }
        });
        if dead == 0 {
            break;
        }
        avail &= !dead;
    }
    if size + (avail.count_ones() as usize) / 2 <= *best {
        return;
    }
    if avail == 0 {
        *best = size;
        return;
    }
    let v = avail.trailing_zeros() as usize;
    for u in BitIter(adj[v] & avail) {
        let rest = if induced {
            avail & !(adj[v] | adj[u] | 1 << v | 1 << u)
        } else {
            avail & !(1 << v | 1 << u)
        };
        matching_rec(adj, rest, size + 1, best, induced);
    }
    matching_rec(adj, avail & !(1 << v), size, best, induced);
}

/// Size of a maximum independent set; equals the Krull dimension of `R/I(G)`.
pub fn independence_number(g: &Graph) -> usize {
    let mut best = 0;
    independence_rec(g.adjacency(), low_bits(g.n()), 0, &mut best);
    best
}

fn independence_rec(adj: &[u64], cand: u64, size: usize, best: &mut usize) {
    if size + cand.count_ones() as usize <= *best {
        return;
    }
    if cand == 0 {
        *best = size;
        return;
    }
    let v = cand.trailing_zeros() as usize;
    independence_rec(adj, cand & !(adj[v] | 1 << v), size + 1, best);
    if adj[v] & cand != 0 {
        independence_rec(adj, cand & !(1 << v), size, best);
    }
}

/// The independent set of size exactly `k` whose sorted vertex list is
/// lexicographically smallest.
pub fn max_independent_set_below(g: &Graph, k: usize) -> Result<VertexSet> {
    fn search(adj: &[u64], cand: u64, need: usize, chosen: u64) -> Option<u64> {
        if need == 0 {
            return Some(chosen);
        }
        let mut rest = cand;
        while rest.count_ones() as usize >= need {
            let v = rest.trailing_zeros() as usize;
            rest &= !(1 << v);
            let next = rest & !adj[v];
            if let Some(found) = search(adj, next, need - 1, chosen | 1 << v) {
                return Some(found);
            }
        }
        None
    }
    search(g.adjacency(), low_bits(g.n()), k, 0)
        .map(VertexSet)
        .ok_or_else(|| Error::NoIndependentSet {
            k,
            alpha: independence_number(g),
        })
}
