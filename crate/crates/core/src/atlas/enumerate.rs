//! Connected graphs up to isomorphism, by vertex extension plus canonical dedup.
//!
//! Every connected graph on `n` vertices has a vertex whose removal leaves it
//! connected (a leaf of a spanning tree), so extending each connected graph on
//! `n - 1` vertices by a new vertex with every nonempty neighbourhood reaches
//! every class. Classes are keyed by the packed upper triangle of their
//! canonical adjacency and emitted in increasing key order.

use std::collections::HashSet;
use std::io::BufRead;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{canon::canonical_rows, Graph};

/// Largest `n` the built-in generator handles.
pub const INTERNAL_LIMIT: usize = 9;

fn pack(rows: &[u64]) -> u128 {
    let mut key = 0u128;
    for (j, &row) in rows.iter().enumerate().skip(1) {
        for i in 0..j {
            key = key << 1 | (row >> i & 1) as u128;
        }
    }
    key
}

fn unpack(n: usize, key: u128) -> Graph {
    let mut adj = vec![0u64; n];
    let total = n * n.saturating_sub(1) / 2;
    let mut k = total;
    for j in 1..n {
        for i in 0..j {
            k -= 1;
            if key >> k & 1 == 1 {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
        }
    }
    Graph::from_adjacency_unchecked(adj)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labelling, in a fixed order.
pub fn enumerate_connected(n: usize) -> Result<Vec<Graph>> {
    if n > INTERNAL_LIMIT {
        return Err(Error::TooLarge {
            what: "the built-in graph generator",
            n,
            limit: INTERNAL_LIMIT,
        });
    }
    let mut level = vec![Graph::empty(n.min(1))?];
    for k in 2..=n {
        level = extend(&level, k);
    }
    Ok(level)
}

fn extend(prev: &[Graph], k: usize) -> Vec<Graph> {
    let new = k - 1;
    let keys: HashSet<u128> = prev
        .par_iter()
        .fold(HashSet::new, |mut acc, g| {
            let mut adj = g.adjacency().to_vec();
            adj.push(0);
            for nbrs in 1u64..1 << new {
                for (v, row) in adj.iter_mut().enumerate().take(new) {
                    *row = g.adjacency()[v] | (nbrs >> v & 1) << new;
                }
                adj[new] = nbrs;
                acc.insert(pack(&canonical_rows(&adj).0));
            }
            acc
        })
        .reduce(HashSet::new, |mut a, b| {
            if a.len() < b.len() {
                return b.into_iter().chain(a).collect();
            }
            a.extend(b);
            a
        });
    let mut keys: Vec<u128> = keys.into_iter().collect();
    keys.sort_unstable();
    keys.into_iter().map(|key| unpack(k, key)).collect()
}

/// Reads newline-delimited graph6, skipping blank lines; errors carry the
/// 1-based line number.
pub fn read_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = Result<Graph>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(Error::from(e))),
            Ok(l) if l.trim().is_empty() => None,
            Ok(l) => Some(Graph::from_graph6(&l).map_err(|e| Error::AtLine {
                line: i + 1,
                source: Box::new(e),
            })),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::canonical_form;
    use std::collections::BTreeSet;

    #[test]
    fn known_counts() {
        // OEIS A001349
        let expected = [1, 1, 1, 2, 6, 21, 112];
        for (n, &count) in expected.iter().enumerate() {
            assert_eq!(enumerate_connected(n).unwrap().len(), count, "n = {n}");
        }
    }

    #[test]
    fn four_vertex_graphs_by_hand() {
        // P4, star, C4, paw, diamond, K4
        let mut edge_counts: Vec<usize> = enumerate_connected(4)
            .unwrap()
            .iter()
            .map(Graph::edge_count)
            .collect();
        edge_counts.sort_unstable();
        assert_eq!(edge_counts, vec![3, 3, 4, 4, 5, 6]);
    }

    #[test]
    fn brute_force_agrees_on_five_vertices() {
        let pairs: Vec<(usize, usize)> = (0..5)
            .flat_map(|u| (u + 1..5).map(move |v| (u, v)))
            .collect();
        let mut brute = BTreeSet::new();
        for mask in 0u32..1 << pairs.len() {
            let e: Vec<_> = (0..pairs.len())
                .filter(|&i| mask >> i & 1 == 1)
                .map(|i| pairs[i])
                .collect();
            let g = Graph::from_edge_list(5, &e).unwrap();
            if g.is_connected() {
                brute.insert(canonical_form(&g));
            }
        }
        let generated: BTreeSet<_> = enumerate_connected(5)
            .unwrap()
            .iter()
            .map(canonical_form)
            .collect();
        assert_eq!(generated, brute);
    }

    #[test]
    fn output_is_deterministic_and_connected() {
        let a = enumerate_connected(6).unwrap();
        let b = enumerate_connected(6).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(Graph::is_connected));
    }

    #[test]
    fn pack_round_trip() {
        for g in enumerate_connected(5).unwrap() {
            assert_eq!(unpack(5, pack(g.adjacency())), g);
        }
    }

    #[test]
    fn limit() {
        assert!(matches!(
            enumerate_connected(INTERNAL_LIMIT + 1),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn graph6_stream() {
        let text = "A_\n\nBw\nbad\n";
        let out: Vec<_> = read_graph6(text.as_bytes()).collect();
        assert_eq!(out.len(), 3);
        assert!(out[0].is_ok() && out[1].is_ok());
        assert!(matches!(out[2], Err(Error::AtLine { line: 4, .. })));
    }
}
