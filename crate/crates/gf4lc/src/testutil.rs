//! Brute-force oracles shared by the unit tests. Everything here is
//! exponential on purpose: the point is independence from the fast paths.

use crate::graph::Graph;

/// All 2^(n(n-1)/2) labeled graphs on n vertices.
pub(crate) fn all_graphs(n: usize) -> Vec<Graph> {
    let pairs = n * (n - 1) / 2;
    (0u32..(1 << pairs)).map(|code| graph_from_code(n, code)).collect()
}

pub(crate) fn graph_from_code(n: usize, code: u32) -> Graph {
    let mut edges = Vec::new();
    let mut t = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if (code >> t) & 1 != 0 {
                edges.push((i, j));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub(crate) fn connected_graphs(n: usize) -> impl Iterator<Item = Graph> {
    all_graphs(n).into_iter().filter(|g| g.is_connected())
}

pub(crate) fn permutations(n: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur: Vec<u8> = (0..n as u8).collect();
    heap_permute(&mut cur, n, &mut out);
    out
}

fn heap_permute(arr: &mut Vec<u8>, k: usize, out: &mut Vec<Vec<u8>>) {
    if k == 1 {
        out.push(arr.clone());
        return;
    }
    for i in 0..k {
        heap_permute(arr, k - 1, out);
        if k % 2 == 0 {
            arr.swap(i, k - 1);
        } else {
            arr.swap(0, k - 1);
        }
    }
}

fn upper_bits(g: &Graph) -> u128 {
    let n = g.n();
    let mut bits = 0u128;
    let mut t = 0;
    for i in 0..n {
        for j in (i + 1)..n {
            if g.has_edge(i, j) {
                bits |= 1u128 << t;
            }
            t += 1;
        }
    }
    bits
}

/// Minimum upper-triangle bit pattern over all n! relabelings.
pub(crate) fn brute_canonical_bits(g: &Graph) -> u128 {
    permutations(g.n())
        .iter()
        .map(|p| upper_bits(&g.permuted(p)))
        .min()
        .unwrap()
}

pub(crate) fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() {
        return false;
    }
    permutations(g.n()).iter().any(|p| &g.permuted(p) == h)
}

pub(crate) fn brute_aut_count(g: &Graph) -> u64 {
    permutations(g.n())
        .iter()
        .filter(|p| &g.permuted(p) == g)
        .count() as u64
}
