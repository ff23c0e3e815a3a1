//! Bit-packed simple undirected graphs on up to [`MAX_N`](crate::MAX_N)
//! vertices.
//!
//! `adj[i]` is the neighbour bitset of vertex `i`; matrices are symmetric
//! with zero diagonal. Graphs are immutable values: every operation returns
//! a fresh graph.

use crate::error::{Error, Result};
use crate::MAX_N;
use std::fmt;

/// A simple undirected graph with adjacency rows packed into `u32`s.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Graph {
    n: u8,
    adj: [u32; MAX_N],
}

impl Graph {
    /// The edgeless graph on `n` vertices (1 ≤ n ≤ MAX_N).
    pub fn empty(n: usize) -> Result<Graph> {
        if n == 0 || n > MAX_N {
            return Err(Error::LengthOutOfRange(n));
        }
        Ok(Graph { n: n as u8, adj: [0; MAX_N] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at vertex {u}")));
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph directly from adjacency rows. Symmetry and zero
    /// diagonal are enforced.
    pub fn from_rows(n: usize, rows: &[u32]) -> Result<Graph> {
        if n == 0 || n > MAX_N || rows.len() != n {
            return Err(Error::LengthOutOfRange(n));
        }
        let mask = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut g = Graph::empty(n)?;
        for (i, &r) in rows.iter().enumerate() {
            if r & !mask != 0 {
                return Err(Error::Invalid(format!("row {i} has bits beyond n")));
            }
            if r & (1 << i) != 0 {
                return Err(Error::Invalid(format!("self-loop at vertex {i}")));
            }
            g.adj[i] = r;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                if (g.adj[i] >> j) & 1 != (g.adj[j] >> i) & 1 {
                    return Err(Error::Invalid(format!("adjacency not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(g)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u32 {
        debug_assert!(v < self.n());
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        debug_assert!(u < self.n() && v < self.n());
        self.adj[u] & (1 << v) != 0
    }

    #[inline]
    pub fn degree(&self, v: usize) -> u32 {
        self.adj[v].count_ones()
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n()).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> u32 {
        (0..self.n()).map(|v| self.degree(v)).min().unwrap()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v) as usize).sum::<usize>() / 2
    }

    /// Local complementation at `v`: complement the induced subgraph on the
    /// neighbourhood of `v`. An involution: `g.local_complement(v)` twice
    /// returns `g`.
    pub fn local_complement(&self, v: usize) -> Result<Graph> {
        if v >= self.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n() });
        }
        let nv = self.adj[v];
        let mut out = *self;
        let mut rest = nv;
        while rest != 0 {
            let u = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            out.adj[u] ^= nv & !(1 << u);
        }
        debug_assert!(out.check_invariants());
        Ok(out)
    }

    /// Relabels vertices: `perm[i]` is the new name of vertex `i`.
    pub fn permuted(&self, perm: &[u8]) -> Graph {
        let n = self.n();
        debug_assert_eq!(perm.len(), n);
        let mut out = Graph { n: self.n, adj: [0; MAX_N] };
        for i in 0..n {
            let mut row = self.adj[i];
            let mut new_row = 0u32;
            while row != 0 {
                let j = row.trailing_zeros() as usize;
                row &= row - 1;
                new_row |= 1 << perm[j];
            }
            out.adj[perm[i] as usize] = new_row;
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let mut reached = 1u32;
        loop {
            let mut next = reached;
            let mut rest = reached;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                next |= self.adj[v];
            }
            if next == reached {
                return reached == full;
            }
            reached = next;
        }
    }

    /// True when every vertex has odd degree. Graph codes of anti-Eulerian
    /// graphs are exactly the Type II codes.
    pub fn is_anti_eulerian(&self) -> bool {
        (0..self.n()).all(|v| self.degree(v) % 2 == 1)
    }

    /// All 2^n − 1 one-vertex extensions: a new vertex joined to every
    /// nonempty subset of the old vertices. Extensions of a connected graph
    /// are connected.
    pub fn extensions(&self) -> Result<Vec<Graph>> {
        let n = self.n();
        if n + 1 > MAX_N {
            return Err(Error::LengthOutOfRange(n + 1));
        }
        let mut out = Vec::with_capacity((1usize << n) - 1);
        for subset in 1u32..(1u32 << n) {
            out.push(self.extended(subset));
        }
        Ok(out)
    }

    /// A single extension: new vertex adjacent to `subset`.
    pub fn extended(&self, subset: u32) -> Graph {
        let n = self.n();
        debug_assert!(n + 1 <= MAX_N);
        debug_assert_eq!(subset >> n, 0);
        let mut g = Graph { n: self.n + 1, adj: self.adj };
        g.adj[n] = subset;
        let mut rest = subset;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            g.adj[v] |= 1 << n;
        }
        g
    }

    /// Appends one vertex joined to exactly the even-degree vertices, then
    /// accepts the result only if it is a connected anti-Eulerian graph.
    /// `None` is the rejection.
    pub fn anti_eulerian_closure(&self) -> Option<Graph> {
        if self.n() + 1 > MAX_N {
            return None;
        }
        let mut evens = 0u32;
        for v in 0..self.n() {
            if self.degree(v) % 2 == 0 {
                evens |= 1 << v;
            }
        }
        let g = self.extended(evens);
        if g.is_connected() && g.is_anti_eulerian() {
            // Handshake parity: with an odd-order input the appended vertex
            // always ends up with odd degree.
            debug_assert!(g.degree(self.n()) % 2 == 1);
            Some(g)
        } else {
            None
        }
    }

    /// Parses the `<n>:<bits>` format: upper triangle row-major, pairs
    /// (0,1), (0,2), …, (0,n−1), (1,2), …, (n−2,n−1).
    pub fn parse(text: &str) -> Result<Graph> {
        let (head, bits) = text
            .split_once(':')
            .ok_or_else(|| Error::GraphParse(format!("missing ':' in {text:?}")))?;
        let n: usize = head
            .parse()
            .map_err(|_| Error::GraphParse(format!("malformed vertex count {head:?}")))?;
        if n == 0 || n > MAX_N {
            return Err(Error::GraphParse(format!("vertex count {n} out of range")));
        }
        let expect = n * (n - 1) / 2;
        if bits.len() != expect {
            return Err(Error::GraphParse(format!(
                "expected {expect} edge bits for n = {n}, got {}",
                bits.len()
            )));
        }
        let mut g = Graph::empty(n)?;
        let mut it = bits.chars();
        for i in 0..n {
            for j in (i + 1)..n {
                match it.next().unwrap() {
                    '0' => {}
                    '1' => {
                        g.adj[i] |= 1 << j;
                        g.adj[j] |= 1 << i;
                    }
                    c => return Err(Error::GraphParse(format!("illegal character {c:?}"))),
                }
            }
        }
        Ok(g)
    }

    #[cfg(debug_assertions)]
    fn check_invariants(&self) -> bool {
        let n = self.n();
        let mask = (1u32 << n) - 1;
        for i in 0..n {
            if self.adj[i] & !mask != 0 || self.adj[i] & (1 << i) != 0 {
                return false;
            }
            for j in 0..n {
                if (self.adj[i] >> j) & 1 != (self.adj[j] >> i) & 1 {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:", self.n())?;
        for i in 0..self.n() {
            for j in (i + 1)..self.n() {
                write!(f, "{}", if self.has_edge(i, j) { '1' } else { '0' })?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({self})")
    }
}


#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;

    #[test]
    fn parse_and_format() {
        let k2 = Graph::parse("2:1").unwrap();
        assert!(k2.has_edge(0, 1));
        assert_eq!(k2.to_string(), "2:1");

        let p3 = Graph::parse("3:101").unwrap();
        assert!(p3.has_edge(0, 1) && p3.has_edge(1, 2) && !p3.has_edge(0, 2));

        // Wheel round-trip; bit string derived from the edge list.
        let wheel = hexacode_wheel();
        assert_eq!(wheel.to_string(), "6:010111101001111");
        assert_eq!(Graph::parse(&wheel.to_string()).unwrap(), wheel);

        // Single vertex: zero edge bits.
        let k1 = Graph::parse("1:").unwrap();
        assert_eq!(k1.n(), 1);
        assert_eq!(k1.to_string(), "1:");
    }

    #[test]
    fn parse_errors() {
        assert!(Graph::parse("3").is_err()); // missing colon
        assert!(Graph::parse("x:1").is_err()); // malformed header
        assert!(Graph::parse("3:10").is_err()); // wrong bit count
        assert!(Graph::parse("3:1011").is_err());
        assert!(Graph::parse("3:1x1").is_err()); // illegal character
        assert!(Graph::parse("0:").is_err());
        assert!(Graph::parse("21:").is_err());
    }

    #[test]
    fn local_complement_examples() {
        // Vertex 0 with neighbourhood {1,2,3} carrying edges {1,2},{1,3}:
        // after LC at 0 the edges among the neighbourhood become {2,3}.
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let h = g.local_complement(0).unwrap();
        let expect = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (2, 3)]).unwrap();
        assert_eq!(h, expect);
        assert_eq!(h.local_complement(0).unwrap(), g);

        // K2 is fixed by LC at either vertex.
        let k2 = Graph::parse("2:1").unwrap();
        assert_eq!(k2.local_complement(0).unwrap(), k2);
        assert_eq!(k2.local_complement(1).unwrap(), k2);

        // Star center: complements the empty leaf set into a complete graph.
        assert_eq!(star(5).local_complement(0).unwrap(), complete(5));

        assert!(k2.local_complement(2).is_err());
    }

    #[test]
    fn lc_is_involution_exhaustive_n5() {
        for n in 2..=5usize {
            let pairs = n * (n - 1) / 2;
            for code in 0u32..(1 << pairs) {
                let g = graph_from_code(n, code);
                for v in 0..n {
                    let h = g.local_complement(v).unwrap();
                    assert_eq!(h.local_complement(v).unwrap(), g);
                }
            }
        }
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

    #[test]
    fn connectivity_and_degrees() {
        assert!(path(4).is_connected());
        assert!(!Graph::from_edges(3, &[(0, 1)]).unwrap().is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());

        let wheel = hexacode_wheel();
        let mut degs = wheel.degrees();
        degs.sort();
        assert_eq!(degs, vec![3, 3, 3, 3, 3, 5]);
        assert!(wheel.is_anti_eulerian());

        assert_eq!(path(3).degrees(), vec![1, 2, 1]);
        assert!(!path(3).is_anti_eulerian());
        assert!(Graph::parse("2:1").unwrap().is_anti_eulerian());
    }

    #[test]
    fn extensions_counts() {
        let k1 = Graph::empty(1).unwrap();
        let ext = k1.extensions().unwrap();
        assert_eq!(ext.len(), 1);
        assert_eq!(ext[0], Graph::parse("2:1").unwrap());

        let g = path(4);
        let ext = g.extensions().unwrap();
        assert_eq!(ext.len(), 15);
        assert!(ext.iter().all(|e| e.is_connected() && e.n() == 5));
    }

    #[test]
    fn anti_eulerian_closure_examples() {
        // K1: degree 0 is even, so the new vertex joins it: K2, accepted.
        let k1 = Graph::empty(1).unwrap();
        assert_eq!(k1.anti_eulerian_closure().unwrap(), Graph::parse("2:1").unwrap());

        // P3 (degrees 1,2,1): new vertex joined to the middle one only.
        let closed = path(3).anti_eulerian_closure().unwrap();
        let mut degs = closed.degrees();
        degs.sort();
        assert_eq!(degs, vec![1, 1, 1, 3]);
        assert!(closed.is_anti_eulerian() && closed.is_connected());

        // K2 has no even-degree vertex: isolated new vertex, rejected.
        assert!(Graph::parse("2:1").unwrap().anti_eulerian_closure().is_none());
    }

    #[test]
    fn permuted_relabels() {
        let p3 = path(3);
        let g = p3.permuted(&[1, 0, 2]); // path 1-0-2
        assert!(g.has_edge(0, 1) && g.has_edge(0, 2) && !g.has_edge(1, 2));
    }
}
