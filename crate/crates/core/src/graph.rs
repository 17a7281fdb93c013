//! Undirected simple graphs in compressed sparse row form.

use crate::error::{Error, Result};

/// An undirected simple graph. Both directions of every edge are stored and
/// each neighbor list is sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    offsets: Vec<usize>,
    targets: Vec<usize>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            offsets: vec![0; n + 1],
            targets: Vec::new(),
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut edges = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Self::from_canonical(n, &edges)
    }

    /// Build from an arbitrary edge iterator. Self-loops are dropped and
    /// repeated pairs collapse to one edge.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut canon = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::param(format!(
                    "edge ({u}, {v}) references a node outside 0..{n}"
                )));
            }
            if u != v {
                canon.push((u.min(v), u.max(v)));
            }
        }
        canon.sort_unstable();
        canon.dedup();
        Ok(Self::from_canonical(n, &canon))
    }

    /// `edges` must be sorted, deduplicated, loop-free pairs with `u < v < n`.
    pub(crate) fn from_canonical(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut deg = vec![0usize; n];
        for &(u, v) in edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &deg {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut cursor = offsets[..n].to_vec();
        let mut targets = vec![0usize; 2 * edges.len()];
        // Lower neighbors of v arrive in increasing u, then upper neighbors
        // of u in increasing v, so every row ends up sorted.
        for &(u, v) in edges {
            targets[cursor[v]] = u;
            cursor[v] += 1;
        }
        for &(u, v) in edges {
            targets[cursor[u]] = v;
            cursor[u] += 1;
        }
        for i in 0..n {
            targets[offsets[i]..offsets[i + 1]].sort_unstable();
        }
        Self { offsets, targets }
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn m(&self) -> usize {
        self.targets.len() / 2
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n()).map(|i| self.degree(i)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|i| self.degree(i)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, i: usize) -> &[usize] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v))
        })
    }

    /// `y = A x`.
    pub fn adj_matvec(&self, x: &[f64], y: &mut [f64]) {
        for (i, yi) in y.iter_mut().enumerate() {
            *yi = self.neighbors(i).iter().map(|&j| x[j]).sum();
        }
    }

    /// Number of triangles, counted once each.
    pub fn triangle_count(&self) -> u64 {
        let mut count = 0u64;
        for u in 0..self.n() {
            let nu = self.neighbors(u);
            for &v in nu.iter().filter(|&&v| v > u) {
                // Sorted-list intersection restricted to w > v.
                let nv = self.neighbors(v);
                let (mut a, mut b) = (
                    nu.partition_point(|&w| w <= v),
                    nv.partition_point(|&w| w <= v),
                );
                while a < nu.len() && b < nv.len() {
                    match nu[a].cmp(&nv[b]) {
                        std::cmp::Ordering::Less => a += 1,
                        std::cmp::Ordering::Greater => b += 1,
                        std::cmp::Ordering::Equal => {
                            count += 1;
                            a += 1;
                            b += 1;
                        }
                    }
                }
            }
        }
        count
    }

    /// Subgraph induced by `nodes`; node `k` of the result is `nodes[k]`.
    pub fn induced_subgraph(&self, nodes: &[usize]) -> Self {
        let mut index = vec![usize::MAX; self.n()];
        for (k, &v) in nodes.iter().enumerate() {
            index[v] = k;
        }
        let mut edges = Vec::new();
        for (k, &v) in nodes.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = index[w];
                if j != usize::MAX && k < j {
                    edges.push((k, j));
                }
            }
        }
        edges.sort_unstable();
        Self::from_canonical(nodes.len(), &edges)
    }

    /// Relabel nodes so that old node `i` becomes `perm[i]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.n() {
            return Err(Error::param("permutation length differs from node count"));
        }
        Self::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Vertex-disjoint union; nodes of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Self {
        let shift = self.n();
        let edges: Vec<_> = self
            .edges()
            .chain(other.edges().map(|(u, v)| (u + shift, v + shift)))
            .collect();
        Self::from_canonical(shift + other.n(), &edges)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        let mut seen = vec![false; n];
        let mut comps = Vec::new();
        let mut stack = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            stack.push(s);
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &w in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    /// Largest connected component and the map from its nodes to original
    /// indices. Among equally large components the one holding the smallest
    /// original index wins.
    pub fn largest_connected_component(&self) -> (Graph, Vec<usize>) {
        let comps = self.components();
        let mut best: Option<&Vec<usize>> = None;
        for c in &comps {
            // Components arrive ordered by smallest member, so strict `>`
            // keeps the earliest among ties.
            if best.is_none_or(|b| c.len() > b.len()) {
                best = Some(c);
            }
        }
        match best {
            Some(c) => (self.induced_subgraph(c), c.clone()),
            None => (Graph::empty(0), Vec::new()),
        }
    }

    /// Dense row-major adjacency, for tests and small validation problems.
    pub fn to_dense(&self) -> Vec<f64> {
        let n = self.n();
        let mut a = vec![0.0; n * n];
        for (u, v) in self.edges() {
            a[u * n + v] = 1.0;
            a[v * n + u] = 1.0;
        }
        a
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3_pair() -> Graph {
        Graph::complete(3).disjoint_union(&Graph::complete(3))
    }

    #[test]
    fn degrees_of_small_graphs() {
        assert_eq!(Graph::empty(4).degrees(), vec![0; 4]);
        assert_eq!(Graph::complete(4).degrees(), vec![3; 4]);
        assert_eq!(k3_pair().degrees(), vec![2; 6]);
        assert_eq!(Graph::complete(4).m(), 6);
    }

    #[test]
    fn from_edges_normalizes() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (2, 2), (2, 1)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert!(Graph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn lcc_tie_and_size_rules() {
        let k4 = Graph::complete(4);
        let (h, map) = k4.largest_connected_component();
        assert_eq!(h, k4);
        assert_eq!(map, vec![0, 1, 2, 3]);

        let edge = Graph::from_edges(2, [(0, 1)]).unwrap();
        let g = edge.disjoint_union(&Graph::complete(3));
        let (h, map) = g.largest_connected_component();
        assert_eq!(h, Graph::complete(3));
        assert_eq!(map, vec![2, 3, 4]);

        // Interleave two triangles so the tie rule is exercised on indices.
        let g = Graph::from_edges(6, [(1, 3), (3, 5), (1, 5), (0, 2), (2, 4), (0, 4)]).unwrap();
        let (_, map) = g.largest_connected_component();
        assert_eq!(map, vec![0, 2, 4]);

        let (h, map) = Graph::empty(0).largest_connected_component();
        assert_eq!(h.n(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn triangles_match_brute_force() {
        let g = Graph::from_edges(
            6,
            [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4), (4, 5), (0, 5), (1, 3)],
        )
        .unwrap();
        let mut brute = 0;
        for a in 0..6 {
            for b in a + 1..6 {
                for c in b + 1..6 {
                    if g.has_edge(a, b) && g.has_edge(b, c) && g.has_edge(a, c) {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(g.triangle_count(), brute);
        assert_eq!(Graph::complete(4).triangle_count(), 4);
    }
}
