//! Contact graphs and clique counts.
//!
//! Touching triplets and quadruples of a unit-ball packing are exactly the
//! triangles and 4-cliques of its contact graph. Counting walks a degeneracy
//! order: each vertex keeps only its later neighbors ("forward" lists), so a
//! clique is discovered once from its earliest vertex. Degrees in a packing
//! are at most 12, which makes both counts linear in the edge count.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::euclid::{distance, Packing, TolerancePolicy, CONTACT_DISTANCE};

/// Kissing number in three dimensions.
pub const MAX_CONTACTS: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContactGraph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ContactCounts {
    pub n: usize,
    pub pairs: usize,
    pub triplets: usize,
    pub quadruples: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Clique {
    Triangle,
    Tetrahedron,
}

impl ContactGraph {
    /// Simple undirected graph from an edge list; duplicates collapse.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut adjacency = vec![Vec::new(); n];
        for (i, j) in edges {
            if i >= n || j >= n {
                return Err(Error::IndexOutOfRange {
                    index: i.max(j),
                    len: n,
                });
            }
            if i == j {
                return Err(Error::Parameter(format!("self-loop at vertex {i}")));
            }
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        let edge_count = adjacency.iter().map(Vec::len).sum::<usize>() / 2;
        Ok(Self {
            adjacency,
            edge_count,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].binary_search(&j).is_ok()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, adj)| adj.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
    }

    /// `hist[d]` is the number of vertices of degree `d`.
    pub fn degree_histogram(&self) -> Vec<usize> {
        let mut hist = vec![0; self.max_degree() + 1];
        for adj in &self.adjacency {
            hist[adj.len()] += 1;
        }
        hist
    }

    /// Vertex order produced by repeatedly removing a vertex of minimum
    /// remaining degree; ties go to the smaller index.
    pub fn degeneracy_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut degree: Vec<usize> = self.adjacency.iter().map(Vec::len).collect();
        let max = degree.iter().copied().max().unwrap_or(0);
        let mut buckets: Vec<std::collections::BTreeSet<usize>> = vec![Default::default(); max + 1];
        for (v, &d) in degree.iter().enumerate() {
            buckets[d].insert(v);
        }
        let mut removed = vec![false; n];
        let mut order = Vec::with_capacity(n);
        let mut low = 0;
        for _ in 0..n {
            while buckets[low].is_empty() {
                low += 1;
            }
            let v = buckets[low].pop_first().expect("non-empty bucket");
            removed[v] = true;
            order.push(v);
            for &u in &self.adjacency[v] {
                if !removed[u] {
                    buckets[degree[u]].remove(&u);
                    degree[u] -= 1;
                    buckets[degree[u]].insert(u);
                    low = low.min(degree[u]);
                }
            }
        }
        order
    }

    /// Forward adjacency with respect to the degeneracy order, each list
    /// sorted by vertex index.
    fn forward_lists(&self) -> Vec<Vec<usize>> {
        let order = self.degeneracy_order();
        let mut rank = vec![0; self.n()];
        for (r, &v) in order.iter().enumerate() {
            rank[v] = r;
        }
        self.adjacency
            .iter()
            .enumerate()
            .map(|(v, adj)| adj.iter().copied().filter(|&u| rank[u] > rank[v]).collect())
            .collect()
    }

    pub fn count_triangles(&self) -> usize {
        let fwd = self.forward_lists();
        let mut total = 0;
        for out in &fwd {
            for &u in out {
                total += intersection_len(out, &fwd[u]);
            }
        }
        total
    }

    pub fn count_k4(&self) -> usize {
        let fwd = self.forward_lists();
        let mut total = 0;
        let mut common = Vec::new();
        for out in &fwd {
            for &u in out {
                intersect_into(out, &fwd[u], &mut common);
                for &w in &common {
                    total += intersection_len(&common, &fwd[w]);
                }
            }
        }
        total
    }

    /// Number of triangles through each vertex.
    pub fn triangles_per_vertex(&self) -> Vec<usize> {
        (0..self.n())
            .map(|v| {
                let nb = &self.adjacency[v];
                nb.iter()
                    .map(|&u| intersection_len(nb, &self.adjacency[u]))
                    .sum::<usize>()
                    / 2
            })
            .collect()
    }

    /// Number of 4-cliques through each vertex: the triangles of the
    /// subgraph induced on its neighborhood.
    pub fn k4_per_vertex(&self) -> Vec<usize> {
        let mut common = Vec::new();
        let mut deeper = Vec::new();
        (0..self.n())
            .map(|v| {
                let nb = &self.adjacency[v];
                let mut count = 0;
                for &u in nb.iter() {
                    intersect_into(nb, &self.adjacency[u], &mut common);
                    for &w in common.iter().filter(|&&w| w > u) {
                        intersect_into(&common, &self.adjacency[w], &mut deeper);
                        count += deeper.iter().filter(|&&x| x > w).count();
                    }
                }
                count
            })
            .collect()
    }

    /// Largest number of triangles (or 4-cliques) sharing a single vertex.
    pub fn per_vertex_max(&self, clique: Clique) -> usize {
        let per = match clique {
            Clique::Triangle => self.triangles_per_vertex(),
            Clique::Tetrahedron => self.k4_per_vertex(),
        };
        per.into_iter().max().unwrap_or(0)
    }
}

fn intersection_len(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut n) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                n += 1;
                i += 1;
                j += 1;
            }
        }
    }
    n
}

fn intersect_into(a: &[usize], b: &[usize], out: &mut Vec<usize>) {
    out.clear();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
}

/// Contact graph of a packing: `i ~ j` iff `|dist(c_i, c_j) - 2| <= distance_eps`.
pub fn build_contact_graph(p: &Packing, tol: &TolerancePolicy) -> Result<ContactGraph> {
    let c = p.centers();
    let mut edges = Vec::new();
    for i in 0..c.len() {
        for j in i + 1..c.len() {
            if (distance(c[i], c[j]) - CONTACT_DISTANCE).abs() <= tol.distance_eps {
                edges.push((i, j));
            }
        }
    }
    let g = ContactGraph::from_edges(c.len(), edges)?;
    if let Some(vertex) = (0..g.n()).find(|&v| g.degree(v) > MAX_CONTACTS) {
        return Err(Error::DegreeOverflow {
            vertex,
            degree: g.degree(vertex),
        });
    }
    Ok(g)
}

pub fn count_contacts(p: &Packing, tol: &TolerancePolicy) -> Result<ContactCounts> {
    let g = build_contact_graph(p, tol)?;
    Ok(ContactCounts {
        n: g.n(),
        pairs: g.edge_count(),
        triplets: g.count_triangles(),
        quadruples: g.count_k4(),
    })
}
