//! Immutable r-uniform hypergraphs on labeled vertices `0..n`.
//!
//! Edges are r-element vertex subsets stored as bitmasks, kept
//! duplicate-free and sorted in lexicographic order on their ascending label
//! sequences, so the edge list is a pure function of the edge set and
//! serialization is deterministic. All operations return new values; nothing
//! is mutated in place, so values can be shared freely across threads.

use std::fmt;

use serde::de::{self, Deserializer};
use serde::ser::{SerializeStruct, Serializer};
use serde::{Deserialize, Serialize};

use crate::bounds::{binom_usize, block_decomposition};
use crate::error::{HgError, Result};
use crate::set::{bit, full_mask, k_subsets, lex_cmp_masks, VertexSet, MAX_VERTICES};

/// An r-uniform hypergraph. Vertices are the labels `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    /// Sorted lexicographically on ascending label sequences, duplicate-free.
    edges: Vec<u64>,
}

/// A list of pairwise-disjoint nonempty vertex sets, the parts of a
/// crossing-edge query.
#[derive(Debug, Clone)]
pub struct CrossingQuery {
    parts: Vec<VertexSet>,
}

impl CrossingQuery {
    pub fn new(parts: Vec<VertexSet>) -> Result<CrossingQuery> {
        let mut seen = VertexSet::EMPTY;
        for &p in &parts {
            if p.is_empty() {
                return Err(HgError::EmptyPart);
            }
            if seen.intersects(p) {
                return Err(HgError::OverlappingParts);
            }
            seen = seen | p;
        }
        Ok(CrossingQuery { parts })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    fn union(&self) -> VertexSet {
        self.parts
            .iter()
            .fold(VertexSet::EMPTY, |acc, &p| acc | p)
    }
}

fn validate_params(n: usize, r: usize) -> Result<()> {
    if r < 2 {
        return Err(HgError::UniformityRange(r));
    }
    if n > MAX_VERTICES {
        return Err(HgError::TooManyVertices(n, MAX_VERTICES));
    }
    Ok(())
}

impl Hypergraph {
    /// Build from explicit edges; validates sizes, ranges, and duplicates.
    pub fn new<I: IntoIterator<Item = VertexSet>>(n: usize, r: usize, edges: I) -> Result<Hypergraph> {
        validate_params(n, r)?;
        let full = full_mask(n);
        let mut masks: Vec<u64> = Vec::new();
        for e in edges {
            if e.mask() & !full != 0 {
                let bad = (e - VertexSet::full(n)).min_label().unwrap();
                return Err(HgError::VertexOutOfRange { vertex: bad, n });
            }
            if e.len() != r {
                return Err(HgError::EdgeSize {
                    edge: e.to_vec(),
                    got: e.len(),
                    expected: r,
                });
            }
            masks.push(e.mask());
        }
        masks.sort_unstable_by(|a, b| lex_cmp_masks(*a, *b));
        for w in masks.windows(2) {
            if w[0] == w[1] {
                return Err(HgError::DuplicateEdge {
                    edge: VertexSet(w[0]).to_vec(),
                });
            }
        }
        Ok(Hypergraph { n, r, edges: masks })
    }

    /// Convenience constructor from label slices.
    pub fn from_edge_lists(n: usize, r: usize, edges: &[Vec<usize>]) -> Result<Hypergraph> {
        let sets = edges
            .iter()
            .map(|e| {
                let s = VertexSet::from_labels(e.iter().copied())?;
                if s.len() != e.len() {
                    return Err(HgError::DuplicateEdge { edge: e.clone() });
                }
                Ok(s)
            })
            .collect::<Result<Vec<_>>>()?;
        Hypergraph::new(n, r, sets)
    }

    /// The edgeless hypergraph on `n` vertices.
    pub fn empty(n: usize, r: usize) -> Result<Hypergraph> {
        validate_params(n, r)?;
        Ok(Hypergraph { n, r, edges: Vec::new() })
    }

    /// The complete r-uniform hypergraph: all r-subsets of `0..n`
    /// (edgeless when `n < r`).
    pub fn complete(n: usize, r: usize) -> Result<Hypergraph> {
        validate_params(n, r)?;
        Ok(Hypergraph {
            n,
            r,
            edges: k_subsets(full_mask(n), r),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().map(|&m| VertexSet(m))
    }

    pub(crate) fn edge_masks(&self) -> &[u64] {
        &self.edges
    }

    pub fn contains_edge(&self, e: VertexSet) -> bool {
        self.edges
            .binary_search_by(|probe| lex_cmp_masks(*probe, e.mask()))
            .is_ok()
    }

    fn check_edge(&self, e: VertexSet) -> Result<()> {
        if let Some(bad) = (e - self.vertex_set()).min_label() {
            return Err(HgError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        if e.len() != self.r {
            return Err(HgError::EdgeSize {
                edge: e.to_vec(),
                got: e.len(),
                expected: self.r,
            });
        }
        Ok(())
    }

    /// Value with `e` added. `e` must be a fresh r-subset of the vertex set.
    pub fn add_edge(&self, e: VertexSet) -> Result<Hypergraph> {
        self.check_edge(e)?;
        match self
            .edges
            .binary_search_by(|probe| lex_cmp_masks(*probe, e.mask()))
        {
            Ok(_) => Err(HgError::DuplicateEdge { edge: e.to_vec() }),
            Err(pos) => {
                let mut edges = self.edges.clone();
                edges.insert(pos, e.mask());
                Ok(Hypergraph { n: self.n, r: self.r, edges })
            }
        }
    }

    /// Value with `e` removed. `e` must be present.
    pub fn remove_edge(&self, e: VertexSet) -> Result<Hypergraph> {
        self.check_edge(e)?;
        match self
            .edges
            .binary_search_by(|probe| lex_cmp_masks(*probe, e.mask()))
        {
            Err(_) => Err(HgError::MissingEdge { edge: e.to_vec() }),
            Ok(pos) => {
                let mut edges = self.edges.clone();
                edges.remove(pos);
                Ok(Hypergraph { n: self.n, r: self.r, edges })
            }
        }
    }

    /// All r-subsets of the vertex set that are not edges, in canonical order.
    pub fn missing_edges(&self) -> Vec<VertexSet> {
        let universe = k_subsets(full_mask(self.n), self.r);
        let mut out = Vec::with_capacity(universe.len() - self.edges.len());
        let mut i = 0;
        for m in universe {
            if i < self.edges.len() && self.edges[i] == m {
                i += 1;
            } else {
                out.push(VertexSet(m));
            }
        }
        out
    }

    /// Complement within the complete r-uniform hypergraph on the same
    /// vertex set.
    pub fn complement(&self) -> Hypergraph {
        Hypergraph {
            n: self.n,
            r: self.r,
            edges: self.missing_edges().iter().map(|e| e.mask()).collect(),
        }
    }

    /// Union on a shared label space; the vertex set is `0..max(n1, n2)`.
    pub fn union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return Err(HgError::UniformityMismatch(self.r, other.r));
        }
        let mut edges = self.edges.clone();
        edges.extend_from_slice(&other.edges);
        edges.sort_unstable_by(|a, b| lex_cmp_masks(*a, *b));
        edges.dedup();
        Ok(Hypergraph {
            n: self.n.max(other.n),
            r: self.r,
            edges,
        })
    }

    /// Union after relabeling `other` by the offset `self.n()`, so the two
    /// operands occupy disjoint label ranges `0..n1` and `n1..n1+n2`.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<Hypergraph> {
        if self.r != other.r {
            return Err(HgError::UniformityMismatch(self.r, other.r));
        }
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(HgError::TooManyVertices(n, MAX_VERTICES));
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&m| m << self.n));
        edges.sort_unstable_by(|a, b| lex_cmp_masks(*a, *b));
        Ok(Hypergraph { n, r: self.r, edges })
    }

    /// r-join: the disjoint union (second operand relabeled by `self.n()`)
    /// plus every r-subset meeting both operands' vertex sets.
    pub fn r_join(&self, other: &Hypergraph) -> Result<Hypergraph> {
        let mut joined = self.disjoint_union(other)?;
        let left = full_mask(self.n);
        let right = full_mask(joined.n) & !left;
        let mut edges = joined.edges;
        edges.extend(
            k_subsets(full_mask(joined.n), self.r)
                .into_iter()
                .filter(|&m| m & left != 0 && m & right != 0),
        );
        edges.sort_unstable_by(|a, b| lex_cmp_masks(*a, *b));
        edges.dedup();
        joined.edges = edges;
        Ok(joined)
    }

    /// Lower-extremal family: a complete hub on the first `k` vertices,
    /// r-joined to an edgeless set of `n - k` vertices. Every edge meets the
    /// hub `{0, .., k-1}`.
    pub fn h_l(n: usize, k: usize, r: usize) -> Result<Hypergraph> {
        if k < 2 || r < 2 {
            return Err(HgError::ParameterRange("h_l needs k, r >= 2".into()));
        }
        if n < k + 1 {
            return Err(HgError::ParameterRange("h_l needs n >= k+1".into()));
        }
        Hypergraph::complete(k, r)?.r_join(&Hypergraph::empty(n - k, r)?)
    }

    /// Upper-extremal family: an edgeless hub on the first `k` vertices,
    /// r-joined to `p-1` complete blocks of size `k` plus one of size `q`,
    /// laid out consecutively from label `k`, where `n = p*k + q`,
    /// `1 <= q <= k`.
    pub fn h_u(n: usize, k: usize, r: usize) -> Result<Hypergraph> {
        if k < 2 || r < 2 {
            return Err(HgError::ParameterRange("h_u needs k, r >= 2".into()));
        }
        if n < 2 * k {
            return Err(HgError::ParameterRange("h_u needs n >= 2k".into()));
        }
        let (p, q) = block_decomposition(n, k);
        let mut blocks = Hypergraph::empty(0, r)?;
        for _ in 0..p - 1 {
            blocks = blocks.disjoint_union(&Hypergraph::complete(k, r)?)?;
        }
        blocks = blocks.disjoint_union(&Hypergraph::complete(q, r)?)?;
        Hypergraph::empty(k, r)?.r_join(&blocks)
    }

    /// Subhypergraph induced by `y`: vertex set `y` relabeled contiguously,
    /// keeping exactly the edges contained in `y`. The returned map sends each
    /// new label (its position) to the original label.
    pub fn induced(&self, y: VertexSet) -> Result<(Hypergraph, Vec<usize>)> {
        if let Some(bad) = (y - self.vertex_set()).min_label() {
            return Err(HgError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let labels = y.to_vec();
        let mask = y.mask();
        let mut edges = Vec::new();
        for &e in &self.edges {
            if e & !mask == 0 {
                let mut compressed = 0u64;
                let mut rest = e;
                while rest != 0 {
                    let v = rest.trailing_zeros() as usize;
                    rest &= rest - 1;
                    compressed |= bit((mask & (bit(v) - 1)).count_ones() as usize);
                }
                edges.push(compressed);
            }
        }
        edges.sort_unstable_by(|a, b| lex_cmp_masks(*a, *b));
        Ok((
            Hypergraph {
                n: labels.len(),
                r: self.r,
                edges,
            },
            labels,
        ))
    }

    /// Induced subhypergraph on the complement of `x` (deleting `x` kills
    /// every edge meeting it).
    pub fn delete_vertices(&self, x: VertexSet) -> Result<(Hypergraph, Vec<usize>)> {
        if let Some(bad) = (x - self.vertex_set()).min_label() {
            return Err(HgError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        self.induced(x.complement_in(self.n))
    }

    /// Connected components, isolated vertices as singleton blocks, sorted by
    /// smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        crate::kernel::components_within(&self.edges, full_mask(self.n))
            .into_iter()
            .map(VertexSet)
            .collect()
    }

    /// Number of edges containing `u`.
    pub fn degree(&self, u: usize) -> Result<usize> {
        if u >= self.n {
            return Err(HgError::VertexOutOfRange { vertex: u, n: self.n });
        }
        Ok(self.edges.iter().filter(|&&e| e & bit(u) != 0).count())
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n)
            .map(|u| self.degree(u).expect("in range"))
            .min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n)
            .map(|u| self.degree(u).expect("in range"))
            .max()
    }

    pub fn is_regular(&self) -> bool {
        self.min_degree() == self.max_degree()
    }

    /// Edges meeting every part of the query; with `exact`, additionally
    /// contained in the parts' union.
    pub fn crossing_edges(&self, q: &CrossingQuery, exact: bool) -> Result<Vec<VertexSet>> {
        if let Some(bad) = (q.union() - self.vertex_set()).min_label() {
            return Err(HgError::VertexOutOfRange { vertex: bad, n: self.n });
        }
        let union = q.union().mask();
        Ok(self
            .edges
            .iter()
            .filter(|&&e| {
                q.parts.iter().all(|p| e & p.mask() != 0) && (!exact || e & !union == 0)
            })
            .map(|&e| VertexSet(e))
            .collect())
    }

    /// Canonical total order for same-shape hypergraphs: edge count, then the
    /// edge sequences compared lexicographically. Used for deterministic
    /// extremal-witness tie-breaking.
    pub fn canonical_cmp(&self, other: &Hypergraph) -> std::cmp::Ordering {
        self.edges
            .len()
            .cmp(&other.edges.len())
            .then_with(|| {
                for (a, b) in self.edges.iter().zip(&other.edges) {
                    let ord = lex_cmp_masks(*a, *b);
                    if ord != std::cmp::Ordering::Equal {
                        return ord;
                    }
                }
                std::cmp::Ordering::Equal
            })
    }

    /// `C(n, r)`, the size of the edge universe.
    pub fn universe_size(&self) -> usize {
        binom_usize(self.n, self.r)
    }
}

impl fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Hypergraph(n={}, r={}, edges=[", self.n, self.r)?;
        for (i, e) in self.edges().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "])")
    }
}

impl Serialize for Hypergraph {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Hypergraph", 3)?;
        st.serialize_field("n", &self.n)?;
        st.serialize_field("r", &self.r)?;
        let edges: Vec<Vec<usize>> = self.edges().map(|e| e.to_vec()).collect();
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

impl<'de> Deserialize<'de> for Hypergraph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            n: usize,
            r: usize,
            edges: Vec<Vec<usize>>,
        }
        let raw = Raw::deserialize(deserializer)?;
        Hypergraph::from_edge_lists(raw.n, raw.r, &raw.edges).map_err(de::Error::custom)
    }
}
