//! Graph model and the graph families studied here.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{CurlError, Result};
use crate::seqcore::IntString;

pub mod io;
pub mod jaco;
pub mod rasta;
pub mod setgraph;
pub mod standard;

pub use jaco::{jaco, jaco_degree_sequence, JacoDegrees, JACO_REFERENCE_TABLE};
pub use rasta::{rasta, rasta_predicted_degree_string};
pub use setgraph::{set_graph, set_graph_compound_closed_form, SetGraphCompound, SetGraphSpec};
pub use standard::{cage_order, complete, complete_bipartite, cycle, ladder, path, wheel};

/// Undirected simple graph on vertices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SimpleGraph {
    vertex_count: usize,
    /// Stored as `(min, max)`.
    edges: BTreeSet<(usize, usize)>,
}

impl SimpleGraph {
    pub fn empty(vertex_count: usize) -> Self {
        SimpleGraph {
            vertex_count,
            edges: BTreeSet::new(),
        }
    }

    /// Builds a graph from an edge list. Self-loops, duplicate edges and
    /// out-of-range ids are rejected.
    pub fn from_edges<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = SimpleGraph::empty(vertex_count);
        for (u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let bad = |reason: String| CurlError::InvalidParameter {
            family: "edge list",
            reason,
        };
        if u == v {
            return Err(bad(format!("self-loop at {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(bad(format!(
                "edge {{{u}, {v}}} out of range for {} vertices",
                self.vertex_count
            )));
        }
        if !self.edges.insert((u.min(v), u.max(v))) {
            return Err(bad(format!("duplicate edge {{{u}, {v}}}")));
        }
        Ok(())
    }

    /// Adds an edge known to be new and in range; used by generators.
    pub(crate) fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.vertex_count && v < self.vertex_count);
        self.edges.insert((u.min(v), u.max(v)));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for &(u, v) in &self.edges {
            deg[u] += 1;
            deg[v] += 1;
        }
        deg
    }

    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut adj = vec![Vec::new(); self.vertex_count];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.vertex_count
    }
}

/// Per-vertex degrees in vertex-id order.
pub fn degree_sequence(g: &SimpleGraph) -> Result<IntString> {
    if g.vertex_count == 0 {
        return Err(CurlError::EmptyGraph);
    }
    Ok(IntString::new(g.degrees()))
}

/// Copy of `g` without the edge `{u, v}`.
pub fn delete_edge(g: &SimpleGraph, u: usize, v: usize) -> Result<SimpleGraph> {
    let mut out = g.clone();
    if !out.edges.remove(&(u.min(v), u.max(v))) {
        return Err(CurlError::MissingEdge(u, v));
    }
    Ok(out)
}

/// Directed graph on vertices `0..vertex_count` without self-arcs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DiGraph {
    vertex_count: usize,
    arcs: BTreeSet<(usize, usize)>,
}

impl DiGraph {
    pub fn empty(vertex_count: usize) -> Self {
        DiGraph {
            vertex_count,
            arcs: BTreeSet::new(),
        }
    }

    pub fn from_arcs<I>(vertex_count: usize, arcs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = DiGraph::empty(vertex_count);
        for (u, v) in arcs {
            g.try_add_arc(u, v)?;
        }
        Ok(g)
    }

    fn try_add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        let bad = |reason: String| CurlError::InvalidParameter {
            family: "arc list",
            reason,
        };
        if u == v {
            return Err(bad(format!("self-arc at {u}")));
        }
        if u >= self.vertex_count || v >= self.vertex_count {
            return Err(bad(format!(
                "arc ({u}, {v}) out of range for {} vertices",
                self.vertex_count
            )));
        }
        if !self.arcs.insert((u, v)) {
            return Err(bad(format!("duplicate arc ({u}, {v})")));
        }
        Ok(())
    }

    pub(crate) fn add_arc_unchecked(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.vertex_count && v < self.vertex_count);
        self.arcs.insert((u, v));
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    pub fn in_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for &(_, v) in &self.arcs {
            deg[v] += 1;
        }
        deg
    }

    pub fn out_degrees(&self) -> Vec<u64> {
        let mut deg = vec![0u64; self.vertex_count];
        for &(u, _) in &self.arcs {
            deg[u] += 1;
        }
        deg
    }

    /// Underlying simple graph; antiparallel arcs collapse to one edge.
    pub fn underlying(&self) -> SimpleGraph {
        let mut g = SimpleGraph::empty(self.vertex_count);
        for &(u, v) in &self.arcs {
            g.add_edge_unchecked(u, v);
        }
        g
    }
}
