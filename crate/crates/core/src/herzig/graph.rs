//! The weight-connectivity graph on `W?(tau)`.

use std::collections::{BTreeMap, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use super::{ConnectionEdge, TameParam};
use crate::error::Result;
use crate::root_data::RootDatum;
use crate::weights_dl::SerreWeight;

/// An undirected edge between vertex indices, with one witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GraphEdge {
    pub a: usize,
    pub b: usize,
    pub witness: ConnectionEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityGraph {
    /// `W?(tau)`, sorted.
    pub vertices: Vec<SerreWeight>,
    /// Extremal flags, parallel to `vertices`.
    pub obvious: Vec<bool>,
    /// One edge per unordered pair, sorted by endpoints.
    pub edges: Vec<GraphEdge>,
    /// Component label of each vertex, numbered by first vertex.
    pub component: Vec<usize>,
    pub components: usize,
    /// Edge distance to the nearest extremal vertex.
    pub distance_to_obvious: Vec<Option<usize>>,
    /// A shortest vertex chain from each vertex to an extremal vertex.
    pub chain_to_obvious: Vec<Vec<usize>>,
    /// Connecting types with an endpoint outside `W?(tau)`; always zero when
    /// the outer weights behave as predicted.
    pub stray_edges: usize,
}

impl ConnectivityGraph {
    pub fn is_connected(&self) -> bool {
        self.components <= 1
    }

    pub fn all_reach_obvious(&self) -> bool {
        self.distance_to_obvious.iter().all(Option::is_some)
    }

    /// JSON export: `{"vertices": [...], "edges": [{"sigma", "sigma2", "alpha", "R"}], ...}`.
    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .enumerate()
            .map(|(i, v)| {
                json!({
                    "lambda": v.lambda(),
                    "obvious": self.obvious[i],
                    "component": self.component[i],
                    "distance_to_obvious": self.distance_to_obvious[i],
                })
            })
            .collect();
        let edges: Vec<Value> = self
            .edges
            .iter()
            .map(|e| {
                json!({
                    "sigma": e.witness.sigma.lambda(),
                    "sigma2": e.witness.sigma2.lambda(),
                    "alpha": e.witness.alpha,
                    "R": e.witness.r,
                })
            })
            .collect();
        json!({
            "vertices": vertices,
            "edges": edges,
            "components": self.components,
            "connected": self.is_connected(),
            "all_reach_obvious": self.all_reach_obvious(),
            "stray_edges": self.stray_edges,
        })
    }

    /// DOT export. Vertices are numbered in sorted weight order and labelled
    /// by their canonical highest weight; edges carry `alpha` and `R`.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("graph wset {\n");
        for (i, v) in self.vertices.iter().enumerate() {
            let dist = self.distance_to_obvious[i].map_or("none".to_string(), |d| d.to_string());
            let shape = if self.obvious[i] {
                "doublecircle"
            } else {
                "circle"
            };
            let _ = writeln!(
                s,
                "  v{i} [label=\"{}\", shape={shape}, distance_to_obvious=\"{dist}\"];",
                v.lambda()
            );
        }
        for e in &self.edges {
            let _ = writeln!(
                s,
                "  v{} -- v{} [label=\"{} {}\"];",
                e.a, e.b, e.witness.alpha, e.witness.r
            );
        }
        s.push_str("}\n");
        s
    }
}

impl RootDatum {
    /// Builds the graph from every connecting type of a `2 h_eta`-deep `tau`.
    pub fn connectivity_graph(&self, tau: &TameParam) -> Result<ConnectivityGraph> {
        self.tame_presentation(tau, 2 * self.h_eta())?;
        let vertices = self.wset(tau)?;
        let obv = self.wobv(tau)?;
        let obvious: Vec<bool> = vertices
            .iter()
            .map(|v| obv.binary_search(v).is_ok())
            .collect();
        let index = |x: &SerreWeight| vertices.binary_search(x).ok();

        let mut stray_edges = 0;
        let mut by_pair: BTreeMap<(usize, usize), ConnectionEdge> = BTreeMap::new();
        for e in self.connections(tau)? {
            match (index(&e.sigma), index(&e.sigma2)) {
                (Some(a), Some(b)) => {
                    by_pair.entry((a.min(b), a.max(b))).or_insert(e);
                }
                _ => stray_edges += 1,
            }
        }
        let nv = vertices.len();
        let mut adj = vec![Vec::new(); nv];
        for &(a, b) in by_pair.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }

        let mut component = vec![usize::MAX; nv];
        let mut components = 0;
        for start in 0..nv {
            if component[start] != usize::MAX {
                continue;
            }
            let mut queue = VecDeque::from([start]);
            component[start] = components;
            while let Some(v) = queue.pop_front() {
                for &w in &adj[v] {
                    if component[w] == usize::MAX {
                        component[w] = components;
                        queue.push_back(w);
                    }
                }
            }
            components += 1;
        }

        // Multi-source search from the extremal vertices.
        let mut dist: Vec<Option<usize>> = vec![None; nv];
        let mut next_hop = vec![usize::MAX; nv];
        let mut queue = VecDeque::new();
        for (i, &o) in obvious.iter().enumerate() {
            if o {
                dist[i] = Some(0);
                queue.push_back(i);
            }
        }
        while let Some(v) = queue.pop_front() {
            let d = dist[v].expect("visited");
            for &w in &adj[v] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    next_hop[w] = v;
                    queue.push_back(w);
                }
            }
        }
        let chain_to_obvious = (0..nv)
            .map(|i| {
                if dist[i].is_none() {
                    return Vec::new();
                }
                let mut chain = vec![i];
                let mut v = i;
                while !obvious[v] {
                    v = next_hop[v];
                    chain.push(v);
                }
                chain
            })
            .collect();

        let edges = by_pair
            .into_iter()
            .map(|((a, b), witness)| GraphEdge { a, b, witness })
            .collect();
        Ok(ConnectivityGraph {
            vertices,
            obvious,
            edges,
            component,
            components,
            distance_to_obvious: dist,
            chain_to_obvious,
            stray_edges,
        })
    }
}
