//! Tubings on the interval graph `I_n` and the cycle graph `Γ_n`, lattice
//! paths, and the bijections between them.
//!
//! Vertices are numbered `0..n`. On `Γ_n` vertex `i` is adjacent to
//! `i ± 1 mod n`, and a tube is an arc `(start, len)` covering
//! `start, start+1, ..., start+len-1 mod n`. The whole cycle is not a tube.

mod bijections;
mod families;
mod paths;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::objects::{CyclicObject, ObjectKind, Symbol, TubeSlot};

pub use bijections::{
    cycle_tubing_to_delannoy, cycle_tubing_to_marked, delannoy_to_cycle_tubing, delannoy_to_marked,
    interval_tubing_to_schroder, marked_to_cycle_tubing, marked_to_delannoy, schroder_to_interval_tubing,
    MarkedSchroder,
};
pub use families::{all_tubings_family, coloured_tubings_family, improper_cycle_tubings, tubing_family, TubingStat};
pub use paths::{enumerate_paths, strict_schroder_gf_check, PathKind, PathWord, Step};

/// Largest interval graph `enumerate_tubings` accepts.
pub const INTERVAL_CAP: usize = 12;
/// Largest cycle graph `enumerate_tubings` accepts.
pub const CYCLE_CAP: usize = 10;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Graph {
    Interval(usize),
    Cycle(usize),
}

impl Graph {
    pub fn order(self) -> usize {
        match self {
            Graph::Interval(n) | Graph::Cycle(n) => n,
        }
    }

    fn full(self) -> u64 {
        u64::MAX >> (64 - self.order())
    }

    fn neighbours(self, mask: u64) -> u64 {
        let n = self.order();
        match self {
            Graph::Interval(_) => ((mask << 1) | (mask >> 1)) & self.full(),
            Graph::Cycle(_) => {
                let up = ((mask << 1) | (mask >> (n - 1))) & self.full();
                let down = ((mask >> 1) | (mask << (n - 1))) & self.full();
                up | down
            }
        }
    }
}

/// A tube, serialized as `[start, len]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(into = "[usize; 2]")]
pub struct Tube {
    pub start: usize,
    pub len: usize,
}

impl From<Tube> for [usize; 2] {
    fn from(t: Tube) -> Self {
        [t.start, t.len]
    }
}

impl Tube {
    pub fn new(start: usize, len: usize) -> Self {
        Self { start, len }
    }

    /// Vertices in order along the tube.
    pub fn vertices(self, n: usize) -> impl Iterator<Item = usize> {
        (0..self.len).map(move |i| (self.start + i) % n)
    }

    fn mask(self, n: usize) -> u64 {
        self.vertices(n).fold(0, |m, v| m | 1 << v)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum VertexClass {
    Free,
    Final,
    Nonfinal,
}

/// A set of pairwise nested or separated tubes, sorted by `(start, len)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Tubing {
    graph: Graph,
    tubes: Vec<Tube>,
}

fn compatible(graph: Graph, a: u64, b: u64) -> bool {
    let both = a & b;
    both == a || both == b || (both == 0 && graph.neighbours(a) & b == 0)
}

fn check_graph(graph: Graph) -> Result<()> {
    match graph.order() {
        0 => Err(Error::InvalidArgument("graphs need at least one vertex".into())),
        n if n > 63 => Err(Error::CapExceeded(format!(
            "graphs are limited to 63 vertices, got {n}"
        ))),
        _ => Ok(()),
    }
}

fn check_tube(graph: Graph, t: Tube) -> Result<()> {
    let n = graph.order();
    let ok = match graph {
        Graph::Interval(_) => t.len >= 1 && t.start + t.len <= n,
        Graph::Cycle(_) => t.start < n && t.len >= 1 && t.len < n,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::InvalidArgument(format!(
            "({}, {}) is not a tube of {graph:?}",
            t.start, t.len
        )))
    }
}

impl Tubing {
    pub fn new(graph: Graph, mut tubes: Vec<Tube>) -> Result<Self> {
        check_graph(graph)?;
        let n = graph.order();
        for &t in &tubes {
            check_tube(graph, t)?;
        }
        tubes.sort();
        if tubes.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidArgument("repeated tube".into()));
        }
        for (i, a) in tubes.iter().enumerate() {
            for b in &tubes[i + 1..] {
                if !compatible(graph, a.mask(n), b.mask(n)) {
                    return Err(Error::InvalidArgument(format!(
                        "tubes ({}, {}) and ({}, {}) overlap or touch",
                        a.start, a.len, b.start, b.len
                    )));
                }
            }
        }
        Ok(Self { graph, tubes })
    }

    pub fn graph(&self) -> Graph {
        self.graph
    }

    pub fn tubes(&self) -> &[Tube] {
        &self.tubes
    }

    pub fn num_tubes(&self) -> usize {
        self.tubes.len()
    }

    fn covered(&self) -> u64 {
        let n = self.graph.order();
        self.tubes.iter().fold(0, |m, t| m | t.mask(n))
    }

    pub fn free_vertices(&self) -> Vec<usize> {
        let covered = self.covered();
        (0..self.graph.order()).filter(|v| covered >> v & 1 == 0).collect()
    }

    pub fn is_proper(&self) -> bool {
        self.covered() == self.graph.full()
    }

    /// Each tube's final vertex is its last vertex outside every smaller
    /// tube inside it. Covered vertices that are final for no tube are
    /// nonfinal.
    pub fn classify_vertices(&self) -> Vec<VertexClass> {
        let n = self.graph.order();
        let covered = self.covered();
        let mut classes: Vec<VertexClass> = (0..n)
            .map(|v| {
                if covered >> v & 1 == 1 {
                    VertexClass::Nonfinal
                } else {
                    VertexClass::Free
                }
            })
            .collect();
        let masks: Vec<u64> = self.tubes.iter().map(|t| t.mask(n)).collect();
        for (t, &m) in self.tubes.iter().zip(&masks) {
            let inner = masks
                .iter()
                .filter(|&&o| o != m && o & m == o)
                .fold(0, |acc, o| acc | o);
            if let Some(v) = t.vertices(n).filter(|v| inner >> v & 1 == 0).last() {
                classes[v] = VertexClass::Final;
            }
        }
        classes
    }

    /// Rotate a cycle tubing so that vertex `i` moves to `i + k`.
    pub fn rotate(&self, k: usize) -> Result<Self> {
        let Graph::Cycle(n) = self.graph else {
            return Err(Error::InvalidArgument("only cycle tubings rotate".into()));
        };
        let mut tubes: Vec<Tube> = self.tubes.iter().map(|t| Tube::new((t.start + k) % n, t.len)).collect();
        tubes.sort();
        Ok(Self {
            graph: self.graph,
            tubes,
        })
    }

    /// The tubing as a cyclic object, with `colors[i]` the colour of the
    /// `i`-th tube.
    pub fn to_object_coloured(&self, colors: &[u32]) -> Result<CyclicObject> {
        if !matches!(self.graph, Graph::Cycle(_)) {
            return Err(Error::InvalidArgument("only cycle tubings carry a rotation".into()));
        }
        if colors.len() != self.tubes.len() {
            return Err(Error::InvalidArgument("one colour per tube is required".into()));
        }
        let mut slots = vec![Vec::new(); self.graph.order()];
        for (t, &color) in self.tubes.iter().zip(colors) {
            slots[t.start].push(TubeSlot { len: t.len, color });
        }
        let encoding = slots
            .into_iter()
            .map(|mut s| {
                s.sort();
                Symbol::Tubes(s)
            })
            .collect();
        Ok(CyclicObject::new(ObjectKind::Tubing, encoding))
    }

    pub fn to_object(&self) -> Result<CyclicObject> {
        self.to_object_coloured(&vec![0; self.tubes.len()])
    }
}

fn all_tubes(graph: Graph) -> Vec<Tube> {
    let n = graph.order();
    match graph {
        Graph::Interval(_) => (0..n).flat_map(|s| (1..=n - s).map(move |l| Tube::new(s, l))).collect(),
        Graph::Cycle(_) => (0..n).flat_map(|s| (1..n).map(move |l| Tube::new(s, l))).collect(),
    }
}

/// Every tubing of `graph`, in sorted order.
pub fn enumerate_tubings(graph: Graph) -> Result<Vec<Tubing>> {
    check_graph(graph)?;
    let n = graph.order();
    let cap = match graph {
        Graph::Interval(_) => INTERVAL_CAP,
        Graph::Cycle(_) => CYCLE_CAP,
    };
    if n > cap {
        return Err(Error::CapExceeded(format!(
            "{graph:?} exceeds the enumeration cap {cap}"
        )));
    }
    let tubes = all_tubes(graph);
    let masks: Vec<u64> = tubes.iter().map(|t| t.mask(n)).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    extend(graph, &tubes, &masks, 0, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn extend(graph: Graph, tubes: &[Tube], masks: &[u64], from: usize, chosen: &mut Vec<usize>, out: &mut Vec<Tubing>) {
    out.push(Tubing {
        graph,
        tubes: chosen.iter().map(|&i| tubes[i]).collect(),
    });
    for i in from..tubes.len() {
        if chosen.iter().all(|&j| compatible(graph, masks[i], masks[j])) {
            chosen.push(i);
            extend(graph, tubes, masks, i + 1, chosen, out);
            chosen.pop();
        }
    }
}
