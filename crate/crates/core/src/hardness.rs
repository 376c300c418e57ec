//! Vertex-cover instances for DSA size minimization.
//!
//! For a graph `G` the DFA `M_G` reads a vertex, then a path of edge
//! letters, then `$`. Its suffix-tracking sets are exactly the vertex covers
//! plus the three auxiliary states, and the `Δ` padding letters make every
//! suppressed vertex save a fixed amount of total size.

use std::collections::{BTreeSet, VecDeque};
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::derivation::{combinations, enumerate_suffix_tracking_sets_with, is_suffix_tracking, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::model::{Dfa, StateId};

pub const INIT: &str = "q_init";
pub const SINK: &str = "q_sink";
pub const ACC: &str = "q_acc";
pub const END: &str = "$";

/// Largest graph accepted by [`min_vertex_cover`].
pub const COVER_LIMIT: usize = 16;
/// Largest graph accepted by [`check_vc_correspondence`].
pub const CORRESPONDENCE_LIMIT: usize = 8;

/// A connected simple undirected graph on at least three vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    vertices: Vec<String>,
    edges: BTreeSet<(usize, usize)>,
}

fn reserved(name: &str) -> bool {
    name == INIT
        || name == SINK
        || name == ACC
        || name == END
        || name.starts_with("e_{")
        || (name.len() > 1 && name.starts_with('d') && name[1..].bytes().all(|b| b.is_ascii_digit()))
}

impl Graph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(S, S)]) -> Result<Self> {
        let mut names: Vec<String> = Vec::new();
        for v in vertices {
            let v = v.as_ref();
            if v.is_empty() || v.chars().any(|c| c.is_whitespace() || ".,{}#".contains(c)) {
                return Err(Error::InvalidGraph(format!("bad vertex name {v:?}")));
            }
            if reserved(v) {
                return Err(Error::InvalidGraph(format!("vertex name {v:?} is reserved")));
            }
            if names.iter().any(|n| n == v) {
                return Err(Error::InvalidGraph(format!("duplicate vertex {v}")));
            }
            names.push(v.to_string());
        }
        let index = |v: &str| {
            names
                .iter()
                .position(|n| n == v)
                .ok_or_else(|| Error::InvalidGraph(format!("unknown vertex {v}")))
        };
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            let (u, v) = (index(u.as_ref())?, index(v.as_ref())?);
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop on {}", names[u])));
            }
            if !set.insert((u.min(v), u.max(v))) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge {} {}",
                    names[u], names[v]
                )));
            }
        }
        let g = Graph {
            vertices: names,
            edges: set,
        };
        if g.vertices.len() < 3 {
            return Err(Error::InvalidGraph("need at least 3 vertices".into()));
        }
        if !g.is_connected() {
            return Err(Error::InvalidGraph("graph is not connected".into()));
        }
        Ok(g)
    }

    pub fn triangle() -> Self {
        Graph::new(&["u", "v", "w"], &[("u", "v"), ("v", "w"), ("u", "w")]).unwrap()
    }

    /// `u – v – w`.
    pub fn path3() -> Self {
        Graph::new(&["u", "v", "w"], &[("u", "v"), ("v", "w")]).unwrap()
    }

    /// Center `c` joined to `x1 … xk`.
    pub fn star(k: usize) -> Self {
        let mut vs = vec!["c".to_string()];
        vs.extend((1..=k).map(|i| format!("x{i}")));
        let es: Vec<(String, String)> = vs[1..].iter().map(|x| ("c".to_string(), x.clone())).collect();
        Graph::new(&vs, &es).unwrap()
    }

    pub fn complete(n: usize) -> Self {
        let vs: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut es = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                es.push((vs[i].clone(), vs[j].clone()));
            }
        }
        Graph::new(&vs, &es).unwrap()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    /// Edges as index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    /// `e_{u,v}` with the endpoint names sorted.
    pub fn edge_name(&self, (i, j): (usize, usize)) -> String {
        let (a, b) = (&self.vertices[i], &self.vertices[j]);
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        format!("e_{{{a},{b}}}")
    }

    fn is_connected(&self) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(u) = queue.pop_front() {
            for &(a, b) in &self.edges {
                let other = if a == u { b } else if b == u { a } else { continue };
                if !seen[other] {
                    seen[other] = true;
                    queue.push_back(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    pub fn is_vertex_cover(&self, cover: &BTreeSet<usize>) -> bool {
        self.edges.iter().all(|(a, b)| cover.contains(a) || cover.contains(b))
    }
}

/// Alphabet `V`, then the edge letters, then `$`, then `d1 … dΔ`.
pub fn vc_alphabet(g: &Graph, delta: usize) -> Arc<Alphabet> {
    let mut tokens = g.vertices.clone();
    tokens.extend(g.edges().map(|e| g.edge_name(e)));
    tokens.push(END.to_string());
    tokens.extend((1..=delta).map(|i| format!("d{i}")));
    Alphabet::new(tokens).expect("graph names are validated").shared()
}

/// The complete DFA `M_G` with `Δ` padding letters.
pub fn build_vc_dfa(g: &Graph, delta: usize) -> Result<Dfa> {
    if delta == 0 {
        return Err(Error::InvalidGraph("padding must be at least 1".into()));
    }
    let al = vc_alphabet(g, delta);
    let mut names = vec![INIT.to_string()];
    names.extend(g.vertices.iter().cloned());
    names.push(ACC.to_string());
    names.push(SINK.to_string());
    let init = StateId(0);
    let vertex = |i: usize| StateId(i as u32 + 1);
    let acc = StateId(g.vertices.len() as u32 + 1);
    let sink = StateId(g.vertices.len() as u32 + 2);

    let mut m = Dfa::new(al.clone(), names, init, [acc]);
    let end = al.symbol(END)?;
    for (i, v) in g.vertices.iter().enumerate() {
        m.add_transition(init, al.symbol(v)?, vertex(i))?;
        m.add_transition(vertex(i), end, acc)?;
    }
    for e in g.edges() {
        let sym = al.symbol(&g.edge_name(e))?;
        m.add_transition(vertex(e.0), sym, vertex(e.1))?;
        m.add_transition(vertex(e.1), sym, vertex(e.0))?;
    }
    for q in m.states().collect::<Vec<_>>() {
        for a in al.symbols() {
            if m.next(q, a).is_none() {
                m.add_transition(q, a, sink)?;
            }
        }
    }
    Ok(m)
}

/// `(k′ + 2)·2Δ + (2Δ − 1)`.
pub fn size_budget(k_prime: u64, delta: u64) -> u64 {
    (k_prime + 2) * 2 * delta + (2 * delta - 1)
}

/// `(|V| + |E|)^4`.
pub fn default_padding(g: &Graph) -> u64 {
    ((g.vertices.len() + g.num_edges()) as u64).pow(4)
}

/// Smallest vertex cover by exhaustive search, smallest size first and
/// lexicographically first among equals.
pub fn min_vertex_cover(g: &Graph) -> Result<(usize, Vec<String>)> {
    let n = g.vertices.len();
    if n > COVER_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: n,
            limit: COVER_LIMIT,
        });
    }
    for k in 0..=n {
        for combo in combinations(n, k) {
            let cover: BTreeSet<usize> = combo.iter().copied().collect();
            if g.is_vertex_cover(&cover) {
                return Ok((k, combo.iter().map(|&i| g.vertices[i].clone()).collect()));
            }
        }
    }
    unreachable!("the full vertex set is a cover")
}

/// Vertex names among the states of `M_G` in `set`.
pub fn vertex_part(m: &Dfa, set: &BTreeSet<StateId>) -> BTreeSet<String> {
    set.iter()
        .map(|q| m.state_name(*q))
        .filter(|n| ![INIT, SINK, ACC].contains(n))
        .map(str::to_string)
        .collect()
}

/// Outcome of [`check_vc_correspondence`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VcReport {
    /// Vertex parts of all suffix-tracking sets, in enumeration order.
    pub tracking_vertex_parts: Vec<BTreeSet<String>>,
    /// Covers whose extension by the auxiliary states is not suffix-tracking.
    pub covers_not_tracking: Vec<BTreeSet<String>>,
    /// Suffix-tracking sets whose vertex part misses some edge.
    pub tracking_not_cover: Vec<BTreeSet<String>>,
    pub min_cover: usize,
    pub min_tracking_vertex_part: usize,
}

impl VcReport {
    pub fn holds(&self) -> bool {
        self.covers_not_tracking.is_empty()
            && self.tracking_not_cover.is_empty()
            && self.min_cover == self.min_tracking_vertex_part
    }
}

/// Checks both directions: covers give suffix-tracking sets, and
/// suffix-tracking sets contain covers.
pub fn check_vc_correspondence(g: &Graph, delta: usize) -> Result<VcReport> {
    let n = g.vertices.len();
    if n > CORRESPONDENCE_LIMIT {
        return Err(Error::GraphTooLarge {
            vertices: n,
            limit: CORRESPONDENCE_LIMIT,
        });
    }
    let m = build_vc_dfa(g, delta)?;
    let aux: BTreeSet<StateId> = [INIT, SINK, ACC]
        .iter()
        .map(|s| m.state_id(s))
        .collect::<Result<_>>()?;
    let vertex = |i: usize| StateId(i as u32 + 1);

    let mut covers_not_tracking = Vec::new();
    for k in 0..=n {
        for combo in combinations(n, k) {
            let cover: BTreeSet<usize> = combo.iter().copied().collect();
            if !g.is_vertex_cover(&cover) {
                continue;
            }
            let mut set = aux.clone();
            set.extend(cover.iter().map(|&i| vertex(i)));
            if !is_suffix_tracking(&m, &set)?.is_suffix_tracking() {
                covers_not_tracking.push(vertex_part(&m, &set));
            }
        }
    }

    let sets = enumerate_suffix_tracking_sets_with(&m, n + 3, DEFAULT_CAP)?;
    let mut tracking_vertex_parts = Vec::new();
    let mut tracking_not_cover = Vec::new();
    for set in &sets {
        let part = vertex_part(&m, set);
        let idx: BTreeSet<usize> = set
            .iter()
            .filter(|q| (1..=n).contains(&q.index()))
            .map(|q| q.index() - 1)
            .collect();
        if !g.is_vertex_cover(&idx) {
            tracking_not_cover.push(part.clone());
        }
        tracking_vertex_parts.push(part);
    }
    let min_tracking_vertex_part = tracking_vertex_parts
        .iter()
        .map(BTreeSet::len)
        .min()
        .unwrap_or(usize::MAX);
    Ok(VcReport {
        tracking_vertex_parts,
        covers_not_tracking,
        tracking_not_cover,
        min_cover: min_vertex_cover(g)?.0,
        min_tracking_vertex_part,
    })
}
