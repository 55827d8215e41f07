//! Vertex-colored graphs and a brute-force Multi-Colored Clique solver.
//!
//! Graph file:
//! ```text
//! colors <k>
//! vertex <name> <color 1..k>
//! edge <name> <name>
//! ```
//! A vertex's rank is its position among the `vertex` lines of its color.

use std::collections::{HashMap, HashSet};
use std::fmt::{self, Write as _};

use crate::error::{parse_err, Error, Result};
use crate::stringcore::{directives, parse_num};

/// 0-based (color, rank) coordinates of a vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId {
    pub color: usize,
    pub rank: usize,
}

impl VertexId {
    pub fn new(color: usize, rank: usize) -> Self {
        VertexId { color, rank }
    }
}

/// Endpoints of an edge, lower color first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub lo: VertexId,
    pub hi: VertexId,
}

impl Edge {
    /// Orders the endpoints; `None` when both share a color.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.color.cmp(&b.color) {
            std::cmp::Ordering::Less => Some(Edge { lo: a, hi: b }),
            std::cmp::Ordering::Greater => Some(Edge { lo: b, hi: a }),
            std::cmp::Ordering::Equal => None,
        }
    }
}

/// One rank per color: the candidate clique `{v(h, ranks[h])}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSelection(pub Vec<usize>);

impl VertexSelection {
    pub fn ranks(&self) -> &[usize] {
        &self.0
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.get(v.color) == Some(&v.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphViolation {
    MissingColors,
    ZeroColors,
    DuplicateColors { line: usize },
    EmptyClasses,
    InvalidName { line: usize, name: String },
    ColorOutOfRange { line: usize, name: String, color: usize, k: usize },
    DuplicateVertex { line: usize, name: String },
    UnknownVertex { line: usize, name: String },
    IntraColorEdge { line: usize, a: String, b: String },
    DuplicateEdge { line: usize, a: String, b: String },
    UnequalClassSizes { sizes: Vec<usize> },
}

impl fmt::Display for GraphViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use GraphViolation::*;
        match self {
            MissingColors => write!(f, "missing `colors` line"),
            ZeroColors => write!(f, "color count must be >= 1"),
            DuplicateColors { line } => write!(f, "line {line}: duplicate `colors`"),
            EmptyClasses => write!(f, "color classes are empty"),
            InvalidName { line, name } => write!(f, "line {line}: invalid vertex name {name:?}"),
            ColorOutOfRange { line, name, color, k } => {
                write!(f, "line {line}: vertex {name} has color {color}, expected 1..={k}")
            }
            DuplicateVertex { line, name } => write!(f, "line {line}: duplicate vertex {name}"),
            UnknownVertex { line, name } => write!(f, "line {line}: unknown vertex {name}"),
            IntraColorEdge { line, a, b } => {
                write!(f, "line {line}: edge {a}-{b} joins two vertices of the same color")
            }
            DuplicateEdge { line, a, b } => write!(f, "line {line}: duplicate edge {a}-{b}"),
            UnequalClassSizes { sizes } => write!(f, "unequal color class sizes {sizes:?}"),
        }
    }
}

/// Graph file contents before any semantic checks. Colors are 1-based here.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RawGraph {
    pub colors: Option<usize>,
    pub duplicate_colors: Vec<usize>,
    pub vertices: Vec<(usize, String, usize)>,
    pub edges: Vec<(usize, String, String)>,
}

pub fn parse_raw_graph(text: &str) -> Result<RawGraph> {
    let mut raw = RawGraph::default();
    for (line, kw, rest) in directives(text) {
        let args: Vec<&str> = rest.split_whitespace().collect();
        match (kw, args.as_slice()) {
            ("colors", [k]) => {
                let k = parse_num(line, "color count", k)?;
                if raw.colors.is_some() {
                    raw.duplicate_colors.push(line);
                } else {
                    raw.colors = Some(k);
                }
            }
            ("vertex", [name, color]) => {
                let color = parse_num(line, "color", color)?;
                raw.vertices.push((line, name.to_string(), color));
            }
            ("edge", [a, b]) => raw.edges.push((line, a.to_string(), b.to_string())),
            ("colors" | "vertex" | "edge", _) => {
                return Err(parse_err(line, format!("wrong number of arguments to `{kw}`")))
            }
            (other, _) => return Err(parse_err(line, format!("unknown directive `{other}`"))),
        }
    }
    Ok(raw)
}

/// Checks every structural requirement and reports all violations at once.
pub fn validate_graph(raw: &RawGraph) -> Result<ColoredGraph> {
    use GraphViolation::*;
    let mut bad = Vec::new();
    let k = match raw.colors {
        None => {
            bad.push(MissingColors);
            0
        }
        Some(0) => {
            bad.push(ZeroColors);
            0
        }
        Some(k) => k,
    };
    bad.extend(raw.duplicate_colors.iter().map(|&line| DuplicateColors { line }));

    let mut classes: Vec<Vec<String>> = vec![Vec::new(); k];
    let mut ids: HashMap<&str, VertexId> = HashMap::new();
    for (line, name, color) in &raw.vertices {
        let line = *line;
        if name.is_empty() || name.chars().any(char::is_whitespace) {
            bad.push(InvalidName { line, name: name.clone() });
            continue;
        }
        if *color == 0 || *color > k {
            bad.push(ColorOutOfRange { line, name: name.clone(), color: *color, k });
            continue;
        }
        if ids.contains_key(name.as_str()) {
            bad.push(DuplicateVertex { line, name: name.clone() });
            continue;
        }
        let c = color - 1;
        ids.insert(name, VertexId::new(c, classes[c].len()));
        classes[c].push(name.clone());
    }

    let mut edges = Vec::new();
    let mut seen = HashSet::new();
    for (line, a, b) in &raw.edges {
        let line = *line;
        let (Some(&va), Some(&vb)) = (ids.get(a.as_str()), ids.get(b.as_str())) else {
            for name in [a, b] {
                if !ids.contains_key(name.as_str()) {
                    bad.push(UnknownVertex { line, name: name.clone() });
                }
            }
            continue;
        };
        let Some(e) = Edge::new(va, vb) else {
            bad.push(IntraColorEdge { line, a: a.clone(), b: b.clone() });
            continue;
        };
        if !seen.insert(e) {
            bad.push(DuplicateEdge { line, a: a.clone(), b: b.clone() });
            continue;
        }
        edges.push(e);
    }

    let sizes: Vec<usize> = classes.iter().map(Vec::len).collect();
    if sizes.windows(2).any(|w| w[0] != w[1]) {
        bad.push(UnequalClassSizes { sizes: sizes.clone() });
    } else if k > 0 && sizes[0] == 0 {
        bad.push(EmptyClasses);
    }
    if !bad.is_empty() {
        return Err(Error::Graph(bad));
    }
    let n = sizes[0];
    Ok(ColoredGraph::assemble(k, n, classes.concat(), edges))
}

pub fn parse_graph(text: &str) -> Result<ColoredGraph> {
    validate_graph(&parse_raw_graph(text)?)
}

/// A graph whose vertices are split into `k` color classes of `n` vertices each.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    k: usize,
    n: usize,
    names: Vec<String>,
    edges: Vec<Edge>,
    adjacent: Vec<bool>,
}

impl ColoredGraph {
    fn assemble(k: usize, n: usize, names: Vec<String>, edges: Vec<Edge>) -> Self {
        let size = k * n;
        let mut adjacent = vec![false; size * size];
        for e in &edges {
            let (a, b) = (e.lo.color * n + e.lo.rank, e.hi.color * n + e.hi.rank);
            adjacent[a * size + b] = true;
            adjacent[b * size + a] = true;
        }
        ColoredGraph { k, n, names, edges, adjacent }
    }

    /// Builds and validates a graph from explicit names (color-major) and edges.
    pub fn new(k: usize, n: usize, names: Vec<String>, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        if names.len() != k * n {
            return Err(Error::Graph(vec![GraphViolation::UnequalClassSizes {
                sizes: vec![names.len()],
            }]));
        }
        let vertices = names
            .iter()
            .enumerate()
            .map(|(i, name)| (0, name.clone(), i / n.max(1) + 1))
            .collect();
        let name_of = |v: VertexId| -> Result<String> {
            if v.color >= k {
                return Err(Error::Graph(vec![GraphViolation::UnknownVertex {
                    line: 0,
                    name: format!("color {}", v.color + 1),
                }]));
            }
            if v.rank >= n {
                return Err(Error::RankOutOfRange { rank: v.rank, n });
            }
            Ok(names[v.color * n + v.rank].clone())
        };
        let edges = edges
            .iter()
            .map(|&(a, b)| Ok((0, name_of(a)?, name_of(b)?)))
            .collect::<Result<Vec<_>>>()?;
        validate_graph(&RawGraph {
            colors: Some(k),
            duplicate_colors: Vec::new(),
            vertices,
            edges,
        })
    }

    /// Graph with vertices named `v<color>_<rank>` (both 1-based).
    pub fn with_default_names(k: usize, n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let names = (0..k)
            .flat_map(|c| (0..n).map(move |r| format!("v{}_{}", c + 1, r + 1)))
            .collect();
        Self::new(k, n, names, edges)
    }

    /// Every cross-color pair is an edge.
    pub fn complete(k: usize, n: usize) -> Result<Self> {
        Self::with_default_names(k, n, &cross_color_pairs(k, n))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.color * self.n + v.rank]
    }

    pub fn vertex(&self, name: &str) -> Option<VertexId> {
        self.names
            .iter()
            .position(|x| x == name)
            .map(|i| VertexId::new(i / self.n, i % self.n))
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.k).flat_map(move |c| (0..self.n).map(move |r| VertexId::new(c, r)))
    }

    pub fn has_edge(&self, a: VertexId, b: VertexId) -> bool {
        let size = self.k * self.n;
        if a.color >= self.k || b.color >= self.k || a.rank >= self.n || b.rank >= self.n {
            return false;
        }
        self.adjacent[(a.color * self.n + a.rank) * size + b.color * self.n + b.rank]
    }

    /// Same vertices, edges filtered by `keep`.
    pub fn retain_edges(&self, mut keep: impl FnMut(&Edge) -> bool) -> Self {
        let edges = self.edges.iter().copied().filter(|e| keep(e)).collect();
        Self::assemble(self.k, self.n, self.names.clone(), edges)
    }

    /// Number of selections, `n^k`, saturating.
    pub fn selection_count(&self) -> u128 {
        (self.n as u128).checked_pow(self.k as u32).unwrap_or(u128::MAX)
    }

    /// Every selection in lexicographic rank order (color 0 most significant).
    pub fn selections(&self) -> impl Iterator<Item = VertexSelection> + '_ {
        let total = self.selection_count() as u64;
        (0..total).map(move |mut idx| {
            let mut ranks = vec![0; self.k];
            for r in ranks.iter_mut().rev() {
                *r = (idx % self.n as u64) as usize;
                idx /= self.n as u64;
            }
            VertexSelection(ranks)
        })
    }

    pub fn selection_names(&self, sel: &VertexSelection) -> Vec<&str> {
        sel.0
            .iter()
            .enumerate()
            .map(|(c, &r)| self.name(VertexId::new(c, r)))
            .collect()
    }
}

/// All vertex pairs of distinct colors, ordered by (lo, hi).
pub fn cross_color_pairs(k: usize, n: usize) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for c1 in 0..k {
        for r1 in 0..n {
            for c2 in c1 + 1..k {
                for r2 in 0..n {
                    out.push((VertexId::new(c1, r1), VertexId::new(c2, r2)));
                }
            }
        }
    }
    out
}

pub fn write_graph(g: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "colors {}", g.k).unwrap();
    for v in g.vertices() {
        writeln!(out, "vertex {} {}", g.name(v), v.color + 1).unwrap();
    }
    for e in &g.edges {
        writeln!(out, "edge {} {}", g.name(e.lo), g.name(e.hi)).unwrap();
    }
    out
}

fn check_selection(g: &ColoredGraph, sel: &VertexSelection) -> Result<()> {
    if sel.0.len() != g.k {
        return Err(Error::SelectionSize { got: sel.0.len(), k: g.k });
    }
    if let Some(&rank) = sel.0.iter().find(|&&r| r >= g.n) {
        return Err(Error::RankOutOfRange { rank, n: g.n });
    }
    Ok(())
}

/// `|E(K)|`: edges with both endpoints in the selection.
pub fn count_edges_within(g: &ColoredGraph, sel: &VertexSelection) -> Result<usize> {
    check_selection(g, sel)?;
    Ok(g.edges
        .iter()
        .filter(|e| sel.contains(e.lo) && sel.contains(e.hi))
        .count())
}

fn check_enumeration(g: &ColoredGraph, bound: u64) -> Result<()> {
    let needed = g.selection_count();
    if needed > bound as u128 {
        return Err(Error::StateBoundExceeded { needed, bound });
    }
    Ok(())
}

/// Lexicographically first selection that is a clique, by exhaustive search.
pub fn find_multicolored_clique(g: &ColoredGraph, bound: u64) -> Result<Option<VertexSelection>> {
    check_enumeration(g, bound)?;
    let full = g.k * (g.k - 1) / 2;
    Ok(g.selections().find(|s| {
        count_edges_within(g, s).expect("generated selections are in range") == full
    }))
}

/// Maximum of `|E(K)|` over all selections, with the first selection reaching it.
pub fn max_edges_within(g: &ColoredGraph, bound: u64) -> Result<(usize, VertexSelection)> {
    check_enumeration(g, bound)?;
    let mut best: Option<(usize, VertexSelection)> = None;
    for s in g.selections() {
        let c = count_edges_within(g, &s)?;
        if best.as_ref().is_none_or(|(b, _)| c > *b) {
            best = Some((c, s));
        }
    }
    Ok(best.expect("n >= 1 so at least one selection exists"))
}
