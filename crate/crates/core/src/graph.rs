//! Coxeter matrices and Coxeter graphs.
//!
//! Generators are identified internally by contiguous 0-based [`GeneratorId`]s.
//! Each built-in family carries a display table that renders the customary
//! names (`s1`, `s4'`, `s0`, `s'`, ...). Edges join generators whose relation
//! order is at least 3; non-adjacent generators commute.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// Index of a generator within its Coxeter system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GeneratorId(pub usize);

impl GeneratorId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Order of the product of two generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationOrder {
    Finite(u32),
    Infinity,
}

impl RelationOrder {
    /// Adjacent in the Coxeter graph iff the order is at least 3.
    pub fn is_edge(self) -> bool {
        match self {
            RelationOrder::Finite(m) => m >= 3,
            RelationOrder::Infinity => true,
        }
    }
}

impl fmt::Display for RelationOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationOrder::Finite(m) => write!(f, "{m}"),
            RelationOrder::Infinity => f.write_str("inf"),
        }
    }
}

/// A symmetric Coxeter matrix with 1 on the diagonal and entries >= 2 elsewhere.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterMatrix {
    size: usize,
    entries: Vec<RelationOrder>,
}

impl CoxeterMatrix {
    /// Validates and wraps a square table of relation orders.
    pub fn new(rows: Vec<Vec<RelationOrder>>) -> Result<Self> {
        let size = rows.len();
        let mut entries = Vec::with_capacity(size * size);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(Error::InvalidMatrix(format!(
                    "row {i} has {} entries, expected {size}",
                    row.len()
                )));
            }
            entries.extend_from_slice(row);
        }
        let m = CoxeterMatrix { size, entries };
        m.validate()?;
        Ok(m)
    }

    fn validate(&self) -> Result<()> {
        for i in 0..self.size {
            for j in 0..self.size {
                let e = self.get(i, j);
                if e != self.get(j, i) {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) != m({j},{i})")));
                }
                let is_one = e == RelationOrder::Finite(1);
                if (i == j) != is_one {
                    return Err(Error::InvalidMatrix(format!(
                        "m({i},{j}) = {e}; entries equal 1 exactly on the diagonal"
                    )));
                }
                if e == RelationOrder::Finite(0) {
                    return Err(Error::InvalidMatrix(format!("m({i},{j}) = 0")));
                }
            }
        }
        Ok(())
    }

    /// Identity-diagonal matrix with every off-diagonal entry equal to 2.
    pub fn commuting(size: usize) -> Self {
        let mut entries = vec![RelationOrder::Finite(2); size * size];
        for i in 0..size {
            entries[i * size + i] = RelationOrder::Finite(1);
        }
        CoxeterMatrix { size, entries }
    }

    fn set_pair(&mut self, i: usize, j: usize, m: u32) {
        self.entries[i * self.size + j] = RelationOrder::Finite(m);
        self.entries[j * self.size + i] = RelationOrder::Finite(m);
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> RelationOrder {
        self.entries[i * self.size + j]
    }
}

/// Named families of Coxeter systems supported by the library.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    C,
    D,
    AffineA,
    AffineB,
    AffineC,
    AffineD,
}

impl Family {
    pub fn is_affine(self) -> bool {
        matches!(
            self,
            Family::AffineA | Family::AffineB | Family::AffineC | Family::AffineD
        )
    }

    /// Smallest rank accepted by [`CoxeterType::new`].
    pub fn min_rank(self) -> usize {
        match self {
            Family::A => 1,
            Family::C | Family::D | Family::AffineA | Family::AffineC => 2,
            Family::AffineB => 3,
            Family::AffineD => 4,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::A => "A",
            Family::C => "C",
            Family::D => "D",
            Family::AffineA => "AffA",
            Family::AffineB => "AffB",
            Family::AffineC => "AffC",
            Family::AffineD => "AffD",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key: String = s
            .chars()
            .filter(|c| !matches!(c, '-' | '_' | ' '))
            .collect::<String>()
            .to_ascii_lowercase();
        Ok(match key.as_str() {
            "a" => Family::A,
            "c" | "b" => Family::C,
            "d" => Family::D,
            "affa" | "affinea" | "ta" => Family::AffineA,
            "affb" | "affineb" | "tb" => Family::AffineB,
            "affc" | "affinec" | "tc" => Family::AffineC,
            "affd" | "affined" | "td" => Family::AffineD,
            _ => return Err(Error::Parse(format!("unknown family '{s}'"))),
        })
    }
}

/// A Coxeter system: a classical family at a given rank, or a custom matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoxeterType {
    A(usize),
    C(usize),
    D(usize),
    AffineA(usize),
    AffineB(usize),
    AffineC(usize),
    AffineD(usize),
    Custom(CoxeterMatrix),
}

impl CoxeterType {
    /// Checked constructor from a family and rank.
    pub fn new(family: Family, n: usize) -> Result<Self> {
        if n < family.min_rank() {
            return Err(Error::InvalidRank {
                family: family.name().to_string(),
                rank: n,
                min: family.min_rank(),
            });
        }
        Ok(match family {
            Family::A => CoxeterType::A(n),
            Family::C => CoxeterType::C(n),
            Family::D => CoxeterType::D(n),
            Family::AffineA => CoxeterType::AffineA(n),
            Family::AffineB => CoxeterType::AffineB(n),
            Family::AffineC => CoxeterType::AffineC(n),
            Family::AffineD => CoxeterType::AffineD(n),
        })
    }

    pub fn family(&self) -> Option<Family> {
        Some(match self {
            CoxeterType::A(_) => Family::A,
            CoxeterType::C(_) => Family::C,
            CoxeterType::D(_) => Family::D,
            CoxeterType::AffineA(_) => Family::AffineA,
            CoxeterType::AffineB(_) => Family::AffineB,
            CoxeterType::AffineC(_) => Family::AffineC,
            CoxeterType::AffineD(_) => Family::AffineD,
            CoxeterType::Custom(_) => return None,
        })
    }

    pub fn rank(&self) -> usize {
        match self {
            CoxeterType::A(n)
            | CoxeterType::C(n)
            | CoxeterType::D(n)
            | CoxeterType::AffineA(n)
            | CoxeterType::AffineB(n)
            | CoxeterType::AffineC(n)
            | CoxeterType::AffineD(n) => *n,
            CoxeterType::Custom(m) => m.size(),
        }
    }

    fn check_rank(&self) -> Result<()> {
        if let Some(fam) = self.family() {
            CoxeterType::new(fam, self.rank())?;
        }
        Ok(())
    }

    /// Number of generators `|S|`.
    pub fn generator_count(&self) -> usize {
        match self {
            CoxeterType::A(n) | CoxeterType::C(n) | CoxeterType::D(n) => *n,
            CoxeterType::AffineA(n)
            | CoxeterType::AffineB(n)
            | CoxeterType::AffineC(n)
            | CoxeterType::AffineD(n) => n + 1,
            CoxeterType::Custom(m) => m.size(),
        }
    }

    /// Display names, indexed by generator id.
    pub fn generator_names(&self) -> Vec<String> {
        let s = |i: usize| format!("s{i}");
        match *self {
            CoxeterType::A(n) | CoxeterType::C(n) => (1..=n).map(s).collect(),
            CoxeterType::D(n) => {
                let mut v: Vec<String> = (1..n).map(s).collect();
                v.push(format!("s{}'", n - 1));
                v
            }
            CoxeterType::AffineA(n) => (0..=n).map(s).collect(),
            CoxeterType::AffineB(n) => {
                let mut v = vec!["s0".to_string(), "s0'".to_string()];
                v.extend((1..=n - 2).map(s));
                v.push("s'".to_string());
                v
            }
            CoxeterType::AffineC(n) => {
                let mut v: Vec<String> = (0..n).map(s).collect();
                v.push("s'".to_string());
                v
            }
            CoxeterType::AffineD(n) => {
                let mut v = vec!["s0".to_string(), "s0'".to_string()];
                v.extend((1..=n - 2).map(s));
                v.push(format!("s{}'", n - 2));
                v
            }
            CoxeterType::Custom(ref m) => (0..m.size()).map(s).collect(),
        }
    }

    /// Short label such as `C3` or `AffD5`.
    pub fn label(&self) -> String {
        match self.family() {
            Some(f) => format!("{}{}", f.name(), self.rank()),
            None => format!("Custom{}", self.rank()),
        }
    }

    /// The graph `graph_from_matrix(build_matrix(self))` with this type's names.
    pub fn graph(&self) -> Result<CoxeterGraph> {
        let m = build_matrix(self)?;
        let mut g = graph_from_matrix(&m);
        g.names = Arc::new(self.generator_names());
        g.label = self.label();
        Ok(g)
    }
}

/// Builds the Coxeter matrix of a type.
pub fn build_matrix(t: &CoxeterType) -> Result<CoxeterMatrix> {
    t.check_rank()?;
    let size = t.generator_count();
    let mut m = CoxeterMatrix::commuting(size);
    let path = |m: &mut CoxeterMatrix, from: usize, to: usize| {
        for i in from..to {
            m.set_pair(i, i + 1, 3);
        }
    };
    match *t {
        CoxeterType::A(n) => path(&mut m, 0, n - 1),
        CoxeterType::C(n) => {
            path(&mut m, 0, n - 1);
            m.set_pair(n - 2, n - 1, 4);
        }
        CoxeterType::D(n) => {
            // ids 0..n-2 form the tail s1..s_{n-1}; id n-1 is s'_{n-1}, hung off s_{n-2}
            path(&mut m, 0, n - 2);
            if n >= 3 {
                m.set_pair(n - 1, n - 3, 3);
            }
        }
        CoxeterType::AffineA(n) => {
            path(&mut m, 0, n);
            m.set_pair(0, n, 3);
        }
        CoxeterType::AffineB(n) => {
            // s0, s0' | s1..s_{n-2} | s'
            m.set_pair(0, 2, 3);
            m.set_pair(1, 2, 3);
            path(&mut m, 2, n - 1);
            m.set_pair(n - 1, n, 4);
        }
        CoxeterType::AffineC(n) => {
            path(&mut m, 0, n);
            m.set_pair(0, 1, 4);
            m.set_pair(n - 1, n, 4);
        }
        CoxeterType::AffineD(n) => {
            // s0, s0' | s1..s_{n-2} | s'_{n-2}, hung off s_{n-3}
            m.set_pair(0, 2, 3);
            m.set_pair(1, 2, 3);
            path(&mut m, 2, n - 1);
            m.set_pair(n, n - 2, 3);
        }
        CoxeterType::Custom(ref custom) => return Ok(custom.clone()),
    }
    Ok(m)
}

/// Coxeter graph over a subset of a system's generators.
///
/// Vertex ids are never renumbered, so induced subgraphs keep the ids (and
/// names) of the system they came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterGraph {
    label: String,
    names: Arc<Vec<String>>,
    vertices: BTreeSet<GeneratorId>,
    edges: BTreeMap<(GeneratorId, GeneratorId), RelationOrder>,
}

/// Builds the Coxeter graph of a validated matrix.
pub fn graph_from_matrix(m: &CoxeterMatrix) -> CoxeterGraph {
    let vertices = (0..m.size()).map(GeneratorId).collect();
    let mut edges = BTreeMap::new();
    for i in 0..m.size() {
        for j in i + 1..m.size() {
            let e = m.get(i, j);
            if e.is_edge() {
                edges.insert((GeneratorId(i), GeneratorId(j)), e);
            }
        }
    }
    CoxeterGraph {
        label: format!("Custom{}", m.size()),
        names: Arc::new((0..m.size()).map(|i| format!("s{i}")).collect()),
        vertices,
        edges,
    }
}

fn ordered(a: GeneratorId, b: GeneratorId) -> (GeneratorId, GeneratorId) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

impl CoxeterGraph {
    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn vertices(&self) -> impl Iterator<Item = GeneratorId> + '_ {
        self.vertices.iter().copied()
    }

    pub fn vertex_set(&self) -> &BTreeSet<GeneratorId> {
        &self.vertices
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains(&self, v: GeneratorId) -> bool {
        self.vertices.contains(&v)
    }

    /// Edges `(i, j, weight)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (GeneratorId, GeneratorId, RelationOrder)> + '_ {
        self.edges.iter().map(|(&(a, b), &w)| (a, b, w))
    }

    pub fn weight(&self, a: GeneratorId, b: GeneratorId) -> Option<RelationOrder> {
        self.edges.get(&ordered(a, b)).copied()
    }

    pub fn adjacent(&self, a: GeneratorId, b: GeneratorId) -> bool {
        self.edges.contains_key(&ordered(a, b))
    }

    pub fn neighbors(&self, v: GeneratorId) -> Vec<GeneratorId> {
        self.edges
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: GeneratorId) -> usize {
        self.edges
            .keys()
            .filter(|&&(a, b)| a == v || b == v)
            .count()
    }

    /// Display name of a generator of the ambient system.
    pub fn name(&self, v: GeneratorId) -> &str {
        self.names.get(v.0).map(String::as_str).unwrap_or("?")
    }

    /// Name table of the ambient system (indexed by id).
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Looks up a generator by display name.
    pub fn id_of(&self, name: &str) -> Option<GeneratorId> {
        self.names.iter().position(|n| n == name).map(GeneratorId)
    }

    /// Whether no two members of `set` are adjacent.
    pub fn is_independent(&self, set: &[GeneratorId]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &a)| set[i + 1..].iter().all(|&b| a != b && !self.adjacent(a, b)))
    }

    /// Subgraph induced on `keep`.
    pub fn induced_subgraph(&self, keep: &BTreeSet<GeneratorId>) -> Result<CoxeterGraph> {
        if let Some(bad) = keep.iter().find(|v| !self.vertices.contains(v)) {
            return Err(domain(format!(
                "generator {} is not a vertex of {}",
                bad, self.label
            )));
        }
        let edges = self
            .edges
            .iter()
            .filter(|((a, b), _)| keep.contains(a) && keep.contains(b))
            .map(|(&k, &w)| (k, w))
            .collect();
        Ok(CoxeterGraph {
            label: self.label.clone(),
            names: Arc::clone(&self.names),
            vertices: keep.clone(),
            edges,
        })
    }

    /// Subgraph obtained by deleting `remove` (ids outside the graph are an error).
    pub fn without(&self, remove: &BTreeSet<GeneratorId>) -> Result<CoxeterGraph> {
        if let Some(bad) = remove.iter().find(|v| !self.vertices.contains(v)) {
            return Err(domain(format!(
                "generator {} is not a vertex of {}",
                bad, self.label
            )));
        }
        let keep = self.vertices.difference(remove).copied().collect();
        self.induced_subgraph(&keep)
    }

    /// Connected components as sorted vertex lists, ordered by smallest id.
    pub fn components(&self) -> Vec<Vec<GeneratorId>> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for start in self.vertices() {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for u in self.neighbors(v) {
                    if seen.insert(u) {
                        comp.push(u);
                        queue.push_back(u);
                    }
                }
            }
            comp.sort();
            out.push(comp);
        }
        out
    }

    /// Connected components tagged by shape.
    pub fn classify_components(&self) -> Vec<ComponentClass> {
        self.components()
            .into_iter()
            .map(|verts| {
                let shape = self.shape_of(&verts);
                ComponentClass {
                    vertices: verts,
                    shape,
                }
            })
            .collect()
    }

    fn shape_of(&self, comp: &[GeneratorId]) -> ComponentShape {
        let k = comp.len();
        let edges = self
            .edges
            .keys()
            .filter(|(a, _)| comp.binary_search(a).is_ok())
            .count();
        if edges + 1 != k {
            return ComponentShape::Other;
        }
        let degrees: Vec<usize> = comp.iter().map(|&v| self.degree(v)).collect();
        let max = degrees.iter().copied().max().unwrap_or(0);
        if max <= 2 {
            return ComponentShape::Path(k);
        }
        let branch: Vec<usize> = (0..k).filter(|&i| degrees[i] >= 3).collect();
        if branch.len() != 1 || degrees[branch[0]] != 3 {
            return ComponentShape::Other;
        }
        // a fork is a path with one end split into two leaves
        let leaves = self
            .neighbors(comp[branch[0]])
            .into_iter()
            .filter(|&u| self.degree(u) == 1)
            .count();
        if leaves >= 2 {
            ComponentShape::Fork(k)
        } else {
            ComponentShape::Other
        }
    }

    /// Graphviz rendering; weights are printed only when greater than 3.
    pub fn to_dot(&self) -> String {
        let mut s = format!("graph \"{}\" {{\n", self.label);
        for v in self.vertices() {
            s.push_str(&format!("  \"{}\";\n", self.name(v)));
        }
        for (a, b, w) in self.edges() {
            let label = match w {
                RelationOrder::Finite(3) => String::new(),
                other => format!(" [label=\"{other}\"]"),
            };
            s.push_str(&format!(
                "  \"{}\" -- \"{}\"{};\n",
                self.name(a),
                self.name(b),
                label
            ));
        }
        s.push_str("}\n");
        s
    }

    /// `{vertices: [name], edges: [[i, j, weight]]}` with `i`, `j` positions in `vertices`.
    pub fn to_json(&self) -> serde_json::Value {
        let pos: BTreeMap<GeneratorId, usize> =
            self.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let vertices: Vec<&str> = self.vertices().map(|v| self.name(v)).collect();
        let edges: Vec<serde_json::Value> = self
            .edges()
            .map(|(a, b, w)| {
                let weight = match w {
                    RelationOrder::Finite(m) => serde_json::json!(m),
                    RelationOrder::Infinity => serde_json::json!("inf"),
                };
                serde_json::json!([pos[&a], pos[&b], weight])
            })
            .collect();
        serde_json::json!({ "vertices": vertices, "edges": edges })
    }
}

/// Shape of one connected component.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentShape {
    /// Isomorphic to the path on `k` vertices.
    Path(usize),
    /// Isomorphic to the type-D graph on `k` vertices (one degree-3 vertex).
    Fork(usize),
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentClass {
    pub vertices: Vec<GeneratorId>,
    pub shape: ComponentShape,
}

/// Graph of a finite family at any rank `n >= 1`, including the degenerate
/// `C1` (one vertex) and `D1` (no vertices) used by the counting tables.
pub(crate) fn finite_graph(family: Family, n: usize) -> Result<CoxeterGraph> {
    match (family, n) {
        (Family::C, 1) => Ok(graph_from_matrix(&CoxeterMatrix::commuting(1))),
        (Family::D, 1) => Ok(graph_from_matrix(&CoxeterMatrix::commuting(0))),
        (f, _) if f.is_affine() => Err(Error::Unsupported(format!("{f} is an infinite family"))),
        (f, n) => CoxeterType::new(f, n)?.graph(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ids(v: &[usize]) -> BTreeSet<GeneratorId> {
        v.iter().copied().map(GeneratorId).collect()
    }

    fn shapes(g: &CoxeterGraph) -> Vec<ComponentShape> {
        let mut s: Vec<_> = g
            .classify_components()
            .into_iter()
            .map(|c| c.shape)
            .collect();
        s.sort();
        s
    }

    #[test]
    fn a3_is_weight_three_path() {
        let g = CoxeterType::A(3).graph().unwrap();
        assert_eq!(g.vertex_count(), 3);
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![
                (GeneratorId(0), GeneratorId(1), RelationOrder::Finite(3)),
                (GeneratorId(1), GeneratorId(2), RelationOrder::Finite(3)),
            ]
        );
        assert_eq!(g.name(GeneratorId(2)), "s3");
    }

    #[test]
    fn c2_single_weight_four_edge() {
        let g = CoxeterType::C(2).graph().unwrap();
        let edges: Vec<_> = g.edges().collect();
        assert_eq!(
            edges,
            vec![(GeneratorId(0), GeneratorId(1), RelationOrder::Finite(4))]
        );
    }

    #[test]
    fn c3_path_weights() {
        let g = graph_from_matrix(&build_matrix(&CoxeterType::C(3)).unwrap());
        let w: Vec<_> = g.edges().map(|(_, _, w)| w).collect();
        assert_eq!(w, vec![RelationOrder::Finite(3), RelationOrder::Finite(4)]);
    }

    #[test]
    fn a1_isolated_vertex() {
        let g = CoxeterType::A(1).graph().unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
    }

    #[test]
    fn affine_a2_triangle() {
        let g = CoxeterType::AffineA(2).graph().unwrap();
        assert_eq!(g.vertex_count(), 3);
        assert_eq!(g.edge_count(), 3);
        let s0 = g.id_of("s0").unwrap();
        assert!(g.adjacent(s0, g.id_of("s1").unwrap()));
        assert!(g.adjacent(s0, g.id_of("s2").unwrap()));
    }

    #[test]
    fn rank_below_minimum_rejected() {
        for (f, n) in [
            (Family::A, 0),
            (Family::C, 1),
            (Family::D, 1),
            (Family::AffineA, 1),
            (Family::AffineB, 2),
            (Family::AffineC, 1),
            (Family::AffineD, 3),
        ] {
            assert!(matches!(
                CoxeterType::new(f, n),
                Err(Error::InvalidRank { .. })
            ));
            let raw = match f {
                Family::A => CoxeterType::A(n),
                Family::C => CoxeterType::C(n),
                Family::D => CoxeterType::D(n),
                Family::AffineA => CoxeterType::AffineA(n),
                Family::AffineB => CoxeterType::AffineB(n),
                Family::AffineC => CoxeterType::AffineC(n),
                Family::AffineD => CoxeterType::AffineD(n),
            };
            assert!(build_matrix(&raw).is_err());
        }
    }

    #[test]
    fn matrix_validation() {
        use RelationOrder::*;
        assert!(CoxeterMatrix::new(vec![vec![Finite(1)]]).is_ok());
        assert!(
            CoxeterMatrix::new(vec![vec![Finite(1), Finite(3)], vec![Finite(4), Finite(1)]])
                .is_err()
        );
        assert!(
            CoxeterMatrix::new(vec![vec![Finite(1), Finite(1)], vec![Finite(1), Finite(1)]])
                .is_err()
        );
        assert!(CoxeterMatrix::new(vec![vec![Finite(2)]]).is_err());
        let inf =
            CoxeterMatrix::new(vec![vec![Finite(1), Infinity], vec![Infinity, Finite(1)]]).unwrap();
        assert_eq!(graph_from_matrix(&inf).edge_count(), 1);
    }

    #[test]
    fn single_and_commuting_matrices() {
        let g = graph_from_matrix(&CoxeterMatrix::commuting(1));
        assert_eq!((g.vertex_count(), g.edge_count()), (1, 0));
        let g = graph_from_matrix(&CoxeterMatrix::commuting(4));
        assert_eq!((g.vertex_count(), g.edge_count()), (4, 0));
        assert_eq!(shapes(&g), vec![ComponentShape::Path(1); 4]);
    }

    #[test]
    fn a8_induced_example() {
        let g = CoxeterType::A(8).graph().unwrap();
        // s2, s3, s5, s8
        let sub = g.induced_subgraph(&ids(&[1, 2, 4, 7])).unwrap();
        assert_eq!(sub.edge_count(), 1);
        assert!(sub.adjacent(GeneratorId(1), GeneratorId(2)));
        let classes = sub.classify_components();
        let got: Vec<_> = classes.iter().map(|c| c.shape).collect();
        assert_eq!(
            got,
            vec![
                ComponentShape::Path(2),
                ComponentShape::Path(1),
                ComponentShape::Path(1)
            ]
        );
    }

    #[test]
    fn induced_extremes_and_errors() {
        let g = CoxeterType::D(5).graph().unwrap();
        let all = g.vertex_set().clone();
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let empty = g.induced_subgraph(&BTreeSet::new()).unwrap();
        assert_eq!(empty.vertex_count(), 0);
        assert!(empty.classify_components().is_empty());
        assert!(matches!(
            g.induced_subgraph(&ids(&[9])),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn d5_fork_and_center_removed() {
        let g = CoxeterType::D(5).graph().unwrap();
        assert_eq!(shapes(&g), vec![ComponentShape::Fork(5)]);
        let center = g.vertices().find(|&v| g.degree(v) == 3).unwrap();
        assert_eq!(g.name(center), "s3");
        let rest = g.without(&BTreeSet::from([center])).unwrap();
        assert_eq!(
            shapes(&rest),
            vec![
                ComponentShape::Path(1),
                ComponentShape::Path(1),
                ComponentShape::Path(2)
            ]
        );
    }

    #[test]
    fn d_names_follow_fork_labels() {
        let t = CoxeterType::D(4);
        assert_eq!(t.generator_names(), vec!["s1", "s2", "s3", "s3'"]);
        let g = t.graph().unwrap();
        assert!(g.adjacent(g.id_of("s2").unwrap(), g.id_of("s3'").unwrap()));
        assert!(!g.adjacent(g.id_of("s3").unwrap(), g.id_of("s3'").unwrap()));
    }

    #[test]
    fn affine_shapes_match_diagrams() {
        let b = CoxeterType::AffineB(5).graph().unwrap();
        assert_eq!(b.names(), &["s0", "s0'", "s1", "s2", "s3", "s'"]);
        assert_eq!(
            b.weight(b.id_of("s3").unwrap(), b.id_of("s'").unwrap()),
            Some(RelationOrder::Finite(4))
        );
        assert_eq!(shapes(&b), vec![ComponentShape::Fork(6)]);

        let c = CoxeterType::AffineC(4).graph().unwrap();
        assert_eq!(shapes(&c), vec![ComponentShape::Path(5)]);
        let weights: Vec<_> = c.edges().map(|(_, _, w)| w).collect();
        assert_eq!(weights.first(), Some(&RelationOrder::Finite(4)));
        assert_eq!(weights.last(), Some(&RelationOrder::Finite(4)));

        let d = CoxeterType::AffineD(6).graph().unwrap();
        assert_eq!(d.names(), &["s0", "s0'", "s1", "s2", "s3", "s4", "s4'"]);
        assert_eq!(shapes(&d), vec![ComponentShape::Other]);
        let deg3: Vec<_> = d.vertices().filter(|&v| d.degree(v) == 3).collect();
        assert_eq!(deg3.len(), 2);
        // deleting the middle splits into two forks
        let split = d.without(&ids(&[3])).unwrap();
        assert_eq!(
            shapes(&split),
            vec![ComponentShape::Path(3), ComponentShape::Path(3)]
        );
        let split = d.without(&ids(&[0])).unwrap();
        assert_eq!(shapes(&split), vec![ComponentShape::Fork(6)]);
    }

    #[test]
    fn vertex_and_edge_counts_across_families() {
        for n in 1..=12 {
            for f in [
                Family::A,
                Family::C,
                Family::D,
                Family::AffineA,
                Family::AffineB,
                Family::AffineC,
                Family::AffineD,
            ] {
                let Ok(t) = CoxeterType::new(f, n) else {
                    continue;
                };
                let g = t.graph().unwrap();
                let v = if f.is_affine() { n + 1 } else { n };
                assert_eq!(g.vertex_count(), v, "{f}{n}");
                let (e, comps) = match f {
                    Family::AffineA => (n + 1, 1),
                    Family::D if n == 2 => (0, 2),
                    _ => (v - 1, 1),
                };
                assert_eq!(g.edge_count(), e, "{f}{n}");
                assert_eq!(g.components().len(), comps, "{f}{n}");
                let forks = g
                    .classify_components()
                    .iter()
                    .filter(|c| matches!(c.shape, ComponentShape::Fork(_)))
                    .count();
                assert!(forks <= 1, "{f}{n}");
                // commutation check: order 2 exactly when non-adjacent
                let m = build_matrix(&t).unwrap();
                for i in 0..v {
                    for j in 0..v {
                        if i != j {
                            assert_eq!(
                                m.get(i, j) == RelationOrder::Finite(2),
                                !g.adjacent(GeneratorId(i), GeneratorId(j))
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn dot_labels_only_heavy_edges() {
        let dot = CoxeterType::C(3).graph().unwrap().to_dot();
        assert!(dot.contains("\"s1\" -- \"s2\";"));
        assert!(dot.contains("\"s2\" -- \"s3\" [label=\"4\"];"));
        let json = CoxeterType::C(3).graph().unwrap().to_json();
        assert_eq!(json["vertices"], serde_json::json!(["s1", "s2", "s3"]));
        assert_eq!(json["edges"], serde_json::json!([[0, 1, 3], [1, 2, 4]]));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("AffD".parse::<Family>().unwrap(), Family::AffineD);
        assert_eq!("c".parse::<Family>().unwrap(), Family::C);
        assert!("E".parse::<Family>().is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn induced_idempotent_and_components_partition(
                n in 2usize..12,
                mask in any::<u16>(),
                fam in 0usize..3,
            ) {
                let f = [Family::A, Family::C, Family::D][fam];
                let g = CoxeterType::new(f, n).unwrap().graph().unwrap();
                let keep: BTreeSet<_> = g.vertices().filter(|v| mask >> v.0 & 1 == 1).collect();
                let once = g.induced_subgraph(&keep).unwrap();
                let twice = once.induced_subgraph(&keep).unwrap();
                prop_assert_eq!(&once, &twice);
                let classes = once.classify_components();
                let mut covered = BTreeSet::new();
                for c in &classes {
                    for v in &c.vertices {
                        prop_assert!(covered.insert(*v));
                    }
                    let edges = once.edges().filter(|(a, _, _)| c.vertices.contains(a)).count();
                    match c.shape {
                        ComponentShape::Path(k) => {
                            prop_assert_eq!(k, c.vertices.len());
                            prop_assert_eq!(edges + 1, k);
                        }
                        ComponentShape::Fork(k) => {
                            prop_assert_eq!(k, c.vertices.len());
                            prop_assert_eq!(edges + 1, k);
                            let deg3 = c.vertices.iter().filter(|&&v| once.degree(v) == 3).count();
                            prop_assert_eq!(deg3, 1);
                        }
                        ComponentShape::Other => prop_assert!(false, "finite family gave Other"),
                    }
                }
                prop_assert_eq!(covered, keep);
            }
        }
    }
}
