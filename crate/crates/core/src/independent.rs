//! Independent sets of Coxeter graphs: enumeration, per-size counts and the
//! closed forms for paths and forks.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{domain, size_limit, Result, DEFAULT_BRUTE_FORCE_VERTICES};
use crate::graph::{CoxeterGraph, GeneratorId};
use crate::sequences::binomial;

/// Number of independent sets of each size: `counts[k] = i_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndependenceProfile {
    counts: Vec<BigUint>,
    total: BigUint,
}

impl IndependenceProfile {
    fn from_poly(mut counts: Vec<BigUint>) -> Self {
        trim(&mut counts);
        let total = counts.iter().sum();
        IndependenceProfile { counts, total }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    /// `i_k`, zero past the largest independent set.
    pub fn count(&self, k: usize) -> BigUint {
        self.counts.get(k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> &BigUint {
        &self.total
    }

    /// Size of a largest independent set.
    pub fn max_size(&self) -> usize {
        self.counts.len() - 1
    }
}

impl Serialize for IndependenceProfile {
    /// JSON array of decimal strings.
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter().map(|c| c.to_string()))
    }
}

/// All independent sets, canonically ordered (by size, then lexicographically).
pub fn enumerate_independent_sets(g: &CoxeterGraph) -> Result<Vec<Vec<GeneratorId>>> {
    enumerate_independent_sets_with_limit(g, DEFAULT_BRUTE_FORCE_VERTICES)
}

pub fn enumerate_independent_sets_with_limit(
    g: &CoxeterGraph,
    max_vertices: usize,
) -> Result<Vec<Vec<GeneratorId>>> {
    if g.vertex_count() > max_vertices {
        return Err(size_limit(
            "independent-set enumeration (vertices)",
            g.vertex_count() as u128,
            max_vertices as u128,
        ));
    }
    let verts: Vec<GeneratorId> = g.vertices().collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend_sets(g, &verts, 0, &mut current, &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

fn extend_sets(
    g: &CoxeterGraph,
    verts: &[GeneratorId],
    from: usize,
    current: &mut Vec<GeneratorId>,
    out: &mut Vec<Vec<GeneratorId>>,
) {
    out.push(current.clone());
    for i in from..verts.len() {
        let v = verts[i];
        if current.iter().all(|&u| !g.adjacent(u, v)) {
            current.push(v);
            extend_sets(g, verts, i + 1, current, out);
            current.pop();
        }
    }
}

/// Exact `i_k` for every `k`, multiplied across connected components.
pub fn count_by_size(g: &CoxeterGraph) -> IndependenceProfile {
    let local = Local::from_graph(g);
    let all: Vec<usize> = (0..local.adj.len()).collect();
    IndependenceProfile::from_poly(local.poly(&all))
}

/// `i_k(P_n) = C(n + 1 - k, k)`.
pub fn path_count(n: usize, k: usize) -> BigUint {
    binomial(n as i64 + 1 - k as i64, k as i64)
}

/// `i_k` of the type-D graph on `n >= 2` vertices:
/// `C(n-k, k-2) + C(n-k-1, k-1) + C(n-k, k)`.
pub fn fork_count(n: usize, k: usize) -> Result<BigUint> {
    if n < 2 {
        return Err(domain(format!(
            "fork graph needs at least 2 vertices, got {n}"
        )));
    }
    let (n, k) = (n as i64, k as i64);
    Ok(binomial(n - k, k - 2) + binomial(n - k - 1, k - 1) + binomial(n - k, k))
}

/// Polynomial in x with `i_k` as the coefficient of `x^k`.
type Poly = Vec<BigUint>;

fn trim(p: &mut Poly) {
    while p.len() > 1 && p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigUint::zero());
    }
}

fn poly_one() -> Poly {
    vec![BigUint::one()]
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigUint::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_add(a: &Poly, b: &Poly) -> Poly {
    let mut out = vec![BigUint::zero(); a.len().max(b.len())];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, x) in b.iter().enumerate() {
        out[i] += x;
    }
    trim(&mut out);
    out
}

fn poly_shift(a: &Poly) -> Poly {
    let mut out = Vec::with_capacity(a.len() + 1);
    out.push(BigUint::zero());
    out.extend(a.iter().cloned());
    out
}

/// Graph renumbered to `0..k` for the counting routines.
struct Local {
    adj: Vec<Vec<usize>>,
}

impl Local {
    fn from_graph(g: &CoxeterGraph) -> Self {
        let pos: BTreeMap<GeneratorId, usize> =
            g.vertices().enumerate().map(|(i, v)| (v, i)).collect();
        let mut adj = vec![Vec::new(); pos.len()];
        for (a, b, _) in g.edges() {
            adj[pos[&a]].push(pos[&b]);
            adj[pos[&b]].push(pos[&a]);
        }
        Local { adj }
    }

    /// Independence polynomial of the subgraph induced on `set`.
    fn poly(&self, set: &[usize]) -> Poly {
        let mut inside = vec![false; self.adj.len()];
        for &v in set {
            inside[v] = true;
        }
        let mut seen = vec![false; self.adj.len()];
        let mut acc = poly_one();
        for &start in set {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                for &u in &self.adj[comp[i]] {
                    if inside[u] && !seen[u] {
                        seen[u] = true;
                        comp.push(u);
                    }
                }
                i += 1;
            }
            acc = poly_mul(&acc, &self.component_poly(&comp, &inside));
        }
        acc
    }

    fn component_poly(&self, comp: &[usize], inside: &[bool]) -> Poly {
        let nbrs = |v: usize| self.adj[v].iter().copied().filter(move |&u| inside[u]);
        let degrees: Vec<usize> = comp.iter().map(|&v| nbrs(v).count()).collect();
        let edges: usize = degrees.iter().sum::<usize>() / 2;
        if edges + 1 == comp.len() {
            return self.tree_poly(comp[0], inside);
        }
        if degrees.iter().all(|&d| d == 2) {
            return self.cycle_poly(comp, inside);
        }
        // general graph: branch on a vertex of maximum degree
        let (idx, _) = degrees
            .iter()
            .enumerate()
            .max_by_key(|&(_, d)| *d)
            .expect("component is non-empty");
        let v = comp[idx];
        let without: Vec<usize> = comp.iter().copied().filter(|&u| u != v).collect();
        let closed: Vec<usize> = without
            .iter()
            .copied()
            .filter(|&u| !self.adj[v].contains(&u))
            .collect();
        poly_add(&self.poly(&without), &poly_shift(&self.poly(&closed)))
    }

    /// Rooted DP: (sets avoiding the root, sets containing the root).
    fn tree_poly(&self, root: usize, inside: &[bool]) -> Poly {
        let n = self.adj.len();
        let mut parent = vec![usize::MAX; n];
        let mut order = vec![root];
        parent[root] = root;
        let mut i = 0;
        while i < order.len() {
            let v = order[i];
            for &u in &self.adj[v] {
                if inside[u] && parent[u] == usize::MAX {
                    parent[u] = v;
                    order.push(u);
                }
            }
            i += 1;
        }
        let mut out_of: Vec<Poly> = vec![Vec::new(); n];
        let mut into: Vec<Poly> = vec![Vec::new(); n];
        for &v in order.iter().rev() {
            let mut excl = poly_one();
            let mut incl = vec![BigUint::zero(), BigUint::one()];
            for &u in &self.adj[v] {
                if inside[u] && parent[u] == v && u != v {
                    excl = poly_mul(&excl, &poly_add(&out_of[u], &into[u]));
                    incl = poly_mul(&incl, &out_of[u]);
                }
            }
            out_of[v] = excl;
            into[v] = incl;
        }
        poly_add(&out_of[root], &into[root])
    }

    /// Transfer matrix around a simple cycle.
    fn cycle_poly(&self, comp: &[usize], inside: &[bool]) -> Poly {
        let mut walk = vec![comp[0]];
        let mut prev = usize::MAX;
        let mut cur = comp[0];
        loop {
            let next = self.adj[cur]
                .iter()
                .copied()
                .find(|&u| inside[u] && u != prev && u != walk[0])
                .filter(|u| !walk.contains(u));
            match next {
                Some(u) => {
                    walk.push(u);
                    prev = cur;
                    cur = u;
                }
                None => break,
            }
        }
        debug_assert_eq!(walk.len(), comp.len());
        let mut total = Vec::new();
        for first_in in [false, true] {
            // state: (last vertex excluded, last vertex included)
            let (mut ex, mut inc) = if first_in {
                (Vec::new(), vec![BigUint::zero(), BigUint::one()])
            } else {
                (poly_one(), Vec::new())
            };
            for _ in 1..walk.len() {
                let new_ex = poly_add_opt(&ex, &inc);
                let new_inc = if ex.is_empty() {
                    Vec::new()
                } else {
                    poly_shift(&ex)
                };
                ex = new_ex;
                inc = new_inc;
            }
            let closing = if first_in {
                ex
            } else {
                poly_add_opt(&ex, &inc)
            };
            total = poly_add_opt(&total, &closing);
        }
        total
    }
}

fn poly_add_opt(a: &Poly, b: &Poly) -> Poly {
    match (a.is_empty(), b.is_empty()) {
        (true, true) => Vec::new(),
        (true, false) => b.clone(),
        (false, true) => a.clone(),
        (false, false) => poly_add(a, b),
    }
}
