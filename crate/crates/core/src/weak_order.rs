//! The right weak order of a finite Coxeter group, built element by element,
//! and two independent Boolean-interval tests: an order-isomorphism oracle and
//! the commuting-generators criterion.

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{domain, size_limit, size_limit_from_env, Error, Result};
use crate::graph::{CoxeterGraph, Family, GeneratorId};
use crate::group::{all_elements_with_limit, finite_order, GroupElement};

/// Largest rank the isomorphism oracle will examine.
pub const ORACLE_MAX_RANK: usize = 6;

/// Largest poset for which [`WeakOrderPoset::reachability`] materializes
/// the full order relation.
pub const REACHABILITY_MAX_ELEMENTS: usize = 20_000;

#[derive(Clone, Debug)]
pub struct WeakOrderPoset {
    family: Family,
    rank_n: usize,
    graph: CoxeterGraph,
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    lengths: Vec<usize>,
    up: Vec<Vec<(GeneratorId, usize)>>,
    down: Vec<Vec<(GeneratorId, usize)>>,
}

pub fn build_weak_order(family: Family, n: usize) -> Result<WeakOrderPoset> {
    build_weak_order_with_limit(family, n, size_limit_from_env())
}

pub fn build_weak_order_with_limit(
    family: Family,
    n: usize,
    limit: u128,
) -> Result<WeakOrderPoset> {
    // validates family, rank and the size bound
    all_elements_with_limit(family, n, limit)?;
    let identity = GroupElement::identity(family, n)?;
    let graph = identity.graph();

    let mut elements = vec![identity.clone()];
    let mut index = HashMap::from([(identity, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for s in 0..n {
            let mut t = elements[i].clone();
            t.act(s);
            if !index.contains_key(&t) {
                index.insert(t.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(t);
            }
        }
    }
    let lengths: Vec<usize> = elements.iter().map(GroupElement::length).collect();
    let mut up = vec![Vec::new(); elements.len()];
    let mut down = vec![Vec::new(); elements.len()];
    for (i, e) in elements.iter().enumerate() {
        for s in e.generators() {
            let t = e.apply_generator(s)?;
            let j = index[&t];
            if lengths[j] == lengths[i] + 1 {
                up[i].push((s, j));
                down[j].push((s, i));
            }
        }
    }
    Ok(WeakOrderPoset {
        family,
        rank_n: n,
        graph,
        elements,
        index,
        lengths,
        up,
        down,
    })
}

impl WeakOrderPoset {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank_n(&self) -> usize {
        self.rank_n
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &GroupElement {
        &self.elements[i]
    }

    pub fn index_of(&self, e: &GroupElement) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// Length (poset rank) of element `i`.
    pub fn length(&self, i: usize) -> usize {
        self.lengths[i]
    }

    pub fn up_covers(&self, i: usize) -> &[(GeneratorId, usize)] {
        &self.up[i]
    }

    pub fn down_covers(&self, i: usize) -> &[(GeneratorId, usize)] {
        &self.down[i]
    }

    pub fn edge_count(&self) -> usize {
        self.up.iter().map(Vec::len).sum()
    }

    pub fn minimum(&self) -> usize {
        0
    }

    pub fn maximum(&self) -> usize {
        (0..self.len())
            .max_by_key(|&i| self.lengths[i])
            .expect("non-empty poset")
    }

    fn check(&self, i: usize) -> Result<()> {
        if i >= self.len() {
            return Err(domain(format!("element index {i} out of range")));
        }
        Ok(())
    }

    /// Elements `x >= v` with `l(x) <= max_len`.
    fn up_set_bounded(&self, v: usize, max_len: usize) -> Vec<usize> {
        let mut seen = BTreeSet::from([v]);
        let mut queue = VecDeque::from([v]);
        while let Some(x) = queue.pop_front() {
            if self.lengths[x] >= max_len {
                continue;
            }
            for &(_, y) in &self.up[x] {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }

    /// Elements `x <= w` with `l(x) >= min_len`.
    fn down_set_bounded(&self, w: usize, min_len: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::from([w]);
        let mut queue = VecDeque::from([w]);
        while let Some(x) = queue.pop_front() {
            if self.lengths[x] <= min_len {
                continue;
            }
            for &(_, y) in &self.down[x] {
                if seen.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// `{x : v <= x <= w}`, sorted; empty when `v` is not below `w`.
    pub fn interval(&self, v: usize, w: usize) -> Vec<usize> {
        if v >= self.len() || w >= self.len() || self.lengths[v] > self.lengths[w] {
            return Vec::new();
        }
        let below_w = self.down_set_bounded(w, self.lengths[v]);
        if !below_w.contains(&v) {
            return Vec::new();
        }
        self.up_set_bounded(v, self.lengths[w])
            .into_iter()
            .filter(|x| below_w.contains(x))
            .collect()
    }

    pub fn leq(&self, v: usize, w: usize) -> bool {
        !self.interval(v, w).is_empty()
    }

    /// Full order relation as per-element up-set bitsets.
    pub fn reachability(&self) -> Result<Reachability> {
        if self.len() > REACHABILITY_MAX_ELEMENTS {
            return Err(size_limit(
                "poset size for full reachability",
                self.len() as u128,
                REACHABILITY_MAX_ELEMENTS as u128,
            ));
        }
        let words = self.len().div_ceil(64);
        let mut up = vec![vec![0u64; words]; self.len()];
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.lengths[i]));
        for x in order {
            let mut bits = vec![0u64; words];
            bits[x / 64] |= 1 << (x % 64);
            for &(_, y) in &self.up[x] {
                for (b, o) in bits.iter_mut().zip(&up[y]) {
                    *b |= o;
                }
            }
            up[x] = bits;
        }
        Ok(Reachability { up })
    }

    /// Graphviz Hasse diagram, bottom to top, edges labeled by generator.
    pub fn to_dot(&self) -> String {
        let mut s = format!(
            "digraph \"weak_{}{}\" {{\n  rankdir=BT;\n  node [shape=plaintext];\n",
            self.family, self.rank_n
        );
        let max = self.lengths.iter().copied().max().unwrap_or(0);
        for l in 0..=max {
            let names: Vec<String> = (0..self.len())
                .filter(|&i| self.lengths[i] == l)
                .map(|i| format!("\"{}\"", self.elements[i]))
                .collect();
            s.push_str(&format!("  {{ rank=same; {} }}\n", names.join("; ")));
        }
        for (i, covers) in self.up.iter().enumerate() {
            for &(g, j) in covers {
                s.push_str(&format!(
                    "  \"{}\" -> \"{}\" [label=\"{}\", arrowhead=none];\n",
                    self.elements[i],
                    self.elements[j],
                    self.graph.name(g)
                ));
            }
        }
        s.push_str("}\n");
        s
    }
}

/// Up-sets of every element, one bitset each.
pub struct Reachability {
    up: Vec<Vec<u64>>,
}

impl Reachability {
    pub fn leq(&self, v: usize, w: usize) -> bool {
        self.up[v][w / 64] >> (w % 64) & 1 == 1
    }

    /// Elements above `v`.
    pub fn up_set(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.up[v].iter().enumerate().flat_map(|(wi, &word)| {
            (0..64)
                .filter(move |b| word >> b & 1 == 1)
                .map(move |b| wi * 64 + b)
        })
    }
}

/// Whether `[v, w]` is order-isomorphic to a subset lattice.
///
/// Atoms of the interval are assigned to coordinates; the candidate map sends
/// `x` to the set of atoms below it, and the interval is Boolean iff that map
/// is a bijection onto all subsets that preserves and reflects the order.
pub fn is_boolean_oracle(p: &WeakOrderPoset, v: usize, w: usize) -> Result<bool> {
    p.check(v)?;
    p.check(w)?;
    let elems = p.interval(v, w);
    oracle_core(p, v, w, &elems, |a, b| p.leq(a, b))
}

/// [`is_boolean_oracle`] against a precomputed order relation.
pub fn is_boolean_oracle_with(
    p: &WeakOrderPoset,
    reach: &Reachability,
    v: usize,
    w: usize,
) -> Result<bool> {
    p.check(v)?;
    p.check(w)?;
    if !reach.leq(v, w) {
        return Ok(false);
    }
    let atoms = p.up[v].iter().filter(|&&(_, a)| reach.leq(a, w)).count();
    if atoms != p.lengths[w] - p.lengths[v] {
        return Ok(false);
    }
    let elems: Vec<usize> = reach.up_set(v).filter(|&x| reach.leq(x, w)).collect();
    oracle_core(p, v, w, &elems, |a, b| reach.leq(a, b))
}

fn oracle_core(
    p: &WeakOrderPoset,
    v: usize,
    w: usize,
    elems: &[usize],
    leq: impl Fn(usize, usize) -> bool,
) -> Result<bool> {
    if elems.is_empty() {
        return Ok(false);
    }
    let k = p.lengths[w] - p.lengths[v];
    let atoms: Vec<usize> = elems
        .iter()
        .copied()
        .filter(|&x| p.lengths[x] == p.lengths[v] + 1)
        .collect();
    // a subset lattice of rank k has exactly k atoms
    if atoms.len() != k {
        return Ok(false);
    }
    if k > ORACLE_MAX_RANK {
        return Err(size_limit(
            "interval rank for the isomorphism oracle",
            k as u128,
            ORACLE_MAX_RANK as u128,
        ));
    }
    if elems.len() != 1 << k {
        return Ok(false);
    }
    let masks: Vec<u32> = elems
        .iter()
        .map(|&x| {
            atoms
                .iter()
                .enumerate()
                .filter(|&(_, &a)| leq(a, x))
                .fold(0u32, |m, (bit, _)| m | 1 << bit)
        })
        .collect();
    let distinct: BTreeSet<u32> = masks.iter().copied().collect();
    if distinct.len() != elems.len() {
        return Ok(false);
    }
    for (i, &x) in elems.iter().enumerate() {
        for (j, &y) in elems.iter().enumerate() {
            let subset = masks[i] & !masks[j] == 0;
            if subset != leq(x, y) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `[v, w]` is Boolean iff `u = v^{-1} w` is a product of distinct pairwise
/// commuting generators and lengths add: `l(w) = l(v) + l(u)`.
pub fn is_boolean_tenner(v: &GroupElement, w: &GroupElement) -> Result<bool> {
    let u = v.left_quotient(w)?;
    let supp: Vec<GeneratorId> = u.support().into_iter().collect();
    let len = u.length();
    if len != supp.len() || w.length() != v.length() + len {
        return Ok(false);
    }
    Ok(v.graph().is_independent(&supp))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BooleanIntervalRecord {
    pub min_index: usize,
    pub max_index: usize,
    pub rank: usize,
    pub support: BTreeSet<GeneratorId>,
}

#[derive(Serialize)]
struct RecordJson {
    min: String,
    max: String,
    rank: usize,
    support: Vec<String>,
}

impl BooleanIntervalRecord {
    /// `{min, max, rank, support}` with elements in one-line text.
    pub fn to_json(&self, p: &WeakOrderPoset) -> serde_json::Value {
        serde_json::to_value(RecordJson {
            min: p.element(self.min_index).to_text(),
            max: p.element(self.max_index).to_text(),
            rank: self.rank,
            support: self
                .support
                .iter()
                .map(|&s| p.graph().name(s).to_string())
                .collect(),
        })
        .expect("plain data")
    }
}

#[derive(Clone, Debug)]
pub struct BooleanIntervals {
    pub records: Vec<BooleanIntervalRecord>,
    /// `counts_by_rank[k]` = number of Boolean intervals of rank `k`.
    pub counts_by_rank: Vec<BigUint>,
}

/// Every Boolean interval of the poset, found by sweeping each element's
/// up-set with [`is_boolean_tenner`].
pub fn enumerate_boolean_intervals(p: &WeakOrderPoset) -> Result<BooleanIntervals> {
    let mut records = Vec::new();
    for v in 0..p.len() {
        let ev = &p.elements[v];
        // rank is bounded by the number of atoms, i.e. up-covers of v
        let reach = p.lengths[v] + p.up[v].len();
        for w in p.up_set_bounded(v, reach) {
            let ew = &p.elements[w];
            if is_boolean_tenner(ev, ew)? {
                let support = ev.left_quotient(ew)?.support();
                records.push(BooleanIntervalRecord {
                    min_index: v,
                    max_index: w,
                    rank: support.len(),
                    support,
                });
            }
        }
    }
    let max = records.iter().map(|r| r.rank).max().unwrap_or(0);
    let mut counts = vec![0u64; max + 1];
    for r in &records {
        counts[r.rank] += 1;
    }
    Ok(BooleanIntervals {
        records,
        counts_by_rank: counts.into_iter().map(BigUint::from).collect(),
    })
}

/// `|{v : Des(v) and J disjoint}|`.
pub fn count_elements_avoiding_descents(
    p: &WeakOrderPoset,
    j: &BTreeSet<GeneratorId>,
) -> Result<BigUint> {
    if let Some(bad) = j.iter().find(|s| !p.graph.contains(**s)) {
        return Err(domain(format!(
            "generator {bad} not in {}",
            p.graph.label()
        )));
    }
    let n = p
        .elements
        .iter()
        .filter(|e| j.iter().all(|s| !e.is_descent(s.0)))
        .count();
    Ok(BigUint::from(n))
}

/// Group order check used by callers that need the poset to be complete.
pub fn assert_complete(p: &WeakOrderPoset) -> Result<()> {
    let order = finite_order(p.family, p.rank_n)?;
    if BigUint::from(p.len()) != order {
        return Err(Error::Internal(format!(
            "weak order of {}{} has {} elements, expected {order}",
            p.family,
            p.rank_n,
            p.len()
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn idx(p: &WeakOrderPoset, text: &str) -> usize {
        let e = GroupElement::parse(p.family(), p.rank_n(), text).unwrap();
        p.index_of(&e).unwrap()
    }

    #[test]
    fn small_poset_shapes() {
        let c2 = build_weak_order(Family::C, 2).unwrap();
        assert_eq!((c2.len(), c2.edge_count()), (8, 8));
        let a2 = build_weak_order(Family::A, 2).unwrap();
        assert_eq!((a2.len(), a2.edge_count()), (6, 6));
        let d3 = build_weak_order(Family::D, 3).unwrap();
        assert_eq!((d3.len(), d3.edge_count()), (24, 36));
        for p in [&c2, &a2, &d3] {
            assert_complete(p).unwrap();
            let maxima = (0..p.len()).filter(|&i| p.up_covers(i).is_empty()).count();
            let minima = (0..p.len())
                .filter(|&i| p.down_covers(i).is_empty())
                .count();
            assert_eq!((minima, maxima), (1, 1));
            let ascents: usize = p.elements().iter().map(|e| e.ascent_set().len()).sum();
            assert_eq!(ascents, p.edge_count());
        }
    }

    #[test]
    fn intervals() {
        let a2 = build_weak_order(Family::A, 2).unwrap();
        assert_eq!(a2.interval(0, 0), vec![0]);
        assert_eq!(a2.interval(0, a2.maximum()).len(), 6);
        assert!(a2.interval(a2.maximum(), 0).is_empty());

        let c3 = build_weak_order(Family::C, 3).unwrap();
        let (v, w) = (idx(&c3, "451623"), idx(&c3, "546132"));
        let i = c3.interval(v, w);
        assert_eq!(i.len(), 4);
        let mut texts: Vec<String> = i.iter().map(|&x| c3.element(x).to_text()).collect();
        texts.sort();
        assert_eq!(texts, vec!["451623", "456123", "541632", "546132"]);
    }

    #[test]
    fn oracle_examples() {
        let c3 = build_weak_order(Family::C, 3).unwrap();
        let (v, w) = (idx(&c3, "451623"), idx(&c3, "546132"));
        assert!(is_boolean_oracle(&c3, v, w).unwrap());
        assert!(is_boolean_oracle(&c3, v, v).unwrap());

        let a2 = build_weak_order(Family::A, 2).unwrap();
        // e < s1 < s1 s2 is a chain
        let s1s2 = idx(&a2, "231");
        assert!(!is_boolean_oracle(&a2, 0, s1s2).unwrap());
        assert!(!is_boolean_oracle(&a2, 0, a2.maximum()).unwrap());
        assert!(!is_boolean_oracle(&a2, a2.maximum(), 0).unwrap());

        let reach = c3.reachability().unwrap();
        for x in 0..c3.len() {
            for y in 0..c3.len() {
                assert_eq!(
                    is_boolean_oracle(&c3, x, y).unwrap(),
                    is_boolean_oracle_with(&c3, &reach, x, y).unwrap()
                );
            }
        }
    }

    #[test]
    fn tenner_examples() {
        let c = |t: &str| GroupElement::parse(Family::C, 3, t).unwrap();
        assert!(is_boolean_tenner(&c("451623"), &c("546132")).unwrap());
        let a2 = |t: &str| GroupElement::parse(Family::A, 2, t).unwrap();
        assert!(!is_boolean_tenner(&a2("123"), &a2("231")).unwrap());
        let a3 = |t: &str| GroupElement::parse(Family::A, 3, t).unwrap();
        assert!(is_boolean_tenner(&a3("1234"), &a3("2143")).unwrap());
        assert!(matches!(
            is_boolean_tenner(&a3("1234"), &c("123456")),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn boolean_counts_small() {
        let a3 = build_weak_order(Family::A, 3).unwrap();
        let b = enumerate_boolean_intervals(&a3).unwrap();
        assert_eq!(b.counts_by_rank[1], BigUint::from(36u32));
        assert_eq!(b.counts_by_rank[0], BigUint::from(24u32));

        let c3 = build_weak_order(Family::C, 3).unwrap();
        let b = enumerate_boolean_intervals(&c3).unwrap();
        assert_eq!(b.counts_by_rank[2], BigUint::from(12u32));

        let d2 = build_weak_order(Family::D, 2).unwrap();
        let b = enumerate_boolean_intervals(&d2).unwrap();
        let got: Vec<u64> = b
            .counts_by_rank
            .iter()
            .map(|c| c.try_into().unwrap())
            .collect();
        assert_eq!(got, vec![4, 4, 1]);
        for r in &b.records {
            let des = d2.element(r.min_index).descent_set();
            assert!(r.support.is_disjoint(&des));
        }
    }

    #[test]
    fn coset_counts() {
        let a2 = build_weak_order(Family::A, 2).unwrap();
        assert_eq!(
            count_elements_avoiding_descents(&a2, &BTreeSet::new()).unwrap(),
            BigUint::from(6u32)
        );
        assert_eq!(
            count_elements_avoiding_descents(&a2, &BTreeSet::from([GeneratorId(0)])).unwrap(),
            BigUint::from(3u32)
        );
        let c3 = build_weak_order(Family::C, 3).unwrap();
        let j = BTreeSet::from([GeneratorId(0), GeneratorId(2)]);
        assert_eq!(
            count_elements_avoiding_descents(&c3, &j).unwrap(),
            BigUint::from(12u32)
        );
        // adjacent pair: parabolic subgroup of order 6, not 4
        let adj = BTreeSet::from([GeneratorId(0), GeneratorId(1)]);
        assert_eq!(
            count_elements_avoiding_descents(&c3, &adj).unwrap(),
            BigUint::from(8u32)
        );
        assert!(count_elements_avoiding_descents(&c3, &BTreeSet::from([GeneratorId(7)])).is_err());
    }

    #[test]
    fn hasse_dot() {
        let c2 = build_weak_order(Family::C, 2).unwrap();
        let dot = c2.to_dot();
        assert_eq!(dot.matches("->").count(), 8);
        assert!(dot.contains("\"1234\" -> \"2143\" [label=\"s1\""));
    }

    #[test]
    fn size_limit_respected() {
        assert!(matches!(
            build_weak_order_with_limit(Family::A, 6, 1000),
            Err(Error::SizeLimit { .. })
        ));
    }
}
