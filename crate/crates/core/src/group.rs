//! Elements of the finite Coxeter groups of types A, C and D.
//!
//! Type `A_n` elements are permutations of `1..=n+1` in one-line notation.
//! Types `C_n` and `D_n` are stored as signed-permutation windows
//! `(w(1), ..., w(n))`; the mirrored one-line form in `S_{2n}` is an I/O codec
//! where the value `k <= n` stands for `k` and `k > n` stands for `k - 2n - 1`.
//!
//! Generators act on positions (right action):
//! - `s_i` for `i < n` (all types, `i <= n` for A) swaps positions `i` and `i+1`;
//! - in `C_n` the last generator `s_n` negates position `n`;
//! - in `D_n` the last generator `s'_{n-1}` maps `(w(n-1), w(n))` to
//!   `(-w(n), -w(n-1))`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use num_bigint::BigUint;
use serde::{Deserialize, Serialize};

use crate::error::{domain, size_limit, size_limit_from_env, Error, Result};
use crate::graph::{CoxeterGraph, CoxeterType, Family, GeneratorId};
use crate::sequences::factorial;

/// Set of right descents.
pub type DescentSet = BTreeSet<GeneratorId>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    family: Family,
    rank: usize,
    window: Vec<i32>,
}

fn check_family(family: Family, n: usize) -> Result<()> {
    match family {
        Family::A | Family::C | Family::D => CoxeterType::new(family, n).map(|_| ()),
        f => Err(Error::Unsupported(format!(
            "no element model for the affine family {f}"
        ))),
    }
}

/// Order of the finite group, for `n >= 1` (`C1` and `D1` included).
pub(crate) fn finite_order(family: Family, n: usize) -> Result<BigUint> {
    match family {
        Family::A => Ok(factorial(n + 1)),
        Family::C => Ok(factorial(n) << n),
        Family::D => Ok(factorial(n) << n.saturating_sub(1)),
        f => Err(Error::Unsupported(format!("{f} is an infinite group"))),
    }
}

impl GroupElement {
    /// Validates a window: a permutation of `1..=n+1` for A, a signed
    /// permutation of `1..=n` for C, with an even number of negatives for D.
    pub fn new(family: Family, n: usize, window: Vec<i32>) -> Result<Self> {
        check_family(family, n)?;
        let len = if family == Family::A { n + 1 } else { n };
        if window.len() != len {
            return Err(Error::InvalidElement(format!(
                "{family}{n} needs a window of length {len}, got {}",
                window.len()
            )));
        }
        let mut seen = vec![false; len + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if a == 0 || a > len || seen[a] || (family == Family::A && v < 0) {
                return Err(Error::InvalidElement(format!(
                    "{window:?} is not a valid {family}{n} window"
                )));
            }
            seen[a] = true;
        }
        if family == Family::D && window.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(Error::InvalidElement(format!(
                "{window:?} has an odd number of negative entries"
            )));
        }
        Ok(GroupElement {
            family,
            rank: n,
            window,
        })
    }

    pub fn identity(family: Family, n: usize) -> Result<Self> {
        check_family(family, n)?;
        let len = if family == Family::A { n + 1 } else { n };
        Ok(GroupElement {
            family,
            rank: n,
            window: (1..=len as i32).collect(),
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    pub fn coxeter_type(&self) -> CoxeterType {
        CoxeterType::new(self.family, self.rank).expect("validated at construction")
    }

    /// The Coxeter graph of the group this element lives in.
    pub fn graph(&self) -> CoxeterGraph {
        self.coxeter_type()
            .graph()
            .expect("validated at construction")
    }

    pub fn generator_count(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> impl Iterator<Item = GeneratorId> {
        (0..self.rank).map(GeneratorId)
    }

    pub fn is_identity(&self) -> bool {
        self.window
            .iter()
            .enumerate()
            .all(|(i, &v)| v == i as i32 + 1)
    }

    /// Right multiplication by a generator.
    pub fn apply_generator(&self, s: GeneratorId) -> Result<GroupElement> {
        if s.0 >= self.rank {
            return Err(domain(format!(
                "generator {s} does not belong to {}{}",
                self.family, self.rank
            )));
        }
        let mut out = self.clone();
        out.act(s.0);
        Ok(out)
    }

    pub(crate) fn act(&mut self, s: usize) {
        let n = self.rank;
        let w = &mut self.window;
        match self.family {
            Family::C if s == n - 1 => w[n - 1] = -w[n - 1],
            Family::D if s == n - 1 => {
                let (a, b) = (w[n - 2], w[n - 1]);
                w[n - 2] = -b;
                w[n - 1] = -a;
            }
            _ => w.swap(s, s + 1),
        }
    }

    /// Right multiplication by a word of generators, left to right.
    pub fn apply_word(&self, word: &[GeneratorId]) -> Result<GroupElement> {
        word.iter()
            .try_fold(self.clone(), |acc, &s| acc.apply_generator(s))
    }

    /// Value at signed position `i` (`w(-i) = -w(i)`).
    fn at(&self, i: i32) -> i32 {
        if i > 0 {
            self.window[i as usize - 1]
        } else {
            -self.window[(-i) as usize - 1]
        }
    }

    fn same_group(&self, other: &GroupElement) -> Result<()> {
        if self.family != other.family || self.rank != other.rank {
            return Err(domain(format!(
                "elements of {}{} and {}{} do not compose",
                self.family, self.rank, other.family, other.rank
            )));
        }
        Ok(())
    }

    /// Group product `self * other` (as maps: apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> Result<GroupElement> {
        self.same_group(other)?;
        let window = other.window.iter().map(|&i| self.at(i)).collect();
        Ok(GroupElement {
            family: self.family,
            rank: self.rank,
            window,
        })
    }

    pub fn inverse(&self) -> GroupElement {
        let mut window = vec![0; self.window.len()];
        for (i, &v) in self.window.iter().enumerate() {
            let pos = i as i32 + 1;
            window[v.unsigned_abs() as usize - 1] = if v > 0 { pos } else { -pos };
        }
        GroupElement {
            family: self.family,
            rank: self.rank,
            window,
        }
    }

    /// `self^{-1} * other`.
    pub fn left_quotient(&self, other: &GroupElement) -> Result<GroupElement> {
        self.inverse().compose(other)
    }

    /// Mirrored-order key: `k` for `k > 0`, `2n + 1 + k` for `k < 0`.
    fn key(&self, v: i32) -> i32 {
        if v > 0 {
            v
        } else {
            2 * self.rank as i32 + 1 + v
        }
    }

    fn inversions(values: &[i32]) -> usize {
        let mut inv = 0;
        for i in 0..values.len() {
            for j in i + 1..values.len() {
                if values[i] > values[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    fn negatives(&self) -> usize {
        self.window.iter().filter(|&&v| v < 0).count()
    }

    /// Coxeter length, from the inversion statistics.
    pub fn length(&self) -> usize {
        match self.family {
            Family::A => Self::inversions(&self.window),
            Family::C | Family::D => {
                let pi: Vec<i32> = self.mirrored_values().iter().map(|&v| v as i32).collect();
                let inv = Self::inversions(&pi);
                let neg = self.negatives();
                if self.family == Family::C {
                    (inv + neg) / 2
                } else {
                    (inv - neg) / 2
                }
            }
            _ => unreachable!("affine elements are never constructed"),
        }
    }

    /// Descents read off the window directly.
    pub fn descent_set(&self) -> DescentSet {
        (0..self.rank)
            .filter(|&s| self.is_descent(s))
            .map(GeneratorId)
            .collect()
    }

    pub(crate) fn is_descent(&self, s: usize) -> bool {
        let n = self.rank;
        let w = &self.window;
        match self.family {
            Family::A => w[s] > w[s + 1],
            Family::C if s == n - 1 => w[n - 1] < 0,
            Family::D if s == n - 1 => self.key(w[n - 2]) > self.key(-w[n - 1]),
            _ => self.key(w[s]) > self.key(w[s + 1]),
        }
    }

    /// Descents from the definition `l(ws) = l(w) - 1`.
    pub fn descent_set_by_length(&self) -> DescentSet {
        let l = self.length();
        self.generators()
            .filter(|&s| {
                let t = self.apply_generator(s).expect("own generator");
                t.length() + 1 == l
            })
            .collect()
    }

    /// Right ascents `S \ Des`.
    pub fn ascent_set(&self) -> DescentSet {
        (0..self.rank)
            .filter(|&s| !self.is_descent(s))
            .map(GeneratorId)
            .collect()
    }

    /// A reduced word obtained by repeatedly stripping the smallest descent.
    pub fn reduced_word(&self) -> Vec<GeneratorId> {
        let mut cur = self.clone();
        let mut stripped = Vec::new();
        while let Some(s) = (0..cur.rank).find(|&s| cur.is_descent(s)) {
            cur.act(s);
            stripped.push(GeneratorId(s));
        }
        debug_assert!(cur.is_identity());
        stripped.reverse();
        stripped
    }

    /// Generators occurring in (any) reduced word.
    pub fn support(&self) -> BTreeSet<GeneratorId> {
        self.reduced_word().into_iter().collect()
    }

    /// Mirrored one-line values `pi_1 .. pi_{2n}`.
    fn mirrored_values(&self) -> Vec<u32> {
        let n = self.rank as i32;
        let mut pi = vec![0u32; 2 * self.rank];
        for (i, &v) in self.window.iter().enumerate() {
            let first = self.key(v) as u32;
            pi[i] = first;
            pi[2 * self.rank - 1 - i] = (2 * n + 1) as u32 - first;
        }
        pi
    }

    pub fn to_mirrored(&self) -> Result<MirroredPermutation> {
        match self.family {
            Family::C | Family::D => Ok(MirroredPermutation {
                values: self.mirrored_values(),
            }),
            f => Err(domain(format!("type {f} has no mirrored form"))),
        }
    }

    pub fn from_mirrored(m: &MirroredPermutation, family: Family) -> Result<GroupElement> {
        if !matches!(family, Family::C | Family::D) {
            return Err(domain(format!("type {family} has no mirrored form")));
        }
        let n = m.rank();
        let window = m.values[..n]
            .iter()
            .map(|&v| {
                if v as usize <= n {
                    v as i32
                } else {
                    v as i32 - 2 * n as i32 - 1
                }
            })
            .collect();
        GroupElement::new(family, n, window)
    }

    /// Parses one-line notation: digits with parenthesized multi-digit entries
    /// (`3(17)47(18)...`) or a comma-separated list. Types C and D accept the
    /// mirrored form (length `2n`) or, with commas, the signed window (length `n`).
    pub fn parse(family: Family, n: usize, text: &str) -> Result<GroupElement> {
        check_family(family, n)?;
        let entries = parse_one_line(text)?;
        match family {
            Family::A => GroupElement::new(family, n, entries),
            _ if entries.len() == n && text.contains(',') => GroupElement::new(family, n, entries),
            _ => {
                if entries.len() != 2 * n {
                    return Err(Error::InvalidElement(format!(
                        "'{text}' has {} entries; mirrored {family}{n} needs {}",
                        entries.len(),
                        2 * n
                    )));
                }
                if entries.iter().any(|&v| v <= 0) {
                    return Err(Error::InvalidElement(format!(
                        "mirrored form '{text}' must use values 1..={}",
                        2 * n
                    )));
                }
                let m = MirroredPermutation::new(entries.iter().map(|&v| v as u32).collect())?;
                GroupElement::from_mirrored(&m, family)
            }
        }
    }

    /// One-line text: the permutation for A, the mirrored form for C and D.
    pub fn to_text(&self) -> String {
        match self.family {
            Family::A => format_one_line(self.window.iter().map(|&v| v as u32)),
            _ => format_one_line(self.mirrored_values().into_iter()),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(ElementJson::from(self)).expect("plain data")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<GroupElement> {
        let e: ElementJson =
            serde_json::from_value(value.clone()).map_err(|err| Error::Parse(err.to_string()))?;
        let family = e.family.parse()?;
        GroupElement::new(family, e.n, e.window)
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// JSON shape `{family, n, window}`.
#[derive(Serialize, Deserialize)]
struct ElementJson {
    family: String,
    n: usize,
    window: Vec<i32>,
}

impl From<&GroupElement> for ElementJson {
    fn from(e: &GroupElement) -> Self {
        ElementJson {
            family: e.family.name().to_string(),
            n: e.rank,
            window: e.window.clone(),
        }
    }
}

fn parse_one_line(text: &str) -> Result<Vec<i32>> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty element".into()));
    }
    if text.contains(',') {
        let inner = text
            .trim_start_matches(['(', '['])
            .trim_end_matches([')', ']']);
        return inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry '{}' in '{text}'", t.trim())))
            })
            .collect();
    }
    let mut out = Vec::new();
    let mut chars = text.chars().filter(|c| !c.is_whitespace());
    while let Some(c) = chars.next() {
        match c {
            '0'..='9' => out.push(c as i32 - '0' as i32),
            '(' => {
                let digits: String = chars.by_ref().take_while(|&c| c != ')').collect();
                let v = digits
                    .parse::<i32>()
                    .map_err(|_| Error::Parse(format!("bad entry '({digits})' in '{text}'")))?;
                out.push(v);
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character '{other}' in '{text}'"
                )))
            }
        }
    }
    Ok(out)
}

fn format_one_line(values: impl Iterator<Item = u32>) -> String {
    let mut s = String::new();
    for v in values {
        if v < 10 {
            s.push_str(&v.to_string());
        } else {
            s.push_str(&format!("({v})"));
        }
    }
    s
}

/// A permutation of `1..=2n` with `pi_i = k` iff `pi_{2n-i+1} = 2n-k+1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MirroredPermutation {
    values: Vec<u32>,
}

impl MirroredPermutation {
    pub fn new(values: Vec<u32>) -> Result<Self> {
        let len = values.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::InvalidElement(format!(
                "mirrored permutation needs even positive length, got {len}"
            )));
        }
        let mut seen = vec![false; len + 1];
        for &v in &values {
            if v == 0 || v as usize > len || seen[v as usize] {
                return Err(Error::InvalidElement(format!(
                    "{values:?} is not a permutation of 1..={len}"
                )));
            }
            seen[v as usize] = true;
        }
        for i in 0..len {
            if values[len - 1 - i] as usize != len + 1 - values[i] as usize {
                return Err(Error::InvalidElement(format!(
                    "position {} violates the mirror condition",
                    i + 1
                )));
            }
        }
        Ok(MirroredPermutation { values })
    }

    pub fn parse(text: &str) -> Result<Self> {
        let v = parse_one_line(text)?;
        if v.iter().any(|&x| x <= 0) {
            return Err(Error::InvalidElement(format!(
                "'{text}' has non-positive entries"
            )));
        }
        MirroredPermutation::new(v.into_iter().map(|x| x as u32).collect())
    }

    pub fn rank(&self) -> usize {
        self.values.len() / 2
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    /// Even number of first-half values from `n+1..=2n`.
    pub fn is_type_d(&self) -> bool {
        let n = self.rank() as u32;
        self.values[..n as usize].iter().filter(|&&v| v > n).count() % 2 == 0
    }
}

impl fmt::Display for MirroredPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_one_line(self.values.iter().copied()))
    }
}

/// Iterates every element of a finite group exactly once.
pub fn all_elements(family: Family, n: usize) -> Result<ElementIter> {
    all_elements_with_limit(family, n, size_limit_from_env())
}

pub fn all_elements_with_limit(family: Family, n: usize, limit: u128) -> Result<ElementIter> {
    check_family(family, n)?;
    let order = finite_order(family, n)?;
    if order > BigUint::from(limit) {
        return Err(size_limit(
            format!("order of {family}{n}"),
            u128::try_from(&order).unwrap_or(u128::MAX),
            limit,
        ));
    }
    let len = if family == Family::A { n + 1 } else { n };
    Ok(ElementIter {
        family,
        rank: n,
        perm: Some((1..=len as i32).collect()),
        mask: 0,
    })
}

pub struct ElementIter {
    family: Family,
    rank: usize,
    perm: Option<Vec<i32>>,
    mask: u64,
}

fn next_permutation(p: &mut [i32]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("pivot exists");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

impl Iterator for ElementIter {
    type Item = GroupElement;

    fn next(&mut self) -> Option<GroupElement> {
        loop {
            let perm = self.perm.as_mut()?;
            let signed = self.family != Family::A;
            let masks = if signed { 1u64 << self.rank } else { 1 };
            if self.mask >= masks {
                self.mask = 0;
                if !next_permutation(perm) {
                    self.perm = None;
                    return None;
                }
            }
            let mask = self.mask;
            self.mask += 1;
            if self.family == Family::D && mask.count_ones() % 2 == 1 {
                continue;
            }
            let window = perm
                .iter()
                .enumerate()
                .map(|(i, &v)| if mask >> i & 1 == 1 { -v } else { v })
                .collect();
            return Some(GroupElement {
                family: self.family,
                rank: self.rank,
                window,
            });
        }
    }
}

/// Breadth-first distances from the identity in the right Cayley graph.
pub fn bfs_lengths(family: Family, n: usize) -> Result<HashMap<GroupElement, usize>> {
    let start = GroupElement::identity(family, n)?;
    let mut dist = HashMap::from([(start.clone(), 0usize)]);
    let mut queue = VecDeque::from([start]);
    while let Some(e) = queue.pop_front() {
        let d = dist[&e];
        for s in 0..n {
            let mut t = e.clone();
            t.act(s);
            if !dist.contains_key(&t) {
                dist.insert(t.clone(), d + 1);
                queue.push_back(t);
            }
        }
    }
    Ok(dist)
}
