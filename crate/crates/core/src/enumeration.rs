//! Counting Boolean intervals: per-element counts from the components of the
//! ascent graph, the interval enumerator above an element, and global
//! rank-k counts for the finite families.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{domain, Error, Result};
use crate::graph::{finite_graph, ComponentShape, CoxeterGraph, Family, GeneratorId};
use crate::group::{finite_order, GroupElement};
use crate::independent::{count_by_size, enumerate_independent_sets};
use crate::sequences::{binomial, d_number, exact_div, factorial, fibonacci};

/// One Boolean interval `[e, top]` with `top = e * prod(independent)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AboveInterval {
    pub independent: Vec<GeneratorId>,
    pub top: GroupElement,
}

impl AboveInterval {
    pub fn rank(&self) -> usize {
        self.independent.len()
    }
}

/// Every Boolean interval with minimum `e`, one per independent set of the
/// graph on the ascents of `e`, smallest sets first.
pub fn booleans_above(e: &GroupElement) -> Result<Vec<AboveInterval>> {
    let ascents = e.graph().without(&e.descent_set())?;
    enumerate_independent_sets(&ascents)?
        .into_iter()
        .map(|set| {
            let top = e.apply_word(&set)?;
            Ok(AboveInterval {
                independent: set,
                top,
            })
        })
        .collect()
}

/// Number of Boolean intervals with minimum `e`: `F_{m+2}` per path component
/// on `m` vertices and `d_m` per fork component.
pub fn count_above(e: &GroupElement) -> Result<BigUint> {
    let ascents = e.graph().without(&e.descent_set())?;
    let mut total = BigUint::one();
    for c in ascents.classify_components() {
        total *= match c.shape {
            ComponentShape::Path(m) => fibonacci(m + 2)?,
            ComponentShape::Fork(m) => d_number(m)?,
            ComponentShape::Other => {
                return Err(Error::Internal(format!(
                    "finite ascent graph of {e} has a component that is neither a path nor a fork"
                )))
            }
        };
    }
    Ok(total)
}

/// Independent-set total of `g` with the vertices in `descents` deleted.
/// Path and fork components use closed forms; anything else is counted directly.
pub fn count_above_descent_set(
    g: &CoxeterGraph,
    descents: &BTreeSet<GeneratorId>,
) -> Result<BigUint> {
    if let Some(bad) = descents.iter().find(|s| !g.contains(**s)) {
        return Err(domain(format!("generator {bad} not in {}", g.label())));
    }
    let rest = g.without(descents)?;
    let mut total = BigUint::one();
    for c in rest.classify_components() {
        total *= match c.shape {
            ComponentShape::Path(m) => fibonacci(m + 2)?,
            ComponentShape::Fork(m) => d_number(m)?,
            ComponentShape::Other => {
                let keep: BTreeSet<GeneratorId> = c.vertices.iter().copied().collect();
                count_by_size(&rest.induced_subgraph(&keep)?)
                    .total()
                    .clone()
            }
        };
    }
    Ok(total)
}

fn check_finite(family: Family, n: usize) -> Result<()> {
    if family.is_affine() {
        return Err(Error::Unsupported(format!(
            "{family} is infinite; its Boolean intervals of a given rank are not finitely many"
        )));
    }
    if n == 0 {
        return Err(Error::InvalidRank {
            family: family.name().to_string(),
            rank: 0,
            min: 1,
        });
    }
    Ok(())
}

/// `|W|` for A, C, D at any rank `n >= 1`.
pub fn group_order(family: Family, n: usize) -> Result<BigUint> {
    check_finite(family, n)?;
    finite_order(family, n)
}

/// Family closed form, indexed by the family's own rank:
/// A: `(n+1)!/2^k C(n+1-k,k)`, C: `2^{n-k} n! C(n+1-k,k)`,
/// D: `2^{n-k-1} n! (C(n-k,k-2) + C(n-k-1,k-1) + C(n-k,k))`.
pub fn global_rank_count_closed_form(family: Family, n: usize, k: usize) -> Result<BigUint> {
    check_finite(family, n)?;
    let (ni, ki) = (n as i64, k as i64);
    let numerator = match family {
        Family::A => factorial(n + 1) * binomial(ni + 1 - ki, ki),
        Family::C => (factorial(n) << n) * binomial(ni + 1 - ki, ki),
        Family::D => {
            let forks =
                binomial(ni - ki, ki - 2) + binomial(ni - ki - 1, ki - 1) + binomial(ni - ki, ki);
            (factorial(n) << (n - 1)) * forks
        }
        _ => unreachable!("checked finite"),
    };
    exact_div(&numerator, &(BigUint::one() << k)).ok_or_else(|| {
        Error::Internal(format!(
            "closed form for {family}{n}, k={k} is not an integer"
        ))
    })
}

/// `i_k(graph) * |W| / 2^k`.
pub fn global_rank_count_generic(family: Family, n: usize, k: usize) -> Result<BigUint> {
    check_finite(family, n)?;
    let ik = count_by_size(&finite_graph(family, n)?).count(k);
    let numerator = ik * finite_order(family, n)?;
    exact_div(&numerator, &(BigUint::one() << k)).ok_or_else(|| {
        Error::Internal(format!(
            "i_k |W| / 2^k for {family}{n}, k={k} is not an integer"
        ))
    })
}

/// Number of rank-`k` Boolean intervals in the weak order of a finite group.
/// The closed form is checked against the generic count on every call.
pub fn global_rank_count(family: Family, n: usize, k: usize) -> Result<BigUint> {
    let closed = global_rank_count_closed_form(family, n, k)?;
    let generic = global_rank_count_generic(family, n, k)?;
    if closed != generic {
        return Err(Error::Internal(format!(
            "{family}{n}, k={k}: closed form {closed} but i_k |W| / 2^k = {generic}"
        )));
    }
    Ok(closed)
}

/// Counts `f(n, k)` for consecutive `n`; each row is indexed by `k` with
/// trailing zeros trimmed, so `get` is zero past the last stored `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    family: Family,
    first_n: usize,
    rows: Vec<Vec<BigUint>>,
}

#[derive(Serialize)]
struct RowJson {
    n: usize,
    k: usize,
    count: String,
}

#[derive(Serialize)]
struct TableJson {
    family: String,
    rows: Vec<RowJson>,
}

impl CountTable {
    pub(crate) fn new(family: Family, first_n: usize, rows: Vec<Vec<BigUint>>) -> Self {
        let rows = rows
            .into_iter()
            .map(|mut r| {
                while r.len() > 1 && r.last().is_some_and(Zero::is_zero) {
                    r.pop();
                }
                if r.is_empty() {
                    r.push(BigUint::zero());
                }
                r
            })
            .collect();
        CountTable {
            family,
            first_n,
            rows,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn first_n(&self) -> usize {
        self.first_n
    }

    pub fn max_n(&self) -> usize {
        self.first_n + self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        n.checked_sub(self.first_n)
            .and_then(|i| self.rows.get(i))
            .map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, k: usize) -> BigUint {
        self.row(n)
            .and_then(|r| r.get(k))
            .cloned()
            .unwrap_or_default()
    }

    pub fn total(&self, n: usize) -> BigUint {
        self.row(n).map(|r| r.iter().sum()).unwrap_or_default()
    }

    /// `(n, k, count)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &BigUint)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, r)| {
            r.iter()
                .enumerate()
                .map(move |(k, c)| (self.first_n + i, k, c))
        })
    }

    /// Whether both tables hold the same counts for every `n` in `ns`.
    pub fn agrees_on(&self, other: &CountTable, ns: impl IntoIterator<Item = usize>) -> bool {
        ns.into_iter().all(|n| match (self.row(n), other.row(n)) {
            (Some(a), Some(b)) => a == b,
            _ => false,
        })
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("n,k,count\n");
        for (n, k, c) in self.entries() {
            s.push_str(&format!("{n},{k},{c}\n"));
        }
        s
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(TableJson {
            family: self.family.name().to_string(),
            rows: self
                .entries()
                .map(|(n, k, c)| RowJson {
                    n,
                    k,
                    count: c.to_string(),
                })
                .collect(),
        })
        .expect("plain data")
    }
}

/// [`global_rank_count`] for `n = 1..=max_n` and every `k`.
pub fn count_table(family: Family, max_n: usize) -> Result<CountTable> {
    check_finite(family, max_n.max(1))?;
    let rows = (1..=max_n)
        .map(|n| {
            (0..=n.div_ceil(2) + 1)
                .map(|k| global_rank_count(family, n, k))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CountTable::new(family, 1, rows))
}

/// Independent-set total of the affine Ã graph (a cycle on `n+1` vertices)
/// or D̃ graph on `n+1` vertices, with nothing deleted.
pub fn affine_identity_count(family: Family, n: usize) -> Result<BigUint> {
    match family {
        Family::AffineA | Family::AffineD => {}
        f => {
            return Err(Error::Unsupported(format!(
                "no identity-element closed form for {f}"
            )))
        }
    }
    let g = crate::graph::CoxeterType::new(family, n)?.graph()?;
    count_above_descent_set(&g, &BTreeSet::new())
}
