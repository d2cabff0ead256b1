//! Self-check suite: every formula against the brute-force weak order at
//! ranks where the group fits in memory, and formulas against each other
//! everywhere else.

use std::collections::BTreeSet;

use num_bigint::BigUint;
use serde::Serialize;
use serde_json::{json, Value};

use crate::enumeration::{
    booleans_above, count_above, count_above_descent_set, global_rank_count,
    global_rank_count_closed_form, global_rank_count_generic,
};
use crate::error::{size_limit_from_env, Result};
use crate::genfunc::triple_agreement;
use crate::graph::{CoxeterType, Family, GeneratorId};
use crate::group::{bfs_lengths, finite_order, GroupElement};
use crate::independent::{count_by_size, enumerate_independent_sets};
use crate::sequences::{d_number, lucas};
use crate::weak_order::{
    build_weak_order_with_limit, count_elements_avoiding_descents, enumerate_boolean_intervals,
    is_boolean_oracle_with, is_boolean_tenner, WeakOrderPoset, REACHABILITY_MAX_ELEMENTS,
};

const MAX_REPORTED: usize = 20;

/// Largest generator count for which every descent set of an affine graph is tried.
const MAX_AFFINE_SUBSET_VERTICES: usize = 16;

#[derive(Clone, Debug, Serialize)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub cases: u64,
    pub mismatch_count: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skipped: Option<String>,
    /// First few mismatches.
    pub mismatches: Vec<Value>,
}

impl CheckOutcome {
    fn new(name: &'static str) -> Self {
        CheckOutcome {
            name,
            cases: 0,
            mismatch_count: 0,
            skipped: None,
            mismatches: Vec::new(),
        }
    }

    fn skipped(name: &'static str, why: impl Into<String>) -> Self {
        CheckOutcome {
            skipped: Some(why.into()),
            ..CheckOutcome::new(name)
        }
    }

    fn expect(&mut self, ok: bool, detail: impl FnOnce() -> Value) {
        self.cases += 1;
        if !ok {
            self.mismatch_count += 1;
            if self.mismatches.len() < MAX_REPORTED {
                self.mismatches.push(detail());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.mismatch_count == 0
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub family: String,
    pub n: usize,
    pub deep: bool,
    pub checks: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckOutcome::passed)
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("plain data")
    }

    /// Mismatching checks only.
    pub fn diff_json(&self) -> Value {
        json!({
            "family": self.family,
            "n": self.n,
            "failed": self.checks.iter().filter(|c| !c.passed()).collect::<Vec<_>>(),
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = format!(
            "verify {}{}{}\n",
            self.family,
            self.n,
            if self.deep { " (deep)" } else { "" }
        );
        for c in &self.checks {
            let status = match (&c.skipped, c.passed()) {
                (Some(why), _) => format!("skip ({why})"),
                (None, true) => "ok".to_string(),
                (None, false) => format!("FAIL ({} mismatches)", c.mismatch_count),
            };
            s.push_str(&format!(
                "  {:<14} {:>9} cases  {status}\n",
                c.name, c.cases
            ));
        }
        s
    }
}

pub fn verify(family: Family, n: usize, deep: bool) -> Result<VerifyReport> {
    let checks = if family.is_affine() {
        verify_affine(family, n, deep)?
    } else {
        verify_finite(family, n, deep)?
    };
    Ok(VerifyReport {
        family: family.name().to_string(),
        n,
        deep,
        checks,
    })
}

fn verify_finite(family: Family, n: usize, deep: bool) -> Result<Vec<CheckOutcome>> {
    GroupElement::identity(family, n)?;
    let mut checks = Vec::new();

    let mut closed = CheckOutcome::new("closed-form");
    for k in 0..=n + 1 {
        let a = global_rank_count_closed_form(family, n, k)?;
        let b = global_rank_count_generic(family, n, k)?;
        closed.expect(
            a == b,
            || json!({"k": k, "closed_form": a.to_string(), "generic": b.to_string()}),
        );
    }
    checks.push(closed);

    if matches!(family, Family::C | Family::D) {
        let mut gf = CheckOutcome::new("egf");
        for row in triple_agreement(family, n.max(2))? {
            gf.expect(row.agree, || {
                let s = |v: &[BigUint]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
                json!({
                    "n": row.n,
                    "recurrence": s(&row.recurrence),
                    "egf": s(&row.egf),
                    "closed_form": s(&row.closed_form),
                    "total": row.total.to_string(),
                })
            });
        }
        checks.push(gf);
    }

    let limit = size_limit_from_env();
    let order = finite_order(family, n)?;
    if order > BigUint::from(limit) {
        let why = format!("|W| = {order} exceeds size limit {limit}");
        for name in ["model", "above", "global", "cosets"] {
            checks.push(CheckOutcome::skipped(name, why.clone()));
        }
        return Ok(checks);
    }
    let p = build_weak_order_with_limit(family, n, limit)?;
    checks.push(check_model(&p, deep)?);
    checks.push(check_above(&p)?);
    checks.push(check_global(&p)?);
    checks.push(check_cosets(&p)?);
    if deep {
        checks.push(check_oracle(&p)?);
    }
    Ok(checks)
}

fn check_model(p: &WeakOrderPoset, deep: bool) -> Result<CheckOutcome> {
    let mut c = CheckOutcome::new("model");
    let identity = p.element(0);
    for e in p.elements() {
        let l = e.length();
        for s in e.generators() {
            let t = e.apply_generator(s)?;
            c.expect(
                t.apply_generator(s)? == *e,
                || json!({"element": e.to_text(), "generator": s.0, "issue": "not an involution"}),
            );
            c.expect(t.length().abs_diff(l) == 1, || {
                json!({"element": e.to_text(), "generator": s.0, "issue": "length change is not 1"})
            });
        }
        c.expect(e.descent_set() == e.descent_set_by_length(), || {
            json!({"element": e.to_text(), "issue": "descent formula disagrees with length drop"})
        });
        let word = e.reduced_word();
        c.expect(
            word.len() == l && identity.apply_word(&word)? == *e,
            || json!({"element": e.to_text(), "issue": "reduced word"}),
        );
        if let Ok(m) = e.to_mirrored() {
            c.expect(
                GroupElement::from_mirrored(&m, e.family())? == *e,
                || json!({"element": e.to_text(), "issue": "mirrored round trip"}),
            );
        }
    }
    if deep {
        let dist = bfs_lengths(p.family(), p.rank_n())?;
        c.expect(
            dist.len() == p.len(),
            || json!({"issue": "BFS reaches a different element count"}),
        );
        for (e, d) in &dist {
            c.expect(
                e.length() == *d,
                || json!({"element": e.to_text(), "length": e.length(), "bfs": d}),
            );
        }
    }
    Ok(c)
}

fn check_above(p: &WeakOrderPoset) -> Result<CheckOutcome> {
    let mut c = CheckOutcome::new("above");
    let g = p.graph();
    for e in p.elements() {
        let above = booleans_above(e)?;
        let count = count_above(e)?;
        let by_set = count_above_descent_set(g, &e.descent_set())?;
        c.expect(
            BigUint::from(above.len()) == count && count == by_set,
            || {
                json!({
                    "element": e.to_text(),
                    "listed": above.len(),
                    "count_above": count.to_string(),
                    "by_descent_set": by_set.to_string(),
                })
            },
        );
        for b in &above {
            let ok = is_boolean_tenner(e, &b.top)? && b.top.length() == e.length() + b.rank();
            c.expect(ok, || json!({"min": e.to_text(), "max": b.top.to_text()}));
        }
    }
    Ok(c)
}

fn check_global(p: &WeakOrderPoset) -> Result<CheckOutcome> {
    let mut c = CheckOutcome::new("global");
    let swept = enumerate_boolean_intervals(p)?;
    let mut by_rank: Vec<u64> = Vec::new();
    for e in p.elements() {
        for b in booleans_above(e)? {
            if by_rank.len() <= b.rank() {
                by_rank.resize(b.rank() + 1, 0);
            }
            by_rank[b.rank()] += 1;
        }
    }
    for k in 0..=p.rank_n() + 1 {
        let formula = global_rank_count(p.family(), p.rank_n(), k)?;
        let sweep = swept.counts_by_rank.get(k).cloned().unwrap_or_default();
        let local = BigUint::from(by_rank.get(k).copied().unwrap_or(0));
        c.expect(formula == sweep && sweep == local, || {
            json!({
                "k": k,
                "formula": formula.to_string(),
                "sweep": sweep.to_string(),
                "sum_above": local.to_string(),
            })
        });
    }
    Ok(c)
}

fn check_cosets(p: &WeakOrderPoset) -> Result<CheckOutcome> {
    let mut c = CheckOutcome::new("cosets");
    let order = BigUint::from(p.len());
    for j in enumerate_independent_sets(p.graph())? {
        let set: BTreeSet<GeneratorId> = j.iter().copied().collect();
        let got = count_elements_avoiding_descents(p, &set)?;
        let want = &order >> j.len();
        c.expect(got == want, || {
            json!({
                "J": j.iter().map(|s| s.0).collect::<Vec<_>>(),
                "count": got.to_string(),
                "expected": want.to_string(),
            })
        });
    }
    Ok(c)
}

/// For every `v`, `{w : [v,w] order-isomorphic to a subset lattice}` equals
/// the tops listed by [`booleans_above`].
fn check_oracle(p: &WeakOrderPoset) -> Result<CheckOutcome> {
    if p.len() > REACHABILITY_MAX_ELEMENTS {
        return Ok(CheckOutcome::skipped(
            "oracle",
            format!("{} elements exceeds {REACHABILITY_MAX_ELEMENTS}", p.len()),
        ));
    }
    let mut c = CheckOutcome::new("oracle");
    let reach = p.reachability()?;
    for v in 0..p.len() {
        let mut brute = BTreeSet::new();
        for w in reach.up_set(v).collect::<Vec<_>>() {
            if is_boolean_oracle_with(p, &reach, v, w)? {
                brute.insert(w);
            }
        }
        let listed: BTreeSet<usize> = booleans_above(p.element(v))?
            .iter()
            .filter_map(|b| p.index_of(&b.top))
            .collect();
        c.expect(brute == listed, || {
            let t = |s: &BTreeSet<usize>| {
                s.iter()
                    .map(|&i| p.element(i).to_text())
                    .collect::<Vec<_>>()
            };
            json!({"min": p.element(v).to_text(), "oracle": t(&brute), "formula": t(&listed)})
        });
    }
    Ok(c)
}

fn verify_affine(family: Family, n: usize, deep: bool) -> Result<Vec<CheckOutcome>> {
    let g = CoxeterType::new(family, n)?.graph()?;
    let mut checks = Vec::new();
    let verts: Vec<GeneratorId> = g.vertices().collect();
    if verts.len() > MAX_AFFINE_SUBSET_VERTICES {
        checks.push(CheckOutcome::skipped(
            "descent-sets",
            format!(
                "{} generators exceeds {MAX_AFFINE_SUBSET_VERTICES}",
                verts.len()
            ),
        ));
    } else {
        let mut c = CheckOutcome::new("descent-sets");
        for mask in 0u32..1 << verts.len() {
            let d: BTreeSet<GeneratorId> = verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let rest = g.without(&d)?;
            let formula = count_above_descent_set(&g, &d)?;
            let dp = count_by_size(&rest).total().clone();
            let mut ok = formula == dp;
            if deep {
                ok &= BigUint::from(enumerate_independent_sets(&rest)?.len()) == dp;
            }
            c.expect(ok, || {
                json!({
                    "descents": d.iter().map(|s| s.0).collect::<Vec<_>>(),
                    "formula": formula.to_string(),
                    "direct": dp.to_string(),
                })
            });
        }
        checks.push(c);
    }
    let identity = match family {
        Family::AffineA => Some(lucas(n + 1)?),
        Family::AffineD => Some(d_number(n)? + d_number(n - 2)? * 2u32),
        _ => None,
    };
    if let Some(want) = identity {
        let mut c = CheckOutcome::new("identity");
        let got = count_above_descent_set(&g, &BTreeSet::new())?;
        c.expect(
            got == want,
            || json!({"count": got.to_string(), "closed_form": want.to_string()}),
        );
        checks.push(c);
    }
    Ok(checks)
}
