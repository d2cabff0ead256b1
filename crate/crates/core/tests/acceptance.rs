//! Acceptance criteria, one line of output per criterion.
//!
//! Expected values are computed here from first principles (subset brute
//! force, direct BFS, literal sequences) rather than through the library's
//! own formula code wherever that is practical.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use coxbool::enumeration::{global_rank_count_closed_form, global_rank_count_generic};
use coxbool::weak_order::{
    build_weak_order, count_elements_avoiding_descents, is_boolean_oracle_with,
};
use coxbool::{
    all_elements, booleans_above, count_above, count_by_size, egf_total, expand_egf, fork_count,
    global_rank_count, path_count, recurrence_table, CoxeterGraph, CoxeterType, Family,
    GeneratorId, GroupElement,
};
use num_bigint::BigUint;
use num_traits::Zero;

type Outcome = Result<String, String>;

fn big(v: u128) -> BigUint {
    BigUint::from(v)
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).fold(BigUint::from(1u32), |a, i| a * i)
}

fn choose(a: i64, b: i64) -> BigUint {
    if a < 0 || b < 0 || b > a {
        return BigUint::default();
    }
    (0..b).fold(BigUint::from(1u32), |acc, i| {
        acc * (a - i) as u64 / (i + 1) as u64
    })
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The ranks covered by the exhaustive criteria.
fn exhaustive_groups() -> Vec<(Family, usize)> {
    let mut v: Vec<(Family, usize)> = (1..=5).map(|n| (Family::A, n)).collect();
    v.extend((2..=4).map(|n| (Family::C, n)));
    v.extend((2..=4).map(|n| (Family::D, n)));
    v
}

/// Independent sets by subset brute force.
fn independent_sets(g: &CoxeterGraph) -> Vec<Vec<GeneratorId>> {
    let verts: Vec<GeneratorId> = g.vertices().collect();
    (0u32..1 << verts.len())
        .map(|mask| {
            verts
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &v)| v)
                .collect::<Vec<_>>()
        })
        .filter(|set| {
            set.iter()
                .all(|&a| set.iter().all(|&b| a == b || !g.adjacent(a, b)))
        })
        .collect()
}

fn criterion_1() -> Outcome {
    let table: [(&str, usize); 12] = [
        ("513649728", 0),
        ("531649728", 1),
        ("516349728", 1),
        ("513694728", 1),
        ("513649782", 1),
        ("531694728", 2),
        ("531649782", 2),
        ("516394728", 2),
        ("516349782", 2),
        ("513694782", 2),
        ("531694782", 3),
        ("516394782", 3),
    ];
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_coxbool"))
        .args([
            "above",
            "--family",
            "A",
            "--n",
            "8",
            "--element",
            "513649728",
            "--format",
            "json",
        ])
        .output()
        .map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    ensure(out.status.success(), || format!("exit {:?}", out.status))?;
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())?;
    let got: BTreeSet<(String, usize)> = v["intervals"]
        .as_array()
        .ok_or("no intervals")?
        .iter()
        .map(|i| {
            (
                i["max"].as_str().unwrap_or_default().to_string(),
                i["rank"].as_u64().unwrap_or(99) as usize,
            )
        })
        .collect();
    let want: BTreeSet<(String, usize)> = table.iter().map(|&(s, r)| (s.to_string(), r)).collect();
    ensure(got == want, || format!("got {got:?}"))?;
    ensure(v["intervals"].as_array().map(Vec::len) == Some(12), || {
        "not 12 rows".into()
    })?;
    ensure(v["histogram"] == serde_json::json!([1, 4, 5, 2]), || {
        format!("histogram {}", v["histogram"])
    })?;
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("12 intervals, histogram 1,4,5,2, {elapsed:.2?}"))
}

/// Oracle-derived rank counts per exhaustive group, shared with criterion 3.
type RankCounts = HashMap<(Family, usize), Vec<u64>>;

fn criterion_2(counts: &mut RankCounts) -> Outcome {
    let start = Instant::now();
    let mut pairs = 0u64;
    for (f, n) in exhaustive_groups() {
        let p = build_weak_order(f, n).map_err(|e| e.to_string())?;
        let reach = p.reachability().map_err(|e| e.to_string())?;
        let mut by_rank = vec![0u64; n + 1];
        for v in 0..p.len() {
            let mut oracle = BTreeSet::new();
            for w in reach.up_set(v).collect::<Vec<_>>() {
                pairs += 1;
                if is_boolean_oracle_with(&p, &reach, v, w).map_err(|e| e.to_string())? {
                    oracle.insert(p.element(w).clone());
                    by_rank[p.length(w) - p.length(v)] += 1;
                }
            }
            let e = p.element(v);
            let above = booleans_above(e).map_err(|e| e.to_string())?;
            let listed: BTreeSet<GroupElement> = above.iter().map(|b| b.top.clone()).collect();
            ensure(listed.len() == above.len(), || {
                format!("{f}{n} {e}: repeated tops")
            })?;
            ensure(oracle == listed, || {
                format!(
                    "{f}{n} {e}: oracle {} vs listed {}",
                    oracle.len(),
                    listed.len()
                )
            })?;
            let c = count_above(e).map_err(|e| e.to_string())?;
            ensure(c == BigUint::from(listed.len()), || {
                format!("{f}{n} {e}: count_above {c}")
            })?;
        }
        counts.insert((f, n), by_rank);
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(300), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!(
        "0 mismatches over {pairs} comparable pairs, {elapsed:.2?}"
    ))
}

/// Closed forms written out independently of the library.
fn closed_form(f: Family, n: usize, k: usize) -> BigUint {
    let (ni, ki) = (n as i64, k as i64);
    let num = match f {
        // A_n is the symmetric group on N = n + 1 letters: N!/2^k C(N-k, k)
        Family::A => factorial(n + 1) * choose(ni + 1 - ki, ki),
        // 2^{n-k} n! C(n+1-k, k), scaled by 2^k
        Family::C => (factorial(n) << n) * choose(ni + 1 - ki, ki),
        // 2^{n-k-1} n! (...), scaled by 2^k
        Family::D => {
            (factorial(n) << (n - 1))
                * (choose(ni - ki, ki - 2) + choose(ni - ki - 1, ki - 1) + choose(ni - ki, ki))
        }
        _ => unreachable!(),
    };
    let den = BigUint::from(1u32) << k;
    assert!(
        (&num % &den).is_zero(),
        "{f}{n} k={k}: not divisible by 2^k"
    );
    num / den
}

fn criterion_3(counts: &RankCounts) -> Outcome {
    for (f, n) in exhaustive_groups() {
        let by_rank = counts.get(&(f, n)).ok_or("criterion 2 did not run")?;
        for k in 0..=n + 1 {
            let brute = big(by_rank.get(k).copied().unwrap_or(0) as u128);
            let want = closed_form(f, n, k);
            ensure(brute == want, || {
                format!("{f}{n} k={k}: exhaustive {brute}, formula {want}")
            })?;
        }
    }
    let mut cases = 0;
    for f in [Family::A, Family::C, Family::D] {
        for n in 1..=12 {
            for k in 0..=n + 1 {
                let a = global_rank_count_closed_form(f, n, k).map_err(|e| e.to_string())?;
                let b = global_rank_count_generic(f, n, k).map_err(|e| e.to_string())?;
                let c = closed_form(f, n, k);
                ensure(a == b && b == c, || {
                    format!("{f}{n} k={k}: {a} / {b} / {c}")
                })?;
                cases += 1;
            }
        }
    }
    Ok(format!(
        "exhaustive ranks match; {cases} closed-form vs generic cases equal"
    ))
}

fn criterion_4() -> Outcome {
    let a000285: [u64; 10] = [1, 4, 5, 9, 14, 23, 37, 60, 97, 157];
    let a014479: [u64; 8] = [0, 1, 8, 72, 768, 9600, 138240, 2257920];
    let a019999: [u64; 8] = [4, 36, 384, 4800, 69120, 1128960, 20643840, 418037760];
    for (id, want) in [
        ("A000285", &a000285[..]),
        ("A014479", &a014479[..]),
        ("A019999", &a019999[..]),
    ] {
        let c = coxbool::compare_oeis(id, want.len()).map_err(|e| e.to_string())?;
        let want_s: Vec<String> = want.iter().map(ToString::to_string).collect();
        ensure(c.matches && c.computed == want_s, || {
            format!("{id}: {:?}", c.computed)
        })?;
    }
    // the d-sequence is the identity count in type D
    for (i, &want) in a000285.iter().enumerate().skip(1) {
        let e = GroupElement::identity(Family::D, i + 1).map_err(|e| e.to_string())?;
        let got = count_above(&e).map_err(|e| e.to_string())?;
        ensure(got == big(want as u128), || {
            format!("D{} identity: {got}", i + 1)
        })?;
    }
    Ok("A000285 (10), A014479 (8), A019999 (8) match".into())
}

fn criterion_5() -> Outcome {
    let c: [u128; 10] = [
        0,
        0,
        12,
        288,
        5760,
        115200,
        2419200,
        54190080,
        1300561920,
        33443020800,
    ];
    let d: [u128; 11] = [
        0,
        1,
        6,
        144,
        2880,
        57600,
        1209600,
        27095040,
        650280960,
        16721510400,
        459841536000,
    ];
    for (f, seq) in [(Family::C, &c[..]), (Family::D, &d[..])] {
        for (i, &want) in seq.iter().enumerate() {
            let got = global_rank_count(f, i + 1, 2).map_err(|e| e.to_string())?;
            ensure(got == big(want), || {
                format!("{f}{} k=2: {got}, want {want}", i + 1)
            })?;
        }
    }
    Ok("C (n=1..10) and D (n=1..11) rank-2 sequences match".into())
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for f in [Family::C, Family::D] {
        let egf = expand_egf(f, 12).map_err(|e| e.to_string())?;
        let rec = recurrence_table(f, 12).map_err(|e| e.to_string())?;
        let totals = egf_total(f, 12).map_err(|e| e.to_string())?;
        ensure(egf.row(0) == Some(&[big(1)][..]), || "n=0 row".into())?;
        ensure(totals.len() == 13, || {
            format!("{f}: {} totals", totals.len())
        })?;
        for (n, total) in totals.iter().enumerate() {
            ensure(egf.row(n) == rec.row(n), || {
                format!("{f}{n}: egf vs recurrence")
            })?;
            let sum: BigUint = egf.row(n).unwrap_or_default().iter().sum();
            ensure(sum == *total, || format!("{f}{n}: total {sum} vs {total}"))?;
            if n == 0 {
                continue;
            }
            for k in 0..=n + 1 {
                let g = global_rank_count(f, n, k).map_err(|e| e.to_string())?;
                ensure(egf.get(n, k) == g, || {
                    format!("{f}{n} k={k}: egf {} vs {g}", egf.get(n, k))
                })?;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(1), || {
        format!("took {elapsed:?}")
    })?;
    Ok(format!("C and D agree for n <= 12, {elapsed:.2?}"))
}

fn criterion_7() -> Outcome {
    let mut lucas = vec![2u128, 1];
    let mut d = vec![1u128, 1, 4];
    for i in 2..20 {
        lucas.push(lucas[i - 1] + lucas[i - 2]);
    }
    for i in 3..20 {
        d.push(d[i - 1] + d[i - 2]);
    }
    for n in 1..=16 {
        let path = CoxeterType::A(n).graph().map_err(|e| e.to_string())?;
        let prof = count_by_size(&path);
        for k in 0..=n + 1 {
            ensure(prof.count(k) == path_count(n, k), || format!("P{n} k={k}"))?;
        }
    }
    for n in 2..=16 {
        let fork = CoxeterType::D(n).graph().map_err(|e| e.to_string())?;
        let prof = count_by_size(&fork);
        for k in 0..=n + 1 {
            let want = fork_count(n, k).map_err(|e| e.to_string())?;
            ensure(prof.count(k) == want, || format!("D{n} graph k={k}"))?;
        }
    }
    for n in 2..=16 {
        let cycle = CoxeterType::AffineA(n).graph().map_err(|e| e.to_string())?;
        let got = count_by_size(&cycle).total().clone();
        ensure(got == big(lucas[n + 1]), || {
            format!("cycle {}: {got}", n + 1)
        })?;
    }
    for n in 4..=16 {
        let g = CoxeterType::AffineD(n).graph().map_err(|e| e.to_string())?;
        let got = count_by_size(&g).total().clone();
        let want = big(d[n] + 2 * d[n - 2]);
        ensure(got == want, || format!("AffD{n}: {got} vs {want}"))?;
    }
    Ok("paths, forks (n <= 16), cycles (Lucas), affine D totals match".into())
}

fn criterion_8() -> Outcome {
    let mut cases = 0;
    for (f, n) in exhaustive_groups() {
        let p = build_weak_order(f, n).map_err(|e| e.to_string())?;
        let order = all_elements(f, n).map_err(|e| e.to_string())?.count() as u128;
        for j in independent_sets(p.graph()) {
            let set: BTreeSet<GeneratorId> = j.iter().copied().collect();
            let got = count_elements_avoiding_descents(&p, &set).map_err(|e| e.to_string())?;
            let want = big(order >> j.len());
            ensure(got == want, || format!("{f}{n} J={j:?}: {got} vs {want}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} independent sets, all |W^J| = |W|/2^|J|"))
}

fn criterion_9() -> Outcome {
    let mut checked = 0u64;
    for (f, n) in exhaustive_groups() {
        let id = GroupElement::identity(f, n).map_err(|e| e.to_string())?;
        let gens: Vec<GeneratorId> = id.generators().collect();
        let mut dist = HashMap::from([(id.clone(), 0usize)]);
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            let d = dist[&e];
            for &s in &gens {
                let t = e.apply_generator(s).map_err(|e| e.to_string())?;
                if !dist.contains_key(&t) {
                    dist.insert(t.clone(), d + 1);
                    queue.push_back(t);
                }
            }
        }
        let order = all_elements(f, n).map_err(|e| e.to_string())?.count();
        ensure(dist.len() == order, || {
            format!("{f}{n}: BFS {} vs {order}", dist.len())
        })?;
        for (e, &d) in &dist {
            let l = e.length();
            ensure(l == d, || format!("{f}{n} {e}: length {l}, BFS {d}"))?;
            let mut drops = BTreeSet::new();
            for &s in &gens {
                let t = e.apply_generator(s).map_err(|e| e.to_string())?;
                ensure(
                    t.apply_generator(s).map_err(|e| e.to_string())? == *e,
                    || format!("{f}{n} {e}: s{} not an involution", s.0 + 1),
                )?;
                ensure(t.length().abs_diff(l) == 1, || {
                    format!("{f}{n} {e}: |dl| != 1")
                })?;
                if t.length() < l {
                    drops.insert(s);
                }
            }
            ensure(e.descent_set() == drops, || {
                format!("{f}{n} {e}: descent formula")
            })?;
            if f != Family::A {
                let m = e.to_mirrored().map_err(|e| e.to_string())?;
                let back = GroupElement::from_mirrored(&m, f).map_err(|e| e.to_string())?;
                ensure(back == *e, || format!("{f}{n} {e}: mirrored round trip"))?;
                let reparsed =
                    GroupElement::parse(f, n, &e.to_text()).map_err(|e| e.to_string())?;
                ensure(reparsed == *e, || format!("{f}{n} {e}: text round trip"))?;
            }
            checked += 1;
        }
    }
    Ok(format!("{checked} elements, 0 failures"))
}

fn report(line: usize, name: &str, outcome: std::thread::Result<Outcome>) -> bool {
    let (ok, detail) = match outcome {
        Ok(Ok(d)) => (true, d),
        Ok(Err(d)) => (false, d),
        Err(_) => (false, "panicked".to_string()),
    };
    let _ = writeln!(
        std::io::stderr(),
        "criterion {line} [{}] {name}: {detail}",
        if ok { "PASS" } else { "FAIL" }
    );
    ok
}

#[test]
fn acceptance_criteria() {
    let mut counts = RankCounts::new();
    let mut all = true;
    all &= report(1, "A8 listing above 513649728", catch_unwind(criterion_1));
    all &= report(
        2,
        "exhaustive bijection",
        catch_unwind(AssertUnwindSafe(|| criterion_2(&mut counts))),
    );
    all &= report(
        3,
        "closed forms",
        catch_unwind(AssertUnwindSafe(|| criterion_3(&counts))),
    );
    all &= report(4, "OEIS prefixes", catch_unwind(criterion_4));
    all &= report(5, "rank-2 sequences", catch_unwind(criterion_5));
    all &= report(6, "EGF agreement", catch_unwind(criterion_6));
    all &= report(7, "independent-set identities", catch_unwind(criterion_7));
    all &= report(8, "coset counts", catch_unwind(criterion_8));
    all &= report(9, "model integrity", catch_unwind(criterion_9));
    assert!(all, "at least one acceptance criterion failed");
}
