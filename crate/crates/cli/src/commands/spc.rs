use std::collections::BTreeSet;

use anyhow::{anyhow, Result};
use motspc::tt_geometry::{
    enumerate_primes, spc_equivariant, spc_shtop, spc_tate, verify_comparison, FiniteSpectralSpace,
};
use serde_json::{json, Value};

use super::universe;
use crate::output::{Report, Table, Verdict};

/// Largest space whose Thomason subsets are listed.
const MAX_THOMASON_POINTS: usize = 16;
/// Largest space accepted at all.
const MAX_POINTS: usize = 400;

fn describe(space: &FiniteSpectralSpace, name: &str, dot: bool) -> (Value, String, Value) {
    let labels = &space.labels;
    let mut table = Table::new(&["point", "closure"]);
    let mut points = Vec::new();
    for (i, l) in labels.iter().enumerate() {
        let closure = space.labels_of(&space.closure(&BTreeSet::from([i])));
        table.row(vec![l.clone(), closure.join(", ")]);
        points.push(json!({ "label": l, "closure": closure }));
    }
    let edges: Vec<[String; 2]> =
        space.hasse_edges().into_iter().map(|(i, j)| [labels[i].clone(), labels[j].clone()]).collect();
    let listed = space.len() <= MAX_THOMASON_POINTS;
    let thomason: Option<Vec<Vec<String>>> =
        listed.then(|| space.enumerate_thomason().iter().map(|t| space.labels_of(t)).collect());
    let mut text = if dot {
        space.to_dot(name)
    } else {
        let mut t = format!("{name}: {} points\n{}", space.len(), table.render());
        match &thomason {
            Some(ts) => t.push_str(&format!("Thomason subsets: {}\n", ts.len())),
            None => t.push_str(&format!("Thomason subsets not listed above {MAX_THOMASON_POINTS} points\n")),
        }
        t
    };
    if let (false, Some(inc)) = (dot, &space.incidence) {
        for (l, objs) in labels.iter().zip(inc) {
            text.push_str(&format!("{l} contains {}\n", objs.join(", ")));
        }
    }
    let mut result = json!({
        "points": points,
        "hasse_edges": edges,
        "thomason_count": thomason.as_ref().map(|t| t.len()),
        "thomason_subsets": thomason,
    });
    if dot {
        result["dot"] = json!(space.to_dot(name));
    }
    let truncation = json!({ "thomason_listed": listed, "thomason_point_limit": MAX_THOMASON_POINTS });
    (result, text, truncation)
}

pub fn tate(twist: Option<i64>, shift: Option<i64>, dot: bool) -> Result<Report> {
    let u = universe(twist, shift)?;
    let e = enumerate_primes(&u);
    let space = spc_tate(&u)?;
    let (mut result, mut text, mut truncation) = describe(&space, "Spc(Tate)", dot);
    let cmp = verify_comparison(&u);
    let ideals: Vec<&str> = e.ideals.iter().map(|i| i.label.as_str()).collect();
    if !dot {
        text.push_str(&format!(
            "universe: twist radius {}, shift radius {}; thick tensor ideals: {}\nprimes: {}\ncomparison checks: {}/{} agree\n",
            u.twist_radius,
            u.shift_radius,
            ideals.join(", "),
            e.primes.iter().map(|p| p.label.as_str()).collect::<Vec<_>>().join(", "),
            cmp.checks.iter().filter(|c| c.agrees).count(),
            cmp.checks.len()
        ));
        if let Some(d) = &e.diagnostic {
            text.push_str(&format!("note: {d}\n"));
        }
    }
    result["ideals"] = json!(ideals);
    result["primes"] = json!(e.primes.iter().map(|p| &p.label).collect::<Vec<_>>());
    result["diagnostic"] = json!(e.diagnostic);
    result["comparison"] = json!({
        "images": cmp.images.iter().map(|i| &i.pieces).collect::<Vec<_>>(),
        "checks": cmp.checks.len(),
        "passed": cmp.passed,
    });
    truncation["twist_radius"] = json!(u.twist_radius);
    truncation["shift_radius"] = json!(u.shift_radius);
    let unique = e.primes.len() == 1 && e.primes[0].slots.is_empty();
    Ok(Report::new(
        "spc tate",
        json!({ "twist_radius": u.twist_radius, "shift_radius": u.shift_radius, "dot": dot }),
        result,
        text,
    )
    .truncation(truncation)
    .verdicts(vec![
        Verdict::single("the zero ideal is the only prime", unique, || {
            format!("primes: {:?}", e.primes.iter().map(|p| &p.label).collect::<Vec<_>>())
        }),
        Verdict::single("comparison map", cmp.passed, || {
            cmp.checks.iter().filter(|c| !c.agrees).map(|c| c.element.clone()).collect::<Vec<_>>().join(", ")
        }),
    ]))
}

fn check_size(points: u64) -> Result<()> {
    if points as usize > MAX_POINTS {
        return Err(anyhow!("the requested space has {points} points and the limit is {MAX_POINTS}"));
    }
    Ok(())
}

fn primes_up_to(b: u64) -> u64 {
    (2..=b).filter(|&p| motspc::finite_field::is_prime(p)).count() as u64
}

pub fn sh_top(prime_bound: u64, height_bound: u64, dot: bool) -> Result<Report> {
    check_size(1 + primes_up_to(prime_bound.min(10_000)) * (height_bound.min(10_000) + 1))?;
    let space = spc_shtop(prime_bound, height_bound)?;
    let (result, text, truncation) = describe(&space, "Spc(SH^c)", dot);
    Ok(Report::new(
        "spc sh-top",
        json!({ "prime_bound": prime_bound, "height_bound": height_bound, "dot": dot }),
        result,
        text,
    )
    .truncation(truncation))
}

pub fn equivariant(n: u64, prime_bound: u64, height_bound: u64, relations: &[String], dot: bool) -> Result<Report> {
    let divisors = (1..=n.min(10_000)).filter(|m| n.is_multiple_of(*m)).count() as u64;
    check_size(divisors * (1 + primes_up_to(prime_bound.min(10_000)) * (height_bound.min(10_000) + 1)))?;
    let base = spc_equivariant(n, prime_bound, height_bound)?;
    let pairs: Vec<(&str, &str)> = relations
        .iter()
        .map(|r| {
            r.split_once('>')
                .map(|(a, b)| (a.trim(), b.trim()))
                .ok_or_else(|| anyhow!("relation `{r}` is not of the form A>B"))
        })
        .collect::<Result<_>>()?;
    let space = if pairs.is_empty() { base } else { base.with_relations(&pairs)? };
    let (result, text, truncation) = describe(&space, &format!("Spc(SH(C{n})^c)"), dot);
    Ok(Report::new(
        "spc equivariant",
        json!({ "n": n, "prime_bound": prime_bound, "height_bound": height_bound, "relations": relations, "dot": dot }),
        result,
        text,
    )
    .truncation(truncation))
}
