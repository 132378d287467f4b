use anyhow::{bail, Result};
use motspc::graded_spectrum::{enumerate_primes_with, Bounds, Generator};
use serde_json::json;

use super::field;
use crate::output::{Report, Table, Verdict};

pub fn spech(q: u64, prime_bound: u64, degree_bound: i64) -> Result<Report> {
    let f = field(q)?;
    if prime_bound < 2 {
        bail!("--prime-bound must be at least 2");
    }
    if !(1..=24).contains(&degree_bound) {
        bail!("--degree-bound must lie in 1..=24");
    }
    let bounds = Bounds { degree_bound, ..Bounds::default() };
    let space = enumerate_primes_with(&f, prime_bound, bounds)?;
    let mut table = Table::new(&["point", "residue char", "certificate", "pairs checked", "note"]);
    let mut points = Vec::new();
    for p in &space.points {
        let c = &p.certificate;
        table.row(vec![
            p.name.clone(),
            p.characteristic.to_string(),
            if c.passed() { "prime".into() } else { "FAILED".into() },
            c.pairs_checked.to_string(),
            p.discrepancy.clone().unwrap_or_default(),
        ]);
        points.push(json!({
            "name": p.name,
            "generators": p.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
            "residue_characteristic": p.characteristic,
            "certificate": {
                "passed": c.passed(),
                "reduced_passed": p.reduced_certificate.passed(),
                "degree_bound": c.degree_bound,
                "coefficient_bound": c.coefficient_bound,
                "pairs_checked": c.pairs_checked,
                "counterexample": c.counterexample,
            },
            "discrepancy": p.discrepancy,
        }));
    }
    let names = space.names();
    let specializations: Vec<[String; 2]> =
        space.specializations.iter().map(|&(i, j)| [names[i].clone(), names[j].clone()]).collect();
    let generic: Vec<String> = space.generic_points().into_iter().map(|i| names[i].clone()).collect();
    let d_eta: Vec<String> =
        space.d_open(&space.element(Generator::Eta)).into_iter().map(|i| names[i].clone()).collect();
    let killed: Vec<String> = space
        .reduction
        .killed
        .iter()
        .map(|k| format!("{} (degree {}, nilpotent of index {})", k.element, k.degree, k.power))
        .collect();
    let mut text = format!(
        "Spec^h(K^MW_*(F_{q})), integer primes up to {prime_bound}, certificates to degree {degree_bound}\n\
         nilpotents killed: {}\n",
        killed.join(", ")
    );
    text.push_str(&table.render());
    text.push_str(&format!("generic points: {}\nD(η) = {{{}}}\n", generic.join(", "), d_eta.join(", ")));
    for [a, b] in &specializations {
        text.push_str(&format!("{a} ~> {b}\n"));
    }
    let failed: Vec<&str> = space.points.iter().filter(|p| !p.certificate.passed()).map(|p| p.name.as_str()).collect();
    let verdicts = vec![
        Verdict::single("primality certificates", failed.is_empty(), || failed.join(", ")),
        Verdict::single("reduction is consistent", space.reduction.consistent, || {
            format!("{:?}", space.reduction.comparison)
        }),
    ];
    Ok(Report::new(
        "spech",
        json!({ "q": q, "prime_bound": prime_bound, "degree_bound": degree_bound }),
        json!({
            "field": super::field_json(&f),
            "nilpotents": killed,
            "points": points,
            "specializations": specializations,
            "generic_points": generic,
            "d_eta": d_eta,
            "rejected": space.rejected.iter().map(|r| json!({
                "generators": r.generators.iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "reason": r.reason,
            })).collect::<Vec<_>>(),
        }),
        text,
    )
    .truncation(json!({
        "prime_bound": prime_bound,
        "degree_bound": bounds.degree_bound,
        "coefficient_bound": bounds.coefficient_bound,
    }))
    .verdicts(verdicts))
}
