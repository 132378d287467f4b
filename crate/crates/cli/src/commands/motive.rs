use anyhow::{anyhow, bail, Result};
use motspc::chow_motives::{
    decomposition_is_complete, hom_group, motive_decompose, pairing_nondegenerate, semisimplicity_check, tate_label,
    Correspondence, Motive, ProjSpaceProduct,
};
use serde_json::json;

use crate::output::{Report, Table, Verdict};

/// Largest total dimension accepted on the command line.
const MAX_DIM: i64 = 6;

fn parse_space(s: &str) -> Result<ProjSpaceProduct> {
    let x: ProjSpaceProduct = s.parse().map_err(|e| anyhow!("invalid --space `{s}`: {e}"))?;
    if x.dim() > MAX_DIM {
        bail!("--space `{s}` has dimension {} and the limit is {MAX_DIM}", x.dim());
    }
    Ok(x)
}

pub fn decompose(space: &str) -> Result<Report> {
    let x = parse_space(space)?;
    let summands = motive_decompose(&x);
    let complete = decomposition_is_complete(&x, &summands);
    let mut table = Table::new(&["summand", "exponents", "Tate motive", "verified"]);
    let mut rows = Vec::new();
    for (i, s) in summands.iter().enumerate() {
        table.row(vec![i.to_string(), format!("{:?}", s.exponents), s.label.clone(), s.verified.to_string()]);
        rows.push(json!({
            "exponents": s.exponents,
            "weight": s.weight,
            "label": s.label,
            "projector": s.motive.projector().class().to_string(),
            "verified": s.verified,
        }));
    }
    let labels: Vec<&str> = summands.iter().map(|s| s.label.as_str()).collect();
    let text = format!("M({x}) = {}\n{}orthogonal and complete: {complete}\n", labels.join(" + "), table.render());
    let unverified: Vec<usize> = (0..summands.len()).filter(|&i| !summands[i].verified).collect();
    Ok(Report::new(
        "motive decompose",
        json!({ "space": x.to_string() }),
        json!({ "summands": rows, "complete": complete }),
        text,
    )
    .verdicts(vec![
        Verdict::single("summands are Tate", unverified.is_empty(), || format!("summands {unverified:?}")),
        Verdict::single("decomposition is complete", complete, || "projectors do not sum to the diagonal".into()),
    ]))
}

pub fn hom(space: &str, target: Option<&str>, twist: i64, target_twist: i64) -> Result<Report> {
    let x = parse_space(space)?;
    let y = match target {
        Some(t) => parse_space(t)?,
        None => x.clone(),
    };
    if x.dim() + y.dim() > MAX_DIM {
        bail!("X x Y has dimension {} and the limit is {MAX_DIM}", x.dim() + y.dim());
    }
    let m = Motive::new(Correspondence::identity(&x), twist)?;
    let n = Motive::new(Correspondence::identity(&y), target_twist)?;
    let h = hom_group(&m, &n)?;
    let rat = h.rationalize();
    let basis: Vec<String> = h.basis.iter().map(|b| b.class().to_string()).collect();
    let mut text = format!(
        "hom(M({x})({twist}), M({y})({target_twist})): correspondences of codimension {}\nrank {}, dimension over Q {}\n",
        h.codimension,
        h.rank(),
        rat.dimension
    );
    for b in &basis {
        text.push_str(&format!("  {b}\n"));
    }
    let mut result = json!({
        "codimension": h.codimension,
        "rank": h.rank(),
        "rational_dimension": rat.dimension,
        "basis": basis,
    });
    let mut verdicts = vec![Verdict::single("hom is torsion free", rat.is_injective(), || {
        format!("rank {} but dimension {}", h.rank(), rat.dimension)
    })];
    if target.is_none() && twist == 0 && target_twist == 0 {
        let ss = semisimplicity_check(&x)?;
        let mut table =
            Table::new(&[&["hom"], ss.labels.iter().map(|s| s.as_str()).collect::<Vec<_>>().as_slice()].concat());
        for (label, row) in ss.labels.iter().zip(&ss.ranks) {
            table.row([vec![label.clone()], row.iter().map(|r| r.to_string()).collect()].concat());
        }
        text.push_str(&format!("homs between the Tate summands (dimension over Q)\n{}", table.render()));
        result["summands"] = json!({ "labels": ss.labels, "ranks": ss.ranks });
        verdicts.push(Verdict::single("endomorphisms of summands are Q", ss.endomorphisms_are_q, || {
            format!("{:?}", ss.ranks)
        }));
        verdicts.push(Verdict::single("homs respect weights", ss.cross_homs_vanish, || format!("{:?}", ss.ranks)));
    }
    Ok(Report::new(
        "motive hom",
        json!({ "space": x.to_string(), "target": y.to_string(), "twist": twist, "target_twist": target_twist }),
        result,
        text,
    )
    .verdicts(verdicts))
}

pub fn dual(space: &str) -> Result<Report> {
    let x = parse_space(space)?;
    let d = Motive::of_space(&x).dual();
    let mut rows = Vec::new();
    let mut table = Table::new(&["summand", "dual", "hom rank"]);
    let mut ok = true;
    for s in motive_decompose(&x) {
        let sd = s.motive.dual();
        let label = tate_label(-s.weight);
        let rank = hom_group(&Motive::lefschetz(-s.weight), &sd)?.rank();
        ok &= rank == 1;
        table.row(vec![s.label.clone(), label.clone(), rank.to_string()]);
        rows.push(json!({ "summand": s.label, "dual": label, "hom_rank": rank }));
    }
    let text = format!("M({x})^v = ({}, transpose of the diagonal, {})\n{}", d.space(), d.twist(), table.render());
    Ok(Report::new(
        "motive dual",
        json!({ "space": x.to_string() }),
        json!({ "space": d.space().to_string(), "twist": d.twist(), "summands": rows }),
        text,
    )
    .verdicts(vec![Verdict::single("dual summands are Tate", ok, || "some dual summand is not L^-w".into())]))
}

pub fn pairing(space: &str) -> Result<Report> {
    let x = parse_space(space)?;
    let rep = pairing_nondegenerate(&x);
    let mut text = format!("intersection pairing on CH*({x}), dimension {}\n", x.dim());
    let mut blocks = Vec::new();
    for b in &rep.blocks {
        text.push_str(&format!(
            "codimension {}: det {}{}\n",
            b.codimension,
            b.determinant,
            if b.unimodular { "" } else { " (not unimodular)" }
        ));
        let mut t = Table::new(&[&[""], b.columns.iter().map(|c| c.as_str()).collect::<Vec<_>>().as_slice()].concat());
        for (r, row) in b.rows.iter().zip(&b.matrix) {
            t.row([vec![r.clone()], row.iter().map(|v| v.to_string()).collect()].concat());
        }
        text.push_str(&t.render());
        blocks.push(json!({
            "codimension": b.codimension,
            "rows": b.rows,
            "columns": b.columns,
            "matrix": b.matrix,
            "determinant": b.determinant.to_string(),
            "unimodular": b.unimodular,
        }));
    }
    text.push_str(&format!("nondegenerate: {}\n", rep.nondegenerate));
    Ok(Report::new(
        "motive pairing",
        json!({ "space": x.to_string() }),
        json!({ "blocks": blocks, "nondegenerate": rep.nondegenerate }),
        text,
    )
    .verdicts(vec![Verdict::single("pairing is perfect", rep.nondegenerate, || {
        let dets: Vec<String> = rep.blocks.iter().map(|b| b.determinant.to_string()).collect();
        format!("determinants {}", dets.join(", "))
    })]))
}
