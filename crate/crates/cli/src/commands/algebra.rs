use anyhow::{anyhow, bail, Context, Result};
use motspc::milnor_witt::{gw_idempotents, kmw_closure_table, parse_word, MilnorKElement};
use motspc::quadratic_forms::{
    fundamental_ideal_power, gw_class, isotropic_vector, witt_decompose, witt_ring_structure, DiagonalForm, GWClass,
    WittClass,
};
use serde_json::json;

use super::{field, field_json, kmw_ring, parse_range};
use crate::output::{Report, Table, Verdict};

pub fn kmw_table(q: u64, range: &str) -> Result<Report> {
    let f = field(q)?;
    let ring = kmw_ring(&f)?;
    let (a, b) = parse_range(range)?;
    let mut rows = Vec::new();
    let mut table = Table::new(&["n", "K^MW_n", "generators"]);
    for n in a..=b {
        let g = ring.group(n).with_context(|| format!("degree {n}"))?;
        table.row(vec![n.to_string(), g.shape(), g.generators.join(", ")]);
        rows.push(json!({
            "degree": n,
            "group": g.shape(),
            "invariant_factors": g.invariant_factors,
            "generators": g.generators,
        }));
    }
    let cfg = ring.config();
    let text = format!("K^MW_n(F_{q}), w = {}\n{}", f.primitive_element(), table.render());
    Ok(Report::new(
        "kmw table",
        json!({ "q": q, "range": [a, b] }),
        json!({ "field": field_json(&f), "rows": rows }),
        text,
    )
    .truncation(json!({ "degree_window": [cfg.min_degree, cfg.max_degree] })))
}

pub fn kmw_reduce(q: u64, word: &str) -> Result<Report> {
    let f = field(q)?;
    let ring = kmw_ring(&f)?;
    let w = parse_word(&f, word).map_err(|e| anyhow!("cannot parse word `{word}`: {e}"))?;
    let reduced = ring.reduce(&w)?;
    let mut table = Table::new(&["n", "element", "coordinates", "group"]);
    let mut pieces = Vec::new();
    for (n, x) in reduced.iter().filter(|(_, x)| !x.is_zero()) {
        let g = ring.group(*n)?;
        table.row(vec![n.to_string(), x.to_string(), format!("{:?}", x.coords), g.shape()]);
        pieces.push(json!({ "degree": n, "element": x.to_string(), "coordinates": x.coords, "group": g.shape() }));
    }
    let mut text = format!("word {w}\n");
    if pieces.is_empty() {
        text.push_str("reduces to 0\n");
    } else {
        text.push_str(&table.render());
    }
    let cfg = ring.config();
    Ok(Report::new(
        "kmw reduce",
        json!({ "q": q, "word": word }),
        json!({ "field": field_json(&f), "word": w.to_string(), "degrees": pieces }),
        text,
    )
    .truncation(json!({ "degree_window": [cfg.min_degree, cfg.max_degree] })))
}

pub fn kmw_closure(p: u64, range: &str) -> Result<Report> {
    let (a, b) = parse_range(range)?;
    let rows = kmw_closure_table(p, a, b).with_context(|| format!("--p {p}"))?;
    let mut table = Table::new(&["n", "K^MW_n"]);
    for r in &rows {
        table.row(vec![r.degree.to_string(), r.group.clone()]);
    }
    Ok(Report::new(
        "kmw closure",
        json!({ "p": p, "range": [a, b] }),
        json!({ "rows": rows }),
        format!("K^MW_n over the algebraic closure of F_{p}\n{}", table.render()),
    ))
}

fn parse_form(s: &str) -> Result<Vec<i64>> {
    let entries: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().with_context(|| format!("form entry `{t}` is not an integer")))
        .collect::<Result<_>>()?;
    if entries.is_empty() {
        bail!("the form needs at least one entry");
    }
    Ok(entries)
}

fn witt_name(w: &WittClass) -> String {
    witt_ring_structure(w.field())
        .generator_table
        .into_iter()
        .find(|(_, c)| c == w)
        .map(|(n, _)| n)
        .expect("every class is named")
}

pub fn witt_classify(q: u64, form: &str) -> Result<Report> {
    let f = field(q)?;
    let entries = parse_form(form)?;
    let d = DiagonalForm::from_ints(&f, &entries).context("invalid form")?;
    let iso = isotropic_vector(&d);
    let (planes, kernel) = witt_decompose(&d);
    let w = WittClass::of(&d);
    let gw = gw_class(&d);
    let name = witt_name(&w);
    let disc = if d.discriminant_class() == 0 { "square" } else { "nonsquare" };
    let verdict = if iso.is_some() { "isotropic" } else { "anisotropic" };
    let mut text = format!(
        "{verdict}, Witt class {name}, Witt index {planes}, anisotropic kernel {kernel}\n\
         form {d} over F_{q}: rank {}, discriminant {disc}\n",
        d.rank()
    );
    if let Some(v) = &iso {
        let shown: Vec<String> = v.iter().map(|x| x.to_string()).collect();
        text.push_str(&format!("isotropic vector ({})\n", shown.join(", ")));
    }
    text.push_str(&format!("GW class: rank {}, discriminant bit {}\n", gw.rank, gw.disc));
    Ok(Report::new(
        "witt classify",
        json!({ "q": q, "form": entries }),
        json!({
            "field": field_json(&f),
            "form": d.to_string(),
            "rank": d.rank(),
            "discriminant": disc,
            "isotropic": iso.is_some(),
            "isotropic_vector": iso.map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>()),
            "witt_index": planes,
            "anisotropic_kernel": kernel.to_string(),
            "witt_class": name,
            "gw": { "rank": gw.rank, "disc": gw.disc },
        }),
        text,
    ))
}

pub fn witt_ring(q: u64) -> Result<Report> {
    let f = field(q)?;
    let s = witt_ring_structure(&f);
    let mut elements = Vec::new();
    let mut table = Table::new(&["element", "anisotropic form", "additive order", "rank parity"]);
    for (name, c) in &s.generator_table {
        table.row(vec![
            name.clone(),
            c.anisotropic_kernel().to_string(),
            c.additive_order().to_string(),
            c.rank_parity().to_string(),
        ]);
        elements.push(json!({
            "name": name,
            "form": c.anisotropic_kernel().to_string(),
            "additive_order": c.additive_order(),
            "rank_parity": c.rank_parity(),
        }));
    }
    let names: Vec<&str> = s.generator_table.iter().map(|(n, _)| n.as_str()).collect();
    let mut mult = Table::new(&[&["*"], names.as_slice()].concat());
    let mut products = Vec::new();
    for (a, x) in &s.generator_table {
        let row: Vec<String> = s.generator_table.iter().map(|(_, y)| witt_name(&x.mul(y).unwrap())).collect();
        mult.row([vec![a.clone()], row.clone()].concat());
        products.push(row);
    }
    let text = format!(
        "W(F_{q}) = {}, order of <1> = {}\n{}\nmultiplication\n{}",
        s.kind,
        s.order_of_one,
        table.render(),
        mult.render()
    );
    Ok(Report::new(
        "witt ring",
        json!({ "q": q }),
        json!({
            "field": field_json(&f),
            "type": s.kind.to_string(),
            "order_of_one": s.order_of_one,
            "elements": elements,
            "multiplication": products,
        }),
        text,
    ))
}

pub fn gw(q: u64) -> Result<Report> {
    let f = field(q)?;
    let w = f.primitive_element();
    let one = GWClass::new(&f, 1, 0);
    let omega = gw_class(&DiagonalForm::new(&f, vec![w.clone()])?);
    let h = GWClass::hyperbolic(&f);
    let relations = [
        ("<w>*<w> = <1>", omega.mul(&omega)? == one),
        ("<w>+<w> = <1>+<1>", omega.add(&omega)? == one.add(&one)?),
        ("h = <1>+<-1>", h == one.add(&gw_class(&DiagonalForm::new(&f, vec![f.minus_one()])?))?),
        ("h*<w> = h", h.mul(&omega)? == h),
    ];
    let ideal: Vec<usize> = (0..=3).map(|n| fundamental_ideal_power(&f, n).order()).collect();
    let (idempotents, splittings) = gw_idempotents(&f, 12);
    let mut text = format!("GW(F_{q}) = Z + Z/2 via (rank, discriminant), w = {w}\n");
    let mut table = Table::new(&["relation", "holds"]);
    for (r, ok) in &relations {
        table.row(vec![r.to_string(), ok.to_string()]);
    }
    text.push_str(&table.render());
    text.push_str(&format!("|I^n| in W for n = 0..3: {ideal:?}\n"));
    let shown: Vec<String> = idempotents.iter().map(|e| format!("({}, {})", e.rank, e.disc)).collect();
    text.push_str(&format!(
        "idempotents of GW[1/{}] among the candidates: {}; nontrivial splittings of 1: {}\n",
        f.p(),
        shown.join(", "),
        splittings.len()
    ));
    let verdicts = vec![
        Verdict::single("gw relations", relations.iter().all(|(_, ok)| *ok), || {
            relations.iter().filter(|(_, ok)| !ok).map(|(r, _)| r.to_string()).collect::<Vec<_>>().join("; ")
        }),
        Verdict::single("1 is indecomposable in GW[1/p]", splittings.is_empty(), || format!("{splittings:?}")),
    ];
    Ok(Report::new(
        "gw",
        json!({ "q": q }),
        json!({
            "field": field_json(&f),
            "generators": { "<1>": [1, 0], "<w>": [omega.rank, omega.disc], "h": [h.rank, h.disc] },
            "relations": relations.iter().map(|(r, ok)| json!({ "relation": r, "holds": ok })).collect::<Vec<_>>(),
            "fundamental_ideal_orders": ideal,
            "idempotents": shown,
            "splittings": splittings.len(),
        }),
        text,
    )
    .truncation(json!({ "idempotent_numerator_bound": 12, "idempotent_denominator_exponent": 2 }))
    .verdicts(verdicts))
}

pub fn milnor(q: u64, n: i64) -> Result<Report> {
    let f = field(q)?;
    let ring = kmw_ring(&f)?;
    let rep = ring.verify_ses(n)?;
    let sample = match n {
        n if n < 0 => "0 (negative degree)".to_string(),
        _ => match ring.to_milnor(&match n {
            0 => ring.one(),
            1 => ring.symbol(&f.primitive_element())?,
            _ => ring.zero(n)?,
        })? {
            MilnorKElement::Integer(k) => format!("1 -> {k}"),
            MilnorKElement::Unit(u) => format!("[w] -> {u}"),
            MilnorKElement::Zero { .. } => "0".to_string(),
        },
    };
    let milnor_shape = rep.milnor_shape.clone();
    let ideal = if n < 0 { format!("I^{} = W", n + 1) } else { format!("I^{}", n + 1) };
    let text = format!(
        "K^M_{n}(F_{q}) = {milnor_shape}\n0 -> {ideal} (order {}) -> K^MW_{n} = {} -> K^M_{n} = {milnor_shape} -> 0\n\
         injective {}, exact in the middle {}, surjective {}\nsample {sample}\n",
        rep.ideal_order, rep.kmw_shape, rep.injective, rep.middle_exact, rep.surjective,
    );
    let verdict = Verdict::single("short exact sequence", rep.passed(), || rep.witnesses.join("; "));
    Ok(Report::new(
        "milnor",
        json!({ "q": q, "n": n }),
        json!({
            "field": field_json(&f),
            "milnor_group": milnor_shape,
            "kmw_group": rep.kmw_shape,
            "ideal_order": rep.ideal_order,
            "injective": rep.injective,
            "middle_exact": rep.middle_exact,
            "surjective": rep.surjective,
            "sample": sample,
        }),
        text,
    )
    .verdicts(vec![verdict]))
}
