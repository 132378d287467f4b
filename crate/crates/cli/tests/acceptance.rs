//! Acceptance suite: one line per criterion, nonzero exit if any fails.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;

use motspc::chow_motives::{hom_group, motive_decompose, pairing_nondegenerate, ChowClass, Motive, ProjSpaceProduct};
use motspc::graded_spectrum::enumerate_primes_with;
use motspc::milnor_witt::MilnorWitt;
use motspc::quadratic_forms::{is_isotropic, DiagonalForm};
use motspc::tt_geometry::{enumerate_primes, spc_equivariant, spc_shtop, Universe};
use motspc::verify::run_suite;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn suite(name: &str) -> Result<u64, String> {
    let r = run_suite(name).map_err(|e| e.to_string())?;
    match r.failures.first() {
        None if r.passed => Ok(r.checks),
        Some(f) => Err(format!("suite {name}: {} ({})", f.invariant, f.witness)),
        None => Err(format!("suite {name} failed")),
    }
}

fn kmw_tables() -> Outcome {
    let checks = suite("kmw-tables")?;
    let f3 = MilnorWitt::new(&common::field(3));
    let shapes: Vec<String> = (-3..=2).map(|n| f3.group(n).unwrap().shape()).collect();
    ensure(shapes == ["Z/4", "Z/4", "Z/4", "Z + Z/2", "Z/2", "0"], || format!("F_3 table {shapes:?}"))?;
    for q in common::ORDERS {
        let f = common::field(q);
        let ring = MilnorWitt::new(&f);
        let w = f.primitive_element();
        let reps = [f.one(), w.clone()];
        let forms: Vec<Vec<_>> = [vec![], vec![0], vec![1], vec![0, 0], vec![0, 1], vec![1, 1]]
            .into_iter()
            .map(|ix: Vec<usize>| ix.into_iter().map(|i| reps[i].clone()).collect())
            .collect();
        let mut classes: Vec<&Vec<_>> = Vec::new();
        for d in &forms {
            if !classes.iter().any(|c| common::witt_equivalent(&f, c, d)) {
                classes.push(d);
            }
        }
        let units = f.units().count() as u64;
        for n in -6..=6 {
            let g = ring.group(n).map_err(|e| e.to_string())?;
            let want = match n {
                n if n < 0 => Some(classes.len() as u64),
                0 => None,
                1 => Some(units),
                _ => Some(1),
            };
            ensure(g.order() == want, || format!("q={q} n={n}: order {:?}, brute force {want:?}", g.order()))?;
        }
    }
    Ok(format!("{checks} table entries; group orders agree with brute-force Witt classes"))
}

fn witt_dichotomy() -> Outcome {
    let checks = suite("witt")?;
    for q in common::ORDERS {
        let f = common::field(q);
        let one_one = [f.one(), f.one()];
        ensure(common::hyperbolic_brute(&f, &one_one) == (q % 4 == 1), || format!("q={q}: <1,1> hyperbolicity"))?;
        let units: Vec<_> = f.units().collect();
        for rank in 1..=3 {
            for ix in 0..units.len().pow(rank as u32) {
                let entries: Vec<_> =
                    (0..rank).map(|k| units[ix / units.len().pow(k as u32) % units.len()].clone()).collect();
                if rank == 3 && ix % 7 != 0 {
                    continue;
                }
                let lib = is_isotropic(&DiagonalForm::new(&f, entries.clone()).map_err(|e| e.to_string())?);
                ensure(lib == common::isotropic_brute(&entries), || format!("q={q}: isotropy of {entries:?}"))?;
                ensure(rank < 3 || lib, || format!("q={q}: anisotropic ternary form {entries:?}"))?;
            }
        }
    }
    Ok(format!("{checks} suite checks; isotropy of rank ≤3 forms matches exhaustive search"))
}

fn ses() -> Outcome {
    let checks = suite("ses")?;
    for q in [3, 5, 7, 9] {
        let ring = MilnorWitt::new(&common::field(q));
        for n in -4..=4 {
            let r = ring.verify_ses(n).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("q={q} n={n}: {:?}", r.witnesses))?;
        }
    }
    Ok(format!("{checks} checks over n in [-4, 4], q in {{3, 5, 7, 9}}"))
}

fn oracle() -> Outcome {
    let checks = suite("oracle")?;
    Ok(format!("{checks} elements agree with the quadratic-forms model"))
}

fn spech() -> Outcome {
    let checks = suite("spech")?;
    for q in [3, 5, 7, 9] {
        let space = enumerate_primes_with(&common::field(q), 50, Default::default()).map_err(|e| e.to_string())?;
        let odd: BTreeSet<u64> = (3..=50).filter(|&p| motspc::finite_field::is_prime(p)).collect();
        let chars: BTreeSet<u64> = space.points.iter().map(|p| p.characteristic).filter(|&c| c > 2).collect();
        ensure(chars == odd, || format!("q={q}: residue characteristics {chars:?}"))?;
        ensure(space.points.iter().all(|p| p.certificate.passed() && p.certificate.degree_bound >= 12), || {
            format!("q={q}: a certificate failed")
        })?;
        let disc: Vec<&str> = space.discrepancies().iter().map(|p| p.name.as_str()).collect();
        ensure(disc == ["([ω],η,2)"], || format!("q={q}: discrepancies {disc:?}"))?;
    }
    Ok(format!("{checks} checks; one discrepancy, ([ω],η,2)"))
}

fn eta() -> Outcome {
    let checks = suite("eta")?;
    for q in common::ORDERS {
        let ring = MilnorWitt::new(&common::field(q));
        for n in 0..=64 {
            ensure(ring.eta_power_nonzero(n).map_err(|e| e.to_string())?, || format!("q={q}: η^{n} = 0"))?;
        }
        let loc = ring.localize_eta(-4, 4).map_err(|e| e.to_string())?;
        ensure(loc.four_is_zero && loc.two_is_zero == (q % 4 == 1), || format!("q={q}: localization"))?;
    }
    Ok(format!("{checks} checks; η^n ≠ 0 for n ≤ 64, 4 = 0 in K^MW[η^-1], 2 = 0 iff q = 1 mod 4"))
}

fn motives() -> Outcome {
    let checks = suite("motives")?;
    for n in 0..=4u32 {
        let x = ProjSpaceProduct::projective(n);
        ensure(motive_decompose(&x).len() == n as usize + 1, || format!("P^{n}"))?;
        if n == 0 {
            continue;
        }
        let h = ChowClass::hyperplane(&x, 0).map_err(|e| e.to_string())?;
        let mut top = ChowClass::one(&x);
        for _ in 0..n {
            top = top.mul(&h).map_err(|e| e.to_string())?;
        }
        ensure(top == ChowClass::point_class(&x), || format!("P^{n}: h^n is not the point"))?;
    }
    let x = ProjSpaceProduct::new(vec![2, 2]);
    ensure(pairing_nondegenerate(&x).nondegenerate, || "P2xP2 pairing".into())?;
    let end = hom_group(&Motive::of_space(&x), &Motive::of_space(&x)).map_err(|e| e.to_string())?;
    let cycles = (0..81).filter(|m| (0..4).map(|k| m / 3usize.pow(k) % 3).sum::<usize>() == 4).count();
    ensure(end.rank() == cycles, || format!("End(M(P2xP2)) rank {}, {cycles} cycles", end.rank()))?;
    Ok(format!("{checks} checks; decomposition, rigidity for |twist| ≤ 3, perfect pairing in dimension ≤ 4"))
}

fn tate() -> Outcome {
    let checks = suite("tate")?;
    let e = enumerate_primes(&Universe::new(4, 2));
    ensure(e.primes.len() == 1 && e.primes[0].slots.is_empty(), || format!("{} primes", e.primes.len()))?;
    let end = hom_group(&Motive::unit(), &Motive::unit()).map_err(|e| e.to_string())?.rationalize();
    ensure(end.dimension == 1, || format!("End(1) has dimension {}", end.dimension))?;
    Ok(format!("{checks} checks; Spc of the (4, 2) universe is the zero ideal, End(1) = Q"))
}

fn spaces() -> Outcome {
    let checks = suite("spaces")?;
    let mut compared = 0;
    for b in 1..=5 {
        for h in 1..=3 {
            let mut list = vec![spc_shtop(b, h).map_err(|e| e.to_string())?];
            list.extend((1..=3).filter_map(|n| spc_equivariant(n, b, h).ok()));
            for s in list.iter().filter(|s| s.len() <= 12) {
                let brute = common::upsets(s.len(), |i, j| s.specializes(i, j));
                ensure(s.enumerate_thomason() == brute, || format!("Thomason subsets of {:?}", s.labels))?;
                compared += 1;
            }
        }
    }
    Ok(format!("{checks} checks; Thomason subsets of {compared} spaces match exhaustive search"))
}

const COMMANDS: &[&[&str]] = &[
    &["kmw", "table", "--q", "3", "--range", "-3..2"],
    &["kmw", "reduce", "--q", "7", "--word", "(1 + eta[w])(1 - h)"],
    &["kmw", "closure", "--p", "5"],
    &["witt", "classify", "--q", "5", "--form", "1,1"],
    &["witt", "ring", "--q", "9"],
    &["gw", "--q", "13"],
    &["milnor", "--q", "5", "--n", "2"],
    &["spech", "--q", "3", "--prime-bound", "11"],
    &["motive", "decompose", "--space", "P1xP1xP1"],
    &["motive", "hom", "--space", "P1", "--target", "P2", "--twist", "1"],
    &["motive", "dual", "--space", "P3"],
    &["motive", "pairing", "--space", "P1xP2"],
    &["spc", "tate", "--dot"],
    &["spc", "sh-top"],
    &["spc", "equivariant", "--n", "3"],
    &["verify", "--suite", "tate"],
];

fn reproducible() -> Outcome {
    let mut runs = 0;
    for args in COMMANDS {
        for json in [false, true] {
            let argv: Vec<&str> =
                ["motspc"].into_iter().chain(json.then_some("--json")).chain(args.iter().copied()).collect();
            let a = motspc_cli::run(argv.iter().copied());
            let b = motspc_cli::run(argv.iter().copied());
            ensure(a.code == motspc_cli::EXIT_OK, || format!("{argv:?} exited {}: {}", a.code, a.stderr))?;
            ensure(a == b, || format!("{argv:?} differs between runs"))?;
            if json {
                serde_json::from_str::<serde_json::Value>(&a.stdout).map_err(|e| format!("{argv:?}: {e}"))?;
            }
            runs += 1;
        }
    }
    Ok(format!("{runs} invocations byte-identical across two runs"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("K^MW tables for q ≤ 13, n in [-6, 6]", kmw_tables),
        ("Witt dichotomy", witt_dichotomy),
        ("short exact sequences", ses),
        ("Witt-model oracle in degrees ≤ 0", oracle),
        ("Spec^h for p ≤ 50", spech),
        ("η non-nilpotent and η-localization", eta),
        ("Chow motives of projective spaces", motives),
        ("Tate universe", tate),
        ("finite spectral spaces", spaces),
        ("CLI reproducibility", reproducible),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
