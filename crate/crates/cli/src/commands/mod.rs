mod algebra;
mod motive;
mod spc;
mod spech;
mod verify;

use anyhow::{anyhow, bail, Context, Result};
use motspc::finite_field::{field_of_order, PrimePower};
use motspc::milnor_witt::{KmwConfig, MilnorWitt};
use motspc::tt_geometry::Universe;
use serde_json::{json, Value};

use crate::args::{Command, KmwCommand, MotiveCommand, SpcCommand, WittCommand};
use crate::output::Report;
use crate::{ENV_KMW_WINDOW, ENV_UNIVERSE};

pub fn dispatch(cmd: &Command) -> Result<Report> {
    match cmd {
        Command::Kmw(KmwCommand::Table { q, range }) => algebra::kmw_table(*q, range),
        Command::Kmw(KmwCommand::Reduce { q, word }) => algebra::kmw_reduce(*q, word),
        Command::Kmw(KmwCommand::Closure { p, range }) => algebra::kmw_closure(*p, range),
        Command::Witt(WittCommand::Classify { q, form }) => algebra::witt_classify(*q, form),
        Command::Witt(WittCommand::Ring(a)) => algebra::witt_ring(a.q),
        Command::Gw(a) => algebra::gw(a.q),
        Command::Milnor(a) => algebra::milnor(a.q, a.n),
        Command::Spech(a) => spech::spech(a.q, a.prime_bound, a.degree_bound),
        Command::Motive(MotiveCommand::Decompose(a)) => motive::decompose(&a.space),
        Command::Motive(MotiveCommand::Hom { space, target, twist, target_twist }) => {
            motive::hom(&space.space, target.as_deref(), *twist, *target_twist)
        }
        Command::Motive(MotiveCommand::Dual(a)) => motive::dual(&a.space),
        Command::Motive(MotiveCommand::Pairing(a)) => motive::pairing(&a.space),
        Command::Spc(SpcCommand::Tate { twist_radius, shift_radius, dot }) => {
            spc::tate(*twist_radius, *shift_radius, dot.dot)
        }
        Command::Spc(SpcCommand::ShTop { prime_bound, height_bound, dot }) => {
            spc::sh_top(*prime_bound, *height_bound, dot.dot)
        }
        Command::Spc(SpcCommand::Equivariant { n, prime_bound, height_bound, relations, dot }) => {
            spc::equivariant(*n, *prime_bound, *height_bound, relations, dot.dot)
        }
        Command::Verify(a) => verify::verify(a.suite.as_deref()),
    }
}

pub(crate) fn field(q: u64) -> Result<PrimePower> {
    field_of_order(q).with_context(|| format!("--q {q} is not an odd prime power"))
}

pub(crate) fn field_json(f: &PrimePower) -> Value {
    json!({
        "q": f.q(),
        "p": f.p(),
        "e": f.e(),
        "modulus": f.modulus(),
        "generator": f.primitive_element().to_string(),
    })
}

/// Parses `A..B` with `A ≤ B`.
pub(crate) fn parse_range(s: &str) -> Result<(i64, i64)> {
    let (a, b) = s.split_once("..").ok_or_else(|| anyhow!("range `{s}` is not of the form A..B"))?;
    let a: i64 = a.trim().parse().with_context(|| format!("range start `{a}` is not an integer"))?;
    let b: i64 = b.trim().parse().with_context(|| format!("range end `{b}` is not an integer"))?;
    if a > b {
        bail!("range `{s}` is empty");
    }
    Ok((a, b))
}

/// K^MW ring with the degree window taken from the environment when set.
pub(crate) fn kmw_ring(f: &PrimePower) -> Result<MilnorWitt> {
    match std::env::var(ENV_KMW_WINDOW) {
        Ok(v) => {
            let (min_degree, max_degree) = parse_range(&v).with_context(|| format!("invalid {ENV_KMW_WINDOW}"))?;
            if min_degree > 0 || max_degree < 1 {
                bail!("invalid {ENV_KMW_WINDOW}: the window must contain degrees 0 and 1");
            }
            Ok(MilnorWitt::with_config(f, KmwConfig { min_degree, max_degree }))
        }
        Err(_) => Ok(MilnorWitt::new(f)),
    }
}

/// Tate universe from flags, then the environment, then the default `(4, 2)`.
pub(crate) fn universe(twist: Option<i64>, shift: Option<i64>) -> Result<Universe> {
    let base = match std::env::var(ENV_UNIVERSE) {
        Ok(v) => {
            let (t, s) = v.split_once(',').ok_or_else(|| anyhow!("invalid {ENV_UNIVERSE}: expected T,S"))?;
            let t: i64 = t.trim().parse().with_context(|| format!("invalid {ENV_UNIVERSE}"))?;
            let s: i64 = s.trim().parse().with_context(|| format!("invalid {ENV_UNIVERSE}"))?;
            Universe::new(t, s)
        }
        Err(_) => Universe::default(),
    };
    let u = Universe::new(twist.unwrap_or(base.twist_radius), shift.unwrap_or(base.shift_radius));
    if u.twist_radius < 0 || u.shift_radius < 0 {
        bail!("universe radii must be nonnegative");
    }
    if u.slots().len() > 121 {
        bail!("universe with {} slots is too large; use radii with (2T+1)(2S+1) <= 121", u.slots().len());
    }
    Ok(u)
}
