//! Command-line front end.
//!
//! ```text
//! wonderdiag <verb> <TYPE> [--I a,b,...] [--J a,b,...] [--json] [--variant paper|signed] [--out PATH]
//! ```
//!
//! Exit codes: 0 success, 1 failed sweep or internal check, 2 usage error,
//! 3 domain error (non-faithful `I`, rank cap).

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use crate::cosets::{double_min_reps, QuotientData};
use crate::degen::{fiber_components, FiberComponent};
use crate::error::Error;
use crate::projgor::{
    composition_from_j, degen_line_indices, diag_hilbert_poly, gorenstein_by_roots,
    gorenstein_obstruction, pairwise_intersection_dim, pn_components, Variant,
};
use crate::rootsys::{DynkinType, Family, RootSystem, SimpleSubset};
use crate::sweep::sweep;
use crate::weyl::{ElementId, WeylGroup};
use crate::wonderful::{dim_g, orbit_lattice};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Verb {
    Roots,
    Weyl,
    Cosets,
    Orbits,
    Degen,
    Flagdegen,
    Pn,
    Gorenstein,
    Sweep,
}

#[derive(Debug, Parser)]
#[command(
    name = "wonderdiag",
    version,
    about = "Wonderful compactification orbits and degenerations of the diagonal"
)]
struct Args {
    verb: Verb,
    /// Dynkin type such as A3 or B2xA1; `pn` and `gorenstein` also take a bare n.
    #[arg(value_name = "TYPE")]
    ty: String,
    /// Simple roots of the parabolic P, 1-based and comma separated ("" or none for the empty set).
    #[arg(long = "I", value_name = "LIST")]
    i: Option<String>,
    /// Simple roots indexing the boundary orbit.
    #[arg(long = "J", value_name = "LIST")]
    j: Option<String>,
    #[arg(long)]
    json: bool,
    /// Duality sign convention for `gorenstein`.
    #[arg(long, default_value = "paper")]
    variant: String,
    /// Write the output to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// Result of one invocation: exit code plus what goes to stdout and stderr.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        if e.is_usage() {
            Failure::Usage(e.to_string())
        } else {
            Failure::Domain(e)
        }
    }
}

type CmdResult = std::result::Result<(String, bool), Failure>;

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let args = match Args::try_parse_from(argv) {
        Ok(a) => a,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                Outcome::ok(text)
            } else {
                Outcome {
                    code,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let (text, clean) = match dispatch(&args) {
        Ok(r) => r,
        Err(Failure::Usage(msg)) => return Outcome::fail(2, msg),
        Err(Failure::Domain(e @ Error::CheckFailed(_))) => return Outcome::fail(1, e),
        Err(Failure::Domain(e)) => return Outcome::fail(3, e),
    };
    let code = if clean { 0 } else { 1 };
    match &args.out {
        Some(path) => match std::fs::write(path, &text) {
            Ok(()) => Outcome {
                code,
                stdout: String::new(),
                stderr: String::new(),
            },
            Err(e) => Outcome::fail(2, format!("cannot write {}: {e}", path.display())),
        },
        None => Outcome {
            code,
            stdout: text,
            stderr: String::new(),
        },
    }
}

fn parse_list(raw: &str, rank: usize) -> std::result::Result<SimpleSubset, Failure> {
    let raw = raw.trim();
    if raw.is_empty() || raw == "none" {
        return Ok(SimpleSubset::empty());
    }
    let indices = raw
        .split(',')
        .map(|p| {
            p.trim()
                .parse::<usize>()
                .map_err(|_| Failure::Usage(format!("bad index {p:?} in list {raw:?}")))
        })
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok(SimpleSubset::from_one_based(&indices, rank)?)
}

fn required(
    raw: &Option<String>,
    flag: &str,
    verb: Verb,
    rank: usize,
) -> std::result::Result<SimpleSubset, Failure> {
    match raw {
        Some(r) => parse_list(r, rank),
        None => Err(Failure::Usage(format!(
            "{} requires {flag}",
            verb.to_possible_value().unwrap().get_name()
        ))),
    }
}

fn optional(
    raw: &Option<String>,
    rank: usize,
) -> std::result::Result<Option<SimpleSubset>, Failure> {
    raw.as_deref().map(|r| parse_list(r, rank)).transpose()
}

fn render<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("output is serializable");
    s.push('\n');
    s
}

fn dispatch(args: &Args) -> CmdResult {
    match args.verb {
        Verb::Pn | Verb::Gorenstein => return projective(args),
        _ => {}
    }
    let ty: DynkinType = args.ty.parse()?;
    let rs = RootSystem::new(ty)?;
    let rank = rs.rank();
    match args.verb {
        Verb::Roots => roots(&rs, optional(&args.i, rank)?, args.json),
        Verb::Orbits => orbits(&rs, args.json),
        verb => {
            let g = WeylGroup::generate(rs);
            match verb {
                Verb::Weyl => weyl(&g, optional(&args.i, rank)?, args.json),
                Verb::Cosets => cosets(
                    &g,
                    required(&args.i, "--I", verb, rank)?,
                    optional(&args.j, rank)?,
                    args.json,
                ),
                Verb::Degen => degen(
                    &g,
                    required(&args.i, "--I", verb, rank)?,
                    required(&args.j, "--J", verb, rank)?,
                    args.json,
                ),
                Verb::Flagdegen => degen(
                    &g,
                    SimpleSubset::empty(),
                    required(&args.j, "--J", verb, rank)?,
                    args.json,
                ),
                Verb::Sweep => {
                    let report = sweep(&g);
                    let clean = report.failures == 0;
                    let text = if args.json {
                        render(&report)
                    } else {
                        let mut s = format!(
                            "sweep {}: |W| = {}, {} faithful I x {} J\n",
                            report.ty, report.order, report.faithful_subsets, report.orbit_subsets
                        );
                        for c in &report.checks {
                            let status = if c.failures == 0 { "PASS" } else { "FAIL" };
                            let _ = writeln!(
                                s,
                                "{status} {:<32} {:>6} cases {:>4} failures",
                                c.name, c.cases, c.failures
                            );
                            for ce in &c.counterexamples {
                                let _ = writeln!(s, "     {ce}");
                            }
                        }
                        let _ = writeln!(s, "{} failures", report.failures);
                        s
                    };
                    Ok((text, clean))
                }
                _ => unreachable!(),
            }
        }
    }
}

fn word(g: &WeylGroup, w: ElementId) -> Vec<usize> {
    g.word_one_based(w)
}

fn word_str(g: &WeylGroup, w: ElementId) -> String {
    let letters = g.word_one_based(w);
    if letters.is_empty() {
        "e".into()
    } else {
        letters
            .iter()
            .map(|i| format!("s{i}"))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn roots(rs: &RootSystem, i: Option<SimpleSubset>, as_json: bool) -> CmdResult {
    let mut value = json!({
        "type": rs.dynkin().to_string(),
        "rank": rs.rank(),
        "weyl_order": rs.dynkin().weyl_order() as u64,
        "cartan": rs.cartan(),
        "positive": rs.num_positive(),
        "roots": rs.roots(),
    });
    if let Some(i) = i {
        let sub: Vec<_> = rs
            .sub_system(i)
            .into_iter()
            .map(|k| rs.root(k).clone())
            .collect();
        value["I"] = json!(i);
        value["sub_system"] = json!(sub);
        value["faithful"] = json!(rs.is_faithful(i));
    }
    if as_json {
        return Ok((render(&value), true));
    }
    let mut s = format!(
        "type {}  rank {}  |W| = {}  |Phi| = {}\n",
        rs.dynkin(),
        rs.rank(),
        rs.dynkin().weyl_order(),
        rs.num_roots()
    );
    let _ = writeln!(s, "cartan {:?}", rs.cartan());
    for (k, r) in rs.roots().iter().enumerate() {
        let _ = writeln!(s, "{k:>4}  {:?}", r.coords());
    }
    if let Some(i) = i {
        let _ = writeln!(
            s,
            "I = {i}: |Phi_I| = {}, faithful = {}",
            rs.sub_system(i).len(),
            rs.is_faithful(i)
        );
    }
    Ok((s, true))
}

fn weyl(g: &WeylGroup, i: Option<SimpleSubset>, as_json: bool) -> CmdResult {
    let mut counts = vec![0usize; g.length(g.longest()) + 1];
    for w in g.elements() {
        counts[g.length(w)] += 1;
    }
    let mut value = json!({
        "type": g.root_system().dynkin().to_string(),
        "order": g.order(),
        "longest": word(g, g.longest()),
        "length_counts": counts,
    });
    if let Some(i) = i {
        value["I"] = json!(i);
        value["longest_in_I"] = json!(word(g, g.longest_in(i)));
        value["parabolic_order"] = json!(g.parabolic_elements(i).len());
    }
    if as_json {
        return Ok((render(&value), true));
    }
    let mut s = format!("type {}  |W| = {}\n", g.root_system().dynkin(), g.order());
    let _ = writeln!(
        s,
        "w0 = {}  (length {})",
        word_str(g, g.longest()),
        g.length(g.longest())
    );
    let _ = writeln!(s, "elements by length: {counts:?}");
    if let Some(i) = i {
        let _ = writeln!(s, "w_I for I = {i}: {}", word_str(g, g.longest_in(i)));
    }
    Ok((s, true))
}

fn cosets(g: &WeylGroup, i: SimpleSubset, j: Option<SimpleSubset>, as_json: bool) -> CmdResult {
    let q = QuotientData::new(g, i);
    let dims = q
        .reps()
        .iter()
        .map(|&w| q.cell_dims(w).map(|(a, b)| [a, b]))
        .collect::<Result<Vec<_>, _>>()?;
    let double = j.map(|j| double_min_reps(g, j, i));
    if as_json {
        let mut value = json!({
            "type": g.root_system().dynkin().to_string(),
            "I": i,
            "dim_x": q.dim_x(),
            "reps": q.reps().iter().map(|&w| word(g, w)).collect::<Vec<_>>(),
            "dims": dims,
        });
        if let (Some(j), Some(d)) = (j, &double) {
            value["J"] = json!(j);
            value["double_reps"] = json!(d.iter().map(|&w| word(g, w)).collect::<Vec<_>>());
        }
        return Ok((render(&value), true));
    }
    let mut s = format!(
        "W^I for {} with I = {}: {} representatives, dim X = {}\n",
        g.root_system().dynkin(),
        i,
        q.reps().len(),
        q.dim_x()
    );
    let _ = writeln!(s, "{:<24} {:>6} {:>7}", "w", "dim C", "dim C-");
    for (&w, d) in q.reps().iter().zip(&dims) {
        let _ = writeln!(s, "{:<24} {:>6} {:>7}", word_str(g, w), d[0], d[1]);
    }
    if let (Some(j), Some(d)) = (j, double) {
        let _ = writeln!(
            s,
            "^J W^I for J = {j}: {}",
            d.iter()
                .map(|&w| word_str(g, w))
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    Ok((s, true))
}

fn orbits(rs: &RootSystem, as_json: bool) -> CmdResult {
    let lattice = orbit_lattice(rs);
    if as_json {
        let value = json!({
            "type": rs.dynkin().to_string(),
            "dim_g": dim_g(rs),
            "orbits": lattice,
        });
        return Ok((render(&value), true));
    }
    let mut s = format!(
        "type {}  dim G = {}  {} orbits\n",
        rs.dynkin(),
        dim_g(rs),
        lattice.len()
    );
    let _ = writeln!(
        s,
        "{:<16} {:>9} {:>9} {:<12}",
        "J", "dim O_J", "dim Stab", "Levi"
    );
    for o in &lattice {
        let levi = if o.levi.is_empty() { "-" } else { &o.levi };
        let _ = writeln!(
            s,
            "{:<16} {:>9} {:>9} {:<12}",
            o.j.to_string(),
            o.orbit_dim,
            o.stab_dim,
            levi
        );
    }
    Ok((s, true))
}

fn component_json(g: &WeylGroup, c: &FiberComponent) -> Value {
    json!({
        "w": word(g, c.w),
        "left": word(g, c.left),
        "dims": {
            "levi": c.levi_quotient_dim,
            "xminus": c.xminus_dim,
            "x": c.x_dim,
            "total": c.total_dim,
        }
    })
}

fn degen(g: &WeylGroup, i: SimpleSubset, j: SimpleSubset, as_json: bool) -> CmdResult {
    let comps = fiber_components(g, i, j)?;
    let dim_x = QuotientData::new(g, i).dim_x();
    if as_json {
        let value = json!({
            "type": g.root_system().dynkin().to_string(),
            "I": i,
            "J": j,
            "dim_x": dim_x,
            "count": comps.len(),
            "components": comps.iter().map(|c| component_json(g, c)).collect::<Vec<_>>(),
        });
        return Ok((render(&value), true));
    }
    let mut s = format!(
        "{} with I = {}, J = {}: {} component(s), dim X = {}\n",
        g.root_system().dynkin(),
        i,
        j,
        comps.len(),
        dim_x
    );
    let _ = writeln!(
        s,
        "{:<20} {:<20} {:>5} {:>7} {:>4} {:>6}",
        "w", "left", "levi", "xminus", "x", "total"
    );
    for c in &comps {
        let _ = writeln!(
            s,
            "{:<20} {:<20} {:>5} {:>7} {:>4} {:>6}",
            word_str(g, c.w),
            word_str(g, c.left),
            c.levi_quotient_dim,
            c.xminus_dim,
            c.x_dim,
            c.total_dim
        );
    }
    Ok((s, true))
}

/// `n` from either a bare integer or a type `A<n>`.
fn projective_n(raw: &str) -> std::result::Result<usize, Failure> {
    if let Ok(n) = raw.parse::<usize>() {
        return Ok(n);
    }
    let ty: DynkinType = raw.parse()?;
    match ty.components[..] {
        [c] if c.family == Family::A => Ok(c.rank),
        _ => Err(Failure::Usage(format!(
            "expected a type A_n or an integer n, got {raw}"
        ))),
    }
}

fn projective(args: &Args) -> CmdResult {
    let n = projective_n(&args.ty)?;
    if n == 0 {
        return Err(Failure::Usage("n must be positive".into()));
    }
    if args.verb == Verb::Gorenstein {
        let variant: Variant = args.variant.parse()?;
        let h = diag_hilbert_poly(n)?;
        let p = gorenstein_obstruction(n, variant)?;
        let p_roots = gorenstein_by_roots(n, variant)?;
        let agree = p == p_roots;
        let text = if args.json {
            render(&json!({
                "n": n,
                "variant": variant,
                "hilbert": h.to_pairs(),
                "p": p,
                "p_by_roots": p_roots,
                "agree": agree,
            }))
        } else {
            let found = |p: Option<i64>| p.map_or("none".to_string(), |p| p.to_string());
            format!(
                "n = {n}, variant {variant}\nh(m) = {h}\np (scan)  = {}\np (roots) = {}\n",
                found(p),
                found(p_roots)
            )
        };
        return Ok((text, agree));
    }

    let j = required(&args.j, "--J", args.verb, n)?;
    let c = composition_from_j(n, j)?;
    let comps = pn_components(&c);
    let meets = (0..c.r())
        .map(|i| pairwise_intersection_dim(&c, i))
        .collect::<Result<Vec<_>, _>>()?;
    // Same components through the Weyl group route.
    let rs = RootSystem::new(format!("A{n}").parse()?)?;
    let g = WeylGroup::generate(rs);
    let via_degen = degen_line_indices(&g, j)?;
    let closed_form: Vec<usize> = comps.iter().map(|z| z.w_index).collect();
    let agree = via_degen == closed_form;
    let text = if args.json {
        render(&json!({
            "n": n,
            "J": j,
            "blocks": c.blocks,
            "components": comps.iter().map(|z| json!({
                "i": z.i,
                "blocks": c.blocks,
                "block": z.block,
                "w_index": z.w_index,
                "dims": {"x": z.x_dim, "y": z.y_dim, "line": z.line_dim, "total": z.total_dim},
                "smooth": z.smooth,
                "blowup_end": z.blowup_end,
            })).collect::<Vec<_>>(),
            "intersection_dims": meets,
            "degen_w_indices": via_degen,
            "agree": agree,
        }))
    } else {
        let mut s = format!(
            "P^{n} with J = {j}: blocks {:?}, {} components\n",
            c.blocks,
            comps.len()
        );
        let _ = writeln!(
            s,
            "{:>3} {:>6} {:>5} {:>4} {:>4} {:>5} {:>7} {:>9}",
            "i", "dim V", "w(1)", "x", "y", "line", "smooth", "blow-up"
        );
        for z in &comps {
            let _ = writeln!(
                s,
                "{:>3} {:>6} {:>5} {:>4} {:>4} {:>5} {:>7} {:>9}",
                z.i, z.block, z.w_index, z.x_dim, z.y_dim, z.line_dim, z.smooth, z.blowup_end
            );
        }
        let _ = writeln!(s, "Z_i meets Z_(i+1) in dimension {meets:?}");
        let _ = writeln!(
            s,
            "Weyl-group route w(1): {via_degen:?} ({})",
            if agree { "agrees" } else { "DISAGREES" }
        );
        s
    };
    Ok((text, agree))
}
