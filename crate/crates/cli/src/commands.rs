//! One function per subcommand.

use std::collections::BTreeMap;

use modbranch::branching::{branching_socle, crystal_graph, restriction_profile};
use modbranch::hall::algebra::divided_power;
use modbranch::hall::{
    canonical_basis, canonical_element, decomposition_row, hall_polynomial, hall_product, CanonicalConfig,
    CanonicalElement, PBWVector,
};
use modbranch::realizations::{
    enumerate_flotw, extract_path, f_v_embed, is_flotw, is_kleshchev, preimage_f_v, tau_shift, transport, Element,
    RealizationTag,
};
use modbranch::{Convention, DimVector, Exec, MultiPartition, Multicharge, Multisegment, Residue};
use serde_json::{json, Value};

use crate::io::{parse_json, read_input, to_json, usage, write_output, CliResult};
use crate::{cache, BranchCmd, Cli, Cmd, ConvArg, CrystalCmd, EmbedCmd, FlotwCmd, Format, HallCmd, IsoCmd, KleshchevCmd};

pub fn run(cli: &Cli) -> CliResult<()> {
    if cli.format == Format::Dot && !matches!(cli.cmd, Cmd::Crystal(CrystalCmd::Graph { .. })) {
        return Err(usage("--format dot is only available for `crystal graph`"));
    }
    let cache_dir = matches!(cli.cmd, Cmd::Hall(_)).then(cache::dir).flatten();
    if let Some(dir) = &cache_dir {
        cache::load(dir);
    }
    let out = match &cli.cmd {
        Cmd::Crystal(c) => crystal(cli, c)?,
        Cmd::Flotw(c) => flotw(cli, c)?,
        Cmd::Kleshchev(c) => kleshchev(cli, c)?,
        Cmd::Iso(c) => iso(cli, c)?,
        Cmd::Embed(c) => embed(cli, c)?,
        Cmd::Hall(c) => hall(cli, c)?,
        Cmd::Branch(c) => branch(cli, c)?,
    };
    if let Some(dir) = &cache_dir {
        cache::store(dir)?;
    }
    write_output(cli, &out)
}

/// JSON or text, by `--format`.
fn render(cli: &Cli, json: Value, text: impl FnOnce() -> String) -> String {
    match cli.format {
        Format::Text => text(),
        _ => to_json(&json),
    }
}

fn need_e(cli: &Cli) -> CliResult<u32> {
    cli.e.ok_or_else(|| usage("--e is required"))
}

fn charges(cli: &Cli) -> CliResult<Multicharge> {
    let e = need_e(cli)?;
    let cs = cli.charges.clone().ok_or_else(|| usage("--charges is required"))?;
    Multicharge::new(e, cs).map_err(|err| usage(format!("--charges: {err}")))
}

fn convention(cli: &Cli, default: Convention) -> Convention {
    match cli.convention {
        Some(ConvArg::Head) => Convention::Head,
        Some(ConvArg::Tail) => Convention::Tail,
        None => default,
    }
}

/// `--realization`, else `uglov:<charges>` when charges are given, else
/// multisegments.
fn realization(cli: &Cli) -> CliResult<RealizationTag> {
    let e = need_e(cli)?;
    match (&cli.realization, &cli.charges) {
        (Some(s), _) => parse_tag(s, e),
        (None, Some(_)) => Ok(RealizationTag::Uglov(charges(cli)?)),
        (None, None) => Ok(RealizationTag::Multisegment { e, conv: convention(cli, Convention::Tail) }),
    }
}

fn parse_tag(s: &str, e: u32) -> CliResult<RealizationTag> {
    RealizationTag::parse(s, e).map_err(|err| usage(format!("--realization: {err}")))
}

fn parse_partition(s: &str, level: usize) -> CliResult<MultiPartition> {
    let p: MultiPartition = parse_json(s)?;
    if p.level() != level {
        return Err(usage(format!(
            "invalid JSON at field `components`: expected {level} components, got {}",
            p.level()
        )));
    }
    Ok(p)
}

fn parse_mseg(s: &str, e: Option<u32>) -> CliResult<Multisegment> {
    let m: Multisegment = parse_json(s)?;
    match e {
        Some(e) if m.e() != e => Err(usage(format!("invalid JSON at field `e`: expected {e}, got {}", m.e()))),
        _ => Ok(m),
    }
}

fn parse_element(s: &str, tag: &RealizationTag) -> CliResult<Element> {
    Ok(match tag {
        RealizationTag::Multisegment { e, .. } => Element::Mseg(parse_mseg(s, Some(*e))?),
        RealizationTag::Flotw(v) | RealizationTag::Uglov(v) | RealizationTag::Kleshchev(v) => {
            Element::Partition(parse_partition(s, v.level())?)
        }
    })
}

fn element_text(x: &Element, tag: &RealizationTag) -> String {
    match tag {
        RealizationTag::Multisegment { conv, .. } => x.to_text(*conv),
        _ => x.to_text(Convention::Tail),
    }
}

fn mseg_text(m: &Multisegment, conv: Convention) -> String {
    match conv {
        Convention::Head => m.to_head_string(),
        Convention::Tail => m.to_tail_string(),
    }
}

fn residue(tok: &str, e: u32) -> CliResult<Residue> {
    tok.parse::<i64>().map(|i| Residue::new(i, e)).map_err(|_| usage(format!("bad residue '{tok}'")))
}

fn crystal(cli: &Cli, cmd: &CrystalCmd) -> CliResult<String> {
    let tag = realization(cli)?;
    let e = tag.e();
    match cmd {
        CrystalCmd::Apply { ops, element } => {
            let mut cur = Some(parse_element(&read_input(cli, element)?, &tag)?);
            for op in ops {
                let op = op.trim();
                let (kind, i) = op.split_at(op.char_indices().nth(1).map_or(op.len(), |(k, _)| k));
                let i = residue(i, e)?;
                let Some(x) = cur else { break };
                cur = match kind {
                    "f" => tag.tilde_f(&x, i)?,
                    "e" => tag.tilde_e(&x, i)?,
                    _ => return Err(usage(format!("bad operator '{op}' (expected f<i> or e<i>)"))),
                };
            }
            Ok(match &cur {
                Some(x) => render(cli, json!(x), || element_text(x, &tag)),
                None => render(cli, Value::Null, || "0".into()),
            })
        }
        CrystalCmd::String { element } => {
            let x = parse_element(&read_input(cli, element)?, &tag)?;
            let path = extract_path(&x, &tag)?;
            let mut alpha = vec![0i64; e as usize];
            for i in &path.0 {
                alpha[i.value() as usize] -= 1;
            }
            let weight = modbranch::AffineWeight { lambda: tag.highest_weight().unwrap_or(vec![0; e as usize]), alpha };
            let mut eps = Vec::new();
            let mut phi = Vec::new();
            for i in Residue::all(e) {
                let k = tag.epsilon(&x, i)?;
                eps.push(k);
                phi.push(k as i64 + weight.pair_coroot(i));
            }
            let residues: Vec<u32> = path.0.iter().map(|i| i.value()).collect();
            let j = json!({ "epsilon": eps, "phi": phi, "weight": weight, "path": residues });
            Ok(render(cli, j, || {
                format!("epsilon {eps:?}\nphi {phi:?}\nweight {weight}\npath {path}")
            }))
        }
        CrystalCmd::Graph { depth } => {
            let g = crystal_graph(&tag, *depth, Exec::default())?;
            Ok(match cli.format {
                Format::Json => to_json(&g.to_json()),
                Format::Dot => g.to_dot(),
                Format::Text => g.to_text(),
            })
        }
    }
}

fn flotw(cli: &Cli, cmd: &FlotwCmd) -> CliResult<String> {
    let v = charges(cli)?;
    match cmd {
        FlotwCmd::Check { lambda } => {
            let lambda = parse_partition(&read_input(cli, lambda)?, v.level())?;
            let ok = is_flotw(&lambda, &v)?;
            Ok(render(cli, json!({ "flotw": ok }), || ok.to_string()))
        }
        FlotwCmd::List { rank } => {
            let all = enumerate_flotw(&v, *rank, Exec::default())?;
            Ok(render(cli, json!(all), || {
                all.iter().map(|p| p.to_text()).collect::<Vec<_>>().join("\n")
            }))
        }
    }
}

fn kleshchev(cli: &Cli, cmd: &KleshchevCmd) -> CliResult<String> {
    let v = charges(cli)?;
    let KleshchevCmd::Check { n_bound, lambda } = cmd;
    let lambda = parse_partition(&read_input(cli, lambda)?, v.level())?;
    let ok = is_kleshchev(&lambda, &v, n_bound.unwrap_or(lambda.rank()))?;
    Ok(render(cli, json!({ "kleshchev": ok }), || ok.to_string()))
}

fn iso(cli: &Cli, cmd: &IsoCmd) -> CliResult<String> {
    match cmd {
        IsoCmd::Transport { from, to, element } => {
            let e = need_e(cli)?;
            let (src, dst) = (parse_tag(from, e)?, parse_tag(to, e)?);
            let x = parse_element(&read_input(cli, element)?, &src)?;
            let y = transport(&x, &src, &dst)?;
            Ok(render(cli, json!(y), || element_text(&y, &dst)))
        }
        IsoCmd::Tau { lambda } => {
            let v = charges(cli)?;
            let lambda = parse_partition(&read_input(cli, lambda)?, v.level())?;
            let (mu, w) = tau_shift(&lambda, &v);
            Ok(render(cli, json!({ "lambda": mu, "charges": w }), || format!("{mu} {w}")))
        }
    }
}

fn embed(cli: &Cli, cmd: &EmbedCmd) -> CliResult<String> {
    let v = charges(cli)?;
    let conv = convention(cli, Convention::Head);
    match cmd {
        EmbedCmd::Fv { lambda } => {
            let lambda = parse_partition(&read_input(cli, lambda)?, v.level())?;
            let m = f_v_embed(&lambda, &v)?;
            Ok(render(cli, json!(m), || mseg_text(&m, conv)))
        }
        EmbedCmd::InverseCheck { mseg } => {
            let m = parse_mseg(&read_input(cli, mseg)?, Some(v.e()))?;
            m.check_aperiodic()?;
            let pre = preimage_f_v(&m, &v)?;
            Ok(render(cli, json!({ "in_image": pre.is_some(), "preimage": pre }), || match &pre {
                Some(p) => format!("true {p}"),
                None => "false".into(),
            }))
        }
    }
}

/// `f<i>`, `f<i>^(n)`, a multisegment or a PBW vector.
fn hall_factor(s: &str, e: Option<u32>) -> CliResult<PBWVector> {
    let s = s.trim();
    if let Some(rest) = s.strip_prefix('f') {
        let e = e.ok_or_else(|| usage("--e is required for generators"))?;
        let (i, n) = match rest.split_once('^') {
            Some((i, n)) => {
                let n = n.trim_start_matches('(').trim_end_matches(')');
                (i, n.parse::<u32>().map_err(|_| usage(format!("bad divided power '{s}'")))?)
            }
            None => (rest, 1),
        };
        return Ok(divided_power(residue(i, e)?, n, e)?);
    }
    let v: Value = parse_json(s)?;
    let x = if v.get("terms").is_some() {
        parse_json::<PBWVector>(s)?
    } else {
        PBWVector::basis(&parse_mseg(s, None)?)
    };
    match e {
        Some(e) if x.e() != e => Err(usage(format!("invalid JSON at field `e`: expected {e}, got {}", x.e()))),
        _ => Ok(x),
    }
}

fn canonical_json(g: &CanonicalElement) -> Value {
    let words: Vec<Value> = g
        .word_coeffs
        .iter()
        .filter(|(_, c)| !c.is_empty())
        .map(|(w, c)| {
            let coeff: BTreeMap<String, String> = c.iter().map(|(k, x)| (k.to_string(), x.to_string())).collect();
            json!({ "word": w.to_string(), "coeff": coeff })
        })
        .collect();
    json!({ "label": g.label, "pbw": g.pbw, "words": words })
}

fn hall(cli: &Cli, cmd: &HallCmd) -> CliResult<String> {
    match cmd {
        HallCmd::Product { factors } => {
            let mut acc: Option<PBWVector> = None;
            for f in factors {
                let x = hall_factor(f, cli.e.or(acc.as_ref().map(|a| a.e())))?;
                acc = Some(match acc {
                    None => x,
                    Some(a) => hall_product(&a, &x)?,
                });
            }
            let x = acc.expect("at least one factor");
            Ok(render(cli, json!(x), || x.to_text()))
        }
        HallCmd::Polynomial { args } => {
            let (psi, phi1, phi2) = match args.as_slice() {
                [a, b, c] => (parse_mseg(a, cli.e)?, parse_mseg(b, cli.e)?, parse_mseg(c, cli.e)?),
                [] | [_] => {
                    #[derive(serde::Deserialize)]
                    struct Triple {
                        psi: Multisegment,
                        phi1: Multisegment,
                        phi2: Multisegment,
                    }
                    let t: Triple = parse_json(&read_input(cli, &args.first().cloned())?)?;
                    (t.psi, t.phi1, t.phi2)
                }
                _ => return Err(usage("expected three multisegments or one {psi, phi1, phi2} object")),
            };
            if psi.e() != phi1.e() || psi.e() != phi2.e() {
                return Err(usage("the three multisegments have different e"));
            }
            let f = hall_polynomial(&psi, &phi1, &phi2)?;
            Ok(render(cli, json!(f), || f.to_string()))
        }
        HallCmd::Canonical { weight, mseg } => {
            let cfg = CanonicalConfig::default();
            let conv = convention(cli, Convention::Head);
            let elems: Vec<CanonicalElement> = match weight {
                Some(w) => {
                    let e = need_e(cli)?;
                    if w.len() != e as usize {
                        return Err(usage(format!("--weight needs {e} entries, got {}", w.len())));
                    }
                    canonical_basis(&DimVector(w.clone()), cfg)?.into_values().collect()
                }
                None => vec![canonical_element(&parse_mseg(&read_input(cli, mseg)?, cli.e)?, cfg)?],
            };
            let j = Value::Array(elems.iter().map(canonical_json).collect());
            Ok(render(cli, j, || {
                elems
                    .iter()
                    .map(|g| format!("G({}) = {}", mseg_text(&g.label, conv), g.pbw.to_text()))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
        HallCmd::Decomp { mseg } => {
            let psi = parse_mseg(&read_input(cli, mseg)?, cli.e)?;
            let conv = convention(cli, Convention::Tail);
            let row = decomposition_row(&psi)?;
            let j: Vec<Value> = row.iter().map(|(m, k)| json!({ "mseg": m, "mult": k })).collect();
            Ok(render(cli, Value::Array(j), || {
                row.iter()
                    .map(|(m, k)| format!("u_{}: {k}", mseg_text(m, conv)))
                    .collect::<Vec<_>>()
                    .join("\n")
            }))
        }
    }
}

fn branch(cli: &Cli, cmd: &BranchCmd) -> CliResult<String> {
    let conv = convention(cli, Convention::Tail);
    let text = |m: &Option<Multisegment>| m.as_ref().map_or("0".to_string(), |m| mseg_text(m, conv));
    match cmd {
        BranchCmd::Socle { residue: i, mseg } => {
            let psi = parse_mseg(&read_input(cli, mseg)?, cli.e)?;
            let s = branching_socle(&psi, Residue::new(*i, psi.e()))?;
            Ok(render(cli, json!(s), || text(&s)))
        }
        BranchCmd::Profile { mseg } => {
            let psi = parse_mseg(&read_input(cli, mseg)?, cli.e)?;
            let p = restriction_profile(&psi)?;
            let j: BTreeMap<String, Value> = p.iter().map(|(i, m)| (i.to_string(), json!(m))).collect();
            Ok(render(cli, json!(j), || {
                p.iter().map(|(i, m)| format!("{i}: {}", text(m))).collect::<Vec<_>>().join("\n")
            }))
        }
    }
}
