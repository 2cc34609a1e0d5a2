use clap::{Args, Parser, Subcommand, ValueEnum};
use cusplevi::exactlin::Rational;
use cusplevi::pipeline::{
    classical_table, d_jordan_cuspidal_levis, jordan_cuspidal_levis, render_records_json, render_records_text,
    render_table, TableBlock, TableRow,
};
use cusplevi::rootsys::{
    diagram_twist, parse_signed_word, recognize_type, CartanLabel, RootDatum, Series, SubsystemHandle,
    TwistedElement, WeylElement,
};
use cusplevi::semisimple::{
    centralizer_roots, frobenius_act, isolated_classes, isolated_reps, twisting_rep, Characteristic, QClass,
    SemisimpleParam, TwistedClassRep,
};
use cusplevi::splitlevi::{conjugate_to_standard, d_split_cover_at, split_levi_cover};
use cusplevi::{Error, Result};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "cusplevi", version, about = "Split Levi covers and cuspidal Jordan data of finite reductive groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct Group {
    /// Cartan type letter A-G.
    #[arg(long = "type")]
    series: String,
    #[arg(long)]
    rank: usize,
    /// Order of the diagram automorphism.
    #[arg(long, default_value_t = 1)]
    twist: u8,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// List the roots in simple-root coordinates.
    Roots {
        #[command(flatten)]
        group: Group,
    },
    /// List isolated semisimple classes.
    Isolated {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value = "generic")]
        p: String,
        /// One line per node instead of per class.
        #[arg(long)]
        all_nodes: bool,
    },
    /// Smallest split Levi subsystem containing the given roots.
    Cover {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value = "")]
        w: String,
        /// 1-based root numbers.
        #[arg(long, default_value = "")]
        roots: String,
    },
    /// Smallest d-split Levi subsystem containing the given roots.
    Dcover {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value = "")]
        w: String,
        #[arg(long, default_value = "")]
        roots: String,
        #[arg(long)]
        d: usize,
        /// Use the eigenvalue ζ_d^k.
        #[arg(long, default_value_t = 1)]
        k: usize,
    },
    /// Conjugate a split Levi pair to a standard one.
    Standardize {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value = "")]
        w: String,
        #[arg(long, default_value = "")]
        roots: String,
    },
    /// Levi subsystems carrying cuspidal Jordan data for a semisimple element.
    JordanLevis {
        #[command(flatten)]
        group: Group,
        /// Coweight coordinates, comma separated rationals.
        #[arg(long)]
        s: String,
        /// A word in the simple reflections, signed-permutation tokens, or `auto`.
        #[arg(long, default_value = "auto")]
        w: String,
        #[arg(long, default_value = "generic")]
        p: String,
        #[arg(long = "q-mod", default_value = "-1")]
        q_mod: String,
        #[arg(long, default_value_t = 1)]
        d: usize,
        /// Supports for d > 1, as 1-based root numbers; repeatable.
        #[arg(long)]
        support: Vec<String>,
        #[arg(long)]
        standardize: bool,
    },
    /// Concrete rows of the classical table for one group.
    Table {
        #[command(flatten)]
        group: Group,
        #[arg(long, default_value = "odd")]
        p: String,
        #[arg(long = "q-mod", default_value = "-1")]
        q_mod: String,
    },
}

fn datum(g: &Group) -> Result<(RootDatum, Vec<usize>)> {
    let mut chars = g.series.chars();
    let series = match (chars.next().and_then(Series::from_letter), chars.next()) {
        (Some(s), None) => s,
        _ => return Err(Error::InvalidInput(format!("unknown type {:?}", g.series))),
    };
    let d = RootDatum::build(series, g.rank)?;
    let pi = diagram_twist(series, g.rank, g.twist)?;
    Ok((d, pi))
}

fn parse_word(d: &RootDatum, s: &str) -> Result<WeylElement> {
    let s = s.trim();
    if s.is_empty() || s == "id" {
        return Ok(WeylElement::identity(d));
    }
    if s.starts_with(|c: char| c.is_ascii_alphabetic()) {
        return parse_signed_word(d, s);
    }
    let letters = parse_indices(s, d.rank())?;
    WeylElement::from_word(d, &letters)
}

/// 1-based comma or space separated indices, returned 0-based.
fn parse_indices(s: &str, bound: usize) -> Result<Vec<usize>> {
    s.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(k) if (1..=bound).contains(&k) => Ok(k - 1),
            _ => Err(Error::InvalidInput(format!("index {t:?} is not in 1..={bound}"))),
        })
        .collect()
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|i| i + 1).collect()
}

fn join(v: &[usize]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

fn twisted(d: &RootDatum, pi: &[usize], w: &str) -> Result<TwistedElement> {
    TwistedElement::new(d, parse_word(d, w)?, pi.to_vec())
}

fn subsystem_json(d: &RootDatum, h: &SubsystemHandle, t: &TwistedElement) -> Result<Value> {
    Ok(json!({
        "schema": 1,
        "roots": one_based(h.roots()),
        "positive": one_based(h.positive()),
        "simple": one_based(h.simple()),
        "type": recognize_type(d, h, t)?.to_string(),
    }))
}

fn emit_subsystem(d: &RootDatum, h: &SubsystemHandle, t: &TwistedElement, f: Format) -> Result<String> {
    Ok(match f {
        Format::Json => subsystem_json(d, h, t)?.to_string() + "\n",
        Format::Text => format!(
            "{}\nsimple: {}\nroots: {}\n",
            recognize_type(d, h, t)?,
            join(&one_based(h.simple())),
            join(&one_based(h.roots()))
        ),
    })
}

fn cmd_roots(g: &Group) -> Result<String> {
    let (d, _) = datum(g)?;
    let rows: Vec<(usize, Vec<i64>, i64)> =
        (0..d.num_roots()).map(|r| (r + 1, d.root(r).to_vec(), d.height(r))).collect();
    Ok(match g.format {
        Format::Json => {
            let roots: Vec<Value> =
                rows.iter().map(|(i, c, h)| json!({"index": i, "coords": c, "height": h})).collect();
            json!({"schema": 1, "type": d.label().to_string(), "roots": roots}).to_string() + "\n"
        }
        Format::Text => rows
            .iter()
            .map(|(i, c, h)| {
                let c: Vec<String> = c.iter().map(ToString::to_string).collect();
                format!("{i} | {} | {h}\n", c.join(","))
            })
            .collect(),
    })
}

fn cmd_isolated(g: &Group, p: &str, all_nodes: bool) -> Result<String> {
    let (d, pi) = datum(g)?;
    let p: Characteristic = p.parse()?;
    let reps = if all_nodes {
        isolated_reps(&d, p)
    } else {
        isolated_classes(&d, p, (g.twist > 1).then_some(pi.as_slice()))
    };
    let id = TwistedElement::identity(&d);
    let mut rows = Vec::new();
    for r in &reps {
        rows.push((r.node.to_string(), r.coefficient, recognize_type(&d, &r.centralizer(&d), &id)?, r.param.to_string()));
    }
    Ok(match g.format {
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|(n, c, t, s)| json!({"node": n, "coefficient": c, "centralizer": t.to_string(), "s": s}))
                .collect();
            json!({"schema": 1, "classes": v}).to_string() + "\n"
        }
        Format::Text => rows.iter().map(|(n, c, t, s)| format!("{n} | n={c} | {t} | s={s}\n")).collect(),
    })
}

fn cmd_cover(g: &Group, w: &str, roots: &str, dd: Option<(usize, usize)>) -> Result<String> {
    let (d, pi) = datum(g)?;
    let t = twisted(&d, &pi, w)?;
    let sigma = parse_indices(roots, d.num_roots())?;
    let h = match dd {
        None => split_levi_cover(&d, &sigma, &t)?,
        Some((dd, k)) => {
            let phi = TwistedElement::diagram(&d, pi.clone())?;
            d_split_cover_at(&d, &sigma, &phi, t.weyl(), dd, k)?
        }
    };
    emit_subsystem(&d, &h, &t, g.format)
}

fn cmd_standardize(g: &Group, w: &str, roots: &str) -> Result<String> {
    let (d, pi) = datum(g)?;
    let t = twisted(&d, &pi, w)?;
    let h = SubsystemHandle::new(&d, parse_indices(roots, d.num_roots())?)?;
    let sf = conjugate_to_standard(&d, &h, &t)?;
    let (i, z, x) = (one_based(&sf.subset), one_based(sf.z.word()), one_based(sf.x.word()));
    Ok(match g.format {
        Format::Json => json!({"schema": 1, "subset": i, "z_word": z, "x_word": x}).to_string() + "\n",
        Format::Text => format!("I = <{}>\nz = <{}>\nx = <{}>\n", join(&i), join(&z), join(&x)),
    })
}

fn parse_param(d: &RootDatum, s: &str, p: Characteristic) -> Result<SemisimpleParam> {
    let v: Vec<Rational> = s
        .split(',')
        .map(|t| t.trim().parse::<Rational>().map_err(|_| Error::InvalidInput(format!("bad rational {t:?}"))))
        .collect::<Result<_>>()?;
    if v.len() != d.rank() {
        return Err(Error::InvalidInput(format!("expected {} coordinates, got {}", d.rank(), v.len())));
    }
    SemisimpleParam::new(v, p.excluded_primes())
}

/// The class representative with the branch of the coset choice that fired.
fn class_rep(
    d: &RootDatum,
    pi: &[usize],
    param: &SemisimpleParam,
    w: &str,
    q: QClass,
) -> Result<(TwistedClassRep, &'static str)> {
    let delta = centralizer_roots(d, param).simple().to_vec();
    if w.trim() == "auto" {
        let rep = twisting_rep(d, param, &delta, pi, q)?;
        let branch = if frobenius_act(param, pi, q)?.equiv(param) { "1" } else { "w0" };
        return Ok((rep, branch));
    }
    let w = parse_word(d, w)?;
    let t = TwistedElement::new(d, w.clone(), pi.to_vec())?;
    let rep = TwistedClassRep { param: param.clone(), w, twisted: t, delta };
    rep.verify(d, q).map_err(|e| match e {
        Error::Internal(m) => Error::InvalidInput(format!("the given w is not a valid twist: {m}")),
        e => e,
    })?;
    Ok((rep, "given"))
}

#[allow(clippy::too_many_arguments)]
fn cmd_jordan(
    g: &Group,
    s: &str,
    w: &str,
    p: &str,
    q: &str,
    dd: usize,
    supports: &[String],
    standardize: bool,
) -> Result<String> {
    let (d, pi) = datum(g)?;
    let p: Characteristic = p.parse()?;
    let q: QClass = q.parse()?;
    let param = parse_param(&d, s, p)?;
    let (rep, branch) = class_rep(&d, &pi, &param, w, q)?;
    let records = if dd == 1 && supports.is_empty() {
        jordan_cuspidal_levis(&d, &rep, standardize)?
    } else {
        let sup: Option<Vec<(Vec<usize>, usize)>> = (!supports.is_empty())
            .then(|| supports.iter().map(|j| Ok((parse_indices(j, d.num_roots())?, 1))).collect::<Result<_>>())
            .transpose()?;
        d_jordan_cuspidal_levis(&d, &rep, dd, sup.as_deref())?
    };
    let group = CartanLabel::twisted(d.series(), d.rank(), g.twist).to_string();
    Ok(match g.format {
        Format::Json => render_records_json(&group, &param.to_string(), &rep.w, &records),
        Format::Text => {
            let class = recognize_type(&d, &centralizer_roots(&d, &param), &rep.twisted)?;
            format!(
                "{group} s={param} C(s)={class} w=<{}> branch={branch}\n{}",
                join(&one_based(rep.w.word())),
                render_records_text(&records)
            )
        }
    })
}

fn cmd_table(g: &Group, p: &str, q: &str) -> Result<String> {
    let (d, _) = datum(g)?;
    let blocks = classical_table(d.series(), d.rank(), g.twist, p.parse()?, q.parse()?)?;
    let rows: Vec<TableRow> = blocks.iter().flat_map(TableBlock::rows).collect();
    Ok(match g.format {
        Format::Text => render_table(&rows),
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    json!({"group": r.group, "class": r.class, "p": r.p_condition, "levi": r.levi,
                           "centralizer": r.centralizer, "conditions": r.conditions})
                })
                .collect();
            json!({"schema": 1, "rows": v}).to_string() + "\n"
        }
    })
}

fn run(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Roots { group } => cmd_roots(group),
        Command::Isolated { group, p, all_nodes } => cmd_isolated(group, p, *all_nodes),
        Command::Cover { group, w, roots } => cmd_cover(group, w, roots, None),
        Command::Dcover { group, w, roots, d, k } => cmd_cover(group, w, roots, Some((*d, *k))),
        Command::Standardize { group, w, roots } => cmd_standardize(group, w, roots),
        Command::JordanLevis { group, s, w, p, q_mod, d, support, standardize } => {
            cmd_jordan(group, s, w, p, q_mod, *d, support, *standardize)
        }
        Command::Table { group, p, q_mod } => cmd_table(group, p, q_mod),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::InvalidInput(_) | Error::NotStable | Error::OrderMismatch { .. } => 2,
                Error::Unsupported(_) => 3,
                Error::Internal(_) | Error::NonCyclotomic { .. } => 1,
            })
        }
    }
}
