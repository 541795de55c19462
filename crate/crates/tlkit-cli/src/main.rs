//! `tlkit`: command-line front end for exact Temperley-Lieb and Jones-Wenzl
//! computations.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 a precondition or
//! root-of-unity obstruction (the error is printed to stderr as JSON).

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tlkit::coeff::{Generic, Ring, RootOfUnity};
use tlkit::genrel::{self, SpanReport};
use tlkit::jw::{self, Multiindex};
use tlkit::render::{self, Render};
use tlkit::suites::{self, Bounds, Suite};
use tlkit::tangle::Tangle;
use tlkit::wenzl::{self, Report};
use tlkit::{cache, meander, networks, Error};

#[derive(Parser, Debug)]
#[command(name = "tlkit", version, about = "Exact Temperley-Lieb and Jones-Wenzl computations")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Work over Q(q) with q an indeterminate
    #[arg(long = "q", global = true, value_parser = ["generic"], conflicts_with = "q_root")]
    q: Option<String>,
    /// Work at q = e^{iπ p′/p}, given as P/PP with P, PP coprime
    #[arg(long = "q-root", global = true, value_name = "P/PP")]
    q_root: Option<String>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Directory holding the persistent projector cache
    #[arg(long = "cache-dir", global = true, env = "TLKIT_CACHE_DIR", value_name = "PATH")]
    cache_dir: Option<PathBuf>,
    /// Refuse inputs of total size above K (also bounds the check suites)
    #[arg(long = "max-n", global = true, value_name = "K")]
    max_n: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Tikz,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Method {
    Recursion,
    ClosedForm,
    Meander,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum RowMethod {
    /// exact inversion of the meander matrix
    Exact,
    /// closed form from link-pattern labelings
    Recipe,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Family {
    U,
    V,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Projector,
    Networks,
    Meander,
    Relations,
    Cellular,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Projector => Suite::Projector,
            SuiteArg::Networks => Suite::Networks,
            SuiteArg::Meander => Suite::Meander,
            SuiteArg::Relations => Suite::Relations,
            SuiteArg::Cellular => Suite::Cellular,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Expansion of the Jones-Wenzl projector P_n over link diagrams
    Projector {
        n: usize,
        #[arg(long, value_enum, default_value_t = Method::Recursion)]
        method: Method,
    },
    /// Evaluation of the theta network Θ(r, s, t)
    Theta { r: usize, s: usize, t: usize },
    /// Evaluation of the tetrahedron Tet[A B 2; B+2 A F]
    Tet { a: usize, b: usize, f: usize },
    /// Gram matrix of the JW link states with s defects
    Gram {
        multiindex: String,
        s: usize,
    },
    /// Rainbow row of the inverse meander matrix of LP_{2n}^(0)
    MeanderInverseRow {
        n: usize,
        #[arg(long, value_enum, default_value_t = RowMethod::Exact)]
        method: RowMethod,
    },
    /// Dimension of the Jones-Wenzl algebra JW_ς
    Dim { multiindex: String },
    /// Rank of the algebra generated by the U- or V-generators
    Span {
        multiindex: String,
        #[arg(long, value_enum, default_value_t = Family::U)]
        family: Family,
    },
    /// Run a verification suite
    Check {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Restrict relation and cellularity checks to this multiindex
        #[arg(long)]
        multiindex: Option<String>,
    },
}

/// A result in every output format.
struct Output {
    text: String,
    latex: String,
    json: Value,
    tikz: Option<String>,
    verified: bool,
}

impl Output {
    fn scalar<E: Render>(x: &E) -> Self {
        Output { text: x.text(), latex: x.latex(), json: x.json(), tikz: None, verified: true }
    }

    fn plain(text: String, json: Value) -> Self {
        Output { latex: text.clone(), text, json, tikz: None, verified: true }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::SizeMismatch(..) => "SizeMismatch",
        Error::IndexOutOfRange { .. } => "IndexOutOfRange",
        Error::InvalidDefectCount { .. } => "InvalidDefectCount",
        Error::DenominatorVanishes => "DenominatorVanishes",
        Error::RootOfUnityObstruction { .. } => "RootOfUnityObstruction",
        Error::ParameterMismatch(_) => "ParameterMismatch",
        Error::InadmissibleTriple(..) => "InadmissibleTriple",
        Error::SingularGram => "SingularGram",
        Error::InvalidInput(_) => "InvalidInput",
    }
}

fn size_limit(cli: &Cli, n: usize) -> Result<(), Error> {
    match cli.max_n {
        Some(k) if n > k => Err(Error::InvalidInput(format!("size {n} exceeds --max-n {k}"))),
        _ => Ok(()),
    }
}

fn parse_multiindex(cli: &Cli, s: &str) -> Result<Multiindex, Error> {
    let m = Multiindex::parse(s)?;
    size_limit(cli, m.n())?;
    Ok(m)
}

fn tangle_output<R: Ring>(t: &Tangle<R>, lead_box: Option<usize>) -> Output
where
    R::Elem: Render,
{
    Output {
        text: render::tangle_text(t),
        latex: render::tangle_latex(t),
        json: render::tangle_json(t),
        tikz: Some(render::tangle_tikz(t, lead_box)),
        verified: true,
    }
}

fn report_output(r: &Report) -> Output {
    let mut text: String =
        r.checks.iter().map(|(n, ok)| format!("{} {n}\n", if *ok { "PASS" } else { "FAIL" })).collect();
    let failed = r.failures().len();
    text.push_str(&if failed == 0 {
        format!("pass ({} checks)", r.checks.len())
    } else {
        format!("fail ({failed} of {} checks)", r.checks.len())
    });
    let checks: Vec<Value> = r.checks.iter().map(|(n, ok)| json!({ "name": n, "ok": ok })).collect();
    Output {
        latex: text.clone(),
        text,
        json: json!({ "passed": r.passed(), "checks": checks }),
        tikz: None,
        verified: r.passed(),
    }
}

fn span_output(m: &Multiindex, family: Family, r: &SpanReport) -> Output {
    let name = match family {
        Family::U => "U",
        Family::V => "V",
    };
    let text = format!(
        "{name}-generators of JW{m}: rank {} of dim {} (saturated at word length {})",
        r.rank, r.dim, r.saturation_length
    );
    let json = json!({
        "multiindex": m.to_string(),
        "family": name,
        "rank": r.rank,
        "dim": r.dim,
        "saturation_length": r.saturation_length,
        "saturated": r.saturated,
    });
    Output::plain(text, json)
}

fn run<R: Ring>(ring: &R, cli: &Cli) -> Result<Output, Error>
where
    R::Elem: Render,
{
    match &cli.cmd {
        Cmd::Projector { n, method } => {
            size_limit(cli, *n)?;
            let p = match method {
                Method::Recursion => wenzl::projector_recursive(ring, *n)?,
                Method::ClosedForm => wenzl::projector_closed_form(ring, *n)?,
                Method::Meander => meander::projector_from_inverse(ring, *n)?,
            };
            Ok(tangle_output(&p.expansion, Some(*n)))
        }
        Cmd::Theta { r, s, t } => {
            size_limit(cli, r + s + t)?;
            let v = networks::build_theta(ring, *r, *s, *t)?.evaluate();
            Ok(Output::scalar(&v))
        }
        Cmd::Tet { a, b, f } => {
            size_limit(cli, a + b + 2 + f)?;
            // the closed form carries the obstruction check for the boxes involved
            networks::tet_special(ring, *a, *b, *f)?;
            let v = networks::build_tet_special(ring, *a, *b, *f)?.evaluate();
            Ok(Output::scalar(&v))
        }
        Cmd::Gram { multiindex, s } => {
            let m = parse_multiindex(cli, multiindex)?;
            let g = jw::gram_matrix(ring, &m, *s)?;
            let pats = jw::enumerate_jw_patterns(&m, *s)?;
            let rows: Vec<String> =
                g.iter().map(|r| format!("[{}]", r.iter().map(|x| x.text()).collect::<Vec<_>>().join(", "))).collect();
            let text = format!(
                "patterns: {}\n{}",
                pats.iter().map(|p| p.encode()).collect::<Vec<_>>().join(" "),
                rows.join("\n")
            );
            let latex = format!(
                "\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}",
                g.iter()
                    .map(|r| r.iter().map(|x| x.latex()).collect::<Vec<_>>().join(" & "))
                    .collect::<Vec<_>>()
                    .join(" \\\\\n")
            );
            let json = json!({
                "multiindex": m.to_string(),
                "s": s,
                "patterns": pats.iter().map(|p| p.encode()).collect::<Vec<_>>(),
                "matrix": g.iter().map(|r| r.iter().map(|x| x.json()).collect::<Vec<_>>()).collect::<Vec<_>>(),
            });
            Ok(Output { text, latex, json, tikz: None, verified: true })
        }
        Cmd::MeanderInverseRow { n, method } => {
            size_limit(cli, *n)?;
            let row = match method {
                RowMethod::Recipe => meander::inverse_row_rainbow(ring, *n)?,
                RowMethod::Exact => {
                    let limit = cli.max_n.unwrap_or(meander::DEFAULT_INVERSION_LIMIT);
                    meander::inverse_row_exact(*n, limit)?
                        .into_iter()
                        .map(|(p, x)| Ok((p, ring.lift(&x)?)))
                        .collect::<Result<_, Error>>()?
                }
            };
            let text = format!(
                "{{{}}}",
                row.iter()
                    .map(|(p, x)| format!("{}: {}", Value::String(p.encode()), Value::String(x.text())))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            let latex = row
                .iter()
                .map(|(p, x)| format!("\\mathtt{{{}}} &\\mapsto {}", p.encode(), x.latex()))
                .collect::<Vec<_>>()
                .join(" \\\\\n");
            let json = Value::Object(row.iter().map(|(p, x)| (p.encode(), x.json())).collect());
            Ok(Output { text, latex, json, tikz: None, verified: true })
        }
        Cmd::Dim { multiindex } => {
            let m = parse_multiindex(cli, multiindex)?;
            let d = jw::dimension(&m);
            let by: serde_json::Map<String, Value> =
                jw::dimension_data(&m).into_iter().map(|(s, k)| (s.to_string(), json!(k))).collect();
            Ok(Output::plain(d.to_string(), json!({ "multiindex": m.to_string(), "dimension": d, "by_defect": by })))
        }
        Cmd::Span { multiindex, family } => {
            let m = parse_multiindex(cli, multiindex)?;
            let set = match family {
                Family::U => genrel::u_generators(ring, &m)?,
                Family::V => genrel::v_generators(ring, &m)?,
            };
            let dim = jw::dimension(&m) as usize;
            let r = genrel::span_rank(ring, &m, &set.elements(), dim.max(1))?;
            Ok(span_output(&m, *family, &r))
        }
        Cmd::Check { suite, multiindex } => {
            let mut b = Bounds::default();
            if let Some(k) = cli.max_n {
                b.projector_n = k;
                b.network_label = k;
                b.meander_n = k;
                b.multiindex_n = k;
            }
            if let Some(s) = multiindex {
                b.multiindices = Some(vec![parse_multiindex(cli, s)?]);
            }
            Ok(report_output(&suites::run(ring, (*suite).into(), &b)))
        }
    }
}

fn parse_root(s: &str) -> Result<RootOfUnity, Error> {
    let bad = || Error::InvalidInput(format!("--q-root expects P/PP, got {s:?}"));
    let (p, pp) = s.split_once('/').ok_or_else(bad)?;
    let p: u32 = p.trim().parse().map_err(|_| bad())?;
    let pp: u32 = pp.trim().parse().map_err(|_| bad())?;
    RootOfUnity::new(p, pp)
}

fn execute(cli: &Cli) -> Result<Output, Error> {
    if let Some(dir) = &cli.cache_dir {
        cache::load(dir)?;
    }
    let out = match &cli.q_root {
        Some(s) => run(&parse_root(s)?, cli)?,
        None => run(&Generic, cli)?,
    };
    if let Some(dir) = &cli.cache_dir {
        cache::save(dir)?;
    }
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(&cli) {
        Ok(out) => {
            let s = match cli.format {
                Format::Text => out.text,
                Format::Latex => out.latex,
                Format::Tikz => out.tikz.unwrap_or(out.latex),
                Format::Json => serde_json::to_string(&out.json).expect("serializable"),
            };
            println!("{}", s.trim_end());
            if out.verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("{}", json!({ "error": error_kind(&e), "message": e.to_string() }));
            ExitCode::from(2)
        }
    }
}
