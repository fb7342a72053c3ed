//! Command-line front end: parses arguments, runs one command, renders its report.

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use chhs_core::action::check_action;
use chhs_core::generators::Library;
use chhs_core::hhs::{distance_formula_fit, hhs_constants, projection_table, realize_tuple, Hhs};
use chhs_core::io::{document_json, parse_instance_with_cap, parse_tuple, render_report, to_document, Format, Instance};
use chhs_core::verify::{build_w_from_link_edges, check_thm_a};
use chhs_core::{verify_chhs, ClassIndex, Error, RelationTable, VerifyOptions, WRule, XGraph};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_INPUT: i32 = 2;

/// Environment variable overriding the worker thread count.
pub const THREADS_ENV: &str = "CHHS_THREADS";

#[derive(Parser, Debug)]
#[command(name = "chhs", version, about = "Verify combinatorial HHS structures on finite flag complexes")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Instance document; stdin when omitted.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,
    /// Report destination; stdout when omitted.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = FormatArg::Json)]
    pub format: FormatArg,
    /// Largest graph on which δ is computed exactly.
    #[arg(long, global = true, default_value_t = chhs_core::metric::DELTA_VERTEX_CAP)]
    pub delta_cap: usize,
    /// Refuse instances with more vertices than this.
    #[arg(long, global = true)]
    pub vertex_cap: Option<usize>,
    /// Seed for `gen random:N:P` when the shape omits one.
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Distance-formula thresholds.
    #[arg(long, global = true, value_delimiter = ',', default_value = "2,3,4")]
    pub thresholds: Vec<u32>,
    /// Grid of κ values for the uniqueness function.
    #[arg(long, global = true, value_delimiter = ',', default_value = "0,1,2,4")]
    pub kappa_grid: Vec<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Summarize the complex, its classes and relations.
    Inspect,
    /// Run the four conditions and report δ*.
    VerifyChhs,
    /// Check the link conditions with the document's link edges.
    VerifyThmA,
    /// Emit the document with W rebuilt from its link edges.
    BuildW,
    /// List projections π_Δ and relative projections ρ.
    Projections,
    /// Compute the structure constants.
    Constants,
    /// Fit the distance formula at each threshold.
    DistanceFormula,
    /// Realize consistent tuples.
    Realize {
        /// Tuple document: class key to link vertex labels. Unlisted classes
        /// take the coordinates of the first W-vertex.
        #[arg(long)]
        tuple: Option<PathBuf>,
    },
    /// Generate a library instance.
    Gen {
        /// Shape, e.g. `octahedron:3`, `random:12:0.4:7`, `amalgam:3`.
        kind: String,
        /// `none`, `complete`, `shared_codim1_face` or `suggested`.
        #[arg(long, default_value = "suggested")]
        w_rule: String,
    },
    /// Check the document's action.
    CheckAction,
}

/// Result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn error(e: impl std::fmt::Display) -> Self {
        Outcome { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {e}\n") }
    }
}

/// Parses `args` (including the program name) and runs the command, reading
/// the instance from `stdin` when no `--input` is given.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: text }
            };
        }
    };
    let (code, body) = match execute(&cli, stdin) {
        Ok(r) => r,
        Err(e) => return Outcome::error(e),
    };
    match &cli.output {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: String::new() },
            Err(e) => Outcome::error(format!("{}: {e}", path.display())),
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}

/// Applies [`THREADS_ENV`] to the global pool; later calls are no-ops.
pub fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var(THREADS_ENV) else { return Ok(()) };
    let n: usize = v.parse().map_err(|_| format!("{THREADS_ENV} must be a positive integer, got `{v}`"))?;
    if n == 0 {
        return Err(format!("{THREADS_ENV} must be a positive integer, got `{v}`"));
    }
    let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    Ok(())
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<(i32, String), String> {
    let format: Format = cli.format.into();
    let opts = VerifyOptions { delta_cap: cli.delta_cap, ..VerifyOptions::default() };
    let err = |e: Error| e.to_string();
    let name = command_name(&cli.command);
    if let Command::Gen { kind, w_rule } = &cli.command {
        return generate(kind, w_rule, cli.seed).map(|doc| (EXIT_PASS, doc));
    }
    let inst = load(cli, stdin)?;
    let (x, w) = (&inst.x, &inst.w);
    match &cli.command {
        Command::Inspect => {
            let classes = ClassIndex::new(x).map_err(err)?;
            let table = RelationTable::new(&classes);
            let metric = w.augmented_graph().metric();
            let rows: Vec<_> = classes
                .classes()
                .iter()
                .map(|c| {
                    json!({
                        "key": classes.key(x, c.id),
                        "link_size": c.link_size,
                        "saturation": x.set_labels(c.saturation.ones()),
                        "almost_maximal": c.almost_maximal,
                        "colevel": table.colevel(c.id),
                        "members": c.members.len(),
                    })
                })
                .collect();
            let result = json!({
                "vertices": x.vertex_count(),
                "edges": x.edges().len(),
                "maximal_simplices": x.maximal_simplices().len(),
                "dimension": x.dimension(),
                "simplices": classes.simplices().len(),
                "classes": classes.len(),
                "complexity": classes.complexity(),
                "relations": table.counts(),
                "w_edges": w.w_edges().len(),
                "augmented_connected": metric.is_connected(),
                "augmented_diameter": if metric.is_connected() { json!(metric.diameter()) } else { json!("inf") },
                "class_rows": rows,
            });
            Ok((EXIT_PASS, render_report(name, &result, format)))
        }
        Command::VerifyChhs => {
            let r = verify_chhs(x, w, &opts).map_err(err)?;
            Ok((verdict_code(r.verdict.is_pass()), render_report(name, &r, format)))
        }
        Command::VerifyThmA => {
            let extra = inst.link_edges.clone().unwrap_or_default();
            let r = check_thm_a(x, &extra, inst.action.as_deref(), &opts).map_err(err)?;
            Ok((verdict_code(r.verdict.is_pass()), render_report(name, &r, format)))
        }
        Command::BuildW => {
            let extra = inst.link_edges.clone().ok_or("build-w needs `link_edges` in the document")?;
            let built = build_w_from_link_edges(x, &extra, inst.action.as_deref()).map_err(err)?;
            let doc = to_document(x, &built, inst.action.as_deref(), Some(&extra));
            Ok((EXIT_PASS, document_json(&doc)))
        }
        Command::Projections => {
            let h = Hhs::new(x, w).map_err(err)?;
            Ok((EXIT_PASS, render_report(name, &projection_table(&h), format)))
        }
        Command::Constants => {
            let h = Hhs::new(x, w).map_err(err)?;
            let constants = hhs_constants(&h, &cli.kappa_grid);
            let fits = if h.w_metric().is_connected() {
                Some(distance_formula_fit(&h, &cli.thresholds).map_err(err)?)
            } else {
                None
            };
            let result = json!({ "constants": constants, "distance_formula": fits });
            Ok((EXIT_PASS, render_report(name, &result, format)))
        }
        Command::DistanceFormula => {
            let h = Hhs::new(x, w).map_err(err)?;
            let fits = distance_formula_fit(&h, &cli.thresholds).map_err(err)?;
            Ok((EXIT_PASS, render_report(name, &fits, format)))
        }
        Command::Realize { tuple } => {
            let h = Hhs::new(x, w).map_err(err)?;
            if h.w_count() == 0 {
                return Err("the complex has no maximal simplices".into());
            }
            let global = |wv: usize| -> Vec<Vec<usize>> { (0..h.class_count()).map(|c| h.pi_vertices(c, wv)).collect() };
            let result = match tuple {
                Some(path) => {
                    let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
                    let t = parse_tuple(x, &h.classes, &text, global(0)).map_err(err)?;
                    json!([realize_tuple(&h, &t).map_err(err)?])
                }
                None => {
                    let all = (0..h.w_count()).map(|wv| realize_tuple(&h, &global(wv))).collect::<Result<Vec<_>, _>>();
                    json!(all.map_err(err)?)
                }
            };
            Ok((EXIT_PASS, render_report(name, &result, format)))
        }
        Command::CheckAction => {
            let gens = inst.action.as_deref().ok_or("check-action needs `action` in the document")?;
            let r = check_action(x, w, gens).map_err(err)?;
            Ok((verdict_code(r.pass()), render_report(name, &r, format)))
        }
        Command::Gen { .. } => unreachable!("handled above"),
    }
}

fn verdict_code(pass: bool) -> i32 {
    if pass {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Inspect => "inspect",
        Command::VerifyChhs => "verify-chhs",
        Command::VerifyThmA => "verify-thm-a",
        Command::BuildW => "build-w",
        Command::Projections => "projections",
        Command::Constants => "constants",
        Command::DistanceFormula => "distance-formula",
        Command::Realize { .. } => "realize",
        Command::Gen { .. } => "gen",
        Command::CheckAction => "check-action",
    }
}

fn load(cli: &Cli, stdin: &mut dyn Read) -> Result<Instance, String> {
    let text = match &cli.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
        None => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
            s
        }
    };
    parse_instance_with_cap(&text, cli.vertex_cap.unwrap_or(usize::MAX)).map_err(|e| e.to_string())
}

fn generate(kind: &str, w_rule: &str, seed: Option<u64>) -> Result<String, String> {
    let spec = match kind.strip_prefix("random:") {
        Some(rest) if rest.split(':').count() == 2 => format!("{kind}:{}", seed.unwrap_or(0)),
        _ => kind.to_string(),
    };
    let lib: Library = spec.parse().map_err(|e: Error| e.to_string())?;
    let x = lib.build().map_err(|e| e.to_string())?;
    let w: XGraph = match w_rule {
        "suggested" => lib.suggested_w(&x).map_err(|e| e.to_string())?,
        rule => XGraph::from_rule(&x, WRule::parse(rule).map_err(|e| e.to_string())?),
    };
    Ok(document_json(&to_document(&x, &w, None, None)))
}
