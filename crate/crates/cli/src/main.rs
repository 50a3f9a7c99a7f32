mod bound;
mod io;

use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use circmyc::budget::DEFAULT_NODE_LIMIT;
use circmyc::chromatic::{chromatic_number, circular_chromatic_number};
use circmyc::families::{iterated_mycielskian, mycielskian, FamilySpec};
use circmyc::free::{
    ab_free_chromatic_number, free_chromatic_number, free_coloring_from_circular, free_coloring_girth,
    free_coloring_via_edge, is_free_graph, max_free_size, mmm2_pipeline, mycielski_pushdown, FreeColoring,
    GirthVariant,
};
use circmyc::graph::{write_dimacs, Girth};
use circmyc::hom::{circular_hom, exists_hom, exists_onto_edge_hom};
use circmyc::verify::{self, Ctx, Profile, Status};
use circmyc::{Budget, Error, Graph};

const BUDGET_ENV: &str = "CIRCMYC_NODE_BUDGET";

/// Exact circular colouring, free colouring and Mycielski toolkit.
///
/// Graphs are read as DIMACS `.col` files (`-` for stdin). Vertex ids are
/// 1-based in DIMACS and 0-based everywhere else.
#[derive(Parser)]
#[command(name = "circmyc", version)]
struct Cli {
    /// Node budget for each exhaustive search (overrides $CIRCMYC_NODE_BUDGET).
    #[arg(long, global = true)]
    budget: Option<u64>,
    /// Include wall-clock times in JSON output.
    #[arg(long, global = true)]
    timings: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family member, e.g. `gen kneser 5 2 -o kg.col`.
    Gen {
        /// Family and parameters: kneser M N, gen_kneser M N S, schrijver M N,
        /// circular N D, complete N, cycle N, path N, mycielski T <family>,
        /// product <family> <family>.
        #[arg(required = true, num_args = 1..)]
        spec: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute an invariant of a graph.
    Inv {
        #[arg(value_enum)]
        invariant: Invariant,
        graph: String,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        /// Machine-readable JSON output.
        #[arg(long)]
        json: bool,
    },
    /// Search for a homomorphism into a graph or into K_{n/d}.
    Hom {
        graph: String,
        /// Target graph (omit with --circular).
        target: Option<String>,
        /// Target K_{n/d}.
        #[arg(long, num_args = 2, value_names = ["N", "D"], conflicts_with = "target")]
        circular: Option<Vec<usize>>,
        /// Require every edge of the target to be an image edge.
        #[arg(long)]
        onto: bool,
        #[arg(long)]
        json: bool,
    },
    /// Run a free-colouring construction.
    Derive(Derive),
    /// Evaluate a closed-form bound exactly, e.g. `bound frankl 6 3 1`.
    Bound {
        /// Bound name; `bound --list` shows all.
        name: Option<String>,
        #[arg(allow_negative_numbers = true)]
        params: Vec<i64>,
        /// k-variant for final-inequality.
        #[arg(long, default_value = "statement")]
        variant: String,
        /// Evaluate a JSON array of {name, params, variant?} (`-` for stdin).
        #[arg(long, conflicts_with = "name")]
        batch: Option<String>,
        #[arg(long, conflicts_with_all = ["name", "batch"])]
        list: bool,
        #[arg(long)]
        json: bool,
    },
    /// Iterated Mycielskian M^t(G).
    Myc {
        graph: String,
        #[arg(short, default_value_t = 1)]
        t: usize,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Categorical product G × H.
    Product {
        left: String,
        right: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Run the verification suite or a single check.
    Verify {
        /// A check name; omit (or pass --all) for the whole registry.
        check: Option<String>,
        #[arg(long, conflicts_with = "check")]
        all: bool,
        #[arg(long, default_value = "quick")]
        profile: Profile,
        /// Explicit parameter record for a single check, as JSON.
        #[arg(long, requires = "check")]
        params: Option<String>,
        /// Write the JSON report to PATH, or to stdout without a PATH.
        #[arg(long, value_name = "PATH", num_args = 0..=1, default_missing_value = "-")]
        json: Option<String>,
        /// List registered checks and their statements.
        #[arg(long)]
        list: bool,
    },
    /// Re-emit a graph as DIMACS or JSON.
    Export {
        graph: String,
        #[arg(long, value_enum, default_value = "dimacs")]
        format: Format,
        #[arg(short, long)]
        output: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Invariant {
    Chi,
    ChiC,
    Alpha,
    Omega,
    Girth,
    Phi,
    PhiAb,
    /// ᾱ, the largest free independent set.
    AlphaBar,
    /// d(G), the least |N(u) ∪ N(v)| over edges.
    Span,
    /// Whether the graph is free.
    Free,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Json,
}

#[derive(Args)]
struct Derive {
    #[arg(value_enum)]
    construction: Construction,
    graph: String,
    #[arg(long, value_enum, default_value = "four")]
    variant: Variant,
    #[arg(long, default_value_t = 0)]
    a: usize,
    #[arg(long, default_value_t = 2)]
    b: usize,
    #[arg(short, default_value_t = 1)]
    t: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Construction {
    /// (0,2)-free colouring from a circular colouring with d ≥ 2.
    FreeFromCircular,
    /// χ(G)+d(G) classes around a least-span edge.
    ViaEdge,
    /// Girth-based colouring (--variant four or two).
    Girth,
    /// Optimal (a,b)-free colouring of M(G) pushed down to G.
    Pushdown,
    /// Block colouring of M^t(G) pushed down t times.
    Mmm2,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Four,
    Two,
}

/// Why a command did not succeed, mapped onto exit codes.
enum Failure {
    Usage(String),
    Finding(String),
    Exhausted(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Exhausted { .. } => Failure::Exhausted(e.to_string()),
            Error::Counterexample(_) | Error::InvalidColoring(_) => Failure::Finding(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let json = match &cli.command {
        Command::Inv { json, .. } | Command::Hom { json, .. } | Command::Bound { json, .. } => *json,
        Command::Derive(d) => d.json,
        _ => false,
    };
    let run = Runner::new(&cli, json);
    match run.and_then(|r| r.dispatch(cli.command)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Finding(m)) => {
            eprintln!("FAIL: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Exhausted(m)) => {
            eprintln!("EXHAUSTED: {m}");
            ExitCode::from(3)
        }
    }
}

struct Runner {
    node_limit: u64,
    json: bool,
    timings: bool,
    start: Instant,
}

impl Runner {
    fn new(cli: &Cli, json: bool) -> Result<Runner, Failure> {
        let node_limit = match cli.budget {
            Some(b) => b,
            None => match std::env::var(BUDGET_ENV) {
                Ok(s) => s
                    .trim()
                    .parse()
                    .map_err(|_| Failure::Usage(format!("{BUDGET_ENV}={s:?} is not a node count")))?,
                Err(_) => DEFAULT_NODE_LIMIT,
            },
        };
        Ok(Runner {
            node_limit,
            json,
            timings: cli.timings,
            start: Instant::now(),
        })
    }

    fn budget(&self) -> Budget {
        Budget::new(self.node_limit)
    }

    /// Prints `text`, or `value` plus bookkeeping under --json.
    fn report(&self, text: String, mut value: Value, budget: Option<&Budget>) -> Outcome {
        if self.json {
            if let (Some(b), Value::Object(map)) = (budget, &mut value) {
                map.insert("nodes_explored".into(), json!(b.nodes()));
            }
            if let (true, Value::Object(map)) = (self.timings, &mut value) {
                map.insert("elapsed_ms".into(), json!(self.start.elapsed().as_millis() as u64));
            }
            io::emit_json(&value)?;
        } else {
            io::emit(&(text + "\n"))?;
        }
        Ok(())
    }

    fn dispatch(&self, cmd: Command) -> Outcome {
        match cmd {
            Command::Gen { spec, output } => {
                let words: Vec<&str> = spec.iter().map(String::as_str).collect();
                let g = FamilySpec::parse(&words)?.build()?;
                Ok(io::write_graph(&g, output.as_deref())?)
            }
            Command::Inv {
                invariant, graph, a, b, ..
            } => self.inv(invariant, &io::read_graph(&graph)?, a, b),
            Command::Hom {
                graph,
                target,
                circular,
                onto,
                ..
            } => self.hom(&graph, target, circular, onto),
            Command::Derive(d) => self.derive(d),
            Command::Bound {
                name,
                params,
                variant,
                batch,
                list,
                ..
            } => self.bound(name, &params, &variant, batch, list),
            Command::Myc { graph, t, output } => {
                let mg = iterated_mycielskian(&io::read_graph(&graph)?, t)?;
                Ok(io::write_graph(mg.graph(), output.as_deref())?)
            }
            Command::Product { left, right, output } => {
                let g = io::read_graph(&left)?.categorical_product(&io::read_graph(&right)?)?;
                Ok(io::write_graph(&g, output.as_deref())?)
            }
            Command::Verify {
                check,
                all: _,
                profile,
                params,
                json,
                list,
            } => self.verify(check, profile, params, json, list),
            Command::Export { graph, format, output } => {
                let g = io::read_graph(&graph)?;
                let text = match format {
                    Format::Dimacs => write_dimacs(&g),
                    Format::Json => serde_json::to_string_pretty(&io::graph_json(&g)).expect("serializable") + "\n",
                };
                Ok(io::write_text(output.as_deref().unwrap_or("-"), &text)?)
            }
        }
    }

    fn inv(&self, which: Invariant, g: &Graph, a: Option<usize>, b: Option<usize>) -> Outcome {
        let mut budget = self.budget();
        let bud = &mut budget;
        let (text, value) = match which {
            Invariant::Chi => {
                let (k, c) = chromatic_number(g, bud)?;
                (k.to_string(), json!({ "value": k, "witness": c.assignment }))
            }
            Invariant::ChiC => {
                let r = circular_chromatic_number(g, bud)?;
                (r.value.to_string(), json!({ "value": r.value, "witness": r.witness }))
            }
            Invariant::Alpha => {
                let s = g.max_independent_set(bud)?;
                (s.len().to_string(), json!({ "value": s.len(), "witness": s }))
            }
            Invariant::Omega => {
                let s = g.max_clique(bud)?;
                (s.len().to_string(), json!({ "value": s.len(), "witness": s }))
            }
            Invariant::Girth => {
                let v = match g.girth() {
                    Girth::Finite(k) => json!(k),
                    Girth::Infinite => json!("inf"),
                };
                let text = v.as_u64().map_or("inf".to_string(), |k| k.to_string());
                (text, json!({ "value": v, "witness": g.shortest_cycle() }))
            }
            Invariant::Phi => {
                let (v, fc) = free_chromatic_number(g, bud)?;
                (v.to_string(), json!({ "value": v, "witness": fc }))
            }
            Invariant::PhiAb => {
                let (Some(a), Some(b)) = (a, b) else {
                    return Err(Failure::Usage("phi-ab needs --a and --b".into()));
                };
                let (v, fc) = ab_free_chromatic_number(g, a, b, bud)?;
                (v.to_string(), json!({ "value": v, "a": a, "b": b, "witness": fc }))
            }
            Invariant::AlphaBar => {
                let (k, s) = max_free_size(g, bud)?;
                (k.to_string(), json!({ "value": k, "witness": s }))
            }
            Invariant::Span => {
                let (d, e) = g.min_edge_span()?;
                (d.to_string(), json!({ "value": d, "witness": e }))
            }
            Invariant::Free => {
                let f = is_free_graph(g);
                (f.to_string(), json!({ "value": f }))
            }
        };
        self.report(text, value, Some(&budget))
    }

    fn hom(&self, graph: &str, target: Option<String>, circular: Option<Vec<usize>>, onto: bool) -> Outcome {
        let g = io::read_graph(graph)?;
        let mut budget = self.budget();
        let found = match (target, circular) {
            (Some(t), None) => {
                let h = io::read_graph(&t)?;
                if onto {
                    exists_onto_edge_hom(&g, &h, &mut budget)
                } else {
                    exists_hom(&g, &h, &mut budget)
                }
            }
            (None, Some(nd)) => {
                if onto {
                    return Err(Failure::Usage("--onto needs a target graph".into()));
                }
                circular_hom(&g, nd[0], nd[1], &mut budget)
            }
            _ => return Err(Failure::Usage("give a target graph or --circular N D".into())),
        };
        match found {
            Ok(Some(w)) => {
                let text = serde_json::to_string(&w).expect("serializable");
                self.report(text, json!({ "witness": w }), Some(&budget))
            }
            Ok(None) => self.report("NONE".into(), json!({ "witness": null }), Some(&budget)),
            Err(e @ Error::Exhausted { .. }) => {
                self.report(
                    "EXHAUSTED".into(),
                    json!({ "witness": null, "exhausted": true }),
                    Some(&budget),
                )?;
                Err(e.into())
            }
            Err(e) => Err(e.into()),
        }
    }

    fn derive(&self, d: Derive) -> Outcome {
        let g = io::read_graph(&d.graph)?;
        let mut budget = self.budget();
        match d.construction {
            Construction::FreeFromCircular => {
                let r = circular_chromatic_number(&g, &mut budget)?;
                let (n, den) = (r.value.numer() as usize, r.value.denom() as usize);
                let fc = free_coloring_from_circular(&g, &r.witness, n, den)?;
                let value = json!({ "circular": r.value, "coloring": fc });
                self.report(describe(&fc), value, Some(&budget))
            }
            Construction::ViaEdge => {
                let fc = free_coloring_via_edge(&g, &mut budget)?;
                self.report(describe(&fc), json!({ "coloring": fc }), Some(&budget))
            }
            Construction::Girth => {
                let v = match d.variant {
                    Variant::Four => GirthVariant::Four,
                    Variant::Two => GirthVariant::Two,
                };
                let fc = free_coloring_girth(&g, v, &mut budget)?;
                self.report(describe(&fc), json!({ "coloring": fc }), Some(&budget))
            }
            Construction::Pushdown => {
                let mg = mycielskian(&g)?;
                let (v, fc) = ab_free_chromatic_number(mg.graph(), d.a, d.b, &mut budget)?;
                let Some(fc) = fc else {
                    return self.report(
                        format!("phi^{}_{}(M(G)) = inf; nothing to push down", d.a, d.b),
                        json!({ "mycielskian_value": v, "coloring": null }),
                        Some(&budget),
                    );
                };
                let p = mycielski_pushdown(&mg, &fc)?;
                let text = format!("M(G): {}\nG: {}", describe(&fc), describe(&p.coloring));
                let value = json!({ "mycielskian": fc, "coloring": p.coloring, "demoted": p.demoted });
                self.report(text, value, Some(&budget))
            }
            Construction::Mmm2 => {
                let mg = iterated_mycielskian(&g, d.t)?;
                let trace = mmm2_pipeline(&mg, &mut budget)?;
                let mut text = format!("chi_c(M^{}(G)) = {}/{}\n", d.t, trace.circular.0, trace.circular.1);
                for (i, s) in trace.stages.iter().enumerate() {
                    text += &format!("M^{}(G): {}\n", d.t - i, describe(s));
                }
                text += &format!("p = {} <= {}", trace.p, trace.bound);
                let value = serde_json::to_value(&trace).expect("serializable");
                self.report(text, value, Some(&budget))
            }
        }
    }

    fn bound(&self, name: Option<String>, params: &[i64], variant: &str, batch: Option<String>, list: bool) -> Outcome {
        if list {
            let lines: Vec<String> = bound::NAMES.iter().map(|(n, p)| format!("{n} {p}")).collect();
            return Ok(io::emit(&(lines.join("\n") + "\n"))?);
        }
        if let Some(path) = batch {
            let text = if path == "-" {
                let mut s = String::new();
                std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(Error::from)?;
                s
            } else {
                std::fs::read_to_string(&path).map_err(|e| Failure::Usage(format!("{path}: {e}")))?
            };
            let requests: Vec<bound::Request> =
                serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("batch: {e}")))?;
            return Ok(io::emit_json(&bound::batch(&requests))?);
        }
        let Some(name) = name else {
            return Err(Failure::Usage("bound needs a name (see `bound --list`)".into()));
        };
        let e = bound::evaluate(&name, params, bound::parse_variant(variant)?)?;
        self.report(e.text, json!({ "name": name, "params": params, "value": e.json }), None)
    }

    fn verify(
        &self,
        check: Option<String>,
        profile: Profile,
        params: Option<String>,
        report: Option<String>,
        list: bool,
    ) -> Outcome {
        if list {
            let lines: Vec<String> = verify::registry()
                .iter()
                .map(|c| format!("{:<26} {}", c.name, c.statement))
                .collect();
            return Ok(io::emit(&(lines.join("\n") + "\n"))?);
        }
        let mut ctx = Ctx::new(profile);
        if std::env::var(BUDGET_ENV).is_ok() || self.node_limit != DEFAULT_NODE_LIMIT {
            ctx = ctx.with_node_limit(self.node_limit);
        }
        let rep = match (&check, params) {
            (Some(name), Some(p)) => {
                let p: Value = serde_json::from_str(&p).map_err(|e| Failure::Usage(format!("--params: {e}")))?;
                let r = verify::run_check(name, &p, &ctx, self.timings)?;
                verify::Report::new(profile, vec![r])
            }
            (Some(name), None) => verify::run_suite(&[name.as_str()], &ctx, self.timings)?,
            (None, _) => verify::run_suite(&[], &ctx, self.timings)?,
        };
        if let Some(path) = &report {
            io::write_text(path, &rep.to_json())?;
        }
        if report.as_deref() != Some("-") {
            let mut out = String::new();
            for r in &rep.results {
                out += &format!("{:<9} {:<26} {}", r.status.to_string(), r.name, compact(&r.params));
                match r.status {
                    Status::Pass | Status::Fail => out += &format!("  lhs={} rhs={}", compact(&r.lhs), compact(&r.rhs)),
                    _ => {}
                }
                if let (Some(d), Status::Skip | Status::Exhausted | Status::Fail) = (&r.detail, r.status) {
                    out += &format!("  ({d})");
                }
                if let Some(ms) = r.elapsed_ms {
                    out += &format!("  {ms} ms");
                }
                out.push('\n');
            }
            let s = &rep.summary;
            out += &format!(
                "{} pass, {} fail, {} skip, {} exhausted\n",
                s.pass, s.fail, s.skip, s.exhausted
            );
            io::emit(&out)?;
        }
        if rep.summary.fail > 0 {
            Err(Failure::Finding(format!("{} check(s) failed", rep.summary.fail)))
        } else {
            Ok(())
        }
    }
}

fn compact(v: &Value) -> String {
    serde_json::to_string(v).expect("serializable")
}

fn describe(fc: &FreeColoring) -> String {
    let b = fc.b.map_or("inf".to_string(), |b| b.to_string());
    let mut out = format!("{} classes, a = {}, b = {}", fc.len(), fc.a, b);
    for (i, class) in fc.classes.iter().enumerate() {
        let members: Vec<String> = class.iter().map(|v| v.to_string()).collect();
        let support = match fc.support.get(i) {
            Some(e) if i < fc.support.len() => format!("supported by {e}"),
            _ => "unsupported".to_string(),
        };
        out += &format!("\n  {{{}}} {}", members.join(","), support);
    }
    out
}
