mod config;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use resemblance::incompressible::{complete_index_set, converse_check};
use resemblance::suite::{self, SuiteConfig};
use resemblance::{
    build_from_index_set, covering_search, extend_incompressible, extract_pattern,
    incompressible_cover, to_dot, verify_incompressible, Calculus, ClosedSet, Decision, Error,
    ExtOrdinal, Ordinal, Verification,
};
use serde_json::{json, Value};

use config::{Config, Format, GlobalArgs};

#[derive(Parser, Debug)]
#[command(name = "resemblance", version, about = "Ordinal resemblance calculus")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form and shape of an ordinal.
    Eval { ordinal: String },
    /// The least element of the component with index ALPHA.
    Kappa { alpha: String },
    /// The largest ordinal BETA is <=1-related to.
    Max1 { beta: String },
    /// The largest ordinal BETA is <=2-related to.
    Max2 { beta: String },
    /// The index of the component containing BETA.
    Index { beta: String },
    /// Decide A <=1 B.
    Le1 { a: String, b: String },
    /// Decide A <=2 B.
    Le2 { a: String, b: String },
    /// The XI-th point of the <=2 enumeration at the epsilon number ALPHA.
    Nu { alpha: String, xi: String },
    /// The interval starting at the XI-th point of the <=2 enumeration.
    Interval { alpha: String, xi: String },
    /// Compress a closed set, then check incompressibility by bounded search.
    Incompressible {
        /// Members, separated by spaces or commas; the set is closed first.
        #[arg(required = true)]
        set: Vec<String>,
        /// Check the set as given instead of its incompressible cover.
        #[arg(long, conflicts_with_all = ["extend", "build"])]
        as_is: bool,
        /// Extend the set to an incompressible set with the same maximal index.
        #[arg(long, conflicts_with = "build")]
        extend: bool,
        /// Read the arguments as an index set and build a set realising it.
        #[arg(long)]
        build: bool,
        /// Skip the bounded search.
        #[arg(long)]
        no_verify: bool,
        /// Also test the necessary index-set conditions (experimental).
        #[arg(long)]
        converse: bool,
    },
    /// List coverings of a closed set inside the search budget.
    CoverSearch {
        #[arg(required = true)]
        set: Vec<String>,
        /// Maximum number of coverings to list.
        #[arg(long, default_value_t = 20)]
        limit: usize,
    },
    /// Run the seeded invariant suites.
    Verify {
        /// Suite name or "all".
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Render the <=1/<=2 pattern of a closed set.
    Export {
        #[arg(required = true)]
        set: Vec<String>,
    },
}

/// Why a command did not succeed.
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let file = std::env::var_os("RESEMBLANCE_CONFIG").map(PathBuf::from);
    let cfg = match Config::resolve(&cli.global, file.as_deref()) {
        Ok(cfg) => cfg,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if cfg.sequel {
        eprintln!("note: --assume-sequel is active; values marked sequel rest on a result not proved here");
    }
    match run(&cli.command, &cfg) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

struct Ctx<'a> {
    cfg: &'a Config,
    calc: Calculus,
}

impl Ctx<'_> {
    fn ord(&self, text: &str) -> Result<Ordinal, Failure> {
        self.calc
            .parse(text)
            .map_err(|e| Failure::Usage(format!("bad ordinal {text:?}: {e}")))
    }

    /// Members given as separate arguments or comma lists, optionally braced.
    fn members(&self, args: &[String]) -> Result<Vec<Ordinal>, Failure> {
        let joined = args.join(",");
        joined
            .trim()
            .trim_start_matches('{')
            .trim_end_matches('}')
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| self.ord(s))
            .collect()
    }

    fn closed(&self, args: &[String]) -> Result<ClosedSet, Failure> {
        Ok(ClosedSet::closure(self.members(args)?, self.calc.rho()))
    }

    /// Prints JSON in json mode and the text form otherwise.
    fn emit(&self, text: impl std::fmt::Display, value: Value) {
        match self.cfg.format {
            Format::Json => println!(
                "{}",
                serde_json::to_string_pretty(&value).expect("json value")
            ),
            _ => println!("{text}"),
        }
    }

    fn emit_decision(&self, rel: &str, a: &Ordinal, b: &Ordinal, d: &Decision) {
        let trace: Vec<&str> = d.trace.iter().map(|s| s.as_str()).collect();
        self.emit(
            d,
            json!({"relation": rel, "left": a, "right": b, "verdict": d.verdict, "trace": trace}),
        );
    }
}

/// Text for a result that may be undetermined.
fn settled<T>(r: resemblance::Result<T>) -> Result<Result<T, String>, Failure> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Undetermined(why)) => Ok(Err(why)),
        Err(e) => Err(e.into()),
    }
}

fn run(cmd: &Command, cfg: &Config) -> Outcome {
    let ctx = Ctx {
        cfg,
        calc: Calculus::with_options(cfg.rho.clone(), cfg.epsilon_depth, cfg.sequel),
    };
    let calc = &ctx.calc;
    match cmd {
        Command::Eval { ordinal } => {
            let o = ctx.ord(ordinal)?;
            let c = o.classify();
            let kind = format!("{:?}", c.kind).to_lowercase();
            let rem = calc.rho().rem(&o);
            let text = format!(
                "{o}\nkind: {kind}\nindecomposable: {}\nepsilon: {}\nrem: {rem}",
                c.indecomposable, c.epsilon
            );
            ctx.emit(
                text,
                json!({"ordinal": o, "kind": kind, "indecomposable": c.indecomposable, "epsilon": c.epsilon, "rem": rem}),
            );
        }
        Command::Kappa { alpha } => {
            let a = ctx.ord(alpha)?;
            match settled(calc.kappa(&a))? {
                Ok(k) => ctx.emit(&k, json!({"alpha": a, "kappa": k})),
                Err(why) => ctx.emit(
                    format!("Undetermined ({why})"),
                    json!({"alpha": a, "kappa": "Undetermined", "reason": why}),
                ),
            }
        }
        Command::Max1 { beta } => {
            let b = ctx.ord(beta)?;
            match settled(calc.max1_bound(&b))? {
                Ok((bound, steps)) => {
                    let trace: Vec<&str> = steps.iter().map(|s| s.as_str()).collect();
                    let text = if bound.exact {
                        bound.value.to_string()
                    } else {
                        format!("Undetermined (at least {})", bound.value)
                    };
                    let value = bound.to_ext();
                    ctx.emit(
                        format!("{text} (trace: {})", trace.join("; ")),
                        json!({"beta": b, "max1": value, "lower": bound.value, "exact": bound.exact, "trace": trace}),
                    );
                }
                Err(why) => ctx.emit(
                    format!("Undetermined ({why})"),
                    json!({"beta": b, "max1": "Undetermined", "reason": why}),
                ),
            }
        }
        Command::Max2 { beta } => {
            let b = ctx.ord(beta)?;
            let m = calc.max2(&b);
            ctx.emit(&m, json!({"beta": b, "max2": m}));
        }
        Command::Index { beta } => {
            let b = ctx.ord(beta)?;
            match settled(calc.index(&b))? {
                Ok(i) => ctx.emit(&i, json!({"beta": b, "index": i})),
                Err(why) => ctx.emit(
                    format!("Undetermined ({why})"),
                    json!({"beta": b, "index": "Undetermined", "reason": why}),
                ),
            }
        }
        Command::Le1 { a, b } => {
            let (a, b) = (ctx.ord(a)?, ctx.ord(b)?);
            ctx.emit_decision("le1", &a, &b, &calc.le1(&a, &b));
        }
        Command::Le2 { a, b } => {
            let (a, b) = (ctx.ord(a)?, ctx.ord(b)?);
            ctx.emit_decision("le2", &a, &b, &calc.le2(&a, &b));
        }
        Command::Nu { alpha, xi } => {
            let (a, x) = (ctx.ord(alpha)?, ctx.ord(xi)?);
            let nu = calc.nu(&a, &x)?;
            let max2 = match &nu {
                ExtOrdinal::Ord(n) => calc.max2(n),
                _ => ExtOrdinal::Undetermined,
            };
            ctx.emit(
                format!("{nu}\nmax2: {max2}"),
                json!({"alpha": a, "xi": x, "nu": nu, "max2": max2}),
            );
        }
        Command::Interval { alpha, xi } => {
            let (a, x) = (ctx.ord(alpha)?, ctx.ord(xi)?);
            match settled(calc.j_interval(&a, &x))? {
                Ok(j) => ctx.emit(
                    format!("[{}, {})\nclosure: [{}, {}]", j.lower, j.upper, j.lower, j.closed_upper),
                    json!({"alpha": a, "xi": x, "lower": j.lower, "upper": j.upper, "closed_upper": j.closed_upper}),
                ),
                Err(why) => ctx.emit(format!("Undetermined ({why})"), json!({"alpha": a, "xi": x, "interval": "Undetermined", "reason": why})),
            }
        }
        Command::Incompressible {
            set,
            as_is,
            extend,
            build,
            no_verify,
            converse,
        } => {
            return incompressible(&ctx, set, *as_is, *extend, *build, !*no_verify, *converse);
        }
        Command::CoverSearch { set, limit } => {
            let y = ctx.closed(set)?;
            let out = covering_search(calc, &y, &cfg.budget, *limit);
            let mut text = format!(
                "{} covering(s) of {y} (universe {}, {}):",
                out.maps.len(),
                out.universe,
                if out.complete {
                    "complete"
                } else {
                    "incomplete"
                }
            );
            for m in &out.maps {
                text.push_str(&format!("\n  {m}"));
            }
            let maps: Vec<&[Ordinal]> = out.maps.iter().map(|m| m.image.as_slice()).collect();
            ctx.emit(
                text,
                json!({"set": y, "images": maps, "complete": out.complete, "undetermined": out.undetermined, "universe": out.universe}),
            );
        }
        Command::Verify { suite: name } => {
            let sc = SuiteConfig {
                rho: cfg.rho.clone(),
                depth: cfg.epsilon_depth,
                sequel: cfg.sequel,
                seed: cfg.seed,
                budget: cfg.budget.clone(),
            };
            let reports = suite::run(name, &sc).map_err(|e| Failure::Usage(e.to_string()))?;
            let failed: u64 = reports.iter().map(|r| r.failed).sum();
            let mut text = String::new();
            for r in &reports {
                text.push_str(&format!(
                    "{}: {} passed, {} failed, {} skipped\n",
                    r.name, r.passed, r.failed, r.skipped
                ));
                for f in &r.failures {
                    text.push_str(&format!("  failure: {f}\n"));
                }
            }
            text.push_str(&format!("total failures: {failed}"));
            ctx.emit(
                text,
                json!({"rho": cfg.rho, "seed": cfg.seed, "suites": reports, "failed": failed}),
            );
            if failed > 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Export { set } => {
            let y = ctx.closed(set)?;
            let p = extract_pattern(calc, y.members());
            match cfg.format {
                Format::Json => ctx.emit("", serde_json::to_value(&p).expect("pattern json")),
                _ => print!("{}", to_dot(&p)),
            }
        }
    }
    Ok(())
}

fn incompressible(
    ctx: &Ctx,
    set: &[String],
    as_is: bool,
    extend: bool,
    build: bool,
    verify: bool,
    converse: bool,
) -> Outcome {
    let calc = &ctx.calc;
    let mut extra = serde_json::Map::new();
    let mut lines = Vec::new();
    let target: ClosedSet = if build {
        let k = complete_index_set(&ctx.members(set)?, calc.rho())?;
        let built = build_from_index_set(calc, &k)?;
        lines.push(format!("index set: {{{}}}", join(&k)));
        extra.insert("index_set".into(), json!(k));
        built.base
    } else {
        let x = ctx.closed(set)?;
        if extend {
            let ext = extend_incompressible(calc, x.members())?;
            lines.push(format!("extension of {x}"));
            extra.insert("source".into(), json!(x));
            ext.base
        } else if as_is {
            x
        } else {
            let h = incompressible_cover(calc, &x)?;
            lines.push(format!("cover: {h}"));
            extra.insert(
                "cover".into(),
                json!(h.pairs().map(|(a, b)| [a, b]).collect::<Vec<_>>()),
            );
            h.image_set()
        }
    };
    lines.push(format!("set: {target}"));
    if converse {
        let ok = match converse_check(calc, &target) {
            Ok(()) => "satisfied".to_string(),
            Err(e) => format!("violated ({e})"),
        };
        lines.push(format!("index-set conditions (experimental): {ok}"));
        extra.insert("converse".into(), json!(ok));
    }
    let mut failed = false;
    let mut value = json!({"set": target, "budget": ctx.cfg.budget});
    if verify {
        let report = verify_incompressible(calc, &target, &ctx.cfg.budget);
        let verdict = match &report.verdict {
            Verification::Confirmed => "confirmed",
            Verification::Counterexample(_) => "counterexample",
            Verification::Inconclusive(_) => "inconclusive",
        };
        lines.push(format!("verdict: {verdict}"));
        match &report.verdict {
            Verification::Confirmed => {}
            Verification::Counterexample(m) => {
                failed = true;
                value["witness"] = json!(m.pairs().map(|(a, b)| [a, b]).collect::<Vec<_>>());
                lines.push(format!("witness: {m}"));
            }
            Verification::Inconclusive(why) => {
                value["reason"] = json!(why);
                lines.push(format!("reason: {why}"));
            }
        }
        value["verdict"] = json!(verdict);
        value["nodes"] = json!(report.nodes);
    } else {
        value["verdict"] = json!("unchecked");
    }
    for (k, v) in extra {
        value[k] = v;
    }
    ctx.emit(lines.join("\n"), value);
    if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

fn join(xs: &[Ordinal]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(", ")
}
