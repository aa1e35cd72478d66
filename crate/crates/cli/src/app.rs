//! Argument parsing and subcommand dispatch.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use comat::minors::LabeledCom;
use comat::rings::Mode;
use comat::{
    check_com, circuits, covectors, hilbert_series, is_oriented_matroid, nbc_sets, om_circuits, presentation, topes,
    Arrangement, Com, LinearOrder,
};
use serde::Serialize;
use serde_json::json;

use crate::corpus::{run_corpus, CorpusShape};
use crate::suite::verify_com;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    /// Macaulay2-style script (`presentation` only).
    Cas,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Rees,
    Gr,
    Vg,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Rees => Mode::Rees,
            ModeArg::Gr => Mode::Gr,
            ModeArg::Vg => Mode::Vg,
        }
    }
}

#[derive(Clone, Debug, Parser)]
#[command(name = "comat", version, about = "Conditional oriented matroids: axioms, circuits, NBC sets and ring presentations")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,
}

#[derive(Clone, Debug, Args)]
pub struct Input {
    /// COM JSON (`{"n", "covectors"}`) or arrangement JSON (`{"dim", "hyperplanes", "region"}`).
    pub input: PathBuf,
}

#[derive(Clone, Debug, Args)]
pub struct OrderArg {
    /// Linear order as a comma-separated permutation, smallest first (default: natural order).
    #[arg(long)]
    pub order: Option<String>,
}

#[derive(Clone, Debug, Subcommand)]
pub enum Command {
    /// Check the COM axioms; exit 1 with a witness if one fails.
    Check(Input),
    /// List the topes.
    Topes(Input),
    /// List the circuits.
    Circuits {
        #[command(flatten)]
        input: Input,
        /// Also compute circuits by orthogonality (needs the zero covector).
        #[arg(long)]
        om: bool,
    },
    /// List the NBC sets.
    Nbc {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Delete and contract elements, labelled by their original indices.
    Minors {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_delimiter = ',')]
        delete: Vec<usize>,
        #[arg(long, value_delimiter = ',')]
        contract: Vec<usize>,
    },
    /// Arrangement JSON to COM JSON.
    Realize(Input),
    /// NBC counts by size, the coefficients of the Hilbert series.
    Hilbert {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Generators and relations of the Rees algebra, associated graded or Varchenko-Gelfand ring.
    Presentation {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_enum, default_value = "rees")]
        mode: ModeArg,
        /// Drop circuit relations already implied by the pair relations.
        #[arg(long)]
        reduced: bool,
        /// Keep both `e_i^+` and `e_i^-` instead of eliminating `e_i^-`.
        #[arg(long)]
        symmetric: bool,
    },
    /// Run the full theorem suite on one instance.
    Verify {
        #[command(flatten)]
        input: Input,
        #[command(flatten)]
        order: OrderArg,
    },
    /// Verify seeded random arrangements and all their single-element minors.
    Corpus {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        count: usize,
        #[arg(long)]
        dim: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        /// Number of region inequalities.
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Exit status and the text written to stdout (or stderr for usage errors).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub output: String,
}

impl Outcome {
    fn ok(output: String) -> Outcome {
        Outcome { code: 0, output }
    }

    fn failed(output: String) -> Outcome {
        Outcome { code: 1, output }
    }

    pub fn usage(msg: impl std::fmt::Display) -> Outcome {
        Outcome {
            code: 2,
            output: format!("error: {msg}\n"),
        }
    }
}

type Usage<T> = Result<T, Outcome>;

fn read(path: &Path) -> Usage<String> {
    std::fs::read_to_string(path).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

/// Loads a COM, realizing arrangement files on the way.
fn load_com(path: &Path) -> Usage<Com> {
    let text = read(path)?;
    let value: serde_json::Value = serde_json::from_str(&text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))?;
    if value.get("hyperplanes").is_some() {
        return Ok(covectors(&load_arrangement_text(&text, path)?));
    }
    serde_json::from_value(value).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn load_arrangement_text(text: &str, path: &Path) -> Usage<Arrangement> {
    Arrangement::from_json(text).map_err(|e| Outcome::usage(format!("{}: {e}", path.display())))
}

fn parse_order(arg: &OrderArg, n: usize) -> Usage<LinearOrder> {
    match &arg.order {
        None => Ok(LinearOrder::natural(n)),
        Some(s) => {
            let o: LinearOrder = s.parse().map_err(Outcome::usage)?;
            if o.n() != n {
                return Err(Outcome::usage(format!("order has {} elements, ground set has {n}", o.n())));
            }
            Ok(o)
        }
    }
}

fn require_com(l: &Com) -> Usage<()> {
    check_com(l).map_err(|w| {
        Outcome::failed(pretty(&json!({ "is_com": false, "witness": w })))
    })
}

fn pretty<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("reports serialize");
    s.push('\n');
    s
}

fn lines<I: IntoIterator<Item = String>>(items: I) -> String {
    items.into_iter().map(|s| s + "\n").collect()
}

fn not_cas(format: Format) -> Usage<()> {
    if format == Format::Cas {
        return Err(Outcome::usage("--format cas is only available for `presentation`"));
    }
    Ok(())
}

pub fn run(config: &RunConfig) -> Outcome {
    match dispatch(config) {
        Ok(o) | Err(o) => o,
    }
}

fn dispatch(config: &RunConfig) -> Usage<Outcome> {
    let format = config.format;
    if !matches!(config.command, Command::Presentation { .. }) {
        not_cas(format)?;
    }
    let text = format == Format::Text;
    match &config.command {
        Command::Check(input) => {
            let l = load_com(&input.input)?;
            let result = check_com(&l);
            let om = result.is_ok() && is_oriented_matroid(&l).unwrap_or(false);
            let out = if text {
                match &result {
                    Ok(()) => format!("COM: yes\noriented matroid: {}\n", if om { "yes" } else { "no" }),
                    Err(w) => format!("COM: no\nwitness: {w}\n"),
                }
            } else {
                match &result {
                    Ok(()) => pretty(&json!({ "is_com": true, "is_oriented_matroid": om })),
                    Err(w) => pretty(&json!({ "is_com": false, "witness": w })),
                }
            };
            Ok(if result.is_ok() { Outcome::ok(out) } else { Outcome::failed(out) })
        }
        Command::Topes(input) => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let t = topes(&l);
            Ok(Outcome::ok(if text {
                lines(t.iter().map(|x| x.word()))
            } else {
                pretty(&json!({ "n": l.n(), "topes": t }))
            }))
        }
        Command::Circuits { input, om } => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let c = circuits(&l);
            let om_set = if *om {
                Some(om_circuits(&l).map_err(Outcome::usage)?)
            } else {
                None
            };
            Ok(Outcome::ok(if text {
                let mut s = lines(c.iter().map(|x| x.word()));
                if let Some(o) = &om_set {
                    let _ = writeln!(s, "orthogonality circuits agree: {}", o == &c);
                }
                s
            } else {
                match om_set {
                    None => pretty(&c),
                    Some(o) => pretty(&json!({ "circuits": c, "om_circuits": o })),
                }
            }))
        }
        Command::Nbc { input, order } => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let o = parse_order(order, l.n())?;
            let f = nbc_sets(&l, &o).map_err(Outcome::usage)?;
            Ok(Outcome::ok(if text {
                let mut s = format!("order: {o}\ncounts: {:?}\n", f.counts);
                s.push_str(&lines(f.sets.iter().map(|x| x.to_string())));
                s
            } else {
                pretty(&f)
            }))
        }
        Command::Minors { input, delete, contract } => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let mut m = LabeledCom::new(l);
            for &i in delete {
                m = m.delete(i).map_err(Outcome::usage)?;
            }
            for &i in contract {
                m = m.contract(i).map_err(Outcome::usage)?;
            }
            Ok(Outcome::ok(if text {
                let labels: Vec<String> = m.labels.iter().map(|l| l.to_string()).collect();
                let mut s = format!("labels: {}\n", labels.join(" "));
                s.push_str(&lines(m.com.iter().map(|x| x.word())));
                s
            } else {
                pretty(&json!({
                    "n": m.com.n(),
                    "covectors": m.com.iter().map(|x| x.word()).collect::<Vec<_>>(),
                    "labels": m.labels,
                }))
            }))
        }
        Command::Realize(input) => {
            let text_in = read(&input.input)?;
            let arr = load_arrangement_text(&text_in, &input.input)?;
            let l = covectors(&arr);
            Ok(Outcome::ok(if text { lines(l.iter().map(|x| x.word())) } else { pretty(&l) }))
        }
        Command::Hilbert { input, order } => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let o = parse_order(order, l.n())?;
            let counts = hilbert_series(&l, &o).map_err(Outcome::usage)?;
            Ok(Outcome::ok(if text {
                format!("{}\n", series(&counts))
            } else {
                pretty(&json!({ "counts": counts, "series": series(&counts) }))
            }))
        }
        Command::Presentation {
            input,
            mode,
            reduced,
            symmetric,
        } => {
            let l = load_com(&input.input)?;
            require_com(&l)?;
            let p = presentation(&l, (*mode).into(), *reduced, *symmetric).map_err(Outcome::usage)?;
            Ok(Outcome::ok(match format {
                Format::Json => {
                    let mut s = p.to_json();
                    s.push('\n');
                    s
                }
                Format::Text => p.to_text(),
                Format::Cas => p.to_cas_script(),
            }))
        }
        Command::Verify { input, order } => {
            let l = load_com(&input.input)?;
            let o = parse_order(order, l.n())?;
            let r = verify_com(&l, &o).map_err(Outcome::usage)?;
            let out = if text {
                let mut s = format!("holds: {}\n", r.holds);
                if let Some(p) = &r.presentation {
                    let _ = writeln!(s, "topes: {}\nnbc counts: {:?}\nnbc det: {}", p.topes, p.counts, p.nbc_det);
                }
                s.push_str(&lines(r.failures.iter().map(|f| format!("failure: {f}"))));
                s
            } else {
                pretty(&r)
            };
            Ok(if r.holds { Outcome::ok(out) } else { Outcome::failed(out) })
        }
        Command::Corpus { seed, count, dim, n, k } => {
            if dim.is_some_and(|d| d == 0 || d > 4) || n.is_some_and(|n| n == 0 || n > 8) {
                return Err(Outcome::usage("need 1 <= dim <= 4 and 1 <= n <= 8"));
            }
            let r = run_corpus(*seed, *count, CorpusShape { dim: *dim, n: *n, k: *k });
            let out = if text {
                let mut s = String::new();
                for sr in &r.seeds {
                    let _ = writeln!(
                        s,
                        "seed {:>6}  d={} n={} k={}  instances={:>2}  {}",
                        sr.seed,
                        sr.dim,
                        sr.n,
                        sr.k,
                        sr.instances.len(),
                        if sr.holds { "ok" } else { "FAIL" }
                    );
                }
                let _ = writeln!(s, "{} seeds, {} instances, {} failed", r.count, r.instances, r.failed_seeds.len());
                s
            } else {
                pretty(&r)
            };
            Ok(if r.holds { Outcome::ok(out) } else { Outcome::failed(out) })
        }
    }
}

/// `1 + 3t + 2t^2` style rendering.
pub fn series(counts: &[usize]) -> String {
    if counts.is_empty() {
        return "0".into();
    }
    let terms: Vec<String> = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| match k {
            0 => c.to_string(),
            1 => format!("{}t", if c == 1 { String::new() } else { c.to_string() }),
            _ => format!("{}t^{k}", if c == 1 { String::new() } else { c.to_string() }),
        })
        .collect();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_rendering() {
        assert_eq!(series(&[1, 3, 2]), "1 + 3t + 2t^2");
        assert_eq!(series(&[1, 1]), "1 + t");
        assert_eq!(series(&[]), "0");
    }

    #[test]
    fn parses_flags() {
        let c = RunConfig::try_parse_from(["comat", "presentation", "x.json", "--mode", "gr", "--reduced", "--format", "cas"]).unwrap();
        assert_eq!(c.format, Format::Cas);
        assert!(matches!(c.command, Command::Presentation { mode: ModeArg::Gr, reduced: true, symmetric: false, .. }));
        let c = RunConfig::try_parse_from(["comat", "minors", "x.json", "--delete", "0,2"]).unwrap();
        assert!(matches!(c.command, Command::Minors { ref delete, .. } if delete == &[0, 2]));
    }

    #[test]
    fn cas_only_for_presentation() {
        let c = RunConfig::try_parse_from(["comat", "topes", "x.json", "--format", "cas"]).unwrap();
        assert_eq!(run(&c).code, 2);
    }
}
