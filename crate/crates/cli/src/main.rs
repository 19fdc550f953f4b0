use std::collections::BTreeMap;
use std::io::Write;
use std::process::ExitCode;

use biqp_core::oracle::{verify, SweepConfig, SweepReport};
use biqp_core::relations::{classify_table, Witness};
use biqp_core::sturmian::bispecial_factors;
use biqp_core::{
    chains_of_length, classify_json, derivated_sequence, f_table, is_quasiperiod_bi,
    quasiperiods_of_length, rauzy_graph, sturmian_quasiperiods, BiWord, FTable, SturmLang, Word,
};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

/// Quasiperiods of finite and eventually periodic biinfinite words.
///
/// Biinfinite words are written `LEFT|CENTER|RIGHT`, meaning
/// `...LEFT LEFT CENTER RIGHT RIGHT...` with position 0 at the start of
/// CENTER.
#[derive(Parser)]
#[command(name = "biqp", version)]
struct Cli {
    /// Print a single JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decide whether Q is a quasiperiod of a biinfinite word.
    QpCheck {
        #[arg(long, value_parser = parse_bi)]
        bi: BiWord,
        #[arg(value_parser = parse_word)]
        q: Word,
    },
    /// List the quasiperiods of a given length.
    QpList {
        #[arg(long, value_parser = parse_bi)]
        bi: BiWord,
        #[arg(long)]
        length: usize,
    },
    /// Derivated sequence along Q.
    Deriv {
        #[arg(long, value_parser = parse_bi)]
        bi: BiWord,
        #[arg(value_parser = parse_word)]
        q: Word,
    },
    /// Chains of quasiperiods of a given length.
    Chains {
        #[arg(long, value_parser = parse_bi)]
        bi: BiWord,
        #[arg(long)]
        length: usize,
    },
    /// The f table of the couple (Q, R).
    FTable {
        #[arg(value_parser = parse_word)]
        q: Word,
        #[arg(value_parser = parse_word)]
        r: Word,
    },
    /// Classify the couple (Q, R).
    Classify {
        #[arg(value_parser = parse_word)]
        q: Word,
        #[arg(value_parser = parse_word)]
        r: Word,
    },
    /// Sturmian languages given by a directive sequence.
    Sturmian {
        /// Comma-separated positive integers.
        #[arg(long, value_parser = parse_directive)]
        directive: Directive,
        #[command(subcommand)]
        cmd: SturmCmd,
    },
    /// Run the brute-force cross-checks.
    Verify {
        #[arg(long, default_value_t = SweepConfig::default().max_len)]
        max_len: usize,
    },
}

#[derive(Subcommand)]
enum SturmCmd {
    /// Quasiperiods of a given length.
    Qp {
        #[arg(long)]
        length: usize,
    },
    /// Bispecial factors up to a given length.
    Bispecial {
        #[arg(long)]
        max: usize,
    },
    /// Rauzy graph of a given order.
    Rauzy {
        #[arg(long)]
        length: usize,
        /// Emit a Graphviz description.
        #[arg(long)]
        dot: bool,
    },
}

fn parse_word(s: &str) -> Result<Word, String> {
    if s.is_empty() {
        return Err("empty word".into());
    }
    s.parse().map_err(|e: biqp_core::Error| e.to_string())
}

fn parse_bi(s: &str) -> Result<BiWord, String> {
    s.parse().map_err(|e: biqp_core::Error| e.to_string())
}

#[derive(Clone, Debug)]
struct Directive(Vec<u32>);

fn parse_directive(s: &str) -> Result<Directive, String> {
    s.split(',')
        .map(|t| match t.trim().parse::<u32>() {
            Ok(d) if d > 0 => Ok(d),
            _ => Err(format!("'{t}' is not a positive integer")),
        })
        .collect::<Result<_, _>>()
        .map(Directive)
}

/// Output of a successful command: text lines and the JSON object.
struct Out {
    text: String,
    json: Value,
    ok: bool,
}

impl Out {
    fn new(text: impl Into<String>, json: Value) -> Self {
        Out {
            text: text.into(),
            json,
            ok: true,
        }
    }
}

fn bi_json(b: &BiWord) -> Value {
    serde_json::to_value(b).expect("serializable")
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("\n")
}

fn show(w: &Word) -> String {
    if w.is_empty() {
        "ε".into()
    } else {
        w.to_string()
    }
}

fn table_text(t: &FTable) -> String {
    let spans = t.spans();
    let cell = |v: Option<i64>| v.map_or(".".to_string(), |v| v.to_string());
    let width = spans
        .iter()
        .flat_map(|&m| spans.iter().map(move |&n| (m, n)))
        .map(|(m, n)| cell(t.get(m, n)).len())
        .chain(spans.iter().map(|m| m.to_string().len()))
        .max()
        .unwrap_or(1);
    let row = |head: String, cells: Vec<String>| {
        let cells: Vec<String> = cells.iter().map(|c| format!("{c:>width$}")).collect();
        format!("{head:>width$} | {}", cells.join(" "))
    };
    let mut out = vec![row(
        "f".into(),
        spans.iter().map(|n| n.to_string()).collect(),
    )];
    out.push("-".repeat(out[0].len()));
    for &m in spans {
        out.push(row(
            m.to_string(),
            spans.iter().map(|&n| cell(t.get(m, n))).collect(),
        ));
    }
    out.join("\n")
}

fn witness_text(w: &Witness) -> String {
    match w {
        Witness::OnlyQ { pair } => format!("only q: spans {:?}", pair),
        Witness::Both { both, only_q } => {
            format!("both: spans {:?}\nonly q: spans {:?}", both, only_q)
        }
    }
}

fn report_line(r: &SweepReport) -> String {
    format!(
        "{:<18} {} checked={} discrepancies={}",
        r.name,
        if r.passed() { "PASS" } else { "FAIL" },
        r.checked,
        r.discrepancies.len()
    )
}

fn run(cmd: Cmd) -> biqp_core::Result<Out> {
    Ok(match cmd {
        Cmd::QpCheck { bi, q } => {
            let qp = is_quasiperiod_bi(&q, &bi);
            Out::new(
                qp.to_string(),
                json!({"bi": bi_json(&bi), "q": q, "quasiperiod": qp}),
            )
        }
        Cmd::QpList { bi, length } => {
            let qs = quasiperiods_of_length(&bi, length);
            Out::new(
                lines(&qs),
                json!({"bi": bi_json(&bi), "length": length, "quasiperiods": qs}),
            )
        }
        Cmd::Deriv { bi, q } => {
            let d = derivated_sequence(&bi, &q)?;
            Out::new(
                d.to_string(),
                json!({"bi": bi_json(&bi), "q": q, "text": d.to_string(), "sequence": d}),
            )
        }
        Cmd::Chains { bi, length } => {
            let chains = chains_of_length(&bi, length);
            let text = lines(chains.iter().map(|c| {
                let members = lines(&c.members).replace('\n', " -> ");
                if c.cyclic {
                    format!("{members} (cyclic)")
                } else {
                    members
                }
            }));
            Out::new(
                text,
                json!({"bi": bi_json(&bi), "length": length, "chains": chains}),
            )
        }
        Cmd::FTable { q, r } => {
            let t = f_table(&q, &r)?;
            Out::new(
                table_text(&t),
                serde_json::to_value(t.to_json()).expect("serializable"),
            )
        }
        Cmd::Classify { q, r } => {
            let c = classify_json(&q, &r)?;
            let t = f_table(&q, &r)?;
            let mut text = vec![c.class.to_string()];
            if let Some(w) = &classify_table(&t).witness {
                text.push(witness_text(w));
            }
            text.push(table_text(&t));
            Out::new(
                text.join("\n"),
                serde_json::to_value(&c).expect("serializable"),
            )
        }
        Cmd::Sturmian {
            directive: Directive(directive),
            cmd,
        } => {
            let lang = SturmLang::new(directive.clone())?;
            match cmd {
                SturmCmd::Qp { length } => {
                    let qs = sturmian_quasiperiods(&lang, length)?;
                    Out::new(
                        lines(&qs),
                        json!({
                            "directive": directive,
                            "length": length,
                            "count": qs.len(),
                            "quasiperiods": qs,
                        }),
                    )
                }
                SturmCmd::Bispecial { max } => {
                    let bs = bispecial_factors(&lang, max)?;
                    Out::new(
                        lines(bs.iter().map(|b| format!("{} {}", b.len(), show(b)))),
                        json!({"directive": directive, "max": max, "bispecial": bs}),
                    )
                }
                SturmCmd::Rauzy { length, dot } => {
                    let g = rauzy_graph(&lang, length)?;
                    let (k, l, m) = g.decomposition();
                    let text = if dot {
                        g.to_dot().trim_end().to_string()
                    } else {
                        format!(
                            "vertices {}\nedges {}\ndecomposition {k} {l} {m}",
                            g.vertices.len(),
                            g.edges.len()
                        )
                    };
                    let mut v = serde_json::to_value(&g).expect("serializable");
                    v["decomposition"] = json!([k, l, m]);
                    if dot {
                        v["dot"] = json!(g.to_dot());
                    }
                    Out::new(text, v)
                }
            }
        }
        Cmd::Verify { max_len } => {
            let cfg = SweepConfig {
                max_len,
                ..SweepConfig::default()
            };
            if !cfg.is_valid() {
                return Err(biqp_core::Error::Precondition(
                    "--max-len must be at least 1".into(),
                ));
            }
            let reports = verify(&cfg);
            let ok = reports.iter().all(SweepReport::passed);
            let mut text: Vec<String> = reports.iter().map(report_line).collect();
            for r in &reports {
                text.extend(r.discrepancies.iter().take(10).map(|d| format!("  {d}")));
            }
            let summary: BTreeMap<&str, bool> = reports
                .iter()
                .map(|r| (r.name.as_str(), r.passed()))
                .collect();
            Out {
                text: text.join("\n"),
                json: json!({"config": cfg, "passed": ok, "summary": summary, "reports": reports}),
                ok,
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli.cmd) {
        Ok(out) => {
            // a closed pipe (`| head`) is not an error worth reporting
            let mut stdout = std::io::stdout().lock();
            let _ = if cli.json {
                writeln!(stdout, "{}", out.json)
            } else if !out.text.is_empty() {
                writeln!(stdout, "{}", out.text)
            } else {
                Ok(())
            };
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
