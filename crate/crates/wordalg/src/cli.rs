//! Command-line front end: every module as a subcommand with stable text
//! and JSON output.
//!
//! Exit codes: 0 success/affirmative, 1 negative verdict, 2 usage error or
//! malformed input (line/column diagnostic on stderr, no JSON envelope),
//! 3 resource bound exceeded.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::autalg::{
    build_normal_word_automaton, classify_growth, gk_estimate, growth, to_dot,
};
use crate::freealg::{parse_poly, parse_relations, MonomialOrder};
use crate::groups::{
    cyclic_reduce, dehn_decide, free_reduce, parse_group_word, parse_presentation, DehnOutcome,
};
use crate::height::{height_survey, is_n_divisible, HeightError};
use crate::morphisms::{
    apply_morphism, check_thue3_conditions, crochemore_test, is_power_free, iterate_fixed_point,
    parse_morphism, thue_binary, thue_ternary, Morphism,
};
use crate::ramsey::{vdw_number, VdwResult};
use crate::rewrite::{
    complete, diamond_report, is_member, reduce, CompletionStatus, Membership, RelationSet,
    SimplificationScheme,
};
use crate::textio::ParseError;
use crate::words::{
    cfl_factorize, find_fgf, generate_regular, is_assoc_regular, shirshov_bracketing, Alphabet,
    Word,
};

#[derive(Parser)]
#[command(name = "wordalg", about = "combinatorics of words for ring theory")]
struct Cli {
    /// emit a JSON envelope {command, inputs, result, certificate?}
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// regular (Lyndon–Shirshov) word operations
    #[command(subcommand)]
    Lyndon(LyndonCmd),
    /// search for a factor f·g·f with f semiregular and g regular or empty
    Fgf {
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// free-algebra rewriting over a relation file
    #[command(subcommand)]
    Poly(PolyCmd),
    /// five equivalent confluence conditions on a finite simplification graph
    Diamond {
        #[arg(long)]
        nodes: usize,
        /// edge `from,to`; repeat per edge
        #[arg(long = "edge", value_name = "FROM,TO")]
        edges: Vec<String>,
    },
    /// normal-word automata for forbidden-factor lists
    #[command(subcommand)]
    Auto(AutoCmd),
    /// n-divisibility and height
    #[command(subcommand)]
    Height(HeightCmd),
    /// power-free words and square-free-preserving morphisms
    #[command(subcommand)]
    Morph(MorphCmd),
    /// group words, small cancellation, Dehn's algorithm
    #[command(subcommand)]
    Group(GroupCmd),
    /// van der Waerden number search
    Vdw {
        n: usize,
        k: usize,
        /// largest N the backtracking search will certify
        #[arg(long, default_value_t = 64)]
        max: usize,
    },
}

#[derive(Subcommand)]
enum LyndonCmd {
    /// decide regularity
    Check {
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// list the regular words up to a length
    Gen {
        #[arg(long)]
        alphabet: String,
        #[arg(long = "max-len")]
        max_len: usize,
    },
    /// factor into a nonincreasing product of regular words
    Factor {
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// canonical bracketing of a regular word
    Bracket {
        word: String,
        #[arg(long)]
        alphabet: Option<String>,
    },
}

#[derive(Subcommand)]
enum PolyCmd {
    /// normal form modulo the relations, with a replayable trace
    Reduce {
        poly: String,
        #[arg(long, value_name = "FILE")]
        rules: PathBuf,
        #[arg(long, default_value = "xy")]
        alphabet: String,
    },
    /// close the relations under composition up to a degree bound
    Complete {
        #[arg(long, value_name = "FILE")]
        rules: PathBuf,
        #[arg(long = "max-deg")]
        max_deg: usize,
        #[arg(long, default_value = "xy")]
        alphabet: String,
    },
    /// ideal membership, semidecided up to a degree bound
    Member {
        poly: String,
        #[arg(long, value_name = "FILE")]
        rules: PathBuf,
        #[arg(long = "max-deg")]
        max_deg: usize,
        #[arg(long, default_value = "xy")]
        alphabet: String,
    },
}

#[derive(Args)]
struct ForbidArgs {
    #[arg(long, default_value = "xy")]
    alphabet: String,
    /// forbidden factor; repeat per word
    #[arg(long = "forbid")]
    forbid: Vec<String>,
    /// file of forbidden factors, one per line
    #[arg(long = "forbid-file", value_name = "FILE")]
    forbid_file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum AutoCmd {
    /// build the normal-word automaton and print it as DOT
    Build {
        #[command(flatten)]
        words: ForbidArgs,
    },
    /// cumulative counts of normal words of length ≤ 0..=upto
    Growth {
        #[command(flatten)]
        words: ForbidArgs,
        #[arg(long, default_value_t = 10)]
        upto: usize,
    },
    /// finite / polynomial(d) / exponential growth of the normal words
    Classify {
        #[command(flatten)]
        words: ForbidArgs,
        /// also report ln V(n)/ln n at this n
        #[arg(long)]
        estimate_at: Option<usize>,
    },
}

#[derive(Subcommand)]
enum HeightCmd {
    /// n-divisibility with a witness decomposition
    Check {
        word: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// survey divisibility counts and heights length by length
    Survey {
        #[arg(long)]
        alphabet: String,
        #[arg(long)]
        n: usize,
        #[arg(long = "max-len")]
        max_len: usize,
    },
}

#[derive(Args)]
struct MorphSource {
    /// built-in morphism: thue-binary | thue-ternary
    #[arg(long, conflicts_with = "file")]
    named: Option<String>,
    /// file of `letter -> image` lines
    #[arg(long, value_name = "FILE")]
    file: Option<PathBuf>,
}

#[derive(Subcommand)]
enum MorphCmd {
    /// apply the morphism once, or iterate a prolongable one to length ≥ N
    Apply {
        word: String,
        #[command(flatten)]
        source: MorphSource,
        /// iterate from the single-letter seed until this length is reached
        #[arg(long, value_name = "N")]
        iterate: Option<usize>,
    },
    /// report the earliest k-th power factor, if any
    Powerfree {
        word: String,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long)]
        alphabet: Option<String>,
    },
    /// Crochemore bound k and the square-free check up to that length
    Crochemore {
        #[command(flatten)]
        source: MorphSource,
    },
    /// the two hypotheses of the square-free substitution theorem
    ThueVerify {
        #[command(flatten)]
        source: MorphSource,
    },
}

#[derive(Subcommand)]
enum GroupCmd {
    /// free and cyclic reduction of a group word
    Cancel {
        word: String,
        /// generator letters, juxtaposed
        #[arg(long)]
        gens: String,
    },
    /// decide the word problem over a C'(1/6) presentation
    Dehn {
        word: String,
        #[arg(long, value_name = "FILE")]
        presentation: PathBuf,
    },
}

struct Failure {
    code: i32,
    message: String,
}

struct Outcome {
    name: &'static str,
    inputs: Value,
    exit: i32,
    text: String,
    result: Value,
    certificate: Option<Value>,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: 2, message: message.into() }
}

fn file_diag(path: &Path, e: &ParseError) -> Failure {
    usage(format!("{}: {e}", path.display()))
}

fn load(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn resolve_alphabet(flag: &Option<String>, text: &str) -> Result<Alphabet, Failure> {
    match flag {
        Some(symbols) => Alphabet::new(symbols),
        None => Alphabet::infer(text),
    }
    .map_err(|e| usage(e.to_string()))
}

fn word_text(alphabet: &Alphabet, w: &Word) -> String {
    if w.is_empty() {
        "ε".to_string()
    } else {
        alphabet.format(w)
    }
}

fn resolve_morphism(source: &MorphSource) -> Result<Morphism, Failure> {
    match (&source.named, &source.file) {
        (Some(name), None) => match name.as_str() {
            "thue-binary" => Ok(thue_binary()),
            "thue-ternary" => Ok(thue_ternary()),
            other => Err(usage(format!(
                "unknown morphism {other:?}; use thue-binary or thue-ternary"
            ))),
        },
        (None, Some(path)) => {
            parse_morphism(&load(path)?).map_err(|e| file_diag(path, &e))
        }
        _ => Err(usage("pass exactly one of --named or --file")),
    }
}

fn morphism_input(source: &MorphSource) -> Value {
    match (&source.named, &source.file) {
        (Some(name), _) => json!({ "named": name }),
        (_, Some(path)) => json!({ "file": path.display().to_string() }),
        _ => Value::Null,
    }
}

fn load_relations(
    path: &Path,
    alphabet: &Alphabet,
) -> Result<RelationSet, Failure> {
    let polys = parse_relations(alphabet, &load(path)?).map_err(|e| file_diag(path, &e))?;
    RelationSet::new(alphabet.clone(), MonomialOrder::DegLex, polys)
        .map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load_forbidden(args: &ForbidArgs) -> Result<(Alphabet, Vec<Word>), Failure> {
    let alphabet = Alphabet::new(&args.alphabet).map_err(|e| usage(e.to_string()))?;
    let mut words = Vec::new();
    for text in &args.forbid {
        words.push(alphabet.word(text).map_err(|e| usage(e.to_string()))?);
    }
    if let Some(path) = &args.forbid_file {
        for line in load(path)?.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            words.push(
                alphabet
                    .word(line)
                    .map_err(|e| usage(format!("{}: {e}", path.display())))?,
            );
        }
    }
    if words.is_empty() {
        return Err(usage("need at least one forbidden word"));
    }
    Ok((alphabet, words))
}

fn trace_lines(log: &str) -> Value {
    Value::Array(log.lines().map(|l| Value::String(l.to_string())).collect())
}

fn witness_digits(colors: &[u8], k: usize) -> String {
    if k <= 10 {
        colors.iter().map(|c| char::from(b'0' + c)).collect()
    } else {
        colors.iter().map(u8::to_string).collect::<Vec<_>>().join(",")
    }
}

fn dispatch(cmd: &Cmd) -> Result<Outcome, Failure> {
    match cmd {
        Cmd::Lyndon(LyndonCmd::Check { word, alphabet }) => {
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            let regular = is_assoc_regular(&w).map_err(|e| usage(e.to_string()))?;
            Ok(Outcome {
                name: "lyndon check",
                inputs: json!({ "word": word, "alphabet": symbols(&a) }),
                exit: i32::from(!regular),
                text: if regular { "regular" } else { "not regular" }.to_string(),
                result: json!({ "regular": regular }),
                certificate: None,
            })
        }
        Cmd::Lyndon(LyndonCmd::Gen { alphabet, max_len }) => {
            let a = Alphabet::new(alphabet).map_err(|e| usage(e.to_string()))?;
            let words = generate_regular(&a, *max_len);
            let rendered: Vec<String> = words.iter().map(|w| a.format(w)).collect();
            Ok(Outcome {
                name: "lyndon gen",
                inputs: json!({ "alphabet": symbols(&a), "max_len": max_len }),
                exit: 0,
                text: rendered.join("\n"),
                result: json!({ "count": rendered.len(), "words": rendered }),
                certificate: None,
            })
        }
        Cmd::Lyndon(LyndonCmd::Factor { word, alphabet }) => {
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            let factors = cfl_factorize(&w).map_err(|e| usage(e.to_string()))?;
            let rendered: Vec<String> = factors.iter().map(|f| a.format(f)).collect();
            Ok(Outcome {
                name: "lyndon factor",
                inputs: json!({ "word": word, "alphabet": symbols(&a) }),
                exit: 0,
                text: rendered.join(" "),
                result: json!({ "factors": rendered }),
                certificate: None,
            })
        }
        Cmd::Lyndon(LyndonCmd::Bracket { word, alphabet }) => {
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            if !is_assoc_regular(&w).map_err(|e| usage(e.to_string()))? {
                return Ok(Outcome {
                    name: "lyndon bracket",
                    inputs: json!({ "word": word, "alphabet": symbols(&a) }),
                    exit: 1,
                    text: "not regular".to_string(),
                    result: json!({ "regular": false }),
                    certificate: None,
                });
            }
            let t = shirshov_bracketing(&w).map_err(|e| usage(e.to_string()))?;
            let rendered = t.format(&a);
            Ok(Outcome {
                name: "lyndon bracket",
                inputs: json!({ "word": word, "alphabet": symbols(&a) }),
                exit: 0,
                text: rendered.clone(),
                result: json!({ "regular": true, "bracketing": rendered }),
                certificate: None,
            })
        }
        Cmd::Fgf { word, alphabet } => {
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            let inputs = json!({ "word": word, "alphabet": symbols(&a) });
            match find_fgf(&w) {
                Some(occ) => {
                    let f = a.format(&occ.f);
                    let g = word_text(&a, &occ.g);
                    Ok(Outcome {
                        name: "fgf",
                        inputs,
                        exit: 0,
                        text: format!("f = {f}, g = {g}, start = {}", occ.start),
                        result: json!({
                            "found": true, "f": f, "g": g, "start": occ.start,
                        }),
                        certificate: None,
                    })
                }
                None => Ok(Outcome {
                    name: "fgf",
                    inputs,
                    exit: 1,
                    text: "no fgf factor".to_string(),
                    result: json!({ "found": false }),
                    certificate: None,
                }),
            }
        }
        Cmd::Poly(PolyCmd::Reduce { poly, rules, alphabet }) => {
            let a = Alphabet::new(alphabet).map_err(|e| usage(e.to_string()))?;
            let set = load_relations(rules, &a)?;
            let p = parse_poly(&a, poly).map_err(|e| usage(e.to_string()))?;
            let trace = reduce(&p, &set);
            let log = trace.render_log(&a);
            let nf = trace.result.to_string();
            let mut text = format!("normal form: {nf}");
            if !log.is_empty() {
                text.push_str("\nsteps:\n");
                text.push_str(log.trim_end());
            }
            Ok(Outcome {
                name: "poly reduce",
                inputs: json!({
                    "poly": poly, "rules": rules.display().to_string(),
                    "alphabet": symbols(&a),
                }),
                exit: 0,
                text,
                result: json!({ "normal_form": nf, "steps": trace.steps.len() }),
                certificate: Some(json!({ "log": trace_lines(&log) })),
            })
        }
        Cmd::Poly(PolyCmd::Complete { rules, max_deg, alphabet }) => {
            let a = Alphabet::new(alphabet).map_err(|e| usage(e.to_string()))?;
            let set = load_relations(rules, &a)?;
            let (closed, status) = complete(&set, *max_deg);
            let basis: Vec<String> = closed.polys().iter().map(|p| p.to_string()).collect();
            let (exit, label) = match status {
                CompletionStatus::Complete => (0, "complete"),
                CompletionStatus::BoundExceeded => (3, "bound-exceeded"),
            };
            let mut text = format!("status: {label}");
            for p in &basis {
                text.push('\n');
                text.push_str(p);
            }
            Ok(Outcome {
                name: "poly complete",
                inputs: json!({
                    "rules": rules.display().to_string(), "max_deg": max_deg,
                    "alphabet": symbols(&a),
                }),
                exit,
                text,
                result: json!({ "status": label, "basis": basis }),
                certificate: None,
            })
        }
        Cmd::Poly(PolyCmd::Member { poly, rules, max_deg, alphabet }) => {
            let a = Alphabet::new(alphabet).map_err(|e| usage(e.to_string()))?;
            let set = load_relations(rules, &a)?;
            let p = parse_poly(&a, poly).map_err(|e| usage(e.to_string()))?;
            let inputs = json!({
                "poly": poly, "rules": rules.display().to_string(),
                "max_deg": max_deg, "alphabet": symbols(&a),
            });
            match is_member(&p, &set, *max_deg) {
                Membership::InIdeal(trace) => {
                    let log = trace.render_log(&a);
                    Ok(Outcome {
                        name: "poly member",
                        inputs,
                        exit: 0,
                        text: "in the ideal".to_string(),
                        result: json!({ "membership": "in-ideal" }),
                        certificate: Some(json!({ "log": trace_lines(&log) })),
                    })
                }
                Membership::NotInIdealUpTo(bound) => Ok(Outcome {
                    name: "poly member",
                    inputs,
                    exit: 1,
                    text: format!("not in the ideal up to degree {bound}"),
                    result: json!({ "membership": "not-in-ideal", "bound": bound }),
                    certificate: None,
                }),
                Membership::Unknown => Ok(Outcome {
                    name: "poly member",
                    inputs,
                    exit: 3,
                    text: format!("undecided at degree bound {max_deg}"),
                    result: json!({ "membership": "unknown", "bound": max_deg }),
                    certificate: None,
                }),
            }
        }
        Cmd::Diamond { nodes, edges } => {
            let mut parsed = Vec::new();
            for e in edges {
                let pair = e
                    .split_once(',')
                    .and_then(|(x, y)| Some((x.trim().parse().ok()?, y.trim().parse().ok()?)));
                match pair {
                    Some(edge) => parsed.push(edge),
                    None => return Err(usage(format!("bad edge {e:?}; expected FROM,TO"))),
                }
            }
            let scheme = SimplificationScheme::new(*nodes, &parsed)
                .map_err(|e| usage(e.to_string()))?;
            let report = diamond_report(&scheme);
            let holds = report.holds();
            let text = format!(
                "unique normal forms: {}\n\
                 transitive joinability: {}\n\
                 local confluence: {}\n\
                 one minimum per component: {}\n\
                 connectivity matches joinability: {}\n\
                 diamond: {}",
                report.unique_normal_forms,
                report.church_rosser_transitive,
                report.locally_confluent,
                report.one_minimum_per_component,
                report.connectivity_matches_common_descendant,
                if holds { "holds" } else { "fails" },
            );
            Ok(Outcome {
                name: "diamond",
                inputs: json!({
                    "nodes": nodes,
                    "edges": parsed.iter().map(|(x, y)| json!([x, y])).collect::<Vec<_>>(),
                }),
                exit: i32::from(!holds),
                text,
                result: json!({
                    "unique_normal_forms": report.unique_normal_forms,
                    "transitive_joinability": report.church_rosser_transitive,
                    "local_confluence": report.locally_confluent,
                    "one_minimum_per_component": report.one_minimum_per_component,
                    "connectivity_matches_joinability":
                        report.connectivity_matches_common_descendant,
                    "holds": holds,
                }),
                certificate: None,
            })
        }
        Cmd::Auto(AutoCmd::Build { words }) => {
            let (a, forbidden) = load_forbidden(words)?;
            let automaton = build_normal_word_automaton(&a, &forbidden);
            let dot = to_dot(&automaton);
            Ok(Outcome {
                name: "auto build",
                inputs: forbid_inputs(&a, &forbidden),
                exit: 0,
                text: dot.trim_end().to_string(),
                result: json!({ "states": automaton.num_states(), "dot": dot }),
                certificate: None,
            })
        }
        Cmd::Auto(AutoCmd::Growth { words, upto }) => {
            let (a, forbidden) = load_forbidden(words)?;
            let automaton = build_normal_word_automaton(&a, &forbidden);
            let values = growth(&automaton, *upto).map_err(|e| usage(e.to_string()))?;
            let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            let text = rendered
                .iter()
                .enumerate()
                .map(|(k, v)| format!("V({k}) = {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Outcome {
                name: "auto growth",
                inputs: {
                    let mut inputs = forbid_inputs(&a, &forbidden);
                    inputs["upto"] = json!(upto);
                    inputs
                },
                exit: 0,
                text,
                result: json!({ "values": rendered }),
                certificate: None,
            })
        }
        Cmd::Auto(AutoCmd::Classify { words, estimate_at }) => {
            let (a, forbidden) = load_forbidden(words)?;
            let automaton = build_normal_word_automaton(&a, &forbidden);
            let class = classify_growth(&automaton).map_err(|e| usage(e.to_string()))?;
            let mut text = class.to_string();
            let mut result = json!({ "class": class.to_string() });
            if let Some(n) = estimate_at {
                let estimate = gk_estimate(&automaton, *n).map_err(|e| usage(e.to_string()))?;
                text.push_str(&format!("\nln V(n)/ln n at n = {n}: {estimate:.4}"));
                result["gk_estimate"] = json!(estimate);
            }
            Ok(Outcome {
                name: "auto classify",
                inputs: {
                    let mut inputs = forbid_inputs(&a, &forbidden);
                    if let Some(n) = estimate_at {
                        inputs["estimate_at"] = json!(n);
                    }
                    inputs
                },
                exit: 0,
                text,
                result,
                certificate: None,
            })
        }
        Cmd::Height(HeightCmd::Check { word, n, alphabet }) => {
            if *n < 1 {
                return Err(usage("need n ≥ 1"));
            }
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            let inputs = json!({ "word": word, "n": n, "alphabet": symbols(&a) });
            match is_n_divisible(&w, *n) {
                Some(witness) => {
                    let prefix = word_text(&a, &witness.prefix);
                    let parts: Vec<String> =
                        witness.parts.iter().map(|p| a.format(p)).collect();
                    Ok(Outcome {
                        name: "height check",
                        inputs,
                        exit: 0,
                        text: format!(
                            "{n}-divisible\nprefix: {prefix}\nparts: {}",
                            parts.join(" ")
                        ),
                        result: json!({ "divisible": true }),
                        certificate: Some(json!({ "prefix": prefix, "parts": parts })),
                    })
                }
                None => Ok(Outcome {
                    name: "height check",
                    inputs,
                    exit: 1,
                    text: format!("not {n}-divisible"),
                    result: json!({ "divisible": false }),
                    certificate: None,
                }),
            }
        }
        Cmd::Height(HeightCmd::Survey { alphabet, n, max_len }) => {
            let a = Alphabet::new(alphabet).map_err(|e| usage(e.to_string()))?;
            let report = height_survey(&a, *n, *max_len).map_err(|e| match e {
                HeightError::SmallN => usage(e.to_string()),
                HeightError::TooLarge(..) => Failure { code: 3, message: e.to_string() },
            })?;
            let rows: Vec<Value> = report
                .rows
                .iter()
                .map(|r| {
                    json!({
                        "length": r.length, "words": r.words, "divisible": r.divisible,
                        "max_height": r.max_height, "witness": r.witness,
                    })
                })
                .collect();
            Ok(Outcome {
                name: "height survey",
                inputs: json!({ "alphabet": symbols(&a), "n": n, "max_len": max_len }),
                exit: 0,
                text: report.to_string().trim_end().to_string(),
                result: json!({ "max_height": report.max_height(), "rows": rows }),
                certificate: None,
            })
        }
        Cmd::Morph(MorphCmd::Apply { word, source, iterate }) => {
            let phi = resolve_morphism(source)?;
            let mut inputs = json!({ "word": word, "morphism": morphism_input(source) });
            let image = match iterate {
                Some(min_len) => {
                    inputs["iterate"] = json!(min_len);
                    let mut chars = word.chars();
                    let (Some(seed), None) = (chars.next(), chars.next()) else {
                        return Err(usage("--iterate needs a single-letter seed word"));
                    };
                    iterate_fixed_point(&phi, seed, *min_len)
                        .map_err(|e| usage(e.to_string()))?
                }
                None => {
                    let w = phi.source().word(word).map_err(|e| usage(e.to_string()))?;
                    apply_morphism(&phi, &w).map_err(|e| usage(e.to_string()))?
                }
            };
            let rendered = word_text(phi.target(), &image);
            Ok(Outcome {
                name: "morph apply",
                inputs,
                exit: 0,
                text: rendered.clone(),
                result: json!({ "image": rendered, "length": image.len() }),
                certificate: None,
            })
        }
        Cmd::Morph(MorphCmd::Powerfree { word, k, alphabet }) => {
            if *k < 2 {
                return Err(usage("need k ≥ 2"));
            }
            let a = resolve_alphabet(alphabet, word)?;
            let w = a.word(word).map_err(|e| usage(e.to_string()))?;
            let inputs = json!({ "word": word, "k": k, "alphabet": symbols(&a) });
            match is_power_free(&w, *k) {
                None => Ok(Outcome {
                    name: "morph powerfree",
                    inputs,
                    exit: 0,
                    text: format!("{k}-power-free"),
                    result: json!({ "power_free": true }),
                    certificate: None,
                }),
                Some(occ) => Ok(Outcome {
                    name: "morph powerfree",
                    inputs,
                    exit: 1,
                    text: format!("{k}-power at start {}, period {}", occ.start, occ.period),
                    result: json!({ "power_free": false }),
                    certificate: Some(json!({ "start": occ.start, "period": occ.period })),
                }),
            }
        }
        Cmd::Morph(MorphCmd::Crochemore { source }) => {
            let phi = resolve_morphism(source)?;
            let (k, square_free) = crochemore_test(&phi);
            Ok(Outcome {
                name: "morph crochemore",
                inputs: json!({ "morphism": morphism_input(source) }),
                exit: i32::from(!square_free),
                text: format!("k = {k}\nsquare-free preserved up to k: {square_free}"),
                result: json!({ "k": k, "square_free": square_free }),
                certificate: None,
            })
        }
        Cmd::Morph(MorphCmd::ThueVerify { source }) => {
            let phi = resolve_morphism(source)?;
            let report = check_thue3_conditions(&phi);
            let ok = report.cond1 && report.cond2;
            Ok(Outcome {
                name: "morph thue-verify",
                inputs: json!({ "morphism": morphism_input(source) }),
                exit: i32::from(!ok),
                text: format!(
                    "short square-free words keep square-free images: {}\n\
                     no image is a factor of another image: {}",
                    report.cond1, report.cond2
                ),
                result: json!({
                    "short_images_square_free": report.cond1,
                    "no_image_is_factor": report.cond2,
                }),
                certificate: None,
            })
        }
        Cmd::Group(GroupCmd::Cancel { word, gens }) => {
            let a = Alphabet::new(gens).map_err(|e| usage(e.to_string()))?;
            let w = parse_group_word(&a, word).map_err(|e| usage(e.to_string()))?;
            let free = free_reduce(&w);
            let cyclic = cyclic_reduce(&w);
            Ok(Outcome {
                name: "group cancel",
                inputs: json!({ "word": word, "generators": symbols(&a) }),
                exit: 0,
                text: format!(
                    "freely reduced: {}\ncyclically reduced: {}",
                    free.format(&a),
                    cyclic.format(&a)
                ),
                result: json!({
                    "free": free.format(&a), "cyclic": cyclic.format(&a),
                }),
                certificate: None,
            })
        }
        Cmd::Group(GroupCmd::Dehn { word, presentation }) => {
            let p = parse_presentation(&load(presentation)?)
                .map_err(|e| file_diag(presentation, &e))?;
            let w = parse_group_word(p.generators(), word).map_err(|e| usage(e.to_string()))?;
            let inputs = json!({
                "word": word, "presentation": presentation.display().to_string(),
            });
            match dehn_decide(&w, &p) {
                DehnOutcome::Trivial(steps) => {
                    let lines: Vec<String> = steps
                        .iter()
                        .map(|s| {
                            format!(
                                "rotate {}, match {} of relator {} rotation {}{}",
                                s.rotate,
                                s.matched,
                                s.relator,
                                s.rotation,
                                if s.inverted { " inverted" } else { "" }
                            )
                        })
                        .collect();
                    let plural = if steps.len() == 1 { "step" } else { "steps" };
                    let mut text = format!("trivial in {} {plural}", steps.len());
                    for line in &lines {
                        text.push('\n');
                        text.push_str(line);
                    }
                    let cert: Vec<Value> = steps
                        .iter()
                        .map(|s| {
                            json!({
                                "rotate": s.rotate, "matched": s.matched,
                                "relator": s.relator, "rotation": s.rotation,
                                "inverted": s.inverted,
                            })
                        })
                        .collect();
                    Ok(Outcome {
                        name: "group dehn",
                        inputs,
                        exit: 0,
                        text,
                        result: json!({ "verdict": "trivial", "steps": steps.len() }),
                        certificate: Some(json!({ "steps": cert })),
                    })
                }
                DehnOutcome::Nontrivial => Ok(Outcome {
                    name: "group dehn",
                    inputs,
                    exit: 1,
                    text: "nontrivial".to_string(),
                    result: json!({ "verdict": "nontrivial" }),
                    certificate: None,
                }),
                DehnOutcome::Unsupported => Err(usage(
                    "presentation does not satisfy C'(1/6); Dehn's algorithm does not apply",
                )),
            }
        }
        Cmd::Vdw { n, k, max } => {
            if *n < 2 || *k < 1 || *max < 1 {
                return Err(usage("need n ≥ 2, k ≥ 1, --max ≥ 1"));
            }
            let inputs = json!({ "n": n, "k": k, "max": max });
            match vdw_number(*n, *k, *max) {
                VdwResult::Found { value, witness } => {
                    let digits = witness_digits(&witness, *k);
                    Ok(Outcome {
                        name: "vdw",
                        inputs,
                        exit: 0,
                        text: format!("W({n},{k}) = {value}\nwitness: {digits}"),
                        result: json!({ "found": true, "value": value, "witness": digits }),
                        certificate: None,
                    })
                }
                VdwResult::NotFoundUpTo { bound, witness } => {
                    let digits = witness_digits(&witness, *k);
                    Ok(Outcome {
                        name: "vdw",
                        inputs,
                        exit: 3,
                        text: format!("no W({n},{k}) ≤ {bound}\nwitness: {digits}"),
                        result: json!({ "found": false, "bound": bound, "witness": digits }),
                        certificate: None,
                    })
                }
            }
        }
    }
}

fn symbols(a: &Alphabet) -> String {
    a.symbols().iter().collect()
}

fn forbid_inputs(a: &Alphabet, forbidden: &[Word]) -> Value {
    json!({
        "alphabet": symbols(a),
        "forbid": forbidden.iter().map(|w| a.format(w)).collect::<Vec<_>>(),
    })
}

/// Runs one invocation; `args` includes the program name. Used directly by
/// `main` and by the golden-output tests.
pub fn run_with_args<I, S>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            return if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                0
            } else {
                let _ = write!(err, "{e}");
                2
            };
        }
    };
    match dispatch(&cli.command) {
        Ok(outcome) => {
            if cli.json {
                let mut envelope = json!({
                    "command": outcome.name,
                    "inputs": outcome.inputs,
                    "result": outcome.result,
                });
                if let Some(cert) = outcome.certificate {
                    envelope["certificate"] = cert;
                }
                let rendered =
                    serde_json::to_string_pretty(&envelope).expect("envelope serializes");
                let _ = writeln!(out, "{rendered}");
            } else if !outcome.text.is_empty() {
                let _ = writeln!(out, "{}", outcome.text);
            }
            outcome.exit
        }
        Err(failure) => {
            let _ = writeln!(err, "{}", failure.message);
            failure.code
        }
    }
}
