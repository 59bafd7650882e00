//! Subcommand implementations. Each command produces its stdout text and an
//! exit code; the binary in `main.rs` only prints and exits.
//!
//! Exit codes: 0 = success / property true, 1 = property false or
//! verification mismatch, 2 = invalid input or resource cap.

use std::fs;
use std::ops::RangeInclusive;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use synchro_core::{
    build_chain_zero, build_fhat_k_u, canonical_unbordered_with_all_letters, complete_with_zero,
    decompose_by, fhat, is_incompletable_xku, partial_sums, restivo_word, semi_flower, Alphabet,
    CodeSet, Dfa, Error, StateSet, Word, ZeroScan, DEFAULT_STATE_CAP,
};

use crate::document::AutomatonDocument;
use crate::report::{GridRow, RowStatus, VerificationReport};
use crate::CliError;

#[derive(Debug, Parser)]
#[command(
    name = "synchro",
    version,
    about = "Build, analyze and verify synchronizing automata with zero and the word codes behind them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build an automaton family and write it as a JSON document
    Build(BuildArgs),
    /// Analyze a stored automaton document
    Analyze(AnalyzeArgs),
    /// Word and code-set computations
    Words(WordsArgs),
    /// Run a verification suite over a parameter grid
    Verify(VerifyArgs),
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[command(subcommand)]
    pub family: BuildFamily,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the JSON document here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Additionally write a Graphviz DOT rendering here
    #[arg(long)]
    pub dot: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum BuildFamily {
    /// The 2k-state automaton with zero whose reset words are the words
    /// incompletable for A^k minus {u}
    FhatKu {
        /// Alphabet symbols, e.g. `ab` or `"x y z"`
        #[arg(long)]
        alphabet: String,
        /// Unbordered base word of length k >= 2
        #[arg(long)]
        u: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The n-state chain automaton with zero over n-1 letters
    Chain {
        /// State count, n >= 3
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The semi-flower automaton recognizing the products of a code
    Semiflower {
        /// Code file, or an inline `A^k minus <u>` expression
        #[arg(long)]
        code: String,
        /// Add the absorbing zero state
        #[arg(long)]
        complete_zero: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// The zero-completed semi-flower automaton of a code
    FhatX {
        /// Code file, or an inline `A^k minus <u>` expression
        #[arg(long)]
        code: String,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[command(subcommand)]
    pub task: AnalyzeTask,
}

#[derive(Debug, Args)]
pub struct AnalyzeCommon {
    /// Automaton document to analyze
    #[arg(long = "in", value_name = "PATH")]
    pub input: PathBuf,
    /// Predicate to test; exit 0 when it holds, 1 otherwise
    #[arg(long)]
    pub check: Option<String>,
    /// Cap on the state count admitted to subset searches
    /// (overrides SYNCHRO_STATE_CAP)
    #[arg(long)]
    pub state_cap: Option<usize>,
    /// Machine-readable output
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum AnalyzeTask {
    /// Shortest reset word (checks: len=N, word=W, sync=true|false)
    Reset(AnalyzeCommon),
    /// Synchronizability (checks: true, false)
    Sync(AnalyzeCommon),
    /// Properness: every letter essential (checks: true, false)
    Proper(AnalyzeCommon),
    /// Zero-state scan (checks: present, absent, id=N)
    Zero(AnalyzeCommon),
}

#[derive(Debug, Args)]
pub struct WordsArgs {
    #[command(subcommand)]
    pub task: WordsTask,
}

#[derive(Debug, Subcommand)]
pub enum WordsTask {
    /// Is the word unbordered?
    Unbordered {
        #[arg(long)]
        word: String,
        /// Alphabet symbols; inferred from the word when omitted
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Is the word a factor of some product of code words?
    Completable {
        #[arg(long)]
        word: String,
        /// Code file, or an inline `A^k minus <u>` expression
        #[arg(long)]
        code: String,
        /// Alphabet for inline code expressions
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Incompletability for A^k minus {u} by the residue criterion, with
    /// the decomposition, partial sums and forbidden sets spelled out
    IncompletableCriterion {
        /// Unbordered base word, |u| >= 2
        #[arg(long)]
        u: String,
        #[arg(long)]
        word: String,
        /// Alphabet symbols; inferred from u and the word when omitted
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
    },
    /// Shortest word no product of code words covers
    ShortestIncompletable {
        /// Code file, or an inline `A^k minus <u>` expression
        #[arg(long)]
        code: String,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        state_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// The padded word (u pad)^(k-1) u of length k²+k−1
    Restivo {
        #[arg(long)]
        u: String,
        /// Padding letter; defaults to the first alphabet symbol
        #[arg(long)]
        pad: Option<String>,
        #[arg(long)]
        alphabet: Option<String>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub suite: VerifySuite,
}

#[derive(Debug, Subcommand)]
pub enum VerifySuite {
    /// Reset lengths k²+k−1 = n²/4+n/2−1 of the 2k-state family
    #[command(name = "theorem2")]
    Theorem2 {
        /// k range, e.g. `2..6` or `3`
        #[arg(long, default_value = "2..6")]
        k: String,
        /// Comma-separated alphabet sizes
        #[arg(long, default_value = "2,3")]
        alphabet_sizes: String,
        #[arg(long)]
        state_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Shortest incompletable lengths k²+k−1 for A^k minus {u}
    #[command(name = "prop2")]
    Prop2 {
        #[arg(long)]
        state_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Chain family reset lengths n(n−1)/2
    #[command(name = "fig1")]
    Fig1 {
        /// n range, e.g. `3..7`
        #[arg(long, default_value = "3..7")]
        n: String,
        #[arg(long)]
        state_cap: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Exhaustive agreement of the residue criterion, the completion
    /// oracle and the 2k-state automaton
    Equivalence {
        /// Unbordered base word
        #[arg(long, default_value = "ab")]
        u: String,
        #[arg(long)]
        alphabet: Option<String>,
        /// Check all words up to this length
        #[arg(long, default_value_t = 14)]
        max_len: usize,
        #[arg(long)]
        json: bool,
    },
}

pub struct CommandOutput {
    pub stdout: String,
    pub exit: u8,
}

impl CommandOutput {
    fn new(stdout: String, exit: u8) -> Self {
        CommandOutput { stdout, exit }
    }
}

pub fn run(cli: Cli) -> Result<CommandOutput, CliError> {
    match cli.command {
        Command::Build(args) => run_build(args.family),
        Command::Analyze(args) => run_analyze(args.task),
        Command::Words(args) => run_words(args.task),
        Command::Verify(args) => run_verify(args.suite),
    }
}

// ---------------------------------------------------------------------------
// shared helpers

fn parse_alphabet(text: &str) -> Result<Alphabet, CliError> {
    let alphabet = if text.contains(char::is_whitespace) {
        Alphabet::new(text.split_whitespace().map(str::to_string))
    } else {
        Alphabet::from_chars(text)
    }?;
    Ok(alphabet)
}

/// Alphabet from an explicit flag, or inferred as the sorted distinct
/// characters of the given word texts.
fn alphabet_for(flag: Option<&str>, word_texts: &[&str]) -> Result<Alphabet, CliError> {
    if let Some(text) = flag {
        return parse_alphabet(text);
    }
    let mut chars: Vec<char> = word_texts
        .iter()
        .flat_map(|t| t.chars())
        .filter(|c| !c.is_whitespace())
        .collect();
    chars.sort_unstable();
    chars.dedup();
    if chars.is_empty() {
        return Err(CliError::Input(
            "cannot infer an alphabet from empty words; pass --alphabet".into(),
        ));
    }
    Ok(Alphabet::new(chars.iter().map(|c| c.to_string()))?)
}

/// Resolves a `--code` value: an inline `A^<k> minus <word>` expression
/// (alphabet from the flag, or inferred from the word), or a path to a
/// code file.
fn resolve_code(source: &str, alphabet_flag: Option<&str>) -> Result<CodeSet, CliError> {
    let tokens: Vec<&str> = source.split_whitespace().collect();
    if tokens.len() == 3 && tokens[1] == "minus" {
        if let Some(k_text) = tokens[0].strip_prefix("A^") {
            let k: usize = k_text.parse().map_err(|_| {
                CliError::Input(format!("invalid block length `{k_text}` in code expression"))
            })?;
            let alphabet = alphabet_for(alphabet_flag, &[tokens[2]])?;
            let u = alphabet.parse_word(tokens[2])?;
            return Ok(CodeSet::full_block_minus(&alphabet, k, &u)?);
        }
    }
    let text = read_file(Path::new(source))?;
    Ok(CodeSet::from_text(&text)?)
}

fn read_file(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn resolve_cap(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(cap) = flag {
        return Ok(cap);
    }
    match std::env::var("SYNCHRO_STATE_CAP") {
        Ok(text) => text.trim().parse().map_err(|_| {
            CliError::Input(format!("invalid SYNCHRO_STATE_CAP value `{text}`"))
        }),
        Err(_) => Ok(DEFAULT_STATE_CAP),
    }
}

/// Re-renders precondition failures with the offending word spelled out in
/// alphabet symbols.
fn diagnose(err: Error, alphabet: &Alphabet) -> CliError {
    match err {
        Error::BorderedWord { border } => {
            let shown = alphabet
                .render_word(&border)
                .unwrap_or_else(|_| format!("{border:?}"));
            CliError::Input(format!("u is bordered: border '{shown}'"))
        }
        other => CliError::Core(other),
    }
}

fn render(alphabet: &Alphabet, word: &Word) -> String {
    alphabet
        .render_word(word)
        .unwrap_or_else(|_| format!("{word:?}"))
}

// ---------------------------------------------------------------------------
// build

fn run_build(family: BuildFamily) -> Result<CommandOutput, CliError> {
    match family {
        BuildFamily::FhatKu { alphabet, u, output } => {
            let alphabet = parse_alphabet(&alphabet)?;
            let u = alphabet.parse_word(&u)?;
            let dfa = build_fhat_k_u(&alphabet, &u).map_err(|e| diagnose(e, &alphabet))?;
            emit(AutomatonDocument::from_dfa(&dfa), dfa.to_dot(), &output)
        }
        BuildFamily::Chain { n, output } => {
            let dfa = build_chain_zero(n)?;
            emit(AutomatonDocument::from_dfa(&dfa), dfa.to_dot(), &output)
        }
        BuildFamily::Semiflower {
            code,
            complete_zero,
            output,
        } => {
            let code = resolve_code(&code, None)?;
            let mut nfa = semi_flower(&code);
            if complete_zero {
                nfa = complete_with_zero(&nfa)?;
            }
            emit(AutomatonDocument::from_nfa(&nfa), nfa.to_dot(), &output)
        }
        BuildFamily::FhatX { code, output } => {
            let code = resolve_code(&code, None)?;
            let nfa = fhat(&code);
            emit(AutomatonDocument::from_nfa(&nfa), nfa.to_dot(), &output)
        }
    }
}

fn emit(
    doc: AutomatonDocument,
    dot: String,
    output: &OutputArgs,
) -> Result<CommandOutput, CliError> {
    if let Some(path) = &output.dot {
        write_file(path, &dot)?;
    }
    match &output.out {
        Some(path) => {
            write_file(path, &doc.to_json())?;
            let kind = match doc.kind {
                crate::document::DocKind::Dfa => "dfa",
                crate::document::DocKind::Nfa => "nfa",
            };
            Ok(CommandOutput::new(
                format!("wrote {}-state {} document to {}\n", doc.states, kind, path.display()),
                0,
            ))
        }
        None => Ok(CommandOutput::new(doc.to_json(), 0)),
    }
}

// ---------------------------------------------------------------------------
// analyze

fn load_dfa(path: &Path) -> Result<Dfa, CliError> {
    AutomatonDocument::from_json(&read_file(path)?)?.to_dfa()
}

fn check_outcome(matched: bool) -> u8 {
    if matched {
        0
    } else {
        1
    }
}

fn run_analyze(task: AnalyzeTask) -> Result<CommandOutput, CliError> {
    match task {
        AnalyzeTask::Reset(common) => {
            let dfa = load_dfa(&common.input)?;
            let cap = resolve_cap(common.state_cap)?;
            let result = dfa.shortest_reset_word_capped(cap)?;
            let rendered = result.as_ref().map(|w| render(dfa.alphabet(), w));
            let length = result.as_ref().map(Word::len);

            let stdout = if common.json {
                let mut value = serde_json::json!({
                    "task": "reset",
                    "synchronizing": result.is_some(),
                });
                if let (Some(word), Some(len)) = (&rendered, length) {
                    value["word"] = serde_json::json!(word);
                    value["length"] = serde_json::json!(len);
                }
                format!("{value:#}\n")
            } else {
                match (&rendered, length) {
                    (Some(word), Some(len)) => {
                        format!("shortest reset word: {word} (length {len})\n")
                    }
                    _ => "not synchronizing\n".to_string(),
                }
            };

            let exit = match &common.check {
                None => check_outcome(result.is_some()),
                Some(expr) => {
                    let matched = match expr.split_once('=') {
                        Some(("len", value)) => {
                            length.map(|l| l.to_string()) == Some(value.to_string())
                        }
                        Some(("word", value)) => rendered.as_deref() == Some(value),
                        Some(("sync", value)) => result.is_some().to_string() == value,
                        _ => {
                            return Err(CliError::Input(format!(
                                "unknown reset check `{expr}` (use len=N, word=W or sync=BOOL)"
                            )))
                        }
                    };
                    check_outcome(matched)
                }
            };
            Ok(CommandOutput::new(stdout, exit))
        }
        AnalyzeTask::Sync(common) => {
            let dfa = load_dfa(&common.input)?;
            let value = dfa.is_synchronizing();
            boolean_report("synchronizing", value, &common)
        }
        AnalyzeTask::Proper(common) => {
            let dfa = load_dfa(&common.input)?;
            let value = dfa.is_proper()?;
            boolean_report("proper", value, &common)
        }
        AnalyzeTask::Zero(common) => {
            let dfa = load_dfa(&common.input)?;
            let scan = dfa.find_zero_state();
            let stdout = if common.json {
                let value = match &scan {
                    ZeroScan::Unique(id) => serde_json::json!({
                        "task": "zero", "present": true, "id": id,
                    }),
                    ZeroScan::Absent => serde_json::json!({
                        "task": "zero", "present": false,
                    }),
                    ZeroScan::Multiple(ids) => serde_json::json!({
                        "task": "zero", "present": false, "all_loop_states": ids,
                    }),
                };
                format!("{value:#}\n")
            } else {
                match &scan {
                    ZeroScan::Unique(id) => format!("zero: {id}\n"),
                    ZeroScan::Absent => "zero: absent\n".to_string(),
                    ZeroScan::Multiple(ids) => {
                        let list: Vec<String> = ids.iter().map(usize::to_string).collect();
                        format!(
                            "zero: absent (multiple all-loop states: {}; not synchronizable)\n",
                            list.join(", ")
                        )
                    }
                }
            };
            let exit = match &common.check {
                None => check_outcome(scan.unique().is_some()),
                Some(expr) => {
                    let matched = match (expr.as_str(), expr.split_once('=')) {
                        ("present", _) => scan.unique().is_some(),
                        ("absent", _) => scan.unique().is_none(),
                        (_, Some(("id", value))) => {
                            scan.unique().map(|id| id.to_string()) == Some(value.to_string())
                        }
                        _ => {
                            return Err(CliError::Input(format!(
                                "unknown zero check `{expr}` (use present, absent or id=N)"
                            )))
                        }
                    };
                    check_outcome(matched)
                }
            };
            Ok(CommandOutput::new(stdout, exit))
        }
    }
}

fn boolean_report(
    name: &str,
    value: bool,
    common: &AnalyzeCommon,
) -> Result<CommandOutput, CliError> {
    let stdout = if common.json {
        format!("{:#}\n", serde_json::json!({ "task": name, "value": value }))
    } else {
        format!("{name}: {value}\n")
    };
    let exit = match &common.check {
        None => check_outcome(value),
        Some(expr) => match expr.as_str() {
            "true" => check_outcome(value),
            "false" => check_outcome(!value),
            _ => {
                return Err(CliError::Input(format!(
                    "unknown {name} check `{expr}` (use true or false)"
                )))
            }
        },
    };
    Ok(CommandOutput::new(stdout, exit))
}

// ---------------------------------------------------------------------------
// words

fn run_words(task: WordsTask) -> Result<CommandOutput, CliError> {
    match task {
        WordsTask::Unbordered {
            word,
            alphabet,
            json,
        } => {
            let alphabet = alphabet_for(alphabet.as_deref(), &[&word])?;
            let w = alphabet.parse_word(&word)?;
            let border = w.shortest_border()?;
            let stdout = match (&border, json) {
                (None, false) => "unbordered: true\n".to_string(),
                (Some(b), false) => {
                    format!("unbordered: false (border: {})\n", render(&alphabet, b))
                }
                (b, true) => {
                    let mut value = serde_json::json!({
                        "task": "unbordered",
                        "word": render(&alphabet, &w),
                        "unbordered": b.is_none(),
                    });
                    if let Some(b) = b {
                        value["border"] = serde_json::json!(render(&alphabet, b));
                    }
                    format!("{value:#}\n")
                }
            };
            Ok(CommandOutput::new(stdout, check_outcome(border.is_none())))
        }
        WordsTask::Completable {
            word,
            code,
            alphabet,
            json,
        } => {
            let code = resolve_code(&code, alphabet.as_deref())?;
            let w = code.alphabet().parse_word(&word)?;
            let value = code.is_completable(&w)?;
            let stdout = if json {
                format!(
                    "{:#}\n",
                    serde_json::json!({
                        "task": "completable",
                        "word": render(code.alphabet(), &w),
                        "completable": value,
                    })
                )
            } else {
                format!("completable: {value}\n")
            };
            Ok(CommandOutput::new(stdout, check_outcome(value)))
        }
        WordsTask::IncompletableCriterion {
            u,
            word,
            alphabet,
            json,
        } => {
            let alphabet = alphabet_for(alphabet.as_deref(), &[&u, &word])?;
            let u_word = alphabet.parse_word(&u)?;
            let w = alphabet.parse_word(&word)?;
            criterion_report(&alphabet, &u_word, &w, json)
        }
        WordsTask::ShortestIncompletable {
            code,
            alphabet,
            state_cap,
            json,
        } => {
            let code = resolve_code(&code, alphabet.as_deref())?;
            let cap = resolve_cap(state_cap)?;
            let witness = code.shortest_incompletable_word_capped(cap)?;
            let stdout = match (&witness, json) {
                (Some(w), false) => format!(
                    "shortest incompletable word: {} (length {})\n",
                    render(code.alphabet(), w),
                    w.len()
                ),
                (None, false) => "code is complete: every word is completable\n".to_string(),
                (w, true) => {
                    let value = match w {
                        Some(w) => serde_json::json!({
                            "task": "shortest-incompletable",
                            "complete": false,
                            "word": render(code.alphabet(), w),
                            "length": w.len(),
                        }),
                        None => serde_json::json!({
                            "task": "shortest-incompletable",
                            "complete": true,
                        }),
                    };
                    format!("{value:#}\n")
                }
            };
            Ok(CommandOutput::new(stdout, check_outcome(witness.is_some())))
        }
        WordsTask::Restivo {
            u,
            pad,
            alphabet,
            json,
        } => {
            let alphabet = alphabet_for(alphabet.as_deref(), &[&u])?;
            let u_word = alphabet.parse_word(&u)?;
            let pad_letter = match pad {
                Some(symbol) => alphabet.index_of(symbol.trim())?,
                None => 0,
            };
            let w = restivo_word(&u_word, pad_letter, u_word.len())?;
            let stdout = if json {
                format!(
                    "{:#}\n",
                    serde_json::json!({
                        "task": "restivo",
                        "u": render(&alphabet, &u_word),
                        "pad": alphabet.symbol(pad_letter)?.to_string(),
                        "word": render(&alphabet, &w),
                        "length": w.len(),
                    })
                )
            } else {
                format!("{}\nlength: {}\n", render(&alphabet, &w), w.len())
            };
            Ok(CommandOutput::new(stdout, 0))
        }
    }
}

fn criterion_report(
    alphabet: &Alphabet,
    u: &Word,
    w: &Word,
    json: bool,
) -> Result<CommandOutput, CliError> {
    let k = u.len();
    let incompletable =
        is_incompletable_xku(w, u, alphabet).map_err(|e| diagnose(e, alphabet))?;
    let parts = decompose_by(w, u).map_err(|e| diagnose(e, alphabet))?;
    let sums = partial_sums(&parts);
    let forbidden = if parts.occurrences() >= 2 {
        Some(synchro_core::forbidden_sets_recurrence(u, k, &parts)?)
    } else {
        None
    };

    if json {
        let mut value = serde_json::json!({
            "task": "incompletable-criterion",
            "u": render(alphabet, u),
            "k": k,
            "word": render(alphabet, w),
            "occurrences": parts.occurrences(),
            "parts": parts.parts().iter().map(|p| render(alphabet, p)).collect::<Vec<_>>(),
            "partial_sums": sums,
            "incompletable": incompletable,
        });
        if let Some(sets) = &forbidden {
            value["forbidden_sets"] = serde_json::json!(sets
                .sets()
                .iter()
                .map(|s| s.iter().copied().collect::<Vec<_>>())
                .collect::<Vec<_>>());
        }
        return Ok(CommandOutput::new(
            format!("{value:#}\n"),
            check_outcome(incompletable),
        ));
    }

    let mut out = String::new();
    out.push_str(&format!("u = {} (k = {k})\n", render(alphabet, u)));
    out.push_str(&format!("w = {}\n", render(alphabet, w)));
    out.push_str(&format!("occurrences of u: {}\n", parts.occurrences()));
    let shown: Vec<String> = parts
        .parts()
        .iter()
        .enumerate()
        .map(|(i, p)| format!("v{i} = {}", render(alphabet, p)))
        .collect();
    out.push_str(&format!("decomposition: {}\n", shown.join(", ")));
    if parts.occurrences() < 2 {
        out.push_str("fewer than two occurrences: always completable\n");
    } else {
        let sums_shown: Vec<String> = sums.iter().map(usize::to_string).collect();
        out.push_str(&format!("partial sums: {{{}}}\n", sums_shown.join(", ")));
        if let Some(sets) = &forbidden {
            let sets_shown: Vec<String> = sets
                .sets()
                .iter()
                .enumerate()
                .map(|(i, s)| {
                    let inner: Vec<String> = s.iter().map(usize::to_string).collect();
                    format!("S{} = {{{}}}", i + 1, inner.join(", "))
                })
                .collect();
            out.push_str(&format!("forbidden sets: {}\n", sets_shown.join(", ")));
        }
    }
    out.push_str(&format!("incompletable: {incompletable}\n"));
    Ok(CommandOutput::new(out, check_outcome(incompletable)))
}

// ---------------------------------------------------------------------------
// verify

fn parse_range(text: &str) -> Result<RangeInclusive<usize>, CliError> {
    let bounds: Vec<&str> = text.split("..").collect();
    let err = || CliError::Input(format!("invalid range `{text}` (use `lo..hi` or a single value)"));
    match bounds.as_slice() {
        [single] => {
            let v: usize = single.trim().parse().map_err(|_| err())?;
            Ok(v..=v)
        }
        [lo, hi] => {
            let lo: usize = lo.trim().parse().map_err(|_| err())?;
            let hi: usize = hi.trim().parse().map_err(|_| err())?;
            if lo > hi {
                return Err(err());
            }
            Ok(lo..=hi)
        }
        _ => Err(err()),
    }
}

fn parse_size_list(text: &str) -> Result<Vec<usize>, CliError> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse()
                .map_err(|_| CliError::Input(format!("invalid size list `{text}`")))
        })
        .collect()
}

/// The unbordered base word used by the length suites: the canonical
/// all-letters word when `k` admits one, otherwise the canonical word over
/// the first `k` letters (the length claims do not need every letter).
fn suite_base_word(alphabet: &Alphabet, k: usize) -> Result<Word, CliError> {
    let word = if k >= alphabet.size() {
        canonical_unbordered_with_all_letters(alphabet, k)?
    } else {
        let sub = Alphabet::latin(k)?;
        canonical_unbordered_with_all_letters(&sub, k)?
    };
    Ok(word)
}

fn length_row(
    point: String,
    expected: usize,
    outcome: Result<Option<Word>, Error>,
    alphabet: &Alphabet,
) -> Result<GridRow, CliError> {
    let row = match outcome {
        Ok(Some(word)) => {
            let measured = word.len();
            GridRow {
                point,
                expected: Some(expected),
                measured: Some(measured),
                witness: Some(render(alphabet, &word)),
                detail: None,
                status: if measured == expected {
                    RowStatus::Pass
                } else {
                    RowStatus::Fail
                },
            }
        }
        Ok(None) => GridRow {
            point,
            expected: Some(expected),
            measured: None,
            witness: None,
            detail: Some("no witness found".into()),
            status: RowStatus::Fail,
        },
        Err(Error::StateCapExceeded { n_states, cap }) => GridRow {
            point,
            expected: Some(expected),
            measured: None,
            witness: None,
            detail: Some(format!("skipped: state cap exceeded ({n_states} > {cap})")),
            status: RowStatus::Skipped,
        },
        Err(other) => return Err(other.into()),
    };
    Ok(row)
}

fn finish_report(report: VerificationReport, json: bool) -> CommandOutput {
    let exit = if report.all_pass() { 0 } else { 1 };
    let stdout = if json {
        report.to_json()
    } else {
        report.to_text()
    };
    CommandOutput::new(stdout, exit)
}

fn run_verify(suite: VerifySuite) -> Result<CommandOutput, CliError> {
    match suite {
        VerifySuite::Theorem2 {
            k,
            alphabet_sizes,
            state_cap,
            json,
        } => {
            let cap = resolve_cap(state_cap)?;
            let mut rows = Vec::new();
            for m in parse_size_list(&alphabet_sizes)? {
                let alphabet = Alphabet::latin(m)?;
                for k in parse_range(&k)? {
                    if k < 2 {
                        return Err(CliError::Input("k must be at least 2".into()));
                    }
                    let u = suite_base_word(&alphabet, k)?;
                    let dfa = build_fhat_k_u(&alphabet, &u)?;
                    rows.push(length_row(
                        format!("k={k} m={m} u={}", render(&alphabet, &u)),
                        k * k + k - 1,
                        dfa.shortest_reset_word_capped(cap),
                        &alphabet,
                    )?);
                }
            }
            Ok(finish_report(
                VerificationReport::new("theorem2: reset length of the 2k-state family", rows),
                json,
            ))
        }
        VerifySuite::Prop2 { state_cap, json } => {
            let cap = resolve_cap(state_cap)?;
            let grid: Vec<(usize, &str, &str)> = vec![
                (2, "ab", "ab"),
                (2, "aab", "ab"),
                (2, "abb", "ab"),
                (3, "ab", "abc"),
            ];
            let mut rows = Vec::new();
            for (_, u_text, symbols) in grid {
                let alphabet = Alphabet::from_chars(symbols)?;
                let u = alphabet.parse_word(u_text)?;
                let k = u.len();
                let code = CodeSet::full_block_minus(&alphabet, k, &u)?;
                rows.push(length_row(
                    format!("k={k} |A|={} u={u_text}", alphabet.size()),
                    k * k + k - 1,
                    code.shortest_incompletable_word_capped(cap),
                    &alphabet,
                )?);
            }
            Ok(finish_report(
                VerificationReport::new("prop2: shortest incompletable word lengths", rows),
                json,
            ))
        }
        VerifySuite::Fig1 { n, state_cap, json } => {
            let cap = resolve_cap(state_cap)?;
            let mut rows = Vec::new();
            for n in parse_range(&n)? {
                if n < 3 {
                    return Err(CliError::Input("n must be at least 3".into()));
                }
                let dfa = build_chain_zero(n)?;
                let alphabet = dfa.alphabet().clone();
                rows.push(length_row(
                    format!("n={n}"),
                    n * (n - 1) / 2,
                    dfa.shortest_reset_word_capped(cap),
                    &alphabet,
                )?);
            }
            Ok(finish_report(
                VerificationReport::new("fig1: chain family reset lengths", rows),
                json,
            ))
        }
        VerifySuite::Equivalence {
            u,
            alphabet,
            max_len,
            json,
        } => {
            let alphabet = alphabet_for(alphabet.as_deref(), &[&u])?;
            let u = alphabet.parse_word(&u).map_err(CliError::Core)?;
            let k = u.len();
            let code = CodeSet::full_block_minus(&alphabet, k, &u)?;
            let flower = semi_flower(&code);
            let full = StateSet::full(flower.n_states());
            let dfa = build_fhat_k_u(&alphabet, &u).map_err(|e| diagnose(e, &alphabet))?;
            let m = alphabet.size();

            let mut rows = Vec::new();
            let mut frontier: Vec<Word> = vec![Word::empty()];
            for len in 0..=max_len {
                let mut incompletable = 0usize;
                let mut mismatch: Option<String> = None;
                for w in &frontier {
                    let by_criterion = is_incompletable_xku(w, &u, &alphabet)?;
                    let by_flower = flower.image(&full, w)?.is_empty();
                    let by_automaton = dfa.is_reset_word(w)?;
                    if by_criterion != by_flower || by_flower != by_automaton {
                        mismatch.get_or_insert_with(|| render(&alphabet, w));
                    }
                    if by_criterion {
                        incompletable += 1;
                    }
                }
                let detail = match &mismatch {
                    Some(word) => format!(
                        "{} words, {incompletable} incompletable, first disagreement: {word}",
                        frontier.len()
                    ),
                    None => format!("{} words, {incompletable} incompletable", frontier.len()),
                };
                rows.push(GridRow {
                    point: format!("len={len}"),
                    expected: None,
                    measured: None,
                    witness: None,
                    detail: Some(detail),
                    status: if mismatch.is_none() {
                        RowStatus::Pass
                    } else {
                        RowStatus::Fail
                    },
                });
                if len < max_len {
                    let mut next = Vec::with_capacity(frontier.len() * m);
                    for w in &frontier {
                        for letter in 0..m {
                            let mut longer = w.clone();
                            longer.push(letter);
                            next.push(longer);
                        }
                    }
                    frontier = next;
                }
            }
            Ok(finish_report(
                VerificationReport::new(
                    format!(
                        "equivalence: criterion = completion oracle = reset automaton, u={}",
                        render(&alphabet, &u)
                    ),
                    rows,
                ),
                json,
            ))
        }
    }
}
