//! Command-line front end. [`run`] is the whole program minus process
//! exit, so tests can drive it directly.

use std::fmt::Write as _;
use std::fs;

use braidforge_core::braidlab::{
    self, element, expand, forget_strand, goldberg_project, make_transvection, pscr_words, ptr_word,
    strongly_free_certificate, torus_center_action, verify_aut_b2a_presentation, verify_homomorphism, Certificate,
    HomStatus, Homomorphism, NamedSymbol, TransvectionOutcome, TransvectionParams,
};
use braidforge_core::enumeration::{
    pure_subgroup_table, reidemeister_schreier, rewrite_word, todd_coxeter, CosetTable, EnumerationStatus,
    DEFAULT_MAX_COSETS,
};
use braidforge_core::oracles::{battery, check_equal, OracleContext, Value};
use braidforge_core::perm::induced_permutation;
use braidforge_core::presentations::{
    abelianize, braid_presentation, purity_test, Presentation, Purity, SurfaceParams,
};
use braidforge_core::{format_word, parse_word_any, Alphabet, GenSym, Word};
use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::format::{load_images, load_presentation, save_presentation};
use crate::soundness;

pub const MAX_COSETS_ENV: &str = "BRAIDFORGE_MAX_COSETS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Refuted,
    Aborted,
    Error,
}

impl Status {
    fn as_str(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Refuted => "refuted",
            Status::Aborted => "aborted",
            Status::Error => "error",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub status: Status,
    pub payload: String,
    pub exit_code: i32,
}

impl CommandResult {
    /// Value of `key` on the closing summary line.
    pub fn summary_value(&self, key: &str) -> Option<&str> {
        let last = self.payload.lines().last()?;
        last.split_whitespace().find_map(|kv| kv.strip_prefix(key)?.strip_prefix('='))
    }
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Domain(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("IoError: {0}")]
    Io(#[from] std::io::Error),
}

fn domain<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Domain(e.to_string())
}

#[derive(Parser, Debug)]
#[command(name = "braidforge", about = "Surface braid group workbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Surface {
    #[arg(long, default_value_t = 0)]
    g: u32,
    #[arg(long, default_value_t = 0)]
    p: u32,
    #[arg(long)]
    n: u32,
}

impl Surface {
    fn params(self) -> SurfaceParams {
        SurfaceParams::new(self.g, self.p, self.n)
    }
}

#[derive(Subcommand, Debug)]
enum PresentKind {
    /// The presentation of B_n(Σ_{g,p}).
    Bn {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        out: Option<String>,
    },
    /// A presentation of P_n(Σ_{g,p}) by Reidemeister–Schreier rewriting.
    PnRs {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        out: Option<String>,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
enum OracleKind {
    Free,
    Artin,
    Dehn,
    B2a,
    Torus,
    Goldberg,
    Homology,
    Perm,
    All,
}

#[derive(Args, Debug, Clone, Copy)]
struct OptSurface {
    #[arg(long)]
    g: Option<u32>,
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print a presentation.
    Present {
        #[command(subcommand)]
        kind: PresentKind,
    },
    /// Abelian invariants of a presentation file or of B_n(Σ_{g,p}).
    Abelianize {
        file: Option<String>,
        #[arg(long, num_args = 3, value_names = ["G", "P", "N"])]
        bn: Option<Vec<u32>>,
    },
    /// The mod-2 projection of H_1(B_2(Σ_{g,p})) detecting the permutation.
    Purity {
        #[arg(long)]
        g: u32,
        #[arg(long)]
        p: u32,
    },
    /// Todd–Coxeter enumeration.
    Enumerate {
        file: Option<String>,
        #[arg(long, num_args = 3, value_names = ["G", "P", "N"])]
        bn: Option<Vec<u32>>,
        #[arg(long)]
        max_cosets: Option<usize>,
        #[arg(long, num_args = 1..)]
        subgroup: Vec<String>,
    },
    /// Coset table of the pure braid group.
    PureTable {
        #[command(flatten)]
        surface: Surface,
    },
    /// Rewrite a pure braid over the Schreier generators.
    RsRewrite {
        #[command(flatten)]
        surface: Surface,
        word: String,
    },
    /// Freely reduce a word.
    Reduce { word: String },
    /// Induced permutation.
    Rho {
        #[arg(long)]
        n: u32,
        word: String,
    },
    /// Compare two words with an oracle.
    CheckEq {
        #[arg(long, value_enum)]
        oracle: OracleKind,
        #[command(flatten)]
        surface: OptSurface,
        u: String,
        v: String,
    },
    /// The word of a named element.
    Element {
        #[command(flatten)]
        surface: Surface,
        symbol: String,
    },
    /// The (PTR) word of strand i.
    Ptr {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        i: u32,
    },
    /// The (PSCR) words.
    Pscr {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        i: u32,
        #[arg(long)]
        r: u32,
    },
    /// Goldberg projection of a word.
    Project {
        #[command(flatten)]
        surface: Surface,
        word: String,
    },
    /// Forget strand i of an X-alphabet word.
    Forget {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        i: u32,
        word: String,
    },
    /// Homology certificate for a subset of X_i.
    StronglyFree {
        #[command(flatten)]
        surface: Surface,
        #[arg(long)]
        i: u32,
        #[arg(required = true)]
        symbols: Vec<String>,
    },
    /// Transvection of B_n(T) with the given exponents.
    Transvection {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true)]
        x1: i64,
        #[arg(long, allow_hyphen_values = true)]
        y1: i64,
        #[arg(long, allow_hyphen_values = true)]
        x2: i64,
        #[arg(long, allow_hyphen_values = true)]
        y2: i64,
        #[arg(long)]
        verify: bool,
    },
    /// Push source relators through generator images.
    VerifyHom {
        #[arg(long)]
        source: String,
        #[arg(long)]
        images: String,
        #[arg(long, value_enum, num_args = 1.., required = true)]
        oracle: Vec<OracleKind>,
        #[command(flatten)]
        surface: OptSurface,
    },
    /// Named automorphisms of B_2(A).
    AutB2a {
        #[arg(long)]
        verify_presentation: bool,
    },
    /// The σ1 ↔ ζ1 swap of B_2(A).
    SwapCheck,
    /// Seeded oracle cross-checks.
    Soundness {
        #[arg(long, default_value_t = soundness::DEFAULT_SEED)]
        seed: u64,
        #[arg(long, default_value_t = 1000)]
        pairs: usize,
    },
}

struct Out {
    text: String,
}

impl Out {
    fn new() -> Out {
        Out { text: String::new() }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn finish(mut self, status: Status, summary: &[(&str, String)]) -> CommandResult {
        let mut last = format!("status={}", status.as_str());
        for (k, v) in summary {
            let _ = write!(last, " {k}={v}");
        }
        self.line(last);
        let exit_code = match status {
            Status::Ok => 0,
            Status::Refuted | Status::Aborted => 1,
            Status::Error => 2,
        };
        CommandResult { status, payload: self.text, exit_code }
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
            if code == 0 {
                return CommandResult { status: Status::Ok, payload: e.to_string(), exit_code: 0 };
            }
            let mut out = Out::new();
            out.text.push_str(&e.render().to_string());
            out.line("");
            out.text.push_str(&Cli::command().render_help().to_string());
            return out.finish(Status::Error, &[("error", "usage".to_string())]);
        }
    };
    match dispatch(cli.command) {
        Ok(r) => r,
        Err(e) => {
            let mut out = Out::new();
            out.line(e.to_string());
            let kind = match &e {
                CliError::Usage(_) => "usage",
                CliError::Domain(_) => "domain",
                CliError::Io(_) => "io",
            };
            out.finish(Status::Error, &[("error", kind.to_string())])
        }
    }
}

fn word(text: &str) -> Result<Word, CliError> {
    parse_word_any(text).map_err(domain)
}

fn read_presentation(file: Option<&str>, bn: Option<&[u32]>) -> Result<Presentation, CliError> {
    match (file, bn) {
        (Some(path), None) => load_presentation(&fs::read_to_string(path)?).map_err(domain),
        (None, Some([g, p, n])) => Ok(braid_presentation(SurfaceParams::new(*g, *p, *n))),
        _ => Err(CliError::Usage("give exactly one of FILE or --bn G P N".into())),
    }
}

fn max_cosets(flag: Option<usize>) -> Result<usize, CliError> {
    if let Some(m) = flag {
        return Ok(m);
    }
    match std::env::var(MAX_COSETS_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| CliError::Usage(format!("{MAX_COSETS_ENV} must be a positive integer"))),
        Err(_) => Ok(DEFAULT_MAX_COSETS),
    }
}

fn list<T: std::fmt::Display>(items: &[T]) -> String {
    let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
    format!("[{}]", parts.join(","))
}

fn dispatch(cmd: Command) -> Result<CommandResult, CliError> {
    let mut out = Out::new();
    match cmd {
        Command::Present { kind: PresentKind::Bn { surface, out: file } } => {
            let p = braid_presentation(surface.params());
            let text = save_presentation(&p);
            if let Some(path) = file {
                fs::write(&path, &text)?;
            }
            out.text.push_str(&text);
            Ok(out.finish(
                Status::Ok,
                &[("generators", p.generators().len().to_string()), ("relators", p.relators().len().to_string())],
            ))
        }
        Command::Present { kind: PresentKind::PnRs { surface, out: file } } => {
            let t = pure_subgroup_table(surface.params(), DEFAULT_MAX_COSETS).map_err(domain)?;
            let rp = reidemeister_schreier(&t).map_err(domain)?;
            let p = rp.to_presentation(&format!("P_{}(Sigma_{},{})", surface.n, surface.g, surface.p));
            let mut text = String::new();
            for (alias, def) in &rp.schreier_generators {
                let _ = writeln!(text, "# {alias} = {}", format_word(def));
            }
            text.push_str(&save_presentation(&p));
            if let Some(path) = file {
                fs::write(&path, &text)?;
            }
            out.text.push_str(&text);
            Ok(out.finish(
                Status::Ok,
                &[
                    ("index", t.index().unwrap_or(0).to_string()),
                    ("generators", p.generators().len().to_string()),
                    ("relators", p.relators().len().to_string()),
                ],
            ))
        }
        Command::Abelianize { file, bn } => {
            let p = read_presentation(file.as_deref(), bn.as_deref())?;
            let ab = abelianize(&p);
            out.line(format!("H1 = {}", ab.invariants));
            Ok(out.finish(
                Status::Ok,
                &[("free_rank", ab.invariants.free_rank.to_string()), ("torsion", list(&ab.invariants.torsion))],
            ))
        }
        Command::Purity { g, p } => match purity_test(SurfaceParams::new(g, p, 2)).map_err(domain)? {
            Purity::Map(map) => {
                for (sym, bit) in &map.torsion_projection {
                    out.line(format!("{sym} -> {bit}"));
                }
                let kills = map.kills_relators();
                Ok(out.finish(
                    if kills { Status::Ok } else { Status::Refuted },
                    &[("purity", "map".into()), ("kills_relators", kills.to_string())],
                ))
            }
            Purity::NotApplicable(inv) => {
                out.line(format!("H1 = {inv}"));
                Ok(out.finish(Status::Ok, &[("purity", "not-applicable".into()), ("torsion", list(&inv.torsion))]))
            }
        },
        Command::Enumerate { file, bn, max_cosets: flag, subgroup } => {
            let p = read_presentation(file.as_deref(), bn.as_deref())?;
            let limit = max_cosets(flag)?;
            let subgroup = subgroup.iter().map(|s| word(s)).collect::<Result<Vec<_>, _>>()?;
            let t = todd_coxeter(&p, &subgroup, limit).map_err(domain)?;
            match t.status() {
                EnumerationStatus::Complete { index } => {
                    write_table(&mut out, &t);
                    Ok(out.finish(Status::Ok, &[("index", index.to_string())]))
                }
                EnumerationStatus::Aborted { limit } => {
                    out.line(format!("enumeration exceeded {limit} cosets"));
                    Ok(out.finish(Status::Aborted, &[("limit", limit.to_string())]))
                }
            }
        }
        Command::PureTable { surface } => {
            let t = pure_subgroup_table(surface.params(), max_cosets(None)?).map_err(domain)?;
            match t.status() {
                EnumerationStatus::Complete { index } => {
                    write_table(&mut out, &t);
                    Ok(out.finish(Status::Ok, &[("index", index.to_string())]))
                }
                EnumerationStatus::Aborted { limit } => {
                    Ok(out.finish(Status::Aborted, &[("limit", limit.to_string())]))
                }
            }
        }
        Command::RsRewrite { surface, word: text } => {
            let params = surface.params();
            let t = pure_subgroup_table(params, max_cosets(None)?).map_err(domain)?;
            let rp = reidemeister_schreier(&t).map_err(domain)?;
            let w = expand(params, &word(&text)?).map_err(domain)?;
            let r = rewrite_word(&rp, &t, &w).map_err(domain)?;
            let mut used: Vec<&GenSym> = Vec::new();
            for s in r.symbols() {
                if !used.contains(&s) {
                    used.push(s);
                }
            }
            for s in used {
                if let Some((_, def)) = rp.schreier_generators.iter().find(|(a, _)| a == s) {
                    out.line(format!("{s} = {}", format_word(def)));
                }
            }
            out.line(format_word(&r));
            Ok(out.finish(Status::Ok, &[("word", format_word(&r))]))
        }
        Command::Reduce { word: text } => {
            let w = word(&text)?;
            out.line(format_word(&w));
            Ok(out.finish(Status::Ok, &[("length", w.letter_len().to_string())]))
        }
        Command::Rho { n, word: text } => {
            let p = induced_permutation(n as usize, &word(&text)?)
                .map_err(|s| CliError::Domain(format!("UnknownGenerator: {s}")))?;
            out.line(p.to_string());
            let images: Vec<usize> = p.images().iter().map(|&x| x as usize + 1).collect();
            Ok(out.finish(Status::Ok, &[("images", list(&images))]))
        }
        Command::CheckEq { oracle, surface, u, v } => {
            let (u, v) = (word(&u)?, word(&v)?);
            let ctxs = contexts(oracle, surface, &[&u, &v], None)?;
            let verdict = check_equal(&ctxs, &u, &v).map_err(domain)?;
            for name in &verdict.passed {
                out.line(format!("passed {name}"));
            }
            for note in &verdict.skipped {
                out.line(format!("skipped {note}"));
            }
            out.line(verdict.to_string());
            let status = if verdict.value == Value::NotEqual { Status::Refuted } else { Status::Ok };
            Ok(out.finish(status, &[("verdict", verdict.value.to_string())]))
        }
        Command::Element { surface, symbol } => {
            let sym = NamedSymbol::parse(&symbol).map_err(domain)?;
            let e = element(surface.params(), sym).map_err(domain)?;
            out.line(format_word(&e.word));
            Ok(out.finish(Status::Ok, &[("symbol", e.symbol.to_string()), ("length", e.word.letter_len().to_string())]))
        }
        Command::Ptr { surface, i } => {
            let params = surface.params();
            let w = ptr_word(params, i).map_err(domain)?;
            out.line(format_word(&w));
            out.line(format!("expanded {}", format_word(&expand(params, &w).map_err(domain)?)));
            Ok(out.finish(Status::Ok, &[("length", w.letter_len().to_string())]))
        }
        Command::Pscr { surface, i, r } => {
            let params = surface.params();
            let (lhs, rhs1, rhs2) = pscr_words(params, i, r).map_err(domain)?;
            for (name, w) in [("lhs", &lhs), ("rhs1", &rhs1), ("rhs2", &rhs2)] {
                out.line(format!("{name} {}", format_word(w)));
                out.line(format!("{name}_expanded {}", format_word(&expand(params, w).map_err(domain)?)));
            }
            Ok(out.finish(Status::Ok, &[]))
        }
        Command::Project { surface, word: text } => {
            let factors = goldberg_project(surface.params(), &word(&text)?).map_err(domain)?;
            for (k, f) in factors.iter().enumerate() {
                out.line(format!("factor {} {}", k + 1, format_word(f)));
            }
            Ok(out.finish(Status::Ok, &[("factors", factors.len().to_string())]))
        }
        Command::Forget { surface, i, word: text } => {
            let w = forget_strand(surface.params(), i, &word(&text)?).map_err(domain)?;
            out.line(format_word(&w));
            Ok(out.finish(Status::Ok, &[("word", format_word(&w))]))
        }
        Command::StronglyFree { surface, i, symbols } => {
            let ys = symbols.iter().map(|s| GenSym::new(s).map_err(domain)).collect::<Result<Vec<_>, _>>()?;
            match strongly_free_certificate(surface.params(), i, &ys).map_err(domain)? {
                Certificate::Certified(m) => {
                    out.line(format!("certified: free abelian of rank {m}"));
                    Ok(out.finish(Status::Ok, &[("certificate", "certified".into()), ("rank", m.to_string())]))
                }
                Certificate::NotCertified { rank } => {
                    out.line(format!("not certified: rank {rank} < {}", ys.len()));
                    Ok(out.finish(Status::Ok, &[("certificate", "not-certified".into()), ("rank", rank.to_string())]))
                }
            }
        }
        Command::Transvection { n, x1, y1, x2, y2, verify } => {
            let tp = TransvectionParams { n, x1, y1, x2, y2 };
            let m = tp.matrix();
            out.line(format!("M = [[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1]));
            match make_transvection(tp) {
                TransvectionOutcome::Rejected { det, .. } => {
                    out.line("rejected: det(M) is not +1 or -1");
                    Ok(out.finish(Status::Refuted, &[("det", det.to_string())]))
                }
                TransvectionOutcome::Accepted { hom, matrix } => {
                    for (g, w) in hom.images() {
                        out.line(format!("img {g} {}", format_word(w)));
                    }
                    let mut summary = vec![("det", tp.determinant().to_string())];
                    let mut status = Status::Ok;
                    if verify {
                        let report = verify_homomorphism(&hom).map_err(domain)?;
                        write_hom_report(&mut out, &report);
                        let action = torus_center_action(&hom).map_err(domain)?;
                        out.line(format!(
                            "homology action = [[{}, {}], [{}, {}]]",
                            action[0][0], action[0][1], action[1][0], action[1][1]
                        ));
                        let law = braidlab::matrix_equals(&action, &matrix);
                        if matches!(report.status, HomStatus::Refuted { .. }) || !law {
                            status = Status::Refuted;
                        }
                        summary
                            .push(("relators", report.status.to_string().split(' ').next().unwrap_or("").to_string()));
                        summary.push(("matrix_law", law.to_string()));
                    }
                    Ok(out.finish(status, &summary))
                }
            }
        }
        Command::VerifyHom { source, images, oracle, surface } => {
            let src = load_presentation(&fs::read_to_string(&source)?).map_err(domain)?;
            let imgs = load_images(&fs::read_to_string(&images)?).map_err(domain)?;
            let words: Vec<&Word> = imgs.iter().map(|(_, w)| w).collect();
            let mut ctxs = Vec::new();
            for kind in oracle {
                ctxs.extend(contexts(kind, surface, &words, Some(&src))?);
            }
            let hom = Homomorphism::new(src, ctxs, imgs).map_err(domain)?;
            let report = verify_homomorphism(&hom).map_err(domain)?;
            write_hom_report(&mut out, &report);
            let status = match report.status {
                HomStatus::Refuted { .. } => Status::Refuted,
                _ => Status::Ok,
            };
            let label = match &report.status {
                HomStatus::Verified => "verified".to_string(),
                HomStatus::Consistent => "consistent".to_string(),
                HomStatus::Refuted { relator, .. } => format!("refuted relator={relator}"),
            };
            Ok(out.finish(status, &[("result", label)]))
        }
        Command::AutB2a { verify_presentation } => {
            for (name, h) in braidlab::b2a_automorphisms() {
                let imgs: Vec<String> = h.images().map(|(g, w)| format!("{g} -> {}", format_word(w))).collect();
                out.line(format!("{name}: {}", imgs.join(", ")));
            }
            if !verify_presentation {
                return Ok(out.finish(Status::Ok, &[("automorphisms", "5".into())]));
            }
            let report = verify_aut_b2a_presentation();
            for (name, status) in &report.automorphisms {
                out.line(format!("automorphism {name}: {status}"));
            }
            for (label, ok) in &report.relators {
                out.line(format!("relator {label}: {}", if *ok { "verified" } else { "FAILED" }));
            }
            for (k, nontrivial) in &report.pi_s_powers {
                out.line(format!("(pi s*)^{k} {}", if *nontrivial { "!= id" } else { "= id" }));
            }
            let ok = report.all_verified();
            Ok(out.finish(
                if ok { Status::Ok } else { Status::Refuted },
                &[("relators", report.relators.len().to_string()), ("verified", ok.to_string())],
            ))
        }
        Command::SwapCheck => {
            let r = braidlab::swap_automorphism_check();
            out.line(format!("relator: {}", r.relator_status));
            out.line(format!("rho(z1) = {}", r.rho_zeta));
            out.line(format!("rho(phi(z1)) = {}", r.rho_phi_zeta));
            out.line(format!("phi^2 = id: {}", r.involution));
            let ok = r.witnesses_non_characteristic();
            Ok(out.finish(
                if ok { Status::Ok } else { Status::Refuted },
                &[("relator", r.relator_status.to_string()), ("pure_preserved", (!ok).to_string())],
            ))
        }
        Command::Soundness { seed, pairs } => {
            let report = soundness::run(seed, pairs);
            for c in &report.checks {
                out.line(format!(
                    "{} {}: trials={} exact_equal={} failures={}",
                    if c.passed() { "PASS" } else { "FAIL" },
                    c.name,
                    c.trials,
                    c.exact_equal,
                    c.failures
                ));
                if let Some(f) = &c.first_failure {
                    out.line(format!("  first failure: {f}"));
                }
            }
            let ok = report.passed();
            Ok(out.finish(if ok { Status::Ok } else { Status::Refuted }, &[("seed", seed.to_string())]))
        }
    }
}

fn write_table(out: &mut Out, t: &CosetTable) {
    let gens = t.generators();
    let mut header = String::from("coset");
    for g in gens {
        let _ = write!(header, " {g} {g}^-1");
    }
    out.line(header);
    for c in 0..t.coset_count() {
        let mut row = format!("{}", c + 1);
        for col in 0..2 * gens.len() {
            let _ = write!(row, " {}", t.action(c, col).map(|d| d + 1).unwrap_or(0));
        }
        let _ = write!(row, " | {}", format_word(&t.transversal()[c]));
        out.line(row);
    }
}

fn write_hom_report(out: &mut Out, report: &braidlab::HomReport) {
    for (label, verdict) in &report.relators {
        out.line(format!("{label}: {verdict}"));
    }
    out.line(format!("overall: {}", report.status));
}

fn need(v: Option<u32>, what: &str, kind: OracleKind) -> Result<u32, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("--oracle {kind:?} needs --{what}").to_lowercase()))
}

fn contexts(
    kind: OracleKind,
    s: OptSurface,
    words: &[&Word],
    source: Option<&Presentation>,
) -> Result<Vec<OracleContext>, CliError> {
    Ok(match kind {
        OracleKind::Free => {
            let mut alpha = Alphabet::default();
            for w in words {
                for sym in w.symbols() {
                    alpha.insert(sym.clone());
                }
            }
            vec![OracleContext::FreeGroup(alpha)]
        }
        OracleKind::Artin => vec![OracleContext::ClassicalBraid(need(s.n, "n", kind)?)],
        OracleKind::Dehn => vec![OracleContext::ClosedSurface(need(s.g, "g", kind)?)],
        OracleKind::B2a => vec![OracleContext::B2A],
        OracleKind::Torus => vec![OracleContext::TorusZ2],
        OracleKind::Perm => vec![OracleContext::Permutation(need(s.n, "n", kind)?)],
        OracleKind::Goldberg => vec![OracleContext::GoldbergProduct(SurfaceParams::new(
            need(s.g, "g", kind)?,
            need(s.p, "p", kind)?,
            need(s.n, "n", kind)?,
        ))],
        OracleKind::Homology => match (s.g, s.p, s.n, source) {
            (Some(g), Some(p), Some(n), _) => {
                vec![OracleContext::Homology(abelianize(&braid_presentation(SurfaceParams::new(g, p, n))))]
            }
            (_, _, _, Some(src)) => vec![OracleContext::Homology(abelianize(src))],
            _ => return Err(CliError::Usage("--oracle homology needs --g --p --n".into())),
        },
        OracleKind::All => {
            battery(SurfaceParams::new(need(s.g, "g", kind)?, need(s.p, "p", kind)?, need(s.n, "n", kind)?))
        }
    })
}
