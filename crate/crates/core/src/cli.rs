//! Command-line front end: the code file format, subcommands and their reports.
//!
//! The binary is a thin wrapper around [`run`]; everything here produces plain
//! strings so reports can be compared byte for byte.
//!
//! Code file format (`#` starts a comment, blank lines are ignored):
//!
//! ```text
//! q 4 modulus 1,1,1     # or: q 2 m 2 modulus 1,1,1   or just: q 4
//! n 3
//! rows:
//! 1 0 2
//! 0 1 3
//! ```

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::codes::{CodeError, LinearCode, DEFAULT_ENUM_CAP};
use crate::gf::{is_prime, prime_power, FiniteField, GfError};
use crate::identities::{
    krawtchouk, transform_eq1, transform_eq2, DistributionPair, IdentityError, IdentityId,
    Transform,
};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_IDENTITY_FAILURE: i32 = 1;
pub const EXIT_INPUT_ERROR: i32 = 2;
pub const EXIT_RESOURCE_CAP: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {col}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("cannot read {path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{0}")]
    Code(#[from] CodeError),
    #[error("{0}")]
    Identity(#[from] IdentityError),
    #[error("unknown demo {0:?}; try `demo list`")]
    UnknownDemo(String),
    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Code(CodeError::CapExceeded { .. }) => EXIT_RESOURCE_CAP,
            _ => EXIT_INPUT_ERROR,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "macw",
    version,
    about = "Weight enumerators, MacWilliams transforms and exact identity checks for linear codes"
)]
pub struct Cli {
    /// Refuse to enumerate codes with more than this many codewords.
    #[arg(long = "max-enum", global = true, default_value_t = DEFAULT_ENUM_CAP)]
    pub max_enum: u64,

    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Weight distribution and enumerator polynomial of a code.
    Weights { file: PathBuf },
    /// Generator and weight distribution of the dual code.
    Dual { file: PathBuf },
    /// Recover the code's weights from its dual's via both transforms.
    Transform { file: PathBuf },
    /// Check the identities; exit 0 iff every residual is zero.
    Verify {
        file: PathBuf,
        #[command(flatten)]
        select: Selection,
    },
    /// Krawtchouk values K_r(j) for length n over a q-ary alphabet.
    Kraw {
        n: usize,
        q: u64,
        r: Option<usize>,
        j: Option<usize>,
    },
    /// Run `verify` on a built-in code (`list` prints the names, `all` runs every one).
    Demo {
        name: String,
        #[command(flatten)]
        select: Selection,
    },
}

#[derive(Debug, Clone, Default, clap::Args)]
pub struct Selection {
    /// Identities to check; repeatable.
    #[arg(long = "identity", value_enum)]
    pub identity: Vec<IdentityChoice>,

    /// Add one to a weight count before checking (`code:<w>` or `dual:<w>`).
    #[arg(long, hide = true)]
    pub perturb: Option<Perturbation>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityChoice {
    Eq1,
    Eq2,
    Eq3,
    Eq4,
    Eq5,
    D2,
    D3,
    D4,
    D5,
    All,
}

impl IdentityChoice {
    fn ids(self) -> Vec<IdentityId> {
        match self {
            IdentityChoice::Eq1 => vec![IdentityId::Eq1],
            IdentityChoice::Eq2 => vec![IdentityId::Eq2],
            IdentityChoice::Eq3 => vec![IdentityId::Eq3],
            IdentityChoice::Eq4 => vec![IdentityId::Eq4],
            IdentityChoice::Eq5 => vec![IdentityId::Eq5],
            IdentityChoice::D2 => vec![IdentityId::D2],
            IdentityChoice::D3 => vec![IdentityId::D3],
            IdentityChoice::D4 => vec![IdentityId::D4],
            IdentityChoice::D5 => vec![IdentityId::D5],
            IdentityChoice::All => IdentityId::ALL.to_vec(),
        }
    }
}

/// Resolves repeated `--identity` flags; none means all.
pub fn selected_ids(choices: &[IdentityChoice]) -> BTreeSet<IdentityId> {
    if choices.is_empty() {
        return IdentityId::ALL.into_iter().collect();
    }
    choices.iter().flat_map(|c| c.ids()).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Code,
    Dual,
}

/// Test hook: bump one count of one distribution by one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Perturbation {
    pub side: Side,
    pub weight: usize,
}

impl FromStr for Perturbation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let (side, weight) = s
            .split_once(':')
            .ok_or_else(|| format!("expected code:<w> or dual:<w>, got {s:?}"))?;
        let side = match side {
            "code" => Side::Code,
            "dual" => Side::Dual,
            other => return Err(format!("unknown side {other:?}")),
        };
        let weight = weight
            .parse()
            .map_err(|_| format!("bad weight {weight:?}"))?;
        Ok(Perturbation { side, weight })
    }
}

/// Everything a command invocation produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: if passed {
                EXIT_PASS
            } else {
                EXIT_IDENTITY_FAILURE
            },
        }
    }

    fn err(e: CliError) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
            code: e.exit_code(),
        }
    }
}

pub fn run(cli: &Cli) -> Outcome {
    match dispatch(cli) {
        Ok((text, passed)) => Outcome::ok(text, passed),
        Err(e) => Outcome::err(e),
    }
}

fn load(path: &PathBuf) -> Result<LinearCode, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    Ok(parse_code_file(&text)?)
}

fn dispatch(cli: &Cli) -> Result<(String, bool), CliError> {
    let cap = cli.max_enum;
    match &cli.command {
        Command::Weights { file } => Ok((weights_report(&load(file)?, cap)?, true)),
        Command::Dual { file } => Ok((dual_report(&load(file)?, cap)?, true)),
        Command::Transform { file } => transform_report(&load(file)?, cap),
        Command::Verify { file, select } => {
            let v = verify_code(
                &load(file)?,
                cap,
                &selected_ids(&select.identity),
                select.perturb,
            )?;
            Ok((v.text, v.passed))
        }
        Command::Kraw { n, q, r, j } => Ok((kraw_table(*n, *q, *r, *j)?, true)),
        Command::Demo { name, select } => demo(name, cap, select),
    }
}

fn demo(name: &str, cap: u64, select: &Selection) -> Result<(String, bool), CliError> {
    let ids = selected_ids(&select.identity);
    match name {
        "list" => {
            let mut out = String::new();
            for (name, about) in DEMOS {
                writeln!(out, "{name:<10} {about}").unwrap();
            }
            Ok((out, true))
        }
        "all" => {
            let mut out = String::new();
            let mut passed = true;
            for (name, _) in DEMOS {
                let code = demo_code(name).expect("listed demo exists");
                let v = verify_code(&code, cap, &ids, select.perturb)?;
                writeln!(out, "== demo {name}").unwrap();
                out.push_str(&v.text);
                passed &= v.passed;
            }
            Ok((out, passed))
        }
        _ => {
            let code = demo_code(name).ok_or_else(|| CliError::UnknownDemo(name.to_string()))?;
            let v = verify_code(&code, cap, &ids, select.perturb)?;
            Ok((format!("== demo {name}\n{}", v.text), v.passed))
        }
    }
}

/// Built-in corpus: name and one-line description.
pub const DEMOS: &[(&str, &str)] = &[
    ("rep3", "binary repetition [3,1]"),
    ("rep5", "binary repetition [5,1]"),
    ("rep7", "binary repetition [7,1]"),
    ("even3", "binary even-weight [3,2]"),
    ("even5", "binary even-weight [5,4]"),
    ("even7", "binary even-weight [7,6]"),
    ("hamming74", "binary Hamming [7,4]"),
    ("simplex73", "binary simplex [7,3]"),
    ("full3", "full space F_2^3"),
    ("zero3", "zero code of length 3 over GF(2)"),
    ("full2q3", "full space F_3^2"),
    ("zero4q5", "zero code of length 4 over GF(5)"),
    ("ternary42", "[4,2] code over GF(3)"),
    ("quaternary32", "[3,2] code over GF(4), modulus t^2+t+1"),
];

pub fn demo_code(name: &str) -> Option<LinearCode> {
    let gf2 = FiniteField::prime(2).ok()?;
    let code = match name {
        "rep3" => LinearCode::repetition(&gf2, 3),
        "rep5" => LinearCode::repetition(&gf2, 5),
        "rep7" => LinearCode::repetition(&gf2, 7),
        "even3" => LinearCode::zero_sum(&gf2, 3),
        "even5" => LinearCode::zero_sum(&gf2, 5),
        "even7" => LinearCode::zero_sum(&gf2, 7),
        "hamming74" => Ok(LinearCode::hamming74()),
        "simplex73" => LinearCode::simplex(3),
        "full3" => LinearCode::full_space(&gf2, 3),
        "zero3" => LinearCode::zero_code(&gf2, 3),
        "full2q3" => LinearCode::full_space(&FiniteField::prime(3).ok()?, 2),
        "zero4q5" => LinearCode::zero_code(&FiniteField::prime(5).ok()?, 4),
        "ternary42" => LinearCode::new(
            &FiniteField::prime(3).ok()?,
            4,
            &[[1, 0, 1, 1], [0, 1, 1, 2]],
        ),
        "quaternary32" => LinearCode::new(
            &FiniteField::new(2, 2, Some(&[1, 1, 1])).ok()?,
            3,
            &[[1, 0, 2], [0, 1, 3]],
        ),
        _ => return None,
    };
    code.ok()
}

fn header(code: &LinearCode) -> String {
    format!(
        "code n={} k={} q={} field={}\n",
        code.n(),
        code.k(),
        code.q(),
        code.field()
    )
}

pub fn weights_report(code: &LinearCode, cap: u64) -> Result<String, CliError> {
    let w = code.weight_distribution(cap)?;
    let mut out = header(code);
    writeln!(out, "weights {w}").unwrap();
    writeln!(out, "enumerator {}", w.enumerator_poly()).unwrap();
    Ok(out)
}

pub fn dual_report(code: &LinearCode, cap: u64) -> Result<String, CliError> {
    let dual = code.dual();
    let w = dual.weight_distribution(cap)?;
    let mut out = header(code);
    writeln!(out, "dual n={} k={}", dual.n(), dual.k()).unwrap();
    writeln!(out, "dual generator (rref):").unwrap();
    let basis = dual.generator().row_space_basis();
    if basis.rows() == 0 {
        writeln!(out, "(no rows)").unwrap();
    } else {
        out.push_str(&basis.to_string());
    }
    writeln!(out, "dual weights {w}").unwrap();
    writeln!(out, "dual enumerator {}", w.enumerator_poly()).unwrap();
    Ok(out)
}

/// Returns the report and whether both transforms reproduce the brute-forced weights.
pub fn transform_report(code: &LinearCode, cap: u64) -> Result<(String, bool), CliError> {
    let q = code.q() as u64;
    let w = code.weight_distribution(cap)?;
    let w_dual = code.dual().weight_distribution(cap)?;
    let via1 = transform_eq1(&w_dual, code.k(), q)?;
    let via2 = transform_eq2(&w_dual, code.k(), q)?;
    let agree = via1 == w && via2 == w;
    let mut out = header(code);
    writeln!(out, "dual weights (enumerated) {w_dual}").unwrap();
    writeln!(out, "eq1 transform {via1}").unwrap();
    writeln!(out, "eq2 transform {via2}").unwrap();
    writeln!(out, "weights (enumerated) {w}").unwrap();
    writeln!(out, "agreement {}", if agree { "yes" } else { "NO" }).unwrap();
    Ok((out, agree))
}

/// Result of a verification run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verification {
    pub text: String,
    pub passed: bool,
}

/// Brute-forces both weight distributions, then runs [`verify_distributions`].
pub fn verify_code(
    code: &LinearCode,
    cap: u64,
    ids: &BTreeSet<IdentityId>,
    perturb: Option<Perturbation>,
) -> Result<Verification, CliError> {
    let mut w = code.weight_distribution(cap)?;
    let mut w_dual = code.dual().weight_distribution(cap)?;
    if let Some(p) = perturb {
        if p.weight > code.n() {
            return Err(CliError::Usage(format!(
                "perturbed weight {} exceeds n = {}",
                p.weight,
                code.n()
            )));
        }
        match p.side {
            Side::Code => w.bump(p.weight),
            Side::Dual => w_dual.bump(p.weight),
        }
    }
    let pair = DistributionPair::new(w, w_dual, code.k(), code.q() as u64)?;
    let mut v = verify_distributions(&pair, ids);
    v.text = header(code) + &v.text;
    Ok(v)
}

/// Runs the selected checks on a pair of distributions, which need not come
/// from actual dual codes.
pub fn verify_distributions(pair: &DistributionPair, ids: &BTreeSet<IdentityId>) -> Verification {
    let mut out = String::new();
    let mut passed = true;
    writeln!(out, "weights {}", pair.code).unwrap();
    writeln!(out, "dual weights {}", pair.dual).unwrap();

    if ids.contains(&IdentityId::Eq1) || ids.contains(&IdentityId::Eq2) {
        let transforms: [(&str, IdentityId, Transform); 2] = [
            ("eq1", IdentityId::Eq1, transform_eq1),
            ("eq2", IdentityId::Eq2, transform_eq2),
        ];
        for (name, id, transform) in transforms {
            if !ids.contains(&id) {
                continue;
            }
            match transform(&pair.dual, pair.k, pair.q) {
                Ok(w) if w == pair.code => {
                    writeln!(out, "transform {name}: {w} matches").unwrap();
                }
                Ok(w) => {
                    passed = false;
                    writeln!(out, "transform {name}: {w} MISMATCH").unwrap();
                }
                Err(e) => {
                    passed = false;
                    writeln!(out, "transform {name}: FAIL ({e})").unwrap();
                }
            }
        }
    }

    for &id in ids {
        let report = pair.check(id);
        passed &= report.passed();
        out.push_str(&report.to_string());
    }

    if ids.contains(&IdentityId::Eq5) {
        let mismatches = pair.eq5_reduction_mismatches();
        if mismatches.is_empty() {
            writeln!(
                out,
                "eq5 reductions: pass (t=0 matches eq4, t=r matches eq3)"
            )
            .unwrap();
        } else {
            passed = false;
            for m in &mismatches {
                writeln!(
                    out,
                    "eq5 reduction r={} t={} differs from {}",
                    m.r, m.t, m.against
                )
                .unwrap();
            }
            writeln!(out, "eq5 reductions: FAIL").unwrap();
        }
    }

    writeln!(out, "verdict {}", if passed { "PASS" } else { "FAIL" }).unwrap();
    Verification { text: out, passed }
}

pub fn kraw_table(
    n: usize,
    q: u64,
    r: Option<usize>,
    j: Option<usize>,
) -> Result<String, CliError> {
    let mut out = String::new();
    match (r, j) {
        (Some(r), Some(j)) => {
            writeln!(
                out,
                "K_{r}({j}) = {} (n={n} q={q})",
                krawtchouk(r, j, n, q)?
            )
            .unwrap();
        }
        (None, Some(_)) => return Err(CliError::Usage("j given without r".into())),
        (r, None) => {
            writeln!(out, "K_r(j) n={n} q={q}; rows r, columns j=0..{n}").unwrap();
            let rows: Vec<usize> = match r {
                Some(r) => vec![r],
                None => (0..=n).collect(),
            };
            for r in rows {
                let values = (0..=n)
                    .map(|j| krawtchouk(r, j, n, q).map(|v| v.to_string()))
                    .collect::<Result<Vec<_>, _>>()?;
                writeln!(out, "r={r}: {}", values.join(" ")).unwrap();
            }
        }
    }
    Ok(out)
}

/// A significant line: its 1-based number and its tokens with 1-based columns.
struct Line<'a> {
    number: usize,
    tokens: Vec<(usize, &'a str)>,
}

fn tokenize(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let mut tokens = Vec::new();
            let mut start = None;
            for (pos, ch) in content.char_indices().chain([(content.len(), ' ')]) {
                match (ch.is_whitespace(), start) {
                    (false, None) => start = Some(pos),
                    (true, Some(s)) => {
                        tokens.push((s + 1, &content[s..pos]));
                        start = None;
                    }
                    _ => {}
                }
            }
            (!tokens.is_empty()).then_some(Line {
                number: i + 1,
                tokens,
            })
        })
        .collect()
}

fn perr(line: usize, col: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        col,
        message: message.into(),
    }
}

fn parse_num<T: FromStr>(
    line: usize,
    (col, tok): (usize, &str),
    what: &str,
) -> Result<T, ParseError> {
    tok.parse()
        .map_err(|_| perr(line, col, format!("expected {what}, found {tok:?}")))
}

fn parse_field(line: &Line<'_>) -> Result<FiniteField, ParseError> {
    let ln = line.number;
    let mut toks = line.tokens.iter().copied();
    match toks.next() {
        Some((_, "q")) => {}
        Some((col, tok)) => return Err(perr(ln, col, format!("expected `q`, found {tok:?}"))),
        None => unreachable!("significant lines have tokens"),
    }
    let value_tok = toks
        .next()
        .ok_or_else(|| perr(ln, line.tokens[0].0 + 1, "missing field size after `q`"))?;
    let value: u64 = parse_num(ln, value_tok, "an integer field size")?;

    let mut m: Option<u32> = None;
    let mut modulus: Option<Vec<u32>> = None;
    while let Some((col, key)) = toks.next() {
        let arg = toks
            .next()
            .ok_or_else(|| perr(ln, col + key.len(), format!("missing value after `{key}`")))?;
        match key {
            "m" if m.is_none() => m = Some(parse_num(ln, arg, "an extension degree")?),
            "modulus" if modulus.is_none() => {
                let coeffs = arg
                    .1
                    .split(',')
                    .map(|c| c.trim().parse::<u32>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| {
                        perr(
                            ln,
                            arg.0,
                            format!("bad modulus coefficient list {:?}", arg.1),
                        )
                    })?;
                modulus = Some(coeffs);
            }
            "m" | "modulus" => return Err(perr(ln, col, format!("duplicate `{key}`"))),
            other => return Err(perr(ln, col, format!("unexpected token {other:?}"))),
        }
    }

    let field_err = |e: GfError| perr(ln, value_tok.0, format!("invalid field: {e}"));
    match (m, modulus) {
        (Some(m), modulus) => FiniteField::new(value, m, modulus.as_deref()).map_err(field_err),
        (None, Some(modulus)) => {
            let degree = modulus.len().saturating_sub(1) as u32;
            if is_prime(value) {
                FiniteField::new(value, degree, Some(&modulus)).map_err(field_err)
            } else {
                match prime_power(value) {
                    Some((p, mm)) if mm == degree => {
                        FiniteField::new(p, mm, Some(&modulus)).map_err(field_err)
                    }
                    Some((_, mm)) => Err(perr(
                        ln,
                        value_tok.0,
                        format!("q = {value} needs a degree-{mm} modulus, got degree {degree}"),
                    )),
                    None => Err(field_err(GfError::NotPrimePower(value))),
                }
            }
        }
        (None, None) => FiniteField::with_order(value).map_err(field_err),
    }
}

/// Parses the line-oriented code file format into a validated code.
pub fn parse_code_file(text: &str) -> Result<LinearCode, ParseError> {
    let lines = tokenize(text);
    let mut it = lines.iter();
    let last_line = text.lines().count().max(1);

    let first = it
        .next()
        .ok_or_else(|| perr(1, 1, "empty input; expected `q <p> ...`"))?;
    let field = parse_field(first)?;

    let nline = it
        .next()
        .ok_or_else(|| perr(last_line, 1, "missing `n <n>` line"))?;
    let n: usize = match nline.tokens.as_slice() {
        [(_, "n"), value] => parse_num(nline.number, *value, "a code length")?,
        [(_, "n")] => return Err(perr(nline.number, 2, "missing length after `n`")),
        [(_, "n"), _, (col, tok), ..] => {
            return Err(perr(
                nline.number,
                *col,
                format!("unexpected token {tok:?}"),
            ))
        }
        [(col, tok), ..] => {
            return Err(perr(
                nline.number,
                *col,
                format!("expected `n`, found {tok:?}"),
            ))
        }
        [] => unreachable!(),
    };
    if n == 0 {
        return Err(perr(
            nline.number,
            nline.tokens[1].0,
            "code length must be positive",
        ));
    }

    let rline = it
        .next()
        .ok_or_else(|| perr(last_line, 1, "missing `rows:` line"))?;
    match rline.tokens.as_slice() {
        [(_, "rows:")] => {}
        [(_, "rows:"), (col, tok), ..] => {
            return Err(perr(
                rline.number,
                *col,
                format!("unexpected {tok:?}; generator rows start on the next line"),
            ))
        }
        [(col, tok), ..] => {
            return Err(perr(
                rline.number,
                *col,
                format!("expected `rows:`, found {tok:?}"),
            ))
        }
        [] => unreachable!(),
    }

    let q = field.q();
    let mut rows = Vec::new();
    for line in it {
        if line.tokens.len() != n {
            let col = line
                .tokens
                .get(n)
                .map_or(line.tokens.last().unwrap().0, |t| t.0);
            return Err(perr(
                line.number,
                col,
                format!("expected {n} entries, found {}", line.tokens.len()),
            ));
        }
        let mut row = Vec::with_capacity(n);
        for &tok in &line.tokens {
            let v: u64 = parse_num(line.number, tok, "a field element")?;
            if v >= q as u64 {
                return Err(perr(
                    line.number,
                    tok.0,
                    format!("entry {v} is not an element of GF({q})"),
                ));
            }
            row.push(v as u32);
        }
        rows.push(row);
    }

    LinearCode::new(&field, n, &rows).map_err(|e| perr(rline.number, 1, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_repetition_code() {
        let code = parse_code_file("q 2\nn 3\nrows:\n1 1 1\n").unwrap();
        assert_eq!((code.n(), code.k(), code.q()), (3, 1, 2));
    }

    #[test]
    fn parses_gf4_forms() {
        let a = parse_code_file("q 4 modulus 1,1,1\nn 2\nrows:\n1 2\n").unwrap();
        assert_eq!((a.n(), a.k(), a.q()), (2, 1, 4));
        let b = parse_code_file("q 2 m 2 modulus 1,1,1\nn 2\nrows:\n1 2\n").unwrap();
        assert_eq!(a, b);
        let c = parse_code_file("q 2 modulus 1,1,1\nn 2\nrows:\n1 2\n").unwrap();
        assert_eq!(a, c);
        let d = parse_code_file("q 4\nn 2\nrows:\n1 2\n").unwrap();
        assert_eq!(a, d);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# header\nq 3   # ternary\n\nn 4\nrows:   \n1 0 1 1 # first\n0 1 1 2\n";
        let code = parse_code_file(text).unwrap();
        assert_eq!((code.n(), code.k(), code.q()), (4, 2, 3));
    }

    #[test]
    fn zero_rows_is_the_zero_code() {
        let code = parse_code_file("q 5\nn 2\nrows:\n").unwrap();
        assert_eq!(code.k(), 0);
    }

    #[test]
    fn located_errors() {
        let err = parse_code_file("q 4 modulus 1,1,1\nn 2\nrows:\n1 5\n").unwrap_err();
        assert_eq!((err.line, err.col), (4, 3));
        assert!(err.message.contains("not an element of GF(4)"), "{err}");

        let err = parse_code_file("q 2\nn 3\nrows:\n1 1\n").unwrap_err();
        assert_eq!(err.line, 4);

        let err = parse_code_file("q 2\nlength 3\nrows:\n").unwrap_err();
        assert_eq!((err.line, err.col), (2, 1));

        let err = parse_code_file("q 6\nn 3\nrows:\n").unwrap_err();
        assert_eq!((err.line, err.col), (1, 3));

        let err = parse_code_file("q 2 m 2 modulus 1,0,1\nn 3\nrows:\n").unwrap_err();
        assert!(err.message.contains("reducible"), "{err}");

        let err = parse_code_file("q 2\nn 3\nrows:\n1 1 1\n1 1 1\n").unwrap_err();
        assert!(err.message.contains("rank-deficient"), "{err}");

        let err = parse_code_file("q 2\nn 3\nrows:\n1 x 1\n").unwrap_err();
        assert_eq!((err.line, err.col), (4, 3));

        let err = parse_code_file("").unwrap_err();
        assert_eq!(err.line, 1);

        let err = parse_code_file("q 2 modulus 1,1\nn 1\nrows:\n").unwrap();
        assert_eq!(err.q(), 2);
    }

    #[test]
    fn perturbation_syntax() {
        assert_eq!(
            "dual:3".parse::<Perturbation>().unwrap(),
            Perturbation {
                side: Side::Dual,
                weight: 3
            }
        );
        assert!("both:1".parse::<Perturbation>().is_err());
        assert!("code".parse::<Perturbation>().is_err());
    }

    #[test]
    fn every_demo_builds_and_passes() {
        for (name, _) in DEMOS {
            let code = demo_code(name).unwrap_or_else(|| panic!("demo {name}"));
            let v = verify_code(&code, DEFAULT_ENUM_CAP, &selected_ids(&[]), None).unwrap();
            assert!(v.passed, "{name}\n{}", v.text);
        }
        assert!(demo_code("nope").is_none());
    }

    #[test]
    fn zero_code_demo() {
        let code = demo_code("zero3").unwrap();
        let v = verify_code(&code, DEFAULT_ENUM_CAP, &selected_ids(&[]), None).unwrap();
        assert!(v.text.contains("weights [1, 0, 0, 0]\n"));
        assert!(v.text.contains("dual weights [1, 3, 3, 1]\n"));
    }

    #[test]
    fn kraw_output() {
        assert_eq!(
            kraw_table(7, 2, Some(1), Some(3)).unwrap(),
            "K_1(3) = 1 (n=7 q=2)\n"
        );
        let table = kraw_table(2, 2, None, None).unwrap();
        assert_eq!(
            table,
            "K_r(j) n=2 q=2; rows r, columns j=0..2\nr=0: 1 1 1\nr=1: 2 0 -2\nr=2: 1 -1 1\n"
        );
        assert!(kraw_table(2, 2, Some(3), None).is_err());
        assert!(kraw_table(2, 2, None, Some(1)).is_err());
    }

    #[test]
    fn cap_maps_to_exit_code() {
        let code = LinearCode::full_space(&FiniteField::prime(2).unwrap(), 5).unwrap();
        let err = weights_report(&code, 16).unwrap_err();
        assert_eq!(err.exit_code(), EXIT_RESOURCE_CAP);
    }

    #[test]
    fn selection_defaults_to_all() {
        assert_eq!(selected_ids(&[]).len(), 9);
        assert_eq!(
            selected_ids(&[IdentityChoice::Eq3, IdentityChoice::D5]),
            [IdentityId::Eq3, IdentityId::D5].into_iter().collect()
        );
    }
}
