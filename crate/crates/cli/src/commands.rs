use std::fmt::{self, Write as _};
use std::time::Instant;

use lcn_core::canon::FormKind;
use lcn_core::detlab::{
    cayley_table, check_interval_sums, contracted_cayley, det_symbolic, mobius, star_block, theta_nonzero, VarMatrix,
    Verdict,
};
use lcn_core::monoid::{build_universe, Element, MonoidUniverse};
use lcn_core::oracle::{catalan_presentation, congruence_classes, lc_presentation};
use lcn_core::structure::{
    check_characterizations, check_ll_antisymmetric, check_ll_smooth, check_ll_transitive, check_n_prime_nesting,
    check_plus_star_laws, check_singleton_rich, check_tilde_counts, CheckReport, SmoothnessMode, Structure,
};
use lcn_core::{CanonicalForm, Word};
use serde::Serialize;

use crate::{Artifact, Command, Common, Format, Preset, RunConfig, EXIT_FAIL};

#[derive(Debug)]
pub enum RunError {
    Usage(String),
    Core(lcn_core::Error),
}

impl fmt::Display for RunError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RunError::Usage(msg) => f.write_str(msg),
            RunError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RunError {}

impl From<lcn_core::Error> for RunError {
    fn from(e: lcn_core::Error) -> Self {
        RunError::Core(e)
    }
}

type Result<T> = std::result::Result<T, RunError>;

/// Executes one subcommand. Timing information, which would break
/// reproducibility, is returned separately from the artifact.
pub fn run(config: &RunConfig) -> Result<(Artifact, Option<String>)> {
    let common = config.command.common();
    let universe = || build_universe(common.rank());
    let start = Instant::now();
    let artifact = match &config.command {
        Command::Elements { common } => elements(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json, Format::Csv])?),
        Command::Canon { common, word } => canon(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json])?, word)?,
        Command::Mult { common, left, right } => {
            mult(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json])?, left, right)?
        }
        Command::Cayley { common, contracted } => {
            let u = universe()?;
            let m = if *contracted { contracted_cayley(&u)? } else { cayley_table(&u) };
            table(&u, &m, format(common, Format::Csv, &[Format::Text, Format::Json, Format::Csv])?)
        }
        Command::Idempotents { common } => {
            idempotents(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json, Format::Csv])?)
        }
        Command::Poset { common } => poset(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json])?)?,
        Command::Blocks { common } => blocks(&universe()?, format(common, Format::Csv, &[Format::Text, Format::Json, Format::Csv])?)?,
        Command::Det { common, trials, seed, symbolic_cap } => {
            det(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json])?, *trials, *seed, *symbolic_cap)?
        }
        Command::Verify { common, samples, seed } => {
            verify(&universe()?, format(common, Format::Text, &[Format::Text, Format::Json])?, *samples, *seed)?
        }
        Command::Oracle { common, preset, max_len } => {
            oracle(common.rank(), format(common, Format::Json, &[Format::Text, Format::Json])?, *preset, *max_len)?
        }
    };
    let timing = matches!(config.command, Command::Det { .. } | Command::Verify { .. } | Command::Oracle { .. })
        .then(|| format!("elapsed: {:.3} s", start.elapsed().as_secs_f64()));
    Ok((artifact, timing))
}

fn format(common: &Common, default: Format, allowed: &[Format]) -> Result<Format> {
    let f = common.format.unwrap_or(default);
    if allowed.contains(&f) {
        Ok(f)
    } else {
        Err(RunError::Usage(format!("--format {f:?} is not supported by this subcommand").to_lowercase()))
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn parse_word(u: &MonoidUniverse, arg: &str, input: &str) -> Result<Word> {
    Word::parse(input, u.rank()).map_err(|e| RunError::Usage(format!("invalid value for <{arg}>: {e}")))
}

/// Element name used in tables: the zero element is written `0`.
fn name(u: &MonoidUniverse, e: Element) -> String {
    if u.is_zero(e) {
        "0".into()
    } else {
        u.word(e).to_string()
    }
}

fn kind_name(k: FormKind) -> &'static str {
    match k {
        FormKind::Identity => "identity",
        FormKind::Zero => "zero",
        FormKind::Segments => "segments",
    }
}

#[derive(Serialize)]
struct ElementRow {
    id: u32,
    word: String,
    kind: FormKind,
}

fn elements(u: &MonoidUniverse, f: Format) -> Artifact {
    let rows: Vec<ElementRow> = u
        .elements()
        .map(|e| ElementRow { id: e.0, word: u.word(e).to_string(), kind: u.form(e).kind() })
        .collect();
    let body = match f {
        Format::Json => to_json(&rows),
        Format::Text => rows.iter().map(|r| format!("{}\t{}\t{}\n", r.id, r.word, kind_name(r.kind))).collect(),
        Format::Csv => {
            let mut out = String::from("s\\t");
            for t in u.elements() {
                write!(out, ",{}", t.0).unwrap();
            }
            out.push('\n');
            for s in u.elements() {
                out.push_str(&s.0.to_string());
                for t in u.elements() {
                    write!(out, ",{}", u.mul(s, t).0).unwrap();
                }
                out.push('\n');
            }
            out
        }
    };
    Artifact::ok(body)
}

#[derive(Serialize)]
struct CanonOut<'a> {
    input: String,
    id: u32,
    form: &'a CanonicalForm,
}

fn canon(u: &MonoidUniverse, f: Format, input: &str) -> Result<Artifact> {
    let w = parse_word(u, "WORD", input)?;
    let e = u.element_of(&w)?;
    let form = u.form(e);
    Ok(Artifact::ok(match f {
        Format::Json => to_json(&CanonOut { input: w.to_string(), id: e.0, form }),
        _ => format!("{form}\n"),
    }))
}

#[derive(Serialize)]
struct MultOut<'a> {
    left: String,
    right: String,
    id: u32,
    product: &'a CanonicalForm,
}

fn mult(u: &MonoidUniverse, f: Format, left: &str, right: &str) -> Result<Artifact> {
    let (a, b) = (parse_word(u, "LEFT", left)?, parse_word(u, "RIGHT", right)?);
    let p = u.mul(u.element_of(&a)?, u.element_of(&b)?);
    let product = u.form(p);
    Ok(Artifact::ok(match f {
        Format::Json => to_json(&MultOut { left: a.to_string(), right: b.to_string(), id: p.0, product }),
        _ => format!("{product}\n"),
    }))
}

#[derive(Serialize)]
struct TableOut {
    rows: Vec<String>,
    cols: Vec<String>,
    /// `null` marks a formal zero.
    cells: Vec<Vec<Option<String>>>,
}

fn table_out(u: &MonoidUniverse, m: &VarMatrix) -> TableOut {
    let (r, c) = m.dims();
    TableOut {
        rows: m.rows().iter().map(|&e| name(u, e)).collect(),
        cols: m.cols().iter().map(|&e| name(u, e)).collect(),
        cells: (0..r).map(|i| (0..c).map(|j| m.get(i, j).map(|e| name(u, e))).collect()).collect(),
    }
}

fn grid(u: &MonoidUniverse, m: &VarMatrix) -> String {
    let t = table_out(u, m);
    let mut lines: Vec<Vec<String>> = vec![std::iter::once(String::new()).chain(t.cols).collect()];
    for (r, cells) in t.rows.into_iter().zip(t.cells) {
        lines.push(std::iter::once(r).chain(cells.into_iter().map(|c| c.unwrap_or_else(|| ".".into()))).collect());
    }
    let width = lines.iter().flatten().map(String::len).max().unwrap_or(0);
    lines
        .iter()
        .map(|l| {
            let mut s = l.iter().map(|c| format!("{c:<width$}")).collect::<Vec<_>>().join(" ");
            s.truncate(s.trim_end().len());
            s + "\n"
        })
        .collect()
}

fn table(u: &MonoidUniverse, m: &VarMatrix, f: Format) -> Artifact {
    Artifact::ok(match f {
        Format::Csv => m.to_csv(u),
        Format::Json => to_json(&table_out(u, m)),
        Format::Text => grid(u, m),
    })
}

#[derive(Serialize)]
struct IdRow {
    id: u32,
    word: String,
}

fn idempotents(u: &MonoidUniverse, f: Format) -> Artifact {
    let rows: Vec<IdRow> = u.idempotents().iter().map(|&e| IdRow { id: e.0, word: u.word(e).to_string() }).collect();
    Artifact::ok(match f {
        Format::Json => to_json(&rows),
        Format::Csv => std::iter::once("id,word\n".to_string()).chain(rows.iter().map(|r| format!("{},{}\n", r.id, r.word))).collect(),
        Format::Text => rows.iter().map(|r| format!("{}\t{}\n", r.id, r.word)).collect(),
    })
}

#[derive(Serialize)]
struct Edge {
    lower: String,
    upper: String,
}

#[derive(Serialize)]
struct MobiusEntry {
    lower: String,
    upper: String,
    mu: i64,
}

#[derive(Serialize)]
struct PosetOut {
    elements: Vec<String>,
    edges: Vec<Edge>,
    mobius: Vec<MobiusEntry>,
}

fn poset(u: &MonoidUniverse, f: Format) -> Result<Artifact> {
    let st = Structure::new(u)?;
    let m = mobius(&st)?;
    let nz: Vec<Element> = u.nonzero().collect();
    let w = |e: Element| u.word(e).to_string();
    let edges = nz
        .iter()
        .flat_map(|&s| nz.iter().filter(move |&&t| s != t).map(move |&t| (s, t)))
        .filter(|&(s, t)| st.ll(s, t))
        .map(|(s, t)| Edge { lower: w(s), upper: w(t) })
        .collect();
    let out = PosetOut {
        elements: m.linear_extension().iter().map(|&e| w(e)).collect(),
        edges,
        mobius: m.entries().into_iter().map(|(t, s, mu)| MobiusEntry { lower: w(t), upper: w(s), mu }).collect(),
    };
    Ok(Artifact::ok(match f {
        Format::Json => to_json(&out),
        _ => {
            let mut s = format!("linear extension: {}\n", out.elements.join(" "));
            for e in &out.edges {
                writeln!(s, "{} << {}", e.lower, e.upper).unwrap();
            }
            for e in &out.mobius {
                writeln!(s, "mu({}, {}) = {}", e.lower, e.upper, e.mu).unwrap();
            }
            s
        }
    }))
}

#[derive(Serialize)]
struct BlockOut {
    idempotent: String,
    #[serde(flatten)]
    table: TableOut,
    square: bool,
    /// Whether the determinant vanishes identically; `null` when the block
    /// is not square or too large to expand.
    singular: Option<bool>,
}

fn blocks(u: &MonoidUniverse, f: Format) -> Result<Artifact> {
    let st = Structure::new(u)?;
    let mut es: Vec<Element> = st.nonzero_idempotents().collect();
    es.sort_by(|&a, &b| u.word(a).cmp(u.word(b)));
    let mut out = Vec::new();
    let mut text = String::new();
    for e in es {
        let m = star_block(&st, e)?;
        let (r, c) = m.dims();
        let singular = if r == c && r <= lcn_core::detlab::SYMBOLIC_CAP {
            Some(det_symbolic(&m, lcn_core::detlab::SYMBOLIC_CAP)?.is_zero())
        } else {
            None
        };
        let label = match singular {
            Some(true) => "singular",
            Some(false) => "nonsingular",
            None if r != c => "not square",
            None => "too large to expand",
        };
        writeln!(text, "# e = {} ({r}x{c}, {label})", u.word(e)).unwrap();
        text.push_str(&if f == Format::Csv { m.to_csv(u) } else { grid(u, &m) });
        out.push(BlockOut { idempotent: u.word(e).to_string(), table: table_out(u, &m), square: r == c, singular });
    }
    Ok(Artifact::ok(if f == Format::Json { to_json(&out) } else { text }))
}

#[derive(Serialize)]
struct DetOut<'a> {
    n: usize,
    trials: u64,
    seed: u64,
    symbolic_cap: usize,
    #[serde(flatten)]
    verdict: &'a Verdict,
}

fn det(u: &MonoidUniverse, f: Format, trials: u64, seed: u64, cap: usize) -> Result<Artifact> {
    let st = Structure::new(u)?;
    let verdict = theta_nonzero(&st, trials, seed, cap)?;
    if f == Format::Json {
        return Ok(Artifact::ok(to_json(&DetOut { n: u.rank(), trials, seed, symbolic_cap: cap, verdict: &verdict })));
    }
    let mut s = format!("verdict: {}\n", verdict.name());
    match &verdict {
        Verdict::NonzeroCertified { trial, point, value } => {
            writeln!(s, "trial: {trial}\nvalue mod p: {value}").unwrap();
            for (e, x) in u.elements().zip(point) {
                writeln!(s, "x[{}] = {x}", u.word(e)).unwrap();
            }
        }
        Verdict::ProbablyZero { trials } => writeln!(s, "trials: {trials}, no singular block found").unwrap(),
        Verdict::ZeroCertified { trials, block, non_square } => {
            writeln!(s, "trials: {trials}\nsingular block: e = {}", block.idempotent).unwrap();
            writeln!(s, "rows: {}\ncols: {}", block.rows.join(" "), block.cols.join(" ")).unwrap();
            for b in non_square {
                writeln!(s, "non-square block: e = {} ({}x{})", b.idempotent, b.rows.len(), b.cols.len()).unwrap();
            }
        }
    }
    Ok(Artifact::ok(s))
}

#[derive(Serialize)]
struct VerifyOut<'a> {
    n: usize,
    passed: bool,
    results: &'a [CheckReport],
}

fn verify(u: &MonoidUniverse, f: Format, samples: u64, seed: u64) -> Result<Artifact> {
    let st = Structure::new(u)?;
    let antisymmetric = check_ll_antisymmetric(&st);
    let anti_ok = antisymmetric.passed;
    let mut results = vec![check_plus_star_laws(&st)?, check_singleton_rich(&st), antisymmetric, check_ll_transitive(&st)];
    let (ll, sharp) = check_characterizations(&st)?;
    results.extend([ll, sharp, check_n_prime_nesting(&st)?]);
    if u.rank() >= 3 {
        results.push(check_tilde_counts(&st)?);
    }
    let mode = if u.rank() <= 5 { SmoothnessMode::Exhaustive } else { SmoothnessMode::Sampled { samples, seed } };
    results.push(check_ll_smooth(&st, mode)?);
    if anti_ok {
        let m = mobius(&st)?;
        let (checked, bad) = check_interval_sums(&st, &m);
        results.push(CheckReport {
            property: "mobius_interval_sums".into(),
            passed: bad.is_none(),
            checked,
            counterexample: bad.map(|(t, s)| format!("[{}, {}]", u.word(t), u.word(s))),
            detail: None,
        });
    }
    let passed = results.iter().all(|r| r.passed);
    let body = if f == Format::Json {
        to_json(&VerifyOut { n: u.rank(), passed, results: &results })
    } else {
        let width = results.iter().map(|r| r.property.len()).max().unwrap_or(0);
        let mut s = String::new();
        for r in &results {
            let status = if r.passed { "PASS" } else { "FAIL" };
            write!(s, "{status}  {:<width$}  checked {}", r.property, r.checked).unwrap();
            if let Some(c) = &r.counterexample {
                write!(s, "  counterexample: {c}").unwrap();
            }
            if let Some(d) = &r.detail {
                write!(s, "  ({d})").unwrap();
            }
            s.push('\n');
        }
        s
    };
    Ok(Artifact { body, code: if passed { 0 } else { EXIT_FAIL } })
}

#[derive(Serialize)]
struct OracleOut {
    preset: &'static str,
    n: usize,
    generators: usize,
    max_len: usize,
    word_count: usize,
    class_count: usize,
    stable: bool,
    monoid_order: Option<usize>,
    representatives: Vec<String>,
}

fn oracle(n: usize, f: Format, preset: Preset, max_len: usize) -> Result<Artifact> {
    let (name, p) = match preset {
        Preset::Lc => ("lc", lc_presentation(n)?),
        Preset::Catalan => ("catalan", catalan_presentation(n)?),
    };
    let r = congruence_classes(&p, max_len)?;
    let out = OracleOut {
        preset: name,
        n,
        generators: p.rank(),
        max_len,
        word_count: r.word_count,
        class_count: r.class_count,
        stable: r.stable,
        monoid_order: r.monoid_order,
        representatives: r.representatives.iter().map(Word::to_string).collect(),
    };
    Ok(Artifact::ok(match f {
        Format::Json => to_json(&out),
        _ => format!(
            "preset: {name}\nn: {n}\nwords: {}\nclasses: {}\nstable: {}\nrepresentatives: {}\n",
            out.word_count,
            out.class_count,
            out.stable,
            out.representatives.join(" ")
        ),
    }))
}
