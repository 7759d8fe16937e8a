//! Acceptance suite: one PASS/FAIL line per criterion.
//!
//! Criteria listed in `KNOWN_FAILURES` are expected to fail for a documented
//! mathematical reason; the run still fails if they unexpectedly pass or if
//! any other criterion fails.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use lcn_core::canon::{canonicalize, star_condition, zero_word, CanonicalForm};
use lcn_core::detlab::{
    check_interval_sums, contracted_cayley, contraction_check, det_symbolic, factorization_check, mobius,
    random_point, star_block, theta_nonzero, y_substitution, SparsePoly, VarMatrix, Verdict, SYMBOLIC_CAP,
};
use lcn_core::monoid::{build_universe, catalan_cardinality, Element, MonoidUniverse};
use lcn_core::oracle::{congruence_classes, lc_presentation};
use lcn_core::structure::{
    check_characterizations, check_ll_smooth, check_ll_transitive, check_plus_star_laws, check_singleton_rich,
    check_tilde_counts, SmoothnessMode, Structure,
};
use lcn_core::Word;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that cannot hold as stated, with the reason.
const KNOWN_FAILURES: &[(u32, &str)] = &[(
    9,
    "at n = 8 the cell (a5.a8.a1, a1.a5.a6) is zero: a8.a1.a5.a6 = a5.a7.a1 in LC_8, so the reference entry only holds for n >= 9",
)];

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn universe(n: usize) -> MonoidUniverse {
    build_universe(n).expect("universe")
}

fn sorted_words(u: &MonoidUniverse) -> BTreeSet<String> {
    u.elements().map(|e| u.word(e).to_string()).collect()
}

fn set(xs: &[&str]) -> BTreeSet<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn c1_element_counts() -> Outcome {
    let u2 = universe(2);
    let u3 = universe(3);
    ensure(sorted_words(&u2) == set(&["a1.a2", "a1", "a2", "1"]), || format!("LC_2 = {:?}", sorted_words(&u2)))?;
    ensure(u2.form(u2.zero().unwrap()).word().to_string() == "a1.a2", || "LC_2 zero".into())?;
    let expected3 = set(&["a1.a3", "a1", "a2", "a3", "a1.a2", "a2.a3", "a3.a1", "1"]);
    ensure(sorted_words(&u3) == expected3, || format!("LC_3 = {:?}", sorted_words(&u3)))?;
    Ok(format!("|LC_2| = {}, |LC_3| = {}", u2.len(), u3.len()))
}

fn c2_zero_elements() -> Outcome {
    let expected = [
        (2, "a1.a2"),
        (3, "a1.a3"),
        (4, "a1.a3"),
        (5, "a1.a2.a4"),
        (6, "a1.a3.a5"),
        (7, "a1.a2.a4.a6"),
        (8, "a1.a3.a5.a7"),
        (9, "a1.a2.a4.a6.a8"),
    ];
    for (n, w) in expected {
        let z = zero_word(n).map_err(|e| e.to_string())?;
        ensure(z.to_string() == w, || format!("n={n}: zero_word = {z}"))?;
        let u = universe(n);
        let ze = u.element_of(&z).map_err(|e| e.to_string())?;
        ensure(Some(ze) == u.zero(), || format!("n={n}: {z} is not the absorbing element"))?;
        ensure(u.elements().all(|x| u.mul(x, ze) == ze && u.mul(ze, x) == ze), || format!("n={n}: zero does not absorb"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut tested = 0;
    for n in 4..=7 {
        let mut count = 0;
        while count < 50 {
            let mask: Vec<bool> = (0..n).map(|_| rng.gen_bool(0.7)).collect();
            let content: Vec<usize> = (1..=n).filter(|&i| mask[i - 1]).collect();
            if content.is_empty() {
                continue;
            }
            let mut letters = content.clone();
            let extra = rng.gen_range(0..8);
            letters.extend((0..extra).map(|_| content[rng.gen_range(0..content.len())]));
            for i in (1..letters.len()).rev() {
                letters.swap(i, rng.gen_range(0..=i));
            }
            let w = Word::from_indices(n, letters).unwrap();
            if star_condition(&w).unwrap().is_some() {
                continue;
            }
            count += 1;
            let cf = canonicalize(&w).map_err(|e| e.to_string())?;
            ensure(cf.is_zero(), || format!("n={n}: {w} -> {cf}"))?;
        }
        tested += count;
    }
    Ok(format!("zero words n=2..9 match; {tested} gap-violating words map to zero"))
}

fn c3_oracle_equivalence() -> Outcome {
    let mut summary = Vec::new();
    for n in 2..=5 {
        let report = congruence_classes(&lc_presentation(n).unwrap(), 8).map_err(|e| e.to_string())?;
        ensure(report.stable, || format!("n={n}: oracle not stable"))?;
        let u = universe(n);
        ensure(report.class_count == u.len(), || format!("n={n}: {} classes vs |LC_n| = {}", report.class_count, u.len()))?;
        let mut class_to_form: HashMap<u32, CanonicalForm> = HashMap::new();
        let mut form_to_class: HashMap<CanonicalForm, u32> = HashMap::new();
        for (w, &c) in report.words.iter().zip(&report.class_of) {
            let cf = canonicalize(w).map_err(|e| e.to_string())?;
            let f = class_to_form.entry(c).or_insert_with(|| cf.clone());
            ensure(*f == cf, || format!("n={n}: class {c} has forms {f} and {cf}"))?;
            let k = form_to_class.entry(cf.clone()).or_insert(c);
            ensure(*k == c, || format!("n={n}: form {cf} spans classes {k} and {c}"))?;
        }
        summary.push(format!("n={n}: {} words, {} classes", report.word_count, report.class_count));
    }
    Ok(summary.join("; "))
}

fn c4_catalan() -> Outcome {
    let mut got = Vec::new();
    for (n, want) in [(2, 2), (3, 5), (4, 14), (5, 42), (6, 132)] {
        let c = catalan_cardinality(n).map_err(|e| e.to_string())?;
        ensure(c.oracle_count == want && c.formula == want as u128, || format!("degree {n}: {c:?}"))?;
        got.push(c.oracle_count.to_string());
    }
    Ok(format!("C_2..C_6 = {}", got.join(", ")))
}

fn c5_plus_star() -> Outcome {
    for n in 2..=7 {
        let u = universe(n);
        let st = Structure::new(&u).map_err(|e| e.to_string())?;
        let laws = check_plus_star_laws(&st).map_err(|e| e.to_string())?;
        ensure(laws.passed, || format!("n={n}: {:?}", laws.counterexample))?;
        let rich = check_singleton_rich(&st);
        ensure(rich.passed, || format!("n={n}: {:?}", rich.counterexample))?;
    }
    Ok("laws hold n=2..7; segment rule = minimum stabilizer n=2..7".into())
}

fn c6_characterizations() -> Outcome {
    let mut pairs = 0;
    for n in 1..=6 {
        let u = universe(n);
        let st = Structure::new(&u).map_err(|e| e.to_string())?;
        let (ll, sharp) = check_characterizations(&st).map_err(|e| e.to_string())?;
        ensure(ll.passed, || format!("n={n}: << {:?}", ll.counterexample))?;
        ensure(sharp.passed, || format!("n={n}: # {:?}", sharp.counterexample))?;
        pairs += ll.checked;
    }
    Ok(format!("<< and # agree on {pairs} pairs per relation, n=1..6"))
}

fn c7_structural_properties() -> Outcome {
    let mut notes = Vec::new();
    for n in 1..=7 {
        let u = universe(n);
        let st = Structure::new(&u).map_err(|e| e.to_string())?;
        let tr = check_ll_transitive(&st);
        ensure(tr.passed, || format!("n={n}: transitivity {:?}", tr.counterexample))?;
        let rich = check_singleton_rich(&st);
        ensure(rich.passed, || format!("n={n}: singleton-rich {:?}", rich.counterexample))?;
        let mode = if n <= 5 {
            SmoothnessMode::Exhaustive
        } else {
            SmoothnessMode::Sampled { samples: 1_000_000, seed: 7 }
        };
        let smooth = check_ll_smooth(&st, mode).map_err(|e| e.to_string())?;
        ensure(smooth.passed, || format!("n={n}: smoothness {:?}", smooth.counterexample))?;
        notes.push(format!("n={n}: {} pairs", smooth.checked));
    }
    Ok(format!("no counterexamples ({})", notes.join(", ")))
}

fn c8_tilde_counts() -> Outcome {
    for n in 3..=8 {
        let u = universe(n);
        let st = Structure::new(&u).map_err(|e| e.to_string())?;
        let r = check_tilde_counts(&st).map_err(|e| e.to_string())?;
        ensure(r.passed, || format!("n={n}: {:?}", r.counterexample))?;
    }
    let u = universe(8);
    let st = Structure::new(&u).unwrap();
    let e = u.parse("a1.a5").unwrap();
    let words = |xs: Vec<Element>| xs.into_iter().map(|x| u.word(x).to_string()).collect::<BTreeSet<_>>();
    let l = words(st.l_tilde(e).unwrap());
    let r = words(st.r_tilde(e).unwrap());
    ensure(l == set(&["a1.a5", "a1.a4.a5", "a8.a1.a5", "a8.a1.a4.a5"]), || format!("L~ = {l:?}"))?;
    ensure(r == set(&["a1.a5", "a1.a2.a5", "a1.a5.a6", "a1.a2.a5.a6"]), || format!("R~ = {r:?}"))?;
    Ok("formula holds n=3..8; n=8 sets for a1.a5 match verbatim".into())
}

/// Compares a table against expected cells given as words, `.` for zero.
fn compare_table(u: &MonoidUniverse, m: &VarMatrix, rows: &[&str], cols: &[&str], cells: &[&[&str]]) -> Vec<String> {
    let mut diffs = Vec::new();
    for (r, line) in rows.iter().zip(cells) {
        for (c, want) in cols.iter().zip(line.iter()) {
            let (re, ce) = (u.parse(r).unwrap(), u.parse(c).unwrap());
            let got = m.at(re, ce).expect("row/column present");
            let want_el = if *want == "." { None } else { Some(u.parse(want).unwrap()) };
            if got != want_el {
                let show = |x: Option<Element>| x.map_or(".".to_string(), |e| u.word(e).to_string());
                diffs.push(format!("({r}, {c}): expected {want} (= {}), got {}", show(want_el), show(got)));
            }
        }
    }
    diffs
}

fn reference_block(n: usize) -> (Vec<String>, Vec<String>, Vec<Vec<String>>) {
    let an = format!("a{n}");
    let rows = vec!["a1.a5".into(), "a1.a4.a5".into(), format!("a5.{an}.a1"), format!("a4.a5.{an}.a1")];
    let cols: Vec<String> = ["a1.a5", "a1.a2.a5", "a1.a5.a6", "a1.a2.a5.a6"].iter().map(|s| s.to_string()).collect();
    let cells = vec![
        cols.clone(),
        vec!["a1.a4.a5".into(), ".".into(), ".".into(), ".".into()],
        vec![format!("a5.{an}.a1"), ".".into(), format!("{an}.a1.a5.a6"), ".".into()],
        vec![format!("a4.a5.{an}.a1"), ".".into(), ".".into(), ".".into()],
    ];
    (rows, cols, cells)
}

fn as_str(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}

fn block_diffs(n: usize) -> (Vec<String>, usize, bool) {
    let u = universe(n);
    let st = Structure::new(&u).unwrap();
    let block = star_block(&st, u.parse("a1.a5").unwrap()).unwrap();
    let (rows, cols, cells) = reference_block(n);
    let cells_ref: Vec<Vec<&str>> = cells.iter().map(|r| as_str(r)).collect();
    let cells_slices: Vec<&[&str]> = cells_ref.iter().map(Vec::as_slice).collect();
    let diffs = compare_table(&u, &block, &as_str(&rows), &as_str(&cols), &cells_slices);
    let singular = det_symbolic(&block, SYMBOLIC_CAP).unwrap().is_zero();
    (diffs, block.zero_count(), singular)
}

fn c9_reference_tables() -> Outcome {
    let u2 = universe(2);
    let t2 = contracted_cayley(&u2).unwrap();
    let lc2 = compare_table(
        &u2,
        &t2,
        &["a1", "a2", "1"],
        &["a1", "a2", "1"],
        &[&["a1", ".", "a1"], &[".", "a2", "a2"], &["a1", "a2", "1"]],
    );
    ensure(lc2.is_empty(), || format!("LC_2 table: {lc2:?}"))?;
    let (diffs8, dots8, singular8) = block_diffs(8);
    ensure(singular8, || "n=8 block is not symbolically singular".into())?;
    let (diffs9, _, singular9) = block_diffs(9);
    let note9 = format!("n=9 block matches the reference table: {}, singular: {singular9}", diffs9.is_empty());
    ensure(diffs8.is_empty(), || {
        format!("LC_2 table matches; n=8 block det = 0 but {} cell(s) differ ({dots8} dots): {}; {note9}", diffs8.len(), diffs8.join("; "))
    })?;
    Ok(format!("LC_2 table and n=8 block match; block det = 0; {note9}"))
}

fn c10_determinant_verdicts() -> Outcome {
    let seed = 20_240_601;
    let mut names = Vec::new();
    for n in 1..=9 {
        let u = universe(n);
        let st = Structure::new(&u).map_err(|e| e.to_string())?;
        let v = theta_nonzero(&st, 32, seed, SYMBOLIC_CAP).map_err(|e| e.to_string())?;
        match (&v, n <= 7) {
            (Verdict::NonzeroCertified { trial, .. }, true) => names.push(format!("n={n}: nonzero@{trial}")),
            (Verdict::ZeroCertified { block, .. }, false) => names.push(format!("n={n}: zero via {}", block.idempotent)),
            _ => return Err(format!("n={n}: unexpected verdict {}", v.name())),
        }
        if n == 8 {
            let again = theta_nonzero(&st, 32, seed, SYMBOLIC_CAP).unwrap();
            ensure(format!("{v:?}") == format!("{again:?}"), || "verdict not deterministic".into())?;
        }
    }
    Ok(names.join(", "))
}

fn c11_factorization() -> Outcome {
    let mut signs = Vec::new();
    for n in 2..=4 {
        let u = universe(n);
        let st = Structure::new(&u).unwrap();
        let m = mobius(&st).map_err(|e| e.to_string())?;
        let mut seen = BTreeSet::new();
        for trial in 0..20 {
            let x = random_point(&u, 1000 + n as u64, trial);
            let f = factorization_check(&st, &m, &x).map_err(|e| e.to_string())?;
            let s = f.sign.ok_or_else(|| format!("n={n}: factorization fails at trial {trial}"))?;
            seen.insert(s);
            let x = random_point(&u, 2000 + n as u64, trial);
            ensure(contraction_check(&u, &x).unwrap(), || format!("n={n}: contraction fails at trial {trial}"))?;
        }
        ensure(seen.len() == 1, || format!("n={n}: inconsistent signs {seen:?}"))?;
        signs.push(format!("n={n}: {:+}", seen.into_iter().next().unwrap()));
    }
    let u2 = universe(2);
    let theta = det_symbolic(&contracted_cayley(&u2).unwrap(), SYMBOLIC_CAP).unwrap();
    let var = |s: &str| SparsePoly::var(u2.parse(s).unwrap().0);
    let expected = var("a1").mul(&var("a2")).mul(&var("1").sub(&var("a1")).sub(&var("a2")));
    ensure(theta == expected || theta == expected.scale(-1), || format!("theta~(LC_2) = {}", theta.render(&u2)))?;
    Ok(format!("signs {}; theta~(LC_2) = {}", signs.join(", "), theta.render(&u2)))
}

fn c12_mobius() -> Outcome {
    let mut intervals = 0;
    for n in 1..=6 {
        let u = universe(n);
        let st = Structure::new(&u).unwrap();
        let m = mobius(&st).map_err(|e| e.to_string())?;
        let (checked, bad) = check_interval_sums(&st, &m);
        ensure(bad.is_none(), || format!("n={n}: interval {bad:?}"))?;
        intervals += checked;
        let ys = y_substitution(&m);
        ensure(ys.is_unitriangular(), || format!("n={n}: substitution not unitriangular"))?;
        let pos: HashMap<Element, usize> = ys.order.iter().enumerate().map(|(i, &e)| (e, i)).collect();
        let extension = ys.order.iter().all(|&t| ys.order.iter().all(|&s| !st.ll(t, s) || pos[&t] <= pos[&s]));
        ensure(extension, || format!("n={n}: order is not a linear extension"))?;
    }
    Ok(format!("{intervals} proper intervals sum to zero; substitutions unitriangular"))
}

struct Criterion {
    id: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() {
    let criteria = [
        Criterion { id: 1, name: "element counts", limit: Duration::from_secs(1), run: c1_element_counts },
        Criterion { id: 2, name: "zero elements", limit: Duration::from_secs(10), run: c2_zero_elements },
        Criterion { id: 3, name: "oracle equivalence", limit: Duration::from_secs(300), run: c3_oracle_equivalence },
        Criterion { id: 4, name: "catalan cross-check", limit: Duration::from_secs(120), run: c4_catalan },
        Criterion { id: 5, name: "plus/star laws", limit: Duration::from_secs(120), run: c5_plus_star },
        Criterion { id: 6, name: "characterization agreement", limit: Duration::from_secs(300), run: c6_characterizations },
        Criterion { id: 7, name: "structural properties", limit: Duration::from_secs(600), run: c7_structural_properties },
        Criterion { id: 8, name: "tilde set counts", limit: Duration::from_secs(120), run: c8_tilde_counts },
        Criterion { id: 9, name: "reference tables", limit: Duration::from_secs(120), run: c9_reference_tables },
        Criterion { id: 10, name: "determinant verdicts", limit: Duration::from_secs(600), run: c10_determinant_verdicts },
        Criterion { id: 11, name: "factorization and contraction", limit: Duration::from_secs(120), run: c11_factorization },
        Criterion { id: 12, name: "mobius correctness", limit: Duration::from_secs(300), run: c12_mobius },
    ];
    let mut unexpected = Vec::new();
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > c.limit => Err(format!("{msg}; took {elapsed:.2?}, limit {:?}", c.limit)),
            other => other,
        };
        let known = KNOWN_FAILURES.iter().find(|(id, _)| *id == c.id);
        match (&outcome, known) {
            (Ok(msg), None) => println!("PASS {:>2}. {} [{elapsed:.2?}] {msg}", c.id, c.name),
            (Err(msg), Some((_, why))) => {
                println!("FAIL {:>2}. {} [{elapsed:.2?}] {msg} (known: {why})", c.id, c.name)
            }
            (Err(msg), None) => {
                println!("FAIL {:>2}. {} [{elapsed:.2?}] {msg}", c.id, c.name);
                unexpected.push(c.id);
            }
            (Ok(msg), Some(_)) => {
                println!("PASS {:>2}. {} [{elapsed:.2?}] {msg} (listed as a known failure)", c.id, c.name);
                unexpected.push(c.id);
            }
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected outcomes for criteria {unexpected:?}");
        std::process::exit(1);
    }
}
