//! Exhaustive and sampled verifiers returning reports with a first
//! counterexample.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{plus_by_segments, star_by_segments, Structure};
use crate::error::Result;
use crate::monoid::Element;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub property: String,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<String>,
    pub detail: Option<String>,
}

impl CheckReport {
    fn new(property: &str, checked: u64, counterexample: Option<String>) -> Self {
        CheckReport {
            property: property.to_string(),
            passed: counterexample.is_none(),
            checked,
            counterexample,
            detail: None,
        }
    }

    fn with_detail(mut self, detail: String) -> Self {
        self.detail = Some(detail);
        self
    }
}

fn names(st: &Structure<'_>, xs: &[Element]) -> String {
    xs.iter().map(|&x| st.u.display(x)).collect::<Vec<_>>().join(", ")
}

/// Runs `f` over `0..len` in parallel, counting checks and keeping the
/// counterexample with the smallest index.
fn scan<F>(len: usize, f: F) -> (u64, Option<String>)
where
    F: Fn(usize) -> (u64, Option<String>) + Sync,
{
    (0..len)
        .into_par_iter()
        .map(|i| {
            let (c, bad) = f(i);
            (c, bad.map(|b| (i, b)))
        })
        .reduce(
            || (0, None),
            |(c1, b1), (c2, b2)| {
                let bad = match (b1, b2) {
                    (Some(a), Some(b)) => Some(if a.0 <= b.0 { a } else { b }),
                    (a, b) => a.or(b),
                };
                (c1 + c2, bad)
            },
        )
        .map_second()
}

trait MapSecond {
    fn map_second(self) -> (u64, Option<String>);
}

impl MapSecond for (u64, Option<(usize, String)>) {
    fn map_second(self) -> (u64, Option<String>) {
        (self.0, self.1.map(|(_, s)| s))
    }
}

/// `s+ s = s`, `s s* = s`, and agreement of the search-based `+`/`*` with
/// the segment rule.
pub fn check_plus_star_laws(st: &Structure<'_>) -> Result<CheckReport> {
    let u = st.u;
    let mut checked = 0;
    for s in u.nonzero() {
        checked += 1;
        let (p, q) = (st.plus(s), st.star(s));
        let bad = if u.mul(p, s) != s {
            Some("s+ s != s")
        } else if u.mul(s, q) != s {
            Some("s s* != s")
        } else if plus_by_segments(u, s)? != p || star_by_segments(u, s)? != q {
            Some("segment rule disagrees with minimum stabilizer")
        } else {
            None
        };
        if let Some(why) = bad {
            return Ok(CheckReport::new("plus_star_laws", checked, Some(format!("{}: {why}", u.display(s)))));
        }
    }
    Ok(CheckReport::new("plus_star_laws", checked, None))
}

/// `s = s+ s*` for every non-zero `s`.
pub fn check_singleton_rich(st: &Structure<'_>) -> CheckReport {
    let u = st.u;
    let mut checked = 0;
    for s in u.nonzero() {
        checked += 1;
        if u.mul(st.plus(s), st.star(s)) != s {
            return CheckReport::new("singleton_rich", checked, Some(u.display(s)));
        }
    }
    CheckReport::new("singleton_rich", checked, None)
}

/// `s << t << x` implies `s << x` over non-zero elements.
pub fn check_ll_transitive(st: &Structure<'_>) -> CheckReport {
    let nz: Vec<Element> = st.u.nonzero().collect();
    let up: Vec<Vec<Element>> = nz.iter().map(|&s| nz.iter().copied().filter(|&t| st.ll(s, t)).collect()).collect();
    let pos = |e: Element| nz.binary_search(&e).unwrap();
    let (checked, bad) = scan(nz.len(), |i| {
        let s = nz[i];
        let mut c = 0;
        for &t in &up[i] {
            for &x in &up[pos(t)] {
                c += 1;
                if !st.ll(s, x) {
                    return (c, Some(names(st, &[s, t, x])));
                }
            }
        }
        (c, None)
    });
    CheckReport::new("ll_transitive", checked, bad)
}

/// `s << t` and `t << s` imply `s = t` over non-zero elements.
pub fn check_ll_antisymmetric(st: &Structure<'_>) -> CheckReport {
    let nz: Vec<Element> = st.u.nonzero().collect();
    let mut checked = 0;
    for (i, &s) in nz.iter().enumerate() {
        for &t in &nz[i + 1..] {
            checked += 1;
            if st.ll(s, t) && st.ll(t, s) {
                return CheckReport::new("ll_antisymmetric", checked, Some(names(st, &[s, t])));
            }
        }
    }
    CheckReport::new("ll_antisymmetric", checked, None)
}

/// Algebraic and segment-level `<<` and `#` agree on all non-zero pairs.
pub fn check_characterizations(st: &Structure<'_>) -> Result<(CheckReport, CheckReport)> {
    let nz: Vec<Element> = st.u.nonzero().collect();
    let run = |name: &str, alg: &(dyn Fn(Element, Element) -> bool + Sync), comb: &(dyn Fn(Element, Element) -> Result<bool> + Sync)| {
        let (checked, bad) = scan(nz.len(), |i| {
            let s = nz[i];
            for &t in &nz {
                let c = comb(s, t).unwrap_or(!alg(s, t));
                if alg(s, t) != c {
                    return (nz.len() as u64, Some(format!("{} (algebraic {})", names(st, &[s, t]), alg(s, t))));
                }
            }
            (nz.len() as u64, None)
        });
        CheckReport::new(name, checked, bad)
    };
    Ok((
        run("ll_characterization", &|s, t| st.ll(s, t), &|s, t| st.ll_by_segments(s, t)),
        run("sharp_characterization", &|s, t| st.sharp(s, t), &|s, t| st.sharp_by_segments(s, t)),
    ))
}

/// `N'_(w'',w) ⊆ N'_(w'',w')` for every chain `w'' << w' << w`.
pub fn check_n_prime_nesting(st: &Structure<'_>) -> Result<CheckReport> {
    let chains = chains(st);
    let mut checked = 0;
    for &[w2, w1, w] in &chains {
        checked += 1;
        let (outer, _) = st.n_prime_sets(w2, w)?;
        let (inner, _) = st.n_prime_sets(w2, w1)?;
        if !outer.iter().all(|k| inner.contains(k)) {
            return Ok(CheckReport::new("n_prime_nesting", checked, Some(names(st, &[w2, w1, w]))));
        }
    }
    Ok(CheckReport::new("n_prime_nesting", checked, None))
}

/// `|L~_e|` and `|R~_e|` match the segment formula for every non-zero idempotent.
pub fn check_tilde_counts(st: &Structure<'_>) -> Result<CheckReport> {
    let mut checked = 0;
    for e in st.nonzero_idempotents() {
        checked += 1;
        let actual = (st.l_tilde(e)?.len(), st.r_tilde(e)?.len());
        let predicted = st.tilde_count_formula(e)?;
        if actual != predicted {
            return Ok(CheckReport::new(
                "tilde_counts",
                checked,
                Some(format!("{}: actual {actual:?}, formula {predicted:?}", st.u.display(e))),
            ));
        }
    }
    Ok(CheckReport::new("tilde_counts", checked, None))
}

/// All chains `s'' << s' << s` of non-zero elements, as `[s'', s', s]`.
pub fn chains(st: &Structure<'_>) -> Vec<[Element; 3]> {
    let nz: Vec<Element> = st.u.nonzero().collect();
    let mut out = Vec::new();
    for &s in &nz {
        for &s1 in nz.iter().filter(|&&x| st.ll(x, s)) {
            for &s2 in nz.iter().filter(|&&x| st.ll(x, s1)) {
                out.push([s2, s1, s]);
            }
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SmoothnessMode {
    /// Every pair of chains with a compatible bottom.
    Exhaustive,
    /// Random chain pairs with a compatible bottom; condition (3) is still
    /// checked on every chain.
    Sampled { samples: u64, seed: u64 },
}

/// Outcome of the first two smoothness conditions on a pair of chains.
fn pair_conditions(st: &Structure<'_>, s: [Element; 3], t: [Element; 3]) -> Result<(Option<&'static str>, usize)> {
    let u = st.u;
    let ([s2, s1, _], [t2, t1, t0]) = (s, t);
    let a = u.mul(st.plus(s2), s1);
    let b = u.mul(t1, st.star(t2));
    let (fixed, rounds) = st.phi_fix(a, b)?;
    if fixed != st.phi(a, b) {
        return Ok((Some("phi fixpoint differs from phi"), rounds));
    }
    let x = st.star(a);
    let lhs = u.mul(u.mul(x, t1), st.star(t2)) == t2;
    let rhs = u.mul(u.mul(x, t0), st.star(t2)) == t2;
    Ok((if lhs != rhs { Some("middle/top absorption disagree") } else { None }, rounds))
}

fn third_condition(st: &Structure<'_>, [s2, s1, s]: [Element; 3]) -> bool {
    let u = st.u;
    let holds = |top: Element| u.mul(s2, st.star(u.mul(st.plus(s2), top))) == s2;
    !holds(s) || holds(s1)
}

/// The three smoothness conditions over chains `s'' << s' << s`,
/// `t'' << t' << t`, the first two guarded by `s'' # t''`.
pub fn check_ll_smooth(st: &Structure<'_>, mode: SmoothnessMode) -> Result<CheckReport> {
    let chains = chains(st);
    let size = st.u.len();
    let mut by_bottom: Vec<Vec<usize>> = vec![Vec::new(); size];
    for (k, c) in chains.iter().enumerate() {
        by_bottom[c[0].id()].push(k);
    }
    let partners: Vec<Vec<Element>> = (0..size)
        .map(|s| {
            st.u.nonzero()
                .filter(|&t| !by_bottom[t.id()].is_empty() && st.sharp(Element(s as u32), t))
                .collect()
        })
        .collect();

    if let Some(c) = chains.iter().find(|&&c| !third_condition(st, c)) {
        return Ok(CheckReport::new("ll_smooth", chains.len() as u64, Some(format!("condition 3: {}", names(st, c)))));
    }

    let max_rounds = std::sync::atomic::AtomicUsize::new(0);
    let describe = |s: [Element; 3], t: [Element; 3], why: &str| {
        format!("{why}: s-chain [{}], t-chain [{}]", names(st, &s), names(st, &t))
    };
    let (checked, bad) = match mode {
        SmoothnessMode::Exhaustive => scan(chains.len(), |i| {
            let s = chains[i];
            let mut c = 0;
            for &t2 in &partners[s[0].id()] {
                for &k in &by_bottom[t2.id()] {
                    c += 1;
                    match pair_conditions(st, s, chains[k]) {
                        Ok((None, r)) => {
                            max_rounds.fetch_max(r, std::sync::atomic::Ordering::Relaxed);
                        }
                        Ok((Some(why), _)) => return (c, Some(describe(s, chains[k], why))),
                        Err(e) => return (c, Some(e.to_string())),
                    }
                }
            }
            (c, None)
        }),
        SmoothnessMode::Sampled { samples, seed } => {
            const CHUNK: u64 = 10_000;
            let chunks = samples.div_ceil(CHUNK) as usize;
            scan(chunks, |ci| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(ci as u64);
                let todo = CHUNK.min(samples - ci as u64 * CHUNK);
                let mut c = 0;
                for _ in 0..todo {
                    let s = chains[rng.gen_range(0..chains.len())];
                    let ps = &partners[s[0].id()];
                    if ps.is_empty() {
                        continue;
                    }
                    let t2 = ps[rng.gen_range(0..ps.len())];
                    let list = &by_bottom[t2.id()];
                    let t = chains[list[rng.gen_range(0..list.len())]];
                    c += 1;
                    match pair_conditions(st, s, t) {
                        Ok((None, r)) => {
                            max_rounds.fetch_max(r, std::sync::atomic::Ordering::Relaxed);
                        }
                        Ok((Some(why), _)) => return (c, Some(describe(s, t, why))),
                        Err(e) => return (c, Some(e.to_string())),
                    }
                }
                (c, None)
            })
        }
    };
    Ok(CheckReport::new("ll_smooth", checked, bad).with_detail(format!(
        "{} chains; phi fixpoint reached within {} round(s)",
        chains.len(),
        max_rounds.into_inner()
    )))
}
