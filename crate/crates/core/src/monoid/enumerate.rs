use std::collections::BTreeSet;

use serde::Serialize;

use crate::canon::{CanonicalForm, Segment};
use crate::error::{Error, Result};
use crate::oracle::{catalan_presentation, CompletionLimits, RewritingSystem};
use crate::words::circ;

/// All canonical forms of rank `n >= 4`, generated directly from segment
/// arrangements: the covered positions form blocks separated by at least two
/// free positions, and every two-letter block comes in both orientations.
pub fn enumerate_canonical(n: usize) -> Result<Vec<CanonicalForm>> {
    if n < 4 {
        return Err(Error::Precondition(format!("direct enumeration needs rank >= 4, got {n}")));
    }
    if n > 24 {
        return Err(Error::Resource { what: "rank for mask enumeration".into(), limit: 24 });
    }
    let mut out = vec![CanonicalForm::identity(n), CanonicalForm::zero(n)?];
    for mask in 1u32..(1 << n) - 1 {
        let covered = |i: usize| mask >> (circ(i as i64, n) - 1) & 1 == 1;
        // cyclic blocks, starting right after an uncovered position
        let Some(anchor) = (1..=n).find(|&i| !covered(i) && covered(i + 1)) else { continue };
        let mut blocks: Vec<(usize, usize)> = Vec::new();
        let mut free_run = 0;
        let mut ok = true;
        for k in 1..=n {
            let p = circ((anchor + k) as i64, n);
            if covered(p) {
                if free_run == 1 {
                    ok = false;
                    break;
                }
                match blocks.last_mut() {
                    Some(b) if free_run == 0 => b.1 = p,
                    _ => blocks.push((p, p)),
                }
                free_run = 0;
            } else {
                free_run += 1;
            }
        }
        if !ok || free_run == 1 {
            continue;
        }
        let mut choices: Vec<Vec<Segment>> = vec![Vec::new()];
        for &(s, e) in &blocks {
            let span = crate::words::clockwise(s, e, n);
            let options = match span {
                0 => vec![Segment::singleton(s)],
                1 => vec![Segment::blocker(s, n), Segment::reversed_pair(s, n)],
                d => vec![Segment::run(s, d, n)],
            };
            choices = choices
                .into_iter()
                .flat_map(|prefix| {
                    options.iter().map(move |&o| {
                        let mut v = prefix.clone();
                        v.push(o);
                        v
                    })
                })
                .collect();
        }
        for segs in choices {
            out.push(CanonicalForm::from_segments(n, segs)?);
        }
    }
    let distinct: BTreeSet<String> = out.iter().map(|c| c.word().to_string()).collect();
    debug_assert_eq!(distinct.len(), out.len());
    Ok(out)
}

/// `C(2n, n) / (n + 1)`.
pub fn catalan_number(n: usize) -> u128 {
    (0..n as u128).fold(1u128, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CatalanCount {
    pub degree: usize,
    pub generators: usize,
    pub oracle_count: usize,
    pub formula: u128,
}

/// Order of the Catalan monoid of degree `n` (generators `a_1..a_{n-1}`)
/// computed from its presentation, next to the closed formula.
pub fn catalan_cardinality(n: usize) -> Result<CatalanCount> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let oracle_count = if n == 1 {
        1
    } else {
        let sys = RewritingSystem::complete(&catalan_presentation(n)?, CompletionLimits::default())?;
        sys.elements(1_000_000)?.len()
    };
    Ok(CatalanCount { degree: n, generators: n - 1, oracle_count, formula: catalan_number(n) })
}

pub fn catalan_cardinality_check(n: usize) -> Result<bool> {
    let c = catalan_cardinality(n)?;
    Ok(c.oracle_count as u128 == c.formula)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monoid::build_universe;

    #[test]
    fn catalan_numbers() {
        let v: Vec<u128> = (0..=8).map(catalan_number).collect();
        assert_eq!(v, vec![1, 1, 2, 5, 14, 42, 132, 429, 1430]);
    }

    #[test]
    fn catalan_examples() {
        assert_eq!(catalan_cardinality(3).unwrap().oracle_count, 5);
        assert_eq!(catalan_cardinality(4).unwrap().oracle_count, 14);
        for n in 1..=7 {
            assert!(catalan_cardinality_check(n).unwrap(), "n={n}");
        }
    }

    #[test]
    fn direct_enumeration_matches_closure() {
        for n in 4..=9 {
            let u = build_universe(n).unwrap();
            let direct = enumerate_canonical(n).unwrap();
            assert_eq!(direct.len(), u.len(), "n={n}");
            assert!(direct.iter().all(|cf| u.lookup(cf).is_some()), "n={n}");
        }
        assert!(enumerate_canonical(3).is_err());
    }
}
