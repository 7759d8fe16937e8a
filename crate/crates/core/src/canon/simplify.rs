//! Local rewrites applied to the front of the output word during reduction.
//!
//! Each rule is a prefix pattern written as offsets from a base letter `r`,
//! together with its replacement. All arithmetic is circular.

use crate::words::circ;

struct Rule {
    patterns: &'static [&'static [i64]],
    replacement: &'static [i64],
}

const RULES: &[Rule] = &[
    Rule { patterns: &[&[0, 1, 2], &[0, 2, 1]], replacement: &[0, 2] },
    Rule { patterns: &[&[0, 2, 3], &[0, 3, 2]], replacement: &[0, 1, 3] },
    Rule { patterns: &[&[0, -1, 1], &[-1, 0, 1]], replacement: &[-1, 1] },
    Rule { patterns: &[&[-1, 0, 1, 2], &[-1, 0, 2, 1]], replacement: &[-1, 0, 2] },
    Rule { patterns: &[&[0, -1, 1, 2], &[0, -1, 2, 1]], replacement: &[0, -1, 2] },
    Rule {
        patterns: &[&[0, -1, 2, 3], &[0, -1, 3, 2], &[-1, 0, 2, 3], &[-1, 0, 3, 2]],
        replacement: &[-1, 1, 3],
    },
    Rule { patterns: &[&[0, -1, 2]], replacement: &[-1, 0, 2] },
];

fn matches(y: &[usize], pattern: &[i64], n: usize) -> Option<i64> {
    if y.len() < pattern.len() {
        return None;
    }
    let r = y[0] as i64 - pattern[0];
    pattern
        .iter()
        .zip(y)
        .all(|(&off, &l)| circ(r + off, n) == l)
        .then_some(r)
}

fn step(y: &[usize], n: usize) -> Option<Vec<usize>> {
    for rule in RULES {
        for pattern in rule.patterns {
            if let Some(r) = matches(y, pattern, n) {
                let mut out: Vec<usize> = rule.replacement.iter().map(|&o| circ(r + o, n)).collect();
                out.extend_from_slice(&y[pattern.len()..]);
                return Some(out);
            }
        }
    }
    None
}

/// Rewrites the prefix of `y` until no rule applies.
pub(crate) fn simplify(mut y: Vec<usize>, n: usize) -> Vec<usize> {
    while let Some(next) = step(&y, n) {
        y = next;
    }
    y
}
