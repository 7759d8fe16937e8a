//! Shortlex Knuth-Bendix completion for finite monoid presentations.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

pub(crate) type Str = Vec<u16>;

/// Shortlex order: longer is bigger, ties broken lexicographically.
fn shortlex_gt(a: &[u16], b: &[u16]) -> bool {
    (a.len(), a) > (b.len(), b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompletionLimits {
    pub max_rules: usize,
    pub max_rounds: usize,
}

impl Default for CompletionLimits {
    fn default() -> Self {
        CompletionLimits { max_rules: 50_000, max_rounds: 200 }
    }
}

/// A rule set indexed by left-hand side.
#[derive(Debug, Clone, Default)]
pub(crate) struct Rules {
    rules: Vec<(Str, Str)>,
    index: HashMap<Str, usize>,
    max_lhs: usize,
}

impl Rules {
    fn rebuild(rules: Vec<(Str, Str)>) -> Self {
        let index = rules.iter().enumerate().map(|(k, (l, _))| (l.clone(), k)).collect();
        let max_lhs = rules.iter().map(|(l, _)| l.len()).max().unwrap_or(0);
        Rules { rules, index, max_lhs }
    }

    pub(crate) fn len(&self) -> usize {
        self.rules.len()
    }

    pub(crate) fn iter(&self) -> impl Iterator<Item = &(Str, Str)> {
        self.rules.iter()
    }

    /// Irreducible descendant of `w`. Scans left to right keeping an
    /// irreducible stack; a match at the stack top is replaced by its
    /// right-hand side, which is re-fed ahead of the remaining input.
    pub(crate) fn reduce(&self, w: &[u16]) -> Str {
        let mut out: Str = Vec::with_capacity(w.len());
        let mut pending: Vec<u16> = w.iter().rev().copied().collect();
        while let Some(c) = pending.pop() {
            out.push(c);
            let top = out.len();
            for k in 1..=self.max_lhs.min(top) {
                if let Some(&r) = self.index.get(&out[top - k..]) {
                    out.truncate(top - k);
                    pending.extend(self.rules[r].1.iter().rev());
                    break;
                }
            }
        }
        out
    }
}

fn contains(hay: &[u16], needle: &[u16]) -> bool {
    needle.len() <= hay.len() && hay.windows(needle.len()).any(|w| w == needle)
}

/// Runs completion on the given equations. Returns a confluent, interreduced
/// system or a resource error if a limit is hit first.
pub(crate) fn complete(equations: &[(Str, Str)], limits: CompletionLimits) -> Result<Rules> {
    let mut rules = Rules::default();
    let mut pending: Vec<(Str, Str)> = equations.to_vec();
    for _round in 0..limits.max_rounds {
        while let Some((a, b)) = pending.pop() {
            let (a, b) = (rules.reduce(&a), rules.reduce(&b));
            if a == b {
                continue;
            }
            let (l, r) = if shortlex_gt(&a, &b) { (a, b) } else { (b, a) };
            let mut keep: Vec<(Str, Str)> = Vec::with_capacity(rules.len() + 1);
            for (ol, or) in rules.rules.drain(..) {
                if contains(&ol, &l) {
                    pending.push((ol, or));
                } else {
                    keep.push((ol, or));
                }
            }
            keep.push((l, r));
            let mut next = Rules::rebuild(keep);
            let reduced: Vec<(Str, Str)> =
                next.rules.iter().map(|(ol, or)| (ol.clone(), next.reduce(or))).collect();
            next = Rules::rebuild(reduced);
            rules = next;
            if rules.len() > limits.max_rules {
                return Err(Error::Resource { what: "rewriting rules".into(), limit: limits.max_rules });
            }
        }
        let mut seen: HashSet<(Str, Str)> = HashSet::new();
        for (l1, r1) in rules.iter() {
            for (l2, r2) in rules.iter() {
                for k in 1..l1.len().min(l2.len()) {
                    if l1[l1.len() - k..] != l2[..k] {
                        continue;
                    }
                    let mut w1 = r1.clone();
                    w1.extend_from_slice(&l2[k..]);
                    let mut w2 = l1[..l1.len() - k].to_vec();
                    w2.extend_from_slice(r2);
                    let (x, y) = (rules.reduce(&w1), rules.reduce(&w2));
                    if x != y && seen.insert((x.clone(), y.clone())) {
                        pending.push((x, y));
                    }
                }
            }
        }
        if pending.is_empty() {
            return Ok(rules);
        }
    }
    Err(Error::Resource { what: "completion rounds".into(), limit: limits.max_rounds })
}

/// Breadth-first enumeration of irreducible words, shortest first.
pub(crate) fn irreducibles(rules: &Rules, generators: u16, cap: usize) -> Result<Vec<Str>> {
    let mut out: Vec<Str> = vec![Vec::new()];
    let mut seen: HashSet<Str> = HashSet::from([Vec::new()]);
    let mut queue: VecDeque<usize> = VecDeque::from([0]);
    while let Some(k) = queue.pop_front() {
        for g in 1..=generators {
            let mut w = out[k].clone();
            w.push(g);
            let v = rules.reduce(&w);
            if seen.insert(v.clone()) {
                if out.len() >= cap {
                    return Err(Error::Resource { what: "monoid elements".into(), limit: cap });
                }
                out.push(v);
                queue.push_back(out.len() - 1);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn free_commutative_idempotent_pair() {
        let eqs = vec![(vec![1, 1], vec![1]), (vec![2, 2], vec![2]), (vec![2, 1], vec![1, 2])];
        let rules = complete(&eqs, CompletionLimits::default()).unwrap();
        assert_eq!(rules.reduce(&[2, 1, 2, 1, 1]), vec![1, 2]);
        assert_eq!(irreducibles(&rules, 2, 100).unwrap().len(), 4);
    }

    #[test]
    fn completion_adds_overlap_rules() {
        // aba = b, bab = a style systems need new rules from overlaps
        let eqs = vec![(vec![1, 1], vec![1]), (vec![1, 2, 1], vec![2])];
        let rules = complete(&eqs, CompletionLimits::default()).unwrap();
        assert!(rules.len() >= 2);
        let a = rules.reduce(&[1, 2, 1, 1]);
        let b = rules.reduce(&[2, 1]);
        assert_eq!(a, b);
    }

    #[test]
    fn cap_is_reported() {
        let rules = complete(&[], CompletionLimits::default()).unwrap();
        assert!(matches!(irreducibles(&rules, 2, 50), Err(Error::Resource { .. })));
    }
}
