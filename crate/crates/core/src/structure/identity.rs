//! Brute-force checking of monoid identities such as `x.y = y.x`.

use std::collections::BTreeSet;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::monoid::{Element, MonoidUniverse};

/// A word over named variables; `1` is the empty word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term(Vec<String>);

impl Term {
    pub fn variables(&self) -> impl Iterator<Item = &str> {
        self.0.iter().map(String::as_str)
    }
}

impl FromStr for Term {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Term(Vec::new()));
        }
        let vars = s
            .split('.')
            .filter(|v| v.trim() != "1")
            .map(|v| {
                let v = v.trim();
                let ok = v.chars().next().is_some_and(|c| c.is_ascii_alphabetic())
                    && v.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                if ok {
                    Ok(v.to_string())
                } else {
                    Err(Error::Parse { input: s.to_string(), reason: format!("bad variable {v:?}") })
                }
            })
            .collect::<Result<_>>()?;
        Ok(Term(vars))
    }
}

/// Default bound on the number of assignments tried.
pub const IDENTITY_ASSIGNMENT_CAP: usize = 10_000_000;

/// Whether `lhs = rhs` holds under every assignment of the variables to
/// elements of `u`.
pub fn verify_identity(u: &MonoidUniverse, lhs: &Term, rhs: &Term) -> Result<bool> {
    let vars: Vec<&str> = lhs.variables().chain(rhs.variables()).collect::<BTreeSet<_>>().into_iter().collect();
    let total = (0..vars.len()).try_fold(1usize, |acc, _| acc.checked_mul(u.len()));
    if total.is_none_or(|t| t > IDENTITY_ASSIGNMENT_CAP) {
        return Err(Error::Resource { what: "identity assignments".into(), limit: IDENTITY_ASSIGNMENT_CAP });
    }
    let slot = |t: &Term| -> Vec<usize> { t.variables().map(|v| vars.binary_search(&v).unwrap()).collect() };
    let (l, r) = (slot(lhs), slot(rhs));
    let mut assignment = vec![Element(0); vars.len()];
    loop {
        let eval = |idx: &[usize]| u.product(idx.iter().map(|&k| assignment[k]));
        if eval(&l) != eval(&r) {
            return Ok(false);
        }
        // odometer increment
        let mut k = 0;
        loop {
            if k == vars.len() {
                return Ok(true);
            }
            if assignment[k].id() + 1 < u.len() {
                assignment[k] = Element(assignment[k].0 + 1);
                break;
            }
            assignment[k] = Element(0);
            k += 1;
        }
    }
}
