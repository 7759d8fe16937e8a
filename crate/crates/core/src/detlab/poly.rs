//! Sparse multivariate integer polynomials and symbolic determinants.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;

use super::linalg::{add_mod, mul_mod, reduce_i64};
use super::matrix::VarMatrix;
use crate::error::{Error, Result};
use crate::monoid::MonoidUniverse;

/// Sorted list of variable ids, repeated for powers.
pub type Monomial = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SparsePoly {
    terms: BTreeMap<Monomial, i64>,
}

impl SparsePoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(Vec::new(), c);
        p
    }

    pub fn var(v: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(vec![v], 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, i64)> {
        self.terms.iter().map(|(m, &c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().checked_add(c).expect("coefficient overflow");
                if sum == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = self.clone();
        for (m, c) in other.terms() {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn scale(&self, k: i64) -> SparsePoly {
        let mut out = Self::zero();
        for (m, c) in self.terms() {
            out.add_term(m.clone(), c.checked_mul(k).expect("coefficient overflow"));
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.scale(-1))
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        let mut out = Self::zero();
        for (m1, c1) in self.terms() {
            for (m2, c2) in other.terms() {
                let mut m = m1.clone();
                m.extend_from_slice(m2);
                m.sort_unstable();
                out.add_term(m, c1.checked_mul(c2).expect("coefficient overflow"));
            }
        }
        out
    }

    /// Degree of every term if they all agree.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut degs = self.terms.keys().map(Vec::len);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    pub fn eval_mod(&self, x: &[u64], p: u64) -> u64 {
        self.terms().fold(0, |acc, (m, c)| {
            let v = m.iter().fold(reduce_i64(c, p), |a, &i| mul_mod(a, x[i as usize] % p, p));
            add_mod(acc, v, p)
        })
    }

    pub fn eval_big(&self, x: &[BigInt]) -> BigInt {
        self.terms()
            .map(|(m, c)| m.iter().fold(BigInt::from(c), |a, &i| a * &x[i as usize]))
            .sum()
    }

    /// Writes the polynomial with element names as variable subscripts.
    pub fn render(&self, u: &MonoidUniverse) -> String {
        self.render_with(|v| u.word(crate::monoid::Element(v)).to_string())
    }

    fn render_with(&self, name: impl Fn(u32) -> String) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms().enumerate() {
            let sign = if c < 0 { "-" } else if k > 0 { "+" } else { "" };
            if k > 0 {
                out.push(' ');
            }
            out.push_str(sign);
            if k > 0 {
                out.push(' ');
            }
            let mag = c.unsigned_abs();
            let vars: Vec<String> = m.iter().map(|&v| format!("x[{}]", name(v))).collect();
            match (mag, vars.is_empty()) {
                (_, true) => out.push_str(&mag.to_string()),
                (1, false) => out.push_str(&vars.join("*")),
                _ => out.push_str(&format!("{mag}*{}", vars.join("*"))),
            }
        }
        out
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render_with(|v| v.to_string()))
    }
}

/// Largest dimension accepted by [`det_symbolic`].
pub const SYMBOLIC_CAP: usize = 10;

/// Symbolic determinant by Laplace expansion over column subsets.
pub fn det_symbolic(m: &VarMatrix, cap: usize) -> Result<SparsePoly> {
    let (r, c) = m.dims();
    if r != c {
        return Err(Error::Precondition(format!("determinant of a {r}x{c} matrix")));
    }
    if r > cap.min(20) {
        return Err(Error::Resource { what: "symbolic determinant dimension".into(), limit: cap.min(20) });
    }
    // dp[mask]: determinant of the first popcount(mask) rows on the columns in mask
    let mut dp: Vec<SparsePoly> = vec![SparsePoly::zero(); 1 << r];
    dp[0] = SparsePoly::constant(1);
    for mask in 1usize..(1 << r) {
        let row = mask.count_ones() as usize - 1;
        let mut acc = SparsePoly::zero();
        for col in 0..r {
            if mask >> col & 1 == 0 {
                continue;
            }
            let Some(v) = m.get(row, col) else { continue };
            let prev = &dp[mask & !(1 << col)];
            if prev.is_zero() {
                continue;
            }
            // sign: columns in mask above `col`
            let above = (mask >> (col + 1)).count_ones();
            let term = prev.mul(&SparsePoly::var(v.0));
            acc = if above % 2 == 0 { acc.add(&term) } else { acc.sub(&term) };
        }
        dp[mask] = acc;
    }
    Ok(dp.pop().unwrap())
}
