//! The Möbius function of the `<<` order and the induced change of variables.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monoid::Element;
use crate::structure::{check_ll_antisymmetric, Structure};

#[derive(Debug, Clone)]
pub struct MobiusTable {
    /// Non-zero elements in a linear extension of `<<`.
    order: Vec<Element>,
    values: HashMap<(Element, Element), i64>,
}

impl MobiusTable {
    /// `mu(t, s)`; zero unless `t << s`.
    pub fn get(&self, t: Element, s: Element) -> i64 {
        self.values.get(&(t, s)).copied().unwrap_or(0)
    }

    pub fn linear_extension(&self) -> &[Element] {
        &self.order
    }

    /// Stored pairs `(t, s, mu(t, s))` sorted by ids.
    pub fn entries(&self) -> Vec<(Element, Element, i64)> {
        let mut v: Vec<_> = self.values.iter().map(|(&(t, s), &m)| (t, s, m)).collect();
        v.sort();
        v
    }
}

/// Möbius function over non-zero elements. Fails if `<<` is not
/// antisymmetric there.
pub fn mobius(st: &Structure<'_>) -> Result<MobiusTable> {
    let anti = check_ll_antisymmetric(st);
    if !anti.passed {
        return Err(Error::NotAntisymmetric(anti.counterexample.unwrap_or_default()));
    }
    let mut order: Vec<Element> = st.universe().nonzero().collect();
    let below = |s: Element| order_below(st, s);
    order.sort_by_key(|&s| (below(s), s));
    let mut values = HashMap::new();
    for (i, &t) in order.iter().enumerate() {
        values.insert((t, t), 1);
        for (k, &s) in order.iter().enumerate().skip(i + 1) {
            if !st.ll(t, s) {
                continue;
            }
            let sum: i64 = order[i..k]
                .iter()
                .filter(|&&x| st.ll(t, x) && st.ll(x, s))
                .map(|&x| values.get(&(t, x)).copied().unwrap_or(0))
                .sum();
            values.insert((t, s), -sum);
        }
    }
    Ok(MobiusTable { order, values })
}

fn order_below(st: &Structure<'_>, s: Element) -> usize {
    st.universe().nonzero().filter(|&t| st.ll(t, s)).count()
}

/// Both interval sums `sum_{t<<u<<s} mu(t,u)` and `sum_{t<<u<<s} mu(u,s)`
/// vanish for `t << s`, `t != s`. Returns the first failing interval.
pub fn check_interval_sums(st: &Structure<'_>, m: &MobiusTable) -> (u64, Option<(Element, Element)>) {
    let nz = m.linear_extension();
    let mut checked = 0;
    for &t in nz {
        for &s in nz {
            if t == s || !st.ll(t, s) {
                continue;
            }
            checked += 1;
            let interval = nz.iter().filter(|&&u| st.ll(t, u) && st.ll(u, s));
            let left: i64 = interval.clone().map(|&u| m.get(t, u)).sum();
            let right: i64 = interval.map(|&u| m.get(u, s)).sum();
            if left != 0 || right != 0 {
                return (checked, Some((t, s)));
            }
        }
    }
    (checked, None)
}

/// `y_s = sum_{t<<s} mu(t,s) x_t` as an integer matrix in the order of a
/// linear extension: `matrix[i][j] = mu(order[j], order[i])`.
#[derive(Debug, Clone, Serialize)]
pub struct YSubstitution {
    pub order: Vec<Element>,
    pub matrix: Vec<Vec<i64>>,
}

pub fn y_substitution(m: &MobiusTable) -> YSubstitution {
    let order = m.linear_extension().to_vec();
    let matrix = order.iter().map(|&s| order.iter().map(|&t| m.get(t, s)).collect()).collect();
    YSubstitution { order, matrix }
}

impl YSubstitution {
    /// Lower unitriangular in the stored order.
    pub fn is_unitriangular(&self) -> bool {
        self.matrix.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, &v)| match j.cmp(&i) {
                std::cmp::Ordering::Equal => v == 1,
                std::cmp::Ordering::Greater => v == 0,
                std::cmp::Ordering::Less => true,
            })
        })
    }

    /// `y` from `x`, both indexed by element id; entries outside the order
    /// are left untouched.
    pub fn apply(&self, x: &[i64]) -> Vec<i64> {
        let mut y = x.to_vec();
        for (i, &s) in self.order.iter().enumerate() {
            y[s.id()] = self.order.iter().enumerate().map(|(j, &t)| self.matrix[i][j] * x[t.id()]).sum();
        }
        y
    }

    /// Inverts [`apply`](Self::apply) by forward substitution.
    pub fn invert(&self, y: &[i64]) -> Vec<i64> {
        let mut x = y.to_vec();
        for (i, &s) in self.order.iter().enumerate() {
            let partial: i64 = self.order[..i].iter().enumerate().map(|(j, &t)| self.matrix[i][j] * x[t.id()]).sum();
            x[s.id()] = y[s.id()] - partial;
        }
        x
    }
}
