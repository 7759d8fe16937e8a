//! Matrices whose entries are variables `x_s` indexed by elements, or zero.

use num_bigint::BigInt;
use num_traits::Zero;

use super::linalg::{det_bareiss, det_mod_p};
use crate::error::{Error, Result};
use crate::monoid::{Element, MonoidUniverse};
use crate::structure::Structure;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarMatrix {
    rows: Vec<Element>,
    cols: Vec<Element>,
    entries: Vec<Option<Element>>,
}

impl VarMatrix {
    pub fn new(rows: Vec<Element>, cols: Vec<Element>, entry: impl Fn(Element, Element) -> Option<Element>) -> Self {
        let entries = rows.iter().flat_map(|&r| cols.iter().map(move |&c| (r, c))).map(|(r, c)| entry(r, c)).collect();
        VarMatrix { rows, cols, entries }
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.rows.len(), self.cols.len())
    }

    pub fn is_square(&self) -> bool {
        self.rows.len() == self.cols.len()
    }

    pub fn rows(&self) -> &[Element] {
        &self.rows
    }

    pub fn cols(&self) -> &[Element] {
        &self.cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Option<Element> {
        self.entries[i * self.cols.len() + j]
    }

    /// Entry at row element `r`, column element `c`; `None` if either is not
    /// an index of the matrix.
    pub fn at(&self, r: Element, c: Element) -> Option<Option<Element>> {
        let i = self.rows.iter().position(|&x| x == r)?;
        let j = self.cols.iter().position(|&x| x == c)?;
        Some(self.get(i, j))
    }

    /// Number of formal zero entries.
    pub fn zero_count(&self) -> usize {
        self.entries.iter().filter(|e| e.is_none()).count()
    }

    pub fn eval_mod(&self, x: &[u64], p: u64) -> Vec<Vec<u64>> {
        (0..self.rows.len())
            .map(|i| (0..self.cols.len()).map(|j| self.get(i, j).map_or(0, |v| x[v.id()] % p)).collect())
            .collect()
    }

    pub fn eval_big(&self, x: &[BigInt]) -> Vec<Vec<BigInt>> {
        (0..self.rows.len())
            .map(|i| (0..self.cols.len()).map(|j| self.get(i, j).map_or_else(BigInt::zero, |v| x[v.id()].clone())).collect())
            .collect()
    }

    fn require_square(&self) -> Result<()> {
        if self.is_square() {
            Ok(())
        } else {
            let (r, c) = self.dims();
            Err(Error::Precondition(format!("determinant of a {r}x{c} matrix")))
        }
    }

    /// Determinant modulo the prime `p` at the assignment `x` (indexed by element id).
    pub fn det_mod(&self, x: &[u64], p: u64) -> Result<u64> {
        self.require_square()?;
        Ok(det_mod_p(self.eval_mod(x, p), p))
    }

    /// CSV with element words as headers; formal zeros are written `.`, the
    /// zero element's variable as `0`.
    pub fn to_csv(&self, u: &MonoidUniverse) -> String {
        let name = |e: Element| if u.is_zero(e) { "0".to_string() } else { u.word(e).to_string() };
        let mut out = String::new();
        out.push_str(&std::iter::once(String::new()).chain(self.cols.iter().map(|&c| name(c))).collect::<Vec<_>>().join(","));
        out.push('\n');
        for (i, &r) in self.rows.iter().enumerate() {
            let cells = (0..self.cols.len()).map(|j| self.get(i, j).map_or_else(|| ".".to_string(), name));
            out.push_str(&std::iter::once(name(r)).chain(cells).collect::<Vec<_>>().join(","));
            out.push('\n');
        }
        out
    }
}

/// Exact determinant by fraction-free elimination.
pub fn det_exact(m: &VarMatrix, x: &[BigInt]) -> Result<BigInt> {
    m.require_square()?;
    Ok(det_bareiss(m.eval_big(x)))
}

/// The full table `x_{st}` over all elements, in id order.
pub fn cayley_table(u: &MonoidUniverse) -> VarMatrix {
    let all: Vec<Element> = u.elements().collect();
    VarMatrix::new(all.clone(), all, |s, t| Some(u.mul(s, t)))
}

/// The table over non-zero elements with formal zeros where `st = 0`.
pub fn contracted_cayley(u: &MonoidUniverse) -> Result<VarMatrix> {
    if u.zero().is_none() {
        return Err(Error::NoZero(u.rank()));
    }
    let nz: Vec<Element> = u.nonzero().collect();
    Ok(VarMatrix::new(nz.clone(), nz, |s, t| Some(u.mul(s, t)).filter(|&p| !u.is_zero(p))))
}

/// Rows `L~_e`, columns `R~_e`, entries `st` when `s # t` and zero otherwise.
pub fn star_block(st: &Structure<'_>, e: Element) -> Result<VarMatrix> {
    Ok(VarMatrix::new(st.l_tilde(e)?, st.r_tilde(e)?, |s, t| st.star_product(s, t)))
}
