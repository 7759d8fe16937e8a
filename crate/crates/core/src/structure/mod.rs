//! Idempotents, left/right identities, the `<<` preorder, the `#` test and
//! the smoothness properties built from them.

mod checks;
mod combinatorial;
mod identity;

use serde::Serialize;

pub use checks::{
    chains, check_characterizations, check_ll_antisymmetric, check_ll_smooth, check_ll_transitive,
    check_n_prime_nesting, check_plus_star_laws, check_singleton_rich, check_tilde_counts, CheckReport,
    SmoothnessMode,
};
pub use identity::{verify_identity, Term};

use crate::canon::CanonicalForm;
use crate::error::{Error, Result};
use crate::monoid::{Element, MonoidUniverse};

/// Segment-level decomposition `w = w_I N^l N^r w_I` of a non-zero element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PlusStarDecomposition {
    /// Product of the non-blocker segments.
    pub w_i: Element,
    /// Product of the first letters of the blockers.
    pub n_left: Element,
    /// Product of the second letters of the blockers.
    pub n_right: Element,
    pub i_w: Vec<usize>,
    pub n_w: Vec<usize>,
}

/// Precomputed `+`, `*` and `<<` over a universe.
#[derive(Debug, Clone)]
pub struct Structure<'u> {
    u: &'u MonoidUniverse,
    plus: Vec<Element>,
    star: Vec<Element>,
    ll: Vec<bool>,
}

/// `e <= f` in the natural order on idempotents.
#[inline]
pub fn idempotent_le(u: &MonoidUniverse, e: Element, f: Element) -> bool {
    u.mul(e, f) == e && u.mul(f, e) == e
}

/// Minimum of a set of idempotents, if it has one.
fn minimum(u: &MonoidUniverse, set: &[Element]) -> Option<Element> {
    let mut cand = *set.first()?;
    for &f in &set[1..] {
        if idempotent_le(u, f, cand) {
            cand = f;
        }
    }
    set.iter().all(|&f| idempotent_le(u, cand, f)).then_some(cand)
}

/// The least idempotent `e` with `e * s = s`, by search.
pub fn plus_by_search(u: &MonoidUniverse, s: Element) -> Option<Element> {
    let set: Vec<Element> = u.idempotents().iter().copied().filter(|&e| u.mul(e, s) == s).collect();
    minimum(u, &set)
}

/// The least idempotent `e` with `s * e = s`, by search.
pub fn star_by_search(u: &MonoidUniverse, s: Element) -> Option<Element> {
    let set: Vec<Element> = u.idempotents().iter().copied().filter(|&e| u.mul(s, e) == s).collect();
    minimum(u, &set)
}

fn lookup_segments(u: &MonoidUniverse, segs: Vec<crate::canon::Segment>) -> Result<Element> {
    let cf = CanonicalForm::from_segments(u.rank(), segs)?;
    u.lookup(&cf).ok_or_else(|| Error::InvalidCanonical { word: cf.to_string(), reason: "not in universe".into() })
}

/// `s+` from the segments: blockers `a_i a_{i+1}` become `a_i`.
pub fn plus_by_segments(u: &MonoidUniverse, s: Element) -> Result<Element> {
    if u.is_zero(s) {
        return Ok(s);
    }
    lookup_segments(u, combinatorial::plus_segments(u.form(s)))
}

/// `s*` from the segments: blockers `a_i a_{i+1}` become `a_{i+1}`.
pub fn star_by_segments(u: &MonoidUniverse, s: Element) -> Result<Element> {
    if u.is_zero(s) {
        return Ok(s);
    }
    lookup_segments(u, combinatorial::star_segments(u.form(s)))
}

impl<'u> Structure<'u> {
    /// Computes `+` and `*` as minimum stabilizing idempotents, then `<<`.
    pub fn new(u: &'u MonoidUniverse) -> Result<Self> {
        let mut plus = Vec::with_capacity(u.len());
        let mut star = Vec::with_capacity(u.len());
        for s in u.elements() {
            let missing = |side: &str| Error::Precondition(format!("{} has no minimum {side} identity", u.display(s)));
            plus.push(plus_by_search(u, s).ok_or_else(|| missing("left"))?);
            star.push(star_by_search(u, s).ok_or_else(|| missing("right"))?);
        }
        let size = u.len();
        let mut ll = vec![false; size * size];
        for s in 0..size {
            for t in 0..size {
                ll[s * size + t] = u.mul(u.mul(plus[s], Element(t as u32)), star[s]).id() == s;
            }
        }
        Ok(Structure { u, plus, star, ll })
    }

    #[inline]
    pub fn universe(&self) -> &'u MonoidUniverse {
        self.u
    }

    #[inline]
    pub fn plus(&self, s: Element) -> Element {
        self.plus[s.id()]
    }

    #[inline]
    pub fn star(&self, s: Element) -> Element {
        self.star[s.id()]
    }

    /// `s << t`, i.e. `s+ t s* = s`.
    #[inline]
    pub fn ll(&self, s: Element, t: Element) -> bool {
        self.ll[s.id() * self.u.len() + t.id()]
    }

    /// Segment characterization of `<<`; both arguments must be non-zero.
    pub fn ll_by_segments(&self, s: Element, t: Element) -> Result<bool> {
        self.require_nonzero(&[s, t])?;
        Ok(combinatorial::ll(self.u.form(s), self.u.form(t)))
    }

    /// `s # t != 0`: `s* = t+`, `(st)+ = s+` and `(st)* = t*`.
    pub fn sharp(&self, s: Element, t: Element) -> bool {
        let st = self.u.mul(s, t);
        self.star(s) == self.plus(t) && self.plus(st) == self.plus(s) && self.star(st) == self.star(t)
    }

    /// Segment characterization of `#`; both arguments must be non-zero.
    pub fn sharp_by_segments(&self, s: Element, t: Element) -> Result<bool> {
        self.require_nonzero(&[s, t])?;
        Ok(combinatorial::sharp(self.u.form(s), self.u.form(t)))
    }

    /// Entry of the twisted table: `st` when `s # t`, otherwise `None`.
    pub fn star_product(&self, s: Element, t: Element) -> Option<Element> {
        self.sharp(s, t).then(|| self.u.mul(s, t))
    }

    /// `(a* b)+`.
    pub fn phi(&self, a: Element, b: Element) -> Element {
        self.plus(self.u.mul(self.star(a), b))
    }

    /// Iterates `x -> (a x)*` then `x -> (x b)+` from `phi(a, b)` until it
    /// stabilizes. Returns the fixpoint and the number of rounds.
    pub fn phi_fix(&self, a: Element, b: Element) -> Result<(Element, usize)> {
        let mut x = self.phi(a, b);
        for round in 1..=self.u.len() + 1 {
            let y = self.plus(self.u.mul(self.star(self.u.mul(a, x)), b));
            if y == x {
                return Ok((x, round));
            }
            x = y;
        }
        Err(Error::Resource { what: "phi fixpoint rounds".into(), limit: self.u.len() + 1 })
    }

    pub fn decomposition(&self, s: Element) -> Result<PlusStarDecomposition> {
        self.require_nonzero(&[s])?;
        let u = self.u;
        let segs = u.form(s).segments();
        let (n_w, i_w): (Vec<usize>, Vec<usize>) = (0..segs.len()).partition(|&k| segs[k].is_blocker());
        let word_of = |letters: Vec<usize>| u.element_of(&crate::words::Word::from_raw(u.rank(), letters));
        Ok(PlusStarDecomposition {
            w_i: word_of(i_w.iter().flat_map(|&k| segs[k].letters(u.rank())).collect())?,
            n_left: word_of(n_w.iter().map(|&k| segs[k].start).collect())?,
            n_right: word_of(n_w.iter().map(|&k| segs[k].end).collect())?,
            i_w,
            n_w,
        })
    }

    /// Blocker indices of `w` split into `(N', N'')` relative to `v`.
    pub fn n_prime_sets(&self, w: Element, v: Element) -> Result<(Vec<usize>, Vec<usize>)> {
        self.require_nonzero(&[w, v])?;
        if !self.ll(w, v) {
            return Err(Error::Precondition(format!(
                "{} << {} does not hold",
                self.u.display(w),
                self.u.display(v)
            )));
        }
        Ok(combinatorial::n_prime_sets(self.u.form(w), self.u.form(v)))
    }

    fn require_idempotent(&self, e: Element) -> Result<()> {
        self.require_nonzero(&[e])?;
        if !self.u.is_idempotent(e) {
            return Err(Error::Precondition(format!("{} is not idempotent", self.u.display(e))));
        }
        Ok(())
    }

    /// Non-zero `s` with `s* = e`.
    pub fn l_tilde(&self, e: Element) -> Result<Vec<Element>> {
        self.require_idempotent(e)?;
        Ok(self.u.nonzero().filter(|&s| self.star(s) == e).collect())
    }

    /// Non-zero `s` with `s+ = e`.
    pub fn r_tilde(&self, e: Element) -> Result<Vec<Element>> {
        self.require_idempotent(e)?;
        Ok(self.u.nonzero().filter(|&s| self.plus(s) == e).collect())
    }

    /// Predicted `(|L~_e|, |R~_e|)` from the segments of `e`.
    pub fn tilde_count_formula(&self, e: Element) -> Result<(usize, usize)> {
        self.require_idempotent(e)?;
        let (l1, l2) = combinatorial::tilde_exponents(self.u.form(e));
        Ok((1 << l1, 1 << l2))
    }

    /// Non-zero idempotents, identity included.
    pub fn nonzero_idempotents(&self) -> impl Iterator<Item = Element> + '_ {
        self.u.idempotents().iter().copied().filter(|&e| !self.u.is_zero(e))
    }

    fn require_nonzero(&self, xs: &[Element]) -> Result<()> {
        match xs.iter().find(|&&x| self.u.is_zero(x)) {
            Some(_) => Err(Error::Precondition("argument is the zero element".into())),
            None => Ok(()),
        }
    }
}
