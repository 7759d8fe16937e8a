//! The fully materialized monoid: elements, multiplication, identity, zero.

mod enumerate;

use std::collections::HashMap;

use serde::Serialize;

pub use enumerate::{catalan_cardinality, catalan_cardinality_check, catalan_number, enumerate_canonical, CatalanCount};

use crate::canon::{canonicalize, CanonicalForm};
use crate::error::{Error, Result};
use crate::words::{Letter, Word};

/// Index of an element inside its [`MonoidUniverse`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Element(pub u32);

impl Element {
    #[inline]
    pub fn id(self) -> usize {
        self.0 as usize
    }
}

/// Environment variable raising the element cap of [`UniverseLimits::from_env`].
pub const MAX_ELEMENTS_ENV: &str = "LCN_MAX_ELEMENTS";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct UniverseLimits {
    pub max_rank: usize,
    pub max_elements: usize,
}

impl Default for UniverseLimits {
    fn default() -> Self {
        UniverseLimits { max_rank: 12, max_elements: 4096 }
    }
}

impl UniverseLimits {
    /// Defaults, with the element cap taken from `LCN_MAX_ELEMENTS` when set.
    /// An explicit cap also lifts the rank cap.
    pub fn from_env() -> Self {
        let mut limits = Self::default();
        if let Some(cap) = std::env::var(MAX_ELEMENTS_ENV).ok().and_then(|v| v.trim().parse().ok()) {
            limits.max_elements = cap;
            limits.max_rank = usize::MAX;
        }
        limits
    }
}

#[derive(Debug, Clone)]
pub struct MonoidUniverse {
    rank: usize,
    forms: Vec<CanonicalForm>,
    words: Vec<Word>,
    index: HashMap<CanonicalForm, u32>,
    table: Vec<u32>,
    zero: Option<Element>,
    idempotents: Vec<Element>,
}

/// Builds the monoid of rank `n` under [`UniverseLimits::from_env`].
pub fn build_universe(n: usize) -> Result<MonoidUniverse> {
    MonoidUniverse::build(n, UniverseLimits::from_env())
}

impl MonoidUniverse {
    /// Breadth-first closure of the identity under right multiplication by
    /// generators. Ids follow discovery order, except that zero is moved last.
    pub fn build(n: usize, limits: UniverseLimits) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        if n > limits.max_rank {
            return Err(Error::Resource { what: "rank".into(), limit: limits.max_rank });
        }
        let mut forms = vec![CanonicalForm::identity(n)];
        let mut index: HashMap<CanonicalForm, u32> = HashMap::from([(forms[0].clone(), 0)]);
        let mut right: Vec<u32> = Vec::new();
        let mut k = 0;
        while k < forms.len() {
            let base = forms[k].word();
            for g in 1..=n {
                let mut w = base.clone();
                w.push(Letter::raw(g));
                let cf = canonicalize(&w)?;
                let id = match index.get(&cf) {
                    Some(&id) => id,
                    None => {
                        if forms.len() >= limits.max_elements {
                            return Err(Error::Resource { what: "monoid elements".into(), limit: limits.max_elements });
                        }
                        let id = forms.len() as u32;
                        index.insert(cf.clone(), id);
                        forms.push(cf);
                        id
                    }
                };
                right.push(id);
            }
            k += 1;
        }

        // Relabel so that zero is last.
        let size = forms.len();
        let zero_old = forms.iter().position(CanonicalForm::is_zero);
        let relabel: Vec<u32> = (0..size)
            .map(|i| match zero_old {
                Some(z) if i == z => size as u32 - 1,
                Some(z) if i > z => i as u32 - 1,
                _ => i as u32,
            })
            .collect();
        let mut new_forms = vec![CanonicalForm::identity(n); size];
        let mut gen_table = vec![0u32; size * n];
        for (old, cf) in forms.into_iter().enumerate() {
            let new = relabel[old] as usize;
            for g in 0..n {
                gen_table[new * n + g] = relabel[right[old * n + g] as usize];
            }
            new_forms[new] = cf;
        }
        let forms = new_forms;
        let index: HashMap<CanonicalForm, u32> =
            forms.iter().enumerate().map(|(i, f)| (f.clone(), i as u32)).collect();
        let words: Vec<Word> = forms.iter().map(CanonicalForm::word).collect();

        let mut table = vec![0u32; size * size];
        for x in 0..size {
            for (y, w) in words.iter().enumerate() {
                table[x * size + y] = w.indices().fold(x as u32, |acc, g| gen_table[acc as usize * n + g - 1]);
            }
        }
        let zero = zero_old.map(|_| Element(size as u32 - 1));
        let idempotents =
            (0..size).filter(|&e| table[e * size + e] == e as u32).map(|e| Element(e as u32)).collect();
        Ok(MonoidUniverse { rank: n, forms, words, index, table, zero, idempotents })
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.forms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Element> + Clone {
        (0..self.forms.len() as u32).map(Element)
    }

    /// All elements except zero.
    pub fn nonzero(&self) -> impl Iterator<Item = Element> + Clone + '_ {
        self.elements().filter(move |&e| Some(e) != self.zero)
    }

    #[inline]
    pub fn identity(&self) -> Element {
        Element(0)
    }

    #[inline]
    pub fn zero(&self) -> Option<Element> {
        self.zero
    }

    #[inline]
    pub fn is_zero(&self, e: Element) -> bool {
        Some(e) == self.zero
    }

    pub fn form(&self, e: Element) -> &CanonicalForm {
        &self.forms[e.id()]
    }

    pub fn word(&self, e: Element) -> &Word {
        &self.words[e.id()]
    }

    pub fn forms(&self) -> &[CanonicalForm] {
        &self.forms
    }

    pub fn generator(&self, i: usize) -> Result<Element> {
        self.element_of(&Word::generator(i, self.rank)?)
    }

    pub fn lookup(&self, cf: &CanonicalForm) -> Option<Element> {
        self.index.get(cf).map(|&i| Element(i))
    }

    /// The element represented by an arbitrary word.
    pub fn element_of(&self, w: &Word) -> Result<Element> {
        if w.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: w.rank() });
        }
        let cf = canonicalize(w)?;
        self.lookup(&cf).ok_or_else(|| Error::InvalidCanonical { word: cf.to_string(), reason: "not in universe".into() })
    }

    /// Parses a dotted word and returns its element.
    pub fn parse(&self, s: &str) -> Result<Element> {
        self.element_of(&Word::parse(s, self.rank)?)
    }

    #[inline]
    pub fn mul(&self, a: Element, b: Element) -> Element {
        Element(self.table[a.id() * self.len() + b.id()])
    }

    /// Product of a sequence, identity for an empty one.
    pub fn product(&self, xs: impl IntoIterator<Item = Element>) -> Element {
        xs.into_iter().fold(self.identity(), |acc, x| self.mul(acc, x))
    }

    pub fn idempotents(&self) -> &[Element] {
        &self.idempotents
    }

    pub fn is_idempotent(&self, e: Element) -> bool {
        self.mul(e, e) == e
    }

    /// Row-major table of product ids.
    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn display(&self, e: Element) -> String {
        self.forms[e.id()].to_string()
    }
}

/// Table lookup of `a * b`.
pub fn multiply(u: &MonoidUniverse, a: Element, b: Element) -> Element {
    u.mul(a, b)
}
