//! Canonical forms of words in the layered Catalan monoid.

mod reduce;
mod segment;
mod simplify;
mod small;

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

pub use segment::{Segment, Shape};

use crate::error::{Error, Result};
use crate::words::{circ, clockwise, Word};
use segment::{content_components, split_blocks};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormKind {
    Identity,
    Zero,
    Segments,
}

/// The normal form of a monoid element.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    rank: usize,
    kind: FormKind,
    segments: Vec<Segment>,
}

impl CanonicalForm {
    pub fn identity(rank: usize) -> Self {
        CanonicalForm { rank, kind: FormKind::Identity, segments: Vec::new() }
    }

    pub fn zero(rank: usize) -> Result<Self> {
        if rank < 2 {
            return Err(Error::NoZero(rank));
        }
        Ok(Self::zero_unchecked(rank))
    }

    pub(crate) fn zero_unchecked(rank: usize) -> Self {
        CanonicalForm { rank, kind: FormKind::Zero, segments: Vec::new() }
    }

    pub(crate) fn segments_unchecked(rank: usize, segments: Vec<Segment>) -> Self {
        CanonicalForm { rank, kind: FormKind::Segments, segments }
    }

    /// Builds a form from segments given in any order; fails unless the
    /// result is a valid canonical form.
    pub fn from_segments(rank: usize, mut segments: Vec<Segment>) -> Result<Self> {
        if segments.is_empty() {
            return Ok(Self::identity(rank));
        }
        segments.sort_by_key(|s| s.order_key(rank));
        let cf = Self::segments_unchecked(rank, segments);
        cf.check()?;
        Ok(cf)
    }

    /// Interprets `w` as an already-canonical rendering.
    pub fn from_rendered(w: &Word) -> Result<Self> {
        let n = w.rank();
        if w.is_empty() {
            return Ok(Self::identity(n));
        }
        let letters: Vec<usize> = w.indices().collect();
        let segments = split_blocks(&letters, n).ok_or_else(|| Error::InvalidCanonical {
            word: w.to_string(),
            reason: "not a concatenation of blocks".into(),
        })?;
        let cf = Self::segments_unchecked(n, segments);
        cf.check()?;
        Ok(cf)
    }

    #[inline]
    pub fn rank(&self) -> usize {
        self.rank
    }

    #[inline]
    pub fn kind(&self) -> FormKind {
        self.kind
    }

    #[inline]
    pub fn segments(&self) -> &[Segment] {
        &self.segments
    }

    pub fn is_zero(&self) -> bool {
        self.kind == FormKind::Zero
    }

    pub fn is_identity(&self) -> bool {
        self.kind == FormKind::Identity
    }

    /// The concrete word representing this element.
    pub fn word(&self) -> Word {
        match self.kind {
            FormKind::Identity => Word::from_raw(self.rank, []),
            FormKind::Zero => zero_indices(self.rank)
                .map(|v| Word::from_raw(self.rank, v))
                .unwrap_or_else(|| Word::from_raw(self.rank, [])),
            FormKind::Segments => {
                Word::from_raw(self.rank, self.segments.iter().flat_map(|s| s.letters(self.rank)))
            }
        }
    }

    /// Idempotent iff no segment is a blocker (identity and zero included).
    pub fn is_idempotent(&self) -> bool {
        self.segments.iter().all(|s| !s.is_blocker())
    }

    /// Full structural validation with a reason on failure.
    pub fn check(&self) -> Result<()> {
        let fail = |reason: &str| {
            Err(Error::InvalidCanonical { word: self.word().to_string(), reason: reason.into() })
        };
        let n = self.rank;
        match self.kind {
            FormKind::Identity => {
                if !self.segments.is_empty() {
                    return fail("identity carries segments");
                }
                return Ok(());
            }
            FormKind::Zero => {
                if n < 2 {
                    return fail("rank 1 has no zero");
                }
                if !self.segments.is_empty() {
                    return fail("zero carries segments");
                }
                return Ok(());
            }
            FormKind::Segments => {}
        }
        if self.segments.is_empty() {
            return fail("empty segment list");
        }
        if n <= 3 {
            return if small::is_valid(n, &self.segments) { Ok(()) } else { fail("not an element of small rank") };
        }
        if let Some(s) = self.segments.iter().find(|s| !s.is_consistent(n)) {
            return fail(&format!("shape of {s} disagrees with its span"));
        }
        if self.segments.windows(2).any(|w| w[0].order_key(n) >= w[1].order_key(n)) {
            return fail("segments out of clockwise order");
        }
        let m = self.segments.len();
        let mut total = 0;
        for k in 0..m {
            let cur = &self.segments[k];
            let next = &self.segments[(k + 1) % m];
            let gap = if m == 1 { n - cur.span(n) } else { clockwise(cur.end, next.start, n) };
            if gap < 3 {
                return fail("fewer than two free letters between segments");
            }
            total += cur.span(n) + gap;
        }
        if total != n {
            return fail("segments overlap or wind more than once");
        }
        Ok(())
    }
}

impl fmt::Display for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FormKind::Zero => write!(f, "ZERO ({})", self.word()),
            _ => write!(f, "{}", self.word()),
        }
    }
}

impl Serialize for CanonicalForm {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("CanonicalForm", 3)?;
        st.serialize_field("kind", &self.kind)?;
        st.serialize_field("word", &self.word().to_string())?;
        st.serialize_field("segments", &self.segments)?;
        st.end()
    }
}

/// Some `a_j` occurs strictly before some `a_i` in `w`.
pub(crate) fn occurs_before(w: &Word, j: usize, i: usize) -> bool {
    let mut seen_j = false;
    for l in w.indices() {
        if seen_j && l == i {
            return true;
        }
        seen_j |= l == j;
    }
    false
}

fn zero_indices(n: usize) -> Option<Vec<usize>> {
    match n {
        0 | 1 => None,
        2 => Some(vec![1, 2]),
        3 => Some(vec![1, 3]),
        _ if n.is_multiple_of(2) => Some((1..n).step_by(2).collect()),
        _ => Some([1, 2].into_iter().chain((4..n).step_by(2)).collect()),
    }
}

/// The absorbing element's representative word.
pub fn zero_word(n: usize) -> Result<Word> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    zero_indices(n).map(|v| Word::from_raw(n, v)).ok_or(Error::NoZero(n))
}

/// The index `r` prescribed by the gap condition: the content's largest
/// letter after rotating the double gap to the end of the alphabet, mapped
/// back. `None` when no two consecutive letters are missing.
pub fn star_condition(w: &Word) -> Result<Option<usize>> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(content_components(&w.content_mask(), w.rank()).and_then(|c| c.last().map(|&(_, end)| end)))
}

/// Applies the local prefix rewrites to `y` until none matches.
pub fn simplify_y(y: &Word) -> Word {
    let n = y.rank();
    Word::from_raw(n, simplify::simplify(y.indices().collect(), n))
}

/// Reduces `w` to its canonical form with the right-to-left rewriting loop.
pub fn canonicalize(w: &Word) -> Result<CanonicalForm> {
    let n = w.rank();
    if w.is_empty() {
        return Ok(CanonicalForm::identity(n));
    }
    if n <= 3 {
        return Ok(small::canonicalize(w));
    }
    let Some(components) = content_components(&w.content_mask(), n) else {
        return Ok(CanonicalForm::zero_unchecked(n));
    };
    let offset = components[0].0 as i64;
    let shifted: Vec<usize> = w.indices().map(|i| circ(i as i64 - offset + 1, n)).collect();
    let rendered: Vec<usize> = reduce::reduce(shifted, n)
        .into_iter()
        .map(|j| circ(j as i64 + offset - 1, n))
        .collect();
    CanonicalForm::from_rendered(&Word::from_raw(n, rendered))
}

/// Computes the canonical form directly from the content's circular
/// components, without rewriting.
pub fn describe(w: &Word) -> Result<CanonicalForm> {
    let n = w.rank();
    if w.is_empty() {
        return Ok(CanonicalForm::identity(n));
    }
    if n <= 3 {
        return Ok(small::canonicalize(w));
    }
    let Some(components) = content_components(&w.content_mask(), n) else {
        return Ok(CanonicalForm::zero_unchecked(n));
    };
    let segments = components
        .into_iter()
        .map(|(i, j)| match clockwise(i, j, n) {
            0 => Segment::singleton(i),
            1 if occurs_before(w, j, i) => Segment::reversed_pair(i, n),
            1 => Segment::blocker(i, n),
            d => Segment::run(i, d, n),
        })
        .collect();
    let cf = CanonicalForm::segments_unchecked(n, segments);
    cf.check()?;
    Ok(cf)
}

/// The segment list of a non-trivial form.
pub fn parse_segments(cf: &CanonicalForm) -> Result<Vec<Segment>> {
    match cf.kind {
        FormKind::Segments => Ok(cf.segments.clone()),
        other => Err(Error::Precondition(format!("{other:?} form has no segments"))),
    }
}

pub fn validate_canonical(cf: &CanonicalForm) -> bool {
    cf.check().is_ok()
}
