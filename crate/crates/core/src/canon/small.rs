//! Ranks 1 to 3, which do not follow the general gap-based pipeline.

use super::{CanonicalForm, Segment};
use crate::words::{circ, Word};

/// Canonical form of a non-empty word of rank `n <= 3`.
pub(crate) fn canonicalize(w: &Word) -> CanonicalForm {
    let n = w.rank();
    debug_assert!(n <= 3 && !w.is_empty());
    let content: Vec<usize> = w.content().iter().map(|l| l.index()).collect();
    match (n, content.as_slice()) {
        (_, [i]) => CanonicalForm::segments_unchecked(n, vec![Segment::singleton(*i)]),
        (3, [a, b]) => {
            let i = if circ(*a as i64 + 1, n) == *b { *a } else { *b };
            let j = circ(i as i64 + 1, n);
            if super::occurs_before(w, j, i) {
                CanonicalForm::zero_unchecked(n)
            } else {
                CanonicalForm::segments_unchecked(n, vec![Segment::blocker(i, n)])
            }
        }
        _ => CanonicalForm::zero_unchecked(n),
    }
}

/// Structural check for forms of rank `n <= 3`.
pub(crate) fn is_valid(n: usize, segments: &[Segment]) -> bool {
    match segments {
        [s] if s.is_consistent(n) => match s.shape {
            super::Shape::Singleton => true,
            super::Shape::Blocker => n == 3,
            _ => false,
        },
        _ => false,
    }
}
