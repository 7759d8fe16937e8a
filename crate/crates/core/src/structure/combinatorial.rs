//! Segment-level characterizations of the structural relations.

use crate::canon::{CanonicalForm, Segment, Shape};
use crate::words::circ;

fn next(i: usize, n: usize) -> usize {
    circ(i as i64 + 1, n)
}

/// Segments of `cf` with every blocker `a_i a_{i+1}` replaced by `a_i`.
pub(crate) fn plus_segments(cf: &CanonicalForm) -> Vec<Segment> {
    cf.segments()
        .iter()
        .map(|s| if s.is_blocker() { Segment::singleton(s.start) } else { *s })
        .collect()
}

/// Segments of `cf` with every blocker `a_i a_{i+1}` replaced by `a_{i+1}`.
pub(crate) fn star_segments(cf: &CanonicalForm) -> Vec<Segment> {
    cf.segments()
        .iter()
        .map(|s| if s.is_blocker() { Segment::singleton(s.end) } else { *s })
        .collect()
}

fn covered_by_non_blocker(w: &CanonicalForm, v: &Segment) -> bool {
    let n = w.rank();
    w.segments().iter().any(|s| !s.is_blocker() && s.covers(v, n))
}

/// `w << v` via segment covering. Both forms must be non-zero.
pub(crate) fn ll(w: &CanonicalForm, v: &CanonicalForm) -> bool {
    let n = w.rank();
    let blockers = || w.segments().iter().filter(|s| s.is_blocker());
    v.segments().iter().all(|vk| {
        if covered_by_non_blocker(w, vk) {
            return true;
        }
        match vk.shape {
            Shape::Singleton => blockers().any(|b| vk.start == b.start || vk.start == next(b.start, n)),
            Shape::Blocker => blockers().any(|b| vk.start == b.start),
            _ => false,
        }
    })
}

/// `w # v != 0` via segment matching. Both forms must be non-zero.
pub(crate) fn sharp(w: &CanonicalForm, v: &CanonicalForm) -> bool {
    let n = w.rank();
    let side = |a: &CanonicalForm, b: &CanonicalForm, left: bool| {
        a.segments().iter().all(|ak| match ak.shape {
            Shape::Singleton => b.segments().iter().any(|bk| {
                bk == ak || (bk.is_blocker() && ak.start == if left { bk.start } else { next(bk.start, n) })
            }),
            Shape::Blocker => {
                let target = if left { next(ak.start, n) } else { ak.start };
                b.segments().iter().any(|bk| bk.shape == Shape::Singleton && bk.start == target)
            }
            _ => b.segments().contains(ak),
        })
    };
    side(w, v, true) && side(v, w, false)
}

/// Blocker indices of `w` split into those matched by `v` (a singleton right
/// after the blocker's first letter, or a blocker with the same start) and
/// the rest.
pub(crate) fn n_prime_sets(w: &CanonicalForm, v: &CanonicalForm) -> (Vec<usize>, Vec<usize>) {
    let n = w.rank();
    let (mut prime, mut rest) = (Vec::new(), Vec::new());
    for (k, wk) in w.segments().iter().enumerate().filter(|(_, s)| s.is_blocker()) {
        let hit = v.segments().iter().any(|vk| {
            (vk.shape == Shape::Singleton && vk.start == next(wk.start, n))
                || (vk.is_blocker() && vk.start == wk.start)
        });
        if hit {
            prime.push(k);
        } else {
            rest.push(k);
        }
    }
    (prime, rest)
}

/// Exponents `(l1, l2)` of the counting formula for a non-zero idempotent:
/// the singleton segments separated from the previous (resp. next) segment
/// by at least three free letters. At rank 3 every singleton counts.
pub(crate) fn tilde_exponents(e: &CanonicalForm) -> (u32, u32) {
    let n = e.rank();
    let segs = e.segments();
    let m = segs.len();
    let free_between = |a: usize, b: usize| (b as i64 - a as i64 - 1).rem_euclid(n as i64) as usize;
    let (mut l1, mut l2) = (0, 0);
    for (k, s) in segs.iter().enumerate() {
        if s.shape != Shape::Singleton {
            continue;
        }
        let prev = &segs[(k + m - 1) % m];
        let following = &segs[(k + 1) % m];
        if n == 3 || free_between(prev.end, s.start) >= 3 {
            l1 += 1;
        }
        if n == 3 || free_between(s.end, following.start) >= 3 {
            l2 += 1;
        }
    }
    (l1, l2)
}
