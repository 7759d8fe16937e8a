use std::fmt;

use serde::Serialize;

use crate::words::{circ, clockwise};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Shape {
    /// `a_i`
    Singleton,
    /// `a_i a_{i+1}`, the only non-idempotent block.
    Blocker,
    /// `a_{i+1} a_i`
    ReversedPair,
    /// `a_i a_{i+2} ... a_j` with even clockwise distance `j - i >= 2`.
    EvenRun,
    /// `a_i a_{i+1} a_{i+3} ... a_j` with odd clockwise distance `j - i >= 3`.
    OddRun,
}

/// One block of a canonical form: the circular interval `[start, end]`
/// (read clockwise) together with how its letters are written.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Segment {
    pub start: usize,
    pub end: usize,
    pub shape: Shape,
}

impl Segment {
    pub fn singleton(i: usize) -> Self {
        Segment { start: i, end: i, shape: Shape::Singleton }
    }

    pub fn blocker(i: usize, n: usize) -> Self {
        Segment { start: i, end: circ(i as i64 + 1, n), shape: Shape::Blocker }
    }

    pub fn reversed_pair(i: usize, n: usize) -> Self {
        Segment { start: i, end: circ(i as i64 + 1, n), shape: Shape::ReversedPair }
    }

    /// A run starting at `start` covering `span >= 2` further positions.
    pub fn run(start: usize, span: usize, n: usize) -> Self {
        debug_assert!(span >= 2);
        let shape = if span.is_multiple_of(2) { Shape::EvenRun } else { Shape::OddRun };
        Segment { start, end: circ((start + span) as i64, n), shape }
    }

    /// Clockwise distance `end - start`.
    #[inline]
    pub fn span(&self, n: usize) -> usize {
        clockwise(self.start, self.end, n)
    }

    #[inline]
    pub fn is_blocker(&self) -> bool {
        self.shape == Shape::Blocker
    }

    /// Crosses the `n -> 1` boundary.
    #[inline]
    pub fn wraps(&self) -> bool {
        self.end < self.start
    }

    /// Sort key for the clockwise ordering of segments inside a canonical form:
    /// the wrapping segment (if any) comes first, then increasing start.
    pub(crate) fn order_key(&self, n: usize) -> i64 {
        self.start as i64 - if self.wraps() { n as i64 } else { 0 }
    }

    /// The letter indices of the rendered block.
    pub fn letters(&self, n: usize) -> Vec<usize> {
        let at = |k: usize| circ((self.start + k) as i64, n);
        match self.shape {
            Shape::Singleton => vec![self.start],
            Shape::Blocker => vec![self.start, at(1)],
            Shape::ReversedPair => vec![at(1), self.start],
            Shape::EvenRun => (0..=self.span(n)).step_by(2).map(at).collect(),
            Shape::OddRun => {
                let mut v = vec![self.start];
                v.extend((1..=self.span(n)).step_by(2).map(at));
                v
            }
        }
    }

    pub fn rendered_len(&self, n: usize) -> usize {
        match self.shape {
            Shape::Singleton => 1,
            Shape::Blocker | Shape::ReversedPair => 2,
            Shape::EvenRun => self.span(n) / 2 + 1,
            Shape::OddRun => self.span(n).div_ceil(2) + 1,
        }
    }

    /// Shape tag agrees with the clockwise distance.
    pub fn is_consistent(&self, n: usize) -> bool {
        if !(1..=n).contains(&self.start) || !(1..=n).contains(&self.end) {
            return false;
        }
        let d = self.span(n);
        match self.shape {
            Shape::Singleton => d == 0,
            Shape::Blocker | Shape::ReversedPair => d == 1,
            Shape::EvenRun => d >= 2 && d.is_multiple_of(2),
            Shape::OddRun => d >= 3 && d % 2 == 1,
        }
    }

    /// `self` contains `other` as circular intervals.
    pub fn covers(&self, other: &Segment, n: usize) -> bool {
        let a = clockwise(self.start, other.start, n);
        let b = clockwise(self.start, other.end, n);
        a <= b && b <= self.span(n)
    }

    /// The letter `a_{start}` (the segment's first index).
    #[inline]
    pub fn top(&self) -> usize {
        self.start
    }

    /// The letter `a_{end}` (the segment's last index).
    #[inline]
    pub fn bottom(&self) -> usize {
        self.end
    }
}

impl fmt::Display for Segment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}({},{})", self.shape, self.start, self.end)
    }
}

/// Maximal clockwise intervals of the content, where a single missing letter
/// does not break an interval but two consecutive missing letters do.
///
/// Returns `None` when no two consecutive letters are missing, i.e. the word
/// fails the gap condition. The intervals come back in canonical order.
pub(crate) fn content_components(mask: &[bool], n: usize) -> Option<Vec<(usize, usize)>> {
    debug_assert_eq!(mask.len(), n + 1);
    if (1..=n).all(|i| !mask[i]) {
        return Some(Vec::new());
    }
    let gap = (1..=n).find(|&g| !mask[g] && !mask[circ(g as i64 + 1, n)])?;
    let mut out = Vec::new();
    let mut current: Option<(usize, usize)> = None;
    let mut missing = 0;
    for k in 0..n {
        let p = circ((gap + k) as i64, n);
        if mask[p] {
            current = Some(match current {
                None => (p, p),
                Some((s, _)) => (s, p),
            });
            missing = 0;
        } else {
            missing += 1;
            if missing >= 2 {
                if let Some(c) = current.take() {
                    out.push(c);
                }
            }
        }
    }
    if let Some(c) = current {
        out.push(c);
    }
    out.sort_by_key(|&(s, e)| s as i64 - if e < s { n as i64 } else { 0 });
    Some(out)
}

/// Splits a rendered word into its blocks. Fails on anything that is not a
/// concatenation of well-formed blocks.
pub(crate) fn split_blocks(letters: &[usize], n: usize) -> Option<Vec<Segment>> {
    let next = |i: usize, d: i64| circ(i as i64 + d, n);
    let mut out = Vec::new();
    let mut k = 0;
    while k < letters.len() {
        let first = letters[k];
        let mut chunk = vec![first];
        k += 1;
        if k < letters.len() && n >= 3 && letters[k] == next(first, -1) {
            // a_{i+1} a_i
            chunk.push(letters[k]);
            k += 1;
            out.push(Segment::reversed_pair(chunk[1], n));
            continue;
        }
        while k < letters.len() {
            let last = *chunk.last().unwrap();
            let l = letters[k];
            if l == next(last, 1) || l == next(last, 2) {
                chunk.push(l);
                k += 1;
            } else {
                break;
            }
        }
        out.push(block_from_chunk(&chunk, n)?);
    }
    Some(out)
}

fn block_from_chunk(chunk: &[usize], n: usize) -> Option<Segment> {
    let step = |a: usize, b: usize| clockwise(a, b, n);
    match chunk {
        [i] => Some(Segment::singleton(*i)),
        [i, j] if step(*i, *j) == 1 => Some(Segment::blocker(*i, n)),
        [first, rest @ ..] => {
            let steps: Vec<usize> = std::iter::once(step(*first, rest[0]))
                .chain(rest.windows(2).map(|w| step(w[0], w[1])))
                .collect();
            let tail_ok = steps[1..].iter().all(|&s| s == 2);
            let span: usize = steps.iter().sum();
            if !tail_ok || span >= n || !(steps[0] == 1 || steps[0] == 2) {
                return None;
            }
            let seg = Segment::run(*first, span, n);
            let expected_first = if seg.shape == Shape::EvenRun { 2 } else { 1 };
            (steps[0] == expected_first).then_some(seg)
        }
        [] => None,
    }
}
