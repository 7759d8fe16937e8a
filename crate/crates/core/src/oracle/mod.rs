//! Presentation-level ground truth, independent of the canonical-form code.

mod rewriting;

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

pub use rewriting::CompletionLimits;
use rewriting::{Rules, Str};

use crate::error::{Error, Result};
use crate::words::{circ, Word};

/// Generators `a_1..a_rank` with defining equations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    rank: usize,
    relations: Vec<(Word, Word)>,
}

impl Presentation {
    pub fn new(rank: usize, relations: Vec<(Word, Word)>) -> Result<Self> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        for (l, r) in &relations {
            for side in [l, r] {
                if side.rank() != rank {
                    return Err(Error::RankMismatch { left: rank, right: side.rank() });
                }
            }
        }
        Ok(Presentation { rank, relations })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn relations(&self) -> &[(Word, Word)] {
        &self.relations
    }

    /// Longest relation side.
    pub fn max_relation_len(&self) -> usize {
        self.relations.iter().map(|(l, r)| l.len().max(r.len())).max().unwrap_or(0)
    }
}

/// Collects equations with the shortlex-larger side first, dropping trivial
/// and duplicate ones.
struct RelationSet {
    rank: usize,
    set: BTreeSet<(Vec<usize>, Vec<usize>)>,
}

impl RelationSet {
    fn new(rank: usize) -> Self {
        RelationSet { rank, set: BTreeSet::new() }
    }

    fn add(&mut self, a: Vec<usize>, b: Vec<usize>) {
        if a == b {
            return;
        }
        let pair = if (a.len(), &a) >= (b.len(), &b) { (a, b) } else { (b, a) };
        self.set.insert(pair);
    }

    fn finish(self) -> Presentation {
        let relations = self
            .set
            .into_iter()
            .map(|(a, b)| (Word::from_raw(self.rank, a), Word::from_raw(self.rank, b)))
            .collect();
        Presentation { rank: self.rank, relations }
    }
}

/// Idempotence, far commutation and braid collapse on a linear alphabet.
fn linear_relations(set: &mut RelationSet, n: usize, skip_commute: impl Fn(usize, usize) -> bool) {
    for i in 1..=n {
        set.add(vec![i, i], vec![i]);
    }
    for i in 1..=n {
        for j in 1..=n {
            if i.abs_diff(j) > 1 && !skip_commute(i, j) {
                set.add(vec![i, j], vec![j, i]);
            }
        }
    }
    for i in 1..n {
        set.add(vec![i, i + 1, i], vec![i + 1, i]);
        set.add(vec![i + 1, i, i + 1], vec![i + 1, i]);
    }
}

/// Defining relations of the layered Catalan monoid of rank `n`.
///
/// The three-letter collapse `a_i a_{i+1} a_{i+2} = a_i a_{i+2}` is only
/// imposed for `n >= 3`; for smaller ranks its indices collide.
pub fn lc_presentation(n: usize) -> Result<Presentation> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    let mut set = RelationSet::new(n);
    linear_relations(&mut set, n, |i, j| i.min(j) == 1 && i.max(j) == n);
    if n >= 2 {
        set.add(vec![n, 1, n], vec![1, n]);
        set.add(vec![1, n, 1], vec![1, n]);
    }
    if n >= 3 {
        for i in 1..=n {
            let (j, k) = (circ(i as i64 + 1, n), circ(i as i64 + 2, n));
            set.add(vec![i, j, k], vec![i, k]);
        }
    }
    Ok(set.finish())
}

/// The Catalan monoid of degree `n`: decreasing order-preserving maps of
/// `{1..n}`, generated by `a_1..a_{n-1}`. Requires `n >= 2`.
pub fn catalan_presentation(n: usize) -> Result<Presentation> {
    if n < 2 {
        return Err(Error::Precondition(format!("degree {n} Catalan monoid has no generators")));
    }
    let mut set = RelationSet::new(n - 1);
    linear_relations(&mut set, n - 1, |_, _| false);
    Ok(set.finish())
}

fn to_str(w: &Word) -> Str {
    w.indices().map(|i| i as u16).collect()
}

fn from_str(rank: usize, s: &[u16]) -> Word {
    Word::from_raw(rank, s.iter().map(|&c| c as usize))
}

/// A confluent rewriting system for a presentation.
#[derive(Debug, Clone)]
pub struct RewritingSystem {
    rank: usize,
    rules: Rules,
}

impl RewritingSystem {
    pub fn complete(p: &Presentation, limits: CompletionLimits) -> Result<Self> {
        let eqs: Vec<(Str, Str)> = p.relations.iter().map(|(l, r)| (to_str(l), to_str(r))).collect();
        Ok(RewritingSystem { rank: p.rank, rules: rewriting::complete(&eqs, limits)? })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    pub fn rules(&self) -> Vec<(Word, Word)> {
        self.rules.iter().map(|(l, r)| (from_str(self.rank, l), from_str(self.rank, r))).collect()
    }

    /// Shortlex-least word in the class of `w`.
    pub fn normal_form(&self, w: &Word) -> Word {
        from_str(self.rank, &self.rules.reduce(&to_str(w)))
    }

    pub fn equal(&self, a: &Word, b: &Word) -> bool {
        self.rules.reduce(&to_str(a)) == self.rules.reduce(&to_str(b))
    }

    /// All elements as normal forms, in breadth-first order from the identity.
    pub fn elements(&self, cap: usize) -> Result<Vec<Word>> {
        let raw = rewriting::irreducibles(&self.rules, self.rank as u16, cap)?;
        Ok(raw.iter().map(|s| from_str(self.rank, s)).collect())
    }
}

/// Partition of all words of length `<= max_len` into congruence classes.
#[derive(Debug, Clone, Serialize)]
pub struct CongruenceReport {
    pub rank: usize,
    pub max_len: usize,
    pub word_count: usize,
    pub class_count: usize,
    /// Completion converged and every element of the monoid has a
    /// representative among the enumerated words.
    pub stable: bool,
    pub monoid_order: Option<usize>,
    /// Normal form of each class, indexed by class id.
    pub representatives: Vec<Word>,
    #[serde(skip)]
    pub words: Vec<Word>,
    #[serde(skip)]
    pub class_of: Vec<u32>,
}

impl CongruenceReport {
    /// Members of each class, in enumeration order.
    pub fn classes(&self) -> Vec<Vec<&Word>> {
        let mut out = vec![Vec::new(); self.class_count];
        for (w, &c) in self.words.iter().zip(&self.class_of) {
            out[c as usize].push(w);
        }
        out
    }
}

/// Upper bound on enumerated words in [`congruence_classes`].
pub const MAX_ORACLE_WORDS: usize = 5_000_000;
const ORACLE_ELEMENT_CAP: usize = 1_000_000;

fn word_count(rank: usize, max_len: usize) -> Option<usize> {
    let mut total: usize = 1;
    let mut layer: usize = 1;
    for _ in 0..max_len {
        layer = layer.checked_mul(rank)?;
        total = total.checked_add(layer)?;
    }
    Some(total)
}

/// Every word over the presentation's alphabet of length at most `max_len`,
/// in shortlex order.
pub fn words_up_to(rank: usize, max_len: usize) -> Result<Vec<Word>> {
    let count = word_count(rank, max_len).filter(|&c| c <= MAX_ORACLE_WORDS).ok_or(Error::Resource {
        what: "enumerated words".into(),
        limit: MAX_ORACLE_WORDS,
    })?;
    let mut out = Vec::with_capacity(count);
    out.push(Word::from_raw(rank, []));
    let mut start = 0;
    for _ in 0..max_len {
        let end = out.len();
        for k in start..end {
            for g in 1..=rank {
                let mut w = out[k].clone();
                w.push(crate::words::Letter::raw(g));
                out.push(w);
            }
        }
        start = end;
    }
    Ok(out)
}

/// Groups all words of length `<= max_len` by their normal form under the
/// completed presentation.
pub fn congruence_classes(p: &Presentation, max_len: usize) -> Result<CongruenceReport> {
    let system = RewritingSystem::complete(p, CompletionLimits::default())?;
    let words = words_up_to(p.rank, max_len)?;
    let mut ids: HashMap<Str, u32> = HashMap::new();
    let mut representatives = Vec::new();
    let mut class_of = Vec::with_capacity(words.len());
    for w in &words {
        let nf = system.rules.reduce(&to_str(w));
        let next = ids.len() as u32;
        let id = *ids.entry(nf.clone()).or_insert_with(|| {
            representatives.push(from_str(p.rank, &nf));
            next
        });
        class_of.push(id);
    }
    let monoid_order = system.elements(ORACLE_ELEMENT_CAP).ok().map(|e| e.len());
    Ok(CongruenceReport {
        rank: p.rank,
        max_len,
        word_count: words.len(),
        class_count: representatives.len(),
        stable: monoid_order == Some(representatives.len()),
        monoid_order,
        representatives,
        words,
        class_of,
    })
}

/// Whether two words are congruent. Fails if either word is longer than
/// `max_len`, keeping the query within the enumerated range.
pub fn oracle_equal(p: &Presentation, w1: &Word, w2: &Word, max_len: usize) -> Result<bool> {
    for w in [w1, w2] {
        if w.rank() != p.rank {
            return Err(Error::RankMismatch { left: p.rank, right: w.rank() });
        }
        if w.len() > max_len {
            return Err(Error::Precondition(format!("{w} is longer than {max_len}")));
        }
    }
    Ok(RewritingSystem::complete(p, CompletionLimits::default())?.equal(w1, w2))
}

/// Fixpoint union-find over words of length `<= max_len`, applying
/// relations in both directions without leaving the length bound. Kept as a
/// diagnostic: it can miss identifications whose derivations pass through
/// longer words.
pub fn bounded_closure_class_count(p: &Presentation, max_len: usize) -> Result<usize> {
    let words = words_up_to(p.rank, max_len)?;
    let index: HashMap<&Word, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
    let mut parent: Vec<usize> = (0..words.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let rels: Vec<(Vec<usize>, Vec<usize>)> = p
        .relations
        .iter()
        .flat_map(|(l, r)| {
            let (l, r): (Vec<usize>, Vec<usize>) = (l.indices().collect(), r.indices().collect());
            [(l.clone(), r.clone()), (r, l)]
        })
        .collect();
    for (k, w) in words.iter().enumerate() {
        let letters: Vec<usize> = w.indices().collect();
        for (a, b) in &rels {
            if a.is_empty() || a.len() > letters.len() {
                continue;
            }
            for pos in 0..=letters.len() - a.len() {
                if letters[pos..pos + a.len()] != a[..] {
                    continue;
                }
                let mut v = letters[..pos].to_vec();
                v.extend_from_slice(b);
                v.extend_from_slice(&letters[pos + a.len()..]);
                if v.len() > max_len {
                    continue;
                }
                let j = index[&Word::from_raw(p.rank, v)];
                let (x, y) = (find(&mut parent, k), find(&mut parent, j));
                if x != y {
                    parent[x] = y;
                }
            }
        }
    }
    Ok((0..words.len()).filter(|&k| find(&mut parent, k) == k).count())
}
