//! Semigroup determinants: tables, exact evaluation, the Möbius change of
//! variables and the non-vanishing decision.

mod linalg;
mod matrix;
mod mobius;
mod poly;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

pub use linalg::{det_bareiss, det_mod_p, PRIME};
pub use matrix::{cayley_table, contracted_cayley, det_exact, star_block, VarMatrix};
pub use mobius::{check_interval_sums, mobius, y_substitution, MobiusTable, YSubstitution};
pub use poly::{det_symbolic, Monomial, SparsePoly, SYMBOLIC_CAP};

use crate::error::Result;
use crate::monoid::{Element, MonoidUniverse};
use crate::structure::Structure;
use linalg::{mul_mod, sub_mod};

/// A uniformly random point of `(Z/pZ)^|S|`, indexed by element id.
pub fn random_point(u: &MonoidUniverse, seed: u64, stream: u64) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    (0..u.len()).map(|_| rng.gen_range(0..PRIME)).collect()
}

/// One idempotent block of the twisted table.
#[derive(Debug, Clone, Serialize)]
pub struct BlockInfo {
    pub idempotent: String,
    pub rows: Vec<String>,
    pub cols: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict")]
pub enum Verdict {
    /// The determinant is non-zero at `point` (trial index `trial`).
    NonzeroCertified { trial: u64, point: Vec<u64>, value: u64 },
    /// All trials vanished but no singular block was found.
    ProbablyZero { trials: u64 },
    /// All trials vanished and the block of `block` has identically zero
    /// determinant.
    ZeroCertified { trials: u64, block: BlockInfo, non_square: Vec<BlockInfo> },
}

impl Verdict {
    pub fn name(&self) -> &'static str {
        match self {
            Verdict::NonzeroCertified { .. } => "NonzeroCertified",
            Verdict::ProbablyZero { .. } => "ProbablyZero",
            Verdict::ZeroCertified { .. } => "ZeroCertified",
        }
    }
}

fn block_info(st: &Structure<'_>, e: Element, m: &VarMatrix) -> BlockInfo {
    let u = st.universe();
    let names = |xs: &[Element]| xs.iter().map(|&x| u.word(x).to_string()).collect();
    BlockInfo { idempotent: u.word(e).to_string(), rows: names(m.rows()), cols: names(m.cols()) }
}

/// Decides whether the determinant of the Cayley table vanishes.
///
/// Evaluates it at `trials` random points over `Z/pZ`; one non-zero value
/// certifies non-vanishing. Otherwise looks for an idempotent block, first in
/// shortlex order of the idempotent's word, whose symbolic determinant is
/// identically zero.
pub fn theta_nonzero(st: &Structure<'_>, trials: u64, seed: u64, symbolic_cap: usize) -> Result<Verdict> {
    let u = st.universe();
    let table = cayley_table(u);
    let hit = (0..trials).into_par_iter().find_map_first(|trial| {
        let point = random_point(u, seed, trial);
        let value = table.det_mod(&point, PRIME).ok()?;
        (value != 0).then_some((trial, point, value))
    });
    if let Some((trial, point, value)) = hit {
        return Ok(Verdict::NonzeroCertified { trial, point, value });
    }
    let mut idempotents: Vec<Element> = st.nonzero_idempotents().collect();
    idempotents.sort_by(|&a, &b| u.word(a).cmp(u.word(b)));
    let mut non_square = Vec::new();
    let mut found = None;
    for e in idempotents {
        let block = star_block(st, e)?;
        if !block.is_square() {
            non_square.push(block_info(st, e, &block));
            continue;
        }
        if found.is_none() && block.dims().0 <= symbolic_cap && det_symbolic(&block, symbolic_cap)?.is_zero() {
            found = Some(block_info(st, e, &block));
        }
    }
    Ok(match found {
        Some(block) => Verdict::ZeroCertified { trials, block, non_square },
        None => Verdict::ProbablyZero { trials },
    })
}

/// Both sides of the idempotent-block factorization at one point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FactorizationOutcome {
    pub lhs: u64,
    pub rhs: u64,
    /// `Some(1)` or `Some(-1)` when `lhs = ±rhs`, `None` otherwise.
    pub sign: Option<i8>,
}

fn sign_of(lhs: u64, rhs: u64) -> Option<i8> {
    if lhs == rhs {
        Some(1)
    } else if (lhs + rhs).is_multiple_of(PRIME) {
        Some(-1)
    } else {
        None
    }
}

/// `y_s = sum_{t<<s} mu(t,s) (x_t - x_0)` modulo the prime, indexed by id.
fn contracted_y(st: &Structure<'_>, m: &MobiusTable, x: &[u64]) -> Vec<u64> {
    let u = st.universe();
    let x0 = u.zero().map_or(0, |z| x[z.id()]);
    let shifted: Vec<u64> = x.iter().map(|&v| sub_mod(v, x0, PRIME)).collect();
    let mut y = vec![0; x.len()];
    for &s in m.linear_extension() {
        y[s.id()] = m
            .linear_extension()
            .iter()
            .filter(|&&t| st.ll(t, s))
            .fold(0u64, |acc, &t| {
                let c = linalg::reduce_i64(m.get(t, s), PRIME);
                linalg::add_mod(acc, mul_mod(c, shifted[t.id()], PRIME), PRIME)
            });
    }
    y
}

/// Compares the determinant of the Cayley table with
/// `x_0 * prod_e det(block_e(Y))` over non-zero idempotents `e` (identity
/// included), where `Y` is the Möbius transform of the contracted variables.
pub fn factorization_check(st: &Structure<'_>, m: &MobiusTable, x: &[u64]) -> Result<FactorizationOutcome> {
    let u = st.universe();
    let lhs = cayley_table(u).det_mod(x, PRIME)?;
    let y = contracted_y(st, m, x);
    let mut rhs = u.zero().map_or(1, |z| x[z.id()] % PRIME);
    for e in st.nonzero_idempotents() {
        let block = star_block(st, e)?;
        let d = if block.is_square() { block.det_mod(&y, PRIME)? } else { 0 };
        rhs = mul_mod(rhs, d, PRIME);
    }
    Ok(FactorizationOutcome { lhs, rhs, sign: sign_of(lhs, rhs) })
}

/// Checks `theta_S(x) = x_0 * theta~_S(y)` with `y_s = x_s - x_0`.
pub fn contraction_check(u: &MonoidUniverse, x: &[u64]) -> Result<bool> {
    let z = u.zero().ok_or(crate::error::Error::NoZero(u.rank()))?;
    let x0 = x[z.id()] % PRIME;
    let lhs = cayley_table(u).det_mod(x, PRIME)?;
    let y: Vec<u64> = x.iter().map(|&v| sub_mod(v, x0, PRIME)).collect();
    let rhs = mul_mod(x0, contracted_cayley(u)?.det_mod(&y, PRIME)?, PRIME);
    Ok(lhs == rhs)
}
