//! The right-to-left reduction loop, run in a frame where the content's
//! double gap sits just before index 1.

use super::simplify::simplify;

/// Reduces `x` (indices already shifted) to its canonical rendering.
pub(crate) fn reduce(mut x: Vec<usize>, n: usize) -> Vec<usize> {
    let mut y: Vec<usize> = Vec::with_capacity(x.len());
    while let Some(&r) = x.iter().max() {
        let has = |v: &[usize], l: usize| l >= 1 && v.contains(&l);
        let head: Vec<usize> = if !has(&x, r - 1) {
            x.retain(|&l| l != r);
            vec![r]
        } else if !has(&x, r - 2) {
            let first_r = x.iter().position(|&l| l == r).unwrap();
            let reversed = x[first_r + 1..].contains(&(r - 1));
            x.retain(|&l| l != r && l != r - 1);
            if reversed { vec![r, r - 1] } else { vec![r - 1, r] }
        } else {
            x.retain(|&l| l != r && l != r - 1);
            vec![r]
        };
        let mut next = head;
        next.extend_from_slice(&y);
        y = simplify(next, n);
    }
    y
}
