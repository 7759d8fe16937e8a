//! Exact determinants: fraction-free over the integers, Gaussian over a prime field.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The Mersenne prime `2^61 - 1`.
pub const PRIME: u64 = (1 << 61) - 1;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % p as u128) as u64
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, p - b % p, p)
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

/// Maps a signed integer into `[0, p)`.
pub fn reduce_i64(v: i64, p: u64) -> u64 {
    v.rem_euclid(p as i64) as u64
}

/// Determinant over `Z/pZ` for prime `p`. Consumes the matrix.
pub fn det_mod_p(mut a: Vec<Vec<u64>>, p: u64) -> u64 {
    let n = a.len();
    let mut det = 1u64 % p;
    for c in 0..n {
        let Some(piv) = (c..n).find(|&r| !a[r][c].is_multiple_of(p)) else { return 0 };
        if piv != c {
            a.swap(piv, c);
            det = (p - det) % p;
        }
        let pivot = a[c][c] % p;
        det = mul_mod(det, pivot, p);
        let inv = pow_mod(pivot, p - 2, p);
        let (top, rest) = a.split_at_mut(c + 1);
        let row_c = &top[c];
        for row in rest.iter_mut() {
            let f = mul_mod(row[c] % p, inv, p);
            if f == 0 {
                continue;
            }
            for k in c..n {
                row[k] = sub_mod(row[k] % p, mul_mod(f, row_c[k] % p, p), p);
            }
        }
    }
    det
}

/// Bareiss fraction-free elimination over the integers.
pub fn det_bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = 1;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(piv) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else { return BigInt::zero() };
            a.swap(k, piv);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
