//! Prime fields with p > 2^60 and random evaluation points.

use super::poly::{mul_mod, pow_mod};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller–Rabin for 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    for &b in &BASES {
        if n % b == 0 {
            return n == b;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'outer: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'outer;
            }
        }
        return false;
    }
    true
}

/// Smallest order bound checked when rejecting evaluation points.
pub const ROOT_OF_UNITY_BOUND: u64 = 64;

/// True if `a^k = 1` for some `1 <= k <= bound`.
pub fn is_small_root_of_unity(a: u64, p: u64, bound: u64) -> bool {
    let mut x = a % p;
    for _ in 1..=bound {
        if x == 1 {
            return true;
        }
        x = mul_mod(x, a, p);
    }
    false
}

/// Reproducible random prime in `[2^60, 2^62)` plus an RNG for follow-up draws.
pub fn random_prime(seed: u64) -> (u64, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let c: u64 = rng.gen_range((1u64 << 60)..(1u64 << 62)) | 1;
        if is_prime(c) {
            return (c, rng);
        }
    }
}

/// A random point of `F_p^*` that is not a root of unity of small order.
pub fn random_point(rng: &mut ChaCha8Rng, p: u64) -> u64 {
    loop {
        let a = rng.gen_range(2..p - 1);
        if !is_small_root_of_unity(a, p, ROOT_OF_UNITY_BOUND) {
            return a;
        }
    }
}
