//! Integer helpers: primality, deterministic factorization, square parts,
//! Jacobi symbols, small-prime streams.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Deterministic Miller-Rabin, valid for all u64.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // Sufficient witness set for n < 3.3e24, a fortiori for u64.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod_u64(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod_u64(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod_u64(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod_u64(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod_u64(r, b, m);
        }
        b = mul_mod_u64(b, b, m);
        e >>= 1;
    }
    r
}

/// Miller-Rabin for big integers with fixed bases plus trial division.
/// Probabilistic in principle, deterministic in behaviour.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let two = BigUint::from(2u32);
    for p in small_primes(256) {
        let bp = BigUint::from(p);
        if n % &bp == BigUint::zero() {
            return *n == bp;
        }
    }
    let n_minus_1 = n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53] {
        let a = BigUint::from(a);
        let mut x = a.modpow(&d, n);
        if x.is_one() || x == n_minus_1 {
            continue;
        }
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes below `bound` by sieve.
pub fn small_primes(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return vec![];
    }
    let n = bound as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    if n >= 1 {
        sieve[1] = false;
    }
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| b.then_some(i as u64))
        .collect()
}

/// Exact integer square root if the argument is a perfect square.
pub fn perfect_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Jacobi symbol (a/n) for odd positive n.
pub fn jacobi(a: &BigInt, n: &BigInt) -> i8 {
    assert!(n.is_positive() && n.is_odd(), "jacobi needs odd positive n");
    let mut a = a.mod_floor(n);
    let mut n = n.clone();
    let mut t: i8 = 1;
    while !a.is_zero() {
        while a.is_even() {
            a /= 2;
            let r = (&n % 8u32).to_u8().unwrap();
            if r == 3 || r == 5 {
                t = -t;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if (&a % 4u32).to_u8().unwrap() == 3 && (&n % 4u32).to_u8().unwrap() == 3 {
            t = -t;
        }
        a = a.mod_floor(&n);
    }
    if n.is_one() {
        t
    } else {
        0
    }
}

/// Deterministic factorization: trial division then Brent-cycle rho.
/// Returns prime -> exponent. Panics only if a composite resists rho
/// (does not happen at the sizes this crate produces).
pub fn factor(n: &BigUint) -> BTreeMap<BigUint, u32> {
    let mut out = BTreeMap::new();
    if n.is_zero() || n.is_one() {
        return out;
    }
    let mut rest = n.clone();
    for p in small_primes(100_000) {
        let bp = BigUint::from(p);
        if &bp * &bp > rest {
            break;
        }
        while (&rest % &bp).is_zero() {
            *out.entry(bp.clone()).or_insert(0) += 1;
            rest /= &bp;
        }
        if rest.is_one() {
            return out;
        }
    }
    if rest.is_one() {
        return out;
    }
    let mut stack = vec![rest];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        if let Some(r) = perfect_sqrt(&BigInt::from(m.clone())) {
            let r = r.to_biguint().unwrap();
            stack.push(r.clone());
            stack.push(r);
            continue;
        }
        let d = pollard_brent(&m);
        stack.push(&m / &d);
        stack.push(d);
    }
    out
}

pub fn factor_bigint(n: &BigInt) -> BTreeMap<BigUint, u32> {
    factor(n.magnitude())
}

fn pollard_brent(n: &BigUint) -> BigUint {
    // Deterministic parameter sweep.
    let one = BigUint::one();
    for c in 1u64..64 {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = BigUint::from(2u32);
        let mut y = x.clone();
        let mut d = one.clone();
        let mut count = 0u64;
        while d.is_one() && count < 1 << 22 {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x >= y { &x - &y } else { &y - &x };
            if diff.is_zero() {
                break;
            }
            d = diff.gcd(n);
            count += 1;
        }
        if !d.is_one() && d != *n {
            return d;
        }
    }
    panic!("rho failed to split {n}");
}

/// Squarefree part of a nonzero integer, sign preserved.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    assert!(!n.is_zero());
    let mut out = BigInt::one();
    if n.is_negative() {
        out = -out;
    }
    for (p, e) in factor(n.magnitude()) {
        if e % 2 == 1 {
            out *= BigInt::from(p);
        }
    }
    out
}

/// All divisors of |n| (positive), ascending. Caller must keep |n| at desk scale.
pub fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for (p, e) in factor(n.magnitude()) {
        let p = BigInt::from(p);
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for d in &out {
            let mut q = d.clone();
            next.push(q.clone());
            for _ in 0..e {
                q *= &p;
                next.push(q.clone());
            }
        }
        out = next;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime_u64(2));
        assert!(is_prime_u64(10007));
        assert!(!is_prime_u64(10009 * 3));
        assert!(is_prime_u64((1 << 31) - 1));
        assert!(!is_prime_u64(1));
    }

    #[test]
    fn factor_small_and_square() {
        let f = factor(&BigUint::from(360u32));
        let expect: Vec<(u32, u32)> = vec![(2, 3), (3, 2), (5, 1)];
        let got: Vec<(u32, u32)> = f
            .iter()
            .map(|(p, e)| (p.to_u32().unwrap(), *e))
            .collect();
        assert_eq!(got, expect);
        assert_eq!(squarefree_part(&BigInt::from(8)), BigInt::from(2));
        assert_eq!(squarefree_part(&BigInt::from(-12)), BigInt::from(-3));
        assert_eq!(squarefree_part(&BigInt::from(49)), BigInt::from(1));
    }

    #[test]
    fn factor_semiprime() {
        // two 10-digit primes; rho must split it
        let a = BigUint::from(2147483647u64); // 2^31-1
        let b = BigUint::from(2147483629u64);
        let f = factor(&(&a * &b));
        assert_eq!(f.len(), 2);
        assert_eq!(f[&b] + f[&a], 2);
    }

    #[test]
    fn jacobi_matches_legendre() {
        // squares mod 7: 1,2,4
        for a in 1..7 {
            let j = jacobi(&BigInt::from(a), &BigInt::from(7));
            let is_sq = [1, 2, 4].contains(&a);
            assert_eq!(j == 1, is_sq, "a={a}");
        }
        assert_eq!(jacobi(&BigInt::from(21), &BigInt::from(7)), 0);
    }

    #[test]
    fn divisor_lists() {
        let d = divisors(&BigInt::from(-12));
        let want: Vec<BigInt> = [1, 2, 3, 4, 6, 12].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(d, want);
    }
}
