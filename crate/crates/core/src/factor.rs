//! Polynomial factorization over the base fields.
//!
//! Rationals: rational-root stripping, then an exhaustive monic integer
//! divisor search for factor degrees 2 and 3, pruned by Mignotte coefficient
//! bounds, by divisor constraints at 0 and +-1, and by factorization degree
//! patterns modulo three odd primes. The search is capped; exceeding the cap
//! is a typed `FactorInconclusive` outcome, never a wrong answer.
//!
//! Prime fields: squarefree split, distinct-degree factorization, then
//! equal-degree splitting (seeded deterministically from the input).

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::intutil;
use crate::poly::UniPoly;
use crate::scalar::{Field, Scalar};

pub const DEFAULT_SEARCH_CAP: u64 = 4_000_000;

/// Factors into monic irreducibles with multiplicities, sorted for
/// reproducibility. The implicit unit is the leading coefficient of `f`.
pub fn factorize(f: &UniPoly) -> Result<Vec<(UniPoly, u32)>> {
    factorize_with_cap(f, DEFAULT_SEARCH_CAP)
}

pub fn factorize_with_cap(f: &UniPoly, cap: u64) -> Result<Vec<(UniPoly, u32)>> {
    if f.is_zero() {
        return Err(Error::InvalidInput("cannot factor the zero polynomial".into()));
    }
    let mut out = match f.field() {
        Field::Q => factor_q(f, cap)?,
        Field::Fp(_) => factor_fp(f),
    };
    out.sort();
    debug_assert_eq!(
        {
            let mut prod = UniPoly::constant(f.leading());
            for (g, m) in &out {
                prod = prod.mul(&g.pow(*m));
            }
            prod
        },
        *f,
        "factorization does not recompose"
    );
    Ok(out)
}

/// Degree multiset of the irreducible factors (with multiplicity).
pub fn factor_degrees(f: &UniPoly) -> Result<Vec<usize>> {
    let mut degs: Vec<usize> = factorize(f)?
        .iter()
        .flat_map(|(g, m)| std::iter::repeat(g.deg()).take(*m as usize))
        .collect();
    degs.sort();
    Ok(degs)
}

// ---------------------------------------------------------------- prime field

fn factor_fp(f: &UniPoly) -> Vec<(UniPoly, u32)> {
    let Field::Fp(p) = f.field() else { unreachable!() };
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    let monic = f.make_monic();
    if monic.deg() == 0 {
        return out;
    }
    for (g, mult) in squarefree_decompose_fp(&monic, p) {
        for h in factor_squarefree_fp(&g, p) {
            out.push((h, mult));
        }
    }
    out
}

/// (squarefree part, multiplicity) pairs over F_p, handling p-th powers.
fn squarefree_decompose_fp(f: &UniPoly, p: u64) -> Vec<(UniPoly, u32)> {
    let field = f.field();
    let mut out = Vec::new();
    let fp = f.derivative();
    if fp.is_zero() {
        // f = g(x^p); over the prime field, coefficients are their own p-th roots
        let mut g_coeffs = Vec::new();
        let mut i = 0usize;
        while i <= f.deg() {
            g_coeffs.push(f.coeff(i));
            i += p as usize;
        }
        let g = UniPoly::from_coeffs(field, g_coeffs);
        for (h, m) in squarefree_decompose_fp(&g, p) {
            out.push((h, m * p as u32));
        }
        return out;
    }
    let mut c = f.gcd(&fp);
    let mut w = f.exact_div(&c).unwrap();
    let mut i = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).unwrap();
        if z.degree() != Some(0) {
            out.push((z.make_monic(), i));
        }
        w = y;
        c = c.exact_div(&w).unwrap();
        i += 1;
    }
    if c.degree() != Some(0) {
        for (h, m) in squarefree_decompose_fp(&c.make_monic(), p) {
            out.push((h, m * p as u32));
        }
    }
    out
}

/// Distinct-degree + equal-degree factorization of a squarefree monic input.
fn factor_squarefree_fp(f: &UniPoly, p: u64) -> Vec<UniPoly> {
    let field = f.field();
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = UniPoly::x(field);
    let mut h = x.clone();
    let mut d = 0usize;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = h.sub(&x).gcd(&rest);
        if g.degree() > Some(0) {
            equal_degree_split(&g, d, p, &mut out);
            rest = rest.exact_div(&g).unwrap();
            h = h.rem(&rest);
        }
    }
    if rest.deg() > 0 {
        out.push(rest.make_monic());
    }
    out
}

/// Cantor-Zassenhaus splitting of a product of degree-d irreducibles (p odd).
fn equal_degree_split(f: &UniPoly, d: usize, p: u64, out: &mut Vec<UniPoly>) {
    if f.deg() == d {
        out.push(f.make_monic());
        return;
    }
    let field = f.field();
    let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
    let mut rng = ChaCha8Rng::seed_from_u64(poly_seed(f));
    loop {
        let t = UniPoly::from_coeffs(
            field,
            (0..f.deg()).map(|_| field.from_i64(rng.gen_range(0..p as i64))).collect(),
        );
        if t.degree().is_none() {
            continue;
        }
        let s = t.pow_mod(&e, f).sub(&UniPoly::one(field));
        let g = s.gcd(f);
        if let Some(k) = g.degree() {
            if k > 0 && k < f.deg() {
                equal_degree_split(&g, d, p, out);
                equal_degree_split(&f.exact_div(&g).unwrap(), d, p, out);
                return;
            }
        }
    }
}

fn poly_seed(f: &UniPoly) -> u64 {
    let mut h = DefaultHasher::new();
    f.hash(&mut h);
    h.finish()
}

// ----------------------------------------------------------------- rationals

struct SearchBudget {
    tried: u64,
    cap: u64,
}

impl SearchBudget {
    fn spend(&mut self) -> Result<()> {
        self.tried += 1;
        if self.tried > self.cap {
            Err(Error::FactorInconclusive { tried: self.tried, cap: self.cap })
        } else {
            Ok(())
        }
    }
}

fn factor_q(f: &UniPoly, cap: u64) -> Result<Vec<(UniPoly, u32)>> {
    if f.deg() == 0 {
        return Ok(vec![]);
    }
    let mut budget = SearchBudget { tried: 0, cap };
    let mut out: Vec<(UniPoly, u32)> = Vec::new();
    // squarefree decomposition over Q (Yun)
    let monic = f.make_monic();
    let mut c = monic.gcd(&monic.derivative());
    let mut w = monic.exact_div(&c).unwrap();
    let mut mult = 1u32;
    while w.degree() != Some(0) {
        let y = w.gcd(&c);
        let z = w.exact_div(&y).unwrap();
        if z.degree() != Some(0) {
            for g in factor_squarefree_q(&z, &mut budget)? {
                out.push((g, mult));
            }
        }
        w = y;
        c = c.exact_div(&w).unwrap();
        mult += 1;
    }
    Ok(out)
}

/// Factors a squarefree monic rational polynomial.
fn factor_squarefree_q(f: &UniPoly, budget: &mut SearchBudget) -> Result<Vec<UniPoly>> {
    // substitute x = y / a to reach a monic integer polynomial:
    // G(y) = a^{n-1} g(y/a) where g is the primitive integer form, lc(g) = a
    let ints = f.primitive_integer_coeffs();
    let n = f.deg();
    let a = ints[n].clone();
    let monic_int: Vec<BigInt> = (0..=n)
        .map(|i| {
            if i == n {
                BigInt::one()
            } else {
                &ints[i] * a.pow((n - 1 - i) as u32)
            }
        })
        .collect();
    let g_factors = factor_monic_int(&monic_int, budget)?;
    // map back: h(y) -> monic rational h(a x) / a^{deg h}
    let field = Field::Q;
    let mut out = Vec::new();
    for h in g_factors {
        let d = h.len() - 1;
        let coeffs: Vec<Scalar> = (0..=d)
            .map(|i| {
                let num = &h[i] * a.pow(i as u32);
                let den = a.pow(d as u32);
                Scalar::from_rational(num_rational::BigRational::new(num, den))
            })
            .collect();
        out.push(UniPoly::from_coeffs(field, coeffs));
    }
    Ok(out)
}

/// Factors a squarefree monic integer polynomial into monic integer
/// irreducibles (coefficient lists, low-to-high).
fn factor_monic_int(coeffs: &[BigInt], budget: &mut SearchBudget) -> Result<Vec<Vec<BigInt>>> {
    let n = coeffs.len() - 1;
    let mut out = Vec::new();
    if n == 0 {
        return Ok(out);
    }
    if n == 1 {
        out.push(coeffs.to_vec());
        return Ok(out);
    }
    // strip powers of x
    if coeffs[0].is_zero() {
        let k = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        for _ in 0..k {
            out.push(vec![BigInt::zero(), BigInt::one()]);
        }
        let rest: Vec<BigInt> = coeffs[k..].to_vec();
        out.extend(factor_monic_int(&rest, budget)?);
        return Ok(out);
    }
    // rational (integer) roots
    let root_bound = coeffs[..n]
        .iter()
        .map(|c| c.abs())
        .max()
        .unwrap_or_else(BigInt::zero)
        + 1;
    for d in intutil::divisors(&coeffs[0]) {
        for sign in [1i64, -1] {
            let cand = &d * sign;
            if cand.abs() > root_bound {
                continue;
            }
            budget.spend()?;
            if eval_int(coeffs, &cand).is_zero() {
                // divide out (x - cand), recurse
                let quot = synth_div_root(coeffs, &cand);
                out.push(vec![-cand, BigInt::one()]);
                out.extend(factor_monic_int(&quot, budget)?);
                return Ok(out);
            }
        }
    }
    // no roots from here on
    if n <= 3 {
        out.push(coeffs.to_vec());
        return Ok(out);
    }
    // with no roots left, a reducible f has an irreducible factor of degree
    // d with 2 <= d <= n/2
    let allowed = modp_allowed_degrees(coeffs);
    for d in [2usize, 3] {
        if 2 * d > n {
            continue;
        }
        if let Some(ref degs) = allowed {
            if !degs.contains(&d) {
                continue;
            }
        }
        if let Some(g) = search_degree_d_factor(coeffs, d, budget)? {
            let quot = exact_div_int(coeffs, &g);
            out.push(g);
            out.extend(factor_monic_int(&quot, budget)?);
            return Ok(out);
        }
    }
    // no factor of degree <= 3; conclusive only for small degrees
    if n <= 7 {
        out.push(coeffs.to_vec());
        Ok(out)
    } else {
        Err(Error::FactorInconclusive { tried: budget.tried, cap: budget.cap })
    }
}

/// Degrees d such that a degree-d factor is consistent with the factorization
/// degree patterns modulo three odd primes of good reduction. None when no
/// good prime was found.
fn modp_allowed_degrees(coeffs: &[BigInt]) -> Option<std::collections::BTreeSet<usize>> {
    let n = coeffs.len() - 1;
    let mut allowed: Option<std::collections::BTreeSet<usize>> = None;
    let mut used = 0;
    for p in intutil::small_primes(2_000).into_iter().skip(1) {
        if used == 3 {
            break;
        }
        let field = match Field::prime(p) {
            Ok(f) => f,
            Err(_) => continue,
        };
        let fp = UniPoly::from_coeffs(
            field,
            coeffs.iter().map(|c| field.from_bigint(c)).collect(),
        );
        if fp.degree() != Some(n) || !fp.is_separable() {
            continue;
        }
        used += 1;
        let pattern = ddf_degrees(&fp, p);
        let sums = subset_sums(&pattern, n);
        allowed = Some(match allowed {
            None => sums,
            Some(prev) => prev.intersection(&sums).copied().collect(),
        });
    }
    allowed
}

/// Degree multiset from distinct-degree factorization only (no splitting).
fn ddf_degrees(f: &UniPoly, p: u64) -> Vec<usize> {
    let field = f.field();
    let mut rest = f.make_monic();
    let x = UniPoly::x(field);
    let mut h = x.clone();
    let mut out = Vec::new();
    let mut d = 0usize;
    while rest.deg() >= 2 * (d + 1) {
        d += 1;
        h = h.pow_mod(&BigUint::from(p), &rest);
        let g = h.sub(&x).gcd(&rest);
        if let Some(k) = g.degree() {
            if k > 0 {
                for _ in 0..k / d {
                    out.push(d);
                }
                rest = rest.exact_div(&g).unwrap();
                h = h.rem(&rest);
            }
        }
    }
    if rest.deg() > 0 {
        out.push(rest.deg());
    }
    out.sort();
    out
}

fn subset_sums(pattern: &[usize], n: usize) -> std::collections::BTreeSet<usize> {
    let mut sums = std::collections::BTreeSet::new();
    sums.insert(0usize);
    for &d in pattern {
        let mut next = sums.clone();
        for s in &sums {
            if s + d <= n {
                next.insert(s + d);
            }
        }
        sums = next;
    }
    sums
}

/// Exhaustive search for a monic integer factor of degree d (2 or 3), using
/// divisor constraints at 0, 1, -1 and the Mignotte bound.
fn search_degree_d_factor(
    coeffs: &[BigInt],
    d: usize,
    budget: &mut SearchBudget,
) -> Result<Option<Vec<BigInt>>> {
    let f0 = coeffs[0].clone();
    let one = BigInt::one();
    let f1 = eval_int(coeffs, &one);
    let fm1 = eval_int(coeffs, &(-&one));
    debug_assert!(!f0.is_zero() && !f1.is_zero() && !fm1.is_zero());
    let bound = mignotte_bound(coeffs, d);

    let signed = |v: Vec<BigInt>| -> Vec<BigInt> {
        let mut out = Vec::with_capacity(v.len() * 2);
        for x in v {
            out.push(x.clone());
            out.push(-x);
        }
        out.sort_by_key(|x: &BigInt| x.abs());
        out
    };
    // |g(1)| <= 1 + d*bound since g is monic of degree d with coefficients
    // bounded by `bound`; same at -1
    let val_bound = BigInt::from(d as u32) * &bound + 1;
    let c_cands: Vec<BigInt> = signed(intutil::divisors(&f0))
        .into_iter()
        .filter(|c| c.abs() <= bound)
        .collect();
    let s1_cands: Vec<BigInt> = signed(intutil::divisors(&f1))
        .into_iter()
        .filter(|s| s.abs() <= val_bound)
        .collect();
    let sm1_cands: Vec<BigInt> = signed(intutil::divisors(&fm1))
        .into_iter()
        .filter(|s| s.abs() <= val_bound)
        .collect();

    for c in &c_cands {
        for s1 in &s1_cands {
            if d == 2 {
                // g = x^2 + bx + c with g(1) = 1 + b + c = s1
                budget.spend()?;
                let b = s1 - &one - c;
                if b.abs() > bound {
                    continue;
                }
                // g(-1) = 1 - b + c must divide f(-1)
                let gm1 = &one - &b + c;
                if gm1.is_zero() || !(&fm1 % &gm1).is_zero() {
                    continue;
                }
                let g = vec![c.clone(), b, one.clone()];
                if divides_int(coeffs, &g) {
                    return Ok(Some(g));
                }
            } else {
                for sm1 in &sm1_cands {
                    budget.spend()?;
                    // g = x^3 + a x^2 + b x + c
                    // g(1) = 1 + a + b + c = s1; g(-1) = -1 + a - b + c = sm1
                    let sum = s1 + sm1; // 2a + 2c
                    let diff = s1 - sm1; // 2 + 2b
                    if sum.is_odd() || diff.is_odd() {
                        continue;
                    }
                    let a_coef: BigInt = sum / 2 - c;
                    let b_coef: BigInt = diff / 2 - &one;
                    if a_coef.abs() > bound || b_coef.abs() > bound {
                        continue;
                    }
                    let g = vec![c.clone(), b_coef, a_coef, one.clone()];
                    if divides_int(coeffs, &g) {
                        return Ok(Some(g));
                    }
                }
            }
        }
    }
    Ok(None)
}

/// Upper bound on |coefficients| of any monic degree-d factor.
fn mignotte_bound(coeffs: &[BigInt], d: usize) -> BigInt {
    let norm_sq: BigInt = coeffs.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1;
    let binom = |n: usize, k: usize| -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        let mut r = BigInt::one();
        for i in 0..k {
            r = r * BigInt::from(n - i) / BigInt::from(i + 1);
        }
        r
    };
    let mut best = BigInt::zero();
    for j in 0..=d {
        let t2 = if j == 0 { BigInt::zero() } else { binom(d.saturating_sub(1), j - 1) };
        let b = binom(d.saturating_sub(1), j) * &norm + t2;
        if b > best {
            best = b;
        }
    }
    best
}

fn eval_int(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in coeffs.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

/// Quotient of a monic polynomial by (x - r), assuming r is a root.
fn synth_div_root(coeffs: &[BigInt], r: &BigInt) -> Vec<BigInt> {
    let n = coeffs.len() - 1;
    let mut q = vec![BigInt::zero(); n];
    let mut carry = BigInt::zero();
    for i in (0..n).rev() {
        carry = &coeffs[i + 1] + r * &carry;
        q[i] = carry.clone();
    }
    debug_assert!((&coeffs[0] + r * &carry).is_zero(), "not a root");
    q
}

/// Does the monic integer polynomial g divide f exactly over Z?
fn divides_int(f: &[BigInt], g: &[BigInt]) -> bool {
    let dg = g.len() - 1;
    let mut rem: Vec<BigInt> = f.to_vec();
    while rem.len() > dg {
        let top = rem.last().unwrap().clone();
        let k = rem.len() - 1 - dg;
        if !top.is_zero() {
            for i in 0..dg {
                let t = &top * &g[i];
                rem[k + i] -= t;
            }
        }
        rem.pop();
    }
    rem.iter().all(Zero::is_zero)
}

fn exact_div_int(f: &[BigInt], g: &[BigInt]) -> Vec<BigInt> {
    let dg = g.len() - 1;
    let mut rem: Vec<BigInt> = f.to_vec();
    let mut quot = vec![BigInt::zero(); f.len() - dg];
    while rem.len() > dg {
        let top = rem.last().unwrap().clone();
        let k = rem.len() - 1 - dg;
        if !top.is_zero() {
            for i in 0..dg {
                let t = &top * &g[i];
                rem[k + i] -= t;
            }
            quot[k] = top;
        }
        rem.pop();
    }
    assert!(rem.iter().all(Zero::is_zero), "inexact integer division");
    quot
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(Field::Q, coeffs)
    }

    fn degrees(f: &UniPoly) -> Vec<usize> {
        factor_degrees(f).unwrap()
    }

    #[test]
    fn splits_difference_of_squares() {
        let f = q(&[-1, 0, 1]);
        let fs = factorize(&f).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, q(&[-1, 1]));
        assert_eq!(fs[1].0, q(&[1, 1]));
    }

    #[test]
    fn biquadratic_is_irreducible() {
        // degree patterns mod p never preclude quadratics here, so this
        // exercises the exhaustive divisor search
        let f = q(&[1, 0, -10, 0, 1]);
        let fs = factorize(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0], (f.make_monic(), 1));
    }

    #[test]
    fn quartic_with_cubic_factor() {
        let f = q(&[-1, -4, 0, 1]).mul(&q(&[-7, 1]));
        assert_eq!(degrees(&f), vec![1, 3]);
    }

    #[test]
    fn sextic_two_cubics() {
        let a = q(&[-1, -4, 0, 1]);
        let b = q(&[5, 2, -3, 1]);
        let f = a.mul(&b);
        let fs = factorize(&f).unwrap();
        assert_eq!(degrees(&f), vec![3, 3]);
        let got: Vec<&UniPoly> = fs.iter().map(|(g, _)| g).collect();
        assert!(got.contains(&&a) && got.contains(&&b));
    }

    #[test]
    fn multiplicities_and_content() {
        let f = q(&[1, 1]).pow(3).mul(&q(&[-2, 0, 2])); // 2(x+1)^3(x^2-1) = 2(x+1)^4(x-1)
        let fs = factorize(&f).unwrap();
        assert_eq!(fs, vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 4)]);
    }

    #[test]
    fn rational_coefficient_factors() {
        // 2x^3 - x^2 + 4x - 2 = 2(x - 1/2)(x^2 + 2)
        let g = UniPoly::parse(Field::Q, "2x^3-x^2+4x-2").unwrap();
        let fs = factorize(&g).unwrap();
        assert_eq!(fs.len(), 2);
        assert_eq!(fs[0].0, UniPoly::parse(Field::Q, "x-1/2").unwrap());
        assert_eq!(fs[1].0, q(&[2, 0, 1]));
    }

    #[test]
    fn inconclusive_is_typed() {
        let f = q(&[1, 0, -10, 0, 1]);
        match factorize_with_cap(&f, 3) {
            Err(Error::FactorInconclusive { .. }) => {}
            other => panic!("expected inconclusive, got {other:?}"),
        }
    }

    #[test]
    fn fp_root_patterns() {
        let f5 = Field::prime(5).unwrap();
        // x^4+x+1 over F_5 factors as (x-3)(cubic)
        let f = UniPoly::from_i64(f5, &[1, 1, 0, 0, 1]);
        let fs = factorize(&f).unwrap();
        let degs: Vec<usize> = fs.iter().map(|(g, _)| g.deg()).collect();
        assert_eq!(degs, vec![1, 3]);
        assert!(fs.iter().any(|(g, _)| g == &UniPoly::from_i64(f5, &[-3, 1])));
    }

    #[test]
    fn fp_full_split_and_powers() {
        let f3 = Field::prime(3).unwrap();
        let f = UniPoly::from_i64(f3, &[0, 2, 0, 1]); // x(x^2+2) = x(x^2-1) = x(x-1)(x+1)
        assert_eq!(
            factorize(&f).unwrap(),
            vec![
                (UniPoly::from_i64(f3, &[0, 1]), 1),
                (UniPoly::from_i64(f3, &[1, 1]), 1),
                (UniPoly::from_i64(f3, &[2, 1]), 1),
            ]
        );
        // (x+1)^3 = x^3 + 1 over F_3: derivative vanishes
        let g = UniPoly::from_i64(f3, &[1, 0, 0, 1]);
        assert_eq!(factorize(&g).unwrap(), vec![(UniPoly::from_i64(f3, &[1, 1]), 3)]);
    }

    #[test]
    fn fp_irreducible_quartic() {
        let f3 = Field::prime(3).unwrap();
        let f = UniPoly::from_i64(f3, &[2, 1, 0, 0, 1]);
        let fs = factorize(&f).unwrap();
        assert_eq!(fs.len(), 1);
        assert_eq!(fs[0].1, 1);
        assert_eq!(fs[0].0.deg(), 4);
    }

    #[test]
    fn fp_two_quadratics() {
        let f5 = Field::prime(5).unwrap();
        let f = UniPoly::from_i64(f5, &[2, 1, 2, 0, 1]);
        assert_eq!(factor_degrees(&f).unwrap(), vec![2, 2]);
    }
}
