//! Dense univariate polynomials over an exact base field.
//!
//! Coefficients are stored low-to-high with no trailing zeros; the zero
//! polynomial has an empty coefficient list. Both the sparse human syntax
//! `"x^4+x+1"` and JSON coefficient arrays `[1,1,0,0,1]` round-trip.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::scalar::{parse_scalar, Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn from_coeffs(field: Field, mut coeffs: Vec<Scalar>) -> UniPoly {
        for c in &coeffs {
            assert_eq!(c.field(), field, "coefficient field mismatch");
        }
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_i64(field: Field, coeffs: &[i64]) -> UniPoly {
        Self::from_coeffs(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> UniPoly {
        UniPoly { field, coeffs: vec![] }
    }

    pub fn one(field: Field) -> UniPoly {
        Self::constant(field.one())
    }

    pub fn constant(c: Scalar) -> UniPoly {
        Self::from_coeffs(c.field(), vec![c])
    }

    pub fn x(field: Field) -> UniPoly {
        Self::from_i64(field, &[0, 1])
    }

    pub fn monomial(field: Field, c: Scalar, deg: usize) -> UniPoly {
        let mut v = vec![field.zero(); deg];
        v.push(c);
        Self::from_coeffs(field, v)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree of a nonzero polynomial.
    pub fn deg(&self) -> usize {
        self.degree().expect("degree of the zero polynomial")
    }

    pub fn coeff(&self, i: usize) -> Scalar {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn leading(&self) -> Scalar {
        self.coeffs.last().cloned().expect("leading coefficient of zero")
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(Scalar::is_one)
    }

    pub fn make_monic(&self) -> UniPoly {
        if self.is_zero() || self.is_monic() {
            return self.clone();
        }
        self.scale(&self.leading().inv().unwrap())
    }

    pub fn scale(&self, s: &Scalar) -> UniPoly {
        UniPoly::from_coeffs(self.field, self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn add(&self, other: &UniPoly) -> UniPoly {
        self.check(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &other.coeff(i));
        }
        UniPoly::from_coeffs(self.field, out)
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::from_coeffs(self.field, self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        self.check(other);
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::from_coeffs(self.field, out)
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut result = UniPoly::one(self.field);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        result
    }

    /// Euclidean division by a nonzero divisor.
    pub fn divmod(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        self.check(divisor);
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        let dlead_inv = divisor.leading().inv().unwrap();
        let d = divisor.deg();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.field.zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let top = rem.last().unwrap().clone();
            let k = rem.len() - 1 - d;
            if !top.is_zero() {
                let q = &top * &dlead_inv;
                for i in 0..d {
                    rem[k + i] = &rem[k + i] - &(&q * &divisor.coeffs[i]);
                }
                quot[k] = q;
            }
            rem.pop();
        }
        (
            UniPoly::from_coeffs(self.field, quot),
            UniPoly::from_coeffs(self.field, rem),
        )
    }

    pub fn rem(&self, modulus: &UniPoly) -> UniPoly {
        self.divmod(modulus).1
    }

    /// Division that must be exact.
    pub fn exact_div(&self, divisor: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.divmod(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::Internal(format!(
                "inexact polynomial division: remainder {r}"
            )))
        }
    }

    /// Monic gcd.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*other = g, g monic.
    pub fn ext_gcd(&self, other: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let field = self.field;
        let (mut r0, mut r1) = (self.clone(), other.clone());
        let (mut s0, mut s1) = (UniPoly::one(field), UniPoly::zero(field));
        let (mut t0, mut t1) = (UniPoly::zero(field), UniPoly::one(field));
        while !r1.is_zero() {
            let (q, r) = r0.divmod(&r1);
            r0 = r1;
            r1 = r;
            let ns = s0.sub(&q.mul(&s1));
            s0 = s1;
            s1 = ns;
            let nt = t0.sub(&q.mul(&t1));
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let c = r0.leading().inv().unwrap();
        (r0.scale(&c), s0.scale(&c), t0.scale(&c))
    }

    pub fn derivative(&self) -> UniPoly {
        if self.coeffs.len() <= 1 {
            return UniPoly::zero(self.field);
        }
        let out = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| &self.field.from_i64(i as i64) * c)
            .collect();
        UniPoly::from_coeffs(self.field, out)
    }

    /// gcd(f, f') is constant. Detects both repeated roots and, in
    /// characteristic p, polynomials of the form g(x^p).
    pub fn is_separable(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Substitution self(g(x)).
    pub fn compose(&self, g: &UniPoly) -> UniPoly {
        self.check(g);
        let mut acc = UniPoly::zero(self.field);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&UniPoly::constant(c.clone()));
        }
        acc
    }

    /// Res_x(self, other). Errors when both arguments are zero.
    pub fn resultant(&self, other: &UniPoly) -> Result<Scalar> {
        self.check(other);
        if self.is_zero() && other.is_zero() {
            return Err(Error::UndefinedResultant);
        }
        let field = self.field;
        let mut f = self.clone();
        let mut g = other.clone();
        let mut acc = field.one();
        loop {
            if g.is_zero() {
                return Ok(match f.degree() {
                    Some(0) => acc, // Res(c, 0) over empty root set contributes 1
                    _ => field.zero(),
                });
            }
            let n = g.deg();
            if n == 0 {
                // Res(f, c) = c^deg f
                let m = if f.is_zero() { return Ok(field.zero()) } else { f.deg() };
                return Ok(&acc * &g.leading().pow(m as i64));
            }
            if f.is_zero() {
                return Ok(field.zero());
            }
            let m = f.deg();
            if m < n {
                // swap, sign (-1)^{mn}
                if (m * n) % 2 == 1 {
                    acc = -&acc;
                }
                std::mem::swap(&mut f, &mut g);
                continue;
            }
            let r = f.rem(&g);
            let dr = r.degree().map_or(0, |d| d); // exponent uses deg r, 0 if r = 0 handled below
            if r.is_zero() {
                // common factor of positive degree
                return Ok(field.zero());
            }
            // Res(f,g) = (-1)^{mn} lc(g)^{m-deg r} Res(g, r)
            if (m * n) % 2 == 1 {
                acc = -&acc;
            }
            acc = &acc * &g.leading().pow((m - dr) as i64);
            f = g;
            g = r;
        }
    }

    /// Discriminant: (-1)^{n(n-1)/2} Res(f, f') / lc(f).
    pub fn discriminant(&self) -> Result<Scalar> {
        let n = self.deg();
        let res = self.resultant(&self.derivative())?;
        let sign = if (n * (n - 1) / 2) % 2 == 1 { -&self.field.one() } else { self.field.one() };
        Ok(&(&res * &sign) / &self.leading())
    }

    /// Monic square root of a monic polynomial of even degree.
    pub fn exact_sqrt(&self) -> Result<UniPoly> {
        if self.is_zero() {
            return Err(Error::NotPolynomialSquare);
        }
        if !self.is_monic() || self.deg() % 2 != 0 {
            return Err(Error::NotPolynomialSquare);
        }
        let field = self.field;
        let two_inv = field.from_i64(2).inv().ok_or(Error::NotPolynomialSquare)?;
        let m = self.deg() / 2;
        let mut g = vec![field.zero(); m + 1];
        g[m] = field.one();
        // match coefficients from the top: f_{2m-k} = sum_{i+j=2m-k} g_i g_j
        for k in 1..=m {
            let target = self.coeff(2 * m - k);
            let mut s = field.zero();
            for i in (m - k + 1)..=m {
                let j = 2 * m - k - i;
                if j > m || j <= m - k {
                    continue;
                }
                if i == m - k || j == m - k {
                    continue;
                }
                s = &s + &(&g[i] * &g[j]);
            }
            // remaining term is 2 * g[m-k] * g[m] = 2 g[m-k]
            g[m - k] = &(&target - &s) * &two_inv;
        }
        let root = UniPoly::from_coeffs(field, g);
        if root.mul(&root) == *self {
            Ok(root)
        } else {
            Err(Error::NotPolynomialSquare)
        }
    }

    /// self^e mod m by square-and-multiply.
    pub fn pow_mod(&self, e: &num_bigint::BigUint, modulus: &UniPoly) -> UniPoly {
        let mut result = UniPoly::one(self.field);
        let mut base = self.rem(modulus);
        let mut e = e.clone();
        while !e.is_zero() {
            if e.bit(0) {
                result = result.mul(&base).rem(modulus);
            }
            base = base.mul(&base).rem(modulus);
            e >>= 1;
        }
        result
    }

    /// Chinese remainder: the unique residue mod the product of the pairwise
    /// coprime moduli.
    pub fn crt(parts: &[(UniPoly, UniPoly)]) -> Result<UniPoly> {
        let _field = parts
            .first()
            .map(|(r, _)| r.field())
            .ok_or_else(|| Error::InvalidInput("empty crt input".into()))?;
        let mut acc_r = parts[0].0.rem(&parts[0].1);
        let mut acc_m = parts[0].1.clone();
        for (r, m) in &parts[1..] {
            let (g, s, t) = acc_m.ext_gcd(m);
            if g.degree() != Some(0) {
                return Err(Error::InvalidInput("crt moduli not coprime".into()));
            }
            // x = acc_r * t * m + r * s * acc_m  mod acc_m * m
            let prod = acc_m.mul(m);
            let x = acc_r
                .mul(&t)
                .mul(m)
                .add(&r.mul(&s).mul(&acc_m))
                .rem(&prod);
            acc_r = x;
            acc_m = prod;
        }
        Ok(acc_r)
    }

    /// Clears denominators and content: primitive integer coefficients,
    /// positive leading coefficient. Rationals only.
    pub fn primitive_integer_coeffs(&self) -> Vec<BigInt> {
        assert!(self.field.is_q() && !self.is_zero());
        use num_integer::Integer;
        let mut lcm = BigInt::from(1);
        for c in &self.coeffs {
            lcm = lcm.lcm(c.as_rational().denom());
        }
        let mut ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| {
                let r = c.as_rational();
                r.numer() * (&lcm / r.denom())
            })
            .collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if !g.is_zero() {
            if ints.last().unwrap().is_negative() {
                g = -g;
            }
            for c in &mut ints {
                *c /= &g;
            }
        }
        ints
    }

    fn check(&self, other: &UniPoly) {
        assert_eq!(self.field, other.field, "polynomial field mismatch");
    }

    // ---- text format ----

    /// Parses sparse human syntax like "x^4+x+1", "-3/4y^2 + 2", "7".
    pub fn parse(field: Field, input: &str) -> Result<UniPoly> {
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut terms: Vec<(String, bool)> = Vec::new(); // (term, negative)
        let mut cur = String::new();
        let mut neg = false;
        let mut first = true;
        for ch in s.chars() {
            if (ch == '+' || ch == '-') && !first && !cur.is_empty() {
                terms.push((cur.clone(), neg));
                cur.clear();
                neg = ch == '-';
            } else if ch == '-' && (first || cur.is_empty()) {
                neg = !neg;
            } else if ch == '+' && (first || cur.is_empty()) {
                // unary plus
            } else {
                cur.push(ch);
            }
            first = false;
        }
        if cur.is_empty() {
            return Err(Error::Parse(format!("dangling sign in {input:?}")));
        }
        terms.push((cur, neg));

        let mut var: Option<char> = None;
        let mut acc = UniPoly::zero(field);
        for (term, negative) in terms {
            let (coeff_str, var_part) = match term.find(|c: char| c.is_ascii_alphabetic()) {
                Some(idx) => (&term[..idx], &term[idx..]),
                None => (&term[..], ""),
            };
            let coeff_str = coeff_str.strip_suffix('*').unwrap_or(coeff_str);
            let mut coeff = if coeff_str.is_empty() {
                field.one()
            } else {
                parse_scalar(field, coeff_str)?
            };
            if negative {
                coeff = -&coeff;
            }
            let deg = if var_part.is_empty() {
                0usize
            } else {
                let mut it = var_part.chars();
                let v = it.next().unwrap();
                match var {
                    None => var = Some(v),
                    Some(w) if w == v => {}
                    Some(w) => {
                        return Err(Error::Parse(format!("mixed variables {w:?} and {v:?}")))
                    }
                }
                let rest: String = it.collect();
                if rest.is_empty() {
                    1
                } else if let Some(e) = rest.strip_prefix('^') {
                    e.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad exponent {e:?}")))?
                } else {
                    return Err(Error::Parse(format!("bad term {term:?}")));
                }
            };
            acc = acc.add(&UniPoly::monomial(field, coeff, deg));
        }
        Ok(acc)
    }

    /// Canonical text rendering, highest degree first, variable `x`.
    pub fn render(&self) -> String {
        self.render_with('x')
    }

    pub fn render_with(&self, var: char) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let cs = c.to_string();
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if out.is_empty() {
                if sign == "-" {
                    out.push('-');
                }
            } else {
                out.push_str(sign);
            }
            if i == 0 {
                out.push_str(&mag);
            } else {
                if mag != "1" {
                    out.push_str(&mag);
                }
                out.push(var);
                if i > 1 {
                    out.push_str(&format!("^{i}"));
                }
            }
        }
        out
    }

    // ---- JSON coefficient arrays (low-to-high) ----

    pub fn to_json(&self) -> Value {
        Value::Array(
            self.coeffs
                .iter()
                .map(|c| match c {
                    Scalar::Fp { val, .. } => Value::from(*val),
                    Scalar::Rat(r) => {
                        if r.is_integer() {
                            if let Ok(v) = i64::try_from(r.to_integer()) {
                                return Value::from(v);
                            }
                        }
                        Value::from(c.to_string())
                    }
                })
                .collect(),
        )
    }

    pub fn from_json(field: Field, v: &Value) -> Result<UniPoly> {
        let arr = v
            .as_array()
            .ok_or_else(|| Error::Parse("expected a JSON array of coefficients".into()))?;
        let mut coeffs = Vec::with_capacity(arr.len());
        for item in arr {
            let s = match item {
                Value::Number(n) => n.to_string(),
                Value::String(s) => s.clone(),
                other => return Err(Error::Parse(format!("bad coefficient {other}"))),
            };
            coeffs.push(parse_scalar(field, &s)?);
        }
        Ok(UniPoly::from_coeffs(field, coeffs))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn q(coeffs: &[i64]) -> UniPoly {
        UniPoly::from_i64(Field::Q, coeffs)
    }

    #[test]
    fn ring_ops() {
        let f = q(&[1, 1]); // 1+x
        let g = q(&[-1, 1]); // -1+x
        assert_eq!(f.mul(&g), q(&[-1, 0, 1]));
        assert_eq!(f.add(&g), q(&[0, 2]));
        let (quo, rem) = q(&[-1, 0, 1]).divmod(&f);
        assert_eq!(quo, g);
        assert!(rem.is_zero());
    }

    #[test]
    fn resultant_degree_one_is_evaluation() {
        // Res(x - a, g) = g(a)
        let g = q(&[5, -3, 2, 1]);
        for a in [-2i64, 0, 1, 7] {
            let f = q(&[-a, 1]);
            assert_eq!(f.resultant(&g).unwrap(), g.eval(&Field::Q.from_i64(a)));
        }
    }

    #[test]
    fn resultant_with_constant_one() {
        let f = q(&[3, 0, 0, 1]);
        assert_eq!(f.resultant(&q(&[1])).unwrap(), Field::Q.one());
    }

    #[test]
    fn resultant_of_coprime_quadratics() {
        // Res(x^2-2, x^2-3) = (2-3)^2 = 1, confirmed numerically beforehand
        let f = q(&[-2, 0, 1]);
        let g = q(&[-3, 0, 1]);
        assert_eq!(f.resultant(&g).unwrap(), Field::Q.one());
    }

    #[test]
    fn resultant_multiplicative_in_second_arg() {
        let f = q(&[1, 1, 0, 0, 1]);
        let g = q(&[2, -1, 1]);
        let h = q(&[-3, 0, 5, 1]);
        let lhs = f.resultant(&g.mul(&h)).unwrap();
        let rhs = &f.resultant(&g).unwrap() * &f.resultant(&h).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn resultant_errors_on_double_zero() {
        let z = UniPoly::zero(Field::Q);
        assert_eq!(z.resultant(&z), Err(Error::UndefinedResultant));
    }

    #[test]
    fn exact_sqrt_cases() {
        assert_eq!(q(&[1, 2, 1]).exact_sqrt().unwrap(), q(&[1, 1]));
        assert_eq!(q(&[1]).exact_sqrt().unwrap(), q(&[1]));
        let cubic = q(&[-1, -4, 0, 1]); // x^3 - 4x - 1
        assert_eq!(cubic.mul(&cubic).exact_sqrt().unwrap(), cubic);
        assert_eq!(q(&[1, 1, 1]).exact_sqrt(), Err(Error::NotPolynomialSquare));
        assert_eq!(q(&[0, 1]).exact_sqrt(), Err(Error::NotPolynomialSquare));
    }

    #[test]
    fn separability() {
        assert!(q(&[1, 1, 0, 0, 1]).is_separable());
        assert!(!q(&[1, 2, 1]).is_separable());
        // x^5 over F_5 is a p-th power times x-ish case: x^5 - x is separable,
        // x^5 is not, and (x^5 + 1) = (x+1)^5 is not.
        let f5 = Field::prime(5).unwrap();
        assert!(UniPoly::from_i64(f5, &[0, -1, 0, 0, 0, 1]).is_separable());
        assert!(!UniPoly::from_i64(f5, &[1, 0, 0, 0, 0, 1]).is_separable());
    }

    #[test]
    fn discriminants() {
        assert_eq!(q(&[-2, 0, 1]).discriminant().unwrap(), Field::Q.from_i64(8));
        assert_eq!(
            q(&[1, 1, 0, 0, 1]).discriminant().unwrap(),
            Field::Q.from_i64(229)
        );
        assert_eq!(
            q(&[1, -4, 0, 1]).discriminant().unwrap(),
            Field::Q.from_i64(229)
        );
    }

    #[test]
    fn parse_and_render_round_trip() {
        for s in ["x^4+x+1", "x^6-4x^2-1", "-x^3+2x-5", "3/4x^2-1/2", "7", "x"] {
            let p = UniPoly::parse(Field::Q, s).unwrap();
            let back = UniPoly::parse(Field::Q, &p.render()).unwrap();
            assert_eq!(p, back, "round trip of {s}");
        }
        let p = UniPoly::parse(Field::Q, "Y^6 - 4*Y^2 - 1").unwrap();
        assert_eq!(p, q(&[-1, 0, -4, 0, 0, 0, 1]));
    }

    #[test]
    fn json_round_trip() {
        let p = UniPoly::from_coeffs(
            Field::Q,
            vec![rat(1, 2), Field::Q.from_i64(0), Field::Q.from_i64(-7)],
        );
        let v = p.to_json();
        assert_eq!(v.to_string(), r#"["1/2",0,-7]"#);
        assert_eq!(UniPoly::from_json(Field::Q, &v).unwrap(), p);
        let f5 = Field::prime(5).unwrap();
        let w = UniPoly::from_i64(f5, &[1, 1, 0, 0, 1]);
        assert_eq!(UniPoly::from_json(f5, &w.to_json()).unwrap(), w);
    }

    #[test]
    fn crt_reconstructs() {
        let m1 = q(&[-1, 1]);
        let m2 = q(&[-2, 1]);
        let m3 = q(&[1, 0, 1]);
        // f = x^3 + 2: residues f(1)=3, f(2)=10, x^3+2 mod x^2+1 = -x+2
        let f = q(&[2, 0, 0, 1]);
        let got = UniPoly::crt(&[
            (f.rem(&m1), m1.clone()),
            (f.rem(&m2), m2.clone()),
            (f.rem(&m3), m3.clone()),
        ])
        .unwrap();
        assert_eq!(got, f.rem(&m1.mul(&m2).mul(&m3)));
    }

    #[test]
    fn compose_and_eval_agree() {
        let f = q(&[1, -2, 0, 3]);
        let g = q(&[2, 5, -1]);
        let x = rat(3, 7);
        assert_eq!(f.compose(&g).eval(&x), f.eval(&g.eval(&x)));
    }
}
