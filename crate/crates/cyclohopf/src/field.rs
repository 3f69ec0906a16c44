//! The scalar field Q(zeta_N): elements are polynomials in zeta_N with
//! rational coefficients, reduced modulo the N-th cyclotomic polynomial.
//!
//! A [`CyclotomicContext`] fixes the conductor N once; every
//! [`Cyclotomic`] element carries a shared handle to its context, and
//! elements from different contexts never mix. Scalars have a small text
//! grammar (`-1/2*z^2 + 3`, with `z` standing for zeta_N) used by the file
//! formats and the command line; [`parse_scalar`] and the `Display`
//! implementation are mutually inverse on canonical forms.

use std::fmt;
use std::sync::Arc;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

use crate::{Error, Result};

/// Arbitrary-precision rational number.
pub type Rat = BigRational;

fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Euler's totient, by trial-division factorization.
pub fn euler_phi(mut n: u64) -> u64 {
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

/// Exact division of integer polynomials; `den` must be monic and divide
/// `num` exactly. Little-endian coefficients.
fn int_poly_div_exact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut rem = num.to_vec();
    let dn = rem.len() - 1;
    assert!(dn >= dd);
    let mut quot = vec![BigInt::zero(); dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd].clone();
        if !c.is_zero() {
            for (i, di) in den.iter().enumerate() {
                rem[k + i] -= &c * di;
            }
        }
        quot[k] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division was not exact");
    quot
}

/// The N-th cyclotomic polynomial with integer coefficients, little-endian.
pub fn cyclotomic_polynomial(n: u64) -> Vec<BigInt> {
    // x^n - 1 divided by Phi_d for every proper divisor d of n.
    let mut poly = vec![BigInt::zero(); n as usize + 1];
    poly[0] = BigInt::from(-1);
    poly[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            poly = int_poly_div_exact(&poly, &cyclotomic_polynomial(d));
        }
    }
    poly
}

/// Shared data for arithmetic in Q(zeta_N).
///
/// Holds the cyclotomic modulus and precomputed reductions of the powers
/// zeta^k, so that element multiplication is a polynomial product followed
/// by table lookups.
#[derive(Debug)]
pub struct CyclotomicContext {
    conductor: u64,
    phi: usize,
    /// Phi_N, monic, length `phi + 1`, little-endian.
    modulus: Vec<Rat>,
    /// `xpow[j]` = coefficients of x^(phi+j) mod Phi_N, length `phi`.
    xpow: Vec<Vec<Rat>>,
    /// `zeta_pows[k]` = coefficients of zeta^k, for 0 <= k < N.
    zeta_pows: Vec<Vec<Rat>>,
}

/// Largest accepted conductor; keeps table sizes sane for untrusted input.
pub const MAX_CONDUCTOR: u64 = 4096;

impl PartialEq for CyclotomicContext {
    fn eq(&self, other: &Self) -> bool {
        self.conductor == other.conductor
    }
}

impl Eq for CyclotomicContext {}

impl CyclotomicContext {
    pub fn new(conductor: u64) -> Result<Arc<Self>> {
        if conductor == 0 {
            return Err(Error::BadConductor(conductor, "must be positive".into()));
        }
        if conductor > MAX_CONDUCTOR {
            return Err(Error::BadConductor(
                conductor,
                format!("exceeds supported maximum {MAX_CONDUCTOR}"),
            ));
        }
        let n = conductor;
        let int_modulus = cyclotomic_polynomial(n);
        let phi = int_modulus.len() - 1;
        let modulus: Vec<Rat> = int_modulus.into_iter().map(Rat::from_integer).collect();

        // x^phi mod Phi = -(lower coefficients), then repeatedly shift.
        let shorten = |v: &[Rat]| v[..phi].to_vec();
        let base: Vec<Rat> = modulus[..phi].iter().map(|c| -c).collect();
        let max_j = std::cmp::max(phi.saturating_sub(1), (n as usize).saturating_sub(phi)) + 1;
        let mut xpow: Vec<Vec<Rat>> = Vec::with_capacity(max_j);
        xpow.push(base.clone());
        for j in 1..max_j {
            let prev = &xpow[j - 1];
            let mut next = vec![Rat::zero(); phi];
            next[1..phi].clone_from_slice(&prev[..phi - 1]);
            let top = prev[phi - 1].clone();
            if !top.is_zero() {
                for (i, b) in base.iter().enumerate() {
                    next[i] += &top * b;
                }
            }
            xpow.push(next);
        }
        let _ = shorten;

        let mut zeta_pows: Vec<Vec<Rat>> = Vec::with_capacity(n as usize);
        for k in 0..n as usize {
            if k < phi {
                let mut v = vec![Rat::zero(); phi];
                v[k] = Rat::one();
                zeta_pows.push(v);
            } else {
                zeta_pows.push(xpow[k - phi].clone());
            }
        }

        Ok(Arc::new(CyclotomicContext {
            conductor,
            phi,
            modulus,
            xpow,
            zeta_pows,
        }))
    }

    pub fn conductor(&self) -> u64 {
        self.conductor
    }

    /// Degree of the field extension, phi(N).
    pub fn degree(&self) -> usize {
        self.phi
    }
}

/// An element of Q(zeta_N), owned by a shared [`CyclotomicContext`].
#[derive(Clone)]
pub struct Cyclotomic {
    ctx: Arc<CyclotomicContext>,
    /// Length `ctx.phi`, little-endian coefficients of a polynomial in zeta.
    coeffs: Vec<Rat>,
}

/// Context-level constructors live on the `Arc` so call sites read naturally.
#[allow(clippy::wrong_self_convention)]
pub trait ContextOps {
    fn zero(&self) -> Cyclotomic;
    fn one(&self) -> Cyclotomic;
    fn from_int(&self, n: i64) -> Cyclotomic;
    fn from_rat(&self, r: Rat) -> Cyclotomic;
    fn zeta(&self) -> Cyclotomic;
    /// zeta^k, with the exponent taken modulo N (negatives allowed).
    fn zeta_pow(&self, k: i64) -> Cyclotomic;
    /// A primitive n-th root of unity, when one exists in this field.
    fn root_of_unity(&self, n: u64) -> Result<Cyclotomic>;
    /// The imaginary unit, when present.
    fn imaginary_unit(&self) -> Result<Cyclotomic>;
}

impl ContextOps for Arc<CyclotomicContext> {
    fn zero(&self) -> Cyclotomic {
        Cyclotomic {
            ctx: self.clone(),
            coeffs: vec![Rat::zero(); self.phi],
        }
    }

    fn one(&self) -> Cyclotomic {
        self.from_int(1)
    }

    fn from_int(&self, n: i64) -> Cyclotomic {
        self.from_rat(rat_int(n))
    }

    fn from_rat(&self, r: Rat) -> Cyclotomic {
        let mut coeffs = vec![Rat::zero(); self.phi];
        coeffs[0] = r;
        Cyclotomic {
            ctx: self.clone(),
            coeffs,
        }
    }

    fn zeta(&self) -> Cyclotomic {
        self.zeta_pow(1)
    }

    fn zeta_pow(&self, k: i64) -> Cyclotomic {
        let n = self.conductor as i64;
        let k = k.rem_euclid(n) as usize;
        Cyclotomic {
            ctx: self.clone(),
            coeffs: self.zeta_pows[k].clone(),
        }
    }

    fn root_of_unity(&self, n: u64) -> Result<Cyclotomic> {
        if n == 0 {
            return Err(Error::NotAnNthRoot("zeta".into(), n));
        }
        // The roots of unity in Q(zeta_N) form a cyclic group of order
        // lcm(2, N), generated by zeta for even N and by -zeta for odd N.
        let big_n = self.conductor;
        let m = if big_n.is_multiple_of(2) { big_n } else { 2 * big_n };
        if m % n != 0 {
            return Err(Error::NotAnNthRoot(format!("in Q(zeta_{big_n})"), n));
        }
        let k = m / n;
        let gen = if big_n.is_multiple_of(2) {
            self.zeta()
        } else {
            -&self.zeta()
        };
        Ok(gen.pow(k))
    }

    fn imaginary_unit(&self) -> Result<Cyclotomic> {
        self.root_of_unity(4)
    }
}

impl Cyclotomic {
    pub fn context(&self) -> &Arc<CyclotomicContext> {
        &self.ctx
    }

    pub fn conductor(&self) -> u64 {
        self.ctx.conductor
    }

    /// Raw coefficients over the power basis 1, zeta, ..., zeta^(phi-1).
    pub fn coefficients(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value of this element, when it lies in Q.
    pub fn as_rational(&self) -> Option<&Rat> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn assert_same_ctx(&self, other: &Cyclotomic) {
        assert_eq!(
            self.ctx.conductor, other.ctx.conductor,
            "cyclotomic context mismatch"
        );
    }

    pub fn pow(&self, mut e: u64) -> Cyclotomic {
        let mut base = self.clone();
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Multiplicative inverse; fails on zero.
    pub fn inv(&self) -> Result<Cyclotomic> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // Extended Euclid in Q[x] against the (irreducible) modulus.
        let mut r0 = self.ctx.modulus.clone();
        let mut r1 = trim(self.coeffs.clone());
        let mut s0: Vec<Rat> = vec![];
        let mut s1: Vec<Rat> = vec![Rat::one()];
        while !r1.is_empty() {
            let (q, r) = poly_divrem(&r0, &r1);
            let s = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = trim(s);
        }
        // r0 is a nonzero constant gcd since the modulus is irreducible.
        debug_assert_eq!(r0.len(), 1);
        let c = r0[0].clone();
        let mut coeffs = vec![Rat::zero(); self.ctx.phi];
        for (i, v) in s0.iter().enumerate() {
            coeffs[i] = v / &c;
        }
        Ok(Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs,
        })
    }

    pub fn div(&self, other: &Cyclotomic) -> Result<Cyclotomic> {
        Ok(self * &other.inv()?)
    }

    pub fn scale(&self, r: &Rat) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }
}

fn trim(mut v: Vec<Rat>) -> Vec<Rat> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); std::cmp::max(a.len(), b.len())];
    for (i, c) in a.iter().enumerate() {
        out[i] += c;
    }
    for (i, c) in b.iter().enumerate() {
        out[i] -= c;
    }
    trim(out)
}

fn poly_mul(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    trim(out)
}

fn poly_divrem(num: &[Rat], den: &[Rat]) -> (Vec<Rat>, Vec<Rat>) {
    let dd = den.len() - 1;
    let lead = &den[dd];
    let mut rem = num.to_vec();
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let mut quot = vec![Rat::zero(); rem.len() - dd];
    for k in (0..=rem.len() - 1 - dd).rev() {
        let c = &rem[k + dd] / lead;
        if !c.is_zero() {
            for (i, di) in den.iter().enumerate() {
                let t = &c * di;
                rem[k + i] -= t;
            }
        }
        quot[k] = c;
    }
    (trim(quot), trim(rem))
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.assert_same_ctx(other);
        self.coeffs == other.coeffs
    }
}

impl Eq for Cyclotomic {}

impl std::ops::Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_ctx(rhs);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl std::ops::Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_ctx(rhs);
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl std::ops::Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }
}

impl std::ops::Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        self.assert_same_ctx(rhs);
        let phi = self.ctx.phi;
        let mut prod = vec![Rat::zero(); 2 * phi - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        let mut coeffs: Vec<Rat> = prod[..phi].to_vec();
        for (j, c) in prod[phi..].iter().enumerate() {
            if !c.is_zero() {
                for (i, x) in self.ctx.xpow[j].iter().enumerate() {
                    coeffs[i] += c * x;
                }
            }
        }
        Cyclotomic {
            ctx: self.ctx.clone(),
            coeffs,
        }
    }
}

impl std::ops::AddAssign<&Cyclotomic> for Cyclotomic {
    fn add_assign(&mut self, rhs: &Cyclotomic) {
        self.assert_same_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl std::ops::SubAssign<&Cyclotomic> for Cyclotomic {
    fn sub_assign(&mut self, rhs: &Cyclotomic) {
        self.assert_same_ctx(rhs);
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

/// Smallest n >= 1 with a^n = 1, searched up to 2N; `None` when a is not a
/// root of unity (every root of unity in Q(zeta_N) has order dividing
/// lcm(2, N)).
pub fn root_of_unity_order(a: &Cyclotomic) -> Option<u64> {
    if a.is_zero() {
        return None;
    }
    let bound = 2 * a.ctx.conductor;
    let mut b = a.clone();
    for k in 1..=bound {
        if b.is_one() {
            return Some(k);
        }
        b = &b * a;
    }
    None
}

// ---------------------------------------------------------------------------
// Scalar text grammar
// ---------------------------------------------------------------------------

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Scanner<'a> {
    fn new(s: &'a str) -> Self {
        Scanner {
            bytes: s.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn bump(&mut self) -> Option<u8> {
        let b = self.peek();
        if b.is_some() {
            self.pos += 1;
        }
        b
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::ParseError {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.peek().is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.err("expected an integer"));
        }
        let digits = std::str::from_utf8(&self.bytes[start..self.pos]).unwrap();
        digits
            .parse::<BigInt>()
            .map_err(|e| self.err(format!("bad integer: {e}")))
    }
}

/// Parse a scalar in the text grammar: terms joined by `+`/`-`, each term a
/// rational `p` or `p/q`, a power `z^k` (k >= 0), or a product `p/q*z^k`.
pub fn parse_scalar(ctx: &Arc<CyclotomicContext>, s: &str) -> Result<Cyclotomic> {
    let mut sc = Scanner::new(s);
    let mut acc = ctx.zero();
    sc.skip_ws();
    if sc.peek().is_none() {
        return Err(sc.err("empty scalar"));
    }
    let mut first = true;
    loop {
        sc.skip_ws();
        let negative = if first {
            match sc.peek() {
                Some(b'-') => {
                    sc.bump();
                    true
                }
                Some(b'+') => {
                    sc.bump();
                    false
                }
                _ => false,
            }
        } else {
            match sc.bump() {
                Some(b'+') => false,
                Some(b'-') => true,
                _ => {
                    sc.pos -= 1;
                    return Err(sc.err("expected '+' or '-' between terms"));
                }
            }
        };
        first = false;
        sc.skip_ws();
        let term = parse_term(ctx, &mut sc)?;
        if negative {
            acc -= &term;
        } else {
            acc += &term;
        }
        sc.skip_ws();
        if sc.peek().is_none() {
            return Ok(acc);
        }
    }
}

fn parse_term(ctx: &Arc<CyclotomicContext>, sc: &mut Scanner) -> Result<Cyclotomic> {
    match sc.peek() {
        Some(b'z') => {
            sc.bump();
            parse_zeta_power(ctx, sc)
        }
        Some(b) if b.is_ascii_digit() => {
            let numer = sc.integer()?;
            sc.skip_ws();
            let coef = if sc.peek() == Some(b'/') {
                sc.bump();
                sc.skip_ws();
                let denom = sc.integer()?;
                if denom.is_zero() {
                    return Err(sc.err("zero denominator"));
                }
                Rat::new(numer, denom)
            } else {
                Rat::from_integer(numer)
            };
            sc.skip_ws();
            if sc.peek() == Some(b'*') {
                sc.bump();
                sc.skip_ws();
                if sc.bump() != Some(b'z') {
                    sc.pos -= 1;
                    return Err(sc.err("expected 'z' after '*'"));
                }
                let z = parse_zeta_power(ctx, sc)?;
                Ok(z.scale(&coef))
            } else {
                Ok(ctx.from_rat(coef))
            }
        }
        _ => Err(sc.err("expected a term")),
    }
}

fn parse_zeta_power(ctx: &Arc<CyclotomicContext>, sc: &mut Scanner) -> Result<Cyclotomic> {
    if sc.peek() == Some(b'^') {
        sc.bump();
        sc.skip_ws();
        let e = sc.integer()?;
        if e.is_negative() {
            return Err(sc.err("exponent must be nonnegative"));
        }
        let k = (e % BigInt::from(ctx.conductor()))
            .to_string()
            .parse::<i64>()
            .unwrap();
        Ok(ctx.zeta_pow(k))
    } else {
        Ok(ctx.zeta())
    }
}

fn fmt_rat_abs(r: &Rat) -> String {
    let a = r.abs();
    if a.denom().is_one() {
        a.numer().to_string()
    } else {
        format!("{}/{}", a.numer(), a.denom())
    }
}

impl fmt::Display for Cyclotomic {
    /// Canonical form: terms in increasing powers of `z`, reduced rational
    /// coefficients, no zero terms, and `0` for the zero element.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(usize, &Rat)> = self
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (k, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = fmt_rat_abs(c);
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if mag != "1" {
                        write!(f, "{mag}*")?;
                    }
                    if *k == 1 {
                        write!(f, "z")?;
                    } else {
                        write!(f, "z^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self}; N={})", self.ctx.conductor)
    }
}
