//! Exact arithmetic in cyclotomic fields `Q(ζ_N)`.
//!
//! Elements are residues modulo the cyclotomic polynomial `Φ_N`, stored in the
//! power basis `1, ζ, …, ζ^{φ(N)-1}` with arbitrary-precision rational
//! coefficients. Signs of real elements are certified against the embedding
//! `ζ_N ↦ e^{2πi/N}`: a cheap `f64` evaluation with a generous error bound, then
//! fixed-point big-integer evaluation with doubling precision.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Modulus data for `Q(ζ_N)`.
#[derive(Debug)]
pub struct CycloContext {
    n: u32,
    /// `Φ_N`, monic, low degree first.
    phi: Vec<BigInt>,
    deg: usize,
    /// `ζ^m` reduced mod `Φ_N`, for `m` in `0..N`.
    powers: Vec<Vec<BigRational>>,
}

pub type Ctx = Arc<CycloContext>;

fn cache() -> &'static Mutex<HashMap<u32, Ctx>> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Ctx>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Integer polynomial division by a monic divisor (exact).
fn div_monic(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return vec![BigInt::zero()];
    }
    let mut q = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..q.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            rem[i + j] -= &c * dj;
        }
        q[i] = c;
    }
    debug_assert!(rem.iter().all(|c| c.is_zero()));
    q
}

/// Coefficients of the `n`-th cyclotomic polynomial, low degree first.
pub fn cyclotomic_poly(n: u32) -> Vec<BigInt> {
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = BigInt::from(-1);
    num[n as usize] = BigInt::one();
    let mut p = num;
    for d in 1..n {
        if n % d == 0 {
            p = div_monic(&p, &cyclotomic_poly(d));
        }
    }
    p
}

impl CycloContext {
    /// Shared context for conductor `n` (cached process-wide).
    pub fn get(n: u32) -> Ctx {
        assert!(n >= 1, "conductor must be positive");
        let mut map = cache().lock().unwrap();
        map.entry(n)
            .or_insert_with(|| Arc::new(CycloContext::build(n)))
            .clone()
    }

    fn build(n: u32) -> CycloContext {
        let phi = cyclotomic_poly(n);
        let deg = phi.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![BigRational::zero(); deg];
        cur[0] = BigRational::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by ζ
            let top = cur[deg - 1].clone();
            for i in (1..deg).rev() {
                cur[i] = cur[i - 1].clone();
            }
            cur[0] = BigRational::zero();
            if !top.is_zero() {
                for i in 0..deg {
                    cur[i] -= &top * BigRational::from_integer(phi[i].clone());
                }
            }
        }
        CycloContext { n, phi, deg, powers }
    }

    pub fn conductor(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.deg
    }

    pub fn min_poly(&self) -> &[BigInt] {
        &self.phi
    }

    /// Reduce an arbitrary-length coefficient vector modulo `Φ_N`.
    fn reduce(&self, mut c: Vec<BigRational>) -> Vec<BigRational> {
        let d = self.deg;
        while c.len() > d {
            let top = c.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = c.len() - d;
            for i in 0..d {
                c[shift + i] -= &top * BigRational::from_integer(self.phi[i].clone());
            }
        }
        c.resize(d, BigRational::zero());
        c
    }
}

/// An element of `Q(ζ_N)`.
#[derive(Clone)]
pub struct CycloElem {
    ctx: Ctx,
    c: Vec<BigRational>,
}

impl PartialEq for CycloElem {
    fn eq(&self, other: &Self) -> bool {
        self.ctx.n == other.ctx.n && self.c == other.c
    }
}
impl Eq for CycloElem {}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms = Vec::new();
        for (i, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "z".to_string(),
                _ => format!("z^{}", i),
            };
            let s = if mono.is_empty() {
                c.to_string()
            } else if c.is_one() {
                mono
            } else if *c == -BigRational::one() {
                format!("-{}", mono)
            } else {
                format!("{}*{}", c, mono)
            };
            terms.push(s);
        }
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + ").replace("+ -", "- "))
        }
    }
}

impl CycloElem {
    pub fn zero(ctx: &Ctx) -> Self {
        CycloElem { ctx: ctx.clone(), c: vec![BigRational::zero(); ctx.deg] }
    }

    pub fn one(ctx: &Ctx) -> Self {
        Self::from_rational(ctx, BigRational::one())
    }

    pub fn from_int(ctx: &Ctx, v: i64) -> Self {
        Self::from_rational(ctx, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(ctx: &Ctx, v: BigRational) -> Self {
        let mut e = Self::zero(ctx);
        e.c[0] = v;
        e
    }

    /// `ζ_N^k` (any integer `k`).
    pub fn zeta_pow(ctx: &Ctx, k: i64) -> Self {
        let m = k.rem_euclid(ctx.n as i64) as usize;
        CycloElem { ctx: ctx.clone(), c: ctx.powers[m].clone() }
    }

    /// Element from power-basis coefficients of any length (reduced mod `Φ_N`).
    pub fn from_coeffs(ctx: &Ctx, coeffs: Vec<BigRational>) -> Self {
        CycloElem { ctx: ctx.clone(), c: ctx.reduce(coeffs) }
    }

    pub fn ctx(&self) -> &Ctx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.c[0].is_one() && self.c[1..].iter().all(|x| x.is_zero())
    }

    /// The rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.c[1..].iter().all(|x| x.is_zero()) {
            Some(self.c[0].clone())
        } else {
            None
        }
    }

    fn same_ctx(&self, other: &Self) -> Result<()> {
        if self.ctx.n == other.ctx.n {
            Ok(())
        } else {
            Err(Error::ContextMismatch(self.ctx.n, other.ctx.n))
        }
    }

    pub fn try_add(&self, o: &Self) -> Result<Self> {
        self.same_ctx(o)?;
        Ok(self.add_unchecked(o))
    }

    pub fn try_sub(&self, o: &Self) -> Result<Self> {
        self.same_ctx(o)?;
        Ok(self.sub_unchecked(o))
    }

    pub fn try_mul(&self, o: &Self) -> Result<Self> {
        self.same_ctx(o)?;
        Ok(self.mul_unchecked(o))
    }

    pub fn try_div(&self, o: &Self) -> Result<Self> {
        self.same_ctx(o)?;
        let inv = o.inverse()?;
        Ok(self.mul_unchecked(&inv))
    }

    fn add_unchecked(&self, o: &Self) -> Self {
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a + b).collect();
        CycloElem { ctx: self.ctx.clone(), c }
    }

    fn sub_unchecked(&self, o: &Self) -> Self {
        let c = self.c.iter().zip(&o.c).map(|(a, b)| a - b).collect();
        CycloElem { ctx: self.ctx.clone(), c }
    }

    fn mul_unchecked(&self, o: &Self) -> Self {
        let d = self.ctx.deg;
        if d == 1 {
            return CycloElem { ctx: self.ctx.clone(), c: vec![&self.c[0] * &o.c[0]] };
        }
        let mut prod = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    prod[i + j] += a * b;
                }
            }
        }
        CycloElem { ctx: self.ctx.clone(), c: self.ctx.reduce(prod) }
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        CycloElem { ctx: self.ctx.clone(), c: self.c.iter().map(|a| a * r).collect() }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm with `Φ_N`.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(&self.ctx, r.recip()));
        }
        let m: Vec<BigRational> =
            self.ctx.phi.iter().map(|c| BigRational::from_integer(c.clone())).collect();
        // invariant: r_i ≡ s_i·a (mod Φ)
        let (mut r0, mut s0) = (m, vec![]);
        let (mut r1, mut s1) = (trim(self.c.clone()), vec![BigRational::one()]);
        while !(r1.len() == 1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
        }
        let inv_c = r1[0].recip();
        let s: Vec<BigRational> = s1.iter().map(|x| x * &inv_c).collect();
        Ok(CycloElem::from_coeffs(&self.ctx, s))
    }

    /// Field automorphism `ζ ↦ ζ^k`, `gcd(k, N) = 1`.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.ctx.n as i64;
        if n.gcd(&k) != 1 && n > 1 {
            return Err(Error::NotCoprime(k, self.ctx.n));
        }
        let mut out = vec![BigRational::zero(); self.ctx.deg];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let m = ((i as i64) * k).rem_euclid(n) as usize;
            for (o, p) in out.iter_mut().zip(&self.ctx.powers[m]) {
                if !p.is_zero() {
                    *o += a * p;
                }
            }
        }
        Ok(CycloElem { ctx: self.ctx.clone(), c: out })
    }

    /// Complex conjugation `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is always a unit")
    }

    pub fn is_real(&self) -> bool {
        self.ctx.n <= 2 || self.conj() == *self
    }

    /// Exact sign of a real element under `ζ_N ↦ e^{2πi/N}`.
    pub fn sign_of_real(&self) -> Result<i8> {
        if !self.is_real() {
            return Err(Error::NotReal);
        }
        if self.is_zero() {
            return Ok(0);
        }
        if let Some(r) = self.as_rational() {
            return Ok(if r.is_positive() { 1 } else { -1 });
        }
        if let Some(s) = self.sign_f64() {
            return Ok(s);
        }
        let mut prec = 128u32;
        loop {
            if let Some(s) = self.sign_fixed(prec) {
                return Ok(s);
            }
            prec *= 2;
        }
    }

    /// Approximate real part (diagnostics only; never used for decisions).
    pub fn approx_real(&self) -> f64 {
        let n = self.ctx.n as f64;
        self.c
            .iter()
            .enumerate()
            .map(|(j, c)| {
                c.to_f64().unwrap_or(f64::NAN) * (2.0 * std::f64::consts::PI * j as f64 / n).cos()
            })
            .sum()
    }

    fn sign_f64(&self) -> Option<i8> {
        let n = self.ctx.n as f64;
        let mut val = 0.0f64;
        let mut mass = 0.0f64;
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cf = c.to_f64()?;
            if !cf.is_finite() {
                return None;
            }
            val += cf * (2.0 * std::f64::consts::PI * j as f64 / n).cos();
            mass += cf.abs();
        }
        let err = 1e-12 * (mass + 1.0);
        if val > err {
            Some(1)
        } else if val < -err {
            Some(-1)
        } else {
            None
        }
    }

    fn sign_fixed(&self, prec: u32) -> Option<i8> {
        let n = self.ctx.n;
        let mut sum = BigRational::zero();
        let mut mass = BigRational::zero();
        for (j, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cj = cos_fixed(j as u32, n, prec);
            sum += c * BigRational::from_integer(cj);
            mass += c.abs();
        }
        // each cos value is within 2 units of 2^-prec
        let err = mass * BigRational::from_integer(BigInt::from(2));
        if sum.abs() > err {
            Some(if sum.is_positive() { 1 } else { -1 })
        } else {
            None
        }
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.len() > 1 && p.last().map_or(false, |c| c.is_zero()) {
        p.pop();
    }
    if p.is_empty() {
        p.push(BigRational::zero());
    }
    p
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out = vec![BigRational::zero(); n];
    for (i, x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let b = trim(b.to_vec());
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    if r.len() - 1 < db {
        return (vec![BigRational::zero()], r);
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); r.len() - db];
    for i in (0..q.len()).rev() {
        let c = &r[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            r[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    r.truncate(db.max(1));
    (trim(q), trim(r))
}

/// `π·2^prec` rounded, within a couple of units (Machin's formula).
fn pi_fixed(prec: u32) -> BigInt {
    let g = prec + 16;
    let one = BigInt::one() << g;
    let atan_inv = |x: i64| -> BigInt {
        // atan(1/x) = Σ (-1)^k / ((2k+1) x^{2k+1})
        let x2 = BigInt::from(x * x);
        let mut term = &one / BigInt::from(x);
        let mut sum = BigInt::zero();
        let mut k = 0i64;
        while !term.is_zero() {
            let t = &term / BigInt::from(2 * k + 1);
            if k % 2 == 0 {
                sum += t;
            } else {
                sum -= t;
            }
            term = &term / &x2;
            k += 1;
        }
        sum
    };
    let pi = BigInt::from(16) * atan_inv(5) - BigInt::from(4) * atan_inv(239);
    pi >> 16u32
}

/// `cos(2πj/n)·2^prec`, error at most 2 units.
fn cos_fixed(j: u32, n: u32, prec: u32) -> BigInt {
    let g = prec + 24;
    let j = j % n;
    // fold to [0, π]
    let (jj, _) = if 2 * j > n { (n - j, ()) } else { (j, ()) };
    let pi = pi_fixed(g);
    let x = (BigInt::from(2 * jj) * &pi) / BigInt::from(n); // angle·2^g
    let one = BigInt::one() << g;
    let x2 = (&x * &x) >> g;
    let mut term = one.clone();
    let mut sum = one;
    let mut k = 1u64;
    loop {
        term = (&term * &x2) >> g;
        term = term / BigInt::from((2 * k - 1) * (2 * k));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sum -= &term;
        } else {
            sum += &term;
        }
        k += 1;
    }
    sum >> 24u32
}

impl Add for &CycloElem {
    type Output = CycloElem;
    fn add(self, o: &CycloElem) -> CycloElem {
        assert_eq!(self.ctx.n, o.ctx.n, "cyclotomic context mismatch");
        self.add_unchecked(o)
    }
}

impl Sub for &CycloElem {
    type Output = CycloElem;
    fn sub(self, o: &CycloElem) -> CycloElem {
        assert_eq!(self.ctx.n, o.ctx.n, "cyclotomic context mismatch");
        self.sub_unchecked(o)
    }
}

impl Mul for &CycloElem {
    type Output = CycloElem;
    fn mul(self, o: &CycloElem) -> CycloElem {
        assert_eq!(self.ctx.n, o.ctx.n, "cyclotomic context mismatch");
        self.mul_unchecked(o)
    }
}

impl Neg for &CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem { ctx: self.ctx.clone(), c: self.c.iter().map(|a| -a).collect() }
    }
}

/// Parse a rational polynomial in `z` (read as `ζ_N`), e.g. `"1/2*z^2 - z + 3"`.
pub fn parse_elem(ctx: &Ctx, s: &str) -> Result<CycloElem> {
    let bad = || Error::Parse(format!("bad cyclotomic literal {:?}", s));
    let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(bad());
    }
    let mut terms: Vec<String> = Vec::new();
    let mut cur = String::new();
    for (i, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut acc: Vec<BigRational> = vec![BigRational::zero(); ctx.n as usize + 1];
    for t in terms {
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(bad());
        }
        let (coef, mono) = match body.find('z') {
            None => (body, ""),
            Some(p) => {
                let c = body[..p].trim_end_matches('*');
                (c, &body[p..])
            }
        };
        let mut c = if coef.is_empty() {
            BigRational::one()
        } else {
            parse_rational(coef).ok_or_else(bad)?
        };
        if neg {
            c = -c;
        }
        let e: usize = if mono.is_empty() {
            0
        } else if mono == "z" {
            1
        } else {
            mono.strip_prefix("z^").and_then(|x| x.parse().ok()).ok_or_else(bad)?
        };
        let e = e % ctx.n as usize;
        acc[e] += c;
    }
    let mut out = CycloElem::zero(ctx);
    for (e, c) in acc.into_iter().enumerate() {
        if !c.is_zero() {
            out = &out + &CycloElem::zeta_pow(ctx, e as i64).scale(&c);
        }
    }
    Ok(out)
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    match s.split_once('/') {
        Some((a, b)) => {
            let d: BigInt = b.parse().ok()?;
            if d.is_zero() {
                return None;
            }
            Some(BigRational::new(a.parse().ok()?, d))
        }
        None => Some(BigRational::from_integer(s.parse().ok()?)),
    }
}

/// Row-reduce in place; returns pivot columns. Deterministic: first nonzero
/// entry in column order, rows scanned top to bottom.
pub fn rref(m: &mut Vec<Vec<CycloElem>>) -> Vec<usize> {
    let rows = m.len();
    if rows == 0 {
        return vec![];
    }
    let cols = m[0].len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].inverse().expect("nonzero pivot");
        if !inv.is_one() {
            for x in m[r].iter_mut() {
                if !x.is_zero() {
                    *x = &*x * &inv;
                }
            }
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pivot_row = m[r].clone();
                for (x, y) in m[i].iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x = &*x - &(&f * y);
                    }
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Exact kernel basis (one vector per free column, reduced echelon form).
pub fn kernel(ctx: &Ctx, m: &[Vec<CycloElem>], cols: usize) -> Vec<Vec<CycloElem>> {
    let mut a = m.to_vec();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![CycloElem::zero(ctx); cols];
            v[f] = CycloElem::one(ctx);
            for (r, &p) in pivots.iter().enumerate() {
                v[p] = -&a[r][f];
            }
            v
        })
        .collect()
}

pub fn rank(m: &[Vec<CycloElem>]) -> usize {
    let mut a = m.to_vec();
    rref(&mut a).len()
}

/// Indices of a maximal linearly independent prefix-greedy subset of `vecs`.
pub fn independent_subset(vecs: &[Vec<CycloElem>]) -> Vec<usize> {
    let mut chosen: Vec<usize> = Vec::new();
    let mut basis: Vec<Vec<CycloElem>> = Vec::new();
    for (i, v) in vecs.iter().enumerate() {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial) == trial.len() {
            basis.push(v.clone());
            chosen.push(i);
        }
    }
    chosen
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn cyclotomic_polys() {
        let p = |n| cyclotomic_poly(n).iter().map(|c| c.to_i64().unwrap()).collect::<Vec<_>>();
        assert_eq!(p(1), vec![-1, 1]);
        assert_eq!(p(3), vec![1, 1, 1]);
        assert_eq!(p(4), vec![1, 0, 1]);
        assert_eq!(p(6), vec![1, -1, 1]);
        assert_eq!(p(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(CycloContext::get(15).degree(), 8);
    }

    #[test]
    fn basic_arith() {
        let c3 = CycloContext::get(3);
        let z = CycloElem::zeta_pow(&c3, 1);
        let z2 = CycloElem::zeta_pow(&c3, 2);
        assert_eq!(&z + &z2, CycloElem::from_int(&c3, -1));
        let c4 = CycloContext::get(4);
        let i = CycloElem::zeta_pow(&c4, 1);
        assert_eq!(&i * &i, CycloElem::from_int(&c4, -1));
        let c5 = CycloContext::get(5);
        let a = &CycloElem::one(&c5) + &CycloElem::zeta_pow(&c5, 1);
        assert!(a.try_div(&a).unwrap().is_one());
        assert!(matches!(a.try_div(&CycloElem::zero(&c5)), Err(Error::DivisionByZero)));
        assert!(matches!(a.try_add(&i), Err(Error::ContextMismatch(5, 4))));
    }

    #[test]
    fn signs() {
        let c3 = CycloContext::get(3);
        let x = &CycloElem::zeta_pow(&c3, 1) + &CycloElem::zeta_pow(&c3, -1);
        assert_eq!(x.sign_of_real().unwrap(), -1);
        let c5 = CycloContext::get(5);
        let y = &CycloElem::zeta_pow(&c5, 1) + &CycloElem::zeta_pow(&c5, -1);
        assert_eq!(y.sign_of_real().unwrap(), 1);
        assert_eq!(CycloElem::zero(&c5).sign_of_real().unwrap(), 0);
        assert!(matches!(CycloElem::zeta_pow(&c5, 1).sign_of_real(), Err(Error::NotReal)));
        // forced through the fixed-point path
        assert_eq!(y.sign_fixed(64), Some(1));
        let c7 = CycloContext::get(7);
        let w = &CycloElem::zeta_pow(&c7, 3) + &CycloElem::zeta_pow(&c7, -3);
        assert_eq!(w.sign_fixed(80), Some(-1));
    }

    #[test]
    fn galois_examples() {
        let c5 = CycloContext::get(5);
        let z = CycloElem::zeta_pow(&c5, 1);
        assert_eq!(z.galois(2).unwrap(), CycloElem::zeta_pow(&c5, 2));
        let r = CycloElem::from_rational(&c5, q(3, 7));
        assert_eq!(r.galois(3).unwrap(), r);
        let c8 = CycloContext::get(8);
        let s = &CycloElem::zeta_pow(&c8, 1) + &CycloElem::zeta_pow(&c8, -1);
        assert_eq!(s.galois(3).unwrap(), -&s);
        assert!(matches!(z.galois(5), Err(Error::NotCoprime(5, 5))));
    }

    #[test]
    fn kernel_examples() {
        let c1 = CycloContext::get(1);
        let one = CycloElem::one(&c1);
        let zero = CycloElem::zero(&c1);
        let id = vec![vec![one.clone(), zero.clone()], vec![zero.clone(), one.clone()]];
        assert!(kernel(&c1, &id, 2).is_empty());
        let z = vec![vec![zero.clone(), zero.clone()], vec![zero.clone(), zero.clone()]];
        assert_eq!(kernel(&c1, &z, 2).len(), 2);
    }

    #[test]
    fn parse_and_print() {
        let c6 = CycloContext::get(6);
        let e = parse_elem(&c6, "1/2*z^2 - z + 3").unwrap();
        let z = CycloElem::zeta_pow(&c6, 1);
        let expect = &(&(&z * &z).scale(&q(1, 2)) - &z) + &CycloElem::from_int(&c6, 3);
        assert_eq!(e, expect);
        assert_eq!(parse_elem(&c6, &e.to_string()).unwrap(), e);
        assert!(parse_elem(&c6, "2*w").is_err());
    }
}
