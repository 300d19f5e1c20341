//! Root systems and (twisted) finite Weyl groups.
//!
//! A datum is built from an integer Gram matrix of simple roots; the Cartan
//! matrix, positive roots and simple reflections are derived from it. Group
//! elements are integer matrices acting on the simple-root basis of `V`
//! (column `j` is the image of `α_j`), carried together with their inverse.
//! A twisted element `wδ^k` is the pair `(w, k)`.
//!
//! Classical types use the labelling
//! `B_n: α₁ = e₁`, `C_n: α₁ = 2e₁`, `D_n: α₁ = e₁ + e₂`, `α_i = e_i − e_{i−1}` (i ≥ 2),
//! and `A_n: α_i = e_i − e_{i+1}`, so signed permutations of the `e_i` can be
//! turned into root-lattice matrices.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{bipartitions, Partition};

/// Square integer matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Mat {
    n: usize,
    a: Vec<i64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut a = vec![0; n * n];
        for i in 0..n {
            a[i * n + i] = 1;
        }
        Mat { n, a }
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Mat {
        let n = rows.len();
        let a = rows.iter().flat_map(|r| r.iter().copied()).collect::<Vec<_>>();
        assert_eq!(a.len(), n * n);
        Mat { n, a }
    }

    pub fn from_cols(cols: &[Vec<i64>]) -> Mat {
        let n = cols.len();
        let mut a = vec![0; n * n];
        for (j, c) in cols.iter().enumerate() {
            for (i, &x) in c.iter().enumerate() {
                a[i * n + j] = x;
            }
        }
        Mat { n, a }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.a[i * self.n + j]
    }

    pub fn col(&self, j: usize) -> Vec<i64> {
        (0..self.n).map(|i| self.get(i, j)).collect()
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.a.chunks(self.n.max(1)).map(|r| r.to_vec()).collect()
    }

    pub fn mul(&self, o: &Mat) -> Mat {
        let n = self.n;
        let mut a = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let x = self.a[i * n + k];
                if x == 0 {
                    continue;
                }
                for j in 0..n {
                    a[i * n + j] += x * o.a[k * n + j];
                }
            }
        }
        Mat { n, a }
    }

    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        let n = self.n;
        (0..n).map(|i| (0..n).map(|j| self.a[i * n + j] * v[j]).sum()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat::identity(self.n)
    }

    /// Exact inverse of a unimodular matrix.
    pub fn inverse(&self) -> Option<Mat> {
        let n = self.n;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> =
                    (0..n).map(|j| Rational64::from_integer(self.get(i, j))).collect();
                row.extend((0..n).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| !m[r][c].is_zero())?;
            m.swap(c, p);
            let inv = m[c][c].recip();
            for x in m[c].iter_mut() {
                *x *= inv;
            }
            for r in 0..n {
                if r != c && !m[r][c].is_zero() {
                    let f = m[r][c];
                    let pr = m[c].clone();
                    for (x, y) in m[r].iter_mut().zip(pr) {
                        *x -= f * y;
                    }
                }
            }
        }
        let mut a = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let v = m[i][n + j];
                if !v.is_integer() {
                    return None;
                }
                a[i * n + j] = v.to_integer();
            }
        }
        Some(Mat { n, a })
    }
}

/// An element of `W` with its inverse.
#[derive(Clone, Debug)]
pub struct WeylElement {
    m: Mat,
    inv: Mat,
}

impl PartialEq for WeylElement {
    fn eq(&self, o: &Self) -> bool {
        self.m == o.m
    }
}
impl Eq for WeylElement {}
impl std::hash::Hash for WeylElement {
    fn hash<H: std::hash::Hasher>(&self, h: &mut H) {
        self.m.hash(h)
    }
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement { m: Mat::identity(n), inv: Mat::identity(n) }
    }

    pub fn from_matrix(m: Mat) -> Option<Self> {
        let inv = m.inverse()?;
        Some(WeylElement { m, inv })
    }

    pub fn matrix(&self) -> &Mat {
        &self.m
    }

    pub fn inverse_matrix(&self) -> &Mat {
        &self.inv
    }

    pub fn mul(&self, o: &Self) -> Self {
        WeylElement { m: self.m.mul(&o.m), inv: o.inv.mul(&self.inv) }
    }

    pub fn inverse(&self) -> Self {
        WeylElement { m: self.inv.clone(), inv: self.m.clone() }
    }

    pub fn is_identity(&self) -> bool {
        self.m.is_identity()
    }
}

/// `wδ^k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwistedWeylElement {
    pub w: WeylElement,
    pub k: u32,
}

/// Sign of a root vector (all coordinates share a sign).
pub fn root_sign(v: &[i64]) -> i8 {
    match v.iter().find(|&&x| x != 0) {
        Some(&x) if x > 0 => 1,
        Some(_) => -1,
        None => 0,
    }
}

/// Subsets of generators as bitmasks.
pub type GenSet = u64;

pub fn mask_of(idx: &[usize]) -> GenSet {
    idx.iter().fold(0, |m, &i| m | (1u64 << i))
}

pub fn members(mask: GenSet, rank: usize) -> Vec<usize> {
    (0..rank).filter(|&i| mask >> i & 1 == 1).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G,
    F,
    E,
}

impl Family {
    pub fn parse(c: char) -> Option<Family> {
        Some(match c.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'G' => Family::G,
            'F' => Family::F,
            'E' => Family::E,
            _ => return None,
        })
    }

    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::G => 'G',
            Family::F => 'F',
            Family::E => 'E',
        }
    }

    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

/// Which irreducible type a datum came from (absent for parabolic sub-data).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CartanType {
    pub family: Family,
    pub rank: usize,
    pub twisted: bool,
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.twisted {
            write!(f, "2")?;
        }
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl CartanType {
    /// Parse `"C3"`, `"2A4"`, `"2D5"`, `"2E6"`.
    pub fn parse(s: &str) -> Result<CartanType> {
        let s = s.trim();
        let bad = || Error::UnknownType(s.to_string());
        let (twisted, rest) = match s.strip_prefix('2') {
            Some(r) if r.chars().next().map_or(false, |c| c.is_ascii_alphabetic()) => (true, r),
            _ => (false, s),
        };
        let mut ch = rest.chars();
        let family = ch.next().and_then(Family::parse).ok_or_else(bad)?;
        let rank: usize = ch.as_str().parse().map_err(|_| bad())?;
        Ok(CartanType { family, rank, twisted })
    }
}

/// Immutable root datum plus twist.
pub struct CoxeterDatum {
    label: String,
    ctype: Option<CartanType>,
    rank: usize,
    form: Vec<Vec<i64>>,
    cartan: Vec<Vec<i64>>,
    twist: Vec<usize>,
    twist_order: u32,
    pos: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    gens: Vec<WeylElement>,
    /// Simple roots in ambient `e`-coordinates (classical types only).
    ambient: Option<Vec<Vec<i64>>>,
    /// Left inverse of the ambient simple-root matrix.
    ambient_solve: Option<Vec<Vec<Rational64>>>,
}

impl fmt::Debug for CoxeterDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoxeterDatum({})", self.label)
    }
}

impl PartialEq for CoxeterDatum {
    fn eq(&self, o: &Self) -> bool {
        self.form == o.form && self.twist == o.twist && self.twist_order == o.twist_order
    }
}

fn classical_ambient(family: Family, n: usize) -> Vec<Vec<i64>> {
    let dim = if family == Family::A { n + 1 } else { n };
    let e = |i: usize| -> Vec<i64> {
        let mut v = vec![0; dim];
        v[i] = 1;
        v
    };
    let sub = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x - y).collect::<Vec<_>>();
    let add = |a: Vec<i64>, b: Vec<i64>| a.iter().zip(&b).map(|(x, y)| x + y).collect::<Vec<_>>();
    match family {
        Family::A => (0..n).map(|i| sub(e(i), e(i + 1))).collect(),
        _ => (0..n)
            .map(|i| match (i, family) {
                (0, Family::B) => e(0),
                (0, Family::C) => e(0).iter().map(|x| 2 * x).collect(),
                (0, Family::D) => add(e(0), e(1)),
                _ => sub(e(i), e(i - 1)),
            })
            .collect(),
    }
}

fn gram(vs: &[Vec<i64>]) -> Vec<Vec<i64>> {
    vs.iter()
        .map(|a| vs.iter().map(|b| a.iter().zip(b).map(|(x, y)| x * y).sum()).collect())
        .collect()
}

fn exceptional_form(family: Family, rank: usize) -> Option<Vec<Vec<i64>>> {
    let mut f = vec![vec![0i64; rank]; rank];
    match (family, rank) {
        (Family::G, 2) => {
            f = vec![vec![2, -3], vec![-3, 6]];
        }
        (Family::F, 4) => {
            f = vec![
                vec![4, -2, 0, 0],
                vec![-2, 4, -2, 0],
                vec![0, -2, 2, -1],
                vec![0, 0, -1, 2],
            ];
        }
        (Family::E, 6) | (Family::E, 7) | (Family::E, 8) => {
            for i in 0..rank {
                f[i][i] = 2;
            }
            let mut edges = vec![(0, 2), (1, 3), (2, 3)];
            for i in 3..rank - 1 {
                edges.push((i, i + 1));
            }
            for (a, b) in edges {
                f[a][b] = -1;
                f[b][a] = -1;
            }
        }
        _ => return None,
    }
    Some(f)
}

fn perm_order(p: &[usize]) -> u32 {
    let mut k = 1u32;
    let mut cur: Vec<usize> = p.to_vec();
    while cur.iter().enumerate().any(|(i, &x)| i != x) {
        cur = cur.iter().map(|&x| p[x]).collect();
        k += 1;
    }
    k
}

impl CoxeterDatum {
    /// Build the datum of an irreducible type, optionally twisted.
    pub fn build(family: Family, rank: usize, twisted: bool) -> Result<Arc<CoxeterDatum>> {
        let ct = CartanType { family, rank, twisted };
        let name = ct.to_string();
        let min_rank = match family {
            Family::A | Family::B | Family::C => 1,
            Family::D => 2,
            Family::G => 2,
            Family::F => 4,
            Family::E => 6,
        };
        if rank < min_rank {
            return Err(Error::UnknownType(name));
        }
        let (form, ambient) = if family.is_classical() {
            let amb = classical_ambient(family, rank);
            (gram(&amb), Some(amb))
        } else {
            (exceptional_form(family, rank).ok_or_else(|| Error::UnknownType(name.clone()))?, None)
        };
        let (twist, order) = if !twisted {
            ((0..rank).collect::<Vec<_>>(), 1)
        } else {
            match family {
                Family::A => ((0..rank).rev().collect(), 2),
                Family::D if rank >= 3 => {
                    let mut p: Vec<usize> = (0..rank).collect();
                    p.swap(0, 1);
                    (p, 2)
                }
                Family::E if rank == 6 => (vec![5, 1, 4, 3, 2, 0], 2),
                _ => return Err(Error::NoTwist(name)),
            }
        };
        let mut d = CoxeterDatum::from_form(name, form, twist, order)?;
        d.ctype = Some(ct);
        if let Some(amb) = ambient {
            d.ambient_solve = Some(left_inverse(&amb));
            d.ambient = Some(amb);
        }
        Ok(Arc::new(d))
    }

    /// Build from a type label such as `"C3"` or `"2A4"`.
    pub fn from_label(label: &str) -> Result<Arc<CoxeterDatum>> {
        let ct = CartanType::parse(label)?;
        CoxeterDatum::build(ct.family, ct.rank, ct.twisted)
    }

    /// Datum from an integer Gram matrix and a diagram permutation.
    pub fn from_form(
        label: String,
        form: Vec<Vec<i64>>,
        twist: Vec<usize>,
        twist_order: u32,
    ) -> Result<CoxeterDatum> {
        let rank = form.len();
        let mut cartan = vec![vec![0i64; rank]; rank];
        for i in 0..rank {
            for j in 0..rank {
                let num = 2 * form[i][j];
                if form[i][i] <= 0 || num % form[i][i] != 0 {
                    return Err(Error::UnknownType(label));
                }
                cartan[i][j] = num / form[i][i];
                if i != j && cartan[i][j] > 0 {
                    return Err(Error::UnknownType(label));
                }
            }
        }
        for i in 0..rank {
            for j in 0..rank {
                if form[twist[i]][twist[j]] != form[i][j] {
                    return Err(Error::NoTwist(label));
                }
            }
        }
        let gens: Vec<WeylElement> = (0..rank)
            .map(|i| {
                let cols: Vec<Vec<i64>> = (0..rank)
                    .map(|j| {
                        let mut c = vec![0; rank];
                        c[j] = 1;
                        c[i] -= cartan[i][j];
                        c
                    })
                    .collect();
                let m = Mat::from_cols(&cols);
                WeylElement { inv: m.clone(), m }
            })
            .collect();
        // positive roots by closure under simple reflections
        let mut pos: Vec<Vec<i64>> = Vec::new();
        let mut index = HashMap::new();
        let mut queue = VecDeque::new();
        for i in 0..rank {
            let mut v = vec![0; rank];
            v[i] = 1;
            index.insert(v.clone(), pos.len());
            pos.push(v.clone());
            queue.push_back(v);
        }
        while let Some(r) = queue.pop_front() {
            for g in &gens {
                let s = g.m.apply(&r);
                if root_sign(&s) > 0 && !index.contains_key(&s) {
                    index.insert(s.clone(), pos.len());
                    pos.push(s.clone());
                    queue.push_back(s);
                }
            }
            if pos.len() > 10_000 {
                return Err(Error::UnknownType(label));
            }
        }
        // stable order: by height, then coefficients
        pos.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        let index = pos.iter().enumerate().map(|(i, r)| (r.clone(), i)).collect();
        Ok(CoxeterDatum {
            label,
            ctype: None,
            rank,
            form,
            cartan,
            twist,
            twist_order,
            pos,
            index,
            gens,
            ambient: None,
            ambient_solve: None,
        })
    }

    /// The standard parabolic `W_J` as a standalone datum, with twist `tau`
    /// given as a permutation of the positions in `j`.
    pub fn parabolic(&self, j: &[usize], tau: Vec<usize>) -> Result<Arc<CoxeterDatum>> {
        let form: Vec<Vec<i64>> =
            j.iter().map(|&a| j.iter().map(|&b| self.form[a][b]).collect()).collect();
        let order = if tau.is_empty() { 1 } else { perm_order(&tau) };
        let label = format!("{}[{}]", self.label, j.iter().map(|x| (x + 1).to_string()).collect::<Vec<_>>().join(","));
        Ok(Arc::new(CoxeterDatum::from_form(label, form, tau, order)?))
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn cartan_type(&self) -> Option<CartanType> {
        self.ctype
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn form(&self) -> &[Vec<i64>] {
        &self.form
    }

    pub fn twist_perm(&self) -> &[usize] {
        &self.twist
    }

    pub fn twist_order(&self) -> u32 {
        self.twist_order
    }

    pub fn is_twisted(&self) -> bool {
        self.twist_order > 1
    }

    pub fn positive_roots(&self) -> &[Vec<i64>] {
        &self.pos
    }

    pub fn num_pos(&self) -> usize {
        self.pos.len()
    }

    /// Index of a positive root, or `npos + i` for the negative of root `i`.
    pub fn root_id(&self, v: &[i64]) -> Option<usize> {
        if root_sign(v) > 0 {
            self.index.get(v).copied()
        } else {
            let neg: Vec<i64> = v.iter().map(|x| -x).collect();
            self.index.get(&neg).map(|i| i + self.pos.len())
        }
    }

    pub fn root_by_id(&self, id: usize) -> Vec<i64> {
        let n = self.pos.len();
        if id < n {
            self.pos[id].clone()
        } else {
            self.pos[id - n].iter().map(|x| -x).collect()
        }
    }

    /// `(u, v)` for integer vectors in the simple-root basis.
    pub fn inner(&self, u: &[i64], v: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if u[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                s += u[i] * self.form[i][j] * v[j];
            }
        }
        s
    }

    pub fn identity(&self) -> WeylElement {
        WeylElement::identity(self.rank)
    }

    pub fn twisted_identity(&self) -> TwistedWeylElement {
        TwistedWeylElement { w: self.identity(), k: 0 }
    }

    /// Simple reflection `s_i` (0-based).
    pub fn gen(&self, i: usize) -> &WeylElement {
        &self.gens[i]
    }

    /// Product of simple reflections (1-based word) times `δ^k`.
    pub fn element_from_word(&self, word: &[usize], k: i64) -> Result<TwistedWeylElement> {
        let mut w = self.identity();
        for &g in word {
            if g == 0 || g > self.rank {
                return Err(Error::IndexOutOfRange(g, self.rank));
            }
            w = w.mul(&self.gens[g - 1]);
        }
        Ok(TwistedWeylElement { w, k: self.reduce_twist(k) })
    }

    pub fn reduce_twist(&self, k: i64) -> u32 {
        k.rem_euclid(self.twist_order as i64) as u32
    }

    /// `δ^k` as a permutation of generators.
    pub fn twist_pow(&self, k: u32) -> Vec<usize> {
        let mut p: Vec<usize> = (0..self.rank).collect();
        for _ in 0..(k % self.twist_order) {
            p = p.iter().map(|&x| self.twist[x]).collect();
        }
        p
    }

    /// Matrix of `δ^k` on `V`.
    pub fn delta_matrix(&self, k: u32) -> Mat {
        let p = self.twist_pow(k);
        let cols: Vec<Vec<i64>> = (0..self.rank)
            .map(|i| {
                let mut c = vec![0; self.rank];
                c[p[i]] = 1;
                c
            })
            .collect();
        Mat::from_cols(&cols)
    }

    /// `δ^k x δ^{-k}`.
    pub fn twist_conj(&self, x: &WeylElement, k: u32) -> WeylElement {
        if k % self.twist_order == 0 || self.twist.iter().enumerate().all(|(i, &t)| i == t) {
            return x.clone();
        }
        let p = self.twist_pow(k);
        let n = self.rank;
        let permute = |m: &Mat| {
            let mut a = vec![0; n * n];
            for i in 0..n {
                for j in 0..n {
                    a[p[i] * n + p[j]] = m.get(i, j);
                }
            }
            Mat { n, a }
        };
        WeylElement { m: permute(&x.m), inv: permute(&x.inv) }
    }

    /// `(w₁,k₁)(w₂,k₂) = (w₁·δ^{k₁}(w₂), k₁+k₂)`.
    pub fn mul(&self, a: &TwistedWeylElement, b: &TwistedWeylElement) -> TwistedWeylElement {
        TwistedWeylElement {
            w: a.w.mul(&self.twist_conj(&b.w, a.k)),
            k: (a.k + b.k) % self.twist_order,
        }
    }

    pub fn inv(&self, a: &TwistedWeylElement) -> TwistedWeylElement {
        // (wδ^k)^{-1} = δ^{-k} w^{-1} = (δ^{-k} w^{-1} δ^{k}) δ^{-k}
        let k_inv = (self.twist_order - a.k % self.twist_order) % self.twist_order;
        TwistedWeylElement { w: self.twist_conj(&a.w.inverse(), k_inv), k: k_inv }
    }

    pub fn pow(&self, a: &TwistedWeylElement, e: u64) -> TwistedWeylElement {
        let mut out = self.twisted_identity();
        for _ in 0..e {
            out = self.mul(&out, a);
        }
        out
    }

    /// Order of `wδ^k` in `W ⋊ ⟨δ⟩`.
    pub fn order(&self, a: &TwistedWeylElement) -> u64 {
        let mut cur = a.clone();
        let mut d = 1;
        while !(cur.k == 0 && cur.w.is_identity()) {
            cur = self.mul(&cur, a);
            d += 1;
        }
        d
    }

    /// Matrix of `wδ^k` on `V`.
    pub fn full_action(&self, a: &TwistedWeylElement) -> Mat {
        if a.k == 0 {
            a.w.m.clone()
        } else {
            a.w.m.mul(&self.delta_matrix(a.k))
        }
    }

    /// `l(w)`: number of positive roots made negative.
    pub fn length(&self, w: &WeylElement) -> usize {
        self.pos.iter().filter(|r| root_sign(&w.m.apply(r)) < 0).count()
    }

    /// Bitmask of `s` with `l(ws) < l(w)`.
    pub fn right_descents(&self, w: &WeylElement) -> GenSet {
        (0..self.rank).filter(|&i| root_sign(&w.m.col(i)) < 0).fold(0, |m, i| m | 1 << i)
    }

    /// Bitmask of `s` with `l(sw) < l(w)`.
    pub fn left_descents(&self, w: &WeylElement) -> GenSet {
        (0..self.rank).filter(|&i| root_sign(&w.inv.col(i)) < 0).fold(0, |m, i| m | 1 << i)
    }

    /// Lexicographically smallest reduced word (0-based), by stripping the
    /// smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        let mut word = Vec::new();
        let mut cur = w.clone();
        loop {
            let d = self.left_descents(&cur);
            if d == 0 {
                return word;
            }
            let i = d.trailing_zeros() as usize;
            word.push(i);
            cur = self.gens[i].mul(&cur);
        }
    }

    /// Positive roots `α` with `w(α) < 0`, as ids.
    pub fn inversion_set(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.pos.len()).filter(|&i| root_sign(&w.m.apply(&self.pos[i])) < 0).collect()
    }

    /// Positive roots supported on `J`.
    pub fn parabolic_roots(&self, j: GenSet) -> Vec<usize> {
        (0..self.pos.len())
            .filter(|&i| self.pos[i].iter().enumerate().all(|(k, &c)| c == 0 || j >> k & 1 == 1))
            .collect()
    }

    /// Longest element of `W_J`.
    pub fn longest(&self, j: GenSet) -> WeylElement {
        let mut w = self.identity();
        loop {
            let free = j & !self.right_descents(&w);
            if free == 0 {
                return w;
            }
            w = w.mul(&self.gens[free.trailing_zeros() as usize]);
        }
    }

    pub fn full_set(&self) -> GenSet {
        if self.rank == 64 {
            u64::MAX
        } else {
            (1u64 << self.rank) - 1
        }
    }

    /// Minimal-length element of `W_J·w̃`, `w̃·W_J` or `W_J·w̃·W_J`.
    pub fn coset_minimum(&self, j: GenSet, a: &TwistedWeylElement, side: Side) -> TwistedWeylElement {
        let mut w = a.w.clone();
        let tp = self.twist_pow(a.k);
        loop {
            let mut changed = false;
            if matches!(side, Side::Left | Side::Double) {
                let d = self.left_descents(&w) & j;
                if d != 0 {
                    w = self.gens[d.trailing_zeros() as usize].mul(&w);
                    changed = true;
                }
            }
            if matches!(side, Side::Right | Side::Double) {
                // w δ^k s_j = w s_{δ^k(j)} δ^k
                let dj: GenSet = members(j, self.rank).iter().fold(0, |m, &x| m | 1 << tp[x]);
                let d = self.right_descents(&w) & dj;
                if d != 0 {
                    w = w.mul(&self.gens[d.trailing_zeros() as usize]);
                    changed = true;
                }
            }
            if !changed {
                return TwistedWeylElement { w, k: a.k };
            }
        }
    }

    /// `s_i · w̃ · s_i` in `W ⋊ ⟨δ⟩`.
    pub fn conj_by_gen(&self, a: &TwistedWeylElement, i: usize) -> TwistedWeylElement {
        let tp = self.twist_pow(a.k);
        TwistedWeylElement { w: self.gens[i].mul(&a.w).mul(&self.gens[tp[i]]), k: a.k }
    }

    /// `x · w̃ · x^{-1}`.
    pub fn conjugate(&self, x: &WeylElement, a: &TwistedWeylElement) -> TwistedWeylElement {
        let xt = TwistedWeylElement { w: x.clone(), k: 0 };
        let xi = TwistedWeylElement { w: x.inverse(), k: 0 };
        self.mul(&self.mul(&xt, a), &xi)
    }

    /// Checks that `m` maps roots to roots and preserves the form.
    pub fn is_weyl_matrix(&self, m: &Mat) -> bool {
        self.pos.iter().all(|r| self.root_id(&m.apply(r)).is_some())
            && (0..self.rank).all(|i| {
                (0..self.rank).all(|j| {
                    let (a, b) = (m.col(i), m.col(j));
                    self.inner(&a, &b) == self.form[i][j]
                })
            })
    }

    /// All elements of `W` (breadth-first from the identity).
    pub fn elements(&self) -> Result<Vec<WeylElement>> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity());
        let mut head = 0;
        while head < out.len() {
            let w = out[head].clone();
            head += 1;
            for g in &self.gens {
                let x = w.mul(g);
                if seen.insert(x.clone()) {
                    out.push(x);
                    if out.len() > 2_000_000 {
                        return Err(Error::TooLarge(self.label.clone()));
                    }
                }
            }
        }
        Ok(out)
    }

    /// The δ-conjugacy orbit of `a` (all elements `x w̃ x⁻¹`).
    pub fn conjugacy_orbit(&self, a: &TwistedWeylElement) -> Vec<TwistedWeylElement> {
        let mut seen: HashSet<TwistedWeylElement> = HashSet::new();
        let mut out = vec![a.clone()];
        seen.insert(a.clone());
        let mut head = 0;
        while head < out.len() {
            let cur = out[head].clone();
            head += 1;
            for i in 0..self.rank {
                let c = self.conj_by_gen(&cur, i);
                if seen.insert(c.clone()) {
                    out.push(c);
                }
            }
        }
        out
    }

    /// Partition `W·δ^k` into δ-conjugacy classes; each class as a list of
    /// element indices into `elems`.
    pub fn class_partition(&self, elems: &[WeylElement], k: u32) -> Vec<Vec<usize>> {
        let index: HashMap<&WeylElement, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mut class_of = vec![usize::MAX; elems.len()];
        let mut classes = Vec::new();
        let tp = self.twist_pow(k);
        for start in 0..elems.len() {
            if class_of[start] != usize::MAX {
                continue;
            }
            let cid = classes.len();
            let mut members = vec![start];
            class_of[start] = cid;
            let mut head = 0;
            while head < members.len() {
                let w = &elems[members[head]];
                head += 1;
                for i in 0..self.rank {
                    let c = self.gens[i].mul(w).mul(&self.gens[tp[i]]);
                    let ci = index[&c];
                    if class_of[ci] == usize::MAX {
                        class_of[ci] = cid;
                        members.push(ci);
                    }
                }
            }
            classes.push(members);
        }
        classes
    }

    fn ambient_to_simple(&self, v: &[i64]) -> Option<Vec<i64>> {
        let l = self.ambient_solve.as_ref()?;
        let amb = self.ambient.as_ref()?;
        let c: Vec<Rational64> = l
            .iter()
            .map(|row| row.iter().zip(v).map(|(a, &b)| *a * Rational64::from_integer(b)).sum())
            .collect();
        let out: Vec<i64> = c.iter().map(|x| if x.is_integer() { x.to_integer() } else { i64::MIN }).collect();
        if out.contains(&i64::MIN) {
            return None;
        }
        // verify exact reconstruction
        let dim = v.len();
        for k in 0..dim {
            let s: i64 = (0..self.rank).map(|j| out[j] * amb[j][k]).sum();
            if s != v[k] {
                return None;
            }
        }
        Some(out)
    }

    /// Matrix on `V` of the signed permutation `e_i ↦ sign_i·e_{p_i}`.
    pub fn signed_perm_matrix(&self, perm: &[(usize, i64)]) -> Result<Mat> {
        let amb = self.ambient.as_ref().ok_or_else(|| Error::Unsupported("signed permutations need a classical datum".into()))?;
        let cols: Option<Vec<Vec<i64>>> = amb
            .iter()
            .map(|alpha| {
                let mut img = vec![0; alpha.len()];
                for (i, &c) in alpha.iter().enumerate() {
                    let (p, s) = perm[i];
                    img[p] += s * c;
                }
                self.ambient_to_simple(&img)
            })
            .collect();
        cols.map(|c| Mat::from_cols(&c))
            .ok_or_else(|| Error::InvalidClass("signed permutation does not preserve the root lattice".into()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
    Double,
}

fn left_inverse(amb: &[Vec<i64>]) -> Vec<Vec<Rational64>> {
    // L = (S^T S)^{-1} S^T with S = columns amb[j]
    let r = amb.len();
    let g = gram(amb);
    let mut m: Vec<Vec<Rational64>> = (0..r)
        .map(|i| {
            let mut row: Vec<Rational64> = g[i].iter().map(|&x| Rational64::from_integer(x)).collect();
            row.extend((0..r).map(|j| if i == j { Rational64::one() } else { Rational64::zero() }));
            row
        })
        .collect();
    for c in 0..r {
        let p = (c..r).find(|&x| !m[x][c].is_zero()).expect("simple roots independent");
        m.swap(c, p);
        let inv = m[c][c].recip();
        for x in m[c].iter_mut() {
            *x *= inv;
        }
        for x in 0..r {
            if x != c && !m[x][c].is_zero() {
                let f = m[x][c];
                let pr = m[c].clone();
                for (a, b) in m[x].iter_mut().zip(pr) {
                    *a -= f * b;
                }
            }
        }
    }
    let ginv: Vec<Vec<Rational64>> = m.iter().map(|row| row[r..].to_vec()).collect();
    let dim = amb[0].len();
    (0..r)
        .map(|i| {
            (0..dim)
                .map(|k| (0..r).map(|j| ginv[i][j] * Rational64::from_integer(amb[j][k])).sum())
                .collect()
        })
        .collect()
}

/// D-type split-class marker.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Marker {
    I,
    II,
}

/// Conjugacy-class parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "type")]
pub enum ClassParam {
    /// Cycle type in `S_{n+1}`.
    #[serde(rename = "A")]
    TypeA { lambda: Partition },
    /// Cycle type of `ww₀` for `wδ` in type `²A_n`.
    #[serde(rename = "2A")]
    TwistedA { lambda: Partition },
    /// Negative cycles `λ`, positive cycles `μ`.
    #[serde(rename = "BCD")]
    Bcd { lambda: Partition, mu: Partition, marker: Option<Marker> },
    /// Lexicographically least reduced word (1-based) among minimal-length members.
    #[serde(rename = "E")]
    Exceptional { word: Vec<usize> },
}

impl fmt::Display for ClassParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ClassParam::TypeA { lambda } | ClassParam::TwistedA { lambda } => write!(f, "{}", lambda),
            ClassParam::Bcd { lambda, mu, marker } => {
                write!(f, "{}|{}", lambda, mu)?;
                if let Some(m) = marker {
                    write!(f, ":{:?}", m)?;
                }
                Ok(())
            }
            ClassParam::Exceptional { word } => {
                let w: Vec<String> = word.iter().map(|x| x.to_string()).collect();
                write!(f, "w:{}", w.join(","))
            }
        }
    }
}

/// Whether a D-type bipartition is one of the split classes.
pub fn is_split_d(lambda: &Partition, mu: &Partition) -> bool {
    lambda.is_empty() && mu.parts().iter().all(|p| p % 2 == 0)
}

fn cycle_perm(cycles: &[(usize, i64)], n: usize) -> Vec<(usize, i64)> {
    // cycles: (length, sign of the cycle), laid out on consecutive letters
    let mut perm = vec![(0usize, 1i64); n];
    let mut start = 0;
    for &(len, sign) in cycles {
        for i in 0..len {
            let next = if i + 1 == len { start } else { start + i + 1 };
            let s = if i + 1 == len { sign } else { 1 };
            perm[start + i] = (next, s);
        }
        start += len;
    }
    perm
}

impl CoxeterDatum {
    fn require_type(&self) -> Result<CartanType> {
        self.ctype.ok_or_else(|| Error::Unsupported(format!("{} has no class model", self.label)))
    }

    /// Check that `cp` parametrizes a class of this datum.
    pub fn validate_class(&self, cp: &ClassParam) -> Result<()> {
        let ct = self.require_type()?;
        let bad = |m: &str| Err(Error::InvalidClass(format!("{} for {}: {}", cp, ct, m)));
        match (cp, ct.family) {
            (ClassParam::TypeA { lambda }, Family::A) if !ct.twisted => {
                if lambda.size() != ct.rank + 1 {
                    return bad("size must be rank+1");
                }
            }
            (ClassParam::TwistedA { lambda }, Family::A) if ct.twisted => {
                if lambda.size() != ct.rank + 1 {
                    return bad("size must be rank+1");
                }
            }
            (ClassParam::Bcd { lambda, mu, marker }, Family::B | Family::C | Family::D) => {
                if lambda.size() + mu.size() != ct.rank {
                    return bad("sizes must add to the rank");
                }
                if ct.family == Family::D {
                    let want_odd = ct.twisted;
                    if (lambda.len() % 2 == 1) != want_odd {
                        return bad("wrong parity of the number of negative cycles");
                    }
                    let split = !ct.twisted && is_split_d(lambda, mu);
                    if split != marker.is_some() {
                        return bad("split marker mismatch");
                    }
                } else if marker.is_some() {
                    return bad("marker only for type D");
                }
            }
            (ClassParam::Exceptional { word }, _) if !ct.family.is_classical() => {
                if word.iter().any(|&g| g == 0 || g > ct.rank) {
                    return bad("generator out of range");
                }
            }
            _ => return bad("parameter kind does not match the type"),
        }
        Ok(())
    }

    /// A representative element of the class `cp` (in `Wδ` for twisted data).
    pub fn class_representative(&self, cp: &ClassParam) -> Result<TwistedWeylElement> {
        self.validate_class(cp)?;
        let ct = self.require_type()?;
        let n_amb = if ct.family == Family::A { ct.rank + 1 } else { ct.rank };
        let elem = |m: Mat, k: u32| -> Result<TwistedWeylElement> {
            let w = WeylElement::from_matrix(m).ok_or_else(|| Error::Internal("non-invertible class matrix".into()))?;
            Ok(TwistedWeylElement { w, k })
        };
        match cp {
            ClassParam::TypeA { lambda } => {
                let cyc: Vec<(usize, i64)> = lambda.parts().iter().map(|&p| (p, 1)).collect();
                elem(self.signed_perm_matrix(&cycle_perm(&cyc, n_amb))?, 0)
            }
            ClassParam::TwistedA { lambda } => {
                // wδ = −σ with σ of cycle type λ
                let cyc: Vec<(usize, i64)> = lambda.parts().iter().map(|&p| (p, 1)).collect();
                let neg: Vec<(usize, i64)> = cycle_perm(&cyc, n_amb).into_iter().map(|(p, s)| (p, -s)).collect();
                let full = self.signed_perm_matrix(&neg)?;
                let dinv = self.delta_matrix(1).inverse().expect("permutation matrix");
                elem(full.mul(&dinv), 1)
            }
            ClassParam::Bcd { lambda, mu, marker } => {
                let mut cyc: Vec<(usize, i64)> = lambda.parts().iter().map(|&p| (p, -1)).collect();
                cyc.extend(mu.parts().iter().map(|&p| (p, 1)));
                let full = self.signed_perm_matrix(&cycle_perm(&cyc, n_amb))?;
                if ct.twisted {
                    let dinv = self.delta_matrix(1).inverse().expect("permutation matrix");
                    elem(full.mul(&dinv), 1)
                } else if ct.family == Family::D && *marker == Some(Marker::II) {
                    // conjugate by the sign change of e₁ (the diagram swap)
                    let p = self.delta_matrix_d_swap();
                    elem(p.mul(&full).mul(&p), 0)
                } else {
                    elem(full, 0)
                }
            }
            ClassParam::Exceptional { word } => {
                self.element_from_word(word, if ct.twisted { 1 } else { 0 })
            }
        }
    }

    fn delta_matrix_d_swap(&self) -> Mat {
        let mut cols: Vec<Vec<i64>> = (0..self.rank)
            .map(|i| {
                let mut c = vec![0; self.rank];
                c[i] = 1;
                c
            })
            .collect();
        cols.swap(0, 1);
        Mat::from_cols(&cols)
    }

    /// All class parameters, in a fixed order.
    pub fn enumerate_classes(&self) -> Result<Vec<ClassParam>> {
        let ct = self.require_type()?;
        let n = ct.rank;
        Ok(match ct.family {
            Family::A if !ct.twisted => {
                Partition::all(n + 1).into_iter().map(|lambda| ClassParam::TypeA { lambda }).collect()
            }
            Family::A => Partition::all(n + 1).into_iter().map(|lambda| ClassParam::TwistedA { lambda }).collect(),
            Family::B | Family::C => bipartitions(n)
                .into_iter()
                .map(|(lambda, mu)| ClassParam::Bcd { lambda, mu, marker: None })
                .collect(),
            Family::D => {
                let mut out = Vec::new();
                for (lambda, mu) in bipartitions(n) {
                    if (lambda.len() % 2 == 1) != ct.twisted {
                        continue;
                    }
                    if !ct.twisted && is_split_d(&lambda, &mu) {
                        for m in [Marker::I, Marker::II] {
                            out.push(ClassParam::Bcd { lambda: lambda.clone(), mu: mu.clone(), marker: Some(m) });
                        }
                    } else {
                        out.push(ClassParam::Bcd { lambda, mu, marker: None });
                    }
                }
                out
            }
            _ => self.exceptional_classes()?,
        })
    }

    fn exceptional_classes(&self) -> Result<Vec<ClassParam>> {
        if self.rank > 6 {
            return Err(Error::TooLarge(format!("{}: class enumeration is limited to |W| <= 10^6", self.label)));
        }
        static CACHE: OnceLock<Mutex<HashMap<String, Vec<ClassParam>>>> = OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        if let Some(v) = cache.lock().unwrap().get(&self.label) {
            return Ok(v.clone());
        }
        let elems = self.elements()?;
        let k = if self.is_twisted() { 1 } else { 0 };
        let lengths: Vec<usize> = elems.iter().map(|e| self.length(e)).collect();
        let mut out: Vec<(usize, Vec<usize>)> = self
            .class_partition(&elems, k)
            .into_iter()
            .map(|cls| {
                let lmin = cls.iter().map(|&i| lengths[i]).min().unwrap();
                let word = cls
                    .iter()
                    .filter(|&&i| lengths[i] == lmin)
                    .map(|&i| self.reduced_word(&elems[i]).into_iter().map(|g| g + 1).collect::<Vec<_>>())
                    .min()
                    .unwrap();
                (lmin, word)
            })
            .collect();
        out.sort();
        let v: Vec<ClassParam> = out.into_iter().map(|(_, word)| ClassParam::Exceptional { word }).collect();
        cache.lock().unwrap().insert(self.label.clone(), v.clone());
        Ok(v)
    }

    /// Number of δ-conjugacy classes in `Wδ^k` by brute force.
    pub fn brute_force_class_count(&self) -> Result<usize> {
        let elems = self.elements()?;
        Ok(self.class_partition(&elems, if self.is_twisted() { 1 } else { 0 }).len())
    }

    /// The class parameter of the class containing `w`.
    pub fn class_of(&self, w: &TwistedWeylElement) -> Result<ClassParam> {
        let orbit: HashSet<TwistedWeylElement> = self.conjugacy_orbit(w).into_iter().collect();
        for cp in self.enumerate_classes()? {
            if orbit.contains(&self.class_representative(&cp)?) {
                return Ok(cp);
            }
        }
        Err(Error::Internal("element lies in no enumerated class".into()))
    }

    /// Parse a class spec: `"3,1"`, `"2,1|1"`, `"-|2,2:II"`, `"#k"` (0-based
    /// index into [`enumerate_classes`](Self::enumerate_classes)),
    /// `"w:1,2,1"` (class of a word), `coxeter`, `identity`, `pos2`.
    pub fn parse_class(&self, spec: &str) -> Result<ClassParam> {
        let spec = spec.trim();
        let bad = || Error::Parse(format!("class spec {:?}", spec));
        let k = if self.is_twisted() { 1 } else { 0 };
        let by_word = |word: &[usize]| -> Result<ClassParam> { self.class_of(&self.element_from_word(word, k)?) };
        let ct = self.require_type()?;
        let cp = match spec {
            "coxeter" => by_word(&(1..=self.rank).collect::<Vec<_>>())?,
            "identity" => by_word(&[])?,
            "pos2" => match ct.family {
                Family::A => by_word(&[1])?,
                Family::B | Family::C | Family::D if !ct.twisted && self.rank >= 2 => ClassParam::Bcd {
                    lambda: Partition::empty(),
                    mu: Partition::new([vec![2], vec![1; self.rank - 2]].concat()),
                    marker: None,
                },
                _ => return Err(bad()),
            },
            _ => {
                if let Some(i) = spec.strip_prefix('#') {
                    let i: usize = i.parse().map_err(|_| bad())?;
                    return self.enumerate_classes()?.get(i).cloned().ok_or_else(bad);
                }
                if let Some(w) = spec.strip_prefix("w:") {
                    let word: Option<Vec<usize>> =
                        w.split(',').filter(|x| !x.trim().is_empty()).map(|x| x.trim().parse().ok()).collect();
                    return by_word(&word.ok_or_else(bad)?);
                }
                let (body, marker) = match spec.rsplit_once(':') {
                    Some((b, "I")) => (b, Some(Marker::I)),
                    Some((b, "II")) => (b, Some(Marker::II)),
                    Some(_) => return Err(bad()),
                    None => (spec, None),
                };
                if let Some((l, m)) = body.split_once('|') {
                    let lambda = Partition::parse(l).ok_or_else(bad)?;
                    let mu = Partition::parse(m).ok_or_else(bad)?;
                    ClassParam::Bcd { lambda, mu, marker }
                } else {
                    let lambda = Partition::parse(body).ok_or_else(bad)?;
                    if ct.twisted {
                        ClassParam::TwistedA { lambda }
                    } else {
                        ClassParam::TypeA { lambda }
                    }
                }
            }
        };
        self.validate_class(&cp)?;
        Ok(cp)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(s: &str) -> Arc<CoxeterDatum> {
        CoxeterDatum::from_label(s).unwrap()
    }

    #[test]
    fn class_specs() {
        let c2 = d("C2");
        let pos2 = c2.parse_class("pos2").unwrap();
        assert_eq!(pos2.to_string(), "-|2");
        assert_eq!(c2.parse_class("w:1,2,1").unwrap(), pos2);
        assert_eq!(c2.parse_class("coxeter").unwrap().to_string(), "2|-");
        let a2 = d("A2");
        assert_eq!(a2.parse_class("#0").unwrap().to_string(), "3");
        assert_eq!(a2.parse_class("identity").unwrap().to_string(), "1,1,1");
        let d4 = d("D4");
        assert_eq!(d4.parse_class("-|2,2:II").unwrap().to_string(), "-|2,2:II");
        assert!(d4.parse_class("-|2,2").is_err());
        assert!(a2.parse_class("2|1").is_err());
        let g2 = d("G2");
        assert!(matches!(g2.parse_class("coxeter").unwrap(), ClassParam::Exceptional { .. }));
    }

    #[test]
    fn build_examples() {
        let a2 = d("A2");
        assert_eq!(a2.num_pos(), 3);
        assert_eq!(a2.elements().unwrap().len(), 6);
        let c2 = d("C2");
        assert_eq!(c2.num_pos(), 4);
        assert_eq!(c2.elements().unwrap().len(), 8);
        let a3t = d("2A3");
        assert_eq!(a3t.twist_order(), 2);
        assert_eq!(a3t.twist_perm(), &[2, 1, 0]);
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(a3t.cartan()[2 - i][2 - j], a3t.cartan()[i][j]);
            }
        }
        assert!(matches!(CoxeterDatum::from_label("2B3"), Err(Error::NoTwist(_))));
        assert!(matches!(CoxeterDatum::from_label("X3"), Err(Error::UnknownType(_))));
        let sizes = [("G2", 12, 6), ("F4", 1152, 24), ("E6", 51840, 36), ("D4", 192, 12), ("B3", 48, 9)];
        for (l, w, r) in sizes {
            let x = d(l);
            assert_eq!(x.num_pos(), r, "{}", l);
            if w < 2000 {
                assert_eq!(x.elements().unwrap().len(), w, "{}", l);
            }
        }
    }

    #[test]
    fn words_and_lengths() {
        let a2 = d("A2");
        let w = a2.element_from_word(&[1, 2, 1], 0).unwrap();
        assert_eq!(a2.length(&w.w), 3);
        // reflection in α₁+α₂
        assert_eq!(w.w.matrix().apply(&[1, 1]), vec![-1, -1]);
        assert_eq!(a2.length(&a2.element_from_word(&[], 0).unwrap().w), 0);
        assert!(a2.element_from_word(&[1, 1], 0).unwrap().w.is_identity());
        assert!(matches!(a2.element_from_word(&[3], 0), Err(Error::IndexOutOfRange(3, 2))));
    }

    #[test]
    fn reduced_words_match_length() {
        for l in ["A3", "B3", "G2"] {
            let x = d(l);
            for e in x.elements().unwrap() {
                let rw = x.reduced_word(&e);
                assert_eq!(rw.len(), x.length(&e));
                let back = x.element_from_word(&rw.iter().map(|g| g + 1).collect::<Vec<_>>(), 0).unwrap();
                assert_eq!(back.w, e);
            }
        }
    }

    #[test]
    fn coset_and_longest() {
        let a2 = d("A2");
        let w = a2.element_from_word(&[1, 2], 0).unwrap();
        assert_eq!(a2.coset_minimum(0, &w, Side::Left), w);
        let m = a2.coset_minimum(mask_of(&[0]), &w, Side::Left);
        assert_eq!(m, a2.element_from_word(&[2], 0).unwrap());
        assert!(a2.coset_minimum(a2.full_set(), &w, Side::Double).w.is_identity());
        assert_eq!(a2.length(&a2.longest(a2.full_set())), 3);
        assert!(a2.longest(0).is_identity());
        let c2 = d("C2");
        let w0 = c2.longest(c2.full_set());
        assert_eq!(c2.length(&w0), 4);
        assert_eq!(w0.matrix(), &Mat::from_rows(&[vec![-1, 0], vec![0, -1]]));
    }

    #[test]
    fn class_reps() {
        let a2 = d("A2");
        let r = a2.class_representative(&ClassParam::TypeA { lambda: Partition::new(vec![2, 1]) }).unwrap();
        assert_eq!(a2.length(&r.w), 1);
        let c2 = d("C2");
        let pos2 = ClassParam::Bcd { lambda: Partition::empty(), mu: Partition::new(vec![2]), marker: None };
        let r = c2.class_representative(&pos2).unwrap();
        let s121 = c2.element_from_word(&[1, 2, 1], 0).unwrap();
        assert!(c2.conjugacy_orbit(&r).contains(&s121));
        let neg = ClassParam::Bcd { lambda: Partition::new(vec![1, 1]), mu: Partition::empty(), marker: None };
        assert_eq!(c2.class_representative(&neg).unwrap().w, c2.longest(3));
    }

    #[test]
    fn class_counts_match_brute_force() {
        for l in ["A1", "A2", "A3", "A4", "B2", "C3", "B4", "D4", "D5", "2A2", "2A3", "2A4", "2D4", "2D5", "G2", "2A1"] {
            let x = d(l);
            let cls = x.enumerate_classes().unwrap();
            assert_eq!(cls.len(), x.brute_force_class_count().unwrap(), "{}", l);
            // representatives lie in distinct classes
            let elems = x.elements().unwrap();
            let k = if x.is_twisted() { 1 } else { 0 };
            let part = x.class_partition(&elems, k);
            let idx: HashMap<&WeylElement, usize> = elems.iter().enumerate().map(|(i, e)| (e, i)).collect();
            let mut which = vec![0; elems.len()];
            for (c, p) in part.iter().enumerate() {
                for &i in p {
                    which[i] = c;
                }
            }
            let mut hit = HashSet::new();
            for cp in &cls {
                let r = x.class_representative(cp).unwrap();
                assert_eq!(r.k, k);
                assert!(x.is_weyl_matrix(r.w.matrix()), "{} {}", l, cp);
                assert!(hit.insert(which[idx[&r.w]]), "{} duplicate class {}", l, cp);
            }
        }
        assert_eq!(d("G2").enumerate_classes().unwrap().len(), 6);
        assert_eq!(d("F4").enumerate_classes().unwrap().len(), 25);
    }

    #[test]
    fn delta_preserves_positivity() {
        for l in ["2A3", "2D4", "2E6"] {
            let x = d(l);
            let p = x.delta_matrix(1);
            for r in x.positive_roots() {
                assert_eq!(root_sign(&p.apply(r)), 1);
            }
        }
    }

    #[test]
    fn twisted_arith() {
        let x = d("2A2");
        let a = x.element_from_word(&[1], 1).unwrap();
        let ai = x.inv(&a);
        assert_eq!(x.mul(&a, &ai), x.twisted_identity());
        assert_eq!(x.order(&x.element_from_word(&[], 1).unwrap()), 2);
    }
}
