//! Unipotent orbits of classical groups: partition parametrizations in good
//! characteristic and in characteristic 2, Lusztig's map `Φ` from (twisted)
//! Weyl group classes, its most-elliptic section `Ψ`, and orbit codimension.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::eigen::dim_fixed_space;
use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rootsys::{CartanType, ClassParam, CoxeterDatum, Family, Marker};

/// Characteristic of the ground field, up to what matters here.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Characteristic {
    #[serde(rename = "not2")]
    NotTwo,
    #[serde(rename = "2")]
    Two,
}

/// Connected component of `G̃ = G ⊔ D` holding the orbits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Component {
    G,
    D,
}

/// `ε` decoration: part size ↦ 0/1.
pub type Eps = BTreeMap<usize, u8>;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecoratedPartition {
    pub nu: Partition,
    pub eps: Eps,
}

impl fmt::Display for DecoratedPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.nu)?;
        if !self.eps.is_empty() {
            let e: Vec<String> = self.eps.iter().rev().map(|(k, v)| format!("{}:{}", k, v)).collect();
            write!(f, " eps{{{}}}", e.join(","))?;
        }
        Ok(())
    }
}

/// Orbit parameter; which variant is used depends on the [`Setting`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum OrbitParam {
    /// Jordan type in `GL_{n+1}`, any characteristic.
    A { nu: Partition },
    /// `(ν, ε) ∈ P̃₁(n+1)`: orbits in the outer component of `²A_n`, char 2.
    TwistedA2 { orbit: DecoratedPartition },
    /// `(ν, ε) ∈ P̃₋₁(2n)` for `B_n`/`C_n`, char 2.
    BC2 { orbit: DecoratedPartition },
    /// `(ν, ε) ∈ P̃₋₁(2n)` for `D_n`/`²D_n`, char 2.
    D2 { orbit: DecoratedPartition, marker: Option<Marker> },
    /// Jordan type for `B`/`C`/`D` in good characteristic.
    BCD0 { nu: Partition, marker: Option<Marker> },
}

impl OrbitParam {
    pub fn nu(&self) -> &Partition {
        match self {
            OrbitParam::A { nu } | OrbitParam::BCD0 { nu, .. } => nu,
            OrbitParam::TwistedA2 { orbit } | OrbitParam::BC2 { orbit } | OrbitParam::D2 { orbit, .. } => &orbit.nu,
        }
    }

    pub fn eps(&self) -> Option<&Eps> {
        match self {
            OrbitParam::TwistedA2 { orbit } | OrbitParam::BC2 { orbit } | OrbitParam::D2 { orbit, .. } => {
                Some(&orbit.eps)
            }
            _ => None,
        }
    }

    pub fn marker(&self) -> Option<Marker> {
        match self {
            OrbitParam::D2 { marker, .. } | OrbitParam::BCD0 { marker, .. } => *marker,
            _ => None,
        }
    }
}

impl fmt::Display for OrbitParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrbitParam::A { nu } => write!(f, "{}", nu),
            OrbitParam::TwistedA2 { orbit } | OrbitParam::BC2 { orbit } => write!(f, "{}", orbit),
            OrbitParam::D2 { orbit, marker } => {
                write!(f, "{}", orbit)?;
                marker.map_or(Ok(()), |m| write!(f, ":{:?}", m))
            }
            OrbitParam::BCD0 { nu, marker } => {
                write!(f, "{}", nu)?;
                marker.map_or(Ok(()), |m| write!(f, ":{:?}", m))
            }
        }
    }
}

/// Type, characteristic and component under consideration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Setting {
    pub family: Family,
    pub rank: usize,
    pub twisted: bool,
    pub char: Characteristic,
    pub component: Component,
}

impl Setting {
    pub fn new(ct: CartanType, char: Characteristic, component: Component) -> Result<Setting> {
        let s = Setting { family: ct.family, rank: ct.rank, twisted: ct.twisted, char, component };
        let bad = |m: &str| Err(Error::Unsupported(format!("{} ({:?}, {:?}): {}", ct, char, component, m)));
        if !ct.family.is_classical() {
            return bad("no partition model for exceptional orbits");
        }
        if ct.twisted && !matches!(ct.family, Family::A | Family::D) {
            return bad("no twist");
        }
        if ct.family == Family::D && ct.rank < 2 {
            return bad("rank too small");
        }
        if component == Component::D {
            if !ct.twisted {
                return bad("the outer component needs a twisted type");
            }
            if char == Characteristic::NotTwo {
                return bad("no unipotent elements in the outer component outside char 2");
            }
        }
        Ok(s)
    }

    /// Convenience: `"2A3"`, char, component.
    pub fn parse(label: &str, char: Characteristic, component: Component) -> Result<Setting> {
        Setting::new(CartanType::parse(label)?, char, component)
    }

    /// The Weyl datum whose classes map to this setting's orbits (`Wδ` for the outer component).
    pub fn weyl_datum(&self) -> Result<Arc<CoxeterDatum>> {
        CoxeterDatum::build(self.family, self.rank, self.component == Component::D)
    }

    pub fn dim_group(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * n + 2 * n,
            Family::B | Family::C => 2 * n * n + n,
            _ => 2 * n * n - n,
        }
    }

    fn outer(&self) -> bool {
        self.component == Component::D
    }
}

fn from_mults(m: &BTreeMap<usize, usize>) -> Partition {
    Partition::new(m.iter().flat_map(|(&k, &c)| std::iter::repeat(k).take(c)).collect())
}

/// `P_ε(n)`: parts `k` with `(−1)^k = ε` have even multiplicity.
fn in_p(nu: &Partition, eps: i8) -> bool {
    nu.distinct().iter().all(|&k| {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        sign != eps || nu.mult(k) % 2 == 0
    })
}

/// All decorations of `ν` on parts of the given parity; forced to 1 on odd multiplicity.
fn decorations(nu: &Partition, even_parts: bool) -> Vec<Eps> {
    let mut out = vec![Eps::new()];
    for k in nu.distinct() {
        if (k % 2 == 0) != even_parts {
            continue;
        }
        let choices: &[u8] = if nu.mult(k) % 2 == 1 { &[1] } else { &[0, 1] };
        out = out
            .into_iter()
            .flat_map(|e| {
                choices.iter().map(move |&c| {
                    let mut e = e.clone();
                    e.insert(k, c);
                    e
                })
            })
            .collect();
    }
    out
}

fn very_even(nu: &Partition) -> bool {
    nu.distinct().iter().all(|&k| k % 2 == 0 && nu.mult(k) % 2 == 0)
}

fn split_markers(split: bool) -> Vec<Option<Marker>> {
    if split {
        vec![Some(Marker::I), Some(Marker::II)]
    } else {
        vec![None]
    }
}

/// All unipotent orbits of the setting, in a fixed order.
pub fn enumerate_orbits(s: &Setting) -> Vec<OrbitParam> {
    let n = s.rank;
    let mut out = Vec::new();
    match (s.family, s.char) {
        (Family::A, _) if !s.outer() => {
            out.extend(Partition::all(n + 1).into_iter().map(|nu| OrbitParam::A { nu }));
        }
        (Family::A, _) => {
            for nu in Partition::all(n + 1).into_iter().filter(|p| in_p(p, 1)) {
                for eps in decorations(&nu, false) {
                    out.push(OrbitParam::TwistedA2 { orbit: DecoratedPartition { nu: nu.clone(), eps } });
                }
            }
        }
        (Family::B | Family::C, Characteristic::Two) => {
            for nu in Partition::all(2 * n).into_iter().filter(|p| in_p(p, -1)) {
                for eps in decorations(&nu, true) {
                    out.push(OrbitParam::BC2 { orbit: DecoratedPartition { nu: nu.clone(), eps } });
                }
            }
        }
        (_, Characteristic::Two) => {
            let want_odd = s.outer();
            for nu in Partition::all(2 * n).into_iter().filter(|p| in_p(p, -1)) {
                if (nu.len() % 2 == 1) != want_odd {
                    continue;
                }
                for eps in decorations(&nu, true) {
                    let split = !want_odd && very_even(&nu) && eps.values().all(|&e| e == 0);
                    for marker in split_markers(split) {
                        let orbit = DecoratedPartition { nu: nu.clone(), eps: eps.clone() };
                        out.push(OrbitParam::D2 { orbit, marker });
                    }
                }
            }
        }
        (Family::B, _) => {
            out.extend(Partition::all(2 * n + 1).into_iter().filter(|p| in_p(p, 1)).map(|nu| OrbitParam::BCD0 { nu, marker: None }));
        }
        (Family::C, _) => {
            out.extend(Partition::all(2 * n).into_iter().filter(|p| in_p(p, -1)).map(|nu| OrbitParam::BCD0 { nu, marker: None }));
        }
        _ => {
            for nu in Partition::all(2 * n).into_iter().filter(|p| in_p(p, 1)) {
                let split = nu.parts().iter().all(|&k| k % 2 == 0);
                for marker in split_markers(split) {
                    out.push(OrbitParam::BCD0 { nu: nu.clone(), marker });
                }
            }
        }
    }
    out
}

/// Check that `op` is one of the orbits of `s`.
pub fn validate_orbit(s: &Setting, op: &OrbitParam) -> Result<()> {
    if enumerate_orbits(s).contains(op) {
        Ok(())
    } else {
        Err(Error::InvalidOrbit(format!("{} is not an orbit of this setting", op)))
    }
}

/// `ψ_λ(i)` for `i = 1..=a`.
fn psi_signs(lambda: &Partition) -> Vec<i64> {
    let p = lambda.parts();
    let a = p.len();
    let at = |i: usize| if i == 0 || i > a { 0 } else { p[i - 1] };
    (1..=a)
        .map(|i| {
            if i % 2 == 1 && at(i - 1) != at(i) {
                1
            } else if i % 2 == 0 && at(i + 1) != at(i) {
                -1
            } else {
                0
            }
        })
        .collect()
}

fn doubled(mu: &Partition) -> Vec<usize> {
    mu.parts().iter().flat_map(|&m| [m, m]).collect()
}

/// Lusztig's map `Φ` from a class of `W` (or `Wδ`) to a unipotent orbit.
pub fn lusztig_phi(s: &Setting, cp: &ClassParam) -> Result<OrbitParam> {
    s.weyl_datum()?.validate_class(cp)?;
    let bad = || Error::InvalidClass(format!("{} does not belong to this setting", cp));
    Ok(match cp {
        ClassParam::TypeA { lambda } => OrbitParam::A { nu: lambda.clone() },
        ClassParam::TwistedA { lambda } => {
            let mut m = BTreeMap::new();
            let mut eps = Eps::new();
            for k in 1..=lambda.size() {
                let c = if k % 2 == 1 { lambda.mult(k) + 2 * lambda.mult(2 * k) } else { 2 * lambda.mult(2 * k) };
                if c > 0 {
                    m.insert(k, c);
                }
                if k % 2 == 1 {
                    if lambda.mult(k) != 0 {
                        eps.insert(k, 1);
                    } else if lambda.mult(2 * k) != 0 {
                        eps.insert(k, 0);
                    }
                }
            }
            OrbitParam::TwistedA2 { orbit: DecoratedPartition { nu: from_mults(&m), eps } }
        }
        ClassParam::Bcd { lambda, mu, marker } => {
            let mut parts = doubled(mu);
            match (s.char, s.family) {
                (Characteristic::Two, _) => {
                    parts.extend(lambda.parts().iter().map(|&l| 2 * l));
                    let nu = Partition::new(parts);
                    let eps: Eps = nu
                        .distinct()
                        .into_iter()
                        .filter(|k| k % 2 == 0)
                        .map(|k| (k, u8::from(lambda.mult(k / 2) != 0)))
                        .collect();
                    let orbit = DecoratedPartition { nu, eps };
                    if s.family == Family::D {
                        OrbitParam::D2 { orbit, marker: *marker }
                    } else {
                        OrbitParam::BC2 { orbit }
                    }
                }
                (_, Family::C) => {
                    parts.extend(lambda.parts().iter().map(|&l| 2 * l));
                    OrbitParam::BCD0 { nu: Partition::new(parts), marker: None }
                }
                (_, Family::B | Family::D) => {
                    let psi = psi_signs(lambda);
                    parts.extend(lambda.parts().iter().zip(&psi).map(|(&l, &p)| (2 * l as i64 + p) as usize));
                    if s.family == Family::B && lambda.len() % 2 == 0 {
                        parts.push(1);
                    }
                    OrbitParam::BCD0 { nu: Partition::new(parts), marker: *marker }
                }
                _ => return Err(bad()),
            }
        }
        ClassParam::Exceptional { .. } => return Err(bad()),
    })
}

/// `Ψ(O)`: the unique class of `Φ⁻¹(O)` with the smallest fixed space.
pub fn lusztig_psi(s: &Setting, op: &OrbitParam) -> Result<ClassParam> {
    validate_orbit(s, op)?;
    let datum = s.weyl_datum()?;
    let mut best: Option<(usize, ClassParam)> = None;
    let mut tie = false;
    for cp in datum.enumerate_classes()? {
        if lusztig_phi(s, &cp)? != *op {
            continue;
        }
        let d = dim_fixed_space(&datum, &datum.class_representative(&cp)?);
        match &best {
            Some((b, _)) if d > *b => {}
            Some((b, _)) if d == *b => tie = true,
            _ => {
                best = Some((d, cp));
                tie = false;
            }
        }
    }
    let (_, cp) = best.ok_or_else(|| Error::Internal(format!("empty preimage of {}", op)))?;
    if tie {
        return Err(Error::Internal(format!("most elliptic preimage of {} is not unique", op)));
    }
    if let (OrbitParam::TwistedA2 { orbit }, ClassParam::TwistedA { lambda }) = (op, &cp) {
        if psi_twisted_a(orbit) != *lambda {
            return Err(Error::Internal(format!("direct ²A section disagrees for {}", op)));
        }
    }
    Ok(cp)
}

/// The ²A section read off directly from `(ν, ε)`.
pub fn psi_twisted_a(orbit: &DecoratedPartition) -> Partition {
    let mut m: BTreeMap<usize, usize> = BTreeMap::new();
    for k in orbit.nu.distinct() {
        let c = orbit.nu.mult(k);
        if k % 2 == 0 || orbit.eps.get(&k) == Some(&0) {
            *m.entry(2 * k).or_default() += c / 2;
        } else {
            *m.entry(k).or_default() += c;
        }
    }
    from_mults(&m)
}

/// `χ(s) = max{0, min{N − s + t, t}}` for a part `s` of a partition of `N`
/// (the dimension of the natural module); `t` depends on the type and on
/// whether the orbit has a `V(s)` block.
pub fn chi(s: usize, n: usize, family: Family, v_block: bool) -> i64 {
    let s = s as i64;
    let t = match (family, v_block) {
        (Family::D, true) => (s + 2) / 2,
        (Family::D, false) => (s + 1) / 2,
        (_, true) => s / 2,
        (_, false) => (s - 1) / 2,
    };
    0.max((n as i64 - s + t).min(t))
}

/// `codim_G̃ O = dim G − dim O`.
pub fn codim(s: &Setting, op: &OrbitParam) -> Result<u64> {
    validate_orbit(s, op)?;
    let v = match op {
        OrbitParam::A { nu } => codim_type_a(nu),
        OrbitParam::TwistedA2 { orbit } => codim_twisted_a2(orbit)?,
        OrbitParam::BC2 { orbit } | OrbitParam::D2 { orbit, .. } => codim_bcd2(s.family, orbit),
        OrbitParam::BCD0 { nu, .. } => codim_bcd0(s.family, nu),
    };
    u64::try_from(v).map_err(|_| Error::Internal(format!("negative codimension for {}", op)))
}

/// `Σ_j m_j r_j (m_j + 2 Σ_{k<j} m_k) − 1` over distinct parts `r_j`.
pub fn codim_type_a(nu: &Partition) -> i64 {
    let mut acc = 0i64;
    let mut before = 0i64;
    for r in nu.distinct() {
        let m = nu.mult(r) as i64;
        acc += m * r as i64 * (m + 2 * before);
        before += m;
    }
    acc - 1
}

/// Strip the largest parts one block at a time, adding the step difference.
fn codim_twisted_a2(orbit: &DecoratedPartition) -> Result<i64> {
    // in units of 1/2
    let mut twice = 0i64;
    let mut nu = orbit.nu.clone();
    while let Some(&top) = nu.parts().first() {
        let n = nu.size() as i64 - 1;
        let m1 = nu.mult(top) as i64;
        let k = top as i64;
        twice += 2 * m1 * n - m1 * m1 * k;
        twice += if k % 2 == 0 {
            2 * m1
        } else if orbit.eps.get(&top) == Some(&1) {
            m1
        } else {
            3 * m1
        };
        nu = Partition::new(nu.parts()[m1 as usize..].to_vec());
    }
    if twice % 2 != 0 {
        return Err(Error::Internal(format!("non-integral codimension for {}", orbit)));
    }
    Ok(twice / 2)
}

fn codim_bcd2(family: Family, orbit: &DecoratedPartition) -> i64 {
    let mut acc = 0i64;
    let mut nu = orbit.nu.clone();
    while let Some(&top) = nu.parts().first() {
        let n = nu.size();
        let m1 = nu.mult(top);
        let rest: i64 = nu.parts()[m1..].iter().map(|&x| x as i64).sum();
        let v = top % 2 == 0 && orbit.eps.get(&top) == Some(&1);
        let c = chi(top, n, family, v);
        for i in 1..=m1 as i64 {
            acc += i * top as i64 - c;
        }
        acc += m1 as i64 * rest;
        nu = Partition::new(nu.parts()[m1..].to_vec());
    }
    acc
}

/// Centralizer dimension in good characteristic via the dual partition.
pub fn codim_bcd0(family: Family, nu: &Partition) -> i64 {
    let sq: i64 = nu.dual().parts().iter().map(|&x| (x * x) as i64).sum();
    let odd = nu.parts().iter().filter(|&&x| x % 2 == 1).count() as i64;
    match family {
        Family::C => (sq + odd) / 2,
        _ => (sq - odd) / 2,
    }
}
