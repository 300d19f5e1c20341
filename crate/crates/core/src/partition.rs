//! Integer partitions and bipartitions.

use std::fmt;

use serde::{Deserialize, Serialize};

/// A weakly decreasing list of positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(transparent)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `m_λ(k)`.
    pub fn mult(&self, k: usize) -> usize {
        self.0.iter().filter(|&&p| p == k).count()
    }

    /// Distinct part sizes, decreasing.
    pub fn distinct(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.dedup();
        d
    }

    /// Conjugate (dual) partition.
    pub fn dual(&self) -> Partition {
        let top = self.0.first().copied().unwrap_or(0);
        Partition((1..=top).map(|i| self.0.iter().filter(|&&p| p >= i).count()).collect())
    }

    /// All partitions of `n`, in reverse lexicographic order ((n) first).
    pub fn all(n: usize) -> Vec<Partition> {
        fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if n == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=n.min(max)).rev() {
                cur.push(p);
                rec(n - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// Parse `"3,1"`; the empty string (or `"-"`) is the empty partition.
    pub fn parse(s: &str) -> Option<Partition> {
        let s = s.trim();
        if s.is_empty() || s == "-" {
            return Some(Partition::empty());
        }
        let parts: Option<Vec<usize>> = s.split(',').map(|x| x.trim().parse().ok()).collect();
        let parts = parts?;
        if parts.iter().any(|&p| p == 0) {
            return None;
        }
        Some(Partition::new(parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "-");
        }
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// All bipartitions `(λ, μ)` with `|λ| + |μ| = n`.
pub fn bipartitions(n: usize) -> Vec<(Partition, Partition)> {
    let mut out = Vec::new();
    for a in (0..=n).rev() {
        for l in Partition::all(a) {
            for m in Partition::all(n - a) {
                out.push((l.clone(), m));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        let p: Vec<usize> = (0..9).map(|n| Partition::all(n).len()).collect();
        assert_eq!(p, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(bipartitions(2).len(), 5);
        assert_eq!(bipartitions(6).len(), 65);
    }

    #[test]
    fn dual_and_mult() {
        let l = Partition::new(vec![1, 3, 3]);
        assert_eq!(l.parts(), &[3, 3, 1]);
        assert_eq!(l.dual().parts(), &[3, 2, 2]);
        assert_eq!(l.mult(3), 2);
        assert_eq!(l.distinct(), vec![3, 1]);
        assert_eq!(Partition::parse("2,1,1"), Some(Partition::new(vec![2, 1, 1])));
        assert_eq!(Partition::parse(""), Some(Partition::empty()));
        assert_eq!(Partition::parse("2,0"), None);
    }
}
