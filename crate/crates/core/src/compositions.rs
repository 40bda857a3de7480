//! Compositions of n, their subset encodings, complements, and refinement.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A composition of `n`: an ordered list of positive parts.
///
/// Only the parts are stored; the degree and length are derived.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() || parts.iter().any(|&p| p == 0) {
            return Err(Error::InvalidComposition(format!("{parts:?}")));
        }
        Ok(Composition { parts })
    }

    /// The empty composition of 0, the unit for windowed expansions.
    pub fn empty() -> Self {
        Composition { parts: vec![] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Weakly decreasing parts, i.e. a partition diagram in French convention.
    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// All parts before the last equal to 1 (single standard tableau shapes).
    pub fn is_hook(&self) -> bool {
        self.parts[..self.len() - 1].iter().all(|&p| p == 1)
    }

    /// Parts diminished by 1, zeros discarded; may be empty.
    pub fn diminished(&self) -> Composition {
        Composition {
            parts: self.parts.iter().filter(|&&p| p > 1).map(|&p| p - 1).collect(),
        }
    }

    /// Conjugate partition; requires weakly decreasing parts.
    pub fn transpose(&self) -> Result<Composition> {
        if !self.is_partition() {
            return Err(Error::NotPartition(self.to_string()));
        }
        let cols = self.parts[0];
        Composition::new((1..=cols).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect())
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let p: usize = tok.trim().parse().map_err(|_| Error::Parse(tok.trim().to_string()))?;
            parts.push(p);
        }
        Composition::new(parts)
    }
}

/// A subset of {1,...,n-1}, stored sorted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DescentSubset {
    n: usize,
    elements: Vec<usize>,
}

impl DescentSubset {
    pub fn new(n: usize, mut elements: Vec<usize>) -> Result<Self> {
        elements.sort_unstable();
        elements.dedup();
        if elements.iter().any(|&e| e == 0 || e >= n) {
            return Err(Error::InvalidSubset(format!("{elements:?} in 1..{n}")));
        }
        Ok(DescentSubset { n, elements })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, e: usize) -> bool {
        self.elements.binary_search(&e).is_ok()
    }

    /// Complement within {1,...,n-1}.
    pub fn complement(&self) -> DescentSubset {
        DescentSubset {
            n: self.n,
            elements: (1..self.n).filter(|e| !self.contains(*e)).collect(),
        }
    }

    pub fn is_subset_of(&self, other: &DescentSubset) -> bool {
        self.elements.iter().all(|e| other.contains(*e))
    }

    pub fn parse(s: &str, n: usize) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return DescentSubset::new(n, vec![]);
        }
        let mut elements = Vec::new();
        for tok in inner.split(',') {
            let e: usize = tok.trim().parse().map_err(|_| Error::Parse(tok.trim().to_string()))?;
            elements.push(e);
        }
        DescentSubset::new(n, elements)
    }
}

impl fmt::Display for DescentSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.elements.iter().map(|e| e.to_string()).collect();
        write!(f, "{{{}}}", s.join(","))
    }
}

/// set(alpha) = {alpha_1, alpha_1+alpha_2, ...}, the partial sums short of n.
pub fn set_of(alpha: &Composition) -> DescentSubset {
    let mut elements = Vec::with_capacity(alpha.len().saturating_sub(1));
    let mut acc = 0;
    for &p in &alpha.parts()[..alpha.len() - 1] {
        acc += p;
        elements.push(acc);
    }
    DescentSubset { n: alpha.n(), elements }
}

/// comp(S) = (s_1, s_2 - s_1, ..., n - s_j); inverse of `set_of`.
pub fn comp_of(s: &DescentSubset, n: usize) -> Result<Composition> {
    if s.n != n {
        return Err(Error::DegreeMismatch(s.n, n));
    }
    let mut parts = Vec::with_capacity(s.elements.len() + 1);
    let mut prev = 0;
    for &e in &s.elements {
        parts.push(e - prev);
        prev = e;
    }
    parts.push(n - prev);
    Composition::new(parts)
}

/// The composition whose subset is the complement of set(alpha); an involution.
pub fn complement(alpha: &Composition) -> Composition {
    comp_of(&set_of(alpha).complement(), alpha.n()).expect("complement stays valid")
}

/// True iff beta refines alpha, i.e. set(alpha) is contained in set(beta).
pub fn refines(beta: &Composition, alpha: &Composition) -> Result<bool> {
    if beta.n() != alpha.n() {
        return Err(Error::DegreeMismatch(beta.n(), alpha.n()));
    }
    Ok(set_of(alpha).is_subset_of(&set_of(beta)))
}

/// All 2^(n-1) compositions of n, lexicographic on part lists.
pub fn enumerate_compositions(n: usize) -> Result<Vec<Composition>> {
    if n == 0 {
        return Err(Error::InvalidComposition("degree 0".into()));
    }
    let mut out = Vec::with_capacity(1 << (n - 1));
    let mut parts = Vec::new();
    fn rec(rem: usize, parts: &mut Vec<usize>, out: &mut Vec<Composition>) {
        if rem == 0 {
            out.push(Composition { parts: parts.clone() });
            return;
        }
        for p in 1..=rem {
            parts.push(p);
            rec(rem - p, parts, out);
            parts.pop();
        }
    }
    rec(n, &mut parts, &mut out);
    Ok(out)
}
