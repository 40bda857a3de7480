//! Exact multivariate polynomials with a fixed variable count, plus the
//! elementary and complete homogeneous building blocks on variable windows.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::scalar::Ring;

/// A polynomial in variables x1..=x{nvars}; terms map exponent vectors to
/// nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Polynomial<T> {
    nvars: usize,
    terms: BTreeMap<Vec<u16>, T>,
}

impl<T: Ring> Polynomial<T> {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![0; nvars], T::one());
        Polynomial { nvars, terms }
    }

    /// The variable x_k, 1-based.
    pub fn var(nvars: usize, k: usize) -> Self {
        assert!(k >= 1 && k <= nvars);
        let mut expo = vec![0; nvars];
        expo[k - 1] = 1;
        let mut terms = BTreeMap::new();
        terms.insert(expo, T::one());
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, expo: &[u16]) -> T {
        self.terms.get(expo).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u16>, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, expo: Vec<u16>, coeff: T) {
        assert_eq!(expo.len(), self.nvars);
        let entry = self.terms.entry(expo.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&expo);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), T::zero() - c.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let expo: Vec<u16> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(expo, ca.clone() * cb.clone());
            }
        }
        out
    }

    /// Coefficient-wise comparison: every coefficient of `self` is at most
    /// the matching coefficient of `other`, under the given order.
    pub fn dominated_by(&self, other: &Self, le: impl Fn(&T, &T) -> bool) -> bool {
        self.terms.iter().all(|(e, c)| le(c, &other.coeff(e)))
    }
}

impl<T: Ring + std::fmt::Display> Polynomial<T> {
    /// Text form with terms sorted by exponent vector, e.g. `+x1^2*x2`.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (expo, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let mut factors = Vec::new();
            for (k, &e) in expo.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(format!("x{}", k + 1)),
                    _ => factors.push(format!("x{}^{}", k + 1, e)),
                }
            }
            let coeff_str = coeff.to_string();
            if factors.is_empty() {
                let _ = write!(out, "+{coeff_str}");
            } else if coeff_str == "1" {
                let _ = write!(out, "+{}", factors.join("*"));
            } else if coeff_str.starts_with('-') {
                let _ = write!(out, "{}*{}", coeff_str, factors.join("*"));
            } else {
                let _ = write!(out, "+{}*{}", coeff_str, factors.join("*"));
            }
        }
        out
    }
}

/// e_r on the window x_lo..=x_hi: square-free monomials of degree r.
pub fn e_poly<T: Ring>(nvars: usize, r: usize, lo: usize, hi: usize) -> Polynomial<T> {
    let hi = hi.min(nvars);
    if r == 0 {
        return Polynomial::one(nvars);
    }
    if lo > hi || hi + 1 - lo < r {
        return Polynomial::zero(nvars);
    }
    let mut out = Polynomial::zero(nvars);
    let mut picks = Vec::with_capacity(r);
    fn rec<T: Ring>(start: usize, hi: usize, left: usize, nvars: usize, picks: &mut Vec<usize>, out: &mut Polynomial<T>) {
        if left == 0 {
            let mut expo = vec![0u16; nvars];
            for &k in picks.iter() {
                expo[k - 1] = 1;
            }
            out.add_term(expo, T::one());
            return;
        }
        for k in start..=hi + 1 - left {
            picks.push(k);
            rec(k + 1, hi, left - 1, nvars, picks, out);
            picks.pop();
        }
    }
    rec(lo, hi, r, nvars, &mut picks, &mut out);
    out
}

/// h_r on the window x_lo..=x_hi: all monomials of degree r.
pub fn h_poly<T: Ring>(nvars: usize, r: usize, lo: usize, hi: usize) -> Polynomial<T> {
    let hi = hi.min(nvars);
    if r == 0 {
        return Polynomial::one(nvars);
    }
    if lo > hi {
        return Polynomial::zero(nvars);
    }
    let mut out = Polynomial::zero(nvars);
    fn rec<T: Ring>(start: usize, hi: usize, left: usize, nvars: usize, expo: &mut Vec<u16>, out: &mut Polynomial<T>) {
        if left == 0 {
            out.add_term(expo.clone(), T::one());
            return;
        }
        for k in start..=hi {
            expo[k - 1] += 1;
            rec(k, hi, left - 1, nvars, expo, out);
            expo[k - 1] -= 1;
        }
    }
    let mut expo = vec![0u16; nvars];
    rec(lo, hi, r, nvars, &mut expo, &mut out);
    out
}
