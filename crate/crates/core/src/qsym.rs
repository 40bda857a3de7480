//! Quasisymmetric functions of one degree in the fundamental basis, the
//! involution psi, polynomial specialization, symmetric-function oracles,
//! module characteristics, and identity verification.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::str::FromStr;

use num_rational::BigRational;

use crate::compositions::{complement, comp_of, enumerate_compositions, set_of, Composition};
use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::polynomial::{e_poly, h_poly, Polynomial};
use crate::scalar::Ring;
use crate::tableaux::{descent_set, enumerate_standard, DescentVariant, TableauClass};

/// An integer-linear combination of fundamental quasisymmetric functions of
/// one fixed degree; keys are the indexing compositions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSymElement<T> {
    degree: usize,
    terms: BTreeMap<Composition, T>,
}

impl<T: Ring> QSymElement<T> {
    pub fn zero(degree: usize) -> Self {
        QSymElement { degree, terms: BTreeMap::new() }
    }

    /// The unit element of degree 0.
    pub fn one() -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Composition::empty(), T::one());
        QSymElement { degree: 0, terms }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &Composition) -> T {
        self.terms.get(alpha).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Composition, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, alpha: Composition, coeff: T) {
        assert_eq!(alpha.n(), self.degree, "composition degree mismatch");
        let entry = self.terms.entry(alpha.clone()).or_insert_with(T::zero);
        *entry = entry.clone() + coeff;
        if entry.is_zero() {
            self.terms.remove(&alpha);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.degree, other.degree);
        let mut out = self.clone();
        for (a, c) in &other.terms {
            out.add_term(a.clone(), T::zero() - c.clone());
        }
        out
    }

    pub fn scale(&self, k: &T) -> Self {
        let mut out = QSymElement::zero(self.degree);
        for (a, c) in &self.terms {
            out.add_term(a.clone(), c.clone() * k.clone());
        }
        out
    }
}

impl<T: Ring + std::fmt::Display> QSymElement<T> {
    /// Text form like `F[2,1,1] + F[1,2,1]`, compositions in lexicographic
    /// order; coefficients other than one are printed as `c*F[...]`.
    pub fn text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (alpha, coeff)) in self.terms.iter().enumerate() {
            if i > 0 {
                out.push_str(" + ");
            }
            let c = coeff.to_string();
            match c.as_str() {
                "1" => {
                    let _ = write!(out, "F[{alpha}]");
                }
                "-1" => {
                    let _ = write!(out, "-F[{alpha}]");
                }
                _ => {
                    let _ = write!(out, "{c}*F[{alpha}]");
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "degree": self.degree,
            "terms": self
                .terms
                .iter()
                .map(|(a, c)| serde_json::json!({"composition": a.parts(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }
}

/// F_alpha as an element.
pub fn fundamental<T: Ring>(alpha: &Composition) -> QSymElement<T> {
    let mut q = QSymElement::zero(alpha.n());
    q.add_term(alpha.clone(), T::one());
    q
}

/// The involution determined by F_alpha -> F_{alpha^c}.
pub fn psi<T: Ring>(q: &QSymElement<T>) -> QSymElement<T> {
    let mut out = QSymElement::zero(q.degree());
    for (alpha, c) in q.terms() {
        out.add_term(complement(alpha), c.clone());
    }
    out
}

/// Sum of F_{comp(Des_v(T))} over the standard tableaux of the class.
pub fn characteristic(alpha: &Composition, v: DescentVariant, class: TableauClass) -> QSymElement<i64> {
    let n = alpha.n();
    let mut out = QSymElement::zero(n);
    for t in enumerate_standard(alpha, class) {
        let beta = comp_of(&descent_set(&t, v), n).expect("descents fit the degree");
        out.add_term(beta, 1);
    }
    out
}

/// F_alpha expanded in the variables x_lo..=x_hi of an nvars-variable ring:
/// weakly increasing index chains with strict rises at set(alpha).
fn fundamental_window<T: Ring>(alpha: &Composition, nvars: usize, lo: usize, hi: usize) -> Polynomial<T> {
    let hi = hi.min(nvars);
    if alpha.is_empty() {
        return Polynomial::one(nvars);
    }
    if lo > hi {
        return Polynomial::zero(nvars);
    }
    let n = alpha.n();
    let strict_after = set_of(alpha);
    let mut out = Polynomial::zero(nvars);
    let mut expo = vec![0u16; nvars];
    fn rec<T: Ring>(
        pos: usize,
        n: usize,
        min_var: usize,
        hi: usize,
        strict_after: &crate::compositions::DescentSubset,
        expo: &mut Vec<u16>,
        out: &mut Polynomial<T>,
    ) {
        if pos > n {
            out.add_term(expo.clone(), T::one());
            return;
        }
        for k in min_var..=hi {
            expo[k - 1] += 1;
            let next_min = if strict_after.contains(pos) { k + 1 } else { k };
            if pos == n || next_min <= hi {
                rec(pos + 1, n, next_min, hi, strict_after, expo, out);
            }
            expo[k - 1] -= 1;
        }
    }
    rec(1, n, lo, hi, &strict_after, &mut expo, &mut out);
    out
}

/// Specialization to m variables, extended linearly from the fundamentals.
pub fn specialize<T: Ring>(q: &QSymElement<T>, m: usize) -> Polynomial<T> {
    specialize_window(q, m, 1, m)
}

/// Specialization with the variables restricted to the window x_lo..=x_hi.
pub fn specialize_window<T: Ring>(q: &QSymElement<T>, nvars: usize, lo: usize, hi: usize) -> Polynomial<T> {
    let mut out = Polynomial::zero(nvars);
    for (alpha, c) in q.terms() {
        for (e, k) in fundamental_window::<T>(alpha, nvars, lo, hi).terms() {
            out.add_term(e.clone(), k.clone() * c.clone());
        }
    }
    out
}

/// Schur polynomial via semistandard-tableau enumeration in French
/// convention: rows weakly increase and columns strictly increase upward.
pub fn schur_poly<T: Ring>(lambda: &Composition, m: usize) -> Result<Polynomial<T>> {
    if !lambda.is_partition() {
        return Err(Error::NotPartition(lambda.to_string()));
    }
    let parts = lambda.parts().to_vec();
    let l = parts.len();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
    let mut out = Polynomial::zero(m);
    fn rec<T: Ring>(
        i: usize,
        j: usize,
        m: usize,
        parts: &[usize],
        rows: &mut Vec<Vec<usize>>,
        out: &mut Polynomial<T>,
    ) {
        if i == parts.len() {
            let mut expo = vec![0u16; m];
            for row in rows.iter() {
                for &e in row {
                    expo[e - 1] += 1;
                }
            }
            out.add_term(expo, T::one());
            return;
        }
        let (ni, nj) = if j + 1 == parts[i] { (i + 1, 0) } else { (i, j + 1) };
        let lo = {
            let mut lo = 1;
            if j > 0 {
                lo = lo.max(rows[i][j - 1]);
            }
            if i > 0 && parts[i] > j {
                lo = lo.max(rows[i - 1][j] + 1);
            }
            lo
        };
        for v in lo..=m {
            rows[i][j] = v;
            rec(ni, nj, m, parts, rows, out);
        }
        rows[i][j] = 0;
    }
    if l > 0 {
        rec(0, 0, m, &parts, &mut rows, &mut out);
    } else {
        out = Polynomial::one(m);
    }
    Ok(out)
}

/// Re-exported window builders with the shared scalar defaulting story.
pub fn elementary<T: Ring>(nvars: usize, r: usize, lo: usize, hi: usize) -> Polynomial<T> {
    e_poly(nvars, r, lo, hi)
}

pub fn homogeneous<T: Ring>(nvars: usize, r: usize, lo: usize, hi: usize) -> Polynomial<T> {
    h_poly(nvars, r, lo, hi)
}

/// The closed-form identities that the characteristics satisfy.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum IdentityTag {
    ExtSchur,
    RextSchur,
    XChar,
    XyQuot,
    ZyQuot,
    BaraSitstar,
    AQuot,
    AbarQuot,
    RdiDiff,
    PsiPairs,
}

impl IdentityTag {
    pub const ALL: [IdentityTag; 10] = [
        IdentityTag::ExtSchur,
        IdentityTag::RextSchur,
        IdentityTag::XChar,
        IdentityTag::XyQuot,
        IdentityTag::ZyQuot,
        IdentityTag::BaraSitstar,
        IdentityTag::AQuot,
        IdentityTag::AbarQuot,
        IdentityTag::RdiDiff,
        IdentityTag::PsiPairs,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            IdentityTag::ExtSchur => "EXT_SCHUR",
            IdentityTag::RextSchur => "REXT_SCHUR",
            IdentityTag::XChar => "X_CHAR",
            IdentityTag::XyQuot => "XY_QUOT",
            IdentityTag::ZyQuot => "ZY_QUOT",
            IdentityTag::BaraSitstar => "BARA_SITSTAR",
            IdentityTag::AQuot => "A_QUOT",
            IdentityTag::AbarQuot => "ABAR_QUOT",
            IdentityTag::RdiDiff => "RDI_DIFF",
            IdentityTag::PsiPairs => "PSI_PAIRS",
        }
    }
}

impl FromStr for IdentityTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        IdentityTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }
}

type P = Polynomial<i64>;

/// Product of h_p over the parts of beta, on the window.
fn h_product(beta: &Composition, m: usize, lo: usize, hi: usize) -> P {
    let mut out = Polynomial::one(m);
    for &p in beta.parts() {
        out = out.mul(&h_poly(m, p, lo, hi));
    }
    out
}

fn e_product(beta: &Composition, m: usize, lo: usize, hi: usize) -> P {
    let mut out = Polynomial::one(m);
    for &p in beta.parts() {
        out = out.mul(&e_poly(m, p, lo, hi));
    }
    out
}

/// Characteristic of the smaller shape expanded on a variable window; the
/// empty shape contributes the constant 1.
fn windowed_char(alpha_bar: &Composition, v: DescentVariant, class: TableauClass, m: usize, lo: usize) -> P {
    if alpha_bar.is_empty() {
        return Polynomial::one(m);
    }
    specialize_window(&characteristic(alpha_bar, v, class), m, lo, m)
}

/// Renders both sides of the tagged identity as polynomials in m variables
/// and compares them exactly. PSI_PAIRS is compared coefficient-wise in the
/// fundamental basis.
pub fn verify_identity(tag: IdentityTag, alpha: &Composition, m: usize) -> Result<bool> {
    let n = alpha.n();
    if m < n {
        return Err(Error::WindowTooSmall { need: n, got: m });
    }
    let l = alpha.len();
    let bar = alpha.diminished();
    Ok(match tag {
        IdentityTag::ExtSchur => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::DualImmaculate, TableauClass::Set), m);
            lhs == schur_poly(alpha, m)?
        }
        IdentityTag::RextSchur => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::RowStrict, TableauClass::Set), m);
            lhs == schur_poly(&alpha.transpose()?, m)?
        }
        IdentityTag::XChar => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::DualImmaculate, TableauClass::SitStar), m);
            let mut rhs = Polynomial::zero(m);
            for k in 1..=m {
                let term = e_poly::<i64>(m, l - 1, 1, k - 1)
                    .mul(&Polynomial::var(m, k))
                    .mul(&h_product(&bar, m, k, m));
                rhs = rhs.add(&term);
            }
            lhs == rhs
        }
        IdentityTag::XyQuot => {
            let lhs =
                specialize(&characteristic(alpha, DescentVariant::DualImmaculate, TableauClass::SetSitStar), m);
            let mut rhs = Polynomial::zero(m);
            for k in 1..=m {
                let term = e_poly::<i64>(m, l - 1, 1, k - 1)
                    .mul(&Polynomial::var(m, k))
                    .mul(&windowed_char(&bar, DescentVariant::DualImmaculate, TableauClass::Set, m, k));
                rhs = rhs.add(&term);
            }
            lhs == rhs
        }
        IdentityTag::ZyQuot => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::RowStrict, TableauClass::SetSitStar), m);
            let mut rhs = Polynomial::zero(m);
            for k in 1..=m {
                let term = h_poly::<i64>(m, l - 1, 1, k)
                    .mul(&Polynomial::var(m, k))
                    .mul(&windowed_char(&bar, DescentVariant::RowStrict, TableauClass::Set, m, k + 1));
                rhs = rhs.add(&term);
            }
            lhs == rhs
        }
        IdentityTag::BaraSitstar => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::ABar, TableauClass::SitStar), m);
            let beta = Composition::new(
                alpha.parts()[..l - 1].iter().filter(|&&p| p > 1).map(|&p| p - 1).collect(),
            )
            .unwrap_or_else(|_| Composition::empty());
            let last = alpha.parts()[l - 1] - 1;
            let mut rhs = Polynomial::zero(m);
            for k in 1..=m {
                let term = e_poly::<i64>(m, l - 1, 1, k - 1)
                    .mul(&Polynomial::var(m, k))
                    .mul(&e_product(&beta, m, k, m))
                    .mul(&e_poly(m, last, k + 1, m));
                rhs = rhs.add(&term);
            }
            lhs == rhs
        }
        IdentityTag::AQuot => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::A, TableauClass::SetSitStar), m);
            let rhs = if alpha.is_hook() {
                h_poly(m, n, 1, m)
            } else {
                let mut rhs = Polynomial::zero(m);
                for k in 1..=m {
                    let term = h_poly::<i64>(m, l - 1, 1, k)
                        .mul(&Polynomial::var(m, k))
                        .mul(&windowed_char(&bar, DescentVariant::A, TableauClass::Set, m, k + 1));
                    rhs = rhs.add(&term);
                }
                rhs
            };
            lhs == rhs
        }
        IdentityTag::AbarQuot => {
            let lhs = specialize(&characteristic(alpha, DescentVariant::ABar, TableauClass::SetSitStar), m);
            let rhs = if alpha.is_hook() {
                e_poly(m, n, 1, m)
            } else {
                let mut rhs = Polynomial::zero(m);
                for k in 1..=m {
                    let term = e_poly::<i64>(m, l - 1, 1, k - 1)
                        .mul(&Polynomial::var(m, k))
                        .mul(&windowed_char(&bar, DescentVariant::ABar, TableauClass::Set, m, k));
                    rhs = rhs.add(&term);
                }
                rhs
            };
            lhs == rhs
        }
        IdentityTag::RdiDiff => {
            let full = characteristic(alpha, DescentVariant::RowStrict, TableauClass::Sit);
            let nset = characteristic(alpha, DescentVariant::RowStrict, TableauClass::NsetSit);
            let set = characteristic(alpha, DescentVariant::RowStrict, TableauClass::Set);
            specialize(&full.sub(&nset), m) == specialize(&set, m)
        }
        IdentityTag::PsiPairs => {
            let pairs = [
                (TableauClass::Sit, DescentVariant::DualImmaculate, DescentVariant::RowStrict),
                (TableauClass::Set, DescentVariant::DualImmaculate, DescentVariant::RowStrict),
                (TableauClass::Sit, DescentVariant::ABar, DescentVariant::A),
                (TableauClass::Set, DescentVariant::ABar, DescentVariant::A),
            ];
            pairs
                .into_iter()
                .all(|(class, from, to)| psi(&characteristic(alpha, from, class)) == characteristic(alpha, to, class))
        }
    })
}

/// The families whose fundamental-coordinate matrices must have full rank.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum BasisFamily {
    RsDualImmaculate,
    DualImmaculate,
    Extended,
    RowStrictExtended,
}

impl BasisFamily {
    pub fn variant_and_class(&self) -> (DescentVariant, TableauClass) {
        match self {
            BasisFamily::RsDualImmaculate => (DescentVariant::RowStrict, TableauClass::Sit),
            BasisFamily::DualImmaculate => (DescentVariant::DualImmaculate, TableauClass::Sit),
            BasisFamily::Extended => (DescentVariant::DualImmaculate, TableauClass::Set),
            BasisFamily::RowStrictExtended => (DescentVariant::RowStrict, TableauClass::Set),
        }
    }
}

/// Rank over the rationals of a family of elements of one degree, in
/// fundamental coordinates.
pub fn family_rank(elements: &[QSymElement<i64>], n: usize) -> usize {
    let comps = enumerate_compositions(n).expect("positive degree");
    let rows: Vec<Vec<BigRational>> = elements
        .iter()
        .map(|q| comps.iter().map(|b| BigRational::from_integer(q.coeff(b).into())).collect())
        .collect();
    Matrix::from_rows(rows).rank()
}

/// True iff the family spans the full space of its degree.
pub fn check_basis(family: BasisFamily, n: usize) -> bool {
    let (v, class) = family.variant_and_class();
    let elements: Vec<QSymElement<i64>> = enumerate_compositions(n)
        .expect("positive degree")
        .iter()
        .map(|alpha| characteristic(alpha, v, class))
        .collect();
    family_rank(&elements, n) == 1 << (n - 1)
}
