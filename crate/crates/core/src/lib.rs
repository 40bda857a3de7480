//! Combinatorics and 0-Hecke representation theory of dual immaculate and
//! row-strict dual immaculate quasisymmetric functions.
//!
//! The crate covers: compositions and their subset encodings; standard
//! immaculate tableaux with four descent conventions and the matching
//! 0-Hecke generator actions; straightening words to the distinguished
//! tableaux; the induced graded poset; fundamental-basis expansions,
//! the involution psi, polynomial specialization, and symmetric-function
//! oracles; tableau generating functions under every row/column strictness
//! regime; and exact rational module analysis (cyclicity, invariance,
//! filtrations, commutants, indecomposability certificates).
//!
//! The algebra layers are generic over their scalar through [`scalar::Ring`]
//! and [`scalar::Field`]; the concrete types used throughout the crate are
//! fixed by the aliases below.

pub mod compositions;
pub mod error;
pub mod genfun;
pub mod hecke;
pub mod matrix;
pub mod modstruct;
pub mod polynomial;
pub mod poset;
pub mod qsym;
pub mod scalar;
pub mod tableaux;

/// Exact integer coefficients for basis expansions and generating functions.
pub type Int = i64;
/// Exact rational scalars for the linear algebra.
pub type Rat = num_rational::BigRational;
/// Polynomials with integer coefficients.
pub type Poly = polynomial::Polynomial<Int>;
/// Fundamental-basis elements with integer coefficients.
pub type QSym = qsym::QSymElement<Int>;
/// Dense rational matrices.
pub type RatMatrix = matrix::Matrix<Rat>;

pub use compositions::{comp_of, complement, enumerate_compositions, refines, set_of, Composition, DescentSubset};
pub use error::{Error, Result};
pub use hecke::{apply_pi, apply_word, straighten, verify_hecke_relations, ActionResult, HeckeWord};
pub use poset::{build_poset, check_bounds, interval, to_dot, HassePoset};
pub use qsym::{characteristic, check_basis, fundamental, psi, specialize, verify_identity, IdentityTag};
pub use tableaux::{
    classify, descent_set, enumerate_standard, ninv, special, DescentVariant, SpecialKind, Tableau,
    TableauClass, TableauClassFlags,
};
