//! Semistandard filling enumeration: content generating functions for the
//! eight row/column strictness regimes plus the broken-column regime, and
//! their comparison against specialized characteristics.

use crate::compositions::Composition;
use crate::polynomial::Polynomial;
use crate::qsym::{characteristic, specialize};
use crate::tableaux::{DescentVariant, TableauClass};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Mode {
    Strict,
    Weak,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ColScope {
    FirstColumn,
    AllColumns,
}

/// Increase requirements on fillings of a composition diagram; the
/// `negated_columns` flag keeps only fillings in which some column fails
/// to increase weakly, and only combines with weak first column and
/// strict rows.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FillingRegime {
    pub col_scope: ColScope,
    pub col_mode: Mode,
    pub row_mode: Mode,
    pub negated_columns: bool,
}

impl FillingRegime {
    pub fn new(col_scope: ColScope, col_mode: Mode, row_mode: Mode) -> Self {
        FillingRegime { col_scope, col_mode, row_mode, negated_columns: false }
    }

    /// Row-strict fillings with a weak first column and at least one column
    /// that fails to increase weakly.
    pub fn broken_columns() -> Self {
        FillingRegime {
            col_scope: ColScope::FirstColumn,
            col_mode: Mode::Weak,
            row_mode: Mode::Strict,
            negated_columns: true,
        }
    }
}

fn ok(mode: Mode, below: usize, above: usize) -> bool {
    match mode {
        Mode::Strict => below < above,
        Mode::Weak => below <= above,
    }
}

fn all_columns_weak(parts: &[usize], rows: &[Vec<usize>]) -> bool {
    let width = parts.iter().copied().max().unwrap_or(0);
    for c in 0..width {
        let mut prev: Option<usize> = None;
        for (i, row) in rows.iter().enumerate() {
            if parts[i] > c {
                if let Some(p) = prev {
                    if p > row[c] {
                        return false;
                    }
                }
                prev = Some(row[c]);
            }
        }
    }
    true
}

/// Sum of content monomials over the fillings of the shape with entries in
/// {1..m} satisfying the regime. Cells are filled column by column, bottom
/// to top, checking each constraint as soon as both cells are assigned.
pub fn generating_poly(alpha: &Composition, m: usize, regime: &FillingRegime) -> Polynomial<i64> {
    assert!(
        !regime.negated_columns || *regime == FillingRegime::broken_columns(),
        "the negated-columns flag only combines with a weak first column and strict rows"
    );
    let parts = alpha.parts().to_vec();
    let width = parts.iter().copied().max().unwrap();
    let mut cells = Vec::new();
    for c in 0..width {
        for (i, &p) in parts.iter().enumerate() {
            if p > c {
                cells.push((i, c));
            }
        }
    }
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
    let mut out = Polynomial::zero(m);

    struct Ctx<'a> {
        parts: &'a [usize],
        cells: &'a [(usize, usize)],
        m: usize,
        regime: &'a FillingRegime,
    }

    fn rec(k: usize, ctx: &Ctx, rows: &mut Vec<Vec<usize>>, out: &mut Polynomial<i64>) {
        if k == ctx.cells.len() {
            if ctx.regime.negated_columns && all_columns_weak(ctx.parts, rows) {
                return;
            }
            let mut expo = vec![0u16; ctx.m];
            for row in rows.iter() {
                for &e in row {
                    expo[e - 1] += 1;
                }
            }
            out.add_term(expo, 1);
            return;
        }
        let (i, c) = ctx.cells[k];
        for v in 1..=ctx.m {
            if c > 0 && !ok(ctx.regime.row_mode, rows[i][c - 1], v) {
                continue;
            }
            let col_checked = c == 0 || ctx.regime.col_scope == ColScope::AllColumns;
            if col_checked {
                // nearest filled cell below in this column
                let below = (0..i).rev().find(|&j| ctx.parts[j] > c);
                if let Some(j) = below {
                    if !ok(ctx.regime.col_mode, rows[j][c], v) {
                        continue;
                    }
                }
            }
            rows[i][c] = v;
            rec(k + 1, ctx, rows, out);
        }
        rows[i][c] = 0;
    }

    let ctx = Ctx { parts: &parts, cells: &cells, m, regime };
    rec(0, &ctx, &mut rows, &mut out);
    out
}

/// One regime compared against the specialization of its partner
/// characteristic.
#[derive(Clone, Debug)]
pub struct RegimeCheck {
    pub name: &'static str,
    pub ok: bool,
}

#[derive(Clone, Debug)]
pub struct GenfunReport {
    pub checks: Vec<RegimeCheck>,
}

impl GenfunReport {
    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// The nine pairings of a filling regime with a characteristic.
pub fn regime_partners() -> Vec<(&'static str, FillingRegime, DescentVariant, TableauClass)> {
    use ColScope::*;
    use Mode::*;
    vec![
        ("first<rows<=", FillingRegime::new(FirstColumn, Strict, Weak), DescentVariant::DualImmaculate, TableauClass::Sit),
        ("first<=rows<", FillingRegime::new(FirstColumn, Weak, Strict), DescentVariant::RowStrict, TableauClass::Sit),
        ("cols<rows<=", FillingRegime::new(AllColumns, Strict, Weak), DescentVariant::DualImmaculate, TableauClass::Set),
        ("cols<=rows<", FillingRegime::new(AllColumns, Weak, Strict), DescentVariant::RowStrict, TableauClass::Set),
        ("first<=rows<=", FillingRegime::new(FirstColumn, Weak, Weak), DescentVariant::A, TableauClass::Sit),
        ("first<rows<", FillingRegime::new(FirstColumn, Strict, Strict), DescentVariant::ABar, TableauClass::Sit),
        ("cols<=rows<=", FillingRegime::new(AllColumns, Weak, Weak), DescentVariant::A, TableauClass::Set),
        ("cols<rows<", FillingRegime::new(AllColumns, Strict, Strict), DescentVariant::ABar, TableauClass::Set),
        ("broken-columns", FillingRegime::broken_columns(), DescentVariant::RowStrict, TableauClass::NsetSit),
    ]
}

/// Compares every regime generating function with the specialization of its
/// partner characteristic at m variables.
pub fn verify_genfun(alpha: &Composition, m: usize) -> GenfunReport {
    let checks = regime_partners()
        .into_iter()
        .map(|(name, regime, v, class)| {
            let lhs = generating_poly(alpha, m, &regime);
            let rhs = specialize(&characteristic(alpha, v, class), m);
            RegimeCheck { name, ok: lhs == rhs }
        })
        .collect();
    GenfunReport { checks }
}
