//! Standard tableaux of composition shape in French convention (row 1 at the
//! bottom), their classes, descent statistics, and reading words.

use std::fmt;
use std::str::FromStr;

use crate::compositions::{Composition, DescentSubset};
use crate::error::{Error, Result};

/// A standard filling with strictly increasing rows; `rows[0]` is the bottom row.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    /// Validates that the rows form a standard filling (entries are a
    /// permutation of 1..=n) with strictly increasing rows.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let repr = format!("{rows:?}");
        if rows.is_empty() || rows.iter().any(|r| r.is_empty()) {
            return Err(Error::NotStandard(repr));
        }
        let n: usize = rows.iter().map(|r| r.len()).sum();
        let mut seen = vec![false; n + 1];
        for row in &rows {
            for w in row.windows(2) {
                if w[0] >= w[1] {
                    return Err(Error::NotStandard(repr));
                }
            }
            for &e in row {
                if e == 0 || e > n || seen[e] {
                    return Err(Error::NotStandard(repr));
                }
                seen[e] = true;
            }
        }
        Ok(Tableau { rows })
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Composition {
        Composition::new(self.rows.iter().map(|r| r.len()).collect()).expect("rows are nonempty")
    }

    /// 0-based (row, column) of an entry.
    pub fn position(&self, entry: usize) -> (usize, usize) {
        for (i, row) in self.rows.iter().enumerate() {
            if let Ok(j) = row.binary_search(&entry) {
                return (i, j);
            }
        }
        panic!("entry {entry} not present");
    }

    /// Exchange entries i and i+1; valid whenever they are in different rows.
    pub(crate) fn swap_adjacent(&self, i: usize) -> Tableau {
        let (r1, c1) = self.position(i);
        let (r2, c2) = self.position(i + 1);
        debug_assert_ne!(r1, r2, "swapping within a row breaks row increase");
        let mut rows = self.rows.clone();
        rows[r1][c1] = i + 1;
        rows[r2][c2] = i;
        debug_assert!(rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1])));
        Tableau { rows }
    }

    /// Entries right to left in each row, rows top to bottom.
    pub fn reading_word(&self) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.n());
        for row in self.rows.iter().rev() {
            word.extend(row.iter().rev());
        }
        word
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", rows.join(";"))
    }
}

impl FromStr for Tableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for row_tok in s.split(';') {
            let mut row = Vec::new();
            for tok in row_tok.split(',') {
                let e: usize = tok.trim().parse().map_err(|_| Error::Parse(tok.trim().to_string()))?;
                row.push(e);
            }
            rows.push(row);
        }
        Tableau::new(rows)
    }
}

/// Number of inversions of a permutation in one-line notation.
pub fn ninv(word: &[usize]) -> usize {
    let mut count = 0;
    for p in 0..word.len() {
        for q in p + 1..word.len() {
            if word[p] > word[q] {
                count += 1;
            }
        }
    }
    count
}

/// The four descent conventions on standard immaculate tableaux.
///
/// Each one reads off the relative placement of i and i+1:
/// `DualImmaculate` takes i+1 strictly above, `RowStrict` weakly below,
/// `A` strictly below, and `ABar` weakly above.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum DescentVariant {
    DualImmaculate,
    RowStrict,
    A,
    ABar,
}

impl DescentVariant {
    pub const ALL: [DescentVariant; 4] = [
        DescentVariant::DualImmaculate,
        DescentVariant::RowStrict,
        DescentVariant::A,
        DescentVariant::ABar,
    ];

    pub fn flag(&self) -> &'static str {
        match self {
            DescentVariant::DualImmaculate => "di",
            DescentVariant::RowStrict => "rs",
            DescentVariant::A => "a",
            DescentVariant::ABar => "abar",
        }
    }
}

impl FromStr for DescentVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "di" => Ok(DescentVariant::DualImmaculate),
            "rs" => Ok(DescentVariant::RowStrict),
            "a" => Ok(DescentVariant::A),
            "abar" => Ok(DescentVariant::ABar),
            other => Err(Error::Parse(other.to_string())),
        }
    }
}

pub fn descent_set(t: &Tableau, v: DescentVariant) -> DescentSubset {
    let n = t.n();
    let mut elements = Vec::new();
    for i in 1..n {
        let (r1, _) = t.position(i);
        let (r2, _) = t.position(i + 1);
        let is_descent = match v {
            DescentVariant::DualImmaculate => r2 > r1,
            DescentVariant::RowStrict => r2 <= r1,
            DescentVariant::A => r2 < r1,
            DescentVariant::ABar => r2 >= r1,
        };
        if is_descent {
            elements.push(i);
        }
    }
    DescentSubset::new(n, elements).expect("descents lie in 1..n")
}

/// Membership flags for the tableau classes.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct TableauClassFlags {
    pub is_sit: bool,
    pub is_set: bool,
    pub is_sitstar: bool,
    pub in_nset: bool,
}

fn column_increasing(t: &Tableau, col: usize) -> bool {
    // Column entries are compared along the subsequence of rows long enough
    // to reach the column, in increasing row order.
    let mut prev: Option<usize> = None;
    for row in t.rows() {
        if row.len() > col {
            if let Some(p) = prev {
                if p >= row[col] {
                    return false;
                }
            }
            prev = Some(row[col]);
        }
    }
    true
}

pub fn classify(t: &Tableau) -> TableauClassFlags {
    let is_sit = column_increasing(t, 0);
    let width = t.rows().iter().map(|r| r.len()).max().unwrap_or(0);
    let is_set = (0..width).all(|c| column_increasing(t, c));
    let is_sitstar = is_sit && t.rows().iter().enumerate().all(|(i, r)| r[0] == i + 1);
    TableauClassFlags { is_sit, is_set, is_sitstar, in_nset: !is_set }
}

/// The eight standard-tableau families, all contained in the immaculate class.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TableauClass {
    Sit,
    Set,
    SitStar,
    NsetSit,
    SetSitStar,
    SetMinusSitStar,
    SitMinusSitStar,
    NsetSitStar,
}

impl TableauClass {
    pub const ALL: [TableauClass; 8] = [
        TableauClass::Sit,
        TableauClass::Set,
        TableauClass::SitStar,
        TableauClass::NsetSit,
        TableauClass::SetSitStar,
        TableauClass::SetMinusSitStar,
        TableauClass::SitMinusSitStar,
        TableauClass::NsetSitStar,
    ];

    pub fn matches(&self, f: TableauClassFlags) -> bool {
        match self {
            TableauClass::Sit => f.is_sit,
            TableauClass::Set => f.is_set,
            TableauClass::SitStar => f.is_sitstar,
            TableauClass::NsetSit => f.is_sit && f.in_nset,
            TableauClass::SetSitStar => f.is_set && f.is_sitstar,
            TableauClass::SetMinusSitStar => f.is_set && !f.is_sitstar,
            TableauClass::SitMinusSitStar => f.is_sit && !f.is_sitstar,
            TableauClass::NsetSitStar => f.is_sitstar && f.in_nset,
        }
    }

    pub fn flag(&self) -> &'static str {
        match self {
            TableauClass::Sit => "sit",
            TableauClass::Set => "set",
            TableauClass::SitStar => "sitstar",
            TableauClass::NsetSit => "nset",
            TableauClass::SetSitStar => "set-sitstar",
            TableauClass::SetMinusSitStar => "set-minus-sitstar",
            TableauClass::SitMinusSitStar => "sit-minus-sitstar",
            TableauClass::NsetSitStar => "nset-sitstar",
        }
    }
}

impl FromStr for TableauClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TableauClass::ALL
            .into_iter()
            .find(|c| c.flag() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// The four distinguished tableaux of a shape.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SpecialKind {
    S0,
    Srow,
    Scol,
    SrowStar,
}

impl SpecialKind {
    pub const ALL: [SpecialKind; 4] = [
        SpecialKind::S0,
        SpecialKind::Srow,
        SpecialKind::Scol,
        SpecialKind::SrowStar,
    ];

    pub fn flag(&self) -> &'static str {
        match self {
            SpecialKind::S0 => "s0",
            SpecialKind::Srow => "srow",
            SpecialKind::Scol => "scol",
            SpecialKind::SrowStar => "srowstar",
        }
    }
}

impl FromStr for SpecialKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SpecialKind::ALL
            .into_iter()
            .find(|k| k.flag() == s)
            .ok_or_else(|| Error::Parse(s.to_string()))
    }
}

pub fn special(alpha: &Composition, kind: SpecialKind) -> Tableau {
    let parts = alpha.parts();
    let l = parts.len();
    let mut rows: Vec<Vec<usize>> = parts.iter().map(|&p| vec![0; p]).collect();
    match kind {
        SpecialKind::S0 => {
            for (i, row) in rows.iter_mut().enumerate() {
                row[0] = i + 1;
            }
            let mut next = l + 1;
            for i in (0..l).rev() {
                for c in 1..parts[i] {
                    rows[i][c] = next;
                    next += 1;
                }
            }
        }
        SpecialKind::Srow => {
            let mut next = 1;
            for row in rows.iter_mut() {
                for cell in row.iter_mut() {
                    *cell = next;
                    next += 1;
                }
            }
        }
        SpecialKind::Scol => {
            let width = parts.iter().copied().max().unwrap();
            let mut next = 1;
            for c in 0..width {
                for i in 0..l {
                    if parts[i] > c {
                        rows[i][c] = next;
                        next += 1;
                    }
                }
            }
        }
        SpecialKind::SrowStar => {
            for (i, row) in rows.iter_mut().enumerate() {
                row[0] = i + 1;
            }
            let mut next = l + 1;
            for i in 0..l {
                for c in 1..parts[i] {
                    rows[i][c] = next;
                    next += 1;
                }
            }
        }
    }
    Tableau::new(rows).expect("distinguished fillings are standard")
}

/// All standard immaculate tableaux of the shape, sorted by reading word.
pub fn enumerate_sit(alpha: &Composition) -> Vec<Tableau> {
    let parts = alpha.parts();
    let l = parts.len();
    let n = alpha.n();
    let mut rows: Vec<Vec<usize>> = vec![Vec::new(); l];
    let mut out = Vec::new();

    fn rec(entry: usize, n: usize, parts: &[usize], rows: &mut Vec<Vec<usize>>, out: &mut Vec<Tableau>) {
        if entry > n {
            out.push(Tableau { rows: rows.clone() });
            return;
        }
        for i in 0..parts.len() {
            if rows[i].len() == parts[i] {
                continue;
            }
            // column 1 fills bottom to top, which forces the first column
            // to increase; rows increase because entries arrive in order.
            if rows[i].is_empty() && i > 0 && rows[i - 1].is_empty() {
                continue;
            }
            rows[i].push(entry);
            rec(entry + 1, n, parts, rows, out);
            rows[i].pop();
        }
    }
    rec(1, n, parts, &mut rows, &mut out);
    out.sort_by_key(|t| t.reading_word());
    out
}

/// Standard tableaux of the shape in the given class, sorted by reading word.
pub fn enumerate_standard(alpha: &Composition, class: TableauClass) -> Vec<Tableau> {
    enumerate_sit(alpha)
        .into_iter()
        .filter(|t| class.matches(classify(t)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    #[test]
    fn parse_rejects_malformed() {
        assert!("1,1;2,3".parse::<Tableau>().is_err()); // repeated entry
        assert!("2,1;3,4".parse::<Tableau>().is_err()); // row not increasing
        assert!("1,2;3,5".parse::<Tableau>().is_err()); // not a permutation
        assert!("1,2;;3".parse::<Tableau>().is_err());
        assert!("1,x".parse::<Tableau>().is_err());
    }

    #[test]
    fn display_roundtrip() {
        let s = "1,2,9;3,7;4,5,8,10;6";
        assert_eq!(t(s).to_string(), s);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_standard(&c(&[2, 2, 3]), TableauClass::Sit).len(), 24);
        assert_eq!(enumerate_standard(&c(&[2, 2, 3]), TableauClass::Set).len(), 5);
        assert_eq!(enumerate_standard(&c(&[2, 2, 3]), TableauClass::SitStar).len(), 12);
        let sit12 = enumerate_standard(&c(&[1, 2]), TableauClass::Sit);
        assert_eq!(sit12.len(), 1);
        assert_eq!(sit12[0], t("1;2,3"));
    }

    #[test]
    fn classify_examples() {
        let f = classify(&t("1,4;2,5;3,6,7"));
        assert!(f.is_set && f.is_sitstar && !f.in_nset);
        let f = classify(&t("1,2;3,4;5,6,7"));
        assert!(f.is_set && !f.is_sitstar);
        let f = classify(&t("1,7;2,6;3,4,5"));
        assert!(f.is_sitstar && f.in_nset && !f.is_set);
    }

    #[test]
    fn special_examples() {
        assert_eq!(special(&c(&[4, 3, 4, 2, 3]), SpecialKind::S0).to_string(), "1,14,15,16;2,12,13;3,9,10,11;4,8;5,6,7");
        assert_eq!(special(&c(&[4, 3, 4, 2, 3]), SpecialKind::Srow).to_string(), "1,2,3,4;5,6,7;8,9,10,11;12,13;14,15,16");
        assert_eq!(special(&c(&[3, 3, 2]), SpecialKind::SrowStar).to_string(), "1,4,5;2,6,7;3,8");
        assert_eq!(special(&c(&[2, 3, 2]), SpecialKind::Scol).to_string(), "1,4;2,5,7;3,6");
    }

    #[test]
    fn descent_set_examples() {
        let s = t("1,2,9;3,7;4,5,8,10;6");
        assert_eq!(descent_set(&s, DescentVariant::RowStrict).to_string(), "{1,4,6,8}");
        assert_eq!(descent_set(&s, DescentVariant::DualImmaculate).to_string(), "{2,3,5,7,9}");
        for alpha in [c(&[2, 2, 3]), c(&[3, 1, 2]), c(&[1, 2, 2])] {
            let srow = special(&alpha, SpecialKind::Srow);
            assert!(descent_set(&srow, DescentVariant::A).elements().is_empty());
            let all: Vec<usize> = (1..alpha.n()).collect();
            assert_eq!(descent_set(&srow, DescentVariant::ABar).elements(), &all[..]);
        }
    }

    #[test]
    fn reading_word_examples() {
        assert_eq!(t("1,3;2;4,5").reading_word(), vec![5, 4, 2, 3, 1]);
        assert_eq!(special(&c(&[2, 2, 3]), SpecialKind::Srow).reading_word(), vec![7, 6, 5, 4, 3, 2, 1]);
        assert_eq!(special(&c(&[2, 2, 3]), SpecialKind::S0).reading_word(), vec![5, 4, 3, 6, 2, 7, 1]);
    }

    #[test]
    fn ninv_examples() {
        assert_eq!(ninv(&[5, 4, 2, 3, 1]), 9);
        assert_eq!(ninv(&[1, 2, 3, 4]), 0);
        assert_eq!(ninv(&[5, 4, 3, 6, 2, 7, 1]), 13);
    }

    #[test]
    fn descent_variants_complement_and_nest() {
        use crate::compositions::enumerate_compositions;
        for n in 1..=7 {
            for alpha in enumerate_compositions(n).unwrap() {
                for t in enumerate_sit(&alpha) {
                    let di = descent_set(&t, DescentVariant::DualImmaculate);
                    let rs = descent_set(&t, DescentVariant::RowStrict);
                    let a = descent_set(&t, DescentVariant::A);
                    let abar = descent_set(&t, DescentVariant::ABar);
                    assert_eq!(di.complement(), rs);
                    assert_eq!(a.complement(), abar);
                    assert!(a.is_subset_of(&rs));
                    assert!(di.is_subset_of(&abar));
                }
            }
        }
    }

    fn multinomial(top: usize, bottom: &[usize]) -> usize {
        let mut num: u128 = 1;
        for k in 1..=top {
            num *= k as u128;
        }
        let mut den: u128 = 1;
        for &b in bottom {
            for k in 1..=b {
                den *= k as u128;
            }
        }
        (num / den) as usize
    }

    #[test]
    fn sitstar_cardinality_is_multinomial() {
        use crate::compositions::enumerate_compositions;
        for n in 1..=8 {
            for alpha in enumerate_compositions(n).unwrap() {
                let count = enumerate_standard(&alpha, TableauClass::SitStar).len();
                let bottom: Vec<usize> = alpha.parts().iter().map(|&p| p - 1).collect();
                assert_eq!(count, multinomial(n - alpha.len(), &bottom), "shape {alpha}");
            }
        }
    }

    #[test]
    fn hooks_have_a_single_tableau() {
        for (l, n) in [(1, 5), (3, 6), (4, 4), (2, 7)] {
            let mut parts = vec![1; l - 1];
            parts.push(n - l + 1);
            let alpha = c(&parts);
            assert!(alpha.is_hook());
            assert_eq!(enumerate_sit(&alpha).len(), 1);
            let s0 = special(&alpha, SpecialKind::S0);
            for kind in SpecialKind::ALL {
                assert_eq!(special(&alpha, kind), s0);
            }
        }
    }

    #[test]
    fn special_tableaux_classes() {
        use crate::compositions::enumerate_compositions;
        for n in 1..=7 {
            for alpha in enumerate_compositions(n).unwrap() {
                assert!(classify(&special(&alpha, SpecialKind::S0)).is_sitstar);
                assert!(classify(&special(&alpha, SpecialKind::Srow)).is_set);
                assert!(classify(&special(&alpha, SpecialKind::Scol)).is_set);
                let f = classify(&special(&alpha, SpecialKind::SrowStar));
                assert!(f.is_set && f.is_sitstar);
            }
        }
    }

    /// Hook-length product over the cells of a partition diagram.
    fn syt_count_hook_lengths(lambda: &Composition) -> usize {
        let parts = lambda.parts();
        let n = lambda.n();
        let mut den: u128 = 1;
        for (i, &p) in parts.iter().enumerate() {
            for j in 1..=p {
                let arm = p - j;
                let leg = parts[i + 1..].iter().filter(|&&q| q >= j).count();
                den *= (arm + leg + 1) as u128;
            }
        }
        let mut num: u128 = 1;
        for k in 1..=n {
            num *= k as u128;
        }
        (num / den) as usize
    }

    #[test]
    fn set_matches_standard_young_tableaux_on_partitions() {
        use crate::compositions::enumerate_compositions;
        for n in 1..=8 {
            for alpha in enumerate_compositions(n).unwrap() {
                if alpha.is_partition() {
                    assert_eq!(
                        enumerate_standard(&alpha, TableauClass::Set).len(),
                        syt_count_hook_lengths(&alpha),
                        "shape {alpha}"
                    );
                }
            }
        }
    }

    #[test]
    fn enumeration_is_sorted_by_reading_word() {
        let all = enumerate_sit(&c(&[2, 2, 3]));
        for w in all.windows(2) {
            assert!(w[0].reading_word() < w[1].reading_word());
        }
    }
}
