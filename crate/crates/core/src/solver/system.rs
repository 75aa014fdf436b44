use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Rational, RationalMatrix};
use crate::expansion::{expand_lz, reduce_even, PiReducedCombination, ZetaMonomial};
use crate::partitions::{enumerate_partitions, Parity, PartitionFilter};

/// How lower-weight odd monomials are treated.
///
/// `Optimistic` takes every odd monomial of weight below `N` as already
/// settled and moves it to the known side. `Strict` assumes nothing: every
/// `Lz(a',b')` with `a'+b' ≤ N` of the same parity, lifted by `π^{N−a'−b'}`,
/// becomes a row, and every odd monomial of weight `≤ N` a column.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    #[default]
    Optimistic,
    Strict,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Optimistic => "optimistic",
            Mode::Strict => "strict",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "optimistic" => Ok(Mode::Optimistic),
            "strict" => Ok(Mode::Strict),
            _ => Err(Error::Parse { what: "mode", input: s.into(), reason: "expected optimistic or strict".into() }),
        }
    }
}

/// One equation `π^lift · Lz(a,b) = Σ_j coeffs[j] · π^{N−wt(col_j)} col_j + known`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LzRow {
    pub a: u32,
    pub b: u32,
    pub lift: u32,
    pub coeffs: Vec<Rational>,
    pub known: PiReducedCombination,
}

#[derive(Clone, Debug)]
pub struct LinearSystem {
    pub weight: u32,
    pub mode: Mode,
    pub columns: Vec<ZetaMonomial>,
    pub rows: Vec<LzRow>,
}

impl LinearSystem {
    /// Rows × columns coefficient matrix.
    pub fn matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(self.rows.iter().map(|r| r.coeffs.clone()).collect(), self.columns.len())
    }

    pub fn column_index(&self, m: &ZetaMonomial) -> Option<usize> {
        self.columns.iter().position(|c| c == m)
    }

    pub fn unit_vector(&self, m: &ZetaMonomial) -> Option<Vec<Rational>> {
        let i = self.column_index(m)?;
        let mut v = vec![Rational::zero(); self.columns.len()];
        v[i] = Rational::from_integer(1.into());
        Some(v)
    }
}

/// `reduce_even(expand_lz(a,b))` for `a ≥ b`, memoized process-wide.
pub fn reduced_lz(a: u32, b: u32) -> Arc<PiReducedCombination> {
    type Memo = Mutex<HashMap<(u32, u32), Arc<PiReducedCombination>>>;
    static MEMO: OnceLock<Memo> = OnceLock::new();
    let key = (a.max(b), a.min(b));
    let memo = MEMO.get_or_init(Default::default);
    if let Some(v) = memo.lock().expect("memo poisoned").get(&key) {
        return v.clone();
    }
    let v = Arc::new(reduce_even(&expand_lz(key.0, key.1)));
    memo.lock().expect("memo poisoned").entry(key).or_insert(v).clone()
}

/// Odd-only monomials with parts ≥ 3 of weight exactly `w`, in canonical
/// partition order.
pub fn odd_monomials(w: u32) -> Vec<ZetaMonomial> {
    let filter = PartitionFilter::new(3).with_parity(Parity::Odd);
    enumerate_partitions(w, &filter).iter().map(ZetaMonomial::from_partition).collect()
}

/// `(a, b, lift)` for the rows of each mode.
fn row_specs(n: u32, mode: Mode) -> Vec<(u32, u32, u32)> {
    let weights: Vec<u32> = match mode {
        Mode::Optimistic => vec![n],
        Mode::Strict => (2..=n).filter(|w| (n - w).is_multiple_of(2)).collect(),
    };
    weights.into_iter().flat_map(|w| (1..=w / 2).map(move |b| (w - b, b, n - w))).collect()
}

fn default_columns(n: u32, mode: Mode) -> Vec<ZetaMonomial> {
    match mode {
        Mode::Optimistic => odd_monomials(n),
        Mode::Strict => (3..=n).rev().filter(|w| (n - w).is_multiple_of(2)).flat_map(odd_monomials).collect(),
    }
}

pub(crate) fn build_with_columns(n: u32, mode: Mode, columns: Vec<ZetaMonomial>) -> LinearSystem {
    let index: BTreeMap<&ZetaMonomial, usize> = columns.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut rows = Vec::new();
    for (a, b, lift) in row_specs(n, mode) {
        let reduced = reduced_lz(a, b).lift(lift);
        let mut coeffs = vec![Rational::zero(); columns.len()];
        let mut known = PiReducedCombination::new(n);
        for (m, s) in reduced.terms() {
            match index.get(m) {
                Some(&j) => coeffs[j] = s.coeff().clone(),
                None => known.add_term(m.clone(), s.coeff().clone()).expect("homogeneous row"),
            }
        }
        if coeffs.iter().any(|c| !c.is_zero()) {
            rows.push(LzRow { a, b, lift, coeffs, known });
        }
    }
    LinearSystem { weight: n, mode, columns, rows }
}

/// The weight-`n` system. Column entries are rational because each column
/// absorbs its fixed factor `π^{n−wt}`; rows touching no column are dropped.
pub fn build_system(n: u32, mode: Mode) -> Result<LinearSystem> {
    if n < 3 {
        return Err(Error::invalid(format!("systems start at weight 3, got {n}")));
    }
    Ok(build_with_columns(n, mode, default_columns(n, mode)))
}
