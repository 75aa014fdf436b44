use num_traits::{One, Zero};

use super::rational::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<Rational>>, cols: usize) -> Self {
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            entries.extend(r);
        }
        RationalMatrix { rows: n, cols, entries }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    /// `λ · self`, a row vector of length `cols`.
    pub fn left_mul(&self, lambda: &[Rational]) -> Vec<Rational> {
        assert_eq!(lambda.len(), self.rows, "left_mul dimension mismatch");
        let mut out = vec![Rational::zero(); self.cols];
        for (i, l) in lambda.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                if !a.is_zero() {
                    *o += l * a;
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        RowSpace::new(self).rank()
    }
}

impl std::ops::Index<(usize, usize)> for RationalMatrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for RationalMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.entries[i * self.cols + j]
    }
}

/// Reduced row echelon basis of a row space, for repeated membership tests.
#[derive(Clone, Debug)]
pub struct RowSpace {
    cols: usize,
    /// `(pivot column, row with 1 at the pivot and 0 at every other pivot)`
    basis: Vec<(usize, Vec<Rational>)>,
}

impl RowSpace {
    pub fn new(m: &RationalMatrix) -> Self {
        let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let pivots = rref(&mut rows, m.cols());
        let basis = pivots.into_iter().enumerate().map(|(r, p)| (p, rows[r].clone())).collect();
        RowSpace { cols: m.cols(), basis }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.cols, "row space membership dimension mismatch");
        let mut v = v.to_vec();
        for (p, row) in &self.basis {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x -= &f * r;
                }
            }
        }
        v.iter().all(Zero::is_zero)
    }
}

/// In-place reduced row echelon form restricted to the first `ncols`
/// columns, first-nonzero pivoting. Returns the pivot columns, one per
/// leading nonzero row.
fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x *= &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *x -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Finds `λ` with `λ · system = target` by exact elimination on the
/// transposed system, or `None` when `target` is outside the row space.
///
/// Free unknowns are set to zero, so the answer is deterministic for a given
/// row order. Panics when `target.len() != system.cols()`.
pub fn solve_membership(system: &RationalMatrix, target: &[Rational]) -> Option<Vec<Rational>> {
    assert_eq!(target.len(), system.cols(), "target length must equal system.cols");
    let n = system.rows();
    // augmented [systemᵀ | target]
    let mut aug: Vec<Vec<Rational>> = (0..system.cols())
        .map(|j| {
            let mut row: Vec<Rational> = (0..n).map(|i| system[(i, j)].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let pivots = rref(&mut aug, n);
    if aug[pivots.len()..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    let mut lambda = vec![Rational::zero(); n];
    for (r, &c) in pivots.iter().enumerate() {
        lambda[c] = aug[r][n].clone();
    }
    Some(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use proptest::prelude::*;

    fn m(rows: &[&[i64]]) -> RationalMatrix {
        let cols = rows.first().map_or(0, |r| r.len());
        RationalMatrix::from_rows(
            rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(),
            cols,
        )
    }

    #[test]
    fn identity_case() {
        let l = solve_membership(&RationalMatrix::identity(1), &[rat(1, 1)]).unwrap();
        assert_eq!(l, vec![rat(1, 1)]);
    }

    #[test]
    fn two_by_two() {
        let l = solve_membership(&m(&[&[1, 0], &[1, 1]]), &[rat(0, 1), rat(1, 1)]).unwrap();
        assert_eq!(l, vec![rat(-1, 1), rat(1, 1)]);
    }

    #[test]
    fn outside_row_space() {
        assert!(solve_membership(&m(&[&[1, 1], &[2, 2]]), &[rat(1, 1), rat(0, 1)]).is_none());
        let rs = RowSpace::new(&m(&[&[1, 1], &[2, 2]]));
        assert_eq!(rs.rank(), 1);
        assert!(rs.contains(&[rat(3, 1), rat(3, 1)]));
        assert!(!rs.contains(&[rat(1, 1), rat(0, 1)]));
    }

    #[test]
    #[should_panic]
    fn dimension_mismatch_panics() {
        solve_membership(&RationalMatrix::identity(2), &[rat(1, 1)]);
    }

    #[test]
    fn empty_system() {
        let sys = RationalMatrix::zeros(0, 2);
        assert!(solve_membership(&sys, &[rat(0, 1), rat(1, 1)]).is_none());
        assert_eq!(solve_membership(&sys, &[rat(0, 1), rat(0, 1)]), Some(vec![]));
    }

    fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
        (1usize..5, 1usize..5).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(-3i64..4, c), r)
        })
    }

    proptest! {
        #[test]
        fn solutions_satisfy_system(rows in small_matrix(), w in proptest::collection::vec(-3i64..4, 5)) {
            let cols = rows[0].len();
            let a = RationalMatrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(), cols);
            // a target inside the row space
            let lam: Vec<Rational> = (0..a.rows()).map(|i| rat(w[i % w.len()], 1)).collect();
            let target = a.left_mul(&lam);
            let sol = solve_membership(&a, &target).expect("target built from rows");
            prop_assert_eq!(a.left_mul(&sol), target.clone());
            prop_assert!(RowSpace::new(&a).contains(&target));
        }

        #[test]
        fn rank_bounded_and_transpose_invariant(rows in small_matrix()) {
            let cols = rows[0].len();
            let a = RationalMatrix::from_rows(
                rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect(), cols);
            let r = a.rank();
            prop_assert!(r <= a.rows().min(a.cols()));
            prop_assert_eq!(r, a.transpose().rank());
        }
    }
}
