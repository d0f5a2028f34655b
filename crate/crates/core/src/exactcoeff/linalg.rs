use super::{CoeffError, RatFuncT};

/// Dense matrix over `Q(t)`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Vec<RatFuncT>>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![vec![RatFuncT::zero(); cols]; rows],
        }
    }

    pub fn from_rows(data: Vec<Vec<RatFuncT>>) -> Result<Self, CoeffError> {
        let cols = data.first().map_or(0, Vec::len);
        if data.iter().any(|r| r.len() != cols) {
            return Err(CoeffError::Dimension("ragged rows".into()));
        }
        Ok(Self {
            rows: data.len(),
            cols,
            data,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &RatFuncT {
        &self.data[r][c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: RatFuncT) {
        self.data[r][c] = v;
    }

    pub fn row(&self, r: usize) -> &[RatFuncT] {
        &self.data[r]
    }

    pub fn mul_vec(&self, x: &[RatFuncT]) -> Vec<RatFuncT> {
        self.data
            .iter()
            .map(|row| {
                row.iter()
                    .zip(x)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(RatFuncT::zero(), |acc, (a, b)| acc.add(&a.mul(b)))
            })
            .collect()
    }

    /// Reduced row echelon form in place; returns pivot columns.
    ///
    /// Pivot rule: leftmost column with a nonzero entry at or below the
    /// current row, taking the lowest such row index.
    fn rref_in_place(&mut self, limit_cols: usize) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit_cols {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| !self.data[i][c].is_zero()) else {
                continue;
            };
            self.data.swap(r, pr);
            let inv = self.data[r][c].recip().expect("pivot is nonzero");
            let support: Vec<usize> = (c..self.cols)
                .filter(|&k| !self.data[r][k].is_zero())
                .collect();
            for &k in &support {
                self.data[r][k] = self.data[r][k].mul(&inv);
            }
            let pivot_row = self.data[r].clone();
            for i in 0..self.rows {
                if i == r || self.data[i][c].is_zero() {
                    continue;
                }
                let f = self.data[i][c].clone();
                for &k in &support {
                    let delta = f.mul(&pivot_row[k]);
                    self.data[i][k] = self.data[i][k].sub(&delta);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let p = m.rref_in_place(m.cols);
        (m, p)
    }
}

/// Outcome of [`solve_linear`]; inconsistency is a value, not an error.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinearSolution {
    /// A particular solution with every free variable set to zero.
    Solution(Vec<RatFuncT>),
    /// Basis of the kernel, one vector per free column.
    Nullspace(Vec<Vec<RatFuncT>>),
    Inconsistent,
}

/// Solves `A x = b`, or computes the kernel of `A` when `b` is `None`.
pub fn solve_linear(a: &Matrix, b: Option<&[RatFuncT]>) -> Result<LinearSolution, CoeffError> {
    match b {
        None => Ok(LinearSolution::Nullspace(nullspace(a))),
        Some(b) => {
            if b.len() != a.rows {
                return Err(CoeffError::Dimension(format!(
                    "matrix has {} rows but right-hand side has {} entries",
                    a.rows,
                    b.len()
                )));
            }
            let mut aug = Matrix::zeros(a.rows, a.cols + 1);
            for (i, row) in a.data.iter().enumerate() {
                aug.data[i][..a.cols].clone_from_slice(row);
                aug.data[i][a.cols] = b[i].clone();
            }
            let pivots = aug.rref_in_place(a.cols);
            let rank = pivots.len();
            if (rank..aug.rows).any(|i| !aug.data[i][a.cols].is_zero()) {
                return Ok(LinearSolution::Inconsistent);
            }
            let mut x = vec![RatFuncT::zero(); a.cols];
            for (i, &c) in pivots.iter().enumerate() {
                x[c] = aug.data[i][a.cols].clone();
            }
            Ok(LinearSolution::Solution(x))
        }
    }
}

/// Kernel basis in echelon-complement form: for each free column `f`, the
/// vector with 1 at `f`, 0 at the other free columns, and the negated
/// reduced entries at the pivot columns.
pub fn nullspace(a: &Matrix) -> Vec<Vec<RatFuncT>> {
    let (r, pivots) = a.rref();
    let mut is_pivot = vec![false; a.cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..a.cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![RatFuncT::zero(); a.cols];
            v[f] = RatFuncT::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.data[i][f].neg();
            }
            v
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::LaurentT;

    fn lt(k: i64) -> RatFuncT {
        RatFuncT::from(LaurentT::t_pow(k))
    }

    #[test]
    fn identity_solve() {
        let a = Matrix::from_rows(vec![
            vec![RatFuncT::one(), RatFuncT::zero()],
            vec![RatFuncT::zero(), RatFuncT::one()],
        ])
        .unwrap();
        let b = vec![RatFuncT::one(), lt(1)];
        assert_eq!(
            solve_linear(&a, Some(&b)).unwrap(),
            LinearSolution::Solution(b.clone())
        );
    }

    #[test]
    fn rank_one_kernel() {
        let a = Matrix::from_rows(vec![vec![RatFuncT::one(), lt(1)], vec![lt(-1), RatFuncT::one()]])
            .unwrap();
        let LinearSolution::Nullspace(ns) = solve_linear(&a, None).unwrap() else {
            panic!("expected kernel");
        };
        assert_eq!(ns.len(), 1);
        // proportional to (t, -1)
        let v = &ns[0];
        let ratio = v[0].div(&lt(1)).unwrap();
        assert_eq!(v[1], ratio.neg());
        assert!(a.mul_vec(v).iter().all(RatFuncT::is_zero));
    }

    #[test]
    fn inconsistent_is_a_value() {
        let a = Matrix::from_rows(vec![vec![RatFuncT::one()], vec![RatFuncT::zero()]]).unwrap();
        let b = vec![RatFuncT::zero(), RatFuncT::one()];
        assert_eq!(solve_linear(&a, Some(&b)).unwrap(), LinearSolution::Inconsistent);
    }

    #[test]
    fn dimension_mismatch() {
        let a = Matrix::zeros(2, 2);
        assert!(solve_linear(&a, Some(&[RatFuncT::one()])).is_err());
    }
}
