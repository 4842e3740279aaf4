//! Dense exact linear algebra over the rationals (small matrices: Gram
//! matrices, cochain differentials, coordinate solves).

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactring::Rational;

pub type DenseMatrix = Vec<Vec<Rational>>;

pub fn zeros(rows: usize, cols: usize) -> DenseMatrix {
    vec![vec![Rational::zero(); cols]; rows]
}

pub fn identity(n: usize) -> DenseMatrix {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Rational::one();
    }
    m
}

pub fn matmul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let cols = b.first().map_or(0, Vec::len);
    let mut c = zeros(a.len(), cols);
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    c[i][j] += aik * bkj;
                }
            }
        }
    }
    c
}

pub fn transpose(a: &DenseMatrix) -> DenseMatrix {
    let cols = a.first().map_or(0, Vec::len);
    (0..cols).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

/// Reduced row echelon form in place; returns pivot columns.
pub fn rref(m: &mut DenseMatrix) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &DenseMatrix) -> usize {
    let mut w = m.clone();
    rref(&mut w).len()
}

pub fn det(m: &DenseMatrix) -> Rational {
    let n = m.len();
    let mut a = m.clone();
    let mut d = Rational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return Rational::zero();
        };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= &a[c][c];
        let inv = a[c][c].recip();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = &a[i][c] * &inv;
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

pub fn inverse(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.len();
    let mut aug: DenseMatrix = m
        .iter()
        .zip(identity(n))
        .map(|(r, e)| r.iter().cloned().chain(e).collect())
        .collect();
    let piv = rref(&mut aug);
    if piv.len() < n || piv.iter().enumerate().any(|(i, &c)| i != c) {
        return Err(Error::Singular);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Basis of the right nullspace `{x : m x = 0}`.
pub fn nullspace(m: &DenseMatrix, cols: usize) -> Vec<Vec<Rational>> {
    let mut w = m.clone();
    let piv = rref(&mut w);
    let free: Vec<usize> = (0..cols).filter(|c| !piv.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); cols];
            v[f] = Rational::one();
            for (r, &pc) in piv.iter().enumerate() {
                v[pc] = -w[r][f].clone();
            }
            v
        })
        .collect()
}

/// Incrementally maintained reduced echelon basis of a subspace of `Q^dim`.
/// The stored rows depend only on the subspace, never on insertion order.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    dim: usize,
    rows: Vec<Vec<Rational>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Rows sorted by pivot column.
    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.rows
    }

    pub fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut w = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[Rational]) -> bool {
        self.reduce(v).iter().all(Zero::is_zero)
    }

    /// Returns true if `v` enlarged the span.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let mut w = self.reduce(v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].recip();
        for x in w.iter_mut() {
            *x *= &inv;
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, w);
        true
    }
}

/// Expresses vectors in a fixed (not necessarily echelon) basis.
#[derive(Clone, Debug)]
pub struct Coordinates {
    dim: usize,
    n: usize,
    /// rref of `[basis^T | I]`-style tracking: rows are (reduced vector, combination).
    rows: Vec<(Vec<Rational>, Vec<Rational>)>,
    pivots: Vec<usize>,
}

impl Coordinates {
    pub fn new(basis: &[Vec<Rational>], dim: usize) -> Result<Self> {
        let n = basis.len();
        let mut c = Coordinates { dim, n, rows: Vec::new(), pivots: Vec::new() };
        for (k, b) in basis.iter().enumerate() {
            let mut comb = vec![Rational::zero(); n];
            comb[k] = Rational::one();
            let (w, comb) = c.reduce_tracked(b.clone(), comb);
            let Some(p) = w.iter().position(|x| !x.is_zero()) else {
                return Err(Error::BasisMismatch(format!("basis vector {k} is linearly dependent")));
            };
            let inv = w[p].recip();
            let w: Vec<Rational> = w.into_iter().map(|x| x * &inv).collect();
            let comb: Vec<Rational> = comb.into_iter().map(|x| x * &inv).collect();
            c.rows.push((w, comb));
            c.pivots.push(p);
        }
        Ok(c)
    }

    fn reduce_tracked(
        &self,
        mut w: Vec<Rational>,
        mut comb: Vec<Rational>,
    ) -> (Vec<Rational>, Vec<Rational>) {
        for ((row, rc), &p) in self.rows.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, y) in w.iter_mut().zip(row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            for (x, y) in comb.iter_mut().zip(rc) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        (w, comb)
    }

    /// Coefficients `c` with `v = Σ c_k basis_k`, or `None` outside the span.
    pub fn solve(&self, v: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(v.len(), self.dim);
        let (w, comb) = self.reduce_tracked(v.to_vec(), vec![Rational::zero(); self.n]);
        if w.iter().any(|x| !x.is_zero()) {
            return None;
        }
        Some(comb.into_iter().map(|x| -x).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, q};

    fn m(rows: &[&[i64]]) -> DenseMatrix {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn det_and_inverse() {
        let a = m(&[&[2, 1], &[7, 4]]);
        assert_eq!(det(&a), int(1));
        let ai = inverse(&a).unwrap();
        assert_eq!(matmul(&a, &ai), identity(2));
        assert_eq!(inverse(&m(&[&[1, 2], &[2, 4]])), Err(Error::Singular));
        assert_eq!(det(&m(&[&[0, 1], &[1, 0]])), int(-1));
    }

    #[test]
    fn nullspace_is_annihilated() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        let ns = nullspace(&a, 3);
        assert_eq!(ns.len(), 2);
        for v in ns {
            let col: DenseMatrix = v.iter().map(|x| vec![x.clone()]).collect();
            assert!(matmul(&a, &col).iter().all(|r| r[0].is_zero()));
        }
    }

    #[test]
    fn echelon_order_independent() {
        let vs = [vec![int(1), int(1), int(0)], vec![int(0), int(1), int(1)], vec![int(1), int(2), int(1)]];
        let mut a = Echelon::new(3);
        let mut b = Echelon::new(3);
        for v in &vs {
            a.insert(v);
        }
        for v in vs.iter().rev() {
            b.insert(v);
        }
        assert_eq!(a.rows(), b.rows());
        assert_eq!(a.len(), 2);
    }

    #[test]
    fn coordinates_solve() {
        let basis = vec![vec![int(1), int(1)], vec![int(1), int(-1)]];
        let c = Coordinates::new(&basis, 2).unwrap();
        assert_eq!(c.solve(&[int(3), int(1)]).unwrap(), vec![int(2), int(1)]);
        assert_eq!(c.solve(&[int(0), int(1)]).unwrap(), vec![q(1, 2), q(-1, 2)]);
        let c1 = Coordinates::new(&basis[..1], 2).unwrap();
        assert!(c1.solve(&[int(0), int(1)]).is_none());
    }
}
