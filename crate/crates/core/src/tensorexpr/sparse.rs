//! Row-compressed sparse square matrices over an exact scalar ring.

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{Rational, Scalar};

/// Square matrix stored as rows of `(column, value)` pairs sorted by
/// column, with no explicit zeros.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseMatrix<S> {
    n: usize,
    rows: Vec<Vec<(u32, S)>>,
}

/// Above this fill ratio inversion switches to dense elimination.
pub const DENSE_THRESHOLD: f64 = 0.25;

/// Rows below this count are multiplied sequentially.
const PAR_ROWS: usize = 64;

impl<S: Scalar> SparseMatrix<S> {
    pub fn zero(n: usize) -> Self {
        SparseMatrix { n, rows: vec![Vec::new(); n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::scalar(n, S::one())
    }

    pub fn scalar(n: usize, c: S) -> Self {
        if c.is_zero() {
            return Self::zero(n);
        }
        SparseMatrix { n, rows: (0..n).map(|i| vec![(i as u32, c.clone())]).collect() }
    }

    /// Duplicate coordinates are summed.
    pub fn from_triplets(n: usize, entries: impl IntoIterator<Item = (usize, usize, S)>) -> Self {
        let mut rows: Vec<Vec<(u32, S)>> = vec![Vec::new(); n];
        for (r, c, v) in entries {
            assert!(r < n && c < n, "entry ({r},{c}) outside {n}x{n}");
            rows[r].push((c as u32, v));
        }
        for row in rows.iter_mut() {
            row.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(u32, S)> = Vec::with_capacity(row.len());
            for (c, v) in row.drain(..) {
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => lv.add_assign_ref(&v),
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            *row = merged;
        }
        SparseMatrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<(u32, S)>] {
        &self.rows
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, r)| {
            r.len() == 1 && r[0].0 as usize == i && r[0].1 == S::one()
        })
    }

    pub fn get(&self, r: usize, c: usize) -> S {
        match self.rows[r].binary_search_by_key(&(c as u32), |(k, _)| *k) {
            Ok(p) => self.rows[r][p].1.clone(),
            Err(_) => S::zero(),
        }
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, &S)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c as usize, v)))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> SparseMatrix<T> {
        let rows = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|(c, v)| (*c, f(v)))
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        SparseMatrix { n: self.n, rows }
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.n {
            t.add_assign_ref(&self.get(i, i));
        }
        t
    }

    fn combine(&self, o: &Self, sign_neg: bool) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| merge_rows(a, b, sign_neg))
            .collect();
        SparseMatrix { n: self.n, rows }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn scale(&self, c: &S) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        self.map(|v| v.mul_ref(c))
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        self.map(|v| v.scale(r))
    }

    pub fn neg(&self) -> Self {
        self.map(|v| v.neg_ref())
    }

    /// Gustavson row-by-row product with a dense accumulator per row.
    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n, "dimension mismatch");
        let n = self.n;
        let row_product = |acc: &mut Vec<Option<S>>, touched: &mut Vec<u32>, row: &[(u32, S)]| {
            for (k, a) in row {
                for (j, b) in &o.rows[*k as usize] {
                    let p = a.mul_ref(b);
                    match &mut acc[*j as usize] {
                        Some(x) => x.add_assign_ref(&p),
                        slot @ None => {
                            *slot = Some(p);
                            touched.push(*j);
                        }
                    }
                }
            }
            touched.sort_unstable();
            let mut out = Vec::with_capacity(touched.len());
            for j in touched.drain(..) {
                if let Some(v) = acc[j as usize].take() {
                    if !v.is_zero() {
                        out.push((j, v));
                    }
                }
            }
            out
        };
        let rows: Vec<Vec<(u32, S)>> = if n >= PAR_ROWS {
            self.rows
                .par_iter()
                .map_init(|| (vec![None; n], Vec::new()), |(acc, t), row| row_product(acc, t, row))
                .collect()
        } else {
            let mut acc = vec![None; n];
            let mut t = Vec::new();
            self.rows.iter().map(|row| row_product(&mut acc, &mut t, row)).collect()
        };
        SparseMatrix { n, rows }
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron(&self, o: &Self) -> Self {
        let m = o.n;
        let mut rows = Vec::with_capacity(self.n * m);
        for ra in &self.rows {
            for rb in &o.rows {
                let mut row = Vec::with_capacity(ra.len() * rb.len());
                for (ca, va) in ra {
                    for (cb, vb) in rb {
                        row.push((*ca * m as u32 + *cb, va.mul_ref(vb)));
                    }
                }
                row.retain(|(_, v): &(u32, S)| !v.is_zero());
                rows.push(row);
            }
        }
        SparseMatrix { n: self.n * m, rows }
    }

    /// `I_left ⊗ self ⊗ I_right` without materializing the identities.
    pub fn embed(&self, left: usize, right: usize) -> Self {
        let d = self.n;
        let n = left * d * right;
        let mut rows = Vec::with_capacity(n);
        for a in 0..left {
            for r in 0..d {
                for b in 0..right {
                    let row = self.rows[r]
                        .iter()
                        .map(|(c, v)| (((a * d + *c as usize) * right + b) as u32, v.clone()))
                        .collect();
                    rows.push(row);
                }
            }
        }
        SparseMatrix { n, rows }
    }

    /// Conjugation by the leg permutation sending tensor factor `l` to
    /// position `perm[l]` (0-based), each factor of dimension `d`.
    pub fn permute_legs(&self, d: usize, perm: &[usize]) -> Self {
        let k = perm.len();
        assert_eq!(d.pow(k as u32), self.n, "leg structure mismatch");
        let map: Vec<u32> = (0..self.n)
            .map(|idx| {
                let mut digits = vec![0usize; k];
                let mut x = idx;
                for l in (0..k).rev() {
                    digits[l] = x % d;
                    x /= d;
                }
                let mut out = vec![0usize; k];
                for l in 0..k {
                    out[perm[l]] = digits[l];
                }
                out.iter().fold(0usize, |acc, &dg| acc * d + dg) as u32
            })
            .collect();
        let mut rows: Vec<Vec<(u32, S)>> = vec![Vec::new(); self.n];
        for (r, row) in self.rows.iter().enumerate() {
            let mut nr: Vec<(u32, S)> = row.iter().map(|(c, v)| (map[*c as usize], v.clone())).collect();
            nr.sort_by_key(|(c, _)| *c);
            rows[map[r] as usize] = nr;
        }
        SparseMatrix { n: self.n, rows }
    }

    pub fn density(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        self.nnz() as f64 / (self.n as f64 * self.n as f64)
    }

    /// Exact inverse by Gauss–Jordan elimination; dense storage above
    /// [`DENSE_THRESHOLD`] fill.
    pub fn inverse(&self) -> Result<Self> {
        if self.density() > DENSE_THRESHOLD {
            self.inverse_dense()
        } else {
            self.inverse_sparse()
        }
    }

    pub fn inverse_dense(&self) -> Result<Self> {
        let n = self.n;
        let mut a: Vec<Vec<S>> = (0..n)
            .map(|r| {
                let mut row = vec![S::zero(); 2 * n];
                for (c, v) in &self.rows[r] {
                    row[*c as usize] = v.clone();
                }
                row[n + r] = S::one();
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&i| a[i][c].try_inv().is_ok()).ok_or(Error::Singular)?;
            a.swap(c, p);
            let inv = a[c][c].try_inv()?;
            for x in a[c].iter_mut() {
                *x = x.mul_ref(&inv);
            }
            let pivot = a[c].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == c || row[c].is_zero() {
                    continue;
                }
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    if !y.is_zero() {
                        *x = x.sub_ref(&f.mul_ref(y));
                    }
                }
            }
        }
        Ok(SparseMatrix::from_triplets(
            n,
            a.into_iter().enumerate().flat_map(|(r, row)| {
                row.into_iter().skip(n).enumerate().map(move |(c, v)| (r, c, v)).collect::<Vec<_>>()
            }),
        ))
    }

    pub fn inverse_sparse(&self) -> Result<Self> {
        let n = self.n;
        // augmented rows: columns n.. hold the identity block
        let mut a: Vec<Vec<(u32, S)>> = self
            .rows
            .iter()
            .enumerate()
            .map(|(r, row)| {
                let mut v = row.clone();
                v.push(((n + r) as u32, S::one()));
                v
            })
            .collect();
        let mut done = vec![false; n];
        let mut pivot_of_col = vec![usize::MAX; n];
        for c in 0..n {
            let cu = c as u32;
            let mut best: Option<usize> = None;
            for (i, row) in a.iter().enumerate() {
                if done[i] {
                    continue;
                }
                if let Ok(p) = row.binary_search_by_key(&cu, |(k, _)| *k) {
                    if row[p].1.try_inv().is_ok() && best.is_none_or(|b| a[b].len() > row.len()) {
                        best = Some(i);
                    }
                }
            }
            let p = best.ok_or(Error::Singular)?;
            done[p] = true;
            pivot_of_col[c] = p;
            let pos = a[p].binary_search_by_key(&cu, |(k, _)| *k).expect("pivot present");
            let inv = a[p][pos].1.try_inv()?;
            for (_, v) in a[p].iter_mut() {
                *v = v.mul_ref(&inv);
            }
            let pivot = a[p].clone();
            for (i, row) in a.iter_mut().enumerate() {
                if i == p {
                    continue;
                }
                if let Ok(q) = row.binary_search_by_key(&cu, |(k, _)| *k) {
                    let f = row[q].1.clone();
                    let scaled: Vec<(u32, S)> = pivot.iter().map(|(k, v)| (*k, v.mul_ref(&f))).collect();
                    *row = merge_rows(row, &scaled, true);
                }
            }
        }
        let rows = (0..n)
            .map(|c| {
                a[pivot_of_col[c]]
                    .iter()
                    .filter(|(k, _)| *k as usize >= n)
                    .map(|(k, v)| (*k - n as u32, v.clone()))
                    .collect()
            })
            .collect();
        Ok(SparseMatrix { n, rows })
    }

    /// Sparse triplet dump for debugging.
    pub fn to_json(&self) -> Value {
        json!({
            "dim": self.n,
            "entries": self
                .triplets()
                .map(|(r, c, v)| json!([r, c, v.to_json()]))
                .collect::<Vec<_>>(),
        })
    }
}

/// `a ± b` for sorted sparse rows.
fn merge_rows<S: Scalar>(a: &[(u32, S)], b: &[(u32, S)], sub: bool) -> Vec<(u32, S)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let take_a = j == b.len() || (i < a.len() && a[i].0 < b[j].0);
        let take_b = i == a.len() || (j < b.len() && b[j].0 < a[i].0);
        if take_a {
            out.push(a[i].clone());
            i += 1;
        } else if take_b {
            let v = if sub { b[j].1.neg_ref() } else { b[j].1.clone() };
            out.push((b[j].0, v));
            j += 1;
        } else {
            let v = if sub { a[i].1.sub_ref(&b[j].1) } else { a[i].1.add_ref(&b[j].1) };
            if !v.is_zero() {
                out.push((a[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, Jet};

    fn m(n: usize, e: &[(usize, usize, i64)]) -> SparseMatrix<Rational> {
        SparseMatrix::from_triplets(n, e.iter().map(|&(r, c, v)| (r, c, int(v))))
    }

    #[test]
    fn product_and_kron() {
        let a = m(2, &[(0, 1, 1)]);
        assert!(a.mul(&a).is_zero());
        let i2 = SparseMatrix::<Rational>::identity(2);
        assert_eq!(i2.kron(&a), a.embed(2, 1));
        assert_eq!(a.kron(&i2), a.embed(1, 2));
        assert_eq!(a.kron(&i2).nnz(), 2);
    }

    #[test]
    fn swap_is_involution() {
        let a = m(2, &[(0, 1, 1), (1, 1, 3)]);
        let b = m(2, &[(1, 0, 2)]);
        let ab = a.kron(&b);
        let swapped = ab.permute_legs(2, &[1, 0]);
        assert_eq!(swapped, b.kron(&a));
        assert_eq!(swapped.permute_legs(2, &[1, 0]), ab);
    }

    #[test]
    fn inverses_agree() {
        let a = m(3, &[(0, 0, 2), (0, 2, 1), (1, 1, 1), (2, 0, 1), (2, 2, 1), (1, 2, 5)]);
        let s = a.inverse_sparse().unwrap();
        let d = a.inverse_dense().unwrap();
        assert_eq!(s, d);
        assert!(a.mul(&s).is_identity());
        assert_eq!(m(2, &[(0, 0, 1), (1, 0, 1)]).inverse_sparse(), Err(Error::Singular));
    }

    #[test]
    fn jet_inverse_of_unipotent() {
        let a = SparseMatrix::<Jet<2>>::from_triplets(
            2,
            [(0, 0, Jet::from_ints(&[1, 1])), (0, 1, Jet::xi()), (1, 1, Jet::from_ints(&[1]))],
        );
        let ai = a.inverse().unwrap();
        assert!(a.mul(&ai).is_identity());
    }
}
