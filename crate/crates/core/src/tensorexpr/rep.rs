use std::sync::Arc;

use num_traits::Zero;

use super::sparse::SparseMatrix;
use crate::error::{Error, Result};
use crate::exactring::Rational;
use crate::liealg::{GenLabel, LieAlgebra, LieElement};

/// Matrix images of the basis of a Lie algebra.
#[derive(Clone, Debug)]
pub struct Representation {
    name: String,
    algebra: Arc<LieAlgebra>,
    dim: usize,
    images: Vec<SparseMatrix<Rational>>,
}

impl Representation {
    /// Checks ρ([x,y]) = [ρ(x), ρ(y)] on all basis pairs.
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<LieAlgebra>,
        images: Vec<SparseMatrix<Rational>>,
    ) -> Result<Self> {
        if images.len() != algebra.dim() || images.is_empty() {
            return Err(Error::ConstraintViolation("one image per basis element required".into()));
        }
        let dim = images[0].dim();
        if images.iter().any(|m| m.dim() != dim) {
            return Err(Error::ConstraintViolation("images of differing size".into()));
        }
        let rep = Representation { name: name.into(), algebra, dim, images };
        rep.check_homomorphism()?;
        Ok(rep)
    }

    /// The faithful matrix realization carried by the algebra (matrix units
    /// for sl(N)).
    pub fn defining(g: &Arc<LieAlgebra>) -> Result<Self> {
        let real = g.realization().ok_or_else(|| {
            Error::ConstraintViolation(format!("{} has no defining realization", g.name()))
        })?;
        let images = real
            .iter()
            .map(|m| {
                SparseMatrix::from_triplets(
                    m.len(),
                    m.iter().enumerate().flat_map(|(r, row)| {
                        row.iter()
                            .enumerate()
                            .filter(|(_, v)| !v.is_zero())
                            .map(move |(c, v)| (r, c, v.clone()))
                    }),
                )
            })
            .collect();
        Self::new("defining", g.clone(), images)
    }

    /// ρ(x) = ad(x) in the basis of `g`.
    pub fn adjoint(g: &Arc<LieAlgebra>) -> Result<Self> {
        let n = g.dim();
        let images = (0..n)
            .map(|i| {
                SparseMatrix::from_triplets(
                    n,
                    (0..n).flat_map(|j| {
                        g.basis_bracket(i, j).iter().map(move |(k, c)| (k, j, c.clone())).collect::<Vec<_>>()
                    }),
                )
            })
            .collect();
        Self::new("adjoint", g.clone(), images)
    }

    fn check_homomorphism(&self) -> Result<()> {
        let g = &self.algebra;
        for i in 0..g.dim() {
            for j in i + 1..g.dim() {
                let lhs = self.image(g.basis_bracket(i, j));
                let rhs = self.images[i].mul(&self.images[j]).sub(&self.images[j].mul(&self.images[i]));
                if lhs != rhs {
                    return Err(Error::ConstraintViolation(format!(
                        "representation fails on [{}, {}]",
                        g.label(i),
                        g.label(j)
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn algebra(&self) -> &Arc<LieAlgebra> {
        &self.algebra
    }

    pub fn basis_image(&self, i: usize) -> &SparseMatrix<Rational> {
        &self.images[i]
    }

    pub fn image(&self, x: &LieElement) -> SparseMatrix<Rational> {
        let mut m = SparseMatrix::zero(self.dim);
        for (i, c) in x.iter() {
            m = m.add(&self.images[i].scale(c));
        }
        m
    }

    pub fn image_label(&self, l: &GenLabel) -> Result<SparseMatrix<Rational>> {
        Ok(self.image(&self.algebra.element(l)?))
    }
}
