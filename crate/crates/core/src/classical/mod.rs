//! Classical r-matrices as bivectors over a Lie algebra, their
//! semiclassical origin in twists, the classical Yang–Baxter equation,
//! carrier subalgebras and Frobenius forms.
//!
//! Wedge convention: `x∧y = x⊗y − y⊗x` as a tensor. When a bivector is
//! evaluated against a twist ([`Bivector::eval`]) it is realized with the
//! opposite orientation `y⊗x − x⊗y`, which is the orientation in which the
//! ξ¹ coefficient of `R = F_21 F^{-1}` reproduces the printed r-matrices
//! (e.g. `F = exp(ξ H⊗E)` gives `r = H∧E`).

mod dual;
mod forms;
mod formulas;
mod jbcarrier;

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{fmt_rational, Jet, Rational};
use crate::hopfverify::r_matrix;
use crate::liealg::{subalgebra_closure, LieAlgebra, LieElement};
use crate::linalg::{Coordinates, DenseMatrix, Echelon};
use crate::report::VerificationReport;
use crate::tensorexpr::{Representation, TensorExpr, TensorOp};
use crate::twistlib::ChainSpec;

pub use dual::{dual_bracket, m_algebra, printed_l_j_perp, printed_l_r, DualBracket};
pub use forms::{cocycle_check, peripheric_borel_basis, frobenius_check, frobenius_check_via, omega_form, TwoForm, OMEGA_FAMILIES};
pub use formulas::{r_formula, Params, R_FAMILIES};
pub use jbcarrier::{alpha, alpha_scalings, jb_carrier_basis, jb_carrier_dim, phi_map, PhiMap};

/// Σ c·x∧y, stored canonically as coefficients of `e_i∧e_j`, i < j, over
/// the basis of the ambient algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bivector {
    dim: usize,
    coeffs: BTreeMap<(usize, usize), Rational>,
}

impl Bivector {
    pub fn zero(dim: usize) -> Self {
        Bivector { dim, coeffs: BTreeMap::new() }
    }

    pub fn from_terms(dim: usize, terms: &[(LieElement, LieElement, Rational)]) -> Self {
        let mut r = Self::zero(dim);
        for (x, y, c) in terms {
            r.add_wedge(x, y, c);
        }
        r
    }

    /// `self += c·x∧y`.
    pub fn add_wedge(&mut self, x: &LieElement, y: &LieElement, c: &Rational) {
        if c.is_zero() {
            return;
        }
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                if i == j {
                    continue;
                }
                let v = c * a * b;
                let (key, v) = if i < j { ((i, j), v) } else { ((j, i), -v) };
                let slot = self.coeffs.entry(key).or_insert_with(Rational::zero);
                *slot += v;
                if slot.is_zero() {
                    self.coeffs.remove(&key);
                }
            }
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Canonical terms `(e_i, e_j, c)` with i < j, ordered by basis index.
    pub fn terms(&self) -> Vec<(LieElement, LieElement, Rational)> {
        self.coeffs.iter().map(|(&(i, j), c)| (LieElement::unit(i), LieElement::unit(j), c.clone())).collect()
    }

    pub fn coeffs(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.coeffs
    }

    pub fn add(&self, o: &Bivector) -> Bivector {
        let mut r = self.clone();
        for (&(i, j), c) in &o.coeffs {
            r.add_wedge(&LieElement::unit(i), &LieElement::unit(j), c);
        }
        r
    }

    pub fn scale(&self, s: &Rational) -> Bivector {
        if s.is_zero() {
            return Self::zero(self.dim);
        }
        Bivector { dim: self.dim, coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * s)).collect() }
    }

    /// The antisymmetric matrix T with `r = Σ T_ab e_a⊗e_b`.
    pub fn tensor(&self) -> DenseMatrix {
        let mut t = vec![vec![Rational::zero(); self.dim]; self.dim];
        for (&(i, j), c) in &self.coeffs {
            t[i][j] = c.clone();
            t[j][i] = -c.clone();
        }
        t
    }

    /// Echelon basis of the subspace {(ξ⊗id)(r)}: the smallest space V
    /// with r ∈ V∧V.
    pub fn support(&self) -> Vec<LieElement> {
        let mut ech = Echelon::new(self.dim);
        for row in self.tensor() {
            ech.insert(&row);
        }
        ech.rows().iter().map(|r| LieElement::from_dense(r)).collect()
    }

    /// Coefficient matrix of `r` over `basis` (a basis of a subspace
    /// containing the support): `r = Σ R_ab b_a⊗b_b`.
    pub fn matrix_in(&self, basis: &[LieElement]) -> Result<DenseMatrix> {
        let n = self.dim;
        let k = basis.len();
        let dense: Vec<Vec<Rational>> = basis.iter().map(|x| x.to_dense(n)).collect();
        let coords = Coordinates::new(&dense, n)?;
        let outside = || Error::BasisMismatch("bivector has a leg outside the given basis".into());
        // T = Bᵀ R B; rows of T give U = Bᵀ R, then columns of U give R.
        let t = self.tensor();
        let mut u = vec![vec![Rational::zero(); k]; n];
        for (i, row) in t.iter().enumerate() {
            u[i] = coords.solve(row).ok_or_else(outside)?;
        }
        let mut r = vec![vec![Rational::zero(); k]; k];
        for b in 0..k {
            let col: Vec<Rational> = (0..n).map(|i| u[i][b].clone()).collect();
            let c = coords.solve(&col).ok_or_else(outside)?;
            for a in 0..k {
                r[a][b] = c[a].clone();
            }
        }
        Ok(r)
    }

    /// Inverse of [`Bivector::matrix_in`]: the bivector Σ_{a<b} M_ab e_a∧e_b
    /// of an antisymmetric matrix.
    pub fn from_matrix(m: &DenseMatrix) -> Bivector {
        let mut r = Self::zero(m.len());
        for (a, row) in m.iter().enumerate() {
            for (b, c) in row.iter().enumerate().skip(a + 1) {
                r.add_wedge(&LieElement::unit(a), &LieElement::unit(b), c);
            }
        }
        r
    }

    /// The same bivector written over a subalgebra basis given by its
    /// elements in the ambient algebra.
    pub fn restrict(&self, basis: &[LieElement]) -> Result<Bivector> {
        Ok(Self::from_matrix(&self.matrix_in(basis)?))
    }

    /// ρ⊗ρ image in the R-matrix orientation `x∧y ↦ ρ(y)⊗ρ(x) − ρ(x)⊗ρ(y)`.
    pub fn eval(&self, rep: &Representation) -> TensorOp<Rational> {
        let d = rep.dim();
        let mut m = crate::tensorexpr::SparseMatrix::zero(d * d);
        for (&(i, j), c) in &self.coeffs {
            let (a, b) = (rep.basis_image(i), rep.basis_image(j));
            let term = b.kron(a).sub(&a.kron(b)).scale(c);
            m = m.add(&term);
        }
        TensorOp { matrix: m, legs: 2, leg_dim: d, rep: rep.name().to_string() }
    }

    /// Inverse of [`Bivector::eval`] in a faithful representation: reads
    /// the coefficients back off a two-leg operator. Fails with
    /// `BasisMismatch` when the operator is not in the image of g∧g.
    pub fn from_op(op: &TensorOp<Rational>, rep: &Representation) -> Result<Bivector> {
        let (n, d) = (rep.dim(), rep.algebra().dim());
        if op.legs != 2 || op.leg_dim != n {
            return Err(Error::BasisMismatch("expected a two-leg operator on rep⊗rep".into()));
        }
        let vecs: Vec<Vec<Rational>> = (0..d)
            .map(|a| {
                let m = rep.basis_image(a);
                (0..n * n).map(|k| m.get(k / n, k % n)).collect()
            })
            .collect();
        let coords = Coordinates::new(&vecs, n * n)?;
        let outside = || Error::BasisMismatch("operator is not in ρ(g)⊗ρ(g)".into());
        // op = Σ C_ab ρ(e_a)⊗ρ(e_b), reshaped as M = V C Vᵀ
        let m = |p: usize, q: usize| {
            let (pa, ca, pb, cb) = (p / n, p % n, q / n, q % n);
            op.matrix.get(pa * n + pb, ca * n + cb)
        };
        let mut u = vec![Vec::new(); n * n];
        for (k, uk) in u.iter_mut().enumerate() {
            let col: Vec<Rational> = (0..n * n).map(|p| m(p, k)).collect();
            *uk = coords.solve(&col).ok_or_else(outside)?;
        }
        let mut r = Self::zero(d);
        for a in 0..d {
            let row: Vec<Rational> = (0..n * n).map(|k| u[k][a].clone()).collect();
            let c = coords.solve(&row).ok_or_else(outside)?;
            for (b, cab) in c.iter().enumerate() {
                if b > a {
                    // ρ(y)⊗ρ(x) − ρ(x)⊗ρ(y) for x∧y: C_ab = −coeff(a∧b)
                    r.add_wedge(&LieElement::unit(a), &LieElement::unit(b), &-cab.clone());
                } else if b == a && !cab.is_zero() {
                    return Err(Error::BasisMismatch("operator has a symmetric part".into()));
                }
            }
        }
        if r.eval(rep).residual_support(op) != 0 {
            return Err(Error::BasisMismatch("operator has a symmetric part".into()));
        }
        Ok(r)
    }

    pub fn show(&self, g: &LieAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.coeffs
            .iter()
            .map(|(&(i, j), c)| {
                let w = format!("{}∧{}", g.label(i), g.label(j));
                if c.is_one() {
                    w
                } else {
                    format!("{}*{}", fmt_rational(c), w)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self, g: &LieAlgebra) -> Value {
        let terms: Vec<Value> = self
            .coeffs
            .iter()
            .map(|(&(i, j), c)| json!([g.label(i).to_string(), g.label(j).to_string(), fmt_rational(c)]))
            .collect();
        json!({ "algebra": g.name(), "terms": terms })
    }
}

/// The ξ¹ coefficient of `R(ξ) = F_21(ξ) F(ξ)^{-1}` for a twist expanded
/// to second order in ξ.
pub fn semiclassical_expr(f: &TensorExpr<Jet<2>>, rep: &Representation) -> Result<TensorOp<Rational>> {
    let r = r_matrix(f, rep)?;
    if !r.map(|j| j.coeff(0).clone()).is_identity() {
        return Err(Error::ConstraintViolation("R(0) is not the identity".into()));
    }
    Ok(r.map(|j| j.coeff(1).clone()))
}

/// Semiclassical limit of a chain whose continuous parameters are all
/// multiplied by the overall deformation parameter ξ.
pub fn semiclassical(spec: &ChainSpec, rep: &Representation) -> Result<TensorOp<Rational>> {
    let f = spec.build(rep.algebra(), &Jet::<2>::xi())?;
    semiclassical_expr(&f, rep)
}

/// Exact comparison of a semiclassical limit with an evaluated bivector.
pub fn check_semiclassical(
    name: &str,
    limit: &TensorOp<Rational>,
    r: &Bivector,
    rep: &Representation,
) -> VerificationReport {
    let residual = limit.residual_support(&r.eval(rep));
    VerificationReport::new(format!("semiclassical/{name}"), rep.name()).with_residual(residual)
}

type Tri = HashMap<(usize, usize, usize), Rational>;

fn tri_add(t: &mut Tri, key: (usize, usize, usize), v: Rational) {
    if v.is_zero() {
        return;
    }
    let slot = t.entry(key).or_insert_with(Rational::zero);
    *slot += v;
    if slot.is_zero() {
        t.remove(&key);
    }
}

/// [[r,r]] = [r_12,r_13] + [r_12,r_23] + [r_13,r_23] in g⊗g⊗g, from the
/// structure constants of g.
pub fn schouten(r: &Bivector, g: &LieAlgebra) -> Result<Vec<((usize, usize, usize), Rational)>> {
    if r.dim() != g.dim() {
        return Err(Error::BasisMismatch(format!("bivector over a {}-dim space, algebra has dim {}", r.dim(), g.dim())));
    }
    let t: Vec<(usize, usize, Rational)> = r
        .coeffs
        .iter()
        .flat_map(|(&(i, j), c)| [(i, j, c.clone()), (j, i, -c.clone())])
        .collect();
    let mut out = Tri::new();
    for (a, b, x) in &t {
        for (c, d, y) in &t {
            let xy = x * y;
            for (k, s) in g.basis_bracket(*a, *c).iter() {
                tri_add(&mut out, (k, *b, *d), &xy * s);
            }
            for (k, s) in g.basis_bracket(*b, *c).iter() {
                tri_add(&mut out, (*a, k, *d), &xy * s);
            }
            for (k, s) in g.basis_bracket(*b, *d).iter() {
                tri_add(&mut out, (*a, *c, k), &xy * s);
            }
        }
    }
    let mut v: Vec<_> = out.into_iter().collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(v)
}

/// Classical Yang–Baxter equation [[r,r]] = 0, exactly in Λ³g.
pub fn check_cybe(name: &str, r: &Bivector, g: &LieAlgebra) -> Result<VerificationReport> {
    let s = schouten(r, g)?;
    Ok(VerificationReport::new(format!("cybe/{name}"), g.name()).with_residual(s.len()))
}

/// Echelon basis of the carrier: the subalgebra generated by the support of r.
pub fn carrier(r: &Bivector, g: &LieAlgebra) -> Vec<LieElement> {
    subalgebra_closure(g, &r.support())
}

/// Whether two families of vectors span the same subspace.
pub fn same_span(a: &[LieElement], b: &[LieElement], dim: usize) -> bool {
    let span = |v: &[LieElement]| {
        let mut e = Echelon::new(dim);
        for x in v {
            e.insert(&x.to_dense(dim));
        }
        e
    };
    let (ea, eb) = (span(a), span(b));
    ea.len() == eb.len() && b.iter().all(|x| ea.contains(&x.to_dense(dim)))
}
