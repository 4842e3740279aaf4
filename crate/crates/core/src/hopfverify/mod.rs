//! Hopf-level checks of twisting elements, all evaluated exactly in a
//! representation: the Drinfeld twist equations, counit conditions, the
//! R-matrix R_F = F_21 F^{-1} and QYBE, twisted coproducts
//! Δ_F(X) = F Δ(X) F^{-1} and their comparison against coproduct tables.

pub mod tables;

use crate::error::{Error, Result};
use crate::exactring::Scalar;
use crate::liealg::{e, GenLabel, LieAlgebra, LieElement};
use crate::report::VerificationReport;
use crate::tensorexpr::{element_op, invert_expr, primitive_op, Representation, TensorExpr, TensorOp};
use crate::twistlib::peripheric_chain;

fn two_legged<S: Scalar>(f: &TensorExpr<S>) -> Result<()> {
    if f.legs != 2 {
        return Err(Error::Malformed(format!("twist must have 2 legs, has {}", f.legs)));
    }
    Ok(())
}

/// The two sides F_12 (Δ⊗id)(F) and F_23 (id⊗Δ)(F) as expressions.
pub fn drinfeld_sides<S: Scalar>(f: &TensorExpr<S>) -> Result<(TensorExpr<S>, TensorExpr<S>)> {
    two_legged(f)?;
    let lhs = f.place(&[1, 2], 3)?.then(&f.coproduct_on_leg(1)?);
    let rhs = f.place(&[2, 3], 3)?.then(&f.coproduct_on_leg(2)?);
    Ok((lhs, rhs))
}

pub fn check_drinfeld<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    rep: &Representation,
) -> Result<VerificationReport> {
    let (lhs, rhs) = drinfeld_sides(f)?;
    let residual = lhs.eval(rep)?.residual_support(&rhs.eval(rep)?);
    Ok(VerificationReport::new(format!("drinfeld/{name}"), rep.name()).with_residual(residual))
}

/// (ε⊗id)(F) = (id⊗ε)(F) = 1; the residual sums both legs.
pub fn check_counit<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    rep: &Representation,
) -> Result<VerificationReport> {
    two_legged(f)?;
    let one = TensorOp::<S>::identity(rep.dim(), 1, rep.name());
    let mut residual = 0;
    for leg in [1, 2] {
        residual += f.counit_on_leg(leg)?.eval(rep)?.residual_support(&one);
    }
    Ok(VerificationReport::new(format!("counit/{name}"), rep.name()).with_residual(residual))
}

/// R_F = F_21 F^{-1}, from the undeformed R = 1⊗1.
pub fn r_matrix<S: Scalar>(f: &TensorExpr<S>, rep: &Representation) -> Result<TensorOp<S>> {
    two_legged(f)?;
    let fop = f.eval(rep)?;
    Ok(fop.swap_legs(1, 2)?.mul(&invert_expr(f, rep)?))
}

/// R_12 R_13 R_23 = R_23 R_13 R_12.
pub fn check_qybe<S: Scalar>(name: &str, r: &TensorOp<S>) -> Result<VerificationReport> {
    if r.legs != 2 {
        return Err(Error::Malformed("R must have 2 legs".into()));
    }
    let (r12, r13, r23) = (r.place(&[1, 2], 3)?, r.place(&[1, 3], 3)?, r.place(&[2, 3], 3)?);
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    Ok(VerificationReport::new(format!("qybe/{name}"), r.rep.clone()).with_residual(lhs.residual_support(&rhs)))
}

/// Δ_F(X) = F (X⊗1 + 1⊗X) F^{-1}.
pub fn twisted_coproduct<S: Scalar>(
    f: &TensorExpr<S>,
    x: &LieElement,
    rep: &Representation,
) -> Result<TensorOp<S>> {
    two_legged(f)?;
    Ok(f.eval(rep)?.mul(&primitive_op(rep, x)).mul(&invert_expr(f, rep)?))
}

/// Like [`twisted_coproduct`] with F and F^{-1} evaluated once.
pub struct Twisted<S> {
    f: TensorOp<S>,
    finv: TensorOp<S>,
}

impl<S: Scalar> Twisted<S> {
    pub fn new(f: &TensorExpr<S>, rep: &Representation) -> Result<Self> {
        two_legged(f)?;
        Ok(Twisted { f: f.eval(rep)?, finv: invert_expr(f, rep)? })
    }

    pub fn coproduct(&self, x: &LieElement, rep: &Representation) -> TensorOp<S> {
        self.f.mul(&primitive_op(rep, x)).mul(&self.finv)
    }
}

/// One row of a coproduct table: Δ_F(x) = rhs.
#[derive(Clone, Debug)]
pub struct TableRow<S> {
    pub x: GenLabel,
    pub rhs: TensorExpr<S>,
}

/// Compares every row; the report lists failing rows in `notes`.
pub fn check_coproduct_table<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    table: &[TableRow<S>],
    rep: &Representation,
) -> Result<VerificationReport> {
    let g = rep.algebra();
    let tw = Twisted::new(f, rep)?;
    let mut residual = 0;
    let mut failing = Vec::new();
    for row in table {
        let lhs = tw.coproduct(&g.element(&row.x)?, rep);
        let r = lhs.residual_support(&row.rhs.eval(rep)?);
        if r > 0 {
            failing.push(row.x.to_string());
        }
        residual += r;
    }
    let mut rep_out = VerificationReport::new(format!("coproducts/{name}"), rep.name())
        .with_residual(residual)
        .note("rows", table.len().to_string());
    if !failing.is_empty() {
        rep_out = rep_out.note("failing_rows", failing.join(" "));
    }
    Ok(rep_out)
}

pub fn check_primitive<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    x: &LieElement,
    rep: &Representation,
) -> Result<VerificationReport> {
    let d = twisted_coproduct(f, x, rep)?;
    Ok(VerificationReport::new(format!("primitive/{name}"), rep.name())
        .with_residual(d.residual_support(&primitive_op(rep, x))))
}

/// (Δ_F⊗id)Δ_F(X) = (id⊗Δ_F)Δ_F(X) for every basis element X.
pub fn check_coassociativity<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    rep: &Representation,
) -> Result<VerificationReport> {
    let (lhs, rhs) = drinfeld_sides(f)?;
    let (p, pinv) = (lhs.eval(rep)?, invert_expr(&lhs, rep)?);
    let (q, qinv) = (rhs.eval(rep)?, invert_expr(&rhs, rep)?);
    let g = rep.algebra();
    let mut residual = 0;
    for i in 0..g.dim() {
        let x = LieElement::unit(i);
        let single = element_op::<S>(rep, &x);
        let x3 = single.place(&[1], 3)?.add(&single.place(&[2], 3)?).add(&single.place(&[3], 3)?);
        residual += p.mul(&x3).mul(&pinv).residual_support(&q.mul(&x3).mul(&qinv));
    }
    Ok(VerificationReport::new(format!("coassociativity/{name}"), rep.name()).with_residual(residual))
}

/// (Δ_F⊗id)(R) = R_13 R_23 with R = F_21 F^{-1}.
pub fn check_hexagon<S: Scalar>(
    name: &str,
    f: &TensorExpr<S>,
    rep: &Representation,
) -> Result<VerificationReport> {
    two_legged(f)?;
    let finv = f
        .structural_inverse()
        .ok_or_else(|| Error::Malformed("hexagon check needs a product of exponentials".into()))?;
    let r = f.place(&[2, 1], 2)?.then(&finv);
    let f12 = f.place(&[1, 2], 3)?;
    let lhs = f12.eval(rep)?.mul(&r.coproduct_on_leg(1)?.eval(rep)?).mul(&invert_expr(&f12, rep)?);
    let rhs = r.place(&[1, 3], 3)?.then(&r.place(&[2, 3], 3)?).eval(rep)?;
    Ok(VerificationReport::new(format!("hexagon/{name}"), rep.name()).with_residual(lhs.residual_support(&rhs)))
}

/// Basis of the sl(N−2k) embedded on indices k+1..N−k: all E_ab, a ≠ b,
/// and H_{a,a+1}.
pub fn embedded_sl(n: usize, k: usize) -> Vec<GenLabel> {
    let (lo, hi) = (k + 1, n - k);
    let mut out = Vec::new();
    for a in lo..=hi {
        for b in lo..=hi {
            if a != b {
                out.push(e(a, b));
            }
        }
    }
    out.extend((lo..hi).map(|a| GenLabel::H(a, a + 1)));
    out
}

/// Matreshka property: after the first k links of the peripheric chain of
/// sl(N), every generator of the embedded sl(N−2k) stays primitive.
pub fn matreshka<S: Scalar>(
    g: &LieAlgebra,
    rep: &Representation,
    k: usize,
    psi: &[S],
) -> Result<VerificationReport> {
    let n = g.sl_rank().ok_or_else(|| Error::ConstraintViolation("matreshka needs sl(N)".into()))?;
    if 2 * k + 2 > n || psi.len() < k {
        return Err(Error::BadParameters(format!("no embedded sl(N-2k) for N = {n}, k = {k}")));
    }
    let f = peripheric_chain(g, &psi[..k])?;
    let tw = Twisted::new(&f, rep)?;
    let mut residual = 0;
    let mut failing = Vec::new();
    for l in embedded_sl(n, k) {
        let x = g.element(&l)?;
        let r = tw.coproduct(&x, rep).residual_support(&primitive_op(rep, &x));
        if r > 0 {
            failing.push(l.to_string());
        }
        residual += r;
    }
    let mut out = VerificationReport::new(format!("matreshka/sl{n}/k{k}"), rep.name())
        .with_residual(residual)
        .note("generators", embedded_sl(n, k).len().to_string());
    if !failing.is_empty() {
        out = out.note("non_primitive", failing.join(" "));
    }
    Ok(out)
}
