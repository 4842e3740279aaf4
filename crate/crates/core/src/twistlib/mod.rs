//! Twisting elements as tensor expressions: the basic factors, canonical
//! and peripheric links, full peripheric chains and their Jordanian and
//! Reshetikhin enlargements.
//!
//! Products are written exactly as printed: the leftmost factor is the one
//! applied last, so a chain of links k = p, …, 0 has link p on the left.

pub mod params;
pub mod spec;

use num_traits::{One, Zero};

pub use params::{nu_rho_to_psi_zeta, parameter_points, psi_zeta_to_nu_rho, ParamPoint};
pub use spec::{ChainSpec, Enlargement, LinkSpec, RawFactor, Style};

use crate::error::{Error, Result};
use crate::exactring::{q, Rational, Scalar};
use crate::liealg::{e, half_rank, max_links, GenLabel, LieAlgebra, LieElement};
use crate::report::VerificationReport;
use crate::tensorexpr::{Node, Representation, TensorExpr};

/// σ = ln(1 + c·E) on one leg.
pub fn sigma<S: Scalar>(root: &GenLabel, c: &S, leg: usize) -> Node<S> {
    scaled(Node::gen(root.clone(), leg), c).log1p()
}

fn scaled<S: Scalar>(n: Node<S>, c: &S) -> Node<S> {
    if c.is_one() {
        n
    } else {
        n.scaled(c.clone())
    }
}

fn two_legs<S: Scalar>(node: Node<S>) -> TensorExpr<S> {
    TensorExpr::new(node, 2).expect("factor nodes live on legs 1 and 2")
}

fn sl_rank(g: &LieAlgebra) -> Result<usize> {
    g.sl_rank()
        .ok_or_else(|| Error::ConstraintViolation(format!("{} is not sl(N)", g.name())))
}

fn check_link(k: usize, n: usize) -> Result<()> {
    if k + 1 >= n.saturating_sub(k) {
        return Err(Error::IndexOutOfRange(format!("link {k} needs k+1 < N-k, N = {n}")));
    }
    Ok(())
}

/// e^{H⊗σ}, σ = ln(1 + c·E), without the Borel check.
pub fn jordanian_node<S: Scalar>(h: Node<S>, root: &GenLabel, c: &S) -> Node<S> {
    h.times(sigma(root, c, 2)).exp()
}

/// Jordanian factor Φ_J = e^{H⊗σ(ξ)} with σ(ξ) = ln(1 + ξE).
pub fn jordanian<S: Scalar>(
    g: &LieAlgebra,
    h: &LieElement,
    root: &GenLabel,
    xi: &S,
) -> Result<TensorExpr<S>> {
    let ev = g.element(root)?;
    if g.bracket(h, &ev) != ev {
        return Err(Error::CarrierViolation(format!("[{}, {root}] != {root}", g.show(h))));
    }
    Ok(two_legs(jordanian_node(Node::element(g, h, 1), root, xi)))
}

fn check_heisenberg(g: &LieAlgebra, a: &GenLabel, b: &GenLabel, root: &GenLabel) -> Result<()> {
    let (av, bv, ev) = (g.element(a)?, g.element(b)?, g.element(root)?);
    if g.bracket(&av, &bv) != ev || !g.bracket(&ev, &av).is_zero() || !g.bracket(&ev, &bv).is_zero() {
        return Err(Error::CarrierViolation(format!(
            "{a}, {b}, {root} do not satisfy [A,B]=E, [E,A]=[E,B]=0"
        )));
    }
    Ok(())
}

fn dressed<S: Scalar>(leg_node: Node<S>, beta: &Rational, root: &GenLabel, xi: &S) -> Node<S> {
    if beta.is_zero() {
        leg_node
    } else {
        leg_node.times(sigma(root, xi, 2).scaled(S::from_rational(&-beta)).exp())
    }
}

/// Extension factor Φ_E = e^{ξ A⊗B e^{−βσ(ξ)}}, σ(ξ) = ln(1 + ξE).
pub fn extension<S: Scalar>(
    g: &LieAlgebra,
    a: &GenLabel,
    b: &GenLabel,
    beta: &Rational,
    sigma_of: &GenLabel,
    xi: &S,
) -> Result<TensorExpr<S>> {
    check_heisenberg(g, a, b, sigma_of)?;
    let right = dressed(Node::gen(b.clone(), 2), beta, sigma_of, xi);
    Ok(two_legs(scaled(Node::gen(a.clone(), 1).times(right), xi).exp()))
}

/// The primed extension Φ′_E = e^{−ξ B⊗A e^{−ασ(ξ)}}.
pub fn extension_primed<S: Scalar>(
    g: &LieAlgebra,
    a: &GenLabel,
    b: &GenLabel,
    alpha: &Rational,
    sigma_of: &GenLabel,
    xi: &S,
) -> Result<TensorExpr<S>> {
    check_heisenberg(g, a, b, sigma_of)?;
    let right = dressed(Node::gen(a.clone(), 2), alpha, sigma_of, xi);
    let c = xi.neg_ref();
    Ok(two_legs(Node::gen(b.clone(), 1).times(right).scaled(c).exp()))
}

/// Reshetikhin factor e^{c·x⊗y} for commuting x, y.
pub fn reshetikhin<S: Scalar>(g: &LieAlgebra, x: &LieElement, y: &LieElement, c: &S) -> Result<TensorExpr<S>> {
    if !g.bracket(x, y).is_zero() {
        return Err(Error::CarrierViolation(format!("[{}, {}] != 0", g.show(x), g.show(y))));
    }
    Ok(two_legs(scaled(Node::element(g, x, 1).times(Node::element(g, y, 2)), c).exp()))
}

/// Which Cartan element a link's Jordanian factor uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum LinkKind {
    /// H_{k+1,N−k}, extensions dressed by e^{−σ/2}.
    Canonical,
    /// H^P_{k+1,N−k}, undressed extensions.
    Peripheric,
}

/// Factors of link k, leftmost first: the extensions for s = k+2..N−k−1
/// (coefficient `ext`) and the Jordanian factor with σ(`sig`).
fn link_nodes<S: Scalar>(n: usize, k: usize, ext: &S, sig: &S, kind: LinkKind) -> Vec<Node<S>> {
    let root = e(k + 1, n - k);
    let mut out = Vec::new();
    if !ext.is_zero() {
        for s in k + 2..n - k {
            let mut body = Node::gen(e(k + 1, s), 1).times(Node::gen(e(s, n - k), 2));
            if kind == LinkKind::Canonical {
                body = body.times(sigma(&root, sig, 2).scaled(S::from_rational(&q(-1, 2))).exp());
            }
            out.push(scaled(body, ext).exp());
        }
    }
    let h = match kind {
        LinkKind::Canonical => GenLabel::H(k + 1, n - k),
        LinkKind::Peripheric => GenLabel::HP(k),
    };
    out.push(jordanian_node(Node::gen(h, 1), &root, sig));
    out
}

fn product<S: Scalar>(nodes: Vec<Node<S>>) -> TensorExpr<S> {
    match nodes.len() {
        0 => TensorExpr::identity(2),
        1 => two_legs(nodes.into_iter().next().unwrap()),
        _ => two_legs(Node::Prod(nodes)),
    }
}

/// Canonical link F_{B_k}(ψ) = (∏_s e^{ψ E_{k+1,s}⊗E_{s,N−k} e^{−σ/2}}) e^{H_{k+1,N−k}⊗σ(ψ)}.
pub fn canonical_link<S: Scalar>(g: &LieAlgebra, k: usize, psi: &S) -> Result<TensorExpr<S>> {
    let n = sl_rank(g)?;
    check_link(k, n)?;
    Ok(product(link_nodes(n, k, psi, psi, LinkKind::Canonical)))
}

/// Peripheric link F^P_{B_k}(ψ) = (∏_s e^{ψ E_{k+1,s}⊗E_{s,N−k}}) e^{H^P_{k+1,N−k}⊗σ(ψ)}.
pub fn peripheric_link<S: Scalar>(g: &LieAlgebra, k: usize, psi: &S) -> Result<TensorExpr<S>> {
    let n = sl_rank(g)?;
    check_link(k, n)?;
    Ok(product(link_nodes(n, k, psi, psi, LinkKind::Peripheric)))
}

fn chain<S: Scalar>(g: &LieAlgebra, psi: &[S], kind: LinkKind) -> Result<TensorExpr<S>> {
    let n = sl_rank(g)?;
    let max = max_links(n);
    if psi.len() > max {
        return Err(Error::TooManyLinks { requested: psi.len(), max, n });
    }
    let nodes = (0..psi.len()).rev().flat_map(|k| link_nodes(n, k, &psi[k], &psi[k], kind)).collect();
    Ok(product(nodes))
}

/// F^P_{B_{p≺0}} = F^P_{B_p} ⋯ F^P_{B_0} with link parameters ψ_1..ψ_{p+1}.
pub fn peripheric_chain<S: Scalar>(g: &LieAlgebra, psi: &[S]) -> Result<TensorExpr<S>> {
    chain(g, psi, LinkKind::Peripheric)
}

/// The canonical chain F_{B_{p≺0}} = F_{B_p} ⋯ F_{B_0}.
pub fn canonical_chain<S: Scalar>(g: &LieAlgebra, psi: &[S]) -> Result<TensorExpr<S>> {
    chain(g, psi, LinkKind::Canonical)
}

/// Φ^R_{J_k} = e^{H^R_{k+1,N−k}⊗σ_{k+1,N−k}(ψ)}.
pub fn cartan_rotation<S: Scalar>(g: &LieAlgebra, k: usize, psi: &S) -> Result<TensorExpr<S>> {
    let n = sl_rank(g)?;
    check_link(k, n)?;
    Ok(two_legs(jordanian_node(Node::gen(GenLabel::HR(k), 1), &e(k + 1, n - k), psi)))
}

/// Checks F_{B_k} = Φ^R_{J_k} F^P_{B_k} for every link k of sl(N).
pub fn factorization_check(
    g: &LieAlgebra,
    rep: &Representation,
    psi: &Rational,
) -> Result<Vec<VerificationReport>> {
    let n = sl_rank(g)?;
    (0..max_links(n))
        .map(|k| {
            let lhs = canonical_link(g, k, psi)?.eval(rep)?;
            let rhs = cartan_rotation(g, k, psi)?.then(&peripheric_link(g, k, psi)?).eval(rep)?;
            Ok(VerificationReport::new(format!("link-factorization/sl{n}/k{k}"), rep.name())
                .with_residual(lhs.residual_support(&rhs))
                .param("psi", psi))
        })
        .collect()
}

/// Checks F_{B_{p≺0}} = Φ^R_{J_p} ⋯ Φ^R_{J_0} · F^P_{B_{p≺0}} for the full
/// chain of sl(N).
pub fn rearrangement_check(
    g: &LieAlgebra,
    rep: &Representation,
    psi: &[Rational],
) -> Result<VerificationReport> {
    let n = sl_rank(g)?;
    let lhs = canonical_chain(g, psi)?.eval(rep)?;
    let mut nodes: Vec<Node<Rational>> = (0..psi.len())
        .rev()
        .map(|k| jordanian_node(Node::gen(GenLabel::HR(k), 1), &e(k + 1, n - k), &psi[k]))
        .collect();
    nodes.push(peripheric_chain(g, psi)?.node);
    let rhs = product(nodes).eval(rep)?;
    let mut r = VerificationReport::new(format!("chain-rearrangement/sl{n}"), rep.name())
        .with_residual(lhs.residual_support(&rhs));
    for (i, p) in psi.iter().enumerate() {
        r = r.param(format!("psi{}", i + 1), p);
    }
    Ok(r)
}

/// Labels of the additional primitive root vectors E^P_i = E_{i,N−i}, i = 1..n−1.
pub fn peripheric_roots(n: usize) -> Vec<GenLabel> {
    (1..half_rank(n)).map(|i| e(i, n - i)).collect()
}

/// Twists on the four-dimensional carriers L(α,β) (basis H, A, B, E).
pub mod small {
    use super::*;
    use crate::liealg::abs;

    fn hae() -> (GenLabel, GenLabel, GenLabel, GenLabel) {
        (abs("H"), abs("A"), abs("B"), abs("E"))
    }

    fn beta_of(g: &LieAlgebra) -> Result<Rational> {
        let (h, _, b, _) = hae();
        let x = g.bracket(&g.element(&h)?, &g.element(&b)?);
        Ok(x.coeff(g.index_of(&b).expect("B in basis")))
    }

    /// Jordanian factor e^{H⊗σ(ξ)} on any algebra with [H,E] = E.
    pub fn jordanian_he<S: Scalar>(g: &LieAlgebra, xi: &S) -> Result<TensorExpr<S>> {
        let (h, _, _, en) = hae();
        jordanian(g, &g.element(&h)?, &en, xi)
    }

    /// Extended Jordanian twist F_EJ = Φ_E Φ_J on L(α,β).
    pub fn extended_jordanian<S: Scalar>(g: &LieAlgebra, xi: &S) -> Result<TensorExpr<S>> {
        let (_, a, b, en) = hae();
        let beta = beta_of(g)?;
        Ok(extension(g, &a, &b, &beta, &en, xi)?.then(&jordanian_he(g, xi)?))
    }

    /// Φ′_E Φ_J on L(α,β).
    pub fn extended_jordanian_primed<S: Scalar>(g: &LieAlgebra, xi: &S) -> Result<TensorExpr<S>> {
        let (_, a, b, en) = hae();
        let alpha = Rational::one() - beta_of(g)?;
        Ok(extension_primed(g, &a, &b, &alpha, &en, xi)?.then(&jordanian_he(g, xi)?))
    }

    /// The peripheric extended twist F^P_E = e^{ξA⊗B} e^{H⊗σ(ξ)} on L(1,0).
    pub fn pet<S: Scalar>(g: &LieAlgebra, xi: &S) -> Result<TensorExpr<S>> {
        if !beta_of(g)?.is_zero() {
            return Err(Error::CarrierViolation("PET needs β = 0, i.e. L(1,0)".into()));
        }
        extended_jordanian(g, xi)
    }

    /// F^P_RE = e^{ψA⊗σ} e^{A⊗B} e^{H⊗σ} on L(1,0), with every generator
    /// scaled by ξ: e^{ψξA⊗σ(ξ)} F^P_E(ξ).
    pub fn peripheric_re<S: Scalar>(g: &LieAlgebra, psi: &S, xi: &S) -> Result<TensorExpr<S>> {
        let (_, a, _, en) = hae();
        let c = psi.mul_ref(xi);
        let rf = two_legs(scaled(Node::gen(a, 1).times(sigma(&en, xi, 2)), &c).exp());
        Ok(rf.then(&pet(g, xi)?))
    }
}

/// The enlarged sl(3) twists, keyed by name:
/// `F_JE_P` = e^{H^⊥⊗σ_12(ς)} e^{ψE_12⊗E_23} e^{H^P⊗σ_13(ψ)},
/// `F_RE` = e^{ζH^⊥⊗σ_13(ψ)} e^{ψE_12⊗E_23} e^{H^P⊗σ_13(ψ)},
/// `F_JJ` = e^{H_13^⊥⊗σ_12(ς)} e^{H_12^⊥⊗σ_13(ψ)} with H_12^⊥ = H^P − H^⊥.
pub fn sl3_specials<S: Scalar>(
    g: &LieAlgebra,
    psi: &S,
    varsigma: &S,
    zeta: &S,
) -> Result<Vec<(String, TensorExpr<S>)>> {
    if sl_rank(g)? != 3 {
        return Err(Error::ConstraintViolation("sl3_specials needs sl(3)".into()));
    }
    let hperp = GenLabel::Hperp(1);
    let (e12, e13) = (e(1, 2), e(1, 3));
    let pet = product(link_nodes(3, 0, psi, psi, LinkKind::Peripheric));
    let jperp = two_legs(jordanian_node(Node::gen(hperp.clone(), 1), &e12, varsigma));
    let f_je = jperp.then(&pet);
    let rf = two_legs(scaled(Node::gen(hperp.clone(), 1).times(sigma(&e13, psi, 2)), zeta).exp());
    let f_re = rf.then(&pet);
    let h12 = g.element(&GenLabel::HP(0))?.sub(&g.element(&hperp)?);
    let f_jj = jperp.then(&jordanian(g, &h12, &e13, psi)?);
    Ok(vec![("F_JE_P".into(), f_je), ("F_RE".into(), f_re), ("F_JJ".into(), f_jj)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::int;
    use crate::liealg::build_sl;

    #[test]
    fn four_chain_as_printed() {
        let g = build_sl(4).unwrap();
        let f = peripheric_chain(&g, &[int(1), int(1)]).unwrap();
        assert_eq!(
            f.node.to_string(),
            "(exp(HP(1)_1·log1pE(2,3)_2)·exp(E(1,2)_1·E(2,4)_2)·exp(E(1,3)_1·E(3,4)_2)·exp(HP(0)_1·log1pE(1,4)_2))"
        );
    }

    #[test]
    fn too_many_links() {
        let g = build_sl(4).unwrap();
        let e = peripheric_chain(&g, &[int(1), int(1), int(1)]).unwrap_err();
        assert_eq!(e, Error::TooManyLinks { requested: 3, max: 2, n: 4 });
    }

    #[test]
    fn carrier_violation() {
        let g = build_sl(2).unwrap();
        let h2 = g.elem(&GenLabel::H(1, 2)).scale(&int(2));
        assert!(matches!(jordanian(&g, &h2, &e(1, 2), &int(1)), Err(Error::CarrierViolation(_))));
        assert!(jordanian(&g, &g.elem(&GenLabel::H(1, 2)), &e(1, 2), &int(1)).is_ok());
    }
}
