//! The dual Lie algebra g*_r of a coboundary bialgebra and its image in g.

use num_traits::Zero;
use serde::Serialize;

use super::Bivector;
use crate::error::Result;
use crate::exactring::{int, Rational};
use crate::liealg::{abs, e, structure_invariants, subalgebra, GenLabel, LieAlgebra, LieElement, StructureInvariants};

/// The five-dimensional algebra M = span{H^P, H^⊥, A, B, E} ⊂ sl(3) with
/// A = E_12, B = E_23, E = E_13, together with its embedding.
pub fn m_algebra(sl3: &LieAlgebra) -> Result<(LieAlgebra, Vec<LieElement>)> {
    let labels = [GenLabel::HP(0), GenLabel::Hperp(1), e(1, 2), e(2, 3), e(1, 3)];
    let emb = labels.iter().map(|l| sl3.element(l)).collect::<Result<Vec<_>>>()?;
    let names: Vec<String> = ["HP", "Hperp", "A", "B", "E"].iter().map(|s| s.to_string()).collect();
    let mut m = subalgebra(sl3, &emb, &names)?;
    m = LieAlgebra::from_table("M", m.basis().to_vec(), table_of(&m), None)?;
    Ok((m, emb))
}

fn table_of(g: &LieAlgebra) -> Vec<Vec<LieElement>> {
    (0..g.dim()).map(|i| (0..g.dim()).map(|j| g.basis_bracket(i, j).clone()).collect()).collect()
}

/// The printed L_{J⊥} commutators.
pub fn printed_l_j_perp(xi: &Rational) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(
        "L_Jperp",
        &["H", "E", "A", "B"],
        &[
            ("H", "E", vec![("E", int(1))]),
            ("H", "A", vec![("A", int(1))]),
            ("A", "B", vec![("E", int(1))]),
            ("E", "B", vec![("E", xi.clone())]),
        ],
        None,
    )
}

/// The printed L_R commutators.
pub fn printed_l_r(zeta: &Rational) -> Result<LieAlgebra> {
    LieAlgebra::from_brackets(
        "L_R",
        &["H", "E", "A", "B"],
        &[
            ("H", "E", vec![("E", int(1))]),
            ("H", "A", vec![("A", int(1) - zeta)]),
            ("H", "B", vec![("B", zeta.clone())]),
            ("A", "B", vec![("E", int(1))]),
        ],
        None,
    )
}

#[derive(Clone, Debug)]
pub struct DualBracket {
    /// g* with [ε^p, ε^q]_* read off the cobracket δ_r.
    pub dual: LieAlgebra,
    /// Basis of the image of ξ ↦ (ξ⊗id)(r), as elements of g.
    pub image: Vec<LieElement>,
    /// The image with the bracket of g.
    pub image_algebra: LieAlgebra,
    /// s with r♯([ξ,η]_*) = s·[r♯ξ, r♯η] for all ξ, η, when such s = ±1 exists.
    pub hom_sign: Option<i32>,
    pub invariants: StructureInvariants,
}

#[derive(Serialize)]
struct Summary<'a> {
    image_dim: usize,
    hom_sign: Option<i32>,
    invariants: &'a StructureInvariants,
}

impl DualBracket {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::to_value(Summary {
            image_dim: self.image.len(),
            hom_sign: self.hom_sign,
            invariants: &self.invariants,
        })
        .expect("plain data serializes");
        v["image_algebra"] = self.image_algebra.to_json();
        v
    }
}

/// δ_r(x) = (ad_x⊗1 + 1⊗ad_x)(r), the dual bracket
/// ⟨[ξ,η]_*, x⟩ = ⟨ξ⊗η, δ_r(x)⟩ and the image algebra of r♯.
pub fn dual_bracket(r: &Bivector, g: &LieAlgebra) -> Result<DualBracket> {
    let d = g.dim();
    let t = r.tensor();
    // delta[x][p][q]: coefficient of e_p⊗e_q in δ_r(e_x)
    let mut delta = vec![vec![vec![Rational::zero(); d]; d]; d];
    for (x, dx) in delta.iter_mut().enumerate() {
        for a in 0..d {
            for b in 0..d {
                let c = &t[a][b];
                if c.is_zero() {
                    continue;
                }
                for (k, s) in g.basis_bracket(x, a).iter() {
                    dx[k][b] += c * s;
                }
                for (k, s) in g.basis_bracket(x, b).iter() {
                    dx[a][k] += c * s;
                }
            }
        }
    }
    let mut table = vec![vec![LieElement::zero(); d]; d];
    for p in 0..d {
        for q in 0..d {
            table[p][q] = LieElement::from_pairs((0..d).map(|x| (x, delta[x][p][q].clone())));
        }
    }
    let labels = g.basis().iter().map(|l| abs(&format!("{}_dual", sanitize(&l.to_string())))).collect();
    let dual = LieAlgebra::from_table(format!("{}*_r", g.name()), labels, table, None)?;

    let sharp = |p: usize| LieElement::from_dense(&t[p]);
    let sharp_el = |u: &LieElement| u.iter().fold(LieElement::zero(), |acc, (p, c)| acc.add(&sharp(p).scale(c)));
    let mut plus = true;
    let mut minus = true;
    for p in 0..d {
        for q in p + 1..d {
            let lhs = sharp_el(dual.basis_bracket(p, q));
            let rhs = g.bracket(&sharp(p), &sharp(q));
            plus &= lhs == rhs;
            minus &= lhs == rhs.scale(&int(-1));
        }
    }
    let hom_sign = match (plus, minus) {
        (true, _) => Some(1),
        (false, true) => Some(-1),
        _ => None,
    };
    let image = r.support();
    let names: Vec<String> = (1..=image.len()).map(|i| format!("X{i}")).collect();
    let image_algebra = subalgebra(g, &image, &names)?;
    let invariants = structure_invariants(&image_algebra);
    Ok(DualBracket { dual, image, image_algebra, hom_sign, invariants })
}

fn sanitize(s: &str) -> String {
    s.chars().map(|c| if c.is_alphanumeric() { c } else { '_' }).collect()
}
