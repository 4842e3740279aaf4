//! Two-forms on carrier subalgebras: the Frobenius forms ω, their
//! nondegeneracy, the 2-cocycle condition and the duality with r.

use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::formulas::Params;
use super::jbcarrier::{alpha, jb_carrier_basis};
use super::Bivector;
use crate::error::{Error, Result};
use crate::exactring::{fmt_rational, rational_inv, Rational};
use crate::liealg::{abs, e, half_rank, max_links, subalgebra_closure, GenLabel, LieAlgebra, LieElement};
use crate::linalg::{det, identity, matmul, Coordinates, DenseMatrix};
use crate::report::VerificationReport;

pub const OMEGA_FAMILIES: &[&str] = &["omega_JB", "omega_JE_P_sl3", "omega_B", "omega_RB", "omega_RE"];

/// ω given by its Gram matrix `gram[i][j] = ω(basis_i, basis_j)`.
#[derive(Clone, Debug, PartialEq)]
pub struct TwoForm {
    pub name: String,
    pub labels: Vec<String>,
    pub basis: Vec<LieElement>,
    pub gram: DenseMatrix,
}

impl TwoForm {
    /// The coboundary ω(x,y) = f([x,y]) for a functional `f` on g, given by
    /// its values on the basis of g.
    pub fn coboundary(
        name: impl Into<String>,
        g: &LieAlgebra,
        labels: Vec<String>,
        basis: Vec<LieElement>,
        f: &[(usize, Rational)],
    ) -> Self {
        let k = basis.len();
        let mut gram = vec![vec![Rational::zero(); k]; k];
        for a in 0..k {
            for b in a + 1..k {
                let br = g.bracket(&basis[a], &basis[b]);
                let v = f.iter().fold(Rational::zero(), |acc, (i, c)| acc + c * br.coeff(*i));
                gram[b][a] = -v.clone();
                gram[a][b] = v;
            }
        }
        TwoForm { name: name.into(), labels, basis, gram }
    }

    /// Adds Σ c·K*_p∧K*_q where K* is the dual basis of `self.basis`.
    pub fn add_dual_wedges(mut self, terms: &[(usize, usize, Rational)]) -> Self {
        for (p, q, c) in terms {
            self.gram[*p][*q] += c;
            self.gram[*q][*p] -= c;
        }
        self
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_antisymmetric(&self) -> bool {
        let k = self.dim();
        (0..k).all(|a| (0..k).all(|b| self.gram[a][b] == -self.gram[b][a].clone()))
    }

    pub fn determinant(&self) -> Rational {
        det(&self.gram)
    }

    pub fn is_nondegenerate(&self) -> bool {
        !self.determinant().is_zero()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "basis": self.labels,
            "gram": self.gram.iter().map(|r| r.iter().map(fmt_rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "determinant": fmt_rational(&self.determinant()),
        })
    }
}

struct Args<'a> {
    name: &'a str,
    p: &'a Params,
}

impl Args<'_> {
    fn get(&self, keys: &[&str], len: usize) -> Result<Vec<Rational>> {
        let v = keys
            .iter()
            .find_map(|k| self.p.get(*k))
            .ok_or_else(|| Error::BadParameters(format!("{}: missing `{}`", self.name, keys[0])))?;
        if v.len() != len {
            return Err(Error::BadParameters(format!("{}: `{}` needs {len} values", self.name, keys[0])));
        }
        Ok(v.clone())
    }
}

fn sl_rank_of(g: &LieAlgebra, name: &str) -> Result<usize> {
    g.sl_rank().ok_or_else(|| Error::BadParameters(format!("{name} needs sl(N), got {}", g.name())))
}

fn labelled(g: &LieAlgebra, labels: &[GenLabel]) -> Result<(Vec<String>, Vec<LieElement>)> {
    let els = labels.iter().map(|l| g.element(l)).collect::<Result<_>>()?;
    Ok((labels.iter().map(ToString::to_string).collect(), els))
}

/// Cartan generators H^P_k followed by the root vectors E_lm (l < m) of the
/// carrier of the plain peripheric chain.
pub fn peripheric_borel_basis(g: &LieAlgebra) -> Result<Vec<GenLabel>> {
    let n = sl_rank_of(g, "peripheric carrier")?;
    let z = max_links(n);
    let mut seeds = Vec::new();
    for k in 0..z {
        seeds.push(g.element(&GenLabel::HP(k))?);
        seeds.push(g.element(&e(k + 1, n - k))?);
        for s in k + 2..n - k {
            seeds.push(g.element(&e(k + 1, s))?);
            seeds.push(g.element(&e(s, n - k))?);
        }
    }
    let span = subalgebra_closure(g, &seeds);
    let d = g.dim();
    let dense: Vec<Vec<Rational>> = span.iter().map(|x| x.to_dense(d)).collect();
    let coords = Coordinates::new(&dense, d)?;
    let mut labels: Vec<GenLabel> = (0..z).map(GenLabel::HP).collect();
    for l in 1..=n {
        for m in l + 1..=n {
            if coords.solve(&g.element(&e(l, m))?.to_dense(d)).is_some() {
                labels.push(e(l, m));
            }
        }
    }
    if labels.len() != span.len() {
        return Err(Error::BasisMismatch("peripheric carrier is not spanned by H^P and root vectors".into()));
    }
    Ok(labels)
}

/// The ω-form of family `name`.
///
/// `omega_JB` (sl(N); psi, zeta or varsigma) and `omega_JE_P_sl3` (sl(3);
/// varsigma) live on the enlarged-chain carrier basis; `omega_B` (chi) and `omega_RB`
/// (chi, phi) on [`peripheric_borel_basis`]; `omega_RE` (xi) on L(1,0).
pub fn omega_form(g: &LieAlgebra, name: &str, params: &Params) -> Result<TwoForm> {
    if !OMEGA_FAMILIES.contains(&name) {
        return Err(Error::UnknownFormula(name.to_string()));
    }
    let a = Args { name, p: params };
    let allowed: &[&str] = match name {
        "omega_JB" => &["psi", "zeta", "varsigma"],
        "omega_JE_P_sl3" => &["varsigma"],
        "omega_B" => &["chi"],
        "omega_RB" => &["chi", "phi"],
        _ => &["xi"],
    };
    if let Some(k) = params.keys().find(|k| !allowed.contains(&k.as_str())) {
        return Err(Error::BadParameters(format!("{name}: unexpected parameter `{k}`")));
    }
    let idx = |l: &GenLabel| -> Result<usize> {
        g.index_of(l).ok_or_else(|| Error::UnknownLabel(format!("{l} in {}", g.name())))
    };
    match name {
        "omega_JB" | "omega_JE_P_sl3" => {
            let n = sl_rank_of(g, name)?;
            let z = max_links(n);
            let (psi, zeta) = if name == "omega_JB" {
                (a.get(&["psi"], z)?, a.get(&["zeta", "varsigma"], half_rank(n) - 1)?)
            } else {
                if n != 3 {
                    return Err(Error::BadParameters(format!("{name} is defined on sl(3)")));
                }
                (vec![Rational::one()], a.get(&["varsigma"], 1)?)
            };
            let mut f = Vec::new();
            for l in 1..=z {
                for m in z + 1..=n - l + 1 {
                    let al = alpha(n, &psi, &zeta, l, m)?;
                    f.push((idx(&e(l, m))?, -rational_inv(&al)?));
                }
            }
            let (labels, basis) = labelled(g, &jb_carrier_basis(n)?)?;
            Ok(TwoForm::coboundary(name, g, labels, basis, &f))
        }
        "omega_B" | "omega_RB" => {
            let n = sl_rank_of(g, name)?;
            let z = max_links(n);
            let chi = a.get(&["chi"], z)?;
            let f = (0..z).map(|k| Ok((idx(&e(k + 1, n - k))?, chi[k].clone()))).collect::<Result<Vec<_>>>()?;
            let basis_labels = peripheric_borel_basis(g)?;
            let (labels, basis) = labelled(g, &basis_labels)?;
            let w = TwoForm::coboundary(name, g, labels, basis, &f);
            if name == "omega_B" {
                return Ok(w);
            }
            let m = n - 1;
            let phi = a.get(&["phi"], m * m)?;
            let k_labels: Vec<GenLabel> =
                (0..z).map(GenLabel::HP).chain((1..half_rank(n)).map(|l| e(l, n - l))).collect();
            let pos = |l: &GenLabel| {
                basis_labels
                    .iter()
                    .position(|b| b == l)
                    .ok_or_else(|| Error::BasisMismatch(format!("{l} is not a carrier basis element")))
            };
            let mut terms = Vec::new();
            for p in 0..m {
                for q in 0..m {
                    terms.push((pos(&k_labels[p])?, pos(&k_labels[q])?, phi[p * m + q].clone()));
                }
            }
            Ok(w.add_dual_wedges(&terms))
        }
        _ => {
            // E*([,]) + ξ H*∧A* on L(1,0)
            let xi = a.get(&["xi"], 1)?.remove(0);
            let (h, aa, en) = (idx(&abs("H"))?, idx(&abs("A"))?, idx(&abs("E"))?);
            let labels = g.basis().iter().map(ToString::to_string).collect();
            let basis = (0..g.dim()).map(LieElement::unit).collect();
            Ok(TwoForm::coboundary(name, g, labels, basis, &[(en, Rational::one())]).add_dual_wedges(&[(h, aa, xi)]))
        }
    }
}

/// ω([x,y],z) + ω([y,z],x) + ω([z,x],y) = 0 on all basis triples.
pub fn cocycle_check(omega: &TwoForm, g: &LieAlgebra) -> Result<VerificationReport> {
    let d = g.dim();
    let k = omega.dim();
    let dense: Vec<Vec<Rational>> = omega.basis.iter().map(|x| x.to_dense(d)).collect();
    let coords = Coordinates::new(&dense, d)?;
    let mut br = vec![vec![Vec::new(); k]; k];
    for a in 0..k {
        for b in a + 1..k {
            let c = coords
                .solve(&g.bracket(&omega.basis[a], &omega.basis[b]).to_dense(d))
                .ok_or_else(|| Error::BasisMismatch(format!("{} is defined on a non-closed span", omega.name)))?;
            br[b][a] = c.iter().map(|x| -x.clone()).collect();
            br[a][b] = c;
        }
    }
    let w = |u: &[Rational], c: usize| -> Rational {
        u.iter().zip(&omega.gram).fold(Rational::zero(), |acc, (x, row)| acc + x * &row[c])
    };
    let mut bad = 0;
    for a in 0..k {
        for b in a + 1..k {
            for c in b + 1..k {
                let s = w(&br[a][b], c) + w(&br[b][c], a) + w(&br[c][a], b);
                if !s.is_zero() {
                    bad += 1;
                }
            }
        }
    }
    Ok(VerificationReport::new(format!("cocycle/{}", omega.name), g.name()).with_residual(bad))
}

/// r against ω over the same basis; see [`frobenius_check_via`].
pub fn frobenius_check(name: &str, r: &Bivector, omega: &TwoForm) -> Result<VerificationReport> {
    frobenius_check_via(name, r, &omega.basis, omega)
}

/// Expresses r over `images` (the images of ω's basis under an
/// isomorphism, or ω's basis itself) and compares the coefficient matrix R
/// with the Gram matrix Ω: both must be invertible and R·Ω = λ·1. The
/// scalar λ is recorded, not prescribed.
pub fn frobenius_check_via(
    name: &str,
    r: &Bivector,
    images: &[LieElement],
    omega: &TwoForm,
) -> Result<VerificationReport> {
    if images.len() != omega.dim() {
        return Err(Error::BasisMismatch(format!("{} basis vectors for a {}-dim form", images.len(), omega.dim())));
    }
    let rm = r.matrix_in(images)?;
    let (dr, dw) = (det(&rm), omega.determinant());
    let p = matmul(&rm, &omega.gram);
    let lambda = p.first().and_then(|row| row.first()).cloned().unwrap_or_else(Rational::zero);
    let scaled_id: DenseMatrix =
        identity(p.len()).into_iter().map(|row| row.into_iter().map(|x| x * &lambda).collect()).collect();
    let scalar = !lambda.is_zero() && p == scaled_id;
    let rep = VerificationReport::new(format!("frobenius/{name}"), "carrier basis")
        .note("det_r", fmt_rational(&dr))
        .note("det_omega", fmt_rational(&dw))
        .note("scalar", if scalar { fmt_rational(&lambda) } else { "not scalar".into() });
    Ok(rep.with_pass(!dr.is_zero() && !dw.is_zero() && scalar))
}
