//! The enlarged-chain carrier basis of the enlarged chain, the ζ-family of
//! injections φ and the scaling factors α_lm.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactring::{int, rational_inv, Rational};
use crate::liealg::{e, half_rank, max_links, GenLabel, LieAlgebra, LieElement};
use crate::linalg::{rank, Coordinates};
use crate::report::VerificationReport;

/// (N² + N − 2n)/2.
pub fn jb_carrier_dim(n: usize) -> usize {
    (n * n + n - 2 * half_rank(n)) / 2
}

fn check_n(n: usize) -> Result<()> {
    if n < 3 {
        return Err(Error::IndexOutOfRange(format!("the carrier basis needs N ≥ 3, got {n}")));
    }
    Ok(())
}

/// Root-vector index pairs of the three E-blocks. The third block keeps
/// only m ≥ l + 2: the simple roots e_{z+i} − e_{z+i+1} are excluded.
fn e_blocks(n: usize) -> [Vec<(usize, usize)>; 3] {
    let z = max_links(n);
    let b1 = (1..z).flat_map(|l| (l + 1..=z).map(move |m| (l, m))).collect();
    let b2 = (1..=z).flat_map(|l| (z + 1..=n).map(move |m| (l, m))).collect();
    let b3 = (z + 1..=n.saturating_sub(2)).flat_map(|l| (l + 2..=n).map(move |m| (l, m))).collect();
    [b1, b2, b3]
}

/// H^P_{i,N−i+1} (i = 1..z), H_j^⊥ (j = 1..n−1), then the E_lm blocks.
pub fn jb_carrier_basis(n: usize) -> Result<Vec<GenLabel>> {
    check_n(n)?;
    let mut b: Vec<GenLabel> = (0..max_links(n)).map(GenLabel::HP).collect();
    b.extend((1..half_rank(n)).map(GenLabel::Hperp));
    for block in e_blocks(n) {
        b.extend(block.into_iter().map(|(l, m)| e(l, m)));
    }
    Ok(b)
}

/// α_lm for E_lm in one of the three scaling blocks (ζ_0 = 1).
pub fn alpha(n: usize, psi: &[Rational], zeta: &[Rational], l: usize, m: usize) -> Result<Rational> {
    check_n(n)?;
    let z = max_links(n);
    let zt = |i: usize| -> Result<Rational> {
        match i {
            0 => Ok(Rational::one()),
            _ => zeta.get(i - 1).cloned().ok_or_else(|| Error::BadParameters(format!("ζ_{i} missing"))),
        }
    };
    let ps = |i: usize| psi.get(i - 1).cloned().ok_or_else(|| Error::BadParameters(format!("ψ_{i} missing")));
    if l >= m || l == 0 || m > n {
        return Err(Error::IndexOutOfRange(format!("α_({l},{m}) for N = {n}")));
    }
    if m <= z {
        Ok(ps(l)? * rational_inv(&ps(m)?)?)
    } else if l <= z {
        Ok(ps(l)? * zt(n - m)?)
    } else {
        Ok(zt(n - m)? * rational_inv(&zt(n - l)?)?)
    }
}

/// All α_lm, l < m.
pub fn alpha_scalings(n: usize, psi: &[Rational], zeta: &[Rational]) -> Result<BTreeMap<(usize, usize), Rational>> {
    let mut out = BTreeMap::new();
    for l in 1..=n {
        for m in l + 1..=n {
            out.insert((l, m), alpha(n, psi, zeta, l, m)?);
        }
    }
    Ok(out)
}

/// The injection φ({ζ}) of the enlarged-chain carrier into the Borel subalgebra.
#[derive(Clone, Debug)]
pub struct PhiMap {
    n: usize,
    zeta: Vec<Rational>,
    e: BTreeMap<(usize, usize), LieElement>,
    hperp: Vec<LieElement>,
    pub domain: Vec<GenLabel>,
    pub domain_elems: Vec<LieElement>,
    pub images: Vec<LieElement>,
}

/// φ for sl(N) with ζ = (ζ_1, …, ζ_{n−1}), all nonzero.
pub fn phi_map(g: &LieAlgebra, zeta: &[Rational]) -> Result<PhiMap> {
    let n = g.sl_rank().ok_or_else(|| Error::BadParameters(format!("φ needs sl(N), got {}", g.name())))?;
    check_n(n)?;
    if zeta.len() != half_rank(n) - 1 {
        return Err(Error::BadParameters(format!("φ on sl({n}) needs {} ζ values", half_rank(n) - 1)));
    }
    if let Some(i) = zeta.iter().position(Zero::is_zero) {
        return Err(Error::DivisionByZero(format!("ζ_{} = 0", i + 1)));
    }
    let mut e_el = BTreeMap::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                e_el.insert((i, j), g.element(&e(i, j))?);
            }
        }
    }
    let hperp = (1..half_rank(n)).map(|j| g.element(&GenLabel::Hperp(j))).collect::<Result<_>>()?;
    let mut phi = PhiMap {
        n,
        zeta: zeta.to_vec(),
        e: e_el,
        hperp,
        domain: jb_carrier_basis(n)?,
        domain_elems: Vec::new(),
        images: Vec::new(),
    };
    phi.domain_elems = phi.domain.iter().map(|l| g.element(l)).collect::<Result<_>>()?;
    let [_, b2, b3] = e_blocks(n);
    let mut images = Vec::new();
    for (label, x) in phi.domain.iter().zip(&phi.domain_elems) {
        let img = match *label {
            GenLabel::HP(_) => x.clone(),
            GenLabel::Hperp(j) => phi.b(j)?.scale(&int(-1)),
            GenLabel::E(l, m) if b2.contains(&(l, m)) => phi.a(l, m)?,
            GenLabel::E(l, m) if b3.contains(&(l, m)) => phi.c(l, m)?,
            _ => x.clone(),
        };
        images.push(img);
    }
    phi.images = images;
    Ok(phi)
}

impl PhiMap {
    fn zt(&self, i: usize) -> Result<Rational> {
        match i {
            0 => Ok(Rational::one()),
            _ => self
                .zeta
                .get(i - 1)
                .cloned()
                .ok_or_else(|| Error::IndexOutOfRange(format!("ζ_{i} for N = {}", self.n))),
        }
    }

    fn ee(&self, i: usize, j: usize) -> Result<&LieElement> {
        self.e.get(&(i, j)).ok_or_else(|| Error::IndexOutOfRange(format!("E({i},{j}) for N = {}", self.n)))
    }

    /// B_j = Σ_{s=1}^{j} (ζ_{j−s}/ζ_j) E_{N−j,N−j+s} − H_j^⊥.
    pub fn b(&self, j: usize) -> Result<LieElement> {
        let h = self
            .hperp
            .get(j.wrapping_sub(1))
            .ok_or_else(|| Error::IndexOutOfRange(format!("B_{j} for N = {}", self.n)))?;
        let zj = rational_inv(&self.zt(j)?)?;
        let mut x = h.scale(&int(-1));
        for s in 1..=j {
            x = x.add(&self.ee(self.n - j, self.n - j + s)?.scale(&(self.zt(j - s)? * &zj)));
        }
        Ok(x)
    }

    /// A_lm = (1/ζ_{N−m}) Σ_{s=0}^{N−m} ζ_{N−m−s} E_{l,m+s}.
    pub fn a(&self, l: usize, m: usize) -> Result<LieElement> {
        if m <= max_links(self.n) || m > self.n || l >= m {
            return Err(Error::IndexOutOfRange(format!("A_({l},{m}) for N = {}", self.n)));
        }
        let k = self.n - m;
        let inv = rational_inv(&self.zt(k)?)?;
        let mut x = LieElement::zero();
        for s in 0..=k {
            x = x.add(&self.ee(l, m + s)?.scale(&(self.zt(k - s)? * &inv)));
        }
        Ok(x)
    }

    /// C_lm = A_lm − [l−1 > z]·(ζ_{N−l}/ζ_{N−m}) Σ_{s=m}^{N} (ζ_{N−s}/ζ_{N−l+1}) E_{l−1,s}.
    pub fn c(&self, l: usize, m: usize) -> Result<LieElement> {
        let z = max_links(self.n);
        if l <= z || l + 2 > m || m > self.n {
            return Err(Error::IndexOutOfRange(format!("C_({l},{m}) for N = {}", self.n)));
        }
        let mut x = self.a(l, m)?;
        if l - 1 > z {
            let pre = self.zt(self.n - l)? * rational_inv(&self.zt(self.n - m)?)?;
            let inv = rational_inv(&self.zt(self.n - l + 1)?)?;
            for s in m..=self.n {
                let c = &pre * self.zt(self.n - s)? * &inv;
                x = x.sub(&self.ee(l - 1, s)?.scale(&c));
            }
        }
        Ok(x)
    }

    /// φ applied to an element of the carrier span.
    pub fn apply(&self, x: &LieElement, dim: usize) -> Result<LieElement> {
        let dense: Vec<Vec<Rational>> = self.domain_elems.iter().map(|v| v.to_dense(dim)).collect();
        let c = Coordinates::new(&dense, dim)?
            .solve(&x.to_dense(dim))
            .ok_or_else(|| Error::BasisMismatch("element outside the enlarged-chain carrier".into()))?;
        Ok(c.iter().zip(&self.images).fold(LieElement::zero(), |acc, (k, y)| acc.add(&y.scale(k))))
    }

    /// φ([x,y]) = [φx, φy] on all basis pairs, and φ injective.
    pub fn check_homomorphism(&self, g: &LieAlgebra) -> Result<VerificationReport> {
        let d = g.dim();
        let dense: Vec<Vec<Rational>> = self.domain_elems.iter().map(|v| v.to_dense(d)).collect();
        let coords = Coordinates::new(&dense, d)?;
        let mut bad = 0;
        for a in 0..self.domain.len() {
            for b in a + 1..self.domain.len() {
                let br = g.bracket(&self.domain_elems[a], &self.domain_elems[b]);
                let c = coords
                    .solve(&br.to_dense(d))
                    .ok_or_else(|| Error::BasisMismatch("carrier span is not a subalgebra".into()))?;
                let lhs = c.iter().zip(&self.images).fold(LieElement::zero(), |acc, (k, y)| acc.add(&y.scale(k)));
                let rhs = g.bracket(&self.images[a], &self.images[b]);
                if lhs != rhs {
                    bad += 1;
                }
            }
        }
        let img: Vec<Vec<Rational>> = self.images.iter().map(|v| v.to_dense(d)).collect();
        let r = rank(&img);
        let rep = VerificationReport::new(format!("phi_hom/sl{}", self.n), g.name())
            .with_residual(bad)
            .note("domain_dim", self.domain.len().to_string())
            .note("image_rank", r.to_string());
        let injective = r == self.domain.len();
        Ok(rep.with_pass(bad == 0 && injective))
    }
}
