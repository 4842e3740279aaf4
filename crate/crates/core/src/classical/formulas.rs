//! The printed classical r-matrices, by family name.

use std::collections::BTreeMap;

use num_traits::One;

use super::Bivector;
use crate::error::{Error, Result};
use crate::exactring::{rational_inv, Rational};
use crate::liealg::{e, half_rank, max_links, GenLabel, LieAlgebra, LieElement};

/// Named parameter vectors, e.g. `psi`, `zeta`, `varsigma`, `beta` (row-major).
pub type Params = BTreeMap<String, Vec<Rational>>;

pub const R_FAMILIES: &[&str] = &[
    "r_JE_sl3",
    "r_RE_sl3",
    "r_JE_P_sl3",
    "r_JJ_sl3",
    "r_RB",
    "r_B_canonical",
    "r_JB",
    "r_JB_new",
    "r_JB_sl4",
    "r_JB_sl7",
    "r_JB_sl7_phi",
];

struct Build<'a> {
    g: &'a LieAlgebra,
    n: usize,
    r: Bivector,
}

impl Build<'_> {
    fn el(&self, l: GenLabel) -> Result<LieElement> {
        self.g.element(&l)
    }

    fn e(&self, i: usize, j: usize) -> Result<LieElement> {
        self.el(e(i, j))
    }

    fn wedge(&mut self, x: &LieElement, y: &LieElement, c: &Rational) {
        self.r.add_wedge(x, y, c);
    }

    fn wedge_l(&mut self, x: GenLabel, y: GenLabel, c: &Rational) -> Result<()> {
        let (x, y) = (self.el(x)?, self.el(y)?);
        self.wedge(&x, &y, c);
        Ok(())
    }
}

struct Args<'a> {
    name: &'a str,
    p: &'a Params,
    used: Vec<&'static str>,
}

impl Args<'_> {
    fn get(&mut self, key: &'static str, len: usize) -> Result<Vec<Rational>> {
        self.used.push(key);
        match self.p.get(key) {
            Some(v) if v.len() == len => Ok(v.clone()),
            Some(v) => Err(Error::BadParameters(format!(
                "{}: `{key}` needs {len} values, got {}",
                self.name,
                v.len()
            ))),
            None => Err(Error::BadParameters(format!("{}: missing `{key}`", self.name))),
        }
    }

    fn scalar(&mut self, key: &'static str) -> Result<Rational> {
        Ok(self.get(key, 1)?.remove(0))
    }

    fn finish(&self) -> Result<()> {
        if let Some(k) = self.p.keys().find(|k| !self.used.contains(&k.as_str())) {
            return Err(Error::BadParameters(format!("{}: unexpected parameter `{k}`", self.name)));
        }
        Ok(())
    }
}

fn need_rank(name: &str, n: usize, want: usize) -> Result<()> {
    if n != want {
        return Err(Error::BadParameters(format!("{name} is defined on sl({want}), not sl({n})")));
    }
    Ok(())
}

/// ζ_0 = 1, ζ_i = zeta[i−1].
fn z0(zeta: &[Rational], i: usize) -> Rational {
    if i == 0 {
        Rational::one()
    } else {
        zeta[i - 1].clone()
    }
}

/// Σ_k c_k (H_k∧E_{k+1,N−k} + Σ_{s=k+2}^{top(k)} E_{k+1,s}∧E_{s,N−k}).
fn links(b: &mut Build, coeff: &[Rational], cartan: impl Fn(usize) -> GenLabel, inner_top: impl Fn(usize) -> usize) -> Result<()> {
    let n = b.n;
    for (k, c) in coeff.iter().enumerate() {
        b.wedge_l(cartan(k), e(k + 1, n - k), c)?;
        for s in k + 2..=inner_top(k) {
            b.wedge_l(e(k + 1, s), e(s, n - k), c)?;
        }
    }
    Ok(())
}

/// The r-matrix of family `name` on `g = sl(N)`, exactly as printed.
///
/// Parameters per family:
/// `r_JE_sl3`: xi; `r_RE_sl3`: zeta; `r_JE_P_sl3`: varsigma; `r_JJ_sl3`: eta;
/// `r_RB`: psi (z), beta ((N−1)², row-major over J = (E_{k+1,N−k})_k ++ (E_{l,N−l})_l);
/// `r_B_canonical`: psi; `r_JB`: psi (z) and zeta (n−1), or nu and rho;
/// `r_JB_new`: psi, varsigma; `r_JB_sl4`: psi (2), varsigma (1);
/// `r_JB_sl7`, `r_JB_sl7_phi`: psi (3), varsigma (3).
pub fn r_formula(g: &LieAlgebra, name: &str, params: &Params) -> Result<Bivector> {
    if !R_FAMILIES.contains(&name) {
        return Err(Error::UnknownFormula(name.to_string()));
    }
    let n = g
        .sl_rank()
        .ok_or_else(|| Error::BadParameters(format!("{name} needs sl(N), got {}", g.name())))?;
    let (z, hn) = (max_links(n), half_rank(n));
    let mut a = Args { name, p: params, used: Vec::new() };
    let mut b = Build { g, n, r: Bivector::zero(g.dim()) };
    let one = Rational::one();
    let hp = GenLabel::HP;
    let hperp = GenLabel::Hperp;
    match name {
        // H^P∧E + A∧B + ξH^⊥∧A with A = E_12, B = E_23, E = E_13
        "r_JE_sl3" | "r_RE_sl3" => {
            need_rank(name, n, 3)?;
            b.wedge_l(hp(0), e(1, 3), &one)?;
            b.wedge_l(e(1, 2), e(2, 3), &one)?;
            if name == "r_JE_sl3" {
                b.wedge_l(hperp(1), e(1, 2), &a.scalar("xi")?)?;
            } else {
                b.wedge_l(hperp(1), e(1, 3), &a.scalar("zeta")?)?;
            }
        }
        // H^P∧E_13 + E_12∧(E_23 − ςH^⊥)
        "r_JE_P_sl3" => {
            need_rank(name, n, 3)?;
            let s = a.scalar("varsigma")?;
            b.wedge_l(hp(0), e(1, 3), &one)?;
            let y = b.e(2, 3)?.sub(&b.el(hperp(1))?.scale(&s));
            let x = b.e(1, 2)?;
            b.wedge(&x, &y, &one);
        }
        // H_12^⊥∧E_13 + ηH_13^⊥∧E_12, H_12^⊥ = H^P − H^⊥, H_13^⊥ = H^⊥
        "r_JJ_sl3" => {
            need_rank(name, n, 3)?;
            let eta = a.scalar("eta")?;
            let h12 = b.el(hp(0))?.sub(&b.el(hperp(1))?);
            let x = b.e(1, 3)?;
            b.wedge(&h12, &x, &one);
            b.wedge_l(hperp(1), e(1, 2), &eta)?;
        }
        "r_B_canonical" => {
            let psi = a.get("psi", z)?;
            links(&mut b, &psi, |k| GenLabel::H(k + 1, n - k), |k| n - k - 1)?;
        }
        "r_RB" => {
            let psi = a.get("psi", z)?;
            let m = n - 1;
            let beta = a.get("beta", m * m)?;
            links(&mut b, &psi, hp, |k| n - k - 1)?;
            let j: Vec<GenLabel> =
                (0..z).map(|k| e(k + 1, n - k)).chain((1..hn).map(|l| e(l, n - l))).collect();
            for p in 0..m {
                for q in 0..m {
                    b.wedge_l(j[p].clone(), j[q].clone(), &beta[p * m + q])?;
                }
            }
        }
        "r_JB" => {
            let (link_c, jf_c) = if params.contains_key("nu") || params.contains_key("rho") {
                (a.get("nu", z)?, a.get("rho", hn - 1)?)
            } else {
                let psi = a.get("psi", z)?;
                let zeta = a.get("zeta", hn - 1)?;
                let link_c = (0..z).map(|k| &psi[k] * z0(&zeta, k)).collect();
                let jf_c = (1..hn).map(|i| &psi[i - 1] * &zeta[i - 1]).collect();
                (link_c, jf_c)
            };
            links(&mut b, &link_c, hp, |k| n - k - 1)?;
            for (i, c) in (1..hn).zip(&jf_c) {
                b.wedge_l(hperp(i), e(i, n - i), c)?;
            }
        }
        "r_JB_new" => {
            let psi = a.get("psi", z)?;
            let vs = a.get("varsigma", hn - 1)?;
            for k in 0..z {
                let c = &psi[k] * z0(&vs, k);
                if n - k - 1 > k + 1 {
                    let x = b.e(k + 1, n - k - 1)?;
                    let ratio = z0(&vs, k + 1) * rational_inv(&z0(&vs, k))?;
                    let y = b.e(n - k - 1, n - k)?.sub(&b.el(hperp(k + 1))?.scale(&ratio));
                    b.wedge(&x, &y, &c);
                }
                b.wedge_l(hp(k), e(k + 1, n - k), &c)?;
                for s in k + 2..=(n - k).saturating_sub(2) {
                    b.wedge_l(e(k + 1, s), e(s, n - k), &c)?;
                }
            }
        }
        "r_JB_sl4" => {
            need_rank(name, n, 4)?;
            let psi = a.get("psi", 2)?;
            let s1 = a.scalar("varsigma")?;
            let x = b.e(1, 3)?;
            let y = b.e(3, 4)?.sub(&b.el(hperp(1))?.scale(&s1));
            b.wedge(&x, &y, &psi[0]);
            b.wedge_l(hp(1), e(2, 3), &(&psi[1] * &s1))?;
            b.wedge_l(hp(0), e(1, 4), &psi[0])?;
            b.wedge_l(e(1, 2), e(2, 4), &psi[0])?;
        }
        "r_JB_sl7" => {
            need_rank(name, n, 7)?;
            let psi = a.get("psi", 3)?;
            let vs = a.get("varsigma", 3)?;
            let blocks: [(usize, Rational); 3] =
                [(0, psi[0].clone()), (1, &psi[1] * &vs[0]), (2, &psi[2] * &vs[1])];
            for (k, c) in blocks {
                let (l, r) = (k + 1, 7 - k);
                b.wedge_l(hp(k), e(l, r), &c)?;
                for s in l + 1..r - 1 {
                    b.wedge_l(e(l, s), e(s, r), &c)?;
                }
                // E_{l,r−1}∧(E_{r−1,r} − (ς_{k+1}/ς_k) H^⊥_{k+1})
                let ratio = &vs[k] * rational_inv(&z0(&vs, k))?;
                let x = b.e(l, r - 1)?;
                let y = b.e(r - 1, r)?.sub(&b.el(hperp(k + 1))?.scale(&ratio));
                b.wedge(&x, &y, &c);
            }
        }
        "r_JB_sl7_phi" => {
            need_rank(name, n, 7)?;
            let psi = a.get("psi", 3)?;
            let vs = a.get("varsigma", 3)?;
            sl7_phi(&mut b, &psi, &vs)?;
        }
        _ => unreachable!("family list checked above"),
    }
    a.finish()?;
    Ok(b.r)
}

/// The sl(7) r-matrix written in the φ-image generators A_lm, B_j.
fn sl7_phi(b: &mut Build, psi: &[Rational], vs: &[Rational]) -> Result<()> {
    let phi = super::phi_map(b.g, vs)?;
    let inv = |x: &Rational| rational_inv(x);
    let (s1, s2, s3) = (&vs[0], &vs[1], &vs[2]);
    let (r21, r32, r12, r23, i1) = (s2 * inv(s1)?, s3 * inv(s2)?, s1 * inv(s2)?, s2 * inv(s3)?, inv(s1)?);
    // the printed A_lm with l > z are the images C_lm of the third block
    let a = |l, m| if l > 3 { phi.c(l, m) } else { phi.a(l, m) };
    // x − c·y
    let lc = |x: LieElement, c: &Rational, y: LieElement| x.sub(&y.scale(c));
    let mut t: Vec<(LieElement, LieElement, Rational)> = Vec::new();

    let c1 = psi[0].clone();
    let a57p = a(5, 7)?.add(&a(4, 7)?.scale(&r23));
    t.push((b.el(GenLabel::HP(0))?, a(1, 7)?, c1.clone()));
    t.push((b.e(1, 2)?, a(2, 7)?, c1.clone()));
    t.push((b.e(1, 3)?, a(3, 7)?, c1.clone()));
    t.push((lc(a(1, 4)?, &r23, a(1, 5)?), a(4, 7)?, c1.clone()));
    t.push((lc(a(1, 5)?, &r12, a(1, 6)?), a57p.clone(), c1.clone()));
    t.push((lc(a(1, 6)?, &i1, a(1, 7)?), phi.b(1)?.scale(s1), c1));

    let c2 = s1 * &psi[1];
    t.push((b.el(GenLabel::HP(1))?, lc(a(2, 6)?, &i1, a(2, 7)?), c2.clone()));
    t.push((b.e(2, 3)?, lc(a(3, 6)?, &i1, a(3, 7)?), c2.clone()));
    t.push((lc(a(2, 4)?, &r23, a(2, 5)?), lc(a(4, 6)?, &i1, a(4, 7)?), c2.clone()));
    t.push((lc(a(2, 5)?, &r12, a(2, 6)?), lc(phi.b(2)?.scale(&r21), &i1, a57p), c2));

    let c3 = s2 * &psi[2];
    t.push((b.el(GenLabel::HP(2))?, lc(a(3, 5)?, &r12, a(3, 6)?), c3.clone()));
    t.push((lc(a(3, 4)?, &r23, a(3, 5)?), lc(phi.b(3)?.scale(&r32), &r12, a(4, 6)?), c3));

    for (x, y, c) in t {
        b.wedge(&x, &y, &c);
    }
    Ok(())
}
