//! Chain descriptions and their JSON parameter files.
//!
//! ```json
//! {"schema":"1","N":4,"style":"psi_zeta",
//!  "links":[{"k":0,"kappa":1,"psi":"1"},{"k":1,"kappa":1,"psi":"1/2"}],
//!  "enlargement":{"jordanian":{"zeta":["2"]}}}
//! ```

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use super::{jordanian_node, link_nodes, product, sigma, LinkKind};
use crate::error::{Error, Result};
use crate::exactring::{fmt_rational, parse_rational, Rational, Scalar};
use crate::liealg::{e, half_rank, max_links, GenLabel, LieAlgebra};
use crate::tensorexpr::{Node, TensorExpr};

pub const SCHEMA: &str = "1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Style {
    /// Links carry ψ_l, Jordanian factors ζ_i (composite σ arguments ψ_iζ_i).
    PsiZeta,
    /// Links carry ν_l, Jordanian factors ρ_i (independent σ arguments).
    NuRho,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LinkSpec {
    pub k: usize,
    /// Discrete switch κ_{k+1} of the link's extension factors.
    pub kappa: bool,
    /// ψ_{k+1} or ν_{k+1}, depending on the style.
    pub param: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Enlargement {
    None,
    /// Additional factors e^{H_i^⊥⊗σ_i}, i = 1..n−1; `values` are ζ_i or ρ_i.
    /// With `substitute_switched_off`, a factor whose extension is switched
    /// off (κ_i = 0) is replaced by e^{H_i^⊥⊗σ_{N−i,N−i+1}(ρ_i)} instead of
    /// being dropped.
    Jordanian { values: Vec<Rational>, substitute_switched_off: bool },
    /// F_R = exp(Σ β^{mn} I_m⊗I_n) over I = (σ_0, …, σ_{z−1}, E^P_1, …, E^P_{n−1}).
    Reshetikhin { beta: Vec<Vec<Rational>> },
}

/// e^{c·left⊗right}, prepended to the chain (used for negative controls).
#[derive(Clone, Debug, PartialEq)]
pub struct RawFactor {
    pub left: GenLabel,
    pub right: GenLabel,
    pub coeff: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct ChainSpec {
    pub n: usize,
    pub style: Style,
    pub links: Vec<LinkSpec>,
    pub enlargement: Enlargement,
    pub raw_factors: Vec<RawFactor>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Lit {
    Str(String),
    Int(i64),
}

impl Lit {
    fn value(&self) -> Result<Rational> {
        match self {
            Lit::Str(s) => parse_rational(s),
            Lit::Int(i) => Ok(crate::exactring::int(*i)),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawLink {
    k: usize,
    #[serde(default)]
    kappa: Option<u8>,
    psi: Option<Lit>,
    nu: Option<Lit>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawJordanian {
    zeta: Option<Vec<Lit>>,
    rho: Option<Vec<Lit>>,
    #[serde(default)]
    substitute_switched_off: bool,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "snake_case")]
enum RawEnlargement {
    Jordanian(RawJordanian),
    Reshetikhin { beta: Vec<Vec<Lit>> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawFactorJson {
    left: String,
    right: String,
    coeff: Lit,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpec {
    schema: Option<String>,
    #[serde(rename = "N")]
    n: usize,
    style: Option<Style>,
    #[serde(default)]
    links: Vec<RawLink>,
    enlargement: Option<RawEnlargement>,
    #[serde(default)]
    raw_factors: Vec<RawFactorJson>,
}

fn lits(v: &[Lit]) -> Result<Vec<Rational>> {
    v.iter().map(Lit::value).collect()
}

fn strs(v: &[Rational]) -> Vec<String> {
    v.iter().map(fmt_rational).collect()
}

impl ChainSpec {
    /// Full peripheric chain with link parameters ψ_1..ψ_z (all κ = 1).
    pub fn peripheric(n: usize, psi: &[Rational]) -> Self {
        ChainSpec {
            n,
            style: Style::PsiZeta,
            links: psi.iter().enumerate().map(|(k, p)| LinkSpec { k, kappa: true, param: p.clone() }).collect(),
            enlargement: Enlargement::None,
            raw_factors: Vec::new(),
        }
    }

    /// Jordanian-enlarged chain in the (ψ, ζ) parameterization.
    pub fn enlarged_jordanian(n: usize, psi: &[Rational], zeta: &[Rational]) -> Self {
        ChainSpec {
            enlargement: Enlargement::Jordanian { values: zeta.to_vec(), substitute_switched_off: false },
            ..Self::peripheric(n, psi)
        }
    }

    /// Jordanian-enlarged chain in the (ν, ρ) parameterization.
    pub fn enlarged_jordanian_nu_rho(n: usize, nu: &[Rational], rho: &[Rational]) -> Self {
        ChainSpec { style: Style::NuRho, ..Self::enlarged_jordanian(n, nu, rho) }
    }

    /// Reshetikhin-enlarged chain F_R F^P_B.
    pub fn enlarged_reshetikhin(n: usize, psi: &[Rational], beta: Vec<Vec<Rational>>) -> Self {
        ChainSpec { enlargement: Enlargement::Reshetikhin { beta }, ..Self::peripheric(n, psi) }
    }

    pub fn with_kappa(mut self, kappa: &[bool]) -> Self {
        for (l, k) in self.links.iter_mut().zip(kappa) {
            l.kappa = *k;
        }
        self
    }

    pub fn with_substitution(mut self, on: bool) -> Self {
        if let Enlargement::Jordanian { substitute_switched_off, .. } = &mut self.enlargement {
            *substitute_switched_off = on;
        }
        self
    }

    /// Size of the commuting primitive set {σ_k} ∪ {E^P_i} (N − 1).
    pub fn reshetikhin_size(n: usize) -> usize {
        max_links(n) + half_rank(n) - 1
    }

    pub fn is_full_chain(&self) -> bool {
        self.links.len() == max_links(self.n) && self.links.iter().enumerate().all(|(i, l)| l.k == i)
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.n;
        if n < 2 {
            return Err(Error::BadParameters(format!("N must be at least 2, got {n}")));
        }
        let max = max_links(n);
        if self.links.len() > max {
            return Err(Error::TooManyLinks { requested: self.links.len(), max, n });
        }
        for w in self.links.windows(2) {
            if w[0].k >= w[1].k {
                return Err(Error::BadParameters("link indices must be strictly increasing".into()));
            }
        }
        if let Some(l) = self.links.iter().find(|l| l.k >= max) {
            return Err(Error::IndexOutOfRange(format!("link {} needs k+1 < N-k, N = {n}", l.k)));
        }
        match &self.enlargement {
            Enlargement::None => {}
            Enlargement::Jordanian { values, .. } => {
                if !self.is_full_chain() {
                    return Err(Error::BadParameters("a Jordanian enlargement needs the full chain".into()));
                }
                if values.len() != half_rank(n) - 1 {
                    return Err(Error::BadParameters(format!(
                        "expected {} Jordanian parameters, got {}",
                        half_rank(n) - 1,
                        values.len()
                    )));
                }
            }
            Enlargement::Reshetikhin { beta } => {
                if !self.is_full_chain() {
                    return Err(Error::BadParameters("a Reshetikhin enlargement needs the full chain".into()));
                }
                let m = Self::reshetikhin_size(n);
                if beta.len() != m || beta.iter().any(|r| r.len() != m) {
                    return Err(Error::BadParameters(format!("β must be {m}x{m}")));
                }
            }
        }
        Ok(())
    }

    /// Parses a JSON parameter file; all failures map to `Error::Parse` or
    /// a validation error, never a panic.
    pub fn from_json_str(s: &str) -> Result<Self> {
        let raw: RawSpec = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if let Some(v) = &raw.schema {
            if v != SCHEMA {
                return Err(Error::Parse(format!("unsupported schema {v:?}")));
            }
        }
        let style = raw.style.unwrap_or(Style::PsiZeta);
        let links = raw
            .links
            .iter()
            .map(|l| {
                let lit = match (style, &l.psi, &l.nu) {
                    (Style::PsiZeta, Some(p), None) | (Style::NuRho, None, Some(p)) => p,
                    _ => {
                        return Err(Error::Parse(format!(
                            "link {} needs exactly one of psi (psi_zeta) or nu (nu_rho)",
                            l.k
                        )))
                    }
                };
                let kappa = match l.kappa.unwrap_or(1) {
                    0 => false,
                    1 => true,
                    x => return Err(Error::Parse(format!("kappa must be 0 or 1, got {x}"))),
                };
                Ok(LinkSpec { k: l.k, kappa, param: lit.value()? })
            })
            .collect::<Result<Vec<_>>>()?;
        let enlargement = match &raw.enlargement {
            None => Enlargement::None,
            Some(RawEnlargement::Jordanian(j)) => {
                let values = match (style, &j.zeta, &j.rho) {
                    (Style::PsiZeta, Some(v), None) | (Style::NuRho, None, Some(v)) => lits(v)?,
                    _ => return Err(Error::Parse("jordanian needs zeta (psi_zeta) or rho (nu_rho)".into())),
                };
                Enlargement::Jordanian { values, substitute_switched_off: j.substitute_switched_off }
            }
            Some(RawEnlargement::Reshetikhin { beta }) => Enlargement::Reshetikhin {
                beta: beta.iter().map(|r| lits(r)).collect::<Result<_>>()?,
            },
        };
        let raw_factors = raw
            .raw_factors
            .iter()
            .map(|f| {
                Ok(RawFactor { left: f.left.parse()?, right: f.right.parse()?, coeff: f.coeff.value()? })
            })
            .collect::<Result<Vec<_>>>()?;
        let spec = ChainSpec { n: raw.n, style, links, enlargement, raw_factors };
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> Value {
        let (pk, vk) = match self.style {
            Style::PsiZeta => ("psi", "zeta"),
            Style::NuRho => ("nu", "rho"),
        };
        let links: Vec<Value> = self
            .links
            .iter()
            .map(|l| json!({"k": l.k, "kappa": u8::from(l.kappa), pk: fmt_rational(&l.param)}))
            .collect();
        let mut out = json!({
            "schema": SCHEMA,
            "N": self.n,
            "style": self.style,
            "links": links,
        });
        match &self.enlargement {
            Enlargement::None => {}
            Enlargement::Jordanian { values, substitute_switched_off } => {
                let mut j = json!({ vk: strs(values) });
                if *substitute_switched_off {
                    j["substitute_switched_off"] = json!(true);
                }
                out["enlargement"] = json!({ "jordanian": j });
            }
            Enlargement::Reshetikhin { beta } => {
                let b: Vec<Vec<String>> = beta.iter().map(|r| strs(r)).collect();
                out["enlargement"] = json!({"reshetikhin": {"beta": b}});
            }
        }
        if !self.raw_factors.is_empty() {
            out["raw_factors"] = self
                .raw_factors
                .iter()
                .map(|f| json!({"left": f.left.to_string(), "right": f.right.to_string(), "coeff": fmt_rational(&f.coeff)}))
                .collect();
        }
        out
    }

    /// Parameter assignment as printed in reports.
    pub fn params(&self) -> BTreeMap<String, String> {
        let (pk, vk) = match self.style {
            Style::PsiZeta => ("psi", "zeta"),
            Style::NuRho => ("nu", "rho"),
        };
        let mut m = BTreeMap::new();
        for l in &self.links {
            m.insert(format!("{pk}{}", l.k + 1), fmt_rational(&l.param));
            if !l.kappa {
                m.insert(format!("kappa{}", l.k + 1), "0".into());
            }
        }
        match &self.enlargement {
            Enlargement::None => {}
            Enlargement::Jordanian { values, .. } => {
                for (i, v) in values.iter().enumerate() {
                    m.insert(format!("{vk}{}", i + 1), fmt_rational(v));
                }
            }
            Enlargement::Reshetikhin { beta } => {
                for (a, row) in beta.iter().enumerate() {
                    for (b, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            m.insert(format!("beta{}_{}", a + 1, b + 1), fmt_rational(v));
                        }
                    }
                }
            }
        }
        for (i, f) in self.raw_factors.iter().enumerate() {
            m.insert(format!("raw{}", i + 1), format!("{}*{}⊗{}", fmt_rational(&f.coeff), f.left, f.right));
        }
        m
    }

    /// Same chain shape with new (ψ, ζ) values, converted to this spec's style.
    pub fn with_psi_zeta(&self, psi: &[Rational], zeta: &[Rational]) -> Result<Self> {
        let (p, z) = match self.style {
            Style::PsiZeta => (psi.to_vec(), zeta.to_vec()),
            Style::NuRho => super::psi_zeta_to_nu_rho(psi, zeta)?,
        };
        let mut out = self.clone();
        for (l, v) in out.links.iter_mut().zip(&p) {
            l.param = v.clone();
        }
        if let Enlargement::Jordanian { values, .. } = &mut out.enlargement {
            *values = z.into_iter().take(values.len()).collect();
        }
        Ok(out)
    }

    /// The twist with every continuous parameter multiplied by `xi` (use
    /// `S::one()` for the plain twist, ξ as a jet for the semiclassical
    /// expansion).
    pub fn build<S: Scalar>(&self, g: &LieAlgebra, xi: &S) -> Result<TensorExpr<S>> {
        self.validate()?;
        let n = self.n;
        if g.sl_rank() != Some(n) {
            return Err(Error::ConstraintViolation(format!("spec is for sl({n}), algebra is {}", g.name())));
        }
        let lift = |r: &Rational| S::from_rational(r).mul_ref(xi);
        let one = Rational::one();
        let jvals: Option<&Vec<Rational>> = match &self.enlargement {
            Enlargement::Jordanian { values, .. } => Some(values),
            _ => None,
        };
        // ζ_k for link k (ζ_0 = 1; no enlargement means ζ ≡ 1)
        let zeta_of = |k: usize| -> &Rational {
            match (self.style, jvals) {
                (Style::PsiZeta, Some(v)) if k > 0 => &v[k - 1],
                _ => &one,
            }
        };
        let sig_coeff = |l: &LinkSpec| -> Rational { &l.param * zeta_of(l.k) };

        let mut nodes: Vec<Node<S>> = Vec::new();
        for f in &self.raw_factors {
            g.element(&f.left)?;
            g.element(&f.right)?;
            let body = Node::gen(f.left.clone(), 1).times(Node::gen(f.right.clone(), 2));
            nodes.push(body.scaled(lift(&f.coeff)).exp());
        }
        match &self.enlargement {
            Enlargement::None => {}
            Enlargement::Jordanian { values, substitute_switched_off } => {
                for i in 1..half_rank(n) {
                    let link = &self.links[i - 1];
                    let rho = match self.style {
                        Style::PsiZeta => &link.param * &values[i - 1],
                        Style::NuRho => values[i - 1].clone(),
                    };
                    let h = Node::gen(GenLabel::Hperp(i), 1);
                    if link.kappa {
                        nodes.push(jordanian_node(h, &e(i, n - i), &lift(&rho)));
                    } else if *substitute_switched_off {
                        nodes.push(jordanian_node(h, &e(n - i, n - i + 1), &lift(&rho)));
                    }
                }
            }
            Enlargement::Reshetikhin { beta } => {
                let mut prims: Vec<Box<dyn Fn(usize) -> Node<S>>> = Vec::new();
                for l in &self.links {
                    let (root, c) = (e(l.k + 1, n - l.k), lift(&sig_coeff(l)));
                    prims.push(Box::new(move |leg| sigma(&root, &c, leg)));
                }
                for i in 1..half_rank(n) {
                    prims.push(Box::new(move |leg| Node::gen(e(i, n - i), leg)));
                }
                let mut terms = Vec::new();
                for (a, row) in beta.iter().enumerate() {
                    for (b, v) in row.iter().enumerate() {
                        if !v.is_zero() {
                            terms.push(prims[a](1).times(prims[b](2)).scaled(lift(v)));
                        }
                    }
                }
                if !terms.is_empty() {
                    nodes.push(Node::Sum(terms).exp());
                }
            }
        }
        for l in self.links.iter().rev() {
            let sig = lift(&sig_coeff(l));
            let ext = if l.kappa { sig.clone() } else { S::zero() };
            nodes.extend(link_nodes(n, l.k, &ext, &sig, LinkKind::Peripheric));
        }
        Ok(product(nodes))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactring::{int, q};

    #[test]
    fn json_round_trip() {
        let s = ChainSpec::enlarged_jordanian(7, &[int(1), q(1, 2), q(1, 3)], &[int(1), int(2), int(3)]);
        let text = serde_json::to_string(&s.to_json()).unwrap();
        assert_eq!(ChainSpec::from_json_str(&text).unwrap(), s);
        let r = ChainSpec::enlarged_reshetikhin(4, &[int(1), int(1)], vec![vec![int(0); 3]; 3]);
        assert_eq!(ChainSpec::from_json_str(&r.to_json().to_string()).unwrap(), r);
    }

    #[test]
    fn printed_example_parses() {
        let s = ChainSpec::from_json_str(
            r#"{"N":7,"links":[{"k":0,"kappa":1,"psi":"1"},{"k":1,"kappa":1,"psi":"1/2"},{"k":2,"kappa":1,"psi":"1/3"}],"enlargement":{"jordanian":{"zeta":["1","2","3"]}}}"#,
        )
        .unwrap();
        assert_eq!(s.n, 7);
        assert_eq!(s.links[1].param, q(1, 2));
    }

    #[test]
    fn malformed_inputs_are_errors() {
        for bad in [
            "",
            "{",
            r#"{"N":"x"}"#,
            r#"{"N":4,"links":[{"k":0,"psi":"1/0"}]}"#,
            r#"{"N":4,"links":[{"k":0,"nu":"1"}]}"#,
            r#"{"N":4,"links":[{"k":0,"psi":"1"},{"k":0,"psi":"1"}]}"#,
            r#"{"N":4,"links":[{"k":0,"psi":"1"},{"k":1,"psi":"1"},{"k":2,"psi":"1"}]}"#,
            r#"{"N":4,"links":[{"k":0,"psi":"1"}],"enlargement":{"jordanian":{"zeta":["1"]}}}"#,
            r#"{"N":4,"bogus":1}"#,
            r#"{"schema":"2","N":4}"#,
        ] {
            assert!(ChainSpec::from_json_str(bad).is_err(), "accepted {bad}");
        }
    }
}
