//! Lie algebras by structure constants: sl(N) in the gl(N) matrix-unit
//! basis, the Cartan projections H^P, H^R, H^⊥, small abstract algebras,
//! subalgebra closure and Chevalley–Eilenberg H² with trivial coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::exactring::{fmt_rational, int, q, Rational};
use crate::linalg::{self, Coordinates, DenseMatrix, Echelon};

/// `n` with N = 2n (even) or N = 2n − 1 (odd).
pub fn half_rank(n: usize) -> usize {
    n.div_ceil(2)
}

/// Number of links of a full peripheric chain, z = N − n.
pub fn max_links(n: usize) -> usize {
    n - half_rank(n)
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GenLabel {
    /// Matrix unit E_{i,j}, 1-based, i ≠ j.
    E(usize, usize),
    /// H_{i,k} = (E_ii − E_kk)/2.
    H(usize, usize),
    /// H^P_{k+1,N−k}, k the 0-based link index.
    HP(usize),
    /// H^R_{k+1,N−k} = H_{k+1,N−k} − H^P_{k+1,N−k}.
    HR(usize),
    /// H_i^⊥, 1-based.
    Hperp(usize),
    Abstract(String),
}

impl fmt::Display for GenLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GenLabel::E(i, j) => write!(f, "E({i},{j})"),
            GenLabel::H(i, k) => write!(f, "H({i},{k})"),
            GenLabel::HP(k) => write!(f, "HP({k})"),
            GenLabel::HR(k) => write!(f, "HR({k})"),
            GenLabel::Hperp(i) => write!(f, "Hperp({i})"),
            GenLabel::Abstract(s) => write!(f, "{s}"),
        }
    }
}

impl FromStr for GenLabel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::Parse(format!("bad generator label {s:?}"));
        let Some(open) = s.find('(') else {
            if s.is_empty() || !s.chars().all(|c| c.is_alphanumeric() || c == '_') {
                return Err(bad());
            }
            return Ok(GenLabel::Abstract(s.to_string()));
        };
        let head = &s[..open];
        let args = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let nums: Vec<usize> = args
            .split(',')
            .map(|a| a.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, nums.as_slice()) {
            ("E", [i, j]) => Ok(GenLabel::E(*i, *j)),
            ("H", [i, k]) => Ok(GenLabel::H(*i, *k)),
            ("HP", [k]) => Ok(GenLabel::HP(*k)),
            ("HR", [k]) => Ok(GenLabel::HR(*k)),
            ("Hperp", [i]) => Ok(GenLabel::Hperp(*i)),
            _ => Err(bad()),
        }
    }
}

pub fn e(i: usize, j: usize) -> GenLabel {
    GenLabel::E(i, j)
}

pub fn abs(name: &str) -> GenLabel {
    GenLabel::Abstract(name.to_string())
}

/// Sparse coordinate vector over the basis of some algebra.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieElement {
    coeffs: BTreeMap<usize, Rational>,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn unit(i: usize) -> Self {
        Self::from_pairs([(i, Rational::one())])
    }

    pub fn from_pairs(pairs: impl IntoIterator<Item = (usize, Rational)>) -> Self {
        let mut x = Self::zero();
        for (i, c) in pairs {
            x.add_term(i, &c);
        }
        x
    }

    pub fn from_dense(v: &[Rational]) -> Self {
        Self::from_pairs(v.iter().cloned().enumerate())
    }

    pub fn to_dense(&self, dim: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); dim];
        for (&i, c) in &self.coeffs {
            v[i] = c.clone();
        }
        v
    }

    pub fn add_term(&mut self, i: usize, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(i).or_insert_with(Rational::zero);
        *slot += c;
        if slot.is_zero() {
            self.coeffs.remove(&i);
        }
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(&i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.coeffs.iter().map(|(&i, c)| (i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (i, c) in o.iter() {
            r.add_term(i, c);
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&-Rational::one()))
    }

    pub fn scale(&self, s: &Rational) -> Self {
        if s.is_zero() {
            return Self::zero();
        }
        LieElement { coeffs: self.coeffs.iter().map(|(&i, c)| (i, c * s)).collect() }
    }
}

/// A Lie algebra given by a basis and a full bracket table. Brackets of
/// basis elements are stored for every ordered pair.
#[derive(Clone, Debug)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<GenLabel>,
    index: HashMap<GenLabel, usize>,
    table: Vec<Vec<LieElement>>,
    /// Faithful matrix realization of the basis, when one is known
    /// (the defining representation).
    realization: Option<Vec<DenseMatrix>>,
    sl_rank: Option<usize>,
}

impl PartialEq for LieAlgebra {
    fn eq(&self, o: &Self) -> bool {
        self.name == o.name && self.basis == o.basis && self.table == o.table
    }
}

impl LieAlgebra {
    /// Builds the algebra and verifies antisymmetry and the Jacobi identity
    /// on all basis triples.
    pub fn from_table(
        name: impl Into<String>,
        basis: Vec<GenLabel>,
        table: Vec<Vec<LieElement>>,
        realization: Option<Vec<DenseMatrix>>,
    ) -> Result<Self> {
        let n = basis.len();
        if table.len() != n || table.iter().any(|r| r.len() != n) {
            return Err(Error::ConstraintViolation("bracket table has wrong shape".into()));
        }
        let index = basis.iter().cloned().enumerate().map(|(i, l)| (l, i)).collect::<HashMap<_, _>>();
        if index.len() != n {
            return Err(Error::ConstraintViolation("duplicate basis labels".into()));
        }
        let g = LieAlgebra { name: name.into(), basis, index, table, realization, sl_rank: None };
        g.verify_axioms()?;
        Ok(g)
    }

    /// Abstract algebra from the nonzero brackets `[a,b] = Σ c·x`, listed once per unordered pair.
    pub fn from_brackets(
        name: impl Into<String>,
        labels: &[&str],
        brackets: &[(&str, &str, Vec<(&str, Rational)>)],
        realization: Option<Vec<DenseMatrix>>,
    ) -> Result<Self> {
        let basis: Vec<GenLabel> = labels.iter().map(|s| abs(s)).collect();
        let n = basis.len();
        let idx = |s: &str| {
            labels.iter().position(|l| *l == s).ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let mut table = vec![vec![LieElement::zero(); n]; n];
        for (a, b, res) in brackets {
            let (i, j) = (idx(a)?, idx(b)?);
            let mut x = LieElement::zero();
            for (l, c) in res {
                x.add_term(idx(l)?, c);
            }
            table[j][i] = x.scale(&-Rational::one());
            table[i][j] = x;
        }
        Self::from_table(name, basis, table, realization)
    }

    fn verify_axioms(&self) -> Result<()> {
        let n = self.dim();
        for i in 0..n {
            if !self.table[i][i].is_zero() {
                return Err(Error::ConstraintViolation(format!("[x,x] != 0 for {}", self.basis[i])));
            }
            for j in i + 1..n {
                if self.table[i][j].add(&self.table[j][i]) != LieElement::zero() {
                    return Err(Error::ConstraintViolation(format!(
                        "bracket not antisymmetric on {}, {}",
                        self.basis[i], self.basis[j]
                    )));
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (x, y, z) = (LieElement::unit(i), LieElement::unit(j), LieElement::unit(k));
                    let s = self
                        .bracket(&x, &self.bracket(&y, &z))
                        .add(&self.bracket(&y, &self.bracket(&z, &x)))
                        .add(&self.bracket(&z, &self.bracket(&x, &y)));
                    if !s.is_zero() {
                        return Err(Error::ConstraintViolation(format!(
                            "Jacobi identity fails on {}, {}, {}",
                            self.basis[i], self.basis[j], self.basis[k]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[GenLabel] {
        &self.basis
    }

    pub fn label(&self, i: usize) -> &GenLabel {
        &self.basis[i]
    }

    pub fn index_of(&self, l: &GenLabel) -> Option<usize> {
        self.index.get(l).copied()
    }

    pub fn sl_rank(&self) -> Option<usize> {
        self.sl_rank
    }

    pub fn realization(&self) -> Option<&[DenseMatrix]> {
        self.realization.as_deref()
    }

    pub fn basis_bracket(&self, i: usize, j: usize) -> &LieElement {
        &self.table[i][j]
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> LieElement {
        let mut r = LieElement::zero();
        for (i, a) in x.iter() {
            for (j, b) in y.iter() {
                let ab = a * b;
                for (k, c) in self.table[i][j].iter() {
                    r.add_term(k, &(&ab * c));
                }
            }
        }
        r
    }

    /// Resolves basis labels and, on sl(N), the derived Cartan labels.
    pub fn element(&self, l: &GenLabel) -> Result<LieElement> {
        if let Some(i) = self.index_of(l) {
            return Ok(LieElement::unit(i));
        }
        let Some(n) = self.sl_rank else {
            return Err(Error::UnknownLabel(format!("{l} in {}", self.name)));
        };
        match *l {
            GenLabel::H(i, k) => {
                if i == 0 || k == 0 || i > n || k > n || i == k {
                    return Err(Error::IndexOutOfRange(format!("{l} for N = {n}")));
                }
                let mut d = vec![Rational::zero(); n];
                d[i - 1] = q(1, 2);
                d[k - 1] = q(-1, 2);
                Ok(sl_diag(n, &d))
            }
            GenLabel::HP(k) => cartan_hp(k, n),
            GenLabel::HR(k) => cartan_hr(k, n),
            GenLabel::Hperp(i) => cartan_hperp(i, n),
            _ => Err(Error::UnknownLabel(format!("{l} in {}", self.name))),
        }
    }

    pub fn elem(&self, l: &GenLabel) -> LieElement {
        self.element(l).unwrap_or_else(|e| panic!("{e}"))
    }

    /// Human-readable form such as `E(1,2) + 1/2*H(1,2)`.
    pub fn show(&self, x: &LieElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.iter()
            .map(|(i, c)| {
                if c.is_one() {
                    self.basis[i].to_string()
                } else {
                    format!("{}*{}", c, self.basis[i])
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn to_json(&self) -> Value {
        let mut brackets = Vec::new();
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                let r = &self.table[i][j];
                if r.is_zero() {
                    continue;
                }
                let res: serde_json::Map<String, Value> = r
                    .iter()
                    .map(|(k, c)| (self.basis[k].to_string(), Value::String(fmt_rational(c))))
                    .collect();
                brackets.push(json!({
                    "a": self.basis[i].to_string(),
                    "b": self.basis[j].to_string(),
                    "result": res,
                }));
            }
        }
        json!({
            "name": self.name,
            "dim": self.dim(),
            "basis": self.basis.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "brackets": brackets,
        })
    }
}

/// Index of a label in the sl(N) basis: E_ij (i<j, lexicographic),
/// H_{i,i+1}, then E_ij (i>j, lexicographic).
fn sl_basis(n: usize) -> Vec<GenLabel> {
    let mut b = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in i + 1..=n {
            b.push(e(i, j));
        }
    }
    for i in 1..n {
        b.push(GenLabel::H(i, i + 1));
    }
    for i in 1..=n {
        for j in 1..i {
            b.push(e(i, j));
        }
    }
    b
}

fn sl_offdiag_index(n: usize, i: usize, j: usize) -> usize {
    let upper = n * (n - 1) / 2;
    if i < j {
        // rows 1..i-1 contribute (n - r) entries each
        (1..i).map(|r| n - r).sum::<usize>() + (j - i - 1)
    } else {
        upper + (n - 1) + (1..i).map(|r| r - 1).sum::<usize>() + (j - 1)
    }
}

fn sl_cartan_index(n: usize, i: usize) -> usize {
    n * (n - 1) / 2 + (i - 1)
}

/// Traceless part of `diag(d)` in the Cartan basis H_{i,i+1}:
/// coefficient of H_{j,j+1} is 2(d_1 + … + d_j).
pub fn sl_diag(n: usize, d: &[Rational]) -> LieElement {
    assert_eq!(d.len(), n);
    let mean = d.iter().fold(Rational::zero(), |a, x| a + x) / int(n as i64);
    let mut x = LieElement::zero();
    let mut partial = Rational::zero();
    for j in 1..n {
        partial += &d[j - 1] - &mean;
        x.add_term(sl_cartan_index(n, j), &(&partial * int(2)));
    }
    x
}

/// Decomposes a traceless N×N matrix (given as entries) in the sl(N) basis.
fn sl_from_matrix(n: usize, m: &DenseMatrix) -> LieElement {
    let mut x = LieElement::zero();
    for i in 1..=n {
        for j in 1..=n {
            if i != j && !m[i - 1][j - 1].is_zero() {
                x.add_term(sl_offdiag_index(n, i, j), &m[i - 1][j - 1]);
            }
        }
    }
    let d: Vec<Rational> = (0..n).map(|i| m[i][i].clone()).collect();
    x.add(&sl_diag(n, &d))
}

fn sl_matrix(n: usize, l: &GenLabel) -> DenseMatrix {
    let mut m = linalg::zeros(n, n);
    match *l {
        GenLabel::E(i, j) => m[i - 1][j - 1] = Rational::one(),
        GenLabel::H(i, k) => {
            m[i - 1][i - 1] = q(1, 2);
            m[k - 1][k - 1] = q(-1, 2);
        }
        _ => unreachable!("not an sl(N) basis label"),
    }
    m
}

fn commutator(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let ab = linalg::matmul(a, b);
    let ba = linalg::matmul(b, a);
    ab.iter().zip(&ba).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x - y).collect()).collect()
}

/// sl(N) with the gl(N) matrix-unit basis and Cartan basis H_{i,i+1}.
pub fn build_sl(n: usize) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::IndexOutOfRange(format!("sl(N) needs N >= 2, got {n}")));
    }
    let basis = sl_basis(n);
    let mats: Vec<DenseMatrix> = basis.iter().map(|l| sl_matrix(n, l)).collect();
    let dim = basis.len();
    let mut table = vec![vec![LieElement::zero(); dim]; dim];
    for a in 0..dim {
        for b in a + 1..dim {
            let x = sl_from_matrix(n, &commutator(&mats[a], &mats[b]));
            table[b][a] = x.scale(&-Rational::one());
            table[a][b] = x;
        }
    }
    let mut g = LieAlgebra::from_table(format!("sl({n})"), basis, table, Some(mats))?;
    g.sl_rank = Some(n);
    Ok(g)
}

/// Matrix of an sl(N) element in the defining representation.
pub fn sl_to_matrix(g: &LieAlgebra, x: &LieElement) -> DenseMatrix {
    let mats = g.realization().expect("algebra has a matrix realization");
    let n = mats[0].len();
    let mut m = linalg::zeros(n, n);
    for (i, c) in x.iter() {
        for (r, row) in mats[i].iter().enumerate() {
            for (s, v) in row.iter().enumerate() {
                if !v.is_zero() {
                    m[r][s] += c * v;
                }
            }
        }
    }
    m
}

/// H^P_{k+1,N−k} = E_{k+1,k+1} − (1/N)·I, traceless part.
pub fn cartan_hp(k: usize, n: usize) -> Result<LieElement> {
    if k + 1 >= n - k.min(n) {
        return Err(Error::IndexOutOfRange(format!("HP({k}) needs k+1 < N-k, N = {n}")));
    }
    let mut d = vec![Rational::zero(); n];
    d[k] = Rational::one();
    Ok(sl_diag(n, &d))
}

/// H^R_{k+1,N−k} = H_{k+1,N−k} − H^P_{k+1,N−k}.
pub fn cartan_hr(k: usize, n: usize) -> Result<LieElement> {
    let hp = cartan_hp(k, n)?;
    let mut d = vec![Rational::zero(); n];
    d[k] = q(1, 2);
    d[n - k - 1] = q(-1, 2);
    Ok(sl_diag(n, &d).sub(&hp))
}

/// H_i^⊥ = ((N−2i)/N)·I − Σ_{m=i+1}^{N−i} E_mm (already traceless).
pub fn cartan_hperp(i: usize, n: usize) -> Result<LieElement> {
    let nn = half_rank(n);
    if i == 0 || i + 1 > nn {
        return Err(Error::IndexOutOfRange(format!("Hperp({i}) needs 1 <= i <= {}, N = {n}", nn - 1)));
    }
    let mut d = vec![q((n - 2 * i) as i64, n as i64); n];
    for m in i + 1..=n - i {
        d[m - 1] -= Rational::one();
    }
    Ok(sl_diag(n, &d))
}

/// Four-dimensional L(α,β) on {H, A, B, E}: [H,E]=E, [H,A]=αA, [H,B]=βB,
/// [A,B]=E, with α + β = 1. Realized faithfully by 3×3 matrices
/// H = diag(1, 1−α, 0), A = E12, B = E23, E = E13.
pub fn build_l(alpha: &Rational, beta: &Rational) -> Result<LieAlgebra> {
    if alpha + beta != Rational::one() {
        return Err(Error::ConstraintViolation(format!("L(α,β) needs α+β = 1, got {alpha} + {beta}")));
    }
    let unit = |i: usize, j: usize| {
        let mut m = linalg::zeros(3, 3);
        m[i][j] = Rational::one();
        m
    };
    let mut h = linalg::zeros(3, 3);
    h[0][0] = Rational::one();
    h[1][1] = Rational::one() - alpha;
    let real = vec![h, unit(0, 1), unit(1, 2), unit(0, 2)];
    LieAlgebra::from_brackets(
        format!("L({alpha},{beta})"),
        &["H", "A", "B", "E"],
        &[
            ("H", "E", vec![("E", int(1))]),
            ("H", "A", vec![("A", alpha.clone())]),
            ("H", "B", vec![("B", beta.clone())]),
            ("A", "B", vec![("E", int(1))]),
        ],
        Some(real),
    )
}

/// Two-dimensional Borel algebra [H,E] = E.
pub fn build_borel() -> Result<LieAlgebra> {
    let mut h = linalg::zeros(2, 2);
    h[0][0] = Rational::one();
    let mut e = linalg::zeros(2, 2);
    e[0][1] = Rational::one();
    LieAlgebra::from_brackets("B", &["H", "E"], &[("H", "E", vec![("E", int(1))])], Some(vec![h, e]))
}

/// Three-dimensional Heisenberg algebra [A,B] = E.
pub fn build_heisenberg() -> Result<LieAlgebra> {
    let unit = |i: usize, j: usize| {
        let mut m = linalg::zeros(3, 3);
        m[i][j] = Rational::one();
        m
    };
    LieAlgebra::from_brackets(
        "Heis",
        &["A", "B", "E"],
        &[("A", "B", vec![("E", int(1))])],
        Some(vec![unit(0, 1), unit(1, 2), unit(0, 2)]),
    )
}

pub fn build_abelian(dim: usize) -> Result<LieAlgebra> {
    let labels: Vec<String> = (1..=dim).map(|i| format!("X{i}")).collect();
    let refs: Vec<&str> = labels.iter().map(String::as_str).collect();
    LieAlgebra::from_brackets(format!("ab({dim})"), &refs, &[], None)
}

/// Echelonized basis of the smallest subalgebra containing `seeds`.
/// The result depends only on the generated subspace.
pub fn subalgebra_closure(g: &LieAlgebra, seeds: &[LieElement]) -> Vec<LieElement> {
    let n = g.dim();
    let mut ech = Echelon::new(n);
    let mut gens: Vec<LieElement> = Vec::new();
    let mut queue: Vec<LieElement> = Vec::new();
    for s in seeds {
        if ech.insert(&s.to_dense(n)) {
            gens.push(s.clone());
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        let snapshot = gens.clone();
        for w in &snapshot {
            let b = g.bracket(&v, w);
            if !b.is_zero() && ech.insert(&b.to_dense(n)) {
                gens.push(b.clone());
                queue.push(b);
            }
        }
    }
    ech.rows().iter().map(|r| LieElement::from_dense(r)).collect()
}

/// The subalgebra spanned by `basis` as an algebra in its own right, with
/// abstract labels `names`.
pub fn subalgebra(
    g: &LieAlgebra,
    basis: &[LieElement],
    names: &[String],
) -> Result<LieAlgebra> {
    let n = g.dim();
    let dense: Vec<Vec<Rational>> = basis.iter().map(|x| x.to_dense(n)).collect();
    let coords = Coordinates::new(&dense, n)?;
    let k = basis.len();
    let mut table = vec![vec![LieElement::zero(); k]; k];
    for i in 0..k {
        for j in 0..k {
            let b = g.bracket(&basis[i], &basis[j]);
            let c = coords.solve(&b.to_dense(n)).ok_or_else(|| {
                Error::BasisMismatch(format!("span is not closed under the bracket ({i},{j})"))
            })?;
            table[i][j] = LieElement::from_dense(&c);
        }
    }
    let labels = names.iter().map(|s| abs(s)).collect();
    LieAlgebra::from_table(format!("sub({})", g.name()), labels, table, None)
}

fn pair_index(n: usize) -> (Vec<(usize, usize)>, HashMap<(usize, usize), usize>) {
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            pairs.push((i, j));
        }
    }
    let idx = pairs.iter().enumerate().map(|(k, &p)| (p, k)).collect();
    (pairs, idx)
}

/// Matrix of d: Λ¹g* → Λ²g*, (df)(x,y) = −f([x,y]); rows indexed by pairs i<j.
pub fn ce_d1(g: &LieAlgebra) -> DenseMatrix {
    let n = g.dim();
    let (pairs, _) = pair_index(n);
    pairs
        .iter()
        .map(|&(i, j)| (0..n).map(|k| -g.basis_bracket(i, j).coeff(k)).collect())
        .collect()
}

/// Matrix of d: Λ²g* → Λ³g*,
/// (dω)(x,y,z) = −ω([x,y],z) + ω([x,z],y) − ω([y,z],x); rows indexed by
/// triples i<j<l, columns by pairs a<b.
pub fn ce_d2(g: &LieAlgebra) -> DenseMatrix {
    let n = g.dim();
    let (pairs, pidx) = pair_index(n);
    // ω_{ab}(u, e_c) for u a linear combination: coefficient on column (a,b).
    let eval = |u: &LieElement, c: usize, row: &mut Vec<Rational>, sign: &Rational| {
        for (k, uk) in u.iter() {
            if k == c {
                continue;
            }
            let (col, s) = if k < c { (pidx[&(k, c)], int(1)) } else { (pidx[&(c, k)], int(-1)) };
            row[col] += uk * &s * sign;
        }
    };
    let mut rows = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for l in j + 1..n {
                let mut row = vec![Rational::zero(); pairs.len()];
                eval(g.basis_bracket(i, j), l, &mut row, &int(-1));
                eval(g.basis_bracket(i, l), j, &mut row, &int(1));
                eval(g.basis_bracket(j, l), i, &mut row, &int(-1));
                rows.push(row);
            }
        }
    }
    rows
}

/// dim H²(g) with trivial coefficients = dim ker d₂ − rank d₁.
pub fn cohomology_h2_dim(g: &LieAlgebra) -> usize {
    let n = g.dim();
    let c2 = n * n.saturating_sub(1) / 2;
    let r1 = if c2 == 0 { 0 } else { linalg::rank(&ce_d1(g)) };
    let r2 = if n < 3 { 0 } else { linalg::rank(&ce_d2(g)) };
    c2 - r2 - r1
}

/// Span of all brackets [x,y] with x in `a`, y in `b`, as an echelon basis.
fn bracket_span(g: &LieAlgebra, a: &[LieElement], b: &[LieElement]) -> Vec<LieElement> {
    let mut ech = Echelon::new(g.dim());
    for x in a {
        for y in b {
            ech.insert(&g.bracket(x, y).to_dense(g.dim()));
        }
    }
    ech.rows().iter().map(|r| LieElement::from_dense(r)).collect()
}

/// Basis-independent invariants used to compare algebras up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructureInvariants {
    pub dim: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub center_dim: usize,
    pub h2_dim: usize,
}

pub fn structure_invariants(g: &LieAlgebra) -> StructureInvariants {
    let n = g.dim();
    let all: Vec<LieElement> = (0..n).map(LieElement::unit).collect();
    let series = |step: &dyn Fn(&[LieElement]) -> Vec<LieElement>| {
        let mut dims = vec![n];
        let mut cur = all.clone();
        loop {
            let next = step(&cur);
            dims.push(next.len());
            if next.len() == cur.len() || next.is_empty() {
                break;
            }
            cur = next;
        }
        dims
    };
    let derived = series(&|c| bracket_span(g, c, c));
    let lower = series(&|c| bracket_span(g, &all, c));
    // center: kernel of x ↦ ([x,e_1], …, [x,e_n])
    let mut m: DenseMatrix = Vec::new();
    for j in 0..n {
        for k in 0..n {
            m.push((0..n).map(|i| g.basis_bracket(i, j).coeff(k)).collect());
        }
    }
    let center_dim = n - linalg::rank(&m);
    StructureInvariants {
        dim: n,
        derived_series: derived,
        lower_central_series: lower,
        center_dim,
        h2_dim: cohomology_h2_dim(g),
    }
}

/// Shared handle; algebras are immutable after construction.
pub type Algebra = Arc<LieAlgebra>;

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl_dimensions_and_brackets() {
        let g2 = build_sl(2).unwrap();
        assert_eq!(g2.dim(), 3);
        let b = g2.bracket(&g2.elem(&e(1, 2)), &g2.elem(&e(2, 1)));
        assert_eq!(b, g2.elem(&GenLabel::H(1, 2)).scale(&int(2)));
        assert_eq!(build_sl(7).unwrap().dim(), 48);
        let g3 = build_sl(3).unwrap();
        assert_eq!(g3.bracket(&g3.elem(&e(1, 2)), &g3.elem(&e(2, 3))), g3.elem(&e(1, 3)));
        assert!(build_sl(1).is_err());
    }

    #[test]
    fn basis_order() {
        let g = build_sl(3).unwrap();
        let shown: Vec<String> = g.basis().iter().map(ToString::to_string).collect();
        assert_eq!(
            shown,
            ["E(1,2)", "E(1,3)", "E(2,3)", "H(1,2)", "H(2,3)", "E(2,1)", "E(3,1)", "E(3,2)"]
        );
        for (i, l) in g.basis().iter().enumerate() {
            if let GenLabel::E(a, b) = l {
                assert_eq!(sl_offdiag_index(3, *a, *b), i);
            }
        }
    }

    #[test]
    fn label_round_trip() {
        for l in [e(1, 2), GenLabel::H(1, 3), GenLabel::HP(0), GenLabel::HR(2), GenLabel::Hperp(1), abs("A")] {
            assert_eq!(l.to_string().parse::<GenLabel>().unwrap(), l);
        }
        assert!("E(1)".parse::<GenLabel>().is_err());
    }

    #[test]
    fn l_alpha_beta() {
        assert!(build_l(&int(1), &int(0)).is_ok());
        assert!(build_l(&q(1, 2), &q(1, 2)).is_ok());
        assert!(matches!(build_l(&int(2), &int(0)), Err(Error::ConstraintViolation(_))));
    }

    #[test]
    fn jacobi_violation_detected() {
        // [X,Y]=Y, [X,Z]=Z, [Y,Z]=X breaks Jacobi.
        let r = LieAlgebra::from_brackets(
            "bad",
            &["X", "Y", "Z"],
            &[
                ("X", "Y", vec![("Y", int(1))]),
                ("X", "Z", vec![("Z", int(1))]),
                ("Y", "Z", vec![("X", int(1))]),
            ],
            None,
        );
        assert!(matches!(r, Err(Error::ConstraintViolation(_))));
    }
}
