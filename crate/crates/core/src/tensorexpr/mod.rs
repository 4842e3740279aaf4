//! Tensor-leg expressions over generator symbols and their exact
//! evaluation in matrix representations.
//!
//! The undeformed coproduct acts structurally: since Δ is an algebra map
//! with Δ(x) = x⊗1 + 1⊗x on generators, (Δ on leg j) of any expression is
//! obtained by replacing each generator on leg j by the sum of two copies
//! on legs j and j+1.

pub mod rep;
pub mod sparse;

use std::fmt;

use num_traits::{One, Zero};

pub use rep::Representation;
pub use sparse::SparseMatrix;

use crate::error::{Error, Result};
use crate::exactring::{Rational, Scalar};
use crate::liealg::{GenLabel, LieAlgebra, LieElement};

#[derive(Clone, Debug, PartialEq)]
pub enum Node<S> {
    /// Generator acting on one leg (1-based).
    Gen(GenLabel, usize),
    /// Scalar multiple of the identity.
    Const(S),
    Sum(Vec<Node<S>>),
    /// Ordered product, leftmost factor first.
    Prod(Vec<Node<S>>),
    Scale(S, Box<Node<S>>),
    Exp(Box<Node<S>>),
    Log1p(Box<Node<S>>),
}

impl<S: Scalar> Node<S> {
    pub fn gen(l: GenLabel, leg: usize) -> Self {
        Node::Gen(l, leg)
    }

    /// Linear combination of basis generators of `g` on one leg.
    pub fn element(g: &LieAlgebra, x: &LieElement, leg: usize) -> Self {
        let mut terms: Vec<Node<S>> = x
            .iter()
            .map(|(i, c)| {
                let gen = Node::Gen(g.label(i).clone(), leg);
                if c.is_one() {
                    gen
                } else {
                    Node::Scale(S::from_rational(c), Box::new(gen))
                }
            })
            .collect();
        match terms.len() {
            0 => Node::Const(S::zero()),
            1 => terms.pop().unwrap(),
            _ => Node::Sum(terms),
        }
    }

    pub fn one() -> Self {
        Node::Const(S::one())
    }

    pub fn scaled(self, c: S) -> Self {
        Node::Scale(c, Box::new(self))
    }

    pub fn exp(self) -> Self {
        Node::Exp(Box::new(self))
    }

    pub fn log1p(self) -> Self {
        Node::Log1p(Box::new(self))
    }

    pub fn times(self, o: Node<S>) -> Self {
        match self {
            Node::Prod(mut v) => {
                v.push(o);
                Node::Prod(v)
            }
            s => Node::Prod(vec![s, o]),
        }
    }

    pub fn plus(self, o: Node<S>) -> Self {
        match self {
            Node::Sum(mut v) => {
                v.push(o);
                Node::Sum(v)
            }
            s => Node::Sum(vec![s, o]),
        }
    }

    fn max_leg(&self) -> usize {
        match self {
            Node::Gen(_, l) => *l,
            Node::Const(_) => 0,
            Node::Sum(v) | Node::Prod(v) => v.iter().map(Node::max_leg).max().unwrap_or(0),
            Node::Scale(_, c) | Node::Exp(c) | Node::Log1p(c) => c.max_leg(),
        }
    }

    fn min_leg(&self) -> usize {
        match self {
            Node::Gen(_, l) => *l,
            Node::Const(_) => usize::MAX,
            Node::Sum(v) | Node::Prod(v) => v.iter().map(Node::min_leg).min().unwrap_or(usize::MAX),
            Node::Scale(_, c) | Node::Exp(c) | Node::Log1p(c) => c.min_leg(),
        }
    }

    /// Rewrites every generator through `f(label, leg)`.
    pub fn map_gens(&self, f: &impl Fn(&GenLabel, usize) -> Node<S>) -> Node<S> {
        match self {
            Node::Gen(l, leg) => f(l, *leg),
            Node::Const(c) => Node::Const(c.clone()),
            Node::Sum(v) => Node::Sum(v.iter().map(|n| n.map_gens(f)).collect()),
            Node::Prod(v) => Node::Prod(v.iter().map(|n| n.map_gens(f)).collect()),
            Node::Scale(c, n) => Node::Scale(c.clone(), Box::new(n.map_gens(f))),
            Node::Exp(n) => Node::Exp(Box::new(n.map_gens(f))),
            Node::Log1p(n) => Node::Log1p(Box::new(n.map_gens(f))),
        }
    }

    /// Inverse read off the structure: (e^T)⁻¹ = e^{−T} and products
    /// reverse. `None` when the expression is not built that way.
    pub fn structural_inverse(&self) -> Option<Node<S>> {
        match self {
            Node::Exp(t) => Some(Node::Exp(Box::new(Node::Scale(S::from_int(-1), t.clone())))),
            Node::Prod(v) => v.iter().rev().map(Node::structural_inverse).collect::<Option<Vec<_>>>().map(Node::Prod),
            Node::Const(c) => c.try_inv().ok().map(Node::Const),
            Node::Scale(c, n) => {
                let ci = c.try_inv().ok()?;
                Some(Node::Scale(ci, Box::new(n.structural_inverse()?)))
            }
            _ => None,
        }
    }
}

impl<S: Scalar> fmt::Display for Node<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |f: &mut fmt::Formatter<'_>, v: &[Node<S>], sep: &str| -> fmt::Result {
            write!(f, "(")?;
            for (i, n) in v.iter().enumerate() {
                if i > 0 {
                    write!(f, "{sep}")?;
                }
                write!(f, "{n}")?;
            }
            write!(f, ")")
        };
        match self {
            Node::Gen(l, leg) => write!(f, "{l}_{leg}"),
            Node::Const(c) => write!(f, "{c:?}"),
            Node::Sum(v) => join(f, v, " + "),
            Node::Prod(v) => join(f, v, "·"),
            Node::Scale(c, n) => write!(f, "{c:?}*{n}"),
            Node::Exp(n) => write!(f, "exp{n}"),
            Node::Log1p(n) => write!(f, "log1p{n}"),
        }
    }
}

/// An expression together with its total number of legs.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorExpr<S> {
    pub node: Node<S>,
    pub legs: usize,
}

impl<S: Scalar> fmt::Display for TensorExpr<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{} legs] {}", self.legs, self.node)
    }
}

impl<S: Scalar> TensorExpr<S> {
    pub fn new(node: Node<S>, legs: usize) -> Result<Self> {
        if legs == 0 {
            return Err(Error::Malformed("expression needs at least one leg".into()));
        }
        let (lo, hi) = (node.min_leg(), node.max_leg());
        if hi > legs || lo == 0 {
            return Err(Error::Malformed(format!("generator leg outside 1..{legs}")));
        }
        Ok(TensorExpr { node, legs })
    }

    pub fn identity(legs: usize) -> Self {
        TensorExpr { node: Node::one(), legs }
    }

    /// `self · o`, both on the same legs.
    pub fn then(&self, o: &TensorExpr<S>) -> TensorExpr<S> {
        assert_eq!(self.legs, o.legs, "leg count mismatch");
        TensorExpr { node: self.node.clone().times(o.node.clone()), legs: self.legs }
    }

    pub fn product(factors: Vec<TensorExpr<S>>) -> Result<TensorExpr<S>> {
        let legs = factors.first().map(|f| f.legs).ok_or_else(|| Error::Malformed("empty product".into()))?;
        if factors.iter().any(|f| f.legs != legs) {
            return Err(Error::Malformed("leg count mismatch in product".into()));
        }
        Ok(TensorExpr { node: Node::Prod(factors.into_iter().map(|f| f.node).collect()), legs })
    }

    /// Δ applied on leg `j`: generators on leg j become x_j + x_{j+1}; later
    /// legs shift up by one.
    pub fn coproduct_on_leg(&self, j: usize) -> Result<TensorExpr<S>> {
        if j == 0 || j > self.legs {
            return Err(Error::IndexOutOfRange(format!("leg {j} of {}", self.legs)));
        }
        let node = self.node.map_gens(&|l, leg| {
            if leg < j {
                Node::Gen(l.clone(), leg)
            } else if leg == j {
                Node::Sum(vec![Node::Gen(l.clone(), j), Node::Gen(l.clone(), j + 1)])
            } else {
                Node::Gen(l.clone(), leg + 1)
            }
        });
        Ok(TensorExpr { node, legs: self.legs + 1 })
    }

    /// ε applied on leg `j`: generators there become 0; later legs shift
    /// down by one.
    pub fn counit_on_leg(&self, j: usize) -> Result<TensorExpr<S>> {
        if j == 0 || j > self.legs || self.legs < 2 {
            return Err(Error::IndexOutOfRange(format!("leg {j} of {}", self.legs)));
        }
        let node = self.node.map_gens(&|l, leg| {
            if leg < j {
                Node::Gen(l.clone(), leg)
            } else if leg == j {
                Node::Const(S::zero())
            } else {
                Node::Gen(l.clone(), leg - 1)
            }
        });
        Ok(TensorExpr { node, legs: self.legs - 1 })
    }

    /// Places leg `l` (1-based) at leg `to[l-1]` inside `legs` legs — e.g.
    /// `[1,3]` with 3 legs turns F into F_13, `[2,1]` turns F into F_21.
    pub fn place(&self, to: &[usize], legs: usize) -> Result<TensorExpr<S>> {
        if to.len() != self.legs || to.iter().any(|&t| t == 0 || t > legs) {
            return Err(Error::IndexOutOfRange(format!("placement {to:?} into {legs} legs")));
        }
        let node = self.node.map_gens(&|l, leg| Node::Gen(l.clone(), to[leg - 1]));
        Ok(TensorExpr { node, legs })
    }

    pub fn structural_inverse(&self) -> Option<TensorExpr<S>> {
        self.node.structural_inverse().map(|node| TensorExpr { node, legs: self.legs })
    }

    pub fn eval(&self, rep: &Representation) -> Result<TensorOp<S>> {
        let matrix = eval_node(&self.node, rep, self.legs)?;
        Ok(TensorOp { matrix, legs: self.legs, leg_dim: rep.dim(), rep: rep.name().to_string() })
    }
}

/// Resolves a generator symbol to its matrix on one leg, in the scalar ring.
fn leaf_matrix<S: Scalar>(rep: &Representation, l: &GenLabel) -> Result<SparseMatrix<S>> {
    Ok(rep.image_label(l)?.map(S::from_rational))
}

fn eval_node<S: Scalar>(node: &Node<S>, rep: &Representation, legs: usize) -> Result<SparseMatrix<S>> {
    let d = rep.dim();
    let n = d.pow(legs as u32);
    Ok(match node {
        Node::Gen(l, leg) => {
            let m = leaf_matrix::<S>(rep, l)?;
            m.embed(d.pow((*leg - 1) as u32), d.pow((legs - leg) as u32))
        }
        Node::Const(c) => SparseMatrix::scalar(n, c.clone()),
        Node::Sum(v) => {
            let mut acc = SparseMatrix::zero(n);
            for c in v {
                acc = acc.add(&eval_node(c, rep, legs)?);
            }
            acc
        }
        Node::Prod(v) => {
            let mut acc: Option<SparseMatrix<S>> = None;
            for c in v {
                let m = eval_node(c, rep, legs)?;
                acc = Some(match acc {
                    None => m,
                    Some(a) => a.mul(&m),
                });
            }
            acc.unwrap_or_else(|| SparseMatrix::identity(n))
        }
        Node::Scale(c, x) => eval_node(x, rep, legs)?.scale(c),
        Node::Exp(x) => exp_series(&eval_node(x, rep, legs)?)?,
        Node::Log1p(x) => log1p_series(&eval_node(x, rep, legs)?)?,
    })
}

/// Walks the powers T, T², … until they vanish, feeding each to `term`.
/// A nilpotent T (modulo ξ for jets) of size n satisfies T^{n(D+1)} = 0;
/// a nonzero trace of the constant part of any power proves T is not.
fn nilpotent_powers<S: Scalar>(
    t: &SparseMatrix<S>,
    mut term: impl FnMut(usize, &SparseMatrix<S>),
) -> Result<()> {
    let cap = t.dim() * (S::truncation_order() + 1) + 1;
    let mut p = t.clone();
    let mut k = 1;
    while !p.is_zero() {
        if !p.trace().constant_term().is_zero() || k > cap {
            return Err(Error::NotNilpotent(format!(
                "power {k} of a {}x{} argument does not vanish",
                t.dim(),
                t.dim()
            )));
        }
        term(k, &p);
        p = p.mul(t);
        k += 1;
    }
    Ok(())
}

/// e^T = Σ T^k / k!, exact.
pub fn exp_series<S: Scalar>(t: &SparseMatrix<S>) -> Result<SparseMatrix<S>> {
    let mut acc = SparseMatrix::identity(t.dim());
    let mut fact = Rational::one();
    nilpotent_powers(t, |k, p| {
        fact *= Rational::from_integer(k.into());
        acc = acc.add(&p.scale_rational(&fact.recip()));
    })?;
    Ok(acc)
}

/// log(1+T) = Σ (−1)^{k+1} T^k / k, exact.
pub fn log1p_series<S: Scalar>(t: &SparseMatrix<S>) -> Result<SparseMatrix<S>> {
    let mut acc = SparseMatrix::zero(t.dim());
    nilpotent_powers(t, |k, p| {
        let sign = if k % 2 == 1 { 1 } else { -1 };
        acc = acc.add(&p.scale_rational(&Rational::new(sign.into(), k.into())));
    })?;
    Ok(acc)
}

/// An evaluated operator on `legs` copies of a representation space.
#[derive(Clone, Debug, PartialEq)]
pub struct TensorOp<S> {
    pub matrix: SparseMatrix<S>,
    pub legs: usize,
    pub leg_dim: usize,
    pub rep: String,
}

impl<S: Scalar> TensorOp<S> {
    pub fn identity(leg_dim: usize, legs: usize, rep: &str) -> Self {
        TensorOp {
            matrix: SparseMatrix::identity(leg_dim.pow(legs as u32)),
            legs,
            leg_dim,
            rep: rep.to_string(),
        }
    }

    fn with(&self, matrix: SparseMatrix<S>) -> Self {
        TensorOp { matrix, legs: self.legs, leg_dim: self.leg_dim, rep: self.rep.clone() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        assert_eq!((self.legs, self.leg_dim), (o.legs, o.leg_dim), "operator shape mismatch");
        self.with(self.matrix.mul(&o.matrix))
    }

    pub fn sub(&self, o: &Self) -> Self {
        assert_eq!((self.legs, self.leg_dim), (o.legs, o.leg_dim), "operator shape mismatch");
        self.with(self.matrix.sub(&o.matrix))
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!((self.legs, self.leg_dim), (o.legs, o.leg_dim), "operator shape mismatch");
        self.with(self.matrix.add(&o.matrix))
    }

    pub fn scale(&self, c: &S) -> Self {
        self.with(self.matrix.scale(c))
    }

    pub fn is_identity(&self) -> bool {
        self.matrix.is_identity()
    }

    /// Number of entries in which `self` and `o` differ.
    pub fn residual_support(&self, o: &Self) -> usize {
        self.sub(o).matrix.nnz()
    }

    /// Conjugation by the flip of tensor factors `i` and `j` (1-based).
    pub fn swap_legs(&self, i: usize, j: usize) -> Result<Self> {
        if i == 0 || j == 0 || i > self.legs || j > self.legs {
            return Err(Error::IndexOutOfRange(format!("swap {i},{j} of {} legs", self.legs)));
        }
        let mut perm: Vec<usize> = (0..self.legs).collect();
        perm.swap(i - 1, j - 1);
        Ok(self.with(self.matrix.permute_legs(self.leg_dim, &perm)))
    }

    /// Places this operator's legs at positions `to` (1-based) of a
    /// `legs`-leg space, acting as the identity on the remaining legs.
    pub fn place(&self, to: &[usize], legs: usize) -> Result<Self> {
        if to.len() != self.legs || legs < self.legs {
            return Err(Error::IndexOutOfRange(format!("placement {to:?} into {legs} legs")));
        }
        let rest = self.leg_dim.pow((legs - self.legs) as u32);
        let widened = self.matrix.embed(1, rest);
        // widened acts on legs 1..k; send leg l to to[l], the rest fill the gaps
        let mut perm = vec![usize::MAX; legs];
        let mut used = vec![false; legs];
        for (l, &t) in to.iter().enumerate() {
            if t == 0 || t > legs || used[t - 1] {
                return Err(Error::IndexOutOfRange(format!("placement {to:?} into {legs} legs")));
            }
            perm[l] = t - 1;
            used[t - 1] = true;
        }
        let mut free = (0..legs).filter(|p| !used[*p]);
        for slot in perm.iter_mut().skip(self.legs) {
            *slot = free.next().expect("enough free legs");
        }
        Ok(TensorOp {
            matrix: widened.permute_legs(self.leg_dim, &perm),
            legs,
            leg_dim: self.leg_dim,
            rep: self.rep.clone(),
        })
    }

    /// Exact inverse by elimination.
    pub fn invert(&self) -> Result<Self> {
        Ok(self.with(self.matrix.inverse()?))
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> TensorOp<T> {
        TensorOp { matrix: self.matrix.map(f), legs: self.legs, leg_dim: self.leg_dim, rep: self.rep.clone() }
    }
}

/// Inverse of an evaluated expression: the structural inverse when
/// available, elimination otherwise.
pub fn invert_expr<S: Scalar>(f: &TensorExpr<S>, rep: &Representation) -> Result<TensorOp<S>> {
    match f.structural_inverse() {
        Some(inv) => inv.eval(rep),
        None => f.eval(rep)?.invert(),
    }
}

/// Convenience for single-leg element images in the scalar ring.
pub fn element_op<S: Scalar>(rep: &Representation, x: &LieElement) -> TensorOp<S> {
    TensorOp {
        matrix: rep.image(x).map(S::from_rational),
        legs: 1,
        leg_dim: rep.dim(),
        rep: rep.name().to_string(),
    }
}

/// ρ(x)⊗1 + 1⊗ρ(x).
pub fn primitive_op<S: Scalar>(rep: &Representation, x: &LieElement) -> TensorOp<S> {
    let m = rep.image(x).map(S::from_rational);
    let d = rep.dim();
    TensorOp {
        matrix: m.embed(1, d).add(&m.embed(d, 1)),
        legs: 2,
        leg_dim: d,
        rep: rep.name().to_string(),
    }
}

#[allow(dead_code)]
fn _assert_send_sync() {
    fn is<T: Send + Sync>() {}
    is::<TensorExpr<Rational>>();
    is::<TensorOp<Rational>>();
    is::<Representation>();
}
