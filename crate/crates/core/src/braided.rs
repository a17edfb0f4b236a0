//! Associative algebras, Yang-Baxter operators, braided algebras and their axiom checks.
//!
//! The two compatibility axioms are named after their left-hand shapes:
//! - YI: `(μ⊗1)(1⊗R)(R⊗1) = R(1⊗μ)`
//! - IY: `(1⊗μ)(R⊗1)(1⊗R) = R(μ⊗1)`

use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::invert;
use crate::scalar::{Field, Ring};
use crate::tensor::{chain, TensorMap};

/// Basis tensors at which an identity fails: the first input (lexicographic) on which the
/// two sides differ and the first output coordinate where they differ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub input: Vec<usize>,
    pub output: Vec<usize>,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "input {:?}, output {:?}", self.input, self.output)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(Witness),
}

impl Verdict {
    pub fn passed(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    /// Pass iff the map is zero.
    pub fn of_defect<R: Ring>(defect: &TensorMap<R>) -> Verdict {
        match defect.first_nonzero_column() {
            None => Verdict::Pass,
            Some((input, output)) => Verdict::Fail(Witness { input, output }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    Associativity,
    YangBaxter,
    Yi,
    Iy,
}

impl Axiom {
    pub const ALL: [Axiom; 4] = [Axiom::Associativity, Axiom::YangBaxter, Axiom::Yi, Axiom::Iy];

    pub fn name(&self) -> &'static str {
        match self {
            Axiom::Associativity => "associativity",
            Axiom::YangBaxter => "yang-baxter",
            Axiom::Yi => "yi",
            Axiom::Iy => "iy",
        }
    }
}

pub(crate) fn expect_arity<R: Ring>(m: &TensorMap<R>, n: usize, k: usize, what: &str) -> Result<()> {
    if m.in_arity() != n || m.out_arity() != k {
        return Err(Error::Arity(format!(
            "{what} must be {n}→{k}, got {}→{}",
            m.in_arity(),
            m.out_arity()
        )));
    }
    Ok(())
}

/// `μ(μ⊗1) − μ(1⊗μ)`
pub fn associativity_defect<R: Ring>(mu: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(mu, 2, 1, "multiplication")?;
    let left = mu.compose(&mu.padded(0, 1))?;
    let right = mu.compose(&mu.padded(1, 0))?;
    left.sub(&right)
}

/// `(R⊗1)(1⊗R)(R⊗1) − (1⊗R)(R⊗1)(1⊗R)`
pub fn ybe_defect<R: Ring>(r: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(r, 2, 2, "braiding")?;
    let (r1, r2) = (r.padded(0, 1), r.padded(1, 0));
    chain(&[&r1, &r2, &r1])?.sub(&chain(&[&r2, &r1, &r2])?)
}

/// `(μ⊗1)(1⊗R)(R⊗1) − R(1⊗μ)`
pub fn yi_defect<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(mu, 2, 1, "multiplication")?;
    expect_arity(r, 2, 2, "braiding")?;
    chain(&[&mu.padded(0, 1), &r.padded(1, 0), &r.padded(0, 1)])?.sub(&r.compose(&mu.padded(1, 0))?)
}

/// `(1⊗μ)(R⊗1)(1⊗R) − R(μ⊗1)`
pub fn iy_defect<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(mu, 2, 1, "multiplication")?;
    expect_arity(r, 2, 2, "braiding")?;
    chain(&[&mu.padded(1, 0), &r.padded(0, 1), &r.padded(1, 0)])?.sub(&r.compose(&mu.padded(0, 1))?)
}

pub fn check_associative<R: Ring>(mu: &TensorMap<R>) -> Result<Verdict> {
    Ok(Verdict::of_defect(&associativity_defect(mu)?))
}

pub fn check_yb<R: Ring>(r: &TensorMap<R>) -> Result<Verdict> {
    Ok(Verdict::of_defect(&ybe_defect(r)?))
}

pub fn check_yi<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<Verdict> {
    Ok(Verdict::of_defect(&yi_defect(mu, r)?))
}

pub fn check_iy<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<Verdict> {
    Ok(Verdict::of_defect(&iy_defect(mu, r)?))
}

/// All four axioms for a pair (μ, R), in [`Axiom::ALL`] order.
pub fn check_all<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<Vec<(Axiom, Verdict)>> {
    Ok(vec![
        (Axiom::Associativity, check_associative(mu)?),
        (Axiom::YangBaxter, check_yb(r)?),
        (Axiom::Yi, check_yi(mu, r)?),
        (Axiom::Iy, check_iy(mu, r)?),
    ])
}

/// `rev_k ∘ f ∘ rev_n`
pub fn mirror_map<R: Ring>(f: &TensorMap<R>) -> TensorMap<R> {
    let ring = f.ring();
    let rk = TensorMap::reversal(ring, f.dim(), f.out_arity());
    let rn = TensorMap::reversal(ring, f.dim(), f.in_arity());
    chain(&[&rk, f, &rn]).expect("arities agree")
}

fn default_labels(d: usize) -> Vec<String> {
    (0..d).map(|i| format!("e{i}")).collect()
}

#[derive(Clone, Debug, PartialEq)]
pub struct AssociativeAlgebra<F: Field> {
    mu: TensorMap<F>,
    unit: Option<TensorMap<F>>,
    labels: Vec<String>,
}

impl<F: Field> AssociativeAlgebra<F> {
    /// Validates associativity and, if a unit is given, both unit laws.
    pub fn new(mu: TensorMap<F>, unit: Option<TensorMap<F>>, labels: Vec<String>) -> Result<Self> {
        expect_arity(&mu, 2, 1, "multiplication")?;
        let d = mu.dim();
        let labels = if labels.is_empty() { default_labels(d) } else { labels };
        if labels.len() != d {
            return Err(Error::Input(format!("{} basis labels for dimension {d}", labels.len())));
        }
        if let Verdict::Fail(w) = check_associative(&mu)? {
            return Err(Error::Validation(format!("associativity fails at basis triple {:?}", w.input)));
        }
        if let Some(u) = &unit {
            expect_arity(u, 0, 1, "unit")?;
            if u.dim() != d {
                return Err(Error::Input("unit dimension differs from the algebra".into()));
            }
            let id = TensorMap::identity(mu.ring(), d, 1);
            let left = mu.compose(&u.tensor(&id)?)?;
            let right = mu.compose(&id.tensor(u)?)?;
            if left != id || right != id {
                return Err(Error::Validation("unit laws fail".into()));
            }
        }
        Ok(AssociativeAlgebra { mu, unit, labels })
    }

    pub fn field(&self) -> &F {
        self.mu.ring()
    }
    pub fn dim(&self) -> usize {
        self.mu.dim()
    }
    pub fn mu(&self) -> &TensorMap<F> {
        &self.mu
    }
    pub fn unit(&self) -> Option<&TensorMap<F>> {
        self.unit.as_ref()
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct YangBaxterOperator<F: Field> {
    r: TensorMap<F>,
    r_inverse: TensorMap<F>,
}

impl<F: Field> YangBaxterOperator<F> {
    /// Validates the braid relation and invertibility.
    pub fn new(r: TensorMap<F>) -> Result<Self> {
        if let Verdict::Fail(w) = check_yb(&r)? {
            return Err(Error::Validation(format!("Yang-Baxter equation fails at {w}")));
        }
        let r_inverse = invert(&r).ok_or_else(|| Error::Validation("braiding is not invertible".into()))?;
        Ok(YangBaxterOperator { r, r_inverse })
    }

    pub fn r(&self) -> &TensorMap<F> {
        &self.r
    }
    pub fn r_inverse(&self) -> &TensorMap<F> {
        &self.r_inverse
    }
}

/// An associative algebra with a Yang-Baxter operator; the two compatibility axioms are
/// recorded as flags. Cohomology requires both.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidedAlgebra<F: Field> {
    algebra: AssociativeAlgebra<F>,
    yb: YangBaxterOperator<F>,
    yi_holds: bool,
    iy_holds: bool,
}

impl<F: Field> BraidedAlgebra<F> {
    pub fn new(algebra: AssociativeAlgebra<F>, yb: YangBaxterOperator<F>) -> Result<Self> {
        if algebra.dim() != yb.r.dim() {
            return Err(Error::Input(format!(
                "algebra has dimension {} but the braiding has dimension {}",
                algebra.dim(),
                yb.r.dim()
            )));
        }
        let yi_holds = check_yi(algebra.mu(), yb.r())?.passed();
        let iy_holds = check_iy(algebra.mu(), yb.r())?.passed();
        Ok(BraidedAlgebra { algebra, yb, yi_holds, iy_holds })
    }

    /// Validate μ and R and build; compatibility axioms become flags.
    pub fn from_maps(mu: TensorMap<F>, r: TensorMap<F>, unit: Option<TensorMap<F>>, labels: Vec<String>) -> Result<Self> {
        Self::new(AssociativeAlgebra::new(mu, unit, labels)?, YangBaxterOperator::new(r)?)
    }

    /// As [`from_maps`](Self::from_maps), but both compatibility axioms must hold.
    pub fn braided(mu: TensorMap<F>, r: TensorMap<F>, unit: Option<TensorMap<F>>, labels: Vec<String>) -> Result<Self> {
        let b = Self::from_maps(mu, r, unit, labels)?;
        b.require_braided()?;
        Ok(b)
    }

    pub fn is_braided(&self) -> bool {
        self.yi_holds && self.iy_holds
    }

    pub fn require_braided(&self) -> Result<()> {
        for (ok, axiom, f) in [(self.yi_holds, "YI", check_yi as fn(&_, &_) -> _), (self.iy_holds, "IY", check_iy)] {
            if !ok {
                let w = match f(self.mu(), self.r())? {
                    Verdict::Fail(w) => w.to_string(),
                    Verdict::Pass => String::new(),
                };
                return Err(Error::Validation(format!("{axiom} compatibility fails at {w}")));
            }
        }
        Ok(())
    }

    pub fn yi_holds(&self) -> bool {
        self.yi_holds
    }
    pub fn iy_holds(&self) -> bool {
        self.iy_holds
    }
    pub fn algebra(&self) -> &AssociativeAlgebra<F> {
        &self.algebra
    }
    pub fn yb(&self) -> &YangBaxterOperator<F> {
        &self.yb
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn mu(&self) -> &TensorMap<F> {
        self.algebra.mu()
    }
    pub fn r(&self) -> &TensorMap<F> {
        self.yb.r()
    }
    pub fn unit(&self) -> Option<&TensorMap<F>> {
        self.algebra.unit()
    }
    pub fn labels(&self) -> &[String] {
        self.algebra.labels()
    }

    /// Re-run every axiom check from scratch.
    pub fn check_all(&self) -> Result<Vec<(Axiom, Verdict)>> {
        check_all(self.mu(), self.r())
    }
}

/// `(V, μ∘Rⁿ, R)`, re-verified.
pub fn braided_multiplication<F: Field>(b: &BraidedAlgebra<F>, n: usize) -> Result<BraidedAlgebra<F>> {
    if n == 0 {
        return Err(Error::Input("braided multiplication needs a power n ≥ 1".into()));
    }
    b.require_braided()?;
    let mut mu = b.mu().clone();
    for _ in 0..n {
        mu = mu.compose(b.r())?;
    }
    let out = BraidedAlgebra::from_maps(mu, b.r().clone(), None, b.labels().to_vec())
        .map_err(|e| Error::Internal(format!("braided multiplication: {e}")))?;
    out.require_braided().map_err(|e| Error::Internal(format!("braided multiplication: {e}")))?;
    Ok(out)
}

/// Conjugate all structure by tensor-factor reversal. Swaps the YI and IY flags.
pub fn mirror<F: Field>(b: &BraidedAlgebra<F>) -> BraidedAlgebra<F> {
    let mu = mirror_map(b.mu());
    let r = mirror_map(b.r());
    let r_inverse = mirror_map(b.yb.r_inverse());
    let algebra = AssociativeAlgebra { mu, unit: b.unit().cloned(), labels: b.labels().to_vec() };
    BraidedAlgebra {
        yi_holds: check_yi(algebra.mu(), &r).expect("arities").passed(),
        iy_holds: check_iy(algebra.mu(), &r).expect("arities").passed(),
        algebra,
        yb: YangBaxterOperator { r, r_inverse },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HomCondition {
    /// `fμ₁ = μ₂(f⊗f)`
    Multiplicative,
    /// `(f⊗f)R₁ = R₂(f⊗f)`
    Braiding,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HomVerdict {
    Pass,
    Fail { condition: HomCondition, witness: Witness },
}

/// A linear map between braided algebras, to be checked as a homomorphism.
#[derive(Clone, Debug)]
pub struct BraidedHomomorphism<F: Field> {
    pub source: BraidedAlgebra<F>,
    pub target: BraidedAlgebra<F>,
    pub f: TensorMap<F>,
}

impl<F: Field> BraidedHomomorphism<F> {
    pub fn check(&self) -> Result<HomVerdict> {
        check_braided_homomorphism(&self.source, &self.target, &self.f)
    }
}

pub fn check_braided_homomorphism<F: Field>(
    source: &BraidedAlgebra<F>,
    target: &BraidedAlgebra<F>,
    f: &TensorMap<F>,
) -> Result<HomVerdict> {
    if source.dim() != target.dim() || f.dim() != source.dim() {
        return Err(Error::Input("homomorphisms are only checked between algebras of equal dimension".into()));
    }
    expect_arity(f, 1, 1, "homomorphism")?;
    let ff = f.tensor(f)?;
    let mult = f.compose(source.mu())?.sub(&target.mu().compose(&ff)?)?;
    if let Verdict::Fail(witness) = Verdict::of_defect(&mult) {
        return Ok(HomVerdict::Fail { condition: HomCondition::Multiplicative, witness });
    }
    let br = ff.compose(source.r())?.sub(&target.r().compose(&ff)?)?;
    if let Verdict::Fail(witness) = Verdict::of_defect(&br) {
        return Ok(HomVerdict::Fail { condition: HomCondition::Braiding, witness });
    }
    Ok(HomVerdict::Pass)
}
