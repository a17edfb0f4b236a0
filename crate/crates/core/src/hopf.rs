//! Finite-dimensional Hopf algebras by structure constants, the adjoint braiding, the
//! integral construction on `X⊗X`, and deformation 2-cocycles of Hopf algebras.

use std::fmt;

use crate::braided::{expect_arity, BraidedAlgebra, Verdict, Witness};
use crate::cochain::Ybh2Cochain;
use crate::complex::ComplexSlice;
use crate::constructions::FiniteGroup;
use crate::differential::{ybh_d1, ybh_d2};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::scalar::{hbar_coefficient, Field, Ring, Truncated};
use crate::tensor::{chain, kron, TensorMap};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HopfAxiom {
    Associativity,
    Coassociativity,
    Unit,
    Counit,
    /// `Δμ = (μ⊗μ)(1⊗τ⊗1)(Δ⊗Δ)`
    Bialgebra,
    /// `εμ = ε⊗ε`, `Δη = η⊗η`, `εη = 1`
    UnitCounit,
    /// `μ(1⊗S)Δ = ηε = μ(S⊗1)Δ`
    Antipode,
}

impl HopfAxiom {
    pub const ALL: [HopfAxiom; 7] = [
        HopfAxiom::Associativity,
        HopfAxiom::Coassociativity,
        HopfAxiom::Unit,
        HopfAxiom::Counit,
        HopfAxiom::Bialgebra,
        HopfAxiom::UnitCounit,
        HopfAxiom::Antipode,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            HopfAxiom::Associativity => "associativity",
            HopfAxiom::Coassociativity => "coassociativity",
            HopfAxiom::Unit => "unit",
            HopfAxiom::Counit => "counit",
            HopfAxiom::Bialgebra => "bialgebra",
            HopfAxiom::UnitCounit => "unit-counit",
            HopfAxiom::Antipode => "antipode",
        }
    }
}

impl fmt::Display for HopfAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Outcome of [`check_hopf`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HopfCheck {
    pub violations: Vec<(HopfAxiom, Witness)>,
    pub commutative: bool,
    pub cocommutative: bool,
    pub involutory: bool,
}

impl HopfCheck {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// The five structure maps, unvalidated.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfMaps<R: Ring> {
    pub mu: TensorMap<R>,
    pub eta: TensorMap<R>,
    pub delta: TensorMap<R>,
    pub epsilon: TensorMap<R>,
    pub s: TensorMap<R>,
}

impl<R: Ring> HopfMaps<R> {
    fn check_arities(&self) -> Result<()> {
        let d = self.mu.dim();
        for (m, n, k, what) in [
            (&self.mu, 2, 1, "multiplication"),
            (&self.eta, 0, 1, "unit"),
            (&self.delta, 1, 2, "comultiplication"),
            (&self.epsilon, 1, 0, "counit"),
            (&self.s, 1, 1, "antipode"),
        ] {
            expect_arity(m, n, k, what)?;
            if m.dim() != d {
                return Err(Error::Input(format!("{what} has dimension {}, expected {d}", m.dim())));
            }
        }
        Ok(())
    }
}

fn first_failure<R: Ring>(pairs: &[(TensorMap<R>, TensorMap<R>)]) -> Result<Option<Witness>> {
    for (a, b) in pairs {
        if let Verdict::Fail(w) = Verdict::of_defect(&a.sub(b)?) {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Exact check of the Hopf axioms plus the three flags. Ring-generic, so deformed
/// structures over truncated scalars can be checked too.
pub fn check_hopf<R: Ring>(h: &HopfMaps<R>) -> Result<HopfCheck> {
    h.check_arities()?;
    let ring = h.mu.ring();
    let d = h.mu.dim();
    let (mu, eta, delta, eps, s) = (&h.mu, &h.eta, &h.delta, &h.epsilon, &h.s);
    let id = TensorMap::identity(ring, d, 1);
    let tau = TensorMap::swap(ring, d);
    let mut violations = Vec::new();
    let mut record = |axiom, pairs: Vec<(TensorMap<R>, TensorMap<R>)>| -> Result<()> {
        if let Some(w) = first_failure(&pairs)? {
            violations.push((axiom, w));
        }
        Ok(())
    };
    record(HopfAxiom::Associativity, vec![(mu.compose(&mu.padded(0, 1))?, mu.compose(&mu.padded(1, 0))?)])?;
    record(HopfAxiom::Coassociativity, vec![(delta.padded(0, 1).compose(delta)?, delta.padded(1, 0).compose(delta)?)])?;
    record(
        HopfAxiom::Unit,
        vec![(mu.compose(&eta.padded(0, 1))?, id.clone()), (mu.compose(&eta.padded(1, 0))?, id.clone())],
    )?;
    record(
        HopfAxiom::Counit,
        vec![(eps.padded(0, 1).compose(delta)?, id.clone()), (eps.padded(1, 0).compose(delta)?, id.clone())],
    )?;
    let middle = TensorMap::permutation(ring, d, &[0, 2, 1, 3])?;
    let rhs = chain(&[&kron(&[mu, mu])?, &middle, &kron(&[delta, delta])?])?;
    record(HopfAxiom::Bialgebra, vec![(delta.compose(mu)?, rhs)])?;
    let one = TensorMap::identity(ring, d, 0);
    record(
        HopfAxiom::UnitCounit,
        vec![
            (eps.compose(mu)?, kron(&[eps, eps])?),
            (delta.compose(eta)?, kron(&[eta, eta])?),
            (eps.compose(eta)?, one),
        ],
    )?;
    let counit_unit = eta.compose(eps)?;
    record(
        HopfAxiom::Antipode,
        vec![
            (chain(&[mu, &s.padded(1, 0), delta])?, counit_unit.clone()),
            (chain(&[mu, &s.padded(0, 1), delta])?, counit_unit),
        ],
    )?;
    Ok(HopfCheck {
        violations,
        commutative: mu.compose(&tau)? == *mu,
        cocommutative: tau.compose(delta)? == *delta,
        involutory: s.compose(s)? == id,
    })
}

/// A validated Hopf algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct HopfAlgebra<F: Field> {
    maps: HopfMaps<F>,
    labels: Vec<String>,
    commutative: bool,
    cocommutative: bool,
    involutory: bool,
}

impl<F: Field> HopfAlgebra<F> {
    pub fn new(maps: HopfMaps<F>, labels: Vec<String>) -> Result<Self> {
        let c = check_hopf(&maps)?;
        if let Some((axiom, w)) = c.violations.first() {
            return Err(Error::Validation(format!("Hopf axiom {axiom} fails at {w}")));
        }
        let d = maps.mu.dim();
        let labels = if labels.is_empty() { (0..d).map(|i| format!("e{i}")).collect() } else { labels };
        if labels.len() != d {
            return Err(Error::Input(format!("{} labels for dimension {d}", labels.len())));
        }
        Ok(HopfAlgebra { maps, labels, commutative: c.commutative, cocommutative: c.cocommutative, involutory: c.involutory })
    }

    pub fn field(&self) -> &F {
        self.maps.mu.ring()
    }
    pub fn dim(&self) -> usize {
        self.maps.mu.dim()
    }
    pub fn maps(&self) -> &HopfMaps<F> {
        &self.maps
    }
    pub fn mu(&self) -> &TensorMap<F> {
        &self.maps.mu
    }
    pub fn eta(&self) -> &TensorMap<F> {
        &self.maps.eta
    }
    pub fn delta(&self) -> &TensorMap<F> {
        &self.maps.delta
    }
    pub fn epsilon(&self) -> &TensorMap<F> {
        &self.maps.epsilon
    }
    pub fn antipode(&self) -> &TensorMap<F> {
        &self.maps.s
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn is_commutative(&self) -> bool {
        self.commutative
    }
    pub fn is_cocommutative(&self) -> bool {
        self.cocommutative
    }
    pub fn is_involutory(&self) -> bool {
        self.involutory
    }
}

/// `k[G]` with `Δg = g⊗g`, `εg = 1`, `Sg = g⁻¹`.
pub fn group_hopf<F: Field>(g: &FiniteGroup, field: &F) -> HopfAlgebra<F> {
    let n = g.order();
    let one = field.one();
    let maps = HopfMaps {
        mu: TensorMap::from_basis(field, n, 2, 1, |i| vec![(vec![g.mul(i[0], i[1])], one.clone())]),
        eta: TensorMap::from_triples(field, n, 0, 1, [(g.identity(), 0, one.clone())]).expect("in range"),
        delta: TensorMap::from_basis(field, n, 1, 2, |i| vec![(vec![i[0], i[0]], one.clone())]),
        epsilon: TensorMap::from_basis(field, n, 1, 0, |_| vec![(vec![], one.clone())]),
        s: TensorMap::from_basis(field, n, 1, 1, |i| vec![(vec![g.inv(i[0])], one.clone())]),
    };
    HopfAlgebra::new(maps, g.labels().to_vec()).expect("group algebras are Hopf algebras")
}

/// `F₂[t]/(t²)` with `t` primitive: `Δt = t⊗1 + 1⊗t`, `εt = 0`, `St = t`. Only a Hopf
/// algebra in characteristic 2.
pub fn dual_numbers_hopf<F: Field>(field: &F) -> Result<HopfAlgebra<F>> {
    let one = field.one();
    let mu = TensorMap::from_basis(field, 2, 2, 1, |i| {
        if i[0] + i[1] <= 1 {
            vec![(vec![i[0] + i[1]], one.clone())]
        } else {
            vec![]
        }
    });
    let maps = HopfMaps {
        mu,
        eta: TensorMap::from_triples(field, 2, 0, 1, [(0, 0, one.clone())])?,
        delta: TensorMap::from_basis(field, 2, 1, 2, |i| {
            if i[0] == 0 {
                vec![(vec![0, 0], one.clone())]
            } else {
                vec![(vec![1, 0], one.clone()), (vec![0, 1], one.clone())]
            }
        }),
        epsilon: TensorMap::from_triples(field, 2, 1, 0, [(0, 0, one.clone())])?,
        s: TensorMap::from_basis(field, 2, 1, 1, |i| {
            let c = if i[0] == 0 { one.clone() } else { field.neg(&one) };
            vec![(vec![i[0]], c)]
        }),
    };
    HopfAlgebra::new(maps, vec!["1".into(), "t".into()])
        .map_err(|e| Error::Precondition(format!("the primitive dual numbers need characteristic 2: {e}")))
}

/// `x⊗y ↦ y⁽¹⁾ ⊗ S(y⁽²⁾) x y⁽³⁾`, built as
/// `(1⊗μ(μ⊗1)) ∘ (1⊗S⊗1⊗1) ∘ σ ∘ (1⊗(Δ⊗1)Δ)` with `σ: x⊗y₁⊗y₂⊗y₃ ↦ y₁⊗y₂⊗x⊗y₃`.
pub fn adjoint_map<R: Ring>(mu: &TensorMap<R>, delta: &TensorMap<R>, s: &TensorMap<R>) -> Result<TensorMap<R>> {
    let ring = mu.ring();
    let d = mu.dim();
    let delta3 = delta.padded(0, 1).compose(delta)?;
    let sigma = TensorMap::permutation(ring, d, &[1, 2, 0, 3])?;
    let mult3 = mu.compose(&mu.padded(0, 1))?;
    chain(&[&mult3.padded(1, 0), &s.padded(1, 2), &sigma, &delta3.padded(1, 0)])
}

/// The adjoint braiding `R_H`.
pub fn adjoint_yb<F: Field>(h: &HopfAlgebra<F>) -> Result<crate::braided::YangBaxterOperator<F>> {
    let r = adjoint_map(h.mu(), h.delta(), h.antipode())?;
    crate::braided::YangBaxterOperator::new(r).map_err(|e| Error::Internal(format!("adjoint braiding: {e}")))
}

/// `(H, μ, R_H)`.
pub fn braided_from_hopf<F: Field>(h: &HopfAlgebra<F>) -> Result<BraidedAlgebra<F>> {
    let r = adjoint_map(h.mu(), h.delta(), h.antipode())?;
    BraidedAlgebra::braided(h.mu().clone(), r, Some(h.eta().clone()), h.labels().to_vec())
        .map_err(|e| Error::Internal(format!("adjoint braided algebra: {e}")))
}

/// A left integral in the dual, normalised so its first nonzero coordinate is 1, with the
/// full solution basis.
#[derive(Clone, Debug, PartialEq)]
pub struct Integral<F: Field> {
    pub lambda: TensorMap<F>,
    pub basis: Vec<TensorMap<F>>,
}

impl<F: Field> Integral<F> {
    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// Solve `(1⊗λ)Δ(x) = λ(x)·1` for all basis `x`.
pub fn find_left_integral<F: Field>(h: &HopfAlgebra<F>) -> Result<Integral<F>> {
    let field = h.field();
    let d = h.dim();
    // row (x, a), column k: Δ[(a,k), x] − [k = x]·η[a]
    let mut triples = Vec::new();
    for x in 0..d {
        for a in 0..d {
            for k in 0..d {
                let mut v = h.delta().get(a * d + k, x).clone();
                if k == x {
                    v = field.sub(&v, h.eta().get(a, 0));
                }
                if !field.is_zero(&v) {
                    triples.push((x * d + a, k, v));
                }
            }
        }
    }
    let m = ExactMatrix::from_triples(field, d * d, d, triples)?;
    let basis: Vec<TensorMap<F>> = m
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let lead = v.iter().find(|c| !field.is_zero(c)).cloned().expect("kernel vectors are nonzero");
            let inv = field.inv(&lead).expect("nonzero");
            let v: Vec<F::Elem> = v.iter().map(|c| field.mul(c, &inv)).collect();
            TensorMap::unflatten(field, v, d, 1, 0)
        })
        .collect::<Result<_>>()?;
    match basis.first() {
        None => Err(Error::NoIntegral),
        Some(l) => Ok(Integral { lambda: l.clone(), basis }),
    }
}

/// The braided algebra on `X⊗X` from a commutative, cocommutative Hopf algebra `X`:
/// `μ = 1⊗∪⊗1` with `∪ = λμ(1⊗S)`, and
/// `R((x⊗y)⊗(z⊗w)) = (z⁽¹⁾⊗w⁽¹⁾) ⊗ T(x⊗z⁽²⁾⊗w⁽²⁾) ⊗ T(y⊗z⁽³⁾⊗w⁽³⁾)`, `T(a⊗b⊗c) = aS(b)c`.
pub fn braided_frobenius<F: Field>(h: &HopfAlgebra<F>) -> Result<BraidedAlgebra<F>> {
    if !(h.is_commutative() && h.is_cocommutative()) {
        return Err(Error::Precondition("the integral construction needs a commutative and cocommutative Hopf algebra".into()));
    }
    let integral = find_left_integral(h)?;
    if integral.rank() != 1 {
        return Err(Error::Precondition(format!("the integral space has rank {}, expected 1", integral.rank())));
    }
    let field = h.field();
    let d = h.dim();
    let (mu, delta, s) = (h.mu(), h.delta(), h.antipode());
    let cup = chain(&[&integral.lambda, mu, &s.padded(1, 0)])?;
    let mu_v = cup.padded(1, 1).regroup(2)?;
    let t = chain(&[mu, &mu.padded(0, 1), &s.padded(1, 1)])?;
    let delta3 = delta.padded(0, 1).compose(delta)?;
    // x y z w ↦ z1 w1 t(x z2 w2) t(y z3 w3), summed over the double coproducts of z and w
    let r_v = TensorMap::from_basis(field, d, 4, 4, |inp| {
        let (x, y) = (inp[0], inp[1]);
        let mut terms = Vec::new();
        for (zs, cz) in delta3.column(&[inp[2]]) {
            for (ws, cw) in delta3.column(&[inp[3]]) {
                let czw = field.mul(cz, cw);
                for (a, ca) in t.column(&[x, zs[1], ws[1]]) {
                    for (b, cb) in t.column(&[y, zs[2], ws[2]]) {
                        terms.push((vec![zs[0], ws[0], a[0], b[0]], field.mul(&czw, &field.mul(ca, cb))));
                    }
                }
            }
        }
        terms
    })
    .regroup(2)?;
    let labels = (0..d * d).map(|k| format!("{}⊗{}", h.labels()[k / d], h.labels()[k % d])).collect();
    BraidedAlgebra::braided(mu_v, r_v, None, labels).map_err(|e| Error::Internal(format!("integral construction: {e}")))
}

/// `(ξ: 2→1, ζ: 1→2)`
#[derive(Clone, Debug, PartialEq)]
pub struct HopfTwoCochain<R: Ring> {
    pub xi: TensorMap<R>,
    pub zeta: TensorMap<R>,
}

impl<R: Ring> HopfTwoCochain<R> {
    pub fn zero(ring: &R, d: usize) -> Self {
        HopfTwoCochain { xi: TensorMap::zero(ring, d, 2, 1), zeta: TensorMap::zero(ring, d, 1, 2) }
    }

    pub fn is_zero(&self) -> bool {
        self.xi.is_zero() && self.zeta.is_zero()
    }

    pub fn flatten(&self) -> Vec<R::Elem> {
        let mut v = self.xi.flatten();
        v.extend(self.zeta.flatten());
        v
    }

    pub fn unflatten(ring: &R, d: usize, mut v: Vec<R::Elem>) -> Result<Self> {
        let n = d * d * d;
        if v.len() != 2 * n {
            return Err(Error::Input(format!("Hopf 2-cochain vector has length {}, expected {}", v.len(), 2 * n)));
        }
        let zeta = v.split_off(n);
        Ok(HopfTwoCochain { xi: TensorMap::unflatten(ring, v, d, 2, 1)?, zeta: TensorMap::unflatten(ring, zeta, d, 1, 2)? })
    }
}

/// The infinitesimal change of structure under `1 + ħf`:
/// `ξ = fμ − μ(f⊗1) − μ(1⊗f)`, `ζ = (f⊗1)Δ + (1⊗f)Δ − Δf`.
pub fn hopf_coboundary<F: Field>(h: &HopfAlgebra<F>, f: &TensorMap<F>) -> Result<HopfTwoCochain<F>> {
    expect_arity(f, 1, 1, "1-cochain")?;
    let (mu, delta) = (h.mu(), h.delta());
    let xi = f.compose(mu)?.sub(&mu.compose(&f.padded(0, 1))?)?.sub(&mu.compose(&f.padded(1, 0))?)?;
    let zeta = f.padded(0, 1).compose(delta)?.add(&f.padded(1, 0).compose(delta)?)?.sub(&delta.compose(f)?)?;
    Ok(HopfTwoCochain { xi, zeta })
}

/// Which of the three cocycle conditions hold.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HopfCocycleVerdict {
    pub algebra: bool,
    pub coalgebra: bool,
    pub compatibility: bool,
}

impl HopfCocycleVerdict {
    pub fn passed(&self) -> bool {
        self.algebra && self.coalgebra && self.compatibility
    }
}

fn cocycle_defects<R: Ring>(h: &HopfMaps<R>, c: &HopfTwoCochain<R>) -> Result<[TensorMap<R>; 3]> {
    let ring = h.mu.ring();
    let d = h.mu.dim();
    let (mu, delta, xi, zeta) = (&h.mu, &h.delta, &c.xi, &c.zeta);
    expect_arity(xi, 2, 1, "ξ")?;
    expect_arity(zeta, 1, 2, "ζ")?;
    let algebra = TensorMap::linear_combination(&[
        (ring.one(), &mu.compose(&xi.padded(0, 1))?),
        (ring.one(), &xi.compose(&mu.padded(0, 1))?),
        (ring.from_i64(-1), &mu.compose(&xi.padded(1, 0))?),
        (ring.from_i64(-1), &xi.compose(&mu.padded(1, 0))?),
    ])?;
    let coalgebra = TensorMap::linear_combination(&[
        (ring.one(), &zeta.padded(1, 0).compose(delta)?),
        (ring.one(), &delta.padded(1, 0).compose(zeta)?),
        (ring.from_i64(-1), &zeta.padded(0, 1).compose(delta)?),
        (ring.from_i64(-1), &delta.padded(0, 1).compose(zeta)?),
    ])?;
    // Δ¹³(x)Δ²⁴(y): x⊗y ↦ x₁⊗x₂⊗y₁⊗y₂ ↦ x₁⊗y₁⊗x₂⊗y₂
    let middle = TensorMap::permutation(ring, d, &[0, 2, 1, 3])?;
    let dd = kron(&[delta, delta])?;
    let spread = middle.compose(&dd)?;
    let a = kron(&[mu, xi])?.add(&kron(&[xi, mu])?)?.compose(&spread)?;
    let b = kron(&[mu, mu])?.compose(&middle.compose(&kron(&[zeta, delta])?.add(&kron(&[delta, zeta])?)?)?)?;
    let compatibility = delta.compose(xi)?.add(&zeta.compose(mu)?)?.sub(&a)?.sub(&b)?;
    Ok([algebra, coalgebra, compatibility])
}

pub fn check_hopf_2cocycle<F: Field>(h: &HopfAlgebra<F>, c: &HopfTwoCochain<F>) -> Result<HopfCocycleVerdict> {
    let [a, b, e] = cocycle_defects(h.maps(), c)?;
    Ok(HopfCocycleVerdict { algebra: a.is_zero(), coalgebra: b.is_zero(), compatibility: e.is_zero() })
}

/// `ξ(1⊗x) = ξ(x⊗1) = 0` and `(1⊗ε)ζ = (ε⊗1)ζ = 0`.
pub fn check_normalized<F: Field>(h: &HopfAlgebra<F>, c: &HopfTwoCochain<F>) -> Result<bool> {
    let (eta, eps) = (h.eta(), h.epsilon());
    Ok(c.xi.compose(&eta.padded(0, 1))?.is_zero()
        && c.xi.compose(&eta.padded(1, 0))?.is_zero()
        && eps.padded(1, 0).compose(&c.zeta)?.is_zero()
        && eps.padded(0, 1).compose(&c.zeta)?.is_zero())
}

fn antipode_correction_map<R: Ring>(h: &HopfMaps<R>, c: &HopfTwoCochain<R>) -> Result<TensorMap<R>> {
    let (mu, delta, s) = (&h.mu, &h.delta, &h.s);
    let delta3 = delta.padded(0, 1).compose(delta)?;
    let outer = kron(&[s, &TensorMap::identity(mu.ring(), mu.dim(), 1), s])?;
    let first = chain(&[mu, &c.xi.padded(1, 0), &outer, &delta3])?;
    let second = chain(&[mu, &mu.padded(1, 0), &outer, &c.zeta.padded(1, 0), delta])?;
    Ok(first.add(&second)?.neg())
}

/// `S′ = −S(x⁽¹⁾)ξ(x⁽²⁾⊗S(x⁽³⁾)) − S(x⁽¹⁾)·μ((1⊗S)ζ(x⁽²⁾))`, with both antipode
/// identities of the deformed structure checked at first order.
pub fn antipode_correction<F: Field>(h: &HopfAlgebra<F>, c: &HopfTwoCochain<F>) -> Result<TensorMap<F>> {
    let sp = antipode_correction_map(h.maps(), c)?;
    let (mu, delta, s) = (h.mu(), h.delta(), h.antipode());
    let right = chain(&[&c.xi, &s.padded(1, 0), delta])?
        .add(&chain(&[mu, &s.padded(1, 0), &c.zeta])?)?
        .add(&chain(&[mu, &sp.padded(1, 0), delta])?)?;
    let left = chain(&[&c.xi, &s.padded(0, 1), delta])?
        .add(&chain(&[mu, &s.padded(0, 1), &c.zeta])?)?
        .add(&chain(&[mu, &sp.padded(0, 1), delta])?)?;
    if !right.is_zero() || !left.is_zero() {
        return Err(Error::Validation("the antipode identities fail at first order: (ξ, ζ) is not a valid cocycle".into()));
    }
    Ok(sp)
}

/// `(μ + ħξ, η, Δ + ħζ, ε, S + ħS′)` over `k[ħ]/(ħ²)`.
pub fn deformed_hopf<F: Field>(h: &HopfAlgebra<F>, c: &HopfTwoCochain<F>, s_prime: &TensorMap<F>) -> Result<HopfMaps<Truncated<F>>> {
    let t = Truncated::new(h.field().clone(), 2)?;
    let lift = |m: &TensorMap<F>| m.map_ring(&t, |x| t.constant(x.clone()));
    let bump = |a: &TensorMap<F>, b: &TensorMap<F>| lift(a).add(&b.map_ring(&t, |x| t.monomial(x.clone(), 1)));
    Ok(HopfMaps {
        mu: bump(h.mu(), &c.xi)?,
        eta: lift(h.eta()),
        delta: bump(h.delta(), &c.zeta)?,
        epsilon: lift(h.epsilon()),
        s: bump(h.antipode(), s_prime)?,
    })
}

/// `(Ψ, ξ)` where `Ψ` is the ħ¹ coefficient of the adjoint braiding of the deformed Hopf
/// algebra. The result is checked to be a 2-cocycle of `(H, μ, R_H)`.
pub fn psi_map<F: Field>(h: &HopfAlgebra<F>, c: &HopfTwoCochain<F>) -> Result<Ybh2Cochain<F>> {
    if !check_normalized(h, c)? {
        return Err(Error::Precondition("the Hopf 2-cochain is not normalized".into()));
    }
    if !check_hopf_2cocycle(h, c)?.passed() {
        return Err(Error::Precondition("the Hopf 2-cochain is not a cocycle".into()));
    }
    let sp = antipode_correction(h, c)?;
    let deformed = deformed_hopf(h, c, &sp)?;
    let r = adjoint_map(&deformed.mu, &deformed.delta, &deformed.s)?;
    let field = h.field().clone();
    let psi = r.map_ring(&field, |x| hbar_coefficient(x, 1).expect("order 2"));
    let out = Ybh2Cochain { phi: psi, psi: c.xi.clone() };
    let rh = adjoint_map(h.mu(), h.delta(), h.antipode())?;
    if !ybh_d2(h.mu(), &rh, &out)?.is_zero() {
        return Err(Error::Internal("Ψ did not produce a 2-cocycle".into()));
    }
    Ok(out)
}

/// Basis of normalized Hopf 2-cocycles: the kernel of the three cocycle conditions and
/// the four normalization conditions, all linear in `(ξ, ζ)`.
pub fn normalized_cocycle_basis<F: Field>(h: &HopfAlgebra<F>) -> Result<Vec<HopfTwoCochain<F>>> {
    let field = h.field();
    let d = h.dim();
    let n = 2 * d * d * d;
    let mut columns = Vec::with_capacity(n);
    for j in 0..n {
        let mut v = vec![field.zero(); n];
        v[j] = field.one();
        let c = HopfTwoCochain::unflatten(field, d, v)?;
        let mut col = Vec::new();
        for m in cocycle_defects(h.maps(), &c)? {
            col.extend(m.flatten());
        }
        let (eta, eps) = (h.eta(), h.epsilon());
        for m in [
            c.xi.compose(&eta.padded(0, 1))?,
            c.xi.compose(&eta.padded(1, 0))?,
            eps.padded(1, 0).compose(&c.zeta)?,
            eps.padded(0, 1).compose(&c.zeta)?,
        ] {
            col.extend(m.flatten());
        }
        columns.push(col);
    }
    let rows = columns.first().map_or(0, Vec::len);
    let m = ExactMatrix::from_columns(field, rows, columns)?;
    m.kernel_basis().into_iter().map(|v| HopfTwoCochain::unflatten(field, d, v)).collect()
}

/// Rank data for Ψ on cohomology; injectivity is reported, not asserted.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct PsiReport {
    pub normalized_cocycles: usize,
    pub normalized_coboundaries: usize,
    /// rank of `{(Ψ(c), ξ_c)}` modulo YBH coboundaries
    pub image_rank: usize,
    pub all_images_are_cocycles: bool,
}

pub fn psi_report<F: Field>(h: &HopfAlgebra<F>, guard: &crate::complex::DimensionGuard) -> Result<PsiReport> {
    let field = h.field();
    let d = h.dim();
    let b = braided_from_hopf(h)?;
    let slice = ComplexSlice::new(b, guard)?;
    let basis = normalized_cocycle_basis(h)?;
    let mut images = Vec::new();
    let mut ok = true;
    for c in &basis {
        let x = psi_map(h, c)?;
        ok &= slice.is_cocycle(&x)?;
        images.push(x.flatten());
    }
    // normalized coboundaries: f with f(1) = 0 and εf = 0
    let mut cob = Vec::new();
    for j in 0..d * d {
        let mut f = TensorMap::zero(field, d, 1, 1);
        f.set(j / d, j % d, field.one());
        let c = hopf_coboundary(h, &f)?;
        cob.push(c.flatten());
    }
    // dim(coboundaries ∩ normalized cocycles) = rank C + rank N − rank(C ∪ N)
    let rows = 2 * d * d * d;
    let rank_of = |cols: Vec<Vec<F::Elem>>| -> Result<usize> {
        Ok(if cols.is_empty() { 0 } else { ExactMatrix::from_columns(field, rows, cols)?.rank() })
    };
    let basis_vecs: Vec<Vec<F::Elem>> = basis.iter().map(HopfTwoCochain::flatten).collect();
    let mut union = cob.clone();
    union.extend(basis_vecs.iter().cloned());
    let normalized_coboundaries = rank_of(cob)? + rank_of(basis_vecs)? - rank_of(union)?;
    let b2: Vec<Vec<F::Elem>> = slice.d1().independent_columns().into_iter().map(|j| slice.d1().dense_column(j)).collect();
    let rank_b = b2.len();
    let mut all = b2;
    all.extend(images);
    let nrows = Ybh2Cochain::<F>::space_dim(d);
    let rank_all = if all.is_empty() { 0 } else { ExactMatrix::from_columns(field, nrows, all)?.rank() };
    Ok(PsiReport {
        normalized_cocycles: basis.len(),
        normalized_coboundaries,
        image_rank: rank_all - rank_b,
        all_images_are_cocycles: ok,
    })
}

/// `δ¹_YB(−f)` on the adjoint braided algebra, for comparison with Ψ of a coboundary.
pub fn expected_psi_of_coboundary<F: Field>(h: &HopfAlgebra<F>, f: &TensorMap<F>) -> Result<TensorMap<F>> {
    let rh = adjoint_map(h.mu(), h.delta(), h.antipode())?;
    Ok(ybh_d1(h.mu(), &rh, &f.neg())?.phi)
}
