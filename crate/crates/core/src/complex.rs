//! Assembled differential matrices, cocycle and coboundary spaces, cohomology dimensions
//! and the comparison map into the braided-multiplication algebra.

use rayon::prelude::*;

use crate::braided::{braided_multiplication, BraidedAlgebra};
use crate::cochain::{Summand4, Ybh2Cochain, Ybh3Cochain, Ybh4Cochain};
use crate::degree3::Degree3Operator;
use crate::differential::{mixed_d2, ybh_d1, ybh_d2, yang_baxter_d1, yang_baxter_d2};
use crate::error::{Error, Result};
use crate::linalg::{ExactMatrix, Solution};
use crate::scalar::{Field, Ring, SparseRow};
use crate::tensor::TensorMap;

/// Largest dimension accepted for degree-2 and degree-3 computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DimensionGuard {
    pub degree2: usize,
    pub degree3: usize,
}

impl Default for DimensionGuard {
    fn default() -> Self {
        DimensionGuard { degree2: 4, degree3: 3 }
    }
}

impl DimensionGuard {
    pub fn unlimited() -> Self {
        DimensionGuard { degree2: usize::MAX, degree3: usize::MAX }
    }

    /// Same bound for both degrees.
    pub fn uniform(max_dim: usize) -> Self {
        DimensionGuard { degree2: max_dim, degree3: max_dim }
    }

    pub fn check(&self, degree: usize, d: usize) -> Result<()> {
        let limit = if degree >= 3 { self.degree3 } else { self.degree2 };
        if d > limit {
            return Err(Error::Guard(format!(
                "degree-{degree} computation at d={d} exceeds the bound d ≤ {limit}; raise it or pass --slow"
            )));
        }
        Ok(())
    }
}

/// `δ_YB` in degree 1 (`1→1 ↦ 2→2`) or 2 (`2→2 ↦ 3→3`).
pub fn yang_baxter_differential<F: Field>(b: &BraidedAlgebra<F>, n: usize, c: &TensorMap<F>) -> Result<TensorMap<F>> {
    match n {
        1 => yang_baxter_d1(b.r(), c),
        2 => yang_baxter_d2(b.r(), c),
        _ => Err(Error::Input(format!("Yang-Baxter differential is implemented in degrees 1 and 2, got {n}"))),
    }
}

/// The two compatibility components of δ², `(yi, iy)`.
pub fn mixed_differential_d2<F: Field>(b: &BraidedAlgebra<F>, c: &Ybh2Cochain<F>) -> Result<(TensorMap<F>, TensorMap<F>)> {
    mixed_d2(b.mu(), b.r(), &c.phi, &c.psi)
}

/// All summands of δ³ other than the pure Yang-Baxter and Hochschild ones, in
/// [`Summand4`] order.
pub fn mixed_differential_d3<F: Field>(b: &BraidedAlgebra<F>, c: &Ybh3Cochain<F>) -> Result<Vec<(Summand4, TensorMap<F>)>> {
    let full = Degree3Operator::new(b.mu(), b.r())?.apply(c)?;
    Ok(Summand4::ALL
        .iter()
        .zip(full.parts)
        .filter(|(s, _)| !matches!(s, Summand4::Yb | Summand4::H))
        .map(|(s, m)| (*s, m))
        .collect())
}

fn assemble<F: Field>(field: &F, rows: usize, cols: usize, column: impl Fn(usize) -> Result<SparseRow<F::Elem>> + Sync) -> Result<ExactMatrix<F>> {
    let columns: Vec<SparseRow<F::Elem>> = (0..cols).into_par_iter().map(&column).collect::<Result<_>>()?;
    let triples = columns.into_iter().enumerate().flat_map(|(j, col)| col.into_iter().map(move |(i, v)| (i, j, v)));
    ExactMatrix::from_triples(field, rows, cols, triples)
}

fn sparse<R: Ring>(ring: &R, v: Vec<R::Elem>) -> SparseRow<R::Elem> {
    v.into_iter().enumerate().filter(|(_, x)| !ring.is_zero(x)).collect()
}

/// Matrix of δ¹ (degree 1) or δ² (degree 2) in the flattened bases. Columns are evaluated
/// in parallel; the result does not depend on scheduling.
pub fn differential_matrix<F: Field>(b: &BraidedAlgebra<F>, degree: usize) -> Result<ExactMatrix<F>> {
    let field = b.field();
    let d = b.dim();
    match degree {
        1 => assemble(field, Ybh2Cochain::<F>::space_dim(d), d * d, |j| {
            let mut f = TensorMap::zero(field, d, 1, 1);
            f.set(j / d, j % d, field.one());
            Ok(sparse(field, ybh_d1(b.mu(), b.r(), &f)?.flatten()))
        }),
        2 => {
            let n = Ybh2Cochain::<F>::space_dim(d);
            assemble(field, Ybh3Cochain::<F>::space_dim(d), n, |j| {
                let mut v = vec![field.zero(); n];
                v[j] = field.one();
                let c = Ybh2Cochain::unflatten(field, d, v)?;
                Ok(sparse(field, ybh_d2(b.mu(), b.r(), &c)?.flatten()))
            })
        }
        3 => {
            let op = Degree3Operator::new(b.mu(), b.r())?;
            assemble(field, Ybh4Cochain::<F>::space_dim(d), Ybh3Cochain::<F>::space_dim(d), |j| op.column(j))
        }
        _ => Err(Error::Input(format!("differential matrices exist for degrees 1, 2 and 3, got {degree}"))),
    }
}

/// Dimensions of one slice of the complex.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct CohomologySummary {
    pub dim: usize,
    pub c1: usize,
    pub c2: usize,
    pub c3: usize,
    pub rank_d1: usize,
    pub rank_d2: usize,
    pub h1: usize,
    pub z2: usize,
    pub b2: usize,
    pub h2: usize,
}

/// A braided algebra with δ¹ and δ² assembled and δ³ ready to apply.
pub struct ComplexSlice<F: Field> {
    algebra: BraidedAlgebra<F>,
    d1: ExactMatrix<F>,
    d2: ExactMatrix<F>,
    d3: Degree3Operator<F>,
}

impl<F: Field> ComplexSlice<F> {
    pub fn new(algebra: BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<Self> {
        algebra.require_braided()?;
        guard.check(2, algebra.dim())?;
        let d1 = differential_matrix(&algebra, 1)?;
        let d2 = differential_matrix(&algebra, 2)?;
        let d3 = Degree3Operator::new(algebra.mu(), algebra.r())?;
        Ok(ComplexSlice { algebra, d1, d2, d3 })
    }

    pub fn algebra(&self) -> &BraidedAlgebra<F> {
        &self.algebra
    }
    pub fn field(&self) -> &F {
        self.algebra.field()
    }
    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }
    pub fn d1(&self) -> &ExactMatrix<F> {
        &self.d1
    }
    pub fn d2(&self) -> &ExactMatrix<F> {
        &self.d2
    }
    pub fn d3(&self) -> &Degree3Operator<F> {
        &self.d3
    }

    pub fn apply_d1(&self, f: &TensorMap<F>) -> Result<Ybh2Cochain<F>> {
        ybh_d1(self.algebra.mu(), self.algebra.r(), f)
    }

    pub fn apply_d2(&self, c: &Ybh2Cochain<F>) -> Result<Ybh3Cochain<F>> {
        ybh_d2(self.algebra.mu(), self.algebra.r(), c)
    }

    pub fn apply_d3(&self, c: &Ybh3Cochain<F>) -> Result<Ybh4Cochain<F>> {
        self.d3.apply(c)
    }

    /// `D2·D1 = 0`
    pub fn chain_identity_holds(&self) -> Result<bool> {
        Ok(self.d2.mul(&self.d1)?.is_zero())
    }

    pub fn is_cocycle(&self, c: &Ybh2Cochain<F>) -> Result<bool> {
        Ok(self.apply_d2(c)?.is_zero())
    }

    /// A 1-cochain `f` with `δ¹f = c`, if one exists.
    pub fn coboundary_preimage(&self, c: &Ybh2Cochain<F>) -> Result<Option<TensorMap<F>>> {
        let d = self.dim();
        Ok(match self.d1.solve(&c.flatten())? {
            Solution::Solved(x) => Some(TensorMap::unflatten(self.field(), x, d, 1, 1)?),
            Solution::Inconsistent { .. } => None,
        })
    }

    /// Kernel basis of D2.
    pub fn cocycle_basis(&self) -> Result<Vec<Ybh2Cochain<F>>> {
        let d = self.dim();
        self.d2.kernel_basis().into_iter().map(|v| Ybh2Cochain::unflatten(self.field(), d, v)).collect()
    }

    /// Independent columns of D1.
    pub fn coboundary_basis(&self) -> Result<Vec<Ybh2Cochain<F>>> {
        let d = self.dim();
        self.d1
            .independent_columns()
            .into_iter()
            .map(|j| Ybh2Cochain::unflatten(self.field(), d, self.d1.dense_column(j)))
            .collect()
    }

    /// Cocycle basis vectors completing the coboundaries to a basis of Z², greedily in
    /// kernel-basis order; their classes form a basis of H².
    pub fn h2_representatives(&self) -> Result<Vec<Ybh2Cochain<F>>> {
        let b2: Vec<_> = self.coboundary_basis()?.iter().map(Ybh2Cochain::flatten).collect();
        let z2 = self.cocycle_basis()?;
        let offset = b2.len();
        let mut columns = b2;
        columns.extend(z2.iter().map(Ybh2Cochain::flatten));
        let m = ExactMatrix::from_columns(self.field(), Ybh2Cochain::<F>::space_dim(self.dim()), columns)?;
        Ok(m.independent_columns().into_iter().filter(|&j| j >= offset).map(|j| z2[j - offset].clone()).collect())
    }

    pub fn summary(&self) -> CohomologySummary {
        let d = self.dim();
        let rank_d1 = self.d1.rank();
        let rank_d2 = self.d2.rank();
        let c2 = Ybh2Cochain::<F>::space_dim(d);
        let z2 = c2 - rank_d2;
        CohomologySummary {
            dim: d,
            c1: d * d,
            c2,
            c3: Ybh3Cochain::<F>::space_dim(d),
            rank_d1,
            rank_d2,
            h1: d * d - rank_d1,
            z2,
            b2: rank_d1,
            h2: z2 - rank_d1,
        }
    }

    pub fn h2_dimension(&self) -> usize {
        self.summary().h2
    }
}

/// `dim H²`.
pub fn cohomology_dimension<F: Field>(b: &BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<usize> {
    Ok(ComplexSlice::new(b.clone(), guard)?.h2_dimension())
}

/// Degree-3 dimensions: with a private target per summand, and with the plain and mixed
/// 4→2 summands of each family sharing one target.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct H3Summary {
    pub c3: usize,
    pub c4: usize,
    pub rank_d2: usize,
    pub rank_d3: usize,
    pub z3: usize,
    pub h3: usize,
    pub rank_d3_shared: usize,
    pub h3_shared: usize,
}

/// Rank of δ³ on the private-target and shared-target complexes, and both `dim H³`.
pub fn h3_summary<F: Field>(b: &BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<H3Summary> {
    b.require_braided()?;
    let d = b.dim();
    guard.check(3, d)?;
    let rank_d2 = differential_matrix(b, 2)?.rank();
    let d3 = differential_matrix(b, 3)?;
    let rank_d3 = d3.rank();
    // fold each mixed 4→2 block onto the plain 4→2 block of the same family
    let d4 = d.pow(4);
    let mut offsets = Vec::new();
    let mut off = 0;
    for s in Summand4::ALL {
        offsets.push(off);
        off += d4 * d.pow(s.out_arity() as u32);
    }
    let block = d4 * d * d;
    let fold = |row: usize| -> usize {
        for (mixed, plain) in [(Summand4::MixedYi42, Summand4::Yi42), (Summand4::MixedIy42, Summand4::Iy42)] {
            let start = offsets[mixed as usize];
            if row >= start && row < start + block {
                return offsets[plain as usize] + (row - start);
            }
        }
        row
    };
    let field = b.field();
    let mut acc: std::collections::BTreeMap<(usize, usize), F::Elem> = std::collections::BTreeMap::new();
    for (i, j, v) in d3.entries() {
        let e = acc.entry((fold(i), j)).or_insert_with(|| field.zero());
        field.add_assign(e, v);
    }
    let shared = ExactMatrix::from_triples(field, d3.rows(), d3.cols(), acc.into_iter().map(|((i, j), v)| (i, j, v)))?;
    let rank_d3_shared = shared.rank();
    let c3 = Ybh3Cochain::<F>::space_dim(d);
    Ok(H3Summary {
        c3,
        c4: Ybh4Cochain::<F>::space_dim(d),
        rank_d2,
        rank_d3,
        z3: c3 - rank_d3,
        h3: c3 - rank_d3 - rank_d2,
        rank_d3_shared,
        h3_shared: c3 - rank_d3_shared - rank_d2,
    })
}

pub fn h3_dimension<F: Field>(b: &BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<usize> {
    Ok(h3_summary(b, guard)?.h3)
}

pub fn h3_dimension_shared<F: Field>(b: &BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<usize> {
    Ok(h3_summary(b, guard)?.h3_shared)
}

/// `(φ, ψ) ↦ (φ, μφ + ψR)`, landing in the cochains of `(V, μR, R)`.
pub fn iota_r_map<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, c: &Ybh2Cochain<R>) -> Result<Ybh2Cochain<R>> {
    let psi = mu.compose(&c.phi)?.add(&c.psi.compose(r)?)?;
    Ok(Ybh2Cochain { phi: c.phi.clone(), psi })
}

/// [`iota_r_map`] on a 2-cocycle, with the image checked to be a 2-cocycle of `(V, μR, R)`.
pub fn iota_r<F: Field>(b: &BraidedAlgebra<F>, c: &Ybh2Cochain<F>) -> Result<Ybh2Cochain<F>> {
    if !ybh_d2(b.mu(), b.r(), c)?.is_zero() {
        return Err(Error::Precondition("the input to ι_R is not a 2-cocycle".into()));
    }
    let target = braided_multiplication(b, 1)?;
    let out = iota_r_map(b.mu(), b.r(), c)?;
    if !ybh_d2(target.mu(), target.r(), &out)?.is_zero() {
        return Err(Error::Internal("ι_R produced a non-cocycle".into()));
    }
    Ok(out)
}

/// Rank data for ι_R on H².
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct IotaReport {
    pub h2_source: usize,
    pub h2_target: usize,
    pub cocycles_map_to_cocycles: bool,
    pub coboundaries_map_to_coboundaries: bool,
    /// `dim span(ι(Z²) ∪ B²(V_R)) − dim B²(V_R)`
    pub induced_rank: usize,
}

impl IotaReport {
    pub fn injective(&self) -> bool {
        self.cocycles_map_to_cocycles && self.coboundaries_map_to_coboundaries && self.induced_rank == self.h2_source
    }
}

pub fn iota_report<F: Field>(b: &BraidedAlgebra<F>, guard: &DimensionGuard) -> Result<IotaReport> {
    let source = ComplexSlice::new(b.clone(), guard)?;
    let target = ComplexSlice::new(braided_multiplication(b, 1)?, guard)?;
    let field = b.field();
    let d = b.dim();
    let mut cocycles_ok = true;
    let mut images = Vec::new();
    for c in source.cocycle_basis()? {
        let x = iota_r_map(b.mu(), b.r(), &c)?;
        cocycles_ok &= target.is_cocycle(&x)?;
        images.push(x.flatten());
    }
    let mut coboundaries_ok = true;
    for j in 0..d * d {
        let mut f = TensorMap::zero(field, d, 1, 1);
        f.set(j / d, j % d, field.one());
        let x = iota_r_map(b.mu(), b.r(), &source.apply_d1(&f)?)?;
        coboundaries_ok &= x == target.apply_d1(&f)?;
    }
    let b2_target: Vec<Vec<F::Elem>> =
        target.d1().independent_columns().into_iter().map(|j| target.d1().dense_column(j)).collect();
    let n = Ybh2Cochain::<F>::space_dim(d);
    let rank_b = b2_target.len();
    let mut all = b2_target;
    all.extend(images);
    let rank_all = if all.is_empty() { 0 } else { ExactMatrix::from_columns(field, n, all)?.rank() };
    let summary = source.summary();
    Ok(IotaReport {
        h2_source: summary.h2,
        h2_target: target.summary().h2,
        cocycles_map_to_cocycles: cocycles_ok,
        coboundaries_map_to_coboundaries: coboundaries_ok,
        induced_rank: rank_all - rank_b,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dual_numbers, from_heap, from_mcq, group_algebra, trivial_braiding, FiniteGroup, Mcq};
    use crate::scalar::{PrimeField, Rationals};
    use rand::SeedableRng;

    #[test]
    fn h2_representatives_are_independent_mod_coboundaries() {
        let f = PrimeField::new(2).unwrap();
        let s = ComplexSlice::new(trivial_braiding(&dual_numbers(&f)).unwrap(), &DimensionGuard::default()).unwrap();
        let reps = s.h2_representatives().unwrap();
        assert_eq!(reps.len(), s.h2_dimension());
        let mut cols: Vec<_> = s.coboundary_basis().unwrap().iter().map(Ybh2Cochain::flatten).collect();
        cols.extend(reps.iter().map(Ybh2Cochain::flatten));
        let m = ExactMatrix::from_columns(&f, Ybh2Cochain::<PrimeField>::space_dim(2), cols).unwrap();
        assert_eq!(m.rank(), s.summary().b2 + reps.len());
        assert!(reps.iter().all(|c| s.is_cocycle(c).unwrap()));
    }

    #[test]
    fn matrix_shapes() {
        let q = Rationals;
        let b2 = trivial_braiding(&dual_numbers(&q)).unwrap();
        let s = ComplexSlice::new(b2, &DimensionGuard::default()).unwrap();
        assert_eq!((s.d1().rows(), s.d1().cols()), (24, 4));
        assert_eq!((s.d2().rows(), s.d2().cols()), (144, 24));
        let b3 = trivial_braiding(&group_algebra(&FiniteGroup::cyclic(3), &q)).unwrap();
        let s = ComplexSlice::new(b3, &DimensionGuard::default()).unwrap();
        assert_eq!((s.d1().rows(), s.d1().cols()), (108, 9));
        assert_eq!((s.d2().rows(), s.d2().cols()), (1296, 108));
        assert!(s.chain_identity_holds().unwrap());
    }

    #[test]
    fn matrices_agree_with_operators() {
        let f = PrimeField::new(101).unwrap();
        let b = from_mcq(&Mcq::trivial_union(vec![FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)]).unwrap(), &f).unwrap();
        let s = ComplexSlice::new(b.clone(), &DimensionGuard::default()).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(6);
        let c = Ybh2Cochain::random(&f, 4, &mut rng);
        assert_eq!(s.d2().mul_vec(&c.flatten()).unwrap(), s.apply_d2(&c).unwrap().flatten());
        let g = TensorMap::random(&f, 4, 1, 1, &mut rng);
        assert_eq!(s.d1().mul_vec(&g.flatten()).unwrap(), s.apply_d1(&g).unwrap().flatten());
        assert!(s.chain_identity_holds().unwrap());
    }

    #[test]
    fn coboundaries_of_group_algebra_adjoint() {
        // the conjugation braiding on ℚ[ℤ/2] is the flip; δ¹ is injective, so B² has dim 4
        let q = Rationals;
        let b = from_mcq(&Mcq::conjugation(FiniteGroup::cyclic(2)), &q).unwrap();
        let s = ComplexSlice::new(b, &DimensionGuard::default()).unwrap();
        let summary = s.summary();
        assert_eq!(summary.b2, 4);
        assert_eq!(summary.h2, summary.z2 - 4);
        for c in s.cocycle_basis().unwrap() {
            assert!(s.is_cocycle(&c).unwrap());
        }
        for c in s.coboundary_basis().unwrap() {
            assert!(s.is_cocycle(&c).unwrap());
            assert!(s.coboundary_preimage(&c).unwrap().is_some());
        }
    }

    #[test]
    fn dual_numbers_in_characteristic_two_have_cohomology() {
        let f2 = PrimeField::new(2).unwrap();
        let b = trivial_braiding(&dual_numbers(&f2)).unwrap();
        let s = ComplexSlice::new(b, &DimensionGuard::default()).unwrap();
        let summary = s.summary();
        assert!(summary.z2 > summary.b2, "{summary:?}");
    }

    #[test]
    fn guard_rejects_large_dimensions() {
        let f = PrimeField::new(3).unwrap();
        let b = from_heap(&FiniteGroup::cyclic(3), &f).unwrap();
        assert!(matches!(ComplexSlice::new(b.clone(), &DimensionGuard::default()), Err(Error::Guard(_))));
        assert!(matches!(h3_summary(&trivial_braiding(&group_algebra(&FiniteGroup::cyclic(2), &f)).unwrap(), &DimensionGuard::uniform(1)), Err(Error::Guard(_))));
    }

    #[test]
    fn h3_of_small_algebras() {
        let f = PrimeField::new(101).unwrap();
        let one = from_heap(&FiniteGroup::trivial(), &f).unwrap();
        let s = h3_summary(&one, &DimensionGuard::default()).unwrap();
        assert_eq!(s.c3, 4);
        assert!(s.h3 <= s.c3 && s.h3_shared >= s.h3);
        let b = trivial_braiding(&dual_numbers(&f)).unwrap();
        let s = h3_summary(&b, &DimensionGuard::default()).unwrap();
        assert_eq!(s.z3 + s.rank_d3, s.c3);
        assert!(s.rank_d3_shared <= s.rank_d3);
    }

    #[test]
    fn iota_on_coboundaries_and_heap() {
        let f2 = PrimeField::new(2).unwrap();
        let b = from_heap(&FiniteGroup::cyclic(2), &f2).unwrap();
        let s = ComplexSlice::new(b.clone(), &DimensionGuard::default()).unwrap();
        let target = braided_multiplication(&b, 1).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(8);
        let g = TensorMap::random(&f2, 4, 1, 1, &mut rng);
        let image = iota_r(&b, &s.apply_d1(&g).unwrap()).unwrap();
        assert_eq!(image, ybh_d1(target.mu(), target.r(), &g).unwrap());
        assert!(iota_r(&b, &Ybh2Cochain::zero(&f2, 4)).unwrap().is_zero());
        for c in s.cocycle_basis().unwrap() {
            iota_r(&b, &c).unwrap();
        }
        let report = iota_report(&b, &DimensionGuard::default()).unwrap();
        assert!(report.injective(), "{report:?}");
    }

    #[test]
    fn iota_rejects_non_cocycles() {
        let f = PrimeField::new(101).unwrap();
        let b = from_heap(&FiniteGroup::cyclic(2), &f).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(10);
        let c = Ybh2Cochain::random(&f, 4, &mut rng);
        assert!(matches!(iota_r(&b, &c), Err(Error::Precondition(_))));
    }
}
