//! Linear maps between tensor powers of a d-dimensional space, stored as dense grids.
//!
//! A basis tensor `e_{i1} ⊗ … ⊗ e_{in}` has index `Σ i_t · d^(n-t)` (lexicographic,
//! first factor most significant). A map `V^⊗n → V^⊗k` is a `d^k × d^n` grid stored
//! row-major: rows are outputs, columns are inputs.

use crate::error::{Error, Result};
use crate::scalar::Ring;

#[derive(Clone, Debug)]
pub struct TensorMap<R: Ring> {
    ring: R,
    dim: usize,
    in_arity: usize,
    out_arity: usize,
    data: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for TensorMap<R> {
    fn eq(&self, other: &Self) -> bool {
        self.dim == other.dim
            && self.in_arity == other.in_arity
            && self.out_arity == other.out_arity
            && self.data == other.data
    }
}

/// Index of a basis tensor.
pub fn encode(d: usize, idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * d + i)
}

/// Inverse of [`encode`] for `n` factors.
pub fn decode(d: usize, n: usize, mut index: usize) -> Vec<usize> {
    let mut out = vec![0; n];
    for t in (0..n).rev() {
        out[t] = index % d;
        index /= d;
    }
    out
}

impl<R: Ring> TensorMap<R> {
    pub fn zero(ring: &R, dim: usize, in_arity: usize, out_arity: usize) -> Self {
        let size = dim.pow(in_arity as u32) * dim.pow(out_arity as u32);
        TensorMap { ring: ring.clone(), dim, in_arity, out_arity, data: vec![ring.zero(); size] }
    }

    pub fn identity(ring: &R, dim: usize, n: usize) -> Self {
        let mut m = Self::zero(ring, dim, n, n);
        let size = m.cols();
        for i in 0..size {
            m.data[i * size + i] = ring.one();
        }
        m
    }

    /// Map sending `e_{i_0} ⊗ … ⊗ e_{i_{n-1}}` to `e_{i_{perm[0]}} ⊗ … ⊗ e_{i_{perm[n-1]}}`.
    pub fn permutation(ring: &R, dim: usize, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::Input(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let mut m = Self::zero(ring, dim, n, n);
        let cols = m.cols();
        for col in 0..cols {
            let inp = decode(dim, n, col);
            let out: Vec<usize> = perm.iter().map(|&p| inp[p]).collect();
            m.data[encode(dim, &out) * cols + col] = ring.one();
        }
        Ok(m)
    }

    /// The flip `x ⊗ y ↦ y ⊗ x`.
    pub fn swap(ring: &R, dim: usize) -> Self {
        Self::permutation(ring, dim, &[1, 0]).expect("valid permutation")
    }

    /// Reversal of the tensor factors of `V^⊗n`.
    pub fn reversal(ring: &R, dim: usize, n: usize) -> Self {
        let perm: Vec<usize> = (0..n).rev().collect();
        Self::permutation(ring, dim, &perm).expect("valid permutation")
    }

    /// Build from a function of (row, col).
    pub fn from_fn(
        ring: &R,
        dim: usize,
        in_arity: usize,
        out_arity: usize,
        mut f: impl FnMut(usize, usize) -> R::Elem,
    ) -> Self {
        let mut m = Self::zero(ring, dim, in_arity, out_arity);
        let cols = m.cols();
        for (k, v) in m.data.iter_mut().enumerate() {
            *v = f(k / cols, k % cols);
        }
        m
    }

    /// Build from the images of basis tensors: `f(input multi-index)` lists
    /// `(output multi-index, coefficient)` pairs, which are summed.
    pub fn from_basis(
        ring: &R,
        dim: usize,
        in_arity: usize,
        out_arity: usize,
        mut f: impl FnMut(&[usize]) -> Vec<(Vec<usize>, R::Elem)>,
    ) -> Self {
        let mut m = Self::zero(ring, dim, in_arity, out_arity);
        let cols = m.cols();
        for col in 0..cols {
            let inp = decode(dim, in_arity, col);
            for (out, c) in f(&inp) {
                debug_assert_eq!(out.len(), out_arity);
                let row = encode(dim, &out);
                ring.add_assign(&mut m.data[row * cols + col], &c);
            }
        }
        m
    }

    /// Build from sparse `(row, col, value)` triples; repeated positions are summed.
    pub fn from_triples(
        ring: &R,
        dim: usize,
        in_arity: usize,
        out_arity: usize,
        triples: impl IntoIterator<Item = (usize, usize, R::Elem)>,
    ) -> Result<Self> {
        let mut m = Self::zero(ring, dim, in_arity, out_arity);
        let (rows, cols) = (m.rows(), m.cols());
        for (r, c, v) in triples {
            if r >= rows || c >= cols {
                return Err(Error::Input(format!("entry ({r},{c}) outside a {rows}x{cols} grid")));
            }
            ring.add_assign(&mut m.data[r * cols + c], &v);
        }
        Ok(m)
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }
    pub fn dim(&self) -> usize {
        self.dim
    }
    pub fn in_arity(&self) -> usize {
        self.in_arity
    }
    pub fn out_arity(&self) -> usize {
        self.out_arity
    }
    pub fn rows(&self) -> usize {
        self.dim.pow(self.out_arity as u32)
    }
    pub fn cols(&self) -> usize {
        self.dim.pow(self.in_arity as u32)
    }
    pub fn get(&self, row: usize, col: usize) -> &R::Elem {
        &self.data[row * self.cols() + col]
    }
    pub fn set(&mut self, row: usize, col: usize, v: R::Elem) {
        let cols = self.cols();
        self.data[row * cols + col] = v;
    }
    /// Coefficient of the output basis tensor `out` in the image of the input basis tensor `inp`.
    pub fn coeff(&self, out: &[usize], inp: &[usize]) -> &R::Elem {
        self.get(encode(self.dim, out), encode(self.dim, inp))
    }
    pub fn data(&self) -> &[R::Elem] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|v| self.ring.is_zero(v))
    }

    pub fn nnz(&self) -> usize {
        self.data.iter().filter(|v| !self.ring.is_zero(v)).count()
    }

    /// Nonzero entries as `(row, col, value)` in row-major order.
    pub fn triples(&self) -> impl Iterator<Item = (usize, usize, &R::Elem)> + '_ {
        let cols = self.cols();
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !self.ring.is_zero(v))
            .map(move |(k, v)| (k / cols, k % cols, v))
    }

    /// Nonzero terms `(out, value)` of the image of the input basis tensor `inp`.
    pub fn column(&self, inp: &[usize]) -> Vec<(Vec<usize>, &R::Elem)> {
        let col = encode(self.dim, inp);
        (0..self.rows())
            .filter(|&row| !self.ring.is_zero(self.get(row, col)))
            .map(|row| (decode(self.dim, self.out_arity, row), self.get(row, col)))
            .collect()
    }

    /// First input basis tensor (lexicographic) on which the map is nonzero, with the first
    /// output basis tensor in its image.
    pub fn first_nonzero_column(&self) -> Option<(Vec<usize>, Vec<usize>)> {
        let (rows, cols) = (self.rows(), self.cols());
        for col in 0..cols {
            for row in 0..rows {
                if !self.ring.is_zero(&self.data[row * cols + col]) {
                    return Some((decode(self.dim, self.in_arity, col), decode(self.dim, self.out_arity, row)));
                }
            }
        }
        None
    }

    fn same_shape(&self, other: &Self, what: &str) -> Result<()> {
        if self.dim != other.dim || self.in_arity != other.in_arity || self.out_arity != other.out_arity {
            return Err(Error::Input(format!(
                "{what}: shapes differ (d={}, {}→{} vs d={}, {}→{})",
                self.dim, self.in_arity, self.out_arity, other.dim, other.in_arity, other.out_arity
            )));
        }
        Ok(())
    }

    /// `self ∘ g`: apply `g` first.
    pub fn compose(&self, g: &Self) -> Result<Self> {
        if self.dim != g.dim {
            return Err(Error::Input(format!("compose: dimensions {} and {} differ", self.dim, g.dim)));
        }
        if g.out_arity != self.in_arity {
            return Err(Error::Arity(format!(
                "cannot compose a {}→{} map after a {}→{} map",
                self.in_arity, self.out_arity, g.in_arity, g.out_arity
            )));
        }
        let ring = &self.ring;
        let (m, kk, n) = (self.rows(), self.cols(), g.cols());
        let mut out = vec![ring.zero(); m * n];
        // Walk whichever factor is sparser.
        if self.nnz() * n <= g.nnz() * m {
            for i in 0..m {
                let orow = &mut out[i * n..(i + 1) * n];
                for k in 0..kk {
                    let a = &self.data[i * kk + k];
                    if ring.is_zero(a) {
                        continue;
                    }
                    let grow = &g.data[k * n..(k + 1) * n];
                    for (o, b) in orow.iter_mut().zip(grow) {
                        if !ring.is_zero(b) {
                            ring.mul_add_assign(o, a, b);
                        }
                    }
                }
            }
        } else {
            for k in 0..kk {
                for j in 0..n {
                    let b = &g.data[k * n + j];
                    if ring.is_zero(b) {
                        continue;
                    }
                    for i in 0..m {
                        let a = &self.data[i * kk + k];
                        if !ring.is_zero(a) {
                            ring.mul_add_assign(&mut out[i * n + j], a, b);
                        }
                    }
                }
            }
        }
        Ok(TensorMap { ring: ring.clone(), dim: self.dim, in_arity: g.in_arity, out_arity: self.out_arity, data: out })
    }

    /// Kronecker product: `(f ⊗ g)(x ⊗ y) = f(x) ⊗ g(y)`.
    pub fn tensor(&self, g: &Self) -> Result<Self> {
        if self.dim != g.dim {
            return Err(Error::Input(format!("tensor: dimensions {} and {} differ", self.dim, g.dim)));
        }
        let ring = &self.ring;
        let (fr, fc, gr, gc) = (self.rows(), self.cols(), g.rows(), g.cols());
        let (rows, cols) = (fr * gr, fc * gc);
        let mut out = vec![ring.zero(); rows * cols];
        for i in 0..fr {
            for j in 0..fc {
                let a = &self.data[i * fc + j];
                if ring.is_zero(a) {
                    continue;
                }
                for k in 0..gr {
                    for l in 0..gc {
                        let b = &g.data[k * gc + l];
                        if !ring.is_zero(b) {
                            out[(i * gr + k) * cols + j * gc + l] = ring.mul(a, b);
                        }
                    }
                }
            }
        }
        Ok(TensorMap {
            ring: ring.clone(),
            dim: self.dim,
            in_arity: self.in_arity + g.in_arity,
            out_arity: self.out_arity + g.out_arity,
            data: out,
        })
    }

    /// `1^⊗before ⊗ self ⊗ 1^⊗after`.
    pub fn padded(&self, before: usize, after: usize) -> Self {
        if before == 0 && after == 0 {
            return self.clone();
        }
        let ring = &self.ring;
        let (lb, la) = (self.dim.pow(before as u32), self.dim.pow(after as u32));
        let (fr, fc) = (self.rows(), self.cols());
        let (rows, cols) = (lb * fr * la, lb * fc * la);
        let mut out = vec![ring.zero(); rows * cols];
        for i in 0..fr {
            for j in 0..fc {
                let a = &self.data[i * fc + j];
                if ring.is_zero(a) {
                    continue;
                }
                for p in 0..lb {
                    for q in 0..la {
                        out[((p * fr + i) * la + q) * cols + (p * fc + j) * la + q] = a.clone();
                    }
                }
            }
        }
        TensorMap {
            ring: ring.clone(),
            dim: self.dim,
            in_arity: self.in_arity + before + after,
            out_arity: self.out_arity + before + after,
            data: out,
        }
    }

    /// Signed sum of maps of identical shape.
    pub fn linear_combination(terms: &[(R::Elem, &Self)]) -> Result<Self> {
        let (_, first) = terms.first().ok_or_else(|| Error::Input("empty linear combination".into()))?;
        let ring = &first.ring;
        let mut out = Self::zero(ring, first.dim, first.in_arity, first.out_arity);
        for (c, m) in terms {
            out.same_shape(m, "linear combination")?;
            if ring.is_zero(c) {
                continue;
            }
            for (o, v) in out.data.iter_mut().zip(&m.data) {
                if !ring.is_zero(v) {
                    ring.mul_add_assign(o, c, v);
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "add")?;
        let ring = &self.ring;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| ring.add(a, b)).collect();
        Ok(TensorMap { data, ..self.clone_shape() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other, "sub")?;
        let ring = &self.ring;
        let data = self.data.iter().zip(&other.data).map(|(a, b)| ring.sub(a, b)).collect();
        Ok(TensorMap { data, ..self.clone_shape() })
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        let ring = &self.ring;
        let data = self.data.iter().map(|a| ring.mul(c, a)).collect();
        TensorMap { data, ..self.clone_shape() }
    }

    pub fn neg(&self) -> Self {
        let ring = &self.ring;
        let data = self.data.iter().map(|a| ring.neg(a)).collect();
        TensorMap { data, ..self.clone_shape() }
    }

    fn clone_shape(&self) -> Self {
        TensorMap { ring: self.ring.clone(), dim: self.dim, in_arity: self.in_arity, out_arity: self.out_arity, data: Vec::new() }
    }

    /// Row-major coefficient vector.
    pub fn flatten(&self) -> Vec<R::Elem> {
        self.data.clone()
    }

    pub fn unflatten(ring: &R, col: Vec<R::Elem>, dim: usize, in_arity: usize, out_arity: usize) -> Result<Self> {
        let size = dim.pow(in_arity as u32) * dim.pow(out_arity as u32);
        if col.len() != size {
            return Err(Error::Input(format!(
                "a {in_arity}→{out_arity} map at d={dim} needs {size} coefficients, got {}",
                col.len()
            )));
        }
        Ok(TensorMap { ring: ring.clone(), dim, in_arity, out_arity, data: col })
    }

    /// Coefficient-wise image in another ring.
    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> TensorMap<S> {
        TensorMap {
            ring: target.clone(),
            dim: self.dim,
            in_arity: self.in_arity,
            out_arity: self.out_arity,
            data: self.data.iter().map(f).collect(),
        }
    }

    /// View the map over `W = V^⊗group` (so dim becomes `d^group`); both arities must be
    /// multiples of `group`. The grid is unchanged.
    pub fn regroup(&self, group: usize) -> Result<Self> {
        if group == 0 || self.in_arity % group != 0 || self.out_arity % group != 0 {
            return Err(Error::Arity(format!(
                "cannot regroup a {}→{} map in blocks of {group}",
                self.in_arity, self.out_arity
            )));
        }
        Ok(TensorMap {
            ring: self.ring.clone(),
            dim: self.dim.pow(group as u32),
            in_arity: self.in_arity / group,
            out_arity: self.out_arity / group,
            data: self.data.clone(),
        })
    }

    /// Random map with entries drawn from the ring's sampler.
    pub fn random<G: rand::Rng + ?Sized>(ring: &R, dim: usize, in_arity: usize, out_arity: usize, rng: &mut G) -> Self {
        let mut m = Self::zero(ring, dim, in_arity, out_arity);
        for v in m.data.iter_mut() {
            *v = ring.random(rng);
        }
        m
    }
}

/// Compose a chain written in the usual operator order: `chain(&[f, g, h]) = f ∘ g ∘ h`.
pub fn chain<R: Ring>(maps: &[&TensorMap<R>]) -> Result<TensorMap<R>> {
    let (last, rest) = maps.split_last().ok_or_else(|| Error::Input("empty composition".into()))?;
    let mut acc = (*last).clone();
    for m in rest.iter().rev() {
        acc = m.compose(&acc)?;
    }
    Ok(acc)
}

/// Tensor product of several maps, left to right.
pub fn kron<R: Ring>(maps: &[&TensorMap<R>]) -> Result<TensorMap<R>> {
    let (first, rest) = maps.split_first().ok_or_else(|| Error::Input("empty tensor product".into()))?;
    let mut acc = (*first).clone();
    for m in rest {
        acc = acc.tensor(m)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{PrimeField, Rationals};
    use proptest::prelude::*;
    use rand::SeedableRng;

    fn f101() -> PrimeField {
        PrimeField::new(101).unwrap()
    }

    /// Group algebra of Z/2 over F101, basis (e, a).
    fn z2_mu() -> TensorMap<PrimeField> {
        TensorMap::from_basis(&f101(), 2, 2, 1, |i| vec![(vec![(i[0] + i[1]) % 2], 1)])
    }

    #[test]
    fn identity_examples() {
        let q = Rationals;
        assert_eq!(TensorMap::identity(&q, 2, 1).rows(), 2);
        assert_eq!(TensorMap::identity(&q, 2, 2).nnz(), 4);
        let s = TensorMap::identity(&q, 3, 0);
        assert_eq!((s.rows(), s.cols()), (1, 1));
        assert_eq!(*s.get(0, 0), q.one());
    }

    #[test]
    fn tensor_examples() {
        let f = f101();
        let id1 = TensorMap::identity(&f, 2, 1);
        assert_eq!(id1.tensor(&id1).unwrap(), TensorMap::identity(&f, 2, 2));
        let flip = TensorMap::from_basis(&f, 2, 1, 1, |i| vec![(vec![1 - i[0]], 1)]);
        let t = flip.tensor(&id1).unwrap();
        assert_eq!(*t.coeff(&[1, 0], &[0, 0]), 1);
        let mm = z2_mu().tensor(&z2_mu()).unwrap();
        assert_eq!(*mm.coeff(&[0, 0], &[1, 1, 1, 1]), 1);
        assert!(TensorMap::identity(&f, 3, 1).tensor(&id1).is_err());
    }

    #[test]
    fn compose_examples() {
        let f = f101();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0);
        let r = TensorMap::random(&f, 2, 2, 2, &mut rng);
        assert_eq!(TensorMap::identity(&f, 2, 2).compose(&r).unwrap(), r);
        let mu = z2_mu();
        let left = mu.compose(&mu.tensor(&TensorMap::identity(&f, 2, 1)).unwrap()).unwrap();
        assert_eq!(*left.coeff(&[1], &[1, 1, 1]), 1);
        match mu.compose(&TensorMap::identity(&f, 2, 1)) {
            Err(Error::Arity(msg)) => assert!(msg.contains("2→1") && msg.contains("1→1")),
            other => panic!("expected arity error, got {other:?}"),
        }
    }

    #[test]
    fn linear_combination_examples() {
        let f = f101();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(1);
        let r = TensorMap::random(&f, 2, 2, 2, &mut rng);
        assert!(TensorMap::linear_combination(&[(1, &r), (100, &r)]).unwrap().is_zero());
        let id = TensorMap::identity(&f, 2, 1);
        assert_eq!(TensorMap::linear_combination(&[(2, &id)]).unwrap(), id.scale(&2));
        let mu = z2_mu();
        let a = mu.compose(&id.tensor(&id).unwrap()).unwrap();
        let c = id.compose(&mu).unwrap();
        assert_eq!(TensorMap::linear_combination(&[(1, &a), (1, &a), (100, &c)]).unwrap(), mu);
        assert!(TensorMap::linear_combination(&[(1, &mu), (1, &r)]).is_err());
    }

    #[test]
    fn flatten_examples() {
        let q = Rationals;
        assert_eq!(TensorMap::zero(&q, 2, 1, 1).flatten(), vec![q.zero(); 4]);
        let col = TensorMap::identity(&q, 3, 1).flatten();
        let ones: Vec<usize> = col.iter().enumerate().filter(|(_, v)| **v == q.one()).map(|(k, _)| k).collect();
        assert_eq!(ones, vec![0, 4, 8]);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(2);
        let r = TensorMap::random(&q, 2, 2, 2, &mut rng);
        assert_eq!(TensorMap::unflatten(&q, r.flatten(), 2, 2, 2).unwrap(), r);
        assert!(TensorMap::unflatten(&q, vec![q.zero(); 3], 2, 1, 1).is_err());
    }

    #[test]
    fn encode_round_trip() {
        for d in 1usize..4 {
            for n in 0..4 {
                for k in 0..d.pow(n as u32) {
                    assert_eq!(encode(d, &decode(d, n, k)), k);
                }
            }
        }
        assert_eq!(encode(3, &[1, 2]), 5);
    }

    #[test]
    fn padded_matches_kron() {
        let f = f101();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        let r = TensorMap::random(&f, 2, 2, 1, &mut rng);
        let i1 = TensorMap::identity(&f, 2, 1);
        let i2 = TensorMap::identity(&f, 2, 2);
        assert_eq!(r.padded(1, 2), kron(&[&i1, &r, &i2]).unwrap());
        assert_eq!(r.padded(0, 0), r);
    }

    #[test]
    fn permutation_maps() {
        let f = f101();
        let s = TensorMap::swap(&f, 3);
        assert_eq!(s.compose(&s).unwrap(), TensorMap::identity(&f, 3, 2));
        let rev = TensorMap::reversal(&f, 2, 3);
        assert_eq!(*rev.coeff(&[0, 0, 1], &[1, 0, 0]), 1);
        let sigma = TensorMap::permutation(&f, 2, &[1, 2, 0, 3]).unwrap();
        assert_eq!(*sigma.coeff(&[1, 1, 0, 0], &[0, 1, 1, 0]), 1);
        assert!(TensorMap::permutation(&f, 2, &[0, 0]).is_err());
    }

    fn arb_map(d: usize, n: usize, k: usize) -> impl Strategy<Value = TensorMap<PrimeField>> {
        let size = d.pow(n as u32) * d.pow(k as u32);
        prop::collection::vec(0u32..101, size)
            .prop_map(move |v| TensorMap::unflatten(&PrimeField::new(101).unwrap(), v, d, n, k).unwrap())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn interchange_law_d2(f in arb_map(2, 2, 1), g in arb_map(2, 1, 2), h in arb_map(2, 1, 2), j in arb_map(2, 2, 1)) {
            let lhs = f.tensor(&g).unwrap().compose(&h.tensor(&j).unwrap()).unwrap();
            let rhs = f.compose(&h).unwrap().tensor(&g.compose(&j).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn interchange_law_d3(f in arb_map(3, 1, 1), g in arb_map(3, 2, 1), h in arb_map(3, 1, 1), j in arb_map(3, 1, 2)) {
            let lhs = f.tensor(&g).unwrap().compose(&h.tensor(&j).unwrap()).unwrap();
            let rhs = f.compose(&h).unwrap().tensor(&g.compose(&j).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn compose_associative_with_unit(f in arb_map(2, 2, 2), g in arb_map(2, 1, 2), h in arb_map(2, 2, 1)) {
            let a = f.compose(&g).unwrap().compose(&h).unwrap();
            let b = f.compose(&g.compose(&h).unwrap()).unwrap();
            prop_assert_eq!(&a, &b);
            let id = TensorMap::identity(f.ring(), 2, 2);
            prop_assert_eq!(id.compose(&f).unwrap(), f.clone());
            prop_assert_eq!(f.compose(&id).unwrap(), f);
        }

        #[test]
        fn tensor_associative(f in arb_map(2, 1, 2), g in arb_map(2, 2, 1), h in arb_map(2, 1, 1)) {
            let a = f.tensor(&g).unwrap().tensor(&h).unwrap();
            let b = f.tensor(&g.tensor(&h).unwrap()).unwrap();
            prop_assert_eq!(a, b);
        }
    }
}
