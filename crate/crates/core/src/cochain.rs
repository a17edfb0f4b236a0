//! Graded cochains of the Yang-Baxter Hochschild complex.
//!
//! Flattened vectors concatenate the summands in declaration order, each in row-major
//! grid order.

use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::tensor::TensorMap;

fn split<R: Ring>(ring: &R, d: usize, mut v: Vec<R::Elem>, shapes: &[(usize, usize)]) -> Result<Vec<TensorMap<R>>> {
    let total: usize = shapes.iter().map(|&(n, k)| d.pow(n as u32) * d.pow(k as u32)).sum();
    if v.len() != total {
        return Err(Error::Input(format!("cochain vector has length {}, expected {total}", v.len())));
    }
    let mut out = Vec::with_capacity(shapes.len());
    for &(n, k) in shapes.iter().rev() {
        let size = d.pow(n as u32) * d.pow(k as u32);
        let tail = v.split_off(v.len() - size);
        out.push(TensorMap::unflatten(ring, tail, d, n, k)?);
    }
    out.reverse();
    Ok(out)
}

fn concat<R: Ring>(maps: &[&TensorMap<R>]) -> Vec<R::Elem> {
    let mut v = Vec::with_capacity(maps.iter().map(|m| m.data().len()).sum());
    for m in maps {
        v.extend_from_slice(m.data());
    }
    v
}

fn check_shape<R: Ring>(m: &TensorMap<R>, d: usize, n: usize, k: usize, name: &str) -> Result<()> {
    if m.dim() != d || m.in_arity() != n || m.out_arity() != k {
        return Err(Error::Arity(format!(
            "{name} must be a {n}→{k} map at d={d}, got {}→{} at d={}",
            m.in_arity(),
            m.out_arity(),
            m.dim()
        )));
    }
    Ok(())
}

/// `(φ: 2→2, ψ: 2→1)`
#[derive(Clone, Debug, PartialEq)]
pub struct Ybh2Cochain<R: Ring> {
    pub phi: TensorMap<R>,
    pub psi: TensorMap<R>,
}

impl<R: Ring> Ybh2Cochain<R> {
    pub const SHAPES: [(usize, usize); 2] = [(2, 2), (2, 1)];

    pub fn new(phi: TensorMap<R>, psi: TensorMap<R>) -> Result<Self> {
        let d = phi.dim();
        check_shape(&phi, d, 2, 2, "phi")?;
        check_shape(&psi, d, 2, 1, "psi")?;
        Ok(Ybh2Cochain { phi, psi })
    }

    pub fn zero(ring: &R, d: usize) -> Self {
        Ybh2Cochain { phi: TensorMap::zero(ring, d, 2, 2), psi: TensorMap::zero(ring, d, 2, 1) }
    }

    pub fn random<G: rand::Rng + ?Sized>(ring: &R, d: usize, rng: &mut G) -> Self {
        Ybh2Cochain { phi: TensorMap::random(ring, d, 2, 2, rng), psi: TensorMap::random(ring, d, 2, 1, rng) }
    }

    pub fn space_dim(d: usize) -> usize {
        d.pow(4) + d.pow(3)
    }

    pub fn dim(&self) -> usize {
        self.phi.dim()
    }

    pub fn flatten(&self) -> Vec<R::Elem> {
        concat(&[&self.phi, &self.psi])
    }

    pub fn unflatten(ring: &R, d: usize, v: Vec<R::Elem>) -> Result<Self> {
        let mut m = split(ring, d, v, &Self::SHAPES)?.into_iter();
        Ok(Ybh2Cochain { phi: m.next().unwrap(), psi: m.next().unwrap() })
    }

    pub fn is_zero(&self) -> bool {
        self.phi.is_zero() && self.psi.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Ybh2Cochain { phi: self.phi.add(&o.phi)?, psi: self.psi.add(&o.psi)? })
    }

    pub fn scale(&self, c: &R::Elem) -> Self {
        Ybh2Cochain { phi: self.phi.scale(c), psi: self.psi.scale(c) }
    }

    pub fn map_ring<S: Ring>(&self, target: &S, f: impl Fn(&R::Elem) -> S::Elem) -> Ybh2Cochain<S> {
        Ybh2Cochain { phi: self.phi.map_ring(target, &f), psi: self.psi.map_ring(target, &f) }
    }
}

/// `(β: 3→3, α_YI: 3→2, α_IY: 3→2, γ: 3→1)`; `α_YI` pairs with the
/// `(μ⊗1)(1⊗R)(R⊗1) = R(1⊗μ)` axiom and `α_IY` with `(1⊗μ)(R⊗1)(1⊗R) = R(μ⊗1)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Ybh3Cochain<R: Ring> {
    pub beta: TensorMap<R>,
    pub alpha_yi: TensorMap<R>,
    pub alpha_iy: TensorMap<R>,
    pub gamma: TensorMap<R>,
}

impl<R: Ring> Ybh3Cochain<R> {
    pub const SHAPES: [(usize, usize); 4] = [(3, 3), (3, 2), (3, 2), (3, 1)];

    pub fn new(beta: TensorMap<R>, alpha_yi: TensorMap<R>, alpha_iy: TensorMap<R>, gamma: TensorMap<R>) -> Result<Self> {
        let d = beta.dim();
        check_shape(&beta, d, 3, 3, "beta")?;
        check_shape(&alpha_yi, d, 3, 2, "alpha_yi")?;
        check_shape(&alpha_iy, d, 3, 2, "alpha_iy")?;
        check_shape(&gamma, d, 3, 1, "gamma")?;
        Ok(Ybh3Cochain { beta, alpha_yi, alpha_iy, gamma })
    }

    pub fn zero(ring: &R, d: usize) -> Self {
        Ybh3Cochain {
            beta: TensorMap::zero(ring, d, 3, 3),
            alpha_yi: TensorMap::zero(ring, d, 3, 2),
            alpha_iy: TensorMap::zero(ring, d, 3, 2),
            gamma: TensorMap::zero(ring, d, 3, 1),
        }
    }

    pub fn random<G: rand::Rng + ?Sized>(ring: &R, d: usize, rng: &mut G) -> Self {
        Ybh3Cochain {
            beta: TensorMap::random(ring, d, 3, 3, rng),
            alpha_yi: TensorMap::random(ring, d, 3, 2, rng),
            alpha_iy: TensorMap::random(ring, d, 3, 2, rng),
            gamma: TensorMap::random(ring, d, 3, 1, rng),
        }
    }

    pub fn space_dim(d: usize) -> usize {
        d.pow(6) + 2 * d.pow(5) + d.pow(4)
    }

    pub fn dim(&self) -> usize {
        self.beta.dim()
    }

    pub fn flatten(&self) -> Vec<R::Elem> {
        concat(&[&self.beta, &self.alpha_yi, &self.alpha_iy, &self.gamma])
    }

    pub fn unflatten(ring: &R, d: usize, v: Vec<R::Elem>) -> Result<Self> {
        let mut m = split(ring, d, v, &Self::SHAPES)?.into_iter();
        Ok(Ybh3Cochain {
            beta: m.next().unwrap(),
            alpha_yi: m.next().unwrap(),
            alpha_iy: m.next().unwrap(),
            gamma: m.next().unwrap(),
        })
    }

    pub fn is_zero(&self) -> bool {
        self.beta.is_zero() && self.alpha_yi.is_zero() && self.alpha_iy.is_zero() && self.gamma.is_zero()
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        Ok(Ybh3Cochain {
            beta: self.beta.add(&o.beta)?,
            alpha_yi: self.alpha_yi.add(&o.alpha_yi)?,
            alpha_iy: self.alpha_iy.add(&o.alpha_iy)?,
            gamma: self.gamma.add(&o.gamma)?,
        })
    }

    pub fn neg(&self) -> Self {
        Ybh3Cochain { beta: self.beta.neg(), alpha_yi: self.alpha_yi.neg(), alpha_iy: self.alpha_iy.neg(), gamma: self.gamma.neg() }
    }
}

/// One summand of a degree-4 cochain.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Summand4 {
    /// 4→4
    Yb,
    /// 4→3, YI family
    Yi43,
    /// 4→3, IY family
    Iy43,
    /// 4→2, YI family
    Yi42,
    /// 4→2, IY family
    Iy42,
    /// 4→2 mixing associativity with YI
    MixedYi42,
    /// 4→2 mixing associativity with IY
    MixedIy42,
    /// 4→1
    H,
}

impl Summand4 {
    pub const ALL: [Summand4; 8] = [
        Summand4::Yb,
        Summand4::Yi43,
        Summand4::Iy43,
        Summand4::Yi42,
        Summand4::Iy42,
        Summand4::MixedYi42,
        Summand4::MixedIy42,
        Summand4::H,
    ];

    pub fn out_arity(&self) -> usize {
        match self {
            Summand4::Yb => 4,
            Summand4::Yi43 | Summand4::Iy43 => 3,
            Summand4::Yi42 | Summand4::Iy42 | Summand4::MixedYi42 | Summand4::MixedIy42 => 2,
            Summand4::H => 1,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Summand4::Yb => "yb_4_4",
            Summand4::Yi43 => "yi_4_3",
            Summand4::Iy43 => "iy_4_3",
            Summand4::Yi42 => "yi_4_2",
            Summand4::Iy42 => "iy_4_2",
            Summand4::MixedYi42 => "mixed_yi_4_2",
            Summand4::MixedIy42 => "mixed_iy_4_2",
            Summand4::H => "h_4_1",
        }
    }
}

/// Degree-4 cochain: one map per [`Summand4`], in that order.
#[derive(Clone, Debug, PartialEq)]
pub struct Ybh4Cochain<R: Ring> {
    pub parts: Vec<TensorMap<R>>,
}

impl<R: Ring> Ybh4Cochain<R> {
    pub fn zero(ring: &R, d: usize) -> Self {
        Ybh4Cochain { parts: Summand4::ALL.iter().map(|s| TensorMap::zero(ring, d, 4, s.out_arity())).collect() }
    }

    pub fn space_dim(d: usize) -> usize {
        d.pow(8) + 2 * d.pow(7) + 4 * d.pow(6) + d.pow(5)
    }

    pub fn part(&self, s: Summand4) -> &TensorMap<R> {
        &self.parts[s as usize]
    }

    pub fn flatten(&self) -> Vec<R::Elem> {
        concat(&self.parts.iter().collect::<Vec<_>>())
    }

    pub fn unflatten(ring: &R, d: usize, v: Vec<R::Elem>) -> Result<Self> {
        let shapes: Vec<(usize, usize)> = Summand4::ALL.iter().map(|s| (4, s.out_arity())).collect();
        Ok(Ybh4Cochain { parts: split(ring, d, v, &shapes)? })
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(TensorMap::is_zero)
    }

    /// Summands that are not identically zero.
    pub fn nonzero_summands(&self) -> Vec<Summand4> {
        Summand4::ALL.iter().copied().filter(|s| !self.part(*s).is_zero()).collect()
    }

    /// The variant where plain and mixed 4→2 summands of each family share one target:
    /// `[yb, yi43, iy43, yi42 + mixed_yi42, iy42 + mixed_iy42, h]`.
    pub fn shared(&self) -> Result<Vec<TensorMap<R>>> {
        let p = |s| self.part(s).clone();
        Ok(vec![
            p(Summand4::Yb),
            p(Summand4::Yi43),
            p(Summand4::Iy43),
            self.part(Summand4::Yi42).add(self.part(Summand4::MixedYi42))?,
            self.part(Summand4::Iy42).add(self.part(Summand4::MixedIy42))?,
            p(Summand4::H),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::PrimeField;
    use rand::SeedableRng;

    #[test]
    fn round_trips() {
        let f = PrimeField::new(101).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(4);
        for d in [1, 2, 3] {
            let c2 = Ybh2Cochain::random(&f, d, &mut rng);
            assert_eq!(c2.flatten().len(), Ybh2Cochain::<PrimeField>::space_dim(d));
            assert_eq!(Ybh2Cochain::unflatten(&f, d, c2.flatten()).unwrap(), c2);
            let c3 = Ybh3Cochain::random(&f, d, &mut rng);
            assert_eq!(c3.flatten().len(), Ybh3Cochain::<PrimeField>::space_dim(d));
            assert_eq!(Ybh3Cochain::unflatten(&f, d, c3.flatten()).unwrap(), c3);
            // each of the four summands lands in its own block
            for (k, (n, o)) in Ybh3Cochain::<PrimeField>::SHAPES.iter().enumerate() {
                let mut parts = vec![
                    TensorMap::zero(&f, d, 3, 3),
                    TensorMap::zero(&f, d, 3, 2),
                    TensorMap::zero(&f, d, 3, 2),
                    TensorMap::zero(&f, d, 3, 1),
                ];
                parts[k] = TensorMap::random(&f, d, *n, *o, &mut rng);
                let c = Ybh3Cochain::new(parts[0].clone(), parts[1].clone(), parts[2].clone(), parts[3].clone()).unwrap();
                let back = Ybh3Cochain::unflatten(&f, d, c.flatten()).unwrap();
                assert_eq!(back, c);
            }
            let z4 = Ybh4Cochain::zero(&f, d);
            assert_eq!(z4.flatten().len(), Ybh4Cochain::<PrimeField>::space_dim(d));
        }
        assert!(Ybh2Cochain::unflatten(&f, 2, vec![0; 5]).is_err());
        assert!(Ybh2Cochain::new(TensorMap::zero(&f, 2, 2, 1), TensorMap::zero(&f, 2, 2, 1)).is_err());
    }
}
