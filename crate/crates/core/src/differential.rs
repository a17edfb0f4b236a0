//! Differentials of the Yang-Baxter Hochschild complex in degrees 0 through 2, plus the
//! pieces they are built from. Degree 3 lives in [`crate::degree3`].

use crate::braided::expect_arity;
use crate::cochain::{Ybh2Cochain, Ybh3Cochain};
use crate::error::{Error, Result};
use crate::scalar::Ring;
use crate::tensor::{chain, TensorMap};

fn lc<R: Ring>(ring: &R, terms: &[(i64, &TensorMap<R>)]) -> Result<TensorMap<R>> {
    let scaled: Vec<(R::Elem, &TensorMap<R>)> = terms.iter().map(|(s, m)| (ring.from_i64(*s), *m)).collect();
    TensorMap::linear_combination(&scaled)
}

/// Hochschild differential on `n→1` cochains, `n ≤ 3`.
///
/// - n = 0: `μ(1⊗s) − μ(s⊗1)`
/// - n = 1: `μ(f⊗1) + μ(1⊗f) − fμ`
/// - n = 2: `μ(ψ⊗1) + ψ(μ⊗1) − μ(1⊗ψ) − ψ(1⊗μ)`
/// - n = 3: `μ(1⊗γ) − γ(μ⊗1⊗1) + γ(1⊗μ⊗1) − γ(1⊗1⊗μ) + μ(γ⊗1)`
pub fn hochschild_differential<R: Ring>(mu: &TensorMap<R>, n: usize, c: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(mu, 2, 1, "multiplication")?;
    expect_arity(c, n, 1, "Hochschild cochain")?;
    let ring = mu.ring();
    match n {
        0 => {
            let a = mu.compose(&c.padded(1, 0))?;
            let b = mu.compose(&c.padded(0, 1))?;
            a.sub(&b)
        }
        1 => {
            let a = mu.compose(&c.padded(0, 1))?;
            let b = mu.compose(&c.padded(1, 0))?;
            let e = c.compose(mu)?;
            lc(ring, &[(1, &a), (1, &b), (-1, &e)])
        }
        2 => {
            let t1 = mu.compose(&c.padded(0, 1))?;
            let t2 = c.compose(&mu.padded(0, 1))?;
            let t3 = mu.compose(&c.padded(1, 0))?;
            let t4 = c.compose(&mu.padded(1, 0))?;
            lc(ring, &[(1, &t1), (1, &t2), (-1, &t3), (-1, &t4)])
        }
        3 => {
            let t1 = mu.compose(&c.padded(1, 0))?;
            let t2 = c.compose(&mu.padded(0, 2))?;
            let t3 = c.compose(&mu.padded(1, 1))?;
            let t4 = c.compose(&mu.padded(2, 0))?;
            let t5 = mu.compose(&c.padded(0, 1))?;
            lc(ring, &[(1, &t1), (-1, &t2), (1, &t3), (-1, &t4), (1, &t5)])
        }
        _ => Err(Error::Input(format!("Hochschild differential is implemented for n ≤ 3, got {n}"))),
    }
}

/// `R(f⊗1) + R(1⊗f) − (f⊗1)R − (1⊗f)R`
pub fn yang_baxter_d1<R: Ring>(r: &TensorMap<R>, f: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(r, 2, 2, "braiding")?;
    expect_arity(f, 1, 1, "1-cochain")?;
    let (f1, f2) = (f.padded(0, 1), f.padded(1, 0));
    let t1 = r.compose(&f1)?;
    let t2 = r.compose(&f2)?;
    let t3 = f1.compose(r)?;
    let t4 = f2.compose(r)?;
    lc(r.ring(), &[(1, &t1), (1, &t2), (-1, &t3), (-1, &t4)])
}

/// Linearisation of the braid relation at `R` in the direction `φ`:
/// `R₁R₂Φ₁ + R₁Φ₂R₁ + Φ₁R₂R₁ − R₂R₁Φ₂ − R₂Φ₁R₂ − Φ₂R₁R₂` with `X₁ = X⊗1`, `X₂ = 1⊗X`.
pub fn yang_baxter_d2<R: Ring>(r: &TensorMap<R>, phi: &TensorMap<R>) -> Result<TensorMap<R>> {
    expect_arity(r, 2, 2, "braiding")?;
    expect_arity(phi, 2, 2, "braiding cochain")?;
    let (r1, r2, p1, p2) = (r.padded(0, 1), r.padded(1, 0), phi.padded(0, 1), phi.padded(1, 0));
    let t = [
        chain(&[&r1, &r2, &p1])?,
        chain(&[&r1, &p2, &r1])?,
        chain(&[&p1, &r2, &r1])?,
        chain(&[&r2, &r1, &p2])?,
        chain(&[&r2, &p1, &r2])?,
        chain(&[&p2, &r1, &r2])?,
    ];
    lc(r.ring(), &[(1, &t[0]), (1, &t[1]), (1, &t[2]), (-1, &t[3]), (-1, &t[4]), (-1, &t[5])])
}

/// Linearisations of the two compatibility axioms, `(yi, iy)`:
/// - yi: `(ψ⊗1)(1⊗R)(R⊗1) + (μ⊗1)(1⊗φ)(R⊗1) + (μ⊗1)(1⊗R)(φ⊗1) − R(1⊗ψ) − φ(1⊗μ)`
/// - iy: `(1⊗ψ)(R⊗1)(1⊗R) + (1⊗μ)(φ⊗1)(1⊗R) + (1⊗μ)(R⊗1)(1⊗φ) − R(ψ⊗1) − φ(μ⊗1)`
pub fn mixed_d2<R: Ring>(
    mu: &TensorMap<R>,
    r: &TensorMap<R>,
    phi: &TensorMap<R>,
    psi: &TensorMap<R>,
) -> Result<(TensorMap<R>, TensorMap<R>)> {
    expect_arity(mu, 2, 1, "multiplication")?;
    expect_arity(r, 2, 2, "braiding")?;
    expect_arity(phi, 2, 2, "braiding cochain")?;
    expect_arity(psi, 2, 1, "multiplication cochain")?;
    let ring = mu.ring();
    let (r1, r2, p1, p2) = (r.padded(0, 1), r.padded(1, 0), phi.padded(0, 1), phi.padded(1, 0));
    let (m1, m2, s1, s2) = (mu.padded(0, 1), mu.padded(1, 0), psi.padded(0, 1), psi.padded(1, 0));
    let yi = {
        let a = chain(&[&s1, &r2, &r1])?;
        let b = chain(&[&m1, &p2, &r1])?;
        let c = chain(&[&m1, &r2, &p1])?;
        let e = r.compose(&s2)?;
        let f = phi.compose(&m2)?;
        lc(ring, &[(1, &a), (1, &b), (1, &c), (-1, &e), (-1, &f)])?
    };
    let iy = {
        let a = chain(&[&s2, &r1, &r2])?;
        let b = chain(&[&m2, &p1, &r2])?;
        let c = chain(&[&m2, &r1, &p2])?;
        let e = r.compose(&s1)?;
        let f = phi.compose(&m1)?;
        lc(ring, &[(1, &a), (1, &b), (1, &c), (-1, &e), (-1, &f)])?
    };
    Ok((yi, iy))
}

/// `δ¹f = (δ_YB f, δ_H f)`
pub fn ybh_d1<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, f: &TensorMap<R>) -> Result<Ybh2Cochain<R>> {
    Ok(Ybh2Cochain { phi: yang_baxter_d1(r, f)?, psi: hochschild_differential(mu, 1, f)? })
}

/// `δ²(φ, ψ) = (δ_YB φ, yi, iy, δ_H ψ)`
pub fn ybh_d2<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, c: &Ybh2Cochain<R>) -> Result<Ybh3Cochain<R>> {
    let (alpha_yi, alpha_iy) = mixed_d2(mu, r, &c.phi, &c.psi)?;
    Ok(Ybh3Cochain {
        beta: yang_baxter_d2(r, &c.phi)?,
        alpha_yi,
        alpha_iy,
        gamma: hochschild_differential(mu, 2, &c.psi)?,
    })
}
