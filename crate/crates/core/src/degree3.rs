//! The degree-3 differential.
//!
//! Each degree-4 summand except the Hochschild one is a signed sum of terms
//! `after ∘ (1^at ⊗ D ⊗ 1^rest) ∘ before`, where `before` and `after` are words in the
//! layers `R` and `μ` acting on adjacent strands and `D` is one summand of the 3-cochain.
//! Every table is the loop of rewrites around a 4-strand diagram; substituting the defect
//! of each axiom for `D` makes the sum vanish identically, which the tests check.
//! See `docs/degree3.md` for the loops drawn out.

use crate::cochain::{Summand4, Ybh3Cochain, Ybh4Cochain};
use crate::differential::hochschild_differential;
use crate::error::{Error, Result};
use crate::scalar::{Ring, SparseRow};
use crate::tensor::TensorMap;

/// A layer acting on strands `i, i+1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Layer {
    R(usize),
    M(usize),
}

/// Which summand of a 3-cochain a term inserts.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Beta,
    AlphaYi,
    AlphaIy,
    Gamma,
}

impl Slot {
    pub const ALL: [Slot; 4] = [Slot::Beta, Slot::AlphaYi, Slot::AlphaIy, Slot::Gamma];

    pub fn out_arity(&self) -> usize {
        match self {
            Slot::Beta => 3,
            Slot::AlphaYi | Slot::AlphaIy => 2,
            Slot::Gamma => 1,
        }
    }

    fn pick<'a, R: Ring>(&self, c: &'a Ybh3Cochain<R>) -> &'a TensorMap<R> {
        match self {
            Slot::Beta => &c.beta,
            Slot::AlphaYi => &c.alpha_yi,
            Slot::AlphaIy => &c.alpha_iy,
            Slot::Gamma => &c.gamma,
        }
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub sign: i64,
    pub before: &'static [Layer],
    pub slot: Slot,
    pub at: usize,
    pub after: &'static [Layer],
}

const fn t(sign: i64, before: &'static [Layer], slot: Slot, at: usize, after: &'static [Layer]) -> Term {
    Term { sign, before, slot, at, after }
}

use Layer::{M, R};
use Slot::{AlphaIy as Iy, AlphaYi as Yi, Beta as Ybe, Gamma as Assoc};

pub const OCTAGON: &[Term] = &[
    t(1, &[], Ybe, 0, &[R(2), R(1), R(0)]),
    t(1, &[R(1), R(0)], Ybe, 1, &[R(0)]),
    t(1, &[R(1), R(2)], Ybe, 0, &[R(2)]),
    t(1, &[], Ybe, 1, &[R(0), R(1), R(2)]),
    t(-1, &[R(2), R(1), R(0)], Ybe, 1, &[]),
    t(-1, &[R(2)], Ybe, 0, &[R(2), R(1)]),
    t(-1, &[R(0)], Ybe, 1, &[R(0), R(1)]),
    t(-1, &[R(0), R(1), R(2)], Ybe, 0, &[]),
];

pub const RIGHT_MERGE: &[Term] = &[
    t(1, &[M(2)], Ybe, 0, &[]),
    t(-1, &[], Yi, 1, &[R(0), R(1)]),
    t(-1, &[R(1), R(2)], Yi, 0, &[R(1)]),
    t(-1, &[R(1), R(0)], Ybe, 1, &[M(0)]),
    t(-1, &[], Ybe, 0, &[R(2), R(1), M(0)]),
    t(1, &[R(0), R(1), R(2)], Yi, 0, &[]),
    t(1, &[R(0)], Yi, 1, &[R(0)]),
];

pub const LEFT_MERGE: &[Term] = &[
    t(1, &[M(0)], Ybe, 0, &[]),
    t(-1, &[R(2)], Iy, 0, &[R(1)]),
    t(-1, &[R(2), R(1), R(0)], Iy, 1, &[]),
    t(-1, &[], Ybe, 1, &[R(0), R(1), M(2)]),
    t(-1, &[R(1), R(2)], Ybe, 0, &[M(2)]),
    t(1, &[R(1), R(0)], Iy, 1, &[R(0)]),
    t(1, &[], Iy, 0, &[R(1), R(0)]),
];

pub const DOUBLE_MERGE: &[Term] = &[
    t(-1, &[M(2)], Iy, 0, &[]),
    t(-1, &[], Yi, 1, &[R(0), M(1)]),
    t(-1, &[R(1), R(2)], Yi, 0, &[M(1)]),
    t(1, &[R(1), R(0)], Iy, 1, &[M(0)]),
    t(1, &[], Iy, 0, &[R(1), M(0)]),
    t(1, &[M(0)], Yi, 0, &[]),
];

pub const DOUBLE_MERGE_MIRROR: &[Term] = &[
    t(-1, &[M(0)], Yi, 0, &[]),
    t(-1, &[], Iy, 0, &[R(1), M(0)]),
    t(-1, &[R(1), R(0)], Iy, 1, &[M(0)]),
    t(1, &[R(1), R(2)], Yi, 0, &[M(1)]),
    t(1, &[], Yi, 1, &[R(0), M(1)]),
    t(1, &[M(2)], Iy, 0, &[]),
];

pub const NESTED_RIGHT: &[Term] = &[
    t(-1, &[M(1)], Yi, 0, &[]),
    t(-1, &[], Yi, 0, &[R(1), M(0)]),
    t(1, &[R(0), R(1), R(2)], Assoc, 0, &[]),
    t(1, &[R(0)], Yi, 1, &[M(0)]),
    t(1, &[M(2)], Yi, 0, &[]),
    t(-1, &[], Assoc, 1, &[R(0)]),
];

pub const NESTED_LEFT: &[Term] = &[
    t(-1, &[M(0)], Iy, 0, &[]),
    t(-1, &[R(2)], Iy, 0, &[M(1)]),
    t(1, &[R(2), R(1), R(0)], Assoc, 1, &[]),
    t(1, &[], Iy, 1, &[R(0), M(1)]),
    t(1, &[M(1)], Iy, 0, &[]),
    t(-1, &[], Assoc, 0, &[R(0)]),
];

/// The loop table behind each summand; `H` uses the Hochschild formula instead.
pub fn table(s: Summand4) -> Option<&'static [Term]> {
    match s {
        Summand4::Yb => Some(OCTAGON),
        Summand4::Yi43 => Some(RIGHT_MERGE),
        Summand4::Iy43 => Some(LEFT_MERGE),
        Summand4::Yi42 => Some(DOUBLE_MERGE),
        Summand4::Iy42 => Some(DOUBLE_MERGE_MIRROR),
        Summand4::MixedYi42 => Some(NESTED_RIGHT),
        Summand4::MixedIy42 => Some(NESTED_LEFT),
        Summand4::H => None,
    }
}

/// Evaluate a word of layers on `n` strands; the first layer acts first.
pub fn word<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, n: usize, layers: &[Layer]) -> Result<TensorMap<R>> {
    let mut acc = TensorMap::identity(mu.ring(), mu.dim(), n);
    let mut m = n;
    for layer in layers {
        let (map, i) = match *layer {
            Layer::R(i) => (r, i),
            Layer::M(i) => (mu, i),
        };
        if i + 2 > m {
            return Err(Error::Internal(format!("layer {layer:?} does not fit on {m} strands")));
        }
        acc = map.padded(i, m - i - 2).compose(&acc)?;
        m = acc.out_arity();
    }
    Ok(acc)
}

struct Prepared<R: Ring> {
    sign: R::Elem,
    slot: Slot,
    at: usize,
    rest: usize,
    before: TensorMap<R>,
    after: TensorMap<R>,
    /// rows of `before`, indexed by its output
    before_rows: Vec<SparseRow<R::Elem>>,
    /// columns of `after`, indexed by its input
    after_cols: Vec<SparseRow<R::Elem>>,
}

/// δ³ for a fixed pair `(μ, R)`, with every word evaluated once.
pub struct Degree3Operator<R: Ring> {
    mu: TensorMap<R>,
    families: Vec<(Summand4, Vec<Prepared<R>>)>,
}

impl<R: Ring> Degree3Operator<R> {
    pub fn new(mu: &TensorMap<R>, r: &TensorMap<R>) -> Result<Self> {
        crate::braided::expect_arity(mu, 2, 1, "multiplication")?;
        crate::braided::expect_arity(r, 2, 2, "braiding")?;
        let ring = mu.ring();
        let mut families = Vec::new();
        for s in Summand4::ALL {
            let Some(terms) = table(s) else { continue };
            let mut prepared = Vec::with_capacity(terms.len());
            for term in terms {
                let before = word(mu, r, 4, term.before)?;
                let m = before.out_arity();
                if term.at + 3 > m {
                    return Err(Error::Internal(format!("term {term:?} does not fit")));
                }
                let rest = m - term.at - 3;
                let mid_out = term.at + term.slot.out_arity() + rest;
                let after = word(mu, r, mid_out, term.after)?;
                if after.out_arity() != s.out_arity() {
                    return Err(Error::Internal(format!("term {term:?} lands in arity {}", after.out_arity())));
                }
                let mut before_rows = vec![Vec::new(); before.rows()];
                for (row, col, v) in before.triples() {
                    before_rows[row].push((col, v.clone()));
                }
                let mut after_cols = vec![Vec::new(); after.cols()];
                for (row, col, v) in after.triples() {
                    after_cols[col].push((row, v.clone()));
                }
                prepared.push(Prepared {
                    sign: ring.from_i64(term.sign),
                    slot: term.slot,
                    at: term.at,
                    rest,
                    before,
                    after,
                    before_rows,
                    after_cols,
                });
            }
            families.push((s, prepared));
        }
        Ok(Degree3Operator { mu: mu.clone(), families })
    }

    pub fn dim(&self) -> usize {
        self.mu.dim()
    }

    pub fn apply(&self, c: &Ybh3Cochain<R>) -> Result<Ybh4Cochain<R>> {
        let ring = self.mu.ring();
        let d = self.dim();
        if c.dim() != d {
            return Err(Error::Input(format!("3-cochain has d={}, operator has d={d}", c.dim())));
        }
        let mut parts = Vec::with_capacity(8);
        for (_, prepared) in &self.families {
            let mut acc: Option<TensorMap<R>> = None;
            for p in prepared {
                let mid = p.slot.pick(c).padded(p.at, p.rest);
                let v = p.after.compose(&mid.compose(&p.before)?)?.scale(&p.sign);
                acc = Some(match acc {
                    None => v,
                    Some(a) => a.add(&v)?,
                });
            }
            parts.push(acc.unwrap_or_else(|| TensorMap::zero(ring, d, 4, 4)));
        }
        parts.push(hochschild_differential(&self.mu, 3, &c.gamma)?);
        Ok(Ybh4Cochain { parts })
    }

    /// Column `j` of the matrix of δ³ in the flattened bases, as sparse `(row, value)` pairs
    /// sorted by row.
    pub fn column(&self, j: usize) -> Result<SparseRow<R::Elem>> {
        let ring = self.mu.ring();
        let d = self.dim();
        let in_size = d.pow(3);
        let (slot, local) = {
            let mut j = j;
            let mut found = None;
            for s in Slot::ALL {
                let size = d.pow(s.out_arity() as u32) * in_size;
                if j < size {
                    found = Some((s, j));
                    break;
                }
                j -= size;
            }
            found.ok_or_else(|| Error::Input(format!("column {j} is out of range")))?
        };
        let (a, b) = (local / in_size, local % in_size);
        let k = slot.out_arity();
        let d4 = d.pow(4);
        let mut offsets = Vec::with_capacity(8);
        let mut off = 0;
        for s in Summand4::ALL {
            offsets.push(off);
            off += d4 * d.pow(s.out_arity() as u32);
        }
        let mut acc: std::collections::BTreeMap<usize, R::Elem> = std::collections::BTreeMap::new();
        for (fi, (_, prepared)) in self.families.iter().enumerate() {
            let base = offsets[fi];
            for p in prepared.iter().filter(|p| p.slot == slot) {
                let dr = d.pow(p.rest as u32);
                for pre in 0..d.pow(p.at as u32) {
                    for suf in 0..dr {
                        let mid_row = (pre * d.pow(k as u32) + a) * dr + suf;
                        let mid_col = (pre * in_size + b) * dr + suf;
                        let outs = &p.after_cols[mid_row];
                        let ins = &p.before_rows[mid_col];
                        if outs.is_empty() || ins.is_empty() {
                            continue;
                        }
                        for (o, x) in outs {
                            let sx = ring.mul(&p.sign, x);
                            for (i, y) in ins {
                                let e = acc.entry(base + o * d4 + i).or_insert_with(|| ring.zero());
                                ring.mul_add_assign(e, &sx, y);
                            }
                        }
                    }
                }
            }
        }
        if slot == Slot::Gamma {
            let mut unit = TensorMap::zero(ring, d, 3, 1);
            unit.set(a, b, ring.one());
            let h = hochschild_differential(&self.mu, 3, &unit)?;
            let base = offsets[Summand4::H as usize];
            for (row, col, v) in h.triples() {
                let e = acc.entry(base + row * d4 + col).or_insert_with(|| ring.zero());
                ring.add_assign(e, v);
            }
        }
        Ok(acc.into_iter().filter(|(_, v)| !ring.is_zero(v)).collect())
    }
}

/// Convenience wrapper: δ³ of one cochain.
pub fn ybh_d3<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, c: &Ybh3Cochain<R>) -> Result<Ybh4Cochain<R>> {
    Degree3Operator::new(mu, r)?.apply(c)
}

/// The 4→4 summand of δ³ applied to `β` alone.
pub fn yang_baxter_d3<R: Ring>(mu: &TensorMap<R>, r: &TensorMap<R>, beta: &TensorMap<R>) -> Result<TensorMap<R>> {
    let d = mu.dim();
    let ring = mu.ring();
    let c = Ybh3Cochain::new(
        beta.clone(),
        TensorMap::zero(ring, d, 3, 2),
        TensorMap::zero(ring, d, 3, 2),
        TensorMap::zero(ring, d, 3, 1),
    )?;
    Ok(ybh_d3(mu, r, &c)?.parts.swap_remove(0))
}
