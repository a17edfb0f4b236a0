//! Exact coefficient rings: rationals, prime fields and truncated power series over either.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};

/// A sparse row of a matrix: strictly increasing column indices, no zero values.
pub type SparseRow<E> = Vec<(usize, E)>;

/// A commutative ring given as a context object. Elements are plain values; every
/// operation goes through the context so that e.g. the modulus never has to be stored
/// inside each element.
pub trait Ring: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Short human-readable name, used in error messages and reports.
    fn name(&self) -> String;
    /// A pseudo-random element; rationals are drawn from a small box of numerators and denominators.
    fn random<G: rand::Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }
    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        *acc = self.add(acc, b);
    }
    /// `acc += a * b`
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        let p = self.mul(a, b);
        self.add_assign(acc, &p);
    }
}

/// A ring in which every nonzero element is invertible, with a textual syntax and
/// the row operations used by Gaussian elimination.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn spec(&self) -> FieldSpec;
    fn parse(&self, s: &str) -> Result<Self::Elem>;
    fn format(&self, a: &Self::Elem) -> String;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }

    /// Scale a freshly found pivot row before it is stored. The default makes the
    /// leading entry 1.
    fn prepare_pivot(&self, row: &mut SparseRow<Self::Elem>) {
        scale_to_monic(self, row);
    }

    /// Remove the entry of `target` in column `col` using a stored pivot row whose
    /// leading column is `col`.
    fn eliminate(&self, target: &mut SparseRow<Self::Elem>, pivot: &SparseRow<Self::Elem>, col: usize) {
        let t = match target.iter().find(|(c, _)| *c == col) {
            Some((_, v)) => v.clone(),
            None => return,
        };
        let lead_inv = self.inv(&pivot[0].1).expect("pivot lead is nonzero");
        let factor = self.neg(&self.mul(&t, &lead_inv));
        *target = row_combine(self, &self.one(), target, &factor, pivot);
    }
}

pub(crate) fn scale_to_monic<F: Field>(field: &F, row: &mut SparseRow<F::Elem>) {
    if let Some((_, lead)) = row.first() {
        let s = field.inv(lead).expect("leading entry is nonzero");
        for (_, v) in row.iter_mut() {
            *v = field.mul(v, &s);
        }
    }
}

/// `a*x + b*y` for sparse rows, dropping cancelled entries.
pub(crate) fn row_combine<R: Ring>(
    ring: &R,
    a: &R::Elem,
    x: &[(usize, R::Elem)],
    b: &R::Elem,
    y: &[(usize, R::Elem)],
) -> SparseRow<R::Elem> {
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    let a_one = *a == ring.one();
    while i < x.len() || j < y.len() {
        let take_x = j >= y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i >= x.len() || (j < y.len() && y[j].0 < x[i].0);
        let (col, val) = if take_x {
            let v = if a_one { x[i].1.clone() } else { ring.mul(a, &x[i].1) };
            i += 1;
            (x[i - 1].0, v)
        } else if take_y {
            j += 1;
            (y[j - 1].0, ring.mul(b, &y[j - 1].1))
        } else {
            let mut v = if a_one { x[i].1.clone() } else { ring.mul(a, &x[i].1) };
            ring.mul_add_assign(&mut v, b, &y[j].1);
            i += 1;
            j += 1;
            (x[i - 1].0, v)
        };
        if !ring.is_zero(&val) {
            out.push((col, val));
        }
    }
    out
}

/// Which exact field a computation runs over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldSpec {
    Rational,
    Prime(u32),
}

impl FieldSpec {
    /// Validated prime field spec; p must be prime and below 2^31.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p >= 1 << 31 {
            return input(format!("prime {p} is not below 2^31"));
        }
        if !is_prime(p) {
            return input(format!("{p} is not prime"));
        }
        Ok(FieldSpec::Prime(p as u32))
    }

    pub fn label(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".into(),
            FieldSpec::Prime(p) => format!("F{p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Reduced fraction with positive denominator.
pub fn rational_normalize(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return input("zero denominator");
    }
    Ok(BigRational::new(num.into(), den))
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let t = s.trim();
    let bad = || Error::Input(format!("cannot parse {s:?} as a rational"));
    match t.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            rational_normalize(n, d)
        }
        None => Ok(BigRational::from_integer(t.parse().map_err(|_| bad())?)),
    }
}

/// The field of rational numbers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Ring for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn add_assign(&self, acc: &mut BigRational, b: &BigRational) {
        *acc += b;
    }
    fn mul_add_assign(&self, acc: &mut BigRational, a: &BigRational, b: &BigRational) {
        if a.is_integer() && b.is_integer() && acc.is_integer() {
            let v = acc.numer() + a.numer() * b.numer();
            *acc = BigRational::from_integer(v);
        } else {
            *acc += a * b;
        }
    }
    fn name(&self) -> String {
        "Q".into()
    }
    fn random<G: rand::Rng + ?Sized>(&self, rng: &mut G) -> BigRational {
        let n: i64 = rng.gen_range(-4..=4);
        let d: i64 = rng.gen_range(1..=3);
        BigRational::new(n.into(), d.into())
    }
}

impl Field for Rationals {
    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Rational
    }
    fn parse(&self, s: &str) -> Result<BigRational> {
        parse_rational(s)
    }
    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    // Rows are kept as primitive integer vectors during forward elimination, so the
    // entries stay as small as the matrix allows.
    fn prepare_pivot(&self, row: &mut SparseRow<BigRational>) {
        make_primitive(row);
    }

    fn eliminate(&self, target: &mut SparseRow<BigRational>, pivot: &SparseRow<BigRational>, col: usize) {
        make_primitive(target);
        let t = match target.iter().find(|(c, _)| *c == col) {
            Some((_, v)) => v.clone(),
            None => return,
        };
        let p = pivot[0].1.clone();
        *target = row_combine(self, &p, target, &(-t), pivot);
        make_primitive(target);
    }
}

/// Clear denominators and divide out the content; leading entry made positive.
fn make_primitive(row: &mut SparseRow<BigRational>) {
    if row.is_empty() {
        return;
    }
    let mut l = BigInt::one();
    for (_, v) in row.iter() {
        if !v.denom().is_one() {
            l = l.lcm(v.denom());
        }
    }
    let mut g = BigInt::zero();
    for (_, v) in row.iter() {
        let n = v.numer() * (&l / v.denom());
        g = g.gcd(&n);
        if g.is_one() {
            break;
        }
    }
    if row[0].1.is_negative() {
        g = -g;
    }
    for (_, v) in row.iter_mut() {
        let n = v.numer() * (&l / v.denom());
        *v = BigRational::from_integer(n / &g);
    }
}

/// The prime field Z/p with residues stored in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
}

impl PrimeField {
    pub fn new(p: u64) -> Result<Self> {
        match FieldSpec::prime(p)? {
            FieldSpec::Prime(p) => Ok(PrimeField { p }),
            FieldSpec::Rational => unreachable!(),
        }
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    fn reduce_big(&self, n: &BigInt) -> u32 {
        let r = n.mod_floor(&BigInt::from(self.p));
        r.to_u32().expect("residue fits")
    }

    pub fn from_rational(&self, q: &BigRational) -> Result<u32> {
        let d = self.reduce_big(q.denom());
        if d == 0 {
            return input(format!("denominator {} vanishes mod {}", q.denom(), self.p));
        }
        let n = self.reduce_big(q.numer());
        Ok(self.mul(&n, &self.inv(&d).unwrap()))
    }
}

impl Ring for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }
    #[inline]
    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        (s % self.p as u64) as u32
    }
    #[inline]
    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn sub(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + self.p as u64 - *b as u64;
        (s % self.p as u64) as u32
    }
    #[inline]
    fn mul(&self, a: &u32, b: &u32) -> u32 {
        ((*a as u64 * *b as u64) % self.p as u64) as u32
    }
    #[inline]
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    #[inline]
    fn add_assign(&self, acc: &mut u32, b: &u32) {
        *acc = self.add(acc, b);
    }
    #[inline]
    fn mul_add_assign(&self, acc: &mut u32, a: &u32, b: &u32) {
        *acc = ((*acc as u64 + *a as u64 * *b as u64) % self.p as u64) as u32;
    }
    fn name(&self) -> String {
        format!("F{}", self.p)
    }
    fn random<G: rand::Rng + ?Sized>(&self, rng: &mut G) -> u32 {
        rng.gen_range(0..self.p)
    }
}

impl Field for PrimeField {
    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            return None;
        }
        // extended Euclid on (a, p)
        let (mut r0, mut r1) = (self.p as i64, *a as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (t0, t1) = (t1, t0 - q * t1);
        }
        Some(t0.rem_euclid(self.p as i64) as u32)
    }
    fn spec(&self) -> FieldSpec {
        FieldSpec::Prime(self.p)
    }
    fn parse(&self, s: &str) -> Result<u32> {
        self.from_rational(&parse_rational(s)?)
    }
    fn format(&self, a: &u32) -> String {
        a.to_string()
    }
}

/// An element of `k[h]/(h^m)`: coefficients of `h^0 .. h^(m-1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedScalar<E> {
    pub coeffs: Vec<E>,
}

/// The truncated polynomial ring `k[h]/(h^order)` over a base ring.
#[derive(Clone, Debug, PartialEq)]
pub struct Truncated<R: Ring> {
    base: R,
    order: usize,
}

impl<R: Ring> Truncated<R> {
    pub fn new(base: R, order: usize) -> Result<Self> {
        if order == 0 {
            return input("truncation order must be at least 1");
        }
        Ok(Truncated { base, order })
    }

    pub fn base(&self) -> &R {
        &self.base
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// Embed a base element as a constant.
    pub fn constant(&self, c: R::Elem) -> TruncatedScalar<R::Elem> {
        let mut coeffs = vec![self.base.zero(); self.order];
        coeffs[0] = c;
        TruncatedScalar { coeffs }
    }

    /// `c * h^j`; zero when `j` is at or beyond the truncation order.
    pub fn monomial(&self, c: R::Elem, j: usize) -> TruncatedScalar<R::Elem> {
        let mut coeffs = vec![self.base.zero(); self.order];
        if j < self.order {
            coeffs[j] = c;
        }
        TruncatedScalar { coeffs }
    }

    pub fn from_coeffs(&self, mut coeffs: Vec<R::Elem>) -> Result<TruncatedScalar<R::Elem>> {
        if coeffs.len() > self.order {
            return input(format!("{} coefficients exceed truncation order {}", coeffs.len(), self.order));
        }
        coeffs.resize(self.order, self.base.zero());
        Ok(TruncatedScalar { coeffs })
    }

    fn check(&self, a: &TruncatedScalar<R::Elem>) -> Result<()> {
        if a.coeffs.len() != self.order {
            return input(format!(
                "truncated scalar has {} coefficients, ring has order {}",
                a.coeffs.len(),
                self.order
            ));
        }
        Ok(())
    }
}

/// Checked Cauchy product in `k[h]/(h^m)`.
pub fn truncated_mul<R: Ring>(
    ring: &Truncated<R>,
    a: &TruncatedScalar<R::Elem>,
    b: &TruncatedScalar<R::Elem>,
) -> Result<TruncatedScalar<R::Elem>> {
    ring.check(a)?;
    ring.check(b)?;
    Ok(ring.mul(a, b))
}

/// Coefficient of `h^j`.
pub fn hbar_coefficient<E: Clone>(a: &TruncatedScalar<E>, j: usize) -> Result<E> {
    a.coeffs
        .get(j)
        .cloned()
        .ok_or_else(|| Error::Input(format!("index {j} outside truncation order {}", a.coeffs.len())))
}

impl<R: Ring> Ring for Truncated<R> {
    type Elem = TruncatedScalar<R::Elem>;

    fn zero(&self) -> Self::Elem {
        TruncatedScalar { coeffs: vec![self.base.zero(); self.order] }
    }
    fn one(&self) -> Self::Elem {
        self.constant(self.base.one())
    }
    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(self.base.from_i64(n))
    }
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        TruncatedScalar { coeffs: a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| self.base.add(x, y)).collect() }
    }
    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        TruncatedScalar { coeffs: a.coeffs.iter().map(|x| self.base.neg(x)).collect() }
    }
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let mut out = self.zero();
        self.mul_add_assign(&mut out, a, b);
        out
    }
    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.iter().all(|x| self.base.is_zero(x))
    }
    fn add_assign(&self, acc: &mut Self::Elem, b: &Self::Elem) {
        for (x, y) in acc.coeffs.iter_mut().zip(&b.coeffs) {
            self.base.add_assign(x, y);
        }
    }
    fn mul_add_assign(&self, acc: &mut Self::Elem, a: &Self::Elem, b: &Self::Elem) {
        for (i, x) in a.coeffs.iter().enumerate() {
            if self.base.is_zero(x) {
                continue;
            }
            for (j, y) in b.coeffs.iter().take(self.order - i).enumerate() {
                self.base.mul_add_assign(&mut acc.coeffs[i + j], x, y);
            }
        }
    }
    fn name(&self) -> String {
        format!("{}[h]/(h^{})", self.base.name(), self.order)
    }
    fn random<G: rand::Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        TruncatedScalar { coeffs: (0..self.order).map(|_| self.base.random(rng)).collect() }
    }
}

impl<F: Field> Truncated<F> {
    /// Textual form: an array of coefficient strings.
    pub fn format(&self, a: &TruncatedScalar<F::Elem>) -> Vec<String> {
        a.coeffs.iter().map(|c| self.base.format(c)).collect()
    }

    pub fn parse(&self, coeffs: &[String]) -> Result<TruncatedScalar<F::Elem>> {
        let parsed = coeffs.iter().map(|s| self.base.parse(s)).collect::<Result<Vec<_>>>()?;
        self.from_coeffs(parsed)
    }
}
