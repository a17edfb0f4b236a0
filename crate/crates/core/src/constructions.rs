//! Finite groups, multiple conjugation quandles, group heaps and the braided algebras
//! they linearize to.

use crate::braided::{AssociativeAlgebra, BraidedAlgebra};
use crate::error::{Error, Result};
use crate::scalar::Field;
use crate::tensor::TensorMap;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    table: Vec<Vec<usize>>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
}

impl FiniteGroup {
    /// Validate a Cayley table (`table[a][b] = ab`).
    pub fn from_table(table: Vec<Vec<usize>>, labels: Vec<String>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Input("a group needs at least one element".into()));
        }
        for (a, row) in table.iter().enumerate() {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(Error::Input(format!("row {a} of the Cayley table is malformed")));
            }
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::Validation(format!("group table is not associative at ({a},{b},{c})")));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a))
            .ok_or_else(|| Error::Validation("group table has no identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for a in 0..n {
            let inv = (0..n)
                .find(|&b| table[a][b] == identity && table[b][a] == identity)
                .ok_or_else(|| Error::Validation(format!("element {a} has no inverse")))?;
            inverse.push(inv);
        }
        let labels = if labels.is_empty() { (0..n).map(|i| format!("g{i}")).collect() } else { labels };
        if labels.len() != n {
            return Err(Error::Input(format!("{} labels for a group of order {n}", labels.len())));
        }
        Ok(FiniteGroup { table, identity, inverse, labels })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1)
    }

    /// Z/n with elements `a^0 .. a^(n-1)`.
    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let labels = (0..n)
            .map(|k| match k {
                0 => "e".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{k}"),
            })
            .collect();
        Self::from_table(table, labels).expect("cyclic group")
    }

    /// The symmetric group on n letters, elements listed in lexicographic order of their
    /// one-line notation; `(στ)(i) = σ(τ(i))`.
    pub fn symmetric(n: usize) -> Self {
        let mut perms: Vec<Vec<usize>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for p in &perms {
                for k in 0..n {
                    if !p.contains(&k) {
                        let mut q = p.clone();
                        q.push(k);
                        next.push(q);
                    }
                }
            }
            perms = next;
        }
        let index = |p: &Vec<usize>| perms.iter().position(|q| q == p).expect("closed");
        let table = perms
            .iter()
            .map(|s| perms.iter().map(|t| index(&t.iter().map(|&i| s[i]).collect())).collect())
            .collect();
        let labels = perms.iter().map(|p| p.iter().map(|i| (i + 1).to_string()).collect::<String>()).collect();
        Self::from_table(table, labels).expect("symmetric group")
    }

    /// G×H with pairs ordered lexicographically.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Self {
        let (n, m) = (g.order(), h.order());
        let table = (0..n * m)
            .map(|x| (0..n * m).map(|y| g.mul(x / m, y / m) * m + h.mul(x % m, y % m)).collect())
            .collect();
        let labels = (0..n * m).map(|x| format!("({},{})", g.labels[x / m], h.labels[x % m])).collect();
        Self::from_table(table, labels).expect("direct product")
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }
    pub fn identity(&self) -> usize {
        self.identity
    }
    pub fn table(&self) -> &[Vec<usize>] {
        &self.table
    }
    pub fn labels(&self) -> &[String] {
        &self.labels
    }
    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// A multiple conjugation quandle: a disjoint union of groups with a binary operation.
/// Elements are numbered component by component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Mcq {
    components: Vec<FiniteGroup>,
    star: Vec<Vec<usize>>,
    offsets: Vec<usize>,
}

impl Mcq {
    /// Validate the four axioms exhaustively.
    pub fn new(components: Vec<FiniteGroup>, star: Vec<Vec<usize>>) -> Result<Self> {
        let mut offsets = Vec::with_capacity(components.len());
        let mut total = 0;
        for g in &components {
            offsets.push(total);
            total += g.order();
        }
        if total == 0 {
            return Err(Error::Input("an MCQ needs at least one element".into()));
        }
        if star.len() != total || star.iter().any(|r| r.len() != total || r.iter().any(|&v| v >= total)) {
            return Err(Error::Input(format!("star table must be {total}x{total} with entries below {total}")));
        }
        let q = Mcq { components, star, offsets };
        q.validate()?;
        Ok(q)
    }

    /// Single group with conjugation `a∗b = b⁻¹ab`.
    pub fn conjugation(g: FiniteGroup) -> Self {
        let star = (0..g.order()).map(|a| (0..g.order()).map(|b| g.mul(g.mul(g.inv(b), a), b)).collect()).collect();
        Self::new(vec![g], star).expect("conjugation MCQ")
    }

    /// Disjoint union of abelian groups with `x∗y = x`.
    pub fn trivial_union(groups: Vec<FiniteGroup>) -> Result<Self> {
        let total: usize = groups.iter().map(FiniteGroup::order).sum();
        let star = (0..total).map(|x| vec![x; total]).collect();
        Self::new(groups, star)
    }

    pub fn size(&self) -> usize {
        self.star.len()
    }
    pub fn components(&self) -> &[FiniteGroup] {
        &self.components
    }
    pub fn star(&self) -> &[Vec<usize>] {
        &self.star
    }

    /// Component index and local index of a global element.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        let c = self.offsets.partition_point(|&o| o <= x) - 1;
        (c, x - self.offsets[c])
    }

    /// Product of two elements of the same component.
    pub fn product(&self, x: usize, y: usize) -> Option<usize> {
        let ((cx, lx), (cy, ly)) = (self.locate(x), self.locate(y));
        (cx == cy).then(|| self.offsets[cx] + self.components[cx].mul(lx, ly))
    }

    fn validate(&self) -> Result<()> {
        let n = self.size();
        let s = &self.star;
        let fail = |axiom: &str, w: String| Err(Error::Validation(format!("MCQ axiom {axiom} fails at {w}")));
        for (c, g) in self.components.iter().enumerate() {
            let off = self.offsets[c];
            for a in 0..g.order() {
                for b in 0..g.order() {
                    let conj = off + g.mul(g.mul(g.inv(b), a), b);
                    if s[off + a][off + b] != conj {
                        return fail("(1) conjugation", format!("({}, {})", off + a, off + b));
                    }
                }
            }
            for x in 0..n {
                if s[x][off + g.identity()] != x {
                    return fail("(2) identity", format!("x = {x}"));
                }
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        if s[x][off + g.mul(a, b)] != s[s[x][off + a]][off + b] {
                            return fail("(2) x∗(ab)", format!("({x}, {}, {})", off + a, off + b));
                        }
                    }
                }
            }
            for x in 0..n {
                for a in 0..g.order() {
                    for b in 0..g.order() {
                        let lhs = s[off + g.mul(a, b)][x];
                        match self.product(s[off + a][x], s[off + b][x]) {
                            Some(rhs) if rhs == lhs => {}
                            _ => return fail("(4) (ab)∗x", format!("({}, {}, {x})", off + a, off + b)),
                        }
                    }
                }
            }
        }
        for x in 0..n {
            for y in 0..n {
                for z in 0..n {
                    if s[s[x][y]][z] != s[s[x][z]][s[y][z]] {
                        return fail("(3) self-distributivity", format!("({x}, {y}, {z})"));
                    }
                }
            }
        }
        Ok(())
    }
}

fn internal(what: &str) -> impl Fn(Error) -> Error + '_ {
    move |e| Error::Internal(format!("{what}: {e}"))
}

/// `μ(x⊗y) = xy` within a component, 0 across; `R(x⊗y) = y⊗(x∗y)`.
pub fn from_mcq<F: Field>(q: &Mcq, field: &F) -> Result<BraidedAlgebra<F>> {
    let n = q.size();
    let mu = TensorMap::from_basis(field, n, 2, 1, |i| match q.product(i[0], i[1]) {
        Some(p) => vec![(vec![p], field.one())],
        None => vec![],
    });
    let r = TensorMap::from_basis(field, n, 2, 2, |i| vec![(vec![i[1], q.star[i[0]][i[1]]], field.one())]);
    let labels = (0..n)
        .map(|x| {
            let (c, l) = q.locate(x);
            if q.components.len() == 1 {
                q.components[c].labels()[l].clone()
            } else {
                format!("{}_{}", q.components[c].labels()[l], c)
            }
        })
        .collect();
    BraidedAlgebra::braided(mu, r, None, labels).map_err(internal("MCQ linearization"))
}

/// Heap rack on G×G: `(x,y)∗(u,v) = (xu⁻¹v, yu⁻¹v)`, `μ((x,y)⊗(u,v)) = (x,v)` if `y = u`.
/// The pair `(x,y)` has index `x·|G| + y`.
pub fn from_heap<F: Field>(g: &FiniteGroup, field: &F) -> Result<BraidedAlgebra<F>> {
    let m = g.order();
    let n = m * m;
    let t = |x: usize, u: usize, v: usize| g.mul(g.mul(x, g.inv(u)), v);
    let mu = TensorMap::from_basis(field, n, 2, 1, |i| {
        let ((x, y), (u, v)) = ((i[0] / m, i[0] % m), (i[1] / m, i[1] % m));
        if y == u {
            vec![(vec![x * m + v], field.one())]
        } else {
            vec![]
        }
    });
    let r = TensorMap::from_basis(field, n, 2, 2, |i| {
        let ((x, y), (u, v)) = ((i[0] / m, i[0] % m), (i[1] / m, i[1] % m));
        vec![(vec![i[1], t(x, u, v) * m + t(y, u, v)], field.one())]
    });
    let labels = (0..n).map(|k| format!("({},{})", g.labels()[k / m], g.labels()[k % m])).collect();
    BraidedAlgebra::braided(mu, r, None, labels).map_err(internal("heap linearization"))
}

pub fn group_algebra<F: Field>(g: &FiniteGroup, field: &F) -> AssociativeAlgebra<F> {
    let n = g.order();
    let mu = TensorMap::from_basis(field, n, 2, 1, |i| vec![(vec![g.mul(i[0], i[1])], field.one())]);
    let unit = TensorMap::from_triples(field, n, 0, 1, [(g.identity(), 0, field.one())]).expect("in range");
    AssociativeAlgebra::new(mu, Some(unit), g.labels().to_vec()).expect("group algebras are associative")
}

/// The same algebra with the flip `x⊗y ↦ y⊗x` as braiding.
pub fn trivial_braiding<F: Field>(a: &AssociativeAlgebra<F>) -> Result<BraidedAlgebra<F>> {
    let tau = TensorMap::swap(a.field(), a.dim());
    BraidedAlgebra::braided(a.mu().clone(), tau, a.unit().cloned(), a.labels().to_vec())
        .map_err(internal("trivial braiding"))
}

/// n×n matrices with basis `E_ij` at index `i·n + j`.
pub fn matrix_algebra<F: Field>(n: usize, field: &F) -> AssociativeAlgebra<F> {
    let d = n * n;
    let mu = TensorMap::from_basis(field, d, 2, 1, |i| {
        let ((a, b), (c, e)) = ((i[0] / n, i[0] % n), (i[1] / n, i[1] % n));
        if b == c {
            vec![(vec![a * n + e], field.one())]
        } else {
            vec![]
        }
    });
    let unit = TensorMap::from_triples(field, d, 0, 1, (0..n).map(|i| (i * n + i, 0, field.one()))).expect("in range");
    let labels = (0..d).map(|k| format!("E{}{}", k / n + 1, k % n + 1)).collect();
    AssociativeAlgebra::new(mu, Some(unit), labels).expect("matrix algebras are associative")
}

/// `k[t]/(t²)` with basis (1, t).
pub fn dual_numbers<F: Field>(field: &F) -> AssociativeAlgebra<F> {
    let mu = TensorMap::from_basis(field, 2, 2, 1, |i| {
        if i[0] + i[1] <= 1 {
            vec![(vec![i[0] + i[1]], field.one())]
        } else {
            vec![]
        }
    });
    let unit = TensorMap::from_triples(field, 2, 0, 1, [(0, 0, field.one())]).expect("in range");
    AssociativeAlgebra::new(mu, Some(unit), vec!["1".into(), "t".into()]).expect("dual numbers are associative")
}
