//! Named constructions: a serializable description of how an algebra was built, and the
//! catalog of small examples used by tests, the self-test and the CLI.

use serde::{Deserialize, Serialize};

use crate::braided::BraidedAlgebra;
use crate::constructions::{dual_numbers, from_heap, from_mcq, group_algebra, matrix_algebra, trivial_braiding, FiniteGroup, Mcq};
use crate::error::{Error, Result};
use crate::hopf::{braided_frobenius, braided_from_hopf, dual_numbers_hopf, group_hopf};
use crate::io::{AlgebraDocument, Loaded};
use crate::scalar::{Field, FieldSpec};

/// A group as a Cayley table, `table[a][b] = ab`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupSpec {
    pub table: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub labels: Vec<String>,
}

impl GroupSpec {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupSpec { table: g.table().to_vec(), labels: g.labels().to_vec() }
    }

    pub fn group(&self) -> Result<FiniteGroup> {
        FiniteGroup::from_table(self.table.clone(), self.labels.clone())
    }
}

/// How to build an algebra. Stored verbatim as the `construction` field of documents.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Construction {
    /// `k[G]` with its Hopf structure and the adjoint braiding.
    Adjoint { group: GroupSpec },
    /// The rack on `G×G` from the heap operation.
    Heap { group: GroupSpec },
    /// The integral construction on `k[G]⊗k[G]`.
    Frobenius { group: GroupSpec },
    /// Linearized multiple conjugation quandle; elements numbered component by component.
    Mcq { components: Vec<GroupSpec>, star: Vec<Vec<usize>> },
    /// `k[G]` with the transposition.
    TrivialGroup { group: GroupSpec },
    /// `n×n` matrices with the transposition.
    TrivialMatrix { n: usize },
    /// `k[t]/(t²)` with the transposition.
    TrivialDualNumbers,
    /// `F₂[t]/(t²)` with primitive `t` and the adjoint braiding.
    DualNumbersHopf,
}

impl Construction {
    pub fn build<F: Field>(&self, field: &F) -> Result<Loaded<F>> {
        let braided = |b: BraidedAlgebra<F>| Ok(Loaded::Braided(b));
        match self {
            Construction::Adjoint { group } => {
                let h = group_hopf(&group.group()?, field);
                let b = braided_from_hopf(&h)?;
                Ok(Loaded::Hopf(h, b))
            }
            Construction::Heap { group } => braided(from_heap(&group.group()?, field)?),
            Construction::Frobenius { group } => braided(braided_frobenius(&group_hopf(&group.group()?, field))?),
            Construction::Mcq { components, star } => {
                let groups = components.iter().map(GroupSpec::group).collect::<Result<Vec<_>>>()?;
                braided(from_mcq(&Mcq::new(groups, star.clone())?, field)?)
            }
            Construction::TrivialGroup { group } => braided(trivial_braiding(&group_algebra(&group.group()?, field))?),
            Construction::TrivialMatrix { n } => {
                if *n == 0 {
                    return Err(Error::Input("matrix size must be positive".into()));
                }
                braided(trivial_braiding(&matrix_algebra(*n, field))?)
            }
            Construction::TrivialDualNumbers => braided(trivial_braiding(&dual_numbers(field))?),
            Construction::DualNumbersHopf => {
                let h = dual_numbers_hopf(field)?;
                let b = braided_from_hopf(&h)?;
                Ok(Loaded::Hopf(h, b))
            }
        }
    }

    /// The built algebra as a document carrying this construction.
    pub fn document<F: Field>(&self, field: &F) -> Result<AlgebraDocument> {
        let doc = match self.build(field)? {
            Loaded::Braided(b) => AlgebraDocument::from_braided(&b),
            Loaded::Hopf(h, _) => AlgebraDocument::from_hopf(&h)?,
        };
        Ok(doc.with_construction(serde_json::to_value(self).expect("constructions serialize")))
    }
}

/// The example catalog.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Fixture {
    Z2Adjoint,
    Z3Adjoint,
    Z2xZ2Adjoint,
    S3Adjoint,
    McqZ2Z2,
    HeapZ2,
    HeapZ3,
    M2Trivial,
    DualNumbersTrivial,
    FrobeniusZ2,
    FrobeniusZ3,
    DualNumbersHopf,
}

impl Fixture {
    pub const ALL: [Fixture; 12] = [
        Fixture::Z2Adjoint,
        Fixture::Z3Adjoint,
        Fixture::Z2xZ2Adjoint,
        Fixture::S3Adjoint,
        Fixture::McqZ2Z2,
        Fixture::HeapZ2,
        Fixture::HeapZ3,
        Fixture::M2Trivial,
        Fixture::DualNumbersTrivial,
        Fixture::FrobeniusZ2,
        Fixture::FrobeniusZ3,
        Fixture::DualNumbersHopf,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Fixture::Z2Adjoint => "z2_adjoint",
            Fixture::Z3Adjoint => "z3_adjoint",
            Fixture::Z2xZ2Adjoint => "z2xz2_adjoint",
            Fixture::S3Adjoint => "s3_adjoint",
            Fixture::McqZ2Z2 => "mcq_z2_z2",
            Fixture::HeapZ2 => "heap_z2",
            Fixture::HeapZ3 => "heap_z3",
            Fixture::M2Trivial => "m2_trivial",
            Fixture::DualNumbersTrivial => "dual_numbers_trivial",
            Fixture::FrobeniusZ2 => "frobenius_z2",
            Fixture::FrobeniusZ3 => "frobenius_z3",
            Fixture::DualNumbersHopf => "dual_numbers_hopf",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        let name = name.strip_suffix(".json").unwrap_or(name);
        Self::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn dim(&self) -> usize {
        match self {
            Fixture::Z2Adjoint | Fixture::DualNumbersTrivial | Fixture::DualNumbersHopf => 2,
            Fixture::Z3Adjoint => 3,
            Fixture::Z2xZ2Adjoint | Fixture::McqZ2Z2 | Fixture::HeapZ2 | Fixture::M2Trivial | Fixture::FrobeniusZ2 => 4,
            Fixture::S3Adjoint => 6,
            Fixture::HeapZ3 | Fixture::FrobeniusZ3 => 9,
        }
    }

    /// The primitive dual numbers are a Hopf algebra only in characteristic 2.
    pub fn defined_over(&self, spec: FieldSpec) -> bool {
        match self {
            Fixture::DualNumbersHopf => spec == FieldSpec::Prime(2),
            _ => true,
        }
    }

    /// Field used for the shipped documents: characteristic 2 for the dual numbers, where
    /// the interesting cohomology lives, rationals otherwise.
    pub fn default_field(&self) -> FieldSpec {
        match self {
            Fixture::DualNumbersTrivial | Fixture::DualNumbersHopf => FieldSpec::Prime(2),
            _ => FieldSpec::Rational,
        }
    }

    pub fn construction(&self) -> Construction {
        let z2 = || GroupSpec::of(&FiniteGroup::cyclic(2));
        let z3 = || GroupSpec::of(&FiniteGroup::cyclic(3));
        match self {
            Fixture::Z2Adjoint => Construction::Adjoint { group: z2() },
            Fixture::Z3Adjoint => Construction::Adjoint { group: z3() },
            Fixture::Z2xZ2Adjoint => Construction::Adjoint {
                group: GroupSpec::of(&FiniteGroup::direct_product(&FiniteGroup::cyclic(2), &FiniteGroup::cyclic(2))),
            },
            Fixture::S3Adjoint => Construction::Adjoint { group: GroupSpec::of(&FiniteGroup::symmetric(3)) },
            Fixture::McqZ2Z2 => Construction::Mcq { components: vec![z2(), z2()], star: (0..4).map(|x| vec![x; 4]).collect() },
            Fixture::HeapZ2 => Construction::Heap { group: z2() },
            Fixture::HeapZ3 => Construction::Heap { group: z3() },
            Fixture::M2Trivial => Construction::TrivialMatrix { n: 2 },
            Fixture::DualNumbersTrivial => Construction::TrivialDualNumbers,
            Fixture::FrobeniusZ2 => Construction::Frobenius { group: z2() },
            Fixture::FrobeniusZ3 => Construction::Frobenius { group: z3() },
            Fixture::DualNumbersHopf => Construction::DualNumbersHopf,
        }
    }

    pub fn build<F: Field>(&self, field: &F) -> Result<Loaded<F>> {
        if !self.defined_over(field.spec()) {
            return Err(Error::Precondition(format!("{} is not defined over {}", self.name(), field.spec())));
        }
        self.construction().build(field)
    }

    pub fn braided<F: Field>(&self, field: &F) -> Result<BraidedAlgebra<F>> {
        Ok(self.build(field)?.braided().clone())
    }

    pub fn document<F: Field>(&self, field: &F) -> Result<AlgebraDocument> {
        self.construction().document(field)
    }
}
