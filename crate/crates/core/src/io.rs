//! The `ybh/1` JSON document: structure maps as sparse index tuples with string scalars.
//!
//! A map `V^⊗n → V^⊗k` is a list of entries `[i_1, …, i_n, o_1, …, o_k, "c"]`, meaning the
//! coefficient of `e_o` in the image of `e_i` is `c`. Keys are written in sorted order and
//! entries in lexicographic order, so equal documents serialize to equal bytes.

use std::fmt;
use std::path::Path;

use serde::de::{self, Deserializer, SeqAccess, Visitor};
use serde::ser::{SerializeSeq, Serializer};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::braided::BraidedAlgebra;
use crate::deformation::DeformationSeries;
use crate::error::{Error, Result};
use crate::hopf::{braided_from_hopf, HopfAlgebra, HopfMaps};
use crate::scalar::{Field, FieldSpec};
use crate::tensor::{decode, encode, TensorMap};

pub const SCHEMA: &str = "ybh/1";

/// One sparse coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub coeff: String,
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.indices.len() + 1))?;
        for i in &self.indices {
            seq.serialize_element(i)?;
        }
        seq.serialize_element(&self.coeff)?;
        seq.end()
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct EntryVisitor;
        impl<'de> Visitor<'de> for EntryVisitor {
            type Value = Entry;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of basis indices followed by a scalar string")
            }
            fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> std::result::Result<Entry, A::Error> {
                let mut indices = Vec::new();
                while let Some(v) = seq.next_element::<serde_json::Value>()? {
                    match v {
                        serde_json::Value::Number(n) => {
                            let i = n.as_u64().ok_or_else(|| de::Error::custom(format!("index {n} is not a natural number")))?;
                            indices.push(i as usize);
                        }
                        serde_json::Value::String(coeff) => {
                            if seq.next_element::<serde_json::Value>()?.is_some() {
                                return Err(de::Error::custom("the scalar string must be the last element"));
                            }
                            return Ok(Entry { indices, coeff });
                        }
                        other => return Err(de::Error::custom(format!("unexpected {other} in an entry"))),
                    }
                }
                Err(de::Error::custom("entry has no scalar string"))
            }
        }
        d.deserialize_seq(EntryVisitor)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDoc {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<u64>,
}

impl FieldDoc {
    pub fn from_spec(spec: FieldSpec) -> Self {
        match spec {
            FieldSpec::Rational => FieldDoc { kind: "rational".into(), p: None },
            FieldSpec::Prime(p) => FieldDoc { kind: "prime".into(), p: Some(p as u64) },
        }
    }

    pub fn spec(&self) -> Result<FieldSpec> {
        match (self.kind.as_str(), self.p) {
            ("rational", None) => Ok(FieldSpec::Rational),
            ("prime", Some(p)) => FieldSpec::prime(p),
            ("prime", None) => Err(parse_error("field", "a prime field needs \"p\"")),
            ("rational", Some(_)) => Err(parse_error("field", "a rational field takes no \"p\"")),
            (k, _) => Err(parse_error("field.kind", format!("unknown field kind {k:?}"))),
        }
    }
}

/// Serialized form of a braided algebra, optionally with Hopf structure and deformation terms.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub schema: String,
    pub field: FieldDoc,
    pub dim: usize,
    #[serde(default)]
    pub basis: Vec<String>,
    pub mu: Vec<Entry>,
    #[serde(rename = "R", default, skip_serializing_if = "Option::is_none")]
    pub r: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eta: Option<Vec<Entry>>,
    #[serde(rename = "Delta", default, skip_serializing_if = "Option::is_none")]
    pub delta: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<Vec<Entry>>,
    #[serde(rename = "S", default, skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<Entry>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub construction: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi_terms: Option<Vec<Vec<Entry>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub psi_terms: Option<Vec<Vec<Entry>>>,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

/// Sparse entries of a map, sorted.
pub fn encode_map<F: Field>(m: &TensorMap<F>) -> Vec<Entry> {
    let (d, n, k) = (m.dim(), m.in_arity(), m.out_arity());
    let field = m.ring();
    let mut out: Vec<Entry> = m
        .triples()
        .map(|(row, col, v)| {
            let mut indices = decode(d, n, col);
            indices.extend(decode(d, k, row));
            Entry { indices, coeff: field.format(v) }
        })
        .collect();
    out.sort();
    out
}

/// Inverse of [`encode_map`]; `name` locates errors. Repeated index tuples are rejected.
pub fn decode_map<F: Field>(field: &F, d: usize, n: usize, k: usize, entries: &[Entry], name: &str) -> Result<TensorMap<F>> {
    let mut m = TensorMap::zero(field, d, n, k);
    let mut seen = std::collections::HashSet::new();
    for (pos, e) in entries.iter().enumerate() {
        let loc = || format!("{name}[{pos}]");
        if e.indices.len() != n + k {
            return Err(parse_error(loc(), format!("expected {} indices for a {n}→{k} map, found {}", n + k, e.indices.len())));
        }
        if let Some(&bad) = e.indices.iter().find(|&&i| i >= d) {
            return Err(parse_error(loc(), format!("index {bad} is not below the dimension {d}")));
        }
        if !seen.insert(e.indices.clone()) {
            return Err(parse_error(loc(), format!("repeated index tuple {:?}", e.indices)));
        }
        let v = field.parse(&e.coeff).map_err(|err| parse_error(loc(), err.to_string()))?;
        m.set(encode(d, &e.indices[n..]), encode(d, &e.indices[..n]), v);
    }
    Ok(m)
}

/// Raw structure maps of a document, before any axiom is checked.
#[derive(Clone, Debug)]
pub struct RawStructure<F: Field> {
    pub mu: TensorMap<F>,
    pub r: Option<TensorMap<F>>,
    pub eta: Option<TensorMap<F>>,
    pub hopf: Option<HopfMaps<F>>,
}

/// A validated document.
#[derive(Clone, Debug)]
pub enum Loaded<F: Field> {
    Braided(BraidedAlgebra<F>),
    /// The braided algebra is the one stored in the document when it has an `R`,
    /// otherwise the adjoint braiding.
    Hopf(HopfAlgebra<F>, BraidedAlgebra<F>),
}

impl<F: Field> Loaded<F> {
    pub fn braided(&self) -> &BraidedAlgebra<F> {
        match self {
            Loaded::Braided(b) | Loaded::Hopf(_, b) => b,
        }
    }
    pub fn hopf(&self) -> Option<&HopfAlgebra<F>> {
        match self {
            Loaded::Hopf(h, _) => Some(h),
            Loaded::Braided(_) => None,
        }
    }
}

impl AlgebraDocument {
    fn bare(spec: FieldSpec, dim: usize, labels: &[String], mu: &TensorMap<impl Field>) -> Self {
        AlgebraDocument {
            schema: SCHEMA.into(),
            field: FieldDoc::from_spec(spec),
            dim,
            basis: labels.to_vec(),
            mu: encode_map(mu),
            r: None,
            eta: None,
            delta: None,
            epsilon: None,
            s: None,
            construction: None,
            phi_terms: None,
            psi_terms: None,
        }
    }

    pub fn from_braided<F: Field>(b: &BraidedAlgebra<F>) -> Self {
        let mut doc = Self::bare(b.field().spec(), b.dim(), b.labels(), b.mu());
        doc.r = Some(encode_map(b.r()));
        doc.eta = b.unit().map(encode_map);
        doc
    }

    /// Hopf maps plus the adjoint braiding.
    pub fn from_hopf<F: Field>(h: &HopfAlgebra<F>) -> Result<Self> {
        let mut doc = Self::from_braided(&braided_from_hopf(h)?);
        doc.basis = h.labels().to_vec();
        doc.eta = Some(encode_map(h.eta()));
        doc.delta = Some(encode_map(h.delta()));
        doc.epsilon = Some(encode_map(h.epsilon()));
        doc.s = Some(encode_map(h.antipode()));
        Ok(doc)
    }

    pub fn with_construction(mut self, provenance: serde_json::Value) -> Self {
        self.construction = Some(provenance);
        self
    }

    pub fn with_series<F: Field>(mut self, s: &DeformationSeries<F>) -> Self {
        self.phi_terms = Some(s.phi_terms().iter().map(encode_map).collect());
        self.psi_terms = Some(s.psi_terms().iter().map(encode_map).collect());
        self
    }

    pub fn field_spec(&self) -> Result<FieldSpec> {
        self.field.spec()
    }

    fn check_header(&self) -> Result<()> {
        if self.schema != SCHEMA {
            return Err(parse_error("schema", format!("expected {SCHEMA:?}, found {:?}", self.schema)));
        }
        if self.dim == 0 {
            return Err(parse_error("dim", "dimension must be positive"));
        }
        if !self.basis.is_empty() && self.basis.len() != self.dim {
            return Err(parse_error("basis", format!("{} labels for dimension {}", self.basis.len(), self.dim)));
        }
        Ok(())
    }

    /// Decode every map over `field` without checking any axiom.
    pub fn raw<F: Field>(&self, field: &F) -> Result<RawStructure<F>> {
        self.check_header()?;
        let d = self.dim;
        let opt = |e: &Option<Vec<Entry>>, n, k, name| e.as_ref().map(|e| decode_map(field, d, n, k, e, name)).transpose();
        let mu = decode_map(field, d, 2, 1, &self.mu, "mu")?;
        let r = opt(&self.r, 2, 2, "R")?;
        let eta = opt(&self.eta, 0, 1, "eta")?;
        let delta = opt(&self.delta, 1, 2, "Delta")?;
        let epsilon = opt(&self.epsilon, 1, 0, "epsilon")?;
        let s = opt(&self.s, 1, 1, "S")?;
        let hopf = match (delta, epsilon, s) {
            (None, None, None) => None,
            (Some(delta), Some(epsilon), Some(s)) => {
                let eta = eta.clone().ok_or_else(|| parse_error("eta", "a Hopf document needs a unit"))?;
                Some(HopfMaps { mu: mu.clone(), eta, delta, epsilon, s })
            }
            _ => return Err(parse_error("Delta", "Delta, epsilon and S must be given together")),
        };
        if r.is_none() && hopf.is_none() {
            return Err(parse_error("R", "a document without Hopf structure needs a braiding"));
        }
        Ok(RawStructure { mu, r, eta, hopf })
    }

    /// Decode and run every construction-time validation.
    pub fn load<F: Field>(&self, field: &F) -> Result<Loaded<F>> {
        let raw = self.raw(field)?;
        let labels = self.basis.clone();
        match raw.hopf {
            None => {
                let r = raw.r.expect("checked in raw");
                Ok(Loaded::Braided(BraidedAlgebra::from_maps(raw.mu, r, raw.eta, labels)?))
            }
            Some(maps) => {
                let h = HopfAlgebra::new(maps, labels.clone())?;
                let b = match raw.r {
                    Some(r) => BraidedAlgebra::from_maps(raw.mu, r, raw.eta, labels)?,
                    None => braided_from_hopf(&h)?,
                };
                Ok(Loaded::Hopf(h, b))
            }
        }
    }

    /// Deformation terms stored in the document, over `base`.
    pub fn series<F: Field>(&self, base: &BraidedAlgebra<F>) -> Result<Option<DeformationSeries<F>>> {
        let (phis, psis) = match (&self.phi_terms, &self.psi_terms) {
            (None, None) => return Ok(None),
            (Some(a), Some(b)) => (a, b),
            _ => return Err(parse_error("phi_terms", "phi_terms and psi_terms must be given together")),
        };
        let field = base.field();
        let d = self.dim;
        let phi = phis
            .iter()
            .enumerate()
            .map(|(i, e)| decode_map(field, d, 2, 2, e, &format!("phi_terms[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        let psi = psis
            .iter()
            .enumerate()
            .map(|(i, e)| decode_map(field, d, 2, 1, e, &format!("psi_terms[{i}]")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Some(DeformationSeries::new(base.clone(), phi, psi)?))
    }

    /// Canonical text: sorted keys, two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("documents serialize");
        canonical_json(&v)
    }
}

/// JSON with sorted keys and two-space indentation; arrays holding only scalars stay on one
/// line so that sparse entries read as rows.
pub fn canonical_json(v: &serde_json::Value) -> String {
    let mut out = String::new();
    write_value(v, 0, &mut out);
    out.push('\n');
    out
}

fn write_value(v: &serde_json::Value, indent: usize, out: &mut String) {
    use serde_json::Value;
    let pad = |n: usize, out: &mut String| out.extend(std::iter::repeat(' ').take(2 * n));
    match v {
        Value::Array(items) if items.iter().all(|x| !x.is_array() && !x.is_object()) => {
            let parts: Vec<String> = items.iter().map(|x| serde_json::to_string(x).expect("values serialize")).collect();
            out.push('[');
            out.push_str(&parts.join(", "));
            out.push(']');
        }
        Value::Array(items) => {
            out.push_str("[\n");
            for (i, x) in items.iter().enumerate() {
                pad(indent + 1, out);
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < items.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push(']');
        }
        // serde_json's map iterates in key order unless `preserve_order` is enabled.
        Value::Object(map) if !map.is_empty() => {
            out.push_str("{\n");
            for (i, (k, x)) in map.iter().enumerate() {
                pad(indent + 1, out);
                out.push_str(&serde_json::to_string(k).expect("keys serialize"));
                out.push_str(": ");
                write_value(x, indent + 1, out);
                out.push_str(if i + 1 < map.len() { ",\n" } else { "\n" });
            }
            pad(indent, out);
            out.push('}');
        }
        _ => out.push_str(&serde_json::to_string(v).expect("values serialize")),
    }
}

pub fn parse_document(text: &str) -> Result<AlgebraDocument> {
    serde_json::from_str(text).map_err(|e| {
        let message = e.to_string();
        let message = match message.rfind(" at line ") {
            Some(i) => message[..i].to_string(),
            None => message,
        };
        parse_error(format!("line {} column {}", e.line(), e.column()), message)
    })
}

/// Hex SHA-256 of the bytes.
pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

/// A parsed document with the digest of the file it came from.
pub fn read_document(path: &Path) -> Result<(AlgebraDocument, String)> {
    let bytes = std::fs::read(path)?;
    let text = String::from_utf8(bytes.clone()).map_err(|e| parse_error(format!("byte {}", e.utf8_error().valid_up_to()), "invalid UTF-8"))?;
    Ok((parse_document(&text)?, digest(&bytes)))
}

pub fn save_document(doc: &AlgebraDocument, path: &Path) -> Result<()> {
    std::fs::write(path, doc.to_canonical_json())?;
    Ok(())
}

/// Read, decode over the document's own field and validate.
pub fn load_algebra<F: Field>(path: &Path, field: &F) -> Result<Loaded<F>> {
    read_document(path)?.0.load(field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{dual_numbers, group_algebra, trivial_braiding, FiniteGroup};
    use crate::hopf::group_hopf;
    use crate::scalar::{PrimeField, Rationals};

    #[test]
    fn braided_round_trip() {
        let q = Rationals;
        let b = braided_from_hopf(&group_hopf(&FiniteGroup::cyclic(3), &q)).unwrap();
        let doc = AlgebraDocument::from_braided(&b);
        let text = doc.to_canonical_json();
        let back = parse_document(&text).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_canonical_json(), text);
        match back.load(&q).unwrap() {
            Loaded::Braided(b2) => assert_eq!(b2, b),
            Loaded::Hopf(..) => panic!("no Hopf maps were stored"),
        }
    }

    #[test]
    fn hopf_round_trip() {
        let f = PrimeField::new(3).unwrap();
        let h = group_hopf(&FiniteGroup::cyclic(3), &f);
        let doc = AlgebraDocument::from_hopf(&h).unwrap();
        let loaded = parse_document(&doc.to_canonical_json()).unwrap().load(&f).unwrap();
        assert_eq!(loaded.hopf().unwrap().maps(), h.maps());
        assert_eq!(loaded.braided(), &braided_from_hopf(&h).unwrap());
    }

    #[test]
    fn keys_are_sorted() {
        let f = PrimeField::new(2).unwrap();
        let b = trivial_braiding(&dual_numbers(&f)).unwrap();
        let text = AlgebraDocument::from_braided(&b).to_canonical_json();
        let keys: Vec<usize> = ["\"R\"", "\"basis\"", "\"dim\"", "\"field\"", "\"mu\"", "\"schema\""]
            .iter()
            .map(|k| text.find(k).unwrap())
            .collect();
        assert!(keys.windows(2).all(|w| w[0] < w[1]), "{text}");
    }

    #[test]
    fn truncated_file_is_a_positioned_parse_error() {
        let b = trivial_braiding(&group_algebra(&FiniteGroup::cyclic(2), &Rationals)).unwrap();
        let text = AlgebraDocument::from_braided(&b).to_canonical_json();
        match parse_document(&text[..text.len() / 2]) {
            Err(Error::Parse { location, .. }) => assert!(location.starts_with("line "), "{location}"),
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn non_associative_mu_names_a_triple() {
        let q = Rationals;
        let b = trivial_braiding(&group_algebra(&FiniteGroup::cyclic(2), &q)).unwrap();
        let mut doc = AlgebraDocument::from_braided(&b);
        doc.eta = None;
        doc.mu[0].coeff = "2".into();
        match doc.load(&q) {
            Err(Error::Validation(msg)) => assert!(msg.contains("triple"), "{msg}"),
            other => panic!("expected a validation error, got {other:?}"),
        }
    }

    #[test]
    fn bad_entries_are_located() {
        let q = Rationals;
        let b = trivial_braiding(&group_algebra(&FiniteGroup::cyclic(2), &q)).unwrap();
        let mut doc = AlgebraDocument::from_braided(&b);
        doc.mu[1].indices[0] = 5;
        match doc.raw(&q) {
            Err(Error::Parse { location, .. }) => assert_eq!(location, "mu[1]"),
            other => panic!("{other:?}"),
        }
        let mut doc = AlgebraDocument::from_braided(&b);
        doc.mu[1].coeff = "x".into();
        assert!(matches!(doc.raw(&q), Err(Error::Parse { .. })));
        let mut doc = AlgebraDocument::from_braided(&b);
        let dup = doc.mu[0].clone();
        doc.mu.push(dup);
        assert!(matches!(doc.raw(&q), Err(Error::Parse { .. })));
    }

    #[test]
    fn canonical_text_keeps_commas_in_strings() {
        let v = serde_json::json!({"b": ["x,y", 1], "a": [[0, "1/2"]], "c": {}});
        let text = canonical_json(&v);
        assert_eq!(text, "{\n  \"a\": [\n    [0, \"1/2\"]\n  ],\n  \"b\": [\"x,y\", 1],\n  \"c\": {}\n}\n");
        assert_eq!(serde_json::from_str::<serde_json::Value>(&text).unwrap(), v);
    }

    #[test]
    fn entry_syntax() {
        let e: Entry = serde_json::from_str("[0, 1, 1, \"-1/2\"]").unwrap();
        assert_eq!(e, Entry { indices: vec![0, 1, 1], coeff: "-1/2".into() });
        assert_eq!(serde_json::to_string(&e).unwrap(), "[0,1,1,\"-1/2\"]");
        assert!(serde_json::from_str::<Entry>("[0, 1]").is_err());
        assert!(serde_json::from_str::<Entry>("[0, \"1\", 2]").is_err());
        assert!(serde_json::from_str::<Entry>("[-1, \"1\"]").is_err());
    }

    #[test]
    fn series_round_trip() {
        let f = PrimeField::new(101).unwrap();
        let b = trivial_braiding(&dual_numbers(&f)).unwrap();
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        let phi = TensorMap::random(&f, 2, 2, 2, &mut rng);
        let psi = TensorMap::random(&f, 2, 2, 1, &mut rng);
        let s = DeformationSeries::new(b.clone(), vec![phi], vec![psi]).unwrap();
        let doc = AlgebraDocument::from_braided(&b).with_series(&s);
        let back = parse_document(&doc.to_canonical_json()).unwrap();
        let s2 = back.series(back.load(&f).unwrap().braided()).unwrap().unwrap();
        assert_eq!(s2.phi_terms(), s.phi_terms());
        assert_eq!(s2.psi_terms(), s.psi_terms());
    }

    #[test]
    fn digest_is_stable() {
        assert_eq!(digest(b"abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    }
}
