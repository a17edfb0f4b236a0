use std::path::Path;

use serde_json::json;
use ybh::braided::{check_associative, check_iy, check_yb, check_yi};
use ybh::complex::{h3_summary, iota_report};
use ybh::deformation::{
    cocycle_defect_summands, connect_cohomologous, extend_to_quadratic, obstruction_bundle, obstruction_is_cocycle,
    trivializing_isomorphism, verify_deformation,
};
use ybh::hopf::{adjoint_map, check_hopf, find_left_integral, psi_report, HopfAxiom};
use ybh::io::{read_document, AlgebraDocument};
use ybh::linalg::invert;
use ybh::report::{cochain2_value, map_value};
use ybh::selftest::{random_combination, run_selftest, seeded_rng, SelftestConfig};
use ybh::{
    ComplexSlice, Construction, DeformationVerdict, DimensionGuard, Error, Field, FieldSpec, Fixture, HopfAlgebra,
    PrimeField, QuadraticOutcome, Rationals, Report, Result, TensorMap, Verdict,
};

/// Run `$body` with `$f` bound to the field named by `$which`.
macro_rules! with_field {
    ($which:expr, |$f:ident| $body:expr) => {
        match $which {
            FieldSpec::Rational => {
                let $f = Rationals;
                $body
            }
            FieldSpec::Prime(p) => {
                let $f = PrimeField::new(p as u64)?;
                $body
            }
        }
    };
}

fn open(path: &Path, field: Option<FieldSpec>) -> Result<(AlgebraDocument, String, FieldSpec)> {
    let (doc, digest) = read_document(path)?;
    let field_spec = match field {
        Some(s) => s,
        None => doc.field_spec()?,
    };
    Ok((doc, digest, field_spec))
}

fn header(command: &str, digest: &str, field_spec: FieldSpec, dim: usize) -> Report {
    let mut rep = Report::new(command);
    rep.set("input_digest", digest);
    rep.set("field", field_spec.label());
    rep.set("dim", dim);
    rep
}

pub fn check(path: &Path, field: Option<FieldSpec>) -> Result<Report> {
    let (doc, digest, field_spec) = open(path, field)?;
    with_field!(field_spec, |f| check_in(&doc, header("check", &digest, field_spec, doc.dim), &f))
}

fn check_in<F: Field>(doc: &AlgebraDocument, mut rep: Report, f: &F) -> Result<Report> {
    let raw = doc.raw(f)?;
    let d = doc.dim;
    rep.check_verdict("associativity", &check_associative(&raw.mu)?);
    if let Some(eta) = &raw.eta {
        let id = TensorMap::identity(f, d, 1);
        let left = raw.mu.compose(&eta.tensor(&id)?)?;
        let right = raw.mu.compose(&id.tensor(eta)?)?;
        rep.check("unit", left == id && right == id, None);
    }
    let r = match (&raw.r, &raw.hopf) {
        (Some(r), _) => Some(r.clone()),
        (None, Some(h)) => Some(adjoint_map(&h.mu, &h.delta, &h.s)?),
        (None, None) => None,
    };
    if let Some(r) = &r {
        rep.check_verdict("yang-baxter", &check_yb(r)?);
        rep.check("invertible", invert(r).is_some(), None);
        rep.check_verdict("yi", &check_yi(&raw.mu, r)?);
        rep.check_verdict("iy", &check_iy(&raw.mu, r)?);
    }
    if let Some(maps) = &raw.hopf {
        let hc = check_hopf(maps)?;
        for axiom in HopfAxiom::ALL {
            let verdict = match hc.violations.iter().find(|(a, _)| *a == axiom) {
                Some((_, w)) => Verdict::Fail(w.clone()),
                None => Verdict::Pass,
            };
            rep.check_verdict(&format!("hopf.{}", axiom.name()), &verdict);
        }
        rep.set("hopf", json!({"commutative": hc.commutative, "cocommutative": hc.cocommutative, "involutory": hc.involutory}));
        if hc.passed() {
            let h = HopfAlgebra::new(maps.clone(), doc.basis.clone())?;
            let rank = match find_left_integral(&h) {
                Ok(i) => i.rank(),
                Err(Error::NoIntegral) => 0,
                Err(e) => return Err(e),
            };
            rep.set("integral_rank", rank);
        }
    }
    Ok(rep)
}

pub fn cohomology(path: &Path, field: Option<FieldSpec>, guard: &DimensionGuard, degree: usize, iota: bool) -> Result<Report> {
    let (doc, digest, field_spec) = open(path, field)?;
    guard.check(degree, doc.dim)?;
    with_field!(field_spec, |f| cohomology_in(&doc, header("cohomology", &digest, field_spec, doc.dim), &f, guard, degree, iota))
}

fn cohomology_in<F: Field>(doc: &AlgebraDocument, mut rep: Report, f: &F, guard: &DimensionGuard, degree: usize, iota: bool) -> Result<Report> {
    let loaded = doc.load(f)?;
    let b = loaded.braided();
    let slice = ComplexSlice::new(b.clone(), guard)?;
    let summary = slice.summary();
    rep.set("h2", summary.h2);
    rep.set("degree2", &summary);
    rep.check("chain_1_2", slice.chain_identity_holds()?, None);
    let reps: Vec<_> = slice.h2_representatives()?.iter().map(cochain2_value).collect();
    rep.set("h2_basis", reps);
    if degree >= 3 {
        let h3 = h3_summary(b, guard)?;
        rep.set("h3", h3.h3);
        rep.set("degree3", &h3);
    }
    if iota {
        let report = iota_report(b, guard)?;
        rep.check("iota_injective", report.injective(), Some(serde_json::to_value(&report).expect("serializes")));
    }
    if let Some(h) = loaded.hopf() {
        rep.set("psi", psi_report(h, guard)?);
    }
    Ok(rep)
}

pub fn deform(path: &Path, field: Option<FieldSpec>, guard: &DimensionGuard, seed: u64, trials: usize) -> Result<Report> {
    let (doc, digest, field_spec) = open(path, field)?;
    let mut rep = header("deform", &digest, field_spec, doc.dim);
    rep.set("seed", seed);
    with_field!(field_spec, |f| deform_in(&doc, rep, &f, guard, seed, trials))
}

fn deform_in<F: Field>(doc: &AlgebraDocument, mut rep: Report, f: &F, guard: &DimensionGuard, seed: u64, trials: usize) -> Result<Report> {
    let loaded = doc.load(f)?;
    let b = loaded.braided();
    let d = b.dim();
    if let Some(series) = doc.series(b)? {
        rep.set("order", series.order());
        let verdict = verify_deformation(&series)?;
        match &verdict {
            DeformationVerdict::Pass => rep.check("deformation", true, None),
            DeformationVerdict::Fail { axiom, degree, witness } => rep.check(
                "deformation",
                false,
                Some(json!({"axiom": axiom.name(), "degree": degree, "witness": {"input": witness.input, "output": witness.output}})),
            ),
        }
        // The next obstruction is reported, not asserted, beyond degree 2.
        if verdict.passed() && series.order() >= 1 && guard.check(3, d).is_ok() {
            let slice = ComplexSlice::new(b.clone(), guard)?;
            let r = series.order() + 1;
            let bundle = obstruction_bundle(&series, r)?.to_cochain();
            let nonzero = cocycle_defect_summands(&slice, &bundle)?;
            let rhs: Vec<_> = bundle.flatten().iter().map(|x| f.neg(x)).collect();
            let solvable = slice.d2().solve(&rhs)?.is_solved();
            rep.set(
                "next_obstruction",
                json!({
                    "degree": r,
                    "zero": bundle.is_zero(),
                    "is_cocycle": nonzero.is_empty(),
                    "nonzero_summands": nonzero.iter().map(|s| s.name()).collect::<Vec<_>>(),
                    "is_coboundary": solvable,
                }),
            );
        }
        return Ok(rep);
    }
    let slice = ComplexSlice::new(b.clone(), guard)?;
    let basis = slice.cocycle_basis()?;
    let degree3 = guard.check(3, d).is_ok();
    let mut outcomes = Vec::new();
    for (i, c) in basis.iter().enumerate() {
        let mut entry = serde_json::Map::new();
        entry.insert("index".into(), json!(i));
        match extend_to_quadratic(&slice, c)? {
            QuadraticOutcome::Extended { phi2, psi2, .. } => {
                entry.insert("extends".into(), json!(true));
                entry.insert("phi2".into(), map_value(&phi2));
                entry.insert("psi2".into(), map_value(&psi2));
            }
            QuadraticOutcome::Obstructed { .. } => {
                entry.insert("extends".into(), json!(false));
            }
        }
        if degree3 {
            let bad = obstruction_is_cocycle(&slice, c)?;
            rep.check(&format!("obstruction_cocycle.{i}"), bad.is_empty(), None);
        }
        outcomes.push(serde_json::Value::Object(entry));
    }
    rep.set("cocycles", outcomes);
    let mut rng = seeded_rng(seed, 0);
    let mut connected = 0;
    for _ in 0..trials {
        let g = TensorMap::random(f, d, 1, 1, &mut rng);
        let c = random_combination(f, d, &basis, &mut rng);
        if trivializing_isomorphism(b, &g).is_ok() && connect_cohomologous(b, &c, &g)?.verified() {
            connected += 1;
        }
    }
    rep.check("trivialization", connected == trials, Some(json!({"trials": trials, "verified": connected})));
    Ok(rep)
}

pub fn construct(fixture: Option<&str>, recipe: Option<&Path>, list: bool, field: Option<FieldSpec>) -> Result<String> {
    if list {
        let lines: Vec<String> = Fixture::ALL.iter().map(|fx| format!("{}\td={}", fx.name(), fx.dim())).collect();
        return Ok(lines.join("\n") + "\n");
    }
    let (construction, default) = match (fixture, recipe) {
        (Some(name), None) => {
            let fx = Fixture::from_name(name).ok_or_else(|| Error::Input(format!("unknown fixture {name:?}; see --list")))?;
            (fx.construction(), fx.default_field())
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path)?;
            let c = serde_json::from_str::<Construction>(&text).map_err(|e| Error::Parse {
                location: format!("line {} column {}", e.line(), e.column()),
                message: e.to_string(),
            })?;
            let default = if c == Construction::DualNumbersHopf { FieldSpec::Prime(2) } else { FieldSpec::Rational };
            (c, default)
        }
        _ => return Err(Error::Input("give --fixture NAME, --from FILE or --list".into())),
    };
    let field_spec = field.unwrap_or(default);
    let doc = with_field!(field_spec, |f| construction.document(&f))?;
    Ok(doc.to_canonical_json())
}

pub fn selftest(field_spec: FieldSpec, guard: &DimensionGuard, seed: u64, trials: usize) -> Result<Report> {
    let cfg = SelftestConfig { seed, trials, guard: *guard };
    let outcomes = with_field!(field_spec, |f| run_selftest(&f, &cfg))?;
    let mut rep = Report::new("selftest");
    rep.set("field", field_spec.label());
    rep.set("seed", seed);
    rep.set("trials", trials);
    for o in outcomes.iter().filter(|o| o.skipped.is_none()) {
        rep.check(&format!("{}.{}", o.suite, o.fixture), o.passed(), None);
    }
    rep.set("suites", &outcomes);
    Ok(rep)
}
