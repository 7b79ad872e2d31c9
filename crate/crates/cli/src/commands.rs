use latspec::adjunction::{
    is_classifying, lambda_adjunct, parse_datum, resolve_assignment, sigma_adjunct, spectrum_uniqueness,
    support_uniqueness, universal_spectrum_map, AdjunctionError, DatumFailure, DatumKind, DatumText,
    LatticeMorphism, SpectrumDatum, SupportDatum, Uniqueness,
};
use latspec::decomposition::{decompose_semiprime, is_semiprime_indecomposable, DecompositionError};
use latspec::dot::{hasse_dot, specialization_dot};
use latspec::instances::{divisor_lattice, parse_semiring, semiring_ideal_lattice, InstanceError};
use latspec::lattice::{lattice_to_text, verify_axioms, FiniteIdealLattice};
use latspec::pointset::PointSet;
use latspec::report::Check;
use latspec::topology::{
    classify, hochster_dual, open_lattice, spec_star, verify_spectral, zariski_spectrum, ClassificationKind,
    ContinuousMap, FiniteSpace, SpectralReport,
};
use serde_json::{json, Value};

use crate::load::{self, Failure};
use crate::Format;

/// A rendered report and whether every check in it passed.
pub struct Report {
    pub body: String,
    pub ok: bool,
}

impl Report {
    fn json(value: Value, ok: bool) -> Self {
        let mut body = serde_json::to_string_pretty(&value).expect("JSON values serialize");
        body.push('\n');
        Report { body, ok }
    }

    fn text(body: String) -> Self {
        Report { body, ok: true }
    }
}

fn names(lattice: &FiniteIdealLattice, elems: impl IntoIterator<Item = usize>) -> Vec<String> {
    elems.into_iter().map(|a| lattice.name(a).to_string()).collect()
}

fn no_dot(command: &str, format: Format) -> Result<(), Failure> {
    match format {
        Format::Json => Ok(()),
        other => Err(Failure::Input(format!("`{command}` has no {} output", other.label()))),
    }
}

fn check_json<W>(check: &Check<W>, witness: impl FnOnce(&W) -> Value) -> Value {
    let mut entry = json!({ "status": check.status() });
    if let Some(note) = check.note() {
        entry["note"] = json!(note);
    }
    if let Some(w) = check.witness() {
        entry["witness"] = witness(w);
    }
    entry
}

fn spectral_json(space: &FiniteSpace, report: &SpectralReport) -> Value {
    json!({
        "t0": check_json(&report.t0, |&(a, b)| json!([space.name(a), space.name(b)])),
        "quasi_compact": check_json(&report.quasi_compact, |_| Value::Null),
        "compact_open_basis": check_json(&report.compact_open_basis, |_| Value::Null),
        "sober": check_json(&report.sober, |&s| json!(space.set_names(s))),
    })
}

fn space_json(space: &FiniteSpace) -> Value {
    let opens: Vec<Vec<String>> = space.opens().iter().map(|&o| space.set_names(o)).collect();
    json!({ "points": space.names(), "opens": opens })
}

fn lattice_json(lattice: &FiniteIdealLattice) -> Value {
    let covers: Vec<[&str; 2]> = lattice
        .covers()
        .into_iter()
        .map(|(a, b)| [lattice.name(a), lattice.name(b)])
        .collect();
    let product: Vec<Vec<&str>> = lattice
        .elements()
        .map(|a| lattice.elements().map(|b| lattice.name(lattice.mul(a, b))).collect())
        .collect();
    json!({
        "elements": lattice.names(),
        "top": lattice.name(lattice.top()),
        "bottom": lattice.name(lattice.bottom()),
        "covers": covers,
        "product": product,
    })
}

fn map_json(space: &FiniteSpace, target: &FiniteSpace, f: &ContinuousMap) -> Value {
    let pairs: Vec<[&str; 2]> = (0..space.len())
        .map(|x| [space.name(x), target.name(f.image(x))])
        .collect();
    json!(pairs)
}

fn uniqueness_json(space: &FiniteSpace, target: &FiniteSpace, u: &Uniqueness) -> (Value, bool) {
    match u {
        Uniqueness::Unique { checked } => (json!({ "status": "unique", "checked": checked.to_string() }), true),
        Uniqueness::Skipped { candidates } => (
            json!({ "status": "skipped", "candidates": candidates.to_string() }),
            true,
        ),
        Uniqueness::Violated { solutions } => {
            let maps: Vec<Value> = solutions.iter().map(|f| map_json(space, target, f)).collect();
            (json!({ "status": "violated", "solutions": maps }), false)
        }
    }
}

fn datum_failure(lattice: &FiniteIdealLattice, f: &DatumFailure) -> String {
    let n = |a: usize| lattice.name(a);
    match f {
        DatumFailure::WrongKind { element } => format!("the set assigned to `{}` has the wrong kind", n(*element)),
        DatumFailure::EmptyJoin => "the bottom is not sent to the empty set".to_string(),
        DatumFailure::Join { a, b } => format!("the join of `{}` and `{}` is not sent to the union", n(*a), n(*b)),
        DatumFailure::Top => "the top is not sent to the whole space".to_string(),
        DatumFailure::Product { a, b } => {
            format!("the product of `{}` and `{}` is not sent to the intersection", n(*a), n(*b))
        }
    }
}

fn adjunction_failure(lattice: &FiniteIdealLattice, e: AdjunctionError) -> Failure {
    match e {
        AdjunctionError::InvalidDatum(f) => Failure::Verification(format!("invalid datum: {}", datum_failure(lattice, &f))),
        e => Failure::Verification(e.to_string()),
    }
}

pub fn verify(path: &str, format: Format) -> Result<Report, Failure> {
    no_dot("verify", format)?;
    let data = load::lattice_data(path)?;
    let report = verify_axioms(&data);
    let axioms: Vec<Value> = report
        .entries
        .iter()
        .map(|(axiom, check)| {
            let mut entry = check_json(check, |w| {
                json!(w.iter().map(|&a| data.names()[a].as_str()).collect::<Vec<_>>())
            });
            entry["axiom"] = json!(axiom.label());
            entry["description"] = json!(axiom.description());
            entry
        })
        .collect();
    let ok = report.all_hold();
    Ok(Report::json(json!({ "axioms": axioms, "ok": ok }), ok))
}

pub fn spec(path: &str, format: Format) -> Result<Report, Failure> {
    let lattice = load::lattice(path)?;
    let space = zariski_spectrum(&lattice);
    if format == Format::Dot {
        return Ok(Report::text(specialization_dot(&space)));
    }
    no_dot("spec", format)?;
    let report = verify_spectral(&space);
    let ok = report.is_spectral();
    let mut value = space_json(&space);
    value["primes"] = json!(names(&lattice, lattice.spec_set().iter().copied()));
    value["spectral"] = spectral_json(&space, &report);
    Ok(Report::json(value, ok))
}

pub fn dual(path: &str, format: Format) -> Result<Report, Failure> {
    let space = load::space(path)?;
    let dual = hochster_dual(&space).map_err(|e| Failure::Verification(format!("{path}: {e}")))?;
    if format == Format::Dot {
        return Ok(Report::text(specialization_dot(&dual)));
    }
    no_dot("dual", format)?;
    Ok(Report::json(space_json(&dual), true))
}

pub fn radical(path: &str, elem: &str, format: Format) -> Result<Report, Failure> {
    no_dot("radical", format)?;
    let lattice = load::lattice(path)?;
    let a = load::element(&lattice, elem)?;
    let r = lattice.radical(a);
    let value = json!({
        "element": lattice.name(a),
        "radical": lattice.name(r),
        "semiprime": lattice.is_semiprime(a),
        "primes_above": names(&lattice, lattice.v_set(a)),
    });
    Ok(Report::json(value, true))
}

pub fn supp(path: &str, elem: &str, format: Format) -> Result<Report, Failure> {
    no_dot("supp", format)?;
    let lattice = load::lattice(path)?;
    let a = load::element(&lattice, elem)?;
    let value = json!({
        "element": lattice.name(a),
        "support": names(&lattice, lattice.d_set(a)),
    });
    Ok(Report::json(value, true))
}

pub fn classify_all(path: &str, format: Format) -> Result<Report, Failure> {
    no_dot("classify", format)?;
    let lattice = load::lattice(path)?;
    let zariski = zariski_spectrum(&lattice);
    let mut value = json!({});
    let mut ok = true;
    for kind in [ClassificationKind::Closed, ClassificationKind::Open, ClassificationKind::Support] {
        let table = classify(&lattice, kind);
        let r = &table.report;
        let set = |s: &PointSet| json!(zariski.set_names(*s));
        let pair = |&(a, b): &(usize, usize)| json!([lattice.name(a), lattice.name(b)]);
        let pairs: Vec<Value> = table
            .pairs
            .iter()
            .map(|&(a, s)| json!({ "element": lattice.name(a), "set": zariski.set_names(s) }))
            .collect();
        ok &= r.is_bijection();
        value[kind.label()] = json!({
            "bijection": r.is_bijection(),
            "order_reversing": kind.order_reversing(),
            "pairs": pairs,
            "checks": {
                "injective": check_json(&r.injective, pair),
                "surjective": check_json(&r.surjective, set),
                "left_inverse": check_json(&r.left_inverse, |&a| json!(lattice.name(a))),
                "right_inverse": check_json(&r.right_inverse, set),
                "monotone": check_json(&r.monotone, pair),
            },
        });
    }
    Ok(Report::json(value, ok))
}

pub fn decompose(path: &str, elem: &str, format: Format) -> Result<Report, Failure> {
    no_dot("decompose", format)?;
    let lattice = load::lattice(path)?;
    let a = load::element(&lattice, elem)?;
    let d = decompose_semiprime(&lattice, a).map_err(|e| match e {
        DecompositionError::NotSemiprime(_) => Failure::Verification(e.to_string()),
        e => Failure::Input(e.to_string()),
    })?;
    let spec = zariski_spectrum(&lattice);
    let blocks: Vec<Value> = d
        .blocks
        .iter()
        .map(|b| {
            json!({
                "element": lattice.name(b.element),
                "support": spec.set_names(b.support),
                "indecomposable": is_semiprime_indecomposable(&lattice, b.element),
            })
        })
        .collect();
    let value = json!({
        "target": lattice.name(d.target),
        "blocks": blocks,
        "join_is_target": d.join_is_target,
        "pairwise_meet": d.pairwise_meet.map(|m| lattice.name(m)),
        "meet_above_bottom": d.meet_above_bottom,
        "degenerate": d.degenerate,
    });
    Ok(Report::json(value, true))
}

pub fn openlattice(path: &str, format: Format) -> Result<Report, Failure> {
    let space = load::space(path)?;
    let ol = open_lattice(&space).map_err(|e| Failure::Verification(format!("{path}: {e}")))?;
    Ok(match format {
        Format::Dot => Report::text(hasse_dot(&ol.lattice)),
        Format::Text => Report::text(lattice_to_text(&ol.lattice)),
        Format::Json => Report::json(lattice_json(&ol.lattice), true),
    })
}

fn load_datum(path: &str, expected: DatumKind) -> Result<DatumText, Failure> {
    let text = load::read_source(path)?;
    let datum = parse_datum(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    if datum.kind != expected {
        let want = match expected {
            DatumKind::Spectrum => "delta",
            DatumKind::Support => "sigma",
        };
        return Err(Failure::Input(format!("{path}: expected a `{want}:` section")));
    }
    Ok(datum)
}

fn resolve(path: &str, datum: &DatumText, lattice: &FiniteIdealLattice, space: &FiniteSpace) -> Result<Vec<PointSet>, Failure> {
    resolve_assignment(datum, lattice, space).map_err(|e| Failure::Input(format!("{path}: {e}")))
}

/// Checks a spectrum datum on `(lattice, space)` against the adjunction:
/// the universal map, its uniqueness, and the round trip through both adjuncts.
pub fn adjoint_check(
    lattice_path: &str,
    space_path: &str,
    datum_path: &str,
    max_enum: u128,
    format: Format,
) -> Result<Report, Failure> {
    no_dot("adjoint-check", format)?;
    let lattice = load::lattice(lattice_path)?;
    let space = load::space(space_path)?;
    let datum = load_datum(datum_path, DatumKind::Spectrum)?;
    let delta = resolve(datum_path, &datum, &lattice, &space)?;
    let ol = open_lattice(&space).map_err(|e| Failure::Verification(format!("{space_path}: {e}")))?;
    let sd = SpectrumDatum::new(&lattice, &space, delta.clone());
    let f = universal_spectrum_map(&sd).map_err(|e| adjunction_failure(&lattice, e))?;
    let spectrum = zariski_spectrum(&lattice);
    let preimages = lattice.elements().all(|a| f.preimage(lattice.d_points(a)) == delta[a]);
    let uniqueness = spectrum_uniqueness(&sd, max_enum).map_err(|e| adjunction_failure(&lattice, e))?;
    let (uniqueness, unique_ok) = uniqueness_json(&space, &spectrum, &uniqueness);
    let phi_map = delta
        .iter()
        .map(|&u| ol.element_of(u).expect("a valid spectrum datum assigns opens"))
        .collect();
    let phi = LatticeMorphism::new(&lattice, &ol.lattice, phi_map);
    let sigma = sigma_adjunct(&phi, &ol, &space).map_err(|e| adjunction_failure(&lattice, e))?;
    let lambda = lambda_adjunct(&lattice, &ol, &space, &f).map_err(|e| adjunction_failure(&lattice, e))?;
    let sigma_ok = sigma == f;
    let lambda_ok = lambda.map() == phi.map();
    let ok = preimages && unique_ok && sigma_ok && lambda_ok;
    let value = json!({
        "map": map_json(&space, &spectrum, &f),
        "preimage_identity": preimages,
        "uniqueness": uniqueness,
        "sigma_of_datum_is_map": sigma_ok,
        "lambda_of_map_is_datum": lambda_ok,
        "ok": ok,
    });
    Ok(Report::json(value, ok))
}

pub fn classifying(datum_path: &str, max_enum: u128, format: Format) -> Result<Report, Failure> {
    no_dot("classifying", format)?;
    let datum = load_datum(datum_path, DatumKind::Support)?;
    let missing = |key: &str| Failure::Input(format!("{datum_path}: missing `{key}:` path"));
    let lattice_path = load::relative_to(datum_path, datum.lattice_path.as_deref().ok_or_else(|| missing("lattice"))?);
    let space_path = load::relative_to(datum_path, datum.space_path.as_deref().ok_or_else(|| missing("space"))?);
    let lattice = load::lattice(&lattice_path)?;
    let space = load::space(&space_path)?;
    let sigma = resolve(datum_path, &datum, &lattice, &space)?;
    let sd = SupportDatum::new(&lattice, &space, sigma);
    let report = is_classifying(&sd).map_err(|e| adjunction_failure(&lattice, e))?;
    let uniqueness = support_uniqueness(&sd, max_enum).map_err(|e| adjunction_failure(&lattice, e))?;
    let star = spec_star(&lattice);
    let (uniqueness, _) = uniqueness_json(&space, &star, &uniqueness);
    let ok = report.is_classifying();
    let value = json!({
        "classifying": ok,
        "homeomorphism": report.homeomorphism,
        "assignments_bijective": report.assignments.is_bijection(),
        "criteria_agree": report.criteria_agree(),
        "map": map_json(&space, &star, &report.map),
        "uniqueness": uniqueness,
    });
    Ok(Report::json(value, ok))
}

fn emit_lattice(lattice: &FiniteIdealLattice, format: Format) -> Report {
    match format {
        Format::Text => Report::text(lattice_to_text(lattice)),
        Format::Dot => Report::text(hasse_dot(lattice)),
        Format::Json => Report::json(lattice_json(lattice), true),
    }
}

pub fn gen_divisor(n: u64, format: Format) -> Result<Report, Failure> {
    let lattice = divisor_lattice(n).map_err(|e| Failure::Input(e.to_string()))?;
    Ok(emit_lattice(&lattice, format))
}

pub fn gen_semiring(path: &str, format: Format) -> Result<Report, Failure> {
    let text = load::read_source(path)?;
    let semiring = parse_semiring(&text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;
    let ideals = semiring_ideal_lattice(&semiring).map_err(|e| match e {
        InstanceError::Lattice(_) => Failure::Verification(format!("{path}: {e}")),
        e => Failure::Input(format!("{path}: {e}")),
    })?;
    Ok(emit_lattice(&ideals.lattice, format))
}
