use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use rlse_core::algebra::{
    check_boolean_ring, check_characteristic_two, check_meet_semilattice, check_near_rlse, check_ortholattice,
    check_orthomodular, check_rlse, check_specific, check_w_axioms, check_w_order_axioms, check_weakly_associative,
    check_weakly_distributive, lattice_law, ring_law,
};
use rlse_core::embeddability::{classify, embeddable_set, embeddable_set_two_valued, EmbeddabilityReport, Mode};
use rlse_core::events::check_q_structure;
use rlse_core::transforms::{
    check_lattice_roundtrip, check_roundtrips, is_boolean_algebra, lattice_of_ring, ring_of_lattice,
};
use rlse_core::{catalog, EventFamily, Verdict, Witness};
use serde::Serialize;
use serde_json::json;

use crate::format::{parse_algebra, parse_events, write_algebra, write_events, write_oml, write_rlse, AlgebraFile};
use crate::report::{self, Report, EXIT_FAIL, EXIT_PASS};
use crate::{CatalogName, CliError, Direction};

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

pub fn load_algebra(path: &Path) -> Result<AlgebraFile, CliError> {
    parse_algebra(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

pub fn load_events(path: &Path) -> Result<EventFamily, CliError> {
    parse_events(&read(path)?).map_err(|source| CliError::Parse { path: path.to_path_buf(), source })
}

pub const RLSE_CHECKS: [&str; 11] = [
    "meet-semilattice",
    "rlse",
    "near-rlse",
    "specific",
    "weakly-distributive",
    "weakly-associative",
    "char2",
    "w-axioms",
    "w-order",
    "boolean-ring",
    "roundtrip",
];
pub const DEFAULT_RLSE_CHECKS: [&str; 7] =
    ["rlse", "specific", "weakly-distributive", "weakly-associative", "char2", "w-axioms", "boolean-ring"];
pub const OML_CHECKS: [&str; 4] = ["ortholattice", "orthomodular", "boolean-algebra", "roundtrip"];

fn named_check(file: &AlgebraFile, name: &str) -> Option<Verdict> {
    match file {
        AlgebraFile::Rlse(a) => Some(match name {
            "meet-semilattice" => check_meet_semilattice(a),
            "rlse" => check_rlse(a),
            "near-rlse" => check_near_rlse(a),
            "specific" => check_specific(a),
            "weakly-distributive" => check_weakly_distributive(a),
            "weakly-associative" => check_weakly_associative(a),
            "char2" => check_characteristic_two(a),
            "w-axioms" => check_w_axioms(a),
            "w-order" => check_w_order_axioms(a),
            "boolean-ring" => check_boolean_ring(a),
            "roundtrip" => check_roundtrips(a),
            law => ring_law(law)?.check(a),
        }),
        AlgebraFile::Oml(l) => Some(match name {
            "ortholattice" => check_ortholattice(l),
            "orthomodular" => check_orthomodular(l),
            "boolean-algebra" => is_boolean_algebra(l),
            "roundtrip" => check_lattice_roundtrip(l),
            law => lattice_law(law)?.check(l),
        }),
    }
}

fn all_failures(file: &AlgebraFile, law: &str) -> Option<Vec<Witness>> {
    match file {
        AlgebraFile::Rlse(a) => ring_law(law).map(|l| l.failures(a)),
        AlgebraFile::Oml(l) => lattice_law(law).map(|law| law.failures(l)),
    }
}

fn labeller(file: &AlgebraFile) -> impl Fn(usize) -> String + '_ {
    move |x| match file {
        AlgebraFile::Rlse(a) => a.label(x),
        AlgebraFile::Oml(l) => l.label(x),
    }
}

#[derive(Serialize)]
struct CheckEntry {
    check: String,
    verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    all_failures: Option<Vec<Witness>>,
}

pub fn check(path: &Path, laws: &[String], all: bool) -> Result<Report, CliError> {
    let file = load_algebra(path)?;
    let names: Vec<String> = if laws.is_empty() {
        let defaults: &[&str] = match file {
            AlgebraFile::Rlse(_) => &DEFAULT_RLSE_CHECKS,
            AlgebraFile::Oml(_) => &OML_CHECKS,
        };
        defaults.iter().map(|s| s.to_string()).collect()
    } else {
        laws.to_vec()
    };
    // resolve every name before running anything
    let known = |n: &str| match file {
        AlgebraFile::Rlse(_) => RLSE_CHECKS.contains(&n) || ring_law(n).is_some(),
        AlgebraFile::Oml(_) => OML_CHECKS.contains(&n) || lattice_law(n).is_some(),
    };
    if let Some(bad) = names.iter().find(|n| !known(n)) {
        return Err(CliError::Usage(format!("unknown check {bad:?} for an {} file", file.kind())));
    }
    let label = labeller(&file);
    let mut text = format!("check {}: {}, {} elements\n", path.display(), file.kind(), file.size());
    let mut entries = Vec::new();
    for name in &names {
        let verdict = named_check(&file, name).expect("names resolved above");
        text.push_str(&report::verdict_line(name, &verdict, &label));
        text.push('\n');
        let failures = (all && !verdict.passed).then(|| all_failures(&file, &verdict.law)).flatten();
        if let Some(ws) = &failures {
            for w in ws.iter().skip(1) {
                text.push_str(&format!("     also {}\n", report::witness(&verdict.law, w, &label)));
            }
        }
        entries.push(CheckEntry { check: name.clone(), verdict, all_failures: failures });
    }
    let failed: Vec<&str> = entries.iter().filter(|e| !e.verdict.passed).map(|e| e.check.as_str()).collect();
    let passed = failed.is_empty();
    text.push_str(&format!(
        "result={} checks={} passed={} failed={}",
        if passed { "pass" } else { "fail" },
        entries.len(),
        entries.len() - failed.len(),
        failed.len()
    ));
    if !passed {
        text.push_str(&format!(" failed_checks={}", failed.join(",")));
    }
    text.push('\n');
    let json = json!({
        "command": "check",
        "path": path.display().to_string(),
        "kind": file.kind(),
        "size": file.size(),
        "checks": entries,
        "passed": passed,
    });
    Ok(Report::new(text, json, if passed { EXIT_PASS } else { EXIT_FAIL }))
}

fn emit(content: String, output: Option<&Path>, json: serde_json::Value) -> Result<Report, CliError> {
    match output {
        None => Ok(Report::new(content, json, EXIT_PASS)),
        Some(out) => {
            std::fs::write(out, &content).map_err(|source| CliError::Io { path: out.to_path_buf(), source })?;
            Ok(Report::new(format!("result=ok wrote={}\n", out.display()), json, EXIT_PASS))
        }
    }
}

pub fn transform(direction: Direction, path: &Path, output: Option<&PathBuf>) -> Result<Report, CliError> {
    let file = load_algebra(path)?;
    let produced = match (direction, &file) {
        (Direction::LOfR, AlgebraFile::Rlse(a)) => AlgebraFile::Oml(lattice_of_ring(a)?),
        (Direction::ROfL, AlgebraFile::Oml(l)) => AlgebraFile::Rlse(ring_of_lattice(l)?),
        (Direction::LOfR, _) => return Err(CliError::Usage("l-of-r expects an rlse file".into())),
        (Direction::ROfL, _) => return Err(CliError::Usage("r-of-l expects an oml file".into())),
    };
    let content = write_algebra(&produced);
    let json = json!({ "command": "transform", "kind": produced.kind(), "content": content });
    emit(content, output.map(PathBuf::as_path), json)
}

pub fn catalog(name: CatalogName, param: Option<&str>, output: Option<&PathBuf>) -> Result<Report, CliError> {
    let number = |what: &str| -> Result<usize, CliError> {
        let p = param.ok_or_else(|| CliError::Usage(format!("catalog {what} needs a numeric parameter")))?;
        p.parse().map_err(|_| CliError::Usage(format!("not a number: {p:?}")))
    };
    let no_param = || match param {
        Some(p) => Err(CliError::Usage(format!("unexpected parameter {p:?}"))),
        None => Ok(()),
    };
    let content = match name {
        CatalogName::BooleanRing => write_rlse(&catalog::boolean_ring(number("boolean-ring")? as u32)?),
        CatalogName::BooleanLattice => write_oml(&catalog::boolean_lattice(number("boolean-lattice")? as u32)?),
        CatalogName::Mo => write_oml(&catalog::mo_lattice(number("mo")?)?),
        CatalogName::SpecificMo => write_rlse(&catalog::specific_rlse_mo(number("specific-mo")?)?),
        CatalogName::WeaklyAssocMo2 => {
            let p = param.ok_or_else(|| CliError::Usage("weakly-assoc-mo2 needs an element of MO2".into()))?;
            let mo2 = catalog::mo_lattice(2)?;
            let c = match p.parse::<usize>() {
                Ok(i) => i,
                Err(_) => (0..mo2.size())
                    .find(|&i| mo2.label(i) == p)
                    .ok_or_else(|| CliError::Usage(format!("no element {p:?} in MO2")))?,
            };
            write_rlse(&catalog::weakly_associative_mo2(c)?)
        }
        CatalogName::Hexagon => {
            no_param()?;
            write_oml(&catalog::hexagon_lattice()?)
        }
        CatalogName::ConcreteMo2 => {
            no_param()?;
            write_events(&catalog::concrete_mo2_events()?)
        }
        CatalogName::BooleanEvents => write_events(&catalog::boolean_events(number("boolean-events")?)?),
        CatalogName::FourElementEvents => {
            no_param()?;
            write_events(&catalog::four_element_events()?)
        }
    };
    let json = json!({ "command": "catalog", "content": content });
    emit(content, output.map(PathBuf::as_path), json)
}

fn subset_of(fam: &EventFamily, names: &[String]) -> Result<Vec<usize>, CliError> {
    if names.is_empty() {
        return Ok((0..fam.len()).collect());
    }
    names
        .iter()
        .map(|n| fam.position_by_name(n).ok_or_else(|| CliError::Usage(format!("no event named {n:?}"))))
        .collect()
}

#[derive(Serialize)]
struct NamedPair {
    a: Vec<String>,
    b: Vec<String>,
}

pub fn embeddable(events_path: &Path, ambient_path: Option<&PathBuf>, subset: &[String]) -> Result<Report, CliError> {
    let events = load_events(events_path)?;
    let chosen = subset_of(&events, subset)?;
    let (report, name_of): (EmbeddabilityReport, BTreeMap<usize, String>) = match ambient_path {
        Some(amb) => {
            let ambient = load_events(amb)?;
            let mut positions = Vec::new();
            let mut name_of = BTreeMap::new();
            for &i in &chosen {
                let pos = ambient
                    .position(events.event(i))
                    .ok_or_else(|| rlse_core::Error::NotMember(format!("{} = {}", events.name(i), events.event(i))))?;
                positions.push(pos);
                name_of.insert(pos, events.name(i).to_string());
            }
            (embeddable_set(&ambient, &positions)?, name_of)
        }
        None => {
            let list: Vec<_> = chosen.iter().map(|&i| events.event(i).clone()).collect();
            let name_of = chosen.iter().enumerate().map(|(k, &i)| (k, events.name(i).to_string())).collect();
            (embeddable_set_two_valued(&list)?, name_of)
        }
    };
    let label = classify(&report);
    let names = |ids: &[usize]| ids.iter().map(|i| name_of[i].clone()).collect::<Vec<_>>();
    let mut text = format!("embeddable {}", events_path.display());
    match ambient_path {
        Some(amb) => text.push_str(&format!(" (ambient {}, mode {})\n", amb.display(), report.mode)),
        None => text.push_str(&format!(" (mode {})\n", report.mode)),
    }
    let chosen_names: Vec<&str> = chosen.iter().map(|&i| events.name(i)).collect();
    text.push_str(&format!("subset: {}\n", chosen_names.join(", ")));
    text.push_str(&format!("verdict: {label}\n"));
    let mut failing_names = None;
    if let Some(fp) = &report.failing_pair {
        let (a, b) = (names(&fp.a), names(&fp.b));
        text.push_str(&format!(
            "failing at k = {}: A = {{{}}}, B = {{{}}}\n",
            report.k_reached,
            a.join(", "),
            b.join(", ")
        ));
        let (left, right) = match report.mode {
            Mode::ExplicitAmbient => ("∏A ⊙ (1 − ∏B)", "∏A − ∏A ⊙ ∏B"),
            Mode::TwoValuedConcrete => ("∏A ⊙ ∏B", "∏(A ∪ B)"),
        };
        text.push_str(&format!("  {left} = {}\n", report::vector(&fp.lhs)));
        text.push_str(&format!("  {right} = {}\n", report::vector(&fp.rhs)));
        failing_names = Some(NamedPair { a, b });
    }
    text.push_str(&format!(
        "result={} mode={} k={}\n",
        if report.embeddable { "embeddable" } else { "non-embeddable" },
        report.mode,
        report.k_reached
    ));
    let json = json!({
        "command": "embeddable",
        "events": events_path.display().to_string(),
        "ambient": ambient_path.map(|p| p.display().to_string()),
        "subset": chosen_names,
        "classification": label,
        "report": report,
        "failing_names": failing_names,
    });
    Ok(Report::new(text, json, if report.embeddable { EXIT_PASS } else { EXIT_FAIL }))
}

pub fn qcheck(path: &Path) -> Result<Report, CliError> {
    let fam = load_events(path)?;
    let r = check_q_structure(&fam)?;
    let label = |x: usize| fam.name(x).to_string();
    let mut text = format!("qcheck {}: {} events, |S| = {}\n", path.display(), fam.len(), fam.space().len());
    for (name, v) in [("near-rlse", &r.near_rlse), ("specific", &r.specific), ("gfe", &r.gfe)] {
        text.push_str(&report::verdict_line(name, v, &label));
        text.push('\n');
    }
    let rows: [(&str, bool, Option<&Verdict>); 5] = [
        ("(a) two-valued", r.two_valued, None),
        ("(b) R3", r.r3.passed, Some(&r.r3)),
        ("(c) R4", r.r4.passed, Some(&r.r4)),
        ("(d) rlse", r.rlse.passed, Some(&r.rlse)),
        ("(e) boolean-ring", r.boolean_ring.passed, Some(&r.boolean_ring)),
    ];
    for (name, holds, v) in rows {
        text.push_str(&format!("{name:<17} {holds}"));
        if let Some(w) = v.and_then(|v| v.witness.as_ref().map(|w| (v, w))) {
            text.push_str(&format!("  {}", report::witness(&w.0.law, w.1, &label)));
        }
        text.push('\n');
    }
    let equivalence = match (r.equivalence_holds(), r.conditions()[0]) {
        (true, true) => "all-true",
        (true, false) => "all-false",
        (false, _) => "broken",
    };
    let ok = r.equivalence_holds() && r.structure_holds();
    text.push_str(&format!(
        "result={} equivalence={equivalence} structure={}\n",
        if ok { "pass" } else { "fail" },
        if r.structure_holds() { "pass" } else { "fail" }
    ));
    let json = json!({
        "command": "qcheck",
        "path": path.display().to_string(),
        "report": r,
        "conditions": r.conditions(),
        "equivalence": equivalence,
        "passed": ok,
    });
    Ok(Report::new(text, json, if ok { EXIT_PASS } else { EXIT_FAIL }))
}
