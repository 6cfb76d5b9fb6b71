//! The subcommands, as pure functions from arguments to a [`Report`].

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigUint;
use segre_core::betti::{diagram_skeleton, is_pure_resolution};
use segre_core::combinatorics::{choose, multinomial, Spec};
use segre_core::newcomb::{
    compute, cross_check, is_gorenstein, join, newcomb_dillon_roselle, regularity,
    top_coefficient, Algorithm,
};
use segre_core::toric::{
    check_partition, facets, groebner_generators, minimal_primes, Face,
};
use segre_core::Error;
use serde_json::{json, Map, Value};

use crate::envelope::OutputEnvelope;
use crate::error::CliError;
use crate::format::{
    betti_to_json, entry_label, naturals_to_json, points_to_json, points_to_line, polynomial_to_json,
};

/// Rows for `--format csv`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<&'static str>,
    pub rows: Vec<Vec<String>>,
}

/// Everything a command produces, in each output format.
#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub envelope: OutputEnvelope,
    pub text: String,
    pub table: Table,
    /// An internal cross-check disagreed; the process exits with 2.
    pub check_failed: bool,
}

impl Report {
    fn new(command: &str, spec: &Spec, payload: Value, algorithms: &[&str], text: String, table: Table) -> Self {
        Report {
            envelope: OutputEnvelope::new(
                command,
                spec.parts(),
                payload,
                algorithms.iter().map(|a| a.to_string()).collect(),
            ),
            text,
            table,
            check_failed: false,
        }
    }
}

/// Parses `b1,b2,...`; zero parts are rejected here rather than normalized.
pub fn parse_spec(input: &str) -> Result<Spec, CliError> {
    let fail = |reason: String| CliError::Spec { input: input.into(), reason };
    let parts = input
        .split(',')
        .map(|p| {
            let p = p.trim();
            match u32::from_str(p) {
                Ok(0) => Err(fail("parts must be positive, found 0".into())),
                Ok(b) => Ok(b),
                Err(_) => Err(fail(format!("{p:?} is not a positive integer"))),
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Spec::new(parts).map_err(|e| fail(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AlgorithmChoice {
    One(Algorithm),
    All,
}

impl FromStr for AlgorithmChoice {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if s == "all" {
            return Ok(AlgorithmChoice::All);
        }
        Algorithm::from_str(s).map(AlgorithmChoice::One).map_err(|_| {
            let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            format!("expected one of {} or all", names.join(", "))
        })
    }
}

fn coefficient_rows<'a>(algorithm: &str, values: &'a [BigUint]) -> impl Iterator<Item = Vec<String>> + 'a {
    let algorithm = algorithm.to_string();
    values
        .iter()
        .enumerate()
        .map(move |(k, v)| vec![algorithm.clone(), k.to_string(), v.to_string()])
}

pub fn newcomb(spec: &Spec, choice: AlgorithmChoice, budget: u64) -> Result<Report, CliError> {
    let header = vec!["algorithm", "k", "coefficient"];
    match choice {
        AlgorithmChoice::One(alg) => {
            let v = compute(spec, alg, budget)?;
            let payload = json!({
                "algorithm": alg.name(),
                "h": naturals_to_json(&v.values),
                "polynomial": polynomial_to_json(&v.as_polynomial()),
            });
            let text = format!("{spec} {alg}: {}\nh(t) = {}\n", join(&v.values), v.as_polynomial());
            let rows = coefficient_rows(alg.name(), &v.values).collect();
            Ok(Report::new("newcomb", spec, payload, &[alg.name()], text, Table { header, rows }))
        }
        AlgorithmChoice::All => {
            let agreement = cross_check(spec, &Algorithm::ALL, budget)?;
            let agree = agreement.agree();
            let mut vectors = Map::new();
            let mut text = String::new();
            let mut rows = Vec::new();
            for v in &agreement.vectors {
                vectors.insert(v.algorithm.name().into(), naturals_to_json(&v.values));
                let _ = writeln!(text, "{:>15}: {}", v.algorithm.name(), join(&v.values));
                rows.extend(coefficient_rows(v.algorithm.name(), &v.values));
            }
            let h = if agree { naturals_to_json(&agreement.vectors[0].values) } else { Value::Null };
            let _ = writeln!(text, "agree: {agree}");
            let payload = json!({ "agree": agree, "h": h, "vectors": vectors });
            let names: Vec<&str> = Algorithm::ALL.iter().map(|a| a.name()).collect();
            let mut report = Report::new("newcomb", spec, payload, &names, text, Table { header, rows });
            report.check_failed = !agree;
            Ok(report)
        }
    }
}

/// `H(l) = prod_i C(b_i + l, b_i)` for `l = 0..=upto`.
pub fn hilbert(spec: &Spec, upto: u64) -> Result<Report, CliError> {
    let values: Vec<BigUint> = (0..=upto)
        .map(|l| spec.parts().iter().map(|&b| choose(u64::from(b) + l, u64::from(b))).product())
        .collect();
    let payload = json!({ "upto": upto, "values": naturals_to_json(&values) });
    let text = format!("H(0..={upto}) = {}\n", join(&values));
    let rows = values.iter().enumerate().map(|(l, v)| vec![l.to_string(), v.to_string()]).collect();
    Ok(Report::new("hilbert", spec, payload, &["hilbert-function"], text, Table { header: vec!["l", "H"], rows }))
}

pub fn series(spec: &Spec) -> Result<Report, CliError> {
    let v = newcomb_dillon_roselle(spec);
    let series = v.hilbert_series();
    let hp = series.hilbert_polynomial()?;
    let degree = multinomial(spec);
    let h1: BigUint = v.values.iter().sum();
    let fields: Vec<(&'static str, String)> = vec![
        ("h", join(&v.values)),
        ("pole_order", series.pole_order().to_string()),
        ("degree", degree.to_string()),
        ("gorenstein", is_gorenstein(spec).to_string()),
        ("regularity", regularity(spec).to_string()),
        ("top_coefficient", top_coefficient(spec).to_string()),
        ("codim", spec.codim().to_string()),
        ("hilbert_polynomial", hp.polynomial.display_in("l").to_string()),
        ("exact_from", hp.exact_from.to_string()),
    ];
    let payload = json!({
        "h": naturals_to_json(&v.values),
        "polynomial": polynomial_to_json(&v.as_polynomial()),
        "pole_order": series.pole_order(),
        "degree": degree.to_string(),
        "gorenstein": is_gorenstein(spec),
        "regularity": regularity(spec),
        "top_coefficient": top_coefficient(spec).to_string(),
        "codim": spec.codim().to_string(),
        "hilbert_polynomial": {
            "coefficients": polynomial_to_json(&hp.polynomial),
            "exact_from": hp.exact_from,
        },
    });
    let mut text = format!("{spec}: ({}) / (1 - t)^{}\n", v.as_polynomial(), series.pole_order());
    for (k, val) in &fields {
        let _ = writeln!(text, "{k:>18}: {val}");
    }
    let rows = fields.into_iter().map(|(k, v)| vec![k.to_string(), v]).collect();
    let mut report = Report::new(
        "series",
        spec,
        payload,
        &["dillon-roselle", "hilbert-function"],
        text,
        Table { header: vec!["field", "value"], rows },
    );
    report.check_failed = h1 != degree;
    Ok(report)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ToricQuery {
    Facets,
    Groebner,
    Primes,
    PartitionCheck,
}

fn within_budget(required: &BigUint, budget: u64) -> Result<(), CliError> {
    if *required > BigUint::from(budget) {
        return Err(Error::BudgetExceeded { required: required.to_string(), budget }.into());
    }
    Ok(())
}

fn listing(label: &'static str, lines: impl Iterator<Item = String>) -> (Vec<Vec<String>>, String) {
    let mut rows = Vec::new();
    let mut text = String::new();
    for (i, line) in lines.enumerate() {
        let _ = writeln!(text, "{line}");
        rows.push(vec![label.to_string(), i.to_string(), line]);
    }
    (rows, text)
}

pub fn toric(spec: &Spec, query: ToricQuery, full: bool, budget: u64) -> Result<Report, CliError> {
    let header = vec!["object", "index", "points"];
    match query {
        ToricQuery::Facets => {
            let count = multinomial(spec);
            let mut payload = json!({ "count": count.to_string() });
            let mut text = format!("{spec}: {count} facets\n");
            let mut rows = Vec::new();
            if full {
                within_budget(&count, budget)?;
                let all: Vec<Face> = facets(spec).collect();
                payload["facets"] = Value::Array(all.iter().map(|f| points_to_json(f.points())).collect());
                let (r, t) = listing("facet", all.iter().map(|f| points_to_line(f.points())));
                rows = r;
                text.push_str(&t);
            }
            Ok(Report::new("toric", spec, payload, &["lattice-paths"], text, Table { header, rows }))
        }
        ToricQuery::Groebner => {
            let p = spec.point_count();
            within_budget(&(&p * &p), budget)?;
            let gens = groebner_generators(spec);
            let mut payload = json!({ "count": gens.len().to_string() });
            let mut text = format!("{spec}: {} Groebner generators\n", gens.len());
            let mut rows = Vec::new();
            if full {
                payload["binomials"] = Value::Array(
                    gens.iter()
                        .map(|g| {
                            json!({
                                "lead": points_to_json(&[g.lead.0.clone(), g.lead.1.clone()]),
                                "trail": points_to_json(&[g.trail.0.clone(), g.trail.1.clone()]),
                            })
                        })
                        .collect(),
                );
                for (i, g) in gens.iter().enumerate() {
                    let _ = writeln!(text, "{g}");
                    let lead = points_to_line(&[g.lead.0.clone(), g.lead.1.clone()]);
                    let trail = points_to_line(&[g.trail.0.clone(), g.trail.1.clone()]);
                    rows.push(vec!["lead".into(), i.to_string(), lead]);
                    rows.push(vec!["trail".into(), i.to_string(), trail]);
                }
            }
            Ok(Report::new("toric", spec, payload, &["sorted-monomials"], text, Table { header, rows }))
        }
        ToricQuery::Primes => {
            let count = multinomial(spec);
            let codim = spec.codim();
            let mut payload = json!({ "count": count.to_string(), "cardinality": codim.to_string() });
            let mut text = format!("{spec}: {count} minimal primes, each on {codim} variables\n");
            let mut rows = Vec::new();
            if full {
                within_budget(&count, budget)?;
                let primes: Vec<_> = minimal_primes(spec).collect();
                payload["primes"] = Value::Array(primes.iter().map(|p| points_to_json(p)).collect());
                let (r, t) = listing("prime", primes.iter().map(|p| points_to_line(p)));
                rows = r;
                text.push_str(&t);
            }
            Ok(Report::new("toric", spec, payload, &["lattice-paths"], text, Table { header, rows }))
        }
        ToricQuery::PartitionCheck => {
            let report = check_partition(spec, budget)?;
            let h = newcomb_dillon_roselle(spec).values;
            let matches = report.descent_polynomial == h;
            let passed = report.passed() && matches;
            let counterexample = report.counterexample.as_ref();
            let payload = json!({
                "passed": passed,
                "faces": report.faces.to_string(),
                "facets": report.facets.to_string(),
                "interval_sizes": report.interval_sizes.to_string(),
                "descent_polynomial": naturals_to_json(&report.descent_polynomial),
                "h": naturals_to_json(&h),
                "counterexample": counterexample.map(|f| points_to_json(f.points())),
            });
            let mut text = format!(
                "{spec}: {} faces, {} facets, interval sizes sum to {}\n\
                 descent polynomial {} vs h-vector {}\npartition: {}\n",
                report.faces,
                report.facets,
                report.interval_sizes,
                join(&report.descent_polynomial),
                join(&h),
                if passed { "pass" } else { "FAIL" },
            );
            if let Some(f) = counterexample {
                let _ = writeln!(text, "counterexample: {f}");
            }
            let rows = vec![
                vec!["passed".into(), "0".into(), passed.to_string()],
                vec!["faces".into(), "0".into(), report.faces.to_string()],
                vec!["counterexample".into(), "0".into(), counterexample.map(|f| points_to_line(f.points())).unwrap_or_default()],
            ];
            let mut out = Report::new(
                "toric",
                spec,
                payload,
                &["interval-partition", "dillon-roselle"],
                text,
                Table { header: vec!["field", "index", "value"], rows },
            );
            out.check_failed = !passed;
            Ok(out)
        }
    }
}

pub fn betti(spec: &Spec) -> Result<Report, CliError> {
    let sk = diagram_skeleton(spec)?;
    let pure = is_pure_resolution(spec)?;
    let c = &sk.corner;
    let payload = json!({
        "strand": naturals_to_json(&sk.beta),
        "corner": { "column": c.column, "row": c.row, "value": c.value.to_string() },
        "pure": pure,
        "diagram": betti_to_json(&sk.diagram),
    });
    let text = format!(
        "{spec}: strand {}\ncorner {} at column {}, row {}\npure: {pure}\n\n{}",
        join(&sk.beta),
        c.value,
        c.column,
        c.row,
        sk.diagram
    );
    let rows = sk
        .diagram
        .rows()
        .zip(&sk.diagram.entries)
        .flat_map(|(r, row)| {
            row.iter().enumerate().map(move |(col, e)| vec![r.to_string(), col.to_string(), entry_label(e)])
        })
        .collect();
    Ok(Report::new(
        "betti",
        spec,
        payload,
        &["betti-strand", "dillon-roselle"],
        text,
        Table { header: vec!["row", "column", "entry"], rows },
    ))
}
