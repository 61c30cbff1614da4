use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::Serialize;

use ladder_core::closed_form::{kirchhoff_index, matrix, tree_count};
use ladder_core::export::{
    format_rational, matrix_to_csv, matrix_to_json, scalar_to_csv, scalar_to_json,
};
use ladder_core::graph::{build_graph, laplacian_matrix};
use ladder_core::linalg::{kirchhoff_from_lplus, matrix_tree_count, pinv_laplacian};
use ladder_core::sequences::{sweep_identity, IdentityId};
use ladder_core::verify::{verify_spec, DiffRecord, Failure, SpecReport, CHECKS};
use ladder_core::{Family, FamilySpec, MatrixKind};

use crate::{
    FamilyArg, Format, GenerateArgs, IdentityArgs, Outcome, RangeArgs, Target, UsageError,
};

type CmdResult = Result<Outcome, UsageError>;

fn usage(e: impl ToString) -> UsageError {
    UsageError(e.to_string())
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("report serializes");
    s.push('\n');
    s
}

fn family_of(arg: FamilyArg) -> Option<Family> {
    match arg {
        FamilyArg::Ladder => Some(Family::Ladder),
        FamilyArg::Cl => Some(Family::CircularLadder),
        FamilyArg::Mobius => Some(Family::Mobius),
        FamilyArg::All => None,
    }
}

/// Instances in ascending `n`, families in canonical order within each `n`.
/// With `all`, values of `n` below a family's minimum are skipped for that
/// family; with a single family they are a usage error.
fn instances(arg: FamilyArg, ns: &RangeInclusive<usize>) -> Result<Vec<FamilySpec>, UsageError> {
    let specs: Vec<FamilySpec> = match family_of(arg) {
        Some(family) => ns
            .clone()
            .map(|n| FamilySpec::new(family, n).map_err(usage))
            .collect::<Result<_, _>>()?,
        None => ns
            .clone()
            .flat_map(|n| {
                Family::ALL
                    .into_iter()
                    .filter_map(move |f| FamilySpec::new(f, n).ok())
            })
            .collect(),
    };
    if specs.is_empty() {
        return Err(usage(format!(
            "no family admits n in {}..{}",
            ns.start(),
            ns.end()
        )));
    }
    Ok(specs)
}

fn failure_lines(failures: impl Iterator<Item = Failure>) -> Vec<String> {
    failures
        .map(|f| json_line(&f).trim_end().to_owned())
        .collect()
}

fn finish(text: String, failures: Vec<String>) -> CmdResult {
    Ok(if failures.is_empty() {
        Outcome::Pass(text)
    } else {
        Outcome::Fail(text, failures)
    })
}

pub fn generate(args: &GenerateArgs) -> CmdResult {
    let family = family_of(args.family).ok_or_else(|| usage("generate needs a single family"))?;
    let spec = FamilySpec::new(family, args.n).map_err(usage)?;
    let format = args.output.format;
    if args.bare && format != Format::Csv {
        return Err(usage("--bare applies to CSV output only"));
    }
    let kind = match args.matrix {
        Target::Qplus => MatrixKind::QPlus,
        Target::Lplus => MatrixKind::LPlus,
        Target::Resistance => MatrixKind::Resistance,
        Target::Incidence => MatrixKind::Incidence,
        Target::Laplacian => MatrixKind::Laplacian,
        Target::Kirchhoff | Target::Trees => {
            let (name, value) = if args.matrix == Target::Kirchhoff {
                ("kirchhoff", kirchhoff_index(&spec).map_err(usage)?)
            } else {
                ("trees", tree_count(&spec).map_err(usage)?.into())
            };
            let text = match (format, args.bare) {
                (Format::Json, _) => scalar_to_json(&spec, name, &value),
                (Format::Csv, false) => scalar_to_csv(&spec, name, &value),
                (Format::Csv, true) => format!("{}\n", format_rational(&value)),
            };
            return finish(text, Vec::new());
        }
        Target::Edges => {
            let g = build_graph(&spec).map_err(usage)?;
            let text = match format {
                Format::Json => format!("{}\n", g.to_edge_list_json()),
                Format::Csv => {
                    let list = g.to_edge_list();
                    let header = if args.bare { "" } else { "edge,tail,head\n" };
                    let rows: String = list
                        .edges
                        .iter()
                        .map(|e| format!("{},{},{}\n", e.id, e.tail, e.head))
                        .collect();
                    format!("{header}{rows}")
                }
            };
            return finish(text, Vec::new());
        }
    };
    let result = matrix(&spec, kind).map_err(usage)?;
    let text = match format {
        Format::Json => matrix_to_json(&result),
        Format::Csv => matrix_to_csv(&result.matrix, args.bare),
    };
    finish(text, Vec::new())
}

pub fn verify(args: &RangeArgs) -> CmdResult {
    let specs = instances(args.family, &args.n)?;
    let reports: Vec<SpecReport> = specs
        .par_iter()
        .map(|s| verify_spec(s).expect("instances are validated"))
        .collect();
    let text = match args.output.format {
        Format::Json => reports.iter().map(json_line).collect(),
        Format::Csv => {
            let mut out = format!("family,n,passed,{}\n", CHECKS.join(","));
            for r in &reports {
                let cells: Vec<&str> = r
                    .checks
                    .iter()
                    .map(|c| if c.passed { "pass" } else { "fail" })
                    .collect();
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    r.family,
                    r.n,
                    r.passed,
                    cells.join(",")
                ));
            }
            out
        }
    };
    finish(
        text,
        failure_lines(reports.iter().flat_map(|r| r.failures().cloned())),
    )
}

#[derive(Serialize)]
struct TableRow {
    family: Family,
    n: usize,
    value: String,
    oracle: &'static str,
}

/// Shared driver for `trees` and `kirchhoff`: closed form, oracle value,
/// and a confirmation column.
fn table<F>(args: &RangeArgs, name: &'static str, check: &'static str, eval: F) -> CmdResult
where
    F: Fn(&FamilySpec) -> ladder_core::Result<(String, String)> + Sync,
{
    let specs = instances(args.family, &args.n)?;
    let rows: Vec<(FamilySpec, ladder_core::Result<(String, String)>)> =
        specs.par_iter().map(|s| (*s, eval(s))).collect();
    let mut text = match args.output.format {
        Format::Json => String::new(),
        Format::Csv => format!("family,n,{name},oracle\n"),
    };
    let mut failures = Vec::new();
    for (spec, row) in rows {
        let (value, oracle) = match row {
            Ok((closed, oracle)) if closed == oracle => (closed, "confirmed"),
            Ok((closed, oracle)) => {
                failures.push(Failure {
                    family: spec.family,
                    n: spec.n,
                    check,
                    message: format!("{name} differs from oracle"),
                    first_difference: Some(DiffRecord {
                        row: None,
                        col: None,
                        expected: oracle,
                        actual: closed.clone(),
                    }),
                });
                (closed, "mismatch")
            }
            Err(e) => {
                failures.push(Failure {
                    family: spec.family,
                    n: spec.n,
                    check,
                    message: e.to_string(),
                    first_difference: None,
                });
                (String::new(), "error")
            }
        };
        match args.output.format {
            Format::Json => text.push_str(&json_line(&TableRow {
                family: spec.family,
                n: spec.n,
                value,
                oracle,
            })),
            Format::Csv => text.push_str(&format!("{},{},{value},{oracle}\n", spec.family, spec.n)),
        }
    }
    finish(text, failure_lines(failures.into_iter()))
}

pub fn trees(args: &RangeArgs) -> CmdResult {
    table(args, "trees", "trees_oracle", |spec| {
        let closed = tree_count(spec)?;
        let oracle = matrix_tree_count(&build_graph(spec)?)?;
        Ok((closed.to_string(), oracle.to_string()))
    })
}

pub fn kirchhoff(args: &RangeArgs) -> CmdResult {
    table(args, "kirchhoff", "kirchhoff", |spec| {
        let closed = kirchhoff_index(spec)?;
        let lplus = pinv_laplacian(&laplacian_matrix(&build_graph(spec)?))?;
        Ok((
            format_rational(&closed),
            format_rational(&kirchhoff_from_lplus(&lplus)),
        ))
    })
}

#[derive(Serialize)]
struct IdentityRow {
    identity: &'static str,
    n_min: usize,
    n_max: usize,
    cases: usize,
    passed: bool,
}

#[derive(Serialize)]
struct IdentityFailure {
    check: &'static str,
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<usize>,
    message: &'static str,
}

pub fn identities(args: &IdentityArgs) -> CmdResult {
    let ids: Vec<IdentityId> = match &args.id {
        Some(name) => vec![name.parse().map_err(usage)?],
        None => IdentityId::ALL.to_vec(),
    };
    let (lo, hi) = (*args.n.start(), *args.n.end());
    let sweeps = ids
        .par_iter()
        .map(|id| sweep_identity(*id, args.n.clone()))
        .collect::<Result<Vec<_>, _>>()
        .map_err(usage)?;
    let mut text = match args.output.format {
        Format::Json => String::new(),
        Format::Csv => "identity,n_min,n_max,cases,passed\n".to_owned(),
    };
    let mut failures = Vec::new();
    for s in &sweeps {
        let row = IdentityRow {
            identity: s.id.name(),
            n_min: lo,
            n_max: hi,
            cases: s.cases,
            passed: s.passed(),
        };
        match args.output.format {
            Format::Json => text.push_str(&json_line(&row)),
            Format::Csv => text.push_str(&format!(
                "{},{},{},{},{}\n",
                row.identity, row.n_min, row.n_max, row.cases, row.passed
            )),
        }
        if let Some((n, k)) = s.first_failure {
            let record = IdentityFailure {
                check: s.id.name(),
                n,
                k,
                message: "identity does not hold",
            };
            failures.push(json_line(&record).trim_end().to_owned());
        }
    }
    finish(text, failures)
}
