use std::collections::BTreeMap;

use lozenge_condensation::{
    evaluate, random_separated_quad, verify_flashlight_recurrence, Identity, QuadRequest, WeightMode,
};
use lozenge_correlations::{bulk_ratio_check, corner_convergence, log_asymptotics_table, ConvergenceReport};
use lozenge_count::{mf_enumerate, mf_profile_dp, mf_subset_oracle, symmetric_count, CountValue};
use lozenge_formulas as formulas;
use lozenge_lattice::{Region, Symmetry, SymmetryClass};
use lozenge_regions as regions;
use serde_json::{json, Map, Value};

use crate::args::{Cli, Command};
use crate::args::{
    CondensationArgs, CorrelateCommand, CountArgs, Engine, Format, FormulaArgs, FormulaName, RecurrenceArgs,
    RegionArgs, RegionKind, RenderArgs, ReportArgs, VerifyCommand,
};
use crate::error::CliError;
use crate::output::{emit, Table};
use crate::render::{render, RenderSpec};
use crate::Outcome;

type Result<T> = std::result::Result<T, CliError>;

pub fn dispatch(cli: &Cli) -> Result<Outcome> {
    match &cli.command {
        Command::Count(a) => count(cli.format, a),
        Command::Formula(a) => formula(cli.format, a),
        Command::Verify(VerifyCommand::Condensation(a)) => condensation(cli.format, a),
        Command::Verify(VerifyCommand::Recurrence(a)) => recurrence(cli.format, a),
        Command::Correlate(c) => correlate(cli.format, c),
        Command::Render(a) => render_cmd(a),
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn kind_name(kind: RegionKind) -> &'static str {
    match kind {
        RegionKind::Hexagon => "hexagon",
        RegionKind::Butterfly => "butterfly",
        RegionKind::Flashlight => "flashlight",
        RegionKind::ReducedFlashlight => "reduced-flashlight",
        RegionKind::Trapezoid => "trapezoid",
    }
}

/// The region described by the flags, its parameters as JSON, and a
/// one-line description.
pub fn build_region(args: &RegionArgs) -> Result<(Region, Map<String, Value>, String)> {
    let given: BTreeMap<&str, u32> = [
        ("x", args.x),
        ("y", args.y),
        ("z", args.z),
        ("k", args.k),
        ("p", args.p),
        ("a", args.a),
        ("b", args.b),
        ("c", args.c),
    ]
    .into_iter()
    .filter_map(|(n, v)| v.map(|v| (n, v)))
    .collect();

    if let Some(path) = &args.region_file {
        if let Some(name) = given.keys().next() {
            return Err(usage(format!("--{name} cannot be combined with --region-file")));
        }
        let text = std::fs::read_to_string(path)
            .map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
        let region = Region::from_text(&text)?;
        let mut params = Map::new();
        params.insert("file".into(), json!(path.display().to_string()));
        params.insert("cells".into(), json!(region.len()));
        return Ok((region, params, format!("region from {}", path.display())));
    }

    let kind = args.region.ok_or_else(|| usage("one of --region or --region-file is required"))?;
    let names: &[&str] = match kind {
        RegionKind::Hexagon => &["a", "b", "c"],
        RegionKind::Butterfly => &["x", "y", "k", "p"],
        RegionKind::Flashlight | RegionKind::ReducedFlashlight => &["x", "z", "k", "p"],
        RegionKind::Trapezoid => &["a", "b"],
    };
    if let Some(extra) = given.keys().find(|n| !names.contains(n)) {
        return Err(usage(format!("--{extra} is not a parameter of --region {}", kind_name(kind))));
    }
    let mut v = Vec::with_capacity(names.len());
    for n in names {
        let value = given.get(n).ok_or_else(|| {
            usage(format!(
                "--region {} needs {}",
                kind_name(kind),
                names.iter().map(|n| format!("--{n}")).collect::<Vec<_>>().join(" ")
            ))
        })?;
        v.push(*value);
    }
    let region = match kind {
        RegionKind::Hexagon => regions::hexagon(v[0], v[1], v[2]),
        RegionKind::Butterfly => regions::butterfly_hexagon(v[0], v[1], v[2], v[3])?,
        RegionKind::Flashlight => regions::flashlight(v[0], v[1], v[2], v[3])?,
        RegionKind::ReducedFlashlight => regions::reduced_flashlight(v[0], v[1], v[2], v[3])?,
        RegionKind::Trapezoid => regions::free_trapezoid(v[0], v[1]),
    };
    let mut params = Map::new();
    params.insert("kind".into(), json!(kind_name(kind)));
    for (n, x) in names.iter().zip(&v) {
        params.insert((*n).into(), json!(x));
    }
    params.insert("cells".into(), json!(region.len()));
    let title = format!(
        "{} {}",
        kind_name(kind),
        names.iter().zip(&v).map(|(n, x)| format!("{n}={x}")).collect::<Vec<_>>().join(" ")
    );
    Ok((region, params, title))
}

fn parse_symmetry(s: &str) -> Result<Symmetry> {
    match s.trim() {
        "h" | "horizontal" => Ok(Symmetry::Horizontal),
        "v" | "vertical" => Ok(Symmetry::Vertical),
        "r" | "rotation" => Ok(Symmetry::Rotation),
        other => Err(usage(format!("unknown symmetry `{other}` (expected h, v or r)"))),
    }
}

fn count_string(c: &CountValue) -> String {
    c.to_string()
}

fn count(format: Format, args: &CountArgs) -> Result<Outcome> {
    let (region, params, title) = build_region(&args.region)?;
    let (engine, value) = if args.symmetry.is_empty() {
        match args.engine {
            Engine::Enum => ("enum", mf_enumerate(&region.dual_graph())),
            Engine::Dp => ("dp", mf_profile_dp(&region)),
            Engine::Oracle => ("oracle", mf_subset_oracle(&region.dual_graph())?),
        }
    } else {
        let syms = args.symmetry.iter().map(|s| parse_symmetry(s)).collect::<Result<Vec<_>>>()?;
        ("symmetric", symmetric_count(&region, &SymmetryClass::new(syms))?)
    };
    let count = count_string(&value);
    let mut json = json!({ "region": params, "engine": engine, "count": count });
    if !args.symmetry.is_empty() {
        json["symmetry"] = json!(args.symmetry);
    }
    let mut table = Table::new(&["region", "engine", "count"]);
    table.push(vec![json!(title), json!(engine), json!(count)]);
    Ok(Outcome::ok(emit(format, &json, &table)))
}

fn formula_params(args: &FormulaArgs) -> Result<BTreeMap<String, u64>> {
    let mut map = BTreeMap::new();
    for (n, v) in
        [("x", args.x), ("y", args.y), ("z", args.z), ("k", args.k), ("p", args.p), ("a", args.a), ("b", args.b)]
    {
        if let Some(v) = v {
            map.insert(n.to_string(), v);
        }
    }
    for item in &args.params {
        let (key, value) =
            item.split_once('=').ok_or_else(|| usage(format!("parameter `{item}` is not of the form key=value")))?;
        let value: u64 = value
            .trim()
            .parse()
            .map_err(|_| usage(format!("parameter `{key}` must be a non-negative integer, got `{value}`")))?;
        if let Some(old) = map.insert(key.trim().to_string(), value) {
            if old != value {
                return Err(usage(format!("parameter `{key}` given twice with different values")));
            }
        }
    }
    Ok(map)
}

fn formula(format: Format, args: &FormulaArgs) -> Result<Outcome> {
    let (name, names): (&str, &[&str]) = match args.name {
        FormulaName::Macmahon => ("macmahon", &["x", "y", "z"]),
        FormulaName::Spp => ("spp", &["a", "b"]),
        FormulaName::Flashlight => ("flashlight", &["x", "z", "k", "p"]),
        FormulaName::Butterfly => ("butterfly", &["x", "y", "k", "p"]),
        FormulaName::Corner => ("corner", &["k", "p"]),
        FormulaName::Bulk => ("bulk", &["k"]),
        FormulaName::BulkAsymptote => ("bulk-asymptote", &["k"]),
        FormulaName::Glaisher => ("glaisher", &[]),
    };
    let params = formula_params(args)?;
    if let Some(extra) = params.keys().find(|k| !names.contains(&k.as_str())) {
        return Err(usage(format!("`{extra}` is not a parameter of formula {name}")));
    }
    let mut v = Vec::with_capacity(names.len());
    for n in names {
        v.push(
            *params.get(*n).ok_or_else(|| usage(format!("formula {name} expects parameters {}", names.join(", "))))?,
        );
    }
    if args.digits == 0 {
        return Err(usage("--digits must be positive"));
    }
    let mut table = Table::new(&["name", "value"]);
    let json = match args.name {
        FormulaName::Macmahon => json!(formulas::macmahon_box(v[0], v[1], v[2]).to_string()),
        FormulaName::Spp => json!(formulas::spp(v[0], v[1]).to_string()),
        FormulaName::Flashlight => json!(formulas::flashlight_formula(v[0], v[1], v[2], v[3]).to_string()),
        FormulaName::Butterfly => json!(formulas::butterfly_sym_formula(v[0], v[1], v[2], v[3]).to_string()),
        FormulaName::Corner => json!(formulas::corner_correlation(v[0], v[1]).to_string()),
        FormulaName::Bulk => {
            let b = formulas::bulk_correlation(v[0]);
            table = Table::new(&["name", "mantissa", "pi_exp"]);
            table.push(vec![json!(name), json!(b.mantissa.to_string()), json!(b.pi_exp)]);
            json!({ "mantissa": b.mantissa.to_string(), "pi_exp": b.pi_exp })
        }
        FormulaName::BulkAsymptote => {
            json!(formulas::bulk_asymptote(v[0], args.digits)?.to_sig_string(args.digits))
        }
        FormulaName::Glaisher => json!(formulas::glaisher(args.digits).to_sig_string(args.digits)),
    };
    if table.rows.is_empty() {
        table.push(vec![json!(name), json.clone()]);
    }
    Ok(Outcome::ok(emit(format, &json, &table)))
}

/// Seed of trial `i` in a run seeded with `seed`.
pub fn trial_seed(seed: u64, i: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15).wrapping_add(i as u64)
}

fn condensation(format: Format, args: &CondensationArgs) -> Result<Outcome> {
    let identity: Identity = args.identity.parse().map_err(usage)?;
    let weights: WeightMode = args.weights.parse().map_err(usage)?;
    if args.trials == 0 {
        return Err(usage("--trials must be positive"));
    }
    if args.budget < 4 {
        return Err(usage(format!("--budget must be at least 4 (four marked vertices), got {}", args.budget)));
    }
    let req = QuadRequest::new(args.budget)
        .weights(weights)
        .anchors(identity.anchors())
        .free(!identity.needs_empty_free_set());
    let mut table = Table::new(&["trial", "seed", "vertices", "free", "lhs", "rhs", "residual", "verdict"]);
    let mut failures = 0;
    for i in 0..args.trials {
        let s = trial_seed(args.seed, i);
        let quad = random_separated_quad(s, &req)?;
        let eval = evaluate(&quad, identity)?;
        let holds = eval.holds();
        if !holds {
            failures += 1;
        }
        table.push(vec![
            json!(i),
            json!(s.to_string()),
            json!(quad.graph().vertex_count()),
            json!(quad.graph().free_vertices().len()),
            json!(eval.lhs.to_string()),
            json!(eval.rhs.to_string()),
            json!(eval.residual().to_string()),
            json!(if holds { "pass" } else { "fail" }),
        ]);
    }
    let json = json!({
        "identity": identity.name(),
        "seed": args.seed.to_string(),
        "trials": args.trials,
        "budget": args.budget,
        "weights": weights.to_string(),
        "failures": failures,
        "results": table.to_json(),
    });
    let code = if failures > 0 { 1 } else { 0 };
    let stderr = format!("seed {}: {} of {} trials hold\n", args.seed, args.trials - failures, args.trials);
    Ok(Outcome { code, stdout: emit(format, &json, &table), stderr })
}

fn recurrence(format: Format, args: &RecurrenceArgs) -> Result<Outcome> {
    let points: Vec<(u32, u32, u32, u32)> = match (args.x, args.z, args.k, args.p) {
        (Some(x), Some(z), Some(k), Some(p)) => vec![(x, z, k, p)],
        _ => {
            let mut v = Vec::new();
            for x in 1..=5 {
                for z in 2..=4 {
                    for k in 0..=2 {
                        for p in 0..=2 {
                            v.push((x, z, k, p));
                        }
                    }
                }
            }
            v
        }
    };
    let mut table = Table::new(&["x", "z", "k", "p", "lhs", "rhs", "verdict"]);
    let mut failures = 0;
    for (x, z, k, p) in points {
        let check = verify_flashlight_recurrence(x, z, k, p)?;
        if !check.holds() {
            failures += 1;
        }
        table.push(vec![
            json!(x),
            json!(z),
            json!(k),
            json!(p),
            json!(check.lhs.to_string()),
            json!(check.rhs.to_string()),
            json!(if check.holds() { "pass" } else { "fail" }),
        ]);
    }
    let json = json!({ "failures": failures, "points": table.to_json() });
    Ok(Outcome { code: if failures > 0 { 1 } else { 0 }, stdout: emit(format, &json, &table), stderr: String::new() })
}

/// Rows of a report with a per-row verdict: a row passes when its deviation
/// does not exceed the previous one, and the last row must also be below
/// `tolerance`.
fn report_rows(report: &ConvergenceReport, tolerance: f64, series: Option<&str>, table: &mut Table) -> bool {
    let n = report.points.len();
    let mut all = true;
    for (i, pt) in report.points.iter().enumerate() {
        let mut ok = i == 0 || pt.deviation.cmp(&report.points[i - 1].deviation) != std::cmp::Ordering::Greater;
        if i + 1 == n {
            ok &= pt.deviation.to_f64() < tolerance;
        }
        all &= ok;
        let mut row = vec![
            json!(pt.point),
            json!(pt.value.to_sig_string(report.digits)),
            json!(pt.deviation.to_sig_string(report.digits)),
            json!(if ok { "pass" } else { "fail" }),
        ];
        if let Some(s) = series {
            row.insert(0, json!(s));
        }
        table.push(row);
    }
    all
}

fn grid_or(report: &ReportArgs, default: &[u64]) -> Vec<u64> {
    if report.grid.is_empty() {
        default.to_vec()
    } else {
        report.grid.clone()
    }
}

fn report_json(report: &ConvergenceReport, tolerance: f64, converged: bool, rows: Value) -> Value {
    json!({
        "report": report.label,
        "digits": report.digits,
        "tolerance": tolerance,
        "converged": converged,
        "points": rows,
    })
}

fn correlate(format: Format, cmd: &CorrelateCommand) -> Result<Outcome> {
    let columns = ["point", "value", "deviation", "verdict"];
    let (json, table, ok) = match cmd {
        CorrelateCommand::Corner { k, p, report } => {
            let digits = checked_digits(report.digits)?;
            let tol = report.tolerance.unwrap_or(0.05);
            let r = corner_convergence(*k, *p, &grid_or(report, &[64, 128, 256, 512]), digits)?;
            let mut t = Table::new(&columns);
            let ok = report_rows(&r, tol, None, &mut t);
            (report_json(&r, tol, ok, t.to_json()), t, ok)
        }
        CorrelateCommand::Bulk { report } => {
            let tol = report.tolerance.unwrap_or(0.05);
            let r = bulk_ratio_check(&grid_or(report, &[8, 16, 32, 64]), report.digits)?;
            let mut t = Table::new(&columns);
            let ok = report_rows(&r, tol, None, &mut t);
            (report_json(&r, tol, ok, t.to_json()), t, ok)
        }
        CorrelateCommand::Log { report } => {
            let digits = checked_digits(report.digits)?;
            let tols = report.tolerance.map_or([0.005, 0.02], |t| [t, t]);
            let reports = log_asymptotics_table(&grid_or(report, &[16, 32, 64, 128]), digits)?;
            let mut all = Table::new(&["series", "point", "value", "deviation", "verdict"]);
            let mut docs = Vec::new();
            let mut ok = true;
            for (r, tol) in reports.iter().zip(tols) {
                let mut t = Table::new(&columns);
                let this = report_rows(r, tol, None, &mut t);
                report_rows(r, tol, Some(&r.label), &mut all);
                docs.push(report_json(r, tol, this, t.to_json()));
                ok &= this;
            }
            (json!({ "reports": docs }), all, ok)
        }
    };
    Ok(Outcome { code: if ok { 0 } else { 1 }, stdout: emit(format, &json, &table), stderr: String::new() })
}

fn checked_digits(digits: u32) -> Result<u32> {
    if digits == 0 {
        Err(usage("--digits must be positive"))
    } else {
        Ok(digits)
    }
}

fn render_cmd(args: &RenderArgs) -> Result<Outcome> {
    let (region, _, title) = build_region(&args.region)?;
    let svg = render(&RenderSpec { region, title, overlay: args.overlay, scale: args.scale })?;
    match &args.output {
        None => Ok(Outcome::ok(svg)),
        Some(path) => {
            std::fs::write(path, &svg).map_err(|source| CliError::Io { path: path.display().to_string(), source })?;
            let summary = json!({ "output": path.display().to_string(), "bytes": svg.len() });
            Ok(Outcome::ok(format!("{summary}\n")))
        }
    }
}
