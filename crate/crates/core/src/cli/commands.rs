use std::io::Write;
use std::path::Path;

use serde_json::{json, Value};

use super::envelope::{feasible_set_json, ResultEnvelope};
use super::model::ModelFile;
use super::{Cli, Command, EXIT_INFEASIBLE, EXIT_INPUT, EXIT_OK};
use crate::ncp::positive_circuit_at;
use crate::precgraph::PrecGraph;
use crate::pteg::{
    bounded_consistency, normalize, period_set, pic_reduction, synthesize, validate_spec, validate_trajectory, Mode,
    Normalized, Pteg, Trajectory, ValidationReport,
};
use crate::rational::{format_rational, parse_rational, Rational};

struct Report {
    text: String,
    result: Value,
}

enum Failure {
    Input(Vec<String>),
    Infeasible(Report),
}

fn input_err(msg: impl Into<String>) -> Failure {
    Failure::Input(vec![msg.into()])
}

struct Loaded {
    bytes: Vec<u8>,
    norm: Normalized,
}

impl Loaded {
    fn pteg(&self) -> &Pteg {
        &self.norm.pteg
    }
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let bytes = std::fs::read(path).map_err(|e| input_err(format!("cannot read {}: {e}", path.display())))?;
    let text = String::from_utf8(bytes.clone()).map_err(|_| input_err(format!("{} is not UTF-8", path.display())))?;
    let spec = ModelFile::parse(&text)
        .and_then(|m| m.to_spec())
        .map_err(|e| input_err(e.to_string()))?;
    validate_spec(&spec).map_err(|diags| Failure::Input(diags.iter().map(ToString::to_string).collect()))?;
    let norm = normalize(&spec).map_err(|e| input_err(e.to_string()))?;
    Ok(Loaded { bytes, norm })
}

fn parse_lambda(text: &str) -> Result<Rational, Failure> {
    parse_rational(text).map_err(|e| input_err(format!("--lambda: {e}")))
}

fn parse_numbers(text: &str, what: &str) -> Result<Vec<Rational>, Failure> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| parse_rational(t).map_err(|e| input_err(format!("{what}: {e}"))))
        .collect()
}

fn vector_text(x: &[Rational]) -> String {
    let parts: Vec<String> = x.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn vector_json(x: &[Rational]) -> Value {
    Value::from(x.iter().map(format_rational).collect::<Vec<_>>())
}

fn check(m: &Loaded) -> Report {
    let set = period_set(m.pteg(), 1, Mode::Theorem2).expect("d = 1");
    let consistent = bounded_consistency(m.pteg());
    Report {
        text: format!("boundedly consistent: {consistent}\nperiods: {set}\n"),
        result: json!({
            "boundedly_consistent": consistent,
            "periods": feasible_set_json(&set),
        }),
    }
}

fn periods(m: &Loaded, d: usize, mode: Mode) -> Report {
    let set = period_set(m.pteg(), d, mode).expect("d >= 1");
    let mut text = format!("periods (d={d}, {mode}): {set}\n");
    let mut result = json!({ "d": d, "mode": mode.to_string(), "periods": feasible_set_json(&set) });
    if mode == Mode::Tensor {
        let agrees = set == period_set(m.pteg(), 1, Mode::Theorem2).expect("d = 1");
        text.push_str(&format!("agrees with d=1: {}\n", if agrees { "yes" } else { "no" }));
        result["agrees_with_d1"] = json!(agrees);
    }
    Report { text, result }
}

fn report_json(p: &Pteg, r: &ValidationReport) -> Value {
    let names = p.names();
    json!({
        "horizon": r.horizon,
        "passed": r.passed(),
        "violations": r.violations.iter().map(|v| json!({
            "k": v.k,
            "constraint": v.constraint.name(),
            "i": names[v.i],
            "j": names[v.j],
        })).collect::<Vec<_>>(),
    })
}

fn report_text(r: &ValidationReport) -> String {
    if r.passed() {
        return format!("validation: pass (k = 0..{})\n", r.horizon);
    }
    let mut s = format!("validation: FAIL ({} violation(s))\n", r.violations.len());
    for v in &r.violations {
        s.push_str(&format!("  {v}\n"));
    }
    s
}

fn trajectory(m: &Loaded, d: usize, lambda: &str, u: &str, horizon: Option<usize>) -> Result<Report, Failure> {
    let p = m.pteg();
    let lambda = parse_lambda(lambda)?;
    let t = pic_reduction(p);
    if let Some(c) = positive_circuit_at(&t, &lambda) {
        let weight = PrecGraph::from_matrix(&t.eval(&lambda))
            .and_then(|g| g.circuit_weight(&c))
            .expect("witness lies in the graph");
        let mut path: Vec<&str> = c.nodes().iter().map(|&k| p.names()[k].as_str()).collect();
        path.push(path[0]);
        let circuit = path.join(" -> ");
        return Err(Failure::Infeasible(Report {
            text: format!(
                "period {} is infeasible\nwitness: positive circuit {circuit} (weight {})\n",
                format_rational(&lambda),
                format_rational(&weight)
            ),
            result: json!({
                "feasible": false,
                "lambda": format_rational(&lambda),
                "witness": { "circuit": path, "weight": format_rational(&weight) },
            }),
        }));
    }
    let n = p.n();
    let u = match u {
        "zero" => vec![Rational::from_integer(0.into()); d * n],
        path => {
            let text = std::fs::read_to_string(path).map_err(|e| input_err(format!("cannot read {path}: {e}")))?;
            parse_numbers(&text, "--u")?
        }
    };
    if u.len() != d * n {
        return Err(input_err(format!("--u needs {} values (d·n), got {}", d * n, u.len())));
    }
    let traj = synthesize(p, d, &lambda, &u).map_err(|e| input_err(e.to_string()))?;
    let horizon = horizon.unwrap_or_else(|| traj.default_horizon());
    let report = validate_trajectory(p, &traj, horizon).expect("sizes agree");
    let steps = (horizon + 1).max(d);
    let mut text = format!(
        "period: {} (d={d})\ntransitions: {}\n",
        format_rational(&lambda),
        p.names().join(" ")
    );
    let mut states = Vec::with_capacity(steps);
    for k in 0..steps {
        let x = traj.state(k);
        text.push_str(&format!("x({k}) = {}\n", vector_text(&x)));
        states.push(vector_json(&x));
    }
    text.push_str(&report_text(&report));
    Ok(Report {
        text,
        result: json!({
            "feasible": true,
            "d": d,
            "lambda": format_rational(&lambda),
            "transitions": p.names(),
            "states": states,
            "validation": report_json(p, &report),
        }),
    })
}

fn validate(m: &Loaded, d: usize, lambda: &str, seed: &Path, horizon: Option<usize>) -> Result<Report, Failure> {
    let p = m.pteg();
    let lambda = parse_lambda(lambda)?;
    let text = std::fs::read_to_string(seed).map_err(|e| input_err(format!("cannot read {}: {e}", seed.display())))?;
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|l| parse_numbers(l, "--seed"))
        .collect::<Result<Vec<_>, _>>()?;
    if rows.len() != d {
        return Err(input_err(format!("--seed has {} vectors, expected d = {d}", rows.len())));
    }
    if let Some(bad) = rows.iter().find(|r| r.len() != p.n()) {
        return Err(input_err(format!(
            "--seed vectors need {} entries (one per transition of the normalized model), got {}",
            p.n(),
            bad.len()
        )));
    }
    let traj = Trajectory::new(lambda.clone(), rows).map_err(|e| input_err(e.to_string()))?;
    let horizon = horizon.unwrap_or_else(|| traj.default_horizon());
    let report = validate_trajectory(p, &traj, horizon).expect("sizes checked");
    Ok(Report {
        text: format!("valid: {}\n{}", report.passed(), report_text(&report)),
        result: json!({
            "valid": report.passed(),
            "d": d,
            "lambda": format_rational(&lambda),
            "validation": report_json(p, &report),
        }),
    })
}

fn export_dot(m: &Loaded, lambda: Option<&str>) -> Result<Report, Failure> {
    let t = pic_reduction(m.pteg());
    let dot = match lambda {
        None => t.graph().to_dot(),
        Some(l) => {
            let l = parse_lambda(l)?;
            PrecGraph::from_matrix(&t.eval(&l)).expect("finite entries").to_dot()
        }
    };
    Ok(Report {
        result: json!({ "dot": dot }),
        text: dot,
    })
}

fn normalize_cmd(m: &Loaded, output: Option<&Path>) -> Result<Report, Failure> {
    let before = m.norm.transition_map.len();
    let after = m.norm.spec.transition_count();
    let model = ModelFile::from_spec(&m.norm.spec).emit();
    let summary = format!("transitions: {before} -> {after} ({} added)", m.norm.added_transitions());
    let text = match output {
        Some(path) => {
            std::fs::write(path, &model).map_err(|e| input_err(format!("cannot write {}: {e}", path.display())))?;
            format!("{summary}\nwrote {}\n", path.display())
        }
        None => format!("# {summary}\n{model}"),
    };
    Ok(Report {
        text,
        result: json!({
            "transitions_before": before,
            "transitions_after": after,
            "added": m.norm.added_transitions(),
            "output": output.map(|p| p.display().to_string()),
            "model": model,
        }),
    })
}

pub(super) fn dispatch(cli: &Cli, echo: &str, out: &mut dyn Write, err: &mut dyn Write) -> u8 {
    let path = match &cli.command {
        Command::Check { model }
        | Command::Periods { model, .. }
        | Command::Trajectory { model, .. }
        | Command::Validate { model, .. }
        | Command::ExportDot { model, .. }
        | Command::Normalize { model, .. } => model,
    };
    let outcome = load(path).and_then(|m| {
        let report = match &cli.command {
            Command::Check { .. } => Ok(check(&m)),
            Command::Periods { d, mode, .. } => Ok(periods(&m, *d as usize, *mode)),
            Command::Trajectory {
                d, lambda, u, horizon, ..
            } => trajectory(&m, *d as usize, lambda, u, *horizon),
            Command::Validate {
                d,
                lambda,
                seed,
                horizon,
                ..
            } => validate(&m, *d as usize, lambda, seed, *horizon),
            Command::ExportDot { which, .. } => export_dot(&m, which.lambda.as_deref()),
            Command::Normalize { output, .. } => normalize_cmd(&m, output.as_deref()),
        };
        Ok((m.bytes, report))
    });
    let (bytes, code, report) = match outcome {
        Ok((bytes, Ok(r))) => (bytes, EXIT_OK, r),
        Ok((bytes, Err(Failure::Infeasible(r)))) => (bytes, EXIT_INFEASIBLE, r),
        Ok((_, Err(Failure::Input(msgs)))) | Err(Failure::Input(msgs)) => {
            for m in msgs {
                let _ = writeln!(err, "error: {m}");
            }
            return EXIT_INPUT;
        }
        Err(Failure::Infeasible(_)) => unreachable!("loading never reports infeasibility"),
    };
    // a closed stdout is not worth a distinct exit status
    let _ = if cli.json {
        writeln!(out, "{}", ResultEnvelope::new(echo, &bytes, report.result).to_json())
    } else {
        out.write_all(report.text.as_bytes())
    };
    code
}
