//! Command line interface. Every command prints one JSON report.
//!
//! Exit codes: 0 when every check passes, 1 when some check fails, 2 on
//! input errors.

use std::io::Write;
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::cohomology::{is_nontrivial_class, span_check, triple_cocycle, GradedCechComplex};
use crate::deform::{build_deformation, eta_map, s_label, t_label, verify_central_fiber, verify_maps, DeformationData};
use crate::fan::{cox_data, validate, Fan};
use crate::hypersurf::{hilbert_basis_check, lift_polynomial, riemann_roch_points, Polynomial};
use crate::intlin::IntVec;
use crate::report::{numbered, Check, LabeledMatrix, RunReport};
use crate::scrolls::{is_rigid, normalize, path_to_rigid, rigid_target, scroll_fan, ScrollSpec};
use crate::triples::{
    check_admissible, default_bound, degree_box, enumerate_triples, triple_from_component_index, triples_at_degree,
};

/// Environment variable overriding the default degree bound.
pub const BOUND_ENV: &str = "TORIC_DEFORM_BOUND";

#[derive(Debug, Parser)]
#[command(name = "toric-deform", version, about = "Deformations of smooth complete toric varieties")]
pub struct Cli {
    /// Add wall-clock timing to the report.
    #[arg(long, global = true)]
    pub timing: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fan validation and Cox data.
    Fan {
        #[command(subcommand)]
        action: FanAction,
    },
    /// Admissible triples in a degree box.
    Triples {
        #[arg(long)]
        fan: PathBuf,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Graded tangent cohomology.
    H1 {
        #[arg(long)]
        fan: PathBuf,
        /// A single degree, e.g. `-1,-1`.
        #[arg(long, allow_hyphen_values = true, conflicts_with = "bound")]
        degree: Option<String>,
        #[arg(long)]
        bound: Option<i64>,
    },
    /// Deformation data of an admissible triple.
    Deform(TripleArgs),
    /// Rational normal scrolls.
    Scroll {
        #[command(subcommand)]
        action: ScrollAction,
    },
    /// Lift polynomials of a class to the total space.
    Lift {
        #[command(flatten)]
        triple: TripleArgs,
        /// Class in the class group, e.g. `5,2`.
        #[arg(long, allow_hyphen_values = true)]
        class: String,
        /// Polynomial in S1, ..., Sr; defaults to every monomial of the class.
        #[arg(long, allow_hyphen_values = true)]
        poly: Option<String>,
    },
}

#[derive(Debug, Subcommand)]
pub enum FanAction {
    Check {
        #[arg(long)]
        fan: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
pub enum ScrollAction {
    Rigid { spec: String },
    Path { spec: String },
    Fan {
        spec: String,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
pub struct TripleArgs {
    #[arg(long)]
    pub fan: PathBuf,
    /// Degree, e.g. `-1,-1`.
    #[arg(long, allow_hyphen_values = true)]
    pub m: String,
    /// 0-based ray index with `m(rho) = -1`.
    #[arg(long)]
    pub rho: usize,
    /// Index of the connected component among the admissible ones.
    #[arg(long, default_value_t = 0)]
    pub component: usize,
}

/// An input error, reported with exit code 2.
#[derive(Debug)]
pub struct InputError(pub String);

impl<E: std::error::Error> From<E> for InputError {
    fn from(e: E) -> Self {
        InputError(e.to_string())
    }
}

pub fn parse_vector(text: &str) -> Result<IntVec, InputError> {
    text.split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| InputError(format!("not an integer list: {text:?}"))))
        .collect()
}

fn parse_fan(path: &PathBuf) -> Result<Fan, InputError> {
    Ok(Fan::from_path(path)?)
}

fn bound_for(fan: &Fan, flag: Option<i64>) -> Result<i64, InputError> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BOUND_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| InputError(format!("{BOUND_ENV} is not an integer: {v:?}"))),
        Err(_) => Ok(default_bound(fan)),
    }
}

fn ray_labels(fan: &Fan) -> Vec<String> {
    (0..fan.n_rays()).map(s_label).collect()
}

fn fan_check(path: &PathBuf) -> Result<RunReport, InputError> {
    let fan = parse_fan(path)?;
    let report = validate(&fan);
    let mut results = json!({
        "dim": fan.dim(),
        "rays": fan.rays(),
        "max_cones": fan.max_cones(),
        "smooth": report.smooth,
        "complete": report.complete,
        "simplicial": report.simplicial,
    });
    let mut checks = vec![
        Check::from_bool("smooth", report.smooth, || "some cone is not unimodular".into()),
        Check::from_bool("complete", report.complete, || "support is not the whole space".into()),
    ];
    if report.smooth && report.complete {
        match cox_data(&fan) {
            Ok(cox) => {
                results["P"] = json!(LabeledMatrix::new(&cox.p, numbered("e", fan.dim()), ray_labels(&fan)));
                results["Q"] = json!(LabeledMatrix::new(&cox.q, numbered("deg", cox.cl_rank), ray_labels(&fan)));
                results["class_group_rank"] = json!(cox.cl_rank);
                results["irrelevant_components"] = json!(cox.irrelevant_components);
                let zero = cox.q.mul(&cox.p.transpose()).is_zero();
                checks.push(Check::from_bool("gale_duality", zero, || "Q * P^t != 0".into()));
                checks.push(Check::new("torsion_free", None));
            }
            Err(e) => checks.push(Check::new("torsion_free", Some(e.to_string()))),
        }
    }
    Ok(RunReport {
        command: "fan check".into(),
        inputs: json!({ "fan": path }),
        results,
        checks,
        timing: None,
    })
}

fn triples_cmd(path: &PathBuf, bound: Option<i64>) -> Result<RunReport, InputError> {
    let fan = parse_fan(path)?;
    let bound = bound_for(&fan, bound)?;
    let triples = enumerate_triples(&fan, bound)?;
    let bad = triples.iter().find(|t| check_admissible(&fan, t).is_err());
    Ok(RunReport {
        command: "triples".into(),
        inputs: json!({ "fan": path, "bound": bound }),
        results: json!({ "count": triples.len(), "triples": triples }),
        checks: vec![Check::new("admissible", bad.map(|t| format!("{t:?}")))],
        timing: None,
    })
}

fn h1_cmd(path: &PathBuf, degree: Option<&str>, bound: Option<i64>) -> Result<RunReport, InputError> {
    let fan = parse_fan(path)?;
    let mut checks = Vec::new();
    let degree_entry = |m: &[i64], checks: &mut Vec<Check>| -> Result<(Value, usize), InputError> {
        let complex = GradedCechComplex::build(&fan, m)?;
        let triples = triples_at_degree(&fan, m);
        let span = span_check(&fan, m, &triples)?;
        if !complex.is_complex() {
            checks.push(Check::new("d1_d0_zero", Some(format!("degree {m:?}"))));
        }
        if !span.spans {
            checks.push(Check::new("triples_span", Some(format!("degree {m:?}"))));
        }
        for t in &triples {
            if !is_nontrivial_class(&fan, t)? {
                checks.push(Check::new("nonzero_classes", Some(format!("{t:?}"))));
            }
        }
        let h = complex.h1_dimension();
        let cocycles = triples.iter().map(|t| triple_cocycle(&fan, t)).collect::<Result<Vec<_>, _>>()?;
        Ok((
            json!({ "degree": m, "h1_dim": h, "span_rank": span.span_rank, "triples": triples, "cocycles": cocycles }),
            h,
        ))
    };
    let (inputs, results) = if let Some(text) = degree {
        let m = parse_vector(text)?;
        let (entry, _) = degree_entry(&m, &mut checks)?;
        (json!({ "fan": path, "degree": m }), entry)
    } else {
        let bound = bound_for(&fan, bound)?;
        let mut nonzero = Vec::new();
        let mut total = 0;
        let mut triple_count = 0;
        for m in degree_box(&fan, bound)? {
            let complex = GradedCechComplex::build(&fan, &m)?;
            let here = triples_at_degree(&fan, &m).len();
            if complex.h1_dimension() == 0 && here == 0 {
                if !complex.is_complex() {
                    checks.push(Check::new("d1_d0_zero", Some(format!("degree {m:?}"))));
                }
                continue;
            }
            let (entry, h) = degree_entry(&m, &mut checks)?;
            total += h;
            triple_count += here;
            nonzero.push(entry);
        }
        (
            json!({ "fan": path, "bound": bound }),
            json!({ "total_h1": total, "triple_count": triple_count, "degrees": nonzero }),
        )
    };
    for name in ["d1_d0_zero", "triples_span", "nonzero_classes"] {
        if !checks.iter().any(|c| c.name == name) {
            checks.push(Check::new(name, None));
        }
    }
    checks.sort_by(|a, b| a.name.cmp(&b.name));
    Ok(RunReport { command: "h1".into(), inputs, results, checks, timing: None })
}

fn load_deformation(args: &TripleArgs) -> Result<(Fan, DeformationData), InputError> {
    let fan = parse_fan(&args.fan)?;
    let m = parse_vector(&args.m)?;
    let t = triple_from_component_index(&fan, &m, args.rho, args.component)?;
    let d = build_deformation(&fan, &t)?;
    Ok((fan, d))
}

fn triple_inputs(args: &TripleArgs) -> Value {
    json!({ "fan": args.fan, "m": args.m, "rho": args.rho, "component": args.component })
}

fn deform_cmd(args: &TripleArgs) -> Result<RunReport, InputError> {
    let (fan, d) = load_deformation(args)?;
    let vars = d.variables();
    let u_vars: Vec<String> = vars[1..].to_vec();
    let rays = ray_labels(&fan);
    let h = d.p.rows();
    let eta: Vec<Value> = eta_map(&d)
        .into_iter()
        .map(|e| {
            let image = e.image.map(|x| {
                let pieces: Vec<String> = rays
                    .iter()
                    .zip(&x)
                    .filter(|(_, &p)| p != 0)
                    .map(|(s, &p)| if p == 1 { s.clone() } else { format!("{s}^{p}") })
                    .collect();
                pieces.join("*")
            });
            json!({ "variable": e.variable, "image": image.unwrap_or_else(|| "0".into()) })
        })
        .collect();
    let cones: Vec<Vec<String>> = d
        .ambient_cones
        .iter()
        .map(|c| c.iter().map(|&j| vars[j].clone()).collect())
        .collect();
    let cocycle = triple_cocycle(&fan, &d.triple)?;
    let results = json!({
        "triple": d.triple,
        "values": d.values,
        "U": {
            "U1": d.u.u1.iter().map(|&i| t_label(Some((1, i)))).collect::<Vec<_>>(),
            "U2": d.u.u2.iter().map(|&i| t_label(Some((2, i)))).collect::<Vec<_>>(),
            "U3": d.u.u3.iter().map(|&i| t_label(Some((3, i)))).collect::<Vec<_>>(),
            "U4": d.u.u4.iter().map(|&i| t_label(Some((4, i)))).collect::<Vec<_>>(),
        },
        "P": LabeledMatrix::new(&d.p, numbered("e", h), vars.clone()),
        "Ptilde": LabeledMatrix::new(&d.ptilde, numbered("e", h - 1), u_vars.clone()),
        "Qtilde": LabeledMatrix::new(&d.qtilde, numbered("deg", d.qtilde.rows()), u_vars.clone()),
        "ambient_cones": cones,
        "trinomial": {
            "text": d.trinomial.to_string(),
            "variables": d.trinomial.variables,
            "terms": d.trinomial.terms,
        },
        "psi": LabeledMatrix::new(&d.psi, u_vars.clone(), rays.clone()),
        "nu": LabeledMatrix::new(&d.nu, rays, u_vars),
        "eta": eta,
        "cocycle": cocycle,
    });
    let mut checks = verify_central_fiber(&fan, &d).checks;
    checks.extend(verify_maps(&fan, &d));
    checks.push(Check::from_bool("hilbert_basis", hilbert_basis_check(&d), || "a column-deleted nu is not unimodular".into()));
    let nontrivial = is_nontrivial_class(&fan, &d.triple)?;
    checks.push(Check::from_bool("cocycle_nonzero_class", nontrivial, || "class is zero".into()));
    Ok(RunReport { command: "deform".into(), inputs: triple_inputs(args), results, checks, timing: None })
}

fn scroll_cmd(action: &ScrollAction) -> Result<RunReport, InputError> {
    let spec_text = match action {
        ScrollAction::Rigid { spec } | ScrollAction::Path { spec } | ScrollAction::Fan { spec, .. } => spec,
    };
    let s: ScrollSpec = spec_text.parse()?;
    let norm = normalize(&s);
    let report = match action {
        ScrollAction::Rigid { .. } => {
            let fan = scroll_fan(&s);
            let triples = enumerate_triples(&fan, default_bound(&fan))?;
            let rigid = is_rigid(&s);
            RunReport {
                command: "scroll rigid".into(),
                inputs: json!({ "spec": s }),
                results: json!({ "normalized": norm, "rigid": rigid, "triple_count": triples.len() }),
                checks: vec![Check::from_bool("rigid_iff_no_triples", rigid == triples.is_empty(), || {
                    format!("{} triples", triples.len())
                })],
                timing: None,
            }
        }
        ScrollAction::Path { .. } => {
            let path = path_to_rigid(&s);
            let target = rigid_target(&s);
            let end = path.last().map_or(norm.clone(), |mv| normalize(&mv.to));
            let bad = path.iter().position(|mv| !mv.revalidate());
            RunReport {
                command: "scroll path".into(),
                inputs: json!({ "spec": s }),
                results: json!({ "normalized": norm, "moves": path, "end": end, "target": target }),
                checks: vec![
                    Check::new("moves_valid", bad.map(|i| format!("move {i}"))),
                    Check::from_bool("reaches_target", end == target, || format!("ended at {end}")),
                ],
                timing: None,
            }
        }
        ScrollAction::Fan { output, .. } => {
            let fan = scroll_fan(&s);
            if let Some(path) = output {
                std::fs::write(path, fan.to_json() + "\n")
                    .map_err(|e| InputError(format!("cannot write {}: {e}", path.display())))?;
            }
            let r = validate(&fan);
            RunReport {
                command: "scroll fan".into(),
                inputs: json!({ "spec": s, "output": output }),
                results: json!({ "fan": fan }),
                checks: vec![Check::from_bool("smooth_complete", r.smooth && r.complete, || "invalid fan".into())],
                timing: None,
            }
        }
    };
    Ok(report)
}

fn lift_cmd(args: &TripleArgs, class: &str, poly: Option<&str>) -> Result<RunReport, InputError> {
    let (fan, d) = load_deformation(args)?;
    let w = parse_vector(class)?;
    let polynomial = match poly {
        Some(text) => Polynomial::parse(text, fan.n_rays())?,
        None => Polynomial { terms: riemann_roch_points(&fan, &w)?.into_iter().map(|e| (1, e)).collect() },
    };
    let res = lift_polynomial(&fan, &d, &w, &polynomial)?;
    let consistent = res
        .monomials
        .iter()
        .all(|m| m.preimage.as_ref().map_or(true, |x| x.iter().all(|&v| v >= 0) && d.nu.mul_vec(x) == m.exponent));
    let mut inputs = triple_inputs(args);
    inputs["class"] = json!(w);
    inputs["poly"] = json!(poly);
    let results = json!({
        "polynomial": polynomial.to_string(),
        "variables": res.variables,
        "monomials": res.monomials,
        "lifted": res.lifted().map(|l| l.to_string()),
    });
    let checks = vec![
        Check::new("all_liftable", res.first_failure.map(|i| format!("monomial {i}"))),
        Check::from_bool("preimages_verified", consistent, || "nu * x != e".into()),
        Check::from_bool("hilbert_basis", hilbert_basis_check(&d), || "a column-deleted nu is not unimodular".into()),
    ];
    Ok(RunReport { command: "lift".into(), inputs, results, checks, timing: None })
}

pub fn execute(cli: &Cli) -> Result<RunReport, InputError> {
    let start = Instant::now();
    let mut report = match &cli.command {
        Command::Fan { action: FanAction::Check { fan } } => fan_check(fan)?,
        Command::Triples { fan, bound } => triples_cmd(fan, *bound)?,
        Command::H1 { fan, degree, bound } => h1_cmd(fan, degree.as_deref(), *bound)?,
        Command::Deform(args) => deform_cmd(args)?,
        Command::Scroll { action } => scroll_cmd(action)?,
        Command::Lift { triple, class, poly } => lift_cmd(triple, class, poly.as_deref())?,
    };
    if cli.timing {
        report.timing = Some(json!({ "seconds": start.elapsed().as_secs_f64() }));
    }
    Ok(report)
}

/// Parses arguments, runs the command and prints the report. Returns the
/// exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(report) => {
            // a closed pipe is not an error worth reporting
            let _ = writeln!(std::io::stdout().lock(), "{}", report.to_json());
            if report.passed() {
                0
            } else {
                1
            }
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            2
        }
    }
}
