//! Batch command-line front end: parses inputs, dispatches the solvers and
//! checks, and emits JSON (or CSV for grids) on standard output.
//!
//! Exit codes: `0` on success, `1` on parse/domain errors (with a
//! machine-readable error object on stdout), `2` when a verification check
//! ran but reported `ok = false`.

mod inputs;

use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind as ClapErrorKind;
use clap::{Parser, Subcommand};
use dirichlet_core::approx::{circle_polynomial_approx, ApproxPlan};
use dirichlet_core::ellipse::{solve_ellipse_full, validate_domain};
use dirichlet_core::grammar::{parse_real, print_real};
use dirichlet_core::kernels::{cauchy_integral, poisson_integral, QuadratureSpec};
use dirichlet_core::verify::{
    check_averaging, check_max_principle, contour_integral_circle, contour_integral_rect,
    contour_length_bound_check, fd_laplacian, goursat_localize, green_residual_disc, Curve,
    GoursatTrace,
};
use dirichlet_core::{solve_disc, Error, HarmonicRep};
use serde_json::{json, Value};

use inputs::{
    parse_any_poly, parse_boundary, parse_evaluator, parse_point, parse_rect, parse_square,
};

#[derive(Parser)]
#[command(name = "dirichlet", version, about = "Dirichlet solvers, kernels and identity checks on the unit disc and ellipses")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve the Dirichlet problem on the unit disc for polynomial data
    SolveDisc {
        /// Boundary polynomial in x, y (e.g. "x^2 - y")
        #[arg(long)]
        data: String,
        /// Write the JSON here instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Solve the Dirichlet problem on {r < 0} by the linear-algebra route
    SolveEllipse {
        /// Degree-2 defining polynomial r (e.g. "x^2+4*y^2-1")
        #[arg(long)]
        r: String,
        /// Polynomial boundary data q
        #[arg(long)]
        q: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the Poisson integral of boundary data at a point
    PoissonEval {
        /// Boundary data spec (const:c, cos:k, sin:k, abs_sin, poly:<text>, csv:<path>)
        #[arg(long)]
        data: String,
        /// Evaluation point "x,y" with |z| <= 0.999
        #[arg(long)]
        z: String,
        /// Quadrature node count (default DIRICHLET_QUAD_M or 512)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate the Cauchy integral of boundary data at a point
    CauchyEval {
        #[arg(long)]
        data: String,
        #[arg(long)]
        z: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Polynomial approximation of circle data: shift, split, Bernstein, cutoff
    ApproxCircle {
        #[arg(long)]
        data: String,
        /// Degree budget for the top/bottom approximants
        #[arg(long, default_value_t = 64)]
        deg1d: u32,
        /// Cutoff half-width in (0, 0.5]
        #[arg(long, default_value_t = 0.1)]
        eps: f64,
        /// Degree budget for the cutoff approximant
        #[arg(long = "cutoff-deg", default_value_t = 64)]
        cutoff_deg: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a numerical identity check; exit 0 iff it holds
    Verify {
        /// One of: averaging, max-principle, contour-circle, contour-rect,
        /// green, fd-laplacian, length-bound, goursat
        #[arg(long)]
        check: String,
        /// Evaluator spec for function checks (poly:<text>, zzbar:<text>, harmonic:<text>)
        #[arg(long)]
        u: Option<String>,
        /// Alias of --u for checks phrased over f
        #[arg(long)]
        f: Option<String>,
        /// Circle center or averaging center "x,y"
        #[arg(long)]
        a: Option<String>,
        /// Circle radius
        #[arg(long)]
        r: Option<f64>,
        /// Stencil point "x,y" for fd-laplacian
        #[arg(long)]
        z: Option<String>,
        /// Square "cx,cy,side" for goursat
        #[arg(long)]
        square: Option<String>,
        /// Rectangle "x0,y0,x1,y1"
        #[arg(long)]
        rect: Option<String>,
        /// Bisection depth for goursat
        #[arg(long, default_value_t = 6)]
        depth: u32,
        /// Gauss-Legendre order per rectangle edge
        #[arg(long, default_value_t = 16)]
        edge_order: usize,
        /// Finite-difference step
        #[arg(long, default_value_t = 1e-4)]
        h: f64,
        /// Interior lattice resolution for max-principle
        #[arg(long, default_value_t = 101)]
        grid_n: usize,
        #[arg(long)]
        m: Option<usize>,
        /// Acceptance threshold on the residual (default per check)
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate a solution on a domain-clipped lattice and emit CSV rows x,y,value
    GridExport {
        /// Disc mode: boundary polynomial for solve-disc
        #[arg(long)]
        data: Option<String>,
        /// Ellipse mode: defining polynomial r (with --q)
        #[arg(long)]
        r: Option<String>,
        /// Ellipse mode: boundary data q
        #[arg(long)]
        q: Option<String>,
        /// Lattice resolution per axis (cell centers over the bounding box)
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Runs the CLI against `args` (without the leading program name), writing
/// output to `out`. Returns the process exit code.
pub fn run<W: Write>(args: impl IntoIterator<Item = String>, out: &mut W) -> i32 {
    let mut full: Vec<String> = vec!["dirichlet".to_string()];
    full.extend(args);
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            return match e.kind() {
                ClapErrorKind::DisplayHelp | ClapErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    emit(out, &None, &error_object("usage", &e.to_string()));
                    1
                }
            };
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            emit(out, &None, &error_object(error_kind(&e), &e.to_string()));
            1
        }
    }
}

fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::NonRealPolynomial { .. } => "non-real-polynomial",
        Error::OutsideDomain { .. } => "outside-domain",
        Error::DomainViolation(_) => "domain-violation",
        Error::NotDegreeTwo { .. } => "not-degree-two",
        Error::UnboundedDomain => "unbounded-domain",
        Error::EmptyInterior { .. } => "empty-interior",
        Error::SingularSystem { .. } => "singular-system",
        Error::ShiftRequired { .. } => "shift-required",
        Error::Parse { .. } => "parse",
        Error::InvalidSpec(_) => "invalid-spec",
    }
}

fn error_object(kind: &str, message: &str) -> Value {
    json!({ "error": { "kind": kind, "message": message } })
}

fn emit<W: Write>(out: &mut W, path: &Option<PathBuf>, value: &Value) {
    let text = value.to_string();
    match path {
        Some(p) => {
            if let Err(e) = std::fs::write(p, text + "\n") {
                let _ = writeln!(out, "{}", error_object("io", &e.to_string()));
            }
        }
        None => {
            let _ = writeln!(out, "{text}");
        }
    }
}

fn emit_text<W: Write>(out: &mut W, path: &Option<PathBuf>, text: &str) -> Result<(), Error> {
    match path {
        Some(p) => std::fs::write(p, text)
            .map_err(|e| Error::InvalidSpec(format!("cannot write '{}': {e}", p.display()))),
        None => {
            let _ = out.write_all(text.as_bytes());
            Ok(())
        }
    }
}

fn quadrature(m: Option<usize>) -> Result<QuadratureSpec, Error> {
    let m = match m {
        Some(m) => m,
        None => match std::env::var("DIRICHLET_QUAD_M") {
            Ok(text) => text.parse::<usize>().map_err(|_| {
                Error::InvalidSpec(format!("DIRICHLET_QUAD_M must be an integer, got '{text}'"))
            })?,
            Err(_) => QuadratureSpec::DEFAULT_NODES,
        },
    };
    QuadratureSpec::new(m)
}

fn complex_json(z: num_complex::Complex64) -> Value {
    json!([z.re, z.im])
}

fn harmonic_json(rep: &HarmonicRep) -> Value {
    json!({
        "a0": complex_json(rep.a0()),
        "analytic": rep.analytic_coeffs().iter().copied().map(complex_json).collect::<Vec<_>>(),
        "antianalytic": rep.antianalytic_coeffs().iter().copied().map(complex_json).collect::<Vec<_>>(),
        "real_valued": rep.real_valued(),
    })
}

fn dispatch<W: Write>(command: Command, out: &mut W) -> Result<i32, Error> {
    match command {
        Command::SolveDisc { data, out: path } => {
            let p = parse_real(&data)?;
            let rep = solve_disc(&p);
            emit(out, &path, &harmonic_json(&rep));
            Ok(0)
        }
        Command::SolveEllipse { r, q, out: path } => {
            let dom = validate_domain(&parse_real(&r)?)?;
            let sol = solve_ellipse_full(&dom, &parse_real(&q)?)?;
            emit(
                out,
                &path,
                &json!({
                    "u": print_real(&sol.u),
                    "p": print_real(&sol.p),
                    "residual_laplacian_max": sol.residual_laplacian_max,
                }),
            );
            Ok(0)
        }
        Command::PoissonEval { data, z, m, out: path } => {
            let phi = parse_boundary(&data)?;
            let z = parse_point(&z)?;
            let quad = quadrature(m)?;
            let value = poisson_integral(&phi, z, &quad)?;
            emit(
                out,
                &path,
                &json!({ "value": value, "z": complex_json(z), "m": phi.integration_nodes(&quad) }),
            );
            Ok(0)
        }
        Command::CauchyEval { data, z, m, out: path } => {
            let f = parse_boundary(&data)?;
            let z = parse_point(&z)?;
            let quad = quadrature(m)?;
            let value = cauchy_integral(&f, z, &quad)?;
            emit(
                out,
                &path,
                &json!({ "value": complex_json(value), "z": complex_json(z), "m": f.integration_nodes(&quad) }),
            );
            Ok(0)
        }
        Command::ApproxCircle { data, deg1d, eps, cutoff_deg, out: path } => {
            let phi = parse_boundary(&data)?;
            if !phi.is_real() {
                return Err(Error::DomainViolation(
                    "circle approximation needs real boundary data".to_string(),
                ));
            }
            let plan = ApproxPlan::new(deg1d, eps, cutoff_deg)?;
            let (approx, sup_error) = circle_polynomial_approx(&phi, &plan)?;
            emit(
                out,
                &path,
                &json!({ "p": print_real(&approx.to_real_poly2()), "sup_error": sup_error }),
            );
            Ok(0)
        }
        Command::Verify {
            check,
            u,
            f,
            a,
            r,
            z,
            square,
            rect,
            depth,
            edge_order,
            h,
            grid_n,
            m,
            tol,
            out: path,
        } => {
            let quad = quadrature(m)?;
            let target = u.or(f).ok_or_else(|| {
                Error::InvalidSpec("verify needs a target via --u or --f".to_string())
            })?;
            let result = run_check(RunCheck {
                check: &check,
                target: &target,
                a,
                r,
                z,
                square,
                rect,
                depth,
                edge_order,
                h,
                grid_n,
                tol,
                quad,
            })?;
            let code = if result.ok { 0 } else { 2 };
            emit(
                out,
                &path,
                &json!({
                    "check": check,
                    "residual": result.residual,
                    "ok": result.ok,
                    "trace": result.trace,
                }),
            );
            Ok(code)
        }
        Command::GridExport { data, r, q, n, out: path } => {
            if n < 2 {
                return Err(Error::InvalidSpec("grid resolution must be at least 2".to_string()));
            }
            let csv = grid_csv(data, r, q, n)?;
            emit_text(out, &path, &csv)?;
            Ok(0)
        }
    }
}

struct RunCheck<'a> {
    check: &'a str,
    target: &'a str,
    a: Option<String>,
    r: Option<f64>,
    z: Option<String>,
    square: Option<String>,
    rect: Option<String>,
    depth: u32,
    edge_order: usize,
    h: f64,
    grid_n: usize,
    tol: Option<f64>,
    quad: QuadratureSpec,
}

struct CheckResult {
    residual: f64,
    ok: bool,
    trace: Value,
}

fn need<T>(value: Option<T>, what: &str) -> Result<T, Error> {
    value.ok_or_else(|| Error::InvalidSpec(format!("this check needs {what}")))
}

fn run_check(args: RunCheck<'_>) -> Result<CheckResult, Error> {
    match args.check {
        "averaging" => {
            let u = parse_evaluator(args.target)?;
            let center = parse_point(&need(args.a, "--a")?)?;
            let radius = need(args.r, "--r")?;
            let residual = check_averaging(&u, center, radius, &args.quad)?;
            let tol = args.tol.unwrap_or(1e-10);
            Ok(CheckResult { residual, ok: residual <= tol, trace: Value::Null })
        }
        "max-principle" => {
            let u = parse_evaluator(args.target)?;
            let report = check_max_principle(&u, args.grid_n)?;
            let residual = (report.interior_max - report.boundary_max).max(0.0);
            Ok(CheckResult {
                residual,
                ok: report.ok,
                trace: json!({
                    "interior_max": report.interior_max,
                    "boundary_max": report.boundary_max,
                }),
            })
        }
        "contour-circle" => {
            let f = parse_evaluator(args.target)?;
            let center = parse_point(&need(args.a, "--a")?)?;
            let radius = need(args.r, "--r")?;
            let integral = contour_integral_circle(&f, center, radius, &args.quad)?;
            let residual = integral.norm();
            let tol = args.tol.unwrap_or(1e-11);
            Ok(CheckResult {
                residual,
                ok: residual <= tol,
                trace: json!({ "integral": complex_json(integral) }),
            })
        }
        "contour-rect" => {
            let f = parse_evaluator(args.target)?;
            let rect = parse_rect(&need(args.rect, "--rect")?)?;
            let integral = contour_integral_rect(&f, &rect, args.edge_order)?;
            let residual = integral.norm();
            let tol = args.tol.unwrap_or(1e-11);
            Ok(CheckResult {
                residual,
                ok: residual <= tol,
                trace: json!({ "integral": complex_json(integral) }),
            })
        }
        "green" => {
            let poly = parse_any_poly(
                args.target
                    .strip_prefix("poly:")
                    .or_else(|| args.target.strip_prefix("zzbar:"))
                    .unwrap_or(args.target),
            )?;
            let residual = green_residual_disc(&poly, &args.quad);
            let tol = args.tol.unwrap_or(1e-11);
            Ok(CheckResult { residual, ok: residual <= tol, trace: Value::Null })
        }
        "fd-laplacian" => {
            let u = parse_evaluator(args.target)?;
            let point = parse_point(&need(args.z, "--z")?)?;
            let value = fd_laplacian(&u, point, args.h)?;
            let residual = value.abs();
            let tol = args.tol.unwrap_or(1e-5);
            Ok(CheckResult {
                residual,
                ok: residual <= tol,
                trace: json!({ "laplacian": value }),
            })
        }
        "length-bound" => {
            let f = parse_evaluator(args.target)?;
            let curve = if let Some(rect) = args.rect {
                Curve::Rect(parse_rect(&rect)?)
            } else {
                let center = parse_point(&need(args.a, "--a")?)?;
                let radius = need(args.r, "--r")?;
                Curve::Circle { center, radius }
            };
            let (lhs, rhs) = contour_length_bound_check(&f, &curve, &args.quad)?;
            let residual = (lhs - rhs).max(0.0);
            Ok(CheckResult {
                residual,
                ok: lhs <= rhs + 1e-10,
                trace: json!({ "lhs": lhs, "rhs": rhs }),
            })
        }
        "goursat" => {
            let f = parse_evaluator(args.target)?;
            let square = parse_square(&need(args.square, "--square")?)?;
            let trace = goursat_localize(&f, square, args.depth, args.edge_order)?;
            let magnitude = trace.initial_integral.norm();
            let residual = trace
                .levels
                .iter()
                .map(|l| (magnitude * l.square.area() - l.modulus).max(0.0))
                .fold(0.0f64, f64::max);
            let ok = trace.analytic || trace.all_levels_ok();
            Ok(CheckResult { residual, ok, trace: goursat_json(&trace) })
        }
        other => Err(Error::InvalidSpec(format!("unknown check '{other}'"))),
    }
}

fn goursat_json(trace: &GoursatTrace) -> Value {
    json!({
        "analytic": trace.analytic,
        "initial_integral": complex_json(trace.initial_integral),
        "limit_point": complex_json(trace.limit_point),
        "levels": trace.levels.iter().map(|l| json!({
            "center": complex_json(l.square.center),
            "side": l.square.side,
            "integral": complex_json(l.integral),
            "modulus": l.modulus,
            "lower_bound_ok": l.lower_bound_ok,
        })).collect::<Vec<_>>(),
    })
}

/// Cell-center lattice over the domain's bounding box, row-major from the
/// minimum corner, keeping points inside the domain.
fn grid_csv(
    data: Option<String>,
    r: Option<String>,
    q: Option<String>,
    n: usize,
) -> Result<String, Error> {
    let mut rows = String::new();
    match (data, r, q) {
        (Some(data), None, None) => {
            let rep = solve_disc(&parse_real(&data)?);
            for (x, y) in cell_centers(-1.0, -1.0, 1.0, 1.0, n) {
                if x * x + y * y <= 1.0 + 1e-12 {
                    let v = rep.eval_real(num_complex::Complex64::new(x, y))?;
                    rows.push_str(&format!("{x},{y},{v}\n"));
                }
            }
        }
        (None, Some(r), Some(q)) => {
            let dom = validate_domain(&parse_real(&r)?)?;
            let sol = solve_ellipse_full(&dom, &parse_real(&q)?)?;
            let (x0, y0, x1, y1) = dom.bounding_box();
            for (x, y) in cell_centers(x0, y0, x1, y1, n) {
                if dom.contains(x, y, 1e-12) {
                    let v = sol.u.eval(x, y);
                    rows.push_str(&format!("{x},{y},{v}\n"));
                }
            }
        }
        _ => {
            return Err(Error::InvalidSpec(
                "grid-export needs either --data (disc) or both --r and --q (ellipse)".to_string(),
            ))
        }
    }
    Ok(rows)
}

fn cell_centers(x0: f64, y0: f64, x1: f64, y1: f64, n: usize) -> Vec<(f64, f64)> {
    let dx = (x1 - x0) / n as f64;
    let dy = (y1 - y0) / n as f64;
    let mut out = Vec::with_capacity(n * n);
    for iy in 0..n {
        let y = y0 + (iy as f64 + 0.5) * dy;
        for ix in 0..n {
            let x = x0 + (ix as f64 + 0.5) * dx;
            out.push((x, y));
        }
    }
    out
}
