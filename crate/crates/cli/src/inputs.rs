//! Parsers for the CLI's input specifications: boundary data, evaluators,
//! points, squares and rectangles.

use std::fs;

use dirichlet_core::grammar::{parse_real, parse_zzbar};
use dirichlet_core::kernels::BoundaryFunction;
use dirichlet_core::poly::{to_zzbar, ComplexPolyZZbar};
use dirichlet_core::verify::{Evaluator, Rect, SquareSpec};
use dirichlet_core::{solve_disc, Error};
use num_complex::Complex64;

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidSpec(msg.into())
}

/// Boundary data: `const:c`, `cos:k`, `sin:k`, `abs_sin`, `poly:<text>`
/// (real `x,y` or complex `z,zb` grammar) or `csv:<path>` with rows
/// `theta,value[,imag]` at equispaced nodes.
pub fn parse_boundary(spec: &str) -> Result<BoundaryFunction, Error> {
    let spec = spec.trim();
    if spec == "abs_sin" {
        return Ok(BoundaryFunction::AbsSin);
    }
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| bad(format!("unknown boundary data '{spec}'")))?;
    match kind {
        "const" => {
            let c: f64 = rest.trim().parse().map_err(|_| bad("malformed constant"))?;
            Ok(BoundaryFunction::Const(c))
        }
        "cos" => Ok(BoundaryFunction::Cos(parse_frequency(rest)?)),
        "sin" => Ok(BoundaryFunction::Sin(parse_frequency(rest)?)),
        "poly" => Ok(BoundaryFunction::PolyTrace(parse_any_poly(rest)?)),
        "csv" => parse_csv_samples(rest.trim()),
        other => Err(bad(format!("unknown boundary data kind '{other}'"))),
    }
}

fn parse_frequency(text: &str) -> Result<u32, Error> {
    text.trim()
        .parse::<u32>()
        .map_err(|_| bad("frequency must be a nonnegative integer"))
}

/// Accepts either grammar: `z`/`zb` text directly, `x`/`y` text via the
/// basis substitution.
pub fn parse_any_poly(text: &str) -> Result<ComplexPolyZZbar, Error> {
    match parse_zzbar(text) {
        Ok(q) => Ok(q),
        Err(zz_err) => match parse_real(text) {
            Ok(p) => Ok(to_zzbar(&p)),
            Err(_) => Err(zz_err),
        },
    }
}

fn parse_csv_samples(path: &str) -> Result<BoundaryFunction, Error> {
    let text = fs::read_to_string(path)
        .map_err(|e| bad(format!("cannot read samples from '{path}': {e}")))?;
    let mut values = Vec::new();
    let mut thetas = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').map(str::trim).collect();
        if fields.len() != 2 && fields.len() != 3 {
            return Err(bad(format!(
                "line {}: expected 'theta,value[,imag]'",
                lineno + 1
            )));
        }
        let theta: f64 = fields[0]
            .parse()
            .map_err(|_| bad(format!("line {}: malformed theta", lineno + 1)))?;
        let re: f64 = fields[1]
            .parse()
            .map_err(|_| bad(format!("line {}: malformed value", lineno + 1)))?;
        let im: f64 = if fields.len() == 3 {
            fields[2]
                .parse()
                .map_err(|_| bad(format!("line {}: malformed imag", lineno + 1)))?
        } else {
            0.0
        };
        thetas.push(theta);
        values.push(Complex64::new(re, im));
    }
    let m = values.len();
    for (j, theta) in thetas.iter().enumerate() {
        let expect = std::f64::consts::TAU * j as f64 / m as f64;
        if (theta - expect).abs() > 1e-8 {
            return Err(bad(format!(
                "sample nodes must be equispaced on [0, 2π) starting at 0; node {j} is {theta}, expected {expect}"
            )));
        }
    }
    BoundaryFunction::from_samples(values)
}

/// Evaluator target: `poly:<real text>` (entire plane), `zzbar:<text>`
/// (entire plane, complex-valued) or `harmonic:<real text>` (the disc
/// solution of the given boundary data, on the closed unit disc).
pub fn parse_evaluator(spec: &str) -> Result<Evaluator, Error> {
    let (kind, rest) = spec
        .trim()
        .split_once(':')
        .ok_or_else(|| bad(format!("unknown evaluator '{spec}'")))?;
    match kind {
        "poly" => match parse_real(rest) {
            Ok(p) => Ok(Evaluator::from_real_poly(&p)),
            Err(_) => Ok(Evaluator::from_zzbar_poly(&parse_zzbar(rest)?)),
        },
        "zzbar" => Ok(Evaluator::from_zzbar_poly(&parse_zzbar(rest)?)),
        "harmonic" => Ok(Evaluator::from_harmonic(&solve_disc(&parse_real(rest)?))),
        other => Err(bad(format!("unknown evaluator kind '{other}'"))),
    }
}

/// `"x,y"` pair.
pub fn parse_point(text: &str) -> Result<Complex64, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 2 {
        return Err(bad("expected a point 'x,y'"));
    }
    let x: f64 = parts[0].parse().map_err(|_| bad("malformed x coordinate"))?;
    let y: f64 = parts[1].parse().map_err(|_| bad("malformed y coordinate"))?;
    Ok(Complex64::new(x, y))
}

/// `"cx,cy,side"` triple.
pub fn parse_square(text: &str) -> Result<SquareSpec, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(bad("expected a square 'cx,cy,side'"));
    }
    let nums: Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
    let nums = nums.map_err(|_| bad("malformed square"))?;
    if nums[2] <= 0.0 {
        return Err(bad("square side must be positive"));
    }
    Ok(SquareSpec::new(Complex64::new(nums[0], nums[1]), nums[2]))
}

/// `"x0,y0,x1,y1"` quadruple.
pub fn parse_rect(text: &str) -> Result<Rect, Error> {
    let parts: Vec<&str> = text.split(',').map(str::trim).collect();
    if parts.len() != 4 {
        return Err(bad("expected a rectangle 'x0,y0,x1,y1'"));
    }
    let nums: Result<Vec<f64>, _> = parts.iter().map(|p| p.parse::<f64>()).collect();
    let nums = nums.map_err(|_| bad("malformed rectangle"))?;
    Ok(Rect::new(nums[0], nums[1], nums[2], nums[3]))
}
