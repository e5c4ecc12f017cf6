use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use altexp::altgroup::is_semidominant;
use altexp::expcore::{eval_e, eval_e_minus, eval_e_plus};
use altexp::finite::{
    self,
    io::{from_json, read_csv, to_json, write_csv},
    CoefficientMap, FieldKind, GridSpec, KeyedValues, SampleField, Samples,
};
use serde_json::json;

use crate::args::{EvalArgs, FileFormat, InterpolateArgs, TransformArgs, VerifyArgs};
use crate::verify::{self, VerifyConfig};
use crate::Failure;

fn usage(message: impl Into<String>) -> Failure {
    Failure::Usage(message.into())
}

fn open_output(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(
            File::create(p).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn read_text(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Parses a points file: one point per line, coordinates separated by
/// commas and/or whitespace; blank lines and `#` comments are skipped.
pub fn parse_points(text: &str, n: usize) -> Result<Vec<Vec<f64>>, Failure> {
    let mut points = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let coords = line
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<f64>().map_err(|e| usage(format!("line {}: {t:?}: {e}", i + 1))))
            .collect::<Result<Vec<_>, _>>()?;
        if coords.len() != n {
            return Err(usage(format!("line {}: expected {n} coordinates, got {}", i + 1, coords.len())));
        }
        points.push(coords);
    }
    Ok(points)
}

fn lattice(n: usize, density: usize) -> Vec<Vec<f64>> {
    let side = density + 1;
    (0..side.pow(n as u32))
        .map(|mut flat| {
            let mut x = vec![0.0; n];
            for slot in x.iter_mut().rev() {
                *slot = (flat % side) as f64 / density as f64;
                flat /= side;
            }
            x
        })
        .collect()
}

pub fn eval(args: &EvalArgs) -> Result<(), Failure> {
    let weight: Vec<f64> = match (&args.lambda, &args.m) {
        (Some(l), _) => l.clone(),
        (None, Some(m)) => m.iter().map(|&k| k as f64).collect(),
        (None, None) => return Err(usage("one of --lambda or --m is required")),
    };
    let n = weight.len();
    if n == 0 {
        return Err(usage("the weight is empty"));
    }
    if let Some(expected) = args.n {
        if expected != n {
            return Err(usage(format!("--n {expected} but the weight has {n} entries")));
        }
    }
    let points = match (&args.input, args.density) {
        (Some(path), _) => parse_points(&read_text(path)?, n)?,
        (None, Some(0)) => return Err(usage("--N must be at least 1")),
        (None, Some(density)) => lattice(n, density),
        (None, None) => return Err(usage("give --input or a lattice density --N")),
    };
    let rows = points
        .iter()
        .map(|x| Ok((x, eval_e(&weight, x)?, eval_e_plus(&weight, x)?, eval_e_minus(&weight, x)?)))
        .collect::<altexp::Result<Vec<_>>>()?;
    let out = open_output(args.output.as_deref())?;
    match args.format {
        FileFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            let mut header: Vec<String> = (1..=n).map(|i| format!("x_{i}")).collect();
            header.extend(["re_E", "im_E", "re_E_plus", "im_E_plus", "re_E_minus", "im_E_minus"].map(String::from));
            w.write_record(&header).map_err(|e| usage(e.to_string()))?;
            for (x, e, p, m) in &rows {
                let mut record: Vec<String> = x.iter().map(f64::to_string).collect();
                for v in [e, p, m] {
                    record.push(v.re.to_string());
                    record.push(v.im.to_string());
                }
                w.write_record(&record).map_err(|e| usage(e.to_string()))?;
            }
            w.flush().map_err(|e| usage(e.to_string()))?;
        }
        FileFormat::Json => {
            let rows: Vec<_> = rows
                .iter()
                .map(|(x, e, p, m)| {
                    json!({
                        "x": x,
                        "E": [e.re, e.im],
                        "E_plus": [p.re, p.im],
                        "E_minus": [m.re, m.im],
                    })
                })
                .collect();
            let doc = json!({ "lambda": weight, "rows": rows });
            write_json(out, &doc)?;
        }
    }
    Ok(())
}

fn write_json(mut out: Box<dyn Write>, doc: &serde_json::Value) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut out, doc).map_err(|e| usage(e.to_string()))?;
    writeln!(out).and_then(|_| out.flush()).map_err(|e| usage(e.to_string()))
}

fn resolve_format(args: &TransformArgs) -> Result<FileFormat, Failure> {
    if let Some(f) = args.format {
        return Ok(f);
    }
    match args.input.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => Ok(FileFormat::Csv),
        Some(ext) if ext.eq_ignore_ascii_case("json") => Ok(FileFormat::Json),
        _ => Err(usage(format!(
            "cannot infer the format of {}; pass --format",
            args.input.display()
        ))),
    }
}

fn read_field<K: FieldKind>(args: &TransformArgs, format: FileFormat) -> Result<KeyedValues<K>, Failure> {
    let field: KeyedValues<K> = match format {
        FileFormat::Json => from_json(&read_text(&args.input)?)?,
        FileFormat::Csv => {
            let density = args.density.ok_or_else(|| usage("CSV input needs the grid density --N"))?;
            let file = File::open(&args.input).map_err(|e| usage(format!("{}: {e}", args.input.display())))?;
            read_csv(file, density)?
        }
    };
    if let Some(density) = args.density {
        if density != field.density() {
            return Err(usage(format!("--N {density} but the file has N = {}", field.density())));
        }
    }
    if let Some(n) = args.n {
        if n != field.dimension() {
            return Err(usage(format!("--n {n} but the file has n = {}", field.dimension())));
        }
    }
    Ok(field)
}

fn write_field<K: FieldKind>(field: &KeyedValues<K>, path: Option<&Path>, format: FileFormat) -> Result<(), Failure> {
    let mut out = open_output(path)?;
    match format {
        FileFormat::Json => {
            out.write_all(to_json(field)?.as_bytes()).map_err(|e| usage(e.to_string()))?;
            writeln!(out).map_err(|e| usage(e.to_string()))?;
        }
        FileFormat::Csv => write_csv(field, &mut out)?,
    }
    out.flush().map_err(|e| usage(e.to_string()))
}

pub fn forward(args: &TransformArgs) -> Result<(), Failure> {
    let format = resolve_format(args)?;
    let f: SampleField = read_field(args, format)?;
    let grid = GridSpec::new(f.dimension(), f.density())?;
    let a = finite::forward(&f, &grid)?;
    write_field(&a, args.output.as_deref(), format)
}

pub fn inverse(args: &TransformArgs) -> Result<(), Failure> {
    let format = resolve_format(args)?;
    let a: CoefficientMap = read_field(args, format)?;
    let grid = GridSpec::new(a.dimension(), a.density())?;
    let f = finite::inverse(&a, &grid)?;
    write_field(&f, args.output.as_deref(), format)
}

/// Probe numerators `k ∈ [0, R]^n`, semidominant, i.e. `k/R` in the closed
/// affine fundamental domain.
fn probe_lattice(n: usize, resolution: usize) -> Vec<Vec<i64>> {
    let side = resolution + 1;
    (0..side.pow(n as u32))
        .map(|mut flat| {
            let mut k = vec![0i64; n];
            for slot in k.iter_mut().rev() {
                *slot = (flat % side) as i64;
                flat /= side;
            }
            k
        })
        .filter(|k| is_semidominant(k))
        .collect()
}

pub fn interpolate(args: &InterpolateArgs) -> Result<(), Failure> {
    if args.resolution == 0 {
        return Err(usage("--resolution must be at least 1"));
    }
    let format = resolve_format(&args.io)?;
    let a: CoefficientMap = read_field(&args.io, format)?;
    let grid = GridSpec::new(a.dimension(), a.density())?;
    a.validate(&grid)?;
    let r = args.resolution;
    let entries = probe_lattice(a.dimension(), r)
        .into_iter()
        .map(|k| {
            let x: Vec<f64> = k.iter().map(|&v| v as f64 / r as f64).collect();
            Ok((k, finite::interpolate(&a, &x)?))
        })
        .collect::<altexp::Result<Vec<_>>>()?;
    let dense = KeyedValues::<Samples>::from_entries(a.dimension(), r, entries);
    write_field(&dense, args.io.output.as_deref(), format)
}

pub fn verify(args: &VerifyArgs) -> Result<(), Failure> {
    if args.format == Some(FileFormat::Csv) {
        return Err(usage("verify reports are text or json"));
    }
    let dimensions = match args.n {
        Some(n) if (2..=4).contains(&n) => vec![n],
        Some(n) => return Err(usage(format!("verify supports n = 2..4, got {n}"))),
        None => vec![2, 3],
    };
    if args.density < 2 {
        return Err(usage("--N must be at least 2"));
    }
    if let Some(t) = args.tolerance {
        if !(t >= 0.0) {
            return Err(usage(format!("--tolerance must be nonnegative, got {t}")));
        }
    }
    let config = VerifyConfig {
        dimensions,
        max_density: args.density,
        seed: args.seed,
        tolerance: args.tolerance,
        resolution: args.resolution,
        box_size: args.box_size,
        quad_points: args.quad_points,
    };
    let report = verify::run(&config)?;
    let doc = serde_json::to_value(&report).map_err(|e| usage(e.to_string()))?;
    if let Some(path) = &args.output {
        write_json(open_output(Some(path))?, &doc)?;
    }
    if args.format == Some(FileFormat::Json) {
        write_json(open_output(None)?, &doc)?;
    } else {
        print!("{}", report.to_text());
    }
    if report.passed {
        Ok(())
    } else {
        Err(Failure::Verification(report.failures()))
    }
}
