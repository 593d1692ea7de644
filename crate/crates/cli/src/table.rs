//! CSV bound tables: header row, one row per grid point, every real printed
//! with 12 significant digits.

use qramsey::bounds::{
    chappell_gimbel_exact, chappell_gimbel_upper, conclusion_brackets, fixed_lower_bound_lll, lambda_star,
    variable_lower_bound, Regime,
};

use crate::{usage, TableKind};

/// `start:end:step` gives `count = round((end - start) / step) + 1` points
/// `start + i (end - start) / (count - 1)`, so the end point is hit exactly.
/// A bare number is a one-point grid.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = spec.split(':').collect();
    let num = |s: &str| -> Result<f64, String> {
        let x: f64 = s.trim().parse().map_err(|_| format!("`{s}` in grid `{spec}` is not a number"))?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(format!("grid values must be finite, got `{s}`"))
        }
    };
    match parts.as_slice() {
        [x] => Ok(vec![num(x)?]),
        [a, b, s] => {
            let (start, end, step) = (num(a)?, num(b)?, num(s)?);
            if !(step > 0.0) || end < start {
                return Err(format!("grid `{spec}` needs start <= end and step > 0"));
            }
            let intervals = ((end - start) / step).round();
            if intervals > 10_000_000.0 {
                return Err(format!("grid `{spec}` has too many points"));
            }
            let intervals = intervals as usize;
            if intervals == 0 {
                return Ok(vec![start]);
            }
            Ok((0..=intervals)
                .map(|i| start + i as f64 * (end - start) / intervals as f64)
                .collect())
        }
        _ => Err(format!("grid `{spec}` is not of the form start:end:step")),
    }
}

/// 12 significant digits, positional notation for moderate magnitudes.
pub fn fmt_real(x: f64) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return "0.00000000000".into();
    }
    let exponent = x.abs().log10().floor() as i32;
    // Rounding to 12 digits can carry into the next decade.
    let scientific = format!("{:.11e}", x);
    let exponent = scientific
        .rsplit_once('e')
        .and_then(|(_, e)| e.parse::<i32>().ok())
        .unwrap_or(exponent);
    if (-5..12).contains(&exponent) {
        format!("{:.*}", (11 - exponent) as usize, x)
    } else {
        scientific
    }
}

fn integer_points(grid: &[f64], what: &str) -> anyhow::Result<Vec<u64>> {
    grid.iter()
        .map(|&x| {
            if x >= 0.0 && x.fract() == 0.0 {
                Ok(x as u64)
            } else {
                Err(usage(format!("{what} grid values must be non-negative integers, got {x}")))
            }
        })
        .collect()
}

pub fn render(kind: TableKind, grid: &[f64], k: Option<u64>) -> anyhow::Result<Vec<u8>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let need_k = || k.ok_or_else(|| usage("this table requires --k"));
    match kind {
        TableKind::Lambda => {
            w.write_record(["name", "x", "value"])?;
            for &x in grid {
                w.write_record(["lambda_star".into(), fmt_real(x), fmt_real(lambda_star(x))])?;
            }
        }
        TableKind::VariableLower | TableKind::FixedLower => {
            let k = need_k()?;
            let (name, f): (&str, fn(u64, f64) -> qramsey::Result<f64>) = match kind {
                TableKind::VariableLower => ("variable_lower", variable_lower_bound),
                _ => ("fixed_lower", fixed_lower_bound_lll),
            };
            w.write_record(["name", "k", "eps", "value"])?;
            for &eps in grid {
                w.write_record([name.into(), k.to_string(), fmt_real(eps), fmt_real(f(k, eps)?)])?;
            }
        }
        TableKind::Brackets => {
            let k = need_k()?;
            w.write_record([
                "name",
                "alpha",
                "k",
                "regime",
                "lower",
                "upper",
                "implied_lower",
                "implied_upper",
            ])?;
            for &alpha in grid {
                // Grid points between the two regimes have no bracket.
                let Ok(b) = conclusion_brackets(alpha, k) else { continue };
                let regime = match b.regime {
                    Regime::Exponential => "exponential",
                    Regime::Linear => "linear",
                };
                w.write_record([
                    "brackets".into(),
                    fmt_real(alpha),
                    k.to_string(),
                    regime.into(),
                    fmt_real(b.normalised.0),
                    fmt_real(b.normalised.1),
                    fmt_real(b.implied.0),
                    fmt_real(b.implied.1),
                ])?;
            }
        }
        TableKind::Cg => {
            let k = need_k()?;
            w.write_record(["name", "k", "t", "upper", "exact"])?;
            for t in integer_points(grid, "t")? {
                let upper = chappell_gimbel_upper(k, t)?;
                let exact = chappell_gimbel_exact(k, t)?.map(|v| v.to_string()).unwrap_or_default();
                w.write_record(["chappell_gimbel".into(), k.to_string(), t.to_string(), upper.to_string(), exact])?;
            }
        }
    }
    Ok(w.into_inner().map_err(|e| anyhow::anyhow!("csv: {e}"))?)
}
