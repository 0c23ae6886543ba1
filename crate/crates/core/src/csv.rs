//! CSV text formats: PMFs as `k,mass` rows and decimals with twelve
//! significant digits.

use std::io::{self, Write};

use crate::distributions::IntegerDistribution;
use crate::error::{Error, Result};

pub const PMF_HEADER: &str = "k,mass";

/// Formats `x` like C's `%.12g`: twelve significant digits, trailing zeros
/// dropped, scientific notation outside `[1e-4, 1e12)`.
pub fn fmt_sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return if x.is_nan() {
            "nan".into()
        } else if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        };
    }
    // Round first so the exponent reflects the printed mantissa.
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("`e` formatting has an exponent");
    let exp: i32 = exp.parse().expect("exponent is an integer");
    if (-4..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}

pub fn write_pmf_csv<W: Write>(dist: &IntegerDistribution, mut out: W) -> io::Result<()> {
    writeln!(out, "{PMF_HEADER}")?;
    for (k, w) in dist.iter() {
        writeln!(out, "{k},{}", fmt_sig12(w))?;
    }
    Ok(())
}

/// Parses `k,mass` rows (header and `#` comment lines optional). Support
/// points must be strictly increasing; gaps are filled with zero mass.
pub fn parse_pmf_csv(text: &str) -> Result<IntegerDistribution> {
    let mut rows: Vec<(i64, f64)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line == PMF_HEADER {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let (k, w) = line
            .split_once(',')
            .ok_or_else(|| err(format!("expected `k,mass`, got `{line}`")))?;
        let k: i64 = k
            .trim()
            .parse()
            .map_err(|_| err(format!("`{k}` is not an integer")))?;
        let w: f64 = w
            .trim()
            .parse()
            .map_err(|_| err(format!("`{w}` is not a number")))?;
        if let Some(&(prev, _)) = rows.last() {
            if k <= prev {
                return Err(err(format!("support point {k} does not follow {prev}")));
            }
        }
        rows.push((k, w));
    }
    let Some(&(offset, _)) = rows.first() else {
        return Err(Error::Parse {
            line: 1,
            message: "no PMF rows".into(),
        });
    };
    let last = rows.last().map(|&(k, _)| k).unwrap_or(offset);
    let mut masses = vec![0.0; (last - offset + 1) as usize];
    for (k, w) in rows {
        masses[(k - offset) as usize] = w;
    }
    IntegerDistribution::new(offset, masses)
}
