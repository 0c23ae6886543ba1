//! Accuracy sweep over the uniform-spread family `p_i = i M / (m + 1)`:
//! exact total variation error of each approximation as a function of `M`.

use std::io::{self, Write};
use std::str::FromStr;

use rayon::prelude::*;

use crate::bounds::bound_report;
use crate::csv::fmt_sig12;
use crate::distributions::{approximate, exact_pmf, Method};
use crate::ensemble::{ensemble_from_spec, GeneratorKind};
use crate::error::{Error, Result};
use crate::metrics::tv_distance;

pub const SWEEP_HEADER: &str =
    "M,poisson,shifted_poisson,binomial1,binomial2,normal,shifted_binomial,tv_bound,loc_bound";

pub const DEFAULT_M: usize = 100;

/// One grid point of the sweep.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub max_prob: f64,
    /// Exact TV distance per approximation, in [`Method::ALL`] order.
    pub tv: [f64; 6],
    pub tv_bound: f64,
    pub loc_bound: f64,
}

impl SweepRow {
    pub fn tv_of(&self, method: Method) -> f64 {
        let idx = Method::ALL
            .iter()
            .position(|&m| m == method)
            .expect("method is listed in Method::ALL");
        self.tv[idx]
    }

    /// Approximation with the smallest TV distance (first one on ties).
    pub fn best(&self) -> Method {
        let mut best = 0;
        for (i, &d) in self.tv.iter().enumerate() {
            if d < self.tv[best] {
                best = i;
            }
        }
        Method::ALL[best]
    }

    pub fn to_csv(&self) -> String {
        let mut fields = vec![fmt_sig12(self.max_prob)];
        fields.extend(self.tv.iter().map(|&d| fmt_sig12(d)));
        for b in [self.tv_bound, self.loc_bound] {
            fields.push(if b.is_finite() {
                fmt_sig12(b)
            } else {
                "n/a".into()
            });
        }
        fields.join(",")
    }
}

/// Evenly spaced grid of `count` values from `start` to `end` inclusive,
/// written `start:end:count`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub end: f64,
    pub count: usize,
}

impl Default for Grid {
    /// `M = 0.05, 0.10, ..., 1.00`.
    fn default() -> Self {
        Self {
            start: 0.05,
            end: 1.0,
            count: 20,
        }
    }
}

impl Grid {
    pub fn new(start: f64, end: f64, count: usize) -> Result<Self> {
        let in_range = |x: f64| x > 0.0 && x <= 1.0;
        if !in_range(start) || !in_range(end) {
            return Err(Error::InvalidParameter {
                name: "grid",
                value: if in_range(start) { end } else { start },
                reason: "grid endpoints must lie in (0, 1]",
            });
        }
        if count == 0 || (count == 1 && start != end) || start > end {
            return Err(Error::InvalidParameter {
                name: "grid",
                value: count as f64,
                reason:
                    "need start <= end and at least one point (one point only when start = end)",
            });
        }
        Ok(Self { start, end, count })
    }

    pub fn points(&self) -> Vec<f64> {
        if self.count == 1 {
            return vec![self.start];
        }
        let span = self.end - self.start;
        let last = (self.count - 1) as f64;
        (0..self.count)
            .map(|i| {
                if i + 1 == self.count {
                    self.end
                } else {
                    self.start + span * i as f64 / last
                }
            })
            .collect()
    }
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            message: format!("grid `{s}` is not of the form start:end:count"),
        };
        let parts: Vec<&str> = s.split(':').collect();
        let [start, end, count] = parts.as_slice() else {
            return Err(bad());
        };
        Grid::new(
            start.trim().parse().map_err(|_| bad())?,
            end.trim().parse().map_err(|_| bad())?,
            count.trim().parse().map_err(|_| bad())?,
        )
    }
}

/// Computes one sweep row for `m` summands and maximum probability `max_prob`.
pub fn sweep_row(m: usize, max_prob: f64) -> Result<SweepRow> {
    let ensemble = ensemble_from_spec(GeneratorKind::UniformSpread, m, max_prob)?;
    let exact = exact_pmf(&ensemble);
    let mut tv = [0.0; 6];
    for (slot, method) in tv.iter_mut().zip(Method::ALL) {
        *slot = tv_distance(&exact, &approximate(&ensemble, method)?.dist);
    }
    let report = bound_report(&ensemble);
    Ok(SweepRow {
        max_prob,
        tv,
        tv_bound: report.tv_bound,
        loc_bound: report.loc_bound,
    })
}

/// Runs the sweep. Rows are computed in parallel and returned in grid order.
pub fn run_sweep(m: usize, grid: &Grid) -> Result<Vec<SweepRow>> {
    if m < 2 {
        return Err(Error::InvalidParameter {
            name: "m",
            value: m as f64,
            reason: "the sweep needs at least two summands",
        });
    }
    grid.points()
        .into_par_iter()
        .map(|max_prob| sweep_row(m, max_prob))
        .collect()
}

pub fn write_sweep_csv<W: Write>(rows: &[SweepRow], mut out: W) -> io::Result<()> {
    writeln!(out, "{SWEEP_HEADER}")?;
    for row in rows {
        writeln!(out, "{}", row.to_csv())?;
    }
    Ok(())
}
