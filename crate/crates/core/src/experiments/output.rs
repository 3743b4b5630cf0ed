//! CSV artifacts.
//!
//! Series: `protocol,alpha,seed,n,epsilon`. Fit table:
//! `protocol,alpha,seed,beta,intercept,rms_residual,n_min,n_max`. Floating values are
//! written with 17 significant digits so that parsing them back is lossless.

use std::io::{Read, Write};

use serde::Deserialize;

use super::{BetaRow, ConvergenceSeries, FitOutcome, PowerLawFit, Protocol};
use crate::error::{Error, Result};

pub const SERIES_HEADER: [&str; 5] = ["protocol", "alpha", "seed", "n", "epsilon"];
pub const FIT_HEADER: [&str; 8] = [
    "protocol",
    "alpha",
    "seed",
    "beta",
    "intercept",
    "rms_residual",
    "n_min",
    "n_max",
];

/// Marker written in the `beta` column for series without a measurable slope.
pub const DEGENERATE: &str = "degenerate";

fn sci(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_err(e: csv::Error) -> Error {
    Error::InvalidArgument(format!("csv: {e}"))
}

pub fn write_series<W: Write>(out: W, series: &[ConvergenceSeries]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(SERIES_HEADER).map_err(csv_err)?;
    for s in series {
        for &(n, eps) in &s.points {
            w.write_record([
                s.protocol.as_str().to_string(),
                s.alpha.to_string(),
                s.seed.to_string(),
                n.to_string(),
                sci(eps),
            ])
            .map_err(csv_err)?;
        }
    }
    w.flush().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
}

#[derive(Deserialize)]
struct SeriesRecord {
    protocol: String,
    alpha: f64,
    seed: u64,
    n: u64,
    epsilon: f64,
}

/// Parses a series CSV; consecutive rows with the same `(protocol, alpha, seed)` form one series.
pub fn read_series<R: Read>(input: R) -> Result<Vec<ConvergenceSeries>> {
    let mut r = csv::Reader::from_reader(input);
    let mut out: Vec<ConvergenceSeries> = Vec::new();
    for rec in r.deserialize::<SeriesRecord>() {
        let rec = rec.map_err(csv_err)?;
        let protocol: Protocol = rec.protocol.parse()?;
        match out.last_mut() {
            Some(s) if s.protocol == protocol && s.alpha == rec.alpha && s.seed == rec.seed => {
                s.points.push((rec.n, rec.epsilon))
            }
            _ => out.push(ConvergenceSeries {
                protocol,
                alpha: rec.alpha,
                seed: rec.seed,
                points: vec![(rec.n, rec.epsilon)],
            }),
        }
    }
    Ok(out)
}

/// One fit-table row.
#[derive(Debug, Clone, PartialEq)]
pub struct FitRow {
    pub protocol: Protocol,
    pub alpha: f64,
    pub seed: u64,
    pub window: (u64, u64),
    pub outcome: FitOutcome,
}

impl FitRow {
    pub fn from_beta(protocol: Protocol, row: &BetaRow, window: (u64, u64)) -> Self {
        Self {
            protocol,
            alpha: row.alpha,
            seed: row.seed,
            window,
            outcome: row.outcome,
        }
    }
}

pub fn write_fits<W: Write>(out: W, rows: &[FitRow]) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(FIT_HEADER).map_err(csv_err)?;
    for r in rows {
        let (beta, intercept, rms) = match r.outcome {
            FitOutcome::Fit(f) => (sci(f.slope), sci(f.intercept), sci(f.rms_residual)),
            FitOutcome::Degenerate => (DEGENERATE.to_string(), String::new(), String::new()),
        };
        w.write_record([
            r.protocol.as_str().to_string(),
            r.alpha.to_string(),
            r.seed.to_string(),
            beta,
            intercept,
            rms,
            r.window.0.to_string(),
            r.window.1.to_string(),
        ])
        .map_err(csv_err)?;
    }
    w.flush().map_err(|e| Error::InvalidArgument(format!("csv: {e}")))
}

#[derive(Deserialize)]
struct FitRecord {
    protocol: String,
    alpha: f64,
    seed: u64,
    beta: String,
    intercept: String,
    rms_residual: String,
    n_min: u64,
    n_max: u64,
}

/// Parses a fit table. `point_count` is not stored in the file and comes back as 0.
pub fn read_fits<R: Read>(input: R) -> Result<Vec<FitRow>> {
    let num = |s: &str| {
        s.parse::<f64>()
            .map_err(|e| Error::InvalidArgument(format!("fit table value {s:?}: {e}")))
    };
    let mut r = csv::Reader::from_reader(input);
    let mut out = Vec::new();
    for rec in r.deserialize::<FitRecord>() {
        let rec = rec.map_err(csv_err)?;
        let window = (rec.n_min, rec.n_max);
        let outcome = if rec.beta == DEGENERATE {
            FitOutcome::Degenerate
        } else {
            FitOutcome::Fit(PowerLawFit {
                slope: num(&rec.beta)?,
                intercept: num(&rec.intercept)?,
                window,
                rms_residual: num(&rec.rms_residual)?,
                point_count: 0,
            })
        };
        out.push(FitRow {
            protocol: rec.protocol.parse()?,
            alpha: rec.alpha,
            seed: rec.seed,
            window,
            outcome,
        });
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn series_round_trip_is_lossless() {
        let series = vec![
            ConvergenceSeries {
                protocol: Protocol::Zeno,
                alpha: 0.15,
                seed: 3,
                points: vec![(10, 0.1 + 0.2), (100, 1.234_567_890_123_456_7e-9)],
            },
            ConvergenceSeries {
                protocol: Protocol::Zeno,
                alpha: 0.3,
                seed: 3,
                points: vec![(10, std::f64::consts::PI)],
            },
        ];
        let mut buf = Vec::new();
        write_series(&mut buf, &series).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.starts_with("protocol,alpha,seed,n,epsilon\n"));
        assert_eq!(read_series(buf.as_slice()).unwrap(), series);
    }

    #[test]
    fn degenerate_marker() {
        let rows = vec![FitRow {
            protocol: Protocol::Trotter,
            alpha: 0.5,
            seed: 0,
            window: (10, 100),
            outcome: FitOutcome::Degenerate,
        }];
        let mut buf = Vec::new();
        write_fits(&mut buf, &rows).unwrap();
        let text = String::from_utf8(buf.clone()).unwrap();
        assert!(text.contains("trotter,0.5,0,degenerate,,,10,100"));
        assert_eq!(read_fits(buf.as_slice()).unwrap(), rows);
    }
}
