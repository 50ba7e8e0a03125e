//! Experiment rows and their CSV form.
//!
//! Header, exact: `mode,n,m,p,h,rep,K_G,K_perturbed,bound_majorization,
//! applicable,bound_wang,density,wall_time_ms`. Floats carry 6 significant
//! digits; an inapplicable majorization bound prints as an empty field with
//! applicable=false. Float fields are rounded at construction so the CSV
//! round-trips losslessly.

use std::fmt;
use std::path::Path;

use crate::error::{CliError, Result};

pub const CSV_HEADER: &str =
    "mode,n,m,p,h,rep,K_G,K_perturbed,bound_majorization,applicable,bound_wang,density,wall_time_ms";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RecordMode {
    TableAdd,
    TableRemove,
    SweepAdd,
    SweepRemove,
}

impl RecordMode {
    pub fn as_str(&self) -> &'static str {
        match self {
            RecordMode::TableAdd => "table_add",
            RecordMode::TableRemove => "table_remove",
            RecordMode::SweepAdd => "sweep_add",
            RecordMode::SweepRemove => "sweep_remove",
        }
    }

    pub fn is_addition(&self) -> bool {
        matches!(self, RecordMode::TableAdd | RecordMode::SweepAdd)
    }

    fn parse(s: &str) -> Option<Self> {
        match s {
            "table_add" => Some(RecordMode::TableAdd),
            "table_remove" => Some(RecordMode::TableRemove),
            "sweep_add" => Some(RecordMode::SweepAdd),
            "sweep_remove" => Some(RecordMode::SweepRemove),
            _ => None,
        }
    }
}

impl fmt::Display for RecordMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One table or sweep row. Base-graph statistics (n, m, density, K_G)
/// describe the unperturbed graph; the same (n, rep) pair identifies the
/// same base graph across the h values of a sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentRecord {
    pub mode: RecordMode,
    pub n: usize,
    pub m: usize,
    pub p: f64,
    pub h: usize,
    pub rep: u64,
    pub k_g: f64,
    pub k_perturbed: f64,
    pub bound_majorization: Option<f64>,
    pub applicable: bool,
    pub bound_wang: Option<f64>,
    pub density: f64,
    pub wall_time_ms: u64,
}

/// Formats with 6 significant digits.
pub fn fmt_sig(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    let decimals = (5 - exp).max(0) as usize;
    format!("{x:.decimals$}")
}

/// Rounds to the value the CSV will carry.
pub fn round_sig(x: f64) -> f64 {
    fmt_sig(x).parse().expect("sig-digit format is parseable")
}

impl ExperimentRecord {
    /// The record's own consistency requirements: the perturbation moves
    /// K in the right direction and no bound exceeds the exact value.
    /// Direction is non-strict because a tiny true change can round away
    /// at 6 significant digits.
    pub fn check_invariants(&self) -> Result<()> {
        let ordered = if self.mode.is_addition() {
            self.k_perturbed <= self.k_g
        } else {
            self.k_perturbed >= self.k_g
        };
        if !ordered {
            return Err(CliError::BadConfig(format!(
                "record violates perturbation direction: K_G = {}, K_perturbed = {} ({})",
                self.k_g, self.k_perturbed, self.mode
            )));
        }
        for bound in [self.bound_majorization, self.bound_wang].into_iter().flatten() {
            if bound > self.k_perturbed * (1.0 + 1e-8) {
                return Err(CliError::BadConfig(format!(
                    "bound {bound} exceeds exact K {}", self.k_perturbed
                )));
            }
        }
        if self.bound_majorization.is_some() != self.applicable {
            return Err(CliError::BadConfig(
                "bound_majorization presence must match the applicable flag".into(),
            ));
        }
        Ok(())
    }

    fn to_csv_line(&self) -> String {
        let opt = |v: Option<f64>| v.map(fmt_sig).unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{},{}",
            self.mode,
            self.n,
            self.m,
            fmt_sig(self.p),
            self.h,
            self.rep,
            fmt_sig(self.k_g),
            fmt_sig(self.k_perturbed),
            opt(self.bound_majorization),
            self.applicable,
            opt(self.bound_wang),
            fmt_sig(self.density),
            self.wall_time_ms,
        )
    }

    fn from_csv_line(line: &str, lineno: usize) -> Result<Self> {
        let err = |message: String| CliError::CsvParse { line: lineno, message };
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() != 13 {
            return Err(err(format!("expected 13 fields, got {}", fields.len())));
        }
        fn field<T: std::str::FromStr>(s: &str, name: &str, lineno: usize) -> Result<T> {
            s.parse().map_err(|_| CliError::CsvParse {
                line: lineno,
                message: format!("bad {name}: {s:?}"),
            })
        }
        let opt_field = |s: &str, name: &str| -> Result<Option<f64>> {
            if s.is_empty() {
                Ok(None)
            } else {
                field(s, name, lineno).map(Some)
            }
        };
        Ok(ExperimentRecord {
            mode: RecordMode::parse(fields[0])
                .ok_or_else(|| err(format!("unknown mode {:?}", fields[0])))?,
            n: field(fields[1], "n", lineno)?,
            m: field(fields[2], "m", lineno)?,
            p: field(fields[3], "p", lineno)?,
            h: field(fields[4], "h", lineno)?,
            rep: field(fields[5], "rep", lineno)?,
            k_g: field(fields[6], "K_G", lineno)?,
            k_perturbed: field(fields[7], "K_perturbed", lineno)?,
            bound_majorization: opt_field(fields[8], "bound_majorization")?,
            applicable: field(fields[9], "applicable", lineno)?,
            bound_wang: opt_field(fields[10], "bound_wang")?,
            density: field(fields[11], "density", lineno)?,
            wall_time_ms: field(fields[12], "wall_time_ms", lineno)?,
        })
    }
}

pub fn to_csv_string(records: &[ExperimentRecord]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&r.to_csv_line());
        out.push('\n');
    }
    out
}

pub fn write_csv(records: &[ExperimentRecord], path: &Path) -> Result<()> {
    std::fs::write(path, to_csv_string(records))?;
    Ok(())
}

pub fn parse_csv(text: &str) -> Result<Vec<ExperimentRecord>> {
    let mut lines = text.lines().enumerate();
    match lines.next() {
        Some((_, header)) if header == CSV_HEADER => {}
        other => {
            return Err(CliError::CsvParse {
                line: 1,
                message: format!("bad header: {:?}", other.map(|(_, h)| h)),
            })
        }
    }
    lines
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| ExperimentRecord::from_csv_line(l, i + 1))
        .collect()
}

pub fn read_csv(path: &Path) -> Result<Vec<ExperimentRecord>> {
    parse_csv(&std::fs::read_to_string(path)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample_record() -> ExperimentRecord {
        ExperimentRecord {
            mode: RecordMode::TableAdd,
            n: 10,
            m: 24,
            p: 0.5,
            h: 1,
            rep: 0,
            k_g: round_sig(19.857_341_2),
            k_perturbed: round_sig(18.973_412_9),
            bound_majorization: Some(round_sig(16.525_551)),
            applicable: true,
            bound_wang: Some(round_sig(1.805_213)),
            density: round_sig(0.533_333_33),
            wall_time_ms: 3,
        }
    }

    #[test]
    fn sig_digit_formatting() {
        assert_eq!(fmt_sig(1999.246), "1999.25");
        assert_eq!(fmt_sig(0.5333333), "0.533333");
        assert_eq!(fmt_sig(0.5), "0.500000");
        assert_eq!(fmt_sig(188.4932), "188.493");
        assert_eq!(fmt_sig(0.0), "0");
        assert_eq!(fmt_sig(1234567.0), "1234567");
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let records = vec![
            sample_record(),
            ExperimentRecord {
                mode: RecordMode::SweepRemove,
                bound_majorization: None,
                applicable: false,
                bound_wang: None,
                h: 3,
                k_perturbed: round_sig(21.17),
                ..sample_record()
            },
        ];
        let text = to_csv_string(&records);
        let parsed = parse_csv(&text).unwrap();
        assert_eq!(parsed, records);
        assert_eq!(to_csv_string(&parsed), text);
    }

    #[test]
    fn parse_rejects_bad_header() {
        assert!(matches!(
            parse_csv("a,b,c\n"),
            Err(CliError::CsvParse { line: 1, .. })
        ));
    }

    #[test]
    fn invariants_catch_wrong_direction() {
        let mut r = sample_record();
        r.check_invariants().unwrap();
        r.k_perturbed = r.k_g + 1.0;
        assert!(r.check_invariants().is_err());
    }
}
