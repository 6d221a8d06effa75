//! Line-spectrum representations of atomic dipole response.
//!
//! A [`SpectrumModel`] is an ordered list of excitation lines (energy,
//! oscillator strength). Three sources exist: the analytic hydrogen
//! bound-state series, pseudospectra exported from the radial grid, and user
//! files in the `polarix-spectrum v1` format.

use std::fmt;
use std::io::{self, BufRead, Write};
use std::path::Path;
use thiserror::Error;

/// Relative tolerance below which two line energies are considered colliding.
pub const LINE_COLLISION_TOL: f64 = 1e-12;

pub const SPECTRUM_HEADER: &str = "# polarix-spectrum v1";

#[derive(Debug, Error)]
pub enum SpectrumError {
    #[error("n_max must be at least 2, got {0}")]
    NmaxTooSmall(u32),
    #[error("record {line_no} ({record:?}): {reason}")]
    BadRecord {
        line_no: usize,
        record: String,
        reason: String,
    },
    #[error("missing or wrong header: expected {SPECTRUM_HEADER:?}")]
    BadHeader,
    #[error("lines {first} and {second} collide: delta_e {a} and {b} agree within 1e-12 relative")]
    LineCollision {
        first: String,
        second: String,
        a: f64,
        b: f64,
    },
    #[error("excitation energy must be positive, line {label:?} has delta_e = {delta_e}")]
    NonPositiveEnergy { label: String, delta_e: f64 },
    #[error("oscillator strength must be nonnegative, line {label:?} has f = {f}")]
    NegativeStrength { label: String, f: f64 },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// One discrete excitation line.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectralLine {
    /// Excitation energy E_n − E in Hartree, > 0.
    pub delta_e: f64,
    /// Dimensionless oscillator strength f_{n0} ≥ 0.
    pub f: f64,
    pub label: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumSource {
    HydrogenAnalytic,
    Pseudospectrum,
    File,
}

impl fmt::Display for SpectrumSource {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectrumSource::HydrogenAnalytic => write!(out, "hydrogen-analytic"),
            SpectrumSource::Pseudospectrum => write!(out, "pseudospectrum"),
            SpectrumSource::File => write!(out, "file"),
        }
    }
}

/// Validated, sorted line list. Immutable after construction.
#[derive(Debug, Clone)]
pub struct SpectrumModel {
    lines: Vec<SpectralLine>,
    n_electrons: u32,
    source: SpectrumSource,
}

impl SpectrumModel {
    /// Sorts by excitation energy and validates every invariant. Colliding
    /// lines are rejected rather than merged, to surface basis pathologies.
    pub fn new(
        mut lines: Vec<SpectralLine>,
        n_electrons: u32,
        source: SpectrumSource,
    ) -> Result<Self, SpectrumError> {
        for line in &lines {
            if line.delta_e.is_nan() || line.delta_e <= 0.0 {
                return Err(SpectrumError::NonPositiveEnergy {
                    label: line.label.clone(),
                    delta_e: line.delta_e,
                });
            }
            if line.f.is_nan() || line.f < 0.0 {
                return Err(SpectrumError::NegativeStrength {
                    label: line.label.clone(),
                    f: line.f,
                });
            }
        }
        lines.sort_by(|a, b| a.delta_e.total_cmp(&b.delta_e));
        for pair in lines.windows(2) {
            let (a, b) = (pair[0].delta_e, pair[1].delta_e);
            if b - a <= LINE_COLLISION_TOL * b.abs().max(a.abs()) {
                return Err(SpectrumError::LineCollision {
                    first: pair[0].label.clone(),
                    second: pair[1].label.clone(),
                    a,
                    b,
                });
            }
        }
        Ok(Self {
            lines,
            n_electrons,
            source,
        })
    }

    /// A model with no lines; every response evaluates to zero.
    pub fn empty() -> Self {
        Self {
            lines: Vec::new(),
            n_electrons: 1,
            source: SpectrumSource::File,
        }
    }

    pub fn lines(&self) -> &[SpectralLine] {
        &self.lines
    }

    pub fn n_electrons(&self) -> u32 {
        self.n_electrons
    }

    pub fn source(&self) -> SpectrumSource {
        self.source
    }

    pub fn is_empty(&self) -> bool {
        self.lines.is_empty()
    }
}

/// Analytic 1s→np oscillator strengths, f_n = 2⁸n⁵(n−1)^{2n−4} / (3(n+1)^{2n+4}),
/// with delta_e = ½(1 − 1/n²) Hartree, for n = 2..=n_max.
///
/// Evaluated in log space so large n does not overflow.
pub fn hydrogen_bound_lines(n_max: u32) -> Result<SpectrumModel, SpectrumError> {
    if n_max < 2 {
        return Err(SpectrumError::NmaxTooSmall(n_max));
    }
    let lines = (2..=n_max)
        .map(|n| {
            let nf = f64::from(n);
            let ln_f = 8.0 * 2f64.ln() + 5.0 * nf.ln() + (2.0 * nf - 4.0) * (nf - 1.0).ln()
                - 3f64.ln()
                - (2.0 * nf + 4.0) * (nf + 1.0).ln();
            SpectralLine {
                delta_e: 0.5 * (1.0 - 1.0 / (nf * nf)),
                f: ln_f.exp(),
                label: format!("{n}p"),
            }
        })
        .collect();
    SpectrumModel::new(lines, 1, SpectrumSource::HydrogenAnalytic)
}

/// Thomas–Reiche–Kuhn sum Σ f over all lines (compensated summation).
pub fn trk_sum(model: &SpectrumModel) -> f64 {
    neumaier_sum(model.lines.iter().map(|l| l.f))
}

/// Neumaier-compensated sum, deterministic in iteration order.
pub fn neumaier_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0;
    let mut comp = 0.0;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            comp += (sum - t) + v;
        } else {
            comp += (v - t) + sum;
        }
        sum = t;
    }
    sum + comp
}

/// Write in the `polarix-spectrum v1` format with 17 significant digits.
pub fn write_spectrum(model: &SpectrumModel, mut out: impl Write) -> io::Result<()> {
    writeln!(out, "{SPECTRUM_HEADER}")?;
    writeln!(out, "# n_electrons: {}", model.n_electrons)?;
    writeln!(out, "# delta_e_hartree,f,label")?;
    for line in &model.lines {
        writeln!(out, "{:.16e},{:.16e},{}", line.delta_e, line.f, line.label)?;
    }
    Ok(())
}

pub fn save_spectrum(model: &SpectrumModel, path: impl AsRef<Path>) -> Result<(), SpectrumError> {
    let file = std::fs::File::create(path)?;
    write_spectrum(model, io::BufWriter::new(file))?;
    Ok(())
}

/// Parse the `polarix-spectrum v1` format. Every malformed record is rejected
/// with its line number and text.
pub fn read_spectrum(input: impl BufRead) -> Result<SpectrumModel, SpectrumError> {
    let mut lines = Vec::new();
    let mut n_electrons = 1;
    let mut saw_header = false;
    for (idx, raw) in input.lines().enumerate() {
        let raw = raw?;
        let line_no = idx + 1;
        let text = raw.trim();
        if idx == 0 {
            if text != SPECTRUM_HEADER {
                return Err(SpectrumError::BadHeader);
            }
            saw_header = true;
            continue;
        }
        if text.is_empty() {
            continue;
        }
        if let Some(rest) = text.strip_prefix('#') {
            if let Some(v) = rest.trim().strip_prefix("n_electrons:") {
                n_electrons = v.trim().parse().map_err(|e| SpectrumError::BadRecord {
                    line_no,
                    record: raw.clone(),
                    reason: format!("bad n_electrons: {e}"),
                })?;
            }
            continue;
        }
        let mut fields = text.splitn(3, ',');
        let bad = |reason: String| SpectrumError::BadRecord {
            line_no,
            record: raw.clone(),
            reason,
        };
        let delta_e: f64 = fields
            .next()
            .ok_or_else(|| bad("missing delta_e".into()))?
            .trim()
            .parse()
            .map_err(|e| bad(format!("delta_e: {e}")))?;
        let f: f64 = fields
            .next()
            .ok_or_else(|| bad("missing oscillator strength".into()))?
            .trim()
            .parse()
            .map_err(|e| bad(format!("oscillator strength: {e}")))?;
        let label = fields.next().unwrap_or("").trim().to_string();
        if delta_e.is_nan() || delta_e <= 0.0 || !delta_e.is_finite() {
            return Err(bad(format!(
                "excitation energy must be positive and finite, got {delta_e}"
            )));
        }
        if f.is_nan() || f < 0.0 || !f.is_finite() {
            return Err(bad(format!(
                "oscillator strength must be nonnegative, got {f}"
            )));
        }
        lines.push(SpectralLine { delta_e, f, label });
    }
    if !saw_header {
        return Err(SpectrumError::BadHeader);
    }
    SpectrumModel::new(lines, n_electrons, SpectrumSource::File)
}

pub fn load_spectrum(path: impl AsRef<Path>) -> Result<SpectrumModel, SpectrumError> {
    let file = std::fs::File::open(path)?;
    read_spectrum(io::BufReader::new(file))
}
