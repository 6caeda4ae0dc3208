use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use finosc_core::export::{fmt17, json_array};
use finosc_core::oscillator::momentum_as_tridiagonal;
use finosc_core::{
    build_exact, build_representation, hamiltonian_spectrum, momentum_operator, position_operator,
    sturm_eigenvalues, Kind, RepMatrices, RepScalar, Scalar, WavefunctionTable,
};

use crate::config::{half_int, Format, RunConfig};
use crate::svg::{self, Panel};
use crate::CliError;

/// Writes to `out`, or to stdout when no path is given.
pub fn emit(out: Option<&Path>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir)?;
            }
            fs::write(path, content)?;
        }
        None => std::io::stdout().lock().write_all(content.as_bytes())?,
    }
    Ok(())
}

fn rep_csv<S: RepScalar>(rep: &RepMatrices<S>) -> String {
    let mut out = String::from("index,j0,p,jplus\n");
    for i in 0..rep.dim() {
        let off = rep.jplus_offdiag.get(i).map_or(0.0, Scalar::to_f64);
        let j0 = finosc_core::Field::to_f64_lossy(&rep.j0_diag[i]);
        writeln!(out, "{i},{},{},{}", fmt17(j0), rep.p_diag[i], fmt17(off)).expect("write to string");
    }
    out
}

pub fn cmd_rep(cfg: &RunConfig) -> Result<(), CliError> {
    let (params, exact_params) = cfg.deformation.params(cfg.two_j)?;
    let j = half_int(cfg.two_j);
    let text = if cfg.exact {
        let rep = build_exact(j, &exact_params)?;
        let report = rep.relation_residuals()?;
        if let Some(bad) = report.failures(0.0).next() {
            return Err(CliError::failure(format!("relation {} fails exactly", bad.name)));
        }
        match cfg.format {
            Format::Json => rep.to_json() + "\n",
            Format::Csv => rep_csv(&rep),
            Format::Svg => return Err(CliError::usage("rep supports --format json or csv")),
        }
    } else {
        let rep = build_representation(j, &params)?;
        match cfg.format {
            Format::Json => rep.to_json() + "\n",
            Format::Csv => rep_csv(&rep),
            Format::Svg => return Err(CliError::usage("rep supports --format json or csv")),
        }
    };
    emit(cfg.out.as_deref(), &text)
}

fn spectrum_text(values: &[f64], kind: &str, format: Format) -> Result<String, CliError> {
    match format {
        Format::Csv => {
            let mut out = String::from("index,eigenvalue\n");
            for (i, v) in values.iter().enumerate() {
                writeln!(out, "{i},{}", fmt17(*v)).expect("write to string");
            }
            Ok(out)
        }
        Format::Json => Ok(format!("{{\"kind\": \"{kind}\", \"eigenvalues\": {}}}\n", json_array(values))),
        Format::Svg => Err(CliError::usage("spectrum supports --format csv or json")),
    }
}

/// Position or momentum eigenvalues from the bisection oracle, in units
/// where the spectrum is `-j..j`.
pub fn cmd_spectrum(cfg: &RunConfig, kind: Kind) -> Result<(), CliError> {
    if cfg.two_j % 2 == 1 {
        return Err(CliError::usage(format!(
            "the oscillator model is odd-dimensional only; --two-j {} is odd",
            cfg.two_j
        )));
    }
    let ct = cfg.deformation.ctilde(cfg.two_j)?;
    let j = cfg.two_j / 2;
    let values: Vec<f64> = match kind {
        Kind::Position => sturm_eigenvalues(&position_operator(j, ct)?, cfg.tol)?
            .into_iter()
            .map(|v| v / 2.0)
            .collect(),
        Kind::Momentum => sturm_eigenvalues(&momentum_as_tridiagonal(&momentum_operator(j, ct)?), cfg.tol)?,
    };
    emit(cfg.out.as_deref(), &spectrum_text(&values, kind.name(), cfg.format)?)
}

pub fn cmd_hamiltonian(cfg: &RunConfig) -> Result<(), CliError> {
    if cfg.two_j % 2 == 1 {
        return Err(CliError::usage("the oscillator model is odd-dimensional only"));
    }
    let values = hamiltonian_spectrum(cfg.two_j / 2);
    emit(cfg.out.as_deref(), &spectrum_text(&values, "hamiltonian", cfg.format)?)
}

/// Norm and parity of every row, checked before anything is written.
pub fn check_table(table: &WavefunctionTable, tol: f64) -> Result<(), CliError> {
    let norm = table.max_norm_defect();
    let parity = table.max_parity_defect();
    if !(norm <= tol && parity <= tol) {
        return Err(CliError::failure(format!(
            "table check failed for c~ = {}: norm defect {norm:.3e}, parity defect {parity:.3e}",
            table.ctilde
        )));
    }
    Ok(())
}

pub fn panel_title(ctilde: f64, n: u32) -> String {
    format!("c~ = {ctilde}, n = {n}")
}

pub fn table_panels(table: &WavefunctionTable) -> Vec<Panel> {
    table
        .levels
        .iter()
        .zip(&table.values)
        .map(|(&n, row)| Panel {
            title: panel_title(table.ctilde, n),
            stems: table
                .grid
                .iter()
                .zip(row)
                .map(|(&q, z)| {
                    // momentum rows are purely real or purely imaginary
                    let y = if z.re == 0.0 { z.im } else { z.re };
                    (q as f64, y)
                })
                .collect(),
            curve: None,
        })
        .collect()
}

pub fn cmd_wavefunctions(cfg: &RunConfig) -> Result<(), CliError> {
    let ct = cfg.deformation.ctilde(cfg.two_j)?;
    let table = WavefunctionTable::build(cfg.kind, cfg.two_j / 2, ct, &cfg.levels)?;
    check_table(&table, cfg.tol)?;
    let text = match cfg.format {
        Format::Csv => table.to_csv(),
        Format::Json => table.to_json() + "\n",
        Format::Svg => svg::render(&table_panels(&table), table.levels.len().min(4)),
    };
    emit(cfg.out.as_deref(), &text)
}
