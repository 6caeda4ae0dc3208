//! Bundled figure parameter sets. `fig1`: wavefunctions at `j = 32` for
//! seven deformations and levels 0, 1, 2, 64. `fig2`: scaled discrete
//! wavefunctions `j^{1/4} φ_n(q)` at `x = q/√j` against the parabose
//! functions for `c̃ = ∓0.8`, `a = 0.9, 0.1`.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use rayon::prelude::*;

use finosc_core::export::{fmt17, fmt_sig};
use finosc_core::orthopoly::parabose;
use finosc_core::{Kind, WavefunctionTable};

use crate::commands::{check_table, emit, panel_title, table_panels};
use crate::svg::{self, Panel};
use crate::CliError;

pub const J: u32 = 32;
pub const FIG1_CTILDES: [f64; 7] = [-0.999, -0.8, -0.3, 0.0, 0.3, 0.8, 0.999];
pub const FIG1_LEVELS: [u32; 4] = [0, 1, 2, 64];
pub const FIG2_CTILDES: [f64; 2] = [-0.8, 0.8];
pub const FIG2_LEVELS: [u32; 3] = [0, 1, 2];
const CURVE_SAMPLES: usize = 801;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    Fig1,
    Fig2,
}

impl Preset {
    fn name(self) -> &'static str {
        match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
        }
    }
}

fn tables(ctildes: &[f64], levels: &[u32], tol: f64) -> Result<Vec<WavefunctionTable>, CliError> {
    let tables = ctildes
        .par_iter()
        .map(|&ct| WavefunctionTable::build(Kind::Position, J, ct, levels))
        .collect::<Result<Vec<_>, _>>()?;
    for t in &tables {
        check_table(t, tol)?;
    }
    Ok(tables)
}

fn write(dir: &Path, name: String, content: &str, written: &mut Vec<PathBuf>) -> Result<(), CliError> {
    let path = dir.join(name);
    emit(Some(&path), content)?;
    written.push(path);
    Ok(())
}

fn fig1(dir: &Path, tol: f64) -> Result<Vec<PathBuf>, CliError> {
    let tables = tables(&FIG1_CTILDES, &FIG1_LEVELS, tol)?;
    let mut written = Vec::new();
    let panels: Vec<Panel> = tables.iter().flat_map(table_panels).collect();
    for t in &tables {
        write(dir, format!("fig1_ctilde_{}.csv", t.ctilde), &t.to_csv(), &mut written)?;
    }
    write(dir, "fig1.svg".into(), &svg::render(&panels, FIG1_LEVELS.len()), &mut written)?;
    Ok(written)
}

fn fig2(dir: &Path, tol: f64) -> Result<Vec<PathBuf>, CliError> {
    let tables = tables(&FIG2_CTILDES, &FIG2_LEVELS, tol)?;
    let jf = f64::from(J);
    let (scale, root) = (jf.powf(0.25), jf.sqrt());
    let xs: Vec<f64> = (0..CURVE_SAMPLES)
        .map(|i| -root + 2.0 * root * i as f64 / (CURVE_SAMPLES - 1) as f64)
        .collect();
    let mut written = Vec::new();
    let mut panels = Vec::new();
    for t in &tables {
        let a = (1.0 - t.ctilde) / 2.0;
        let a_label = fmt_sig(a, 6);
        let mut curve_csv = String::from("x,n,value\n");
        for (&n, row) in t.levels.iter().zip(&t.values) {
            let curve = xs
                .iter()
                .map(|&x| Ok((x, parabose(n, a, x)?)))
                .collect::<Result<Vec<_>, finosc_core::Error>>()?;
            for (x, v) in &curve {
                writeln!(curve_csv, "{},{n},{}", fmt17(*x), fmt17(*v)).expect("write to string");
            }
            panels.push(Panel {
                title: format!("{} vs a = {a_label}", panel_title(t.ctilde, n)),
                stems: t.grid.iter().zip(row).map(|(&q, z)| (q as f64 / root, scale * z.re)).collect(),
                curve: Some(curve),
            });
        }
        write(dir, format!("fig2_ctilde_{}.csv", t.ctilde), &t.to_csv(), &mut written)?;
        write(dir, format!("fig2_parabose_a_{a_label}.csv"), &curve_csv, &mut written)?;
    }
    write(dir, "fig2.svg".into(), &svg::render(&panels, FIG2_LEVELS.len()), &mut written)?;
    Ok(written)
}

/// Writes the preset's CSV and SVG files into `out` (default: the preset
/// name) and lists them on stdout.
pub fn run(preset: Preset, out: Option<PathBuf>, tol: f64) -> Result<(), CliError> {
    let dir = out.unwrap_or_else(|| PathBuf::from(preset.name()));
    let written = match preset {
        Preset::Fig1 => fig1(&dir, tol)?,
        Preset::Fig2 => fig2(&dir, tol)?,
    };
    for p in written {
        println!("{}", p.display());
    }
    Ok(())
}
