use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use num_rational::BigRational;

use finosc_core::{AlgebraParams, HalfInt, Kind, Sign};

use crate::CliError;

/// A real flag value kept both as a double and as the exact rational its
/// decimal (or `p/q`) spelling denotes.
#[derive(Clone, Debug, PartialEq)]
pub struct Real {
    pub value: f64,
    pub exact: BigRational,
}

impl FromStr for Real {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let s = s.trim();
        let exact = if s.contains('/') {
            s.parse::<BigRational>().map_err(|e| format!("bad fraction {s:?}: {e}"))?
        } else {
            parse_decimal(s).ok_or_else(|| format!("bad number {s:?}"))?
        };
        let value = if s.contains('/') {
            num_traits::ToPrimitive::to_f64(&exact).ok_or_else(|| format!("{s:?} is out of range"))?
        } else {
            s.parse::<f64>().map_err(|e| format!("bad number {s:?}: {e}"))?
        };
        if !value.is_finite() {
            return Err(format!("{s:?} is not finite"));
        }
        Ok(Self { value, exact })
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// `[-]digits[.digits][e[-]digits]` as an exact rational.
fn parse_decimal(s: &str) -> Option<BigRational> {
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => (&s[..i], s[i + 1..].parse::<i32>().ok()?),
        None => (s, 0),
    };
    let (neg, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int, frac) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    if !int.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let digits: num_bigint::BigInt = format!("{int}{frac}").parse().ok()?;
    let shift = exp - frac.len() as i32;
    let ten = BigRational::from_integer(10.into());
    let mut q = BigRational::from_integer(digits);
    q = if shift >= 0 {
        q * num_traits::pow(ten, shift as usize)
    } else {
        q / num_traits::pow(ten, (-shift) as usize)
    };
    Some(if neg { -q } else { q })
}

/// Level list such as `0,1,2,10-12`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Levels(pub Vec<u32>);

impl FromStr for Levels {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let bad = |e: std::num::ParseIntError| format!("bad level {part:?}: {e}");
            match part.split_once('-') {
                Some((lo, hi)) => {
                    let (lo, hi): (u32, u32) = (lo.trim().parse().map_err(bad)?, hi.trim().parse().map_err(bad)?);
                    if lo > hi {
                        return Err(format!("empty level range {part:?}"));
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(part.parse().map_err(bad)?),
            }
        }
        if out.is_empty() {
            return Err("no levels given".into());
        }
        Ok(Self(out))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum KindArg {
    Position,
    Momentum,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Position => Kind::Position,
            KindArg::Momentum => Kind::Momentum,
        }
    }
}

/// Parameters shared by the commands, after flag validation.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub two_j: u32,
    pub deformation: Deformation,
    pub levels: Vec<u32>,
    pub kind: Kind,
    pub format: Format,
    pub out: Option<PathBuf>,
    pub tol: f64,
    pub exact: bool,
}

#[derive(Clone, Debug)]
pub enum Deformation {
    Ctilde(Real),
    C { c: Real, epsilon: Sign },
}

impl Deformation {
    /// From the mutually exclusive flag sets; `|c̃| < 1` is checked here.
    pub fn from_flags(ctilde: Option<Real>, c: Option<Real>, epsilon: Option<i64>) -> Result<Self, CliError> {
        match (ctilde, c) {
            (Some(ct), None) => {
                if epsilon.is_some() {
                    return Err(CliError::usage("--epsilon goes with --c, not --ctilde"));
                }
                if !(ct.value.abs() < 1.0) {
                    return Err(CliError::usage(format!("|ctilde| < 1 required, got {}", ct.value)));
                }
                Ok(Self::Ctilde(ct))
            }
            (None, Some(c)) => {
                let epsilon = Sign::from_value(epsilon.unwrap_or(1)).map_err(CliError::from)?;
                Ok(Self::C { c, epsilon })
            }
            (None, None) => Ok(Self::Ctilde(Real {
                value: 0.0,
                exact: BigRational::from_integer(0.into()),
            })),
            (Some(_), Some(_)) => Err(CliError::usage("give either --ctilde or --c/--epsilon, not both")),
        }
    }

    /// Algebra parameters; `c = c̃ (2j+1)` with `ε = +1` needs integer `j`.
    pub fn params(&self, two_j: u32) -> Result<(AlgebraParams<f64>, AlgebraParams<BigRational>), CliError> {
        match self {
            Self::Ctilde(ct) => {
                if two_j % 2 == 1 {
                    return Err(CliError::usage("--ctilde needs an even --two-j; use --c/--epsilon"));
                }
                let dim = i64::from(two_j) + 1;
                Ok((
                    AlgebraParams::new(ct.value * dim as f64, Sign::Plus),
                    AlgebraParams::new(&ct.exact * BigRational::from_integer(dim.into()), Sign::Plus),
                ))
            }
            Self::C { c, epsilon } => Ok((
                AlgebraParams::new(c.value, *epsilon),
                AlgebraParams::new(c.exact.clone(), *epsilon),
            )),
        }
    }

    /// `c̃ = c ε / (2j+1)` for the oscillator, which lives on integer `j`.
    pub fn ctilde(&self, two_j: u32) -> Result<f64, CliError> {
        if two_j % 2 == 1 || two_j == 0 {
            return Err(CliError::usage(format!(
                "the oscillator needs an even, positive --two-j, got {two_j}"
            )));
        }
        let ct = match self {
            Self::Ctilde(ct) => ct.value,
            Self::C { c, epsilon } => epsilon.value() as f64 * c.value / f64::from(two_j + 1),
        };
        if !(ct.abs() < 1.0) {
            return Err(CliError::usage(format!("|ctilde| < 1 required, got {ct}")));
        }
        Ok(ct)
    }
}

pub fn half_int(two_j: u32) -> HalfInt {
    HalfInt::new(two_j)
}
