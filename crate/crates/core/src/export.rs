//! Deterministic float formatting for data files.

/// Shortest-trailing `%.17g`: 17 significant digits, trailing zeros removed,
/// scientific notation outside `1e-5 <= |x| < 1e17`.
pub fn fmt17(x: f64) -> String {
    fmt_sig(x, 17)
}

/// `%.6g`, for human-readable reports.
pub fn fmt6(x: f64) -> String {
    fmt_sig(x, 6)
}

pub fn fmt_sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let m = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (digits as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// JSON number; non-finite values become `null`.
pub fn json_number(x: f64) -> String {
    if x.is_finite() {
        fmt17(x)
    } else {
        "null".into()
    }
}

pub fn json_array(values: &[f64]) -> String {
    let parts: Vec<String> = values.iter().map(|&v| json_number(v)).collect();
    format!("[{}]", parts.join(", "))
}
