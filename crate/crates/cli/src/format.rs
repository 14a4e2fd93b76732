//! CSV rendering helpers.

/// `%.9g`-style formatting: nine significant digits, trailing zeros trimmed,
/// scientific notation outside `1e-5 ..= 1e9`.
pub fn sig9(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if v == 0.0 {
        return "0".into();
    }
    let sci = format!("{v:.8e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..9).contains(&exp) {
        return format!("{}e{exp}", trim_zeros(mantissa));
    }
    let decimals = (8 - exp).max(0) as usize;
    trim_zeros(&format!("{v:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "none".to_string(), sig9)
}

pub fn join(values: &[f64]) -> String {
    values.iter().map(|&v| sig9(v)).collect::<Vec<_>>().join(",")
}
