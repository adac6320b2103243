use serde::Serialize;
use serde_json::Value;

use ndl_core::search::SweepRecord;

pub const SIGNIFICANT_DIGITS: usize = 12;
/// Spectral values below this magnitude are printed as zero.
pub const ZERO_SNAP: f64 = 1e-12;

pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

pub fn snap(x: f64) -> f64 {
    if x.abs() < ZERO_SNAP {
        0.0
    } else {
        x
    }
}

fn round_value(v: &mut Value) {
    match v {
        Value::Number(num) if num.is_f64() => {
            let x = num.as_f64().expect("f64 number");
            if let Some(r) = serde_json::Number::from_f64(round_sig(x)) {
                *num = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_value),
        Value::Object(map) => map.values_mut().for_each(round_value),
        _ => {}
    }
}

/// Pretty JSON with every float rounded to [`SIGNIFICANT_DIGITS`].
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut v = serde_json::to_value(value).expect("report serializes");
    round_value(&mut v);
    let mut s = serde_json::to_string_pretty(&v).expect("value serializes");
    s.push('\n');
    s
}

pub const SWEEP_CSV_HEADER: &str = "n,k1,p,k2,spectral_radius,gap,scaled_gap,diameter";

pub fn sweep_csv(records: &[SweepRecord]) -> String {
    let mut out = String::from(SWEEP_CSV_HEADER);
    out.push('\n');
    for r in records {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            r.n,
            r.k1,
            r.p,
            r.k2,
            round_sig(r.spectral_radius),
            round_sig(r.gap),
            round_sig(r.scaled_gap),
            r.diameter
        ));
    }
    out
}
