//! Stable report emission.
//!
//! Reports are diffable across runs: JSON objects carry sorted keys (the
//! default map type is ordered) and every floating-point value is rounded to
//! 12 significant digits before serialization, so formatting noise below that
//! precision never shows up in output.

use std::io::Write;

use grasscurv::grassmann::{index_tuples, PlueckerVector};
use serde_json::Value;

/// Rounds to 12 significant digits (the report precision).
pub fn stable_round(v: f64) -> f64 {
    if !v.is_finite() {
        return v;
    }
    format!("{v:.11e}").parse().expect("formatted float reparses")
}

/// A JSON number rounded to report precision.  Non-finite values (e.g. the
/// `+∞` floor of an empty branch list) become strings, which JSON numbers
/// cannot represent.
pub fn stable_float(v: f64) -> Value {
    if v.is_finite() {
        serde_json::json!(stable_round(v))
    } else {
        Value::String(v.to_string())
    }
}

/// Report-precision decimal text, for CSV cells.
pub fn stable_str(v: f64) -> String {
    stable_round(v).to_string()
}

/// Pretty-prints a JSON value followed by a newline.
pub fn emit_json(out: &mut dyn Write, value: &Value) -> std::io::Result<()> {
    writeln!(out, "{}", serde_json::to_string_pretty(value)?)
}

/// Renders a Plücker vector as `p_{ab} = polynomial` lines in display order.
///
/// For m = 2 the display order interleaves second- and first-row minors —
/// `(1,2)`, then `(2,i), (1,i)` for each `i = 3..n`, then the remaining pairs
/// lexicographically — which is the customary ordering for these vectors in
/// the sigma-model literature.  Other ranks list tuples lexicographically.
pub fn pluecker_display(p: &PlueckerVector) -> Vec<String> {
    display_order(p.n(), p.m())
        .iter()
        .map(|t| {
            let entry = p.entry(t).expect("display order stays within the tuple set");
            format!("{} = {entry}", tuple_label(t))
        })
        .collect()
}

/// One-based index tuples (the [`index_tuples`] convention) in display order.
fn display_order(n: usize, m: usize) -> Vec<Vec<usize>> {
    if m != 2 {
        return index_tuples(n, m);
    }
    let mut order = vec![vec![1, 2]];
    for i in 3..=n {
        order.push(vec![2, i]);
        order.push(vec![1, i]);
    }
    for a in 3..n {
        for b in (a + 1)..=n {
            order.push(vec![a, b]);
        }
    }
    order
}

fn tuple_label(t: &[usize]) -> String {
    let digits: Vec<String> = t.iter().map(usize::to_string).collect();
    if t.iter().all(|&i| i < 10) {
        format!("p{}", digits.concat())
    } else {
        format!("p{}", digits.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn stable_round_keeps_twelve_digits() {
        assert_eq!(stable_round(2.0 / 3.0), 0.666666666667);
        assert_eq!(stable_round(0.5), 0.5);
        assert_eq!(stable_round(-1.234567890123456e-7), -1.23456789012e-7);
        assert_eq!(stable_round(0.0), 0.0);
        assert!(stable_round(f64::INFINITY).is_infinite());
    }

    #[test]
    fn stable_float_handles_non_finite() {
        assert_eq!(stable_float(f64::INFINITY), Value::String("inf".into()));
        assert_eq!(stable_float(1.0), serde_json::json!(1.0));
    }

    #[test]
    fn display_order_interleaves_for_rank_two() {
        let labels: Vec<String> = display_order(4, 2).iter().map(|t| tuple_label(t)).collect();
        assert_eq!(labels, ["p12", "p23", "p13", "p24", "p14", "p34"]);
        let labels: Vec<String> = display_order(5, 2).iter().map(|t| tuple_label(t)).collect();
        assert_eq!(
            labels,
            ["p12", "p23", "p13", "p24", "p14", "p25", "p15", "p34", "p35", "p45"]
        );
    }

    #[test]
    fn display_order_is_a_permutation_of_the_tuple_set() {
        for (n, m) in [(4, 2), (5, 2), (6, 2), (5, 3)] {
            let mut shown = display_order(n, m);
            shown.sort();
            assert_eq!(shown, index_tuples(n, m));
        }
    }
}
