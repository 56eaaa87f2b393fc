//! Shortest faithful decimal rendering of floats for reports: 17 significant
//! digits round-trip every f64 exactly, so two runs of the same command emit
//! byte-identical output on any platform with IEEE 754 doubles.

/// Format with 17 significant digits, C `%.17g` style: fixed notation for
/// moderate exponents, scientific otherwise, trailing zeros trimmed.
pub fn fmt17(x: f64) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf" } else { "inf" }.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }

    let neg = x < 0.0;
    let sci = format!("{:.16e}", x.abs()); // d.dddddddddddddddde<exp>
    let (mant, exp_s) = sci.split_once('e').expect("exponential format");
    let exp: i32 = exp_s.parse().expect("exponent parses");
    let digits: Vec<u8> = mant.bytes().filter(u8::is_ascii_digit).collect();
    debug_assert_eq!(digits.len(), 17);

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if !(-4..17).contains(&exp) {
        // scientific: leading digit, trimmed fraction, two-digit exponent
        let frac = std::str::from_utf8(&digits[1..]).unwrap().trim_end_matches('0');
        out.push(digits[0] as char);
        if !frac.is_empty() {
            out.push('.');
            out.push_str(frac);
        }
        out.push('e');
        out.push(if exp < 0 { '-' } else { '+' });
        let a = exp.unsigned_abs();
        if a < 10 {
            out.push('0');
        }
        out.push_str(&a.to_string());
    } else if exp >= 0 {
        for (i, &d) in digits.iter().enumerate() {
            if i == exp as usize + 1 {
                out.push('.');
            }
            out.push(d as char);
        }
        trim_fraction(&mut out);
    } else {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        for &d in &digits {
            out.push(d as char);
        }
        trim_fraction(&mut out);
    }
    out
}

fn trim_fraction(s: &mut String) {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::fmt17;

    #[test]
    fn integers_and_simple_fractions_stay_short() {
        assert_eq!(fmt17(0.0), "0");
        assert_eq!(fmt17(-0.0), "-0");
        assert_eq!(fmt17(24.0), "24");
        assert_eq!(fmt17(0.5), "0.5");
        assert_eq!(fmt17(-2.5), "-2.5");
        assert_eq!(fmt17(13.0 / 5.0), "2.6000000000000001");
    }

    #[test]
    fn irrational_values_carry_17_digits() {
        assert_eq!(fmt17(std::f64::consts::PI), "3.1415926535897931");
        assert_eq!(fmt17((2.0f64 / 3.0).sqrt()), "0.81649658092772603");
        assert_eq!(fmt17(1.0 / 3.0f64.sqrt()), "0.57735026918962584");
    }

    #[test]
    fn extreme_exponents_go_scientific() {
        assert_eq!(fmt17(1e-5), "1.0000000000000001e-05");
        assert_eq!(fmt17(1e17), "1e+17");
        // the double closest to -2.5e-12 sits just below it
        assert_eq!(fmt17(-2.5e-12), "-2.4999999999999998e-12");
        assert_eq!(fmt17(1e100), "1e+100");
    }

    #[test]
    fn output_round_trips_exactly() {
        let samples = [
            std::f64::consts::PI,
            2.0f64.sqrt(),
            1.0 / 3.0,
            0.886256601039999,
            2.0 * 3.0f64.atan(),
            1e-300,
            6.02e23,
            f64::MIN_POSITIVE,
            f64::MAX,
        ];
        for &x in &samples {
            for v in [x, -x] {
                let back: f64 = fmt17(v).parse().unwrap();
                assert_eq!(back.to_bits(), v.to_bits(), "round trip of {v:e}");
            }
        }
    }
}
