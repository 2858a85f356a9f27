//! Locale-free real formatting with 17 significant digits (C's `%.17g`).

/// Formats like `printf("%.17g")`: round-trips every `f64` exactly.
pub fn format_real(x: f64) -> String {
    const DIGITS: i32 = 17;
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let sci = format!("{:.*e}", (DIGITS - 1) as usize, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-4..DIGITS).contains(&exp) {
        let m = strip_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{m}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (DIGITS - 1 - exp) as usize;
        strip_zeros(&format!("{x:.decimals$}")).to_string()
    }
}

fn strip_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn matches_printf() {
        assert_eq!(format_real(std::f64::consts::SQRT_2), "1.4142135623730951");
        assert_eq!(format_real(0.5), "0.5");
        assert_eq!(format_real(0.1), "0.10000000000000001");
        assert_eq!(format_real(2.0), "2");
        assert_eq!(format_real(-3.25), "-3.25");
        assert_eq!(format_real(1e20), "1e+20");
        assert_eq!(format_real(1.5e-7), "1.4999999999999999e-07");
        assert_eq!(format_real(123456.0), "123456");
        assert_eq!(format_real(0.0), "0");
    }

    proptest! {
        #[test]
        fn round_trips(x in proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL) {
            prop_assert_eq!(format_real(x).parse::<f64>().unwrap(), x);
        }
    }
}
