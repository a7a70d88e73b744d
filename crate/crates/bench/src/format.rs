/// `%.12g`-style rendering used for every human-facing number.
pub fn g12(x: f64) -> String {
    sig(x, 12)
}

pub fn sig(x: f64, digits: usize) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf".into() } else { "-inf".into() };
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0".into() } else { "0".into() };
    }
    let prec = digits.max(1) - 1;
    let sci = format!("{x:.prec$e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= digits as i32 {
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{}e{sign}{:02}", trim_zeros(mantissa), exp.abs())
    } else {
        let decimals = (prec as i32 - exp).max(0) as usize;
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

pub fn g12_opt(x: Option<f64>) -> String {
    x.map(g12).unwrap_or_default()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn matches_printf_g() {
        assert_eq!(g12(0.04), "0.04");
        assert_eq!(g12(3.2e-9), "3.2e-09");
        assert_eq!(g12(1.0), "1");
        assert_eq!(g12(-12.5), "-12.5");
        assert_eq!(g12(123456789012.0), "123456789012");
        assert_eq!(g12(1234567890123.0), "1.23456789012e+12");
        assert_eq!(g12(0.0001), "0.0001");
        assert_eq!(g12(0.1 + 0.2), "0.3");
        assert_eq!(g12(5.7e-5), "5.7e-05");
        assert_eq!(g12(f64::NAN), "nan");
        assert_eq!(g12(0.0), "0");
    }

    #[test]
    fn rounding_carries_into_exponent() {
        assert_eq!(g12(9.9999999999999e-5), "0.0001");
        assert_eq!(sig(999.96, 4), "1000");
        assert_eq!(sig(99999.6, 5), "1e+05");
    }
}
