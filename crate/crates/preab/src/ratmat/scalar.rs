use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision rational scalar.
///
/// `BigRational` keeps values in lowest terms with a positive denominator,
/// and represents zero as 0/1, so the canonical-form invariants hold by
/// construction.
pub type Scalar = BigRational;

/// Integer scalar.
pub fn sca(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// Rational scalar n/d.
pub fn rat(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Formats a scalar as `p` for integers and `p/q` otherwise.
///
/// This is the wire form used both by the `.pad` grammar and by JSON
/// reports, so it must stay stable.
pub fn format_scalar(x: &Scalar) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p` or `p/q` with optional leading minus.
pub fn parse_scalar(text: &str) -> Option<Scalar> {
    let (num_str, den_str) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let numer: BigInt = num_str.parse().ok()?;
    let denom: BigInt = den_str.parse().ok()?;
    if denom.is_zero() || denom.is_negative() {
        return None;
    }
    Some(BigRational::new(numer, denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_sign() {
        let x = rat(2, -4);
        assert_eq!(x, rat(-1, 2));
        assert_eq!(format_scalar(&x), "-1/2");
        assert_eq!(format_scalar(&sca(0)), "0");
        assert_eq!(format_scalar(&sca(7)), "7");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "-3", "5/9", "-11/4"] {
            let x = parse_scalar(s).unwrap();
            assert_eq!(format_scalar(&x), s);
        }
        assert!(parse_scalar("1/0").is_none());
        assert!(parse_scalar("x").is_none());
    }
}
