use num_bigint::BigInt;
use num_rational::BigRational;

/// Exact arbitrary-precision rational used for every event value.
pub type Rational = BigRational;

/// Shorthand for `num/den` as a [`Rational`].
///
/// Panics if `den` is zero.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n/d"` or a plain integer. Whitespace around the token is ignored.
pub fn parse_rational(token: &str) -> Option<Rational> {
    let token = token.trim();
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n.trim().parse::<BigInt>().ok()?, d.trim().parse::<BigInt>().ok()?),
        None => (token.parse::<BigInt>().ok()?, BigInt::from(1)),
    };
    if den == BigInt::from(0) {
        return None;
    }
    Some(Rational::new(num, den))
}
