//! Exact rational scalars and vector helpers.
//!
//! All arithmetic in this crate is carried out over arbitrary-precision
//! rationals; no floating point participates in any computation or verdict.
//! `Rat` is stored in lowest terms with a positive denominator, so exact
//! equality of values is exact equality of representations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number, always in lowest terms.
pub type Rat = num_rational::BigRational;

/// Column vector of rationals.
pub type RatVector = Vec<Rat>;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational `n/d`. Panics on `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`, the wire format for rationals.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let numerator: BigInt = num
        .parse()
        .map_err(|_| Error::InvalidArgument(format!("invalid rational numerator: {s:?}")))?;
    let denominator: BigInt = match den {
        Some(d) => d
            .parse()
            .map_err(|_| Error::InvalidArgument(format!("invalid rational denominator: {s:?}")))?,
        None => BigInt::one(),
    };
    if denominator.is_zero() {
        return Err(Error::InvalidArgument(format!("zero denominator: {s:?}")));
    }
    Ok(Rat::new(numerator, denominator))
}

/// Renders a rational in the wire format: `"p/q"`, or `"p"` when `q = 1`.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Exact dot product. Lengths must agree.
pub fn dot(x: &[Rat], y: &[Rat]) -> Result<Rat> {
    if x.len() != y.len() {
        return Err(Error::dims("dot", x.len().to_string(), y.len().to_string()));
    }
    Ok(x.iter().zip(y).map(|(a, b)| a * b).sum())
}

pub fn is_zero_vec(v: &[Rat]) -> bool {
    v.iter().all(Zero::is_zero)
}

pub fn neg_vec(v: &[Rat]) -> RatVector {
    v.iter().map(|a| -a).collect()
}

pub fn add_vec(x: &[Rat], y: &[Rat]) -> RatVector {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + b).collect()
}

pub fn scale_vec(c: &Rat, v: &[Rat]) -> RatVector {
    v.iter().map(|a| c * a).collect()
}

/// `x + c*y`, used by elimination and ray combination.
pub fn add_scaled(x: &[Rat], c: &Rat, y: &[Rat]) -> RatVector {
    debug_assert_eq!(x.len(), y.len());
    x.iter().zip(y).map(|(a, b)| a + c * b).collect()
}

/// Scales a vector by a positive rational so that its entries become
/// coprime integers. Returns `None` for the zero vector. Direction is
/// preserved, which makes the result a canonical representative of a ray.
pub fn primitive(v: &[Rat]) -> Option<RatVector> {
    if is_zero_vec(v) {
        return None;
    }
    let mut den_lcm = BigInt::one();
    for a in v {
        den_lcm = den_lcm.lcm(a.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|a| a.numer() * (&den_lcm / a.denom())).collect();
    let mut g = BigInt::zero();
    for n in &ints {
        g = g.gcd(n);
    }
    Some(ints.into_iter().map(|n| Rat::from_integer(n / &g)).collect())
}

/// Vector in the wire format, e.g. `["1", "-1/2"]`.
pub fn format_vec(v: &[Rat]) -> Vec<String> {
    v.iter().map(format_rat).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "7", "-3", "5/8", "-11/6"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        // Non-canonical inputs normalize.
        assert_eq!(format_rat(&parse_rat("4/6").unwrap()), "2/3");
        assert_eq!(format_rat(&parse_rat("3/-6").unwrap()), "-1/2");
        assert_eq!(format_rat(&parse_rat("0/5").unwrap()), "0");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("a/b").is_err());
        assert!(parse_rat("1.5").is_err());
    }

    #[test]
    fn primitive_scaling() {
        let v = vec![rat(1, 2), rat(-3, 4), rat_int(0)];
        let p = primitive(&v).unwrap();
        assert_eq!(p, vec![rat_int(2), rat_int(-3), rat_int(0)]);
        assert!(primitive(&[rat_int(0), rat_int(0)]).is_none());
        // Sign of the direction is preserved.
        let w = primitive(&[rat_int(-2), rat_int(-4)]).unwrap();
        assert_eq!(w, vec![rat_int(-1), rat_int(-2)]);
    }

    #[test]
    fn dot_checks_len() {
        assert!(dot(&[rat_int(1)], &[rat_int(1), rat_int(2)]).is_err());
        assert_eq!(
            dot(&[rat_int(2), rat_int(3)], &[rat(1, 2), rat(1, 3)]).unwrap(),
            rat_int(2)
        );
    }
}
