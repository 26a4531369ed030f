//! Parser for the one-variable polynomial `P` taken by `x7-verify`.

use qpmut::coeff::{Coeff, Rational};

/// Parses sums like `x - 2x^3 + 1/2*x^2` into `p` with `p[k]` the
/// coefficient of `x^(k+1)`. `P` may not have a constant term.
pub fn parse_p(s: &str) -> Result<Vec<Rational>, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty polynomial".into());
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut rest = t.as_str();
    while !rest.is_empty() {
        let neg = rest.starts_with('-');
        if rest.starts_with(['+', '-']) {
            rest = &rest[1..];
        }
        let end = rest.find(['+', '-']).unwrap_or(rest.len());
        if end == 0 {
            return Err(format!("dangling sign in `{s}`"));
        }
        let (c, e) = term(&rest[..end])?;
        rest = &rest[end..];
        if coeffs.len() <= e {
            coeffs.resize(e + 1, Rational::from_i64(0));
        }
        coeffs[e] += if neg { -c } else { c };
    }
    if coeffs[0] != Rational::from_i64(0) {
        return Err("P must not have a constant term".into());
    }
    while coeffs.last().is_some_and(|c| *c == Rational::from_i64(0)) {
        coeffs.pop();
    }
    Ok(coeffs.into_iter().skip(1).collect())
}

/// One term `c`, `c*x^e`, `cx`, `x^e`; returns coefficient and exponent.
fn term(s: &str) -> Result<(Rational, usize), String> {
    let bad = || format!("cannot read term `{s}`");
    let Some(at) = s.find('x') else {
        return Ok((Rational::parse_coeff(s).map_err(|_| bad())?, 0));
    };
    let c = s[..at].trim_end_matches('*');
    let c = if c.is_empty() {
        Rational::from_i64(1)
    } else {
        Rational::parse_coeff(c).map_err(|_| bad())?
    };
    let e = match &s[at + 1..] {
        "" => 1,
        p => p
            .strip_prefix('^')
            .and_then(|k| k.parse().ok())
            .ok_or_else(bad)?,
    };
    Ok((c, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_i64(x)).collect()
    }

    #[test]
    fn reads_the_usual_forms() {
        assert_eq!(parse_p("0").unwrap(), q(&[]));
        assert_eq!(parse_p("x").unwrap(), q(&[1]));
        assert_eq!(parse_p("x - 2x^3").unwrap(), q(&[1, 0, -2]));
        assert_eq!(parse_p("-x^2 + 3*x").unwrap(), q(&[3, -1]));
        assert_eq!(parse_p("x - x").unwrap(), q(&[]));
        assert_eq!(
            parse_p("1/2x^2").unwrap()[1],
            Rational::new(1.into(), 2.into())
        );
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_p("1 + x").is_err());
        assert!(parse_p("x^").is_err());
        assert!(parse_p("y").is_err());
        assert!(parse_p("").is_err());
        assert!(parse_p("x +").is_err());
    }
}
