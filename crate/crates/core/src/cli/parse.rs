//! Polynomial input: either a comma-separated coefficient list in descending
//! powers (`"1, 0, 3/7"`) or a sum of terms in one variable
//! (`"z^4 + 3/7*z^2 - 0.5"`). Coefficients are exact rationals or decimals.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactpoly::{parse_rational, ExactScalar, Polynomial};

const VARIABLES: [char; 4] = ['z', 'w', 'x', 'u'];

pub fn parse_polynomial(text: &str) -> Result<Polynomial> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::Parse("empty polynomial".into()));
    }
    if text.chars().any(|c| VARIABLES.contains(&c)) {
        parse_expression(text)
    } else {
        parse_list(text)
    }
}

fn parse_list(text: &str) -> Result<Polynomial> {
    let coeffs =
        text.split(',').map(|t| parse_rational(t.trim()).map(ExactScalar::real)).collect::<Result<Vec<_>>>()?;
    Ok(Polynomial::new(coeffs.into_iter().rev().collect()))
}

fn parse_expression(text: &str) -> Result<Polynomial> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let mut var = None;
    let mut coeffs: Vec<BigRational> = Vec::new();
    let mut rest = compact.as_str();
    let mut first = true;
    while !rest.is_empty() {
        let (sign, body) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if first => (1, rest),
            _ => return Err(Error::Parse(format!("expected + or - before {rest:?}"))),
        };
        first = false;
        let end = term_end(body);
        let (coef, power) = parse_term(&body[..end], &mut var)?;
        if coeffs.len() <= power {
            coeffs.resize(power + 1, BigRational::zero());
        }
        coeffs[power] += coef * BigRational::from_integer(sign.into());
        rest = &body[end..];
    }
    Ok(Polynomial::from_rationals(&coeffs))
}

/// End of the term starting at `s`: the next `+`/`-` that is not an exponent sign.
fn term_end(s: &str) -> usize {
    let b = s.as_bytes();
    (1..b.len())
        .find(|&i| (b[i] == b'+' || b[i] == b'-') && !matches!(b[i - 1], b'e' | b'E' | b'^' | b'('))
        .unwrap_or(b.len())
}

fn parse_term(term: &str, var: &mut Option<char>) -> Result<(BigRational, usize)> {
    if term.is_empty() {
        return Err(Error::Parse("dangling sign".into()));
    }
    let Some(pos) = term.find(|c| VARIABLES.contains(&c)) else {
        return Ok((parse_coefficient(term)?, 0));
    };
    let v = term[pos..].chars().next().unwrap();
    match var {
        Some(seen) if *seen != v => {
            return Err(Error::Parse(format!("mixed variables {seen} and {v}")));
        }
        _ => *var = Some(v),
    }
    let coef_text = term[..pos].trim_end_matches('*');
    let coef = if coef_text.is_empty() { BigRational::one() } else { parse_coefficient(coef_text)? };
    let tail = &term[pos + 1..];
    let power = if tail.is_empty() {
        1
    } else if let Some(e) = tail.strip_prefix('^').or_else(|| tail.strip_prefix("**")) {
        if e.is_empty() || !e.bytes().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad exponent {e:?}")));
        }
        e.parse::<usize>().map_err(|_| Error::Parse(format!("exponent {e} is too large")))?
    } else {
        return Err(Error::Parse(format!("unexpected {tail:?} after {v}")));
    };
    Ok((coef, power))
}

fn parse_coefficient(text: &str) -> Result<BigRational> {
    let inner = text.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(text);
    parse_rational(inner)
}

/// Coefficients of an even polynomial, checked to contain no odd powers.
pub fn require_even(p: &Polynomial, what: &str) -> Result<()> {
    if p.is_even() {
        Ok(())
    } else {
        Err(Error::Parse(format!("{what} must contain only even powers, got {}", p.display_in("z"))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lists_are_descending() {
        assert_eq!(parse_polynomial("1, 0, 1").unwrap(), Polynomial::from_ints(&[1, 0, 1]));
        assert_eq!(parse_polynomial("3").unwrap(), Polynomial::from_ints(&[3]));
    }

    #[test]
    fn expressions() {
        assert_eq!(parse_polynomial("z^6 + 1").unwrap(), Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
        assert_eq!(parse_polynomial("2*z^2 - z + 3").unwrap(), Polynomial::from_ints(&[3, -1, 2]));
        assert_eq!(parse_polynomial("-z^2 + 2z^2").unwrap(), Polynomial::from_ints(&[0, 0, 1]));
        let p = parse_polynomial("(3/7)*x^2 + 1.5e-1").unwrap();
        assert_eq!(p.coeff(2), ExactScalar::ratio(3, 7));
        assert_eq!(p.coeff(0), ExactScalar::ratio(3, 20));
    }

    #[test]
    fn rejects_garbage() {
        for bad in ["", "z^", "z^2 +", "z + w", "3/0", "zz", "1,,2", "z^-1", "z^+1"] {
            assert!(matches!(parse_polynomial(bad), Err(Error::Parse(_))), "{bad}");
        }
    }
}
