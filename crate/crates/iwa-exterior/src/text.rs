//! Text form of exterior forms: `2*al^be + (1-i)*ga^al~`, with `1` for the
//! empty monomial and the coefficient omitted when it is 1.

use iwa_scalars::GScalar;
use serde::{Deserialize, Serialize};

use crate::mask::{self, Mask};
use crate::{ExteriorError, Form};

/// JSON shape of a form: `[[mask, "coef"], ...]` in mask order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormJson(pub Vec<(Mask, String)>);

impl From<&Form<GScalar>> for FormJson {
    fn from(f: &Form<GScalar>) -> Self {
        FormJson(f.terms().map(|(m, c)| (m, c.to_string())).collect())
    }
}

impl TryFrom<FormJson> for Form<GScalar> {
    type Error = ExteriorError;
    fn try_from(j: FormJson) -> Result<Self, ExteriorError> {
        let mut f = Form::zero();
        for (m, c) in j.0 {
            if m > mask::TOP {
                return Err(ExteriorError::Parse(format!("mask {m} out of range")));
            }
            let c: GScalar = c.parse().map_err(|e| ExteriorError::Parse(format!("{e}")))?;
            f.add_term(m, c);
        }
        Ok(f)
    }
}

fn render_coeff(c: &GScalar) -> String {
    let s = c.to_string();
    if c.is_real() || c.conj() == -c.clone() {
        s
    } else {
        format!("({s})")
    }
}

pub fn render_form(f: &Form<GScalar>) -> String {
    if f.is_zero() {
        return "0".to_string();
    }
    f.terms()
        .map(|(m, c)| {
            if m == 0 {
                render_coeff(c)
            } else if c.is_one() {
                mask::name(m)
            } else if *c == -GScalar::one() {
                format!("-{}", mask::name(m))
            } else {
                format!("{}*{}", render_coeff(c), mask::name(m))
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn parse_monomial(s: &str) -> Result<(Mask, i32), ExteriorError> {
    let mut seq = Vec::new();
    for name in s.split('^') {
        let name = name.trim();
        let k = mask::NAMES
            .iter()
            .position(|n| *n == name)
            .ok_or_else(|| ExteriorError::Parse(format!("unknown covector `{name}`")))?;
        seq.push(k);
    }
    let sign = mask::sequence_sign(&seq);
    Ok((mask::from_indices(&seq), sign))
}

fn parse_scalar(s: &str) -> Result<GScalar, ExteriorError> {
    let s = s.trim();
    let s = s
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .unwrap_or(s);
    s.parse()
        .map_err(|e| ExteriorError::Parse(format!("bad coefficient `{s}`: {e}")))
}

fn parse_term(t: &str) -> Result<(Mask, GScalar), ExteriorError> {
    let t = t.trim();
    if t.is_empty() {
        return Err(ExteriorError::Parse("empty term".into()));
    }
    let (coef, mono) = match t.rfind('*') {
        Some(p) => (parse_scalar(&t[..p])?, Some(&t[p + 1..])),
        None if t.contains(|c: char| c.is_ascii_lowercase() && c != 'i') => {
            match t.strip_prefix('-') {
                Some(rest) => (-GScalar::one(), Some(rest)),
                None => (GScalar::one(), Some(t)),
            }
        }
        None => (parse_scalar(t)?, None),
    };
    match mono {
        None => Ok((0, coef)),
        Some(mono) => {
            let (m, sign) = parse_monomial(mono)?;
            let coef = match sign {
                0 => GScalar::zero(),
                1 => coef,
                _ => -coef,
            };
            Ok((m, coef))
        }
    }
}

/// Parses the syntax produced by [`render_form`]. Terms are separated by
/// `+` outside parentheses; monomials may be given in any order.
pub fn parse_form(s: &str) -> Result<Form<GScalar>, ExteriorError> {
    let s = s.trim();
    if s == "0" {
        return Ok(Form::zero());
    }
    let mut terms = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' if depth == 0 && s[..i].ends_with(' ') => {
                terms.push(&s[start..i]);
                start = i + 1;
            }
            _ => {}
        }
        if depth < 0 {
            return Err(ExteriorError::Parse("unbalanced parentheses".into()));
        }
    }
    if depth != 0 {
        return Err(ExteriorError::Parse("unbalanced parentheses".into()));
    }
    terms.push(&s[start..]);
    let mut f = Form::zero();
    for t in terms {
        let (m, c) = parse_term(t)?;
        f.add_term(m, c);
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let f = parse_form("2*al^be + (1-i)*ga^al~ + -be~ + 1/3i").unwrap();
        assert_eq!(parse_form(&render_form(&f)).unwrap(), f);
        assert_eq!(parse_form("be^al").unwrap(), parse_form("-al^be").unwrap());
        assert!(parse_form("al^al").unwrap().is_zero());
        assert!(parse_form("foo").is_err());
    }
}
