//! `name` or `name(arg, arg, …)`, with 1-based indices.
//!
//! ```text
//! permute([2,1,3])            scale(c, [a1,…])         identify(i, j)
//! specialize(i, b)            invert(i)                differentiate(i)
//! dir_derivative([v])         affine([a], [v1;v2])     initial_form([w])
//! psd_diag                    psd_minor([1,3])         psd_permute([2,1])
//! psd_congruence([S], transpose|inverse)               psd_dir_derivative([V])
//! psd_inversion               psd_inversion([2,1], 1)  psd_initial_form([W])
//! lieb_sokal(g, [v])
//! ```
//!
//! Complex scalars are real numbers or `(re±imi)`.

use num_complex::Complex64;
use num_rational::Ratio;

use super::values::{parse_index_list, parse_matrix, parse_vector, parse_weight_matrix};
use super::{complex, parse_polynomial, Cursor};
use crate::error::ParseError;
use crate::poly::Weights;
use crate::preservers::PreserverSpec;
use crate::space::Space;
use crate::symmat::{BlockInversion, CongruenceKind};

/// A complex scalar: a real number (optionally `p/q`) or `(re±imi)`.
pub fn parse_complex(src: &str) -> Result<Complex64, ParseError> {
    let mut p = Cursor::new(src);
    if p.peek() == Some('(') {
        let z = complex(&mut p)?;
        if !p.at_end() {
            return Err(p.error("trailing input"));
        }
        return Ok(z);
    }
    super::parse_real(src).map(|x| Complex64::new(x, 0.0))
}

/// Splits `name(args)` into the name and top-level comma-separated arguments with offsets.
fn split_call(src: &str) -> Result<(String, Vec<(usize, &str)>), ParseError> {
    let Some(open) = src.find('(') else {
        let name = src.trim();
        if name.is_empty() {
            return Err(ParseError::new(0, "empty transform"));
        }
        return Ok((name.to_string(), Vec::new()));
    };
    let name = src[..open].trim().to_string();
    let body_end = src.trim_end().len();
    if !src[..body_end].ends_with(')') {
        return Err(ParseError::new(body_end, "expected ')' at the end"));
    }
    let body = &src[open + 1..body_end - 1];
    let mut args = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (k, ch) in body.char_indices() {
        match ch {
            '(' | '[' | '{' => depth += 1,
            ')' | ']' | '}' => {
                depth -= 1;
                if depth < 0 {
                    return Err(ParseError::new(open + 1 + k, format!("unbalanced '{ch}'")));
                }
            }
            ',' if depth == 0 => {
                args.push((open + 1 + start, &body[start..k]));
                start = k + 1;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(ParseError::new(body_end - 1, "unbalanced brackets"));
    }
    if !body[start..].trim().is_empty() || !args.is_empty() {
        args.push((open + 1 + start, &body[start..]));
    }
    Ok((name, args))
}

fn shift(at: usize) -> impl Fn(ParseError) -> ParseError {
    move |e| ParseError::new(at + e.position, e.message)
}

fn index(at: usize, s: &str) -> Result<usize, ParseError> {
    match s.trim().parse::<usize>() {
        Ok(i) if i >= 1 => Ok(i - 1),
        _ => Err(ParseError::new(at, format!("expected a positive index, found '{}'", s.trim()))),
    }
}

fn weights(src: &str) -> Result<Weights, ParseError> {
    let t: String = src.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = t.strip_prefix('[').and_then(|s| s.strip_suffix(']')).unwrap_or(&t);
    let exact: Option<Vec<Ratio<i64>>> = inner
        .split(',')
        .map(|s| {
            let (n, d) = s.split_once('/').unwrap_or((s, "1"));
            let d: i64 = d.parse().ok()?;
            (d != 0).then_some(Ratio::new(n.parse().ok()?, d))
        })
        .collect();
    match exact {
        Some(w) => Ok(Weights::Exact(w)),
        None => parse_vector(src).map(Weights::Float),
    }
}

fn complex_vector(at: usize, src: &str) -> Result<Vec<Complex64>, ParseError> {
    let t = src.trim();
    let lead = src.len() - src.trim_start().len();
    let inner = t
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| ParseError::new(at + lead, "expected '[...]'"))?;
    let mut out = Vec::new();
    let mut depth = 0;
    let mut start = 0;
    let base = at + lead + 1;
    for (k, ch) in inner.char_indices().chain(std::iter::once((inner.len(), ','))) {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(parse_complex(&inner[start..k]).map_err(shift(base + start))?);
                start = k + 1;
            }
            _ => {}
        }
    }
    Ok(out)
}

/// Parses a transform for polynomials over `space`.
pub fn parse_transform(src: &str, space: &Space) -> Result<PreserverSpec, ParseError> {
    let (name, args) = split_call(src)?;
    let want = |n: usize| -> Result<(), ParseError> {
        if args.len() != n {
            return Err(ParseError::new(
                0,
                format!("'{name}' takes {n} argument(s), found {}", args.len()),
            ));
        }
        Ok(())
    };
    let arg = |k: usize| args[k];
    let spec = match name.as_str() {
        "permute" | "psd_permute" | "psd_minor" => {
            want(1)?;
            let (at, s) = arg(0);
            let idx = parse_index_list(s).map_err(shift(at))?;
            match name.as_str() {
                "permute" => PreserverSpec::Permute(idx),
                "psd_permute" => PreserverSpec::PsdPermute(idx),
                _ => PreserverSpec::PsdMinor(idx),
            }
        }
        "scale" => {
            want(2)?;
            let c = parse_complex(arg(0).1).map_err(shift(arg(0).0))?;
            let a = parse_vector(arg(1).1).map_err(shift(arg(1).0))?;
            PreserverSpec::Scale { c, a }
        }
        "identify" => {
            want(2)?;
            PreserverSpec::Identify {
                i: index(arg(0).0, arg(0).1)?,
                j: index(arg(1).0, arg(1).1)?,
            }
        }
        "specialize" => {
            want(2)?;
            PreserverSpec::Specialize {
                i: index(arg(0).0, arg(0).1)?,
                b: parse_complex(arg(1).1).map_err(shift(arg(1).0))?,
            }
        }
        "invert" | "differentiate" => {
            want(1)?;
            let i = index(arg(0).0, arg(0).1)?;
            if name == "invert" {
                PreserverSpec::Invert(i)
            } else {
                PreserverSpec::Differentiate(i)
            }
        }
        "dir_derivative" => {
            want(1)?;
            PreserverSpec::DirDerivative(parse_vector(arg(0).1).map_err(shift(arg(0).0))?)
        }
        "affine" => {
            want(2)?;
            let a = complex_vector(arg(0).0, arg(0).1)?;
            let m = parse_matrix(arg(1).1).map_err(shift(arg(1).0))?;
            let dirs = m.row_iter().map(|r| r.iter().copied().collect()).collect();
            PreserverSpec::Affine { a, dirs }
        }
        "initial_form" => {
            want(1)?;
            PreserverSpec::InitialForm(weights(arg(0).1).map_err(shift(arg(0).0))?)
        }
        "psd_diag" => {
            want(0)?;
            PreserverSpec::PsdDiag
        }
        "psd_congruence" => {
            want(2)?;
            let s = parse_matrix(arg(0).1).map_err(shift(arg(0).0))?;
            let kind = match arg(1).1.trim() {
                "transpose" => CongruenceKind::Transpose,
                "inverse" => CongruenceKind::Inverse,
                other => {
                    return Err(ParseError::new(
                        arg(1).0,
                        format!("expected 'transpose' or 'inverse', found '{other}'"),
                    ))
                }
            };
            PreserverSpec::PsdCongruence { s, kind }
        }
        "psd_dir_derivative" => {
            want(1)?;
            PreserverSpec::PsdDirDerivative(parse_matrix(arg(0).1).map_err(shift(arg(0).0))?)
        }
        "psd_inversion" => match args.len() {
            0 => PreserverSpec::PsdInversion(None),
            2 => {
                let sizes = parse_index_list(arg(0).1)
                    .map_err(shift(arg(0).0))?
                    .into_iter()
                    .map(|s| s + 1)
                    .collect();
                let target = index(arg(1).0, arg(1).1)?;
                PreserverSpec::PsdInversion(Some(BlockInversion { sizes, target }))
            }
            n => {
                return Err(ParseError::new(
                    0,
                    format!("'psd_inversion' takes 0 or 2 arguments, found {n}"),
                ))
            }
        },
        "psd_initial_form" => {
            want(1)?;
            PreserverSpec::PsdInitialForm(parse_weight_matrix(arg(0).1).map_err(shift(arg(0).0))?)
        }
        "lieb_sokal" => {
            want(2)?;
            let g = parse_polynomial(arg(0).1, space).map_err(shift(arg(0).0))?;
            let v = parse_vector(arg(1).1).map_err(shift(arg(1).0))?;
            PreserverSpec::LiebSokal { g, v }
        }
        _ => return Err(ParseError::new(0, format!("unknown transform '{name}'"))),
    };
    Ok(spec)
}
