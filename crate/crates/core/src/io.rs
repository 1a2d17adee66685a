//! Line-oriented model and point files, and JSON exports.
//!
//! Polynomials are written `[c0,c1,...]`, lowest degree first, each
//! coefficient a field element index (a negative integer `-n` means the
//! negative of element `n`). Blank lines and lines starting with `#` are
//! ignored.
//!
//! ```text
//! MWLAT1 model
//! 5 1
//! []
//! []
//! []
//! []
//! [0,1]
//! ```
//!
//! ```text
//! MWLAT1 points
//! [0,1] [1] [1,2] [1]
//! ```
//! Each point line holds `x_num x_den y_num y_den`.

use serde_json::json;

use crate::curve::{CurvePoint, WeierstrassCurve};
use crate::error::{Error, Result};
use crate::field::{Field, FieldCtx};
use crate::poly::{Poly, RationalFunction};

pub const MODEL_HEADER: &str = "MWLAT1 model";
pub const POINTS_HEADER: &str = "MWLAT1 points";

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn expect_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    header: &str,
) -> Result<()> {
    match lines.next() {
        Some((_, l)) if l == header => Ok(()),
        Some((n, l)) => Err(Error::Parse(format!("line {n}: expected {header:?}, got {l:?}"))),
        None => Err(Error::Parse(format!("empty file, expected {header:?}"))),
    }
}

pub fn parse_model(text: &str) -> Result<WeierstrassCurve> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, MODEL_HEADER)?;
    let (n, ps) = lines
        .next()
        .ok_or_else(|| Error::Parse("missing `p s` line".into()))?;
    let nums: Vec<u32> = ps
        .split_whitespace()
        .map(|w| w.parse::<u32>())
        .collect::<std::result::Result<_, _>>()
        .map_err(|_| Error::Parse(format!("line {n}: expected `p s`, got {ps:?}")))?;
    let [p, s] = nums[..] else {
        return Err(Error::Parse(format!("line {n}: expected `p s`, got {ps:?}")));
    };
    let field = FieldCtx::new(p, s as usize)?;
    let mut coeffs = Vec::with_capacity(5);
    for name in ["a1", "a2", "a3", "a4", "a6"] {
        let (n, l) = lines
            .next()
            .ok_or_else(|| Error::Parse(format!("missing coefficient {name}")))?;
        coeffs.push(
            Poly::parse(&field, l).map_err(|e| Error::Parse(format!("line {n} ({name}): {e}")))?,
        );
    }
    if let Some((n, l)) = lines.next() {
        return Err(Error::Parse(format!("line {n}: unexpected trailing content {l:?}")));
    }
    let coeffs: [Poly; 5] = coeffs.try_into().expect("five coefficients");
    WeierstrassCurve::new(&field, coeffs)
}

pub fn write_model(curve: &WeierstrassCurve) -> String {
    let f = curve.field();
    let mut out = format!("{MODEL_HEADER}\n{} {}\n", f.p(), f.degree());
    for a in curve.coefficients() {
        out.push_str(&a.to_text());
        out.push('\n');
    }
    out
}

fn parse_rf(field: &Field, num: &str, den: &str, n: usize) -> Result<RationalFunction> {
    let num = Poly::parse(field, num).map_err(|e| Error::Parse(format!("line {n}: {e}")))?;
    let den = Poly::parse(field, den).map_err(|e| Error::Parse(format!("line {n}: {e}")))?;
    RationalFunction::new(num, den)
        .map_err(|_| Error::Parse(format!("line {n}: zero denominator")))
}

/// Reads points and checks each one against `curve`.
pub fn parse_points(curve: &WeierstrassCurve, text: &str) -> Result<Vec<CurvePoint>> {
    let mut lines = content_lines(text);
    expect_header(&mut lines, POINTS_HEADER)?;
    let field = curve.field();
    let mut out = Vec::new();
    for (n, l) in lines {
        let parts: Vec<&str> = l.split_whitespace().collect();
        let [xn, xd, yn, yd] = parts[..] else {
            return Err(Error::Parse(format!(
                "line {n}: expected four coefficient vectors, got {}",
                parts.len()
            )));
        };
        let pt = CurvePoint::affine(parse_rf(field, xn, xd, n)?, parse_rf(field, yn, yd, n)?);
        if !curve.on_curve(&pt)? {
            return Err(Error::NotOnCurve(format!("point on line {n}")));
        }
        out.push(pt);
    }
    Ok(out)
}

/// Writes affine points; the identity has no line form and is skipped.
pub fn write_points(points: &[CurvePoint]) -> String {
    let mut out = format!("{POINTS_HEADER}\n");
    for p in points {
        if let CurvePoint::Affine { x, y } = p {
            out.push_str(&format!(
                "{} {} {} {}\n",
                x.num().to_text(),
                x.den().to_text(),
                y.num().to_text(),
                y.den().to_text()
            ));
        }
    }
    out
}

/// Points together with the field they live in.
pub fn points_json(field: &Field, points: &[CurvePoint]) -> serde_json::Value {
    let pts: Vec<serde_json::Value> = points
        .iter()
        .filter_map(|p| match p {
            CurvePoint::Identity => None,
            CurvePoint::Affine { x, y } => Some(json!({
                "x_num": x.num().to_indices().iter().map(u128::to_string).collect::<Vec<_>>(),
                "x_den": x.den().to_indices().iter().map(u128::to_string).collect::<Vec<_>>(),
                "y_num": y.num().to_indices().iter().map(u128::to_string).collect::<Vec<_>>(),
                "y_den": y.den().to_indices().iter().map(u128::to_string).collect::<Vec<_>>(),
            })),
        })
        .collect();
    json!({ "field": field.dump(), "points": pts })
}

#[cfg(test)]
mod tests {
    use super::*;

    const MODEL: &str = "MWLAT1 model\n# y^2 = x^3 + t\n5 1\n[]\n[]\n[]\n[]\n[0,1]\n";

    #[test]
    fn model_round_trip() {
        let c = parse_model(MODEL).unwrap();
        assert!(c.is_short());
        assert_eq!(c.a6().to_text(), "[0,1]");
        let again = parse_model(&write_model(&c)).unwrap();
        assert_eq!(again.coefficients(), c.coefficients());
    }

    #[test]
    fn model_errors() {
        assert!(matches!(parse_model("MWLAT0 model\n5 1\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_model("MWLAT1 model\n5\n"), Err(Error::Parse(_))));
        assert!(matches!(
            parse_model("MWLAT1 model\n5 1\n[]\n[]\n[]\n[]\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(
            parse_model("MWLAT1 model\n5 1\n[]\n[]\n[]\n[]\n[x]\n"),
            Err(Error::Parse(_))
        ));
        assert!(matches!(parse_model("MWLAT1 model\n6 1\n[]\n[]\n[]\n[]\n[1]\n"), Err(Error::NotPrime(6))));
    }

    #[test]
    fn points_round_trip() {
        // (0, t) on y^2 = x^3 + t^2
        let c = parse_model("MWLAT1 model\n5 1\n[]\n[]\n[]\n[]\n[0,0,1]\n").unwrap();
        let text = "MWLAT1 points\n[] [1] [0,1] [1]\n";
        let pts = parse_points(&c, text).unwrap();
        assert_eq!(pts.len(), 1);
        assert_eq!(write_points(&pts), text);
        let empty = parse_points(&c, "MWLAT1 points\n").unwrap();
        assert!(empty.is_empty());
        assert!(matches!(
            parse_points(&c, "MWLAT1 points\n[] [1] [0,2] [1]\n"),
            Err(Error::NotOnCurve(_))
        ));
        assert!(matches!(parse_points(&c, "MWLAT1 points\n[] [1]\n"), Err(Error::Parse(_))));
    }
}
