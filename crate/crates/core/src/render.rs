//! Plain-text rendering of signed rational sums such as `(1/32)*B(3n) - (3/32)*B(n)`.

use crate::arith::Rational;

/// Renders `Σ coeff·atom`; an atom of `None` is a bare constant.
/// Zero coefficients are skipped; an empty sum renders as `0`.
pub(crate) fn render_sum<'a, I>(items: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, Option<String>)>,
{
    let mut out = String::new();
    for (coeff, atom) in items {
        if coeff.is_zero() {
            continue;
        }
        let negative = coeff.is_negative();
        if out.is_empty() {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        let mag = coeff.abs();
        match atom {
            None => out.push_str(&mag.to_string()),
            Some(atom) if mag == Rational::one() => out.push_str(&atom),
            Some(atom) if mag.is_integer() => out.push_str(&format!("{mag}*{atom}")),
            Some(atom) => out.push_str(&format!("({mag})*{atom}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `stride·n + offset` as `n`, `3n`, `2n+2`, `n-1`.
pub(crate) fn affine_index(stride: u64, offset: i64) -> String {
    let head = if stride == 1 {
        "n".to_string()
    } else {
        format!("{stride}n")
    };
    match offset {
        0 => head,
        o if o > 0 => format!("{head}+{o}"),
        o => format!("{head}{o}"),
    }
}
