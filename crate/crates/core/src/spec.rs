//! Textual group specs: `C<n>`, `D<2n>`, `Q<2^k>`, `A4`, products such as
//! `C2xC4`, or `file:<path>` naming a Cayley table document.

use crate::error::{Error, Result};
use crate::group::{self, FiniteGroup};
use std::path::Path;

pub fn parse_spec(text: &str) -> Result<FiniteGroup> {
    if let Some(path) = text.strip_prefix("file:") {
        if path.is_empty() {
            return Err(Error::Parse { pos: 5, msg: "missing path".into() });
        }
        return FiniteGroup::from_cayley_file(Path::new(path));
    }
    let mut out: Option<FiniteGroup> = None;
    let mut pos = 0;
    for (i, part) in text.split('x').enumerate() {
        if i > 0 {
            pos += 1;
        }
        let g = parse_factor(part, pos)?;
        out = Some(match out {
            None => g,
            Some(acc) => group::direct_product(&acc, &g)?,
        });
        pos += part.len();
    }
    let g = out.expect("split yields at least one part");
    Ok(g.with_label(text))
}

fn parse_factor(s: &str, pos: usize) -> Result<FiniteGroup> {
    let err = |off: usize, msg: &str| Error::Parse { pos: pos + off, msg: msg.to_string() };
    if s.is_empty() {
        return Err(err(0, "empty factor"));
    }
    if s == "A4" {
        return group::alternating4();
    }
    let (family, digits) = s.split_at(1);
    if digits.is_empty() {
        return Err(err(1, "expected a number"));
    }
    if let Some(bad) = digits.find(|c: char| !c.is_ascii_digit()) {
        return Err(err(1 + bad, "expected a digit"));
    }
    let n: usize = digits.parse().map_err(|_| err(1, "number out of range"))?;
    let built = match family {
        "C" => group::cyclic(n),
        "D" => group::dihedral(n),
        "Q" => group::generalized_quaternion(n),
        _ => return Err(err(0, "expected one of C, D, Q, A4")),
    };
    built.map_err(|e| match e {
        Error::InvalidArgument(msg) => err(1, &msg),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn products_and_families() {
        let g = parse_spec("C2xC4").unwrap();
        assert_eq!(g.order(), 8);
        assert!(g.is_abelian());
        assert_eq!(g.label(), "C2xC4");
        assert_eq!(parse_spec("Q8").unwrap().involutions().len(), 1);
        assert_eq!(parse_spec("A4").unwrap().order(), 12);
        assert_eq!(parse_spec("D6").unwrap().center().len(), 1);
    }

    #[test]
    fn positions_in_errors() {
        assert_eq!(
            parse_spec("C2xZ4").unwrap_err(),
            Error::Parse { pos: 3, msg: "expected one of C, D, Q, A4".into() }
        );
        assert!(matches!(parse_spec("C2x"), Err(Error::Parse { pos: 3, .. })));
        assert!(matches!(parse_spec("C2xC4a"), Err(Error::Parse { pos: 5, .. })));
        assert!(matches!(parse_spec("D7"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_spec("C8xC16"), Err(Error::SizeCap { .. })));
    }
}
