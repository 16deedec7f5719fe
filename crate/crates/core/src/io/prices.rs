//! Price files: one line per voter, `unit`, `aon <c|inf>` or `list v0 v1 ...`.

use super::{content_lines, parse_error};
use crate::error::Result;
use crate::pricing::{Cost, PriceFunction};

pub fn parse_prices(text: &str) -> Result<Vec<PriceFunction>> {
    content_lines(text)
        .map(|(ln, line)| {
            let mut tokens = line.split_whitespace();
            let kind = tokens.next().unwrap_or_default();
            let args: Vec<&str> = tokens.collect();
            let number = |s: &str| -> Result<u64> {
                s.parse()
                    .or_else(|_| parse_error(ln, format!("expected a nonnegative integer, got {s:?}")))
            };
            match (kind, args.as_slice()) {
                ("unit", []) => Ok(PriceFunction::Unit),
                ("aon", ["inf"]) => Ok(PriceFunction::AllOrNothing(Cost::Infinite)),
                ("aon", [c]) => Ok(PriceFunction::AllOrNothing(Cost::Finite(number(c)?))),
                ("list", values) if !values.is_empty() => {
                    let values = values.iter().map(|s| number(s)).collect::<Result<Vec<_>>>()?;
                    PriceFunction::listed(values).or_else(|e| parse_error(ln, e.to_string()))
                }
                _ => parse_error(ln, format!("expected `unit`, `aon <c|inf>` or `list v0 ...`, got {line:?}")),
            }
        })
        .collect()
}

pub fn write_prices(prices: &[PriceFunction]) -> String {
    let mut out = String::new();
    for p in prices {
        match p {
            PriceFunction::Unit => out.push_str("unit"),
            PriceFunction::AllOrNothing(c) => out.push_str(&format!("aon {c}")),
            PriceFunction::Listed(t) => {
                out.push_str("list");
                for v in t.as_slice() {
                    out.push_str(&format!(" {v}"));
                }
            }
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn round_trip() {
        let text = "unit\naon 4\naon inf\nlist 0 5 5 8\n";
        let prices = parse_prices(text).unwrap();
        assert_eq!(prices[1], PriceFunction::AllOrNothing(Cost::Finite(4)));
        assert_eq!(prices[2], PriceFunction::AllOrNothing(Cost::Infinite));
        assert_eq!(write_prices(&prices), text);
    }

    #[test]
    fn bad_lines() {
        for (text, line) in [
            ("unit\nlist 1 2\n", 2),
            ("list 0 3 2\n", 1),
            ("unit\n\naon\n", 3),
            ("aon -1\n", 1),
            ("flat 3\n", 1),
            ("list\n", 1),
        ] {
            match parse_prices(text) {
                Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?} gave {other:?}"),
            }
        }
    }
}
