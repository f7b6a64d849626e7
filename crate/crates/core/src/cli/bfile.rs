//! OEIS b-file ingestion.

use crate::error::{Error, Result};
use crate::exact::Integer;

/// A parsed b-file: consecutive `(index, value)` pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    /// The `A`-number named in a leading comment, if any.
    pub id: Option<String>,
    pub entries: Vec<(i64, Integer)>,
}

impl BFile {
    pub fn first_index(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

fn sequence_id(comment: &str) -> Option<String> {
    comment
        .split_whitespace()
        .find(|w| w.len() == 7 && w.starts_with('A') && w[1..].bytes().all(|b| b.is_ascii_digit()))
        .map(str::to_string)
}

/// Parses `<index> <value>` lines. Blank lines and lines starting with `#`
/// are skipped; indices must increase by exactly one.
pub fn parse_bfile(text: impl AsRef<[u8]>) -> Result<BFile> {
    let text = text.as_ref();
    let mut id = None;
    let mut entries: Vec<(i64, Integer)> = Vec::new();
    for (lineno, raw) in text.split(|&b| b == b'\n').enumerate() {
        let line_no = lineno + 1;
        let bad = |reason: String| Error::MalformedBFile {
            line: line_no,
            reason,
        };
        if !raw.is_ascii() {
            return Err(bad("non-ASCII byte".into()));
        }
        let line = std::str::from_utf8(raw).expect("ASCII is UTF-8").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if id.is_none() {
                id = sequence_id(comment);
            }
            continue;
        }
        let mut fields = line.split_whitespace();
        let (Some(i), Some(v), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(bad(format!("expected `<index> <value>`, got `{line}`")));
        };
        let index: i64 = i.parse().map_err(|_| bad(format!("bad index `{i}`")))?;
        let value: Integer = v.parse().map_err(|_| bad(format!("bad value `{v}`")))?;
        if let Some((prev, _)) = entries.last() {
            if index != prev + 1 {
                return Err(bad(format!("non-consecutive index {index} after {prev}")));
            }
        }
        entries.push((index, value));
    }
    Ok(BFile { id, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(b: &BFile) -> Vec<(i64, i64)> {
        b.entries
            .iter()
            .map(|(i, v)| (*i, i64::try_from(v).unwrap()))
            .collect()
    }

    #[test]
    fn fibonacci_prefix() {
        let b = parse_bfile("0 0\n1 1\n2 1\n3 2\n").unwrap();
        assert_eq!(b.first_index(), Some(0));
        assert_eq!(values(&b), [(0, 0), (1, 1), (2, 1), (3, 2)]);
    }

    #[test]
    fn comments_and_offset_one() {
        let b = parse_bfile("# comment\n1 1\n2 3\n3 4\n").unwrap();
        assert_eq!(b.first_index(), Some(1));
        assert_eq!(b.len(), 3);
        assert_eq!(b.id, None);
    }

    #[test]
    fn non_consecutive_index() {
        let err = parse_bfile("1 1\n3 2\n").unwrap_err();
        assert!(
            matches!(err, Error::MalformedBFile { line: 2, .. }),
            "{err}"
        );
    }

    #[test]
    fn malformed_lines_report_line_numbers() {
        for (text, line) in [
            ("0 0\nx 1\n", 2),
            ("\n\n0\n", 3),
            ("0 1 2\n", 1),
            ("0 1.5\n", 1),
        ] {
            match parse_bfile(text) {
                Err(Error::MalformedBFile { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
                other => panic!("{text:?}: {other:?}"),
            }
        }
        assert!(parse_bfile(b"0 \xff\n").is_err());
    }

    #[test]
    fn big_values_and_ids() {
        let b = parse_bfile("# A001109 balancing\r\n0 0\r\n1 123456789012345678901234567890\r\n")
            .unwrap();
        assert_eq!(b.id.as_deref(), Some("A001109"));
        assert_eq!(b.entries[1].1.to_string(), "123456789012345678901234567890");
    }

    #[test]
    fn empty_input() {
        assert!(parse_bfile("").unwrap().is_empty());
    }
}
