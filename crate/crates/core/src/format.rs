//! Plain-text family and partition files.
//!
//! Family: one `<id> <left> <right>` per line. Partition: one `<id> <part>`
//! per line, sorted by id. Lines starting with `#` are comments; blank lines
//! are skipped. Line numbers in errors are 1-based.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::interval::{Interval, IntervalFamily, IntervalId};
use crate::partition::Partition;

fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end_matches('\r')))
        .filter(|(_, l)| !l.trim().is_empty() && !l.starts_with('#'))
}

fn fields<const N: usize>(line: usize, text: &str) -> Result<[&str; N]> {
    let parts: Vec<&str> = text.split_whitespace().collect();
    parts.try_into().map_err(|p: Vec<&str>| Error::Parse {
        line,
        message: format!("expected {N} fields, found {}", p.len()),
    })
}

fn number<T: std::str::FromStr>(line: usize, what: &str, s: &str) -> Result<T> {
    s.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} {s:?}"),
    })
}

pub fn parse_family(text: &str) -> Result<IntervalFamily> {
    let mut intervals = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, l) in data_lines(text) {
        let [id, left, right] = fields::<3>(line, l)?;
        let id: IntervalId = number(line, "id", id)?;
        let iv = Interval::new(
            id,
            number(line, "left endpoint", left)?,
            number(line, "right endpoint", right)?,
        )
        .map_err(|e| Error::Parse {
            line,
            message: e.to_string(),
        })?;
        if !seen.insert(id) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate id {id}"),
            });
        }
        intervals.push(iv);
    }
    IntervalFamily::new(intervals)
}

pub fn write_family(f: &IntervalFamily) -> String {
    let mut out = String::new();
    for iv in f {
        writeln!(out, "{} {} {}", iv.id(), iv.left(), iv.right()).unwrap();
    }
    out
}

/// Reads a partition file. Part indices must be positive; they are kept as
/// written apart from closing gaps.
pub fn parse_partition(text: &str, v: usize) -> Result<Partition> {
    let mut labels = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (line, l) in data_lines(text) {
        let [id, part] = fields::<2>(line, l)?;
        let id: IntervalId = number(line, "id", id)?;
        let part: usize = number(line, "part", part)?;
        if part == 0 {
            return Err(Error::Parse {
                line,
                message: "parts are numbered from 1".into(),
            });
        }
        if !seen.insert(id) {
            return Err(Error::Parse {
                line,
                message: format!("id {id} assigned twice"),
            });
        }
        labels.push((id, part));
    }
    Ok(Partition::from_labels(labels, v))
}

pub fn write_partition(p: &Partition) -> String {
    let mut out = String::new();
    for (id, part) in p.iter() {
        writeln!(out, "{id} {part}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_round_trip() {
        let f = IntervalFamily::from_coords([(0, 4), (-3, 2), (1, 2)]).unwrap();
        let text = write_family(&f);
        assert_eq!(text, "0 0 4\n1 -3 2\n2 1 2\n");
        assert_eq!(parse_family(&text).unwrap(), f);
    }

    #[test]
    fn comments_and_blank_lines() {
        let f = parse_family("# header\n\n7 1 3\n# mid\n2 0 1\n").unwrap();
        assert_eq!(f.ids().collect::<Vec<_>>(), vec![7, 2]);
        assert!(parse_family("").unwrap().is_empty());
    }

    #[test]
    fn family_errors_carry_line_numbers() {
        let err = |t: &str| match parse_family(t) {
            Err(Error::Parse { line, .. }) => line,
            other => panic!("unexpected {other:?}"),
        };
        assert_eq!(err("0 0 1\n1 2\n"), 2);
        assert_eq!(err("# c\n0 0 x\n"), 2);
        assert_eq!(err("0 0 1\n1 5 5\n"), 2);
        assert_eq!(err("0 0 1\n0 2 3\n"), 2);
        assert_eq!(err("0 0 1 9\n"), 1);
    }

    #[test]
    fn partition_round_trip() {
        let p = Partition::from_labels([(5, 2), (1, 1), (3, 2)], 2);
        let text = write_partition(&p);
        assert_eq!(text, "1 1\n3 2\n5 2\n");
        assert_eq!(parse_partition(&text, 2).unwrap(), p);
        assert!(matches!(parse_partition("1 0\n", 1), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(
            parse_partition("1 1\n1 2\n", 1),
            Err(Error::Parse { line: 2, .. })
        ));
    }
}
