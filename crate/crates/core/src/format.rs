//! Text formats for colorings, sequences and `f`-specs.
//!
//! Colorings:
//!
//! ```text
//! coloring d=<d> c=<c> a=<a> R=<R>
//! <x_0> … <x_{d-1}> <color>        one line per cell, lexicographic order
//! ```
//!
//! Rule-backed colorings write `coloring-rule <name> d=… c=… a=… R=… <params>`
//! followed by their source colorings. Sequences:
//!
//! ```text
//! sequence c=<c> n=<n>
//! <m_0> … <m_{c-1}>                n lines
//! ```
//!
//! `f`-specs are `const:<k>`, `id`, `affine:<p>,<q>` or `table:<path>`,
//! where the table file lists one value per line and ends with `default <k>`.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::lift;
use crate::primitives::{Coloring, FSpec, Tuple, TupleSequence};

pub fn write_coloring(c: &Coloring) -> Result<String> {
    let mut out = String::new();
    write_coloring_into(c, &mut out)?;
    Ok(out)
}

fn write_coloring_into(c: &Coloring, out: &mut String) -> Result<()> {
    let dims = format!("d={} c={} a={} R={}", c.dim(), c.colors(), c.lo(), c.hi());
    if let Some(rule) = c.rule() {
        write!(out, "coloring-rule {} {dims}", rule.name()).unwrap();
        for (k, v) in rule.params() {
            write!(out, " {k}={v}").unwrap();
        }
        out.push('\n');
        for src in rule.sources() {
            write_coloring_into(src, out)?;
        }
        return Ok(());
    }
    writeln!(out, "coloring {dims}").unwrap();
    for cell in c.lex_cells() {
        let (points, color) = cell?;
        for p in points {
            write!(out, "{p} ").unwrap();
        }
        writeln!(out, "{color}").unwrap();
    }
    Ok(())
}

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
    last: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines {
            inner: text.lines().enumerate(),
            last: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, &'a str)> {
        match self.inner.next() {
            Some((i, l)) => {
                self.last = i + 1;
                Ok((i + 1, l))
            }
            None => Err(Error::parse(
                self.last + 1,
                format!("unexpected end of input, expected {what}"),
            )),
        }
    }

    fn finish(&mut self) -> Result<()> {
        match self.inner.next() {
            Some((i, _)) => Err(Error::parse(i + 1, "trailing content")),
            None => Ok(()),
        }
    }
}

fn parse_u64(line: usize, tok: &str) -> Result<u64> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected a nonnegative integer, got {tok:?}")))
}

/// `key=value` fields after a header keyword, in the listed order.
fn header_fields<'a>(line: usize, toks: &[&'a str], keys: &[&str]) -> Result<Vec<&'a str>> {
    if toks.len() < keys.len() {
        return Err(Error::parse(line, format!("header needs fields {keys:?}")));
    }
    keys.iter()
        .zip(toks)
        .map(|(k, t)| match t.split_once('=') {
            Some((key, v)) if key == *k => Ok(v),
            _ => Err(Error::parse(line, format!("expected {k}=…, got {t:?}"))),
        })
        .collect()
}

pub fn parse_coloring(text: &str) -> Result<Coloring> {
    let mut lines = Lines::new(text);
    let c = parse_coloring_from(&mut lines)?;
    lines.finish()?;
    Ok(c)
}

fn parse_coloring_from(lines: &mut Lines<'_>) -> Result<Coloring> {
    let (ln, header) = lines.next("a coloring header")?;
    let toks: Vec<&str> = header.split(' ').collect();
    match toks.first() {
        Some(&"coloring") => parse_table(lines, ln, &toks[1..]),
        Some(&"coloring-rule") => parse_rule(lines, ln, &toks[1..]),
        _ => Err(Error::parse(
            ln,
            "expected `coloring` or `coloring-rule` header",
        )),
    }
}

fn dims(ln: usize, toks: &[&str]) -> Result<(usize, u32, u64, u64)> {
    let f = header_fields(ln, toks, &["d", "c", "a", "R"])?;
    let d = parse_u64(ln, f[0])? as usize;
    let c = u32::try_from(parse_u64(ln, f[1])?)
        .map_err(|_| Error::parse(ln, "color count too large"))?;
    Ok((d, c, parse_u64(ln, f[2])?, parse_u64(ln, f[3])?))
}

fn parse_table(lines: &mut Lines<'_>, ln: usize, toks: &[&str]) -> Result<Coloring> {
    if toks.len() != 4 {
        return Err(Error::parse(ln, "coloring header takes exactly d, c, a, R"));
    }
    let (d, colors, lo, hi) = dims(ln, toks)?;
    if d == 0 || lo > hi {
        return Err(Error::parse(ln, format!("invalid domain [{lo},{hi}]^{d}")));
    }
    let total = crate::primitives::binomial(hi - lo + 1, d as u64);
    if total > crate::primitives::DEFAULT_MAX_CELLS as u128 {
        return Err(Error::parse(
            ln,
            format!("{total} cells exceed the table limit"),
        ));
    }
    let mut cells: HashMap<Vec<u64>, u32> = HashMap::with_capacity(total as usize);
    for _ in 0..total {
        let (ln, line) = lines.next("a coloring cell")?;
        let nums = line
            .split(' ')
            .map(|t| parse_u64(ln, t))
            .collect::<Result<Vec<_>>>()?;
        if nums.len() != d + 1 {
            return Err(Error::parse(
                ln,
                format!("cell line needs {} integers", d + 1),
            ));
        }
        let (points, color) = nums.split_at(d);
        if points.windows(2).any(|w| w[0] >= w[1]) || points[0] < lo || points[d - 1] > hi {
            return Err(Error::parse(
                ln,
                format!("{points:?} is not a cell of [{lo},{hi}]^{d}"),
            ));
        }
        if color[0] >= colors as u64 {
            return Err(Error::parse(ln, format!("color {} out of range", color[0])));
        }
        if cells.insert(points.to_vec(), color[0] as u32).is_some() {
            return Err(Error::parse(ln, format!("duplicate cell {points:?}")));
        }
    }
    Coloring::from_fn(d, colors, lo, hi, u64::MAX, |p| cells[p])
        .map_err(|e| Error::parse(ln, e.to_string()))
}

fn parse_rule(lines: &mut Lines<'_>, ln: usize, toks: &[&str]) -> Result<Coloring> {
    let Some((&name, rest)) = toks.split_first() else {
        return Err(Error::parse(ln, "coloring-rule needs a constructor name"));
    };
    let (d, colors, lo, hi) = dims(ln, rest)?;
    let built = match name {
        "lift" => {
            if rest.len() != 5 {
                return Err(Error::parse(ln, "lift rule takes d, c, a, R, m"));
            }
            let m = parse_u64(ln, header_fields(ln, &rest[4..], &["m"])?[0])?;
            let source = parse_coloring_from(lines)?;
            lift::lift_bad_coloring(&source, m)?
        }
        other => return Err(Error::parse(ln, format!("unknown coloring rule {other:?}"))),
    };
    if (built.dim(), built.colors(), built.lo(), built.hi()) != (d, colors, lo, hi) {
        return Err(Error::parse(
            ln,
            "rule header disagrees with the rebuilt coloring",
        ));
    }
    Ok(built)
}

pub fn write_sequence(s: &TupleSequence) -> String {
    let mut out = format!("sequence c={} n={}\n", s.arity(), s.len());
    for t in s.items() {
        let row: Vec<String> = t.coords().iter().map(u64::to_string).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

pub fn parse_sequence(text: &str) -> Result<TupleSequence> {
    let mut lines = Lines::new(text);
    let (ln, header) = lines.next("a sequence header")?;
    let toks: Vec<&str> = header.split(' ').collect();
    if toks.len() != 3 || toks[0] != "sequence" {
        return Err(Error::parse(ln, "expected `sequence c=<c> n=<n>`"));
    }
    let f = header_fields(ln, &toks[1..], &["c", "n"])?;
    let arity = parse_u64(ln, f[0])? as usize;
    let n = parse_u64(ln, f[1])?;
    let mut items = Vec::new();
    for _ in 0..n {
        let (ln, line) = lines.next("a tuple")?;
        let coords = if line.is_empty() {
            Vec::new()
        } else {
            line.split(' ')
                .map(|t| parse_u64(ln, t))
                .collect::<Result<Vec<_>>>()?
        };
        if coords.len() != arity {
            return Err(Error::parse(
                ln,
                format!("expected {arity} coordinates, got {}", coords.len()),
            ));
        }
        items.push(Tuple::new(coords));
    }
    lines.finish()?;
    TupleSequence::new(arity, items)
}

/// Parses an `f`-spec; `table:` paths are resolved relative to `base`.
pub fn parse_fspec(spec: &str, base: Option<&Path>) -> Result<FSpec> {
    let bad = || Error::parse(1, format!("bad f-spec {spec:?}"));
    if spec == "id" {
        return Ok(FSpec::Id);
    }
    if let Some(k) = spec.strip_prefix("const:") {
        return Ok(FSpec::Const(k.parse().map_err(|_| bad())?));
    }
    if let Some(pq) = spec.strip_prefix("affine:") {
        let (p, q) = pq.split_once(',').ok_or_else(bad)?;
        return Ok(FSpec::Affine(
            p.parse().map_err(|_| bad())?,
            q.parse().map_err(|_| bad())?,
        ));
    }
    if let Some(path) = spec.strip_prefix("table:") {
        let path = match base {
            Some(b) => b.join(path),
            None => Path::new(path).to_path_buf(),
        };
        let text = std::fs::read_to_string(&path)
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        return parse_table_spec(&text);
    }
    Err(bad())
}

pub fn parse_table_spec(text: &str) -> Result<FSpec> {
    let all: Vec<&str> = text.lines().collect();
    let Some((last, body)) = all.split_last() else {
        return Err(Error::parse(1, "empty table"));
    };
    let default = last
        .strip_prefix("default ")
        .ok_or_else(|| Error::parse(all.len(), "table must end with `default <k>`"))
        .and_then(|k| parse_u64(all.len(), k))?;
    let values = body
        .iter()
        .enumerate()
        .map(|(i, l)| parse_u64(i + 1, l))
        .collect::<Result<Vec<_>>>()?;
    Ok(FSpec::Table { values, default })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coloring_text_shape() {
        let c = Coloring::from_lex_colors(2, 2, 0, 2, &[0, 1, 1]).unwrap();
        let text = write_coloring(&c).unwrap();
        assert_eq!(text, "coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 1\n1 2 1\n");
        assert_eq!(parse_coloring(&text).unwrap(), c);
    }

    #[test]
    fn coloring_cells_in_any_order() {
        let text = "coloring d=2 c=2 a=0 R=2\n1 2 1\n0 1 0\n0 2 1\n";
        let c = parse_coloring(text).unwrap();
        assert_eq!(c.color(&[0, 2]).unwrap(), 1);
    }

    #[test]
    fn coloring_parse_errors() {
        let missing = "coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 1\n";
        assert!(matches!(
            parse_coloring(missing),
            Err(Error::Parse { line: 4, .. })
        ));
        let dup = "coloring d=2 c=2 a=0 R=2\n0 1 0\n0 1 1\n1 2 1\n";
        assert!(matches!(
            parse_coloring(dup),
            Err(Error::Parse { line: 3, .. })
        ));
        let range = "coloring d=2 c=2 a=0 R=2\n0 1 0\n0 2 2\n1 2 1\n";
        assert!(matches!(
            parse_coloring(range),
            Err(Error::Parse { line: 3, .. })
        ));
        let order = "coloring d=2 c=2 a=0 R=2\n1 0 0\n0 2 0\n1 2 1\n";
        assert!(matches!(
            parse_coloring(order),
            Err(Error::Parse { line: 2, .. })
        ));
        let extra = "coloring d=1 c=1 a=0 R=0\n0 0\n0 0\n";
        assert!(matches!(
            parse_coloring(extra),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(parse_coloring("colouring d=2 c=2 a=0 R=2\n").is_err());
        assert!(parse_coloring("coloring c=2 d=2 a=0 R=2\n").is_err());
    }

    #[test]
    fn rule_coloring_roundtrip() {
        let src = Coloring::constant(2, 1, 0, 2, 0).unwrap();
        let lifted = lift::lift_bad_coloring(&src, 3).unwrap();
        let text = write_coloring(&lifted).unwrap();
        assert_eq!(
            text,
            "coloring-rule lift d=3 c=5 a=0 R=7 m=3\ncoloring d=2 c=1 a=0 R=2\n0 1 0\n0 2 0\n1 2 0\n"
        );
        let back = parse_coloring(&text).unwrap();
        assert_eq!(write_coloring(&back).unwrap(), text);
        assert_eq!(back, lifted);
    }

    #[test]
    fn sequence_text() {
        let s = TupleSequence::from_rows(2, [[1, 1], [0, 3]]).unwrap();
        let text = write_sequence(&s);
        assert_eq!(text, "sequence c=2 n=2\n1 1\n0 3\n");
        assert_eq!(parse_sequence(&text).unwrap(), s);

        let empty = TupleSequence::from_rows(0, [Vec::<u64>::new()]).unwrap();
        let text = write_sequence(&empty);
        assert_eq!(text, "sequence c=0 n=1\n\n");
        assert_eq!(parse_sequence(&text).unwrap(), empty);

        assert!(parse_sequence("sequence c=2 n=2\n1 1\n").is_err());
        assert!(parse_sequence("sequence c=2 n=1\n1 1 1\n").is_err());
        assert!(parse_sequence("sequence c=2 n=1\n1 x\n").is_err());
    }

    #[test]
    fn fspec_grammar() {
        assert_eq!(parse_fspec("id", None).unwrap(), FSpec::Id);
        assert_eq!(parse_fspec("const:3", None).unwrap(), FSpec::Const(3));
        assert_eq!(
            parse_fspec("affine:2,1", None).unwrap(),
            FSpec::Affine(2, 1)
        );
        assert!(parse_fspec("affine:2", None).is_err());
        assert!(parse_fspec("const:-1", None).is_err());
        assert!(parse_fspec("square", None).is_err());

        let dir = tempfile::tempdir().unwrap();
        std::fs::write(dir.path().join("t.txt"), "4\n0\n9\ndefault 2\n").unwrap();
        let f = parse_fspec("table:t.txt", Some(dir.path())).unwrap();
        assert_eq!(
            f,
            FSpec::Table {
                values: vec![4, 0, 9],
                default: 2
            }
        );
        assert!(parse_table_spec("1\n2\n").is_err());
        assert!(matches!(
            parse_fspec("table:nope.txt", Some(dir.path())),
            Err(Error::Io(_))
        ));
    }
}
