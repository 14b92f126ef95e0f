//! Plain-text algebra and event files.
//!
//! The grammar is documented in `docs/formats.md` at the repository root.
//! Writers are canonical: parsing a written file and writing it again gives
//! the same bytes.

use std::fmt::Write as _;

use rlse_core::{parse_rational, EventFamily, NumericalEvent, OrthoLattice, RingLikeAlgebra, StateSpace, Table};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is the file as a whole.
    pub line: usize,
    pub message: String,
}

fn err<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgebraFile {
    Rlse(RingLikeAlgebra),
    Oml(OrthoLattice),
}

impl AlgebraFile {
    pub fn kind(&self) -> &'static str {
        match self {
            AlgebraFile::Rlse(_) => "rlse",
            AlgebraFile::Oml(_) => "oml",
        }
    }

    pub fn size(&self) -> usize {
        match self {
            AlgebraFile::Rlse(a) => a.size(),
            AlgebraFile::Oml(l) => l.size(),
        }
    }
}

/// A content line: its 1-based number and its tokens.
type Line<'a> = (usize, Vec<&'a str>);

/// Non-blank lines with comments stripped, paired with 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = Line<'_>> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        (!tokens.is_empty()).then_some((k + 1, tokens))
    })
}

const SECTIONS: [&str; 5] = ["plus", "times", "meet", "join", "comp"];

#[derive(Default)]
struct Header {
    kind: Option<String>,
    size: Option<usize>,
    zero: Option<String>,
    one: Option<String>,
    names: Option<Vec<String>>,
}

struct Resolver<'a> {
    size: usize,
    names: Option<&'a [String]>,
}

impl Resolver<'_> {
    /// Decimal integers are indices; anything else is looked up by name.
    fn element(&self, line: usize, token: &str) -> Result<usize, ParseError> {
        if let Ok(i) = token.parse::<usize>() {
            if i >= self.size {
                return err(line, format!("index {i} is outside 0..{}", self.size));
            }
            return Ok(i);
        }
        match self.names.and_then(|n| n.iter().position(|x| x == token)) {
            Some(i) => Ok(i),
            None => err(line, format!("unknown element {token:?}")),
        }
    }

    fn row(&self, line: usize, tokens: &[&str]) -> Result<Vec<usize>, ParseError> {
        if tokens.len() != self.size {
            return err(line, format!("expected {} entries, found {}", self.size, tokens.len()));
        }
        tokens.iter().map(|t| self.element(line, t)).collect()
    }
}

fn single<'a>(line: usize, key: &str, tokens: &[&'a str]) -> Result<&'a str, ParseError> {
    match tokens {
        [_, v] => Ok(v),
        _ => err(line, format!("`{key}` takes exactly one value")),
    }
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut header = Header::default();
    let mut sections: Vec<(&str, usize, Vec<Line>)> = Vec::new();
    for (line, tokens) in content_lines(text) {
        let key = tokens[0];
        if SECTIONS.contains(&key) {
            if tokens.len() != 1 {
                return err(line, format!("section keyword `{key}` stands on its own line"));
            }
            if sections.iter().any(|(k, _, _)| *k == key) {
                return err(line, format!("section `{key}` appears twice"));
            }
            sections.push((key, line, Vec::new()));
            continue;
        }
        if let Some((_, _, rows)) = sections.last_mut() {
            rows.push((line, tokens));
            continue;
        }
        match key {
            "kind" => header.kind = Some(single(line, key, &tokens)?.to_string()),
            "size" => {
                let v = single(line, key, &tokens)?;
                match v.parse::<usize>() {
                    Ok(n) if n > 0 => header.size = Some(n),
                    _ => return err(line, format!("size must be a positive integer, found {v:?}")),
                }
            }
            "zero" => header.zero = Some(single(line, key, &tokens)?.to_string()),
            "one" => header.one = Some(single(line, key, &tokens)?.to_string()),
            "names" => header.names = Some(tokens[1..].iter().map(|s| s.to_string()).collect()),
            _ => return err(line, format!("unknown directive `{key}`")),
        }
    }
    let kind = header.kind.ok_or(ParseError { line: 0, message: "missing `kind`".into() })?;
    let size = header.size.ok_or(ParseError { line: 0, message: "missing `size`".into() })?;
    if let Some(names) = &header.names {
        if names.len() != size {
            return err(0, format!("expected {size} names, found {}", names.len()));
        }
    }
    let r = Resolver { size, names: header.names.as_deref() };
    let zero = r.element(0, header.zero.as_deref().unwrap_or("0"))?;
    let one = r.element(0, header.one.as_deref().unwrap_or(&(size - 1).to_string()))?;
    let wanted: &[&str] = match kind.as_str() {
        "rlse" => &["plus", "times"],
        "oml" => &["meet", "join", "comp"],
        other => return err(0, format!("unknown kind {other:?}, expected rlse or oml")),
    };
    let mut tables = Vec::new();
    let mut comp = None;
    for name in wanted {
        let Some((_, at, rows)) = sections.iter().find(|(k, _, _)| k == name) else {
            return err(0, format!("missing section `{name}`"));
        };
        let expected = if *name == "comp" { 1 } else { size };
        if rows.len() != expected {
            return err(*at, format!("section `{name}` needs {expected} rows, found {}", rows.len()));
        }
        let parsed = rows.iter().map(|(line, t)| r.row(*line, t)).collect::<Result<Vec<_>, _>>()?;
        if *name == "comp" {
            comp = parsed.into_iter().next();
        } else {
            tables.push(Table::from_rows(parsed).map_err(|e| ParseError { line: *at, message: e.to_string() })?);
        }
    }
    if let Some((k, at, _)) = sections.iter().find(|(k, _, _)| !wanted.contains(k)) {
        return err(*at, format!("section `{k}` does not belong in a {kind} file"));
    }
    let invalid = |e: rlse_core::Error| ParseError { line: 0, message: e.to_string() };
    let mut tables = tables.into_iter();
    let (first, second) = (tables.next().unwrap(), tables.next().unwrap());
    let file = match comp {
        None => {
            let alg = RingLikeAlgebra::new(first, second, zero, one).map_err(invalid)?;
            AlgebraFile::Rlse(match header.names {
                Some(n) => alg.with_names(n).map_err(invalid)?,
                None => alg,
            })
        }
        Some(comp) => {
            let lat = OrthoLattice::new(first, second, comp, zero, one).map_err(invalid)?;
            AlgebraFile::Oml(match header.names {
                Some(n) => lat.with_names(n).map_err(invalid)?,
                None => lat,
            })
        }
    };
    Ok(file)
}

fn write_header(out: &mut String, kind: &str, size: usize, zero: usize, one: usize, names: Option<&[String]>) {
    writeln!(out, "kind {kind}").unwrap();
    writeln!(out, "size {size}").unwrap();
    writeln!(out, "zero {zero}").unwrap();
    writeln!(out, "one {one}").unwrap();
    if let Some(names) = names {
        writeln!(out, "names {}", names.join(" ")).unwrap();
    }
}

fn write_rows<'a>(out: &mut String, section: &str, size: usize, rows: impl Iterator<Item = &'a [usize]>) {
    let width = (size - 1).to_string().len();
    writeln!(out, "{section}").unwrap();
    for row in rows {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>width$}")).collect();
        writeln!(out, "{}", cells.join(" ")).unwrap();
    }
}

pub fn write_rlse(alg: &RingLikeAlgebra) -> String {
    let mut out = String::new();
    write_header(&mut out, "rlse", alg.size(), alg.zero(), alg.one(), alg.names());
    write_rows(&mut out, "plus", alg.size(), alg.plus().rows());
    write_rows(&mut out, "times", alg.size(), alg.times().rows());
    out
}

pub fn write_oml(lat: &OrthoLattice) -> String {
    let mut out = String::new();
    write_header(&mut out, "oml", lat.size(), lat.zero(), lat.one(), lat.names());
    write_rows(&mut out, "meet", lat.size(), lat.meet_table().rows());
    write_rows(&mut out, "join", lat.size(), lat.join_table().rows());
    write_rows(&mut out, "comp", lat.size(), std::iter::once(lat.comp_table()));
    out
}

pub fn write_algebra(file: &AlgebraFile) -> String {
    match file {
        AlgebraFile::Rlse(a) => write_rlse(a),
        AlgebraFile::Oml(l) => write_oml(l),
    }
}

pub fn parse_events(text: &str) -> Result<EventFamily, ParseError> {
    let mut lines = content_lines(text);
    let Some((line, tokens)) = lines.next() else {
        return err(0, "empty event file");
    };
    if tokens[0] != "states" {
        return err(line, "the first line must be `states <label> ...`");
    }
    let labels: Vec<String> = tokens[1..].iter().map(|s| s.to_string()).collect();
    let n = labels.len();
    let space = StateSpace::new(labels).map_err(|e| ParseError { line, message: e.to_string() })?;
    let mut events = Vec::new();
    for (line, tokens) in lines {
        if tokens.len() != n + 1 {
            return err(line, format!("expected a name and {n} values, found {} tokens", tokens.len()));
        }
        let values = tokens[1..]
            .iter()
            .map(|t| parse_rational(t).ok_or(ParseError { line, message: format!("not a rational: {t:?}") }))
            .collect::<Result<Vec<_>, _>>()?;
        let event = NumericalEvent::new(values).map_err(|e| ParseError { line, message: e.to_string() })?;
        events.push((tokens[0].to_string(), event));
    }
    if events.is_empty() {
        return err(0, "no events");
    }
    EventFamily::named(space, events).map_err(|e| ParseError { line: 0, message: e.to_string() })
}

pub fn write_events(fam: &EventFamily) -> String {
    let mut out = format!("states {}\n", fam.space().labels().join(" "));
    let width = fam.names().iter().map(String::len).max().unwrap_or(0);
    for (name, e) in fam.names().iter().zip(fam.events()) {
        let values: Vec<String> = e.values().iter().map(ToString::to_string).collect();
        writeln!(out, "{name:<width$} {}", values.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use rlse_core::catalog::{concrete_mo2_events, hexagon_lattice, mo_lattice, specific_rlse_mo};

    #[test]
    fn algebra_roundtrip_is_byte_identical() {
        let texts = [
            write_rlse(&specific_rlse_mo(2).unwrap()),
            write_oml(&mo_lattice(3).unwrap()),
            write_oml(&hexagon_lattice().unwrap()),
        ];
        for text in texts {
            let parsed = parse_algebra(&text).unwrap();
            assert_eq!(write_algebra(&parsed), text);
        }
    }

    #[test]
    fn events_roundtrip_is_byte_identical() {
        let text = write_events(&concrete_mo2_events().unwrap());
        assert_eq!(write_events(&parse_events(&text).unwrap()), text);
        assert!(text.starts_with("states 1 2 3 4\n0  0 0 0 0\na  1 1 0 0\n"));
    }

    #[test]
    fn names_may_appear_in_tables() {
        let text = "kind rlse\nsize 2  # Z2\nnames o e\nzero o\none e\nplus\no e\ne o\ntimes\n0 0\n0 1\n";
        let AlgebraFile::Rlse(alg) = parse_algebra(text).unwrap() else { panic!() };
        assert_eq!(alg.add(1, 1), 0);
        assert_eq!(alg.one(), 1);
    }

    #[test]
    fn errors_carry_line_numbers() {
        let bad_row = "kind rlse\nsize 2\nplus\n0 1\n1\ntimes\n0 0\n0 1\n";
        assert_eq!(parse_algebra(bad_row).unwrap_err().line, 5);
        let out_of_range = "kind rlse\nsize 2\nplus\n0 1\n1 2\ntimes\n0 0\n0 1\n";
        assert_eq!(parse_algebra(out_of_range).unwrap_err().line, 5);
        assert!(parse_algebra("kind group\nsize 1\n").is_err());
        assert!(parse_algebra("kind rlse\nsize 2\nplus\n0 1\n1 0\n").unwrap_err().message.contains("times"));
        let events = "states 1 2\np 1/2 3/2\n";
        assert_eq!(parse_events(events).unwrap_err().line, 2);
        assert_eq!(parse_events("states 1\np 0.5\n").unwrap_err().line, 2);
    }
}
