//! Line-oriented quiver description format:
//!
//! ```text
//! # Kronecker quiver
//! quiver K2
//! vertex 1 2
//! arrow a 2 1
//! arrow b 2 1
//! ```
//!
//! `vertex` lines may repeat; arrows name their source then target.

use super::{Quiver, QuiverError};

pub fn parse_quiver(text: &str) -> Result<Quiver, QuiverError> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        last_line = line;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut words = content.split_whitespace();
        let keyword = words.next().expect("non-empty line has a word");
        let rest: Vec<&str> = words.collect();
        let err = |message: String| QuiverError::Syntax { line, message };
        match keyword {
            "quiver" => {
                if name.is_some() {
                    return Err(err("second `quiver` header".into()));
                }
                match rest.as_slice() {
                    [n] => name = Some(n.to_string()),
                    _ => return Err(err("expected `quiver <name>`".into())),
                }
            }
            "vertex" => {
                if name.is_none() {
                    return Err(err("`vertex` before `quiver` header".into()));
                }
                if rest.is_empty() {
                    return Err(err("expected `vertex <id>+`".into()));
                }
                vertices.extend(rest.iter().map(|s| s.to_string()));
            }
            "arrow" => {
                if name.is_none() {
                    return Err(err("`arrow` before `quiver` header".into()));
                }
                match rest.as_slice() {
                    [label, s, t] => arrows.push((label.to_string(), s.to_string(), t.to_string())),
                    _ => return Err(err("expected `arrow <label> <source> <target>`".into())),
                }
            }
            other => return Err(err(format!("unknown keyword `{other}`"))),
        }
    }

    let name = name.ok_or(QuiverError::Syntax { line: last_line.max(1), message: "missing `quiver` header".into() })?;
    let arrow_refs: Vec<(&str, &str, &str)> =
        arrows.iter().map(|(l, s, t)| (l.as_str(), s.as_str(), t.as_str())).collect();
    let vertex_refs: Vec<&str> = vertices.iter().map(String::as_str).collect();
    Quiver::new(name, &vertex_refs, &arrow_refs)
}

/// Renders a quiver back into the line format.
pub fn to_dsl(q: &Quiver) -> String {
    let mut out = format!("quiver {}\nvertex {}\n", q.name(), q.vertices().join(" "));
    for a in q.arrows() {
        out.push_str(&format!("arrow {} {} {}\n", a.label, q.vertex_id(a.source), q.vertex_id(a.target)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_kronecker() {
        let q = parse_quiver("quiver K2\nvertex 1 2\narrow a 2 1\narrow b 2 1\n").unwrap();
        assert_eq!(q.name(), "K2");
        assert_eq!(q.n(), 2);
        assert_eq!(q.arrows().len(), 2);
        assert!(q.arrows().iter().all(|a| a.source == 1 && a.target == 0));
    }

    #[test]
    fn parses_w4_with_comments() {
        let src = "# the four vertex wild quiver\nquiver W4\nvertex 1 2 3 4\n\narrow a 2 1 # first\narrow b 2 1\narrow c 3 2\narrow d 3 4\n";
        let q = parse_quiver(src).unwrap();
        assert_eq!(q.n(), 4);
        assert_eq!(q, super::super::presets::w4());
    }

    #[test]
    fn reports_line_numbers() {
        let err = parse_quiver("quiver X\nvertex 1 2\narrow a 1\n").unwrap_err();
        assert_eq!(err, QuiverError::Syntax { line: 3, message: "expected `arrow <label> <source> <target>`".into() });
        let err = parse_quiver("vertex 1\n").unwrap_err();
        assert!(matches!(err, QuiverError::Syntax { line: 1, .. }));
        let err = parse_quiver("quiver X\nvertex 1\nedge a 1 1\n").unwrap_err();
        assert!(matches!(err, QuiverError::Syntax { line: 3, .. }));
    }

    #[test]
    fn rejects_cycle() {
        let err = parse_quiver("quiver C\nvertex 1 2\narrow a 1 2\narrow b 2 1\n").unwrap_err();
        assert!(matches!(err, QuiverError::Cycle(_)));
    }

    #[test]
    fn roundtrips_through_text() {
        let q = super::super::presets::dynkin_e(6);
        assert_eq!(parse_quiver(&to_dsl(&q)).unwrap(), q);
    }
}
