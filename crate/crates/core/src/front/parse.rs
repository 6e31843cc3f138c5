use std::collections::BTreeSet;

use crate::front::diagram::{Event, FrontDiagram};
use crate::{Error, Result};

/// Parse front-DSL text:
///
/// ```text
/// front v1
/// events: b1 d1        # tokens b<i>, d<i>, x<i>
/// orient: c1=+ c2=-    # optional, components in birth order
/// roles: c2=red        # optional
/// ```
///
/// The `front v1` header is optional, as is the `events:` prefix when
/// the whole input is a bare event word. `#` starts a comment.
pub fn parse_front(text: &str) -> Result<FrontDiagram> {
    let mut events: Option<Vec<Event>> = None;
    let mut flipped = BTreeSet::new();
    let mut red = BTreeSet::new();
    let mut seen_header = false;

    for (ln, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(p) => &raw[..p],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let lineno = ln + 1;
        let trimmed = line.trim_start();
        let indent = line.len() - trimmed.len();
        if !seen_header && trimmed.trim() == "front v1" {
            seen_header = true;
            continue;
        }
        if let Some(rest) = trimmed.strip_prefix("events:") {
            if events.is_some() {
                return Err(syntax(lineno, indent + 1, "duplicate events line"));
            }
            events = Some(parse_events(rest, lineno, indent + "events:".len() + 1)?);
        } else if let Some(rest) = trimmed.strip_prefix("orient:") {
            for (c, v) in parse_assignments(rest, lineno, indent + "orient:".len() + 1)? {
                match v.as_str() {
                    "+" => {}
                    "-" => {
                        flipped.insert(c);
                    }
                    _ => return Err(syntax(lineno, 1, &format!("orient value must be + or -, got '{v}'"))),
                }
            }
        } else if let Some(rest) = trimmed.strip_prefix("roles:") {
            for (c, v) in parse_assignments(rest, lineno, indent + "roles:".len() + 1)? {
                match v.as_str() {
                    "black" => {}
                    "red" => {
                        red.insert(c);
                    }
                    _ => return Err(syntax(lineno, 1, &format!("role must be black or red, got '{v}'"))),
                }
            }
        } else if events.is_none() && !trimmed.contains(':') {
            // bare event word
            events = Some(parse_events(trimmed, lineno, indent + 1)?);
        } else {
            return Err(syntax(lineno, indent + 1, &format!("unrecognized line '{}'", trimmed.trim())));
        }
    }

    let events = events.ok_or_else(|| syntax(1, 1, "missing events"))?;
    FrontDiagram::from_events(events)?.with_orientation(flipped, red)
}

fn syntax(line: usize, col: usize, msg: &str) -> Error {
    Error::Parse { line, col, msg: msg.to_string() }
}

fn parse_events(s: &str, line: usize, col0: usize) -> Result<Vec<Event>> {
    let mut out = Vec::new();
    for (off, tok) in tokens(s) {
        let col = col0 + off;
        let mut chars = tok.chars();
        let kind = chars.next().unwrap();
        let num: String = chars.collect();
        let slot: usize = num
            .parse()
            .map_err(|_| syntax(line, col, &format!("bad event token '{tok}'")))?;
        if slot == 0 {
            return Err(syntax(line, col, "slot indices are 1-based"));
        }
        out.push(match kind {
            'b' => Event::Birth(slot),
            'd' => Event::Death(slot),
            'x' => Event::Cross(slot),
            _ => return Err(syntax(line, col, &format!("unknown event kind '{kind}'"))),
        });
    }
    Ok(out)
}

fn parse_assignments(s: &str, line: usize, col0: usize) -> Result<Vec<(usize, String)>> {
    let mut out = Vec::new();
    for (off, tok) in tokens(s) {
        let col = col0 + off;
        let tok = tok.trim_end_matches(',');
        if tok.is_empty() {
            continue;
        }
        let (lhs, rhs) = tok
            .split_once('=')
            .ok_or_else(|| syntax(line, col, &format!("expected c<k>=<value>, got '{tok}'")))?;
        let comp: usize = lhs
            .strip_prefix('c')
            .and_then(|n| n.parse().ok())
            .ok_or_else(|| syntax(line, col, &format!("bad component id '{lhs}'")))?;
        out.push((comp, rhs.to_string()));
    }
    Ok(out)
}

fn tokens(s: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, ch) in s.char_indices() {
        if ch.is_whitespace() {
            if let Some(st) = start.take() {
                out.push((st, &s[st..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(st) = start {
        out.push((st, &s[st..]));
    }
    out
}

/// Canonical DSL serialization; `parse_front` inverts it.
pub fn to_dsl(front: &FrontDiagram) -> String {
    let mut out = String::from("front v1\n");
    out.push_str(&format!("events: {}\n", front.word()));
    if !front.flipped.is_empty() {
        let entries: Vec<String> = front.flipped.iter().map(|c| format!("c{c}=-")).collect();
        out.push_str(&format!("orient: {}\n", entries.join(" ")));
    }
    if !front.red.is_empty() {
        let entries: Vec<String> = front.red.iter().map(|c| format!("c{c}=red")).collect();
        out.push_str(&format!("roles: {}\n", entries.join(" ")));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_words() {
        let u = parse_front("events: b1 d1").unwrap();
        assert_eq!(u.events, vec![Event::Birth(1), Event::Death(1)]);
        assert_eq!(u.trace().unwrap().component_count, 1);

        let two = parse_front("b1 d1 b1 d1").unwrap();
        assert_eq!(two.trace().unwrap().component_count, 2);
    }

    #[test]
    fn semantic_error_carries_event_index() {
        match parse_front("events: b1 d2") {
            Err(Error::Semantic { index, .. }) => assert_eq!(index, 2),
            other => panic!("expected semantic error, got {other:?}"),
        }
    }

    #[test]
    fn unclosed_front_rejected() {
        assert!(parse_front("events: b1").is_err());
    }

    #[test]
    fn full_document_round_trip() {
        let text = "front v1\nevents: b1 d1 b1 d1\norient: c2=-\nroles: c2=red\n";
        let f = parse_front(text).unwrap();
        assert!(f.flipped.contains(&2));
        assert!(f.red.contains(&2));
        assert_eq!(to_dsl(&f), text);
        assert_eq!(parse_front(&to_dsl(&f)).unwrap(), f);
    }

    #[test]
    fn syntax_error_position() {
        match parse_front("events: b1 q1 d1") {
            Err(Error::Parse { line, col, .. }) => {
                assert_eq!(line, 1);
                assert_eq!(col, 12);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }
}
