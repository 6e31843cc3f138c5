use crate::front::diagram::{Event, FrontDiagram, Role};
use crate::front::parse::to_dsl;
use crate::front::trace::Trace;
use crate::Result;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

pub fn render(front: &FrontDiagram, format: Format) -> Result<String> {
    let trace = front.trace()?;
    Ok(match format {
        Format::Ascii => ascii(front, &trace),
        Format::Svg => svg(front, &trace),
    })
}

/// ASCII picture preceded by the DSL source, so the output parses back
/// to the same diagram (picture lines are comments).
fn ascii(front: &FrontDiagram, trace: &Trace) -> String {
    let rows = if trace.max_strands() == 0 { 1 } else { 2 * trace.max_strands() - 1 };
    let cols = 4 + 6 * front.events.len();
    let mut grid = vec![vec![b' '; cols]; rows];
    let row = |slot: usize| 2 * (slot - 1);

    let dash = |r: usize, c0: usize, c1: usize, grid: &mut Vec<Vec<u8>>| {
        for c in c0..c1 {
            if grid[r][c] == b' ' {
                grid[r][c] = b'-';
            }
        }
    };

    for (k, ev) in front.events.iter().enumerate() {
        let pre = &trace.slices[k];
        let c = 2 + 6 * k; // event occupies cols c..c+4, gap c+4..c+6
        match *ev {
            Event::Birth(i) => {
                let (ru, m, rl) = (row(i), row(i) + 1, row(i) + 2);
                grid[m][c + 1] = b'(';
                grid[ru][c + 2] = b'/';
                grid[rl][c + 2] = b'\\';
                dash(ru, c + 3, c + 6, &mut grid);
                dash(rl, c + 3, c + 6, &mut grid);
                for (s0, _) in pre.iter().enumerate() {
                    let s = s0 + 1;
                    if s < i {
                        dash(row(s), c, c + 6, &mut grid);
                    } else {
                        // shifts down two slots across the event
                        let r = row(s);
                        for d in 0..4 {
                            grid[r + d][c + d] = b'\\';
                        }
                        dash(r + 4, c + 4, c + 6, &mut grid);
                    }
                }
            }
            Event::Death(i) => {
                let (ru, m, rl) = (row(i), row(i) + 1, row(i) + 2);
                dash(ru, c, c + 1, &mut grid);
                dash(rl, c, c + 1, &mut grid);
                grid[ru][c + 1] = b'\\';
                grid[rl][c + 1] = b'/';
                grid[m][c + 2] = b')';
                for (s0, _) in pre.iter().enumerate() {
                    let s = s0 + 1;
                    if s < i {
                        dash(row(s), c, c + 6, &mut grid);
                    } else if s > i + 1 {
                        let r = row(s);
                        dash(r, c, c + 1, &mut grid);
                        for d in 0..4 {
                            grid[r - d][c + d] = b'/';
                        }
                        dash(r - 4, c + 4, c + 6, &mut grid);
                    }
                }
            }
            Event::Cross(i) => {
                let (ru, m, rl) = (row(i), row(i) + 1, row(i) + 2);
                dash(ru, c, c + 1, &mut grid);
                dash(rl, c, c + 1, &mut grid);
                grid[ru][c + 1] = b'\\';
                grid[m][c + 2] = b'\\'; // over-strand (descending) drawn solid
                grid[rl][c + 3] = b'\\';
                grid[rl][c + 1] = b'/';
                grid[ru][c + 3] = b'/';
                dash(ru, c + 4, c + 6, &mut grid);
                dash(rl, c + 4, c + 6, &mut grid);
                for (s0, _) in pre.iter().enumerate() {
                    let s = s0 + 1;
                    if s != i && s != i + 1 {
                        dash(row(s), c, c + 6, &mut grid);
                    }
                }
            }
        }
    }

    let mut out = to_dsl(front);
    for r in grid {
        let line = String::from_utf8(r).unwrap();
        let line = line.trim_end();
        out.push_str("# ");
        out.push_str(line);
        out.push('\n');
    }
    out
}

/// Plain SVG 1.1, deterministic integer coordinates. The over-strand is
/// drawn last with a casing gap on the under-strand.
fn svg(front: &FrontDiagram, trace: &Trace) -> String {
    let x_of = |k: usize| 20 + 40 * k as i64; // slice k
    let y_of = |slot: usize| 20 + 30 * slot as i64;
    let width = x_of(front.events.len()) + 20;
    let height = y_of(trace.max_strands() + 1);

    // polyline points per arc: (x, y) at each slice boundary it spans
    let mut paths: Vec<Vec<(i64, i64)>> = vec![Vec::new(); trace.arcs.len()];
    for (k, slice) in trace.slices.iter().enumerate() {
        for (s0, &a) in slice.iter().enumerate() {
            paths[a].push((x_of(k), y_of(s0 + 1)));
        }
    }
    // cusp apex points
    for (k, ev) in front.events.iter().enumerate() {
        let apex_y = y_of(ev.slot()) + 15;
        let apex_x = x_of(k) + 20;
        match trace.event_trace[k] {
            crate::front::trace::EventTrace::Birth { upper, lower } => {
                paths[upper].insert(0, (apex_x - 10, apex_y));
                paths[lower].insert(0, (apex_x - 10, apex_y));
            }
            crate::front::trace::EventTrace::Death { upper, lower } => {
                paths[upper].push((apex_x + 10, apex_y));
                paths[lower].push((apex_x + 10, apex_y));
            }
            crate::front::trace::EventTrace::Cross { .. } => {}
        }
    }

    let mut out = String::new();
    out.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
    ));
    out.push_str(&format!("<!-- {} -->\n", front.word()));
    for (a, pts) in paths.iter().enumerate() {
        if pts.is_empty() {
            continue;
        }
        let color = match front.role(trace.arcs[a].component) {
            Role::Red => "red",
            Role::Black => "black",
        };
        let pt_str: Vec<String> = pts.iter().map(|(x, y)| format!("{x},{y}")).collect();
        out.push_str(&format!(
            "<polyline fill=\"none\" stroke=\"{color}\" stroke-width=\"2\" points=\"{}\"/>\n",
            pt_str.join(" ")
        ));
    }
    // crossing decorations: blank the under-strand, restroke the over
    for (k, ev) in front.events.iter().enumerate() {
        if let Event::Cross(i) = *ev {
            let (x0, x1) = (x_of(k), x_of(k + 1));
            let (yu, yl) = (y_of(i), y_of(i + 1));
            let (cx, cy) = ((x0 + x1) / 2, (yu + yl) / 2);
            out.push_str(&format!(
                "<circle cx=\"{cx}\" cy=\"{cy}\" r=\"6\" fill=\"white\" stroke=\"none\"/>\n"
            ));
            if let crate::front::trace::EventTrace::Cross { over, .. } = trace.event_trace[k] {
                let color = match front.role(trace.arcs[over].component) {
                    Role::Red => "red",
                    Role::Black => "black",
                };
                out.push_str(&format!(
                    "<line x1=\"{x0}\" y1=\"{yu}\" x2=\"{x1}\" y2=\"{yl}\" stroke=\"{color}\" stroke-width=\"2\"/>\n"
                ));
            }
        }
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::front::parse::parse_front;

    #[test]
    fn ascii_round_trips_through_parse() {
        for word in ["b1 d1", "b1 d1 b1 d1", "b1 b1 x2 x2 x2 d1 d1", "b1 b2 d2 d1"] {
            let f = parse_front(word).unwrap();
            let pic = render(&f, Format::Ascii).unwrap();
            assert_eq!(parse_front(&pic).unwrap(), f, "round trip failed for {word}");
        }
    }

    #[test]
    fn svg_is_deterministic_and_structured() {
        let f = parse_front("b1 b1 x2 x2 x2 d1 d1").unwrap();
        let a = render(&f, Format::Svg).unwrap();
        let b = render(&f, Format::Svg).unwrap();
        assert_eq!(a, b);
        assert!(a.starts_with("<svg"));
        assert!(a.contains("polyline"));
        assert!(a.trim_end().ends_with("</svg>"));
    }
}
