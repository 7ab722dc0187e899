//! Cell diagrams: `Sq1` as straight lines, `Sq2` as curves, dashed when the
//! operation hits τ times a generator.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use a1pic::A1Module;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Ascii,
    Svg,
}

struct Edge<'a> {
    op: &'static str,
    source: &'a str,
    target: &'a str,
    valuation: u32,
}

fn edges(m: &A1Module) -> Vec<Edge<'_>> {
    let b = m.basis();
    let mut out = Vec::new();
    for (op, f) in [("sq1", m.sq1()), ("sq2", m.sq2())] {
        for (i, j) in f.entries() {
            out.push(Edge {
                op,
                source: b.id(i),
                target: b.id(j),
                valuation: f.valuation(i, j),
            });
        }
    }
    out
}

pub fn render(m: &A1Module, format: Format) -> String {
    match format {
        Format::Ascii => ascii(m),
        Format::Svg => svg(m),
    }
}

fn ascii(m: &A1Module) -> String {
    let b = m.basis();
    let mut rows: BTreeMap<i32, Vec<String>> = BTreeMap::new();
    for g in b.generators() {
        rows.entry(g.degree.s)
            .or_default()
            .push(format!("{}{}", g.id, g.degree));
    }
    let mut out = String::new();
    writeln!(out, "module {} ({} cells)", m.name(), b.len()).unwrap();
    for (s, cells) in rows.iter().rev() {
        writeln!(out, "  s={s:<3} {}", cells.join("  ")).unwrap();
    }
    writeln!(out).unwrap();
    for g in b.generators() {
        writeln!(out, "node {} {}", g.id, g.degree).unwrap();
    }
    for e in edges(m) {
        let style = if e.valuation > 0 { "dashed" } else { "solid" };
        let tau = if e.valuation > 0 {
            format!("  tau^{}", e.valuation)
        } else {
            String::new()
        };
        writeln!(
            out,
            "edge {} {style} {} -> {}{tau}",
            e.op, e.source, e.target
        )
        .unwrap();
    }
    out
}

fn svg(m: &A1Module) -> String {
    const STEP: f64 = 60.0;
    const MARGIN: f64 = 40.0;
    let b = m.basis();
    let (smin, smax) = b.generators().iter().fold((0, 0), |(lo, hi), g| {
        (lo.min(g.degree.s), hi.max(g.degree.s))
    });
    let mut column: BTreeMap<i32, usize> = BTreeMap::new();
    let positions: Vec<(f64, f64)> = b
        .generators()
        .iter()
        .map(|g| {
            let k = column.entry(g.degree.s).or_insert(0);
            let x = MARGIN + STEP * *k as f64;
            *k += 1;
            let y = MARGIN + STEP * (smax - g.degree.s) as f64;
            (x, y)
        })
        .collect();
    let width = MARGIN * 2.0 + STEP * column.values().copied().max().unwrap_or(1) as f64;
    let height = MARGIN * 2.0 + STEP * (smax - smin) as f64;

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" viewBox="0 0 {width} {height}">"#
    )
    .unwrap();
    writeln!(out, "  <title>{}</title>", m.name()).unwrap();
    for (op, f) in [("sq1", m.sq1()), ("sq2", m.sq2())] {
        for (i, j) in f.entries() {
            let (x1, y1) = positions[i];
            let (x2, y2) = positions[j];
            let dash = if f.valuation(i, j) > 0 {
                r#" stroke-dasharray="4 3""#
            } else {
                ""
            };
            if op == "sq1" {
                writeln!(
                    out,
                    r#"  <line class="sq1" x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" stroke="black"{dash}/>"#
                )
                .unwrap();
            } else {
                let (cx, cy) = ((x1 + x2) / 2.0 + 25.0, (y1 + y2) / 2.0);
                writeln!(
                    out,
                    r#"  <path class="sq2" d="M {x1} {y1} Q {cx} {cy} {x2} {y2}" fill="none" stroke="black"{dash}/>"#
                )
                .unwrap();
            }
        }
    }
    for (g, (x, y)) in b.generators().iter().zip(&positions) {
        writeln!(out, r#"  <circle cx="{x}" cy="{y}" r="3.5" fill="black"/>"#).unwrap();
        writeln!(
            out,
            r#"  <text x="{}" y="{}" font-size="10">{}</text>"#,
            x - 18.0,
            y + 4.0,
            g.id
        )
        .unwrap();
    }
    writeln!(out, "</svg>").unwrap();
    out
}
