use std::fmt::Write;

use trihex::hexlattice::{HexCoord, RotocenterLattice};
use trihex::CombinatorialMap;

const TOLERANCE: f64 = 1e-9;
const MAX_SWEEPS: usize = 200_000;

/// Face drawn as the outer boundary: the first hexagon, else the first face.
pub fn outer_face(m: &CombinatorialMap) -> usize {
    (0..m.num_faces())
        .find(|&f| m.face_len(f) == 6)
        .unwrap_or(0)
}

/// Barycentric layout with the outer face pinned to a regular polygon of
/// radius 1. Interior vertices are relaxed by Gauss-Seidel sweeps until no
/// vertex moves more than the tolerance.
pub fn tutte_layout(m: &CombinatorialMap) -> Vec<(f64, f64)> {
    let n = m.num_vertices();
    let mut pos = vec![(0.0, 0.0); n];
    let mut pinned = vec![false; n];
    let outer = m.face_vertices(outer_face(m));
    let k = outer.len() as f64;
    for (i, &v) in outer.iter().enumerate() {
        // Walk the outer face clockwise on screen so the interior lies inside.
        let angle = std::f64::consts::FRAC_PI_2 - 2.0 * std::f64::consts::PI * i as f64 / k;
        pos[v] = (angle.cos(), -angle.sin());
        pinned[v] = true;
    }
    let neighbors: Vec<Vec<usize>> = (0..n).map(|v| m.neighbors(v)).collect();
    for _ in 0..MAX_SWEEPS {
        let mut moved: f64 = 0.0;
        for v in (0..n).filter(|&v| !pinned[v]) {
            let d = neighbors[v].len() as f64;
            let (sx, sy) = neighbors[v]
                .iter()
                .fold((0.0, 0.0), |(x, y), &u| (x + pos[u].0, y + pos[u].1));
            let next = (sx / d, sy / d);
            moved = moved.max((next.0 - pos[v].0).abs().max((next.1 - pos[v].1).abs()));
            pos[v] = next;
        }
        if moved < TOLERANCE {
            break;
        }
    }
    pos
}

fn fill_for(len: usize) -> &'static str {
    match len {
        3 => "#f4a259",
        6 => "#e8eef2",
        _ => "#cccccc",
    }
}

/// Planar drawing of a map.
pub fn render_map(m: &CombinatorialMap, title: &str) -> String {
    let pos = tutte_layout(m);
    let size = 800.0;
    let scale = size * 0.45;
    let at = |v: usize| (size / 2.0 + scale * pos[v].0, size / 2.0 + scale * pos[v].1);
    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {size} {size}" width="{size}" height="{size}">"#
    )
    .unwrap();
    writeln!(out, "<title>{title}</title>").unwrap();
    let outer = outer_face(m);
    for f in (0..m.num_faces()).filter(|&f| f != outer) {
        let points: Vec<String> = m
            .face_vertices(f)
            .into_iter()
            .map(|v| {
                let (x, y) = at(v);
                format!("{x:.3},{y:.3}")
            })
            .collect();
        writeln!(
            out,
            r#"<polygon points="{}" fill="{}" stroke="none"/>"#,
            points.join(" "),
            fill_for(m.face_len(f))
        )
        .unwrap();
    }
    for (a, b) in m.edges() {
        let ((x1, y1), (x2, y2)) = (at(a), at(b));
        writeln!(
            out,
            r##"<line x1="{x1:.3}" y1="{y1:.3}" x2="{x2:.3}" y2="{y2:.3}" stroke="#222" stroke-width="1.5"/>"##
        )
        .unwrap();
    }
    for v in 0..m.num_vertices() {
        let (x, y) = at(v);
        writeln!(
            out,
            r##"<circle cx="{x:.3}" cy="{y:.3}" r="3" fill="#222"/>"##
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}

const ROOT3: f64 = 1.732_050_807_568_877_2;

/// Screen position of a hexagon center; hexagons have unit circumradius.
fn center(h: HexCoord) -> (f64, f64) {
    (
        1.5 * h.q as f64,
        ROOT3 * h.r as f64 - ROOT3 / 2.0 * h.q as f64,
    )
}

/// Window of hexagonal tiling with the half-turn centers marked and one
/// fundamental domain shaded.
pub fn render_tiling(lattice: &RotocenterLattice, columns: u32, rows: u32) -> String {
    let cells: Vec<HexCoord> = (0..columns as i64)
        .flat_map(|q| (0..rows as i64).map(move |row| HexCoord::new(q, row + q.div_euclid(2))))
        .collect();
    let pad = 1.5;
    let width = 1.5 * columns as f64 + 2.0 * pad;
    let height = ROOT3 * (rows as f64 + 0.5) + 2.0 * pad;
    let unit = 24.0;
    let to_screen = |(x, y): (f64, f64)| ((x + pad) * unit, (y + pad) * unit);

    let mut out = String::new();
    writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {:.1} {:.1}" width="{:.1}" height="{:.1}">"#,
        width * unit,
        height * unit,
        width * unit,
        height * unit
    )
    .unwrap();
    writeln!(
        out,
        "<title>tiling for {} ({lattice})</title>",
        lattice.source()
    )
    .unwrap();

    for &h in &cells {
        let (cx, cy) = center(h);
        let corners: Vec<String> = (0..6)
            .map(|k| {
                let a = std::f64::consts::PI / 3.0 * k as f64;
                let (x, y) = to_screen((cx + a.cos(), cy + a.sin()));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        let fill = if lattice.is_rotocenter(h) {
            "#f4a259"
        } else {
            "#ffffff"
        };
        writeln!(
            out,
            r##"<polygon points="{}" fill="{fill}" stroke="#888" stroke-width="1"/>"##,
            corners.join(" ")
        )
        .unwrap();
    }

    // Fundamental domain: the parallelograms on u, w and on u, w shifted by w,
    // anchored at the rotocenter that puts it nearest the middle of the window.
    let (u, w) = (lattice.u(), lattice.w());
    let (mid_x, mid_y) = (width / 2.0 - pad, height / 2.0 - pad);
    let anchor = cells
        .iter()
        .copied()
        .filter(|&h| lattice.is_rotocenter(h))
        .min_by(|&a, &b| {
            let off = |o: HexCoord| {
                let (x1, y1) = center(o + 2 * w + u);
                let (x0, y0) = center(o);
                let (cx, cy) = ((x0 + x1) / 2.0, (y0 + y1) / 2.0);
                (cx - mid_x).powi(2) + (cy - mid_y).powi(2)
            };
            off(a).total_cmp(&off(b)).then(a.cmp(&b))
        });
    if let Some(o) = anchor {
        let corners = [o, o + 2 * w, o + 2 * w + u, o + u];
        let points: Vec<String> = corners
            .iter()
            .map(|&h| {
                let (x, y) = to_screen(center(h));
                format!("{x:.2},{y:.2}")
            })
            .collect();
        writeln!(
            out,
            r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#1d4f91" stroke-width="2"/>"##,
            points.join(" ")
        )
        .unwrap();
        let ((x1, y1), (x2, y2)) = (to_screen(center(o + w)), to_screen(center(o + w + u)));
        writeln!(
            out,
            r##"<line x1="{x1:.2}" y1="{y1:.2}" x2="{x2:.2}" y2="{y2:.2}" stroke="#1d4f91" stroke-width="1" stroke-dasharray="4 3"/>"##
        )
        .unwrap();
    }

    for &h in cells.iter().filter(|&&h| lattice.is_rotocenter(h)) {
        let (x, y) = to_screen(center(h));
        writeln!(
            out,
            r##"<circle cx="{x:.2}" cy="{y:.2}" r="4" fill="#b03a2e"/>"##
        )
        .unwrap();
    }
    out.push_str("</svg>\n");
    out
}
