use std::fmt::Write;

use crate::document::{FaceKind, GraphDocument};

/// Undirected DOT graph; faces are listed as comments.
pub fn render(doc: &GraphDocument) -> String {
    let mut out = String::new();
    match &doc.signature {
        Some(sig) => writeln!(out, "// trihex {sig}").unwrap(),
        None => writeln!(out, "// trihex").unwrap(),
    }
    writeln!(
        out,
        "// {} vertices, {} edges, {} faces",
        doc.vertices.len(),
        doc.edges.len(),
        doc.faces.len()
    )
    .unwrap();
    for (i, face) in doc.faces.iter().enumerate() {
        let kind = match face.kind {
            FaceKind::Triangle => "triangle",
            FaceKind::Hexagon => "hexagon",
            FaceKind::Other => "face",
        };
        let cycle: Vec<String> = face.cycle.iter().map(usize::to_string).collect();
        writeln!(out, "// face {i} {kind}: {}", cycle.join(" ")).unwrap();
    }
    out.push_str("graph trihex {\n");
    for v in &doc.vertices {
        writeln!(out, "  {v};").unwrap();
    }
    for [a, b] in &doc.edges {
        writeln!(out, "  {a} -- {b};").unwrap();
    }
    out.push_str("}\n");
    out
}
