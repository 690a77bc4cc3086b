use std::process::{Command, Output};

use petgraph::algo::is_isomorphic;
use petgraph::graph::UnGraph;
use trihex::{build_by_quotient, build_by_spines, Signature};
use trihex_cli::GraphDocument;

fn trihex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trihex"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = trihex(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn exit_code(args: &[&str]) -> i32 {
    trihex(args).status.code().unwrap()
}

#[test]
fn equiv_lists_the_class() {
    assert_eq!(stdout(&["equiv", "5,2,2"]), "(5,2,2) (8,1,4) (17,0,3)\n");
    assert_eq!(stdout(&["equiv", "0,0,0"]), "(0,0,0)\n");
    let verbose = stdout(&["equiv", "5,2,2", "--verbose"]);
    assert!(verbose.contains("j2 = 3, p2 = 1"), "{verbose}");
    assert!(verbose.contains("j3 = 6, p3 = 5"), "{verbose}");
}

#[test]
fn bad_signatures_are_usage_errors() {
    let out = trihex(&["equiv", "2,1,5"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset out of range"));
    assert_eq!(exit_code(&["equiv", "2,1"]), 2);
    assert_eq!(exit_code(&["equiv", "a,b,c"]), 2);
    assert_eq!(exit_code(&["mirror", "1, 0,0"]), 2);
    assert_eq!(exit_code(&["equiv", "1,0,0", "--format", "svg"]), 2);
}

#[test]
fn mirror_and_tight() {
    assert_eq!(stdout(&["mirror", "5,0,2"]), "(5,0,3)\n");
    assert_eq!(stdout(&["tight", "2,0,1"]), "(2,0,1) tight\n");
    assert_eq!(stdout(&["tight", "5,0,2"]), "(5,0,2) not tight\n");
}

#[test]
fn classes_at_24() {
    let text = stdout(&["classes", "24"]);
    assert_eq!(text.lines().count(), 4);
    assert_eq!(text.matches("chiral").count(), 2);
    assert_eq!(exit_code(&["classes", "10"]), 2);
}

#[test]
fn census_rows() {
    assert_eq!(
        stdout(&["census", "4"]),
        "v,sigma,alpha,beta,ceil_sigma_3,ceil_sigma_6\n4,1,1,1,1,1\n"
    );
    let out = trihex(&["census", "3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("below the minimum"));

    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.csv");
    let summary = stdout(&["census", "200", "--out", path.to_str().unwrap()]);
    assert!(summary.contains("50 rows"), "{summary}");
    let csv = std::fs::read_to_string(&path).unwrap();
    assert_eq!(csv.lines().count(), 51);
    assert!(csv.lines().any(|l| l == "196,57,21,12,19,10"));
    assert!(!csv.contains('\r'));
}

#[test]
fn unwritable_output_fails() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("census.csv");
    let code = exit_code(&["census", "8", "--out", path.to_str().unwrap()]);
    assert_ne!(code, 0);
}

#[test]
fn stats_small_range() {
    let text = stdout(&["stats", "4", "4"]);
    assert!(text.contains("alpha - ceil(sigma/3): max 0"), "{text}");
    assert!(text.contains("beta - ceil(sigma/6): max 0"), "{text}");
    let json: serde_json::Value =
        serde_json::from_str(&stdout(&["stats", "4", "48", "--format", "json"])).unwrap();
    assert_eq!(json["rows"], 12);
    assert_eq!(exit_code(&["stats", "8", "4"]), 2);
    assert_eq!(exit_code(&["stats", "0", "4"]), 2);
}

#[test]
fn graph6_of_tetrahedron() {
    assert_eq!(stdout(&["build", "0,0,0", "--format", "graph6"]), "C~\n");
}

#[test]
fn graph6_decodes_to_the_same_graph() {
    for text in ["1,0,0", "3,1,2", "5,2,2", "0,3,0", "12,0,7"] {
        let sig: Signature = text.parse().unwrap();
        let m = build_by_quotient(sig).unwrap();
        let line = stdout(&["build", text, "--format", "graph6"]);
        let (n, edges) =
            petgraph::graph6::from_graph6_representation::<u32>(line.trim_end().to_string());
        assert_eq!(n, m.num_vertices());
        let decoded = UnGraph::<(), ()>::from_edges(edges);
        let original =
            UnGraph::<(), ()>::from_edges(m.edges().into_iter().map(|(a, b)| (a as u32, b as u32)));
        assert_eq!(decoded.edge_count(), original.edge_count());
        assert!(is_isomorphic(&decoded, &original), "{text}");
    }
}

#[test]
fn dot_counts() {
    let dot = stdout(&["build", "1,0,0", "--format", "dot"]);
    assert_eq!(dot.lines().filter(|l| l.contains(" -- ")).count(), 12);
    let vertices = dot
        .lines()
        .filter(|l| l.trim_end().ends_with(';') && !l.contains("--"))
        .count();
    assert_eq!(vertices, 8);
    assert_eq!(dot.lines().filter(|l| l.starts_with("// face")).count(), 6);
}

#[test]
fn json_document_round_trip() {
    let first = stdout(&["build", "4,1,2", "--format", "json"]);
    let doc = GraphDocument::from_json(&first).unwrap();
    assert_eq!(doc.vertices.len(), 40);
    assert_eq!(doc.to_json(), first);

    // Rebuilding from the parsed rotation system re-exports the same bytes.
    let again = GraphDocument::from_map(&doc.to_map().unwrap(), doc.signature().unwrap()).unwrap();
    assert_eq!(again.to_json(), first);

    // Both constructors export the same document up to vertex numbering;
    // the spine build is identified from its file.
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spines.json");
    let spines = stdout(&["build", "4,1,2", "--method", "spines"]);
    std::fs::write(&path, &spines).unwrap();
    let id = stdout(&["identify", path.to_str().unwrap()]);
    assert_eq!(id, "(9,0,2) (9,0,3) (4,1,2) as_built\n");
}

#[test]
fn documents_from_the_library_match_the_binary() {
    let sig: Signature = "2,2,1".parse().unwrap();
    let lib = GraphDocument::from_map(&build_by_spines(sig).unwrap(), Some(sig)).unwrap();
    let bin = stdout(&["build", "2,2,1", "--method", "spines"]);
    assert_eq!(lib.to_json(), bin);
}

#[test]
fn corrupted_documents_are_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("doc.json");
    let text = stdout(&["build", "1,0,0"]);
    let mut doc: serde_json::Value = serde_json::from_str(&text).unwrap();
    doc["edges"][0] = serde_json::json!([0, 7]);
    std::fs::write(&path, doc.to_string()).unwrap();
    let out = trihex(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("malformed graph document"));
}

#[test]
fn identify_and_verify() {
    assert_eq!(
        stdout(&["identify", "4,1,2"]),
        "(9,0,2) (9,0,3) (4,1,2) as_built\n"
    );
    assert_eq!(
        stdout(&["identify", "0,0,0", "--method", "spines"]),
        "(0,0,0) as_built\n"
    );
    let report = stdout(&["verify", "0,3,0", "--method", "spines"]);
    assert!(report.starts_with("V=16 "), "{report}");
    assert!(report.ends_with("verdict: pass\n"), "{report}");
    assert_eq!(exit_code(&["verify", "does-not-exist.json"]), 1);
}

#[test]
fn svg_drawings() {
    let svg = stdout(&["build", "3,1,2", "--format", "svg"]);
    assert!(svg.starts_with("<svg"));
    assert_eq!(svg.matches("<circle").count(), 32);
    assert_eq!(svg.matches("<line").count(), 48);
    assert!(!svg.contains("NaN"));
}

#[test]
fn tiling_marks_rotocenters() {
    let svg = stdout(&["tiling", "0,0,0", "6", "6"]);
    assert_eq!(svg.matches("<circle").count(), 36);

    // Half-turn centers of (5,2,2) are m(0,6) + n(3,-2); a 12 by 12 window
    // with columns q = 0..12 and rows starting at q div 2 holds exactly these.
    let svg = stdout(&["tiling", "5,2,2", "12", "12"]);
    let expected = (0..12i64)
        .flat_map(|q| (0..12i64).map(move |row| (q, row + q.div_euclid(2))))
        .filter(|&(q, r)| q % 3 == 0 && (r + 2 * (q / 3)) % 6 == 0)
        .count();
    assert_eq!(svg.matches("<circle").count(), expected);
    assert_eq!(exit_code(&["tiling", "5,2,2", "0", "4"]), 2);
}
