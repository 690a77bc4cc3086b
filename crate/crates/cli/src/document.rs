use serde::{Deserialize, Serialize};
use trihex::{CombinatorialMap, Signature};

use crate::CliError;

pub const FORMAT_VERSION: &str = "trihex-graph/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FaceKind {
    Triangle,
    Hexagon,
    Other,
}

impl FaceKind {
    fn of_len(n: usize) -> FaceKind {
        match n {
            3 => FaceKind::Triangle,
            6 => FaceKind::Hexagon,
            _ => FaceKind::Other,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FaceRecord {
    pub kind: FaceKind,
    /// Vertices counterclockwise, starting from the smallest.
    pub cycle: Vec<usize>,
}

/// Embedding-preserving export of a map.
///
/// Everything is normalized from the embedding alone (edges sorted, each
/// face and rotation started at its smallest vertex, faces sorted), so the
/// same map always serializes to the same bytes however its darts are
/// numbered.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    pub version: String,
    /// Signature the map was built from, as `s,b,f`.
    pub signature: Option<String>,
    /// Every signature naming the same trihex.
    pub class: Vec<String>,
    pub vertices: Vec<usize>,
    pub edges: Vec<[usize; 2]>,
    pub faces: Vec<FaceRecord>,
    /// Neighbors of each vertex counterclockwise, starting from the smallest.
    pub rotation: Vec<Vec<usize>>,
}

fn from_min<T: Ord + Copy>(mut cycle: Vec<T>) -> Vec<T> {
    if let Some(k) = (0..cycle.len()).min_by_key(|&i| cycle[i]) {
        cycle.rotate_left(k);
    }
    cycle
}

impl GraphDocument {
    pub fn from_map(m: &CombinatorialMap, sig: Option<Signature>) -> Result<Self, CliError> {
        let class = match sig {
            Some(sig) => sig
                .class()?
                .members()
                .iter()
                .map(|x| x.to_string())
                .collect(),
            None => Vec::new(),
        };
        let mut edges: Vec<[usize; 2]> = m.edges().into_iter().map(|(a, b)| [a, b]).collect();
        edges.sort_unstable();
        let mut faces: Vec<FaceRecord> = (0..m.num_faces())
            .map(|f| FaceRecord {
                kind: FaceKind::of_len(m.face_len(f)),
                cycle: from_min(m.face_vertices(f)),
            })
            .collect();
        faces.sort_by(|a, b| a.cycle.cmp(&b.cycle));
        Ok(GraphDocument {
            version: FORMAT_VERSION.to_string(),
            signature: sig.map(|s| s.to_string()),
            class,
            vertices: (0..m.num_vertices()).collect(),
            edges,
            faces,
            rotation: (0..m.num_vertices())
                .map(|v| from_min(m.neighbors(v)))
                .collect(),
        })
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("document serializes");
        text.push('\n');
        text
    }

    /// Parses a document and checks that every field agrees with the
    /// rotation system.
    pub fn from_json(text: &str) -> Result<Self, CliError> {
        let doc: GraphDocument =
            serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))?;
        if doc.version != FORMAT_VERSION {
            return Err(CliError::Document(format!(
                "unsupported version {:?}, expected {FORMAT_VERSION:?}",
                doc.version
            )));
        }
        let map = doc.to_map()?;
        let sig = doc.signature()?;
        let rebuilt = GraphDocument::from_map(&map, sig)?;
        if rebuilt != doc {
            let field = if rebuilt.vertices != doc.vertices {
                "vertices"
            } else if rebuilt.edges != doc.edges {
                "edges"
            } else if rebuilt.faces != doc.faces {
                "faces"
            } else if rebuilt.rotation != doc.rotation {
                "rotation"
            } else {
                "class"
            };
            return Err(CliError::Document(format!(
                "{field} disagree with the rotation system"
            )));
        }
        Ok(doc)
    }

    pub fn signature(&self) -> Result<Option<Signature>, CliError> {
        match &self.signature {
            Some(text) => Ok(Some(text.parse()?)),
            None => Ok(None),
        }
    }

    pub fn to_map(&self) -> Result<CombinatorialMap, CliError> {
        let n = self.rotation.len();
        if let Some(&bad) = self.rotation.iter().flatten().find(|&&u| u >= n) {
            return Err(CliError::Document(format!(
                "rotation names vertex {bad} of {n}"
            )));
        }
        Ok(CombinatorialMap::from_rotation_system(&self.rotation)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use trihex::build_by_quotient;

    #[test]
    fn tetrahedron_document() {
        let sig: Signature = "0,0,0".parse().unwrap();
        let doc = GraphDocument::from_map(&build_by_quotient(sig).unwrap(), Some(sig)).unwrap();
        assert_eq!(
            doc.edges,
            vec![[0, 1], [0, 2], [0, 3], [1, 2], [1, 3], [2, 3]]
        );
        assert_eq!(doc.faces.len(), 4);
        assert!(doc.faces.iter().all(|f| f.kind == FaceKind::Triangle));
        assert_eq!(doc.class, vec!["0,0,0"]);
    }

    #[test]
    fn tampered_document_is_rejected() {
        let sig: Signature = "1,0,0".parse().unwrap();
        let doc = GraphDocument::from_map(&build_by_quotient(sig).unwrap(), Some(sig)).unwrap();
        let mut bad = doc.clone();
        bad.edges.pop();
        assert!(GraphDocument::from_json(&bad.to_json()).is_err());
        let mut bad = doc.clone();
        bad.faces[0].kind = FaceKind::Hexagon;
        assert!(GraphDocument::from_json(&bad.to_json()).is_err());
        assert!(GraphDocument::from_json("{").is_err());
        assert_eq!(GraphDocument::from_json(&doc.to_json()).unwrap(), doc);
    }
}
