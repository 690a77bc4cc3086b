use trihex::analysis::{curvature_graph, find_belts, find_spines, pseudo_roads};
use trihex::census::signatures_for_vertices;
use trihex::{build_by_quotient, build_by_spines, CombinatorialMap, Signature};

fn sig(s: u64, b: u64, f: u64) -> Signature {
    Signature::new(s, b, f).unwrap()
}

fn all_up_to(v_max: u64) -> impl Iterator<Item = Signature> {
    (4..=v_max)
        .step_by(4)
        .flat_map(|v| signatures_for_vertices(v).unwrap())
}

#[test]
fn spine_lengths_are_class_lengths() {
    for x in all_up_to(96) {
        let lengths: Vec<u64> = x.class().unwrap().members().iter().map(|m| m.s()).collect();
        let spines = find_spines(&build_by_quotient(x).unwrap());
        assert_eq!(spines.len(), 12, "{x}");
        for spine in spines {
            assert!(
                lengths.contains(&(spine.len() as u64)),
                "{x}: spine of {}",
                spine.len()
            );
        }
    }
}

#[test]
fn belts_wrap_around_spines() {
    for x in all_up_to(96) {
        let lengths: Vec<u64> = x
            .class()
            .unwrap()
            .members()
            .iter()
            .map(|m| 2 * m.s() + 2)
            .collect();
        let belts = find_belts(&build_by_quotient(x).unwrap());
        for belt in &belts {
            assert!(
                lengths.contains(&(belt.len() as u64)),
                "{x}: belt of {}",
                belt.len()
            );
        }
        // Every member with b > 0 contributes its own belts.
        let expected: u64 = x
            .class()
            .unwrap()
            .members()
            .iter()
            .map(|m| m.b())
            .max()
            .unwrap();
        assert!(belts.len() as u64 >= expected, "{x}: {} belts", belts.len());
    }
}

#[test]
fn godseye_belts() {
    for b in 1..6 {
        let belts = find_belts(&build_by_spines(sig(0, b, 0)).unwrap());
        assert_eq!(belts.len() as u64, b, "(0,{b},0)");
        assert!(belts.iter().all(|belt| belt.len() == 2));
    }
}

/// Every hexagon chain starting at a triangle edge, followed by brute force
/// over face adjacency rather than dart arithmetic.
fn brute_force_roads(m: &CombinatorialMap) -> Vec<(usize, usize, usize)> {
    let faces: Vec<Vec<usize>> = (0..m.num_faces()).map(|f| m.face_vertices(f)).collect();
    // The face across edge (a, b), other than `here`.
    let across = |here: usize, a: usize, b: usize| {
        (0..faces.len())
            .find(|&g| {
                g != here && {
                    let c = &faces[g];
                    (0..c.len()).any(|i| c[i] == b && c[(i + 1) % c.len()] == a)
                }
            })
            .unwrap()
    };
    let mut roads = Vec::new();
    for t in m.triangles() {
        let c = &faces[t];
        for i in 0..3 {
            let (mut a, mut b) = (c[i], c[(i + 1) % 3]);
            let mut face = across(t, a, b);
            let mut seen = vec![face];
            let mut ok = true;
            while faces[face].len() == 6 {
                let cyc = &faces[face];
                let k = (0..6)
                    .find(|&k| cyc[k] == b && cyc[(k + 1) % 6] == a)
                    .unwrap();
                let (na, nb) = (cyc[(k + 3) % 6], cyc[(k + 4) % 6]);
                let next = across(face, na, nb);
                a = na;
                b = nb;
                face = next;
                if faces[face].len() == 6 {
                    if seen.contains(&face) {
                        ok = false;
                        break;
                    }
                    seen.push(face);
                }
            }
            if ok && face != t {
                roads.push((t, face, seen.len() - usize::from(faces[seen[0]].len() == 3)));
            }
        }
    }
    roads.sort();
    roads
}

#[test]
fn roads_match_brute_force() {
    for x in all_up_to(64) {
        let m = build_by_quotient(x).unwrap();
        let mut fast: Vec<(usize, usize, usize)> = pseudo_roads(&m)
            .into_iter()
            .map(|r| (r.source, r.target, r.len()))
            .collect();
        fast.sort();
        assert_eq!(fast, brute_force_roads(&m), "{x}");
    }
}

#[test]
fn curvature_graph_of_godseye() {
    let g = curvature_graph(&build_by_quotient(sig(0, 2, 0)).unwrap());
    for i in 0..4 {
        assert!(!g.adjacent[i][i]);
        for j in 0..4 {
            assert_eq!(g.adjacent[i][j], g.adjacent[j][i]);
            assert_eq!(g.adjacent[i][j], g.road_counts[i][j] > 0);
        }
    }
    for ((i, j), road) in &g.witnesses {
        assert_eq!(
            (g.triangles[*i], g.triangles[*j]),
            (road.source, road.target)
        );
    }
}

/// Counterclockwise neighbors of `v`, starting from the smallest.
fn rotation(m: &CombinatorialMap, v: usize) -> Vec<usize> {
    let mut n = m.neighbors(v);
    let k = (0..n.len()).min_by_key(|&i| n[i]).unwrap();
    n.rotate_left(k);
    n
}

#[test]
fn face_lists_rebuild_the_same_map() {
    for x in all_up_to(48) {
        let m = build_by_quotient(x).unwrap();
        let faces: Vec<Vec<usize>> = (0..m.num_faces()).map(|f| m.face_vertices(f)).collect();
        let again = CombinatorialMap::from_faces(m.num_vertices(), &faces).unwrap();
        for v in 0..m.num_vertices() {
            assert_eq!(rotation(&again, v), rotation(&m, v), "{x} at {v}");
        }
    }
}
