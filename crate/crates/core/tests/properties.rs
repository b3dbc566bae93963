use std::sync::OnceLock;

use proptest::prelude::*;

use clarkit::clar::clar_value;
use clarkit::enumerate::{enumerate, Isomer};
use clarkit::fragment::{boundary_labeling, clar_set, lemma22_forest, Fragment, TreeShape};
use clarkit::fullerene::Fullerene;
use clarkit::matching::{count_perfect_matchings, fries_value, kekule_count};
use clarkit::spiral::to_spiral;
use clarkit::Mask;

/// Every isomer with 24 to 40 vertices.
fn corpus() -> &'static [Isomer] {
    static CORPUS: OnceLock<Vec<Isomer>> = OnceLock::new();
    CORPUS.get_or_init(|| {
        (24..=40)
            .step_by(2)
            .flat_map(|n| enumerate(n).unwrap())
            .collect()
    })
}

fn isomer() -> impl Strategy<Value = &'static Isomer> {
    (0..corpus().len()).prop_map(|i| &corpus()[i])
}

fn with_permutation() -> impl Strategy<Value = (&'static Isomer, Vec<usize>)> {
    isomer().prop_flat_map(|iso| {
        let n = iso.graph.order();
        (Just(iso), Just((0..n).collect::<Vec<_>>()).prop_shuffle())
    })
}

/// A connected face set grown from `seed` by repeatedly adding the
/// `choice`-th adjoining face.
fn grow(f: &Fullerene, seed: usize, choices: &[usize]) -> Vec<usize> {
    let mut faces = vec![seed % f.face_count()];
    for &c in choices {
        let mut frontier: Vec<usize> = faces
            .iter()
            .flat_map(|&g| f.face_neighbors(g).iter().copied())
            .filter(|g| !faces.contains(g))
            .collect();
        frontier.sort_unstable();
        frontier.dedup();
        if frontier.is_empty() {
            break;
        }
        faces.push(frontier[c % frontier.len()]);
    }
    faces
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn invariants_survive_relabelling((iso, perm) in with_permutation()) {
        let f = &iso.graph;
        let g = f.relabel(&perm);
        prop_assert_eq!(clar_value(&g), clar_value(f));
        prop_assert_eq!(fries_value(&g), fries_value(f));
        prop_assert_eq!(kekule_count(&g), kekule_count(f));
    }

    #[test]
    fn canonical_spiral_is_a_class_function((iso, perm) in with_permutation()) {
        let g = iso.graph.relabel(&perm);
        prop_assert_eq!(&to_spiral(&g).unwrap(), &iso.spiral);
        prop_assert_eq!(&to_spiral(&g.mirror()).unwrap(), &iso.spiral);
    }

    #[test]
    fn perfect_matchings_split_on_an_edge(iso in isomer(), e in any::<prop::sample::Index>()) {
        let f = &iso.graph;
        let (u, v) = f.edges()[e.index(f.edges().len())];
        let all: Mask = (1 << f.order()) - 1;
        let mut deleted = f.adjacency_masks().to_vec();
        deleted[u] &= !(1 << v);
        deleted[v] &= !(1 << u);
        let total = count_perfect_matchings(f.adjacency_masks(), all);
        let without = count_perfect_matchings(&deleted, all);
        let through = count_perfect_matchings(f.adjacency_masks(), all & !(1 << u) & !(1 << v));
        prop_assert_eq!(total, without + through);
    }

    #[test]
    fn fragment_invariants(
        iso in isomer(),
        seed in 0usize..64,
        choices in prop::collection::vec(0usize..16, 0..8),
    ) {
        let f = &iso.graph;
        let g = Fragment::from_faces(f, &grow(f, seed, &choices)).unwrap();
        // degree-saturated boundary paths never exceed a hexagon side count
        if g.is_simply_connected() && !g.w().is_empty() {
            let l = boundary_labeling(&g).unwrap();
            prop_assert!(l.entries().iter().all(|&x| (1..=5).contains(&x)), "{}", l);
        }
        if let Ok(cs) = clar_set(f, &g) {
            prop_assert!(cs.uncovered.len() >= g.pentagon_count());
        }
        if let Some(shape) = lemma22_forest(f, &g) {
            if g.is_simply_connected() {
                prop_assert_ne!(shape, TreeShape::Other);
            }
        }
    }

    #[test]
    fn small_holes_leave_forests(
        iso in isomer(),
        seed in 0usize..64,
        choices in prop::collection::vec(0usize..16, 1..4),
    ) {
        let f = &iso.graph;
        let hole = grow(f, seed, &choices);
        let rest: Vec<usize> = (0..f.face_count()).filter(|g| !hole.contains(g)).collect();
        let Ok(g) = Fragment::from_faces(f, &rest) else { return Ok(()) };
        if g.is_simply_connected() {
            if let Some(shape) = lemma22_forest(f, &g) {
                prop_assert_ne!(shape, TreeShape::Other, "hole {:?}", hole);
            }
        }
    }
}
