use std::collections::HashSet;

use clarkit::clar::{clar_number, clar_value};
use clarkit::fixtures::EXTREMAL_C60;
use clarkit::fragment::{
    b1_pairs, catalogue, classify_fragment, face_labelings, induced_extension, pasting_edges,
    pentagon_components, theorem2_classify, CensusClass, Fragment, FragmentTag, Side, Template,
};
use clarkit::fullerene::Fullerene;
use clarkit::matching::Matching;
use clarkit::spiral::{from_pentagon_positions, from_spiral};
use clarkit::Mask;

fn extremal_graphs() -> Vec<(usize, Fullerene)> {
    EXTREMAL_C60
        .iter()
        .map(|(i, pos)| (*i, from_spiral(&from_pentagon_positions(60, pos)).unwrap()))
        .collect()
}

fn tags(f: &Fullerene) -> Vec<FragmentTag> {
    pentagon_components(f)
        .iter()
        .map(|g| classify_fragment(f, g).unwrap().tag)
        .collect()
}

/// Edges of the witness outside the chosen hexagons.
fn complement_edges(f: &Fullerene, hexagons: &[usize], witness: &Matching) -> Vec<(usize, usize)> {
    let covered = hexagons.iter().fold(0 as Mask, |m, &h| m | f.face_mask(h));
    witness
        .edges()
        .iter()
        .copied()
        .filter(|&(u, v)| covered >> u & 1 == 0 && covered >> v & 1 == 0)
        .collect()
}

fn labels(f: &Fullerene, faces: &[usize], removed: Mask) -> Vec<String> {
    face_labelings(f, &induced_extension(f, faces, removed))
        .into_iter()
        .map(|(_, l)| l.to_string())
        .collect()
}

#[test]
fn the_fixture_graphs_are_extremal() {
    for (i, f) in extremal_graphs() {
        assert_eq!(clar_value(&f), 8, "isomer {i}");
        let r = theorem2_classify(&f).unwrap();
        assert!(r.extremal, "isomer {i}");
    }
}

#[test]
fn component_classes_of_the_census() {
    let mut by_class = std::collections::BTreeMap::new();
    for (i, f) in extremal_graphs() {
        let t = tags(&f);
        assert!(t.iter().all(|&x| x != FragmentTag::Other), "isomer {i}");
        let class = theorem2_classify(&f).unwrap().census_class();
        *by_class.entry(class).or_insert(0) += 1;
        if i == 43 || i == 44 {
            assert_eq!(t, [FragmentTag::B3, FragmentTag::B3]);
        }
        if i == 1812 {
            assert_eq!(t, [FragmentTag::P; 12]);
        }
    }
    let counts: Vec<(CensusClass, usize)> = by_class.into_iter().collect();
    assert_eq!(
        counts,
        [
            (CensusClass::B3, 2),
            (CensusClass::B1Power, 6),
            (CensusClass::B2B1, 4),
            (CensusClass::Units, 6)
        ]
    );
}

#[test]
fn b1_extension_minus_matching_has_a_3333_face() {
    let mut pairs = 0;
    for (_, f) in extremal_graphs() {
        let formula = &clar_number(&f).formulas[0];
        let m = complement_edges(&f, &formula.hexagons, &formula.witness);
        let removed = m.iter().fold(0 as Mask, |x, &(u, v)| x | 1 << u | 1 << v);
        for (p, q) in b1_pairs(&f, &formula.hexagons, &formula.witness) {
            let mut faces = vec![p, q];
            faces.extend(
                formula
                    .hexagons
                    .iter()
                    .filter(|&&h| f.faces_adjacent(h, p) || f.faces_adjacent(h, q)),
            );
            assert_eq!(faces.len(), 6);
            assert!(labels(&f, &faces, removed).contains(&"3333".to_string()));
            pairs += 1;
        }
    }
    assert!(pairs > 0);
}

#[test]
fn b2_extension_minus_matching_has_a_331331_face() {
    let mut seen = 0;
    for (_, f) in extremal_graphs() {
        let formula = &clar_number(&f).formulas[0];
        let m = complement_edges(&f, &formula.hexagons, &formula.witness);
        let removed = m.iter().fold(0 as Mask, |x, &(u, v)| x | 1 << u | 1 << v);
        for g in pentagon_components(&f) {
            if classify_fragment(&f, &g).unwrap().tag != FragmentTag::B2 {
                continue;
            }
            let mut faces = g.faces().to_vec();
            faces.extend(
                formula
                    .hexagons
                    .iter()
                    .filter(|&&h| g.faces().iter().any(|&p| f.faces_adjacent(h, p))),
            );
            assert!(labels(&f, &faces, removed).contains(&"331331".to_string()));
            seen += 1;
        }
    }
    assert!(seen > 0);
}

#[test]
fn b3_clar_extension_has_boundary_33113311() {
    for (i, f) in extremal_graphs()
        .into_iter()
        .filter(|(i, _)| *i == 43 || *i == 44)
    {
        for g in pentagon_components(&f) {
            let c = classify_fragment(&f, &g).unwrap();
            let mut faces = g.faces().to_vec();
            faces.extend(&c.clar_set.hexagons);
            let covered = faces.iter().fold(0 as Mask, |m, &h| m | f.face_mask(h));
            assert_eq!(covered.count_ones(), 30, "isomer {i}");
            assert!(labels(&f, &faces, 0).contains(&"33113311".to_string()));
        }
    }
}

#[test]
fn pentagons_are_the_faces_touched_by_the_complementary_matching() {
    for (i, f) in extremal_graphs() {
        for formula in clar_number(&f).formulas {
            let m = complement_edges(&f, &formula.hexagons, &formula.witness);
            assert_eq!(m.len(), 6, "isomer {i}");
            for g in 0..f.face_count() {
                let on = f.face_mask(g);
                let touched = m.iter().any(|&(u, v)| (on >> u & 1) != (on >> v & 1));
                assert_eq!(touched, f.is_pentagon(g), "isomer {i} face {g}");
            }
        }
    }
}

#[test]
fn no_fragment_has_a_single_two_degree_vertex() {
    for (_, f) in extremal_graphs() {
        // complements of every face, edge-adjacent pair and vertex triple
        let mut holes: Vec<Vec<usize>> = (0..f.face_count()).map(|g| vec![g]).collect();
        for &(u, v) in f.edges() {
            let [a, b] = f.edge_faces(f.edge_id(u, v).unwrap());
            holes.push(vec![a, b]);
            holes.push(f.vertex_faces(u).to_vec());
        }
        for hole in holes {
            let rest: Vec<usize> = (0..f.face_count()).filter(|g| !hole.contains(g)).collect();
            let g = Fragment::from_faces(&f, &rest).unwrap();
            assert_ne!(g.w().len(), 1);
            assert_ne!(Fragment::from_faces(&f, &hole).unwrap().w().len(), 1);
        }
    }
}

/// Side of `g`'s template carrying host edge `(u, v)`.
fn side_of(f: &Fullerene, g: &Fragment, (u, v): (usize, usize)) -> Side {
    for (i, &h) in g.faces().iter().enumerate() {
        if let Some(k) = f
            .face_edges(h)
            .iter()
            .position(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
        {
            return (i, k);
        }
    }
    panic!("edge {u}-{v} is not on the fragment");
}

#[test]
fn designated_pasting_sides_match_the_host() {
    let mut checked = 0;
    for (_, f) in extremal_graphs() {
        for g in pentagon_components(&f) {
            let c = classify_fragment(&f, &g).unwrap();
            if !matches!(c.tag, FragmentTag::B2 | FragmentTag::B3) {
                continue;
            }
            let host = Template::from_fragment(&f, &g);
            let want: HashSet<Side> = pasting_edges(&f, &g, &c.clar_set)
                .into_iter()
                .map(|e| side_of(&f, &g, e))
                .collect();
            let (_, template) = catalogue().iter().find(|(t, _)| *t == c.tag).unwrap();
            let ok = template.isomorphisms(&host).into_iter().any(|iso| {
                let image: HashSet<Side> =
                    template.pasting_edges().iter().map(|s| iso[s]).collect();
                image == want
            });
            assert!(ok, "{} pasting sides", c.tag);
            checked += 1;
        }
    }
    assert!(checked > 0);
}

#[test]
fn closed_pentagon_rings_fail_the_catalogue() {
    // two caps, each a pentagon ringed by five more
    let f = from_spiral(&from_pentagon_positions(
        60,
        &[1, 2, 3, 4, 5, 6, 27, 28, 29, 30, 31, 32],
    ))
    .unwrap();
    let comps = pentagon_components(&f);
    assert_eq!(comps.len(), 2);
    for g in &comps {
        assert_eq!(g.pentagon_count(), 6);
        assert_eq!(clarkit::fragment::gamma(&f, g), 3);
        assert_eq!(classify_fragment(&f, g).unwrap().tag, FragmentTag::Other);
    }
    let r = theorem2_classify(&f).unwrap();
    assert!(!r.catalogued && !r.extremal);
    assert!(clar_value(&f) < 8);
}
