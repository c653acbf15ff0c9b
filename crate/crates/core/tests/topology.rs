mod common;

use preference_surfaces::complex::{DeltaComplex, GluingSpec, Identification, Orientation, SurfaceTag};
use preference_surfaces::models::{build_model, ModelKind};
use preference_surfaces::nerve::{nerve, Cover};
use preference_surfaces::preferences::AlternativeSet;
use proptest::prelude::*;
use proptest::sample::subsequence;

fn set3() -> AlternativeSet {
    AlternativeSet::first(3).unwrap()
}

/// The four models and the two nerves.
fn fleet() -> Vec<(String, DeltaComplex)> {
    let mut out: Vec<(String, DeltaComplex)> =
        ModelKind::ALL.iter().map(|k| (k.to_string(), build_model(*k).unwrap().complex)).collect();
    out.push(("nerve-u".into(), nerve(&Cover::cover_u(&set3()).unwrap()).unwrap().complex));
    out.push(("nerve-v".into(), nerve(&Cover::cover_v(&set3()).unwrap()).unwrap().complex));
    out
}

fn boundary_edge_count(c: &DeltaComplex) -> usize {
    let mut sides = vec![0usize; c.edge_count()];
    for f in c.faces() {
        for s in f.slots {
            sides[s.edge] += 1;
        }
    }
    sides.iter().filter(|&&k| k == 1).count()
}

#[test]
fn orientation_matches_brute_force_on_every_puncturing() {
    for (name, c) in fleet() {
        let f = c.face_count();
        for mask in 0u32..(1 << f) {
            let drop: Vec<usize> = (0..f).filter(|i| mask & (1 << i) != 0).collect();
            let p = c.puncture_many(&drop).unwrap();
            let oracle = common::brute_orientable(&p);
            let verdict = p.orient().unwrap();
            assert_eq!(verdict.is_orientable(), oracle, "{name} minus {drop:?}");
            match verdict {
                Orientation::Orientable(a) => assert!(p.check_orientation(&a.signs)),
                Orientation::NonOrientable(cert) => {
                    assert!(!cert.faces.is_empty());
                    assert!(cert.faces.iter().all(|&x| x < p.face_count()));
                    assert!(p.faces().iter().enumerate().any(|(i, face)| cert.faces.contains(&i)
                        && face.slots.iter().any(|s| s.edge == cert.edge)));
                }
            }
        }
    }
}

#[test]
fn boundary_circuits_use_every_boundary_edge_once() {
    for (name, c) in fleet() {
        for f in 0..c.face_count() {
            let p = c.puncture(f).unwrap();
            let circuits = p.boundary_components().unwrap();
            let total: usize = circuits.iter().map(|b| b.edges.len()).sum();
            assert_eq!(total, boundary_edge_count(&p), "{name} minus face {f}");
        }
    }
}

#[test]
fn component_count_matches_oracle() {
    for (_, c) in fleet() {
        let f = c.face_count();
        for mask in 0u32..(1 << f) {
            let drop: Vec<usize> = (0..f).filter(|i| mask & (1 << i) != 0).collect();
            let p = c.puncture_many(&drop).unwrap();
            assert_eq!(p.component_count(), common::component_count(&p));
        }
    }
}

fn complex_and_orders() -> impl Strategy<Value = (DeltaComplex, Vec<usize>, Vec<usize>, Vec<usize>)> {
    let all = fleet();
    (0..all.len()).prop_flat_map(move |i| {
        let c = all[i].1.clone();
        let (v, e, f) = (c.vertex_count(), c.edge_count(), c.face_count());
        (
            Just(c),
            Just((0..v).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..e).collect::<Vec<_>>()).prop_shuffle(),
            Just((0..f).collect::<Vec<_>>()).prop_shuffle(),
        )
    })
}

fn punctured() -> impl Strategy<Value = DeltaComplex> {
    let all = fleet();
    (0..all.len()).prop_flat_map(move |i| {
        let c = all[i].1.clone();
        let f = c.face_count();
        subsequence((0..f).collect::<Vec<_>>(), 0..=f).prop_map(move |drop| c.puncture_many(&drop).unwrap())
    })
}

proptest! {
    #[test]
    fn classification_ignores_cell_order((c, vs, es, fs) in complex_and_orders()) {
        let r = c.reindexed(&vs, &es, &fs).unwrap();
        prop_assert_eq!(r.classify().unwrap(), c.classify().unwrap());
        prop_assert_eq!(r.is_orientable().unwrap(), c.is_orientable().unwrap());
        let mut a: Vec<String> = r.boundary_components().unwrap().iter().map(ToString::to_string).collect();
        let mut b: Vec<String> = c.boundary_components().unwrap().iter().map(ToString::to_string).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn double_cover_doubles_and_decides(p in punctured()) {
        let cover = p.orientation_double_cover().unwrap();
        let orientable = p.is_orientable().unwrap();
        prop_assert_eq!(cover.complex.euler_characteristic(), 2 * p.euler_characteristic());
        prop_assert_eq!(cover.complex.face_count(), 2 * p.face_count());
        prop_assert_eq!(cover.complex.edge_count(), 2 * p.edge_count());
        if p.face_count() > 0 && p.is_connected() {
            prop_assert_eq!(cover.is_connected(), !orientable);
        }
        prop_assert!(cover.complex.is_orientable().unwrap());
        for (i, &j) in cover.face_deck.iter().enumerate() {
            prop_assert_eq!(cover.face_deck[j], i);
            prop_assert_eq!(cover.face_projection[i], cover.face_projection[j]);
            prop_assert_ne!(i, j);
        }
    }

    #[test]
    fn json_round_trip_preserves_classification(p in punctured()) {
        let back = DeltaComplex::from_json(&p.to_json()).unwrap();
        prop_assert_eq!(back.vertex_count(), p.vertex_count());
        prop_assert_eq!(back.edge_count(), p.edge_count());
        prop_assert_eq!(back.face_count(), p.face_count());
        prop_assert_eq!(back.is_orientable().unwrap(), p.is_orientable().unwrap());
        if p.face_count() > 0 && p.is_connected() && p.is_surface() {
            prop_assert_eq!(back.classify().unwrap(), p.classify().unwrap());
        }
    }

    #[test]
    fn quotient_never_adds_cells(ids in prop::collection::vec((0usize..6, 0usize..6), 0..4), faces in prop::collection::vec((0usize..6, 0usize..6, 0usize..3), 0..3)) {
        let c = nerve(&Cover::cover_u(&set3()).unwrap()).unwrap().complex;
        let mut spec: Vec<Identification> = ids.iter().map(|&(a, b)| Identification::vertices(a, b)).collect();
        let vertex_only = c.quotient(&GluingSpec::new(spec.clone()));
        if let Ok(q) = &vertex_only {
            prop_assert_eq!(q.face_count(), c.face_count());
            prop_assert_eq!(q.edge_count(), c.edge_count());
            prop_assert!(q.vertex_count() <= c.vertex_count());
        }
        for &(f, g, rot) in &faces {
            let a = c.face_corners(f);
            let b = c.face_corners(g);
            spec.push(Identification::faces(f, g, [0, 1, 2].map(|k| (a[k], b[(k + rot) % 3]))));
        }
        if let Ok(q) = c.quotient(&GluingSpec::new(spec)) {
            prop_assert!(q.face_count() <= c.face_count());
            prop_assert!(q.edge_count() <= c.edge_count());
            prop_assert!(q.vertex_count() <= c.vertex_count());
        }
    }
}

#[test]
fn classification_table_is_total() {
    use SurfaceTag::*;
    let cases = [
        ((true, 2, 0), Sphere),
        ((true, 1, 1), Disk),
        ((true, 0, 2), Annulus),
        ((true, 0, 0), Torus),
        ((false, 0, 1), MobiusStrip),
        ((false, 0, 0), KleinBottle),
        ((false, 1, 0), ProjectivePlane),
        ((true, -2, 0), Other),
        ((false, -1, 1), Other),
    ];
    for ((o, chi, b), tag) in cases {
        assert_eq!(SurfaceTag::from_invariants(o, chi, b), tag);
    }
}
