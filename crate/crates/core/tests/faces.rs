use proptest::prelude::*;

use decograph::enumerate::basis;
use decograph::faces::{audit_graph, audit_graph_with, first_failure, hidden_descriptors, FaceDescriptor, FaceType};
use decograph::vector::{int, rat, Rational};
use decograph::Parity;

/// Fiber dimensions as tabulated: `d_{0,s} = ns - n - 1`, `d_{r,s} = r + ns - 2`.
fn d(r: i64, s: i64, n: i64) -> i64 {
    if r == 0 {
        n * s - n - 1
    } else {
        r + n * s - 2
    }
}

/// The displayed closed forms.
fn printed_bound(t: FaceType, r: i64, s: i64, n: i64) -> Rational {
    match t {
        FaceType::I => rat((n - 3) * s, 2) + int(n + 1),
        FaceType::II => rat((n - 3) * s, 2) + rat(5 * n - 1, 2),
        FaceType::III => rat((n - 3) * (r + s - 2), 2) + int(n - 1),
    }
}

/// The displayed unsimplified bounds.
fn edge_count_bound(t: FaceType, r: i64, s: i64, n: i64) -> Rational {
    match t {
        FaceType::I | FaceType::III => rat((n - 1) * (r + 3 * s), 2) - int(d(r, s, n)),
        FaceType::II => rat((n - 1) * 3 * (s + 1), 2) - int(d(0, s + 1, n)),
    }
}

fn descriptor() -> impl Strategy<Value = FaceDescriptor> {
    (0usize..3, 0usize..10, 0usize..10, 3usize..12).prop_filter_map("admissible", |(t, r, s, n)| {
        let t = [FaceType::I, FaceType::II, FaceType::III][t];
        let r = if t == FaceType::III { r } else { 0 };
        FaceDescriptor::new(t, r, s, n).ok()
    })
}

proptest! {
    #[test]
    fn bounds_match_the_formulas(fd in descriptor()) {
        let (r, s, n) = (fd.r as i64, fd.s as i64, fd.n as i64);
        prop_assert_eq!(fd.degree_lower_bound(), printed_bound(fd.face_type, r, s, n));
        prop_assert_eq!(fd.valence_bound(), edge_count_bound(fd.face_type, r, s, n));
        let gap = fd.degree_lower_bound() - fd.valence_bound();
        match fd.face_type {
            FaceType::II => prop_assert_eq!(gap, int(n)),
            _ => prop_assert_eq!(gap, int(0)),
        }
    }

    #[test]
    fn fiber_grows_with_internal_points(fd in descriptor()) {
        if let Ok(next) = FaceDescriptor::new(fd.face_type, fd.r, fd.s + 1, fd.n) {
            prop_assert!(next.fiber_dim() > fd.fiber_dim());
        }
        if fd.face_type != FaceType::II {
            prop_assert_eq!(fd.fiber_dim(), d(fd.r as i64, fd.s as i64, fd.n as i64));
        }
    }
}

#[test]
fn descriptor_shapes() {
    assert!(FaceDescriptor::new(FaceType::I, 0, 1, 4).is_err());
    assert!(FaceDescriptor::new(FaceType::II, 0, 0, 4).is_err());
    assert!(FaceDescriptor::new(FaceType::III, 1, 0, 4).is_err());
    assert!(FaceDescriptor::new(FaceType::III, 2, 0, 4).unwrap().is_principal());
    assert!(FaceDescriptor::new(FaceType::I, 0, 2, 4).unwrap().is_principal());
    assert!(FaceDescriptor::new(FaceType::II, 0, 1, 4).unwrap().is_principal());
    assert!(FaceDescriptor::new(FaceType::III, 1, 2, 4).unwrap().is_hidden());
}

#[test]
fn two_point_fiber() {
    for n in 3..=10 {
        assert_eq!(FaceDescriptor::new(FaceType::I, 0, 2, n).unwrap().fiber_dim(), n as i64 - 1);
    }
}

#[test]
fn hidden_faces_vanish_above_three() {
    for n in 4..=10 {
        let hidden = hidden_descriptors(n, 10);
        assert!(!hidden.is_empty());
        for fd in hidden {
            assert!(fd.bound_vanishes(false), "{fd}");
        }
        assert_eq!(first_failure(n, 10, false), None);
    }
}

#[test]
fn three_dimensional_failure() {
    let fd = first_failure(3, 10, false).unwrap();
    assert_eq!((fd.face_type, fd.r, fd.s), (FaceType::III, 1, 2));
    assert_eq!(fd.degree_lower_bound(), int(2));
    assert!(hidden_descriptors(3, 10).iter().filter(|f| f.face_type != FaceType::III).all(|f| f.bound_vanishes(false)));
}

#[test]
fn extended_thresholds() {
    for n in [4, 5] {
        let fd = first_failure(n, 10, true).unwrap();
        assert_eq!((fd.face_type, fd.r + fd.s), (FaceType::III, 3), "n = {n}");
    }
    for n in 6..=10 {
        assert_eq!(first_failure(n, 10, true), None);
    }
}

#[test]
fn principal_faces_are_the_coboundary_terms() {
    for parity in [Parity::Odd, Parity::Even] {
        for k in 1..=3 {
            for m in -2 * k..=0 {
                for g in basis(parity, k, m) {
                    for n in [3, 4, 5] {
                        let audit = audit_graph(&g, n).unwrap();
                        assert!(audit.principal_matches_delta, "{g}: {:?} vs {:?}", audit.principal_sites, audit.delta_sites);
                        if n > 3 {
                            assert!(audit.hidden_all_zero, "{g}: {:?}", audit.unresolved);
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn extended_audit_above_five() {
    for g in basis(Parity::Odd, 3, 0) {
        assert!(audit_graph_with(&g, 6, true).unwrap().is_consistent(), "{g}");
    }
}
