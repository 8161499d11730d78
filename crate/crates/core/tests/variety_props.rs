use proptest::prelude::*;

use nucleon::chain::{ChainDescriptor, ComponentKind};
use nucleon::term::{check_identity, NamedTerm, Term};
use nucleon::variety::{classify, compute_flags, conditions, verify_classification, CaseId, VarietyDescriptor};

fn generator() -> impl Strategy<Value = ChainDescriptor> {
    let kind = prop_oneof![
        (1u32..4).prop_map(ComponentKind::FiniteMv),
        Just(ComponentKind::Omega),
        Just(ComponentKind::Chang),
    ];
    (1u32..3, proptest::collection::vec(kind, 0..3)).prop_map(|(k0, rest)| {
        let mut comps = vec![ComponentKind::FiniteMv(k0)];
        comps.extend(rest);
        ChainDescriptor::new(comps).unwrap()
    })
}

fn variety() -> impl Strategy<Value = VarietyDescriptor> {
    proptest::collection::vec(generator(), 1..3).prop_map(|g| VarietyDescriptor::new(g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flags_are_consistent(v in variety()) {
        let f = compute_flags(&v);
        prop_assert!(!f.has_s1_1w || (f.has_s11 && f.has_s1w));
        prop_assert_eq!(f.m.is_some(), !f.p.is_empty());
        prop_assert_eq!(!f.p.is_empty(), f.has_s11);
        prop_assert_eq!(conditions(&f).len(), 1);
    }

    #[test]
    fn classification_survives_checking(v in variety()) {
        let r = verify_classification(&v, 8).unwrap();
        prop_assert!(r.is_clean(), "{}: {:?} {:?}", v, r.failures().collect::<Vec<_>>(), r.warnings);
        let c = classify(&v);
        prop_assert_eq!(c.case == CaseId::I, c.nontrivial().next().is_none());
    }
}

#[test]
fn idempotent_generators_collapse() {
    for desc in ["S1", "S1 + S1", "S1 + S1 + S1 + S1"] {
        let d: ChainDescriptor = desc.parse().unwrap();
        for m in 1..=4 {
            let s = check_identity(&d, &NamedTerm::S(m).term(), &Term::var("x"), 16).unwrap();
            let t = check_identity(&d, &NamedTerm::T(m).term(), &NamedTerm::DoubleNeg.term(), 16).unwrap();
            assert!(s.holds() && t.holds(), "{desc} m={m}");
        }
    }
}
