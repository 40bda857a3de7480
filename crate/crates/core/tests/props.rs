//! Randomized invariants over compositions and basis elements.

use proptest::prelude::*;

use immaculate::compositions::{comp_of, complement, refines, set_of, Composition, DescentSubset};
use immaculate::qsym::{fundamental, psi, specialize, QSymElement};

/// Compositions of degree up to 8 through their subset encoding.
fn arb_composition() -> impl Strategy<Value = Composition> {
    (1usize..=8).prop_flat_map(|n| {
        (0u32..(1 << (n - 1))).prop_map(move |mask| {
            let elements: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            comp_of(&DescentSubset::new(n, elements).unwrap(), n).unwrap()
        })
    })
}

fn arb_qsym(n: usize) -> impl Strategy<Value = QSymElement<i64>> {
    proptest::collection::vec((0u32..(1 << (n - 1)), -4i64..=4), 0..5).prop_map(move |picks| {
        let mut q = QSymElement::zero(n);
        for (mask, coeff) in picks {
            let elements: Vec<usize> = (1..n).filter(|i| mask & (1 << (i - 1)) != 0).collect();
            let alpha = comp_of(&DescentSubset::new(n, elements).unwrap(), n).unwrap();
            q.add_term(alpha, coeff);
        }
        q
    })
}

proptest! {
    #[test]
    fn subset_roundtrip(alpha in arb_composition()) {
        prop_assert_eq!(comp_of(&set_of(&alpha), alpha.n()).unwrap(), alpha);
    }

    #[test]
    fn complement_is_an_involution(alpha in arb_composition()) {
        let c = complement(&alpha);
        prop_assert_eq!(c.n(), alpha.n());
        prop_assert_eq!(complement(&c), alpha);
    }

    #[test]
    fn refinement_reverses_under_nothing(alpha in arb_composition()) {
        // refinement is reflexive and consistent with subset containment
        prop_assert!(refines(&alpha, &alpha).unwrap());
        let full = comp_of(&set_of(&alpha).complement(), alpha.n()).unwrap();
        let ones = Composition::new(vec![1; alpha.n()]).unwrap();
        prop_assert!(refines(&ones, &alpha).unwrap());
        prop_assert!(refines(&ones, &full).unwrap());
    }

    #[test]
    fn psi_is_a_degree_preserving_involution(alpha in arb_composition()) {
        let q = fundamental::<i64>(&alpha);
        prop_assert_eq!(psi(&psi(&q)), q.clone());
        prop_assert_eq!(psi(&q), fundamental::<i64>(&complement(&alpha)));
    }

    #[test]
    fn specialization_is_linear(q1 in arb_qsym(5), q2 in arb_qsym(5)) {
        let lhs = specialize(&q1.add(&q2), 5);
        let rhs = specialize(&q1, 5).add(&specialize(&q2, 5));
        prop_assert_eq!(lhs, rhs);
    }
}
