mod common;

use dtso::model::{
    parse_instance, parse_report, serialize_instance, serialize_report, PlacementInstance,
    SchedulingInstance, SequencingInstance, SolveReport, Witness,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

proptest! {
    #[test]
    fn instances_round_trip(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let placement = common::placement(&mut rng, 8, 100);
        let back: PlacementInstance = parse_instance(serialize_instance(&placement).as_bytes()).unwrap();
        prop_assert_eq!(back, placement);

        let sequencing = common::sequencing(&mut rng, 12, 4, 5, 9);
        let back: SequencingInstance = parse_instance(serialize_instance(&sequencing).as_bytes()).unwrap();
        prop_assert_eq!(back, sequencing);

        let scheduling = common::scheduling(&mut rng, 6, 30, 20, 5);
        let back: SchedulingInstance = parse_instance(serialize_instance(&scheduling).as_bytes()).unwrap();
        prop_assert_eq!(back, scheduling);
    }

    #[test]
    fn reports_round_trip(objective in any::<i64>(), bits in prop::collection::vec(any::<bool>(), 0..6), verified in any::<Option<bool>>()) {
        let order: Vec<usize> = (1..=bits.len()).collect();
        for witness in [
            Witness::Placement { q: bits.len() + 1 },
            Witness::Sequencing { swapped: bits.clone(), order: order.clone() },
            Witness::Schedule { counts: bits.iter().map(|&b| b as i64).collect() },
        ] {
            let report = SolveReport { objective, witness, verified };
            prop_assert_eq!(parse_report(serialize_report(&report).as_bytes()).unwrap(), report);
        }
    }
}

#[test]
fn reversed_pairs_are_normalized() {
    let inst: SequencingInstance = parse_instance(
        br#"{"num_types":2,"types":[1,2,1],"d":[[0,1],[1,0]],"pairs":[[3,1]],"mode":"max"}"#,
    )
    .unwrap();
    assert_eq!((inst.pairs[0].a(), inst.pairs[0].b()), (1, 3));
}

#[test]
fn unknown_fields_are_rejected() {
    let err = parse_instance::<PlacementInstance>(br#"{"nodes":[{"x":0,"w":1}],"k":1,"extra":2}"#)
        .unwrap_err();
    assert!(matches!(err, dtso::Error::SchemaViolation { .. }));
}
