use biqp_core::oracle::{naive_bi_cover, naive_cover, sweep_classify, SweepConfig};
use biqp_core::quasiperiods::bi_word_from_spans;
use biqp_core::{
    classify, derivated_sequence, is_quasiperiod_bi, is_quasiperiod_finite, overlaps,
    quasiperiods_of_length, BiWord, CoupleKind, Word,
};
use proptest::prelude::*;

fn word(max: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec(0usize..2, 1..=max).prop_map(|v| Word::from_indices(&v))
}

fn biword() -> impl Strategy<Value = BiWord> {
    (
        word(5),
        proptest::collection::vec(0usize..2, 0..=6),
        word(5),
    )
        .prop_map(|(l, c, r)| BiWord::new(l, Word::from_indices(&c), r).unwrap())
}

fn couple() -> impl Strategy<Value = (Word, Word)> {
    (1usize..=7).prop_flat_map(|n| {
        let w = proptest::collection::vec(0usize..2, n).prop_map(|v| Word::from_indices(&v));
        (w.clone(), w)
    })
}

proptest! {
    #[test]
    fn biinfinite_coverage_matches_oracle(b in biword(), q in word(6)) {
        prop_assert_eq!(is_quasiperiod_bi(&q, &b), naive_bi_cover(&q, &b, 6));
    }

    #[test]
    fn finite_coverage_matches_oracle(q in word(4), w in word(14)) {
        prop_assume!(q.len() <= w.len());
        prop_assert_eq!(is_quasiperiod_finite(&q, &w), naive_cover(&q, &w));
    }

    #[test]
    fn listed_quasiperiods_have_bounded_gaps(b in biword(), n in 1usize..=6) {
        for q in quasiperiods_of_length(&b, n) {
            let d = derivated_sequence(&b, &q).unwrap();
            prop_assert!(d.max_gap() <= n);
        }
    }

    #[test]
    fn classification_agrees_with_span_witnesses((q, r) in couple()) {
        prop_assume!(q != r);
        let kind = classify(&q, &r).unwrap().kind;
        let spans = overlaps::border_spans(&q).unwrap();
        let mut words = Vec::new();
        for &m in &spans {
            words.push(bi_word_from_spans(&q, &[m]).unwrap());
            for &n in &spans {
                words.push(bi_word_from_spans(&q, &[m, n]).unwrap());
            }
        }
        let with_r = words.iter().filter(|b| is_quasiperiod_bi(&r, b)).count();
        match kind {
            CoupleKind::Incompatible => prop_assert_eq!(with_r, 0),
            CoupleKind::ImpliesQuasiperiodicity => prop_assert_eq!(with_r, words.len()),
            CoupleKind::CompatibleOnly => prop_assert!(with_r > 0 && with_r < words.len()),
        }
    }
}

#[test]
fn sweeps_are_deterministic() {
    let cfg = SweepConfig {
        max_len: 4,
        ..SweepConfig::default()
    };
    assert_eq!(sweep_classify(&cfg), sweep_classify(&cfg));
}
