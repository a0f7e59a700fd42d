use diagram_core::canonical::reduce;
use diagram_core::thompson::{
    dunce_hat, embed_f, parse_witness, substitution_hom, verify_canonical_pair, verify_witness, EmbedOptions,
    EmbedOutcome, EmbeddingWitness,
};
use diagram_core::{Atom, Diagram, Presentation};

fn found(p: &Presentation, w: &str) -> EmbeddingWitness {
    match embed_f(p, &p.parse_word(w).unwrap(), EmbedOptions::default()).unwrap() {
        EmbedOutcome::Found(ew) => *ew,
        other => panic!("{w}: {other:?}"),
    }
}

#[test]
fn q_of_the_dunce_hat() {
    let q = dunce_hat().q_transform();
    let expected: Presentation = "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b".parse().unwrap();
    assert_eq!(q, expected);
    for w in ["a b", "a x b", "x", "a x x b"] {
        let ew = found(&q, w);
        assert!(verify_witness(&q, &ew).unwrap().pass(), "{w}");
    }
}

#[test]
fn two_letter_idempotent() {
    let p: Presentation = "letters: x y\nrule: x y x y = x y".parse().unwrap();
    let ew = found(&p, "y x y x");
    assert_eq!(p.show_word(&ew.witness.e), "xy");
    assert_eq!(p.show_word(&ew.witness.w1), "y");
    assert_eq!(p.show_word(&ew.witness.w2), "x");
    assert!(ew.witness.cert_factor.steps.is_empty());
    let back = parse_witness(&p, &ew.to_text(&p)).unwrap();
    assert_eq!(back, ew);
    assert!(verify_witness(&p, &back).unwrap().pass());
}

#[test]
fn substituted_generators_stay_canonical() {
    let p: Presentation = "letters: x y\nrule: x y x y = x y".parse().unwrap();
    let cell = Diagram::new(p.parse_word("x y x y").unwrap(), vec![Atom::f(0, 0)]);
    let dunce = dunce_hat();
    let (y0, y1) = diagram_core::thompson::f_generators();
    let (s0, s1) = (substitution_hom(&p, &cell, &y0).unwrap(), substitution_hom(&p, &cell, &y1).unwrap());
    assert_eq!(reduce(&p, &s0).unwrap().cells(), reduce(&dunce, &y0).unwrap().cells());
    assert!(verify_canonical_pair(&p, &s0, &s1).unwrap().pass());
}

#[test]
fn idempotent_out_of_reach() {
    // y y = y, but no word equal to x contains y
    let p: Presentation = "letters: x y\nrule: y y = y".parse().unwrap();
    let out = embed_f(&p, &p.parse_word("x").unwrap(), EmbedOptions::default()).unwrap();
    assert!(matches!(out, EmbedOutcome::NotFound { absent: false, .. }), "{out:?}");
}
