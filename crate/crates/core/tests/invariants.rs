use diagram_core::canonical::{equal_diagrams, find_dipoles, is_reduced, normal_form, reduce, swap_adjacent};
use diagram_core::sample::{insert_dipole, random_spherical, random_walk};
use diagram_core::{Caps, Diagram, Letter, Presentation, Word};
use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

fn presentations() -> Vec<Presentation> {
    [
        "letters: x\nrule: x x = x",
        "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b",
        "letters: a b\nrule: a b = b a",
        "letters: a b c\nrule: a b = c\nrule: c c = a",
    ]
    .iter()
    .map(|t| t.parse().unwrap())
    .collect()
}

fn sample(p: &Presentation, seed: u64, max_cells: usize) -> Diagram {
    let mut rng = StdRng::seed_from_u64(seed);
    let len = rng.gen_range(1..=3);
    let top: Word = (0..len).map(|_| Letter(rng.gen_range(0..p.rank() as u32))).collect();
    let mut d = random_walk(p, &top, rng.gen_range(0..=max_cells), 6, &mut rng);
    for _ in 0..rng.gen_range(0..=2) {
        d = insert_dipole(p, &d, 6, &mut rng);
    }
    d
}

fn pick() -> impl Strategy<Value = (usize, u64)> {
    (0..presentations().len(), any::<u64>())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn euler_characteristic_is_one((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 10);
        let g = d.realize(p).unwrap();
        prop_assert_eq!(g.euler_characteristic(), 1);
        prop_assert_eq!(g.label(&g.bottom), d.bottom(p).unwrap());
    }

    #[test]
    fn text_round_trip((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 10);
        prop_assert_eq!(Diagram::parse(p, &d.to_text(p)).unwrap(), d);
    }

    #[test]
    fn inverse_is_an_involution((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 10);
        let inv = d.inverse(p).unwrap();
        prop_assert_eq!(inv.top.clone(), d.bottom(p).unwrap());
        prop_assert_eq!(inv.inverse(p).unwrap(), d.clone());
        let loop_ = reduce(p, &d.compose(p, &inv).unwrap()).unwrap();
        prop_assert!(loop_.is_trivial());
    }

    #[test]
    fn reduce_is_idempotent_and_reduced((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 10);
        let r = reduce(p, &d).unwrap();
        prop_assert!(is_reduced(p, &r).unwrap());
        prop_assert!(find_dipoles(p, &r).unwrap().is_empty());
        prop_assert_eq!(reduce(p, &r).unwrap(), r.clone());
        prop_assert_eq!(normal_form(p, &r).unwrap(), r.clone());
        prop_assert_eq!(r.bottom(p).unwrap(), d.bottom(p).unwrap());
        prop_assert_eq!((d.cells() - r.cells()) % 2, 0);
    }

    #[test]
    fn normal_form_ignores_interchange((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 10);
        let nf = normal_form(p, &d).unwrap();
        let mut rng = StdRng::seed_from_u64(seed ^ 0x9e37);
        let mut cur = d.clone();
        for _ in 0..20 {
            if cur.cells() < 2 {
                break;
            }
            if let Ok(next) = swap_adjacent(p, &cur, rng.gen_range(0..cur.cells() - 1)) {
                prop_assert_eq!(next.bottom(p).unwrap(), cur.bottom(p).unwrap());
                cur = next;
            }
        }
        prop_assert_eq!(normal_form(p, &cur).unwrap(), nf);
    }

    #[test]
    fn dipole_insertion_is_invisible((k, seed) in pick()) {
        let p = &presentations()[k];
        let d = sample(p, seed, 8);
        let mut rng = StdRng::seed_from_u64(seed.rotate_left(17));
        let e = insert_dipole(p, &d, 6, &mut rng);
        prop_assert!(equal_diagrams(p, &d, &e).unwrap());
        prop_assert_eq!(reduce(p, &d).unwrap(), reduce(p, &e).unwrap());
    }

    #[test]
    fn sum_and_compose_interchange((k, seed) in pick()) {
        // (a ∘ b) + (c ∘ d) = (a + c) ∘ (b + d)
        let p = &presentations()[k];
        let a = sample(p, seed, 4);
        let c = sample(p, seed.wrapping_add(1), 4);
        let mut rng = StdRng::seed_from_u64(seed);
        let b = random_walk(p, &a.bottom(p).unwrap(), 3, 6, &mut rng);
        let d = random_walk(p, &c.bottom(p).unwrap(), 3, 6, &mut rng);
        let lhs = a.compose(p, &b).unwrap().sum(p, &c.compose(p, &d).unwrap()).unwrap();
        let rhs = a.sum(p, &c).unwrap().compose(p, &b.sum(p, &d).unwrap()).unwrap();
        prop_assert_eq!(normal_form(p, &lhs).unwrap(), normal_form(p, &rhs).unwrap());
    }

    #[test]
    fn spherical_samples_are_spherical((k, seed) in pick()) {
        let p = &presentations()[k];
        let mut rng = StdRng::seed_from_u64(seed);
        let base = sample(p, seed, 0).top;
        if let Some(d) = random_spherical(p, &base, 5, Caps { max_word_len: 8, node_budget: 20_000 }, &mut rng) {
            prop_assert!(d.is_spherical(p).unwrap());
        }
    }

    #[test]
    fn presentation_round_trip((k, _seed) in pick()) {
        let p = &presentations()[k];
        let text = p.to_string();
        let back: Presentation = text.parse().unwrap();
        prop_assert_eq!(&back, p);
        prop_assert_eq!(back.to_string(), text);
        prop_assert_eq!(back.fingerprint(), p.fingerprint());
    }
}
