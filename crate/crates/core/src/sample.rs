//! Random diagrams for tests and benchmarks.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::diagram::{Atom, Diagram};
use crate::presentation::{Letter, Orient, Presentation, Word};
use crate::rewrite::{reachable_where, Caps, SearchOutcome};

/// Every atom applicable to `w` whose result has at most `max_len` letters,
/// in `(offset, rel, orient)` order.
pub fn applicable_atoms(p: &Presentation, w: &[Letter], max_len: usize) -> Vec<Atom> {
    let mut out = Vec::new();
    for offset in 0..w.len() {
        for rel in 0..p.relations.len() {
            for orient in [Orient::F, Orient::B] {
                let a = Atom { offset, rel, orient };
                if a.applies_to(p, w) && (w.len() as isize + a.delta(p)) as usize <= max_len {
                    out.push(a);
                }
            }
        }
    }
    out
}

/// A random `(top, ·)`-diagram of up to `steps` cells, keeping every
/// intermediate word within `max_len` letters.
pub fn random_walk(p: &Presentation, top: &Word, steps: usize, max_len: usize, rng: &mut impl Rng) -> Diagram {
    let mut w = top.clone();
    let mut atoms = Vec::with_capacity(steps);
    for _ in 0..steps {
        let Some(&a) = applicable_atoms(p, &w, max_len).choose(rng) else {
            break;
        };
        w = a.apply(p, &w).expect("applicable atom");
        atoms.push(a);
    }
    Diagram { top: top.clone(), atoms }
}

/// A random spherical diagram over `base`: a random walk followed by the
/// shortest derivation back to `base`. `None` if the return trip is not
/// found within `caps`.
pub fn random_spherical(
    p: &Presentation,
    base: &Word,
    steps: usize,
    caps: Caps,
    rng: &mut impl Rng,
) -> Option<Diagram> {
    let mut d = random_walk(p, base, steps, caps.max_word_len, rng);
    let end = d.bottom(p).ok()?;
    match reachable_where(p, &end, caps, |w| (w == base.as_slice()).then_some(())) {
        SearchOutcome::Found((), back) => {
            d.atoms.extend(back.steps);
            Some(d)
        }
        _ => None,
    }
}

/// Inserts a cancelling pair `a, a⁻¹` at a random position. The result is
/// equal to `d` in the diagram group.
pub fn insert_dipole(p: &Presentation, d: &Diagram, max_len: usize, rng: &mut impl Rng) -> Diagram {
    let words = d.words(p).expect("valid diagram");
    let mut slots: Vec<usize> = (0..words.len()).collect();
    slots.shuffle(rng);
    for k in slots {
        if let Some(&a) = applicable_atoms(p, &words[k], max_len).choose(rng) {
            let mut atoms = d.atoms.clone();
            atoms.splice(k..k, [a, a.mirror()]);
            return Diagram { top: d.top.clone(), atoms };
        }
    }
    d.clone()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canonical::equal_diagrams;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn spherical_samples_close_up() {
        let p: Presentation = "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b".parse().unwrap();
        let base = p.parse_word("a b").unwrap();
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..20 {
            let d = random_spherical(&p, &base, 6, Caps { max_word_len: 10, node_budget: 50_000 }, &mut rng).unwrap();
            assert!(d.is_spherical(&p).unwrap());
            let e = insert_dipole(&p, &d, 10, &mut rng);
            assert_eq!(e.cells(), d.cells() + 2);
            assert!(equal_diagrams(&p, &d, &e).unwrap());
        }
    }
}
