//! Fixed inputs for the benchmarks in `benches/`.

use diagram_core::sample::{insert_dipole, random_walk};
use diagram_core::thompson::{f_generators, x_family};
use diagram_core::{Diagram, Letter, Presentation, Word};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

pub const DUNCE: &str = "letters: x\nrule: x x = x\n";
pub const Q: &str = "letters: x a b\nrule: x x = x\nrule: a x = a\nrule: x b = b\n";
pub const COMMUTATIVE: &str = "letters: a b\nrule: a b = b a\n";

pub fn presentation(text: &str) -> Presentation {
    text.parse().expect("valid presentation")
}

/// `n` diagrams of roughly `cells` cells, half of them being cancelling
/// pairs, from a fixed seed.
pub fn unreduced_diagrams(p: &Presentation, n: usize, cells: usize, seed: u64) -> Vec<Diagram> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let len = rng.gen_range(1..=3);
            let top: Word = (0..len).map(|_| Letter(rng.gen_range(0..p.rank() as u32))).collect();
            let mut d = random_walk(p, &top, cells / 2, 2 * cells, &mut rng);
            for _ in 0..cells / 4 {
                d = insert_dipole(p, &d, 2 * cells, &mut rng);
            }
            d
        })
        .collect()
}

/// Reduced `x₀ … x_n` over the Dunce hat; cell counts grow linearly.
pub fn thompson_family(n: usize) -> Vec<Diagram> {
    let p = presentation(DUNCE);
    let (y0, y1) = f_generators();
    x_family(&p, &y0, &y1, n).expect("valid generators")
}
