//! Dunce-hat `(x, x)`-diagrams against their action on `[0, 1]`: an
//! expanding cell halves an interval, a contracting cell joins two halves,
//! and the bottom edge ends up carrying a piecewise-linear homeomorphism.
//! Equality of diagrams must coincide with equality of these maps.

use diagram_core::canonical::{equal_diagrams, reduce};
use diagram_core::groupops::conjugate;
use diagram_core::sample::random_spherical;
use diagram_core::thompson::{dunce_hat, f_generators, x_family};
use diagram_core::{Caps, Diagram, Letter, Orient, Presentation};
use num_rational::Rational64;
use rand::rngs::StdRng;
use rand::SeedableRng;

type Q = Rational64;

fn q(n: i64, d: i64) -> Q {
    Q::new(n, d)
}

/// Breakpoints `(t, φ(t))` of an increasing PL map onto `[0, 1]`.
type Pl = Vec<(Q, Q)>;

fn preimage(f: &Pl, y: Q) -> Q {
    let k = f.windows(2).position(|w| w[0].1 <= y && y <= w[1].1).expect("value in range");
    let ((x0, y0), (x1, y1)) = (f[k], f[k + 1]);
    x0 + (y - y0) * (x1 - x0) / (y1 - y0)
}

fn value(f: &Pl, x: Q) -> Q {
    let k = f.windows(2).position(|w| w[0].0 <= x && x <= w[1].0).expect("point in domain");
    let ((x0, y0), (x1, y1)) = (f[k], f[k + 1]);
    y0 + (x - x0) * (y1 - y0) / (x1 - x0)
}

fn simplify(f: Pl) -> Pl {
    let mut out: Pl = Vec::with_capacity(f.len());
    for pt in f {
        if out.last() == Some(&pt) {
            continue;
        }
        if out.len() >= 2 {
            let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
            if (b.1 - a.1) * (pt.0 - b.0) == (pt.1 - b.1) * (b.0 - a.0) {
                out.pop();
            }
        }
        out.push(pt);
    }
    out
}

fn split(f: &Pl) -> (Pl, Pl) {
    let half = q(1, 2);
    let mid = (preimage(f, half), half);
    let mut left: Pl = f.iter().copied().filter(|p| p.1 < half).collect();
    left.push(mid);
    let mut right = vec![mid];
    right.extend(f.iter().copied().filter(|p| p.1 > half));
    let left = left.into_iter().map(|(x, y)| (x, y * 2)).collect();
    let right = right.into_iter().map(|(x, y)| (x, y * 2 - 1)).collect();
    (left, right)
}

fn join(l: &Pl, r: &Pl) -> Pl {
    let mut out: Pl = l.iter().map(|&(x, y)| (x, y / 2)).collect();
    out.extend(r.iter().skip(1).map(|&(x, y)| (x, (y + 1) / 2)));
    out
}

fn action(p: &Presentation, d: &Diagram) -> Pl {
    assert_eq!(d.top, vec![Letter(0)]);
    let mut frontier: Vec<Pl> = vec![vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1))]];
    for a in &d.atoms {
        match a.orient {
            Orient::B => {
                let (l, r) = split(&frontier[a.offset]);
                frontier.splice(a.offset..=a.offset, [l, r]);
            }
            Orient::F => {
                let joined = join(&frontier[a.offset], &frontier[a.offset + 1]);
                frontier.splice(a.offset..=a.offset + 1, [joined]);
            }
        }
    }
    assert_eq!(frontier.len(), 1, "not an (x, x)-diagram over {}", p.summary());
    simplify(frontier.pop().unwrap())
}

/// `g ∘ f`: apply `f`, then `g`.
fn then(f: &Pl, g: &Pl) -> Pl {
    let mut xs: Vec<Q> = f.iter().map(|p| p.0).collect();
    xs.extend(g.iter().map(|p| preimage(f, p.0)));
    xs.sort();
    xs.dedup();
    simplify(xs.into_iter().map(|x| (x, value(g, value(f, x)))).collect())
}

fn inverse(f: &Pl) -> Pl {
    f.iter().map(|&(x, y)| (y, x)).collect()
}

fn identity() -> Pl {
    vec![(q(0, 1), q(0, 1)), (q(1, 1), q(1, 1))]
}

fn samples(n: usize, seed: u64) -> Vec<Diagram> {
    let p = dunce_hat();
    let mut rng = StdRng::seed_from_u64(seed);
    let caps = Caps { max_word_len: 6, node_budget: 10_000 };
    (0..n).filter_map(|i| random_spherical(&p, &vec![Letter(0)], 2 + i % 7, caps, &mut rng)).collect()
}

#[test]
fn generator_actions() {
    let p = dunce_hat();
    let (y0, y1) = f_generators();
    let expect = |pts: &[(i64, i64, i64, i64)]| -> Pl { pts.iter().map(|&(a, b, c, d)| (q(a, b), q(c, d))).collect() };
    assert_eq!(action(&p, &y0), expect(&[(0, 1, 0, 1), (1, 4, 1, 2), (1, 2, 3, 4), (1, 1, 1, 1)]));
    assert_eq!(action(&p, &y1), expect(&[(0, 1, 0, 1), (1, 2, 1, 2), (5, 8, 3, 4), (3, 4, 7, 8), (1, 1, 1, 1)]));
}

#[test]
fn composition_is_functional() {
    let p = dunce_hat();
    let ds = samples(120, 5);
    for pair in ds.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        let composite = action(&p, &a.compose(&p, b).unwrap());
        assert_eq!(composite, then(&action(&p, a), &action(&p, b)));
        assert_eq!(action(&p, &a.inverse(&p).unwrap()), inverse(&action(&p, a)));
    }
}

#[test]
fn reduction_preserves_the_action() {
    let p = dunce_hat();
    for d in samples(300, 6) {
        assert_eq!(action(&p, &reduce(&p, &d).unwrap()), action(&p, &d), "{}", d.display(&p));
    }
}

#[test]
fn equality_matches_the_action() {
    let p = dunce_hat();
    let ds = samples(80, 7);
    let actions: Vec<Pl> = ds.iter().map(|d| action(&p, d)).collect();
    let mut equal = 0;
    for i in 0..ds.len() {
        assert_eq!(reduce(&p, &ds[i]).unwrap().is_trivial(), actions[i] == identity());
        for j in 0..i {
            let same = equal_diagrams(&p, &ds[i], &ds[j]).unwrap();
            assert_eq!(same, actions[i] == actions[j], "{} vs {}", ds[i].display(&p), ds[j].display(&p));
            equal += usize::from(same);
        }
    }
    assert!(equal > 0);
}

#[test]
fn f_relations_hold_for_the_maps() {
    // computed purely with maps: x_{i+1} = x0⁻¹ x_i x0, then x_j^{x_i} = x_{j+1}
    let p = dunce_hat();
    let (y0, y1) = f_generators();
    let conj = |f: &Pl, g: &Pl| then(&then(&inverse(g), f), g);
    let mut xs = vec![action(&p, &y0), action(&p, &y1)];
    for i in 1..6 {
        let next = conj(&xs[i], &xs[0]);
        xs.push(next);
    }
    for j in 1..6 {
        for i in 0..j {
            assert_eq!(conj(&xs[j], &xs[i]), xs[j + 1], "x{j}^x{i}");
        }
    }
    assert_ne!(then(&xs[0], &xs[1]), then(&xs[1], &xs[0]));

    // and they agree with the diagrams
    let family = x_family(&p, &y0, &y1, 6).unwrap();
    for (d, f) in family.iter().zip(&xs) {
        assert_eq!(&action(&p, d), f);
    }
    assert_eq!(action(&p, &conjugate(&p, &family[3], &family[1]).unwrap()), xs[4]);
}
