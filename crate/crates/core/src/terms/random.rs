//! Seeded random terms for randomized cross-checks.
//!
//! [`random_term`] draws arbitrary terms; [`equivalent_variant`] rewrites a
//! term with identities of left-handed SBIAs so that the result denotes the
//! same element, which gives test suites a steady supply of equal pairs.

use rand::Rng;

use super::{Op, Term};

const OPS: [Op; 4] = [Op::Meet, Op::Join, Op::Diff, Op::Isect];

/// A random term over `x1 … xn` of depth at most `max_depth`.
pub fn random_term<R: Rng + ?Sized>(rng: &mut R, n: u32, max_depth: usize) -> Term {
    if max_depth == 0 || rng.gen_bool(0.25) {
        return leaf(rng, n);
    }
    let op = OPS[rng.gen_range(0..OPS.len())];
    let lhs = random_term(rng, n, max_depth - 1);
    let rhs = random_term(rng, n, max_depth - 1);
    Term::binary(op, lhs, rhs)
}

fn leaf<R: Rng + ?Sized>(rng: &mut R, n: u32) -> Term {
    if rng.gen_ratio(1, 12) {
        Term::Zero
    } else {
        Term::Var(rng.gen_range(1..=n))
    }
}

/// Applies `steps` random identity-preserving rewrites to `term`.
pub fn equivalent_variant<R: Rng + ?Sized>(rng: &mut R, term: &Term, n: u32, steps: usize) -> Term {
    let mut t = term.clone();
    for _ in 0..steps {
        t = rewrite_somewhere(rng, t, n);
    }
    t
}

fn rewrite_somewhere<R: Rng + ?Sized>(rng: &mut R, t: Term, n: u32) -> Term {
    match t {
        Term::Zero | Term::Var(_) => rewrite_here(rng, t, n),
        _ if rng.gen_bool(0.35) => rewrite_here(rng, t, n),
        Term::Meet(l, r) => descend(rng, Op::Meet, *l, *r, n),
        Term::Join(l, r) => descend(rng, Op::Join, *l, *r, n),
        Term::Diff(l, r) => descend(rng, Op::Diff, *l, *r, n),
        Term::Isect(l, r) => descend(rng, Op::Isect, *l, *r, n),
    }
}

fn descend<R: Rng + ?Sized>(rng: &mut R, op: Op, l: Term, r: Term, n: u32) -> Term {
    if rng.gen_bool(0.5) {
        Term::binary(op, rewrite_somewhere(rng, l, n), r)
    } else {
        Term::binary(op, l, rewrite_somewhere(rng, r, n))
    }
}

// One identity step at the root; falls back to a generic identity when the
// chosen structural rule does not match.
fn rewrite_here<R: Rng + ?Sized>(rng: &mut R, t: Term, n: u32) -> Term {
    use Term::*;
    let structural = match (rng.gen_range(0..7), t.clone()) {
        // x ∧ y ∧ z = x ∧ z ∧ y
        (0, Meet(xy, z)) => match *xy {
            Meet(x, y) => Some(x.meet(*z).meet(*y)),
            other => Some(other.meet(*z)),
        },
        // x ∧ (y ∧ z) = (x ∧ y) ∧ z
        (1, Meet(x, yz)) => match *yz {
            Meet(y, z) => Some(x.meet(*y).meet(*z)),
            other => Some(x.meet(other)),
        },
        // x ⊓ y = y ⊓ x
        (2, Isect(x, y)) => Some(y.isect(*x)),
        // y ∨ x = x ∨ y ∨ x
        (3, Join(y, x)) => Some((*x).clone().join(*y).join(*x)),
        // (x ∨ y) ⊓ z = (x ⊓ z) ∨ (y ⊓ z)
        (4, Isect(xy, z)) => match *xy {
            Join(x, y) => Some(x.isect((*z).clone()).join(y.isect(*z))),
            other => Some(other.isect(*z)),
        },
        // x ∖ (y ∨ z) = (x ∖ y) ∖ z
        (5, Diff(x, yz)) => match *yz {
            Join(y, z) => Some(x.diff(*y).diff(*z)),
            other => Some(x.diff(other)),
        },
        // x ∧ y = x ∧ y ∧ x
        (6, Meet(x, y)) => Some((*x).clone().meet(*y).meet(*x)),
        _ => None,
    };
    if let Some(s) = structural {
        return s;
    }
    match rng.gen_range(0..5) {
        // x = (x ∧ s) ∨ (x ∖ s)
        0 => {
            let s = random_term(rng, n, 2);
            t.clone().meet(s.clone()).join(t.diff(s))
        }
        1 => t.clone().meet(t),
        2 => t.clone().isect(t),
        3 => Term::Zero.join(t),
        _ => t.diff(Term::Zero),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn random_terms_respect_bounds() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t = random_term(&mut rng, 3, 5);
            assert!(t.depth() <= 5);
            assert!(t.variables().iter().all(|&i| (1..=3).contains(&i)));
        }
    }
}
