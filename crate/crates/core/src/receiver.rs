//! Receiver best responses, indifference polytopes, and the sender's
//! indirect utility correspondence over receiver beliefs.

use std::collections::BTreeSet;

use num::{One, Zero};

use crate::exact::{maximize, Lp, Rat};
use crate::game::{Belief, Game};

/// Best responses to unnormalized nonnegative belief weights. The argmax is
/// invariant to positive scaling, which lets candidate solving work on raw
/// message weights.
pub fn best_responses_weighted(g: &Game, weights: &[Rat]) -> (BTreeSet<usize>, Rat) {
    assert_eq!(weights.len(), g.n_states());
    let mut best: Option<Rat> = None;
    let mut arg = BTreeSet::new();
    for a in 0..g.n_actions() {
        let v: Rat = weights
            .iter()
            .enumerate()
            .map(|(s, w)| w * &g.receiver_utility[a][s])
            .sum();
        match &best {
            Some(b) if &v < b => {}
            Some(b) if &v == b => {
                arg.insert(a);
            }
            _ => {
                best = Some(v);
                arg = BTreeSet::from([a]);
            }
        }
    }
    (arg, best.unwrap())
}

/// Pure best responses to a belief and the receiver's attained value. Mixed
/// best responses are exactly the mixtures over this set.
pub fn best_responses(g: &Game, nu: &Belief) -> (BTreeSet<usize>, Rat) {
    best_responses_weighted(g, nu.weights())
}

/// The set of beliefs making the receiver willing to randomize over a given
/// action set, as a symbolic H-representation over unnormalized weights:
/// equalities tie consecutive actions of the set, dominance inequalities
/// make the set weakly beat every outside action.
#[derive(Debug, Clone)]
pub struct IndifferenceSet {
    pub action_set: BTreeSet<usize>,
    /// Rows of state coefficients that must evaluate to zero.
    pub equalities: Vec<Vec<Rat>>,
    /// Rows of state coefficients that must evaluate nonnegative.
    pub dominance: Vec<Vec<Rat>>,
}

impl IndifferenceSet {
    /// Exact membership test for a belief (or unnormalized weights).
    pub fn contains_weights(&self, weights: &[Rat]) -> bool {
        let eval = |row: &Vec<Rat>| -> Rat {
            row.iter().zip(weights).map(|(c, w)| c * w).sum()
        };
        self.equalities.iter().all(|row| eval(row).is_zero())
            && self.dominance.iter().all(|row| !eval(row) .is_negative())
    }

    pub fn contains(&self, nu: &Belief) -> bool {
        self.contains_weights(nu.weights())
    }
}

use num::Signed;

/// Build the indifference polytope for action set `a_set`.
pub fn indifference_set(g: &Game, a_set: &BTreeSet<usize>) -> IndifferenceSet {
    assert!(!a_set.is_empty(), "action set must be nonempty");
    let actions: Vec<usize> = a_set.iter().copied().collect();
    let diff_row = |x: usize, y: usize| -> Vec<Rat> {
        (0..g.n_states())
            .map(|s| &g.receiver_utility[x][s] - &g.receiver_utility[y][s])
            .collect()
    };
    let equalities = actions.windows(2).map(|w| diff_row(w[0], w[1])).collect();
    let rep = actions[0];
    let dominance = (0..g.n_actions())
        .filter(|a| !a_set.contains(a))
        .map(|a| diff_row(rep, a))
        .collect();
    IndifferenceSet { action_set: a_set.clone(), equalities, dominance }
}

/// The sender's indirect utility interval at a belief: the range of
/// transparent payoffs over the receiver's best responses to it.
pub fn indirect_utility(g: &Game, nu: &Belief, message: usize) -> (Rat, Rat) {
    let (br, _) = best_responses(g, nu);
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for a in br {
        let v = g.u0(a, message).clone();
        if lo.as_ref().is_none_or(|l| &v < l) {
            lo = Some(v.clone());
        }
        if hi.as_ref().is_none_or(|h| &v > h) {
            hi = Some(v);
        }
    }
    (lo.unwrap(), hi.unwrap())
}

/// Actions that are a best response to at least one belief.
pub fn ever_best_responses(g: &Game) -> BTreeSet<usize> {
    (0..g.n_actions()).filter(|&a| is_ever_best(g, a)).collect()
}

fn is_ever_best(g: &Game, a: usize) -> bool {
    let n = g.n_states();
    let a_eq = vec![vec![Rat::one(); n]];
    let b_eq = vec![Rat::one()];
    let mut a_ge = Vec::new();
    let mut b_ge = Vec::new();
    for other in 0..g.n_actions() {
        if other == a {
            continue;
        }
        a_ge.push(
            (0..n)
                .map(|s| &g.receiver_utility[a][s] - &g.receiver_utility[other][s])
                .collect(),
        );
        b_ge.push(Rat::zero());
    }
    crate::exact::feasible(&a_eq, &b_eq, &a_ge, &b_ge, n).is_some()
}

/// `min` over beliefs of the upper selection of the indirect utility for one
/// message: the lowest payoff the receiver's most favourable best response
/// can be pushed to by an adversarial belief.
///
/// Equals the least `u0(a, m)` over actions `a` admitting a belief where `a`
/// is a best response and nothing with a higher payoff is; decided by exact
/// LP with a strictness variable.
pub fn min_max_indirect(g: &Game, message: usize) -> Rat {
    let mut order: Vec<usize> = (0..g.n_actions()).collect();
    order.sort_by(|&x, &y| g.u0(x, message).cmp(g.u0(y, message)));
    for &a in &order {
        if top_selection_reaches(g, a, message) {
            return g.u0(a, message).clone();
        }
    }
    unreachable!("some action is always a best response")
}

/// Is there a belief where `a` is a best response and every action with a
/// strictly higher transparent payoff is strictly beaten?
fn top_selection_reaches(g: &Game, a: usize, message: usize) -> bool {
    let n = g.n_states();
    // Variables: belief weights plus a strictness slack t; maximize t.
    let mut c = vec![Rat::zero(); n + 1];
    c[n] = Rat::one();
    let mut a_eq = vec![vec![Rat::one(); n]];
    a_eq[0].push(Rat::zero());
    let b_eq = vec![Rat::one()];
    let mut a_ge = Vec::new();
    let mut b_ge = Vec::new();
    let ua = g.u0(a, message);
    let mut any_strict = false;
    for other in 0..g.n_actions() {
        if other == a {
            continue;
        }
        let mut row: Vec<Rat> = (0..n)
            .map(|s| &g.receiver_utility[a][s] - &g.receiver_utility[other][s])
            .collect();
        if g.u0(other, message) > ua {
            row.push(-Rat::one());
            any_strict = true;
        } else {
            row.push(Rat::zero());
        }
        a_ge.push(row);
        b_ge.push(Rat::zero());
    }
    // Cap t to keep the program bounded.
    let mut cap = vec![Rat::zero(); n];
    cap.push(-Rat::one());
    a_ge.push(cap);
    b_ge.push(-Rat::one());
    match maximize(&c, &a_eq, &b_eq, &a_ge, &b_ge) {
        Lp::Optimal { value, .. } => {
            if any_strict {
                value.is_positive()
            } else {
                true
            }
        }
        Lp::Infeasible => false,
        Lp::Unbounded => true,
    }
}

/// The off-path temptation bound: the largest payoff a deviating sender can
/// be guaranteed across messages when the receiver answers each with its
/// least favourable supporting belief. Trivial (the minimum over one shared
/// column) for cheap talk.
pub fn off_path_bound(g: &Game) -> Rat {
    if g.cheap_talk {
        return min_max_indirect(g, 0);
    }
    (0..g.n_messages())
        .map(|m| min_max_indirect(g, m))
        .max()
        .expect("games have at least one message")
}

/// A belief minimizing the deviation payoff of `message`, used as the
/// default off-path belief: the witness belief from [`min_max_indirect`]'s
/// optimal action, recovered by solving for that action's region.
pub fn pessimistic_belief(g: &Game, message: usize) -> Belief {
    let bound = min_max_indirect(g, message);
    let n = g.n_states();
    for a in 0..g.n_actions() {
        if g.u0(a, message) != &bound {
            continue;
        }
        if !top_selection_reaches(g, a, message) {
            continue;
        }
        // Re-solve the region LP and take its belief.
        let mut c = vec![Rat::zero(); n + 1];
        c[n] = Rat::one();
        let mut a_eq = vec![vec![Rat::one(); n]];
        a_eq[0].push(Rat::zero());
        let b_eq = vec![Rat::one()];
        let mut a_ge = Vec::new();
        let mut b_ge = Vec::new();
        for other in 0..g.n_actions() {
            if other == a {
                continue;
            }
            let mut row: Vec<Rat> = (0..n)
                .map(|s| &g.receiver_utility[a][s] - &g.receiver_utility[other][s])
                .collect();
            row.push(if g.u0(other, message) > &bound { -Rat::one() } else { Rat::zero() });
            a_ge.push(row);
            b_ge.push(Rat::zero());
        }
        let mut cap = vec![Rat::zero(); n];
        cap.push(-Rat::one());
        a_ge.push(cap);
        b_ge.push(-Rat::one());
        if let Lp::Optimal { x, .. } = maximize(&c, &a_eq, &b_eq, &a_ge, &b_ge) {
            return Belief::new(x[..n].to_vec()).expect("LP solution lies on the simplex");
        }
    }
    unreachable!("min_max_indirect always has a witness action")
}
