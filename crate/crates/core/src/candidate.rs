//! Candidate equilibria of the transparent game: exact solving per acyclic
//! communication shape, exhaustive enumeration, verification, persuasion,
//! and informational equivalence.

use std::collections::{BTreeMap, BTreeSet};

use num::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::exact::{fmt_rat, solve_linear, LinSolve, Rat};
use crate::game::{Belief, Finding, Game, MixedAction, ValidationReport};
use crate::graph::{CommGraph, GraphClass, PiNode};
use crate::receiver::{
    best_responses, best_responses_weighted, indifference_set, off_path_bound, pessimistic_belief,
};

#[derive(Debug, Error)]
pub enum SolveError {
    #[error("shape does not span the game's states")]
    StateMismatch,
    #[error("shape is not acyclic")]
    NotAcyclic,
    #[error("shape is not a tree")]
    NotATree,
    #[error("transparent sender utility is not injective across pure actions; persuasive search refused")]
    SenderNotInjective,
    #[error("shape binds more messages than the game declares")]
    TooManyMessages,
}

/// A candidate equilibrium: sender strategy, receiver beliefs and mixed
/// actions per on-path message, the common sender utility, and the
/// communication graph with actions bound to its message nodes.
#[derive(Debug, Clone, PartialEq)]
pub struct CandidateEquilibrium {
    /// Game message labels in use, aligned with the columns of
    /// `sender_strategy` and the entries of `beliefs`/`receiver_actions`.
    pub on_path_messages: Vec<String>,
    /// `sender_strategy[state][j]` is the probability the sender sends
    /// `on_path_messages[j]` in that state.
    pub sender_strategy: Vec<Vec<Rat>>,
    pub beliefs: Vec<Belief>,
    pub receiver_actions: Vec<MixedAction>,
    pub u_bar: Rat,
    pub graph: CommGraph,
    pub off_path_beliefs: BTreeMap<String, Belief>,
}

impl CandidateEquilibrium {
    /// Total probability that each on-path message is sent.
    pub fn message_weights(&self, g: &Game) -> Vec<Rat> {
        (0..self.on_path_messages.len())
            .map(|j| {
                (0..g.n_states())
                    .map(|s| g.prior.weight(s) * &self.sender_strategy[s][j])
                    .sum()
            })
            .collect()
    }

    /// The distribution of posteriors this equilibrium induces, as sorted
    /// (belief, weight) pairs with zero-weight messages dropped.
    pub fn posterior_distribution(&self, g: &Game) -> Vec<(Belief, Rat)> {
        let weights = self.message_weights(g);
        let mut out: Vec<(Belief, Rat)> = self
            .beliefs
            .iter()
            .cloned()
            .zip(weights)
            .filter(|(_, w)| w.is_positive())
            .collect();
        out.sort();
        // Merge coincident posteriors.
        let mut merged: Vec<(Belief, Rat)> = Vec::new();
        for (b, w) in out {
            match merged.last_mut() {
                Some((prev, pw)) if *prev == b => *pw += w,
                _ => merged.push((b, w)),
            }
        }
        merged
    }
}

/// Supports assigned to the message nodes of a shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeSupport {
    Pure(usize),
    /// `(lo, hi)` with `u0(lo) < u_bar < u0(hi)`.
    Binary(usize, usize),
}

/// A consistent affine family of solutions found for one support
/// assignment; reported instead of sampling from it.
#[derive(Debug, Clone)]
pub struct ContinuumFlag {
    pub pure_message: Option<String>,
    pub dimension: usize,
}

#[derive(Debug, Clone, Default)]
pub struct SolveOutcome {
    pub equilibria: Vec<CandidateEquilibrium>,
    pub continua: Vec<ContinuumFlag>,
}

fn sender_injective(g: &Game) -> bool {
    for a in 0..g.n_actions() {
        for b in 0..g.n_actions() {
            if a == b {
                continue;
            }
            for m in 0..g.n_messages() {
                for m2 in 0..g.n_messages() {
                    if g.u0(a, m) == g.u0(b, m2) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Solve one spanning tree shape exactly.
pub fn solve_tree(g: &Game, shape: &CommGraph) -> Result<SolveOutcome, SolveError> {
    if shape.classify() != GraphClass::Tree {
        return Err(SolveError::NotATree);
    }
    solve_acyclic(g, shape)
}

/// Solve any acyclic shape (tree or forest). Forest solving extends the
/// tree method per component: a single pure node pins the common utility
/// and every all-binary component contributes an overdetermined system,
/// which is why generic games admit no persuasive forest solutions.
pub fn solve_acyclic(g: &Game, shape: &CommGraph) -> Result<SolveOutcome, SolveError> {
    if shape.states != g.states {
        return Err(SolveError::StateMismatch);
    }
    if !shape.classify().is_acyclic() {
        return Err(SolveError::NotAcyclic);
    }
    if shape.n_nodes() > g.n_messages() {
        return Err(SolveError::TooManyMessages);
    }
    if !sender_injective(g) {
        return Err(SolveError::SenderNotInjective);
    }

    // Bind anonymous shape nodes to game message labels in declaration
    // order. Cheap talk makes the binding irrelevant; signalling games get
    // the canonical one.
    let bound: Vec<usize> = (0..shape.n_nodes()).collect();

    let mut outcome = SolveOutcome::default();
    for pure_node in pure_node_order(shape) {
        for a0 in 0..g.n_actions() {
            let u_bar = g.u0(a0, bound[pure_node]).clone();
            let mut assignment: Vec<Option<NodeSupport>> = vec![None; shape.n_nodes()];
            assignment[pure_node] = Some(NodeSupport::Pure(a0));
            assign_binaries(
                g,
                shape,
                &bound,
                &u_bar,
                pure_node,
                0,
                &mut assignment,
                &mut outcome,
            );
        }
    }
    Ok(outcome)
}

/// Pure-node candidates: nodes adjacent to a leaf state first, then the
/// rest, each in index order.
fn pure_node_order(shape: &CommGraph) -> Vec<usize> {
    let leaf_states: BTreeSet<usize> = (0..shape.n_states())
        .filter(|&s| shape.nodes_of_state(s).len() == 1)
        .collect();
    let (near_leaf, rest): (Vec<usize>, Vec<usize>) = (0..shape.n_nodes())
        .partition(|&n| shape.states_of_node(n).iter().any(|s| leaf_states.contains(s)));
    near_leaf.into_iter().chain(rest).collect()
}

#[allow(clippy::too_many_arguments)]
fn assign_binaries(
    g: &Game,
    shape: &CommGraph,
    bound: &[usize],
    u_bar: &Rat,
    pure_node: usize,
    next: usize,
    assignment: &mut Vec<Option<NodeSupport>>,
    outcome: &mut SolveOutcome,
) {
    if next == shape.n_nodes() {
        solve_assignment(g, shape, bound, u_bar, assignment, outcome);
        return;
    }
    if next == pure_node {
        assign_binaries(g, shape, bound, u_bar, pure_node, next + 1, assignment, outcome);
        return;
    }
    let msg = bound[next];
    for i in 0..g.n_actions() {
        for j in i + 1..g.n_actions() {
            let (lo, hi) = if g.u0(i, msg) < g.u0(j, msg) { (i, j) } else { (j, i) };
            if g.u0(lo, msg) < u_bar && u_bar < g.u0(hi, msg) {
                assignment[next] = Some(NodeSupport::Binary(lo, hi));
                assign_binaries(g, shape, bound, u_bar, pure_node, next + 1, assignment, outcome);
                assignment[next] = None;
            }
        }
    }
}

fn solve_assignment(
    g: &Game,
    shape: &CommGraph,
    bound: &[usize],
    u_bar: &Rat,
    assignment: &[Option<NodeSupport>],
    outcome: &mut SolveOutcome,
) {
    // Variables are the edge weights w[state, node] in sorted edge order.
    let edges: Vec<(usize, usize)> = shape.edges.iter().copied().collect();
    let var_of: BTreeMap<(usize, usize), usize> =
        edges.iter().enumerate().map(|(i, &e)| (e, i)).collect();
    let mut a = Vec::new();
    let mut b = Vec::new();
    // Each state's outgoing weights sum to its prior mass.
    for s in 0..shape.n_states() {
        let mut row = vec![Rat::zero(); edges.len()];
        for n in shape.nodes_of_state(s) {
            row[var_of[&(s, n)]] = Rat::one();
        }
        a.push(row);
        b.push(g.prior.weight(s).clone());
    }
    // Receiver indifference at each binary node, linear in the weights.
    for (n, support) in assignment.iter().enumerate() {
        if let Some(NodeSupport::Binary(lo, hi)) = support {
            let mut row = vec![Rat::zero(); edges.len()];
            for s in shape.states_of_node(n) {
                row[var_of[&(s, n)]] =
                    &g.receiver_utility[*lo][s] - &g.receiver_utility[*hi][s];
            }
            a.push(row);
            b.push(Rat::zero());
        }
    }

    let w = match solve_linear(&a, &b) {
        LinSolve::Infeasible => return,
        LinSolve::Underdetermined { nullity, .. } => {
            let pure_message = assignment.iter().enumerate().find_map(|(n, sup)| {
                matches!(sup, Some(NodeSupport::Pure(_))).then(|| g.messages[bound[n]].clone())
            });
            outcome.continua.push(ContinuumFlag { pure_message, dimension: nullity });
            return;
        }
        LinSolve::Unique(w) => w,
    };

    // Every tree edge must carry strictly positive weight.
    if w.iter().any(|x| !x.is_positive()) {
        return;
    }

    // Receiver optimality at each node's unnormalized belief.
    let mut beliefs = Vec::with_capacity(shape.n_nodes());
    for (n, support) in assignment.iter().enumerate() {
        let weights: Vec<Rat> = (0..shape.n_states())
            .map(|s| var_of.get(&(s, n)).map(|&i| w[i].clone()).unwrap_or_else(Rat::zero))
            .collect();
        let a_set: BTreeSet<usize> = match support.as_ref().unwrap() {
            NodeSupport::Pure(a0) => BTreeSet::from([*a0]),
            NodeSupport::Binary(lo, hi) => BTreeSet::from([*lo, *hi]),
        };
        if !indifference_set(g, &a_set).contains_weights(&weights) {
            return;
        }
        beliefs.push(Belief::normalized(weights).expect("positive tree weights normalize"));
    }

    // Off-path temptation: trivial for cheap talk, checked for signalling.
    if !g.cheap_talk && *u_bar < off_path_bound(g) {
        return;
    }

    // Receiver actions delivering the common sender utility exactly.
    let mut actions = Vec::with_capacity(shape.n_nodes());
    for (n, support) in assignment.iter().enumerate() {
        let msg = bound[n];
        match support.as_ref().unwrap() {
            NodeSupport::Pure(a0) => actions.push(MixedAction::pure(g.n_actions(), *a0)),
            NodeSupport::Binary(lo, hi) => {
                let t = (u_bar - g.u0(*lo, msg)) / (g.u0(*hi, msg) - g.u0(*lo, msg));
                actions.push(MixedAction::binary(g.n_actions(), *lo, *hi, t));
            }
        }
    }

    let on_path_messages: Vec<String> =
        bound.iter().map(|&m| g.messages[m].clone()).collect();
    let sender_strategy: Vec<Vec<Rat>> = (0..g.n_states())
        .map(|s| {
            (0..shape.n_nodes())
                .map(|n| match var_of.get(&(s, n)) {
                    Some(&i) => &w[i] / g.prior.weight(s),
                    None => Rat::zero(),
                })
                .collect()
        })
        .collect();

    let nodes: Vec<PiNode> = (0..shape.n_nodes())
        .map(|n| PiNode {
            message: on_path_messages[n].clone(),
            action: Some(actions[n].clone()),
        })
        .collect();
    let graph = CommGraph::new(g.states.clone(), nodes, shape.edges.clone())
        .expect("solved shape keeps its edges");

    let off_path_beliefs: BTreeMap<String, Belief> = (0..g.n_messages())
        .filter(|m| !bound.contains(m))
        .map(|m| (g.messages[m].clone(), pessimistic_belief(g, m)))
        .collect();

    outcome.equilibria.push(CandidateEquilibrium {
        on_path_messages,
        sender_strategy,
        beliefs,
        receiver_actions: actions,
        u_bar: u_bar.clone(),
        graph,
        off_path_beliefs,
    });
}

#[derive(Debug, Default)]
pub struct Enumeration {
    pub equilibria: Vec<CandidateEquilibrium>,
    pub continua: Vec<ContinuumFlag>,
}

/// Union of [`solve_tree`] over every enumerated tree shape with up to
/// `max_messages` messages, deduplicated by the induced posterior
/// distribution. Babbling always appears (the one-message tree).
pub fn enumerate_candidates(g: &Game, max_messages: usize) -> Result<Enumeration, SolveError> {
    if !sender_injective(g) {
        return Err(SolveError::SenderNotInjective);
    }
    let cap = max_messages.min(g.n_messages());
    let shapes = crate::graph::enumerate_trees(&g.states, cap);
    let outcomes: Vec<SolveOutcome> = shapes
        .par_iter()
        .map(|shape| solve_tree(g, shape).expect("enumerated shapes are spanning trees"))
        .collect();
    let mut result = Enumeration::default();
    for outcome in outcomes {
        for eq in outcome.equilibria {
            let dist = eq.posterior_distribution(g);
            let duplicate = result
                .equilibria
                .iter()
                .any(|done| done.posterior_distribution(g) == dist);
            if !duplicate {
                result.equilibria.push(eq);
            }
        }
        result.continua.extend(outcome.continua);
    }
    Ok(result)
}

/// Full check of the equilibrium conditions: exact Bayes consistency,
/// sender indifference on path and optimality against off-path messages,
/// and receiver optimality of every prescribed action.
pub fn verify_equilibrium(g: &Game, eq: &CandidateEquilibrium) -> ValidationReport {
    let mut findings = Vec::new();
    let mut push = |check: &str, passed: bool, detail: String| {
        findings.push(Finding { check: check.into(), passed, detail });
    };

    // Strategy rows are probability vectors.
    let rows_ok = eq.sender_strategy.len() == g.n_states()
        && eq.sender_strategy.iter().all(|row| {
            row.len() == eq.on_path_messages.len()
                && row.iter().all(|x| !x.is_negative())
                && row.iter().cloned().sum::<Rat>().is_one()
        });
    push("strategy_rows", rows_ok, "sender strategy rows sum to 1".into());

    // Bayes consistency: message weights times posteriors recompose the
    // prior, and each posterior is proportional to its weighted column.
    let weights = eq.message_weights(g);
    let mut bayes_ok = true;
    for s in 0..g.n_states() {
        let total: Rat = (0..eq.on_path_messages.len())
            .map(|j| &weights[j] * eq.beliefs[j].weight(s))
            .sum();
        if &total != g.prior.weight(s) {
            bayes_ok = false;
        }
    }
    for (j, nu) in eq.beliefs.iter().enumerate() {
        if weights[j].is_positive() {
            for s in 0..g.n_states() {
                let expected = g.prior.weight(s) * &eq.sender_strategy[s][j];
                if &weights[j] * nu.weight(s) != expected {
                    bayes_ok = false;
                }
            }
        }
    }
    push("bayes_consistency", bayes_ok, "posteriors average back to the prior".into());

    // Sender indifference across on-path messages at the common utility.
    let mut indiff_ok = true;
    for (j, label) in eq.on_path_messages.iter().enumerate() {
        let m = match g.message_index(label) {
            Ok(m) => m,
            Err(_) => {
                indiff_ok = false;
                break;
            }
        };
        if g.u0_mixed(&eq.receiver_actions[j], m) != eq.u_bar {
            indiff_ok = false;
        }
    }
    push(
        "sender_indifference",
        indiff_ok,
        format!("every on-path message delivers {}", fmt_rat(&eq.u_bar)),
    );

    // Off-path optimality: deviations answered by the stored beliefs (with
    // the receiver's least favourable supporting response) pay at most the
    // common utility.
    let mut off_ok = true;
    for (label, nu) in &eq.off_path_beliefs {
        if let Ok(m) = g.message_index(label) {
            let (br, _) = best_responses(g, nu);
            let worst = br.iter().map(|&a2| g.u0(a2, m).clone()).min().unwrap();
            if worst > eq.u_bar {
                off_ok = false;
            }
        }
    }
    for m in 0..g.n_messages() {
        let label = &g.messages[m];
        if !eq.on_path_messages.contains(label) && !eq.off_path_beliefs.contains_key(label) {
            // No belief recorded: the deviation must still be deterrable.
            let bound = crate::receiver::min_max_indirect(g, m);
            if bound > eq.u_bar {
                off_ok = false;
            }
        }
    }
    push("off_path_optimality", off_ok, "no profitable deviation to an unused message".into());

    // Receiver optimality: every prescribed action is supported on best
    // responses to its belief.
    let mut recv_ok = true;
    for (j, p) in eq.receiver_actions.iter().enumerate() {
        let (br, _) = best_responses(g, &eq.beliefs[j]);
        if !p.support().iter().all(|a| br.contains(a)) {
            recv_ok = false;
        }
    }
    push("receiver_optimality", recv_ok, "actions supported on best responses".into());

    ValidationReport { findings }
}

/// Does the receiver ever take an action outside their best responses to
/// the prior?
pub fn is_persuasive(g: &Game, eq: &CandidateEquilibrium) -> bool {
    let (prior_br, _) = best_responses(g, &g.prior);
    let weights = eq.message_weights(g);
    eq.receiver_actions.iter().enumerate().any(|(j, p)| {
        weights[j].is_positive() && p.support().iter().any(|a| !prior_br.contains(a))
    })
}

/// Two equilibria are informationally equivalent when they induce the same
/// distribution of posterior beliefs.
pub fn informationally_equivalent(
    g: &Game,
    left: &CandidateEquilibrium,
    right: &CandidateEquilibrium,
) -> bool {
    left.posterior_distribution(g) == right.posterior_distribution(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::{binary_sales, binary_sales_interior};
    use crate::exact::{rat, rint};
    use crate::graph::{enumerate_trees, shape_key};

    fn example_tree_equilibrium(g: &Game) -> CandidateEquilibrium {
        let shapes = enumerate_trees(&g.states, 2);
        let shape = shapes
            .iter()
            .find(|s| shape_key(s) == vec![vec![0], vec![0, 1]])
            .expect("partial revelation shape exists");
        let outcome = solve_tree(g, shape).unwrap();
        assert_eq!(outcome.equilibria.len(), 1);
        outcome.equilibria.into_iter().next().unwrap()
    }

    #[test]
    fn solve_tree_reproduces_partial_revelation() {
        let g = binary_sales();
        let eq = example_tree_equilibrium(&g);
        assert_eq!(eq.u_bar, rat(1, 2));
        assert_eq!(eq.beliefs[0], Belief::point(2, 0));
        assert_eq!(eq.beliefs[1], Belief::new(vec![rat(1, 4), rat(3, 4)]).unwrap());
        assert_eq!(eq.sender_strategy[0], vec![rat(2, 3), rat(1, 3)]);
        assert_eq!(eq.sender_strategy[1], vec![rint(0), rint(1)]);
        assert_eq!(eq.receiver_actions[0], MixedAction::pure(3, 0));
        assert_eq!(
            eq.receiver_actions[1],
            MixedAction::new(vec![rint(0), rat(1, 2), rat(1, 2)]).unwrap()
        );
    }

    #[test]
    fn solve_tree_babbling() {
        let g = binary_sales();
        let shapes = enumerate_trees(&g.states, 1);
        let outcome = solve_tree(&g, &shapes[0]).unwrap();
        assert_eq!(outcome.equilibria.len(), 1);
        let eq = &outcome.equilibria[0];
        assert_eq!(eq.u_bar, rint(0));
        assert_eq!(eq.beliefs[0], g.prior);
        assert_eq!(eq.receiver_actions[0], MixedAction::pure(3, 1));
    }

    #[test]
    fn solve_tree_rejects_infeasible_shape() {
        // A game where the receiver has a dominant action: no binary node is
        // ever feasible, so the two-message shapes solve to nothing.
        let g = Game::new(
            vec!["s0".into(), "s1".into()],
            vec![rat(1, 2), rat(1, 2)],
            vec!["x".into(), "y".into()],
            vec!["m0".into(), "m1".into()],
            true,
            vec![vec![rint(2), rint(2)], vec![rint(0), rint(0)]],
            vec![vec![rint(0), rint(0)], vec![rint(1), rint(1)]],
        )
        .unwrap();
        for shape in enumerate_trees(&g.states, 2) {
            let outcome = solve_tree(&g, &shape).unwrap();
            if shape.n_nodes() > 1 {
                assert!(outcome.equilibria.is_empty());
            }
        }
    }

    #[test]
    fn enumerate_binary_sales() {
        let g = binary_sales();
        let result = enumerate_candidates(&g, 2).unwrap();
        assert!(result.continua.is_empty());
        assert_eq!(result.equilibria.len(), 2);
        let persuasive: Vec<_> =
            result.equilibria.iter().filter(|e| is_persuasive(&g, e)).collect();
        assert_eq!(persuasive.len(), 1);
        assert_eq!(persuasive[0].u_bar, rat(1, 2));
    }

    #[test]
    fn enumerate_dominant_action_game_is_babbling_only() {
        let g = Game::new(
            vec!["s0".into(), "s1".into()],
            vec![rat(1, 2), rat(1, 2)],
            vec!["x".into(), "y".into()],
            vec!["m0".into(), "m1".into()],
            true,
            vec![vec![rint(2), rint(2)], vec![rint(0), rint(0)]],
            vec![vec![rint(0), rint(0)], vec![rint(1), rint(1)]],
        )
        .unwrap();
        let result = enumerate_candidates(&g, 2).unwrap();
        assert_eq!(result.equilibria.len(), 1);
        assert!(!is_persuasive(&g, &result.equilibria[0]));
    }

    #[test]
    fn verify_accepts_solution_and_flags_perturbed_strategy() {
        let g = binary_sales();
        let eq = example_tree_equilibrium(&g);
        assert!(verify_equilibrium(&g, &eq).all_passed());

        let mut broken = eq.clone();
        broken.sender_strategy[1] = vec![rat(1, 10), rat(9, 10)];
        let report = verify_equilibrium(&g, &broken);
        assert!(!report.passed("bayes_consistency"));
    }

    #[test]
    fn verify_accepts_babbling_and_interior() {
        let g = binary_sales();
        let result = enumerate_candidates(&g, 1).unwrap();
        assert!(verify_equilibrium(&g, &result.equilibria[0]).all_passed());
        let interior = binary_sales_interior();
        assert!(verify_equilibrium(&g, &interior).all_passed(), "{:?}", verify_equilibrium(&g, &interior));
    }

    #[test]
    fn persuasion_examples() {
        let g = binary_sales();
        let eq = example_tree_equilibrium(&g);
        assert!(is_persuasive(&g, &eq));
        let babble = enumerate_candidates(&g, 1).unwrap().equilibria.remove(0);
        assert!(!is_persuasive(&g, &babble));

        // Splitting the prior inside the outside-option region never counts
        // as persuasion: both posteriors keep the same best response.
        let split = CandidateEquilibrium {
            on_path_messages: vec!["m0".into(), "m1".into()],
            sender_strategy: vec![
                vec![rat(3, 5), rat(2, 5)],
                vec![rat(2, 5), rat(3, 5)],
            ],
            beliefs: vec![
                Belief::new(vec![rat(3, 5), rat(2, 5)]).unwrap(),
                Belief::new(vec![rat(2, 5), rat(3, 5)]).unwrap(),
            ],
            receiver_actions: vec![MixedAction::pure(3, 1), MixedAction::pure(3, 1)],
            u_bar: rint(0),
            graph: binary_sales_interior().graph,
            off_path_beliefs: Default::default(),
        };
        assert!(verify_equilibrium(&g, &split).all_passed());
        assert!(!is_persuasive(&g, &split));
    }

    #[test]
    fn informational_equivalence_examples() {
        let g = binary_sales();
        let eq = example_tree_equilibrium(&g);

        // Swapping message labels preserves the posterior distribution.
        let mut swapped = eq.clone();
        swapped.on_path_messages.reverse();
        swapped.beliefs.reverse();
        swapped.receiver_actions.reverse();
        for row in &mut swapped.sender_strategy {
            row.reverse();
        }
        assert!(informationally_equivalent(&g, &eq, &swapped));

        let babble = enumerate_candidates(&g, 1).unwrap().equilibria.remove(0);
        assert!(!informationally_equivalent(&g, &eq, &babble));
        assert!(!informationally_equivalent(&g, &eq, &binary_sales_interior()));
    }

    #[test]
    fn solve_rejects_non_injective_sender() {
        let g = Game::new(
            vec!["s0".into(), "s1".into()],
            vec![rat(1, 2), rat(1, 2)],
            vec!["x".into(), "y".into()],
            vec!["m0".into()],
            true,
            vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]],
            vec![vec![rint(1)], vec![rint(1)]],
        )
        .unwrap();
        assert!(matches!(enumerate_candidates(&g, 1), Err(SolveError::SenderNotInjective)));
    }

    #[test]
    fn forest_with_knife_edge_conditioned_prior_is_detected() {
        // Deliberately place the conditioned prior of {s1, s2} exactly on
        // the x/y indifference line; the pure-strategy forest then solves.
        let g = Game::new(
            vec!["s0".into(), "s1".into(), "s2".into()],
            vec![rat(1, 2), rat(1, 4), rat(1, 4)],
            vec!["x".into(), "y".into(), "z".into()],
            vec!["m0".into(), "m1".into()],
            true,
            vec![
                vec![rint(0), rint(1), rint(-1)],
                vec![rint(0), rint(-1), rint(1)],
                vec![rint(3), rint(-1), rint(-1)],
            ],
            vec![vec![rint(0), rint(0)], vec![rint(1), rint(1)], vec![rat(1, 2), rat(1, 2)]],
        )
        .unwrap();
        // Forest: s0 -> m0 revealed (z pure); {s1, s2} -> m1 with the
        // conditioned prior (1/2, 1/2) on which x and y tie and beat z.
        let forests = crate::graph::enumerate_forests(&g.states, 2);
        let shape = forests
            .iter()
            .find(|s| shape_key(s) == vec![vec![0], vec![1, 2]])
            .expect("two-component forest exists");
        let outcome = solve_acyclic(&g, shape).unwrap();
        assert!(
            !outcome.equilibria.is_empty(),
            "knife-edge forest should solve: {outcome:?}"
        );
    }
}
