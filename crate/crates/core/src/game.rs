//! Core domain types: games, beliefs, mixed actions, modifications, and
//! idiosyncratic perturbations, plus standing-assumption validation and
//! prior conditioning.

use std::collections::BTreeSet;

use num::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::exact::{feasible, fmt_rat, matrix_rank, Rat};

#[derive(Debug, Error)]
pub enum GameError {
    #[error("probability vector must be nonnegative and sum to 1, got [{0}]")]
    BadProbability(String),
    #[error("duplicate label {0:?}")]
    DuplicateLabel(String),
    #[error("table dimension mismatch: {0}")]
    BadTable(String),
    #[error("at least one message is required")]
    NoMessages,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("conditioning on a zero-mass or empty state set")]
    ZeroMassSubset,
    #[error("{0}")]
    Invalid(String),
}

/// Exact probability vector over the states of a game.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Belief {
    weights: Vec<Rat>,
}

impl Belief {
    pub fn new(weights: Vec<Rat>) -> Result<Self, GameError> {
        check_probability(&weights)?;
        Ok(Belief { weights })
    }

    /// Normalize nonnegative, not-all-zero weights into a belief.
    pub fn normalized(weights: Vec<Rat>) -> Result<Self, GameError> {
        let total: Rat = weights.iter().cloned().sum();
        if !total.is_positive() || weights.iter().any(Signed::is_negative) {
            return Err(GameError::BadProbability(join_rats(&weights)));
        }
        Ok(Belief { weights: weights.into_iter().map(|w| w / total.clone()).collect() })
    }

    pub fn point(n: usize, at: usize) -> Self {
        let mut weights = vec![Rat::zero(); n];
        weights[at] = Rat::one();
        Belief { weights }
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn weight(&self, state: usize) -> &Rat {
        &self.weights[state]
    }

    pub fn support(&self) -> Vec<usize> {
        self.weights.iter().enumerate().filter(|(_, w)| w.is_positive()).map(|(i, _)| i).collect()
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }
}

/// Exact probability vector over the pure actions of a game.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MixedAction {
    weights: Vec<Rat>,
}

impl MixedAction {
    pub fn new(weights: Vec<Rat>) -> Result<Self, GameError> {
        check_probability(&weights)?;
        Ok(MixedAction { weights })
    }

    pub fn pure(n: usize, action: usize) -> Self {
        let mut weights = vec![Rat::zero(); n];
        weights[action] = Rat::one();
        MixedAction { weights }
    }

    /// Binary mix putting weight `t` on `hi` and `1-t` on `lo`.
    pub fn binary(n: usize, lo: usize, hi: usize, t: Rat) -> Self {
        let mut weights = vec![Rat::zero(); n];
        weights[hi] = t.clone();
        weights[lo] = Rat::one() - t;
        MixedAction { weights }
    }

    pub fn weights(&self) -> &[Rat] {
        &self.weights
    }

    pub fn weight(&self, action: usize) -> &Rat {
        &self.weights[action]
    }

    /// Pure actions played with positive probability.
    pub fn support(&self) -> Vec<usize> {
        self.weights.iter().enumerate().filter(|(_, w)| w.is_positive()).map(|(i, _)| i).collect()
    }

    pub fn is_pure(&self) -> Option<usize> {
        let s = self.support();
        if s.len() == 1 { Some(s[0]) } else { None }
    }
}

fn check_probability(weights: &[Rat]) -> Result<(), GameError> {
    let total: Rat = weights.iter().cloned().sum();
    if weights.iter().any(Signed::is_negative) || !total.is_one() {
        return Err(GameError::BadProbability(join_rats(weights)));
    }
    Ok(())
}

fn join_rats(v: &[Rat]) -> String {
    v.iter().map(fmt_rat).collect::<Vec<_>>().join(", ")
}

/// A finite sender-receiver game with a transparent sender utility.
///
/// `receiver_utility[a][s]` is the receiver's payoff from pure action `a` in
/// state `s`; `sender_u0[a][m]` the sender's transparent payoff from action
/// `a` sent alongside message `m` (constant in `m` for cheap talk).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Game {
    pub states: Vec<String>,
    pub prior: Belief,
    pub actions: Vec<String>,
    pub messages: Vec<String>,
    pub cheap_talk: bool,
    pub receiver_utility: Vec<Vec<Rat>>,
    pub sender_u0: Vec<Vec<Rat>>,
}

impl Game {
    pub fn new(
        states: Vec<String>,
        prior: Vec<Rat>,
        actions: Vec<String>,
        messages: Vec<String>,
        cheap_talk: bool,
        receiver_utility: Vec<Vec<Rat>>,
        sender_u0: Vec<Vec<Rat>>,
    ) -> Result<Self, GameError> {
        check_distinct(&states)?;
        check_distinct(&actions)?;
        check_distinct(&messages)?;
        if messages.is_empty() {
            return Err(GameError::NoMessages);
        }
        if prior.len() != states.len() {
            return Err(GameError::BadTable(format!(
                "prior has {} entries for {} states",
                prior.len(),
                states.len()
            )));
        }
        let prior = Belief::new(prior)?;
        if receiver_utility.len() != actions.len()
            || receiver_utility.iter().any(|row| row.len() != states.len())
        {
            return Err(GameError::BadTable("receiver_utility must be |actions| x |states|".into()));
        }
        if sender_u0.len() != actions.len()
            || sender_u0.iter().any(|row| row.len() != messages.len())
        {
            return Err(GameError::BadTable("sender_u0 must be |actions| x |messages|".into()));
        }
        if cheap_talk {
            for row in &sender_u0 {
                if row.iter().any(|v| v != &row[0]) {
                    return Err(GameError::BadTable(
                        "cheap_talk games need message-independent sender_u0".into(),
                    ));
                }
            }
        }
        Ok(Game { states, prior, actions, messages, cheap_talk, receiver_utility, sender_u0 })
    }

    pub fn n_states(&self) -> usize {
        self.states.len()
    }

    pub fn n_actions(&self) -> usize {
        self.actions.len()
    }

    pub fn n_messages(&self) -> usize {
        self.messages.len()
    }

    pub fn state_index(&self, label: &str) -> Result<usize, GameError> {
        self.states
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| GameError::UnknownLabel(label.to_string()))
    }

    pub fn action_index(&self, label: &str) -> Result<usize, GameError> {
        self.actions
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| GameError::UnknownLabel(label.to_string()))
    }

    pub fn message_index(&self, label: &str) -> Result<usize, GameError> {
        self.messages
            .iter()
            .position(|s| s == label)
            .ok_or_else(|| GameError::UnknownLabel(label.to_string()))
    }

    /// Transparent sender payoff of pure action `a` with message `m`.
    pub fn u0(&self, action: usize, message: usize) -> &Rat {
        &self.sender_u0[action][message]
    }

    /// Linear extension of the transparent payoff to a mixed action.
    pub fn u0_mixed(&self, p: &MixedAction, message: usize) -> Rat {
        p.weights()
            .iter()
            .enumerate()
            .map(|(a, w)| w * &self.sender_u0[a][message])
            .sum()
    }

    /// Receiver payoff of mixed action `p` under belief `nu`.
    pub fn receiver_value(&self, p: &MixedAction, nu: &Belief) -> Rat {
        p.weights()
            .iter()
            .enumerate()
            .map(|(a, w)| {
                let ev: Rat = nu
                    .weights()
                    .iter()
                    .enumerate()
                    .map(|(s, q)| q * &self.receiver_utility[a][s])
                    .sum();
                w * ev
            })
            .sum()
    }
}

fn check_distinct(labels: &[String]) -> Result<(), GameError> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(GameError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

/// Condition the prior on a subset of states (given by indices).
pub fn condition_prior(g: &Game, subset: &BTreeSet<usize>) -> Result<Belief, GameError> {
    if subset.is_empty() {
        return Err(GameError::ZeroMassSubset);
    }
    let mass: Rat = subset.iter().map(|&s| g.prior.weight(s).clone()).sum();
    if !mass.is_positive() {
        return Err(GameError::ZeroMassSubset);
    }
    let weights = (0..g.n_states())
        .map(|s| if subset.contains(&s) { g.prior.weight(s) / &mass } else { Rat::zero() })
        .collect();
    Ok(Belief { weights })
}

/// One pass/fail finding from [`validate_game`].
#[derive(Debug, Clone)]
pub struct Finding {
    pub check: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct ValidationReport {
    pub findings: Vec<Finding>,
}

impl ValidationReport {
    pub fn all_passed(&self) -> bool {
        self.findings.iter().all(|f| f.passed)
    }

    pub fn passed(&self, check: &str) -> bool {
        self.findings.iter().any(|f| f.check == check && f.passed)
    }

    fn push(&mut self, check: &str, passed: bool, detail: String) {
        self.findings.push(Finding { check: check.to_string(), passed, detail });
    }
}

pub const CHECK_SENDER_INJECTIVE: &str = "sender_utility_injective";
pub const CHECK_RECEIVER_PAIRS: &str = "receiver_distinguishes_best_responses";
pub const CHECK_RECEIVER_TRIPLES: &str = "receiver_distinguishes_triples";

/// Check the standing assumptions on a structurally well-formed game:
/// injectivity of the transparent sender utility across distinct pure
/// actions, and the receiver's ability to distinguish tied best responses
/// (pairs, and convex combinations within best-response triples).
pub fn validate_game(g: &Game) -> ValidationReport {
    let mut report = ValidationReport::default();

    // Sender injectivity: distinct pure actions never share a transparent
    // payoff, across any pair of messages.
    let mut inj_fail = None;
    'outer: for a in 0..g.n_actions() {
        for b in 0..g.n_actions() {
            if a == b {
                continue;
            }
            for m in 0..g.n_messages() {
                for m2 in 0..g.n_messages() {
                    if g.u0(a, m) == g.u0(b, m2) {
                        inj_fail = Some((a, b, m, m2));
                        break 'outer;
                    }
                }
            }
        }
    }
    match inj_fail {
        None => report.push(CHECK_SENDER_INJECTIVE, true, "all pure-action payoffs distinct".into()),
        Some((a, b, m, m2)) => report.push(
            CHECK_SENDER_INJECTIVE,
            false,
            format!(
                "u0({},{}) = u0({},{}) = {}",
                g.actions[a],
                g.messages[m],
                g.actions[b],
                g.messages[m2],
                fmt_rat(g.u0(a, m))
            ),
        ),
    }

    // Receiver pair condition: no belief has two best responses whose
    // utility rows agree on the belief's support.
    let mut pair_fail = None;
    'pairs: for a in 0..g.n_actions() {
        for b in a + 1..g.n_actions() {
            let agree: BTreeSet<usize> = (0..g.n_states())
                .filter(|&s| g.receiver_utility[a][s] == g.receiver_utility[b][s])
                .collect();
            if agree.is_empty() {
                continue;
            }
            if tied_best_somewhere(g, &[a, b], &agree) {
                pair_fail = Some((a, b, agree));
                break 'pairs;
            }
        }
    }
    match pair_fail {
        None => report.push(CHECK_RECEIVER_PAIRS, true, "no utility-identical tied best responses".into()),
        Some((a, b, agree)) => report.push(
            CHECK_RECEIVER_PAIRS,
            false,
            format!(
                "actions ({}, {}) are tied best responses on a belief over {{{}}} where their utilities agree",
                g.actions[a],
                g.actions[b],
                agree.iter().map(|&s| g.states[s].clone()).collect::<Vec<_>>().join(", ")
            ),
        ),
    }

    // Receiver triple condition: within any best-response triple, no two
    // distinct mixtures are utility-identical on the support. Detected as an
    // affine dependency of the triple's utility rows on some state subset
    // that also admits a belief making all three best responses.
    let mut triple_fail = None;
    let subsets = state_subsets(g.n_states());
    'triples: for a in 0..g.n_actions() {
        for b in a + 1..g.n_actions() {
            for c in b + 1..g.n_actions() {
                for subset in &subsets {
                    let rows: Vec<Vec<Rat>> = [b, c]
                        .iter()
                        .map(|&x| {
                            subset
                                .iter()
                                .map(|&s| &g.receiver_utility[x][s] - &g.receiver_utility[a][s])
                                .collect()
                        })
                        .collect();
                    if matrix_rank(&rows) < 2 && tied_best_somewhere(g, &[a, b, c], subset) {
                        triple_fail = Some((a, b, c, subset.clone()));
                        break 'triples;
                    }
                }
            }
        }
    }
    match triple_fail {
        None => report.push(CHECK_RECEIVER_TRIPLES, true, "best-response triples are affinely independent".into()),
        Some((a, b, c, subset)) => report.push(
            CHECK_RECEIVER_TRIPLES,
            false,
            format!(
                "actions ({}, {}, {}) admit coincident mixtures as best responses on {{{}}}",
                g.actions[a],
                g.actions[b],
                g.actions[c],
                subset.iter().map(|&s| g.states[s].clone()).collect::<Vec<_>>().join(", ")
            ),
        ),
    }

    report
}

fn state_subsets(n: usize) -> Vec<BTreeSet<usize>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << n) {
        out.push((0..n).filter(|s| mask & (1 << s) != 0).collect());
    }
    out
}

/// Is there a belief supported inside `support` to which every action in
/// `tied` is simultaneously a best response? Exact LP feasibility over the
/// sub-simplex.
fn tied_best_somewhere(g: &Game, tied: &[usize], support: &BTreeSet<usize>) -> bool {
    let vars: Vec<usize> = support.iter().copied().collect();
    let n = vars.len();
    let a_eq = vec![vec![Rat::one(); n]];
    let b_eq = vec![Rat::one()];
    let mut a_ge = Vec::new();
    let mut b_ge = Vec::new();
    for &t in tied {
        for other in 0..g.n_actions() {
            if tied.contains(&other) {
                continue;
            }
            a_ge.push(
                vars.iter()
                    .map(|&s| &g.receiver_utility[t][s] - &g.receiver_utility[other][s])
                    .collect(),
            );
            b_ge.push(Rat::zero());
        }
    }
    // Mutual ties inside the candidate set, as a pair of opposite inequalities.
    for i in 0..tied.len() {
        for j in i + 1..tied.len() {
            let row: Vec<Rat> = vars
                .iter()
                .map(|&s| &g.receiver_utility[tied[i]][s] - &g.receiver_utility[tied[j]][s])
                .collect();
            a_ge.push(row.clone());
            b_ge.push(Rat::zero());
            a_ge.push(row.into_iter().map(|x| -x).collect());
            b_ge.push(Rat::zero());
        }
    }
    feasible(&a_eq, &b_eq, &a_ge, &b_ge, n).is_some()
}

/// A state-dependent modification of the sender's utility, `values[a][m][s]`.
///
/// When `message_independent` is set the table has a single message column
/// that applies to every message label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Modification {
    pub message_labels: Vec<String>,
    pub message_independent: bool,
    values: Vec<Vec<Vec<Rat>>>,
}

impl Modification {
    pub fn new(message_labels: Vec<String>, values: Vec<Vec<Vec<Rat>>>) -> Result<Self, GameError> {
        if values.is_empty() || values.iter().any(|m| m.len() != message_labels.len()) {
            return Err(GameError::BadTable(
                "modification must be |actions| x |messages| x |states|".into(),
            ));
        }
        let n_states = values[0].first().map(|v| v.len()).unwrap_or(0);
        if values.iter().flatten().any(|v| v.len() != n_states) {
            return Err(GameError::BadTable("ragged modification table".into()));
        }
        Ok(Modification { message_labels, message_independent: false, values })
    }

    /// Build a message-independent modification from `values[a][s]`.
    pub fn message_independent(values: Vec<Vec<Rat>>) -> Self {
        Modification {
            message_labels: Vec::new(),
            message_independent: true,
            values: values.into_iter().map(|row| vec![row]).collect(),
        }
    }

    pub fn n_actions(&self) -> usize {
        self.values.len()
    }

    pub fn n_states(&self) -> usize {
        self.values[0][0].len()
    }

    pub fn raw_values(&self) -> &Vec<Vec<Vec<Rat>>> {
        &self.values
    }

    pub(crate) fn message_column(&self, message: &str) -> usize {
        if self.message_independent {
            return 0;
        }
        self.message_labels
            .iter()
            .position(|m| m == message)
            .unwrap_or_else(|| panic!("modification has no column for message {message:?}"))
    }

    /// Value at a pure action-message pair in a state.
    pub fn value(&self, action: usize, message: &str, state: usize) -> &Rat {
        &self.values[action][self.message_column(message)][state]
    }

    /// Linear extension over a mixed action.
    pub fn value_mixed(&self, p: &MixedAction, message: &str, state: usize) -> Rat {
        let col = self.message_column(message);
        p.weights()
            .iter()
            .enumerate()
            .map(|(a, w)| w * &self.values[a][col][state])
            .sum()
    }

    /// Message-level value, defined only when the table does not depend on
    /// the action at this message. Panics otherwise: callers evaluating a
    /// graph node with no bound action must supply an action-independent
    /// modification.
    pub fn value_message(&self, message: &str, state: usize) -> Rat {
        let col = self.message_column(message);
        let v0 = &self.values[0][col][state];
        for a in 1..self.values.len() {
            assert_eq!(
                &self.values[a][col][state], v0,
                "action-dependent modification evaluated at a node with no bound action"
            );
        }
        v0.clone()
    }

    /// True when the table is constant in the message coordinate.
    pub fn is_message_independent(&self) -> bool {
        if self.message_independent {
            return true;
        }
        self.values.iter().all(|per_m| per_m.iter().all(|col| col == &per_m[0]))
    }

    /// The same modification shifted by a function of the state alone; used
    /// to exercise invariance of path sums.
    pub fn plus_state_offset(&self, offset: &[Rat]) -> Modification {
        let values = self
            .values
            .iter()
            .map(|per_m| {
                per_m
                    .iter()
                    .map(|col| col.iter().zip(offset).map(|(v, o)| v + o).collect())
                    .collect()
            })
            .collect();
        Modification {
            message_labels: self.message_labels.clone(),
            message_independent: self.message_independent,
            values,
        }
    }

    pub fn scaled(&self, factor: &Rat) -> Modification {
        let values = self
            .values
            .iter()
            .map(|per_m| per_m.iter().map(|col| col.iter().map(|v| v * factor).collect()).collect())
            .collect();
        Modification {
            message_labels: self.message_labels.clone(),
            message_independent: self.message_independent,
            values,
        }
    }

    fn shift_all(&self, delta: &Rat) -> Modification {
        let values = self
            .values
            .iter()
            .map(|per_m| per_m.iter().map(|col| col.iter().map(|v| v + delta).collect()).collect())
            .collect();
        Modification {
            message_labels: self.message_labels.clone(),
            message_independent: self.message_independent,
            values,
        }
    }
}

/// An idiosyncratic perturbation represented by its state-factored support
/// box: closed rational intervals per (action, message, state), sampled
/// uniformly and reproducibly from `(seed, draw index)`.
#[derive(Debug, Clone)]
pub struct IdiosyncraticPerturbation {
    pub lo: Modification,
    pub hi: Modification,
}

impl IdiosyncraticPerturbation {
    pub fn new(lo: Modification, hi: Modification) -> Result<Self, GameError> {
        if lo.message_labels != hi.message_labels
            || lo.message_independent != hi.message_independent
            || lo.n_actions() != hi.n_actions()
            || lo.n_states() != hi.n_states()
        {
            return Err(GameError::BadTable("support box bounds must have matching shape".into()));
        }
        for a in 0..lo.n_actions() {
            for (ml, mh) in lo.values[a].iter().zip(&hi.values[a]) {
                for (l, h) in ml.iter().zip(mh) {
                    if l > h {
                        return Err(GameError::BadTable("support box has lo > hi".into()));
                    }
                }
            }
        }
        Ok(IdiosyncraticPerturbation { lo, hi })
    }

    /// Zero-width box around a single modification.
    pub fn degenerate(v: Modification) -> Self {
        IdiosyncraticPerturbation { lo: v.clone(), hi: v }
    }

    /// Box `center +/- delta` in every cell.
    pub fn uniform_box(center: &Modification, delta: &Rat) -> Self {
        IdiosyncraticPerturbation {
            lo: center.shift_all(&-delta.clone()),
            hi: center.shift_all(delta),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    /// Midpoint of the box.
    pub fn center(&self) -> Modification {
        let values = self
            .lo
            .values
            .iter()
            .zip(&self.hi.values)
            .map(|(la, ha)| {
                la.iter()
                    .zip(ha)
                    .map(|(lm, hm)| {
                        lm.iter().zip(hm).map(|(l, h)| (l + h) / crate::exact::rint(2)).collect()
                    })
                    .collect()
            })
            .collect();
        Modification {
            message_labels: self.lo.message_labels.clone(),
            message_independent: self.lo.message_independent,
            values,
        }
    }

    /// Deterministic sample of a full realized table as binary64 values.
    /// Draw `index` under `seed` always produces the same table, independent
    /// of any other draws (counter-based stream).
    pub fn sample(&self, seed: u64, index: u64) -> Vec<Vec<Vec<f64>>> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(index.wrapping_add(1));
        self.lo
            .values
            .iter()
            .zip(&self.hi.values)
            .map(|(la, ha)| {
                la.iter()
                    .zip(ha)
                    .map(|(lm, hm)| {
                        lm.iter()
                            .zip(hm)
                            .map(|(l, h)| {
                                let lf = crate::exact::rat_to_f64(l);
                                let hf = crate::exact::rat_to_f64(h);
                                if lf == hf {
                                    lf
                                } else {
                                    rng.gen_range(lf..=hf)
                                }
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Realized value on a pure action-message pair, from a sampled table.
    pub fn sampled_value(&self, table: &[Vec<Vec<f64>>], action: usize, message: &str, state: usize) -> f64 {
        let col = self.lo.message_column(message);
        table[action][col][state]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin;
    use crate::exact::{rat, rint};

    #[test]
    fn condition_prior_examples() {
        let g = builtin::binary_sales();
        // Singleton subset gives a point mass.
        let b = condition_prior(&g, &BTreeSet::from([0])).unwrap();
        assert_eq!(b, Belief::point(2, 0));
        // Empty subset errors.
        assert!(condition_prior(&g, &BTreeSet::new()).is_err());
        // Full subset reproduces the prior exactly.
        let full = condition_prior(&g, &BTreeSet::from([0, 1])).unwrap();
        assert_eq!(full, g.prior);
    }

    #[test]
    fn condition_prior_renormalizes() {
        let g = Game::new(
            vec!["s0".into(), "s1".into(), "s2".into()],
            vec![rat(1, 4), rat(1, 4), rat(1, 2)],
            vec!["x".into(), "y".into()],
            vec!["m0".into()],
            true,
            vec![vec![rint(1), rint(0), rint(0)], vec![rint(0), rint(1), rint(1)]],
            vec![vec![rint(0)], vec![rint(1)]],
        )
        .unwrap();
        let b = condition_prior(&g, &BTreeSet::from([1, 2])).unwrap();
        assert_eq!(b.weights(), &[rint(0), rat(1, 3), rat(2, 3)]);
    }

    #[test]
    fn validate_binary_sales() {
        let report = validate_game(&builtin::binary_sales());
        assert!(report.all_passed(), "{report:?}");
    }

    #[test]
    fn validate_catches_duplicate_sender_utility() {
        let g = Game::new(
            vec!["s0".into(), "s1".into()],
            vec![rat(1, 2), rat(1, 2)],
            vec!["A".into(), "B".into()],
            vec!["m0".into()],
            true,
            vec![vec![rint(1), rint(0)], vec![rint(0), rint(1)]],
            vec![vec![rint(1)], vec![rint(1)]],
        )
        .unwrap();
        let report = validate_game(&g);
        assert!(!report.passed(CHECK_SENDER_INJECTIVE));
        let f = report.findings.iter().find(|f| f.check == CHECK_SENDER_INJECTIVE).unwrap();
        assert!(f.detail.contains('A') && f.detail.contains('B'));
    }

    #[test]
    fn validate_catches_identical_receiver_rows() {
        // Two identical receiver rows that are both optimal somewhere.
        let g = Game::new(
            vec!["s0".into(), "s1".into(), "s2".into()],
            vec![rat(1, 3), rat(1, 3), rat(1, 3)],
            vec!["A".into(), "B".into(), "C".into()],
            vec!["m0".into()],
            true,
            vec![
                vec![rint(2), rint(0), rint(0)],
                vec![rint(2), rint(0), rint(0)],
                vec![rint(0), rint(1), rint(1)],
            ],
            vec![vec![rint(0)], vec![rint(1)], vec![rint(2)]],
        )
        .unwrap();
        let report = validate_game(&g);
        assert!(!report.passed(CHECK_RECEIVER_PAIRS));
    }

    #[test]
    fn structural_error_is_not_a_finding() {
        let err = Game::new(
            vec!["s0".into(), "s1".into()],
            vec![rat(1, 2), rat(1, 3)],
            vec!["A".into()],
            vec!["m0".into()],
            true,
            vec![vec![rint(0), rint(0)]],
            vec![vec![rint(0)]],
        );
        assert!(matches!(err, Err(GameError::BadProbability(_))));
    }

    #[test]
    fn perturbation_samples_stay_in_box_and_reproduce() {
        let g = builtin::binary_sales();
        let emp = crate::modifications::empathy(&g);
        let v = IdiosyncraticPerturbation::uniform_box(&emp, &rat(1, 10));
        let t1 = v.sample(7, 3);
        let t2 = v.sample(7, 3);
        assert_eq!(t1, t2);
        let t3 = v.sample(7, 4);
        assert_ne!(t1, t3);
        for a in 0..v.lo.n_actions() {
            for (m, col) in t1[a].iter().enumerate() {
                for (s, x) in col.iter().enumerate() {
                    let lo = crate::exact::rat_to_f64(&v.lo.raw_values()[a][m][s]);
                    let hi = crate::exact::rat_to_f64(&v.hi.raw_values()[a][m][s]);
                    assert!(*x >= lo && *x <= hi);
                }
            }
        }
    }
}
