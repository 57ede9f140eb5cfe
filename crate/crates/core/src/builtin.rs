//! Built-in demonstration games used by the CLI `reproduce` command and the
//! test suites.

use crate::candidate::CandidateEquilibrium;
use crate::exact::{rat, rint, Rat};
use crate::game::{Belief, Game, MixedAction};
use crate::graph::{CommGraph, PiNode};

/// Two-state salesperson game: products `A` and `B`, an outside option, and
/// a commission that is higher for `B`. Supports a persuasive partial-
/// revelation equilibrium at sender utility 1/2.
pub fn binary_sales() -> Game {
    Game::new(
        vec!["theta_a".into(), "theta_b".into()],
        vec![rat(1, 2), rat(1, 2)],
        vec!["A".into(), "none".into(), "B".into()],
        vec!["m0".into(), "m1".into()],
        true,
        vec![
            vec![rint(1), rint(0)],
            vec![rat(3, 4), rat(3, 4)],
            vec![rint(0), rint(1)],
        ],
        vec![
            vec![rat(1, 2), rat(1, 2)],
            vec![rint(0), rint(0)],
            vec![rint(1), rint(1)],
        ],
    )
    .expect("builtin game is well formed")
}

/// Three-state salesperson game with vertically differentiated products: the
/// value brand `A` only pays off in state `a`, the premium brand `B` is
/// harmful in state `n`. Empathy fails graph monotonicity on every
/// persuasive acyclic candidate of this game.
pub fn vertical_sales() -> Game {
    vertical_sales_with_prior(vec![rat(5, 16), rat(10, 16), rat(1, 16)])
}

pub fn vertical_sales_with_prior(prior: Vec<Rat>) -> Game {
    Game::new(
        vec!["a".into(), "b".into(), "n".into()],
        prior,
        vec!["A".into(), "none".into(), "B".into()],
        vec!["m0".into(), "m1".into()],
        true,
        vec![
            vec![rat(5, 4), rint(0), rint(0)],
            vec![rat(3, 4), rat(3, 4), rat(3, 4)],
            vec![rint(1), rint(1), rint(-2)],
        ],
        vec![
            vec![rat(1, 2), rat(1, 2)],
            vec![rint(0), rint(0)],
            vec![rint(1), rint(1)],
        ],
    )
    .expect("builtin game is well formed")
}

/// Two-state buy/no-buy core game for the money-burning demonstration. The
/// sender's payoff is monotone in the receiver's belief, so cheap talk alone
/// cannot persuade; burning money on the buy recommendation can.
pub fn burn_demo() -> Game {
    Game::new(
        vec!["s_a".into(), "s_n".into()],
        vec![rat(2, 5), rat(3, 5)],
        vec!["buy".into(), "not".into()],
        vec!["m0".into(), "m1".into()],
        true,
        vec![vec![rint(1), rint(-1)], vec![rint(0), rint(0)]],
        vec![vec![rint(1), rint(1)], vec![rint(0), rint(0)]],
    )
    .expect("builtin game is well formed")
}

/// The fully mixed interior equilibrium of [`binary_sales`] at sender
/// utility 1/4: posteriors 1/4 and 3/4 on `theta_b`, both receiver actions
/// mixed, complete (hence cyclic) communication graph.
pub fn binary_sales_interior() -> CandidateEquilibrium {
    let g = binary_sales();
    let beliefs = vec![
        Belief::new(vec![rat(3, 4), rat(1, 4)]).unwrap(),
        Belief::new(vec![rat(1, 4), rat(3, 4)]).unwrap(),
    ];
    let actions = vec![
        MixedAction::new(vec![rat(1, 2), rat(1, 2), rint(0)]).unwrap(),
        MixedAction::new(vec![rint(0), rat(3, 4), rat(1, 4)]).unwrap(),
    ];
    let nodes = vec![
        PiNode { message: "m0".into(), action: Some(actions[0].clone()) },
        PiNode { message: "m1".into(), action: Some(actions[1].clone()) },
    ];
    let edges = [(0, 0), (0, 1), (1, 0), (1, 1)].into_iter().collect();
    let graph = CommGraph::new(g.states.clone(), nodes, edges).unwrap();
    CandidateEquilibrium {
        on_path_messages: vec!["m0".into(), "m1".into()],
        sender_strategy: vec![
            vec![rat(3, 4), rat(1, 4)],
            vec![rat(1, 4), rat(3, 4)],
        ],
        beliefs,
        receiver_actions: actions,
        u_bar: rat(1, 4),
        graph,
        off_path_beliefs: Default::default(),
    }
}
