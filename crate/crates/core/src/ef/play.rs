//! Single steps of a game for interactive play, and transcripts.

use super::{require_game_size, Arena, BoundedSolver, Fixpoint, Move, Player, Position, Side};
use crate::error::{Error, Result};
use crate::graph::Graph;
use serde::{Deserialize, Serialize};

/// Pebble slots; slot `i` holds the pair it marks, if placed.
pub type Pebbles = Vec<Option<(usize, usize)>>;

/// Whose turn it is. Duplicator answers a pending Spoiler move.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Spoiler,
    Duplicator(Move),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpoilerStep {
    pub legal: Vec<Move>,
    /// Least move winning fastest, when Spoiler wins.
    pub optimal: Option<Move>,
    pub rounds_to_win: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DuplicatorStep {
    /// Every vertex of the graph Duplicator answers in.
    pub legal: Vec<usize>,
    /// A surviving reply if one exists, else one losing as late as possible.
    pub reply: Option<usize>,
    pub survives: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum Step {
    /// The game has ended.
    Over(Player),
    Spoiler(SpoilerStep),
    Duplicator(DuplicatorStep),
}

enum Engine<'a> {
    Bounded(BoundedSolver<'a>),
    Unbounded(Fixpoint),
}

/// A game between fixed graphs with `k` pebble pairs, either over a fixed
/// number of rounds or unbounded.
pub struct Game<'a> {
    arena: Arena<'a>,
    k: usize,
    engine: Engine<'a>,
}

fn position(pebbles: &[Option<(usize, usize)>]) -> Position {
    Position::from_pairs(pebbles.iter().flatten().copied())
}

fn legal_position(arena: Arena<'_>, pebbles: &[Option<(usize, usize)>]) -> bool {
    position(pebbles).is_partial_iso(arena.g, arena.h)
}

/// Slot array after `mv` and the reply `y`.
pub fn apply(pebbles: &[Option<(usize, usize)>], mv: Move, y: usize) -> Pebbles {
    let mut out = pebbles.to_vec();
    out[mv.slot] = Some(Arena::pair(mv.side, mv.vertex, y));
    out
}

impl<'a> Game<'a> {
    /// `rounds` of `None` plays the unbounded game.
    pub fn new(g: &'a Graph, h: &'a Graph, k: usize, rounds: Option<usize>) -> Result<Self> {
        require_game_size(g, h)?;
        let engine = match rounds {
            Some(_) => Engine::Bounded(BoundedSolver::new(g, h, k)?),
            None => Engine::Unbounded(super::duplicator_fixpoint(g, h, k)?),
        };
        Ok(Game {
            arena: Arena::new(g, h),
            k,
            engine,
        })
    }

    pub fn pebbles(&self) -> usize {
        self.k
    }

    fn validate(&self, pebbles: &[Option<(usize, usize)>]) -> Result<()> {
        if pebbles.len() != self.k {
            return Err(Error::Input(format!(
                "expected {} pebble slots, got {}",
                self.k,
                pebbles.len()
            )));
        }
        for &(u, v) in pebbles.iter().flatten() {
            if u >= self.arena.g.n() || v >= self.arena.h.n() {
                return Err(Error::Input(format!(
                    "pebbled pair ({u}, {v}) is out of range"
                )));
            }
        }
        Ok(())
    }

    fn validate_move(&self, mv: Move) -> Result<()> {
        if mv.slot >= self.k || mv.vertex >= self.arena.order(mv.side) {
            return Err(Error::Input(format!("illegal move {mv:?}")));
        }
        Ok(())
    }

    /// Spoiler's rounds to win from a slot array, within `left` rounds in
    /// the bounded game; `Some(0)` if the position is already lost.
    fn value(&mut self, pebbles: &[Option<(usize, usize)>], left: usize) -> Option<usize> {
        if !legal_position(self.arena, pebbles) {
            return Some(0);
        }
        let p = position(pebbles);
        match &mut self.engine {
            Engine::Bounded(s) => s.rounds_to_win(&p, left),
            Engine::Unbounded(f) => f.rank(&p).expect("legal positions are ranked"),
        }
    }

    /// Rounds Spoiler needs after `mv`, including it.
    fn move_value(
        &mut self,
        pebbles: &[Option<(usize, usize)>],
        mv: Move,
        left: usize,
    ) -> Option<usize> {
        let n = self.arena.order(mv.side.other());
        let mut worst = 0;
        for y in 0..n {
            worst = worst.max(self.value(&apply(pebbles, mv, y), left.saturating_sub(1))?);
        }
        (worst < left).then_some(worst + 1)
    }

    /// Legal moves for `role` with the engine's choice. `left` is the number
    /// of rounds still to play, ignored in the unbounded game.
    pub fn step(
        &mut self,
        pebbles: &[Option<(usize, usize)>],
        left: usize,
        role: Role,
    ) -> Result<Step> {
        self.validate(pebbles)?;
        let left = match self.engine {
            Engine::Bounded(_) => left,
            Engine::Unbounded(_) => usize::MAX,
        };
        if !legal_position(self.arena, pebbles) {
            return Ok(Step::Over(Player::Spoiler));
        }
        if left == 0 {
            return Ok(Step::Over(Player::Duplicator));
        }
        match role {
            Role::Spoiler => {
                let (arena, k) = (self.arena, self.k);
                let legal: Vec<Move> = [Side::G, Side::H]
                    .into_iter()
                    .flat_map(|side| {
                        (0..arena.order(side)).flat_map(move |vertex| {
                            (0..k).map(move |slot| Move { side, vertex, slot })
                        })
                    })
                    .collect();
                let mut best: Option<(usize, Move)> = None;
                if self.value(pebbles, left).is_some() {
                    for &mv in &legal {
                        if let Some(t) = self.move_value(pebbles, mv, left) {
                            if best.is_none_or(|(b, _)| t < b) {
                                best = Some((t, mv));
                            }
                        }
                    }
                }
                Ok(Step::Spoiler(SpoilerStep {
                    legal,
                    optimal: best.map(|b| b.1),
                    rounds_to_win: best.map(|b| b.0),
                }))
            }
            Role::Duplicator(mv) => {
                self.validate_move(mv)?;
                let legal: Vec<usize> = (0..self.arena.order(mv.side.other())).collect();
                let mut best: Option<(usize, usize)> = None;
                for &y in &legal {
                    let delay = self
                        .value(&apply(pebbles, mv, y), left - 1)
                        .map_or(usize::MAX, |t| t);
                    if best.is_none_or(|(d, _)| delay > d) {
                        best = Some((delay, y));
                    }
                }
                Ok(Step::Duplicator(DuplicatorStep {
                    legal,
                    reply: best.map(|b| b.1),
                    survives: best.is_some_and(|b| b.0 == usize::MAX),
                }))
            }
        }
    }
}

/// One-shot [`Game::step`]; `rounds` of `None` plays the unbounded game.
pub fn game_step(
    g: &Graph,
    h: &Graph,
    k: usize,
    rounds: Option<usize>,
    pebbles: &[Option<(usize, usize)>],
    role: Role,
) -> Result<Step> {
    Game::new(g, h, k, rounds)?.step(pebbles, rounds.unwrap_or(usize::MAX), role)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TranscriptEntry {
    pub round: usize,
    pub player: Player,
    pub graph: Side,
    pub vertex: usize,
    pub slot: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Transcript {
    pub pebbles: usize,
    /// Round limit; absent for the unbounded game.
    pub rounds: Option<usize>,
    pub moves: Vec<TranscriptEntry>,
    /// Absent while undecided.
    pub winner: Option<Player>,
}

impl Transcript {
    pub fn new(pebbles: usize, rounds: Option<usize>) -> Self {
        Transcript {
            pebbles,
            rounds,
            moves: Vec::new(),
            winner: None,
        }
    }

    /// Appends a full round.
    pub fn record(&mut self, mv: Move, reply: usize) {
        let round = self.moves.len() / 2 + 1;
        self.moves.push(TranscriptEntry {
            round,
            player: Player::Spoiler,
            graph: mv.side,
            vertex: mv.vertex,
            slot: mv.slot,
        });
        self.moves.push(TranscriptEntry {
            round,
            player: Player::Duplicator,
            graph: mv.side.other(),
            vertex: reply,
            slot: mv.slot,
        });
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("transcripts serialize")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Input(format!("transcript: {e}")))
    }
}

/// Plays the moves of `t` on `g` and `h` and returns the winner they
/// determine, `None` if the game is still open.
pub fn replay(g: &Graph, h: &Graph, t: &Transcript) -> Result<Option<Player>> {
    let arena = Arena::new(g, h);
    let bad = |msg: String| Err(Error::Input(msg));
    if !t.moves.len().is_multiple_of(2) {
        return bad("the last round is incomplete".into());
    }
    let mut pebbles: Pebbles = vec![None; t.pebbles];
    for (i, pair) in t.moves.chunks(2).enumerate() {
        let (s, d) = (&pair[0], &pair[1]);
        let round = i + 1;
        if s.round != round
            || d.round != round
            || s.player != Player::Spoiler
            || d.player != Player::Duplicator
        {
            return bad(format!("round {round} is out of order"));
        }
        if d.graph != s.graph.other() || d.slot != s.slot || s.slot >= t.pebbles {
            return bad(format!("round {round} uses mismatched pebbles"));
        }
        if s.vertex >= arena.order(s.graph) || d.vertex >= arena.order(d.graph) {
            return bad(format!("round {round} names a missing vertex"));
        }
        if t.rounds.is_some_and(|r| round > r) {
            return bad(format!("round {round} exceeds the limit"));
        }
        let mv = Move {
            side: s.graph,
            vertex: s.vertex,
            slot: s.slot,
        };
        pebbles = apply(&pebbles, mv, d.vertex);
        if !legal_position(arena, &pebbles) {
            if 2 * round != t.moves.len() {
                return bad(format!("play continues after Spoiler won in round {round}"));
            }
            return Ok(Some(Player::Spoiler));
        }
    }
    Ok(t.rounds
        .filter(|&r| r == t.moves.len() / 2)
        .map(|_| Player::Duplicator))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::hypercube;

    #[test]
    fn spoiler_flags_a_move_on_triangles() {
        let (g, h) = (Graph::complete(3), Graph::complete(2));
        let Step::Spoiler(s) = game_step(&g, &h, 3, Some(3), &[None; 3], Role::Spoiler).unwrap()
        else {
            panic!()
        };
        assert_eq!(
            s.optimal,
            Some(Move {
                side: Side::G,
                vertex: 0,
                slot: 0
            })
        );
        assert_eq!(s.rounds_to_win, Some(3));
        assert_eq!(s.legal.len(), (3 + 2) * 3);
    }

    #[test]
    fn zero_rounds_left() {
        let (g, h) = (Graph::complete(3), Graph::complete(2));
        let mut game = Game::new(&g, &h, 2, Some(2)).unwrap();
        assert_eq!(
            game.step(&[None, None], 0, Role::Spoiler).unwrap(),
            Step::Over(Player::Duplicator)
        );
        let broken = [Some((0, 0)), Some((1, 0))];
        assert_eq!(
            game.step(&broken, 0, Role::Spoiler).unwrap(),
            Step::Over(Player::Spoiler)
        );
    }

    #[test]
    fn duplicator_always_has_a_reply_on_the_cube() {
        let (q, c) = (hypercube(3).unwrap(), Graph::cycle(6).unwrap());
        let mut game = Game::new(&q, &c, 3, None).unwrap();
        let mut pebbles: Pebbles = vec![None; 3];
        // a fixed stream of Spoiler moves, answered by the engine
        for i in 0..40 {
            let side = if i % 3 == 0 { Side::H } else { Side::G };
            let mv = Move {
                side,
                vertex: (i * 5 + 1) % game.arena.order(side),
                slot: i % 3,
            };
            let Step::Duplicator(d) = game.step(&pebbles, 0, Role::Duplicator(mv)).unwrap() else {
                panic!()
            };
            assert!(d.survives);
            pebbles = apply(&pebbles, mv, d.reply.unwrap());
        }
    }

    #[test]
    fn engine_spoiler_beats_any_duplicator() {
        let (g, h) = (Graph::complete(3), Graph::complete(2));
        let mut game = Game::new(&g, &h, 3, Some(3)).unwrap();
        // every Duplicator strategy: enumerate all reply sequences
        for seq in 0..8 {
            let mut pebbles: Pebbles = vec![None; 3];
            let mut t = Transcript::new(3, Some(3));
            let mut over = None;
            for round in 0..3 {
                match game.step(&pebbles, 3 - round, Role::Spoiler).unwrap() {
                    Step::Over(p) => {
                        over = Some(p);
                        break;
                    }
                    Step::Spoiler(s) => {
                        let mv = s.optimal.unwrap();
                        let y = (seq >> round) & 1;
                        let y = y.min(game.arena.order(mv.side.other()) - 1);
                        t.record(mv, y);
                        pebbles = apply(&pebbles, mv, y);
                    }
                    Step::Duplicator(_) => unreachable!(),
                }
            }
            let winner = over.or_else(|| replay(&g, &h, &t).unwrap());
            assert_eq!(winner, Some(Player::Spoiler));
            assert_eq!(replay(&g, &h, &t).unwrap(), Some(Player::Spoiler));
            let back = Transcript::from_json(&t.to_json()).unwrap();
            assert_eq!(back, t);
        }
    }

    #[test]
    fn replay_rejects_bad_transcripts() {
        let (g, h) = (Graph::complete(3), Graph::complete(2));
        let mut t = Transcript::new(2, Some(2));
        t.record(
            Move {
                side: Side::G,
                vertex: 0,
                slot: 0,
            },
            0,
        );
        t.record(
            Move {
                side: Side::G,
                vertex: 1,
                slot: 1,
            },
            1,
        );
        assert_eq!(replay(&g, &h, &t).unwrap(), Some(Player::Duplicator));
        t.moves[3].slot = 0;
        assert!(replay(&g, &h, &t).is_err());
        t.moves.pop();
        assert!(replay(&g, &h, &t).is_err());
    }
}
