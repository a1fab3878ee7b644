//! Terminal play against the engine.

use anyhow::Result;
use efgraph::ef::{apply, Game, Move, Pebbles, Player, Role, Side, Step, Transcript};
use efgraph::Graph;
use std::io::{BufRead, Write};

/// Rounds after which an unbounded session stops.
pub const SESSION_CAP: usize = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Seat {
    Spoiler,
    Duplicator,
}

pub struct Session<'a> {
    pub g: &'a Graph,
    pub h: &'a Graph,
    pub pebbles: usize,
    /// `None` plays the unbounded game.
    pub rounds: Option<usize>,
    pub seat: Seat,
}

fn show(pebbles: &Pebbles) -> String {
    let placed: Vec<String> = pebbles
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|(u, v)| format!("{i}:({u},{v})")))
        .collect();
    if placed.is_empty() {
        "no pebbles placed".into()
    } else {
        placed.join(" ")
    }
}

fn side_name(s: Side) -> &'static str {
    match s {
        Side::G => "G",
        Side::H => "H",
    }
}

fn parse_move(line: &str) -> Option<Move> {
    let mut it = line.split_whitespace();
    let side = match it.next()?.to_ascii_uppercase().as_str() {
        "G" => Side::G,
        "H" => Side::H,
        _ => return None,
    };
    let vertex = it.next()?.parse().ok()?;
    let slot = it.next()?.parse().ok()?;
    it.next().is_none().then_some(Move { side, vertex, slot })
}

/// Reads one trimmed line, `None` at end of input or on `quit`.
fn read(input: &mut impl BufRead, out: &mut impl Write, prompt: &str) -> Result<Option<String>> {
    write!(out, "{prompt}")?;
    out.flush()?;
    let mut line = String::new();
    if input.read_line(&mut line)? == 0 {
        return Ok(None);
    }
    let line = line.trim().to_string();
    Ok((line != "quit").then_some(line))
}

fn spoiler_move(
    game: &mut Game<'_>,
    pebbles: &Pebbles,
    left: usize,
    seat: Seat,
    round: usize,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<Option<Move>> {
    let Step::Spoiler(step) = game.step(pebbles, left, Role::Spoiler)? else {
        unreachable!("the caller checks that the game is open")
    };
    if seat == Seat::Duplicator {
        // without a win in sight the engine cycles through its moves
        let mv = step
            .optimal
            .unwrap_or(step.legal[(round - 1) % step.legal.len()]);
        writeln!(
            out,
            "spoiler plays {} {} {}",
            side_name(mv.side),
            mv.vertex,
            mv.slot
        )?;
        return Ok(Some(mv));
    }
    loop {
        let Some(line) = read(input, out, "spoiler (G|H vertex slot)> ")? else {
            return Ok(None);
        };
        match parse_move(&line).filter(|mv| step.legal.contains(mv)) {
            Some(mv) => return Ok(Some(mv)),
            None => {
                let legal: Vec<String> = step
                    .legal
                    .iter()
                    .map(|m| format!("{} {} {}", side_name(m.side), m.vertex, m.slot))
                    .collect();
                writeln!(out, "illegal move; legal moves: {}", legal.join(", "))?;
            }
        }
    }
}

fn duplicator_reply(
    game: &mut Game<'_>,
    pebbles: &Pebbles,
    left: usize,
    mv: Move,
    seat: Seat,
    input: &mut impl BufRead,
    out: &mut impl Write,
) -> Result<Option<usize>> {
    let Step::Duplicator(step) = game.step(pebbles, left, Role::Duplicator(mv))? else {
        unreachable!("the caller checks that the game is open")
    };
    let other = side_name(mv.side.other());
    if seat == Seat::Spoiler {
        let y = step.reply.expect("the other graph is non-empty");
        writeln!(out, "duplicator answers {other} {y}")?;
        return Ok(Some(y));
    }
    loop {
        let Some(line) = read(input, out, &format!("duplicator ({other} vertex)> "))? else {
            return Ok(None);
        };
        match line
            .parse::<usize>()
            .ok()
            .filter(|y| step.legal.contains(y))
        {
            Some(y) => return Ok(Some(y)),
            None => writeln!(
                out,
                "illegal move; legal moves: {other} 0..{}",
                step.legal.len()
            )?,
        }
    }
}

/// Plays until the game ends, input runs out or the session cap is reached,
/// and returns the transcript.
pub fn run(s: &Session<'_>, input: &mut impl BufRead, out: &mut impl Write) -> Result<Transcript> {
    let mut game = Game::new(s.g, s.h, s.pebbles, s.rounds)?;
    let mut transcript = Transcript::new(s.pebbles, s.rounds);
    let mut pebbles: Pebbles = vec![None; s.pebbles];
    let limit = s.rounds.unwrap_or(SESSION_CAP);
    for round in 1..=limit + 1 {
        let left = limit + 1 - round;
        if let Step::Over(winner) = game.step(&pebbles, left, Role::Spoiler)? {
            if s.rounds.is_some() || winner == Player::Spoiler {
                transcript.winner = Some(winner);
            }
            break;
        }
        if round > limit {
            break;
        }
        writeln!(out, "round {round}: {}", show(&pebbles))?;
        let Some(mv) = spoiler_move(&mut game, &pebbles, left, s.seat, round, input, out)? else {
            break;
        };
        let Some(y) = duplicator_reply(&mut game, &pebbles, left, mv, s.seat, input, out)? else {
            break;
        };
        pebbles = apply(&pebbles, mv, y);
        transcript.record(mv, y);
    }
    let verdict = match transcript.winner {
        Some(Player::Spoiler) => "Spoiler wins".to_string(),
        Some(Player::Duplicator) => "Duplicator wins".to_string(),
        None => format!("undecided after {} rounds", transcript.moves.len() / 2),
    };
    writeln!(out, "{verdict}")?;
    Ok(transcript)
}

#[cfg(test)]
mod tests {
    use super::*;
    use efgraph::ef::replay;
    use std::io::Cursor;

    fn play(
        g: &Graph,
        h: &Graph,
        k: usize,
        rounds: Option<usize>,
        seat: Seat,
        script: &str,
    ) -> (Transcript, String) {
        let s = Session {
            g,
            h,
            pebbles: k,
            rounds,
            seat,
        };
        let mut out = Vec::new();
        let t = run(&s, &mut Cursor::new(script.to_string()), &mut out).unwrap();
        (t, String::from_utf8(out).unwrap())
    }

    #[test]
    fn moves_parse() {
        assert_eq!(
            parse_move("g 2 1"),
            Some(Move {
                side: Side::G,
                vertex: 2,
                slot: 1
            })
        );
        assert_eq!(parse_move("H 0 0 0"), None);
        assert_eq!(parse_move("X 0 0"), None);
    }

    #[test]
    fn engine_spoiler_beats_any_reply() {
        let (k3, k2) = (Graph::complete(3), Graph::complete(2));
        for script in ["0\n0\n0\n", "1\n0\n1\n", "0\n1\n0\n"] {
            let (t, _) = play(&k3, &k2, 3, Some(3), Seat::Duplicator, script);
            assert_eq!(t.winner, Some(Player::Spoiler));
            assert!(t.moves.len() <= 6);
            assert_eq!(replay(&k3, &k2, &t).unwrap(), t.winner);
        }
    }

    #[test]
    fn illegal_input_reprompts() {
        let (k3, k2) = (Graph::complete(3), Graph::complete(2));
        let (t, out) = play(&k3, &k2, 3, Some(3), Seat::Duplicator, "7\nx\n0\n0\n0\n");
        assert!(out.contains("illegal move; legal moves: H 0..2"));
        assert_eq!(t.winner, Some(Player::Spoiler));
    }

    #[test]
    fn engine_duplicator_survives_the_session() {
        let cube = efgraph::families::hypercube(3).unwrap();
        let c6 = Graph::cycle(6).unwrap();
        let script: String = (0..SESSION_CAP)
            .map(|i| format!("G {} {}\n", i % 8, i % 3))
            .collect();
        let (t, out) = play(&cube, &c6, 3, None, Seat::Spoiler, &script);
        assert_eq!(t.winner, None);
        assert_eq!(t.moves.len(), 2 * SESSION_CAP);
        assert!(out.ends_with("undecided after 50 rounds\n"));
        assert_eq!(replay(&cube, &c6, &t).unwrap(), None);
    }

    #[test]
    fn end_of_input_stops() {
        let (k3, k2) = (Graph::complete(3), Graph::complete(2));
        let (t, _) = play(&k3, &k2, 2, None, Seat::Spoiler, "G 0 0\n");
        assert_eq!((t.moves.len(), t.winner), (2, None));
    }
}
