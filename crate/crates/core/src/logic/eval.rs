use super::Formula;
use crate::error::{Error, Result};
use crate::graph::Graph;
use std::collections::BTreeMap;

pub type Assignment = BTreeMap<String, usize>;

fn holds<'a>(g: &Graph, f: &'a Formula, env: &mut Vec<(&'a str, usize)>) -> bool {
    let look = |env: &Vec<(&str, usize)>, x: &str| {
        env.iter()
            .rev()
            .find(|(name, _)| *name == x)
            .map(|e| e.1)
            .expect("free variables checked before evaluation")
    };
    match f {
        Formula::True => true,
        Formula::False => false,
        Formula::Adj(x, y) => g.has_edge(look(env, x), look(env, y)),
        Formula::Eq(x, y) => look(env, x) == look(env, y),
        Formula::Not(inner) => !holds(g, inner, env),
        Formula::And(fs) => fs.iter().all(|h| holds(g, h, env)),
        Formula::Or(fs) => fs.iter().any(|h| holds(g, h, env)),
        Formula::Exists(x, body) | Formula::Forall(x, body) => {
            let want = matches!(f, Formula::Exists(..));
            let mut found = !want;
            for v in 0..g.n() {
                env.push((x, v));
                let r = holds(g, body, env);
                env.pop();
                if r == want {
                    found = want;
                    break;
                }
            }
            found
        }
    }
}

/// Truth of `f` in `g` under `assignment`; quantifiers range over `V(g)`.
pub fn evaluate(g: &Graph, f: &Formula, assignment: &Assignment) -> Result<bool> {
    if let Some(x) = f
        .free_variables()
        .into_iter()
        .find(|x| !assignment.contains_key(x))
    {
        return Err(Error::UnboundVariable(x));
    }
    if let Some((x, v)) = assignment.iter().find(|(_, &v)| v >= g.n()) {
        return Err(Error::Input(format!(
            "{x} is assigned vertex {v}, but the graph has {} vertices",
            g.n()
        )));
    }
    let mut env: Vec<(&str, usize)> = assignment.iter().map(|(k, &v)| (k.as_str(), v)).collect();
    Ok(holds(g, f, &mut env))
}

pub fn evaluate_sentence(g: &Graph, f: &Formula) -> Result<bool> {
    evaluate(g, f, &Assignment::new())
}
