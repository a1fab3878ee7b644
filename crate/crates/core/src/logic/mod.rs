//! First-order formulas over the vocabulary `{adj, =}`.
//!
//! Concrete syntax is an S-expression grammar:
//!
//! ```text
//! formula := "true" | "false"
//!          | "(" "adj" var var ")" | "(" "=" var var ")"
//!          | "(" "not" formula ")"
//!          | "(" "and" formula* ")" | "(" "or" formula* ")"
//!          | "(" ("E" | "exists") var formula ")"
//!          | "(" ("A" | "forall") var formula ")"
//! var     := [A-Za-z_][A-Za-z0-9_']*
//! ```
//!
//! Printing always uses `E` and `A`.

mod defines;
mod eval;
mod sexpr;

pub use defines::{defines_check, ClassFilter};
pub use eval::{evaluate, evaluate_sentence, Assignment};
pub use sexpr::parse_formula;

use std::collections::BTreeSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    True,
    False,
    Adj(String, String),
    Eq(String, String),
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    Exists(String, Box<Formula>),
    Forall(String, Box<Formula>),
}

impl Formula {
    pub fn adj(x: &str, y: &str) -> Self {
        Formula::Adj(x.into(), y.into())
    }

    pub fn eq(x: &str, y: &str) -> Self {
        Formula::Eq(x.into(), y.into())
    }

    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn exists(x: &str, f: Formula) -> Self {
        Formula::Exists(x.into(), Box::new(f))
    }

    pub fn forall(x: &str, f: Formula) -> Self {
        Formula::Forall(x.into(), Box::new(f))
    }

    /// Maximum nesting of quantifiers.
    pub fn depth(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Adj(..) | Formula::Eq(..) => 0,
            Formula::Not(f) => f.depth(),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().map(Formula::depth).max().unwrap_or(0),
            Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.depth(),
        }
    }

    /// Number of distinct variable names, bound or free.
    pub fn width(&self) -> usize {
        let mut names = BTreeSet::new();
        self.collect_names(&mut names);
        names.len()
    }

    fn collect_names<'a>(&'a self, out: &mut BTreeSet<&'a str>) {
        match self {
            Formula::True | Formula::False => {}
            Formula::Adj(x, y) | Formula::Eq(x, y) => {
                out.insert(x);
                out.insert(y);
            }
            Formula::Not(f) => f.collect_names(out),
            Formula::And(fs) | Formula::Or(fs) => fs.iter().for_each(|f| f.collect_names(out)),
            Formula::Exists(x, f) | Formula::Forall(x, f) => {
                out.insert(x);
                f.collect_names(out);
            }
        }
    }

    pub fn free_variables(&self) -> BTreeSet<String> {
        fn go(f: &Formula, bound: &mut Vec<String>, out: &mut BTreeSet<String>) {
            match f {
                Formula::True | Formula::False => {}
                Formula::Adj(x, y) | Formula::Eq(x, y) => {
                    for v in [x, y] {
                        if !bound.contains(v) {
                            out.insert(v.clone());
                        }
                    }
                }
                Formula::Not(g) => go(g, bound, out),
                Formula::And(gs) | Formula::Or(gs) => gs.iter().for_each(|g| go(g, bound, out)),
                Formula::Exists(x, g) | Formula::Forall(x, g) => {
                    bound.push(x.clone());
                    go(g, bound, out);
                    bound.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        go(self, &mut Vec::new(), &mut out);
        out
    }

    pub fn is_sentence(&self) -> bool {
        self.free_variables().is_empty()
    }

    /// Number of nodes in the syntax tree.
    pub fn size(&self) -> usize {
        match self {
            Formula::True | Formula::False | Formula::Adj(..) | Formula::Eq(..) => 1,
            Formula::Not(f) | Formula::Exists(_, f) | Formula::Forall(_, f) => 1 + f.size(),
            Formula::And(fs) | Formula::Or(fs) => 1 + fs.iter().map(Formula::size).sum::<usize>(),
        }
    }
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Formula::True => write!(f, "true"),
            Formula::False => write!(f, "false"),
            Formula::Adj(x, y) => write!(f, "(adj {x} {y})"),
            Formula::Eq(x, y) => write!(f, "(= {x} {y})"),
            Formula::Not(g) => write!(f, "(not {g})"),
            Formula::And(gs) | Formula::Or(gs) => {
                write!(
                    f,
                    "({}",
                    if matches!(self, Formula::And(_)) {
                        "and"
                    } else {
                        "or"
                    }
                )?;
                for g in gs {
                    write!(f, " {g}")?;
                }
                write!(f, ")")
            }
            Formula::Exists(x, g) => write!(f, "(E {x} {g})"),
            Formula::Forall(x, g) => write!(f, "(A {x} {g})"),
        }
    }
}

/// `exists x y z` pairwise distinct and pairwise adjacent.
pub fn triangle_sentence() -> Formula {
    let pairs = [("x", "y"), ("y", "z"), ("x", "z")];
    let mut parts: Vec<Formula> = pairs
        .iter()
        .map(|(a, b)| Formula::not(Formula::eq(a, b)))
        .collect();
    parts.extend(pairs.iter().map(|(a, b)| Formula::adj(a, b)));
    Formula::exists(
        "x",
        Formula::exists("y", Formula::exists("z", Formula::And(parts))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Formula {
        parse_formula(s).unwrap()
    }

    #[test]
    fn golden_metrics() {
        let golden: [(&str, usize, usize); 10] = [
            ("true", 0, 0),
            ("(adj x y)", 0, 2),
            ("(E x (E y (adj x y)))", 2, 2),
            ("(E x (E y (and (adj x y) (E x (adj x y)))))", 3, 2),
            ("(A x (E y (and (adj x y) (not (= x y)))))", 2, 2),
            ("(or (E x (= x x)) (E y (E z (adj y z))))", 2, 3),
            ("(not (A x (A y (A z (or (= x y) (= y z) (= x z))))))", 3, 3),
            ("(E x (E y (E x (E y (adj x y)))))", 4, 2),
            ("(and (= a b) (adj b c))", 0, 3),
            ("(E u (or))", 1, 1),
        ];
        for (text, d, w) in golden {
            let f = p(text);
            assert_eq!((f.depth(), f.width()), (d, w), "{text}");
        }
        let t = triangle_sentence();
        assert_eq!((t.depth(), t.width()), (3, 3));
    }

    #[test]
    fn free_variables() {
        assert!(triangle_sentence().is_sentence());
        let f = p("(E x (adj x y))");
        assert_eq!(
            f.free_variables().into_iter().collect::<Vec<_>>(),
            vec!["y".to_string()]
        );
    }

    #[test]
    fn display_round_trips() {
        let t = triangle_sentence();
        assert_eq!(p(&t.to_string()), t);
    }
}
