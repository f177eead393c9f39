//! The two reference diagrams near the identity of `Ã1` and `Ã2` for
//! `B = hat(Φ⁻)`, with their element lists and covers kept in fixture files.

use std::collections::BTreeSet;

use crate::closure::parse_biclosed;
use crate::error::{Error, Result};
use crate::group::GroupElement;
use crate::order::{hasse, HasseGraph, TwistedOrder};
use crate::system::CoxeterSystem;

pub const FIGURE_NAMES: [&str; 2] = ["a1-twist", "a2-twist"];

/// A parsed fixture: the system (with display names), the order, the labelled
/// elements and the expected cover relations between labels.
pub struct Figure {
    pub name: String,
    pub order: TwistedOrder,
    pub radius: usize,
    pub nodes: Vec<(String, GroupElement)>,
    pub edges: Vec<(String, String)>,
}

fn source(name: &str) -> Result<&'static str> {
    match name {
        "a1-twist" => Ok(include_str!("../fixtures/a1_twist.txt")),
        "a2-twist" => Ok(include_str!("../fixtures/a2_twist.txt")),
        _ => Err(Error::Parse(format!(
            "unknown figure {name:?} (expected one of {})",
            FIGURE_NAMES.join(", ")
        ))),
    }
}

pub fn load(name: &str) -> Result<Figure> {
    let text = source(name)?;
    let bad = |line: &str| Error::Parse(format!("figure fixture {name}: bad line {line:?}"));
    let mut sys: Option<CoxeterSystem> = None;
    let mut order = None;
    let mut radius = 0;
    let mut nodes = Vec::new();
    let mut edges = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let (key, rest) = line.split_once(' ').ok_or_else(|| bad(line))?;
        let rest = rest.trim();
        match key {
            "system" => sys = Some(CoxeterSystem::from_type(rest)?),
            "names" => {
                let s = sys.as_ref().ok_or_else(|| bad(line))?;
                sys = Some(s.with_names(rest.split_whitespace().map(String::from).collect())?);
            }
            "biclosed" => {
                let s = sys.as_ref().ok_or_else(|| bad(line))?;
                order = Some(TwistedOrder::new(s, parse_biclosed(s, rest)?));
            }
            "radius" => radius = rest.parse().map_err(|_| bad(line))?,
            "node" => {
                let s = sys.as_ref().ok_or_else(|| bad(line))?;
                let (label, word) = rest.split_once(' ').ok_or_else(|| bad(line))?;
                let w = s.parse_word(word)?;
                let x = s.from_word(&w)?;
                if x.length() != w.len() {
                    return Err(bad(line));
                }
                nodes.push((label.to_string(), x));
            }
            "edge" => {
                let (a, b) = rest.split_once(' ').ok_or_else(|| bad(line))?;
                edges.push((a.to_string(), b.trim().to_string()));
            }
            _ => return Err(bad(line)),
        }
    }
    let order = order.ok_or_else(|| Error::Parse(format!("figure fixture {name}: no biclosed set")))?;
    Ok(Figure { name: name.to_string(), order, radius, nodes, edges })
}

impl Figure {
    pub fn system(&self) -> &CoxeterSystem {
        self.order.system()
    }

    /// `hasse(radius)` restricted to the fixture's elements.
    pub fn graph(&self) -> Result<HasseGraph> {
        let words: Vec<Vec<usize>> = self.nodes.iter().map(|(_, x)| x.word().to_vec()).collect();
        hasse(&self.order, self.radius)
            .restrict(&words)
            .ok_or_else(|| Error::Domain(format!("figure {} has elements outside ball({})", self.name, self.radius)))
    }

    /// Label of an element, if it is one of the figure's nodes.
    pub fn label_of(&self, word: &[usize]) -> Option<&str> {
        self.nodes.iter().find(|(_, x)| x.word() == word).map(|(l, _)| l.as_str())
    }

    /// Fixture edges as sorted unordered label pairs.
    pub fn expected_edges(&self) -> BTreeSet<(String, String)> {
        self.edges.iter().map(|(a, b)| unordered(a, b)).collect()
    }

    /// Edges of [`Figure::graph`] as sorted unordered label pairs.
    pub fn computed_edges(&self, graph: &HasseGraph) -> BTreeSet<(String, String)> {
        graph
            .edges
            .iter()
            .map(|[i, j]| {
                let a = self.label_of(&graph.nodes[*i].word).unwrap_or("?");
                let b = self.label_of(&graph.nodes[*j].word).unwrap_or("?");
                unordered(a, b)
            })
            .collect()
    }
}

fn unordered(a: &str, b: &str) -> (String, String) {
    if a <= b {
        (a.to_string(), b.to_string())
    } else {
        (b.to_string(), a.to_string())
    }
}

/// The named figure as a Hasse graph.
pub fn emit_figure(name: &str) -> Result<(CoxeterSystem, HasseGraph)> {
    let fig = load(name)?;
    let g = fig.graph()?;
    Ok((fig.system().clone(), g))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_match_covers() {
        for name in FIGURE_NAMES {
            let fig = load(name).unwrap();
            let g = fig.graph().unwrap();
            assert_eq!(g.nodes.len(), fig.nodes.len(), "{name}");
            assert_eq!(fig.computed_edges(&g), fig.expected_edges(), "{name}");
        }
    }

    #[test]
    fn unknown_figure() {
        assert!(matches!(load("b2"), Err(Error::Parse(_))));
    }
}
