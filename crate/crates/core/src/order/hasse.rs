use std::collections::HashMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::group::{format_word, Word};
use crate::system::CoxeterSystem;

use super::TwistedOrder;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseNode {
    pub word: Word,
    pub tlen: i64,
}

/// Cover graph of `≤_B` on a finite set of elements; `edges[k] = [i, j]` means
/// node `j` covers node `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HasseGraph {
    pub system: String,
    pub biclosed: String,
    pub radius: usize,
    pub nodes: Vec<HasseNode>,
    pub edges: Vec<[usize; 2]>,
}

/// Hasse diagram of `≤_B` restricted to `ball(radius)`.
pub fn hasse(order: &TwistedOrder, radius: usize) -> HasseGraph {
    let sys = order.system();
    let mut elems = sys.ball(radius);
    order.sort(&mut elems);
    let index: HashMap<Word, usize> = elems.iter().enumerate().map(|(i, w)| (w.word().to_vec(), i)).collect();
    let mut edges = Vec::new();
    for (i, w) in elems.iter().enumerate() {
        for u in order.covers(w).up {
            if let Some(&j) = index.get(u.word()) {
                edges.push([i, j]);
            }
        }
    }
    edges.sort_unstable();
    HasseGraph {
        system: sys.label().to_string(),
        biclosed: order.biclosed().to_string(),
        radius,
        nodes: elems
            .iter()
            .map(|w| HasseNode { word: w.word().to_vec(), tlen: order.tlen(w) })
            .collect(),
        edges,
    }
}

impl HasseGraph {
    /// Induced subgraph on the given words, in this graph's node order; `None`
    /// if some word is not a node.
    pub fn restrict(&self, words: &[Word]) -> Option<HasseGraph> {
        let mut keep: Vec<usize> = Vec::with_capacity(words.len());
        for w in words {
            keep.push(self.nodes.iter().position(|n| &n.word == w)?);
        }
        keep.sort_unstable();
        keep.dedup();
        let remap: HashMap<usize, usize> = keep.iter().enumerate().map(|(new, &old)| (old, new)).collect();
        let edges = self
            .edges
            .iter()
            .filter_map(|[i, j]| Some([*remap.get(i)?, *remap.get(j)?]))
            .collect();
        Some(HasseGraph {
            system: self.system.clone(),
            biclosed: self.biclosed.clone(),
            radius: self.radius,
            nodes: keep.iter().map(|&i| self.nodes[i].clone()).collect(),
            edges,
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Graphviz source, bottom to top, one rank per twisted length.
    pub fn to_dot(&self, sys: &CoxeterSystem) -> String {
        let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n");
        for (i, n) in self.nodes.iter().enumerate() {
            let label = if n.word.is_empty() { "e".to_string() } else { format_word(sys, &n.word) };
            let _ = writeln!(out, "  n{i} [label=\"{}\"];", label.replace('"', "\\\""));
        }
        let mut i = 0;
        while i < self.nodes.len() {
            let t = self.nodes[i].tlen;
            let mut j = i;
            let mut ids = Vec::new();
            while j < self.nodes.len() && self.nodes[j].tlen == t {
                ids.push(format!("n{j};"));
                j += 1;
            }
            let _ = writeln!(out, "  {{ rank=same; {} }}", ids.join(" "));
            i = j;
        }
        for [a, b] in &self.edges {
            let _ = writeln!(out, "  n{a} -> n{b};");
        }
        out.push_str("}\n");
        out
    }

    /// Plain listing: one node per line, then the covers.
    pub fn to_text(&self, sys: &CoxeterSystem) -> String {
        let name = |i: usize| {
            let w = &self.nodes[i].word;
            if w.is_empty() { "e".to_string() } else { format_word(sys, w) }
        };
        let mut out = String::new();
        for (i, n) in self.nodes.iter().enumerate() {
            let _ = writeln!(out, "{:>4}  l_B={:<3} {}", i, n.tlen, name(i));
        }
        for [a, b] in &self.edges {
            let _ = writeln!(out, "{} < {}", name(*a), name(*b));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::closure::Biclosed;

    #[test]
    fn a1_small_ball() {
        let a1 = CoxeterSystem::from_type("A~1").unwrap();
        let o = TwistedOrder::new(&a1, Biclosed::hat_of_negative(&a1));
        let g = hasse(&o, 2);
        assert_eq!(g.nodes.len(), 5);
        assert_eq!(g.edges.len(), 4);
        assert_eq!(g.nodes[0].word, vec![1, 0]);
        let back = HasseGraph::from_json(&g.to_json()).unwrap();
        assert_eq!(back, g);
        let dot = g.to_dot(&a1);
        assert!(dot.contains("rankdir=BT"));
        assert!(dot.contains("label=\"e\""));
        let sub = g.restrict(&[vec![], vec![0]]).unwrap();
        assert_eq!(sub.edges, vec![[0, 1]]);
        assert!(g.restrict(&[vec![0, 1, 0]]).is_none());
    }
}
