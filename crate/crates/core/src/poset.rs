//! The tableau poset induced by the row-strict 0-Hecke cover relation,
//! with interval extraction and DOT/JSON export.

use std::collections::{HashMap, VecDeque};
use std::fmt::Write as _;

use serde_json::json;

use crate::compositions::Composition;
use crate::error::{Error, Result};
use crate::hecke::{apply_pi, ActionResult};
use crate::tableaux::{enumerate_sit, ninv, DescentVariant, Tableau};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Cover {
    pub src: usize,
    pub dst: usize,
    pub gen: usize,
}

/// Hasse diagram on the standard immaculate tableaux of one shape, graded
/// by the inversion number of the reading word.
#[derive(Clone, Debug)]
pub struct HassePoset {
    pub shape: Composition,
    pub vertices: Vec<Tableau>,
    pub covers: Vec<Cover>,
    pub ranks: Vec<usize>,
}

pub fn build_poset(alpha: &Composition) -> HassePoset {
    let vertices = enumerate_sit(alpha);
    let index: HashMap<&Tableau, usize> = vertices.iter().enumerate().map(|(k, t)| (t, k)).collect();
    let n = alpha.n();
    let mut covers = Vec::new();
    for (src, t) in vertices.iter().enumerate() {
        for gen in 1..n {
            if let ActionResult::Swapped(img) = apply_pi(DescentVariant::RowStrict, gen, t).expect("in range") {
                covers.push(Cover { src, dst: index[&img], gen });
            }
        }
    }
    let invs: Vec<usize> = vertices.iter().map(|t| ninv(&t.reading_word())).collect();
    let min = invs.iter().copied().min().unwrap_or(0);
    let ranks = invs.iter().map(|v| v - min).collect();
    HassePoset { shape: alpha.clone(), vertices, covers, ranks }
}

impl HassePoset {
    pub fn index_of(&self, t: &Tableau) -> Option<usize> {
        self.vertices.iter().position(|v| v == t)
    }

    pub fn height(&self) -> usize {
        self.ranks.iter().copied().max().unwrap_or(0)
    }

    /// Vertex counts per rank, from bottom to top.
    pub fn rank_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.height() + 1];
        for &r in &self.ranks {
            sizes[r] += 1;
        }
        sizes
    }

    fn successors(&self) -> Vec<Vec<usize>> {
        let mut succ = vec![Vec::new(); self.vertices.len()];
        for c in &self.covers {
            succ[c.src].push(c.dst);
        }
        succ
    }

    fn predecessors(&self) -> Vec<Vec<usize>> {
        let mut pred = vec![Vec::new(); self.vertices.len()];
        for c in &self.covers {
            pred[c.dst].push(c.src);
        }
        pred
    }
}

#[derive(Clone, Debug)]
pub struct BoundsReport {
    pub min: Tableau,
    pub max: Tableau,
    pub graded: bool,
}

/// Confirms the poset is bounded and graded, reporting the two extremes.
pub fn check_bounds(p: &HassePoset) -> Result<BoundsReport> {
    let m = p.vertices.len();
    let mut has_in = vec![false; m];
    let mut has_out = vec![false; m];
    let mut graded = true;
    for c in &p.covers {
        has_in[c.dst] = true;
        has_out[c.src] = true;
        if p.ranks[c.dst] != p.ranks[c.src] + 1 {
            graded = false;
        }
    }
    let mins: Vec<usize> = (0..m).filter(|&k| !has_in[k]).collect();
    let maxs: Vec<usize> = (0..m).filter(|&k| !has_out[k]).collect();
    if mins.len() != 1 || maxs.len() != 1 {
        return Err(Error::NotStandard(format!(
            "poset on {} is not bounded: {} minimal, {} maximal",
            p.shape,
            mins.len(),
            maxs.len()
        )));
    }
    Ok(BoundsReport { min: p.vertices[mins[0]].clone(), max: p.vertices[maxs[0]].clone(), graded })
}

fn reachable(start: usize, adj: &[Vec<usize>]) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    while let Some(k) = queue.pop_front() {
        for &next in &adj[k] {
            if !seen[next] {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    seen
}

/// The closed interval [s, t]; empty when the endpoints are incomparable.
pub fn interval(p: &HassePoset, s: &Tableau, t: &Tableau) -> Result<Vec<Tableau>> {
    let si = p.index_of(s).ok_or_else(|| Error::NotInBasis(s.to_string()))?;
    let ti = p.index_of(t).ok_or_else(|| Error::NotInBasis(t.to_string()))?;
    let up = reachable(si, &p.successors());
    let down = reachable(ti, &p.predecessors());
    Ok((0..p.vertices.len())
        .filter(|&k| up[k] && down[k])
        .map(|k| p.vertices[k].clone())
        .collect())
}

/// Graphviz rendering with one node per tableau and covers labeled `pi_i`.
pub fn to_dot(p: &HassePoset) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph poset {{");
    let _ = writeln!(out, "  rankdir=BT;");
    for (k, t) in p.vertices.iter().enumerate() {
        let _ = writeln!(out, "  n{k} [label=\"{t}\"];");
    }
    let mut covers = p.covers.clone();
    covers.sort_by_key(|c| (c.src, c.gen));
    for c in &covers {
        let _ = writeln!(out, "  n{} -> n{} [label=\"pi_{}\"];", c.src, c.dst, c.gen);
    }
    out.push_str("}\n");
    out
}

pub fn to_json(p: &HassePoset) -> serde_json::Value {
    let mut covers = p.covers.clone();
    covers.sort_by_key(|c| (c.src, c.gen));
    json!({
        "shape": p.shape.parts(),
        "vertices": p.vertices.iter().map(|t| t.to_string()).collect::<Vec<_>>(),
        "covers": covers.iter().map(|c| json!({"src": c.src, "dst": c.dst, "gen": c.gen})).collect::<Vec<_>>(),
        "ranks": p.ranks,
    })
}
