//! Monomial algebras `k⟨x_1, …, x_t⟩ / (forbidden words)`.
//!
//! The normal words (those with no forbidden factor) form a basis, so
//! `dim kSⁱ` is one plus the number of normal words of length `1..=i`.
//! Counting runs over the Ufnarovski graph: vertices are the normal words of
//! length `L − 1` (with `L` the longest relation) and `v → v'` is labelled by
//! `a` when `v·a` is normal and `v'` is its last `L − 1` letters. A normal word
//! of length `q ≥ L − 1` is exactly a walk of length `q − L + 1`.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{Error, Result};
use crate::growth::GrowthProfile;
use crate::words::{enumerate_words, Word};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialPresentation {
    alphabet: Vec<String>,
    forbidden: Vec<Word>,
}

impl MonomialPresentation {
    /// Build and normalise: duplicates and relations containing another
    /// relation as a factor are dropped (neither changes the normal words).
    pub fn new(alphabet: Vec<String>, forbidden: Vec<Word>) -> Result<Self> {
        if alphabet.is_empty() {
            return Err(Error::Input("alphabet must be nonempty".into()));
        }
        for (i, a) in alphabet.iter().enumerate() {
            if a.is_empty() {
                return Err(Error::Input("letter names must be nonempty".into()));
            }
            if alphabet[..i].contains(a) {
                return Err(Error::Input(format!("letter {a:?} appears twice")));
            }
        }
        let t = alphabet.len();
        for f in &forbidden {
            if f.is_empty() {
                return Err(Error::Input("forbidden words must be nonempty".into()));
            }
            if f.alphabet_size() != t {
                return Err(Error::Input(format!("forbidden word {f} is not over the {t}-letter alphabet")));
            }
        }
        Ok(MonomialPresentation { alphabet, forbidden: normalize(forbidden) })
    }

    /// Parse relations written as strings of letter names, e.g. `"yx"`.
    /// Tokenisation is greedy longest-match against the alphabet.
    pub fn from_strings(alphabet: Vec<String>, forbidden: &[&str]) -> Result<Self> {
        let words = forbidden.iter().map(|s| parse_letters(&alphabet, s)).collect::<Result<Vec<_>>>()?;
        Self::new(alphabet, words)
    }

    pub fn alphabet(&self) -> &[String] {
        &self.alphabet
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet.len()
    }

    pub fn forbidden(&self) -> &[Word] {
        &self.forbidden
    }

    /// Longest relation length, at least 1.
    pub fn max_relation_length(&self) -> usize {
        self.forbidden.iter().map(Word::len).max().unwrap_or(1).max(1)
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        !self.forbidden.iter().any(|f| w.contains_factor(f))
    }

    pub fn render(&self, w: &Word) -> String {
        w.letters().iter().map(|&l| self.alphabet[l].as_str()).collect()
    }

    pub fn graph(&self) -> UfnarovskiGraph {
        UfnarovskiGraph::build(self)
    }
}

/// Split `text` into letters of `alphabet`, longest match first.
pub fn parse_letters(alphabet: &[String], text: &str) -> Result<Word> {
    let mut rest = text;
    let mut letters = Vec::new();
    while !rest.is_empty() {
        let best = alphabet
            .iter()
            .enumerate()
            .filter(|(_, a)| rest.starts_with(a.as_str()))
            .max_by_key(|(_, a)| a.len())
            .ok_or_else(|| Error::Input(format!("{text:?} is not a word over the alphabet {alphabet:?}")))?;
        letters.push(best.0);
        rest = &rest[best.1.len()..];
    }
    Word::new(letters, alphabet.len())
}

fn normalize(mut forbidden: Vec<Word>) -> Vec<Word> {
    forbidden.sort();
    forbidden.dedup();
    let keep: Vec<bool> = forbidden
        .iter()
        .map(|f| !forbidden.iter().any(|g| g != f && f.contains_factor(g)))
        .collect();
    forbidden.into_iter().zip(keep).filter_map(|(f, k)| k.then_some(f)).collect()
}

/// Summary of one strongly connected component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentSummary {
    pub vertices: usize,
    pub internal_edges: usize,
}

impl ComponentSummary {
    pub fn is_cyclic(&self) -> bool {
        self.internal_edges > 0
    }

    /// More than one cycle through the component.
    pub fn is_branching(&self) -> bool {
        self.internal_edges > self.vertices
    }
}

#[derive(Clone, Debug)]
pub struct UfnarovskiGraph {
    /// Normal words of length `L − 1`.
    pub vertices: Vec<Word>,
    /// `(from, letter, to)`.
    pub edges: Vec<(usize, usize, usize)>,
    pub components: Vec<ComponentSummary>,
    /// Component index of each vertex.
    pub component_of: Vec<usize>,
    vertex_len: usize,
    alphabet_size: usize,
    normal_below: Vec<BigUint>,
}

impl UfnarovskiGraph {
    fn build(mp: &MonomialPresentation) -> Self {
        let t = mp.alphabet_size();
        let vertex_len = mp.max_relation_length() - 1;
        let normal_below: Vec<BigUint> = (0..vertex_len)
            .map(|len| count_by_enumeration(mp, len))
            .collect();
        let vertices: Vec<Word> = enumerate_words(t, vertex_len, u64::MAX)
            .expect("nonempty alphabet")
            .filter(|w| mp.is_normal(w))
            .collect();
        let index: HashMap<&[usize], usize> = vertices.iter().enumerate().map(|(i, v)| (v.letters(), i)).collect();
        let mut edges = Vec::new();
        for (i, v) in vertices.iter().enumerate() {
            for a in 0..t {
                let x = v.push(a);
                if mp.is_normal(&x) {
                    let j = index[&x.letters()[1..]];
                    edges.push((i, a, j));
                }
            }
        }

        let mut g: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<NodeIndex> = vertices.iter().map(|_| g.add_node(())).collect();
        for &(i, _, j) in &edges {
            g.add_edge(nodes[i], nodes[j], ());
        }
        let sccs = tarjan_scc(&g);
        let mut component_of = vec![0; vertices.len()];
        for (c, scc) in sccs.iter().enumerate() {
            for v in scc {
                component_of[v.index()] = c;
            }
        }
        let mut components: Vec<ComponentSummary> =
            sccs.iter().map(|s| ComponentSummary { vertices: s.len(), internal_edges: 0 }).collect();
        for &(i, _, j) in &edges {
            if component_of[i] == component_of[j] {
                components[component_of[i]].internal_edges += 1;
            }
        }
        UfnarovskiGraph { vertices, edges, components, component_of, vertex_len, alphabet_size: t, normal_below }
    }

    /// Number of walks of `steps` edges, summed over all start vertices.
    pub fn walk_count(&self, steps: usize) -> BigUint {
        let mut counts = vec![BigUint::one(); self.vertices.len()];
        for _ in 0..steps {
            let mut next = vec![BigUint::zero(); self.vertices.len()];
            for &(i, _, j) in &self.edges {
                if !counts[i].is_zero() {
                    next[j] += &counts[i];
                }
            }
            counts = next;
        }
        counts.into_iter().sum()
    }

    pub fn count_normal_words(&self, length: usize) -> BigUint {
        if length < self.vertex_len {
            self.normal_below[length].clone()
        } else {
            self.walk_count(length - self.vertex_len)
        }
    }

    pub fn alphabet_size(&self) -> usize {
        self.alphabet_size
    }
}

fn count_by_enumeration(mp: &MonomialPresentation, length: usize) -> BigUint {
    let n = enumerate_words(mp.alphabet_size(), length, u64::MAX)
        .expect("nonempty alphabet")
        .filter(|w| mp.is_normal(w))
        .count();
    BigUint::from(n)
}

/// Number of normal words of exactly `length` letters.
pub fn count_normal_words(mp: &MonomialPresentation, length: usize) -> BigUint {
    mp.graph().count_normal_words(length)
}

/// `d_i = 1 + Σ_{q=1..i} (normal words of length q)` for `i ≤ horizon`.
/// Fails with `BudgetExceeded` if a dimension no longer fits in `usize`.
pub fn growth_profile_monomial(mp: &MonomialPresentation, horizon: usize) -> Result<GrowthProfile> {
    if horizon == 0 {
        return Err(Error::HorizonZero);
    }
    let g = mp.graph();
    let mut dims = Vec::with_capacity(horizon + 1);
    let mut total = BigUint::one();
    dims.push(1usize);
    for q in 1..=horizon {
        total += g.count_normal_words(q);
        let d = total
            .to_usize()
            .ok_or_else(|| Error::BudgetExceeded(format!("dim kS^{q} = {total} overflows")))?;
        dims.push(d);
    }
    Ok(GrowthProfile::from_dims(dims))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GrowthClass {
    Finite,
    Polynomial(usize),
    Exponential,
}

impl GrowthClass {
    pub fn is_linear(&self) -> bool {
        matches!(self, GrowthClass::Polynomial(1))
    }

    pub fn label(&self) -> String {
        match self {
            GrowthClass::Finite => "finite".into(),
            GrowthClass::Polynomial(d) => format!("polynomial of degree {d}"),
            GrowthClass::Exponential => "exponential".into(),
        }
    }
}

/// Classify growth from the cycle structure of the Ufnarovski graph.
///
/// Finite when there is no cycle, exponential when some component carries
/// two distinct cycles, otherwise polynomial with degree equal to the largest
/// number of cyclic components on one path.
pub fn classify_growth(mp: &MonomialPresentation) -> GrowthClass {
    classify_graph(&mp.graph())
}

pub fn classify_graph(g: &UfnarovskiGraph) -> GrowthClass {
    if g.components.iter().any(ComponentSummary::is_branching) {
        return GrowthClass::Exponential;
    }
    if !g.components.iter().any(ComponentSummary::is_cyclic) {
        return GrowthClass::Finite;
    }
    // Longest chain of cyclic components in the condensation. Tarjan emits
    // components in reverse topological order, so successors come first.
    let k = g.components.len();
    let mut succ: Vec<Vec<usize>> = vec![Vec::new(); k];
    for &(i, _, j) in &g.edges {
        let (a, b) = (g.component_of[i], g.component_of[j]);
        if a != b {
            succ[a].push(b);
        }
    }
    let mut best = vec![0usize; k];
    for c in 0..k {
        let own = usize::from(g.components[c].is_cyclic());
        let tail = succ[c].iter().map(|&s| best[s]).max().unwrap_or(0);
        best[c] = own + tail;
    }
    GrowthClass::Polynomial(best.into_iter().max().unwrap_or(0))
}
