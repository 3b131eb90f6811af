//! Colored ladder blocks and the two assembly operators.
//!
//! Each block carries two vertex sets besides its graph:
//!
//! * `attach`: where edges come *in*. For a fresh block this is its yellow
//!   vertices plus its pendant vertices.
//! * `white`: where edges go *out* to the next block.
//!
//! `compound(g1, g2, f)` joins `white(g1)` to `attach(g2)` along `f`; the
//! result keeps `attach(g1)` and takes `white(g2)`. `apex` adds one vertex
//! joined to `attach`. Chains therefore evaluate left to right, with the apex
//! landing on the first block's attachment set.

use std::fmt;

use thiserror::Error;

use crate::graph::{bit, Bits, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("compound needs |white(G1)| = |attach(G2)|, got {white} and {attach}")]
    SizeMismatch { white: usize, attach: usize },
    #[error("matching is not a bijection from white(G1) onto attach(G2): {0}")]
    NotBijection(String),
    #[error("apex needs a nonempty set of yellow or pendant vertices")]
    EmptyAttachment,
    #[error("invalid family parameter: {0}")]
    InvalidParameter(String),
    #[error("assembled graph failed validation: {0}")]
    Invalid(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Per-vertex tag of a [`ColoredGraph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    Plain,
    Yellow,
    White,
    /// Only in the degenerate `M_0` block.
    YellowWhite,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredGraph {
    pub graph: Graph,
    pub yellow: u64,
    pub white: u64,
    /// Incoming attachment set: yellow ∪ pendant at construction time.
    pub attach: u64,
}

impl ColoredGraph {
    /// Tags a block; `attach` is derived as yellow ∪ degree-1 vertices.
    pub fn new(graph: Graph, yellow: u64, white: u64) -> Self {
        let pendants = (0..graph.order())
            .filter(|&v| graph.degree(v) == 1)
            .fold(0u64, |m, v| m | bit(v));
        ColoredGraph {
            attach: yellow | pendants,
            graph,
            yellow,
            white,
        }
    }

    pub fn role(&self, v: usize) -> Role {
        match (self.yellow & bit(v) != 0, self.white & bit(v) != 0) {
            (true, true) => Role::YellowWhite,
            (true, false) => Role::Yellow,
            (false, true) => Role::White,
            (false, false) => Role::Plain,
        }
    }

    pub fn white_list(&self) -> Vec<usize> {
        Bits(self.white).collect()
    }

    pub fn attach_list(&self) -> Vec<usize> {
        Bits(self.attach).collect()
    }
}

/// `T_m`: a ladder of `m + 1` rungs with an apex over the last rung.
///
/// Labels: top path `0..=m`, bottom path `m+1..=2m+1` (rung `r` joins `r`
/// and `m+1+r`), apex `2m+2`. Yellow: the first rung and the apex.
pub fn ladder_t(m: usize) -> Result<ColoredGraph, FamilyError> {
    let mut g = ladder(m + 1, 1)?;
    let apex = 2 * m + 2;
    g.add_edge(apex, m)?;
    g.add_edge(apex, 2 * m + 1)?;
    let yellow = bit(0) | bit(m + 1) | bit(apex);
    Ok(ColoredGraph::new(g, yellow, 0))
}

/// `M_n`: a ladder of `n + 1` rungs with a two-vertex tail on the top end of
/// the last rung.
///
/// Labels: top path `0..=n`, bottom path `n+1..=2n+1`, tail `2n+2` (joined
/// to `n`) then `2n+3`. Yellow: the first rung. White: the bottom end of the
/// last rung and both tail vertices. `M_0` is the path
/// `1-0-2-3` with yellow `{0, 1}` and white `{1, 2, 3}`.
pub fn ladder_m(n: usize) -> Result<ColoredGraph, FamilyError> {
    let mut g = ladder(n + 1, 2)?;
    let (x, y) = (2 * n + 2, 2 * n + 3);
    g.add_edge(n, x)?;
    g.add_edge(x, y)?;
    let yellow = bit(0) | bit(n + 1);
    let white = bit(2 * n + 1) | bit(x) | bit(y);
    Ok(ColoredGraph::new(g, yellow, white))
}

fn ladder(rungs: usize, extra: usize) -> Result<Graph, GraphError> {
    let mut g = Graph::empty(2 * rungs + extra)?;
    for r in 0..rungs {
        g.add_edge(r, rungs + r)?;
        if r > 0 {
            g.add_edge(r - 1, r)?;
            g.add_edge(rungs + r - 1, rungs + r)?;
        }
    }
    Ok(g)
}

/// `g1 ⊎ g2` along `f`, given as `(u, v)` pairs with `u ∈ white(g1)` and
/// `v ∈ attach(g2)` in each block's own labels. Vertices of `g2` are
/// shifted by `|g1|` in the result.
pub fn compound(
    g1: &ColoredGraph,
    g2: &ColoredGraph,
    f: &[(usize, usize)],
) -> Result<ColoredGraph, FamilyError> {
    let (a, b) = (
        g1.white.count_ones() as usize,
        g2.attach.count_ones() as usize,
    );
    if a != b {
        return Err(FamilyError::SizeMismatch {
            white: a,
            attach: b,
        });
    }
    let mut dom = 0u64;
    let mut img = 0u64;
    for &(u, v) in f {
        if u >= 64 || v >= 64 || g1.white & bit(u) == 0 || g2.attach & bit(v) == 0 {
            return Err(FamilyError::NotBijection(format!(
                "pair ({u}, {v}) outside A×B"
            )));
        }
        if dom & bit(u) != 0 || img & bit(v) != 0 {
            return Err(FamilyError::NotBijection(format!(
                "pair ({u}, {v}) repeats a vertex"
            )));
        }
        dom |= bit(u);
        img |= bit(v);
    }
    if dom != g1.white || img != g2.attach {
        return Err(FamilyError::NotBijection(
            "matching does not cover A and B".into(),
        ));
    }
    let shift = g1.graph.order();
    let mut graph = g1.graph.disjoint_union(&g2.graph)?;
    for &(u, v) in f {
        graph.add_edge(u, v + shift)?;
    }
    Ok(ColoredGraph {
        graph,
        yellow: g1.yellow,
        white: g2.white << shift,
        attach: g1.attach,
    })
}

/// `K_1 ▲ g`: one new vertex (the last id) joined to `attach(g)`.
pub fn apex(g: &ColoredGraph) -> Result<Graph, FamilyError> {
    if g.attach == 0 {
        return Err(FamilyError::EmptyAttachment);
    }
    let mut out = g.graph.clone();
    let top = out.add_vertex()?;
    for v in Bits(g.attach) {
        out.add_edge(top, v)?;
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    M(usize),
    T(usize),
}

impl Block {
    pub fn build(self) -> Result<ColoredGraph, FamilyError> {
        match self {
            Block::M(n) => ladder_m(n),
            Block::T(m) => ladder_t(m),
        }
    }

    pub fn order(self) -> usize {
        match self {
            Block::M(n) => 2 * n + 4,
            Block::T(m) => 2 * m + 3,
        }
    }
}

impl fmt::Display for Block {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Block::M(n) => write!(f, "M{n}"),
            Block::T(m) => write!(f, "T{m}"),
        }
    }
}

/// A block sequence with one matching per `⊎` junction and an apex flag.
///
/// `matchings[i]` joins block `i` to block `i + 1`: the `j`-th white vertex
/// of the left side (ascending ids) goes to the `matchings[i][j]`-th
/// attachment vertex of block `i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub blocks: Vec<Block>,
    pub matchings: Vec<[u8; 3]>,
    pub apex: bool,
}

impl FamilySpec {
    /// The assembly `apex(M_{n1} ⊎ … ⊎ M_{nt} ⊎ T_m)`.
    pub fn apex_chain(ns: &[usize], m: usize, matchings: Vec<[u8; 3]>) -> Self {
        let mut blocks: Vec<Block> = ns.iter().map(|&n| Block::M(n)).collect();
        blocks.push(Block::T(m));
        FamilySpec {
            blocks,
            matchings,
            apex: true,
        }
    }

    pub fn order(&self) -> usize {
        self.blocks.iter().map(|b| b.order()).sum::<usize>() + self.apex as usize
    }

    /// Evaluates the chain left to right.
    pub fn assemble_colored(&self) -> Result<ColoredGraph, FamilyError> {
        let (first, rest) = self
            .blocks
            .split_first()
            .ok_or_else(|| FamilyError::InvalidParameter("empty block sequence".into()))?;
        if self.matchings.len() != rest.len() {
            return Err(FamilyError::InvalidParameter(format!(
                "{} junctions need {} matchings, got {}",
                rest.len(),
                rest.len(),
                self.matchings.len()
            )));
        }
        let mut acc = first.build()?;
        for (block, perm) in rest.iter().zip(&self.matchings) {
            let next = block.build()?;
            let whites = acc.white_list();
            let attach = next.attach_list();
            let mut f = Vec::with_capacity(whites.len());
            for (j, &u) in whites.iter().enumerate() {
                let target = perm.get(j).and_then(|&p| attach.get(p as usize)).copied();
                let v = target.ok_or_else(|| {
                    FamilyError::NotBijection(format!("matching {perm:?} does not fit {block}"))
                })?;
                f.push((u, v));
            }
            acc = compound(&acc, &next, &f)?;
        }
        Ok(acc)
    }

    pub fn assemble(&self) -> Result<Graph, FamilyError> {
        let colored = self.assemble_colored()?;
        if self.apex {
            apex(&colored)
        } else {
            Ok(colored.graph)
        }
    }

    /// Block sequence only, e.g. `apex(M1+T0)`.
    pub fn shape(&self) -> String {
        let inner: Vec<String> = self.blocks.iter().map(|b| b.to_string()).collect();
        let inner = inner.join("+");
        if self.apex {
            format!("apex({inner})")
        } else {
            inner
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.shape())?;
        if !self.matchings.is_empty() {
            let ms: Vec<String> = self
                .matchings
                .iter()
                .map(|p| p.iter().map(|d| d.to_string()).collect::<String>())
                .collect();
            write!(f, " match={}", ms.join("/"))?;
        }
        Ok(())
    }
}

/// The six bijections of a three-element junction, lexicographic.
pub const PERMUTATIONS_3: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];
