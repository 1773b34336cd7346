//! Irreflexive signed graphs with blue, red and bicoloured edges, switching,
//! and the balance family of checks.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::parity::ParityDsu;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn from_bit(negative: bool) -> Sign {
        if negative {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    /// `true` for [`Sign::Neg`]; signs multiply like XOR on this bit.
    pub fn bit(self) -> bool {
        self == Sign::Neg
    }

    pub fn flip(self) -> Sign {
        Sign::from_bit(!self.bit())
    }

    pub fn times(self, other: Sign) -> Sign {
        Sign::from_bit(self.bit() ^ other.bit())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

/// Colour of an edge record. A bicoloured edge stands for the blue/red pair
/// on the same endpoints and is stored once.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Colour {
    Blue,
    Red,
    Bicoloured,
}

impl Colour {
    pub fn from_sign(s: Sign) -> Colour {
        match s {
            Sign::Pos => Colour::Blue,
            Sign::Neg => Colour::Red,
        }
    }

    /// Sign of a unicoloured edge; `None` for bicoloured.
    pub fn sign(self) -> Option<Sign> {
        match self {
            Colour::Blue => Some(Sign::Pos),
            Colour::Red => Some(Sign::Neg),
            Colour::Bicoloured => None,
        }
    }

    pub fn is_bicoloured(self) -> bool {
        self == Colour::Bicoloured
    }

    pub fn is_unicoloured(self) -> bool {
        !self.is_bicoloured()
    }

    pub fn symbol(self) -> char {
        match self {
            Colour::Blue => '+',
            Colour::Red => '-',
            Colour::Bicoloured => '*',
        }
    }

    pub fn from_symbol(c: char) -> Option<Colour> {
        match c {
            '+' => Some(Colour::Blue),
            '-' => Some(Colour::Red),
            '*' => Some(Colour::Bicoloured),
            _ => None,
        }
    }

    fn switched(self) -> Colour {
        match self {
            Colour::Blue => Colour::Red,
            Colour::Red => Colour::Blue,
            Colour::Bicoloured => Colour::Bicoloured,
        }
    }
}

/// A simple irreflexive signed graph on vertices `0..n`.
///
/// Equality is edge-set equality under the fixed vertex ids.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    n: usize,
    // row-major n x n adjacency matrix
    colours: Vec<Option<Colour>>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SignedGraph {
    pub fn new(n: usize) -> Self {
        SignedGraph {
            n,
            colours: vec![None; n * n],
            adj: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize, Colour)>) -> Result<Self> {
        let mut g = SignedGraph::new(n);
        for (u, v, c) in edges {
            g.add_edge(u, v, c)?;
        }
        Ok(g)
    }

    /// Adds an edge record. Loops, unknown endpoints and a second record on
    /// an already joined pair are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize, c: Colour) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(invalid(format!("loop at vertex {u}")));
        }
        if let Some(old) = self.colour(u, v) {
            return Err(invalid(format!(
                "vertices {u} and {v} are already joined by a {old:?} edge"
            )));
        }
        self.colours[u * self.n + v] = Some(c);
        self.colours[v * self.n + u] = Some(c);
        let pos = self.adj[u].binary_search(&v).unwrap_err();
        self.adj[u].insert(pos, v);
        let pos = self.adj[v].binary_search(&u).unwrap_err();
        self.adj[v].insert(pos, u);
        self.edge_count += 1;
        Ok(())
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(invalid(format!("vertex {v} out of range (n = {})", self.n)))
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    #[inline]
    pub fn colour(&self, u: usize, v: usize) -> Option<Colour> {
        self.colours[u * self.n + v]
    }

    #[inline]
    pub fn is_edge(&self, u: usize, v: usize) -> bool {
        self.colour(u, v).is_some()
    }

    #[inline]
    pub fn is_bicoloured_edge(&self, u: usize, v: usize) -> bool {
        self.colour(u, v) == Some(Colour::Bicoloured)
    }

    #[inline]
    pub fn is_unicoloured_edge(&self, u: usize, v: usize) -> bool {
        matches!(self.colour(u, v), Some(Colour::Blue | Colour::Red))
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    /// Edges `(u, v, colour)` with `u < v`, sorted by `(u, v)`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, Colour)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&&v| v > u)
                .map(move |&v| (u, v, self.colour(u, v).unwrap()))
        })
    }

    pub fn bicoloured_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges().filter(|e| e.2.is_bicoloured()).map(|(u, v, _)| (u, v))
    }

    pub fn unicoloured_edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.edges().filter_map(|(u, v, c)| c.sign().map(|s| (u, v, s)))
    }

    pub fn has_bicoloured_edges(&self) -> bool {
        self.bicoloured_edges().next().is_some()
    }

    /// Copy with vertex `v` renamed to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<SignedGraph> {
        if perm.len() != self.n {
            return Err(invalid("relabeling has the wrong length"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(invalid("relabeling is not a permutation"));
            }
        }
        SignedGraph::from_edges(self.n, self.edges().map(|(u, v, c)| (perm[u], perm[v], c)))
    }

    /// Subgraph induced by `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SignedGraph {
        let mut g = SignedGraph::new(vertices.len());
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if let Some(c) = self.colour(u, v) {
                    g.add_edge(i, j, c).expect("induced subgraph of a simple graph is simple");
                }
            }
        }
        g
    }

    /// Connected components of the underlying graph, each sorted, ordered by
    /// smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }
}

impl fmt::Debug for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignedGraph({}; ", self.n)?;
        for (i, (u, v, c)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}{}{v}", c.symbol())?;
        }
        f.write_str(")")
    }
}

/// A set of switched vertices.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Switching {
    pub flipped: BTreeSet<usize>,
}

impl Switching {
    pub fn identity() -> Self {
        Switching::default()
    }

    pub fn from_vertices(vs: impl IntoIterator<Item = usize>) -> Self {
        Switching { flipped: vs.into_iter().collect() }
    }

    /// Switching whose flipped set is `{v : bits[v]}`.
    pub fn from_bits(bits: &[bool]) -> Self {
        Switching::from_vertices(bits.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v))
    }

    pub fn to_bits(&self, n: usize) -> Vec<bool> {
        let mut bits = vec![false; n];
        for &v in &self.flipped {
            if v < n {
                bits[v] = true;
            }
        }
        bits
    }

    pub fn contains(&self, v: usize) -> bool {
        self.flipped.contains(&v)
    }

    pub fn is_identity(&self) -> bool {
        self.flipped.is_empty()
    }

    /// Composition of two switchings (symmetric difference).
    pub fn compose(&self, other: &Switching) -> Switching {
        Switching {
            flipped: self.flipped.symmetric_difference(&other.flipped).copied().collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    pub black: BTreeSet<usize>,
    pub white: BTreeSet<usize>,
}

impl Bipartition {
    pub fn is_black(&self, v: usize) -> bool {
        self.black.contains(&v)
    }
}

pub fn apply_switching(g: &SignedGraph, s: &Switching) -> Result<SignedGraph> {
    for &v in &s.flipped {
        g.check_vertex(v)?;
    }
    let mut out = g.clone();
    for (u, v, c) in g.edges() {
        if s.contains(u) != s.contains(v) {
            let c = c.switched();
            out.colours[u * g.n + v] = Some(c);
            out.colours[v * g.n + u] = Some(c);
        }
    }
    Ok(out)
}

/// Product of the step signs of `walk`. Bicoloured steps take their sign
/// from `choices`, consumed in order; exactly one choice per bicoloured
/// step must be supplied.
pub fn walk_sign(g: &SignedGraph, walk: &[usize], choices: &[Sign]) -> Result<Sign> {
    for &v in walk {
        g.check_vertex(v)?;
    }
    let mut sign = Sign::Pos;
    let mut next_choice = choices.iter();
    for w in walk.windows(2) {
        let step = match g.colour(w[0], w[1]) {
            None => return Err(invalid(format!("{} and {} are not adjacent", w[0], w[1]))),
            Some(Colour::Bicoloured) => *next_choice
                .next()
                .ok_or_else(|| invalid("too few sign choices for the bicoloured steps"))?,
            Some(c) => c.sign().unwrap(),
        };
        sign = sign.times(step);
    }
    if next_choice.next().is_some() {
        return Err(invalid("more sign choices than bicoloured steps"));
    }
    Ok(sign)
}

/// Finds a switching turning every unicoloured edge into colour `want`.
/// Spanning-forest propagation followed by a check of the remaining edges.
fn unicoloured_to(g: &SignedGraph, want: Sign) -> Option<Switching> {
    let mut side: Vec<Option<bool>> = vec![None; g.n];
    for s in 0..g.n {
        if side[s].is_some() {
            continue;
        }
        side[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let su = side[u].unwrap();
            for &v in &g.adj[u] {
                let Some(sign) = g.colour(u, v).unwrap().sign() else {
                    continue;
                };
                // after switching, sign(uv) * (-1)^(s_u + s_v) must equal `want`
                let need = su ^ sign.bit() ^ want.bit();
                match side[v] {
                    None => {
                        side[v] = Some(need);
                        queue.push_back(v);
                    }
                    Some(sv) if sv != need => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(Switching::from_bits(&side.into_iter().map(|b| b.unwrap()).collect::<Vec<_>>()))
}

/// A switching making every edge blue, if one exists.
pub fn is_balanced(g: &SignedGraph) -> Option<Switching> {
    if g.has_bicoloured_edges() {
        return None;
    }
    unicoloured_to(g, Sign::Pos)
}

/// A switching making every edge red, if one exists.
pub fn is_anti_balanced(g: &SignedGraph) -> Option<Switching> {
    if g.has_bicoloured_edges() {
        return None;
    }
    unicoloured_to(g, Sign::Neg)
}

/// A switching making every unicoloured edge blue, if one exists.
pub fn is_semi_balanced(g: &SignedGraph) -> Option<Switching> {
    unicoloured_to(g, Sign::Pos)
}

/// Two-colouring of the underlying graph. The smallest vertex of each
/// component is black.
pub fn bipartition(g: &SignedGraph) -> Option<Bipartition> {
    let mut colour: Vec<Option<bool>> = vec![None; g.n];
    for s in 0..g.n {
        if colour[s].is_some() {
            continue;
        }
        colour[s] = Some(false);
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            let cu = colour[u].unwrap();
            for &v in &g.adj[u] {
                match colour[v] {
                    None => {
                        colour[v] = Some(!cu);
                        queue.push_back(v);
                    }
                    Some(cv) if cv == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut part = Bipartition { black: BTreeSet::new(), white: BTreeSet::new() };
    for (v, c) in colour.into_iter().enumerate() {
        if c.unwrap() {
            part.white.insert(v);
        } else {
            part.black.insert(v);
        }
    }
    Some(part)
}

/// Witness that `g` switches and relabels onto `h`: after applying
/// `switching` to `g`, every edge `uv` becomes the edge `map[u] map[v]` of
/// `h` with the same colour.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Equivalence {
    pub map: Vec<usize>,
    pub switching: Switching,
}

fn edge_kind(c: Option<Colour>) -> u8 {
    match c {
        None => 0,
        Some(Colour::Bicoloured) => 2,
        Some(_) => 1,
    }
}

/// Switching isomorphism search for small graphs.
///
/// Backtracks over bijections in breadth-first order of `g`, matching
/// edge/non-edge and unicoloured/bicoloured status pair by pair; the sign
/// constraints `s_u + s_v = [sign_g(uv) != sign_h(φu φv)]` are accumulated
/// in a parity union-find so an unbalanced cycle mismatch is caught as soon
/// as it closes.
pub fn switching_equivalent(g: &SignedGraph, h: &SignedGraph) -> Option<Equivalence> {
    let n = g.n;
    if n != h.n || g.edge_count != h.edge_count {
        return None;
    }
    let profile = |x: &SignedGraph, v: usize| {
        let bic = x.adj[v].iter().filter(|&&w| x.is_bicoloured_edge(v, w)).count();
        (x.adj[v].len(), bic)
    };
    let gp: Vec<_> = (0..n).map(|v| profile(g, v)).collect();
    let hp: Vec<_> = (0..n).map(|v| profile(h, v)).collect();
    let mut a = gp.clone();
    let mut b = hp.clone();
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return None;
    }

    // breadth-first order over g so most vertices have a mapped neighbour
    let mut order = Vec::with_capacity(n);
    let mut seen = vec![false; n];
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            order.push(u);
            for &v in &g.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
    }

    struct Search<'a> {
        g: &'a SignedGraph,
        h: &'a SignedGraph,
        gp: Vec<(usize, usize)>,
        hp: Vec<(usize, usize)>,
        order: Vec<usize>,
        map: Vec<usize>,
        used: Vec<bool>,
        dsu: ParityDsu,
    }

    impl Search<'_> {
        fn go(&mut self, depth: usize) -> bool {
            if depth == self.order.len() {
                return true;
            }
            let v = self.order[depth];
            for cand in 0..self.h.n {
                if self.used[cand] || self.gp[v] != self.hp[cand] {
                    continue;
                }
                let cp = self.dsu.checkpoint();
                let mut ok = true;
                for &u in &self.order[..depth] {
                    let gc = self.g.colour(u, v);
                    let hc = self.h.colour(self.map[u], cand);
                    if edge_kind(gc) != edge_kind(hc) {
                        ok = false;
                        break;
                    }
                    if let (Some(gs), Some(hs)) = (gc.and_then(Colour::sign), hc.and_then(Colour::sign)) {
                        if !self.dsu.union(u, v, gs != hs) {
                            ok = false;
                            break;
                        }
                    }
                }
                if ok {
                    self.map[v] = cand;
                    self.used[cand] = true;
                    if self.go(depth + 1) {
                        return true;
                    }
                    self.used[cand] = false;
                }
                self.dsu.rollback(cp);
            }
            false
        }
    }

    let mut search = Search {
        g,
        h,
        gp,
        hp,
        order,
        map: vec![usize::MAX; n],
        used: vec![false; n],
        dsu: ParityDsu::new(n),
    };
    if !search.go(0) {
        return None;
    }
    let switching = Switching::from_bits(&search.dsu.potentials());
    Some(Equivalence { map: search.map, switching })
}
