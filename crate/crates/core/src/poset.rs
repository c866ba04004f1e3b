//! Colored posets with their order queries and structural analyses, such
//! as blocking triples and the essential part of a forest.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::generators::SkewShape;
use crate::subset::{ElementSubset, MAX_ELEMENTS};

/// The two players, and the two element colors. White moves for the left
/// (positive) side, Black for the right (negative) side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    White,
    Black,
}

impl Color {
    #[must_use]
    pub const fn opposite(self) -> Color {
        match self {
            Color::White => Color::Black,
            Color::Black => Color::White,
        }
    }

    pub const fn as_str(self) -> &'static str {
        match self {
            Color::White => "white",
            Color::Black => "black",
        }
    }
}

impl fmt::Display for Color {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Color {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "white" => Ok(Color::White),
            "black" => Ok(Color::Black),
            other => Err(format!(
                "unknown color `{other}` (expected `white` or `black`)"
            )),
        }
    }
}

/// A diagram cell as `(row, column)`, zero-based.
pub type Cell = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PosetError {
    #[error("duplicate element label `{label}` (element {index})")]
    DuplicateLabel { label: String, index: usize },
    #[error("cover {cover} refers to unknown element `{label}`")]
    UnknownLabel { label: String, cover: usize },
    #[error("cover relation contains a cycle through `{label}`")]
    CycleDetected { label: String },
    #[error("cover {cover} (`{lower}` < `{upper}`) is implied by the other covers")]
    RedundantCoverEdge {
        lower: String,
        upper: String,
        cover: usize,
    },
    #[error("poset has {0} elements, at most {MAX_ELEMENTS} are supported")]
    TooManyElements(usize),
    #[error("operation requires a forest poset")]
    NotAForest,
    #[error("invalid cell layout: {0}")]
    InvalidLayout(String),
}

/// A cover chain `bottom ⋖ middle ⋖ top` where bottom and middle share a
/// color and top has the other one.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BlockingTriple {
    pub bottom: usize,
    pub middle: usize,
    pub top: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct ColorCounts {
    pub white: usize,
    pub black: usize,
}

impl ColorCounts {
    /// White minus black.
    pub fn surplus(self) -> i32 {
        self.white as i32 - self.black as i32
    }

    pub fn of(self, color: Color) -> usize {
        match color {
            Color::White => self.white,
            Color::Black => self.black,
        }
    }
}

/// A finite poset with black and white elements, given by its Hasse diagram.
///
/// Element indices are dense (`0..len`) and follow construction order, so
/// subsets and memo keys are reproducible. The strict order is precomputed
/// as per-element bit sets.
#[derive(Clone, PartialEq, Eq)]
pub struct ColoredPoset {
    labels: Vec<String>,
    colors: Vec<Color>,
    index: HashMap<String, usize>,
    covers: Vec<(usize, usize)>,
    lower_covers: Vec<ElementSubset>,
    upper_covers: Vec<ElementSubset>,
    below: Vec<ElementSubset>,
    above: Vec<ElementSubset>,
    layout: Option<Vec<Cell>>,
}

impl fmt::Debug for ColoredPoset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let elements: Vec<_> = self
            .labels
            .iter()
            .zip(&self.colors)
            .map(|(l, c)| format!("{l}:{c}"))
            .collect();
        let covers: Vec<_> = self
            .covers
            .iter()
            .map(|&(a, b)| format!("{}<{}", self.labels[a], self.labels[b]))
            .collect();
        f.debug_struct("ColoredPoset")
            .field("elements", &elements)
            .field("covers", &covers)
            .finish()
    }
}

/// Validates a Hasse diagram and builds the poset.
///
/// `covers` holds `(lower, upper)` label pairs. The cover list must be a
/// transitive reduction: edges implied by other edges are rejected.
pub fn build_poset<L, C>(
    elements: &[(L, Color)],
    covers: &[(C, C)],
) -> Result<ColoredPoset, PosetError>
where
    L: AsRef<str>,
    C: AsRef<str>,
{
    if elements.len() > MAX_ELEMENTS {
        return Err(PosetError::TooManyElements(elements.len()));
    }
    let mut index = HashMap::with_capacity(elements.len());
    for (i, (label, _)) in elements.iter().enumerate() {
        let label = label.as_ref();
        if index.insert(label.to_string(), i).is_some() {
            return Err(PosetError::DuplicateLabel {
                label: label.to_string(),
                index: i,
            });
        }
    }
    let lookup = |label: &str, cover: usize| {
        index
            .get(label)
            .copied()
            .ok_or_else(|| PosetError::UnknownLabel {
                label: label.to_string(),
                cover,
            })
    };
    let mut edges = Vec::with_capacity(covers.len());
    for (k, (lo, hi)) in covers.iter().enumerate() {
        edges.push((lookup(lo.as_ref(), k)?, lookup(hi.as_ref(), k)?));
    }
    let labels: Vec<String> = elements
        .iter()
        .map(|(l, _)| l.as_ref().to_string())
        .collect();
    let colors: Vec<Color> = elements.iter().map(|&(_, c)| c).collect();
    ColoredPoset::from_index_covers(labels, colors, &edges)
}

impl ColoredPoset {
    pub fn empty() -> Self {
        Self::from_validated(Vec::new(), Vec::new(), Vec::new())
    }

    /// Builds from index-based covers, running the full validation.
    pub fn from_index_covers(
        labels: Vec<String>,
        colors: Vec<Color>,
        covers: &[(usize, usize)],
    ) -> Result<Self, PosetError> {
        let n = labels.len();
        assert_eq!(n, colors.len(), "one color per label");
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut seen = HashMap::new();
        for (i, l) in labels.iter().enumerate() {
            if seen.insert(l.as_str(), i).is_some() {
                return Err(PosetError::DuplicateLabel {
                    label: l.clone(),
                    index: i,
                });
            }
        }
        let mut lower = vec![ElementSubset::EMPTY; n];
        let mut upper = vec![ElementSubset::EMPTY; n];
        let mut edge_pos: HashMap<(usize, usize), usize> = HashMap::new();
        for (k, &(a, b)) in covers.iter().enumerate() {
            assert!(a < n && b < n, "cover index out of range");
            if a == b {
                return Err(PosetError::CycleDetected {
                    label: labels[a].clone(),
                });
            }
            if edge_pos.insert((a, b), k).is_some() {
                return Err(PosetError::RedundantCoverEdge {
                    lower: labels[a].clone(),
                    upper: labels[b].clone(),
                    cover: k,
                });
            }
            lower[b].insert(a);
            upper[a].insert(b);
        }

        let order = topological_order(&lower, &upper).ok_or_else(|| {
            // any element left with unresolved lower covers lies on or above a cycle
            let stuck = find_cycle_member(&lower, &upper);
            PosetError::CycleDetected {
                label: labels[stuck].clone(),
            }
        })?;
        let below = down_closure(&order, &lower);

        for v in 0..n {
            for u in lower[v] {
                if lower[v].without(u).iter().any(|w| below[w].contains(u)) {
                    return Err(PosetError::RedundantCoverEdge {
                        lower: labels[u].clone(),
                        upper: labels[v].clone(),
                        cover: edge_pos[&(u, v)],
                    });
                }
            }
        }

        let mut edges: Vec<(usize, usize)> = covers.to_vec();
        edges.sort_unstable();
        Ok(Self::assemble(labels, colors, edges, lower, upper, below))
    }

    /// Builds from covers already known to form an acyclic transitive reduction.
    fn from_validated(
        labels: Vec<String>,
        colors: Vec<Color>,
        mut covers: Vec<(usize, usize)>,
    ) -> Self {
        let n = labels.len();
        let mut lower = vec![ElementSubset::EMPTY; n];
        let mut upper = vec![ElementSubset::EMPTY; n];
        for &(a, b) in &covers {
            lower[b].insert(a);
            upper[a].insert(b);
        }
        let order = topological_order(&lower, &upper).expect("validated covers are acyclic");
        let below = down_closure(&order, &lower);
        covers.sort_unstable();
        Self::assemble(labels, colors, covers, lower, upper, below)
    }

    fn assemble(
        labels: Vec<String>,
        colors: Vec<Color>,
        covers: Vec<(usize, usize)>,
        lower_covers: Vec<ElementSubset>,
        upper_covers: Vec<ElementSubset>,
        below: Vec<ElementSubset>,
    ) -> Self {
        let n = labels.len();
        let mut above = vec![ElementSubset::EMPTY; n];
        for (v, b) in below.iter().enumerate() {
            for u in *b {
                above[u].insert(v);
            }
        }
        let index = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.clone(), i))
            .collect();
        ColoredPoset {
            labels,
            colors,
            index,
            covers,
            lower_covers,
            upper_covers,
            below,
            above,
            layout: None,
        }
    }

    /// Attaches diagram coordinates, one cell per element.
    ///
    /// The cells must form a skew Young diagram and the covers must be
    /// exactly the unit steps right and down between cells; the solver
    /// relies on this to apply diagram certificates.
    pub fn with_layout(mut self, cells: Vec<Cell>) -> Result<Self, PosetError> {
        if cells.len() != self.len() {
            return Err(PosetError::InvalidLayout(format!(
                "{} cells for {} elements",
                cells.len(),
                self.len()
            )));
        }
        let at: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        if at.len() != cells.len() {
            return Err(PosetError::InvalidLayout("repeated cell".into()));
        }
        if SkewShape::from_cells(cells.iter().copied()).is_none() {
            return Err(PosetError::InvalidLayout(
                "cells do not form a skew diagram".into(),
            ));
        }
        let mut expected = BTreeSet::new();
        for (i, &(r, c)) in cells.iter().enumerate() {
            if c > 0 {
                if let Some(&j) = at.get(&(r, c - 1)) {
                    expected.insert((j, i));
                }
            }
            if r > 0 {
                if let Some(&j) = at.get(&(r - 1, c)) {
                    expected.insert((j, i));
                }
            }
        }
        let actual: BTreeSet<_> = self.covers.iter().copied().collect();
        if expected != actual {
            return Err(PosetError::InvalidLayout(
                "covers differ from the diagram's unit steps".into(),
            ));
        }
        self.layout = Some(cells);
        Ok(self)
    }

    pub fn layout(&self) -> Option<&[Cell]> {
        self.layout.as_deref()
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Every element.
    pub fn all(&self) -> ElementSubset {
        ElementSubset::full(self.len())
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn color(&self, i: usize) -> Color {
        self.colors[i]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Cover pairs `(lower, upper)` sorted by index.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn lower_covers(&self, i: usize) -> ElementSubset {
        self.lower_covers[i]
    }

    pub fn upper_covers(&self, i: usize) -> ElementSubset {
        self.upper_covers[i]
    }

    /// Elements strictly below `i`.
    pub fn below(&self, i: usize) -> ElementSubset {
        self.below[i]
    }

    /// Elements strictly above `i`.
    pub fn above(&self, i: usize) -> ElementSubset {
        self.above[i]
    }

    pub fn less_than(&self, a: usize, b: usize) -> bool {
        self.below[b].contains(a)
    }

    /// Elements of the given color.
    pub fn colored(&self, color: Color) -> ElementSubset {
        self.colors
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn maximal_elements(&self, present: ElementSubset) -> ElementSubset {
        present
            .iter()
            .filter(|&p| self.above[p].is_disjoint(present))
            .collect()
    }

    pub fn minimal_elements(&self, present: ElementSubset) -> ElementSubset {
        present
            .iter()
            .filter(|&p| self.below[p].is_disjoint(present))
            .collect()
    }

    /// Connected components of the comparability graph induced on `present`,
    /// ordered by lowest index.
    pub fn components(&self, present: ElementSubset) -> Vec<ElementSubset> {
        connected_components(present, |i| self.above[i].union(self.below[i]))
    }

    pub fn blocking_triples(&self) -> Vec<BlockingTriple> {
        let mut out = Vec::new();
        for middle in 0..self.len() {
            let c = self.colors[middle];
            for bottom in self.lower_covers[middle] {
                if self.colors[bottom] != c {
                    continue;
                }
                for top in self.upper_covers[middle] {
                    if self.colors[top] != c {
                        out.push(BlockingTriple {
                            bottom,
                            middle,
                            top,
                        });
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// No element covers an element of its own color.
    pub fn is_chess_colored(&self) -> bool {
        self.covers
            .iter()
            .all(|&(a, b)| self.colors[a] != self.colors[b])
    }

    /// Every element covers at most one element.
    pub fn is_forest(&self) -> bool {
        self.lower_covers.iter().all(|l| l.len() <= 1)
    }

    /// A forest with a single root. The empty poset counts as a tree.
    pub fn is_tree(&self) -> bool {
        self.is_forest() && self.minimal_elements(self.all()).len() <= 1
    }

    /// The largest upper set free of blocking triples, computed componentwise
    /// for forests: everything not lying at or below a blocking-triple bottom.
    pub fn essential_part(&self) -> Result<ElementSubset, PosetError> {
        if !self.is_forest() {
            return Err(PosetError::NotAForest);
        }
        let blocked = self
            .blocking_triples()
            .iter()
            .fold(ElementSubset::EMPTY, |acc, t| {
                acc.union(self.below[t.bottom]).with(t.bottom)
            });
        Ok(self.all().difference(blocked))
    }

    pub fn color_counts(&self, present: ElementSubset) -> ColorCounts {
        let white = present
            .iter()
            .filter(|&i| self.colors[i] == Color::White)
            .count();
        ColorCounts {
            white,
            black: present.len() - white,
        }
    }

    /// Number of elements in a longest chain.
    pub fn height(&self) -> usize {
        let order = topological_order(&self.lower_covers, &self.upper_covers).expect("acyclic");
        let mut depth = vec![0usize; self.len()];
        for &v in &order {
            depth[v] = 1 + self.lower_covers[v]
                .iter()
                .map(|u| depth[u])
                .max()
                .unwrap_or(0);
        }
        depth.into_iter().max().unwrap_or(0)
    }

    /// The induced subposet on `present`. Surviving elements keep their
    /// labels and layout cells.
    pub fn restrict(&self, present: ElementSubset) -> ColoredPoset {
        let keep: Vec<usize> = present.iter().collect();
        let mut new_index = vec![usize::MAX; self.len()];
        for (k, &i) in keep.iter().enumerate() {
            new_index[i] = k;
        }
        let mut covers = Vec::new();
        for &v in &keep {
            let under = self.below[v].intersection(present);
            for u in under {
                if self.above[u].intersection(under).is_empty() {
                    covers.push((new_index[u], new_index[v]));
                }
            }
        }
        let labels = keep.iter().map(|&i| self.labels[i].clone()).collect();
        let colors = keep.iter().map(|&i| self.colors[i]).collect();
        let mut sub = Self::from_validated(labels, colors, covers);
        sub.layout = self
            .layout
            .as_ref()
            .map(|cells| keep.iter().map(|&i| cells[i]).collect());
        sub
    }

    /// Same order, colors swapped.
    #[must_use]
    pub fn negate(&self) -> ColoredPoset {
        let mut p = self.clone();
        for c in &mut p.colors {
            *c = c.opposite();
        }
        p
    }

    /// Disjoint union with no relations between the parts. Elements of
    /// `other` keep their labels unless a label is already taken, in which
    /// case primes are appended until it is unique.
    pub fn disjoint_sum(&self, other: &ColoredPoset) -> Result<ColoredPoset, PosetError> {
        let n = self.len() + other.len();
        if n > MAX_ELEMENTS {
            return Err(PosetError::TooManyElements(n));
        }
        let mut labels = self.labels.clone();
        let mut taken: BTreeSet<String> = labels.iter().cloned().collect();
        for l in &other.labels {
            let mut candidate = l.clone();
            while taken.contains(&candidate) {
                candidate.push('\'');
            }
            taken.insert(candidate.clone());
            labels.push(candidate);
        }
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let shift = self.len();
        let covers = self
            .covers
            .iter()
            .copied()
            .chain(other.covers.iter().map(|&(a, b)| (a + shift, b + shift)))
            .collect();
        Ok(Self::from_validated(labels, colors, covers))
    }
}

/// Kahn's algorithm; `None` when the cover digraph has a cycle.
fn topological_order(lower: &[ElementSubset], upper: &[ElementSubset]) -> Option<Vec<usize>> {
    let n = lower.len();
    let mut pending: Vec<usize> = lower.iter().map(|l| l.len()).collect();
    let mut ready: Vec<usize> = (0..n).filter(|&i| pending[i] == 0).rev().collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = ready.pop() {
        order.push(v);
        for w in upper[v] {
            pending[w] -= 1;
            if pending[w] == 0 {
                ready.push(w);
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn find_cycle_member(lower: &[ElementSubset], upper: &[ElementSubset]) -> usize {
    // peel off everything that is not on a cycle from both ends
    let n = lower.len();
    let mut alive = ElementSubset::full(n);
    loop {
        let peel: ElementSubset = alive
            .iter()
            .filter(|&v| lower[v].is_disjoint(alive) || upper[v].is_disjoint(alive))
            .collect();
        if peel.is_empty() {
            break;
        }
        alive = alive.difference(peel);
    }
    alive.first().unwrap_or(0)
}

fn down_closure(order: &[usize], lower: &[ElementSubset]) -> Vec<ElementSubset> {
    let mut below = vec![ElementSubset::EMPTY; lower.len()];
    for &v in order {
        let mut acc = ElementSubset::EMPTY;
        for u in lower[v] {
            acc = acc.union(below[u]).with(u);
        }
        below[v] = acc;
    }
    below
}

/// Components of the graph on `present` whose neighborhoods are given by
/// `neighbors` (restricted to `present`).
pub(crate) fn connected_components(
    present: ElementSubset,
    neighbors: impl Fn(usize) -> ElementSubset,
) -> Vec<ElementSubset> {
    let mut rest = present;
    let mut out = Vec::new();
    while let Some(seed) = rest.first() {
        let mut comp = ElementSubset::singleton(seed);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = ElementSubset::EMPTY;
            for v in frontier {
                next = next.union(neighbors(v));
            }
            next = next.intersection(present).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        rest = rest.difference(comp);
        out.push(comp);
    }
    out
}
