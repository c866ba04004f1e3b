//! The generic element-removal game: ground structures, removability rules,
//! legal moves and the exhaustive monotonicity audit.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::poset::{connected_components, Cell, Color, ColorCounts, ColoredPoset};
use crate::subset::{ElementSubset, MAX_ELEMENTS};

/// Default ground-size limit of [`check_monotonicity`] (3^n subset pairs).
pub const DEFAULT_AUDIT_BOUND: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EngineError {
    #[error("the {rule} rule cannot be played on a {ground} ground")]
    RuleGroundMismatch {
        rule: RuleKind,
        ground: &'static str,
    },
    #[error("illegal move `{element}`: {reason}")]
    IllegalMove {
        element: String,
        reason: &'static str,
    },
    #[error("subset {0:?} is not contained in the ground set")]
    InvalidSubset(ElementSubset),
    #[error("ground set of {size} elements exceeds the audit bound {bound}")]
    GroundTooLarge { size: usize, bound: usize },
    #[error("invalid tree graph: {0}")]
    InvalidTree(String),
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
}

/// An undirected tree with colored vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TreeGraph {
    labels: Vec<String>,
    colors: Vec<Color>,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<ElementSubset>,
}

impl TreeGraph {
    pub fn new<L: AsRef<str>>(
        vertices: &[(L, Color)],
        edges: &[(L, L)],
    ) -> Result<Self, EngineError> {
        let n = vertices.len();
        if n > MAX_ELEMENTS {
            return Err(EngineError::InvalidTree(format!(
                "{n} vertices exceed {MAX_ELEMENTS}"
            )));
        }
        let mut index = HashMap::new();
        for (i, (l, _)) in vertices.iter().enumerate() {
            if index.insert(l.as_ref(), i).is_some() {
                return Err(EngineError::InvalidTree(format!(
                    "duplicate vertex `{}`",
                    l.as_ref()
                )));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let find = |l: &L| {
                index.get(l.as_ref()).copied().ok_or_else(|| {
                    EngineError::InvalidTree(format!("unknown vertex `{}`", l.as_ref()))
                })
            };
            idx_edges.push((find(a)?, find(b)?));
        }
        Self::from_index_edges(
            vertices
                .iter()
                .map(|(l, _)| l.as_ref().to_string())
                .collect(),
            vertices.iter().map(|&(_, c)| c).collect(),
            idx_edges,
        )
    }

    pub fn from_index_edges(
        labels: Vec<String>,
        colors: Vec<Color>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self, EngineError> {
        let n = labels.len();
        if n > MAX_ELEMENTS {
            return Err(EngineError::InvalidTree(format!(
                "{n} vertices exceed {MAX_ELEMENTS}"
            )));
        }
        let mut adjacency = vec![ElementSubset::EMPTY; n];
        let mut seen = BTreeSet::new();
        for &(a, b) in &edges {
            if a == b {
                return Err(EngineError::InvalidTree(format!(
                    "self-loop at `{}`",
                    labels[a]
                )));
            }
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(EngineError::InvalidTree(format!(
                    "repeated edge `{}`-`{}`",
                    labels[a], labels[b]
                )));
            }
            adjacency[a].insert(b);
            adjacency[b].insert(a);
        }
        if n > 0 && edges.len() != n - 1 {
            return Err(EngineError::InvalidTree(format!(
                "{} edges on {n} vertices (a tree has {})",
                edges.len(),
                n - 1
            )));
        }
        if n == 0 && !edges.is_empty() {
            return Err(EngineError::InvalidTree("edges without vertices".into()));
        }
        if connected_components(ElementSubset::full(n), |i| adjacency[i]).len() > 1 {
            return Err(EngineError::InvalidTree("graph is disconnected".into()));
        }
        let mut edges: Vec<_> = seen.into_iter().collect();
        edges.sort_unstable();
        Ok(TreeGraph {
            labels,
            colors,
            edges,
            adjacency,
        })
    }

    /// The Hasse diagram of a tree poset, read as an undirected tree.
    pub fn from_tree_poset(poset: &ColoredPoset) -> Result<Self, EngineError> {
        if !poset.is_tree() {
            return Err(EngineError::InvalidTree("poset is not a tree poset".into()));
        }
        Self::from_index_edges(
            poset.labels().to_vec(),
            poset.colors().to_vec(),
            poset.covers().to_vec(),
        )
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, i: usize) -> ElementSubset {
        self.adjacency[i]
    }

    /// Adjacent vertices always differ in color.
    pub fn is_chess_colored(&self) -> bool {
        self.edges
            .iter()
            .all(|&(a, b)| self.colors[a] != self.colors[b])
    }
}

/// Colored cells inside an `n × n` array.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    side: usize,
    cells: Vec<Cell>,
    colors: Vec<Color>,
    row_neighbors: Vec<ElementSubset>,
    col_neighbors: Vec<ElementSubset>,
}

impl Grid {
    /// Cells are stored in row-major order regardless of input order.
    pub fn new(side: usize, cells: &[(Cell, Color)]) -> Result<Self, EngineError> {
        if cells.len() > MAX_ELEMENTS {
            return Err(EngineError::InvalidGrid(format!(
                "{} cells exceed {MAX_ELEMENTS}",
                cells.len()
            )));
        }
        let mut sorted = cells.to_vec();
        sorted.sort_unstable_by_key(|&(cell, _)| cell);
        for w in sorted.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(EngineError::InvalidGrid(format!(
                    "repeated cell {:?}",
                    w[0].0
                )));
            }
        }
        if let Some(&((r, c), _)) = sorted.iter().find(|((r, c), _)| *r >= side || *c >= side) {
            return Err(EngineError::InvalidGrid(format!(
                "cell ({r}, {c}) outside the {side}x{side} array"
            )));
        }
        let at: HashMap<Cell, usize> = sorted
            .iter()
            .enumerate()
            .map(|(i, &(c, _))| (c, i))
            .collect();
        let mut row_neighbors = vec![ElementSubset::EMPTY; sorted.len()];
        let mut col_neighbors = vec![ElementSubset::EMPTY; sorted.len()];
        for (i, &((r, c), _)) in sorted.iter().enumerate() {
            if let Some(&j) = at.get(&(r, c + 1)) {
                row_neighbors[i].insert(j);
                row_neighbors[j].insert(i);
            }
            if let Some(&j) = at.get(&(r + 1, c)) {
                col_neighbors[i].insert(j);
                col_neighbors[j].insert(i);
            }
        }
        Ok(Grid {
            side,
            cells: sorted.iter().map(|&(c, _)| c).collect(),
            colors: sorted.iter().map(|&(_, c)| c).collect(),
            row_neighbors,
            col_neighbors,
        })
    }

    pub fn side(&self) -> usize {
        self.side
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn index_of(&self, cell: Cell) -> Option<usize> {
        self.cells.binary_search(&cell).ok()
    }

    pub fn neighbors(&self, i: usize) -> ElementSubset {
        self.row_neighbors[i].union(self.col_neighbors[i])
    }

    /// Cells with at most one present neighbor in their row and at most one
    /// in their column.
    pub fn corners(&self, present: ElementSubset) -> ElementSubset {
        present
            .iter()
            .filter(|&i| {
                self.row_neighbors[i].intersection(present).len() <= 1
                    && self.col_neighbors[i].intersection(present).len() <= 1
            })
            .collect()
    }

    /// Neighboring cells always differ in color.
    pub fn is_chess_colored(&self) -> bool {
        (0..self.len()).all(|i| {
            self.neighbors(i)
                .iter()
                .all(|j| self.colors[j] != self.colors[i])
        })
    }
}

/// What the game is played on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroundStructure {
    Poset(ColoredPoset),
    TreeGraph(TreeGraph),
    Grid(Grid),
}

impl GroundStructure {
    pub fn kind_name(&self) -> &'static str {
        match self {
            GroundStructure::Poset(_) => "poset",
            GroundStructure::TreeGraph(_) => "tree graph",
            GroundStructure::Grid(_) => "grid",
        }
    }

    pub fn len(&self) -> usize {
        match self {
            GroundStructure::Poset(p) => p.len(),
            GroundStructure::TreeGraph(t) => t.len(),
            GroundStructure::Grid(g) => g.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn colors(&self) -> &[Color] {
        match self {
            GroundStructure::Poset(p) => p.colors(),
            GroundStructure::TreeGraph(t) => t.colors(),
            GroundStructure::Grid(g) => g.colors(),
        }
    }

    pub fn color(&self, i: usize) -> Color {
        self.colors()[i]
    }

    /// Poset and tree labels as given; grid cells as `r{row}c{col}`, 1-based.
    pub fn label(&self, i: usize) -> String {
        match self {
            GroundStructure::Poset(p) => p.label(i).to_string(),
            GroundStructure::TreeGraph(t) => t.label(i).to_string(),
            GroundStructure::Grid(g) => {
                let (r, c) = g.cells()[i];
                format!("r{}c{}", r + 1, c + 1)
            }
        }
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        (0..self.len()).find(|&i| self.label(i) == label)
    }

    pub fn all(&self) -> ElementSubset {
        ElementSubset::full(self.len())
    }

    pub fn color_counts(&self, present: ElementSubset) -> ColorCounts {
        let colors = self.colors();
        let white = present
            .iter()
            .filter(|&i| colors[i] == Color::White)
            .count();
        ColorCounts {
            white,
            black: present.len() - white,
        }
    }

    pub fn as_poset(&self) -> Option<&ColoredPoset> {
        match self {
            GroundStructure::Poset(p) => Some(p),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RuleKind {
    Pomax,
    MinMax,
    Leaf,
    Corner,
}

impl fmt::Display for RuleKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RuleKind::Pomax => "pomax",
            RuleKind::MinMax => "minmax",
            RuleKind::Leaf => "leaf",
            RuleKind::Corner => "corner",
        })
    }
}

impl FromStr for RuleKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "pomax" => Ok(RuleKind::Pomax),
            "minmax" => Ok(RuleKind::MinMax),
            "leaf" => Ok(RuleKind::Leaf),
            "corner" => Ok(RuleKind::Corner),
            other => Err(format!("unknown rule `{other}`")),
        }
    }
}

/// A removability function `ρ` over a ground set of dense indices.
///
/// Implementations should satisfy `ρ(B) ∩ A ⊆ ρ(A) ⊆ A` for `A ⊆ B`;
/// [`check_monotonicity`] audits this exhaustively.
pub trait Removability {
    fn ground_len(&self) -> usize;
    fn removable(&self, present: ElementSubset) -> ElementSubset;
}

/// A built-in removability rule bound to its ground structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RemovalRule {
    kind: RuleKind,
    ground: GroundStructure,
}

impl RemovalRule {
    pub fn new(kind: RuleKind, ground: GroundStructure) -> Result<Self, EngineError> {
        let ok = matches!(
            (kind, &ground),
            (
                RuleKind::Pomax | RuleKind::MinMax,
                GroundStructure::Poset(_)
            ) | (RuleKind::Leaf, GroundStructure::TreeGraph(_))
                | (RuleKind::Corner, GroundStructure::Grid(_))
        );
        if !ok {
            return Err(EngineError::RuleGroundMismatch {
                rule: kind,
                ground: ground.kind_name(),
            });
        }
        Ok(RemovalRule { kind, ground })
    }

    pub fn pomax(poset: ColoredPoset) -> Self {
        RemovalRule {
            kind: RuleKind::Pomax,
            ground: GroundStructure::Poset(poset),
        }
    }

    pub fn min_max(poset: ColoredPoset) -> Self {
        RemovalRule {
            kind: RuleKind::MinMax,
            ground: GroundStructure::Poset(poset),
        }
    }

    pub fn leaf(tree: TreeGraph) -> Self {
        RemovalRule {
            kind: RuleKind::Leaf,
            ground: GroundStructure::TreeGraph(tree),
        }
    }

    pub fn corner(grid: Grid) -> Self {
        RemovalRule {
            kind: RuleKind::Corner,
            ground: GroundStructure::Grid(grid),
        }
    }

    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn ground(&self) -> &GroundStructure {
        &self.ground
    }

    pub fn len(&self) -> usize {
        self.ground.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ground.is_empty()
    }

    pub fn color(&self, i: usize) -> Color {
        self.ground.color(i)
    }

    /// Elements whose presence can affect the removability of `i`. Parts of
    /// a position with no interaction between them are independent games.
    pub fn interaction(&self, i: usize) -> ElementSubset {
        match &self.ground {
            GroundStructure::Poset(p) => p.above(i).union(p.below(i)),
            GroundStructure::TreeGraph(t) => t.neighbors(i),
            GroundStructure::Grid(g) => g.neighbors(i),
        }
    }

    /// Independent parts of a position, ordered by lowest index.
    pub fn components(&self, present: ElementSubset) -> Vec<ElementSubset> {
        connected_components(present, |i| self.interaction(i))
    }
}

impl Removability for RemovalRule {
    fn ground_len(&self) -> usize {
        self.ground.len()
    }

    fn removable(&self, present: ElementSubset) -> ElementSubset {
        let present = present.intersection(self.ground.all());
        match (&self.kind, &self.ground) {
            (RuleKind::Pomax, GroundStructure::Poset(p)) => p.maximal_elements(present),
            (RuleKind::MinMax, GroundStructure::Poset(p)) => p
                .maximal_elements(present)
                .union(p.minimal_elements(present)),
            (RuleKind::Leaf, GroundStructure::TreeGraph(t)) => present
                .iter()
                .filter(|&i| t.neighbors(i).intersection(present).len() <= 1)
                .collect(),
            (RuleKind::Corner, GroundStructure::Grid(g)) => g.corners(present),
            _ => unreachable!("rule and ground are checked at construction"),
        }
    }
}

/// One removal: `mover` takes `element` out of the position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Move {
    pub mover: Color,
    pub element: usize,
}

/// A position: a rule plus the set of elements still present.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GameState {
    rule: Arc<RemovalRule>,
    present: ElementSubset,
}

impl GameState {
    /// The starting position, every element present.
    pub fn new(rule: impl Into<Arc<RemovalRule>>) -> Self {
        let rule = rule.into();
        let present = rule.ground.all();
        GameState { rule, present }
    }

    pub fn with_present(
        rule: impl Into<Arc<RemovalRule>>,
        present: ElementSubset,
    ) -> Result<Self, EngineError> {
        let rule = rule.into();
        if !present.is_subset(rule.ground.all()) {
            return Err(EngineError::InvalidSubset(present));
        }
        Ok(GameState { rule, present })
    }

    pub fn pomax(poset: ColoredPoset) -> Self {
        Self::new(RemovalRule::pomax(poset))
    }

    pub fn rule(&self) -> &RemovalRule {
        &self.rule
    }

    pub fn shared_rule(&self) -> &Arc<RemovalRule> {
        &self.rule
    }

    pub fn present(&self) -> ElementSubset {
        self.present
    }

    pub fn removable(&self) -> ElementSubset {
        self.rule.removable(self.present)
    }

    pub fn legal_moves(&self, player: Color) -> ElementSubset {
        self.removable()
            .intersection(self.rule.ground.colored_mask(player))
    }

    pub fn color_counts(&self) -> ColorCounts {
        self.rule.ground.color_counts(self.present)
    }

    /// Removes `element`, which must be present and removable. The mover is
    /// implied by the element's color.
    pub fn apply_move(&self, element: usize) -> Result<GameState, EngineError> {
        let illegal = |reason| EngineError::IllegalMove {
            element: if element < self.rule.len() {
                self.rule.ground.label(element)
            } else {
                format!("#{element}")
            },
            reason,
        };
        if !self.present.contains(element) {
            return Err(illegal("element is not present"));
        }
        if !self.removable().contains(element) {
            return Err(illegal("element is not removable"));
        }
        Ok(GameState {
            rule: Arc::clone(&self.rule),
            present: self.present.without(element),
        })
    }

    /// Like [`apply_move`](Self::apply_move), also checking the mover owns
    /// the element.
    pub fn play(&self, mv: Move) -> Result<GameState, EngineError> {
        if mv.element < self.rule.len() && self.rule.color(mv.element) != mv.mover {
            return Err(EngineError::IllegalMove {
                element: self.rule.ground.label(mv.element),
                reason: "element belongs to the other player",
            });
        }
        self.apply_move(mv.element)
    }
}

impl GroundStructure {
    fn colored_mask(&self, color: Color) -> ElementSubset {
        self.colors()
            .iter()
            .enumerate()
            .filter(|&(_, &c)| c == color)
            .map(|(i, _)| i)
            .collect()
    }
}

/// Checks `ρ(B) ∩ A ⊆ ρ(A) ⊆ A` for every nested pair `A ⊆ B` of the ground
/// set. Exponential (3^n pairs), so the ground must not exceed `bound`.
pub fn check_monotonicity<R: Removability + ?Sized>(
    rule: &R,
    bound: usize,
) -> Result<bool, EngineError> {
    let n = rule.ground_len();
    if n > bound {
        return Err(EngineError::GroundTooLarge { size: n, bound });
    }
    let all = ElementSubset::full(n);
    for b in all.subsets() {
        let rho_b = rule.removable(b);
        for a in b.subsets() {
            let rho_a = rule.removable(a);
            if !rho_a.is_subset(a) || !rho_b.intersection(a).is_subset(rho_a) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
