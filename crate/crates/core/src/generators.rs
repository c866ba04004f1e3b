//! Structured and seeded random instances, plus the named figure fixtures.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::{Cell, Color, ColoredPoset, PosetError};
use crate::reductions::{reduce_3sat, reduce_qbf, CnfFormula, QbfFormula};
use crate::rules::{EngineError, Grid, TreeGraph};
use crate::subset::{ElementSubset, MAX_ELEMENTS};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GeneratorError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("inner shape {inner:?} does not fit inside {outer:?}")]
    InvalidSkewShape {
        outer: Vec<usize>,
        inner: Vec<usize>,
    },
    #[error("{removals} removals requested from a {cells}-cell square")]
    TooManyRemovals { removals: usize, cells: usize },
    #[error("{0} elements exceed the supported {MAX_ELEMENTS}")]
    TooManyElements(usize),
    #[error("no color given for cell {0:?}")]
    MissingColor(Cell),
    #[error("removal {step} of cell {cell:?} is not a legal corner removal")]
    IllegalRemoval { step: usize, cell: Cell },
    #[error(transparent)]
    Poset(#[from] PosetError),
    #[error(transparent)]
    Engine(#[from] EngineError),
}

/// Row lengths of a Young diagram, weakly decreasing and positive.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, GeneratorError> {
        if parts.contains(&0) {
            return Err(GeneratorError::InvalidPartition(format!(
                "{parts:?} has a zero part"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(GeneratorError::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Row `i` length, zero past the last row.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// All partitions of `n` in reverse lexicographic order.
    pub fn all_of(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                prefix.push(p);
                go(rest - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for Partition {
    type Err = GeneratorError;

    /// Comma-separated row lengths; an empty string is the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Result<Vec<usize>, _> =
            s.split(',').map(|p| p.trim().parse::<usize>()).collect();
        let parts = parts.map_err(|e| GeneratorError::InvalidPartition(format!("`{s}`: {e}")))?;
        Partition::new(parts)
    }
}

/// A Young diagram with a smaller one removed from its upper-left corner.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self, GeneratorError> {
        let fits =
            inner.len() <= outer.len() && (0..inner.len()).all(|i| inner.part(i) <= outer.part(i));
        if !fits {
            return Err(GeneratorError::InvalidSkewShape {
                outer: outer.0,
                inner: inner.0,
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Cells in row-major order, zero-based.
    pub fn cells(&self) -> Vec<Cell> {
        (0..self.outer.len())
            .flat_map(|r| (self.inner.part(r)..self.outer.part(r)).map(move |c| (r, c)))
            .collect()
    }

    /// Recognizes a cell set as a skew shape up to translation. Returns the
    /// normalized shape, whose topmost row and leftmost column are 0.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Option<SkewShape> {
        let mut rows: BTreeMap<usize, (usize, usize, usize)> = BTreeMap::new();
        for (r, c) in cells {
            let e = rows.entry(r).or_insert((c, c, 0));
            e.0 = e.0.min(c);
            e.1 = e.1.max(c);
            e.2 += 1;
        }
        let (Some(&top), Some(&bottom)) = (rows.keys().next(), rows.keys().next_back()) else {
            return Some(SkewShape::default());
        };
        let c0 = rows
            .values()
            .map(|&(lo, _, _)| lo)
            .min()
            .expect("non-empty");
        if rows.values().any(|&(lo, hi, n)| hi - lo + 1 != n) {
            return None;
        }
        // (inner, outer) per row; a skipped row is an empty row whose
        // bounds both equal the next row's outer bound
        let mut bounds = vec![(0, 0); bottom - top + 1];
        let mut next_outer = 0;
        for r in (top..=bottom).rev() {
            bounds[r - top] = match rows.get(&r) {
                Some(&(lo, hi, _)) => (lo - c0, hi - c0 + 1),
                None => (next_outer, next_outer),
            };
            next_outer = bounds[r - top].1;
        }
        if bounds
            .windows(2)
            .any(|w| w[1].0 > w[0].0 || w[1].1 > w[0].1)
        {
            return None;
        }
        let outer: Vec<usize> = bounds.iter().map(|b| b.1).collect();
        let inner: Vec<usize> = bounds.iter().map(|b| b.0).filter(|&i| i > 0).collect();
        SkewShape::new(Partition::new(outer).ok()?, Partition::new(inner).ok()?).ok()
    }
}

/// Which parity class of cells is White. The class containing the top-left
/// cell is the one where `row + column` is even.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChessParity {
    TopLeftWhite,
    TopLeftBlack,
}

impl ChessParity {
    pub fn color(self, (r, c): Cell) -> Color {
        let top_left_class = (r + c) % 2 == 0;
        match (self, top_left_class) {
            (ChessParity::TopLeftWhite, true) | (ChessParity::TopLeftBlack, false) => Color::White,
            _ => Color::Black,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            ChessParity::TopLeftWhite => "top-left-white",
            ChessParity::TopLeftBlack => "top-left-black",
        }
    }
}

impl FromStr for ChessParity {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "top-left-white" | "white" => Ok(ChessParity::TopLeftWhite),
            "top-left-black" | "black" => Ok(ChessParity::TopLeftBlack),
            _ => Err(format!(
                "unknown parity `{s}` (expected top-left-white or top-left-black)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Coloring {
    Chess(ChessParity),
    Explicit(HashMap<Cell, Color>),
}

impl Coloring {
    fn color(&self, cell: Cell) -> Result<Color, GeneratorError> {
        match self {
            Coloring::Chess(p) => Ok(p.color(cell)),
            Coloring::Explicit(map) => map
                .get(&cell)
                .copied()
                .ok_or(GeneratorError::MissingColor(cell)),
        }
    }
}

/// Total order, bottom to top in list order, labeled `p1..pn`.
pub fn gen_chain(colors: &[Color]) -> ColoredPoset {
    assert!(
        colors.len() <= MAX_ELEMENTS,
        "chain of {} elements",
        colors.len()
    );
    let labels = (1..=colors.len()).map(|i| format!("p{i}")).collect();
    let covers: Vec<_> = (1..colors.len()).map(|i| (i - 1, i)).collect();
    ColoredPoset::from_index_covers(labels, colors.to_vec(), &covers)
        .expect("a chain is a valid poset")
}

pub fn gen_young(shape: &Partition, coloring: &Coloring) -> Result<ColoredPoset, GeneratorError> {
    gen_skew(&SkewShape::straight(shape.clone()), coloring)
}

/// Cells labeled `r{i}c{j}` (1-based). Each cell covers its left and upper
/// neighbors.
pub fn gen_skew(shape: &SkewShape, coloring: &Coloring) -> Result<ColoredPoset, GeneratorError> {
    let cells = shape.cells();
    if cells.len() > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(cells.len()));
    }
    let at: HashMap<Cell, usize> = cells.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let mut covers = Vec::new();
    for (i, &(r, c)) in cells.iter().enumerate() {
        if let Some(&j) = c.checked_sub(1).and_then(|c| at.get(&(r, c))) {
            covers.push((j, i));
        }
        if let Some(&j) = r.checked_sub(1).and_then(|r| at.get(&(r, c))) {
            covers.push((j, i));
        }
    }
    let labels = cells
        .iter()
        .map(|&(r, c)| format!("r{}c{}", r + 1, c + 1))
        .collect();
    let colors = cells
        .iter()
        .map(|&c| coloring.color(c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ColoredPoset::from_index_covers(labels, colors, &covers)?.with_layout(cells)?)
}

/// A truncated square together with the removals that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSquare {
    pub grid: Grid,
    pub removals: Vec<Cell>,
}

fn full_square(n: usize, parity: ChessParity) -> Result<Grid, GeneratorError> {
    if n * n > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(n * n));
    }
    let cells: Vec<(Cell, Color)> = (0..n)
        .flat_map(|r| (0..n).map(move |c| ((r, c), parity.color((r, c)))))
        .collect();
    Ok(Grid::new(n, &cells)?)
}

fn remaining(square: &Grid, present: ElementSubset) -> Result<Grid, GeneratorError> {
    let cells: Vec<(Cell, Color)> = present
        .iter()
        .map(|i| (square.cells()[i], square.colors()[i]))
        .collect();
    Ok(Grid::new(square.side(), &cells)?)
}

/// Starts from the chess-colored `n × n` square and removes `k` corners,
/// each chosen uniformly among the current corners.
pub fn gen_truncated_square(
    n: usize,
    seed: u64,
    k: usize,
    parity: ChessParity,
) -> Result<TruncatedSquare, GeneratorError> {
    if k > n * n {
        return Err(GeneratorError::TooManyRemovals {
            removals: k,
            cells: n * n,
        });
    }
    let square = full_square(n, parity)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut present = ElementSubset::full(square.len());
    let mut removals = Vec::with_capacity(k);
    for _ in 0..k {
        let corners: Vec<usize> = square.corners(present).iter().collect();
        let i = corners[rng.gen_range(0..corners.len())];
        present.remove(i);
        removals.push(square.cells()[i]);
    }
    Ok(TruncatedSquare {
        grid: remaining(&square, present)?,
        removals,
    })
}

/// Replays a removal sequence on the `n × n` square, checking that every
/// removed cell is a corner at its turn.
pub fn replay_truncation(
    n: usize,
    removals: &[Cell],
    parity: ChessParity,
) -> Result<Grid, GeneratorError> {
    let square = full_square(n, parity)?;
    let mut present = ElementSubset::full(square.len());
    for (step, &cell) in removals.iter().enumerate() {
        let legal = square
            .index_of(cell)
            .filter(|&i| square.corners(present).contains(i));
        let Some(i) = legal else {
            return Err(GeneratorError::IllegalRemoval { step, cell });
        };
        present.remove(i);
    }
    remaining(&square, present)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ColorPolicy {
    /// Each element independently White or Black.
    Random,
    /// Colors alternate along every edge, the root's color drawn at random.
    Chess,
}

impl FromStr for ColorPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "random" => Ok(ColorPolicy::Random),
            "chess" => Ok(ColorPolicy::Chess),
            _ => Err(format!(
                "unknown color policy `{s}` (expected random or chess)"
            )),
        }
    }
}

/// Parent of each element (`None` for roots) and colors, seeded.
fn random_parents(
    n: usize,
    rng: &mut ChaCha8Rng,
    policy: ColorPolicy,
    connected: bool,
) -> (Vec<Option<usize>>, Vec<Color>) {
    let mut parents = Vec::with_capacity(n);
    let mut colors: Vec<Color> = Vec::with_capacity(n);
    let pick = |rng: &mut ChaCha8Rng| {
        if rng.gen_bool(0.5) {
            Color::White
        } else {
            Color::Black
        }
    };
    for i in 0..n {
        let parent = if i == 0 {
            None
        } else if connected {
            Some(rng.gen_range(0..i))
        } else {
            // i + 1 choices: a new root or one of the earlier elements
            let j = rng.gen_range(0..=i);
            (j < i).then_some(j)
        };
        let color = match (policy, parent) {
            (ColorPolicy::Chess, Some(p)) => colors[p].opposite(),
            _ => pick(rng),
        };
        parents.push(parent);
        colors.push(color);
    }
    (parents, colors)
}

/// Forest poset labeled `v0..`; each non-root element covers exactly one
/// earlier element.
pub fn gen_random_forest(
    n: usize,
    seed: u64,
    policy: ColorPolicy,
) -> Result<ColoredPoset, GeneratorError> {
    if n > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (parents, colors) = random_parents(n, &mut rng, policy, false);
    let covers: Vec<_> = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    Ok(ColoredPoset::from_index_covers(labels, colors, &covers)?)
}

/// Rooted tree poset labeled `v0..` with `v0` the unique minimal element.
pub fn gen_random_tree(
    n: usize,
    seed: u64,
    policy: ColorPolicy,
) -> Result<ColoredPoset, GeneratorError> {
    if n > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (parents, colors) = random_parents(n, &mut rng, policy, true);
    let covers: Vec<_> = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    Ok(ColoredPoset::from_index_covers(labels, colors, &covers)?)
}

/// Random recursive tree graph labeled `v0..`.
pub fn gen_random_tree_graph(
    n: usize,
    seed: u64,
    policy: ColorPolicy,
) -> Result<TreeGraph, GeneratorError> {
    if n > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (parents, colors) = random_parents(n, &mut rng, policy, true);
    let edges: Vec<_> = parents
        .iter()
        .enumerate()
        .filter_map(|(i, p)| p.map(|p| (p, i)))
        .collect();
    let labels = (0..n).map(|i| format!("v{i}")).collect();
    Ok(TreeGraph::from_index_edges(labels, colors, edges)?)
}

/// Random poset labeled `e0..`: each pair `i < j` is related with
/// probability `density` (then closed transitively), colors uniform.
pub fn gen_random_poset(n: usize, seed: u64, density: f64) -> Result<ColoredPoset, GeneratorError> {
    if n > MAX_ELEMENTS {
        return Err(GeneratorError::TooManyElements(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let colors: Vec<Color> = (0..n)
        .map(|_| {
            if rng.gen_bool(0.5) {
                Color::White
            } else {
                Color::Black
            }
        })
        .collect();
    let density = density.clamp(0.0, 1.0);
    let mut below = vec![ElementSubset::EMPTY; n];
    for j in 0..n {
        for i in 0..j {
            if rng.gen_bool(density) {
                below[j] = below[j].with(i).union(below[i]);
            }
        }
    }
    let covers: Vec<_> = (0..n)
        .flat_map(|j| {
            let below = &below;
            below[j]
                .iter()
                .filter(move |&i| !below[j].iter().any(|k| below[k].contains(i)))
                .map(move |i| (i, j))
        })
        .collect();
    let labels = (0..n).map(|i| format!("e{i}")).collect();
    Ok(ColoredPoset::from_index_covers(labels, colors, &covers)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FixtureContent {
    Poset(ColoredPoset),
    Grid(Grid),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fixture {
    pub name: &'static str,
    pub description: &'static str,
    /// How the two colors were read off the drawing.
    pub orientation: &'static str,
    pub content: FixtureContent,
}

impl Fixture {
    pub fn into_poset(self) -> Option<ColoredPoset> {
        match self.content {
            FixtureContent::Poset(p) => Some(p),
            FixtureContent::Grid(_) => None,
        }
    }

    pub fn into_grid(self) -> Option<Grid> {
        match self.content {
            FixtureContent::Grid(g) => Some(g),
            FixtureContent::Poset(_) => None,
        }
    }
}

pub const FIXTURE_NAMES: [&str; 8] = [
    "intro_poset",
    "fig1_young",
    "fig2_plane_partition",
    "fig2_lattice",
    "fig3_chain",
    "fig4_np_poset",
    "fig5_qbf_poset",
    "fig6_truncated",
];

const AS_DRAWN: &str = "filled nodes are Black, open nodes White";
const GRAY_IS_BLACK: &str = "gray cells (the parity class of the top-left cell) are Black";

/// Legal corner removals taking the 7×7 square to the truncated square of
/// the sixth figure, zero-based `(row, column)`.
pub const FIG6_REMOVALS: [Cell; 25] = [
    (0, 0),
    (0, 1),
    (0, 6),
    (0, 5),
    (0, 4),
    (1, 0),
    (1, 6),
    (1, 5),
    (6, 0),
    (5, 0),
    (4, 0),
    (6, 1),
    (5, 1),
    (4, 1),
    (6, 2),
    (5, 2),
    (6, 3),
    (6, 4),
    (6, 5),
    (6, 6),
    (5, 6),
    (4, 6),
    (3, 6),
    (5, 5),
    (4, 5),
];

pub fn fixture(name: &str) -> Option<Fixture> {
    use Color::{Black as B, White as W};
    let build = |elements: &[(&str, Color)], covers: &[(&str, &str)]| {
        crate::poset::build_poset(elements, covers).expect("fixture transcription is valid")
    };
    let (name, description, orientation, content) = match name {
        "intro_poset" => (
            "intro_poset",
            "four-element zero game from the introduction",
            AS_DRAWN,
            FixtureContent::Poset(build(
                &[("z", B), ("w", W), ("x", W), ("y", B)],
                &[("x", "z"), ("y", "z"), ("y", "w")],
            )),
        ),
        "fig1_young" => (
            "fig1_young",
            "chess-colored Young diagram of shape (5,4,3,3,1)",
            GRAY_IS_BLACK,
            FixtureContent::Poset(
                gen_young(
                    &Partition::new(vec![5, 4, 3, 3, 1]).expect("valid"),
                    &Coloring::Chess(ChessParity::TopLeftBlack),
                )
                .expect("valid"),
            ),
        ),
        "fig2_plane_partition" => (
            "fig2_plane_partition",
            "chess-colored order ideal in a product of three chains",
            AS_DRAWN,
            FixtureContent::Poset(plane_partition()),
        ),
        "fig2_lattice" => (
            "fig2_lattice",
            "chess-colored two-dimensional distributive lattice",
            AS_DRAWN,
            FixtureContent::Poset(build(
                &[
                    ("w1", W),
                    ("b11", B),
                    ("b12", B),
                    ("w2", W),
                    ("b21", B),
                    ("b22", B),
                    ("w3", W),
                ],
                &[
                    ("w1", "b11"),
                    ("w1", "b12"),
                    ("b11", "w2"),
                    ("b12", "w2"),
                    ("w2", "b21"),
                    ("w2", "b22"),
                    ("b21", "w3"),
                    ("b22", "w3"),
                ],
            )),
        ),
        "fig3_chain" => (
            "fig3_chain",
            "seven-element chain with one blocking triple",
            AS_DRAWN,
            FixtureContent::Poset(gen_chain(&[B, W, B, B, W, B, W])),
        ),
        "fig4_np_poset" => {
            let f = CnfFormula::from_dimacs_clauses(3, &[&[1, 2, -3], &[-1, 2, 3]]).expect("valid");
            (
                "fig4_np_poset",
                "3-SAT reduction of (x1 ∨ x2 ∨ ¬x3) ∧ (¬x1 ∨ x2 ∨ x3)",
                AS_DRAWN,
                FixtureContent::Poset(reduce_3sat(&f).expect("valid").poset),
            )
        }
        "fig5_qbf_poset" => {
            let f =
                CnfFormula::from_dimacs_clauses(4, &[&[1, -2, -4], &[2, -3, 4]]).expect("valid");
            let q = QbfFormula::new(f).expect("even");
            (
                "fig5_qbf_poset",
                "QBF reduction of ∀x1∃x2∀x3∃x4 (x1 ∨ ¬x2 ∨ ¬x4) ∧ (x2 ∨ ¬x3 ∨ x4)",
                "filled nodes are Black; one Black candy per even variable",
                FixtureContent::Poset(reduce_qbf(&q).expect("valid").poset),
            )
        }
        "fig6_truncated" => (
            "fig6_truncated",
            "chess-colored truncated 7×7 square with 11 corners",
            GRAY_IS_BLACK,
            FixtureContent::Grid(
                replay_truncation(7, &FIG6_REMOVALS, ChessParity::TopLeftBlack)
                    .expect("witness is legal"),
            ),
        ),
        _ => return None,
    };
    Some(Fixture {
        name,
        description,
        orientation,
        content,
    })
}

pub fn fixtures() -> Vec<Fixture> {
    FIXTURE_NAMES
        .iter()
        .map(|n| fixture(n).expect("listed fixture exists"))
        .collect()
}

/// Elements `p{abc}` of the plane-partition diagram, colored by the parity
/// of `a + b + c` with the bottom White.
fn plane_partition() -> ColoredPoset {
    const ELEMENTS: [&str; 23] = [
        "000", "100", "010", "001", "200", "110", "020", "101", "011", "002", "300", "210", "120",
        "030", "201", "111", "021", "102", "012", "220", "301", "031", "112",
    ];
    const COVERS: [(&str, &str); 38] = [
        ("000", "100"),
        ("000", "010"),
        ("000", "001"),
        ("100", "200"),
        ("100", "110"),
        ("100", "101"),
        ("010", "110"),
        ("010", "020"),
        ("010", "011"),
        ("001", "101"),
        ("001", "011"),
        ("001", "002"),
        ("200", "300"),
        ("200", "210"),
        ("200", "201"),
        ("110", "210"),
        ("110", "120"),
        ("110", "111"),
        ("101", "201"),
        ("101", "111"),
        ("101", "102"),
        ("020", "120"),
        ("020", "030"),
        ("020", "021"),
        ("011", "111"),
        ("011", "021"),
        ("011", "012"),
        ("002", "102"),
        ("002", "012"),
        ("300", "301"),
        ("210", "220"),
        ("201", "301"),
        ("120", "220"),
        ("111", "112"),
        ("102", "112"),
        ("030", "031"),
        ("021", "031"),
        ("012", "112"),
    ];
    let level = |s: &str| s.bytes().map(|b| (b - b'0') as usize).sum::<usize>();
    let elements: Vec<(String, Color)> = ELEMENTS
        .iter()
        .map(|e| {
            (
                format!("p{e}"),
                if level(e) % 2 == 0 {
                    Color::White
                } else {
                    Color::Black
                },
            )
        })
        .collect();
    let covers: Vec<(String, String)> = COVERS
        .iter()
        .map(|(a, b)| (format!("p{a}"), format!("p{b}")))
        .collect();
    crate::poset::build_poset(&elements, &covers).expect("fixture transcription is valid")
}
