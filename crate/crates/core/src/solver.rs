//! Exact integer game values and outcomes, with brute-force win/loss
//! searches to cross-check them.
//!
//! Values follow the usual sign convention: positive favors White (left),
//! negative favors Black (right), zero is a second-player win.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::sync::Arc;

use rand::seq::IteratorRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::generators::SkewShape;
use crate::poset::{Color, ColoredPoset, PosetError};
use crate::rules::{GameState, GroundStructure, Removability, RemovalRule, RuleKind};
use crate::subset::{ElementSubset, MAX_ELEMENTS};

/// Positions with more present elements than this need an explicit force flag.
pub const DEFAULT_SOLVE_BOUND: usize = 28;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GameValue(pub i32);

impl fmt::Display for GameValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl Add for GameValue {
    type Output = GameValue;
    fn add(self, rhs: GameValue) -> GameValue {
        GameValue(self.0 + rhs.0)
    }
}

impl Sub for GameValue {
    type Output = GameValue;
    fn sub(self, rhs: GameValue) -> GameValue {
        GameValue(self.0 - rhs.0)
    }
}

impl Neg for GameValue {
    type Output = GameValue;
    fn neg(self) -> GameValue {
        GameValue(-self.0)
    }
}

/// Who wins under optimal play, for each choice of starting player.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Outcome {
    WhiteWinsBoth,
    BlackWinsBoth,
    SecondPlayerWins,
    /// Never produced for element-removal games; exists so the raw minimax
    /// can report it.
    FirstPlayerWins,
}

impl Outcome {
    /// The outcome class implied by an integer value.
    pub fn from_value(v: GameValue) -> Outcome {
        match v.0.signum() {
            1 => Outcome::WhiteWinsBoth,
            -1 => Outcome::BlackWinsBoth,
            _ => Outcome::SecondPlayerWins,
        }
    }

    fn from_first_mover_wins(white_first: bool, black_first: bool) -> Outcome {
        match (white_first, black_first) {
            (true, false) => Outcome::WhiteWinsBoth,
            (false, true) => Outcome::BlackWinsBoth,
            (false, false) => Outcome::SecondPlayerWins,
            (true, true) => Outcome::FirstPlayerWins,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::WhiteWinsBoth => "WhiteWinsBoth",
            Outcome::BlackWinsBoth => "BlackWinsBoth",
            Outcome::SecondPlayerWins => "SecondPlayerWins",
            Outcome::FirstPlayerWins => "FirstPlayerWins",
        }
    }

    /// Winner when `first` moves first.
    pub fn winner(self, first: Color) -> Color {
        match self {
            Outcome::WhiteWinsBoth => Color::White,
            Outcome::BlackWinsBoth => Color::Black,
            Outcome::SecondPlayerWins => first.opposite(),
            Outcome::FirstPlayerWins => first,
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("position has {size} elements, above the solve bound {bound} (use force to override)")]
    StateSpaceTooLarge { size: usize, bound: usize },
    #[error("options of {present:?} are {gap} apart, integer values need a gap of at least 2")]
    OptionGapViolation { present: ElementSubset, gap: i32 },
    #[error("memo entry for {key:?} re-derived as {new}, previously {old}")]
    MemoConflict {
        key: ElementSubset,
        old: i32,
        new: i32,
    },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// Write-once memo keyed by present-subset bit sets. Re-inserting a key is
/// allowed only with the identical value.
#[derive(Debug, Clone, Default)]
pub struct MemoTable<V> {
    entries: HashMap<ElementSubset, V>,
}

impl<V: Copy + PartialEq> MemoTable<V> {
    pub fn new() -> Self {
        MemoTable {
            entries: HashMap::new(),
        }
    }

    pub fn get(&self, key: ElementSubset) -> Option<V> {
        self.entries.get(&key).copied()
    }

    /// Returns the previously stored value when it differs from `value`.
    pub fn insert(&mut self, key: ElementSubset, value: V) -> Result<(), V> {
        match self.entries.get(&key) {
            Some(&old) if old != value => Err(old),
            Some(_) => Ok(()),
            None => {
                self.entries.insert(key, value);
                Ok(())
            }
        }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Answer structurally certified components by formula.
    pub shortcuts: bool,
    /// Split positions into independent components and add their values.
    pub decompose: bool,
    /// Fail when a position has two options closer than 2.
    pub check_gaps: bool,
    pub bound: usize,
    pub force: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            shortcuts: true,
            decompose: true,
            check_gaps: true,
            bound: DEFAULT_SOLVE_BOUND,
            force: false,
        }
    }
}

impl SolverConfig {
    /// Plain memoized recursion over whole positions: no decomposition and
    /// no certificates.
    pub fn oracle() -> Self {
        SolverConfig {
            shortcuts: false,
            decompose: false,
            ..Self::default()
        }
    }

    /// Exhaustive search with decomposition, but no certificates.
    pub fn search_only() -> Self {
        SolverConfig {
            shortcuts: false,
            ..Self::default()
        }
    }

    #[must_use]
    pub fn forced(mut self) -> Self {
        self.force = true;
        self
    }

    fn admit(&self, present: ElementSubset) -> Result<(), SolveError> {
        let size = present.len();
        if size > self.bound && !self.force {
            return Err(SolveError::StateSpaceTooLarge {
                size,
                bound: self.bound,
            });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SolverStats {
    /// Positions solved by search.
    pub positions: usize,
    /// Positions that had both White and Black options.
    pub gap_checks: usize,
    /// Smallest `min(R) - max(L)` seen at those positions.
    pub min_gap: Option<i32>,
    pub shortcut_hits: usize,
}

/// Memoized value solver for one rule.
pub struct Solver {
    rule: Arc<RemovalRule>,
    config: SolverConfig,
    values: MemoTable<i32>,
    stats: SolverStats,
}

impl Solver {
    pub fn new(rule: Arc<RemovalRule>, config: SolverConfig) -> Self {
        Solver {
            rule,
            config,
            values: MemoTable::new(),
            stats: SolverStats::default(),
        }
    }

    pub fn for_state(state: &GameState, config: SolverConfig) -> Self {
        Self::new(Arc::clone(state.shared_rule()), config)
    }

    pub fn rule(&self) -> &RemovalRule {
        &self.rule
    }

    pub fn stats(&self) -> SolverStats {
        self.stats
    }

    pub fn memo_len(&self) -> usize {
        self.values.len()
    }

    pub fn value(&mut self, present: ElementSubset) -> Result<GameValue, SolveError> {
        self.config.admit(present)?;
        self.solve(present).map(GameValue)
    }

    /// A value-optimal move for `mover`, lowest index among ties.
    pub fn best_move(
        &mut self,
        present: ElementSubset,
        mover: Color,
    ) -> Result<Option<usize>, SolveError> {
        self.config.admit(present)?;
        let legal = self
            .rule
            .removable(present)
            .iter()
            .filter(|&x| self.rule.color(x) == mover);
        let mut best: Option<(usize, i32)> = None;
        for x in legal.collect::<Vec<_>>() {
            let v = self.solve(present.without(x))?;
            let better = match best {
                None => true,
                Some((_, b)) => match mover {
                    Color::White => v > b,
                    Color::Black => v < b,
                },
            };
            if better {
                best = Some((x, v));
            }
        }
        Ok(best.map(|(x, _)| x))
    }

    fn solve(&mut self, present: ElementSubset) -> Result<i32, SolveError> {
        if present.is_empty() {
            return Ok(0);
        }
        if self.config.decompose {
            let parts = self.rule.components(present);
            if parts.len() > 1 {
                let mut total = 0;
                for part in parts {
                    total += self.solve(part)?;
                }
                return Ok(total);
            }
        }
        if let Some(v) = self.values.get(present) {
            return Ok(v);
        }
        if self.config.shortcuts {
            if let Some(v) = certified_value(&self.rule, present) {
                self.stats.shortcut_hits += 1;
                self.memoize(present, v)?;
                return Ok(v);
            }
        }

        let mut best_left: Option<i32> = None;
        let mut best_right: Option<i32> = None;
        for x in self.rule.removable(present) {
            let v = self.solve(present.without(x))?;
            match self.rule.color(x) {
                Color::White => best_left = Some(best_left.map_or(v, |b| b.max(v))),
                Color::Black => best_right = Some(best_right.map_or(v, |b| b.min(v))),
            }
        }
        if let (Some(l), Some(r)) = (best_left, best_right) {
            let gap = r - l;
            self.stats.gap_checks += 1;
            self.stats.min_gap = Some(self.stats.min_gap.map_or(gap, |g| g.min(gap)));
            if self.config.check_gaps && gap < 2 {
                return Err(SolveError::OptionGapViolation { present, gap });
            }
        }
        let v = simplest_integer(best_left, best_right);
        self.stats.positions += 1;
        self.memoize(present, v)?;
        Ok(v)
    }

    fn memoize(&mut self, key: ElementSubset, v: i32) -> Result<(), SolveError> {
        self.values
            .insert(key, v)
            .map_err(|old| SolveError::MemoConflict { key, old, new: v })
    }
}

/// The integer closest to zero strictly above every left option and strictly
/// below every right option: `min(max(0, max(L)+1), min(R)-1)`.
fn simplest_integer(best_left: Option<i32>, best_right: Option<i32>) -> i32 {
    let lo = best_left.map_or(i32::MIN, |l| l + 1);
    let hi = best_right.map_or(i32::MAX, |r| r - 1);
    0.max(lo).min(hi)
}

/// Value of a position by formula when a balancedness certificate applies.
fn certified_value(rule: &RemovalRule, present: ElementSubset) -> Option<i32> {
    match (rule.kind(), rule.ground()) {
        (RuleKind::Pomax, GroundStructure::Poset(p)) => {
            let sub = p.restrict(present);
            if sub.is_forest() {
                return tree_value(&sub).ok().map(|v| v.0);
            }
            let young = sub
                .layout()
                .and_then(|cells| SkewShape::from_cells(cells.iter().copied()))
                .is_some_and(|shape| shape.is_straight());
            (young && sub.blocking_triples().is_empty())
                .then(|| sub.color_counts(sub.all()).surplus())
        }
        (RuleKind::MinMax, GroundStructure::Poset(p)) => {
            let sub = p.restrict(present);
            let shaped = sub.is_forest()
                || sub
                    .layout()
                    .is_some_and(|cells| SkewShape::from_cells(cells.iter().copied()).is_some());
            (shaped && sub.blocking_triples().is_empty())
                .then(|| sub.color_counts(sub.all()).surplus())
        }
        (RuleKind::Leaf, GroundStructure::TreeGraph(t)) => {
            let chess = present.iter().all(|v| {
                t.neighbors(v)
                    .intersection(present)
                    .iter()
                    .all(|u| t.colors()[u] != t.colors()[v])
            });
            chess.then(|| rule.ground().color_counts(present).surplus())
        }
        _ => None,
    }
}

/// Exact value of the position with default settings.
pub fn game_value(state: &GameState) -> Result<GameValue, SolveError> {
    game_value_with(state, SolverConfig::default())
}

pub fn game_value_with(state: &GameState, config: SolverConfig) -> Result<GameValue, SolveError> {
    Solver::for_state(state, config).value(state.present())
}

/// Plain win/loss minimax over positions extended by a pile of free moves
/// owned by one player. Shares nothing with [`Solver`].
struct WinSearch<'a> {
    rule: &'a RemovalRule,
    white: ElementSubset,
    free_owner: Color,
    memo: HashMap<(ElementSubset, u32, Color), bool>,
}

impl<'a> WinSearch<'a> {
    fn new(rule: &'a RemovalRule, free_owner: Color) -> Self {
        let white = (0..rule.len())
            .filter(|&i| rule.color(i) == Color::White)
            .collect();
        WinSearch {
            rule,
            white,
            free_owner,
            memo: HashMap::new(),
        }
    }

    /// Whether `mover`, about to move, wins.
    fn mover_wins(&mut self, present: ElementSubset, free: u32, mover: Color) -> bool {
        if let Some(&w) = self.memo.get(&(present, free, mover)) {
            return w;
        }
        let own = match mover {
            Color::White => self.white,
            Color::Black => self.rule.ground().all().difference(self.white),
        };
        let moves = self.rule.removable(present).intersection(own);
        let mut wins = moves
            .iter()
            .any(|x| !self.mover_wins(present.without(x), free, mover.opposite()));
        if !wins && mover == self.free_owner && free > 0 {
            wins = !self.mover_wins(present, free - 1, mover.opposite());
        }
        self.memo.insert((present, free, mover), wins);
        wins
    }
}

/// Win/loss classification by direct minimax for both starting players.
pub fn outcome(state: &GameState) -> Result<Outcome, SolveError> {
    outcome_with(state, SolverConfig::default())
}

pub fn outcome_with(state: &GameState, config: SolverConfig) -> Result<Outcome, SolveError> {
    config.admit(state.present())?;
    let mut search = WinSearch::new(state.rule(), Color::White);
    let white_first = search.mover_wins(state.present(), 0, Color::White);
    let black_first = search.mover_wins(state.present(), 0, Color::Black);
    Ok(Outcome::from_first_mover_wins(white_first, black_first))
}

/// Whether `mover` wins the position when moving first, by minimax.
pub fn first_mover_wins(
    state: &GameState,
    mover: Color,
    config: SolverConfig,
) -> Result<bool, SolveError> {
    config.admit(state.present())?;
    Ok(WinSearch::new(state.rule(), Color::White).mover_wins(state.present(), 0, mover))
}

/// Checks that the position equals the integer `n`: the sum of the position
/// and `|n|` free moves for the player opposing the sign of `n` must be a
/// second-player win.
pub fn verify_value(state: &GameState, n: i32) -> Result<bool, SolveError> {
    verify_value_with(state, n, SolverConfig::default())
}

pub fn verify_value_with(
    state: &GameState,
    n: i32,
    config: SolverConfig,
) -> Result<bool, SolveError> {
    config.admit(state.present())?;
    let owner = if n > 0 { Color::Black } else { Color::White };
    let free = n.unsigned_abs();
    let mut search = WinSearch::new(state.rule(), owner);
    let white_first = search.mover_wins(state.present(), free, Color::White);
    let black_first = search.mover_wins(state.present(), free, Color::Black);
    Ok(!white_first && !black_first)
}

/// Exact balancedness: every reachable option is balanced, and whenever the
/// removable elements all share one color, at least half of the present
/// elements have that color. A nonempty position with nothing removable
/// passes the color condition vacuously.
pub fn is_balanced(state: &GameState) -> Result<bool, SolveError> {
    is_balanced_with(state, SolverConfig::default())
}

pub fn is_balanced_with(state: &GameState, config: SolverConfig) -> Result<bool, SolveError> {
    config.admit(state.present())?;
    let mut memo = MemoTable::new();
    Ok(balanced_rec(state.rule(), state.present(), &mut memo))
}

fn balanced_rec(rule: &RemovalRule, present: ElementSubset, memo: &mut MemoTable<bool>) -> bool {
    if present.is_empty() {
        return true;
    }
    if let Some(b) = memo.get(present) {
        return b;
    }
    let removable = rule.removable(present);
    let mut ok = true;
    if let Some(first) = removable.first() {
        let c = rule.color(first);
        if removable.iter().all(|x| rule.color(x) == c) {
            let counts = rule.ground().color_counts(present);
            ok = 2 * counts.of(c) >= present.len();
        }
    }
    let ok = ok
        && removable
            .iter()
            .all(|x| balanced_rec(rule, present.without(x), memo));
    memo.insert(present, ok)
        .expect("balancedness is deterministic");
    ok
}

/// White minus black. Only the value of the position if it is balanced.
pub fn balanced_value(state: &GameState) -> GameValue {
    GameValue(state.color_counts().surplus())
}

/// Value of the pomax game on a forest poset without search: white minus
/// black over the essential part.
pub fn tree_value(poset: &ColoredPoset) -> Result<GameValue, PosetError> {
    let ess = poset.essential_part()?;
    Ok(GameValue(poset.color_counts(ess).surplus()))
}

/// Same order with colors swapped; the game value changes sign.
pub fn negate(poset: &ColoredPoset) -> ColoredPoset {
    poset.negate()
}

/// Disjoint union; game values add.
pub fn disjoint_sum(p: &ColoredPoset, q: &ColoredPoset) -> Result<ColoredPoset, PosetError> {
    p.disjoint_sum(q)
}

/// Plays uniformly random legal moves, alternating from `first`, until the
/// player to move is stuck. Returns the other player.
pub fn random_playout(state: &GameState, first: Color, seed: u64) -> Color {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut current = state.clone();
    let mut mover = first;
    loop {
        let Some(x) = current.legal_moves(mover).iter().choose(&mut rng) else {
            return mover.opposite();
        };
        current = current.apply_move(x).expect("legal move");
        mover = mover.opposite();
    }
}

/// Certificates that make the pomax game on a poset balanced without search.
pub fn balance_certificate(poset: &ColoredPoset) -> Option<&'static str> {
    let btf = poset.blocking_triples().is_empty();
    if poset.is_forest() && poset.is_chess_colored() {
        Some("chess-colored forest")
    } else if poset.is_forest() && btf {
        Some("forest without blocking triples")
    } else if btf
        && poset
            .layout()
            .and_then(|cells| SkewShape::from_cells(cells.iter().copied()))
            .is_some_and(|s| s.is_straight())
    {
        Some("Young diagram without blocking triples")
    } else {
        None
    }
}

const _: () = assert!(DEFAULT_SOLVE_BOUND <= MAX_ELEMENTS);
