//! Command-line front end. Exit codes: 0 success, 2 parse or format error,
//! 3 validation error, 4 state-space bound exceeded.

use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::generators::{
    fixture, gen_chain, gen_random_forest, gen_random_tree, gen_skew, gen_truncated_square,
    gen_young, ChessParity, ColorPolicy, Coloring, GeneratorError, Partition, SkewShape,
    FIXTURE_NAMES,
};
use crate::io::{
    export_dot, fixture_document, read_document, reduction_document, render_grid, Ground, IoError,
    Metadata, PosetDocument,
};
use crate::poset::{Color, ColoredPoset, PosetError};
use crate::reductions::{
    parse_dimacs, parse_qdimacs, reduce_3sat, reduce_qbf, verify_reduction, Formula, ParseError,
    ReductionError,
};
use crate::rules::{EngineError, GameState, GroundStructure, RemovalRule, RuleKind, TreeGraph};
use crate::solver::{
    balance_certificate, game_value_with, is_balanced_with, tree_value, Outcome, SolveError,
    Solver, SolverConfig, DEFAULT_SOLVE_BOUND,
};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Format(String),
    #[error("{0}")]
    Invalid(String),
    #[error("{0}")]
    Bound(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Format(_) => 2,
            CliError::Invalid(_) => 3,
            CliError::Bound(_) => 4,
        }
    }
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        match e {
            IoError::InvalidPoset { .. } | IoError::InvalidGrid(_) | IoError::NotAPoset => {
                CliError::Invalid(e.to_string())
            }
            _ => CliError::Format(e.to_string()),
        }
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Format(e.to_string())
    }
}

impl From<SolveError> for CliError {
    fn from(e: SolveError) -> Self {
        match e {
            SolveError::StateSpaceTooLarge { .. } => CliError::Bound(e.to_string()),
            _ => CliError::Invalid(e.to_string()),
        }
    }
}

impl From<ReductionError> for CliError {
    fn from(e: ReductionError) -> Self {
        match e {
            ReductionError::Solve(s) => s.into(),
            other => CliError::Invalid(other.to_string()),
        }
    }
}

macro_rules! invalid_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Invalid(e.to_string())
            }
        }
    )*};
}

invalid_from!(PosetError, EngineError, GeneratorError);

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Format(e.to_string())
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "pomax",
    version,
    about = "Solve and explore pomax and element-removal games"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact game value and outcome class.
    Solve {
        file: PathBuf,
        /// Defaults to pomax for posets and corner for grids.
        #[arg(long, value_enum)]
        rule: Option<RuleArg>,
        #[arg(long)]
        no_shortcuts: bool,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Structural report: counts, height, blocking triples, balancedness.
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        bound: BoundArgs,
    },
    /// Compile a formula into a pomax poset.
    Reduce {
        #[arg(value_enum)]
        kind: ReductionArg,
        file: PathBuf,
        /// Repair a non-alternating QDIMACS prefix with dummy variables.
        #[arg(long)]
        normalize: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Solve a reduction and compare with the brute-force oracle.
    VerifyReduction {
        #[arg(value_enum)]
        kind: ReductionArg,
        file: PathBuf,
        #[arg(long)]
        normalize: bool,
        #[command(flatten)]
        bound: BoundArgs,
    },
    Generate {
        #[command(subcommand)]
        what: GenerateCommand,
    },
    Export {
        #[command(subcommand)]
        what: ExportCommand,
    },
    /// Play against the engine in the terminal.
    Play {
        file: PathBuf,
        #[arg(long, value_enum)]
        human: ColorArg,
        /// Who moves first.
        #[arg(long, value_enum, default_value = "white")]
        first: ColorArg,
        #[arg(long, value_enum)]
        rule: Option<RuleArg>,
        #[command(flatten)]
        bound: BoundArgs,
    },
}

#[derive(Args, Debug, Clone, Copy)]
struct BoundArgs {
    /// Solve above the element bound anyway.
    #[arg(long)]
    force: bool,
    #[arg(long, default_value_t = DEFAULT_SOLVE_BOUND)]
    bound: usize,
}

#[derive(Subcommand, Debug)]
enum GenerateCommand {
    /// Chain from bottom to top, e.g. `BWBBWBW`.
    Chain {
        colors: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Chess-colored Young diagram, e.g. `5,4,3,3,1`.
    Young {
        shape: String,
        #[arg(long, value_enum, default_value = "top-left-white")]
        parity: ParityArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Chess-colored skew diagram `outer` minus `inner`.
    Skew {
        outer: String,
        inner: String,
        #[arg(long, value_enum, default_value = "top-left-white")]
        parity: ParityArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Random rooted tree poset, or a forest with `--forest`.
    Tree {
        n: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        forest: bool,
        #[arg(long, value_enum, default_value = "random")]
        coloring: PolicyArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// `n × n` square with `removals` random corners removed.
    TruncatedSquare {
        n: usize,
        removals: usize,
        #[arg(long)]
        seed: u64,
        #[arg(long, value_enum, default_value = "top-left-black")]
        parity: ParityArg,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// One of the built-in figure fixtures.
    Fixture {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum ExportCommand {
    /// Graphviz Hasse diagram.
    Dot {
        file: PathBuf,
        /// Comma-separated ids still present; the rest are drawn dashed.
        #[arg(long)]
        present: Option<String>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum RuleArg {
    Pomax,
    Minmax,
    Leaf,
    Corner,
}

impl From<RuleArg> for RuleKind {
    fn from(r: RuleArg) -> Self {
        match r {
            RuleArg::Pomax => RuleKind::Pomax,
            RuleArg::Minmax => RuleKind::MinMax,
            RuleArg::Leaf => RuleKind::Leaf,
            RuleArg::Corner => RuleKind::Corner,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ReductionArg {
    Sat,
    Qbf,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ColorArg {
    White,
    Black,
}

impl From<ColorArg> for Color {
    fn from(c: ColorArg) -> Self {
        match c {
            ColorArg::White => Color::White,
            ColorArg::Black => Color::Black,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ParityArg {
    TopLeftWhite,
    TopLeftBlack,
}

impl From<ParityArg> for ChessParity {
    fn from(p: ParityArg) -> Self {
        match p {
            ParityArg::TopLeftWhite => ChessParity::TopLeftWhite,
            ParityArg::TopLeftBlack => ChessParity::TopLeftBlack,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum PolicyArg {
    Random,
    Chess,
}

impl From<PolicyArg> for ColorPolicy {
    fn from(p: PolicyArg) -> Self {
        match p {
            PolicyArg::Random => ColorPolicy::Random,
            PolicyArg::Chess => ColorPolicy::Chess,
        }
    }
}

/// Runs the CLI on `argv` (including the program name) and returns the exit
/// code. `input` feeds the interactive `play` loop.
pub fn run<I, S>(argv: I, input: &mut dyn BufRead, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    match dispatch(cli.command, input, out) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn config(bound: BoundArgs, shortcuts: bool) -> SolverConfig {
    SolverConfig {
        shortcuts,
        bound: bound.bound,
        force: bound.force,
        ..SolverConfig::default()
    }
}

fn dispatch(
    command: Command,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    match command {
        Command::Solve {
            file,
            rule,
            no_shortcuts,
            bound,
        } => {
            let state = load_state(&file, rule)?;
            let value = game_value_with(&state, config(bound, !no_shortcuts))?;
            writeln!(out, "value={value}")?;
            writeln!(out, "outcome={}", Outcome::from_value(value))?;
        }
        Command::Analyze { file, bound } => analyze(&file, config(bound, true), out)?,
        Command::Reduce {
            kind,
            file,
            normalize,
            output,
        } => {
            let text = read_text(&file)?;
            let (reduced, name) = match kind {
                ReductionArg::Sat => (reduce_3sat(&parse_dimacs(&text)?)?, "3sat reduction"),
                ReductionArg::Qbf => (
                    reduce_qbf(&parse_qdimacs(&text, normalize)?)?,
                    "qbf reduction",
                ),
            };
            emit(&reduction_document(&reduced, name), output.as_deref(), out)?;
        }
        Command::VerifyReduction {
            kind,
            file,
            normalize,
            bound,
        } => {
            let text = read_text(&file)?;
            let formula = match kind {
                ReductionArg::Sat => Formula::Cnf(parse_dimacs(&text)?),
                ReductionArg::Qbf => Formula::Qbf(parse_qdimacs(&text, normalize)?),
            };
            let report = verify_reduction(&formula, config(bound, true))?;
            writeln!(out, "{report}")?;
        }
        Command::Generate { what } => generate(what, out)?,
        Command::Export {
            what: ExportCommand::Dot { file, present },
        } => {
            let poset = match read_document(&file)?.ground {
                Ground::Poset(p) => p,
                Ground::Grid(_) => {
                    return Err(CliError::Invalid(
                        "dot export needs a poset document".into(),
                    ))
                }
            };
            let present = match present {
                None => None,
                Some(list) => {
                    let mut set = crate::subset::ElementSubset::EMPTY;
                    for id in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                        let i = poset
                            .index_of(id)
                            .ok_or_else(|| CliError::Invalid(format!("unknown element `{id}`")))?;
                        set.insert(i);
                    }
                    Some(set)
                }
            };
            write!(out, "{}", export_dot(&poset, present))?;
        }
        Command::Play {
            file,
            human,
            first,
            rule,
            bound,
        } => {
            let state = load_state(&file, rule)?;
            play(
                state,
                human.into(),
                first.into(),
                config(bound, true),
                input,
                out,
            )?;
        }
    }
    Ok(())
}

fn read_text(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::Format(format!("{}: {e}", path.display())))
}

fn emit(doc: &PosetDocument, output: Option<&Path>, out: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(path) => {
            crate::io::write_document(doc, path)?;
            writeln!(out, "wrote={}", path.display())?;
        }
        None => write!(out, "{}", doc.to_json())?,
    }
    Ok(())
}

fn load_state(file: &Path, rule: Option<RuleArg>) -> Result<GameState, CliError> {
    let ground = read_document(file)?.ground;
    let kind = match (&ground, rule) {
        (_, Some(r)) => r.into(),
        (Ground::Poset(_), None) => RuleKind::Pomax,
        (Ground::Grid(_), None) => RuleKind::Corner,
    };
    let structure = match (ground, kind) {
        (Ground::Poset(p), RuleKind::Leaf) => {
            GroundStructure::TreeGraph(TreeGraph::from_tree_poset(&p)?)
        }
        (Ground::Poset(p), _) => GroundStructure::Poset(p),
        (Ground::Grid(g), _) => GroundStructure::Grid(g),
    };
    Ok(GameState::new(RemovalRule::new(kind, structure)?))
}

fn join(poset: &ColoredPoset, set: crate::subset::ElementSubset) -> String {
    if set.is_empty() {
        return "none".into();
    }
    set.iter()
        .map(|i| poset.label(i))
        .collect::<Vec<_>>()
        .join(",")
}

fn analyze(file: &Path, config: SolverConfig, out: &mut dyn Write) -> Result<(), CliError> {
    let poset = match read_document(file)?.ground {
        Ground::Poset(p) => p,
        Ground::Grid(g) => {
            let all = crate::subset::ElementSubset::full(g.len());
            let state = GameState::new(RemovalRule::corner(g.clone()));
            let counts = state.color_counts();
            writeln!(out, "cells={}", g.len())?;
            writeln!(out, "white={}", counts.white)?;
            writeln!(out, "black={}", counts.black)?;
            writeln!(out, "corners={}", g.corners(all).len())?;
            writeln!(out, "chess_colored={}", g.is_chess_colored())?;
            let balanced = match is_balanced_with(&state, config) {
                Ok(b) => b.to_string(),
                Err(SolveError::StateSpaceTooLarge { .. }) if g.is_chess_colored() => {
                    "true (certificate: chess-colored truncated square)".into()
                }
                Err(SolveError::StateSpaceTooLarge { .. }) => "unknown".into(),
                Err(e) => return Err(e.into()),
            };
            writeln!(out, "balanced={balanced}")?;
            return Ok(());
        }
    };
    let counts = poset.color_counts(poset.all());
    writeln!(out, "elements={}", poset.len())?;
    writeln!(out, "white={}", counts.white)?;
    writeln!(out, "black={}", counts.black)?;
    writeln!(out, "height={}", poset.height())?;
    writeln!(out, "forest={}", poset.is_forest())?;
    writeln!(out, "chess_colored={}", poset.is_chess_colored())?;
    writeln!(
        out,
        "maximal={}",
        join(&poset, poset.maximal_elements(poset.all()))
    )?;
    let triples = poset.blocking_triples();
    let triples = if triples.is_empty() {
        "none".to_string()
    } else {
        triples
            .iter()
            .map(|t| {
                format!(
                    "({},{},{})",
                    poset.label(t.bottom),
                    poset.label(t.middle),
                    poset.label(t.top)
                )
            })
            .collect::<Vec<_>>()
            .join(";")
    };
    writeln!(out, "blocking_triples={triples}")?;
    match poset.essential_part() {
        Ok(ess) => {
            writeln!(out, "essential_part={}", join(&poset, ess))?;
            writeln!(out, "tree_value={}", tree_value(&poset)?)?;
        }
        Err(_) => writeln!(out, "essential_part=n/a (not a forest)")?,
    }
    let certificate = balance_certificate(&poset);
    let state = GameState::pomax(poset);
    let balanced = match is_balanced_with(&state, config) {
        Ok(b) => b.to_string(),
        Err(SolveError::StateSpaceTooLarge { .. }) => match certificate {
            Some(c) => format!("true (certificate: {c})"),
            None => "unknown".into(),
        },
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "balanced={balanced}")?;
    Ok(())
}

fn parse_colors(s: &str) -> Result<Vec<Color>, CliError> {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != ',')
        .map(|c| match c.to_ascii_uppercase() {
            'W' => Ok(Color::White),
            'B' => Ok(Color::Black),
            _ => Err(CliError::Format(format!("color `{c}` is not W or B"))),
        })
        .collect()
}

fn parse_partition(s: &str) -> Result<Partition, CliError> {
    s.parse()
        .map_err(|e: GeneratorError| CliError::Format(e.to_string()))
}

fn generate(what: GenerateCommand, out: &mut dyn Write) -> Result<(), CliError> {
    let (doc, output) = match what {
        GenerateCommand::Chain { colors, output } => {
            let colors = parse_colors(&colors)?;
            if colors.len() > crate::subset::MAX_ELEMENTS {
                return Err(PosetError::TooManyElements(colors.len()).into());
            }
            (
                PosetDocument::from_poset(&gen_chain(&colors), Metadata::named("chain")),
                output,
            )
        }
        GenerateCommand::Young {
            shape,
            parity,
            output,
        } => {
            let shape = parse_partition(&shape)?;
            let p = gen_young(&shape, &Coloring::Chess(parity.into()))?;
            let meta = Metadata {
                name: Some(format!("young {shape}")),
                fixture_orientation: Some(ChessParity::from(parity).as_str().into()),
                ..Metadata::default()
            };
            (PosetDocument::from_poset(&p, meta), output)
        }
        GenerateCommand::Skew {
            outer,
            inner,
            parity,
            output,
        } => {
            let (outer, inner) = (parse_partition(&outer)?, parse_partition(&inner)?);
            let name = format!("skew {outer}/{inner}");
            let p = gen_skew(
                &SkewShape::new(outer, inner)?,
                &Coloring::Chess(parity.into()),
            )?;
            let meta = Metadata {
                name: Some(name),
                fixture_orientation: Some(ChessParity::from(parity).as_str().into()),
                ..Metadata::default()
            };
            (PosetDocument::from_poset(&p, meta), output)
        }
        GenerateCommand::Tree {
            n,
            seed,
            forest,
            coloring,
            output,
        } => {
            let (p, kind) = if forest {
                (gen_random_forest(n, seed, coloring.into())?, "forest")
            } else {
                (gen_random_tree(n, seed, coloring.into())?, "tree")
            };
            let meta = Metadata {
                name: Some(format!("random {kind} n={n}")),
                seed: Some(seed),
                ..Metadata::default()
            };
            (PosetDocument::from_poset(&p, meta), output)
        }
        GenerateCommand::TruncatedSquare {
            n,
            removals,
            seed,
            parity,
            output,
        } => {
            let t = gen_truncated_square(n, seed, removals, parity.into())?;
            let meta = Metadata {
                name: Some(format!("truncated square n={n} k={removals}")),
                fixture_orientation: Some(ChessParity::from(parity).as_str().into()),
                seed: Some(seed),
                removals: Some(t.removals.iter().map(|&(r, c)| [r, c]).collect()),
                ..Metadata::default()
            };
            (PosetDocument::from_grid(&t.grid, meta), output)
        }
        GenerateCommand::Fixture { name, output } => {
            let f = fixture(&name).ok_or_else(|| {
                CliError::Invalid(format!(
                    "unknown fixture `{name}` (known: {})",
                    FIXTURE_NAMES.join(", ")
                ))
            })?;
            (fixture_document(&f), output)
        }
    };
    emit(&doc, output.as_deref(), out)
}

fn play(
    mut state: GameState,
    human: Color,
    first: Color,
    config: SolverConfig,
    input: &mut dyn BufRead,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    let mut solver = Solver::for_state(&state, config);
    // fail early rather than mid-game
    solver.value(state.present())?;
    let label = |s: &GameState, i: usize| s.rule().ground().label(i);
    let mut mover = first;
    let mut transcript = Vec::new();
    loop {
        if let GroundStructure::Grid(g) = state.rule().ground() {
            write!(out, "{}", render_grid(g, state.present()))?;
        }
        let legal = state.legal_moves(mover);
        if legal.is_empty() {
            writeln!(out, "{mover} has no move and loses")?;
            writeln!(out, "loser={mover}")?;
            writeln!(out, "transcript={}", transcript.join(","))?;
            return Ok(());
        }
        let choice = if mover == human {
            let names: Vec<String> = legal.iter().map(|i| label(&state, i)).collect();
            writeln!(out, "your moves ({mover}): {}", names.join(" "))?;
            loop {
                write!(out, "> ")?;
                out.flush()?;
                let mut line = String::new();
                if input.read_line(&mut line)? == 0 {
                    return Err(CliError::Format(
                        "input closed before the game ended".into(),
                    ));
                }
                let id = line.trim();
                match state.rule().ground().index_of(id) {
                    Some(i) if legal.contains(i) => break i,
                    Some(_) => writeln!(out, "`{id}` is not a legal move for {mover}")?,
                    None => writeln!(out, "no element `{id}`")?,
                }
            }
        } else {
            let i = solver
                .best_move(state.present(), mover)?
                .expect("a legal move exists");
            writeln!(out, "engine ({mover}) removes {}", label(&state, i))?;
            i
        };
        transcript.push(label(&state, choice));
        state = state.play(crate::rules::Move {
            mover,
            element: choice,
        })?;
        mover = mover.opposite();
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_with(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut input = std::io::Cursor::new(stdin.as_bytes().to_vec());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("pomax").chain(args.iter().copied());
        let code = run(argv, &mut input, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    fn fixture_file(dir: &Path, name: &str) -> PathBuf {
        let path = dir.join(format!("{name}.json"));
        let doc = fixture_document(&fixture(name).unwrap());
        std::fs::write(&path, doc.to_json()).unwrap();
        path
    }

    #[test]
    fn solve_intro() {
        let dir = tempfile::tempdir().unwrap();
        let f = fixture_file(dir.path(), "intro_poset");
        let (code, out, _) = run_with(&["solve", f.to_str().unwrap()], "");
        assert_eq!(code, 0);
        assert_eq!(out, "value=0\noutcome=SecondPlayerWins\n");
    }

    #[test]
    fn analyze_chain() {
        let dir = tempfile::tempdir().unwrap();
        let f = fixture_file(dir.path(), "fig3_chain");
        let (code, out, _) = run_with(&["analyze", f.to_str().unwrap()], "");
        assert_eq!(code, 0);
        assert!(out.contains("essential_part=p4,p5,p6,p7\n"), "{out}");
        assert!(out.contains("blocking_triples=(p3,p4,p5)\n"), "{out}");
    }

    #[test]
    fn exit_codes() {
        let dir = tempfile::tempdir().unwrap();
        let bad = dir.path().join("bad.json");
        std::fs::write(&bad, "{").unwrap();
        assert_eq!(run_with(&["solve", bad.to_str().unwrap()], "").0, 2);
        let cyc = dir.path().join("cyc.json");
        std::fs::write(
            &cyc,
            r#"{"elements":[{"id":"a","color":"white"}],"covers":[["a","a"]]}"#,
        )
        .unwrap();
        assert_eq!(run_with(&["solve", cyc.to_str().unwrap()], "").0, 3);
        let big = dir.path().join("big.json");
        std::fs::write(
            &big,
            PosetDocument::from_poset(&gen_chain(&[Color::White; 30]), Metadata::default())
                .to_json(),
        )
        .unwrap();
        let (code, _, err) = run_with(&["solve", big.to_str().unwrap()], "");
        assert_eq!(code, 4, "{err}");
        let (code, out, _) = run_with(&["solve", big.to_str().unwrap(), "--force"], "");
        assert_eq!(
            (code, out.as_str()),
            (0, "value=30\noutcome=WhiteWinsBoth\n")
        );
        assert_eq!(run_with(&["frobnicate"], "").0, 2);
        assert_eq!(run_with(&["generate", "fixture", "nope"], "").0, 3);
    }

    #[test]
    fn play_rejects_illegal_moves() {
        let dir = tempfile::tempdir().unwrap();
        let f = fixture_file(dir.path(), "intro_poset");
        // Black moves first; y is not maximal, q does not exist
        let (code, out, _) = run_with(
            &[
                "play",
                f.to_str().unwrap(),
                "--human",
                "black",
                "--first",
                "black",
            ],
            "y\nq\nz\ny\n",
        );
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("`y` is not a legal move"));
        assert!(out.contains("no element `q`"));
        assert!(out.contains("loser=black"), "{out}");
    }
}
