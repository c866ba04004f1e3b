use std::collections::{BTreeSet, HashMap};

use proptest::prelude::*;

use pomax::cli;
use pomax::generators::{
    fixtures, gen_random_forest, gen_random_poset, gen_random_tree, gen_random_tree_graph,
    gen_truncated_square, gen_young, ChessParity, ColorPolicy, Coloring, Partition,
};
use pomax::io::{parse_document, poset_json, Ground, Metadata, PosetDocument};
use pomax::reductions::{
    qbf_bruteforce, reduce_3sat, reduce_qbf, sat_bruteforce, CnfFormula, Literal, QbfFormula, Role,
};
use pomax::solver::{balance_certificate, first_mover_wins};
use pomax::{
    game_value_with, is_balanced, random_playout, tree_value, Color, ColoredPoset, ElementSubset,
    GameState, Move, Removability, RemovalRule, SolverConfig,
};

fn poset(n: usize, seed: u64, density: f64) -> ColoredPoset {
    gen_random_poset(n, seed, density).unwrap()
}

fn forest(n: usize, seed: u64) -> ColoredPoset {
    gen_random_forest(n, seed, ColorPolicy::Random).unwrap()
}

fn value(state: &GameState, config: SolverConfig) -> i32 {
    game_value_with(state, config).unwrap().0
}

fn triples_within(p: &ColoredPoset, set: ElementSubset) -> bool {
    !p.restrict(set).blocking_triples().is_empty()
}

fn is_upper_set(p: &ColoredPoset, set: ElementSubset) -> bool {
    set.iter().all(|i| p.above(i).is_subset(set))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn covers_are_the_transitive_reduction(n in 0usize..12, seed: u64, density in 0.0f64..0.7) {
        let p = poset(n, seed, density);
        let mut reduction = Vec::new();
        for a in 0..n {
            for b in 0..n {
                let between = (0..n).any(|c| p.less_than(a, c) && p.less_than(c, b));
                if p.less_than(a, b) && !between {
                    reduction.push((a, b));
                }
            }
        }
        let mut covers = p.covers().to_vec();
        covers.sort_unstable();
        prop_assert_eq!(covers, reduction);
    }

    #[test]
    fn essential_part_is_the_largest_clean_upper_set(n in 0usize..11, seed: u64) {
        let p = forest(n, seed);
        let ess = p.essential_part().unwrap();
        prop_assert!(is_upper_set(&p, ess));
        prop_assert!(!triples_within(&p, ess));
        let mut best = ElementSubset::EMPTY;
        for s in p.all().subsets() {
            if is_upper_set(&p, s) && !triples_within(&p, s) && s.len() > best.len() {
                best = s;
            }
        }
        prop_assert_eq!(ess, best);
        let excluded = p.all().difference(ess);
        for v in p.maximal_elements(excluded).iter() {
            prop_assert!(triples_within(&p, ess.with(v)), "v={}", p.label(v));
        }
    }

    #[test]
    fn maximal_elements_are_monotone(n in 0usize..7, seed: u64, density in 0.0f64..0.7) {
        let p = poset(n, seed, density);
        for a in p.all().subsets() {
            let max_a = p.maximal_elements(a);
            for b in a.subsets() {
                prop_assert!(max_a.intersection(b).is_subset(p.maximal_elements(b)));
            }
        }
    }

    #[test]
    fn removable_is_within_present(n in 1usize..10, seed: u64, bits: u128) {
        let p = poset(n, seed, 0.3);
        let t = gen_random_tree_graph(n, seed, ColorPolicy::Random).unwrap();
        let side = 2 + n % 3;
        let g = gen_truncated_square(side, seed, n % (side * side - 3), ChessParity::TopLeftWhite).unwrap().grid;
        let rules = [
            RemovalRule::pomax(p.clone()),
            RemovalRule::min_max(p),
            RemovalRule::leaf(t),
            RemovalRule::corner(g),
        ];
        for rule in &rules {
            let a = ElementSubset::from_bits(bits).intersection(ElementSubset::full(rule.len()));
            let r = rule.removable(a);
            prop_assert!(r.is_subset(a));
            if rule.kind() == pomax::RuleKind::Pomax && !a.is_empty() {
                prop_assert!(!r.is_empty());
            }
        }
    }

    #[test]
    fn random_games_shrink_and_terminate(n in 0usize..14, seed: u64, first_white: bool) {
        let state = GameState::pomax(poset(n, seed, 0.25));
        let mut current = state.clone();
        let mut mover = if first_white { Color::White } else { Color::Black };
        let mut moves = 0;
        while let Some(x) = current.legal_moves(mover).first() {
            let next = current.play(Move { mover, element: x }).unwrap();
            prop_assert_eq!(next.present().len() + 1, current.present().len());
            current = next;
            mover = mover.opposite();
            moves += 1;
        }
        prop_assert!(moves <= n);
    }

    #[test]
    fn negation_and_sums(n in 0usize..7, m in 0usize..7, seed: u64) {
        let p = poset(n, seed, 0.3);
        let q = poset(m, seed ^ 0x5555, 0.4);
        let oracle = SolverConfig::oracle();
        let vp = value(&GameState::pomax(p.clone()), oracle);
        let vq = value(&GameState::pomax(q.clone()), oracle);
        prop_assert_eq!(value(&GameState::pomax(p.negate()), oracle), -vp);
        let sum = GameState::pomax(p.disjoint_sum(&q).unwrap());
        prop_assert_eq!(value(&sum, oracle), vp + vq);
        prop_assert_eq!(value(&sum, SolverConfig::default()), vp + vq);
    }

    #[test]
    fn shortcuts_agree_with_search(n in 0usize..13, seed: u64) {
        let f = forest(n, seed);
        let state = GameState::pomax(f.clone());
        let searched = value(&state, SolverConfig::oracle());
        prop_assert_eq!(value(&state, SolverConfig::default()), searched);
        prop_assert_eq!(tree_value(&f).unwrap().0, searched);
        let mm = GameState::new(RemovalRule::min_max(f));
        prop_assert_eq!(value(&mm, SolverConfig::default()), value(&mm, SolverConfig::oracle()));
    }

    #[test]
    fn balanced_positions_score_their_surplus(n in 0usize..10, seed: u64, density in 0.0f64..0.5) {
        let state = GameState::pomax(poset(n, seed, density));
        if is_balanced(&state).unwrap() {
            let v = value(&state, SolverConfig::oracle());
            prop_assert_eq!(v, state.color_counts().surplus());
            let predicted = pomax::Outcome::from_value(pomax::GameValue(v));
            for s in 0..20 {
                for first in [Color::White, Color::Black] {
                    prop_assert_eq!(random_playout(&state, first, seed ^ s), predicted.winner(first));
                }
            }
        }
    }

    #[test]
    fn certificates_imply_balanced(n in 0usize..12, seed: u64) {
        let f = forest(n, seed);
        let chess = gen_random_forest(n, seed, ColorPolicy::Chess).unwrap();
        for p in [f, chess] {
            if balance_certificate(&p).is_some() {
                prop_assert!(is_balanced(&GameState::pomax(p)).unwrap());
            }
        }
    }

    #[test]
    fn generators_are_deterministic(n in 1usize..12, seed: u64) {
        prop_assert_eq!(forest(n, seed), forest(n, seed));
        let tree = gen_random_tree(n, seed, ColorPolicy::Random).unwrap();
        prop_assert!(tree.is_tree());
        prop_assert_eq!(&tree, &gen_random_tree(n, seed, ColorPolicy::Random).unwrap());
        prop_assert_eq!(poset(n, seed, 0.3), poset(n, seed, 0.3));
        prop_assert_eq!(
            gen_random_tree_graph(n, seed, ColorPolicy::Chess).unwrap(),
            gen_random_tree_graph(n, seed, ColorPolicy::Chess).unwrap()
        );
        let k = n % 6;
        prop_assert_eq!(
            gen_truncated_square(4, seed, k, ChessParity::TopLeftBlack).unwrap(),
            gen_truncated_square(4, seed, k, ChessParity::TopLeftBlack).unwrap()
        );
    }

    #[test]
    fn poset_documents_round_trip(n in 0usize..12, seed: u64, name in "[a-z]{0,8}") {
        let p = poset(n, seed, 0.3);
        let metadata = if name.is_empty() { Metadata::default() } else { Metadata::named(name) };
        let text = poset_json(&p, metadata.clone());
        let loaded = parse_document(&text).unwrap();
        prop_assert_eq!(&loaded.ground, &Ground::Poset(p.clone()));
        prop_assert_eq!(&loaded.metadata, &metadata);
        prop_assert_eq!(PosetDocument::from_poset(&p, metadata).to_json(), text);
    }

    #[test]
    fn sat_reduction_matches_oracle(clauses in prop::collection::vec(clause(5), 0..5)) {
        let f = CnfFormula::new(5, clauses).unwrap();
        let r = reduce_3sat(&f).unwrap();
        check_roles(&r.poset, &r.roles, &f)?;
        prop_assert_eq!(r.poset.height(), 2);
        let state = GameState::pomax(r.poset);
        let v = value(&state, SolverConfig::default());
        prop_assert!(v <= 0);
        prop_assert_eq!(v == 0, sat_bruteforce(&f).unwrap().is_some());
        prop_assert!(!first_mover_wins(&state, Color::White, SolverConfig::default()).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn qbf_reduction_matches_oracle(clauses in prop::collection::vec(clause(4), 0..4)) {
        let q = QbfFormula::new(CnfFormula::new(4, clauses).unwrap()).unwrap();
        let r = reduce_qbf(&q).unwrap();
        check_roles(&r.poset, &r.roles, q.matrix())?;
        prop_assert_eq!(r.poset.height(), 3);
        let v = value(&GameState::pomax(r.poset), SolverConfig::default().forced());
        prop_assert!(v <= 0);
        prop_assert_eq!(v == 0, qbf_bruteforce(&q).unwrap());
    }

    #[test]
    fn play_transcripts_replay(n in 1usize..9, seed: u64, human_white: bool, first_white: bool) {
        let p = poset(n, seed, 0.3);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.json");
        std::fs::write(&path, poset_json(&p, Metadata::default())).unwrap();
        // cycling through every label guarantees a legal move within n lines
        let script = p.labels().join("\n") + "\n";
        let stdin = script.repeat(n + 1);
        let color = |w: bool| if w { "white" } else { "black" };
        let args = [
            "pomax", "play", path.to_str().unwrap(),
            "--human", color(human_white), "--first", color(first_white),
        ];
        let mut input = std::io::Cursor::new(stdin.into_bytes());
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = cli::run(args, &mut input, &mut out, &mut err);
        let out = String::from_utf8(out).unwrap();
        prop_assert_eq!(code, 0, "{}", out);

        let field = |key: &str| {
            out.lines().find_map(|l| l.strip_prefix(key)).map(str::to_string).unwrap()
        };
        let transcript = field("transcript=");
        let mut state = GameState::pomax(p);
        let mut mover = if first_white { Color::White } else { Color::Black };
        for id in transcript.split(',').filter(|s| !s.is_empty()) {
            let element = state.rule().ground().index_of(id).unwrap();
            state = state.play(Move { mover, element }).unwrap();
            mover = mover.opposite();
        }
        prop_assert!(state.legal_moves(mover).is_empty());
        prop_assert_eq!(field("loser="), mover.to_string());
    }
}

fn clause(num_vars: usize) -> impl Strategy<Value = Vec<Literal>> {
    prop::collection::btree_set((1..=num_vars, any::<bool>()), 1..=3).prop_map(|lits| {
        lits.into_iter()
            .map(|(v, neg)| {
                if neg {
                    Literal::neg(v)
                } else {
                    Literal::pos(v)
                }
            })
            .collect()
    })
}

/// Roles are distinct and name their elements; each clause element sits
/// exactly under the assignments that falsify its literals.
fn check_roles(p: &ColoredPoset, roles: &[Role], f: &CnfFormula) -> Result<(), TestCaseError> {
    prop_assert_eq!(roles.len(), p.len());
    let distinct: BTreeSet<_> = roles.iter().collect();
    prop_assert_eq!(distinct.len(), roles.len());
    let index: HashMap<Role, usize> = roles.iter().enumerate().map(|(i, &r)| (r, i)).collect();
    for (i, r) in roles.iter().enumerate() {
        prop_assert_eq!(p.label(i), r.label());
    }
    for (j, clause) in f.clauses().iter().enumerate() {
        let c = index[&Role::Clause(j + 1)];
        let expected = ElementSubset::from_indices(clause.iter().map(|l| {
            index[&Role::Assignment {
                var: l.variable,
                value: l.falsifying_value(),
            }]
        }));
        prop_assert_eq!(p.upper_covers(c), expected);
    }
    Ok(())
}

#[test]
fn young_maximal_cells_are_outer_corners() {
    for n in 0..=10 {
        for shape in Partition::all_of(n) {
            let p = gen_young(&shape, &Coloring::Chess(ChessParity::TopLeftWhite)).unwrap();
            assert!(p.is_chess_colored());
            let layout = p.layout().unwrap();
            let max: BTreeSet<_> = p
                .maximal_elements(p.all())
                .iter()
                .map(|i| layout[i])
                .collect();
            let corners: BTreeSet<_> = (0..shape.len())
                .filter(|&i| i + 1 == shape.len() || shape.part(i + 1) < shape.part(i))
                .map(|i| (i, shape.part(i) - 1))
                .collect();
            assert_eq!(max, corners, "{shape}");
            if n <= 8 {
                assert!(balance_certificate(&p).is_some(), "{shape}");
                assert!(is_balanced(&GameState::pomax(p)).unwrap(), "{shape}");
            }
        }
    }
}

#[test]
fn no_black_covers_black_without_blocking_triples() {
    let mut hits = 0;
    for seed in 0..3000u64 {
        let p = poset(1 + seed as usize % 8, seed, 0.35);
        let all_white_top = p
            .maximal_elements(p.all())
            .iter()
            .all(|i| p.color(i) == Color::White);
        if !all_white_top || !p.blocking_triples().is_empty() {
            continue;
        }
        hits += 1;
        for &(a, b) in p.covers() {
            assert!(
                !(p.color(a) == Color::Black && p.color(b) == Color::Black),
                "seed {seed}: {} covered by {}",
                p.label(a),
                p.label(b)
            );
        }
    }
    assert!(hits > 100, "only {hits} qualifying posets");
}

#[test]
fn solve_ignores_shortcut_flag_on_fixtures() {
    let dir = tempfile::tempdir().unwrap();
    for f in fixtures() {
        let path = dir.path().join(format!("{}.json", f.name));
        std::fs::write(&path, pomax::io::fixture_document(&f).to_json()).unwrap();
        let path = path.to_str().unwrap();
        let rule = if f.name == "fig6_truncated" {
            "corner"
        } else {
            "pomax"
        };
        let run = |extra: &[&str]| {
            let mut args = vec!["pomax", "solve", path, "--rule", rule, "--force"];
            args.extend_from_slice(extra);
            let (mut out, mut err) = (Vec::new(), Vec::new());
            let code = cli::run(args, &mut std::io::empty(), &mut out, &mut err);
            (code, String::from_utf8(out).unwrap())
        };
        let with = run(&[]);
        assert_eq!(with.0, 0, "{}: {}", f.name, with.1);
        assert_eq!(with, run(&["--no-shortcuts"]), "{}", f.name);
    }
}
