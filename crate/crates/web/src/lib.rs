//! Browser bindings for the demo page. Every export returns JSON text for
//! the page script to parse.

use pomax::generators::{gen_truncated_square, gen_young, ChessParity, Coloring, Partition};
use pomax::io::export_dot;
use pomax::reductions::{parse_dimacs, reduce_3sat, sat_bruteforce};
use pomax::{game_value, Color, ElementSubset, GameState, RemovalRule, Solver, SolverConfig};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_SIDE: usize = 7;

fn parity(name: &str) -> Result<ChessParity, String> {
    name.parse()
}

/// Cell layout and exact value of a chess-colored Young diagram.
pub fn young_report(shape: &str, parity_name: &str) -> Result<Value, String> {
    let shape: Partition = shape.parse().map_err(|e| format!("{e}"))?;
    if shape.size() > 28 {
        return Err(format!(
            "{} cells is too many for the demo (max 28)",
            shape.size()
        ));
    }
    let poset =
        gen_young(&shape, &Coloring::Chess(parity(parity_name)?)).map_err(|e| e.to_string())?;
    let layout = poset
        .layout()
        .expect("young diagrams carry a layout")
        .to_vec();
    let maximal = poset.maximal_elements(poset.all());
    let counts = poset.color_counts(poset.all());
    let cells: Vec<Value> = layout
        .iter()
        .enumerate()
        .map(|(i, &(row, col))| {
            json!({ "row": row, "col": col, "color": poset.color(i), "maximal": maximal.contains(i) })
        })
        .collect();
    let value = game_value(&GameState::pomax(poset)).map_err(|e| e.to_string())?;
    Ok(json!({
        "shape": shape.to_string(),
        "cells": cells,
        "white": counts.white,
        "black": counts.black,
        "value": value.0,
    }))
}

/// Reduction poset of a DIMACS formula with its value, the brute-force
/// verdict, and a DOT drawing.
pub fn reduction_report(dimacs: &str) -> Result<Value, String> {
    let formula = parse_dimacs(dimacs).map_err(|e| e.to_string())?;
    let reduced = reduce_3sat(&formula).map_err(|e| e.to_string())?;
    let sat = sat_bruteforce(&formula).map_err(|e| e.to_string())?;
    let p = &reduced.poset;
    let dot = export_dot(p, None);
    // longest chain below each element, for a layered drawing
    let mut level = vec![0usize; p.len()];
    for _ in 0..p.len() {
        for &(lo, hi) in p.covers() {
            level[hi] = level[hi].max(level[lo] + 1);
        }
    }
    let nodes: Vec<Value> = (0..p.len())
        .map(|i| json!({ "id": p.label(i), "color": p.color(i), "level": level[i], "role": reduced.roles[i].kind_name() }))
        .collect();
    let edges: Vec<Value> = p.covers().iter().map(|&(a, b)| json!([a, b])).collect();
    let elements = reduced.poset.len();
    let height = reduced.poset.height();
    let value = game_value(&GameState::pomax(reduced.poset)).map_err(|e| e.to_string())?;
    Ok(json!({
        "elements": elements,
        "height": height,
        "value": value.0,
        "satisfiable": sat.is_some(),
        "witness": sat,
        "agree": (value.0 == 0) == sat.is_some(),
        "nodes": nodes,
        "edges": edges,
        "dot": dot,
    }))
}

/// Corner game on a truncated square: the human plays White, the engine
/// answers as Black with a value-optimal move.
pub struct CornerGame {
    state: GameState,
    solver: Solver,
    cells: Vec<(usize, usize)>,
    side: usize,
    mover: Color,
    log: Vec<String>,
}

impl CornerGame {
    pub fn create(
        side: usize,
        removals: usize,
        seed: u64,
        white_first: bool,
    ) -> Result<Self, String> {
        if !(2..=MAX_SIDE).contains(&side) {
            return Err(format!("side must be between 2 and {MAX_SIDE}"));
        }
        let ts = gen_truncated_square(side, seed, removals, ChessParity::TopLeftBlack)
            .map_err(|e| e.to_string())?;
        let cells = ts.grid.cells().to_vec();
        let state = GameState::new(RemovalRule::corner(ts.grid));
        let mut solver = Solver::for_state(&state, SolverConfig::default());
        solver.value(state.present()).map_err(|e| e.to_string())?;
        let mut game = CornerGame {
            state,
            solver,
            cells,
            side,
            mover: if white_first {
                Color::White
            } else {
                Color::Black
            },
            log: Vec::new(),
        };
        game.engine_turn()?;
        Ok(game)
    }

    fn label(&self, i: usize) -> String {
        let (r, c) = self.cells[i];
        format!("r{}c{}", r + 1, c + 1)
    }

    fn engine_turn(&mut self) -> Result<(), String> {
        if self.mover != Color::Black {
            return Ok(());
        }
        let choice = self
            .solver
            .best_move(self.state.present(), Color::Black)
            .map_err(|e| e.to_string())?;
        if let Some(i) = choice {
            self.state = self.state.apply_move(i).map_err(|e| e.to_string())?;
            self.log.push(format!("black {}", self.label(i)));
            self.mover = Color::White;
        }
        Ok(())
    }

    /// White removes the cell at `(row, col)`; the engine replies.
    pub fn play(&mut self, row: usize, col: usize) -> Result<(), String> {
        if self.mover != Color::White {
            return Err("the game is over".into());
        }
        let i = self
            .cells
            .iter()
            .position(|&c| c == (row, col))
            .filter(|&i| self.state.legal_moves(Color::White).contains(i))
            .ok_or_else(|| format!("r{}c{} is not a White corner", row + 1, col + 1))?;
        self.state = self.state.apply_move(i).map_err(|e| e.to_string())?;
        self.log.push(format!("white {}", self.label(i)));
        self.mover = Color::Black;
        self.engine_turn()
    }

    pub fn report(&mut self) -> Result<Value, String> {
        let present = self.state.present();
        let corners = self.state.removable();
        let cells: Vec<Value> = self
            .cells
            .iter()
            .enumerate()
            .map(|(i, &(row, col))| {
                json!({
                    "row": row,
                    "col": col,
                    "color": self.state.rule().color(i),
                    "present": present.contains(i),
                    "corner": corners.contains(i),
                })
            })
            .collect();
        let stuck = self.state.legal_moves(self.mover) == ElementSubset::EMPTY;
        let value = self.solver.value(present).map_err(|e| e.to_string())?;
        Ok(json!({
            "side": self.side,
            "cells": cells,
            "mover": self.mover,
            "loser": stuck.then_some(self.mover),
            "value": value.0,
            "surplus": self.state.color_counts().surplus(),
            "log": self.log,
        }))
    }
}

fn to_js(result: Result<Value, String>) -> Result<String, JsValue> {
    result
        .map(|v| v.to_string())
        .map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = youngReport)]
pub fn young_report_js(shape: &str, parity: &str) -> Result<String, JsValue> {
    to_js(young_report(shape, parity))
}

#[wasm_bindgen(js_name = reductionReport)]
pub fn reduction_report_js(dimacs: &str) -> Result<String, JsValue> {
    to_js(reduction_report(dimacs))
}

#[wasm_bindgen(js_name = CornerGame)]
pub struct CornerGameJs(CornerGame);

#[wasm_bindgen(js_class = CornerGame)]
impl CornerGameJs {
    #[wasm_bindgen(constructor)]
    pub fn new(
        side: usize,
        removals: usize,
        seed: u32,
        white_first: bool,
    ) -> Result<CornerGameJs, JsValue> {
        CornerGame::create(side, removals, u64::from(seed), white_first)
            .map(CornerGameJs)
            .map_err(|e| JsValue::from_str(&e))
    }

    pub fn play(&mut self, row: usize, col: usize) -> Result<(), JsValue> {
        self.0.play(row, col).map_err(|e| JsValue::from_str(&e))
    }

    pub fn report(&mut self) -> Result<String, JsValue> {
        to_js(self.0.report())
    }
}
