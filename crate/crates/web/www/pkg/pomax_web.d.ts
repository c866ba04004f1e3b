/* tslint:disable */
/* eslint-disable */

export class CornerGame {
    free(): void;
    [Symbol.dispose](): void;
    constructor(side: number, removals: number, seed: number, white_first: boolean);
    play(row: number, col: number): void;
    report(): string;
}

export function reductionReport(dimacs: string): string;

export function youngReport(shape: string, parity: string): string;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly __wbg_cornergame_free: (a: number, b: number) => void;
    readonly cornergame_new: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly cornergame_play: (a: number, b: number, c: number) => [number, number];
    readonly cornergame_report: (a: number) => [number, number, number, number];
    readonly reductionReport: (a: number, b: number) => [number, number, number, number];
    readonly youngReport: (a: number, b: number, c: number, d: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_start: () => void;
}

export type SyncInitInput = BufferSource | WebAssembly.Module;

/**
 * Instantiates the given `module`, which can either be bytes or
 * a precompiled `WebAssembly.Module`.
 *
 * @param {{ module: SyncInitInput }} module - Passing `SyncInitInput` directly is deprecated.
 *
 * @returns {InitOutput}
 */
export function initSync(module: { module: SyncInitInput } | SyncInitInput): InitOutput;

/**
 * If `module_or_path` is {RequestInfo} or {URL}, makes a request and
 * for everything else, calls `WebAssembly.instantiate` directly.
 *
 * @param {{ module_or_path: InitInput | Promise<InitInput> }} module_or_path - Passing `InitInput` directly is deprecated.
 *
 * @returns {Promise<InitOutput>}
 */
export default function __wbg_init (module_or_path?: { module_or_path: InitInput | Promise<InitInput> } | InitInput | Promise<InitInput>): Promise<InitOutput>;
