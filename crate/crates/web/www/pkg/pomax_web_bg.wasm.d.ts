/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const __wbg_cornergame_free: (a: number, b: number) => void;
export const cornergame_new: (a: number, b: number, c: number, d: number) => [number, number, number];
export const cornergame_play: (a: number, b: number, c: number) => [number, number];
export const cornergame_report: (a: number) => [number, number, number, number];
export const reductionReport: (a: number, b: number) => [number, number, number, number];
export const youngReport: (a: number, b: number, c: number, d: number) => [number, number, number, number];
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_free: (a: number, b: number, c: number) => void;
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_start: () => void;
