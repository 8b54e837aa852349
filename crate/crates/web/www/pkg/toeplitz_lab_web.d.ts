/* tslint:disable */
/* eslint-disable */

/**
 * Samples `steps` evenly spaced parameters of `alpha` or `power` on
 * `[start, stop]`. Returns flat triples `(param, t22, t31)`; a bound whose
 * hypothesis fails is reported as NaN.
 */
export function bound_curve(kind: string, start: number, stop: number, steps: number): Float64Array;

/**
 * Pretty JSON bound report for a family descriptor such as `alpha:0.3`.
 */
export function bounds_json(family: string): string;

/**
 * RGBA image (`size` x `size`) of `max |det| / bound` over the jet body,
 * indexed by `w1` in the unit disk. For each `w1` the maximum is taken over
 * `angles` points of the circle `|w2| = 1 - |w1|^2`. Pixels outside the disk
 * are transparent.
 */
export function jet_body_heatmap(family: string, theorem: string, size: number, angles: number): Uint8Array;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly bound_curve: (a: number, b: number, c: number, d: number, e: number) => [number, number, number, number];
    readonly bounds_json: (a: number, b: number) => [number, number, number, number];
    readonly jet_body_heatmap: (a: number, b: number, c: number, d: number, e: number, f: number) => [number, number, number, number];
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __externref_table_dealloc: (a: number) => void;
    readonly __wbindgen_free: (a: number, b: number, c: number) => void;
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
