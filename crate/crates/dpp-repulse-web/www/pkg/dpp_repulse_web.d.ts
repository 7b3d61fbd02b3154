/* tslint:disable */
/* eslint-disable */

/**
 * Validity report: {valid, sup_F, argsup_t, alpha_max, violation}.
 */
export function check_kernel(spec_json: string): any;

/**
 * g(r) on n equispaced radii in [0, rmax].
 */
export function pcf_curve(spec_json: string, rmax: number, n: number): any;

/**
 * One planar realization on [-h, h]².
 */
export function sample_pattern(spec_json: string, half_width: number, seed: bigint): any;

export type InitInput = RequestInfo | URL | Response | BufferSource | WebAssembly.Module;

export interface InitOutput {
    readonly memory: WebAssembly.Memory;
    readonly check_kernel: (a: number, b: number) => [number, number, number];
    readonly pcf_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
    readonly sample_pattern: (a: number, b: number, c: number, d: bigint) => [number, number, number];
    readonly __wbindgen_malloc: (a: number, b: number) => number;
    readonly __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
    readonly __wbindgen_externrefs: WebAssembly.Table;
    readonly __externref_table_dealloc: (a: number) => void;
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
