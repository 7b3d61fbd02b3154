/* tslint:disable */
/* eslint-disable */
export const memory: WebAssembly.Memory;
export const check_kernel: (a: number, b: number) => [number, number, number];
export const pcf_curve: (a: number, b: number, c: number, d: number) => [number, number, number];
export const sample_pattern: (a: number, b: number, c: number, d: bigint) => [number, number, number];
export const __wbindgen_malloc: (a: number, b: number) => number;
export const __wbindgen_realloc: (a: number, b: number, c: number, d: number) => number;
export const __wbindgen_externrefs: WebAssembly.Table;
export const __externref_table_dealloc: (a: number) => void;
export const __wbindgen_start: () => void;
