/**
 * Reader for mhdbl binary snapshots.
 *
 * Layout (little-endian): magic "MHDBLSNP", u32 version, u32 nx, u32 ny,
 * f64 x_period, f64 y_max, f64 t, u32 nfields, nfields x 16-byte ASCII
 * names, then row-major (nx, ny) f64 arrays. Truncation and header
 * mismatches raise with the offending detail.
 */

import { readFileSync } from "fs";

export interface Snapshot {
  nx: number;
  ny: number;
  xPeriod: number;
  yMax: number;
  t: number;
  fields: Record<string, Float64Array>; // row-major (nx, ny)
}

const MAGIC = "MHDBLSNP";
const HEAD_BYTES = 8 + 4 + 4 + 4 + 8 * 3 + 4;

export function parseSnapshot(buf: Buffer, path = "<snap>"): Snapshot {
  if (buf.length < HEAD_BYTES) {
    throw new Error(`${path}: truncated header (${buf.length} bytes)`);
  }
  const magic = buf.subarray(0, 8).toString("ascii");
  if (magic !== MAGIC) {
    throw new Error(`${path}: bad magic '${magic}'`);
  }
  const version = buf.readUInt32LE(8);
  if (version !== 1) {
    throw new Error(`${path}: unsupported snapshot version ${version}`);
  }
  const nx = buf.readUInt32LE(12);
  const ny = buf.readUInt32LE(16);
  const xPeriod = buf.readDoubleLE(20);
  const yMax = buf.readDoubleLE(28);
  const t = buf.readDoubleLE(36);
  const nfields = buf.readUInt32LE(44);
  let off = HEAD_BYTES;
  const names: string[] = [];
  for (let k = 0; k < nfields; k++) {
    if (off + 16 > buf.length) {
      throw new Error(`${path}: truncated name table`);
    }
    names.push(buf.subarray(off, off + 16).toString("ascii").replace(/\0+$/, ""));
    off += 16;
  }
  const need = nfields * nx * ny * 8;
  if (buf.length - off !== need) {
    throw new Error(
      `${path}: payload is ${buf.length - off} bytes, expected ${need}`,
    );
  }
  const fields: Record<string, Float64Array> = {};
  for (const name of names) {
    const arr = new Float64Array(nx * ny);
    for (let i = 0; i < nx * ny; i++) {
      arr[i] = buf.readDoubleLE(off + 8 * i);
    }
    fields[name] = arr;
    off += nx * ny * 8;
  }
  return { nx, ny, xPeriod, yMax, t, fields };
}

export function readSnapshot(path: string): Snapshot {
  return parseSnapshot(readFileSync(path), path);
}
