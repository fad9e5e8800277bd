/**
 * CSV reader for mhdbl outputs.
 *
 * Files carry one header row and numeric data rows; lines starting with
 * `#` are key=value comments (fitted orders, calibration constants) and
 * are returned separately. Missing columns raise named errors so a plot
 * never silently renders blank.
 */

import { readFileSync } from "fs";

export interface Table {
  columns: string[];
  rows: number[][];
  /** `# key=value` comment lines, parsed */
  meta: Record<string, string>;
  /** non-numeric cells (e.g. case labels) kept as strings, by column */
  labels: Record<string, string[]>;
}

export function parseCsv(text: string, path = "<csv>"): Table {
  const meta: Record<string, string> = {};
  const lines = text.split(/\r?\n/).filter((l) => l.length > 0);
  const dataLines: string[] = [];
  for (const line of lines) {
    if (line.startsWith("#")) {
      const body = line.slice(1).trim();
      const eq = body.indexOf("=");
      if (eq > 0) meta[body.slice(0, eq).trim()] = body.slice(eq + 1).trim();
      continue;
    }
    dataLines.push(line);
  }
  if (dataLines.length === 0) {
    throw new Error(`${path}: no header row`);
  }
  const columns = dataLines[0].split(",").map((c) => c.trim());
  const rows: number[][] = [];
  const labels: Record<string, string[]> = {};
  for (const line of dataLines.slice(1)) {
    const cells = line.split(",");
    if (cells.length !== columns.length) {
      throw new Error(
        `${path}: row has ${cells.length} cells, header has ${columns.length}`,
      );
    }
    const row: number[] = [];
    cells.forEach((cell, j) => {
      const v = Number(cell);
      if (Number.isNaN(v) && cell.trim() !== "nan") {
        (labels[columns[j]] ??= []).push(cell.trim());
        row.push(NaN);
      } else {
        row.push(v);
      }
    });
    rows.push(row);
  }
  return { columns, rows, meta, labels };
}

export function readCsv(path: string): Table {
  return parseCsv(readFileSync(path, "utf8"), path);
}

/** Extract one numeric column; throws a named error when absent. */
export function column(table: Table, name: string, path = "<csv>"): number[] {
  const j = table.columns.indexOf(name);
  if (j < 0) {
    throw new Error(
      `${path}: missing column '${name}' (have: ${table.columns.join(", ")})`,
    );
  }
  return table.rows.map((r) => r[j]);
}

/** Least-squares slope of log(y) against log(x). */
export function logLogSlope(x: number[], y: number[]): number {
  const pts = x
    .map((xi, i) => [Math.log(xi), Math.log(y[i])])
    .filter(([a, b]) => Number.isFinite(a) && Number.isFinite(b));
  if (pts.length < 2) throw new Error("log-log fit needs two finite points");
  const n = pts.length;
  const sx = pts.reduce((s, p) => s + p[0], 0);
  const sy = pts.reduce((s, p) => s + p[1], 0);
  const sxx = pts.reduce((s, p) => s + p[0] * p[0], 0);
  const sxy = pts.reduce((s, p) => s + p[0] * p[1], 0);
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}
