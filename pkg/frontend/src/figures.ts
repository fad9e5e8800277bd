/**
 * The shipped figure kinds, one function per kind. Each consumes the
 * documented CSV/snapshot formats and returns the SVG text; missing
 * columns or corrupt headers throw named errors (never a silent blank).
 */

import { basename } from "path";
import { Table, column, logLogSlope, readCsv } from "./csv.js";
import { Snapshot, readSnapshot } from "./snapshot.js";
import { PALETTE, Svg, diverging, linScale, logScale, logTicks, ticks } from "./svg.js";

function extent(vs: number[]): [number, number] {
  let lo = Infinity, hi = -Infinity;
  for (const v of vs) {
    if (Number.isFinite(v)) {
      lo = Math.min(lo, v);
      hi = Math.max(hi, v);
    }
  }
  if (!Number.isFinite(lo)) throw new Error("series has no finite values");
  if (lo === hi) { lo -= 0.5; hi += 0.5; }
  return [lo, hi];
}

function pad([lo, hi]: [number, number], f = 0.05): [number, number] {
  const s = (hi - lo) * f;
  return [lo - s, hi + s];
}

function timeseries(table: Table, path: string, keys: string[],
                    ylabel: string, title: string,
                    refline?: { value: number; label: string }): string {
  const t = column(table, "t", path);
  const series = keys.map((k) => column(table, k, path));
  const svg = new Svg();
  const [tlo, thi] = extent(t);
  let vals = series.flat();
  if (refline) vals = vals.concat([refline.value]);
  const [vlo, vhi] = pad(extent(vals));
  const sx = linScale(tlo, thi, svg.plotLeft, svg.plotRight);
  const sy = linScale(vlo, vhi, svg.plotBottom, svg.plotTop);
  svg.axes(sx, sy, ticks(tlo, thi), ticks(vlo, vhi), "t", ylabel, title);
  series.forEach((vs, i) => {
    svg.polyline(t.map(sx), vs.map(sy), PALETTE[i % PALETTE.length]);
  });
  if (refline) {
    const y = sy(refline.value);
    svg.line(svg.plotLeft, y, svg.plotRight, y,
             'stroke="#444" stroke-width="1.2" stroke-dasharray="6 4"');
    svg.text(svg.plotLeft + 6, y - 5, refline.label, 'font-size="11" fill="#444"');
  }
  if (keys.length > 1) {
    svg.legend(keys.map((k, i) => [k, PALETTE[i % PALETTE.length]]));
  }
  return svg.render();
}

export function figEnergy(paths: string[]): string {
  const path = paths[0];
  return timeseries(readCsv(path), path, ["E"], "E(t)",
                    `weighted energy — ${basename(path)}`);
}

export function figHmin(paths: string[], delta0 = 0.1): string {
  const path = paths[0];
  return timeseries(readCsv(path), path, ["hmin"], "min h1(t)",
                    `positivity margin — ${basename(path)}`,
                    { value: delta0, label: `delta0 = ${delta0}` });
}

export function figCompare(paths: string[]): string {
  if (paths.length < 2) {
    throw new Error("compare needs two record.csv paths (comma separated)");
  }
  const tables = paths.map((p) => readCsv(p));
  const svg = new Svg();
  const ts = tables.map((tb, i) => column(tb, "t", paths[i]));
  const es = tables.map((tb, i) => column(tb, "E", paths[i]));
  const finite = es.map((vs) => vs.filter((v) => Number.isFinite(v)));
  const [tlo, thi] = extent(ts.flat());
  const pos = finite.flat().filter((v) => v > 0);
  const lo = pos.length ? Math.min(...pos) : 1e-3;
  const hi = pos.length ? Math.max(...pos) : 1.0;
  const sx = linScale(tlo, thi, svg.plotLeft, svg.plotRight);
  const sy = logScale(Math.max(lo, 1e-12), hi * 2, svg.plotBottom, svg.plotTop);
  svg.axes(sx, sy, ticks(tlo, thi), logTicks(Math.max(lo, 1e-12), hi * 2),
           "t", "E(t), log scale", "with vs without magnetic field");
  const names = paths.map((p) => basename(p.replace(/\/record\.csv$/, "")));
  ts.forEach((t, i) => {
    const clipped = es[i].map((v) => (Number.isFinite(v) && v > 0 ? v : NaN));
    svg.polyline(t.map(sx), clipped.map(sy), PALETTE[i]);
  });
  svg.legend(names.map((n, i) => [n, PALETTE[i]]));
  return svg.render();
}

export function figMajorant(paths: string[]): string {
  const path = paths[0];
  const table = readCsv(path);
  const t = column(table, "t", path);
  const E2 = column(table, "E2", path);
  const z = column(table, "z", path);
  const svg = new Svg();
  const pos = E2.concat(z).filter((v) => Number.isFinite(v) && v > 0);
  const lo = pos.length ? Math.min(...pos) : 1e-3;
  const hi = pos.length ? Math.max(...pos) : 1.0;
  const [tlo, thi] = extent(t);
  const sx = linScale(tlo, thi, svg.plotLeft, svg.plotRight);
  const sy = logScale(lo, hi * 2, svg.plotBottom, svg.plotTop);
  svg.axes(sx, sy, ticks(tlo, thi), logTicks(lo, hi * 2), "t",
           "energy^2, log scale",
           `majorant overlay — ${basename(path)}`);
  svg.polyline(t.map(sx), z.map((v) => sy(Math.max(v, lo))), PALETTE[1], 2.0, "7 4");
  svg.polyline(t.map(sx), E2.map((v) => sy(Math.max(v, lo))), PALETTE[0]);
  svg.legend([["E(t)^2", PALETTE[0]], ["z(t) (calibrated C)", PALETTE[1]]],
             { "z(t) (calibrated C)": "7 4" });
  return svg.render();
}

export interface ConvergenceResult {
  svg: string;
  slopes: Record<string, number>;
}

export function figConvergence(paths: string[]): ConvergenceResult {
  const path = paths[0];
  const table = readCsv(path);
  column(table, "h", path);
  column(table, "err", path);
  const cases = table.labels["case"] ?? [];
  if (cases.length !== table.rows.length) {
    throw new Error(`${path}: 'case' column must label every row`);
  }
  const jH = table.columns.indexOf("h");
  const jE = table.columns.indexOf("err");
  const groups = new Map<string, { h: number[]; err: number[] }>();
  table.rows.forEach((row, i) => {
    const g = groups.get(cases[i]) ?? { h: [], err: [] };
    g.h.push(row[jH]);
    g.err.push(row[jE]);
    groups.set(cases[i], g);
  });
  const svg = new Svg();
  const allH = [...groups.values()].flatMap((g) => g.h);
  const allE = [...groups.values()].flatMap((g) => g.err);
  const [hlo, hhi] = [Math.min(...allH), Math.max(...allH)];
  const [elo, ehi] = [Math.min(...allE), Math.max(...allE)];
  const sx = logScale(hlo / 1.3, hhi * 1.3, svg.plotLeft, svg.plotRight);
  const sy = logScale(elo / 2, ehi * 2, svg.plotBottom, svg.plotTop);
  svg.axes(sx, sy, logTicks(hlo / 1.3, hhi * 1.3), logTicks(elo / 2, ehi * 2),
           "h (dx or dt)", "error", "manufactured-solution convergence");
  const slopes: Record<string, number> = {};
  let i = 0;
  let ly = svg.plotTop + 14;
  for (const [name, g] of groups) {
    const color = PALETTE[i % PALETTE.length];
    const order = [...g.h.keys()].sort((a, b) => g.h[a] - g.h[b]);
    const hs = order.map((k) => g.h[k]);
    const es = order.map((k) => g.err[k]);
    const slope = logLogSlope(hs, es);
    slopes[name] = slope;
    svg.polyline(hs.map(sx), es.map(sy), color);
    hs.forEach((h, k) => {
      svg.raw(`<circle cx="${sx(h).toFixed(1)}" cy="${sy(es[k]).toFixed(1)}" r="3" fill="${color}"/>`);
    });
    svg.raw(`<line x1="${svg.plotLeft + 8}" y1="${ly - 4}" x2="${svg.plotLeft + 34}" y2="${ly - 4}" stroke="${color}" stroke-width="2"/>`);
    svg.text(svg.plotLeft + 40, ly, `${name}: slope ${slope.toFixed(2)}`,
             'font-size="11"');
    ly += 16;
    i += 1;
  }
  return { svg: svg.render(), slopes };
}

export function figCroccoDistance(paths: string[]): string {
  const path = paths[0];
  return timeseries(readCsv(path), path, ["distance_u", "distance_h"],
                    "relative L2 distance",
                    `formulation cross-check — ${basename(path)}`);
}

export function figSnapshot(paths: string[], field = "u"): string {
  const path = paths[0];
  const snap: Snapshot = readSnapshot(path);
  const F = snap.fields[field];
  if (!F) {
    throw new Error(
      `${path}: no field '${field}' (have: ${Object.keys(snap.fields).join(", ")})`,
    );
  }
  for (const v of F) {
    if (!Number.isFinite(v)) throw new Error(`${path}: field '${field}' has non-finite values`);
  }
  const svg = new Svg(760, 480, { left: 72, right: 60, top: 36, bottom: 48 });
  const amp = Math.max(1e-300, ...Array.from(F, Math.abs));
  const W = svg.plotRight - svg.plotLeft;
  const H = svg.plotBottom - svg.plotTop;
  const cw = W / snap.nx;
  const ch = H / snap.ny;
  for (let i = 0; i < snap.nx; i++) {
    for (let j = 0; j < snap.ny; j++) {
      const v = F[i * snap.ny + j] / amp;
      svg.rect(svg.plotLeft + i * cw, svg.plotBottom - (j + 1) * ch,
               cw + 0.3, ch + 0.3, diverging(v));
    }
  }
  const sx = linScale(0, snap.xPeriod, svg.plotLeft, svg.plotRight);
  const sy = linScale(0, snap.yMax, svg.plotBottom, svg.plotTop);
  svg.axes(sx, sy, ticks(0, snap.xPeriod), ticks(0, snap.yMax), "x", "y",
           `${field} at t = ${snap.t.toPrecision(3)} — ${basename(path)}`);
  // annotate the wall row
  svg.line(svg.plotLeft, svg.plotBottom, svg.plotRight, svg.plotBottom,
           'stroke="#000" stroke-width="2.5"');
  svg.text(svg.plotRight - 4, svg.plotBottom - 6, "wall (y = 0)",
           'text-anchor="end" font-size="11"');
  svg.text(svg.plotRight + 8, svg.plotTop + 10, `max|${field}| = ${amp.toExponential(2)}`,
           'font-size="10" transform="rotate(90 ' + (svg.plotRight + 8) + ' ' + (svg.plotTop + 10) + ')"');
  return svg.render();
}
