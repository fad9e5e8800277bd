import assert from "node:assert/strict";
import { mkdtempSync, writeFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { test } from "node:test";

import { logLogSlope, parseCsv } from "../src/csv.js";
import { figCompare, figConvergence, figCroccoDistance, figEnergy,
         figHmin, figMajorant, figSnapshot } from "../src/figures.js";
import { parseSnapshot } from "../src/snapshot.js";
import { render } from "../src/cli.js";
import { convergenceCsv, croccoCsv, majorantCsv, recordCsv,
         snapshotBuffer } from "./fixtures.js";

function tmpWrite(name: string, content: string | Buffer): string {
  const dir = mkdtempSync(join(tmpdir(), "mhdbl-fig-"));
  const p = join(dir, name);
  writeFileSync(p, content);
  return p;
}

test("all six figure kinds render from stability-style outputs", () => {
  const rec = tmpWrite("record.csv", recordCsv());
  const recNm = tmpWrite("record.csv", recordCsv(13, true));
  const maj = tmpWrite("majorant.csv", majorantCsv());
  const conv = tmpWrite("convergence.csv", convergenceCsv());
  const croc = tmpWrite("compare.csv", croccoCsv());
  const renders: Array<[string, string]> = [
    ["energy", figEnergy([rec])],
    ["hmin", figHmin([rec], 0.1)],
    ["majorant", figMajorant([maj])],
    ["convergence", figConvergence([conv]).svg],
    ["compare", figCompare([rec, recNm])],
    ["crocco-distance", figCroccoDistance([croc])],
  ];
  for (const [kind, svg] of renders) {
    assert.ok(svg.startsWith("<svg"), `${kind} emits svg`);
    assert.ok(svg.includes("<polyline"), `${kind} draws data`);
    assert.ok(svg.length > 500, `${kind} is not blank`);
  }
});

test("flat zero series still renders a line", () => {
  const rows = ["t,E,W1,W2,hmin,M,dissipation"];
  for (let k = 0; k < 6; k++) rows.push(`${k * 0.1},0.0,0,0,0,0,0`);
  const rec = tmpWrite("record.csv", rows.join("\n") + "\n");
  const svg = figEnergy([rec]);
  assert.ok(svg.includes("<polyline"));
});

test("hmin figure carries the delta0 reference line", () => {
  const rec = tmpWrite("record.csv", recordCsv());
  const svg = figHmin([rec], 0.1);
  assert.ok(svg.includes("delta0 = 0.1"));
});

test("majorant overlay keeps z above E2 for the shipped fixture", () => {
  const maj = tmpWrite("majorant.csv", majorantCsv());
  const table = parseCsv(majorantCsv());
  const jE = table.columns.indexOf("E2");
  const jZ = table.columns.indexOf("z");
  for (const row of table.rows) assert.ok(row[jZ] >= row[jE]);
  assert.ok(figMajorant([maj]).includes("calibrated C"));
});

test("convergence slope annotation matches the CSV regression within 0.05", () => {
  const declared = 1.97;
  const conv = tmpWrite("convergence.csv", convergenceCsv(declared));
  const { svg, slopes } = figConvergence([conv]);
  // independent regression straight off the parsed CSV
  const table = parseCsv(convergenceCsv(declared));
  const jH = table.columns.indexOf("h");
  const jE = table.columns.indexOf("err");
  const mask = table.labels["case"].map((c) => c === "primal-spatial");
  const hs = table.rows.filter((_, i) => mask[i]).map((r) => r[jH]);
  const es = table.rows.filter((_, i) => mask[i]).map((r) => r[jE]);
  const reference = logLogSlope(hs, es);
  assert.ok(Math.abs(slopes["primal-spatial"] - reference) <= 0.05);
  // and against the fitted order the producer recorded in the header
  const fromMeta = Number(table.meta["fitted_order_primal-spatial"]);
  assert.ok(Math.abs(slopes["primal-spatial"] - fromMeta) <= 0.05);
  assert.ok(svg.includes(`slope ${slopes["primal-spatial"].toFixed(2)}`));
});

test("snapshot heat map renders with the wall annotated", () => {
  const snap = tmpWrite("a.snap", snapshotBuffer());
  const svg = figSnapshot([snap], "u");
  assert.ok(svg.includes("wall (y = 0)"));
  assert.ok((svg.match(/<rect/g) ?? []).length > 24 * 33);
  const svgH = figSnapshot([snap], "h");
  assert.notEqual(svg, svgH);
});

test("missing columns and unknown fields raise named errors", () => {
  const bad = tmpWrite("record.csv", "t,notE\n0,1\n");
  assert.throws(() => figEnergy([bad]), /missing column 'E'/);
  const snap = tmpWrite("a.snap", snapshotBuffer());
  assert.throws(() => figSnapshot([snap], "vorticity"), /no field 'vorticity'/);
});

test("corrupt snapshots are rejected cleanly", () => {
  const whole = snapshotBuffer();
  assert.throws(() => parseSnapshot(whole.subarray(0, whole.length - 64)),
                /payload is/);
  assert.throws(() => parseSnapshot(whole.subarray(0, 20)), /truncated/);
  const wrong = Buffer.from(whole);
  wrong.write("NOTMAGIC", 0, "ascii");
  assert.throws(() => parseSnapshot(wrong), /bad magic/);
});

test("rendering is idempotent on identical bytes", () => {
  const rec = tmpWrite("record.csv", recordCsv());
  assert.equal(figEnergy([rec]), figEnergy([rec]));
});

test("cli render dispatch covers every kind and rejects unknowns", () => {
  const rec = tmpWrite("record.csv", recordCsv());
  const out = join(mkdtempSync(join(tmpdir(), "mhdbl-out-")), "f.svg");
  const svg = render({ kind: "energy", inputs: [rec], out, field: "u", delta0: 0.1 });
  assert.ok(svg.startsWith("<svg"));
  assert.throws(
    () => render({ kind: "pie", inputs: [rec], out, field: "u", delta0: 0.1 }),
    /unknown kind/);
});
