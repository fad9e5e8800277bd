#!/usr/bin/env node
/**
 * mhdbl-plot --kind <kind> --in <path[,path2]> --out <figure.svg> [options]
 *
 * Kinds: energy | hmin | majorant | convergence | compare |
 *        crocco-distance | snapshot
 *
 * Inputs are the CSV/snapshot files documented in the mhdbl README;
 * re-running on identical inputs writes identical bytes.
 */

import { writeFileSync } from "fs";
import { figCompare, figConvergence, figCroccoDistance, figEnergy,
         figHmin, figMajorant, figSnapshot } from "./figures.js";

interface Args {
  kind: string;
  inputs: string[];
  out: string;
  field: string;
  delta0: number;
}

function parseArgs(argv: string[]): Args {
  const args: Args = { kind: "", inputs: [], out: "", field: "u", delta0: 0.1 };
  for (let i = 0; i < argv.length; i++) {
    const a = argv[i];
    const next = () => {
      if (i + 1 >= argv.length) throw new Error(`missing value for ${a}`);
      return argv[++i];
    };
    if (a === "--kind") args.kind = next();
    else if (a === "--in") args.inputs = next().split(",").map((s) => s.trim());
    else if (a === "--out") args.out = next();
    else if (a === "--field") args.field = next();
    else if (a === "--delta0") args.delta0 = Number(next());
    else throw new Error(`unknown flag ${a}`);
  }
  if (!args.kind) throw new Error("--kind is required");
  if (args.inputs.length === 0) throw new Error("--in is required");
  if (!args.out) throw new Error("--out is required");
  return args;
}

export function render(args: Args): string {
  switch (args.kind) {
    case "energy": return figEnergy(args.inputs);
    case "hmin": return figHmin(args.inputs, args.delta0);
    case "majorant": return figMajorant(args.inputs);
    case "convergence": return figConvergence(args.inputs).svg;
    case "compare": return figCompare(args.inputs);
    case "crocco-distance": return figCroccoDistance(args.inputs);
    case "snapshot": return figSnapshot(args.inputs, args.field);
    default:
      throw new Error(
        `unknown kind '${args.kind}' (energy, hmin, majorant, convergence, ` +
        "compare, crocco-distance, snapshot)");
  }
}

export function main(argv: string[]): number {
  let args: Args;
  try {
    args = parseArgs(argv);
    const svg = render(args);
    writeFileSync(args.out, svg);
    console.log(`wrote ${args.out}`);
    return 0;
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : err}`);
    return 2;
  }
}

const isMain = process.argv[1] && import.meta.url.endsWith(
  process.argv[1].split("/").pop() ?? "");
if (isMain) {
  process.exit(main(process.argv.slice(2)));
}
