/**
 * Synthetic fixtures in the exact documented formats: monitor CSV rows and
 * binary snapshots, plus a stability-like pair of records for the
 * comparison figure.
 */

export function recordCsv(n = 26, blowup = false): string {
  const lines = ["t,E,W1,W2,hmin,M,dissipation"];
  for (let k = 0; k < n; k++) {
    const t = k * 0.04;
    const E = blowup ? 5.0 * Math.exp(8.0 * t) : 7.3 + 1000.0 * (1 - Math.exp(-4 * t));
    const hmin = blowup ? 0.25 - 0.3 * t : 0.22 + 0.02 * t;
    lines.push(
      `${t},${E},${0.8 + 0.1 * t},${1.9},${hmin},${13000},${0.5 * E}`,
    );
  }
  return lines.join("\n") + "\n";
}

export function majorantCsv(n = 26): string {
  const lines = ["# C=1.2e-31", "# horizon=2.09",
                 "# comparison with calibrated constant", "t,E2,z,margin"];
  for (let k = 0; k < n; k++) {
    const t = k * 0.04;
    const E2 = 53.0 + 1.15e6 * (1 - Math.exp(-4 * t)) ** 2;
    const z = 146.0 + 1.4e11 * t;
    lines.push(`${t},${E2},${z},${z - E2}`);
  }
  return lines.join("\n") + "\n";
}

export function convergenceCsv(slope = 1.97): string {
  const lines = [
    `# fitted_order_primal-spatial=${slope}`,
    "# fitted_order_primal-time-imex-be=0.99",
    "case,n,h,err",
  ];
  for (const [n, h] of [[32, 0.19635], [64, 0.0981748], [128, 0.0490874]] as const) {
    lines.push(`primal-spatial,${n},${h},${0.5 * Math.pow(h, slope)}`);
  }
  for (const [n, dt] of [[10, 0.025], [20, 0.0125]] as const) {
    lines.push(`primal-time-imex-be,${n},${dt},${0.2 * Math.pow(dt, 0.99)}`);
  }
  return lines.join("\n") + "\n";
}

export function croccoCsv(n = 11): string {
  const lines = ["# eta_max=10.2", "t,distance_u,distance_h"];
  for (let k = 0; k < n; k++) {
    const t = k * 0.05;
    lines.push(`${t},${4e-4 * (1 - Math.exp(-3 * t))},${8e-4 * (1 - Math.exp(-3 * t))}`);
  }
  return lines.join("\n") + "\n";
}

/** Binary snapshot in the documented little-endian layout. */
export function snapshotBuffer(nx = 24, ny = 33, names = ["u", "h"]): Buffer {
  const head = Buffer.alloc(48);
  head.write("MHDBLSNP", 0, "ascii");
  head.writeUInt32LE(1, 8);
  head.writeUInt32LE(nx, 12);
  head.writeUInt32LE(ny, 16);
  head.writeDoubleLE(2 * Math.PI, 20);
  head.writeDoubleLE(12.0, 28);
  head.writeDoubleLE(0.5, 36);
  head.writeUInt32LE(names.length, 44);
  const nameTable = Buffer.alloc(16 * names.length);
  names.forEach((n, k) => nameTable.write(n, 16 * k, "ascii"));
  const data = Buffer.alloc(names.length * nx * ny * 8);
  let off = 0;
  for (let f = 0; f < names.length; f++) {
    for (let i = 0; i < nx; i++) {
      for (let j = 0; j < ny; j++) {
        const x = (2 * Math.PI * i) / nx;
        const y = (12.0 * j) / (ny - 1);
        const v = (f === 0 ? Math.sin(x) : Math.cos(x)) * y * Math.exp(-y);
        data.writeDoubleLE(v, off);
        off += 8;
      }
    }
  }
  return Buffer.concat([head, nameTable, data]);
}
