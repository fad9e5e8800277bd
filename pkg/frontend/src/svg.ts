/**
 * Minimal SVG scene builder: axes with ticks, polylines, reference lines,
 * cell grids for heat maps, and a legend. No dependencies, no state beyond
 * the accumulated element list, so identical inputs yield identical bytes.
 */

export interface Margins {
  left: number;
  right: number;
  top: number;
  bottom: number;
}

export type Scale = (v: number) => number;

export function linScale(lo: number, hi: number, a: number, b: number): Scale {
  const span = hi - lo || 1.0;
  return (v) => a + ((v - lo) / span) * (b - a);
}

export function logScale(lo: number, hi: number, a: number, b: number): Scale {
  const l0 = Math.log10(lo);
  const span = Math.log10(hi) - l0 || 1.0;
  return (v) => a + ((Math.log10(v) - l0) / span) * (b - a);
}

function fmt(v: number): string {
  if (v === 0) return "0";
  const a = Math.abs(v);
  if (a >= 1e4 || a < 1e-3) return v.toExponential(1);
  return String(Math.round(v * 1000) / 1000);
}

export function ticks(lo: number, hi: number, n = 5): number[] {
  if (!(hi > lo)) return [lo];
  const span = hi - lo;
  const step = Math.pow(10, Math.floor(Math.log10(span / n)));
  const err = span / n / step;
  const s = err >= 7.5 ? step * 10 : err >= 3.5 ? step * 5 : err >= 1.5 ? step * 2 : step;
  const out: number[] = [];
  for (let v = Math.ceil(lo / s) * s; v <= hi + 1e-12 * span; v += s) {
    out.push(Math.abs(v) < 1e-12 * span ? 0 : v);
  }
  return out;
}

export function logTicks(lo: number, hi: number): number[] {
  const out: number[] = [];
  for (let e = Math.ceil(Math.log10(lo)); Math.pow(10, e) <= hi * (1 + 1e-12); e++) {
    out.push(Math.pow(10, e));
  }
  return out.length ? out : [lo];
}

export class Svg {
  private parts: string[] = [];
  constructor(
    readonly width = 720,
    readonly height = 480,
    readonly m: Margins = { left: 72, right: 24, top: 36, bottom: 48 },
  ) {}

  get plotLeft() { return this.m.left; }
  get plotRight() { return this.width - this.m.right; }
  get plotTop() { return this.m.top; }
  get plotBottom() { return this.height - this.m.bottom; }

  raw(s: string) { this.parts.push(s); }

  text(x: number, y: number, s: string, opts = "") {
    this.parts.push(`<text x="${x.toFixed(1)}" y="${y.toFixed(1)}" ${opts}>${escapeXml(s)}</text>`);
  }

  line(x1: number, y1: number, x2: number, y2: number, style: string) {
    this.parts.push(
      `<line x1="${x1.toFixed(1)}" y1="${y1.toFixed(1)}" x2="${x2.toFixed(1)}" y2="${y2.toFixed(1)}" ${style}/>`,
    );
  }

  polyline(xs: number[], ys: number[], color: string, width = 1.8, dash = "") {
    const pts: string[] = [];
    for (let i = 0; i < xs.length; i++) {
      if (Number.isFinite(xs[i]) && Number.isFinite(ys[i])) {
        pts.push(`${xs[i].toFixed(2)},${ys[i].toFixed(2)}`);
      }
    }
    const d = dash ? ` stroke-dasharray="${dash}"` : "";
    this.parts.push(
      `<polyline points="${pts.join(" ")}" fill="none" stroke="${color}" stroke-width="${width}"${d}/>`,
    );
  }

  rect(x: number, y: number, w: number, h: number, fill: string) {
    this.parts.push(
      `<rect x="${x.toFixed(2)}" y="${y.toFixed(2)}" width="${w.toFixed(2)}" height="${h.toFixed(2)}" fill="${fill}" stroke="none"/>`,
    );
  }

  axes(sx: Scale, sy: Scale, xt: number[], yt: number[],
       xlabel: string, ylabel: string, title: string) {
    const { plotLeft: L, plotRight: R, plotTop: T, plotBottom: B } = this;
    this.line(L, B, R, B, 'stroke="#333" stroke-width="1"');
    this.line(L, B, L, T, 'stroke="#333" stroke-width="1"');
    for (const v of xt) {
      const x = sx(v);
      this.line(x, B, x, B + 5, 'stroke="#333" stroke-width="1"');
      this.line(x, B, x, T, 'stroke="#eee" stroke-width="0.7"');
      this.text(x, B + 18, fmt(v), 'text-anchor="middle" font-size="11"');
    }
    for (const v of yt) {
      const y = sy(v);
      this.line(L - 5, y, L, y, 'stroke="#333" stroke-width="1"');
      this.line(L, y, R, y, 'stroke="#eee" stroke-width="0.7"');
      this.text(L - 8, y + 4, fmt(v), 'text-anchor="end" font-size="11"');
    }
    this.text((L + R) / 2, this.height - 12, xlabel,
              'text-anchor="middle" font-size="12"');
    this.raw(`<text x="16" y="${(T + B) / 2}" text-anchor="middle" font-size="12" transform="rotate(-90 16 ${(T + B) / 2})">${escapeXml(ylabel)}</text>`);
    this.text((L + R) / 2, 20, title,
              'text-anchor="middle" font-size="14" font-weight="bold"');
  }

  legend(entries: Array<[string, string]>, dash: Record<string, string> = {}) {
    let y = this.plotTop + 14;
    const x = this.plotRight - 170;
    for (const [label, color] of entries) {
      const d = dash[label] ? ` stroke-dasharray="${dash[label]}"` : "";
      this.raw(`<line x1="${x}" y1="${y - 4}" x2="${x + 26}" y2="${y - 4}" stroke="${color}" stroke-width="2"${d}/>`);
      this.text(x + 32, y, label, 'font-size="11"');
      y += 16;
    }
  }

  render(): string {
    return `<svg xmlns="http://www.w3.org/2000/svg" width="${this.width}" height="${this.height}" viewBox="0 0 ${this.width} ${this.height}">\n<rect width="100%" height="100%" fill="white"/>\n${this.parts.join("\n")}\n</svg>\n`;
  }
}

function escapeXml(s: string): string {
  return s.replace(/&/g, "&amp;").replace(/</g, "&lt;").replace(/>/g, "&gt;");
}

/** Blue-white-red diverging map on [-1, 1]; t outside is clamped. */
export function diverging(t: number): string {
  const c = Math.max(-1, Math.min(1, t));
  const lerp = (a: number, b: number, s: number) => Math.round(a + (b - a) * s);
  let r: number, g: number, b: number;
  if (c < 0) {
    const s = c + 1; // 0..1 from blue to white
    r = lerp(33, 255, s); g = lerp(102, 255, s); b = lerp(172, 255, s);
  } else {
    const s = c;     // 0..1 from white to red
    r = lerp(255, 178, s); g = lerp(255, 24, s); b = lerp(255, 43, s);
  }
  return `rgb(${r},${g},${b})`;
}

export const PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                        "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"];
