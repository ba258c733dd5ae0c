/**
 * SVG chart rendering from server-provided plot data. All coordinates come
 * from the payloads; the client only scales them to pixels.
 */

import type { PlotPayload } from "./types";

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 340;
const PAD = 44;

interface Scale {
  (v: number): number;
}

function makeScale(lo: number, hi: number, outLo: number, outHi: number): Scale {
  const span = hi - lo || 1;
  return (v: number) => outLo + ((v - lo) / span) * (outHi - outLo);
}

function svgElement(tag: string, attrs: Record<string, string | number>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, String(value));
  }
  return node;
}

function baseSvg(): SVGSVGElement {
  const svg = svgElement("svg", {
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
    width: "100%",
    role: "img",
  }) as SVGSVGElement;
  svg.classList.add("chart");
  return svg;
}

function axes(svg: SVGSVGElement, sx: Scale, sy: Scale, xlo: number, xhi: number): void {
  svg.append(
    svgElement("line", {
      x1: sx(xlo), y1: sy(0), x2: sx(xhi), y2: sy(0),
      stroke: "#555", "stroke-width": 1,
    }),
  );
  const labelLo = svgElement("text", {
    x: sx(xlo), y: HEIGHT - 8, "font-size": 12, "text-anchor": "start", fill: "#333",
  });
  labelLo.textContent = formatTick(xlo);
  const labelHi = svgElement("text", {
    x: sx(xhi), y: HEIGHT - 8, "font-size": 12, "text-anchor": "end", fill: "#333",
  });
  labelHi.textContent = formatTick(xhi);
  svg.append(labelLo, labelHi);
}

function formatTick(v: number): string {
  return Math.abs(v) >= 1000 ? v.toExponential(2) : v.toFixed(2).replace(/\.00$/, "");
}

/** Density/mass plot with the queried region shaded and an optional marker. */
export function distributionPlot(plot: PlotPayload): SVGSVGElement {
  const svg = baseSvg();
  const xs = plot.grid;
  const ys = plot.values;
  const xlo = xs[0];
  const xhi = xs[xs.length - 1];
  const ymax = Math.max(...ys, 1e-300);
  const sx = makeScale(xlo, xhi, PAD, WIDTH - PAD);
  const sy = makeScale(0, ymax * 1.08, HEIGHT - PAD, 18);

  const inShaded = (x: number) => plot.shaded.some(([a, b]) => x >= a && x <= b);

  if (plot.is_discrete) {
    const step = xs.length > 1 ? sx(xs[1]) - sx(xs[0]) : 20;
    const barWidth = Math.max(2, Math.min(26, step * 0.72));
    xs.forEach((x, i) => {
      const bar = svgElement("rect", {
        x: sx(x) - barWidth / 2,
        y: sy(ys[i]),
        width: barWidth,
        height: Math.max(0, sy(0) - sy(ys[i])),
        fill: inShaded(x) ? "#1f77b4" : "#c6dbef",
        stroke: "#39557a",
        "stroke-width": 0.5,
      });
      bar.classList.add("bar");
      if (inShaded(x)) bar.classList.add("shaded");
      const tip = document.createElementNS(SVG_NS, "title");
      tip.textContent = `x = ${x}`;
      bar.append(tip);
      svg.append(bar);
    });
  } else {
    for (const [a, b] of plot.shaded) {
      const points: string[] = [`${sx(a)},${sy(0)}`];
      xs.forEach((x, i) => {
        if (x >= a && x <= b) points.push(`${sx(x)},${sy(ys[i])}`);
      });
      points.push(`${sx(b)},${sy(0)}`);
      const region = svgElement("polygon", {
        points: points.join(" "),
        fill: "#9ecae1",
        "fill-opacity": 0.75,
      });
      region.classList.add("shaded");
      svg.append(region);
    }
    const path = xs
      .map((x, i) => `${i === 0 ? "M" : "L"} ${sx(x)} ${sy(ys[i])}`)
      .join(" ");
    svg.append(
      svgElement("path", { d: path, fill: "none", stroke: "#08519c", "stroke-width": 2 }),
    );
  }

  if (plot.marker !== null) {
    const line = svgElement("line", {
      x1: sx(plot.marker), y1: sy(0), x2: sx(plot.marker), y2: 16,
      stroke: "#d62728", "stroke-width": 2, "stroke-dasharray": "6 3",
    });
    line.classList.add("marker");
    svg.append(line);
  }
  axes(svg, sx, sy, xlo, xhi);
  return svg;
}

export interface ScatterSeries {
  x: number[];
  y: number[];
  labels?: string[];
}

/** Scatter with optional fitted line and confidence band; points carry
 * native tooltips so the chart is hoverable. */
export function scatterFit(
  points: ScatterSeries,
  line: { x: number[]; y: number[] } | null,
  band: { grid: number[]; lower: number[]; upper: number[] } | null,
): SVGSVGElement {
  const svg = baseSvg();
  const allX = [...points.x, ...(line?.x ?? []), ...(band?.grid ?? [])];
  const allY = [
    ...points.y,
    ...(line?.y ?? []),
    ...(band ? [...band.lower, ...band.upper] : []),
  ];
  const xlo = Math.min(...allX);
  const xhi = Math.max(...allX);
  const ylo = Math.min(...allY);
  const yhi = Math.max(...allY);
  const padY = (yhi - ylo || 1) * 0.08;
  const sx = makeScale(xlo, xhi, PAD, WIDTH - PAD);
  const sy = makeScale(ylo - padY, yhi + padY, HEIGHT - PAD, 18);

  if (band) {
    const upper = band.grid.map((g, i) => `${sx(g)},${sy(band.upper[i])}`);
    const lower = band.grid
      .map((g, i) => `${sx(g)},${sy(band.lower[i])}`)
      .reverse();
    const poly = svgElement("polygon", {
      points: [...upper, ...lower].join(" "),
      fill: "#9ecae1",
      "fill-opacity": 0.5,
    });
    poly.classList.add("band");
    svg.append(poly);
  }
  if (line) {
    const path = line.x
      .map((x, i) => `${i === 0 ? "M" : "L"} ${sx(x)} ${sy(line.y[i])}`)
      .join(" ");
    const fit = svgElement("path", {
      d: path, fill: "none", stroke: "#d62728", "stroke-width": 2,
    });
    fit.classList.add("fit-line");
    svg.append(fit);
  }
  points.x.forEach((x, i) => {
    const dot = svgElement("circle", {
      cx: sx(x), cy: sy(points.y[i]), r: 4, fill: "#1f77b4", "fill-opacity": 0.85,
    });
    dot.classList.add("dot");
    const tip = document.createElementNS(SVG_NS, "title");
    tip.textContent = points.labels?.[i] ?? `(${points.x[i]}, ${points.y[i]})`;
    dot.append(tip);
    svg.append(dot);
  });
  return svg;
}

/** Compact scatter used by the diagnostics panel. */
export function smallScatter(
  pairs: [number, number][],
  title: string,
  options: { zeroLine?: boolean; identityLine?: boolean } = {},
): HTMLElement {
  const wrap = document.createElement("figure");
  wrap.className = "diagnostic-chart";
  const caption = document.createElement("figcaption");
  caption.textContent = title;
  const svg = baseSvg();
  svg.setAttribute("viewBox", "0 0 320 220");
  const xs = pairs.map((p) => p[0]);
  const ys = pairs.map((p) => p[1]);
  const xlo = Math.min(...xs);
  const xhi = Math.max(...xs);
  const ylo = Math.min(...ys, options.zeroLine ? 0 : Infinity);
  const yhi = Math.max(...ys, options.zeroLine ? 0 : -Infinity);
  const sx = makeScale(xlo, xhi, 26, 300);
  const sy = makeScale(ylo, yhi || ylo + 1, 200, 14);
  if (options.zeroLine) {
    svg.append(svgElement("line", {
      x1: 26, y1: sy(0), x2: 300, y2: sy(0),
      stroke: "#999", "stroke-dasharray": "4 3",
    }));
  }
  if (options.identityLine) {
    const lo = Math.max(xlo, ylo);
    const hi = Math.min(xhi, yhi);
    if (lo < hi) {
      svg.append(svgElement("line", {
        x1: sx(lo), y1: sy(lo), x2: sx(hi), y2: sy(hi),
        stroke: "#999", "stroke-dasharray": "4 3",
      }));
    }
  }
  for (const [x, y] of pairs) {
    svg.append(svgElement("circle", {
      cx: sx(x), cy: sy(y), r: 3, fill: "#1f77b4", "fill-opacity": 0.85,
    }));
  }
  wrap.append(svg, caption);
  return wrap;
}
