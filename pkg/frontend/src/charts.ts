/** Inline SVG trend charts rendered as strings (easy to snapshot-test).
 *
 * Bars carry a <title> child so browsers show the value on hover; no other
 * interactivity. Values are taken verbatim from the API payloads.
 */

import type { ImpactFactorPoint, YearCount } from './types.js';

const WIDTH = 360;
const HEIGHT = 120;
const GAP = 4;
const LABEL_ROOM = 16;

function bar(x: number, y: number, w: number, h: number, cls: string, tip: string): string {
  return (
    `<rect class="${cls}" x="${x}" y="${y}" width="${w}" height="${h}">` +
    `<title>${tip}</title></rect>`
  );
}

function svg(body: string, label: string): string {
  return (
    `<figure class="chart"><svg viewBox="0 0 ${WIDTH} ${HEIGHT}" role="img" ` +
    `aria-label="${label}">${body}</svg><figcaption>${label}</figcaption></figure>`
  );
}

/** Year/count bar chart; expects pairs sorted by year, as the API sends them. */
export function yearBarChart(points: YearCount[], label: string): string {
  if (points.length === 0) {
    return `<figure class="chart chart-empty"><figcaption>${label}: no data</figcaption></figure>`;
  }
  const top = Math.max(...points.map(([, count]) => count), 1);
  const slot = WIDTH / points.length;
  const bars = points
    .map(([year, count], i) => {
      const h = Math.round((count / top) * (HEIGHT - LABEL_ROOM));
      const x = Math.round(i * slot) + GAP / 2;
      return (
        bar(x, HEIGHT - LABEL_ROOM - h, Math.max(1, Math.floor(slot - GAP)), h, 'bar', `${year}: ${count}`) +
        `<text x="${x}" y="${HEIGHT - 4}" class="tick">${year}</text>`
      );
    })
    .join('');
  return svg(bars, label);
}

/** Impact-factor timeline; years with an empty window render as muted stubs. */
export function impactFactorChart(factors: ImpactFactorPoint[], label: string): string {
  if (factors.length === 0) {
    return `<figure class="chart chart-empty"><figcaption>${label}: no data</figcaption></figure>`;
  }
  const top = Math.max(...factors.map((f) => f.value), 1);
  const slot = WIDTH / factors.length;
  const bars = factors
    .map((f, i) => {
      const x = Math.round(i * slot) + GAP / 2;
      const w = Math.max(1, Math.floor(slot - GAP));
      const body = f.empty_window
        ? bar(x, HEIGHT - LABEL_ROOM - 2, w, 2, 'bar bar-empty', `${f.year}: no publication window`)
        : bar(
            x,
            HEIGHT - LABEL_ROOM - Math.round((f.value / top) * (HEIGHT - LABEL_ROOM)),
            w,
            Math.round((f.value / top) * (HEIGHT - LABEL_ROOM)),
            'bar',
            `${f.year}: ${f.value}`,
          );
      return body + `<text x="${x}" y="${HEIGHT - 4}" class="tick">${f.year}</text>`;
    })
    .join('');
  return svg(bars, label);
}
