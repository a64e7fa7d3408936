// Block-error-rate curves: one labeled series per scenario, linear p on the
// x-axis, log-scaled BLER on the y-axis, +-1 standard error bars. Zero-error
// cells carry no point estimate on a log axis, so they are drawn as a
// down-arrow at the one-sided 95% upper bound column from the CSV.

import { num, parseCsv, requireColumns, requireRows } from './csv';
import { el, round2, text } from './svg';

interface BlerPoint {
  p: number;
  bler: number;
  se: number;
  upper95: number | null;
}

interface Series {
  scenario: string;
  points: BlerPoint[];
}

const WIDTH = 660;
const HEIGHT = 420;
const MARGIN = { left: 72, right: 170, top: 20, bottom: 56 };
const PALETTE = ['#1f77b4', '#d62728', '#2ca02c', '#ff7f0e', '#9467bd', '#8c564b'];

function collectSeries(csvText: string): Series[] {
  const table = parseCsv(csvText);
  requireColumns(table, ['p', 'scenario', 'bler', 'se_bler', 'bler_upper95']);
  requireRows(table);
  const order: string[] = [];
  const byScenario = new Map<string, BlerPoint[]>();
  for (const row of table.rows) {
    const scenario = row['scenario'];
    if (!byScenario.has(scenario)) {
      order.push(scenario);
      byScenario.set(scenario, []);
    }
    const bler = num(row, 'bler');
    const hasUpper = bler === 0 && row['bler_upper95'] !== '';
    byScenario.get(scenario)!.push({
      p: num(row, 'p'),
      bler,
      se: num(row, 'se_bler'),
      upper95: hasUpper ? num(row, 'bler_upper95') : null,
    });
  }
  return order.map((scenario) => ({
    scenario,
    points: byScenario.get(scenario)!.sort((a, b) => a.p - b.p),
  }));
}

export function renderBlerSvg(csvText: string): string {
  const series = collectSeries(csvText);

  const ps = series.flatMap((s) => s.points.map((pt) => pt.p));
  let pMin = Math.min(...ps);
  let pMax = Math.max(...ps);
  if (pMin === pMax) {
    pMin -= Math.abs(pMin) * 0.1 || 0.01;
    pMax += Math.abs(pMax) * 0.1 || 0.01;
  }

  // log-axis domain covers every drawable positive value, padded to decades
  const positives: number[] = [];
  for (const s of series) {
    for (const pt of s.points) {
      if (pt.bler > 0) {
        positives.push(pt.bler, pt.bler + pt.se);
        if (pt.bler - pt.se > 0) positives.push(pt.bler - pt.se);
      } else if (pt.upper95 !== null && pt.upper95 > 0) {
        positives.push(pt.upper95);
      }
    }
  }
  if (positives.length === 0) {
    throw new Error('no positive BLER values or upper bounds to plot');
  }
  let expLo = Math.floor(Math.log10(Math.min(...positives)));
  let expHi = Math.ceil(Math.log10(Math.max(...positives)));
  if (expLo === expHi) expLo -= 1;

  const plotW = WIDTH - MARGIN.left - MARGIN.right;
  const plotH = HEIGHT - MARGIN.top - MARGIN.bottom;
  const x = (p: number) => MARGIN.left + ((p - pMin) / (pMax - pMin)) * plotW;
  const y = (v: number) =>
    MARGIN.top + ((expHi - Math.log10(v)) / (expHi - expLo)) * plotH;
  const yFloor = Math.pow(10, expLo);

  const parts: string[] = [];
  parts.push(el('rect', { x: 0, y: 0, width: WIDTH, height: HEIGHT, fill: 'white' }));

  // decade gridlines and y tick labels
  for (let e = expLo; e <= expHi; e++) {
    const yy = round2(y(Math.pow(10, e)));
    parts.push(el('line', {
      x1: MARGIN.left, x2: MARGIN.left + plotW, y1: yy, y2: yy,
      stroke: '#dddddd', 'stroke-width': 1,
    }));
    parts.push(text({
      x: MARGIN.left - 8, y: yy + 4, 'text-anchor': 'end',
      'font-size': 12, 'font-family': 'sans-serif', class: 'y-tick',
    }, `1e${e}`));
  }

  // x ticks at the distinct p values (thinned if the sweep is dense)
  const distinctP = [...new Set(ps)].sort((a, b) => a - b);
  const step = Math.max(1, Math.ceil(distinctP.length / 10));
  distinctP.filter((_, i) => i % step === 0).forEach((p) => {
    const xx = round2(x(p));
    parts.push(el('line', {
      x1: xx, x2: xx, y1: MARGIN.top + plotH, y2: MARGIN.top + plotH + 5,
      stroke: '#333333', 'stroke-width': 1,
    }));
    parts.push(text({
      x: xx, y: MARGIN.top + plotH + 20, 'text-anchor': 'middle',
      'font-size': 12, 'font-family': 'sans-serif', class: 'x-tick',
    }, String(p)));
  });

  parts.push(el('rect', {
    x: MARGIN.left, y: MARGIN.top, width: plotW, height: plotH,
    fill: 'none', stroke: '#333333', 'stroke-width': 1,
  }));
  parts.push(text({
    x: MARGIN.left + plotW / 2, y: HEIGHT - 12, 'text-anchor': 'middle',
    'font-size': 14, 'font-family': 'sans-serif',
  }, 'p (channel error probability)'));
  parts.push(text({
    x: 18, y: MARGIN.top + plotH / 2, 'text-anchor': 'middle',
    'font-size': 14, 'font-family': 'sans-serif',
    transform: `rotate(-90 18 ${MARGIN.top + plotH / 2})`,
  }, 'block error rate'));

  series.forEach((s, index) => {
    const color = PALETTE[index % PALETTE.length];
    const body: string[] = [];
    const linePts = s.points.filter((pt) => pt.bler > 0);
    if (linePts.length >= 2) {
      const coords = linePts
        .map((pt) => `${round2(x(pt.p))},${round2(y(pt.bler))}`)
        .join(' ');
      body.push(el('polyline', {
        points: coords, fill: 'none', stroke: color, 'stroke-width': 2,
      }));
    }
    for (const pt of s.points) {
      const xx = round2(x(pt.p));
      if (pt.bler > 0) {
        const hi = round2(y(pt.bler + pt.se));
        const lo = round2(y(Math.max(pt.bler - pt.se, yFloor)));
        body.push(el('line', {
          x1: xx, x2: xx, y1: hi, y2: lo, stroke: color, 'stroke-width': 1,
          class: 'error-bar',
        }));
        for (const yy of [hi, lo]) {
          body.push(el('line', {
            x1: xx - 3, x2: xx + 3, y1: yy, y2: yy, stroke: color,
            'stroke-width': 1,
          }));
        }
        body.push(el('circle', {
          cx: xx, cy: round2(y(pt.bler)), r: 3.5, fill: color, class: 'marker',
        }));
      } else if (pt.upper95 !== null) {
        const yy = round2(y(pt.upper95));
        body.push(el('path', {
          d: `M ${xx} ${yy} l 0 12 m -5 -6 l 5 6 l 5 -6`,
          stroke: color, fill: 'none', 'stroke-width': 2, class: 'limit-arrow',
        }));
      }
    }
    parts.push(el('g', { class: 'curve', 'data-scenario': s.scenario }, body.join('')));

    const lx = MARGIN.left + plotW + 16;
    const ly = MARGIN.top + 14 + index * 22;
    parts.push(el('line', {
      x1: lx, x2: lx + 24, y1: ly - 4, y2: ly - 4, stroke: color,
      'stroke-width': 2,
    }));
    parts.push(text({
      x: lx + 30, y: ly, 'font-size': 13, 'font-family': 'sans-serif',
      class: 'legend-label',
    }, s.scenario));
  });

  return el('svg', {
    xmlns: 'http://www.w3.org/2000/svg', width: WIDTH, height: HEIGHT,
    viewBox: `0 0 ${WIDTH} ${HEIGHT}`,
  }, parts.join('')) + '\n';
}
