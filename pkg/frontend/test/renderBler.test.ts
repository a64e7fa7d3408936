import { describe, expect, it } from 'vitest';

import { renderBlerSvg } from '../src/renderBler';

// Shaped like the harness output: rows ascend in p, scenarios repeat in
// declared order, bler_upper95 is filled only for zero-error cells.
const HEADER =
  'p,scenario,trials,block_errors,bler,se_bler,bler_upper95,bler_depolarizing';
const SAMPLE =
  [
    HEADER,
    '0.01,fixed:0.02,2000,12,0.006,0.001726,,0.011964',
    '0.01,perfect,2000,0,0.0,0.0,0.0015,0.0',
    '0.01,estimated,2000,2,0.001,0.0007069,,0.001999',
    '0.02,fixed:0.02,2000,64,0.032,0.003936,,0.062976',
    '0.02,perfect,2000,40,0.02,0.00313,,0.0396',
    '0.02,estimated,2000,44,0.022,0.003279,,0.043516',
    '0.03,fixed:0.02,2000,299,0.1495,0.007972,,0.276648',
    '0.03,perfect,2000,210,0.105,0.006855,,0.198975',
    '0.03,estimated,2000,212,0.106,0.006884,,0.200764',
  ].join('\n') + '\n';

describe('renderBlerSvg', () => {
  it('emits a standalone svg document', () => {
    const svg = renderBlerSvg(SAMPLE);
    expect(svg.startsWith('<svg ')).toBe(true);
    expect(svg.trimEnd().endsWith('</svg>')).toBe(true);
    expect(svg).toContain('xmlns="http://www.w3.org/2000/svg"');
  });

  it('draws one labeled curve group per scenario in declared order', () => {
    const svg = renderBlerSvg(SAMPLE);
    const scenarios = [...svg.matchAll(/data-scenario="([^"]+)"/g)].map(
      (m) => m[1],
    );
    expect(scenarios).toEqual(['fixed:0.02', 'perfect', 'estimated']);
    expect(svg.match(/<polyline /g)).toHaveLength(3);
  });

  it('labels the legend with the scenario tokens', () => {
    const svg = renderBlerSvg(SAMPLE);
    for (const token of ['fixed:0.02', 'perfect', 'estimated']) {
      expect(svg).toContain(`>${token}</text>`);
    }
  });

  it('uses a log y-axis padded to decade boundaries', () => {
    const svg = renderBlerSvg(SAMPLE);
    // smallest drawable value is 0.001 - se ~ 2.9e-4, largest ~ 0.157
    expect(svg).toContain('>1e-4</text>');
    expect(svg).toContain('>1e0</text>');
    expect(svg).not.toContain('>1e-5</text>');
  });

  it('marks zero-error cells with an upper-bound arrow instead of a point', () => {
    const svg = renderBlerSvg(SAMPLE);
    expect(svg.match(/limit-arrow/g)).toHaveLength(1);
    expect(svg.match(/error-bar/g)).toHaveLength(8);
  });

  it('ticks the x-axis at the swept p values', () => {
    const svg = renderBlerSvg(SAMPLE);
    for (const p of ['0.01', '0.02', '0.03']) {
      expect(svg).toContain(`>${p}</text>`);
    }
  });

  it('is deterministic for the same input', () => {
    expect(renderBlerSvg(SAMPLE)).toBe(renderBlerSvg(SAMPLE));
  });

  it('rejects input missing a required column', () => {
    const noUpper =
      'p,scenario,trials,block_errors,bler,se_bler,bler_depolarizing\n' +
      '0.01,perfect,2000,40,0.02,0.00313,0.0396\n';
    expect(() => renderBlerSvg(noUpper)).toThrow(
      'missing column "bler_upper95"',
    );
  });

  it('rejects a header-only file', () => {
    expect(() => renderBlerSvg(HEADER + '\n')).toThrow('no data rows');
  });

  it('rejects empty input', () => {
    expect(() => renderBlerSvg('')).toThrow(/empty file/);
  });

  it('rejects data with nothing drawable on a log axis', () => {
    const allZero = HEADER + '\n0.01,perfect,10,0,0.0,0.0,,0.0\n';
    expect(() => renderBlerSvg(allZero)).toThrow(/no positive BLER/);
  });
});
