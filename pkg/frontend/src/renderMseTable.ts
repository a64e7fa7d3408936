// Estimator-quality summary as a plain-text table: per noise level, the
// measured MSE of the syndrome-based estimate, the matched-count reference
// MSE, and the mean ratio of estimated to realized error count.

import { num, parseCsv, requireColumns, requireRows } from './csv';
import { ratio3, sig2 } from './format';

const HEADERS = ['p', 'MSE(p_hat)', 'MSE(p)', 'n*p_hat/wt(e)'];

export function renderMseTable(csvText: string): string {
  const table = parseCsv(csvText);
  requireColumns(table, ['p', 'mse_phat', 'mse_perfect_ref', 'mean_ratio']);
  requireRows(table);

  const cells = table.rows.map((row) => {
    // mean_ratio is blank when every trial in the cell had a zero-weight error
    const ratioField = row['mean_ratio'];
    return [
      row['p'],
      sig2(num(row, 'mse_phat')),
      sig2(num(row, 'mse_perfect_ref')),
      ratioField === '' ? '-' : ratio3(num(row, 'mean_ratio')),
    ];
  });

  const widths = HEADERS.map((h, col) =>
    Math.max(h.length, ...cells.map((r) => r[col].length)));
  const line = (fields: string[]) =>
    fields.map((f, col) => f.padStart(widths[col])).join('  ');

  const out = [line(HEADERS)];
  out.push(widths.map((w) => '-'.repeat(w)).join('  '));
  for (const row of cells) out.push(line(row));
  return out.join('\n') + '\n';
}
