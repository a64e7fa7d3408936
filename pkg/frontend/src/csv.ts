// Minimal CSV reader for the experiment harness output. The harness writes
// plain comma-separated fields with no quoting or embedded commas, so no
// general-purpose parser is needed.

export interface Table {
  columns: string[];
  rows: Record<string, string>[];
}

export function parseCsv(text: string): Table {
  const lines = text.split('\n').filter((line) => line.length > 0);
  if (lines.length === 0) {
    throw new Error('empty file, expected a CSV header');
  }
  const columns = lines[0].split(',');
  const rows = lines.slice(1).map((line, i) => {
    const fields = line.split(',');
    if (fields.length !== columns.length) {
      throw new Error(
        `row ${i + 1} has ${fields.length} fields, header has ${columns.length}`,
      );
    }
    const row: Record<string, string> = {};
    columns.forEach((name, k) => {
      row[name] = fields[k];
    });
    return row;
  });
  return { columns, rows };
}

export function requireColumns(table: Table, names: string[]): void {
  for (const name of names) {
    if (!table.columns.includes(name)) {
      throw new Error(`missing column "${name}"`);
    }
  }
}

export function requireRows(table: Table): void {
  if (table.rows.length === 0) {
    throw new Error('no data rows');
  }
}

export function num(row: Record<string, string>, column: string): number {
  const value = Number(row[column]);
  if (!Number.isFinite(value)) {
    throw new Error(`column "${column}" has non-numeric value "${row[column]}"`);
  }
  return value;
}
