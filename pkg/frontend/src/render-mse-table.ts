import * as fs from 'fs';

import { renderMseTable } from './renderMseTable';

function main(): void {
  const args = process.argv.slice(2);
  if (args.length !== 2) {
    console.error('usage: render-mse-table <mse.csv> <out.txt>');
    process.exit(2);
  }
  const [input, output] = args;
  try {
    const table = renderMseTable(fs.readFileSync(input, 'utf8'));
    fs.writeFileSync(output, table);
    process.stdout.write(table);
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
  console.log(`wrote ${output}`);
}

main();
