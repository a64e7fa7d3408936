import * as fs from 'fs';

import { renderBlerSvg } from './renderBler';

function main(): void {
  const args = process.argv.slice(2);
  if (args.length !== 2) {
    console.error('usage: render-bler <bler.csv> <out.svg>');
    process.exit(2);
  }
  const [input, output] = args;
  try {
    const svg = renderBlerSvg(fs.readFileSync(input, 'utf8'));
    fs.writeFileSync(output, svg);
  } catch (err) {
    console.error(`error: ${err instanceof Error ? err.message : String(err)}`);
    process.exit(1);
  }
  console.log(`wrote ${output}`);
}

main();
