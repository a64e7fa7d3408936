// Number formatting for the rendered artifacts.

// Two significant figures, scientific for small/large magnitudes:
// 1.43e-6 -> "1.4e-6", 5.177e-6 -> "5.2e-6", 0.0234 -> "0.023".
export function sig2(x: number): string {
  if (x === 0) return '0';
  if (!Number.isFinite(x)) return String(x);
  const abs = Math.abs(x);
  if (abs < 0.01 || abs >= 1000) {
    return x.toExponential(1);
  }
  return String(Number(x.toPrecision(2)));
}

// Ratio-style columns: fixed three decimals (1.008).
export function ratio3(x: number): string {
  return x.toFixed(3);
}
