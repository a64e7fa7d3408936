import { describe, expect, it } from 'vitest';

import { ratio3, sig2 } from '../src/format';

describe('sig2', () => {
  it('uses scientific notation with two significant figures for small values', () => {
    expect(sig2(1.43e-6)).toBe('1.4e-6');
    expect(sig2(5.177e-6)).toBe('5.2e-6');
    expect(sig2(4.3e-7)).toBe('4.3e-7');
    expect(sig2(-0.0034)).toBe('-3.4e-3');
  });

  it('uses plain decimals in the mid range', () => {
    expect(sig2(0.0234)).toBe('0.023');
    expect(sig2(0.15)).toBe('0.15');
    expect(sig2(2)).toBe('2');
  });

  it('switches back to scientific above a thousand', () => {
    expect(sig2(1234)).toBe('1.2e+3');
  });

  it('passes zero and non-finite values through', () => {
    expect(sig2(0)).toBe('0');
    expect(sig2(Infinity)).toBe('Infinity');
    expect(sig2(NaN)).toBe('NaN');
  });
});

describe('ratio3', () => {
  it('renders three fixed decimals', () => {
    expect(ratio3(1.0083)).toBe('1.008');
    expect(ratio3(1)).toBe('1.000');
    expect(ratio3(0.99963)).toBe('1.000');
  });
});
