// Tiny SVG string builder, enough for line charts with text.

export type Attrs = Record<string, string | number>;

export function esc(text: string): string {
  return text
    .replace(/&/g, '&amp;')
    .replace(/</g, '&lt;')
    .replace(/>/g, '&gt;')
    .replace(/"/g, '&quot;');
}

export function el(tag: string, attrs: Attrs, content = ''): string {
  const parts = Object.entries(attrs)
    .map(([key, value]) => `${key}="${esc(String(value))}"`)
    .join(' ');
  const open = parts.length > 0 ? `<${tag} ${parts}` : `<${tag}`;
  return content === '' ? `${open}/>` : `${open}>${content}</${tag}>`;
}

export function text(attrs: Attrs, content: string): string {
  return el('text', attrs, esc(content));
}

export function round2(x: number): number {
  return Math.round(x * 100) / 100;
}
