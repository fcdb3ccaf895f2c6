/** Exact-count display helpers. Counts arrive as decimal strings and are
 * never converted to floating point; BigInt does the arithmetic. */

export function groupDigits(decimal: string): string {
  return decimal.replace(/\B(?=(\d{3})+(?!\d))/g, ",");
}

export function sumCounts(counts: string[]): string {
  let total = 0n;
  for (const count of counts) {
    total += BigInt(count);
  }
  return total.toString();
}

export function countsEqual(a: string, b: string): boolean {
  return BigInt(a) === BigInt(b);
}
