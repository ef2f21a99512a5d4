/** Round to `digits` decimals with ties going to the even neighbour,
 * matching how the server's full-precision values are meant to display. */
export function roundHalfEven(x: number, digits: number): number {
  const factor = Math.pow(10, digits);
  const scaled = x * factor;
  const floor = Math.floor(scaled);
  const frac = scaled - floor;
  if (Math.abs(frac - 0.5) < Number.EPSILON * Math.max(1, Math.abs(scaled))) {
    return (floor % 2 === 0 ? floor : floor + 1) / factor;
  }
  return Math.round(scaled) / factor;
}

/** Standard 3-decimal display of a server value. */
export function fmt3(x: number): string {
  return roundHalfEven(x, 3).toFixed(3);
}
