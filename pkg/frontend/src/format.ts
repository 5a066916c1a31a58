/** Number-to-text helpers.
 *
 * The service emits every probability with exactly 6 decimals. JSON.parse
 * drops the trailing zeros, so `prob` restores the wire format; the parity
 * tests check the result byte-for-byte against recorded responses. No other
 * arithmetic on probabilities happens client-side.
 */

export function prob(value: number | string): string {
    if (typeof value === "string") return value; // "Infinity" / "-Infinity"
    return value.toFixed(6);
}

export function escapeHtml(text: string): string {
    return text
        .replace(/&/g, "&amp;")
        .replace(/</g, "&lt;")
        .replace(/>/g, "&gt;")
        .replace(/"/g, "&quot;");
}

/** bar geometry only; never displayed as a number */
export function barWidthPct(value: number | string, scale: number): number {
    const v = typeof value === "string" ? scale : Math.abs(value);
    if (scale <= 0) return 0;
    return Math.min(100, Math.round((v / scale) * 100));
}
