import type { QuiverJson, ZeroPart } from "./types.js";

/**
 * Pure derivation of what gets drawn.  One curve is rendered per
 * unordered vertex pair, labelled with the colour of its low-to-high
 * arrow (the partner carries m - c implicitly); the hue is keyed by the
 * same colour, since hue alone is ambiguous for larger m.
 */

export interface RenderedEdge {
  from: number; // 1-based, from < to
  to: number;
  colour: number;
  mult: number;
  label: string;
  hue: string;
  /** direction of the colour-0 arrow on this pair, if any */
  zeroArrow: [number, number] | null;
  /** highlighted by the zero-part overlay */
  inZeroPart: boolean;
}

export interface QuiverView {
  m: number;
  n: number;
  edges: RenderedEdge[];
}

export function colourHue(colour: number, m: number): string {
  const angle = Math.round((300 * colour) / Math.max(m, 1));
  return `hsl(${angle}, 70%, 42%)`;
}

/** The colour-0 arrows implied by the quiver itself, 1-based. */
export function zeroArrowsOf(quiver: QuiverJson): [number, number][] {
  const out: [number, number][] = [];
  for (const arrow of quiver.arrows) {
    if (arrow.colour === 0) out.push([arrow.from, arrow.to]);
    if (arrow.colour === quiver.m) out.push([arrow.to, arrow.from]);
  }
  out.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  return out;
}

export function buildView(
  quiver: QuiverJson,
  overlay: ZeroPart | null = null,
): QuiverView {
  const overlayKeys = new Set(
    (overlay?.arrows ?? []).map(([s, t]) => `${s}>${t}`),
  );
  const edges: RenderedEdge[] = quiver.arrows
    .map((arrow) => {
      const zeroArrow: [number, number] | null =
        arrow.colour === 0
          ? [arrow.from, arrow.to]
          : arrow.colour === quiver.m
            ? [arrow.to, arrow.from]
            : null;
      return {
        from: arrow.from,
        to: arrow.to,
        colour: arrow.colour,
        mult: arrow.mult,
        label: arrow.mult > 1 ? `${arrow.colour} x${arrow.mult}` : `${arrow.colour}`,
        hue: colourHue(arrow.colour, quiver.m),
        zeroArrow,
        inZeroPart:
          zeroArrow !== null && overlayKeys.has(`${zeroArrow[0]}>${zeroArrow[1]}`),
      };
    })
    .sort((a, b) => a.from - b.from || a.to - b.to);
  return { m: quiver.m, n: quiver.n, edges };
}

/** Overlay edges currently highlighted, for equality checks against the
 * service response. */
export function highlightedZeroArrows(view: QuiverView): [number, number][] {
  return view.edges
    .filter((e) => e.inZeroPart && e.zeroArrow !== null)
    .map((e) => e.zeroArrow as [number, number])
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
}
