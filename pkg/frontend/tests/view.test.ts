import { describe, expect, it } from "vitest";
import { buildView, colourHue, highlightedZeroArrows, zeroArrowsOf } from "../src/view.js";
import { circleLayout, forceLayout } from "../src/layout.js";
import type { QuiverJson, ZeroPart } from "../src/types.js";

const line3: QuiverJson = {
  m: 2,
  n: 3,
  arrows: [
    { from: 1, to: 2, colour: 0, mult: 1 },
    { from: 2, to: 3, colour: 2, mult: 1 },
  ],
};

describe("buildView", () => {
  it("renders one curve per unordered pair with the low-to-high colour", () => {
    const view = buildView(line3);
    expect(view.edges).toHaveLength(2);
    expect(view.edges[0]).toMatchObject({ from: 1, to: 2, colour: 0, label: "0" });
    expect(view.edges[1]).toMatchObject({ from: 2, to: 3, colour: 2, label: "2" });
  });

  it("derives the zero arrow direction from the pair colour", () => {
    const view = buildView(line3);
    expect(view.edges[0].zeroArrow).toEqual([1, 2]); // colour 0 forward
    expect(view.edges[1].zeroArrow).toEqual([3, 2]); // colour m, partner is 0
  });

  it("is a pure function of the quiver JSON", () => {
    expect(buildView(line3)).toEqual(buildView(JSON.parse(JSON.stringify(line3))));
  });

  it("labels multiplicities and keys hues by colour", () => {
    const multi: QuiverJson = {
      m: 2,
      n: 2,
      arrows: [{ from: 1, to: 2, colour: 1, mult: 3 }],
    };
    const view = buildView(multi);
    expect(view.edges[0].label).toBe("1 x3");
    expect(view.edges[0].hue).toBe(colourHue(1, 2));
    expect(colourHue(0, 2)).not.toBe(colourHue(1, 2));
  });

  it("marks overlay membership exactly per service edge", () => {
    const overlay: ZeroPart = { n: 3, arrows: [[1, 2]] };
    const view = buildView(line3, overlay);
    expect(view.edges[0].inZeroPart).toBe(true);
    expect(view.edges[1].inZeroPart).toBe(false);
    expect(highlightedZeroArrows(view)).toEqual([[1, 2]]);
  });

  it("computes the quiver's own zero arrows for both orientations", () => {
    expect(zeroArrowsOf(line3)).toEqual([
      [1, 2],
      [3, 2],
    ]);
  });
});

describe("layout", () => {
  it("is deterministic for a fixed quiver", () => {
    const a = forceLayout(line3, { iterations: 50 });
    const b = forceLayout(line3, { iterations: 50 });
    expect(a).toEqual(b);
  });

  it("keeps pinned vertices where the user dragged them", () => {
    const pinned = new Map([[0, { x: 100, y: 100 }]]);
    const out = forceLayout(line3, { iterations: 50 }, pinned);
    expect(out[0]).toEqual({ x: 100, y: 100 });
  });

  it("starts from a circle with one point per vertex", () => {
    expect(circleLayout(5)).toHaveLength(5);
  });
});
