import { ApiClient, ApiError } from "./api.js";
import { SessionController } from "./history.js";
import { forceLayout, type Point } from "./layout.js";
import { buildView, colourHue } from "./view.js";
import type { QuiverJson } from "./types.js";

const SERVICE_URL =
  new URLSearchParams(location.search).get("service") ?? "http://127.0.0.1:8977";

const api = new ApiClient(SERVICE_URL);

const svg = document.getElementById("canvas") as unknown as SVGSVGElement;
const badge = document.getElementById("membership-badge") as HTMLSpanElement;
const noticeBox = document.getElementById("notice") as HTMLDivElement;
const historyList = document.getElementById("history") as HTMLOListElement;
const undoButton = document.getElementById("undo") as HTMLButtonElement;
const overlayToggle = document.getElementById("overlay") as HTMLInputElement;
const powerSelect = document.getElementById("power") as HTMLSelectElement;
const quiverInput = document.getElementById("quiver-json") as HTMLTextAreaElement;
const loadButton = document.getElementById("load") as HTMLButtonElement;
const browserN = document.getElementById("browser-n") as HTMLInputElement;
const browserM = document.getElementById("browser-m") as HTMLInputElement;
const browseButton = document.getElementById("browse") as HTMLButtonElement;
const gallery = document.getElementById("gallery") as HTMLDivElement;

let controller: SessionController | null = null;
let positions: Point[] = [];
const pinned = new Map<number, Point>();

const SVG_NS = "http://www.w3.org/2000/svg";
const WIDTH = 640;
const HEIGHT = 480;

function el<K extends string>(tag: K, attrs: Record<string, string>): SVGElement {
  const node = document.createElementNS(SVG_NS, tag) as SVGElement;
  for (const [key, value] of Object.entries(attrs)) node.setAttribute(key, value);
  return node;
}

function showNotice(text: string | null): void {
  noticeBox.textContent = text ?? "";
  noticeBox.style.display = text ? "block" : "none";
}

function render(): void {
  if (!controller) return;
  const snap = controller.snapshot();
  const quiver = snap.session.quiver;
  const view = buildView(quiver, snap.zeroPart);
  if (positions.length !== quiver.n) {
    positions = forceLayout(quiver, { width: WIDTH, height: HEIGHT }, pinned);
  }
  svg.replaceChildren();

  for (const edge of view.edges) {
    const a = positions[edge.from - 1];
    const b = positions[edge.to - 1];
    const mx = (a.x + b.x) / 2;
    const my = (a.y + b.y) / 2;
    const line = el("line", {
      x1: `${a.x}`, y1: `${a.y}`, x2: `${b.x}`, y2: `${b.y}`,
      stroke: edge.inZeroPart ? "#e4b400" : edge.hue,
      "stroke-width": edge.inZeroPart ? "5" : "2",
    });
    svg.appendChild(line);
    // arrowhead for the drawn (low-to-high) direction
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.max(Math.hypot(dx, dy), 1);
    const tipX = b.x - (dx / len) * 26;
    const tipY = b.y - (dy / len) * 26;
    const left = { x: tipX - (dy / len) * 6 - (dx / len) * 8, y: tipY + (dx / len) * 6 - (dy / len) * 8 };
    const right = { x: tipX + (dy / len) * 6 - (dx / len) * 8, y: tipY - (dx / len) * 6 - (dy / len) * 8 };
    svg.appendChild(el("path", {
      d: `M ${left.x} ${left.y} L ${tipX} ${tipY} L ${right.x} ${right.y}`,
      stroke: edge.hue, fill: "none", "stroke-width": "2",
    }));
    const label = el("text", {
      x: `${mx}`, y: `${my - 6}`, fill: edge.hue,
      "font-size": "14", "text-anchor": "middle",
    });
    label.textContent = edge.label;
    svg.appendChild(label);
  }

  positions.forEach((p, index) => {
    const group = el("g", { cursor: "pointer" });
    const circle = el("circle", {
      cx: `${p.x}`, cy: `${p.y}`, r: "18",
      fill: "#f5f5f5", stroke: "#333", "stroke-width": "2",
    });
    const text = el("text", {
      x: `${p.x}`, y: `${p.y + 5}`, "text-anchor": "middle", "font-size": "15",
    });
    text.textContent = `${index + 1}`;
    group.appendChild(circle);
    group.appendChild(text);
    group.addEventListener("click", () => {
      void controller?.mutate(index + 1, Number(powerSelect.value));
    });
    attachDrag(group, index);
    svg.appendChild(group);
  });

  badge.textContent = snap.verdict === null ? "?" : snap.verdict.member ? "member" : "not a member";
  badge.className = snap.verdict?.member ? "badge ok" : "badge bad";
  historyList.replaceChildren(
    ...snap.session.history.map((step) => {
      const item = document.createElement("li");
      item.textContent = `mu_${step.vertex}^${step.power}`;
      return item;
    }),
  );
  undoButton.disabled = snap.busy || snap.session.history.length === 0;
  showNotice(snap.notice);
  if (powerSelect.options.length !== quiver.m + 1) {
    const selected = powerSelect.value;
    powerSelect.replaceChildren(
      ...Array.from({ length: quiver.m + 1 }, (_, i) => {
        const option = document.createElement("option");
        option.value = `${i + 1}`;
        option.textContent = `power ${i + 1}`;
        return option;
      }),
    );
    if ([...powerSelect.options].some((o) => o.value === selected)) {
      powerSelect.value = selected;
    }
  }
}

function attachDrag(group: SVGElement, index: number): void {
  let dragging = false;
  group.addEventListener("pointerdown", (event) => {
    dragging = true;
    group.setPointerCapture(event.pointerId);
  });
  group.addEventListener("pointermove", (event) => {
    if (!dragging) return;
    const rect = svg.getBoundingClientRect();
    const point = { x: event.clientX - rect.left, y: event.clientY - rect.top };
    pinned.set(index, point);
    positions[index] = point;
    render();
  });
  group.addEventListener("pointerup", () => {
    dragging = false;
  });
}

async function openSession(quiver: QuiverJson): Promise<void> {
  try {
    controller = await SessionController.create(api, quiver);
    positions = [];
    pinned.clear();
    controller.onChange(() => render());
    overlayToggle.checked = false;
    render();
  } catch (error) {
    showNotice(error instanceof ApiError ? `cannot open session: ${error.message}` : String(error));
  }
}

loadButton.addEventListener("click", () => {
  try {
    void openSession(JSON.parse(quiverInput.value) as QuiverJson);
  } catch (error) {
    showNotice(`not valid JSON: ${String(error)}`);
  }
});

undoButton.addEventListener("click", () => void controller?.undo());
overlayToggle.addEventListener("change", () => void controller?.setOverlay(overlayToggle.checked));

browseButton.addEventListener("click", async () => {
  gallery.replaceChildren();
  try {
    const listing = await api.classRepresentatives(
      Number(browserN.value),
      Number(browserM.value),
    );
    const heading = document.createElement("p");
    heading.textContent = `${listing.count} classes`;
    gallery.appendChild(heading);
    listing.representatives.forEach((rep, index) => {
      const entry = document.createElement("button");
      entry.className = "gallery-entry";
      entry.textContent =
        `#${index + 1}: ` +
        rep.arrows.map((a) => `${a.from}->${a.to}(${a.colour})`).join(", ");
      entry.addEventListener("click", () => void openSession(rep));
      gallery.appendChild(entry);
    });
  } catch (error) {
    showNotice(error instanceof ApiError ? error.message : String(error));
  }
});

// seed with the 2-coloured line on three vertices
const seed: QuiverJson = {
  m: 2,
  n: 3,
  arrows: [
    { from: 1, to: 2, colour: 0, mult: 1 },
    { from: 2, to: 3, colour: 0, mult: 1 },
  ],
};
quiverInput.value = JSON.stringify(seed, null, 2);
void openSession(seed);

export { colourHue };
