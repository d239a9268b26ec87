import { describe, expect, it } from "vitest";
import { ApiClient } from "../src/api.js";
import { SessionController } from "../src/history.js";
import type { QuiverJson, SessionState } from "../src/types.js";

/** In-memory stand-in for the service, driving the real client code. */
function fakeService() {
  const line: QuiverJson = {
    m: 2,
    n: 3,
    arrows: [
      { from: 1, to: 2, colour: 0, mult: 1 },
      { from: 2, to: 3, colour: 0, mult: 1 },
    ],
  };
  const mutated: QuiverJson = {
    m: 2,
    n: 3,
    arrows: [
      { from: 1, to: 2, colour: 1, mult: 1 },
      { from: 1, to: 3, colour: 0, mult: 1 },
      { from: 2, to: 3, colour: 2, mult: 1 },
    ],
  };
  const state: SessionState = { id: "s1", m: 2, n: 3, quiver: line, history: [] };
  let inFlight = 0;
  let maxInFlight = 0;
  const calls: string[] = [];

  const fetchImpl = async (url: string, init?: RequestInit): Promise<Response> => {
    inFlight += 1;
    maxInFlight = Math.max(maxInFlight, inFlight);
    await new Promise((resolve) => setTimeout(resolve, 5));
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    calls.push(`${init?.method ?? "GET"} ${path}`);
    const respond = (status: number, payload: unknown) => {
      inFlight -= 1;
      return new Response(JSON.stringify(payload), {
        status,
        headers: { "Content-Type": "application/json" },
      });
    };
    if (path === "/session") return respond(201, state);
    if (path === "/session/s1/mutate") {
      const body = JSON.parse(String(init?.body)) as { vertex: number; power: number };
      if (body.vertex > 3) return respond(400, { error: "vertex out of range" });
      state.quiver = mutated;
      state.history = [...state.history, body];
      return respond(200, state);
    }
    if (path === "/session/s1/undo") {
      if (state.history.length === 0) return respond(400, { error: "nothing to undo" });
      state.quiver = line;
      state.history = state.history.slice(0, -1);
      return respond(200, state);
    }
    if (path === "/session/s1/classify") return respond(200, { member: true, failures: [] });
    if (path === "/session/s1/zero-part")
      return respond(200, { n: 3, arrows: [[1, 3]] });
    return respond(404, { error: "no route" });
  };

  return {
    api: new ApiClient("http://service.test", fetchImpl),
    calls,
    stats: () => ({ maxInFlight }),
  };
}

describe("SessionController", () => {
  it("round-trips every transition through the service", async () => {
    const { api, calls } = fakeService();
    const controller = await SessionController.create(api, {
      m: 2,
      n: 3,
      arrows: [],
    });
    const initial = JSON.stringify(controller.state.quiver);
    await controller.mutate(2, 1);
    expect(controller.state.history).toEqual([{ vertex: 2, power: 1 }]);
    expect(JSON.stringify(controller.state.quiver)).not.toBe(initial);
    await controller.undo();
    expect(JSON.stringify(controller.state.quiver)).toBe(initial);
    expect(calls.filter((c) => c.startsWith("POST /session/s1/mutate"))).toHaveLength(1);
  });

  it("queues mutations so only one request is in flight", async () => {
    const { api, stats } = fakeService();
    const controller = await SessionController.create(api, { m: 2, n: 3, arrows: [] });
    await Promise.all([
      controller.mutate(1, 1),
      controller.mutate(2, 1),
      controller.mutate(3, 1),
    ]);
    expect(stats().maxInFlight).toBe(1);
    expect(controller.state.history).toHaveLength(3);
  });

  it("surfaces service 4xx responses as inline notices", async () => {
    const { api } = fakeService();
    const controller = await SessionController.create(api, { m: 2, n: 3, arrows: [] });
    await controller.mutate(99, 1);
    expect(controller.snapshot().notice).toContain("vertex out of range");
    // state untouched by the failed call
    expect(controller.state.history).toHaveLength(0);
  });

  it("keeps the overlay in sync with the service response", async () => {
    const { api } = fakeService();
    const controller = await SessionController.create(api, { m: 2, n: 3, arrows: [] });
    expect(controller.snapshot().zeroPart).toBeNull();
    await controller.setOverlay(true);
    expect(controller.snapshot().zeroPart).toEqual({ n: 3, arrows: [[1, 3]] });
    await controller.setOverlay(false);
    expect(controller.snapshot().zeroPart).toBeNull();
  });

  it("notifies listeners on every change", async () => {
    const { api } = fakeService();
    const controller = await SessionController.create(api, { m: 2, n: 3, arrows: [] });
    const seen: boolean[] = [];
    controller.onChange((snap) => seen.push(snap.busy));
    await controller.mutate(1, 1);
    expect(seen.length).toBeGreaterThanOrEqual(3); // initial, busy, settled
    expect(seen[seen.length - 1]).toBe(false);
  });
});
