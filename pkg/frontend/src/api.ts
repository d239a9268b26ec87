import type {
  ClassListing,
  MembershipVerdict,
  QuiverJson,
  SessionState,
  ZeroPart,
} from "./types.js";

export type FetchLike = (
  url: string,
  init?: RequestInit,
) => Promise<Response>;

/** Service error with the HTTP status and decoded JSON payload. */
export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly payload: unknown,
  ) {
    super(
      typeof payload === "object" && payload !== null && "error" in payload
        ? String((payload as { error: unknown }).error)
        : `service responded with status ${status}`,
    );
  }
}

export class ApiClient {
  constructor(
    readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request<T>(
    method: string,
    path: string,
    body?: unknown,
  ): Promise<T> {
    const response = await this.fetchImpl(`${this.baseUrl}${path}`, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    const payload: unknown = await response.json();
    if (!response.ok) {
      throw new ApiError(response.status, payload);
    }
    return payload as T;
  }

  createSession(quiver: QuiverJson): Promise<SessionState> {
    return this.request("POST", "/session", quiver);
  }

  getSession(id: string): Promise<SessionState> {
    return this.request("GET", `/session/${id}`);
  }

  mutate(id: string, vertex: number, power: number): Promise<SessionState> {
    return this.request("POST", `/session/${id}/mutate`, { vertex, power });
  }

  undo(id: string): Promise<SessionState> {
    return this.request("POST", `/session/${id}/undo`);
  }

  classify(id: string): Promise<MembershipVerdict> {
    return this.request("GET", `/session/${id}/classify`);
  }

  zeroPart(id: string): Promise<ZeroPart> {
    return this.request("GET", `/session/${id}/zero-part`);
  }

  classRepresentatives(n: number, m: number): Promise<ClassListing> {
    return this.request("GET", `/class?n=${n}&m=${m}`);
  }
}
