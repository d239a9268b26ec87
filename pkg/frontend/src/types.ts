/** Wire formats of the cquivers HTTP service (1-based vertices). */

export interface ArrowJson {
  from: number;
  to: number;
  colour: number;
  mult: number;
}

export interface QuiverJson {
  m: number;
  n: number;
  arrows: ArrowJson[];
}

export interface StepJson {
  vertex: number;
  power: number;
}

export interface SessionState {
  id: string;
  m: number;
  n: number;
  quiver: QuiverJson;
  history: StepJson[];
}

export interface MembershipVerdict {
  member: boolean;
  failures: { kind: string; [key: string]: unknown }[];
}

export interface ZeroPart {
  n: number;
  /** colour-0 arrows as [source, target] pairs */
  arrows: [number, number][];
}

export interface ClassListing {
  n: number;
  m: number;
  count: number;
  representatives: QuiverJson[];
}
