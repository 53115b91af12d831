export type ExplorerState = {
  m: number;
  n: number;
  k: number;
  alpha: number;
  beta: number;
  showCoverage: boolean;
  showFrontier: boolean;
  showLower: boolean;
  showUpper: boolean;
};

export const DEFAULT_STATE: ExplorerState = {
  m: 20,
  n: 20,
  k: 2,
  alpha: 1,
  beta: 1,
  showCoverage: true,
  showFrontier: true,
  showLower: true,
  showUpper: true,
};

// Upper bounds keep requests inside what the service answers quickly;
// the lower bounds are the service's own validity floor.
export const LIMITS = {
  m: { min: 1, max: 500 },
  n: { min: 1, max: 500 },
  k: { min: 0.5, max: 12 },
  alpha: { min: 0, max: 99 },
  beta: { min: 0, max: 99 },
} as const;

export type NumericField = keyof typeof LIMITS;

/**
 * Sanitize one numeric control edit against the current state.
 *
 * Values beyond a limit clamp to the nearest bound.  Unparsable or
 * nonpositive grid sizes and attempts that would zero out both weights
 * revert to the current value, so no request fires for them.
 */
export function sanitizeField(
  field: NumericField,
  raw: string,
  current: ExplorerState
): number {
  const prev = current[field];
  if (raw.trim() === "") return prev;
  const value = Number(raw);
  if (!Number.isFinite(value)) return prev;
  const { min, max } = LIMITS[field];
  if ((field === "m" || field === "n" || field === "k") && value <= 0) return prev;
  if (field === "alpha" && value === 0 && current.beta === 0) return prev;
  if (field === "beta" && value === 0 && current.alpha === 0) return prev;
  const clamped = Math.min(max, Math.max(min, value));
  if (field === "m" || field === "n") return Math.round(clamped);
  return clamped;
}

/** Grid invariant m >= n: dependent clamp applied after any m or n edit. */
export function applyGridOrder(state: ExplorerState): ExplorerState {
  if (state.n > state.m) return { ...state, n: state.m };
  return state;
}

const FLAG_KEYS: [keyof ExplorerState, string][] = [
  ["showCoverage", "cov"],
  ["showFrontier", "fr"],
  ["showLower", "lo"],
  ["showUpper", "up"],
];

export function writeStateToUrl(state: ExplorerState): string {
  const q = new URLSearchParams();
  q.set("m", String(state.m));
  q.set("n", String(state.n));
  q.set("k", String(state.k));
  q.set("alpha", String(state.alpha));
  q.set("beta", String(state.beta));
  for (const [key, short] of FLAG_KEYS) q.set(short, state[key] ? "1" : "0");
  return q.toString();
}

export function readStateFromUrl(search: string): ExplorerState {
  const q = new URLSearchParams(search);
  let state: ExplorerState = { ...DEFAULT_STATE };
  for (const field of ["m", "n", "k", "alpha", "beta"] as NumericField[]) {
    const raw = q.get(field);
    if (raw !== null) state = { ...state, [field]: sanitizeField(field, raw, state) };
  }
  for (const [key, short] of FLAG_KEYS) {
    const raw = q.get(short);
    if (raw !== null) state = { ...state, [key]: raw !== "0" };
  }
  return applyGridOrder(state);
}
