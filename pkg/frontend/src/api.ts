import { z } from "zod";

const pointSchema = z.tuple([z.number(), z.number()]);

export const solutionSchema = z.object({
  variant: z.string(),
  k_effective: z.number().nullable(),
  k_effective_exact: z.string().optional(),
  d_star: z.number().nullable(),
  d_star_exact: z.string().optional(),
  construction: z.string(),
  L: z.number(),
  L_exact: z.string().optional(),
  T: z.number(),
  lower_bound_cost: z.number().nullable(),
  lower_bound_cost_exact: z.string().optional(),
  observed_ratio: z.number().nullable(),
  observed_ratio_exact: z.string().optional(),
  guarantee: z.union([z.number(), z.string()]),
  guarantee_exact: z.string().optional(),
  stops: z.array(pointSchema),
  waypoints: z.array(pointSchema),
});
export type Solution = z.infer<typeof solutionSchema>;

const curveSchema = z.object({
  variant: z.string(),
  role: z.string(),
  rhs: z.number(),
  vertices: z.array(pointSchema),
  ray_T: z.number(),
});
export type Curve = z.infer<typeof curveSchema>;

export const frontierSchema = z.object({
  variant: z.string(),
  lower: curveSchema.nullable(),
  upper: curveSchema.nullable(),
  points: z.array(
    z.object({ construction: z.string(), L: z.number(), T: z.number() })
  ),
});
export type Frontier = z.infer<typeof frontierSchema>;

/** Service-side rejection: carries the field name for inline display. */
export class ApiError extends Error {
  readonly field: string | null;
  readonly status: number;
  constructor(message: string, field: string | null, status: number) {
    super(message);
    this.field = field;
    this.status = status;
  }
}

export type SolveParams = {
  m: number;
  n: number;
  k: number;
  alpha: number;
  beta: number;
};

export function solveQuery(p: SolveParams): string {
  const q = new URLSearchParams();
  q.set("m", String(p.m));
  q.set("n", String(p.n));
  q.set("k", String(p.k));
  q.set("alpha", String(p.alpha));
  q.set("beta", String(p.beta));
  return q.toString();
}

export function frontierQuery(p: SolveParams): string {
  const q = new URLSearchParams();
  q.set("m", String(p.m));
  q.set("n", String(p.n));
  q.set("k", String(p.k));
  return q.toString();
}

export type FetchLike = typeof fetch;

async function getJson(fetchFn: FetchLike, url: string): Promise<unknown> {
  const resp = await fetchFn(url);
  if (!resp.ok) {
    let message = `request failed (${resp.status})`;
    let field: string | null = null;
    try {
      const body = (await resp.json()) as { error?: string; field?: string | null };
      if (body.error) message = body.error;
      field = body.field ?? null;
    } catch {
      // non-JSON error body: keep the status message
    }
    throw new ApiError(message, field, resp.status);
  }
  return resp.json();
}

export async function fetchSolution(
  fetchFn: FetchLike,
  base: string,
  params: SolveParams
): Promise<Solution> {
  const doc = await getJson(fetchFn, `${base}/api/solve?${solveQuery(params)}`);
  return solutionSchema.parse(doc);
}

export async function fetchFrontier(
  fetchFn: FetchLike,
  base: string,
  params: SolveParams
): Promise<Frontier> {
  const doc = await getJson(fetchFn, `${base}/api/frontier?${frontierQuery(params)}`);
  return frontierSchema.parse(doc);
}
