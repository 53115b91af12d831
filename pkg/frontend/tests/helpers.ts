import type { FetchLike } from "../src/api";

export function parseK(raw: string): number {
  if (raw.includes("/")) {
    const [num, den] = raw.split("/");
    return Number(num) / Number(den);
  }
  return Number(raw);
}

export type JsonBody = Record<string, unknown> | unknown[];

export function jsonResponse(status: number, body: JsonBody): Response {
  return {
    ok: status >= 200 && status < 300,
    status,
    json: async () => body,
  } as unknown as Response;
}

export type RouteTable = {
  solve?: (params: URLSearchParams) => [number, JsonBody];
  frontier?: (params: URLSearchParams) => [number, JsonBody];
};

/** fetch stub routing /api/solve and /api/frontier; records every request URL. */
export function makeFetch(routes: RouteTable): { fetchFn: FetchLike; calls: string[] } {
  const calls: string[] = [];
  const fetchFn = (async (input: RequestInfo | URL) => {
    const url = new URL(String(input), "http://test.local");
    calls.push(url.pathname + url.search);
    const handler =
      url.pathname === "/api/solve"
        ? routes.solve
        : url.pathname === "/api/frontier"
          ? routes.frontier
          : undefined;
    if (!handler) return jsonResponse(404, { error: "not found" });
    const [status, body] = handler(url.searchParams);
    return jsonResponse(status, body);
  }) as FetchLike;
  return { fetchFn, calls };
}

/** Let pending fetch promises and microtasks settle under real timers. */
export async function flush(): Promise<void> {
  for (let i = 0; i < 4; i++) await new Promise((resolve) => setTimeout(resolve, 0));
}
