import {
  ApiError,
  FetchLike,
  Frontier,
  Solution,
  fetchFrontier,
  fetchSolution,
} from "./api";
import { renderFrontier } from "./frontierChart";
import { renderRoute } from "./routeView";
import {
  ExplorerState,
  LIMITS,
  NumericField,
  applyGridOrder,
  readStateFromUrl,
  sanitizeField,
  writeStateToUrl,
} from "./state";

const DEBOUNCE_MS = 150;

const TEMPLATE = `
<div class="explorer">
  <div class="banner hidden" data-testid="retry-banner">
    service unreachable, showing the last result
    <button type="button" data-testid="retry-button">retry</button>
  </div>
  <div class="controls">
    <label>m <input type="number" data-field="m" min="${LIMITS.m.min}" max="${LIMITS.m.max}" step="1"></label>
    <div class="field-error" data-error-for="m"></div>
    <label>n <input type="number" data-field="n" min="${LIMITS.n.min}" max="${LIMITS.n.max}" step="1"></label>
    <div class="field-error" data-error-for="n"></div>
    <label>k <input type="range" data-field="k" min="${LIMITS.k.min}" max="${LIMITS.k.max}" step="0.5">
      <span data-testid="k-readout"></span></label>
    <div class="field-error" data-error-for="k"></div>
    <label>&alpha; <input type="number" data-field="alpha" min="${LIMITS.alpha.min}" max="${LIMITS.alpha.max}" step="0.5"></label>
    <label>&beta; <input type="number" data-field="beta" min="${LIMITS.beta.min}" max="${LIMITS.beta.max}" step="0.5"></label>
    <div class="field-error" data-error-for="objective"></div>
    <div class="field-error" data-error-for="general"></div>
    <label><input type="checkbox" data-flag="showCoverage"> coverage</label>
    <label><input type="checkbox" data-flag="showFrontier"> frontier</label>
    <label><input type="checkbox" data-flag="showLower"> lower curve</label>
    <label><input type="checkbox" data-flag="showUpper"> upper curve</label>
  </div>
  <div class="stats">
    <span class="badge" data-testid="badge-variant"></span>
    <span data-testid="stat-construction"></span>
    <span>L = <b data-testid="stat-L"></b></span>
    <span>T = <b data-testid="stat-T"></b></span>
    <span>ratio = <b data-testid="stat-ratio"></b> <i data-testid="stat-ratio-exact"></i></span>
    <span>guarantee = <b data-testid="stat-guarantee"></b></span>
  </div>
  <div class="views">
    <svg data-testid="route-view" class="route-view"></svg>
    <svg data-testid="frontier-view" class="frontier-view"></svg>
  </div>
</div>`;

type Applied = {
  params: ExplorerState;
  solution: Solution;
  frontier: Frontier;
};

export type Explorer = {
  getState(): ExplorerState;
  refresh(): void;
};

export function mountExplorer(
  root: HTMLElement,
  fetchFn: FetchLike,
  base = ""
): Explorer {
  root.innerHTML = TEMPLATE;
  const input = (field: string) =>
    root.querySelector<HTMLInputElement>(`[data-field="${field}"]`)!;
  const flag = (name: string) =>
    root.querySelector<HTMLInputElement>(`[data-flag="${name}"]`)!;
  const byId = (id: string) => root.querySelector<HTMLElement>(`[data-testid="${id}"]`)!;
  const errorSlot = (field: string) =>
    root.querySelector<HTMLElement>(`[data-error-for="${field}"]`) ??
    root.querySelector<HTMLElement>(`[data-error-for="general"]`)!;

  let state = readStateFromUrl(window.location.search);
  let applied: Applied | null = null;
  let version = 0;
  let timer: ReturnType<typeof setTimeout> | null = null;

  const numericFields: NumericField[] = ["m", "n", "k", "alpha", "beta"];
  const flagNames = ["showCoverage", "showFrontier", "showLower", "showUpper"] as const;

  function syncControls(): void {
    for (const field of numericFields) input(field).value = String(state[field]);
    for (const name of flagNames) flag(name).checked = state[name];
    byId("k-readout").textContent = String(state.k);
  }

  function pushUrl(): void {
    history.replaceState(null, "", `?${writeStateToUrl(state)}`);
  }

  function clearErrors(): void {
    for (const slot of root.querySelectorAll<HTMLElement>(".field-error"))
      slot.textContent = "";
  }

  function showBanner(show: boolean): void {
    byId("retry-banner").classList.toggle("hidden", !show);
  }

  function renderStats(sol: Solution): void {
    byId("badge-variant").textContent = sol.variant;
    byId("stat-construction").textContent = sol.construction;
    byId("stat-L").textContent = String(sol.L);
    byId("stat-T").textContent = String(sol.T);
    byId("stat-ratio").textContent =
      sol.observed_ratio === null ? "—" : String(sol.observed_ratio);
    byId("stat-ratio-exact").textContent = sol.observed_ratio_exact
      ? `= ${sol.observed_ratio_exact}`
      : "";
    byId("stat-guarantee").textContent = String(sol.guarantee);
  }

  function renderViews(): void {
    if (!applied) return;
    const routeSvg = byId("route-view") as unknown as SVGSVGElement;
    renderRoute(routeSvg, applied.solution, {
      m: applied.params.m,
      n: applied.params.n,
      showCoverage: state.showCoverage,
    });
    const frontierSvg = byId("frontier-view") as unknown as SVGSVGElement;
    frontierSvg.classList.toggle("hidden", !state.showFrontier);
    renderFrontier(
      frontierSvg,
      applied.frontier,
      { L: applied.solution.L, T: applied.solution.T },
      { showLower: state.showLower, showUpper: state.showUpper }
    );
  }

  async function issue(): Promise<void> {
    const requestVersion = ++version;
    const params = { ...state };
    try {
      const [solution, frontier] = await Promise.all([
        fetchSolution(fetchFn, base, params),
        fetchFrontier(fetchFn, base, params),
      ]);
      if (requestVersion !== version) return; // superseded while in flight
      applied = { params, solution, frontier };
      clearErrors();
      showBanner(false);
      renderStats(solution);
      renderViews();
    } catch (err) {
      if (requestVersion !== version) return;
      if (err instanceof ApiError) {
        clearErrors();
        errorSlot(err.field ?? "general").textContent = err.message;
        showBanner(false);
      } else {
        showBanner(true); // network failure: keep the stale view
      }
    }
  }

  function schedule(): void {
    if (timer !== null) clearTimeout(timer);
    timer = setTimeout(() => {
      timer = null;
      void issue();
    }, DEBOUNCE_MS);
  }

  function onFieldEdit(field: NumericField, raw: string): void {
    const next = applyGridOrder({
      ...state,
      [field]: sanitizeField(field, raw, state),
    });
    const changed = numericFields.some((f) => next[f] !== state[f]);
    state = next;
    syncControls();
    if (!changed) return; // reverted input: nothing to ask the service
    pushUrl();
    schedule();
  }

  for (const field of numericFields) {
    input(field).addEventListener("input", (event) => {
      onFieldEdit(field, (event.target as HTMLInputElement).value);
    });
  }
  for (const name of flagNames) {
    flag(name).addEventListener("input", (event) => {
      state = { ...state, [name]: (event.target as HTMLInputElement).checked };
      pushUrl();
      renderViews(); // view toggles re-draw from the cached payloads
    });
  }
  byId("retry-button").addEventListener("click", () => void issue());

  syncControls();
  pushUrl();
  void issue();

  return {
    getState: () => ({ ...state }),
    refresh: () => void issue(),
  };
}
