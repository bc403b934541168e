import { SessionClient, fetchTransport } from "./api.js";
import { layoutQuiver } from "./layout.js";
import { formatPolynomial, renderQuiver, truncated } from "./render.js";
import { SessionStore } from "./store.js";
import type { GraphPayload } from "./types.js";

const SERVICE_URL = (window as { CLUSTERKIT_URL?: string }).CLUSTERKIT_URL ?? "";

const client = new SessionClient(fetchTransport(SERVICE_URL));
const store = new SessionStore(client);

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

const presetSelect = el<HTMLSelectElement>("preset");
const openButton = el<HTMLButtonElement>("open");
const undoButton = el<HTMLButtonElement>("undo");
const redoButton = el<HTMLButtonElement>("redo");
const graphButton = el<HTMLButtonElement>("load-graph");
const svg = document.getElementById("quiver") as unknown as SVGSVGElement;
const clusterList = el<HTMLOListElement>("cluster");
const coeffList = el<HTMLOListElement>("coefficients");
const yhatList = el<HTMLOListElement>("yhat");
const wordSpan = el<HTMLSpanElement>("word");
const historyList = el<HTMLOListElement>("history");
const errorBox = el<HTMLDivElement>("error");
const graphBox = el<HTMLDivElement>("graph");

async function boot(): Promise<void> {
  const presets = await client.presets();
  for (const name of presets) {
    const option = document.createElement("option");
    option.value = name;
    option.textContent = name;
    presetSelect.appendChild(option);
  }
}

function polynomialItem(canonical: string): HTMLLIElement {
  const item = document.createElement("li");
  const pretty = formatPolynomial(canonical);
  const view = truncated(pretty);
  item.textContent = view.text;
  if (view.truncated) {
    item.classList.add("truncated");
    item.title = "click to expand";
    item.addEventListener("click", () => {
      item.textContent = pretty;
      item.classList.remove("truncated");
    });
  }
  return item;
}

function redraw(): void {
  errorBox.textContent = store.lastError ?? "";
  const state = store.state;
  if (!state) return;
  clusterList.replaceChildren(...state.cluster.map(polynomialItem));
  coeffList.replaceChildren(
    ...state.coefficients.map((c) => {
      const item = document.createElement("li");
      item.textContent = c;
      return item;
    }),
  );
  yhatList.replaceChildren(
    ...state.yhat.map((y) => {
      const item = document.createElement("li");
      item.textContent = `${formatPolynomial(y.num)}  /  ${formatPolynomial(y.den)}`;
      return item;
    }),
  );
  wordSpan.textContent = state.word.length ? state.word.join(", ") : "(empty)";
  undoButton.disabled = state.undoDepth === 0 || store.inFlight;
  redoButton.disabled = state.redoDepth === 0 || store.inFlight;
  historyList.replaceChildren(
    ...state.word.map((k, idx) => {
      const item = document.createElement("li");
      const button = document.createElement("button");
      button.textContent = `step ${idx + 1}: μ${k}`;
      button.addEventListener("click", () => void store.jumpToStep(idx + 1));
      item.appendChild(button);
      return item;
    }),
  );
  if (state.quiver) {
    store.positions = layoutQuiver(state.quiver, store.positions);
    renderQuiver(
      svg,
      state.quiver,
      store.positions,
      { onMutate: (k) => void store.mutate(k) },
      store.inFlight,
    );
  } else {
    svg.replaceChildren();
    const note = document.createElementNS("http://www.w3.org/2000/svg", "text");
    note.setAttribute("x", "20");
    note.setAttribute("y", "40");
    note.textContent = "matrix is skew-symmetrizable but not skew-symmetric: no quiver view";
    svg.appendChild(note);
  }
}

async function loadGraph(): Promise<void> {
  const state = store.state;
  if (!state) return;
  const payload: GraphPayload = await client.graph(state.id, 120, 6);
  const lines = [
    `nodes: ${payload.nodes.length}${payload.truncated ? " (truncated)" : ""}`,
    `current seed: node ${payload.current}`,
  ];
  const degree = new Map<number, Set<number>>();
  for (const [a, , b] of payload.edges) {
    if (!degree.has(a)) degree.set(a, new Set());
    if (!degree.has(b)) degree.set(b, new Set());
    degree.get(a)!.add(b);
    degree.get(b)!.add(a);
  }
  lines.push(
    `degree of current node: ${degree.get(payload.current)?.size ?? 0}`,
  );
  graphBox.textContent = lines.join("\n");
}

store.onChange(redraw);
openButton.addEventListener("click", () => {
  void store.openPreset(presetSelect.value);
});
undoButton.addEventListener("click", () => void store.undo());
redoButton.addEventListener("click", () => void store.redo());
graphButton.addEventListener("click", () => void loadGraph());

void boot();
