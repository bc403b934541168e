import type { Positions } from "./store.js";
import type { QuiverView } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const SUPERSCRIPTS: Record<string, string> = {
  "0": "⁰",
  "1": "¹",
  "2": "²",
  "3": "³",
  "4": "⁴",
  "5": "⁵",
  "6": "⁶",
  "7": "⁷",
  "8": "⁸",
  "9": "⁹",
  "-": "⁻",
};

function superscript(exponent: string): string {
  return exponent
    .split("")
    .map((ch) => SUPERSCRIPTS[ch] ?? ch)
    .join("");
}

/**
 * Pretty-print a canonical polynomial string: exponents become superscripts,
 * zero-exponent factors and unit coefficients are dropped.  The canonical
 * string itself stays the source of truth for equality; this is display only.
 */
export function formatPolynomial(canonical: string): string {
  if (canonical === "0") return "0";
  const terms = canonical.split(" + ").map((term) => {
    const [coeffPart, monoPart] = term.split(" * ");
    const factors: string[] = [];
    if (monoPart) {
      for (const factor of monoPart.split("*")) {
        const match = /^x(\d+)\^(-?\d+)$/.exec(factor.trim());
        if (!match) {
          factors.push(factor);
          continue;
        }
        const [, index, exp] = match;
        if (exp === "0") continue;
        factors.push(exp === "1" ? `x${index}` : `x${index}${superscript(exp)}`);
      }
    }
    const coeff = coeffPart.trim();
    const body = factors.join("·");
    if (!body) return coeff;
    if (coeff === "1") return body;
    if (coeff === "-1") return `−${body}`;
    return `${coeff.replace(/^-/, "−")}·${body}`;
  });
  return terms.join(" + ");
}

export function truncated(text: string, limit = 80): { text: string; truncated: boolean } {
  if (text.length <= limit) return { text, truncated: false };
  return { text: text.slice(0, limit - 1) + "…", truncated: true };
}

export interface RenderCallbacks {
  onMutate: (k: number) => void;
}

/** Draw the quiver into an <svg>: circles for mutable vertices (clickable),
 * squares for frozen ones, arrowheads and multiplicity labels. */
export function renderQuiver(
  svg: SVGSVGElement,
  quiver: QuiverView,
  positions: Positions,
  callbacks: RenderCallbacks,
  busy: boolean,
): void {
  while (svg.firstChild) svg.removeChild(svg.firstChild);
  const defs = document.createElementNS(SVG_NS, "defs");
  defs.innerHTML =
    '<marker id="arrowhead" markerWidth="8" markerHeight="8" refX="7" refY="3" orient="auto">' +
    '<path d="M0,0 L7,3 L0,6 z" fill="#445"/></marker>';
  svg.appendChild(defs);

  for (const [from, to, mult] of quiver.arrows) {
    const a = positions[from];
    const b = positions[to];
    if (!a || !b) continue;
    const dx = b.x - a.x;
    const dy = b.y - a.y;
    const len = Math.hypot(dx, dy) || 1;
    const pad = 22;
    const x1 = a.x + (dx / len) * pad;
    const y1 = a.y + (dy / len) * pad;
    const x2 = b.x - (dx / len) * pad;
    const y2 = b.y - (dy / len) * pad;
    const line = document.createElementNS(SVG_NS, "line");
    line.setAttribute("x1", String(x1));
    line.setAttribute("y1", String(y1));
    line.setAttribute("x2", String(x2));
    line.setAttribute("y2", String(y2));
    line.setAttribute("class", "arrow");
    line.setAttribute("marker-end", "url(#arrowhead)");
    svg.appendChild(line);
    if (mult > 1) {
      const label = document.createElementNS(SVG_NS, "text");
      label.setAttribute("x", String((x1 + x2) / 2 + 6));
      label.setAttribute("y", String((y1 + y2) / 2 - 6));
      label.setAttribute("class", "mult");
      label.textContent = String(mult);
      svg.appendChild(label);
    }
  }

  for (const v of quiver.vertices) {
    const pos = positions[v.id];
    if (!pos) continue;
    const group = document.createElementNS(SVG_NS, "g");
    let shape: SVGElement;
    if (v.mutable) {
      shape = document.createElementNS(SVG_NS, "circle");
      shape.setAttribute("cx", String(pos.x));
      shape.setAttribute("cy", String(pos.y));
      shape.setAttribute("r", "18");
      shape.setAttribute("class", busy ? "vertex mutable busy" : "vertex mutable");
      group.addEventListener("click", () => callbacks.onMutate(v.id));
    } else {
      shape = document.createElementNS(SVG_NS, "rect");
      shape.setAttribute("x", String(pos.x - 16));
      shape.setAttribute("y", String(pos.y - 16));
      shape.setAttribute("width", "32");
      shape.setAttribute("height", "32");
      shape.setAttribute("class", "vertex frozen");
    }
    const label = document.createElementNS(SVG_NS, "text");
    label.setAttribute("x", String(pos.x));
    label.setAttribute("y", String(pos.y + 4));
    label.setAttribute("class", "vertex-label");
    label.textContent = String(v.id);
    group.appendChild(shape);
    group.appendChild(label);
    svg.appendChild(group);
  }
}
