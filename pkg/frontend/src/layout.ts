import type { Positions } from "./store.js";
import type { QuiverView } from "./types.js";

/**
 * Stable quiver layout: vertices that already have positions keep them across
 * mutations; only unseen vertices are placed, on a circle around the center.
 */
export function layoutQuiver(
  quiver: QuiverView,
  previous: Positions,
  width = 480,
  height = 420,
): Positions {
  const next: Positions = {};
  const missing: number[] = [];
  for (const v of quiver.vertices) {
    const old = previous[v.id];
    if (old) {
      next[v.id] = { x: old.x, y: old.y };
    } else {
      missing.push(v.id);
    }
  }
  if (missing.length > 0) {
    const total = quiver.vertices.length;
    const radius = Math.min(width, height) / 2 - 50;
    const cx = width / 2;
    const cy = height / 2;
    const order = quiver.vertices.map((v) => v.id);
    for (const id of missing) {
      const slot = order.indexOf(id);
      const angle = (2 * Math.PI * slot) / total - Math.PI / 2;
      next[id] = {
        x: Math.round(cx + radius * Math.cos(angle)),
        y: Math.round(cy + radius * Math.sin(angle)),
      };
    }
  }
  return next;
}
