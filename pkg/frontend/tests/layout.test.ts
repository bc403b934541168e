import { describe, expect, it } from "vitest";

import { layoutQuiver } from "../src/layout.js";
import type { QuiverView } from "../src/types.js";

const markov: QuiverView = {
  vertices: [
    { id: 1, mutable: true },
    { id: 2, mutable: true },
    { id: 3, mutable: true },
  ],
  arrows: [
    [1, 2, 2],
    [2, 3, 2],
    [3, 1, 2],
  ],
};

describe("layout stability", () => {
  it("places every vertex on first layout", () => {
    const pos = layoutQuiver(markov, {});
    expect(Object.keys(pos)).toHaveLength(3);
  });

  it("keeps existing positions across mutations", () => {
    const first = layoutQuiver(markov, {});
    const mutated: QuiverView = {
      vertices: markov.vertices,
      arrows: [
        [2, 1, 2],
        [3, 2, 2],
        [1, 3, 4],
      ],
    };
    const second = layoutQuiver(mutated, first);
    expect(second).toStrictEqual(first);
  });

  it("only new vertices receive fresh positions", () => {
    const first = layoutQuiver(markov, {});
    const extended: QuiverView = {
      vertices: [...markov.vertices, { id: 4, mutable: false }],
      arrows: markov.arrows,
    };
    const second = layoutQuiver(extended, first);
    expect(second[1]).toStrictEqual(first[1]);
    expect(second[2]).toStrictEqual(first[2]);
    expect(second[3]).toStrictEqual(first[3]);
    expect(second[4]).toBeDefined();
  });
});
