import { describe, expect, it } from "vitest";

import { SessionClient } from "../src/api.js";
import { SessionStore } from "../src/store.js";
import type { SessionState } from "../src/types.js";
import { loadFixture, replayTransport, type Fixture } from "./fixtures.js";

async function runFixture(fixture: Fixture): Promise<{
  store: SessionStore;
  displayedAfterEachStep: string[][];
}> {
  const { transport, remaining } = replayTransport(fixture);
  const store = new SessionStore(new SessionClient(transport));
  const displayed: string[][] = [];
  for (const step of fixture.steps) {
    const action = step.action;
    let ok = false;
    if (action.kind === "open") ok = await store.openPreset(action.preset!);
    else if (action.kind === "mutate") ok = await store.mutate(action.k!);
    else if (action.kind === "undo") ok = await store.undo();
    else ok = await store.redo();
    expect(ok).toBe(true);
    displayed.push(store.displayedCluster());
  }
  expect(remaining()).toBe(0);
  return { store, displayedAfterEachStep: displayed };
}

describe("UI conformance against captured service replies", () => {
  it("markov preset, three clicks: displayed strings byte-identical to replies", async () => {
    const fixture = loadFixture("markov_three_clicks");
    const { displayedAfterEachStep } = await runFixture(fixture);
    fixture.steps.forEach((step, idx) => {
      expect(displayedAfterEachStep[idx]).toStrictEqual(step.response.cluster);
    });
  });

  it("a11 preset, five alternating clicks return the start cluster up to order", async () => {
    const fixture = loadFixture("a11_five_alternating");
    const { displayedAfterEachStep } = await runFixture(fixture);
    fixture.steps.forEach((step, idx) => {
      expect(displayedAfterEachStep[idx]).toStrictEqual(step.response.cluster);
    });
    const start = [...fixture.steps[0].response.cluster].sort();
    const end = [...displayedAfterEachStep[displayedAfterEachStep.length - 1]].sort();
    expect(end).toStrictEqual(start);
  });

  it("undo/redo ladder restores exact previous cluster strings", async () => {
    const fixture = loadFixture("undo_redo_ladder");
    const { displayedAfterEachStep } = await runFixture(fixture);
    fixture.steps.forEach((step, idx) => {
      expect(displayedAfterEachStep[idx]).toStrictEqual(step.response.cluster);
      expect(displayedAfterEachStep[idx]).toStrictEqual(step.response.cluster);
    });
    // ladder: open, m1, m2, m1, undo, undo, redo, m2, undo, redo
    const byIndex = displayedAfterEachStep;
    expect(byIndex[4]).toStrictEqual(fixture.steps[2].response.cluster);
    expect(byIndex[5]).toStrictEqual(fixture.steps[1].response.cluster);
    expect(byIndex[6]).toStrictEqual(fixture.steps[2].response.cluster);
    expect(byIndex[8]).toStrictEqual(fixture.steps[2].response.cluster);
    expect(byIndex[9]).toStrictEqual(fixture.steps[7].response.cluster);
  });
});

function fakeState(tag: string): SessionState {
  return {
    id: "s",
    origin: "markov",
    m: 1,
    n: 1,
    matrix: [[0]],
    cluster: [tag],
    coefficients: [],
    yhat: [],
    word: [],
    undoDepth: 0,
    redoDepth: 0,
  };
}

describe("store discipline", () => {
  it("allows a single in-flight mutation per session", async () => {
    let openResolve: (v: { status: number; json: unknown }) => void = () => {};
    let calls = 0;
    const store = new SessionStore(
      new SessionClient(async () => {
        calls += 1;
        if (calls === 1) {
          return { status: 200, json: fakeState("initial") };
        }
        return new Promise((resolve) => {
          openResolve = resolve;
        });
      }),
    );
    await store.openPreset("markov");
    const first = store.mutate(1);
    const second = await store.mutate(1); // rejected: one request in flight
    expect(second).toBe(false);
    expect(calls).toBe(2);
    openResolve({ status: 200, json: fakeState("mutated") });
    expect(await first).toBe(true);
    expect(store.displayedCluster()).toStrictEqual(["mutated"]);
  });

  it("discards stale responses by sequence number", async () => {
    const store = new SessionStore(new SessionClient(async () => ({ status: 200, json: fakeState("x") })));
    type Hatch = { apply: (seq: number, state: SessionState) => void };
    const hatch = store as unknown as Hatch;
    hatch.apply(5, fakeState("newer"));
    hatch.apply(3, fakeState("older"));
    expect(store.displayedCluster()).toStrictEqual(["newer"]);
  });

  it("keeps the last confirmed state when the service rejects", async () => {
    let calls = 0;
    const store = new SessionStore(
      new SessionClient(async () => {
        calls += 1;
        if (calls === 1) return { status: 200, json: fakeState("good") };
        return { status: 422, json: { error: "k must be in 1..1" } };
      }),
    );
    await store.openPreset("markov");
    const ok = await store.mutate(9);
    expect(ok).toBe(false);
    expect(store.lastError).toContain("k must be");
    expect(store.displayedCluster()).toStrictEqual(["good"]);
  });
});
