import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import type { Transport } from "../src/api.js";
import type { SessionState } from "../src/types.js";

export interface FixtureAction {
  kind: "open" | "mutate" | "undo" | "redo";
  preset?: string;
  k?: number;
}

export interface FixtureStep {
  action: FixtureAction;
  status: number;
  response: SessionState;
}

export interface Fixture {
  steps: FixtureStep[];
}

const here = dirname(fileURLToPath(import.meta.url));

export function loadFixture(name: string): Fixture {
  return JSON.parse(readFileSync(join(here, "fixtures", `${name}.json`), "utf-8"));
}

/**
 * A transport that replays a captured service conversation and insists the
 * client issues exactly the recorded requests.
 */
export function replayTransport(fixture: Fixture): {
  transport: Transport;
  remaining: () => number;
} {
  let cursor = 0;
  const transport: Transport = async (method, path, body) => {
    const step = fixture.steps[cursor];
    if (!step) {
      throw new Error(`no fixture step for ${method} ${path}`);
    }
    const expected = step.action;
    if (expected.kind === "open") {
      if (method !== "POST" || path !== "/sessions") {
        throw new Error(`expected session creation, got ${method} ${path}`);
      }
      const payload = body as { preset?: string };
      if (payload.preset !== expected.preset) {
        throw new Error(`expected preset ${expected.preset}, got ${payload.preset}`);
      }
    } else {
      const suffix = expected.kind === "mutate" ? "/mutate" : `/${expected.kind}`;
      if (method !== "POST" || !path.endsWith(suffix)) {
        throw new Error(`expected ${expected.kind}, got ${method} ${path}`);
      }
      if (expected.kind === "mutate" && (body as { k?: number }).k !== expected.k) {
        throw new Error(`expected k=${expected.k}`);
      }
    }
    cursor += 1;
    return { status: step.status, json: step.response };
  };
  return { transport, remaining: () => fixture.steps.length - cursor };
}
