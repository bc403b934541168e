import type { GraphPayload, PresetListing, SessionState } from "./types.js";

/** Minimal transport abstraction so tests can swap the network out. */
export interface Transport {
  (method: string, path: string, body?: unknown): Promise<{
    status: number;
    json: unknown;
  }>;
}

export class ServiceRejection extends Error {
  constructor(public status: number, message: string) {
    super(message);
  }
}

export function fetchTransport(baseUrl: string): Transport {
  return async (method, path, body) => {
    const resp = await fetch(baseUrl + path, {
      method,
      headers: { "Content-Type": "application/json" },
      body: body === undefined ? undefined : JSON.stringify(body),
    });
    return { status: resp.status, json: await resp.json() };
  };
}

function expectOk<T>(result: { status: number; json: unknown }): T {
  if (result.status !== 200) {
    const message =
      typeof result.json === "object" && result.json !== null && "error" in result.json
        ? String((result.json as { error: unknown }).error)
        : `service returned ${result.status}`;
    throw new ServiceRejection(result.status, message);
  }
  return result.json as T;
}

/** Thin client over the session endpoints; no math happens here. */
export class SessionClient {
  constructor(private transport: Transport) {}

  async presets(): Promise<string[]> {
    return expectOk<PresetListing>(await this.transport("GET", "/presets")).presets;
  }

  async createFromPreset(preset: string): Promise<SessionState> {
    return expectOk(await this.transport("POST", "/sessions", { preset }));
  }

  async createFromSeed(seed: unknown): Promise<SessionState> {
    return expectOk(await this.transport("POST", "/sessions", { seed }));
  }

  async state(id: string): Promise<SessionState> {
    return expectOk(await this.transport("GET", `/sessions/${id}`));
  }

  async mutate(id: string, k: number): Promise<SessionState> {
    return expectOk(await this.transport("POST", `/sessions/${id}/mutate`, { k }));
  }

  async undo(id: string): Promise<SessionState> {
    return expectOk(await this.transport("POST", `/sessions/${id}/undo`));
  }

  async redo(id: string): Promise<SessionState> {
    return expectOk(await this.transport("POST", `/sessions/${id}/redo`));
  }

  async graph(id: string, maxNodes: number, maxDepth: number): Promise<GraphPayload> {
    return expectOk(
      await this.transport(
        "GET",
        `/sessions/${id}/graph?maxNodes=${maxNodes}&maxDepth=${maxDepth}`,
      ),
    );
  }
}
