/** Wire types of the clusterkit session service, copied verbatim. */

export interface QuiverVertex {
  id: number;
  mutable: boolean;
}

export interface QuiverView {
  vertices: QuiverVertex[];
  /** [from, to, multiplicity] triples. */
  arrows: [number, number, number][];
}

export interface RationalString {
  num: string;
  den: string;
}

export interface SessionState {
  id: string;
  origin: string;
  m: number;
  n: number;
  matrix: number[][];
  cluster: string[];
  coefficients: string[];
  yhat: RationalString[];
  word: number[];
  undoDepth: number;
  redoDepth: number;
  quiver?: QuiverView;
}

export interface GraphNode {
  index: number;
  depth: number;
}

export interface GraphPayload {
  nodes: GraphNode[];
  edges: [number, number, number][];
  truncated: boolean;
  current: number;
}

export interface PresetListing {
  presets: string[];
}

export interface ServiceError {
  error: string;
}
