import type { NodeId } from "../src/index.js";

/** Three 4-cliques (1-4, 5-8, 9-12) bridged by 4-5, 4-10, 5-10. */
export function fig1Edges(): Array<[NodeId, NodeId]> {
  const edges: Array<[NodeId, NodeId]> = [];
  for (const base of [1, 5, 9]) {
    for (let i = 0; i < 4; i++) {
      for (let j = i + 1; j < 4; j++) {
        edges.push([base + i, base + j]);
      }
    }
  }
  edges.push([4, 5], [4, 10], [5, 10]);
  return edges;
}

/** Deterministic 32-bit LCG so test graphs are reproducible. */
export function lcg(seed: number): () => number {
  let state = seed >>> 0;
  return () => {
    state = (Math.imul(state, 1664525) + 1013904223) >>> 0;
    return state / 2 ** 32;
  };
}

/** Seeded sparse random graph over n nodes, connected via a ring. */
export function randomEdges(n: number, extra: number,
                            seed: number): Array<[NodeId, NodeId]> {
  const rand = lcg(seed);
  const edges: Array<[NodeId, NodeId]> = [];
  for (let i = 0; i < n; i++) edges.push([i, (i + 1) % n]);
  for (let k = 0; k < extra; k++) {
    const u = Math.floor(rand() * n);
    const v = Math.floor(rand() * n);
    if (u !== v) edges.push([u, v]);
  }
  return edges;
}
