import { describe, expect, it } from "vitest";

import { Graph } from "../src/index.js";
import { fig1Edges } from "./helpers.js";

describe("Graph", () => {
  it("builds a triangle", () => {
    const g = new Graph([[0, 1], [1, 2], [2, 0]]);
    expect(g.nodeCount).toBe(3);
    expect(g.edgeCount).toBe(3);
  });

  it("cleans self-loops and duplicates like the CLI loader", () => {
    const g = new Graph([[0, 1], [1, 0], [1, 1], [1, 2]]);
    expect(g.nodeCount).toBe(3);
    expect(g.edgeCount).toBe(2);
  });

  it("interns mixed id types by first appearance", () => {
    const g = new Graph([["a", 7], [7, "b"]]);
    expect(g.nodes).toEqual(["a", "7", "b"]);
  });

  it("rejects an empty edge list", () => {
    expect(() => new Graph([])).toThrow(/no usable edges/);
    expect(() => new Graph([[3, 3]])).toThrow(/no usable edges/);
  });

  it("rejects non-pair elements", () => {
    expect(() => new Graph([[0, 1, 2] as any])).toThrow(TypeError);
    expect(() => new Graph(["0 1" as any])).toThrow(TypeError);
  });

  it("loads the 12-node three-clique graph", () => {
    const g = new Graph(fig1Edges());
    expect(g.nodeCount).toBe(12);
    expect(g.edgeCount).toBe(21);
  });

  it("throws after release", () => {
    const g = new Graph([[0, 1]]);
    g.release();
    expect(() => g.nodeCount).toThrow(/released/);
  });
});
