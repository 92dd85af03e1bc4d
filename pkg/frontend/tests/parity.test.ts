import { execFileSync } from "node:child_process";
import * as fs from "node:fs";
import * as os from "node:os";
import * as path from "node:path";

import { describe, expect, it } from "vitest";

import { Graph, evolve } from "../src/index.js";
import { fig1Edges, randomEdges } from "./helpers.js";

const CLI = process.env.EVOCD_BIN ?? "evocd";

interface ParityCase {
  name: string;
  edges: Array<[string | number, string | number]>;
  opts: { population: number; generations: number; seed: number };
}

const cases: ParityCase[] = [
  { name: "fig1", edges: fig1Edges(),
    opts: { population: 20, generations: 10, seed: 0 } },
  ...Array.from({ length: 9 }, (_, i) => ({
    name: `random-${i}`,
    edges: randomEdges(12 + 2 * i, 3 * i + 4, 1000 + i),
    opts: { population: 16, generations: 4, seed: i + 1 },
  })),
];

function cliDetect(c: ParityCase): any {
  const dir = fs.mkdtempSync(path.join(os.tmpdir(), "evocd-parity-"));
  try {
    const g = new Graph(c.edges);
    const edgeFile = path.join(dir, "g.edges");
    g.writeEdgeList(edgeFile);
    const prefix = path.join(dir, "out");
    execFileSync(CLI, [
      "detect", edgeFile,
      "--population", String(c.opts.population),
      "--generations", String(c.opts.generations),
      "--seed", String(c.opts.seed),
      "--output", prefix,
    ]);
    return JSON.parse(fs.readFileSync(`${prefix}.json`, "utf-8"));
  } finally {
    fs.rmSync(dir, { recursive: true, force: true });
  }
}

describe("binding/CLI parity", () => {
  for (const c of cases) {
    it(`matches the CLI field-for-field on ${c.name}`, () => {
      const viaBinding = evolve(new Graph(c.edges), c.opts);
      const viaCli = cliDetect(c);

      expect(viaBinding.front).toHaveLength(viaCli.front.length);
      expect(viaBinding.perGenerationBestQ).toEqual(viaCli.per_generation_best_q);

      const nodes: string[] = viaCli.nodes.map(String);
      viaCli.front.forEach((row: any, i: number) => {
        const entry = viaBinding.front[i];
        expect(entry.f1).toBe(row.f1);
        expect(entry.f2).toBe(row.f2);
        expect(entry.Q).toBe(row.Q);
        expect(entry.k).toBe(row.k);
        const dense: number[] = viaCli.partitions[row.labels_ref];
        nodes.forEach((id, v) => expect(entry.labels[id]).toBe(dense[v]));
      });
      expect(viaBinding.best.Q).toBe(viaCli.best.Q);
      expect(viaBinding.best.f1).toBe(viaCli.best.f1);
      expect(viaBinding.best.f2).toBe(viaCli.best.f2);
    }, 120_000);
  }
});
