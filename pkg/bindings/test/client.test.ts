import { ChildProcess, spawn } from "node:child_process";
import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";
import { afterAll, beforeAll, describe, expect, test } from "vitest";

import {
  InvalidInputError,
  LengthMismatchError,
  PamiClient,
  ami_score,
  emi_score,
  pami_score,
} from "../src/index.js";

const PORT = 8931;
const BASE_URL = `http://127.0.0.1:${PORT}`;
const here = dirname(fileURLToPath(import.meta.url));

let server: ChildProcess;
const client = new PamiClient(BASE_URL);

function loadFixture<T>(name: string): T {
  return JSON.parse(readFileSync(join(here, "..", "fixtures", name), "utf-8")) as T;
}

/** agreement to 12 significant digits */
function matches12Digits(actual: number, expected: number): boolean {
  if (expected === 0) {
    return Math.abs(actual) <= 1e-12;
  }
  return Math.abs(actual - expected) <= 5e-12 * Math.abs(expected);
}

beforeAll(async () => {
  server = spawn(
    "python3",
    ["-m", "uvicorn", "pamikit.service:app", "--host", "127.0.0.1", "--port", String(PORT)],
    { stdio: "ignore" },
  );
  const deadline = Date.now() + 30_000;
  for (;;) {
    try {
      const health = await client.health();
      if (health.status === "ok") break;
    } catch {
      /* not up yet */
    }
    if (Date.now() > deadline) throw new Error("service did not start");
    await new Promise((resolve) => setTimeout(resolve, 200));
  }
}, 40_000);

afterAll(() => {
  server?.kill();
});

describe("scalar scores", () => {
  test("identical arrays give positive pami, equal to self-information", async () => {
    const labels = [0, 0, 1, 1];
    const score = await client.pamiScore(labels, labels);
    expect(score).toBeCloseTo(0.5 * Math.LN2, 12);
    const qp = await client.pairwiseAdjustedEntropy(labels);
    expect(matches12Digits(score, qp)).toBe(true);
  });

  test("crossed design gives -(1/4) ln 2", async () => {
    const score = await client.pamiScore([0, 0, 1, 1], [0, 1, 0, 1]);
    expect(score).toBeCloseTo(-0.25 * Math.LN2, 12);
  });

  test("constant second array gives zero for both adjusted scores", async () => {
    const a = [0, 0, 1, 1, 2];
    const b = ["c", "c", "c", "c", "c"];
    expect(Math.abs(await client.pamiScore(a, b))).toBeLessThan(1e-12);
    expect(Math.abs(await client.amiScore(a, b))).toBeLessThan(1e-12);
  });

  test("identical singletons give ami 0", async () => {
    const labels = [0, 1, 2, 3];
    expect(Math.abs(await client.amiScore(labels, labels))).toBeLessThan(1e-12);
  });

  test("ami recomposes as mi - emi", async () => {
    const a = [0, 0, 1, 2, 2, 2, 1];
    const b = [1, 0, 1, 2, 2, 0, 1];
    const result = await client.compare(a, b, ["mi", "emi", "ami"]);
    const recomposed = result.metrics.mi - result.metrics.emi;
    expect(Math.abs(result.metrics.ami - recomposed)).toBeLessThan(1e-12);
  });

  test("snake_case aliases delegate to the client", async () => {
    const a = [0, 0, 1, 1];
    expect(await pami_score(client, a, a)).toBe(await client.pamiScore(a, a));
  });
});

describe("error mapping", () => {
  test("length mismatch raises LengthMismatchError", async () => {
    await expect(client.pamiScore([0, 1, 2], [0, 1])).rejects.toBeInstanceOf(
      LengthMismatchError,
    );
  });

  test("empty input raises InvalidInputError", async () => {
    await expect(client.amiScore([], [])).rejects.toBeInstanceOf(InvalidInputError);
  });
});

interface ParityCase {
  labels_a: number[];
  labels_b: number[];
  metrics: Record<string, number>;
}

interface EmiCase {
  labels_a: number[];
  labels_b: number[];
  emi: number;
}

describe("parity with the core CLI", () => {
  const corpus = loadFixture<ParityCase[]>("parity_corpus.json");

  test("pami_score and ami_score match CLI outputs to 12 significant digits", async () => {
    expect(corpus.length).toBe(100);
    for (const item of corpus) {
      const result = await client.compare(item.labels_a, item.labels_b, ["ami", "pami"]);
      expect(matches12Digits(result.metrics.pami, item.metrics.pami)).toBe(true);
      expect(matches12Digits(result.metrics.ami, item.metrics.ami)).toBe(true);
    }
  }, 120_000);
});

describe("parity with the reference expected mutual information", () => {
  const corpus = loadFixture<EmiCase[]>("emi_corpus.json");

  test("emi_score matches scikit-learn EMI within 1e-9", async () => {
    expect(corpus.length).toBe(200);
    for (const item of corpus) {
      const value = await emi_score(client, item.labels_a, item.labels_b);
      expect(Math.abs(value - item.emi)).toBeLessThanOrEqual(1e-9);
    }
  }, 240_000);
});
