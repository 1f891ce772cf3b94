import { z } from "zod";

export type Label = number | string;
export type LabelArray = readonly Label[];

export type MetricName = "mi" | "vi" | "ami" | "pami" | "pami-sparse" | "emi";

export class LengthMismatchError extends Error {}
export class InvalidInputError extends Error {}

const compareResponseSchema = z.object({
  n: z.number().int(),
  k: z.number().int(),
  l: z.number().int(),
  metrics: z.record(z.number()),
});

const infoResponseSchema = z.object({
  n: z.number().int(),
  k: z.number().int(),
  entropy: z.number(),
  adjusted_entropy: z.number(),
  pairwise_adjusted_entropy: z.number(),
});

const healthSchema = z.object({
  status: z.string(),
  version: z.string(),
});

export type CompareResult = z.infer<typeof compareResponseSchema>;
export type InfoResult = z.infer<typeof infoResponseSchema>;

/** HTTP client for a running pamikit metrics service. */
export class PamiClient {
  constructor(private readonly baseUrl: string = "http://127.0.0.1:8000") {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
  }

  async health(): Promise<z.infer<typeof healthSchema>> {
    const resp = await fetch(`${this.baseUrl}/health`);
    return healthSchema.parse(await resp.json());
  }

  async compare(
    labelsA: LabelArray,
    labelsB: LabelArray,
    metrics?: readonly MetricName[],
  ): Promise<CompareResult> {
    const body: Record<string, unknown> = {
      labels_a: labelsA,
      labels_b: labelsB,
    };
    if (metrics !== undefined) {
      body.metrics = metrics;
    }
    const raw = await this.post("/metrics/compare", body);
    return compareResponseSchema.parse(raw);
  }

  async info(labels: LabelArray): Promise<InfoResult> {
    const raw = await this.post("/metrics/info", { labels });
    return infoResponseSchema.parse(raw);
  }

  async miScore(a: LabelArray, b: LabelArray): Promise<number> {
    return this.single(a, b, "mi");
  }

  async viScore(a: LabelArray, b: LabelArray): Promise<number> {
    return this.single(a, b, "vi");
  }

  async amiScore(a: LabelArray, b: LabelArray): Promise<number> {
    return this.single(a, b, "ami");
  }

  async pamiScore(a: LabelArray, b: LabelArray): Promise<number> {
    return this.single(a, b, "pami");
  }

  async emiScore(a: LabelArray, b: LabelArray): Promise<number> {
    return this.single(a, b, "emi");
  }

  async pairwiseAdjustedEntropy(labels: LabelArray): Promise<number> {
    const result = await this.info(labels);
    return result.pairwise_adjusted_entropy;
  }

  private async single(a: LabelArray, b: LabelArray, metric: MetricName): Promise<number> {
    const result = await this.compare(a, b, [metric]);
    return result.metrics[metric];
  }

  private async post(endpoint: string, body: unknown): Promise<unknown> {
    const resp = await fetch(`${this.baseUrl}${endpoint}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (resp.status === 400) {
      const payload = (await resp.json()) as {
        detail?: { code?: string; message?: string };
      };
      const code = payload.detail?.code;
      const message = payload.detail?.message ?? "bad request";
      if (code === "length_mismatch") {
        throw new LengthMismatchError(message);
      }
      throw new InvalidInputError(message);
    }
    if (!resp.ok) {
      throw new Error(`${endpoint} failed with status ${resp.status}`);
    }
    return resp.json();
  }
}

/* snake_case aliases mirroring the service's metric names */
export const pami_score = (c: PamiClient, a: LabelArray, b: LabelArray) => c.pamiScore(a, b);
export const ami_score = (c: PamiClient, a: LabelArray, b: LabelArray) => c.amiScore(a, b);
export const emi_score = (c: PamiClient, a: LabelArray, b: LabelArray) => c.emiScore(a, b);
export const mi_score = (c: PamiClient, a: LabelArray, b: LabelArray) => c.miScore(a, b);
export const vi_score = (c: PamiClient, a: LabelArray, b: LabelArray) => c.viScore(a, b);
export const pairwise_adjusted_entropy = (c: PamiClient, a: LabelArray) =>
  c.pairwiseAdjustedEntropy(a);
