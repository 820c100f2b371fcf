// Thin typed client for the motionforge service. All numerical work happens
// server-side; this module only moves documents.

import {
  FactorizeResponse,
  InterpolateResponse,
  MotionDocument,
  SampleResponse,
  ServiceError,
  ServiceErrorBody,
  TaskDocument,
} from "./types.js";

async function post<T>(url: string, body: unknown): Promise<T> {
  let response: Response;
  try {
    response = await fetch(url, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(body),
    });
  } catch (err) {
    throw new ServiceError("UNREACHABLE", String(err), 0);
  }
  const payload = await response.json();
  if (!response.ok) {
    const failure = payload as ServiceErrorBody;
    throw new ServiceError(
      failure.error?.code ?? "INTERNAL",
      failure.error?.message ?? "service failure",
      response.status,
    );
  }
  return payload as T;
}

export class MotionForgeClient {
  readonly baseUrl: string;

  constructor(baseUrl = "http://127.0.0.1:8720") {
    this.baseUrl = baseUrl.replace(/\/$/, "");
  }

  async health(): Promise<boolean> {
    try {
      const response = await fetch(`${this.baseUrl}/api/health`);
      if (!response.ok) return false;
      const body = await response.json();
      return body.status === "ok";
    } catch {
      return false;
    }
  }

  interpolate(task: TaskDocument): Promise<InterpolateResponse> {
    return post(`${this.baseUrl}/api/interpolate`, task);
  }

  factorize(motion: MotionDocument): Promise<FactorizeResponse> {
    return post(`${this.baseUrl}/api/factorize`, { motion });
  }

  sampleSweep(
    motion: MotionDocument,
    count: number,
    range: [number, number],
  ): Promise<SampleResponse> {
    return post(`${this.baseUrl}/api/sample`, { motion, count, range });
  }

  sampleAt(motion: MotionDocument, at: number[]): Promise<SampleResponse> {
    return post(`${this.baseUrl}/api/sample`, { motion, at });
  }
}
