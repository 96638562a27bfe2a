/** Thin fetch client for the annotation backend's JSON API. */

import type {
  AnnotationPayload,
  NextTaskResponse,
  Progress,
  Report,
} from "./types.js";

export class ApiError extends Error {
  constructor(
    readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

async function parseError(response: Response): Promise<ApiError> {
  let detail = response.statusText;
  try {
    const body = (await response.json()) as { error?: string };
    if (body.error) detail = body.error;
  } catch {
    // non-JSON error body; keep the status text
  }
  return new ApiError(response.status, detail);
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  private async get<T>(path: string): Promise<T> {
    const response = await fetch(`${this.baseUrl}${path}`);
    if (!response.ok) throw await parseError(response);
    return (await response.json()) as T;
  }

  nextTask(annotator: string): Promise<NextTaskResponse> {
    const who = encodeURIComponent(annotator);
    return this.get<NextTaskResponse>(`/api/tasks/next?annotator=${who}`);
  }

  async submitAnnotation(payload: AnnotationPayload): Promise<void> {
    const response = await fetch(`${this.baseUrl}/api/annotations`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(payload),
    });
    if (!response.ok) throw await parseError(response);
  }

  report(): Promise<Report> {
    return this.get<Report>("/api/report");
  }

  progress(): Promise<Progress> {
    return this.get<Progress>("/api/progress");
  }
}
