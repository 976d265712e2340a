/**
 * Typed client for the check service.
 *
 * The service is stateless, so every call carries everything it needs;
 * the only endpoints are the exercise catalog and POST /api/check.
 */

import { encodeTree, type CheckResponse, type ProofTree } from "./tree.js";

export interface Exercise {
  readonly id: string;
  readonly title: string;
  readonly description: string;
  readonly goals: readonly string[];
}

export class ApiError extends Error {
  constructor(readonly status: number, message: string) {
    super(message);
    this.name = "ApiError";
  }
}

async function errorMessage(response: Response): Promise<string> {
  try {
    const body = (await response.json()) as { error?: string };
    if (typeof body.error === "string") {
      return body.error;
    }
  } catch {
    // fall through to the generic message
  }
  return `request failed with status ${response.status}`;
}

export class Api {
  constructor(
    private readonly base: string = "",
    private readonly fetchFn: typeof fetch = (...args) => fetch(...args),
  ) {}

  private async get(path: string): Promise<unknown> {
    const response = await this.fetchFn(this.base + path);
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    return response.json();
  }

  async exercises(): Promise<Exercise[]> {
    const body = (await this.get("/api/exercises")) as {
      exercises: Exercise[];
    };
    return body.exercises;
  }

  async exercise(id: string): Promise<Exercise> {
    return (await this.get(
      `/api/exercises/${encodeURIComponent(id)}`,
    )) as Exercise;
  }

  async check(
    exerciseId: string,
    trees: readonly ProofTree[],
  ): Promise<CheckResponse> {
    const body = {
      exercise_id: exerciseId,
      trees: trees.map(encodeTree),
    };
    const response = await this.fetchFn(this.base + "/api/check", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(body),
    });
    if (!response.ok) {
      throw new ApiError(response.status, await errorMessage(response));
    }
    return (await response.json()) as CheckResponse;
  }
}
