/** Typed client for the counting service. Counts stay decimal strings
 * end to end; the server is the single source of truth for every number
 * shown in the UI. */

export interface MoveOption {
  index: number;
  position: number[];
  count: string;
}

export interface PositionReport {
  position: number[];
  total: number;
  count: string;
  moves: MoveOption[];
}

export interface SampledPlay {
  play: number[][];
}

export class ApiError extends Error {
  status: number;

  constructor(status: number, message: string) {
    super(message);
    this.name = "ApiError";
    this.status = status;
  }
}

export type FetchLike = (url: string) => Promise<Response>;

/** Wire form of a position: "2,2,1", or "[]" for the finished board. */
export function positionText(piles: number[]): string {
  return piles.length ? piles.join(",") : "[]";
}

async function getJson<T>(url: string, fetchImpl: FetchLike): Promise<T> {
  let response: Response;
  try {
    response = await fetchImpl(url);
  } catch (error) {
    throw new ApiError(0, `cannot reach the counting service (${String(error)})`);
  }
  if (!response.ok) {
    const body = (await response.json().catch(() => ({}))) as { error?: string };
    throw new ApiError(response.status, body.error ?? `HTTP ${response.status}`);
  }
  return (await response.json()) as T;
}

export function fetchPosition(
  pos: string,
  fetchImpl: FetchLike = fetch,
): Promise<PositionReport> {
  return getJson(`/api/position?pos=${encodeURIComponent(pos)}`, fetchImpl);
}

export function fetchSample(
  pos: string,
  seed?: number,
  fetchImpl: FetchLike = fetch,
): Promise<SampledPlay> {
  const query = seed === undefined ? "" : `&seed=${seed}`;
  return getJson(`/api/sample?pos=${encodeURIComponent(pos)}${query}`, fetchImpl);
}
