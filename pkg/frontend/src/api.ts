// Typed client for the explorer service. All algebra is server-side: the
// client ships strings and integers around, nothing else.

export interface FractionView {
  num: { c: string; e: number[] }[];
  den: number[];
  display: string;
}

export interface SeedView {
  id: string;
  vars: FractionView[];
  matrix: number[][];
  sinks: number[];
  sources: number[];
  history: number[];
  changed?: number[];
}

export interface QuiverSpec {
  type?: string;
  rank?: number;
  cartan?: number[][];
  orientation?: number[][];
}

export interface CatalogEntry {
  name: string;
  spec: QuiverSpec;
}

export class ApiError extends Error {
  constructor(
    public readonly status: number,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class ExplorerApi {
  constructor(private readonly baseUrl: string = "") {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const res = await fetch(this.baseUrl + path, init);
    if (!res.ok) {
      let detail = `HTTP ${res.status}`;
      try {
        const body = (await res.json()) as { detail?: unknown };
        if (body && body.detail !== undefined) detail = String(body.detail);
      } catch {
        // non-JSON error body: keep the status text
      }
      throw new ApiError(res.status, detail);
    }
    return (await res.json()) as T;
  }

  createSession(spec: QuiverSpec): Promise<SeedView> {
    return this.request<SeedView>("/session", {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(spec),
    });
  }

  getSession(id: string): Promise<SeedView> {
    return this.request<SeedView>(`/session/${id}`);
  }

  mutate(id: string, k: number): Promise<SeedView> {
    return this.request<SeedView>(`/session/${id}/mutate`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ k }),
    });
  }

  undo(id: string): Promise<SeedView> {
    return this.request<SeedView>(`/session/${id}/undo`, { method: "POST" });
  }

  catalog(): Promise<{ templates: CatalogEntry[] }> {
    return this.request<{ templates: CatalogEntry[] }>("/catalog/dynkin");
  }
}
