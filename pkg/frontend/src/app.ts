// Controller: session id + last fetched view + a render snapshot. No other
// client state exists, so refresh + GET reproduces the identical display.

import { ApiError, ExplorerApi, type QuiverSpec, type SeedView } from "./api.js";
import { layeredLayout, arrowsFromMatrix, type VertexPosition } from "./layout.js";
import { renderMalformed, renderSeedView } from "./render.js";
import { FifoQueue } from "./queue.js";

export class ExplorerApp {
  private view: SeedView | null = null;
  private positions: VertexPosition[] = [];
  private queue = new FifoQueue();
  private lastError: string | null = null;

  constructor(private readonly api: ExplorerApi) {}

  get sessionId(): string | null {
    return this.view ? this.view.id : null;
  }

  get currentView(): SeedView | null {
    return this.view;
  }

  get pendingRequests(): number {
    return this.queue.pending;
  }

  variableDisplays(): string[] {
    return this.view ? this.view.vars.map((v) => v.display) : [];
  }

  async start(spec: QuiverSpec): Promise<void> {
    const view = await this.api.createSession(spec);
    // fixed layout for the whole session, derived from the initial quiver
    this.positions = layeredLayout(
      view.matrix.length,
      arrowsFromMatrix(view.matrix),
      420,
      260,
    );
    this.view = view;
    this.lastError = null;
  }

  async resume(sessionId: string): Promise<void> {
    const view = await this.api.getSession(sessionId);
    this.positions = layeredLayout(
      view.matrix.length,
      arrowsFromMatrix(view.matrix),
      420,
      260,
    );
    this.view = view;
    this.lastError = null;
  }

  private adopt(view: SeedView): void {
    this.view = view;
    this.lastError = null;
  }

  private recordError(error: unknown): void {
    // surface inline, keep the last good view on screen
    this.lastError =
      error instanceof ApiError
        ? `${error.status}: ${error.message}`
        : String(error);
  }

  clickMutate(k: number): Promise<void> {
    return this.queue.enqueue(async () => {
      if (!this.view) return;
      try {
        this.adopt(await this.api.mutate(this.view.id, k));
      } catch (error) {
        this.recordError(error);
      }
    });
  }

  clickUndo(): Promise<void> {
    return this.queue.enqueue(async () => {
      if (!this.view) return;
      try {
        this.adopt(await this.api.undo(this.view.id));
      } catch (error) {
        this.recordError(error);
      }
    });
  }

  // history entry at `depth` clicked: rewind to before that step by
  // repeated single undos (keeps the service API minimal)
  undoToDepth(depth: number): Promise<void> {
    return this.queue.enqueue(async () => {
      if (!this.view) return;
      try {
        let steps = this.view.history.length - depth;
        while (steps > 0) {
          this.adopt(await this.api.undo(this.view!.id));
          steps -= 1;
        }
      } catch (error) {
        this.recordError(error);
      }
    });
  }

  async settled(): Promise<void> {
    await this.queue.drained();
  }

  html(): string {
    if (!this.view) {
      return `<div class="placeholder">pick a quiver and create a session</div>`;
    }
    if (!Array.isArray(this.view.vars) || !Array.isArray(this.view.matrix)) {
      return renderMalformed("seed view is missing vars or matrix");
    }
    return renderSeedView(this.view, this.positions, this.lastError);
  }
}
