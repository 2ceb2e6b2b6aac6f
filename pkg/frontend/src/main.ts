// DOM bootstrap: one delegated click handler, re-render by innerHTML swap.

import { ExplorerApi } from "./api.js";
import { ExplorerApp } from "./app.js";

function byId<T extends HTMLElement>(id: string): T {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing #${id}`);
  return el as T;
}

async function bootstrap(): Promise<void> {
  const api = new ExplorerApi("");
  const app = new ExplorerApp(api);
  const stage = byId<HTMLDivElement>("stage");
  const picker = byId<HTMLSelectElement>("quiver-picker");
  const createButton = byId<HTMLButtonElement>("create-session");
  const status = byId<HTMLSpanElement>("status");

  const catalog = await api.catalog();
  for (const entry of catalog.templates) {
    const option = document.createElement("option");
    option.value = entry.name;
    option.textContent = entry.name;
    picker.appendChild(option);
  }

  const redraw = () => {
    stage.innerHTML = app.html();
    status.textContent = app.sessionId
      ? `session ${app.sessionId.slice(0, 8)}… (${app.pendingRequests} pending)`
      : "no session";
  };

  createButton.addEventListener("click", async () => {
    const chosen = catalog.templates.find((t) => t.name === picker.value);
    if (!chosen) return;
    try {
      await app.start(chosen.spec);
    } catch (error) {
      stage.innerHTML = `<div class="error-panel">${String(error)}</div>`;
      return;
    }
    window.location.hash = app.sessionId ?? "";
    redraw();
  });

  // a refresh keeps only the session id (in the hash); GET restores the view
  const fromHash = window.location.hash.replace(/^#/, "");
  if (fromHash) {
    try {
      await app.resume(fromHash);
    } catch {
      window.location.hash = "";
    }
  }

  stage.addEventListener("click", async (event) => {
    const target = event.target as HTMLElement;
    const vertex = target.closest<HTMLElement>("[data-vertex]");
    if (vertex) {
      const k = Number(vertex.dataset.vertex);
      const done = app.clickMutate(k);
      redraw();
      await done;
      redraw();
      return;
    }
    if (target.closest<HTMLElement>("[data-undo]")) {
      await app.clickUndo();
      redraw();
      return;
    }
    const entry = target.closest<HTMLElement>("[data-depth]");
    if (entry) {
      await app.undoToDepth(Number(entry.dataset.depth));
      redraw();
    }
  });

  redraw();
}

bootstrap().catch((error) => {
  document.body.innerHTML = `<pre>failed to start: ${String(error)}</pre>`;
});
