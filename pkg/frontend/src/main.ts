import { HttpClient } from "./client.js";
import { CollectionDoc, setKey } from "./protocol.js";
import { buildScene, sceneToSvg } from "./render.js";
import { describeError, ExplorerSession } from "./session.js";

const DEFAULT_DOC: CollectionDoc = {
  version: "1",
  kind: "collection",
  n: 4,
  k: 2,
  sets: [
    [1, 2],
    [1, 3],
    [2, 3],
    [1, 4],
    [3, 4],
  ],
  necklace: [
    [1, 2],
    [2, 3],
    [3, 4],
    [1, 4],
  ],
};

const $ = <T extends HTMLElement>(id: string): T => {
  const el = document.getElementById(id);
  if (!el) throw new Error(`missing element #${id}`);
  return el as T;
};

function serviceBase(): string {
  const params = new URLSearchParams(window.location.search);
  return params.get("service") ?? "http://127.0.0.1:8642";
}

const session = new ExplorerSession(new HttpClient(serviceBase()));

function showBanner(message: string, isError: boolean): void {
  const banner = $("banner");
  banner.textContent = message;
  banner.className = isError ? "banner error" : "banner info";
  banner.style.display = message ? "block" : "none";
}

function renderHistory(): void {
  const list = $("history");
  list.innerHTML = "";
  for (const entry of session.history) {
    const li = document.createElement("li");
    li.textContent = `-${setKey(entry.site.removes)}  +${setKey(entry.site.adds)}`;
    list.appendChild(li);
  }
  ($("undo") as HTMLButtonElement).disabled = session.history.length === 0;
}

function renderView(): void {
  if (!session.tiling) return;
  const scene = buildScene(session.tiling, session.highlightedKeys());
  const holder = $("view");
  holder.innerHTML = sceneToSvg(scene);
  holder.querySelectorAll<SVGCircleElement>("circle.mutable").forEach((circle) => {
    circle.style.cursor = "pointer";
    circle.addEventListener("click", () => {
      const key = circle.dataset.key;
      if (key) void mutate(key);
    });
  });
  $("status").textContent =
    `n=${session.doc?.n}, k=${session.doc?.k}, ` +
    `${session.doc?.sets.length} sets, ${session.sites.length} mutable`;
  renderHistory();
}

function lockUi(locked: boolean): void {
  document.body.classList.toggle("busy", locked);
  ($("load") as HTMLButtonElement).disabled = locked;
  ($("undo") as HTMLButtonElement).disabled = locked || session.history.length === 0;
}

async function run(work: () => Promise<void>): Promise<void> {
  if (session.busy) return;
  lockUi(true);
  try {
    await work();
    showBanner("", false);
    renderView();
  } catch (err) {
    showBanner(describeError(err), true);
    renderHistory();
  } finally {
    lockUi(false);
  }
}

async function mutate(key: string): Promise<void> {
  await run(() => session.clickMutate(key));
}

function install(): void {
  const input = $("doc") as HTMLTextAreaElement;
  input.value = JSON.stringify(DEFAULT_DOC, null, 1);

  $("load").addEventListener("click", () => {
    void run(async () => {
      let doc: CollectionDoc;
      try {
        doc = JSON.parse(input.value) as CollectionDoc;
      } catch (err) {
        throw new Error(`document is not valid JSON: ${err}`);
      }
      await session.load(doc);
    });
  });

  $("undo").addEventListener("click", () => {
    void run(() => session.undo());
  });
}

install();
