import { MoveOption } from "./api";
import { BoardController, BoardView } from "./board";
import { groupDigits } from "./format";
import "./style.css";

const PRESETS = ["2,1", "2,2,1", "4,5,0,0,2,0,3,1"];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) {
    node.className = className;
  }
  if (text !== undefined) {
    node.textContent = text;
  }
  return node;
}

function candyStack(size: number): HTMLElement {
  const stack = el("div", "candies");
  for (let i = 0; i < size; i++) {
    stack.appendChild(el("span", "candy", "🍬"));
  }
  if (size === 0) {
    stack.appendChild(el("span", "empty-slot", "·"));
  }
  return stack;
}

class Page {
  private controller: BoardController;
  private board = document.getElementById("board")!;
  private movesPanel = document.getElementById("moves")!;
  private status = document.getElementById("status")!;
  private banner = document.getElementById("banner")!;
  private input = document.getElementById("position-input") as HTMLInputElement;
  private undoButton = document.getElementById("undo") as HTMLButtonElement;
  private playoutButton = document.getElementById("playout") as HTMLButtonElement;

  constructor() {
    this.controller = new BoardController({
      onUpdate: (view) => this.render(view),
      onBanner: (message) => this.showBanner(message),
    });
    document.getElementById("load")!.addEventListener("click", () => {
      void this.controller.load(this.input.value);
    });
    this.input.addEventListener("keydown", (event) => {
      if (event.key === "Enter") {
        void this.controller.load(this.input.value);
      }
    });
    this.undoButton.addEventListener("click", () => this.controller.undo());
    this.playoutButton.addEventListener("click", () => {
      void this.controller.randomPlayout();
    });
    const presets = document.getElementById("presets")!;
    for (const preset of PRESETS) {
      const button = el("button", "preset", `[${preset}]`);
      button.addEventListener("click", () => {
        this.input.value = preset;
        void this.controller.load(preset);
      });
      presets.appendChild(button);
    }
  }

  start(): void {
    this.input.value = PRESETS[1]!;
    void this.controller.load(PRESETS[1]!);
  }

  private showBanner(message: string | null): void {
    this.banner.textContent = message ?? "";
    this.banner.classList.toggle("visible", message !== null);
  }

  private render(view: BoardView): void {
    this.renderBoard(view);
    this.renderMoves(view);
    this.renderStatus(view);
    this.undoButton.disabled = !view.canUndo;
    this.playoutButton.disabled = view.complete;
  }

  private renderBoard(view: BoardView): void {
    this.board.replaceChildren();
    if (view.complete) {
      this.board.appendChild(el("div", "all-done", "All candies eaten! 🎉"));
      return;
    }
    const byIndex = new Map<number, MoveOption>(
      view.moves.map((m) => [m.index, m]),
    );
    view.position.forEach((size, i) => {
      const index = i + 1;
      const pile = el("div", "pile");
      // the freshly swapped pair slides in after a move
      if (view.lastMove !== null && (index === view.lastMove || index === view.lastMove + 1)) {
        pile.classList.add("just-moved");
      }
      pile.appendChild(candyStack(size));
      pile.appendChild(el("div", "pile-size", String(size)));
      const move = byIndex.get(index);
      if (move) {
        const button = el("button", "move-button", "⇄");
        button.title = `swap right and eat one: ${groupDigits(move.count)} ways to finish after this`;
        button.addEventListener("click", () => {
          void this.controller.play(index);
        });
        pile.appendChild(button);
        pile.appendChild(el("div", "move-count", groupDigits(move.count)));
      } else {
        pile.appendChild(el("div", "move-count dim", "—"));
      }
      this.board.appendChild(pile);
    });
  }

  private renderMoves(view: BoardView): void {
    this.movesPanel.replaceChildren();
    for (const move of view.moves) {
      const row = el("div", "move-row");
      row.appendChild(el("span", "move-label", `pile ${move.index}`));
      row.appendChild(
        el("span", "move-target", `→ [${move.position.join(",")}]`),
      );
      row.appendChild(
        el("span", "move-ways", `${groupDigits(move.count)} ways`),
      );
      this.movesPanel.appendChild(row);
    }
  }

  private renderStatus(view: BoardView): void {
    this.status.replaceChildren();
    const facts: [string, string][] = [
      ["candies left", String(view.candiesLeft)],
      ["eaten", String(view.eaten)],
      ["ways from start", groupDigits(view.waysFromStart)],
      ["ways remaining", groupDigits(view.waysRemaining)],
    ];
    for (const [label, value] of facts) {
      const cell = el("div", "fact");
      cell.appendChild(el("div", "fact-label", label));
      cell.appendChild(el("div", "fact-value", value));
      this.status.appendChild(cell);
    }
  }
}

new Page().start();
