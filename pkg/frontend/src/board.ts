import type { Box, Move, SkewMove, SkewState } from "./api.js";
import { Selection, sameBoxes } from "./state.js";

/** Clickable diagram grid. Corner boxes toggle in and out of the selection;
 * anything else ignores clicks. The submit button is enabled only while the
 * selection is a nonempty subset of the current corners. */
export class BoardView {
  root: HTMLElement;
  selection = new Selection();
  submitButton: HTMLButtonElement;
  private grid: HTMLElement;
  private hintMoves: SkewMove[] | null = null;
  private onSubmit: (move: SkewMove) => void;
  private state: SkewState | null = null;

  constructor(root: HTMLElement, onSubmit: (move: SkewMove) => void) {
    this.root = root;
    this.onSubmit = onSubmit;
    this.grid = document.createElement("div");
    this.grid.className = "board-grid";
    this.submitButton = document.createElement("button");
    this.submitButton.textContent = "Nibble!";
    this.submitButton.className = "submit";
    this.submitButton.disabled = true;
    this.submitButton.addEventListener("click", () => {
      if (this.submitButton.disabled || this.selection.isEmpty()) return;
      const move = this.selection.toMove();
      this.selection.clear();
      this.onSubmit(move);
    });
    this.root.append(this.grid, this.submitButton);
  }

  setHint(moves: SkewMove[] | null): void {
    this.hintMoves = moves;
    this.redraw();
  }

  update(state: SkewState, interactive: boolean): void {
    this.state = state;
    this.selection.setCorners(state.corners);
    if (!interactive) this.selection.clear();
    this.hintMoves = null;
    this.redraw(interactive);
  }

  private redraw(interactive = true): void {
    const state = this.state;
    if (!state) return;
    this.grid.replaceChildren();
    if (state.lam.length === 0) {
      this.grid.textContent = "(empty diagram)";
      this.submitButton.disabled = true;
      return;
    }
    const alive = new Set(state.boxes.map(([i, j]) => `${i},${j}`));
    const corners = new Set(state.corners.map(([i, j]) => `${i},${j}`));
    const hinted = new Set<string>();
    for (const move of this.hintMoves ?? []) {
      for (const [i, j] of move) hinted.add(`${i},${j}`);
    }
    const width = state.lam[0];
    this.grid.style.gridTemplateColumns = `repeat(${width}, 2.2em)`;
    for (let i = 1; i <= state.lam.length; i++) {
      for (let j = 1; j <= width; j++) {
        const cell = document.createElement("div");
        const key = `${i},${j}`;
        const inner = state.mu[i - 1] ?? 0;
        cell.dataset.box = key;
        if (j <= inner || j > state.lam[i - 1]) {
          cell.className = "cell void";
        } else if (!alive.has(key)) {
          cell.className = "cell eaten";
        } else if (corners.has(key)) {
          cell.className = "cell corner";
          if (this.selection.has([i, j])) cell.classList.add("selected");
          if (hinted.has(key)) cell.classList.add("hinted");
          if (interactive) {
            cell.addEventListener("click", () => {
              this.selection.toggle([i, j]);
              this.redraw(interactive);
            });
          }
        } else {
          cell.className = "cell box";
          // clicking a non-corner is a no-op: no listener at all
        }
        this.grid.append(cell);
      }
    }
    this.submitButton.disabled = !interactive || this.selection.isEmpty();
  }
}

/** One-line-word view for the permutation families: the current word plus a
 * clickable list of legal target words. */
export class PermView {
  root: HTMLElement;
  private wordRow: HTMLElement;
  private movesRow: HTMLElement;
  private onSubmit: (move: Move) => void;

  constructor(root: HTMLElement, onSubmit: (move: Move) => void) {
    this.root = root;
    this.onSubmit = onSubmit;
    this.wordRow = document.createElement("div");
    this.wordRow.className = "perm-word";
    this.movesRow = document.createElement("div");
    this.movesRow.className = "perm-moves";
    this.root.append(this.wordRow, this.movesRow);
  }

  update(perm: number[], legal: Move[], interactive: boolean, hints: Move[] | null): void {
    this.wordRow.replaceChildren(
      ...perm.map((value) => {
        const tile = document.createElement("span");
        tile.className = "tile";
        tile.textContent = String(value);
        return tile;
      }),
    );
    this.movesRow.replaceChildren();
    for (const move of legal) {
      const chip = document.createElement("button");
      chip.className = "move-chip";
      chip.textContent = (move as number[]).join(" ");
      chip.disabled = !interactive;
      if (hints && hints.some((h) => JSON.stringify(h) === JSON.stringify(move))) {
        chip.classList.add("hinted");
      }
      chip.addEventListener("click", () => this.onSubmit(move));
      this.movesRow.append(chip);
    }
  }
}

export function hintMatchesServer(shown: SkewMove[], server: SkewMove[]): boolean {
  if (shown.length !== server.length) return false;
  return shown.every((move, index) =>
    sameBoxes(move as Box[], server[index] as Box[]),
  );
}
