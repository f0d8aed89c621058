import type { Box, HistoryEntry, SkewMove } from "./api.js";

const keyOf = (box: Box) => `${box[0]},${box[1]}`;

/** Selection of corner boxes for the next move. Only boxes in the current
 * legal corner set can ever enter the selection. */
export class Selection {
  private corners = new Set<string>();
  private chosen = new Set<string>();

  setCorners(corners: Box[]): void {
    this.corners = new Set(corners.map(keyOf));
    for (const key of [...this.chosen]) {
      if (!this.corners.has(key)) this.chosen.delete(key);
    }
  }

  /** Toggle a box; returns false (and does nothing) unless it is a corner. */
  toggle(box: Box): boolean {
    const key = keyOf(box);
    if (!this.corners.has(key)) return false;
    if (this.chosen.has(key)) this.chosen.delete(key);
    else this.chosen.add(key);
    return true;
  }

  has(box: Box): boolean {
    return this.chosen.has(keyOf(box));
  }

  isEmpty(): boolean {
    return this.chosen.size === 0;
  }

  clear(): void {
    this.chosen.clear();
  }

  /** The selected corner set as a server move (sorted for canonical form). */
  toMove(): SkewMove {
    const boxes = [...this.chosen].map((key) => {
      const [i, j] = key.split(",").map(Number);
      return [i, j] as Box;
    });
    boxes.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
    return boxes;
  }
}

/** All boxes of the diagram lam \ mu. */
export function skewBoxes(lam: number[], mu: number[]): Box[] {
  const out: Box[] = [];
  lam.forEach((rowLen, index) => {
    const inner = mu[index] ?? 0;
    for (let j = inner + 1; j <= rowLen; j++) out.push([index + 1, j]);
  });
  return out;
}

/** Replay a finished game's history from the start position; returns the
 * surviving boxes. Used to check the displayed final state. */
export function replaySkew(
  lam: number[],
  mu: number[],
  history: HistoryEntry[],
): Box[] {
  const alive = new Set(skewBoxes(lam, mu).map(keyOf));
  for (const entry of history) {
    for (const box of entry.move as SkewMove) {
      const key = keyOf(box as Box);
      if (!alive.has(key)) {
        throw new Error(`replay removed a missing box ${key}`);
      }
      alive.delete(key);
    }
  }
  return [...alive]
    .map((key) => key.split(",").map(Number) as Box)
    .sort((a, b) => a[0] - b[0] || a[1] - b[1]);
}

/** Final permutation after replaying a one-line-word game. */
export function replayPerm(start: number[], history: HistoryEntry[]): number[] {
  let current = start;
  for (const entry of history) current = entry.move as number[];
  return current;
}

export function sameBoxes(a: Box[], b: Box[]): boolean {
  if (a.length !== b.length) return false;
  const as = a.map(keyOf).sort();
  const bs = b.map(keyOf).sort();
  return as.every((value, index) => value === bs[index]);
}
