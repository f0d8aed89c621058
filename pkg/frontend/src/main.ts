import { Api, IllegalMoveError, Move, SessionView, SkewMove, SkewState } from "./api.js";
import { BoardView, PermView } from "./board.js";

export interface AppElements {
  board: HTMLElement;
  status: HTMLElement;
  hintButton: HTMLButtonElement;
  hintBanner: HTMLElement;
  newGameForm: HTMLFormElement | null;
}

/** Page controller: one session at a time, all transitions through the
 * server.  The app never submits a move that is not in the server's legal
 * list (the board can only select corner subsets and the permutation view
 * only offers the listed moves); the server's 422 echo is still handled in
 * case of a race with an engine reply. */
export class App {
  api: Api;
  els: AppElements;
  session: SessionView | null = null;
  board: BoardView;
  perm: PermView;
  hintShown = false;
  busy = false;

  constructor(api: Api, els: AppElements) {
    this.api = api;
    this.els = els;
    this.board = new BoardView(els.board, (move) => void this.submit(move));
    this.perm = new PermView(els.board, (move) => void this.submit(move));
    els.hintButton.addEventListener("click", () => void this.toggleHint());
  }

  async newGame(params: { family: string; lam?: number[]; mu?: number[]; n?: number; engine_first?: boolean }): Promise<void> {
    this.session = await this.api.createSession(params);
    this.hintShown = false;
    this.render();
  }

  interactive(): boolean {
    return (
      !this.busy &&
      this.session !== null &&
      this.session.status === "ongoing" &&
      this.session.turn === "human"
    );
  }

  async submit(move: Move): Promise<void> {
    if (!this.session || !this.interactive()) return;
    const legal = this.session.legal_moves.map((m) => JSON.stringify(m));
    if (!legal.includes(JSON.stringify(move))) {
      // client-side guard: never send a move outside the server's list
      this.els.status.textContent = "that move is not legal";
      return;
    }
    this.busy = true;
    try {
      this.session = await this.api.move(this.session.id, move);
      this.hintShown = false;
    } catch (err) {
      if (err instanceof IllegalMoveError) {
        this.els.status.textContent = `illegal move; legal: ${JSON.stringify(err.legal)}`;
      } else {
        this.els.status.textContent = `network error: ${String(err)} (retry)`;
      }
    } finally {
      this.busy = false;
    }
    this.render();
  }

  async toggleHint(): Promise<void> {
    if (!this.session) return;
    if (this.hintShown) {
      this.hintShown = false;
      this.board.setHint(null);
      this.els.hintBanner.textContent = "";
      this.render();
      return;
    }
    const moves = await this.api.hint(this.session.id);
    this.hintShown = true;
    if (this.session.state.family === "skew") {
      this.board.setHint(moves as SkewMove[]);
    }
    this.els.hintBanner.textContent =
      moves.length === 0 ? "no winning move" : `${moves.length} winning move(s) highlighted`;
    this.renderPermIfNeeded(moves);
  }

  private renderPermIfNeeded(hints: Move[] | null = null): void {
    const session = this.session;
    if (!session || session.state.family === "skew") return;
    this.perm.update(
      session.state.perm,
      session.legal_moves,
      this.interactive(),
      hints,
    );
  }

  render(): void {
    const session = this.session;
    if (!session) return;
    if (session.state.family === "skew") {
      this.board.update(session.state as SkewState, this.interactive());
    } else {
      this.renderPermIfNeeded();
    }
    const statusText = {
      ongoing: session.turn === "human" ? "your move" : "engine thinking",
      human_won: "you win: the engine cannot make a nontrivial move",
      engine_won: "engine wins: you cannot make a nontrivial move",
    }[session.status];
    this.els.status.textContent = statusText;
    if (!this.hintShown) this.els.hintBanner.textContent = "";
  }
}

export function mount(root: Document, baseUrl: string): App {
  const els: AppElements = {
    board: root.getElementById("board") as HTMLElement,
    status: root.getElementById("status") as HTMLElement,
    hintButton: root.getElementById("hint-button") as HTMLButtonElement,
    hintBanner: root.getElementById("hint-banner") as HTMLElement,
    newGameForm: root.getElementById("new-game") as HTMLFormElement | null,
  };
  const app = new App(new Api(baseUrl), els);
  els.newGameForm?.addEventListener("submit", (event) => {
    event.preventDefault();
    const data = new FormData(els.newGameForm as HTMLFormElement);
    const family = String(data.get("family") ?? "skew");
    const lam = String(data.get("lam") ?? "")
      .split(",")
      .map((value) => parseInt(value.trim(), 10))
      .filter((value) => !Number.isNaN(value));
    const n = parseInt(String(data.get("n") ?? ""), 10);
    void app.newGame({
      family,
      lam: family === "skew" ? lam : undefined,
      n: Number.isNaN(n) ? undefined : n,
    });
  });
  return app;
}
