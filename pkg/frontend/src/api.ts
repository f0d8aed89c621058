export type Box = [number, number];
export type SkewMove = Box[];
export type PermMove = number[];
export type Move = SkewMove | PermMove;

export interface SkewState {
  family: "skew";
  lam: number[];
  mu: number[];
  boxes: Box[];
  corners: Box[];
}

export interface PermState {
  family: "tamari" | "weak";
  n: number;
  perm: number[];
}

export type GameState = SkewState | PermState;

export interface HistoryEntry {
  by: "human" | "engine";
  move: Move;
}

export interface SessionView {
  id: string;
  state: GameState;
  legal_moves: Move[];
  status: "ongoing" | "human_won" | "engine_won";
  turn: "human" | "engine" | null;
  history: HistoryEntry[];
  engine_reply?: Move | null;
}

export interface CreateParams {
  family: string;
  lam?: number[];
  mu?: number[];
  n?: number;
  engine_first?: boolean;
}

export class IllegalMoveError extends Error {
  legal: Move[];
  constructor(legal: Move[]) {
    super("illegal move");
    this.legal = legal;
  }
}

export class Api {
  baseUrl: string;

  constructor(baseUrl: string) {
    this.baseUrl = baseUrl.endsWith("/") ? baseUrl.slice(0, -1) : baseUrl;
  }

  async createSession(params: CreateParams): Promise<SessionView> {
    const response = await fetch(`${this.baseUrl}/session`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(params),
    });
    if (!response.ok) {
      throw new Error(`create failed: ${response.status}`);
    }
    return (await response.json()) as SessionView;
  }

  async move(sessionId: string, move: Move): Promise<SessionView> {
    const response = await fetch(`${this.baseUrl}/session/${sessionId}/move`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ move }),
    });
    if (response.status === 422) {
      const body = await response.json();
      throw new IllegalMoveError(body.detail.legal_moves as Move[]);
    }
    if (!response.ok) {
      throw new Error(`move failed: ${response.status}`);
    }
    return (await response.json()) as SessionView;
  }

  async view(sessionId: string): Promise<SessionView> {
    const response = await fetch(`${this.baseUrl}/session/${sessionId}`);
    if (!response.ok) {
      throw new Error(`view failed: ${response.status}`);
    }
    return (await response.json()) as SessionView;
  }

  async hint(sessionId: string): Promise<Move[]> {
    const response = await fetch(`${this.baseUrl}/session/${sessionId}/hint`);
    if (!response.ok) {
      throw new Error(`hint failed: ${response.status}`);
    }
    const body = await response.json();
    return body.winning_moves as Move[];
  }
}
