// Wire types for the engine session boundary. The UI only ever sees these
// records; it never reads engine internals.

export type Turn = 'left' | 'straight' | 'right';

export type CommandKind = 'brake_down' | 'brake_up' | 'turn_request' | 'radio_toggle';

export interface CommandRecord {
  type: 'command';
  payload: { kind: CommandKind; turn?: Turn };
  wt: number; // wall time, logged by the host and ignored for determinism
}

export interface StepRecord {
  type: 'step';
}

export interface RestartRecord {
  type: 'restart';
}

export interface ExportReplayRecord {
  type: 'export_replay';
  payload: { path: string };
}

export interface QuitRecord {
  type: 'quit';
}

export type OutboundRecord =
  | CommandRecord
  | StepRecord
  | RestartRecord
  | ExportReplayRecord
  | QuitRecord;

export interface HelloRecord {
  type: 'hello';
  v: number;
  scenario: string;
  radio_available: boolean;
  tick_rate_hint: number;
}

export interface MapVehicle {
  edge: string;
  from: string;
  offset: number;
}

export interface SnapshotMap {
  nodes: [string, number, number][];
  edges: [string, string, string, number][];
  exit: string;
  shelters: string[];
  vehicle: MapVehicle;
  known_closed: string[];
}

export interface LogEntry {
  id: string;
  channel: 'text' | 'radio';
  tick: number;
  kind: string;
  edge: string | null;
  deadline: number | null;
  text: string | null;
}

export interface SnapshotRecord {
  type: 'snapshot';
  v: number;
  tick: number;
  driver: {
    heading: string;
    speed: number;
    brake_held: boolean;
    forced_stop: boolean;
    waiting: boolean;
    distance_to_intersection: number;
    brake_lights: boolean;
    emergency_behind: boolean;
    smoke: string | null;
    signals_out: boolean;
  };
  navigator: {
    map: SnapshotMap;
    log: LogEntry[];
    radio_on: boolean;
    radio_available: boolean;
    shelter: { deadline: number; remaining: number } | null;
  };
  outcome: { status: 'in_progress' | 'win' | 'lose'; reason: string | null };
  digest: string;
}

export interface NoticeRecord {
  type: 'notice';
  message: string;
}

export interface ReplaySavedRecord {
  type: 'replay_saved';
  path: string;
}

export interface ErrorRecord {
  type: 'error';
  message: string;
}

export type InboundRecord =
  | HelloRecord
  | SnapshotRecord
  | NoticeRecord
  | ReplaySavedRecord
  | ErrorRecord;
