import type {
  HelloRecord,
  InboundRecord,
  ReplaySavedRecord,
  SnapshotRecord,
  Turn,
} from './protocol.js';
import type { Transport } from './transport.js';

// The UI-side session: queues player commands, drives engine ticks, and
// keeps the latest snapshot. Commands sent between two ticks are coalesced
// by the host into exactly one input frame, so nothing here needs to batch.
export class UiSession {
  private transport: Transport;
  private helloRecord: HelloRecord | null = null;
  private snapshots: SnapshotRecord[] = [];
  private snapshotWaiters: ((s: SnapshotRecord) => void)[] = [];
  private exportWaiters: ((r: ReplaySavedRecord) => void)[] = [];
  readonly notices: string[] = [];
  readonly errors: string[] = [];

  constructor(transport: Transport) {
    this.transport = transport;
    transport.onRecord((record) => this.dispatch(record));
  }

  private dispatch(record: InboundRecord): void {
    switch (record.type) {
      case 'hello':
        this.helloRecord = record;
        break;
      case 'snapshot':
        this.snapshots.push(record);
        this.snapshotWaiters.splice(0).forEach((w) => w(record));
        break;
      case 'notice':
        this.notices.push(record.message);
        break;
      case 'replay_saved':
        this.exportWaiters.splice(0).forEach((w) => w(record));
        break;
      case 'error':
        this.errors.push(record.message);
        break;
    }
  }

  private nextSnapshot(): Promise<SnapshotRecord> {
    return new Promise((resolve) => this.snapshotWaiters.push(resolve));
  }

  /** Resolves once the host has said hello and rendered tick 0. */
  async ready(): Promise<SnapshotRecord> {
    if (this.snapshots.length > 0) return this.snapshots[0];
    return this.nextSnapshot();
  }

  get hello(): HelloRecord | null {
    return this.helloRecord;
  }

  get snapshot(): SnapshotRecord | null {
    return this.snapshots.length ? this.snapshots[this.snapshots.length - 1] : null;
  }

  get allSnapshots(): readonly SnapshotRecord[] {
    return this.snapshots;
  }

  get terminal(): boolean {
    const s = this.snapshot;
    return s !== null && s.outcome.status !== 'in_progress';
  }

  // -- player commands -----------------------------------------------------

  brakeDown(): void {
    this.command('brake_down');
  }

  brakeUp(): void {
    this.command('brake_up');
  }

  turnRequest(turn: Turn): void {
    this.transport.send({ type: 'command', payload: { kind: 'turn_request', turn }, wt: Date.now() });
  }

  radioToggle(): void {
    this.command('radio_toggle');
  }

  private command(kind: 'brake_down' | 'brake_up' | 'radio_toggle'): void {
    this.transport.send({ type: 'command', payload: { kind }, wt: Date.now() });
  }

  /** Advance the engine exactly one tick and wait for its snapshot. */
  async stepOnce(): Promise<SnapshotRecord> {
    const p = this.nextSnapshot();
    this.transport.send({ type: 'step' });
    return p;
  }

  async restart(): Promise<SnapshotRecord> {
    const p = this.nextSnapshot();
    this.transport.send({ type: 'restart' });
    return p;
  }

  async exportReplay(path: string): Promise<string> {
    const p = new Promise<ReplaySavedRecord>((resolve) => this.exportWaiters.push(resolve));
    this.transport.send({ type: 'export_replay', payload: { path } });
    return (await p).path;
  }

  close(): void {
    this.transport.close();
  }
}
