import { spawn, type ChildProcessWithoutNullStreams } from 'node:child_process';
import { createInterface } from 'node:readline';

import type { InboundRecord, OutboundRecord } from './protocol.js';
import type { Transport } from './transport.js';

// Node-side transport: run `evac session <scenario>` and speak NDJSON over
// its stdio. This is what the e2e tests use, and what server.mjs wraps for
// the browser.
export class StdioTransport implements Transport {
  private child: ChildProcessWithoutNullStreams;
  private handlers: ((record: InboundRecord) => void)[] = [];
  readonly stderr: string[] = [];

  constructor(scenarioPath: string, command = process.env.EVAC_CMD ?? 'evac') {
    this.child = spawn(command, ['session', scenarioPath], { stdio: 'pipe' });
    const lines = createInterface({ input: this.child.stdout });
    lines.on('line', (line) => {
      if (!line.trim()) return;
      const record = JSON.parse(line) as InboundRecord;
      for (const h of this.handlers) h(record);
    });
    const errLines = createInterface({ input: this.child.stderr });
    errLines.on('line', (line) => this.stderr.push(line));
  }

  send(record: OutboundRecord): void {
    this.child.stdin.write(JSON.stringify(record) + '\n');
  }

  onRecord(cb: (record: InboundRecord) => void): void {
    this.handlers.push(cb);
  }

  close(): void {
    try {
      this.send({ type: 'quit' });
    } catch {
      // already gone
    }
    this.child.stdin.end();
  }

  exited(): Promise<number | null> {
    return new Promise((resolve) => this.child.on('exit', resolve));
  }
}
