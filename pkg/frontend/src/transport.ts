import type { InboundRecord, OutboundRecord } from './protocol.js';

// One interface, two homes: node tests spawn the engine directly over stdio,
// the browser talks to the same process through the websocket bridge.
export interface Transport {
  send(record: OutboundRecord): void;
  onRecord(cb: (record: InboundRecord) => void): void;
  close(): void;
}

export class WebSocketTransport implements Transport {
  private handlers: ((record: InboundRecord) => void)[] = [];

  constructor(private ws: WebSocket) {
    ws.onmessage = (ev) => {
      const record = JSON.parse(String(ev.data)) as InboundRecord;
      for (const h of this.handlers) h(record);
    };
  }

  send(record: OutboundRecord): void {
    this.ws.send(JSON.stringify(record));
  }

  onRecord(cb: (record: InboundRecord) => void): void {
    this.handlers.push(cb);
  }

  close(): void {
    this.ws.close();
  }
}
