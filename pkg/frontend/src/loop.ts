// Fixed-timestep driver: engine ticks happen at a steady simulated rate no
// matter how fast or slow rendering runs. Rendering only reads snapshots, so
// throttling it cannot change a single digest.

export class FixedTimestepLoop {
  private timer: ReturnType<typeof setInterval> | null = null;
  private stepping = false;

  constructor(
    private stepFn: () => Promise<unknown>,
    private hz = 10,
  ) {}

  start(): void {
    if (this.timer !== null) return;
    const interval = 1000 / this.hz;
    this.timer = setInterval(() => void this.tick(), interval);
  }

  private async tick(): Promise<void> {
    if (this.stepping) return; // never overlap engine steps
    this.stepping = true;
    try {
      await this.stepFn();
    } finally {
      this.stepping = false;
    }
  }

  stop(): void {
    if (this.timer !== null) {
      clearInterval(this.timer);
      this.timer = null;
    }
  }

  get running(): boolean {
    return this.timer !== null;
  }
}
