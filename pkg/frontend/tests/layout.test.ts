import { describe, expect, it, vi } from 'vitest';

import { computeLayout, STACK_THRESHOLD_PX } from '../src/layout.js';
import { FixedTimestepLoop } from '../src/loop.js';

describe('shared-screen layout', () => {
  it('sits side by side on a wide screen', () => {
    const plan = computeLayout(1024);
    expect(plan.mode).toBe('side-by-side');
    expect(plan.panes[0].role).toBe('driver');
    expect(plan.panes[1].role).toBe('navigator');
  });

  it('stacks with role labels on a narrow screen', () => {
    const plan = computeLayout(STACK_THRESHOLD_PX - 1);
    expect(plan.mode).toBe('stacked');
    expect(plan.panes.map((p) => p.label)).toEqual([
      'Player 1 — Driver',
      'Player 2 — Navigator',
    ]);
  });
});

describe('fixed timestep loop', () => {
  it('ticks at the configured rate and never overlaps steps', async () => {
    vi.useFakeTimers();
    let inFlight = 0;
    let maxInFlight = 0;
    let ticks = 0;
    const loop = new FixedTimestepLoop(async () => {
      inFlight += 1;
      maxInFlight = Math.max(maxInFlight, inFlight);
      ticks += 1;
      await Promise.resolve();
      inFlight -= 1;
    }, 10);
    loop.start();
    await vi.advanceTimersByTimeAsync(1000);
    loop.stop();
    vi.useRealTimers();
    expect(ticks).toBe(10);
    expect(maxInFlight).toBe(1);
    expect(loop.running).toBe(false);
  });
});
