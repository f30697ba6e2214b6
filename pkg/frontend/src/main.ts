import { FixedTimestepLoop } from './loop.js';
import { buildDriverPane, buildNavigatorPane } from './panes.js';
import { computeLayout } from './layout.js';
import { drawDriverPane, drawNavigatorPane, drawOutcome } from './render.js';
import { outcomeScreen } from './screens.js';
import { UiSession } from './session.js';
import { WebSocketTransport } from './transport.js';

// Browser entry: one shared screen, driver controls on the left half,
// navigator controls on the right. The engine runs server-side behind the
// websocket bridge; this file only sends commands and paints snapshots.

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const params = new URLSearchParams(location.search);
  const scenario = params.get('scenario') ?? 'trap';
  const proto = location.protocol === 'https:' ? 'wss' : 'ws';
  const ws = new WebSocket(`${proto}://${location.host}/session?scenario=${scenario}`);

  const statusLine = el<HTMLDivElement>('status');
  ws.onerror = () => {
    statusLine.textContent = 'Could not reach the game engine. Is the server running?';
  };
  ws.onclose = () => {
    if (!session?.snapshot) {
      statusLine.textContent = 'Session closed before it started — check the scenario name.';
    }
  };

  let session: UiSession | null = null;
  await new Promise<void>((resolve, reject) => {
    ws.onopen = () => resolve();
    ws.onerror = () => reject(new Error('websocket failed'));
  }).catch(() => undefined);
  if (ws.readyState !== WebSocket.OPEN) return;

  session = new UiSession(new WebSocketTransport(ws));
  await session.ready();
  statusLine.textContent = `scenario: ${session.hello?.scenario ?? scenario}`;

  const driverCanvas = el<HTMLCanvasElement>('driver');
  const navCanvas = el<HTMLCanvasElement>('navigator');
  const shell = el<HTMLDivElement>('shell');

  function applyLayout(): void {
    const plan = computeLayout(window.innerWidth);
    shell.className = plan.mode;
    el<HTMLDivElement>('driver-label').textContent = plan.panes[0].label;
    el<HTMLDivElement>('navigator-label').textContent = plan.panes[1].label;
    for (const canvas of [driverCanvas, navCanvas]) {
      canvas.width = canvas.clientWidth;
      canvas.height = canvas.clientHeight;
    }
  }
  window.addEventListener('resize', applyLayout);
  applyLayout();

  const loop = new FixedTimestepLoop(
    () => (session!.terminal ? Promise.resolve() : session!.stepOnce()),
    session.hello?.tick_rate_hint ?? 10,
  );
  loop.start();

  function render(): void {
    const snap = session!.snapshot;
    if (snap) {
      const dctx = driverCanvas.getContext('2d')!;
      const nctx = navCanvas.getContext('2d')!;
      drawDriverPane(dctx, buildDriverPane(snap), driverCanvas.width, driverCanvas.height);
      drawNavigatorPane(nctx, buildNavigatorPane(snap), navCanvas.width, navCanvas.height);
      const screen = outcomeScreen(snap);
      if (screen) {
        drawOutcome(dctx, screen, driverCanvas.width, driverCanvas.height);
        drawOutcome(nctx, screen, navCanvas.width, navCanvas.height);
      }
      const noticeBox = el<HTMLDivElement>('notice');
      noticeBox.textContent = session!.notices.length
        ? session!.notices[session!.notices.length - 1]
        : '';
    }
    requestAnimationFrame(render);
  }
  requestAnimationFrame(render);

  // Driver controls: hold-to-brake plus one button per turn direction.
  const brake = el<HTMLButtonElement>('btn-brake');
  const hold = (down: () => void, up: () => void) => {
    brake.addEventListener('pointerdown', (e) => {
      e.preventDefault();
      down();
    });
    for (const evt of ['pointerup', 'pointercancel', 'pointerleave'] as const) {
      brake.addEventListener(evt, () => up());
    }
  };
  hold(
    () => session!.brakeDown(),
    () => session!.brakeUp(),
  );
  el<HTMLButtonElement>('btn-left').addEventListener('click', () => session!.turnRequest('left'));
  el<HTMLButtonElement>('btn-straight').addEventListener('click', () =>
    session!.turnRequest('straight'),
  );
  el<HTMLButtonElement>('btn-right').addEventListener('click', () => session!.turnRequest('right'));

  // Navigator controls.
  el<HTMLButtonElement>('btn-radio').addEventListener('click', () => session!.radioToggle());
  el<HTMLButtonElement>('btn-restart').addEventListener('click', () => void session!.restart());
}

void boot();
