import type { DriverPane, NavigatorPane } from './panes.js';
import type { OutcomeScreen } from './screens.js';

// Canvas painting. Deliberately plain: the driver pane is a stylized road
// strip with indicator badges, the navigator pane is the phone map. All
// content comes from the pane view models.

const ROAD = '#3b3f46';
const ROAD_CLOSED = '#b3433b';
const BACKDROP = '#14161a';
const INK = '#e8e8f0';

export function drawDriverPane(
  ctx: CanvasRenderingContext2D,
  pane: DriverPane,
  w: number,
  h: number,
): void {
  ctx.fillStyle = BACKDROP;
  ctx.fillRect(0, 0, w, h);

  // Road strip with dashed center line; dash offset conveys motion.
  const roadW = Math.min(w * 0.5, 240);
  ctx.fillStyle = ROAD;
  ctx.fillRect((w - roadW) / 2, 0, roadW, h);
  ctx.strokeStyle = '#d9c13c';
  ctx.lineWidth = 4;
  ctx.setLineDash([18, 22]);
  ctx.lineDashOffset = pane.moving ? -(Date.now() / 20) % 40 : 0;
  ctx.beginPath();
  ctx.moveTo(w / 2, 0);
  ctx.lineTo(w / 2, h);
  ctx.stroke();
  ctx.setLineDash([]);

  // Upcoming intersection marker scales with distance.
  const dist = Math.max(0, Math.min(pane.distanceToIntersection, 12));
  const y = 40 + (dist / 12) * (h * 0.45);
  ctx.fillStyle = '#9aa0a6';
  ctx.fillRect((w - roadW) / 2 - 14, y, roadW + 28, 8);

  ctx.fillStyle = INK;
  ctx.font = '600 15px system-ui, sans-serif';
  ctx.fillText(`heading ${pane.heading}`, 14, 24);
  ctx.fillText(`next turn in ${pane.distanceToIntersection}`, 14, 44);

  const badges: [string, boolean][] = [
    ['BRAKE LIGHTS AHEAD', pane.brakeLights],
    ['EMERGENCY BEHIND', pane.emergencyBehind],
    [`SMOKE ${pane.smokeDirection ?? ''}`.trim(), pane.smokeDirection !== null],
    ['SIGNALS OUT', pane.signalsOut],
    ['STOPPED', pane.forcedStop],
    ['WAITING FOR DIRECTIONS', pane.waitingAtIntersection],
  ];
  let by = h - 24;
  ctx.font = '700 13px system-ui, sans-serif';
  for (const [label, on] of badges) {
    if (!on) continue;
    const tw = ctx.measureText(label).width + 16;
    ctx.fillStyle = label.startsWith('SMOKE') ? '#c46a1f' : '#b3433b';
    ctx.fillRect(10, by - 16, tw, 22);
    ctx.fillStyle = INK;
    ctx.fillText(label, 18, by);
    by -= 30;
  }
  if (pane.braking) {
    ctx.fillStyle = '#d9512c';
    ctx.beginPath();
    ctx.arc(w - 28, 28, 12, 0, Math.PI * 2);
    ctx.fill();
  }
}

export function drawNavigatorPane(
  ctx: CanvasRenderingContext2D,
  pane: NavigatorPane,
  w: number,
  h: number,
): void {
  ctx.fillStyle = '#10151c';
  ctx.fillRect(0, 0, w, h);

  const xs = pane.nodes.map((n) => n.x);
  const ys = pane.nodes.map((n) => n.y);
  const minX = Math.min(...xs);
  const maxX = Math.max(...xs);
  const minY = Math.min(...ys);
  const maxY = Math.max(...ys);
  const pad = 34;
  const mapH = h * 0.62;
  const sx = (maxX - minX) > 0 ? (w - 2 * pad) / (maxX - minX) : 1;
  const sy = (maxY - minY) > 0 ? (mapH - 2 * pad) / (maxY - minY) : 1;
  const s = Math.min(sx, sy);
  // Screen y grows downward; map north is +y.
  const px = (x: number) => pad + (x - minX) * s;
  const py = (y: number) => mapH - pad - (y - minY) * s;

  const byId = new Map(pane.nodes.map((n) => [n.id, n]));
  for (const edge of pane.edges) {
    const a = byId.get(edge.a)!;
    const b = byId.get(edge.b)!;
    ctx.strokeStyle = edge.closed ? ROAD_CLOSED : '#5b6470';
    ctx.lineWidth = edge.closed ? 3 : 5;
    ctx.setLineDash(edge.closed ? [6, 6] : []);
    ctx.beginPath();
    ctx.moveTo(px(a.x), py(a.y));
    ctx.lineTo(px(b.x), py(b.y));
    ctx.stroke();
  }
  ctx.setLineDash([]);

  for (const node of pane.nodes) {
    ctx.fillStyle = pane.shelters.includes(node.id) ? '#3f9e62' : '#8b93a0';
    ctx.beginPath();
    ctx.arc(px(node.x), py(node.y), pane.shelters.includes(node.id) ? 7 : 4, 0, Math.PI * 2);
    ctx.fill();
  }

  // Exit marker: always present, always obvious.
  const exit = byId.get(pane.exitMarker);
  if (exit) {
    ctx.fillStyle = '#e0b63c';
    ctx.font = '700 20px system-ui, sans-serif';
    ctx.fillText('★', px(exit.x) - 7, py(exit.y) - 10);
  }

  // Vehicle marker interpolated along its edge.
  const vEdge = pane.edges.find((e) => e.id === pane.vehicle.edge);
  if (vEdge) {
    const from = byId.get(pane.vehicle.from)!;
    const to = byId.get(vEdge.a === pane.vehicle.from ? vEdge.b : vEdge.a)!;
    const t = vEdge.length > 0 ? pane.vehicle.offset / vEdge.length : 0;
    const vx = px(from.x + (to.x - from.x) * t);
    const vy = py(from.y + (to.y - from.y) * t);
    ctx.fillStyle = '#5aa7e8';
    ctx.beginPath();
    ctx.arc(vx, vy, 8, 0, Math.PI * 2);
    ctx.fill();
  }

  // Shelter banner with countdown.
  let feedTop = mapH + 8;
  if (pane.shelterBanner) {
    ctx.fillStyle = '#7a3f9e';
    ctx.fillRect(0, mapH - 30, w, 30);
    ctx.fillStyle = INK;
    ctx.font = '700 14px system-ui, sans-serif';
    ctx.fillText(
      `SHELTER NOW — ${pane.shelterBanner.remaining} ticks to deadline`,
      12,
      mapH - 10,
    );
  }

  // Alert feed, newest last.
  ctx.font = '500 13px system-ui, sans-serif';
  const recent = pane.feed.slice(-7);
  for (const item of recent) {
    ctx.fillStyle = item.channel === 'radio' ? '#9ecfff' : INK;
    ctx.fillText(`[t=${item.tick} ${item.channel}] ${item.headline}`, 12, feedTop + 14);
    feedTop += 20;
  }
  ctx.fillStyle = pane.radioAvailable ? (pane.radioOn ? '#6fd37f' : '#8b93a0') : '#555';
  ctx.fillText(
    pane.radioAvailable ? `radio ${pane.radioOn ? 'ON' : 'off'}` : 'no radio in this region',
    12,
    h - 10,
  );
}

export function drawOutcome(
  ctx: CanvasRenderingContext2D,
  screen: OutcomeScreen,
  w: number,
  h: number,
): void {
  ctx.fillStyle = 'rgba(10, 12, 16, 0.88)';
  ctx.fillRect(0, 0, w, h);
  ctx.fillStyle = screen.kind === 'win' ? '#6fd37f' : '#e8b04a';
  ctx.font = '700 28px system-ui, sans-serif';
  ctx.fillText(screen.title, 30, h / 2 - 40);
  ctx.fillStyle = '#e8e8f0';
  ctx.font = '400 16px system-ui, sans-serif';
  wrapText(ctx, screen.body, 30, h / 2, w - 60, 24);
  ctx.font = '600 15px system-ui, sans-serif';
  ctx.fillText('tap restart to try again', 30, h / 2 + 110);
}

function wrapText(
  ctx: CanvasRenderingContext2D,
  text: string,
  x: number,
  y: number,
  maxWidth: number,
  lineHeight: number,
): void {
  const words = text.split(' ');
  let line = '';
  for (const word of words) {
    const probe = line ? line + ' ' + word : word;
    if (ctx.measureText(probe).width > maxWidth && line) {
      ctx.fillText(line, x, y);
      line = word;
      y += lineHeight;
    } else {
      line = probe;
    }
  }
  if (line) ctx.fillText(line, x, y);
}
