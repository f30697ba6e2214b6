import type { LogEntry, SnapshotRecord } from './protocol.js';

// Pure view models. The renderer draws these and nothing else, which is what
// makes the information-hiding contract checkable: the navigator pane model
// is built from the snapshot's navigator scene only, never from driver cues
// or anything the engine knows but never announced.

export interface DriverPane {
  heading: string;
  moving: boolean;
  braking: boolean;
  forcedStop: boolean;
  waitingAtIntersection: boolean;
  distanceToIntersection: number;
  brakeLights: boolean;
  emergencyBehind: boolean;
  smokeDirection: string | null;
  signalsOut: boolean;
}

export interface MapEdgeView {
  id: string;
  a: string;
  b: string;
  length: number;
  closed: boolean;
}

export interface NavigatorPane {
  nodes: { id: string; x: number; y: number }[];
  edges: MapEdgeView[];
  exitMarker: string;
  shelters: string[];
  vehicle: { edge: string; from: string; offset: number };
  feed: FeedItem[];
  radioOn: boolean;
  radioAvailable: boolean;
  shelterBanner: { deadline: number; remaining: number } | null;
}

export interface FeedItem {
  id: string;
  channel: 'text' | 'radio';
  tick: number;
  headline: string;
}

function headline(entry: LogEntry): string {
  switch (entry.kind) {
    case 'road_closure':
      return `Road ${entry.edge} closed`;
    case 'road_reopened':
      return `Road ${entry.edge} reopened`;
    case 'shelter_warning':
      return `Seek shelter before t=${entry.deadline}`;
    case 'all_clear':
      return 'All clear';
    case 'route_info':
      return entry.text ?? '';
    default:
      return entry.kind;
  }
}

export function buildDriverPane(snap: SnapshotRecord): DriverPane {
  const d = snap.driver;
  return {
    heading: d.heading,
    moving: d.speed > 0,
    braking: d.brake_held,
    forcedStop: d.forced_stop,
    waitingAtIntersection: d.waiting,
    distanceToIntersection: d.distance_to_intersection,
    brakeLights: d.brake_lights,
    emergencyBehind: d.emergency_behind,
    smokeDirection: d.smoke,
    signalsOut: d.signals_out,
  };
}

export function buildNavigatorPane(snap: SnapshotRecord): NavigatorPane {
  const nav = snap.navigator;
  const closed = new Set(nav.map.known_closed);
  return {
    nodes: nav.map.nodes.map(([id, x, y]) => ({ id, x, y })),
    edges: nav.map.edges.map(([id, a, b, length]) => ({
      id,
      a,
      b,
      length,
      closed: closed.has(id),
    })),
    exitMarker: nav.map.exit,
    shelters: [...nav.map.shelters],
    vehicle: { ...nav.map.vehicle },
    feed: nav.log.map((entry) => ({
      id: entry.id,
      channel: entry.channel,
      tick: entry.tick,
      headline: headline(entry),
    })),
    radioOn: nav.radio_on,
    radioAvailable: nav.radio_available,
    shelterBanner: nav.shelter ? { ...nav.shelter } : null,
  };
}

/** Edges the navigator pane paints as closed; used by the integrity tests. */
export function closedEdgesInPane(pane: NavigatorPane): string[] {
  return pane.edges.filter((e) => e.closed).map((e) => e.id);
}

/** Closure announcements actually delivered to the players so far. */
export function announcedClosures(snap: SnapshotRecord): Set<string> {
  const out = new Set<string>();
  for (const entry of snap.navigator.log) {
    if (entry.kind === 'road_closure' && entry.edge) out.add(entry.edge);
  }
  return out;
}
