import type { SnapshotRecord } from './protocol.js';

// Outcome screens. Tone matters here: losses explain and invite another try,
// they never scold and never show a score to be ashamed of.

export interface OutcomeScreen {
  kind: 'win' | 'lose';
  title: string;
  body: string;
  actions: ['restart', 'choose_scenario'];
}

export function outcomeScreen(snap: SnapshotRecord): OutcomeScreen | null {
  const { status, reason } = snap.outcome;
  if (status === 'in_progress') return null;
  if (status === 'win') {
    const alertsHeeded = snap.navigator.log.length;
    return {
      kind: 'win',
      title: 'You made it out!',
      body:
        `You reached the exit together in ${snap.tick} ticks, ` +
        `working from ${alertsHeeded} update${alertsHeeded === 1 ? '' : 's'}. ` +
        'Nice teamwork.',
      actions: ['restart', 'choose_scenario'],
    };
  }
  switch (reason) {
    case 'dead_end':
      return {
        kind: 'lose',
        title: 'That road dead-ended',
        body:
          'No way through there. Check the map together and try another ' +
          'route — the alerts often hint at which turns to avoid.',
        actions: ['restart', 'choose_scenario'],
      };
    case 'shelter_ignored':
      return {
        kind: 'lose',
        title: 'The fire moved faster than the car',
        body:
          'When a shelter warning comes in, the safest move is to stop at a ' +
          'marked shelter before the deadline and wait for the all-clear. ' +
          'Give it another go.',
        actions: ['restart', 'choose_scenario'],
      };
    case 'fire_contact':
      return {
        kind: 'lose',
        title: 'That road was already burning',
        body:
          'The route looked open on the map, but not every danger gets ' +
          'announced in time. Watch for smoke and listen for updates — ' +
          'then try again.',
        actions: ['restart', 'choose_scenario'],
      };
    default:
      return {
        kind: 'lose',
        title: 'The run ended early',
        body: 'Try again — you know the area a little better now.',
        actions: ['restart', 'choose_scenario'],
      };
  }
}
