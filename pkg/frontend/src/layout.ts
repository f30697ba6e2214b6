// Shared-screen layout: the two players hold one device. Wide enough and
// they sit side by side (driver left, navigator right); on a narrow portrait
// phone the panes stack with role labels so the players know whose half is
// whose.

export const STACK_THRESHOLD_PX = 700;

export interface LayoutPlan {
  mode: 'side-by-side' | 'stacked';
  panes: { role: 'driver' | 'navigator'; label: string }[];
}

export function computeLayout(viewportWidth: number): LayoutPlan {
  const panes: LayoutPlan['panes'] = [
    { role: 'driver', label: 'Player 1 — Driver' },
    { role: 'navigator', label: 'Player 2 — Navigator' },
  ];
  return {
    mode: viewportWidth < STACK_THRESHOLD_PX ? 'stacked' : 'side-by-side',
    panes,
  };
}
