import { CameraState } from "./camera.js";

export type Selection =
  | { kind: "building"; classRef: string }
  | { kind: "plot"; packageName: string };

export interface ViewerState {
  activeVersionIndex: number;
  camera: CameraState;
  selection: Selection | null;
  chartOpen: boolean;
}

export function createState(camera: CameraState, versionIndex = 0): ViewerState {
  return { activeVersionIndex: versionIndex, camera, selection: null, chartOpen: false };
}

/**
 * Activate another snapshot. The camera survives the switch so the user keeps
 * their place in the city; the selection is dropped because the selected
 * entity may not exist in the target version.
 */
export function switchVersion(state: ViewerState, index: number, versionCount: number): ViewerState {
  if (!Number.isInteger(index) || index < 0 || index >= versionCount) {
    throw new RangeError(`version index ${index} out of range 0..${versionCount - 1}`);
  }
  return { ...state, activeVersionIndex: index, selection: null };
}

export function select(state: ViewerState, selection: Selection | null): ViewerState {
  return { ...state, selection };
}

export function setChartOpen(state: ViewerState, open: boolean): ViewerState {
  return { ...state, chartOpen: open };
}

/** Parse "#v=2" style fragments; anything else falls back to the first version. */
export function versionFromFragment(fragment: string, versionCount: number): number {
  const match = /^#v=(\d+)$/.exec(fragment);
  if (!match) return 0;
  const index = Number(match[1]);
  return index < versionCount ? index : 0;
}

export function fragmentForVersion(index: number): string {
  return `#v=${index}`;
}
