/** Keyboard and wheel mapping for the free-fly camera. */

export type CameraAction =
  | "lookAbove"
  | "lookDown"
  | "lookLeft"
  | "lookRight"
  | "moveForward"
  | "moveBackward"
  | "moveLeft"
  | "moveRight"
  | "moveAbove"
  | "moveBelow"
  | "zoomIn"
  | "zoomOut";

// Arrow keys turn the view, WASD moves in the ground plane, Q/E moves vertically.
export const KEY_BINDINGS: Record<string, CameraAction> = {
  ArrowUp: "lookAbove",
  ArrowDown: "lookDown",
  ArrowLeft: "lookLeft",
  ArrowRight: "lookRight",
  KeyW: "moveForward",
  KeyS: "moveBackward",
  KeyA: "moveLeft",
  KeyD: "moveRight",
  KeyQ: "moveAbove",
  KeyE: "moveBelow",
};

/** Map a KeyboardEvent.code to a camera action, or null for unbound keys. */
export function actionForKey(code: string): CameraAction | null {
  return KEY_BINDINGS[code] ?? null;
}

/** Wheel up (negative deltaY) zooms in, wheel down zooms out. A zero delta is ignored. */
export function actionForWheel(deltaY: number): CameraAction | null {
  if (deltaY < 0) return "zoomIn";
  if (deltaY > 0) return "zoomOut";
  return null;
}
