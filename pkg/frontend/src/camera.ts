import { CameraAction } from "./input.js";

/**
 * Free-fly camera state as plain data. Rendering code turns this into a
 * three.js camera pose each frame; keeping the math here makes it testable
 * without a GL context.
 */
export interface CameraState {
  x: number;
  y: number;
  z: number;
  /** Rotation around the vertical axis, radians. 0 looks along -z, positive turns right. */
  yaw: number;
  /** Elevation angle, radians. Positive looks up. */
  pitch: number;
}

export interface CameraConfig {
  moveStep: number;
  turnStep: number;
  zoomStep: number;
  /** Camera eye never goes below this height, so the view cannot dive under the ground. */
  floorY: number;
  maxPitch: number;
}

export const DEFAULT_CAMERA_CONFIG: CameraConfig = {
  moveStep: 1.0,
  turnStep: Math.PI / 60,
  zoomStep: 2.0,
  floorY: 0.5,
  maxPitch: (89 * Math.PI) / 180,
};

/** Unit vector the camera looks along. */
export function viewDirection(state: CameraState): [number, number, number] {
  const cp = Math.cos(state.pitch);
  return [Math.sin(state.yaw) * cp, Math.sin(state.pitch), -Math.cos(state.yaw) * cp];
}

/** Ground-plane right vector, independent of pitch so strafing never climbs. */
function rightDirection(state: CameraState): [number, number, number] {
  return [Math.cos(state.yaw), 0, Math.sin(state.yaw)];
}

function clampPitch(pitch: number, config: CameraConfig): number {
  return Math.min(config.maxPitch, Math.max(-config.maxPitch, pitch));
}

function moved(state: CameraState, dx: number, dy: number, dz: number, config: CameraConfig): CameraState {
  return {
    ...state,
    x: state.x + dx,
    y: Math.max(config.floorY, state.y + dy),
    z: state.z + dz,
  };
}

/** Apply one discrete camera action, returning a new state. */
export function applyAction(
  state: CameraState,
  action: CameraAction,
  config: CameraConfig = DEFAULT_CAMERA_CONFIG,
): CameraState {
  const step = config.moveStep;
  switch (action) {
    case "lookAbove":
      return { ...state, pitch: clampPitch(state.pitch + config.turnStep, config) };
    case "lookDown":
      return { ...state, pitch: clampPitch(state.pitch - config.turnStep, config) };
    case "lookLeft":
      return { ...state, yaw: state.yaw - config.turnStep };
    case "lookRight":
      return { ...state, yaw: state.yaw + config.turnStep };
    case "moveForward":
    case "moveBackward": {
      const [fx, fy, fz] = viewDirection(state);
      const sign = action === "moveForward" ? 1 : -1;
      return moved(state, sign * step * fx, sign * step * fy, sign * step * fz, config);
    }
    case "moveLeft":
    case "moveRight": {
      const [rx, , rz] = rightDirection(state);
      const sign = action === "moveRight" ? 1 : -1;
      return moved(state, sign * step * rx, 0, sign * step * rz, config);
    }
    case "moveAbove":
      return moved(state, 0, step, 0, config);
    case "moveBelow":
      return moved(state, 0, -step, 0, config);
    case "zoomIn":
    case "zoomOut": {
      const [fx, fy, fz] = viewDirection(state);
      const sign = action === "zoomIn" ? 1 : -1;
      const amount = sign * config.zoomStep;
      return moved(state, amount * fx, amount * fy, amount * fz, config);
    }
  }
}

/** Starting pose: behind the city's near edge, raised, looking slightly down at it. */
export function initialCamera(groundWidth: number, groundDepth: number): CameraState {
  const extent = Math.max(groundWidth, groundDepth);
  return {
    x: groundWidth / 2,
    y: extent * 0.6 + 2,
    z: groundDepth + extent * 0.5,
    yaw: 0,
    pitch: -Math.PI / 6,
  };
}
