import { describe, expect, it } from "vitest";
import {
  applyAction,
  CameraConfig,
  CameraState,
  DEFAULT_CAMERA_CONFIG,
  initialCamera,
  viewDirection,
} from "../src/camera.js";

const CFG: CameraConfig = { ...DEFAULT_CAMERA_CONFIG, moveStep: 2, turnStep: 0.1, zoomStep: 3 };

function at(partial: Partial<CameraState> = {}): CameraState {
  return { x: 10, y: 5, z: 20, yaw: 0, pitch: 0, ...partial };
}

describe("movement", () => {
  it("forward follows the view direction", () => {
    const next = applyAction(at(), "moveForward", CFG);
    // yaw 0, pitch 0 looks along -z
    expect(next).toMatchObject({ x: 10, y: 5, z: 18 });
  });

  it("backward is the inverse of forward", () => {
    const next = applyAction(at(), "moveBackward", CFG);
    expect(next.z).toBeCloseTo(22, 12);
  });

  it("forward climbs when pitched up", () => {
    const next = applyAction(at({ pitch: Math.PI / 2 - 0.001 }), "moveForward", CFG);
    expect(next.y).toBeGreaterThan(6.9);
  });

  it("strafing ignores pitch", () => {
    const next = applyAction(at({ pitch: -1 }), "moveRight", CFG);
    expect(next.x).toBeCloseTo(12, 12);
    expect(next.y).toBe(5);
  });

  it("left and right strafe mirror each other", () => {
    const yawed = at({ yaw: 0.7 });
    const left = applyAction(yawed, "moveLeft", CFG);
    const right = applyAction(yawed, "moveRight", CFG);
    expect(left.x - yawed.x).toBeCloseTo(-(right.x - yawed.x), 12);
    expect(left.z - yawed.z).toBeCloseTo(-(right.z - yawed.z), 12);
  });

  it("q rises and e sinks", () => {
    expect(applyAction(at(), "moveAbove", CFG).y).toBe(7);
    expect(applyAction(at(), "moveBelow", CFG).y).toBe(3);
  });

  it("never sinks below the floor", () => {
    const low = at({ y: CFG.floorY });
    expect(applyAction(low, "moveBelow", CFG).y).toBe(CFG.floorY);
    const diving = at({ y: CFG.floorY + 0.1, pitch: -1.2 });
    expect(applyAction(diving, "moveForward", CFG).y).toBe(CFG.floorY);
  });
});

describe("looking", () => {
  it("look above raises pitch, look down lowers it", () => {
    expect(applyAction(at(), "lookAbove", CFG).pitch).toBeCloseTo(0.1, 12);
    expect(applyAction(at(), "lookDown", CFG).pitch).toBeCloseTo(-0.1, 12);
  });

  it("pitch clamps before the poles", () => {
    let state = at();
    for (let i = 0; i < 200; i++) state = applyAction(state, "lookAbove", CFG);
    expect(state.pitch).toBe(CFG.maxPitch);
    for (let i = 0; i < 400; i++) state = applyAction(state, "lookDown", CFG);
    expect(state.pitch).toBe(-CFG.maxPitch);
  });

  it("look left turns the view toward -x", () => {
    let state = at();
    for (let i = 0; i < 8; i++) state = applyAction(state, "lookLeft", CFG);
    const [dx] = viewDirection(state);
    expect(dx).toBeLessThan(0);
  });

  it("look right turns the view toward +x", () => {
    const state = applyAction(at(), "lookRight", CFG);
    const [dx] = viewDirection(state);
    expect(dx).toBeGreaterThan(0);
  });

  it("turning does not move the camera", () => {
    const next = applyAction(at(), "lookLeft", CFG);
    expect([next.x, next.y, next.z]).toEqual([10, 5, 20]);
  });
});

describe("zoom", () => {
  it("zoom in advances along the view ray", () => {
    const next = applyAction(at(), "zoomIn", CFG);
    expect(next.z).toBeCloseTo(17, 12);
  });

  it("zoom out retreats", () => {
    const next = applyAction(at(), "zoomOut", CFG);
    expect(next.z).toBeCloseTo(23, 12);
  });

  it("zooming in at the floor stays above it", () => {
    const state = at({ y: CFG.floorY, pitch: -1.0 });
    expect(applyAction(state, "zoomIn", CFG).y).toBe(CFG.floorY);
  });
});

describe("initial pose", () => {
  it("starts above the floor looking at the city", () => {
    const cam = initialCamera(40, 30);
    expect(cam.y).toBeGreaterThan(DEFAULT_CAMERA_CONFIG.floorY);
    expect(cam.pitch).toBeLessThan(0);
    const [, , dz] = viewDirection(cam);
    expect(dz).toBeLessThan(0);
  });
});
