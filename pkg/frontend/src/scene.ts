import { BoxGeometry, Color, Group, Mesh, MeshLambertMaterial } from "three";
import { City } from "./types.js";

// Slab thicknesses. The ground's top face sits at y = 0; plots rest on it
// and buildings stand on the plots.
export const GROUND_THICKNESS = 0.4;
export const PLOT_THICKNESS = 0.12;

const GROUND_GREY = new Color().setRGB(0.58, 0.58, 0.6);
const PLOT_GREEN = new Color().setRGB(0.22, 0.48, 0.26);
const LOW_COUPLING = new Color().setRGB(0, 1, 1);
const HIGH_COUPLING = new Color().setRGB(1, 1, 0);

/** Cyan for loosely coupled classes, shading to yellow as coupling rises. */
export function buildingColor(colorFactor: number): Color {
  return new Color().lerpColors(LOW_COUPLING, HIGH_COUPLING, colorFactor);
}

export type PickInfo =
  | { kind: "ground" }
  | { kind: "plot"; packageName: string }
  | { kind: "building"; classRef: string };

/**
 * Turn one snapshot's city into a three.js group. Every dimension and
 * position is read from the bundle as-is; the viewer never re-lays-out
 * or re-measures anything.
 */
export function buildCityGroup(city: City): Group {
  const group = new Group();
  group.name = "city";

  const ground = new Mesh(
    new BoxGeometry(city.groundWidth, GROUND_THICKNESS, city.groundDepth),
    new MeshLambertMaterial({ color: GROUND_GREY.clone() }),
  );
  ground.position.set(city.groundWidth / 2, -GROUND_THICKNESS / 2, city.groundDepth / 2);
  ground.userData = { kind: "ground" } satisfies PickInfo;
  group.add(ground);

  for (const plot of city.plots) {
    const plotMesh = new Mesh(
      new BoxGeometry(plot.width, PLOT_THICKNESS, plot.depth),
      new MeshLambertMaterial({ color: PLOT_GREEN.clone() }),
    );
    plotMesh.position.set(
      plot.origin[0] + plot.width / 2,
      PLOT_THICKNESS / 2,
      plot.origin[1] + plot.depth / 2,
    );
    plotMesh.userData = { kind: "plot", packageName: plot.packageName } satisfies PickInfo;
    group.add(plotMesh);

    for (const building of plot.buildings) {
      const mesh = new Mesh(
        new BoxGeometry(building.baseSide, building.height, building.baseSide),
        new MeshLambertMaterial({ color: buildingColor(building.colorFactor) }),
      );
      mesh.position.set(
        plot.origin[0] + building.position[0] + building.baseSide / 2,
        PLOT_THICKNESS + building.height / 2,
        plot.origin[1] + building.position[1] + building.baseSide / 2,
      );
      mesh.userData = { kind: "building", classRef: building.classRef } satisfies PickInfo;
      group.add(mesh);
    }
  }
  return group;
}

/** Pick info for an intersected object, walking up to the first tagged ancestor. */
export function pickInfoFor(object: { userData: unknown; parent?: unknown } | null): PickInfo | null {
  let current = object;
  while (current) {
    const data = current.userData as Partial<PickInfo> | undefined;
    if (data && typeof data.kind === "string") return data as PickInfo;
    current = (current.parent ?? null) as typeof object;
  }
  return null;
}
