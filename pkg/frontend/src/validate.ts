import { Bundle, CHART_KEYS, Snapshot } from "./types.js";

/** Raised when a document does not look like a city bundle. */
export class BundleFormatError extends Error {
  constructor(public path: string, detail: string) {
    super(`${path}: ${detail}`);
    this.name = "BundleFormatError";
  }
}

function fail(path: string, detail: string): never {
  throw new BundleFormatError(path, detail);
}

function isObject(v: unknown): v is Record<string, unknown> {
  return typeof v === "object" && v !== null && !Array.isArray(v);
}

function needNumber(v: unknown, path: string, min?: number): number {
  if (typeof v !== "number" || !Number.isFinite(v)) fail(path, "expected a finite number");
  if (min !== undefined && v < min) fail(path, `must be >= ${min}`);
  return v;
}

function needString(v: unknown, path: string): string {
  if (typeof v !== "string") fail(path, "expected a string");
  return v;
}

function needArray(v: unknown, path: string): unknown[] {
  if (!Array.isArray(v)) fail(path, "expected an array");
  return v;
}

function checkPair(v: unknown, path: string): void {
  const arr = needArray(v, path);
  if (arr.length !== 2) fail(path, "expected [x, z]");
  needNumber(arr[0], `${path}[0]`, 0);
  needNumber(arr[1], `${path}[1]`, 0);
}

function checkSnapshot(raw: unknown, path: string): void {
  if (!isObject(raw)) fail(path, "expected an object");
  const label = needString(raw.versionLabel, `${path}.versionLabel`);
  if (label === "") fail(`${path}.versionLabel`, "must not be empty");

  const classNames = new Set<string>();
  for (const [i, row] of needArray(raw.classes, `${path}.classes`).entries()) {
    const rowPath = `${path}.classes[${i}]`;
    if (!isObject(row)) fail(rowPath, "expected an object");
    const name = needString(row.qualifiedName, `${rowPath}.qualifiedName`);
    if (classNames.has(name)) fail(rowPath, `duplicate class ${name}`);
    classNames.add(name);
    needNumber(row.loc, `${rowPath}.loc`, 1);
    const pct = needNumber(row.commentPercentage, `${rowPath}.commentPercentage`, 0);
    if (pct > 100) fail(`${rowPath}.commentPercentage`, "must be <= 100");
    for (const key of ["cbo", "lcom", "wmc", "noc", "dit"]) {
      needNumber(row[key], `${rowPath}.${key}`, 0);
    }
  }

  if (!isObject(raw.city)) fail(`${path}.city`, "expected an object");
  needNumber(raw.city.groundWidth, `${path}.city.groundWidth`, 0);
  needNumber(raw.city.groundDepth, `${path}.city.groundDepth`, 0);
  for (const [p, plot] of needArray(raw.city.plots, `${path}.city.plots`).entries()) {
    const plotPath = `${path}.city.plots[${p}]`;
    if (!isObject(plot)) fail(plotPath, "expected an object");
    needString(plot.packageName, `${plotPath}.packageName`);
    checkPair(plot.origin, `${plotPath}.origin`);
    needNumber(plot.width, `${plotPath}.width`, 0);
    needNumber(plot.depth, `${plotPath}.depth`, 0);
    for (const [b, bld] of needArray(plot.buildings, `${plotPath}.buildings`).entries()) {
      const bldPath = `${plotPath}.buildings[${b}]`;
      if (!isObject(bld)) fail(bldPath, "expected an object");
      const ref = needString(bld.classRef, `${bldPath}.classRef`);
      if (!classNames.has(ref)) fail(`${bldPath}.classRef`, `unknown class ${ref}`);
      if (needNumber(bld.baseSide, `${bldPath}.baseSide`) <= 0) {
        fail(`${bldPath}.baseSide`, "must be positive");
      }
      if (needNumber(bld.height, `${bldPath}.height`) <= 0) {
        fail(`${bldPath}.height`, "must be positive");
      }
      checkPair(bld.position, `${bldPath}.position`);
      const cf = needNumber(bld.colorFactor, `${bldPath}.colorFactor`, 0);
      if (cf > 1) fail(`${bldPath}.colorFactor`, "must be <= 1");
    }
  }

  if (!isObject(raw.aggregates)) fail(`${path}.aggregates`, "expected an object");
  for (const key of CHART_KEYS) {
    needNumber(raw.aggregates[key], `${path}.aggregates.${key}`, 0);
  }
}

/**
 * Check that a parsed JSON document is a renderable bundle and return it typed.
 * The analyzer validates deeply on its side; the viewer re-checks everything
 * the scene and chart code dereferences, so bad input ends at the error panel.
 */
export function validateBundle(raw: unknown): Bundle {
  if (!isObject(raw)) fail("$", "expected a JSON object");
  const version = needString(raw.formatVersion, "$.formatVersion");
  if (version !== "1") fail("$.formatVersion", `unsupported format version ${version}`);
  needString(raw.projectName, "$.projectName");

  const snapshots = needArray(raw.snapshots, "$.snapshots");
  if (snapshots.length === 0) fail("$.snapshots", "must not be empty");
  const labels: string[] = [];
  for (const [i, snap] of snapshots.entries()) {
    checkSnapshot(snap, `$.snapshots[${i}]`);
    labels.push((snap as { versionLabel: string }).versionLabel);
  }
  if (new Set(labels).size !== labels.length) {
    fail("$.snapshots", "duplicate version labels");
  }

  if (!isObject(raw.evolution)) fail("$.evolution", "expected an object");
  const series = needArray(raw.evolution.chartSeries, "$.evolution.chartSeries");
  if (series.length !== labels.length) {
    fail("$.evolution.chartSeries", "must have one entry per snapshot");
  }
  for (const [i, entry] of series.entries()) {
    const entryPath = `$.evolution.chartSeries[${i}]`;
    if (!isObject(entry)) fail(entryPath, "expected an object");
    if (needString(entry.versionLabel, `${entryPath}.versionLabel`) !== labels[i]) {
      fail(`${entryPath}.versionLabel`, "out of order with snapshots");
    }
    if (!isObject(entry.values) || !isObject(entry.lnValues)) {
      fail(entryPath, "missing values or lnValues");
    }
    for (const key of CHART_KEYS) {
      needNumber(entry.values[key], `${entryPath}.values.${key}`, 0);
      needNumber(entry.lnValues[key], `${entryPath}.lnValues.${key}`);
    }
  }

  return raw as unknown as Bundle;
}

/** Find a snapshot's class row by qualified name; the validator guarantees hits for classRefs. */
export function classRowByName(snapshot: Snapshot, qualifiedName: string) {
  return snapshot.classes.find((row) => row.qualifiedName === qualifiedName);
}
