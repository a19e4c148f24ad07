import { readFileSync } from "node:fs";
import { join } from "node:path";
import { Bundle } from "../src/types.js";
import { validateBundle } from "../src/validate.js";

// vitest runs with the package root as cwd; under the jsdom environment
// import.meta.url points at the fake page, so resolve fixtures from cwd.
function fixturePath(name: string): string {
  return join(process.cwd(), "tests", "fixtures", name);
}

export function loadFixture(name: string): Bundle {
  return validateBundle(JSON.parse(readFileSync(fixturePath(name), "utf-8")));
}

/** Re-parse without validation, for corruption tests. */
export function loadRawFixture(name: string): unknown {
  return JSON.parse(readFileSync(fixturePath(name), "utf-8"));
}
