import { describe, expect, it } from "vitest";
import { panelContent, renderPanel } from "../src/panel.js";
import { loadFixture } from "./helpers.js";

const bundle = loadFixture("fixture_two.json");
const snapshot = bundle.snapshots[0]!;

describe("building panel", () => {
  it("shows the class name and all seven metrics verbatim", () => {
    const row = snapshot.classes.find((r) => r.qualifiedName === "zoo.core.Shelter")!;
    const content = panelContent({ kind: "building", classRef: "zoo.core.Shelter" }, snapshot);
    expect(content.title).toBe("zoo.core.Shelter");
    expect(content.rows).toHaveLength(7);
    const values = content.rows.map(([, value]) => value);
    // values are the bundle's own numbers, stringified without reformatting
    expect(values).toEqual([
      String(row.loc),
      String(row.commentPercentage),
      String(row.cbo),
      String(row.lcom),
      String(row.wmc),
      String(row.noc),
      String(row.dit),
    ]);
  });

  it("keeps full float precision of commentPercentage", () => {
    const row = snapshot.classes.find((r) => !Number.isInteger(r.commentPercentage));
    expect(row).toBeDefined();
    const content = panelContent({ kind: "building", classRef: row!.qualifiedName }, snapshot);
    const pct = content.rows.find(([label]) => label.includes("comment"))![1];
    expect(pct).toBe(String(row!.commentPercentage));
    expect(pct).toContain(".");
  });

  it("reports a class missing from this version", () => {
    const content = panelContent({ kind: "building", classRef: "no.Such" }, snapshot);
    expect(content.rows[0]![0]).toBe("error");
  });
});

describe("plot panel", () => {
  it("shows package name, class count and summed loc", () => {
    const plot = snapshot.city.plots.find((p) => p.packageName === "util")!;
    const expectedLoc = plot.buildings
      .map((b) => snapshot.classes.find((r) => r.qualifiedName === b.classRef)!.loc)
      .reduce((a, b) => a + b, 0);
    const content = panelContent({ kind: "plot", packageName: "util" }, snapshot);
    expect(content.title).toBe("util");
    expect(content.rows).toEqual([
      ["classes", String(plot.buildings.length)],
      ["total lines of code", String(expectedLoc)],
    ]);
  });

  it("labels the default package", () => {
    const content = panelContent({ kind: "plot", packageName: "" }, snapshot);
    expect(content.title).toBe("(default package)");
  });
});

describe("panel rendering", () => {
  it("fills the container with title and metric table", () => {
    const container = document.createElement("div");
    renderPanel(container, panelContent({ kind: "building", classRef: "zoo.core.Dog" }, snapshot));
    expect(container.querySelector("h2")!.textContent).toBe("zoo.core.Dog");
    expect(container.querySelectorAll("tr")).toHaveLength(7);
    expect(container.classList.contains("hidden")).toBe(false);
  });

  it("hides when the selection is cleared", () => {
    const container = document.createElement("div");
    renderPanel(container, panelContent({ kind: "plot", packageName: "util" }, snapshot));
    renderPanel(container, null);
    expect(container.classList.contains("hidden")).toBe(true);
    expect(container.textContent).toBe("");
  });
});
