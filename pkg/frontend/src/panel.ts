import { Selection } from "./state.js";
import { Snapshot } from "./types.js";
import { classRowByName } from "./validate.js";

/** What the detail panel shows for the current selection. */
export interface PanelContent {
  title: string;
  rows: [string, string][];
}

const METRIC_LABELS: [keyof MetricRow, string][] = [
  ["loc", "lines of code"],
  ["commentPercentage", "comment %"],
  ["cbo", "coupling (cbo)"],
  ["lcom", "lack of cohesion (lcom)"],
  ["wmc", "weighted methods (wmc)"],
  ["noc", "children (noc)"],
  ["dit", "inheritance depth (dit)"],
];

interface MetricRow {
  loc: number;
  commentPercentage: number;
  cbo: number;
  lcom: number;
  wmc: number;
  noc: number;
  dit: number;
}

/**
 * Build the panel for a selection. Values come straight from the bundle;
 * the only arithmetic here is summing a plot's building stats.
 */
export function panelContent(selection: Selection, snapshot: Snapshot): PanelContent {
  if (selection.kind === "building") {
    const row = classRowByName(snapshot, selection.classRef);
    if (!row) {
      return { title: selection.classRef, rows: [["error", "class not in this version"]] };
    }
    return {
      title: row.qualifiedName,
      rows: METRIC_LABELS.map(([key, label]) => [label, String(row[key])]),
    };
  }

  const plot = snapshot.city.plots.find((p) => p.packageName === selection.packageName);
  const title = selection.packageName === "" ? "(default package)" : selection.packageName;
  if (!plot) {
    return { title, rows: [["error", "package not in this version"]] };
  }
  let totalLoc = 0;
  for (const building of plot.buildings) {
    totalLoc += classRowByName(snapshot, building.classRef)?.loc ?? 0;
  }
  return {
    title,
    rows: [
      ["classes", String(plot.buildings.length)],
      ["total lines of code", String(totalLoc)],
    ],
  };
}

/** Render panel content into a container element. */
export function renderPanel(container: HTMLElement, content: PanelContent | null): void {
  container.textContent = "";
  if (content === null) {
    container.classList.add("hidden");
    return;
  }
  container.classList.remove("hidden");
  const heading = document.createElement("h2");
  heading.textContent = content.title;
  container.appendChild(heading);
  const table = document.createElement("table");
  for (const [label, value] of content.rows) {
    const tr = document.createElement("tr");
    const th = document.createElement("th");
    th.textContent = label;
    const td = document.createElement("td");
    td.textContent = value;
    td.className = "metric-value";
    tr.append(th, td);
    table.appendChild(tr);
  }
  container.appendChild(table);
}
