import { CHART_KEYS, ChartKey, Evolution } from "./types.js";

export interface ChartBar {
  key: ChartKey;
  lnValue: number;
  rawValue: number;
  /** True when the raw value was 0 and the report pinned its log to 0. */
  flattenedZero: boolean;
}

export interface ChartGroup {
  versionLabel: string;
  bars: ChartBar[];
}

/**
 * Arrange the report's chart series for drawing. Bar heights are the
 * ln-scaled values exactly as the bundle recorded them; this module does
 * not recompute logarithms.
 */
export function chartGroups(evolution: Evolution): ChartGroup[] {
  return evolution.chartSeries.map((entry) => ({
    versionLabel: entry.versionLabel,
    bars: CHART_KEYS.map((key) => ({
      key,
      lnValue: entry.lnValues[key],
      rawValue: entry.values[key],
      flattenedZero: entry.zeroValueKeys.includes(key),
    })),
  }));
}

const KEY_TITLES: Record<ChartKey, string> = {
  packageCount: "packages",
  classCount: "classes",
  totalLoc: "lines of code",
  totalWmc: "weighted methods",
};

/** Draw the evolution chart as one column of bars per version. */
export function renderChart(container: HTMLElement, evolution: Evolution): void {
  container.textContent = "";
  const groups = chartGroups(evolution);
  let maxLn = 0;
  for (const group of groups) {
    for (const bar of group.bars) maxLn = Math.max(maxLn, bar.lnValue);
  }

  for (const group of groups) {
    const column = document.createElement("div");
    column.className = "chart-column";
    const barRow = document.createElement("div");
    barRow.className = "chart-bars";
    for (const bar of group.bars) {
      const el = document.createElement("div");
      el.className = `chart-bar chart-bar-${bar.key}`;
      const frac = maxLn > 0 ? bar.lnValue / maxLn : 0;
      el.style.height = `${(frac * 100).toFixed(2)}%`;
      // Hovering shows the raw value; the bar itself is drawn on the ln scale.
      el.title = `${group.versionLabel} ${KEY_TITLES[bar.key]}: ${bar.rawValue}`;
      el.dataset.key = bar.key;
      el.dataset.ln = String(bar.lnValue);
      el.dataset.raw = String(bar.rawValue);
      barRow.appendChild(el);
    }
    const caption = document.createElement("div");
    caption.className = "chart-caption";
    caption.textContent = group.versionLabel;
    column.append(barRow, caption);
    container.appendChild(column);
  }
}
