/** Shape of the analyzer's JSON bundle. Field names mirror the wire format. */

export interface ClassRow {
  qualifiedName: string;
  loc: number;
  commentPercentage: number;
  cbo: number;
  lcom: number;
  wmc: number;
  noc: number;
  dit: number;
}

export interface Building {
  classRef: string;
  baseSide: number;
  height: number;
  position: [number, number];
  colorFactor: number;
}

export interface Plot {
  packageName: string;
  origin: [number, number];
  width: number;
  depth: number;
  buildings: Building[];
}

export interface City {
  groundWidth: number;
  groundDepth: number;
  plots: Plot[];
}

export interface Aggregates {
  packageCount: number;
  classCount: number;
  totalLoc: number;
  totalWmc: number;
}

export interface Snapshot {
  versionLabel: string;
  aggregates: Aggregates;
  classes: ClassRow[];
  city: City;
}

export type ChartKey = keyof Aggregates;

export const CHART_KEYS: ChartKey[] = [
  "packageCount",
  "classCount",
  "totalLoc",
  "totalWmc",
];

export interface ChartSeriesEntry {
  versionLabel: string;
  values: Aggregates;
  lnValues: Record<ChartKey, number>;
  zeroValueKeys: ChartKey[];
}

export interface Detection {
  versionLabel: string;
  skyscrapers: string[];
  heavyClasses: string[];
}

export interface Evolution {
  versions: ({ versionLabel: string } & Aggregates)[];
  chartSeries: ChartSeriesEntry[];
  detections: Detection[];
}

export interface Bundle {
  formatVersion: string;
  projectName: string;
  generatedAt: string;
  toolVersion: string;
  snapshots: Snapshot[];
  evolution: Evolution;
}
