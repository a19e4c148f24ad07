"""Data model for the analysis pipeline.

The types here are plain dataclasses passed between the pipeline stages:

    scan_tree  -> SourceFile
    parse_unit -> ClassModel (MethodModel, FieldModel)
    build_project -> ProjectModel
    metrics    -> ClassMetrics, VersionAggregates
    city       -> Building, Plot, CityModel (sized by LayoutConfig)
    evolution  -> Detection, EvolutionReport
    bundle     -> VersionSnapshot, CityBundle

All of them are treated as immutable once their producing stage returns;
nothing downstream mutates a model it received.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class SourceFile:
    """One .java file with physical line accounting.

    total_lines counts newline-delimited lines; a trailing fragment without
    a newline counts as one line.  A line is a comment line when its only
    non-whitespace content belongs to // or /* */ comments; a blank line
    has no content at all.  Therefore comment_lines + blank_lines never
    exceeds total_lines.
    """

    path: str
    text: str
    total_lines: int
    comment_lines: int
    blank_lines: int


@dataclass
class MethodModel:
    """A method or constructor of a class.

    decision_points counts branching constructs in the body: if, for,
    while, do, case labels, catch clauses, the ternary operator, and the
    short-circuit && and || operators.  A do-while loop counts once (the
    trailing while belongs to the do construct).

    accessed_field_names is the subset of the enclosing class's field
    names that appear as bare identifiers (or this.<name>) in the body.
    """

    name: str
    decision_points: int = 0
    accessed_field_names: set[str] = field(default_factory=set)
    loc_span: int = 1


@dataclass
class FieldModel:
    name: str
    type_name: str


@dataclass
class ClassModel:
    """Structural facts about one type declaration.

    qualified_name is package-qualified; nested types are named
    Outer.Inner.  referenced_type_names holds type names (simple or
    dotted, as written) that occur in field declarations, parameters,
    return types, local declarations, object instantiations and static
    accesses; the class's own name is excluded.  loc_span runs from the
    first token of the declaration to its closing brace, inclusive.
    """

    qualified_name: str
    package_name: str
    kind: str  # "class" | "interface" | "enum"
    superclass_name: str | None = None
    interface_names: list[str] = field(default_factory=list)
    methods: list[MethodModel] = field(default_factory=list)
    fields: list[FieldModel] = field(default_factory=list)
    referenced_type_names: set[str] = field(default_factory=set)
    loc_span: int = 1
    comment_lines_in_span: int = 0

    @property
    def simple_name(self) -> str:
        return self.qualified_name.rsplit(".", 1)[-1]

    @property
    def local_name(self) -> str:
        """Name without the package prefix (keeps Outer.Inner nesting)."""
        if self.package_name:
            return self.qualified_name[len(self.package_name) + 1 :]
        return self.qualified_name

    def field_names(self) -> set[str]:
        return {f.name for f in self.fields}


@dataclass
class ProjectModel:
    """All classes of one analyzed version, grouped by package.

    packages maps package name ("" for the default package) to the
    classes declared in it, sorted by qualified name.  type_index maps
    simple names to the sorted qualified names carrying that simple name.
    """

    root_path: str
    version_label: str
    packages: dict[str, list[ClassModel]]
    type_index: dict[str, list[str]]

    def __post_init__(self) -> None:
        self._by_qualified = {
            c.qualified_name: c for classes in self.packages.values() for c in classes
        }

    @property
    def classes(self) -> list[ClassModel]:
        out: list[ClassModel] = []
        for name in sorted(self.packages):
            out.extend(self.packages[name])
        return out

    def lookup(self, qualified_name: str) -> ClassModel | None:
        return self._by_qualified.get(qualified_name)

    def resolve(self, name: str, from_package: str) -> str | None:
        """Resolve a referenced type name to a project qualified name.

        Preference order: same-package match (by local or simple name),
        then exact qualified-name match, then a single unambiguous
        project-wide simple-name match.  Anything else is external and
        resolves to None.
        """
        if not name:
            return None
        same_pkg = self.packages.get(from_package, ())
        local_hits = [c.qualified_name for c in same_pkg if c.local_name == name]
        if len(local_hits) == 1:
            return local_hits[0]
        simple_hits = [c.qualified_name for c in same_pkg if c.simple_name == name]
        if len(simple_hits) == 1:
            return simple_hits[0]
        if simple_hits:
            return None  # ambiguous within the package
        if name in self._by_qualified:
            return name
        if "." in name:
            return None  # dotted name that matches nothing internal
        project_hits = self.type_index.get(name, [])
        if len(project_hits) == 1:
            return project_hits[0]
        return None


@dataclass
class ClassMetrics:
    """The seven per-class metric values."""

    qualified_name: str
    loc: int
    comment_percentage: float
    cbo: int
    lcom: int
    wmc: int
    noc: int
    dit: int


@dataclass
class VersionAggregates:
    version_label: str
    package_count: int
    class_count: int
    total_loc: int
    total_wmc: int


@dataclass
class LayoutConfig:
    """Knobs for the city geometry.

    min_loc_for_building filters out classes too small to draw; the
    remaining scales map metric values to scene units.  All values must
    be positive.
    """

    min_loc_for_building: int = 10
    unit_per_sqrt_loc: float = 1.0
    unit_per_wmc: float = 0.5
    min_height: float = 1.0
    building_gap: float = 1.0
    plot_gap: float = 2.0

    def validate(self) -> None:
        for name in (
            "min_loc_for_building",
            "unit_per_sqrt_loc",
            "unit_per_wmc",
            "min_height",
            "building_gap",
            "plot_gap",
        ):
            if getattr(self, name) <= 0:
                raise ValueError(f"LayoutConfig.{name} must be positive")


@dataclass
class Building:
    """One class rendered as a box.

    position is the building's minimum-x/minimum-z corner in plot-local
    coordinates.  color_factor 0 means cyan (lowest coupling in the
    version), 1 means yellow (highest).
    """

    class_ref: str
    base_side: float
    height: float
    position: tuple[float, float]
    color_factor: float
    metrics_summary: ClassMetrics


@dataclass
class Plot:
    """A package's ground rectangle; origin is its world min corner."""

    package_ref: str
    buildings: list[Building]
    origin: tuple[float, float]
    width: float
    depth: float


@dataclass
class CityModel:
    version_label: str
    ground_width: float
    ground_depth: float
    plots: list[Plot]


@dataclass
class Thresholds:
    """Detection limits for one version: twice the arithmetic mean of
    WMC (skyscrapers) and of LOC (heavy buildings) over its n classes."""

    skyscraper_height_limit: float
    heavy_base_limit: float
    class_count_n: int


@dataclass
class Detection:
    version_label: str
    skyscrapers: list[str]
    heavy_classes: list[str]


@dataclass
class ChartEntry:
    """Raw and natural-log values of the four charted aggregates for one
    version.  A zero aggregate cannot be log-scaled; it maps to 0 and its
    key is recorded in zero_value_keys."""

    version_label: str
    values: dict[str, int]
    ln_values: dict[str, float]
    zero_value_keys: list[str]


@dataclass
class EvolutionReport:
    versions: list[VersionAggregates]
    chart_series: list[ChartEntry]
    detections: list[Detection]


@dataclass
class VersionSnapshot:
    """Complete analysis output for one version."""

    version_label: str
    aggregates: VersionAggregates
    classes: list[ClassMetrics]
    city: CityModel


@dataclass
class CityBundle:
    """The serialized artifact consumed by `report`, `serve` and the viewer."""

    format_version: str
    project_name: str
    snapshots: list[VersionSnapshot]
    evolution: EvolutionReport
    generated_at: str
    tool_version: str


@dataclass
class AnalysisConfig:
    """What to analyze: ordered (label, root) pairs plus layout knobs."""

    version_inputs: list[tuple[str, str]]
    layout: LayoutConfig
    output_path: str
    project_name: str = "project"
    include_timestamp: bool = True

    def validate(self) -> None:
        if not self.version_inputs:
            raise ValueError("at least one version input is required")
        labels = [label for label, _ in self.version_inputs]
        if any(not label for label in labels):
            raise ValueError("version labels must be non-empty")
        if len(set(labels)) != len(labels):
            raise ValueError("version labels must be unique")
        self.layout.validate()
