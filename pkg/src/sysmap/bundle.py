"""City bundle serialization: one JSON document per analysis run.

Top-level keys: formatVersion ("1"), projectName, snapshots, evolution,
toolVersion, generatedAt. Each snapshot holds versionLabel, aggregates
(packageCount, classCount, totalLoc, totalWmc), classes (the seven metrics
per class) and city (groundWidth, groundDepth, plots). Each plot holds
packageName, origin [x, z], width, depth, buildings; each building holds
classRef, baseSide, height, position [x, z], colorFactor. The evolution
section holds versions, chartSeries (values, lnValues, zeroValueKeys per
version) and detections (skyscrapers, heavyClasses per version).

Reading validates the whole document and reports the first violation with
its JSON path. Writing is atomic: the document lands under a temporary
name and is renamed into place, so an interrupted run leaves no partial
bundle behind.
"""

from __future__ import annotations

import json
import os
import tempfile

from .errors import BundleError
from .evolution import CHART_KEYS
from .models import (
    Building,
    ChartEntry,
    CityBundle,
    CityModel,
    ClassMetrics,
    Detection,
    EvolutionReport,
    Plot,
    VersionAggregates,
    VersionSnapshot,
)

FORMAT_VERSION = "1"

_METRIC_KEYS = ("loc", "commentPercentage", "cbo", "lcom", "wmc", "noc", "dit")


# -- writing ----------------------------------------------------------------


def _aggregates_to_dict(agg: VersionAggregates) -> dict:
    return {
        "versionLabel": agg.version_label,
        "packageCount": agg.package_count,
        "classCount": agg.class_count,
        "totalLoc": agg.total_loc,
        "totalWmc": agg.total_wmc,
    }


def _metrics_to_dict(m: ClassMetrics) -> dict:
    return {
        "qualifiedName": m.qualified_name,
        "loc": m.loc,
        "commentPercentage": m.comment_percentage,
        "cbo": m.cbo,
        "lcom": m.lcom,
        "wmc": m.wmc,
        "noc": m.noc,
        "dit": m.dit,
    }


def _building_to_dict(b: Building) -> dict:
    return {
        "classRef": b.class_ref,
        "baseSide": b.base_side,
        "height": b.height,
        "position": [b.position[0], b.position[1]],
        "colorFactor": b.color_factor,
    }


def _plot_to_dict(p: Plot) -> dict:
    return {
        "packageName": p.package_ref,
        "origin": [p.origin[0], p.origin[1]],
        "width": p.width,
        "depth": p.depth,
        "buildings": [_building_to_dict(b) for b in p.buildings],
    }


def _city_to_dict(c: CityModel) -> dict:
    return {
        "groundWidth": c.ground_width,
        "groundDepth": c.ground_depth,
        "plots": [_plot_to_dict(p) for p in c.plots],
    }


def _snapshot_to_dict(s: VersionSnapshot) -> dict:
    return {
        "versionLabel": s.version_label,
        "aggregates": {
            "packageCount": s.aggregates.package_count,
            "classCount": s.aggregates.class_count,
            "totalLoc": s.aggregates.total_loc,
            "totalWmc": s.aggregates.total_wmc,
        },
        "classes": [_metrics_to_dict(m) for m in s.classes],
        "city": _city_to_dict(s.city),
    }


def _evolution_to_dict(e: EvolutionReport) -> dict:
    return {
        "versions": [_aggregates_to_dict(a) for a in e.versions],
        "chartSeries": [
            {
                "versionLabel": entry.version_label,
                "values": {key: entry.values[key] for key in CHART_KEYS},
                "lnValues": {key: entry.ln_values[key] for key in CHART_KEYS},
                "zeroValueKeys": list(entry.zero_value_keys),
            }
            for entry in e.chart_series
        ],
        "detections": [
            {
                "versionLabel": d.version_label,
                "skyscrapers": list(d.skyscrapers),
                "heavyClasses": list(d.heavy_classes),
            }
            for d in e.detections
        ],
    }


def bundle_to_dict(bundle: CityBundle) -> dict:
    return {
        "formatVersion": bundle.format_version,
        "projectName": bundle.project_name,
        "generatedAt": bundle.generated_at,
        "toolVersion": bundle.tool_version,
        "snapshots": [_snapshot_to_dict(s) for s in bundle.snapshots],
        "evolution": _evolution_to_dict(bundle.evolution),
    }


def dumps_bundle(bundle: CityBundle) -> str:
    return json.dumps(bundle_to_dict(bundle), indent=2) + "\n"


def write_bundle(bundle: CityBundle, path: str) -> None:
    """Serialize to path atomically (temp file in place, then rename)."""
    directory = os.path.dirname(os.path.abspath(path))
    payload = dumps_bundle(bundle)
    fd, temp_path = tempfile.mkstemp(
        prefix=".bundle-", suffix=".tmp", dir=directory
    )
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as handle:
            handle.write(payload)
        os.replace(temp_path, path)
    except BaseException:
        try:
            os.unlink(temp_path)
        except OSError:
            pass
        raise


# -- validation and reading ---------------------------------------------------


class _Check:
    """Walks a decoded document, failing with the first violation's path."""

    def fail(self, path: str, message: str) -> BundleError:
        return BundleError(f"{path}: {message}")

    def obj(self, value: object, path: str) -> dict:
        if not isinstance(value, dict):
            raise self.fail(path, f"expected an object, got {_kind(value)}")
        return value

    def arr(self, value: object, path: str) -> list:
        if not isinstance(value, list):
            raise self.fail(path, f"expected an array, got {_kind(value)}")
        return value

    def field(self, owner: dict, key: str, path: str) -> object:
        if key not in owner:
            raise self.fail(path, f"missing key '{key}'")
        return owner[key]

    def string(self, owner: dict, key: str, path: str) -> str:
        value = self.field(owner, key, path)
        if not isinstance(value, str):
            raise self.fail(f"{path}.{key}", f"expected a string, got {_kind(value)}")
        return value

    def count(self, owner: dict, key: str, path: str, minimum: int = 0) -> int:
        value = self.field(owner, key, path)
        if isinstance(value, bool) or not isinstance(value, int):
            raise self.fail(f"{path}.{key}", f"expected an integer, got {_kind(value)}")
        if value < minimum:
            raise self.fail(f"{path}.{key}", f"must be >= {minimum}, got {value}")
        return value

    def number(
        self,
        owner: dict,
        key: str,
        path: str,
        minimum: float | None = None,
        maximum: float | None = None,
        exclusive_minimum: float | None = None,
    ) -> float:
        value = self.field(owner, key, path)
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise self.fail(f"{path}.{key}", f"expected a number, got {_kind(value)}")
        out = float(value)
        if minimum is not None and out < minimum:
            raise self.fail(f"{path}.{key}", f"must be >= {minimum}, got {value}")
        if exclusive_minimum is not None and out <= exclusive_minimum:
            raise self.fail(f"{path}.{key}", f"must be > {exclusive_minimum}, got {value}")
        if maximum is not None and out > maximum:
            raise self.fail(f"{path}.{key}", f"must be <= {maximum}, got {value}")
        return out

    def pair(self, owner: dict, key: str, path: str) -> tuple[float, float]:
        value = self.field(owner, key, path)
        here = f"{path}.{key}"
        items = self.arr(value, here)
        if len(items) != 2:
            raise self.fail(here, f"expected [x, z], got {len(items)} elements")
        out = []
        for idx, item in enumerate(items):
            if isinstance(item, bool) or not isinstance(item, (int, float)):
                raise self.fail(f"{here}[{idx}]", f"expected a number, got {_kind(item)}")
            out.append(float(item))
        return out[0], out[1]


def _kind(value: object) -> str:
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "a boolean"
    if isinstance(value, (int, float)):
        return "a number"
    if isinstance(value, str):
        return "a string"
    if isinstance(value, list):
        return "an array"
    if isinstance(value, dict):
        return "an object"
    return type(value).__name__


def _parse_metrics(check: _Check, data: object, path: str) -> ClassMetrics:
    owner = check.obj(data, path)
    name = check.string(owner, "qualifiedName", path)
    loc = check.count(owner, "loc", path, minimum=1)
    pct = check.number(owner, "commentPercentage", path, minimum=0.0, maximum=100.0)
    cbo = check.count(owner, "cbo", path)
    lcom = check.count(owner, "lcom", path)
    wmc = check.count(owner, "wmc", path)
    noc = check.count(owner, "noc", path)
    dit = check.count(owner, "dit", path)
    return ClassMetrics(
        qualified_name=name, loc=loc, comment_percentage=pct,
        cbo=cbo, lcom=lcom, wmc=wmc, noc=noc, dit=dit,
    )


def _parse_building(
    check: _Check, data: object, path: str, metrics_by_name: dict[str, ClassMetrics]
) -> Building:
    owner = check.obj(data, path)
    class_ref = check.string(owner, "classRef", path)
    if class_ref not in metrics_by_name:
        raise check.fail(f"{path}.classRef", f"no metrics entry for '{class_ref}'")
    base_side = check.number(owner, "baseSide", path, exclusive_minimum=0.0)
    height = check.number(owner, "height", path, exclusive_minimum=0.0)
    position = check.pair(owner, "position", path)
    color = check.number(owner, "colorFactor", path, minimum=0.0, maximum=1.0)
    return Building(
        class_ref=class_ref,
        base_side=base_side,
        height=height,
        position=position,
        color_factor=color,
        metrics_summary=metrics_by_name[class_ref],
    )


def _parse_city(
    check: _Check, data: object, path: str, version_label: str,
    metrics_by_name: dict[str, ClassMetrics],
) -> CityModel:
    owner = check.obj(data, path)
    ground_w = check.number(owner, "groundWidth", path, minimum=0.0)
    ground_d = check.number(owner, "groundDepth", path, minimum=0.0)
    plots: list[Plot] = []
    for p_idx, plot_data in enumerate(check.arr(check.field(owner, "plots", path), f"{path}.plots")):
        p_path = f"{path}.plots[{p_idx}]"
        p_owner = check.obj(plot_data, p_path)
        package_name = check.string(p_owner, "packageName", p_path)
        origin = check.pair(p_owner, "origin", p_path)
        width = check.number(p_owner, "width", p_path, exclusive_minimum=0.0)
        depth = check.number(p_owner, "depth", p_path, exclusive_minimum=0.0)
        buildings = [
            _parse_building(check, b_data, f"{p_path}.buildings[{b_idx}]", metrics_by_name)
            for b_idx, b_data in enumerate(
                check.arr(check.field(p_owner, "buildings", p_path), f"{p_path}.buildings")
            )
        ]
        plots.append(Plot(package_ref=package_name, buildings=buildings,
                          origin=origin, width=width, depth=depth))
    return CityModel(version_label=version_label, ground_width=ground_w,
                     ground_depth=ground_d, plots=plots)


def _parse_aggregates(check: _Check, owner: dict, path: str, version_label: str) -> VersionAggregates:
    return VersionAggregates(
        version_label=version_label,
        package_count=check.count(owner, "packageCount", path),
        class_count=check.count(owner, "classCount", path),
        total_loc=check.count(owner, "totalLoc", path),
        total_wmc=check.count(owner, "totalWmc", path),
    )


def _parse_snapshot(check: _Check, data: object, path: str) -> VersionSnapshot:
    owner = check.obj(data, path)
    label = check.string(owner, "versionLabel", path)
    if not label:
        raise check.fail(f"{path}.versionLabel", "must not be empty")
    agg_owner = check.obj(check.field(owner, "aggregates", path), f"{path}.aggregates")
    aggregates = _parse_aggregates(check, agg_owner, f"{path}.aggregates", label)
    classes = [
        _parse_metrics(check, m_data, f"{path}.classes[{idx}]")
        for idx, m_data in enumerate(check.arr(check.field(owner, "classes", path), f"{path}.classes"))
    ]
    metrics_by_name: dict[str, ClassMetrics] = {}
    for idx, m in enumerate(classes):
        if m.qualified_name in metrics_by_name:
            raise check.fail(f"{path}.classes[{idx}].qualifiedName",
                             f"duplicate class '{m.qualified_name}'")
        metrics_by_name[m.qualified_name] = m
    if aggregates.class_count != len(classes):
        raise check.fail(f"{path}.aggregates.classCount",
                         f"says {aggregates.class_count} but classes has {len(classes)} entries")
    city = _parse_city(check, check.field(owner, "city", path), f"{path}.city", label, metrics_by_name)
    return VersionSnapshot(version_label=label, aggregates=aggregates,
                           classes=classes, city=city)


def _parse_chart_entry(check: _Check, data: object, path: str) -> ChartEntry:
    owner = check.obj(data, path)
    label = check.string(owner, "versionLabel", path)
    values_owner = check.obj(check.field(owner, "values", path), f"{path}.values")
    ln_owner = check.obj(check.field(owner, "lnValues", path), f"{path}.lnValues")
    values = {key: check.count(values_owner, key, f"{path}.values") for key in CHART_KEYS}
    ln_values = {key: check.number(ln_owner, key, f"{path}.lnValues") for key in CHART_KEYS}
    zero_keys_raw = check.arr(check.field(owner, "zeroValueKeys", path), f"{path}.zeroValueKeys")
    zero_keys: list[str] = []
    for idx, item in enumerate(zero_keys_raw):
        if not isinstance(item, str) or item not in CHART_KEYS:
            raise check.fail(f"{path}.zeroValueKeys[{idx}]",
                             f"expected one of {', '.join(CHART_KEYS)}")
        zero_keys.append(item)
    return ChartEntry(version_label=label, values=values,
                      ln_values=ln_values, zero_value_keys=zero_keys)


def _parse_detection(check: _Check, data: object, path: str) -> Detection:
    owner = check.obj(data, path)
    label = check.string(owner, "versionLabel", path)
    out: dict[str, list[str]] = {}
    for key in ("skyscrapers", "heavyClasses"):
        items = check.arr(check.field(owner, key, path), f"{path}.{key}")
        names: list[str] = []
        for idx, item in enumerate(items):
            if not isinstance(item, str):
                raise check.fail(f"{path}.{key}[{idx}]", f"expected a string, got {_kind(item)}")
            names.append(item)
        out[key] = names
    return Detection(version_label=label, skyscrapers=out["skyscrapers"],
                     heavy_classes=out["heavyClasses"])


def _parse_evolution(
    check: _Check, data: object, path: str, snapshot_labels: list[str]
) -> EvolutionReport:
    owner = check.obj(data, path)
    versions_raw = check.arr(check.field(owner, "versions", path), f"{path}.versions")
    versions: list[VersionAggregates] = []
    for idx, v_data in enumerate(versions_raw):
        v_path = f"{path}.versions[{idx}]"
        v_owner = check.obj(v_data, v_path)
        label = check.string(v_owner, "versionLabel", v_path)
        versions.append(_parse_aggregates(check, v_owner, v_path, label))
    labels = [v.version_label for v in versions]
    if labels != snapshot_labels:
        raise check.fail(f"{path}.versions",
                         "version labels do not match snapshot order "
                         f"({labels} vs {snapshot_labels})")
    chart_series = [
        _parse_chart_entry(check, c_data, f"{path}.chartSeries[{idx}]")
        for idx, c_data in enumerate(check.arr(check.field(owner, "chartSeries", path), f"{path}.chartSeries"))
    ]
    detections = [
        _parse_detection(check, d_data, f"{path}.detections[{idx}]")
        for idx, d_data in enumerate(check.arr(check.field(owner, "detections", path), f"{path}.detections"))
    ]
    for name, series in (("chartSeries", chart_series), ("detections", detections)):
        series_labels = [entry.version_label for entry in series]
        if series_labels != snapshot_labels:
            raise check.fail(f"{path}.{name}",
                             "version labels do not match snapshot order "
                             f"({series_labels} vs {snapshot_labels})")
    return EvolutionReport(versions=versions, chart_series=chart_series,
                           detections=detections)


def bundle_from_dict(data: object) -> CityBundle:
    """Validate a decoded JSON document and build the in-memory bundle.

    Raises BundleError naming the first violating path.
    """
    check = _Check()
    owner = check.obj(data, "$")
    format_version = check.string(owner, "formatVersion", "$")
    if format_version != FORMAT_VERSION:
        raise check.fail("$.formatVersion",
                         f"unsupported format '{format_version}' (expected '{FORMAT_VERSION}')")
    project_name = check.string(owner, "projectName", "$")
    generated_at = check.string(owner, "generatedAt", "$")
    tool_version = check.string(owner, "toolVersion", "$")
    snapshots_raw = check.arr(check.field(owner, "snapshots", "$"), "$.snapshots")
    snapshots = [
        _parse_snapshot(check, s_data, f"$.snapshots[{idx}]")
        for idx, s_data in enumerate(snapshots_raw)
    ]
    labels = [s.version_label for s in snapshots]
    if len(set(labels)) != len(labels):
        raise check.fail("$.snapshots", "duplicate version labels")
    evolution = _parse_evolution(
        check, check.field(owner, "evolution", "$"), "$.evolution", labels
    )
    return CityBundle(
        format_version=format_version,
        project_name=project_name,
        snapshots=snapshots,
        evolution=evolution,
        generated_at=generated_at,
        tool_version=tool_version,
    )


def read_bundle(path: str) -> CityBundle:
    try:
        with open(path, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise BundleError(f"cannot read bundle {path}: {exc.strerror or exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise BundleError(f"{path} is not valid JSON: {exc}") from exc
    return bundle_from_dict(data)
