"""Outlier detection and cross-version evolution reporting.

A class is flagged as a skyscraper when its wmc strictly exceeds twice the
version's mean wmc, and as a heavy class when its loc strictly exceeds
twice the version's mean loc. Means are taken over the version's complete
class list, before any building-size filtering, so the thresholds describe
the population rather than the rendered city.

The report also carries, for each version, the four aggregate counts and
their natural logarithms for chart display; ln(0) is emitted as 0 with the
key recorded in zeroValueKeys so a chart can annotate it honestly.
"""

from __future__ import annotations

import math

from .errors import InputError
from .models import (
    ChartEntry,
    ClassMetrics,
    Detection,
    EvolutionReport,
    Thresholds,
    VersionSnapshot,
)

CHART_KEYS = ("packageCount", "classCount", "totalLoc", "totalWmc")


def skyscraper_limit(metrics: list[ClassMetrics]) -> float:
    if not metrics:
        raise InputError("no classes in version")
    return 2.0 * sum(m.wmc for m in metrics) / len(metrics)


def heavy_limit(metrics: list[ClassMetrics]) -> float:
    if not metrics:
        raise InputError("no classes in version")
    return 2.0 * sum(m.loc for m in metrics) / len(metrics)


def thresholds_for(metrics: list[ClassMetrics]) -> Thresholds:
    return Thresholds(
        skyscraper_height_limit=skyscraper_limit(metrics),
        heavy_base_limit=heavy_limit(metrics),
        class_count_n=len(metrics),
    )


def detect(version_label: str, metrics: list[ClassMetrics]) -> Detection:
    """Classify a version's classes against both limits (strict >).

    Result lists are ordered worst-first: by the exceeded metric
    descending, then by name.
    """
    limits = thresholds_for(metrics)
    tall = [m for m in metrics if m.wmc > limits.skyscraper_height_limit]
    tall.sort(key=lambda m: (-m.wmc, m.qualified_name))
    wide = [m for m in metrics if m.loc > limits.heavy_base_limit]
    wide.sort(key=lambda m: (-m.loc, m.qualified_name))
    return Detection(
        version_label=version_label,
        skyscrapers=[m.qualified_name for m in tall],
        heavy_classes=[m.qualified_name for m in wide],
    )


def chart_ln(value: int) -> float:
    """Natural log for chart bars; 0 stays 0 (annotated, not plotted as -inf)."""
    if value <= 0:
        return 0.0
    return math.log(value)


def build_report(snapshots: list[VersionSnapshot]) -> EvolutionReport:
    """Assemble the cross-version report, preserving snapshot order."""
    if not snapshots:
        raise InputError("no snapshots to report on")
    seen: set[str] = set()
    for snap in snapshots:
        if snap.version_label in seen:
            raise InputError(f"duplicate version label: {snap.version_label}")
        seen.add(snap.version_label)
    chart_series: list[ChartEntry] = []
    detections: list[Detection] = []
    for snap in snapshots:
        agg = snap.aggregates
        values = {
            "packageCount": agg.package_count,
            "classCount": agg.class_count,
            "totalLoc": agg.total_loc,
            "totalWmc": agg.total_wmc,
        }
        chart_series.append(
            ChartEntry(
                version_label=snap.version_label,
                values=values,
                ln_values={key: chart_ln(v) for key, v in values.items()},
                zero_value_keys=[key for key in CHART_KEYS if values[key] == 0],
            )
        )
        if snap.classes:
            detections.append(detect(snap.version_label, snap.classes))
        else:
            # an empty version has no population to take a mean over
            detections.append(Detection(snap.version_label, [], []))
    return EvolutionReport(
        versions=[snap.aggregates for snap in snapshots],
        chart_series=chart_series,
        detections=detections,
    )
