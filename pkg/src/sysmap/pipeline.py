"""End-to-end analysis: source trees in, city bundle out."""

from __future__ import annotations

from datetime import datetime, timezone

from . import __version__
from .bundle import FORMAT_VERSION, write_bundle
from .city import build_city
from .errors import InputError
from .evolution import build_report
from .log import ScanLog
from .metrics import compute_all
from .models import AnalysisConfig, CityBundle, VersionSnapshot
from .project import build_project


def analyze_version(root: str, label: str, config: AnalysisConfig, log: ScanLog) -> VersionSnapshot:
    project = build_project(root, label, log)
    metrics, aggregates = compute_all(project, log)
    city = build_city(metrics, sorted(project.packages), config.layout, version_label=label)
    return VersionSnapshot(
        version_label=label, aggregates=aggregates, classes=metrics, city=city
    )


def build_bundle(config: AnalysisConfig, log: ScanLog | None = None) -> CityBundle:
    """Run the full pipeline in memory (no file output)."""
    log = log or ScanLog()
    try:
        config.validate()
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    snapshots = [
        analyze_version(root, label, config, log)
        for label, root in config.version_inputs
    ]
    evolution = build_report(snapshots)
    if config.include_timestamp:
        generated_at = datetime.now(timezone.utc).isoformat(timespec="seconds")
    else:
        generated_at = ""
    return CityBundle(
        format_version=FORMAT_VERSION,
        project_name=config.project_name,
        snapshots=snapshots,
        evolution=evolution,
        generated_at=generated_at,
        tool_version=__version__,
    )


def run_analyze(config: AnalysisConfig, log: ScanLog | None = None) -> CityBundle:
    """Analyze every configured version and write the bundle atomically."""
    bundle = build_bundle(config, log)
    write_bundle(bundle, config.output_path)
    return bundle
