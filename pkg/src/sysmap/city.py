"""Deterministic 3D city construction from one version's metrics.

Mapping rules: a building's footprint area is proportional to the class's
line count (side = sqrt(loc) x scale), its height proportional to wmc with
a visibility floor, and its color factor is the class's coupling normalized
linearly between the version's min and max. Packages become rectangular
plots; plots sit on a grey ground plane (the viewer owns the actual
palette, the model only carries geometry and the 0..1 color factor).

Layout is shelf packing: items sorted by size descending (name tiebreak)
fill left-to-right rows whose width is capped near the square root of the
total item area, so the result is roughly square. Everything is computed
with pre-rounded dimensions, which keeps output byte-stable across runs
and input orderings.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .models import (
    Building,
    CityModel,
    ClassMetrics,
    LayoutConfig,
    Plot,
)


def _r3(value: float) -> float:
    """Geometry is emitted at 3 fractional digits; layout consumes the
    rounded values so serialized coordinates are exact sums of them."""
    return round(value, 3)


def color_for_coupling(cbo: int, min_cbo: int, max_cbo: int) -> float:
    """Linear 0..1 position of cbo within the version's range.

    A flat range (every class equally coupled) maps to 0: an all-cyan city.
    """
    if max_cbo <= min_cbo:
        return 0.0
    return (cbo - min_cbo) / (max_cbo - min_cbo)


@dataclass
class _Item:
    key: str
    side_w: float  # extent along x
    side_d: float  # extent along z
    payload: object


@dataclass
class _Placed:
    item: _Item
    x: float
    z: float


def _shelf_pack(items: list[_Item], gap: float) -> tuple[list[_Placed], float, float]:
    """Pack items into rows; returns placements plus content width/depth.

    Items must already be sorted (size descending). Positions are relative
    to the content origin; the caller adds outer margins. The row width cap
    is sqrt(2 x total padded area), which always admits at least the two
    largest items per row when sizes are equal, and never splits below the
    widest single item.
    """
    if not items:
        return [], 0.0, 0.0
    padded_area = sum((it.side_w + gap) * (it.side_d + gap) for it in items)
    cap = max(max(it.side_w for it in items), math.sqrt(2.0 * padded_area))
    placed: list[_Placed] = []
    x = 0.0
    z = 0.0
    row_depth = 0.0
    content_w = 0.0
    for it in items:
        end = x + it.side_w if x == 0.0 else x + gap + it.side_w
        if x > 0.0 and end > cap:
            z += row_depth + gap
            x = 0.0
            row_depth = 0.0
            end = it.side_w
        start = 0.0 if x == 0.0 else x + gap
        placed.append(_Placed(it, start, z))
        x = end
        row_depth = max(row_depth, it.side_d)
        content_w = max(content_w, end)
    content_d = z + row_depth
    return placed, content_w, content_d


def building_dimensions(
    metrics: ClassMetrics, config: LayoutConfig
) -> tuple[float, float]:
    side = _r3(math.sqrt(metrics.loc) * config.unit_per_sqrt_loc)
    height = _r3(max(metrics.wmc * config.unit_per_wmc, config.min_height))
    return side, height


def build_plot(
    package_name: str,
    metrics: list[ClassMetrics],
    config: LayoutConfig,
    color_range: tuple[int, int] | None = None,
) -> Plot:
    """Lay out one package's qualifying classes on a plot at origin (0,0).

    color_range is the version-wide (min cbo, max cbo); when omitted it is
    taken from the given metrics alone (single-plot use).
    """
    qualifying = [m for m in metrics if m.loc >= config.min_loc_for_building]
    if color_range is None and qualifying:
        color_range = (min(m.cbo for m in qualifying), max(m.cbo for m in qualifying))
    gap = config.building_gap
    if not qualifying:
        side = _r3(2 * gap)
        return Plot(package_ref=package_name, buildings=[], origin=(0.0, 0.0), width=side, depth=side)
    items: list[_Item] = []
    for m in qualifying:
        side, height = building_dimensions(m, config)
        items.append(_Item(key=m.qualified_name, side_w=side, side_d=side, payload=(m, height)))
    items.sort(key=lambda it: (-it.side_w, it.key))
    placed, content_w, content_d = _shelf_pack(items, gap)
    buildings: list[Building] = []
    for p in placed:
        m, height = p.item.payload
        buildings.append(
            Building(
                class_ref=m.qualified_name,
                base_side=p.item.side_w,
                height=height,
                position=(_r3(gap + p.x), _r3(gap + p.z)),
                color_factor=round(color_for_coupling(m.cbo, *color_range), 6),
                metrics_summary=m,
            )
        )
    return Plot(
        package_ref=package_name,
        buildings=buildings,
        origin=(0.0, 0.0),
        width=_r3(content_w + 2 * gap),
        depth=_r3(content_d + 2 * gap),
    )


def build_city(
    metrics: list[ClassMetrics],
    packages: list[str],
    config: LayoutConfig,
    version_label: str = "",
) -> CityModel:
    """Assemble all package plots onto one ground plane.

    metrics is the version's complete list (pre-filter); the coupling color
    range comes from it so filtered-out classes still anchor the palette.
    packages lists every package of the version, including ones left with
    no qualifying building.
    """
    config.validate()
    if metrics:
        color_range = (min(m.cbo for m in metrics), max(m.cbo for m in metrics))
    else:
        color_range = (0, 0)
    package_names = sorted(set(packages))
    by_package: dict[str, list[ClassMetrics]] = {name: [] for name in package_names}
    for m in metrics:
        home = _package_of(m.qualified_name, package_names)
        by_package.setdefault(home, []).append(m)
    plots = {
        name: build_plot(name, by_package[name], config, color_range)
        for name in sorted(by_package)
    }
    gap = config.plot_gap
    items = [
        _Item(key=name, side_w=plot.width, side_d=plot.depth, payload=plot)
        for name, plot in plots.items()
    ]
    items.sort(key=lambda it: (-(it.side_w * it.side_d), it.key))
    placed, content_w, content_d = _shelf_pack(items, gap)
    final_plots: list[Plot] = []
    for p in placed:
        plot = p.item.payload
        plot.origin = (_r3(gap + p.x), _r3(gap + p.z))
        final_plots.append(plot)
    return CityModel(
        version_label=version_label,
        ground_width=_r3(content_w + 2 * gap),
        ground_depth=_r3(content_d + 2 * gap),
        plots=final_plots,
    )


def _package_of(qualified_name: str, package_names: list[str]) -> str:
    """Longest package name that prefixes the qualified name.

    Nested classes (p.Outer.Inner) resolve to the deepest declared package
    prefix, not to a pseudo-package p.Outer.
    """
    best = ""
    found = False
    for name in package_names:
        if name == "" or qualified_name.startswith(name + "."):
            if not found or len(name) > len(best):
                best = name
                found = True
    return best
