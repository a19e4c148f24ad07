"""Per-class metric suite and per-version aggregates.

Seven metrics per class: physical line span (loc), comment percentage over
that span, coupling to other project classes (cbo), lack of cohesion of
methods (lcom, the pair-counting variant floored at zero), weighted methods
per class (wmc, weight = cyclomatic complexity), number of direct children
(noc), and inheritance depth within the project (dit).

Everything here is a pure function of the ProjectModel; cross-class metrics
resolve names only against project-internal classes, so external library
types never influence a value.
"""

from __future__ import annotations

from itertools import combinations

from .log import ScanLog
from .models import ClassMetrics, ClassModel, ProjectModel, VersionAggregates


def compute_loc(model: ClassModel) -> int:
    """All physical lines from the declaration to its closing brace."""
    return model.loc_span


def compute_comment_percentage(model: ClassModel) -> float:
    return 100.0 * model.comment_lines_in_span / model.loc_span


def compute_wmc(model: ClassModel) -> int:
    """Sum of per-method cyclomatic complexity (1 + decision points)."""
    return sum(1 + m.decision_points for m in model.methods)


def compute_lcom(model: ClassModel) -> int:
    """Method pairs sharing no field minus pairs sharing one, min 0."""
    shared_none = 0
    shared_some = 0
    for a, b in combinations(model.methods, 2):
        if a.accessed_field_names & b.accessed_field_names:
            shared_some += 1
        else:
            shared_none += 1
    return max(shared_none - shared_some, 0)


def _coupled_names(model: ClassModel) -> set[str]:
    names = set(model.referenced_type_names)
    if model.superclass_name:
        names.add(model.superclass_name)
    names.update(model.interface_names)
    return names


def compute_cbo(model: ClassModel, project: ProjectModel) -> int:
    """Distinct other project classes this class refers to."""
    resolved: set[str] = set()
    for name in _coupled_names(model):
        target = project.resolve(name, model.package_name)
        if target is not None and target != model.qualified_name:
            resolved.add(target)
    return len(resolved)


def compute_noc(model: ClassModel, project: ProjectModel) -> int:
    """Direct subclasses, plus direct implementors for interfaces."""
    count = 0
    for other in project.classes:
        if other.qualified_name == model.qualified_name:
            continue
        if other.superclass_name is not None:
            parent = project.resolve(other.superclass_name, other.package_name)
            if parent == model.qualified_name:
                count += 1
        for iface in other.interface_names:
            if project.resolve(iface, other.package_name) == model.qualified_name:
                count += 1
    return count


def compute_dit(
    model: ClassModel, project: ProjectModel, log: ScanLog | None = None
) -> int:
    """Superclass-chain length within the project.

    External superclasses truncate the chain; a cycle stops at the first
    revisited class and is reported once.
    """
    depth = 0
    seen = {model.qualified_name}
    current = model
    while current.superclass_name is not None:
        parent_name = project.resolve(current.superclass_name, current.package_name)
        if parent_name is None:
            break
        if parent_name in seen:
            if log is not None:
                log.warn(
                    model.qualified_name,
                    f"inheritance cycle through {parent_name}, depth truncated",
                )
            break
        parent = project.lookup(parent_name)
        if parent is None:
            break
        depth += 1
        seen.add(parent_name)
        current = parent
    return depth


def compute_class_metrics(
    model: ClassModel, project: ProjectModel, log: ScanLog | None = None
) -> ClassMetrics:
    return ClassMetrics(
        qualified_name=model.qualified_name,
        loc=compute_loc(model),
        comment_percentage=compute_comment_percentage(model),
        cbo=compute_cbo(model, project),
        lcom=compute_lcom(model),
        wmc=compute_wmc(model),
        noc=compute_noc(model, project),
        dit=compute_dit(model, project, log),
    )


def compute_all(
    project: ProjectModel, log: ScanLog | None = None
) -> tuple[list[ClassMetrics], VersionAggregates]:
    """Metrics for every class (sorted by qualified name) plus totals."""
    metrics = [
        compute_class_metrics(model, project, log) for model in project.classes
    ]
    metrics.sort(key=lambda m: m.qualified_name)
    aggregates = VersionAggregates(
        version_label=project.version_label,
        package_count=len(project.packages),
        class_count=len(metrics),
        total_loc=sum(m.loc for m in metrics),
        total_wmc=sum(m.wmc for m in metrics),
    )
    return metrics, aggregates
