"""Assembly of parsed compilation units into one project model."""

from __future__ import annotations

from .errors import InputError, JavaParseError
from .javaparse import parse_unit
from .log import ScanLog
from .models import ClassModel, ProjectModel, SourceFile
from .scanner import scan_tree


def build_project(
    root: str, version_label: str, log: ScanLog | None = None
) -> ProjectModel:
    """Scan, parse and index a source tree as one analyzed version.

    Units that fail to parse are skipped with a warning so one broken file
    cannot sink a whole version.  Two units declaring the same qualified
    name is a hard error: the model could not say which one a reference
    means.
    """
    log = log or ScanLog()
    files = scan_tree(root, log)
    return build_project_from_files(files, root, version_label, log)


def build_project_from_files(
    files: list[SourceFile],
    root: str,
    version_label: str,
    log: ScanLog | None = None,
) -> ProjectModel:
    log = log or ScanLog()
    packages: dict[str, list[ClassModel]] = {}
    declared_in: dict[str, str] = {}
    for file in files:
        try:
            models = parse_unit(file)
        except JavaParseError as exc:
            log.warn(file.path, f"parse failed ({exc.line}: {exc.message}), skipped")
            continue
        for model in models:
            prior = declared_in.get(model.qualified_name)
            if prior is not None:
                raise InputError(
                    f"duplicate class {model.qualified_name}: "
                    f"declared in both {prior} and {file.path}"
                )
            declared_in[model.qualified_name] = file.path
            packages.setdefault(model.package_name, []).append(model)
    for classes in packages.values():
        classes.sort(key=lambda c: c.qualified_name)
    type_index: dict[str, list[str]] = {}
    for classes in packages.values():
        for model in classes:
            type_index.setdefault(model.simple_name, []).append(model.qualified_name)
    for names in type_index.values():
        names.sort()
    return ProjectModel(
        root_path=root,
        version_label=version_label,
        packages=packages,
        type_index=type_index,
    )
