"""sysmap: source metrics and 3D city models for Java code bases."""

from __future__ import annotations

__version__ = "0.1.0"
