"""Serialization, SVG rendering and the command-line interface."""
from .serialize import (
    MalformedDocument,
    document_to_scene,
    read_circles,
    scene_from_json,
    scene_to_document,
    scene_to_json,
    trace_from_document,
    trace_to_document,
)
from .svg import EmptyScene, RenderStyle, scene_to_svg

__all__ = [
    "MalformedDocument",
    "document_to_scene",
    "read_circles",
    "scene_from_json",
    "scene_to_document",
    "scene_to_json",
    "trace_from_document",
    "trace_to_document",
    "EmptyScene",
    "RenderStyle",
    "scene_to_svg",
]
