"""semiplanar-v1 JSON documents and DOT export."""

from pathlib import Path
from typing import Union

from pydantic import ValidationError

from curvaplane.core.errors import FormatError
from curvaplane.core.files import write_text_atomic
from curvaplane.core.logging import get_logger
from curvaplane.graph.halfedge import HalfEdgeMap, build_map
from curvaplane.graph.models import GraphDocument

logger = get_logger(__name__)


def map_to_document(hmap: HalfEdgeMap) -> GraphDocument:
    coordinates = None
    if hmap.coordinates is not None:
        coordinates = [(float(x), float(y)) for x, y in hmap.coordinates]
    return GraphDocument(
        vertex_count=hmap.vertex_count,
        faces=[list(face) for face in hmap.faces],
        coordinates=coordinates,
        metadata=hmap.metadata or None,
    )


def map_from_document(document: GraphDocument) -> HalfEdgeMap:
    return build_map(
        document.faces,
        vertex_count=document.vertex_count,
        coordinates=document.coordinates,
        metadata=document.metadata,
    )


def dumps_map(hmap: HalfEdgeMap) -> str:
    """Serialize a map; key order and face order are stable."""
    return map_to_document(hmap).model_dump_json(exclude_none=True, indent=None) + "\n"


def loads_map(text: str) -> HalfEdgeMap:
    """Parse a semiplanar-v1 document.

    Raises:
        FormatError: If the text is not a valid document
    """
    try:
        document = GraphDocument.model_validate_json(text)
    except ValidationError as e:
        raise FormatError(f"not a semiplanar-v1 document: {e.errors()[0]['msg']}") from e
    return map_from_document(document)


def write_map(hmap: HalfEdgeMap, path: Union[str, Path]) -> None:
    write_text_atomic(path, dumps_map(hmap))


def read_map(path: Union[str, Path]) -> HalfEdgeMap:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise FormatError(f"cannot read {path}: {e}") from e
    hmap = loads_map(text)
    logger.info(f"Loaded {hmap!r} from {path}")
    return hmap


def to_dot(hmap: HalfEdgeMap) -> str:
    """Graphviz DOT text; nodes get ``pos="x,y!"`` when coordinates exist."""
    lines = ["graph semiplanar {", "  node [shape=point];"]
    for v in range(hmap.vertex_count):
        attrs = []
        if hmap.coordinates is not None:
            x, y = hmap.coordinates[v]
            attrs.append(f'pos="{x:.6f},{y:.6f}!"')
        if v in hmap.window_boundary:
            attrs.append("color=gray")
        suffix = f" [{', '.join(attrs)}]" if attrs else ""
        lines.append(f"  {v}{suffix};")
    for u, v in hmap.edges:
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"

