import json
import logging
from dataclasses import dataclass, field
from pathlib import Path

from complexes.complex import Complex, label_key
from complexes.exceptions import MalformedFaceError, UnknownVertexError

from .exceptions import ComplexFileError

logger = logging.getLogger(__name__)

JSON = "json"
TEXT = "text"
PATH_SUFFIXES = (".json", ".txt")


@dataclass(frozen=True)
class ComplexFile:
    name: str
    complex: Complex
    description: str = ""
    claims: dict = field(default_factory=dict)
    expected: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)


def _looks_like_path(source):
    stripped = source.strip()
    if not stripped or stripped.startswith(("{", "[")):
        return False
    return stripped.endswith(PATH_SUFFIXES) or not any(c.isspace() or c == "," for c in stripped)


def _read(path):
    try:
        return path.read_text(encoding="utf-8")
    except FileNotFoundError:
        raise ComplexFileError(f"{path}: no such file") from None
    except OSError as exc:
        raise ComplexFileError(f"{path}: {exc.strerror or exc}") from exc


def _source_text(source):
    if isinstance(source, Path):
        return _read(source), source
    if "\n" not in source and len(source) < 4096:
        path = Path(source)
        if path.is_file():
            return _read(path), path
        if _looks_like_path(source):
            raise ComplexFileError(f"{source}: no such file")
    return source, None


def _dedupe(facets, where):
    seen, out = set(), []
    for facet in facets:
        key = frozenset(facet)
        if key in seen:
            logger.warning("duplicate facet %s in %s dropped", sorted(facet, key=label_key), where or "text input")
            continue
        seen.add(key)
        out.append(facet)
    return out


def _parse_text(text, where):
    facets = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        labels = line.replace(",", " ").split()
        if len(set(labels)) != len(labels):
            raise MalformedFaceError(f"line {number}: facet {labels} repeats a vertex")
        facets.append(labels)
    if not facets:
        raise ComplexFileError(f"{where or 'input'} holds no facets")
    return ComplexFile(name=Path(where).stem if where else "", complex=Complex.from_facets(_dedupe(facets, where)))


def _parse_json(text, where):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexFileError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(data, dict) or not isinstance(data.get("facets"), list):
        raise ComplexFileError(f"{where or 'input'} must be an object with a 'facets' list")
    facets = []
    for facet in data["facets"]:
        if not isinstance(facet, list):
            raise ComplexFileError(f"facet {facet!r} is not a list")
        facets.append([str(v) for v in facet])
    declared = data.get("vertices")
    if declared is not None:
        declared = {str(v) for v in declared}
        for facet in facets:
            for v in facet:
                if v not in declared:
                    raise UnknownVertexError(f"facet vertex {v!r} is missing from 'vertices'")
    return ComplexFile(
        name=data.get("name") or (Path(where).stem if where else ""),
        description=data.get("description", ""),
        complex=Complex.from_facets(_dedupe(facets, where)),
        claims=data.get("claims") or {},
        expected=data.get("expected") or {},
        provenance=data.get("provenance") or {},
    )


def read_complex_file(source):
    """A complex file from a path or from its text, JSON or whitespace format."""
    text, path = _source_text(source)
    where = str(path) if path else ""
    if (path is not None and path.suffix == ".json") or text.lstrip().startswith("{"):
        return _parse_json(text, where)
    return _parse_text(text, where)


def parse(source):
    return read_complex_file(source).complex


def sorted_facets(X):
    keyed = [sorted(f, key=label_key) for f in X.facet_labels()]
    return sorted(keyed, key=lambda f: [label_key(v) for v in f])


def serialize(X, fmt=JSON, name="", description="", claims=None, extra=None):
    """Deterministic text for X: sorted labels, sorted facets."""
    facets = sorted_facets(X)
    if fmt == TEXT:
        lines = [f"# {name}"] if name else []
        if description:
            lines.append(f"# {description}")
        lines += [" ".join(f) for f in facets]
        return "\n".join(lines) + "\n"
    document = {
        "name": name,
        "description": description,
        "vertices": sorted(X.vertices, key=label_key),
        "facets": facets,
    }
    if claims:
        document["claims"] = claims
    if extra:
        document.update(extra)
    return json.dumps(document, indent=2) + "\n"


def write_complex_file(X, path, **kwargs):
    path = Path(path)
    fmt = JSON if path.suffix == ".json" else TEXT
    path.write_text(serialize(X, fmt, name=kwargs.pop("name", path.stem), **kwargs), encoding="utf-8")
    return path
