"""Line-oriented text formats for matroids, graphs, set systems, vectors and reports.

Every document opens with ``<kind> v1``. Blank lines and lines starting with
``#`` are ignored. Element labels are ``xN`` or ``xN.M``::

    matroid v1            graph v1           system v1          alpha v1
    ground x1 x2 x3       vertices 3         ground x1 x2 x3    1 1 2
    basis x1 x2           edge x1 1 2        set A1 x1 x2
    basis x1 x3           edge x2 2 3        set A2 x1 x3
                          edge x3 3 3

Reports are ``report v1`` followed by ``key=value`` lines.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .core import Family, MatroidError
from .families import MultiGraph, SetSystem
from .functors import ExpansionVector
from .labels import Label, iter_bits

KINDS = ("matroid", "graph", "system", "alpha", "report")
VERSION = "v1"

Payload = Union[Family, MultiGraph, SetSystem, ExpansionVector, dict]


class ParseError(MatroidError):
    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class Document:
    kind: str
    payload: Payload


def _labels(tokens, lineno) -> list[Label]:
    out = []
    for tok in tokens:
        try:
            out.append(Label.parse(tok))
        except ValueError:
            raise ParseError(lineno, f"malformed element label {tok!r}") from None
    if len(set(out)) != len(out):
        raise ParseError(lineno, "repeated element")
    return out


def _int(tok, lineno, what) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(lineno, f"{what} must be an integer, got {tok!r}") from None


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse(text: str) -> Document:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError(1, "empty document")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 2 or parts[0] not in KINDS:
        raise ParseError(lineno, f"expected '<kind> {VERSION}' with kind in {', '.join(KINDS)}")
    kind, version = parts
    if version != VERSION:
        raise ParseError(lineno, f"unsupported version {version!r}")
    body = lines[1:]
    parser = {
        "matroid": _parse_matroid,
        "graph": _parse_graph,
        "system": _parse_system,
        "alpha": _parse_alpha,
        "report": _parse_report,
    }[kind]
    return Document(kind, parser(body, lineno))


def _parse_matroid(body, header_line) -> Family:
    ground = None
    bases: list[tuple[int, list[Label]]] = []
    for lineno, line in body:
        word, *rest = line.split()
        if word == "ground":
            if ground is not None:
                raise ParseError(lineno, "ground declared twice")
            if bases:
                raise ParseError(lineno, "ground must precede bases")
            ground = _labels(rest, lineno)
        elif word == "basis":
            if ground is None:
                raise ParseError(lineno, "basis before ground")
            bases.append((lineno, _labels(rest, lineno)))
        else:
            raise ParseError(lineno, f"unknown directive {word!r}")
    if ground is None:
        raise ParseError(header_line, "missing ground line")
    known = set(ground)
    seen = {}
    for lineno, b in bases:
        unknown = [x for x in b if x not in known]
        if unknown:
            raise ParseError(lineno, f"basis mentions unknown element {unknown[0]}")
        key = frozenset(b)
        if key in seen:
            raise ParseError(lineno, f"duplicate basis (first on line {seen[key]})")
        seen[key] = lineno
    return Family.from_sets([b for _, b in bases], ground)


def _parse_graph(body, header_line) -> MultiGraph:
    vertices = None
    edges = []
    for lineno, line in body:
        word, *rest = line.split()
        if word == "vertices":
            if vertices is not None:
                raise ParseError(lineno, "vertices declared twice")
            if len(rest) != 1:
                raise ParseError(lineno, "expected 'vertices N'")
            vertices = _int(rest[0], lineno, "vertex count")
            if vertices < 1:
                raise ParseError(lineno, "vertex count must be positive")
        elif word == "edge":
            if vertices is None:
                raise ParseError(lineno, "edge before vertices")
            if len(rest) != 3:
                raise ParseError(lineno, "expected 'edge xLABEL u v'")
            (label,) = _labels(rest[:1], lineno)
            u, v = (_int(t, lineno, "endpoint") for t in rest[1:])
            if not (1 <= u <= vertices and 1 <= v <= vertices):
                raise ParseError(lineno, f"endpoint outside 1..{vertices}")
            if any(label == e for e, _, _ in edges):
                raise ParseError(lineno, f"duplicate edge label {label}")
            edges.append((label, u, v))
        else:
            raise ParseError(lineno, f"unknown directive {word!r}")
    if vertices is None:
        raise ParseError(header_line, "missing vertices line")
    return MultiGraph(vertices, tuple(edges))


def _parse_system(body, header_line) -> SetSystem:
    ground = None
    members = []
    for lineno, line in body:
        word, *rest = line.split()
        if word == "ground":
            if ground is not None:
                raise ParseError(lineno, "ground declared twice")
            if members:
                raise ParseError(lineno, "ground must precede sets")
            ground = _labels(rest, lineno)
        elif word == "set":
            if ground is None:
                raise ParseError(lineno, "set before ground")
            if not rest:
                raise ParseError(lineno, "expected 'set NAME x...'")
            name, elems = rest[0], _labels(rest[1:], lineno)
            unknown = [x for x in elems if x not in ground]
            if unknown:
                raise ParseError(lineno, f"set mentions unknown element {unknown[0]}")
            members.append((name, frozenset(elems)))
        else:
            raise ParseError(lineno, f"unknown directive {word!r}")
    if ground is None:
        raise ParseError(header_line, "missing ground line")
    return SetSystem(tuple(ground), tuple(members))


def _parse_alpha(body, header_line) -> ExpansionVector:
    if len(body) != 1:
        raise ParseError(body[1][0] if len(body) > 1 else header_line, "expected exactly one line of multiplicities")
    lineno, line = body[0]
    ks = tuple(_int(t, lineno, "multiplicity") for t in line.split())
    if any(k < 1 for k in ks):
        raise ParseError(lineno, "multiplicities must be positive")
    return ExpansionVector(ks)


def _parse_report(body, header_line) -> dict:
    out = {}
    for lineno, line in body:
        key, sep, value = line.partition("=")
        if not sep or not key:
            raise ParseError(lineno, "expected key=value")
        if key in out:
            raise ParseError(lineno, f"duplicate key {key!r}")
        out[key] = value
    return out


# -- serialization -----------------------------------------------------------


def _kind_of(payload) -> str:
    if isinstance(payload, Family):
        return "matroid"
    if isinstance(payload, MultiGraph):
        return "graph"
    if isinstance(payload, SetSystem):
        return "system"
    if isinstance(payload, ExpansionVector):
        return "alpha"
    if isinstance(payload, dict):
        return "report"
    raise TypeError(f"cannot serialize {type(payload).__name__}")


def _join(word, labels):
    return " ".join([word, *map(str, labels)])


def serialize(doc) -> str:
    """Canonical text for a :class:`Document` or a bare payload."""
    if not isinstance(doc, Document):
        doc = Document(_kind_of(doc), doc)
    p = doc.payload
    lines = [f"{doc.kind} {VERSION}"]
    if doc.kind == "matroid":
        lines.append(_join("ground", p.ground))
        for m in p.sorted_members():
            lines.append(_join("basis", (p.ground[q] for q in iter_bits(m))))
    elif doc.kind == "graph":
        lines.append(f"vertices {p.vertex_count}")
        lines += [f"edge {e} {u} {v}" for e, u, v in p.edges]
    elif doc.kind == "system":
        lines.append(_join("ground", p.ground))
        lines += [_join(f"set {name}", sorted(s)) for name, s in p.members]
    elif doc.kind == "alpha":
        lines.append(" ".join(map(str, p)))
    elif doc.kind == "report":
        lines += [f"{k}={v}" for k, v in p.items()]
    else:
        raise ValueError(f"unknown document kind {doc.kind!r}")
    return "\n".join(lines) + "\n"


def load(path) -> Document:
    return parse(Path(path).read_text(encoding="utf-8"))
