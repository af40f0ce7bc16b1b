"""S-expression surface syntax for cochains, polynomials, deformations, reports.

Grammar (UTF-8):

    document := "(" kind INT body ")"        kind in {cochain, poly, deformation, report}
    term     := "(" "term" rational index+ ")"
    index    := "(" INT{n} ")"
    rational := INT | INT "/" INT

In a cochain term the first index is the x-exponent and the remaining
indices are the slots, in order; a polynomial term carries exactly one
index.  Printing emits canonical ordering, so parse(print(x)) == x and
printing is deterministic byte for byte.  The JSON encoding mirrors the
s-expression structure one-to-one, with rationals as strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .cochains import BasisTerm, Cochain, Polynomial
from .starproduct import Deformation

Node = Union[int, Fraction, str, tuple]

KINDS = ("cochain", "poly", "deformation", "report")


class SexprError(ValueError):
    """Parse failure, with 1-based line and column."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


def _tokenize(text: str):
    line, col = 1, 0
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        col += 1
        if ch == "\n":
            line += 1
            col = 0
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            continue
        if ch == ";":
            while i < length and text[i] != "\n":
                i += 1
            continue
        if ch in "()":
            yield ch, line, col
            i += 1
            continue
        start = i
        start_col = col
        while i < length and text[i] not in " \t\r\n();":
            i += 1
            col += 1
        col -= 1  # loop above advanced one past the last atom character
        yield text[start:i], line, start_col


def _atom(token: str, line: int, col: int) -> Node:
    body = token[1:] if token[:1] in "+-" else token
    if body.isdigit():
        return int(token)
    if "/" in token:
        num, _, den = token.partition("/")
        num_body = num[1:] if num[:1] in "+-" else num
        if num_body.isdigit() and den.isdigit():
            if int(den) == 0:
                raise SexprError("rational with zero denominator", line, col)
            return Fraction(int(num), int(den))
    if not token:
        raise SexprError("empty atom", line, col)
    return token


def parse_sexpr(text: str) -> Node:
    """Parse one s-expression; trailing content is an error."""
    tokens = list(_tokenize(text))
    if not tokens:
        raise SexprError("empty input", 1, 1)
    pos = 0

    def read() -> Node:
        nonlocal pos
        token, line, col = tokens[pos]
        pos += 1
        if token == "(":
            items = []
            while True:
                if pos >= len(tokens):
                    raise SexprError("unexpected end of input inside list", line, col)
                if tokens[pos][0] == ")":
                    pos += 1
                    return tuple(items)
                items.append(read())
        if token == ")":
            raise SexprError("unexpected ')'", line, col)
        return _atom(token, line, col)

    node = read()
    if pos != len(tokens):
        token, line, col = tokens[pos]
        raise SexprError(f"unexpected trailing content {token!r}", line, col)
    return node


def format_sexpr(node: Node, *, pretty: bool = True) -> str:
    """Deterministic text for a node; pretty mode breaks top-level items."""

    def flat(n: Node) -> str:
        if isinstance(n, tuple):
            return "(" + " ".join(flat(x) for x in n) + ")"
        return str(n)

    if not pretty or not isinstance(node, tuple):
        return flat(node)
    head = [flat(x) for x in node if not isinstance(x, tuple)]
    body = [flat(x) for x in node if isinstance(x, tuple)]
    if not body:
        return "(" + " ".join(head) + ")"
    lines = ["(" + " ".join(head)]
    lines.extend("  " + item for item in body)
    return "\n".join(lines) + ")"


@dataclass(frozen=True)
class Document:
    """A typed top-level value: what the CLI reads and writes."""

    kind: str
    dimension: int
    payload: object


def _expect_list(node: Node, what: str) -> tuple:
    if not isinstance(node, tuple):
        raise ValueError(f"expected a list for {what}, got {node!r}")
    return node


def _node_to_index(node: Node, dimension: int) -> tuple[int, ...]:
    node = _expect_list(node, "index")
    if len(node) != dimension or not all(isinstance(v, int) for v in node):
        raise ValueError(f"index {node!r} is not {dimension} integers")
    return tuple(node)


def _node_to_terms(nodes, dimension: int, *, min_indices: int):
    for node in nodes:
        node = _expect_list(node, "term")
        if len(node) < 2 + min_indices or node[0] != "term":
            raise ValueError(f"malformed term {node!r}")
        coeff = node[1]
        if not isinstance(coeff, (int, Fraction)):
            raise ValueError(f"term coefficient {coeff!r} is not rational")
        indices = [_node_to_index(x, dimension) for x in node[2:]]
        yield coeff, indices


def node_to_cochain(node: Node) -> Cochain:
    node = _expect_list(node, "cochain")
    if len(node) < 2 or node[0] != "cochain" or not isinstance(node[1], int):
        raise ValueError(f"malformed cochain document {node!r}")
    dimension = node[1]
    pairs = []
    for coeff, indices in _node_to_terms(node[2:], dimension, min_indices=1):
        pairs.append((BasisTerm(dimension, indices[0], indices[1:]), coeff))
    return Cochain(dimension, pairs)


def cochain_to_node(c: Cochain) -> Node:
    terms = tuple(
        ("term", coeff, t.x_part) + tuple(t.slots) for t, coeff in c.items()
    )
    return ("cochain", c.dimension) + terms


def node_to_polynomial(node: Node) -> Polynomial:
    node = _expect_list(node, "poly")
    if len(node) < 2 or node[0] != "poly" or not isinstance(node[1], int):
        raise ValueError(f"malformed poly document {node!r}")
    dimension = node[1]
    pairs = []
    for coeff, indices in _node_to_terms(node[2:], dimension, min_indices=1):
        if len(indices) != 1:
            raise ValueError("polynomial terms carry exactly one index")
        pairs.append((indices[0], coeff))
    return Polynomial(dimension, pairs)


def polynomial_to_node(p: Polynomial) -> Node:
    terms = tuple(("term", coeff, e) for e, coeff in p.items())
    return ("poly", p.dimension) + terms


def node_to_deformation(node: Node) -> Deformation:
    node = _expect_list(node, "deformation")
    if (
        len(node) < 3
        or node[0] != "deformation"
        or not isinstance(node[1], int)
        or not (isinstance(node[2], tuple) and len(node[2]) == 2 and node[2][0] == "order")
    ):
        raise ValueError(f"malformed deformation document {node!r}")
    dimension = node[1]
    order = node[2][1]
    if not isinstance(order, int) or order < 1:
        raise ValueError(f"malformed deformation order {order!r}")
    by_order: dict[int, Cochain] = {}
    for entry in node[3:]:
        entry = _expect_list(entry, "deformation coefficient")
        if len(entry) < 2 or entry[0] != "pk" or not isinstance(entry[1], int):
            raise ValueError(f"malformed deformation coefficient {entry!r}")
        k = entry[1]
        if not 1 <= k <= order or k in by_order:
            raise ValueError(f"deformation coefficient order {k} out of range or repeated")
        by_order[k] = node_to_cochain(("cochain", dimension) + tuple(entry[2:]))
    cochains = tuple(by_order.get(k, Cochain.zero(dimension)) for k in range(1, order + 1))
    return Deformation(dimension=dimension, cochains=cochains)


def deformation_to_node(d: Deformation) -> Node:
    entries = []
    for k in range(1, d.order + 1):
        c = d.coefficient(k)
        if not c.is_zero:
            entries.append(("pk", k) + cochain_to_node(c)[2:])
    return ("deformation", d.dimension, ("order", d.order)) + tuple(entries)


def parse_document(text: str) -> Document:
    node = parse_sexpr(text)
    node = _expect_list(node, "document")
    if len(node) < 2 or node[0] not in KINDS or not isinstance(node[1], int):
        raise ValueError("document must start with a kind and a dimension")
    kind = node[0]
    if kind == "cochain":
        return Document(kind, node[1], node_to_cochain(node))
    if kind == "poly":
        return Document(kind, node[1], node_to_polynomial(node))
    if kind == "deformation":
        return Document(kind, node[1], node_to_deformation(node))
    return Document(kind, node[1], node[2:])


def document_to_node(doc: Document) -> Node:
    if doc.kind == "cochain":
        return cochain_to_node(doc.payload)
    if doc.kind == "poly":
        return polynomial_to_node(doc.payload)
    if doc.kind == "deformation":
        return deformation_to_node(doc.payload)
    if doc.kind == "report":
        return ("report", doc.dimension) + tuple(doc.payload)
    raise ValueError(f"unknown document kind {doc.kind!r}")


def print_document(doc: Document, *, pretty: bool = True) -> str:
    return format_sexpr(document_to_node(doc), pretty=pretty)


def node_to_json(node: Node):
    if isinstance(node, tuple):
        return [node_to_json(x) for x in node]
    if isinstance(node, Fraction):
        return str(node)
    return node


def document_to_json(doc: Document):
    """JSON mirror of the s-expression: same nesting, rationals as strings."""
    node = document_to_node(doc)
    return {"kind": doc.kind, "dimension": doc.dimension, "body": node_to_json(node[2:])}


# Convenience text-level round trips used by the CLI and the tests.


def parse_cochain(text: str) -> Cochain:
    doc = parse_document(text)
    if doc.kind != "cochain":
        raise ValueError(f"expected a cochain document, got {doc.kind}")
    return doc.payload


def print_cochain(c: Cochain, *, pretty: bool = True) -> str:
    return print_document(Document("cochain", c.dimension, c), pretty=pretty)


def parse_polynomial(text: str) -> Polynomial:
    doc = parse_document(text)
    if doc.kind != "poly":
        raise ValueError(f"expected a poly document, got {doc.kind}")
    return doc.payload


def print_polynomial(p: Polynomial, *, pretty: bool = True) -> str:
    return print_document(Document("poly", p.dimension, p), pretty=pretty)


def parse_deformation(text: str) -> Deformation:
    doc = parse_document(text)
    if doc.kind != "deformation":
        raise ValueError(f"expected a deformation document, got {doc.kind}")
    return doc.payload


def print_deformation(d: Deformation, *, pretty: bool = True) -> str:
    return print_document(Document("deformation", d.dimension, d), pretty=pretty)
