"""Graph text formats: parsing with positioned diagnostics, serialization.

Two input encodings are accepted.  The native one starts with a header
line ``ordered N``, ``bipartite NU NV`` or ``cyclic N`` followed by one
edge per line as two 1-based integers (row then column for bipartite).
The matrix encoding starts with ``matrix R C`` followed by R lines of C
characters from {0, 1} and parses as a bipartite graph with rows as the
first part.  ``#`` starts a comment; blank lines are skipped.

Serialization always emits the native encoding with the edge list
sorted, so parse(serialize(g)) == g holds bit-exactly.
"""

from __future__ import annotations

from .graphs import (BIPARTITE, CYCLIC, ORDERED, GraphValueError, PatternGraph,
                     bipartite_graph, cyclic_graph, ordered_graph)


class GraphTextError(ValueError):
    """Parse failure; carries the 1-based line and column of the offender."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column
        self.reason = message


def _tokenize(text: str):
    """Significant (line_no, [(token, column), ...]) rows, comments stripped."""
    rows = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        tokens = []
        col = 0
        for tok in body.split():
            col = body.index(tok, col)
            tokens.append((tok, col + 1))
            col += len(tok)
        if tokens:
            rows.append((line_no, tokens))
    return rows


def _int_token(tok: str, line: int, col: int, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise GraphTextError(f"expected {what}, got {tok!r}", line, col) from None


def parse_graph(text: str) -> PatternGraph:
    """Parse either encoding into a validated PatternGraph.

    Every malformed input raises GraphTextError naming the first
    offending line and column, with distinct messages for a bad header,
    an out-of-range index, a loop and a duplicate edge.
    """
    rows = _tokenize(text)
    if not rows:
        raise GraphTextError("empty input: missing header line", 1)
    line, tokens = rows[0]
    head = tokens[0][0].lower()
    if head == "matrix":
        return _parse_matrix(rows)
    if head not in (ORDERED, BIPARTITE, CYCLIC):
        raise GraphTextError(
            f"malformed header: unknown kind {tokens[0][0]!r}", line, tokens[0][1])
    want = 3 if head == BIPARTITE else 2
    if len(tokens) != want:
        raise GraphTextError(
            f"malformed header: {head} takes {want - 1} size argument(s)",
            line, tokens[-1][1])
    sizes = [_int_token(t, line, c, "a part size") for t, c in tokens[1:]]
    if any(s < 0 for s in sizes):
        raise GraphTextError("malformed header: negative size", line, tokens[1][1])
    n_u = sizes[0]
    n_v = sizes[1] if head == BIPARTITE else 0
    edges = []
    seen = set()
    for line, tokens in rows[1:]:
        if len(tokens) != 2:
            raise GraphTextError("expected two vertex indices", line, tokens[0][1])
        (ta, ca), (tb, cb) = tokens
        a = _int_token(ta, line, ca, "a vertex index")
        b = _int_token(tb, line, cb, "a vertex index")
        if head == BIPARTITE:
            if not 1 <= a <= n_u:
                raise GraphTextError(f"vertex index {a} out of range", line, ca)
            if not 1 <= b <= n_v:
                raise GraphTextError(f"vertex index {b} out of range", line, cb)
            edge = (a, b)
        else:
            if not 1 <= a <= n_u:
                raise GraphTextError(f"vertex index {a} out of range", line, ca)
            if not 1 <= b <= n_u:
                raise GraphTextError(f"vertex index {b} out of range", line, cb)
            if a == b:
                raise GraphTextError(f"loop edge at vertex {a}", line, ca)
            edge = (a, b) if a < b else (b, a)
        if edge in seen:
            raise GraphTextError(f"duplicate edge {edge}", line, ca)
        seen.add(edge)
        edges.append(edge)
    try:
        if head == BIPARTITE:
            return bipartite_graph(n_u, n_v, edges)
        if head == ORDERED:
            return ordered_graph(n_u, edges)
        return cyclic_graph(n_u, edges)
    except GraphValueError as exc:  # pragma: no cover - guarded above
        raise GraphTextError(str(exc), rows[0][0]) from None


def _parse_matrix(rows) -> PatternGraph:
    line, tokens = rows[0]
    if len(tokens) != 3:
        raise GraphTextError("malformed header: matrix takes two sizes",
                             line, tokens[-1][1])
    r = _int_token(tokens[1][0], line, tokens[1][1], "a row count")
    c = _int_token(tokens[2][0], line, tokens[2][1], "a column count")
    if r < 0 or c < 0:
        raise GraphTextError("malformed header: negative size", line, tokens[1][1])
    body = rows[1:]
    if len(body) != r:
        raise GraphTextError(f"expected {r} matrix rows, found {len(body)}",
                             body[-1][0] if body else line)
    edges = []
    for i, (line_no, tokens) in enumerate(body, start=1):
        if len(tokens) != 1:
            raise GraphTextError("matrix rows are single tokens", line_no,
                                 tokens[1][1])
        row, col0 = tokens[0]
        if len(row) != c:
            raise GraphTextError(
                f"matrix row has {len(row)} entries, expected {c}", line_no, col0)
        for j, ch in enumerate(row, start=1):
            if ch == "1":
                edges.append((i, j))
            elif ch != "0":
                raise GraphTextError(f"matrix entries are 0 or 1, got {ch!r}",
                                     line_no, col0 + j - 1)
    return bipartite_graph(r, c, edges)


def serialize_graph(g: PatternGraph) -> str:
    """Canonical text form: header plus sorted edge lines."""
    if g.flavor == BIPARTITE:
        head = f"{BIPARTITE} {g.n_u} {g.n_v}"
    else:
        head = f"{g.flavor} {g.n_u}"
    lines = [head] + [f"{a} {b}" for a, b in g.edges]
    return "\n".join(lines) + "\n"
