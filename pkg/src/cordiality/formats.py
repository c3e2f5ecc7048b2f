"""Bit-exact graph6 and edge-list codecs, plus the results emitter.

graph6 packs the upper triangle in column-major order x(0,1), x(0,2),
x(1,2), x(0,3), ... six bits per byte, most significant bit first, every
byte offset by 63. Parsing is strict: out-of-range bytes, wrong payload
length, and nonzero padding bits are all rejected rather than aliased.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, fields

from .errors import EdgeListError, Graph6Error, ParameterError
from .graphs import Graph

_G6_HEADER = b">>graph6<<"
_G6_MAX_SMALL = 62
_G6_MAX_MEDIUM = 258047
_G6_MAX_LARGE = 68719476735


def _encode_number(n: int) -> bytes:
    if n <= _G6_MAX_SMALL:
        return bytes([63 + n])
    if n <= _G6_MAX_MEDIUM:
        return bytes([126, 63 + ((n >> 12) & 63), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    if n <= _G6_MAX_LARGE:
        return bytes([126, 126] + [63 + ((n >> s) & 63) for s in (30, 24, 18, 12, 6, 0)])
    raise ParameterError(f"graph6 cannot encode n={n}")


def _check_bytes(data: bytes, start: int) -> None:
    for i in range(start, len(data)):
        if not 63 <= data[i] <= 126:
            raise Graph6Error(
                f"byte {data[i]} at offset {i} outside graph6 range [63,126]", offset=i
            )


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line (optionally '>>graph6<<'-prefixed)."""
    if isinstance(data, str):
        try:
            raw = data.encode("ascii")
        except UnicodeEncodeError as exc:
            raise Graph6Error(f"non-ASCII character in graph6 input: {exc}") from None
    else:
        raw = bytes(data)
    raw = raw.rstrip(b"\r\n")
    if raw.startswith(_G6_HEADER):
        raw = raw[len(_G6_HEADER):]
    if not raw:
        raise Graph6Error("empty graph6 input")
    _check_bytes(raw, 0)

    if raw[0] != 126:
        n = raw[0] - 63
        at = 1
    elif len(raw) >= 2 and raw[1] != 126:
        if len(raw) < 4:
            raise Graph6Error("truncated extended vertex count", offset=len(raw))
        n = ((raw[1] - 63) << 12) | ((raw[2] - 63) << 6) | (raw[3] - 63)
        if n <= _G6_MAX_SMALL:
            raise Graph6Error(f"overlong vertex-count encoding for n={n}", offset=0)
        at = 4
    else:
        if len(raw) < 8:
            raise Graph6Error("truncated extended vertex count", offset=len(raw))
        n = 0
        for i in range(2, 8):
            n = (n << 6) | (raw[i] - 63)
        if n <= _G6_MAX_MEDIUM:
            raise Graph6Error(f"overlong vertex-count encoding for n={n}", offset=0)
        at = 8

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(raw) - at != nbytes:
        raise Graph6Error(
            f"payload is {len(raw) - at} bytes, expected {nbytes} for n={n}",
            offset=len(raw),
        )
    rows = [0] * n
    bit = 0
    i, j = 0, 1
    for k in range(at, len(raw)):
        group = raw[k] - 63
        for shift in (5, 4, 3, 2, 1, 0):
            b = (group >> shift) & 1
            if bit < nbits:
                if b:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                i += 1
                if i == j:
                    i, j = 0, j + 1
            elif b:
                raise Graph6Error(
                    f"nonzero padding bit in final byte (offset {k})", offset=k
                )
            bit += 1
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def write_graph6(g: Graph) -> bytes:
    """Encode a graph as one graph6 line (no header, no newline)."""
    out = bytearray(_encode_number(g.n))
    group = 0
    filled = 0
    for j in range(1, g.n):
        col = g.rows[j]
        for i in range(j):
            group = (group << 1) | ((col >> i) & 1)
            filled += 1
            if filled == 6:
                out.append(63 + group)
                group = 0
                filled = 0
    if filled:
        out.append(63 + (group << (6 - filled)))
    return bytes(out)


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n <count>' + 'u v' lines format; '#' starts a comment."""
    n = None
    rows: list[int] = []
    for lineno, rawline in enumerate(text.splitlines(), start=1):
        line = rawline.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if n is None:
            if len(tokens) != 2 or tokens[0] != "n":
                raise EdgeListError(
                    f"line {lineno}: expected header 'n <count>', got {line!r}",
                    line=lineno,
                )
            try:
                n = int(tokens[1])
            except ValueError:
                raise EdgeListError(
                    f"line {lineno}: vertex count {tokens[1]!r} is not an integer",
                    line=lineno,
                ) from None
            if n < 0:
                raise EdgeListError(f"line {lineno}: negative vertex count", line=lineno)
            rows = [0] * n
            continue
        if len(tokens) != 2:
            raise EdgeListError(
                f"line {lineno}: expected 'u v', got {line!r}", line=lineno
            )
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise EdgeListError(
                f"line {lineno}: unparseable vertex token in {line!r}", line=lineno
            ) from None
        if u == v:
            raise EdgeListError(f"line {lineno}: self-loop at vertex {u}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListError(
                f"line {lineno}: vertex index out of range [0,{n}) in {line!r}",
                line=lineno,
            )
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    if n is None:
        raise EdgeListError("missing 'n <count>' header line")
    m = sum(r.bit_count() for r in rows) // 2
    return Graph(n, tuple(rows), m)


def write_edge_list(g: Graph) -> str:
    """Inverse of parse_edge_list; edges sorted, one per line."""
    lines = [f"n {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ReportRecord:
    """One result row of a compute/sweep run.

    d1_lower/d1_upper carry the closed-form interval and equal d1 when the
    value is exact; witnesses are bit-strings with vertex 0 first.
    """

    family: str
    params: str
    n: int
    m: int
    d1: int
    d2: int
    d1_lower: int
    d1_upper: int
    witness_d1: str
    witness_d2: str
    cordial: bool
    source: str
    elapsed_ms: int

    def __post_init__(self) -> None:
        if self.source not in ("exact", "closed-form", "both"):
            raise ParameterError(f"bad record source {self.source!r}")
        if self.source != "closed-form" and not (
            self.d1_lower <= self.d1 <= self.d1_upper
        ):
            raise ParameterError(
                f"d1={self.d1} outside [{self.d1_lower},{self.d1_upper}]"
            )
        if self.cordial != (self.d2 <= 1):
            raise ParameterError("cordial flag inconsistent with d2")
        if self.elapsed_ms < 0:
            raise ParameterError("elapsed_ms must be nonnegative")


_RECORD_FIELDS = [f.name for f in fields(ReportRecord)]


def write_records(records: list[ReportRecord], format: str = "csv") -> bytes:
    """Serialize records to CSV (fixed header, LF endings) or a JSON array."""
    if format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(_RECORD_FIELDS)
        for r in records:
            writer.writerow(
                [
                    r.family,
                    r.params,
                    r.n,
                    r.m,
                    r.d1,
                    r.d2,
                    r.d1_lower,
                    r.d1_upper,
                    r.witness_d1,
                    r.witness_d2,
                    "true" if r.cordial else "false",
                    r.source,
                    r.elapsed_ms,
                ]
            )
        return buf.getvalue().encode("utf-8")
    if format == "json":
        payload = [
            {name: getattr(r, name) for name in _RECORD_FIELDS} for r in records
        ]
        return (json.dumps(payload, indent=2) + "\n").encode("utf-8")
    raise ParameterError(f"unknown record format {format!r}")
