"""Codec tests: graph6 bit-exactness against networkx as reference,
edge-list round trips, and the report emitter."""

from __future__ import annotations

import csv
import io
import json
import random

import networkx as nx
import pytest
from conftest import random_graph

from cordiality import (
    EdgeListError,
    Graph,
    Graph6Error,
    ReportRecord,
    complete_spec,
    cycle_spec,
    generate,
    parse_edge_list,
    parse_graph6,
    write_edge_list,
    write_graph6,
    write_records,
)


def _to_nx(g: Graph) -> nx.Graph:
    h = nx.empty_graph(g.n)
    h.add_edges_from(g.edges())
    return h


def _from_nx(h: nx.Graph) -> Graph:
    return Graph.from_edges(h.number_of_nodes(), h.edges())


class TestGraph6:
    def test_k4(self):
        assert parse_graph6(b"C~") == generate(complete_spec(4))
        assert write_graph6(generate(complete_spec(4))) == b"C~"

    def test_c5(self):
        g = parse_graph6(b"Dhc")
        assert set(g.edges()) == {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)}

    def test_empty(self):
        assert parse_graph6(b"?") == Graph.empty(0)
        assert write_graph6(Graph.empty(0)) == b"?"

    def test_header_prefix_and_str_input(self):
        assert parse_graph6(">>graph6<<C~") == generate(complete_spec(4))
        assert parse_graph6("C~\n") == generate(complete_spec(4))

    def test_roundtrip_1000_random(self):
        rng = random.Random(1234)
        for _ in range(1000):
            n = rng.randint(0, 40)
            g = random_graph(rng, n, rng.choice([0.1, 0.5, 0.9]))
            assert parse_graph6(write_graph6(g)) == g

    def test_agrees_with_reference_codec(self):
        rng = random.Random(77)
        for _ in range(200):
            g = random_graph(rng, rng.randint(0, 30))
            ours = write_graph6(g)
            theirs = nx.to_graph6_bytes(_to_nx(g), header=False).strip()
            assert ours == theirs
            assert parse_graph6(theirs) == g
            assert _from_nx(nx.from_graph6_bytes(ours)) == g

    def test_large_n_header_forms(self):
        for n in (63, 64, 100):
            g = Graph.from_edges(n, [(0, 1), (n - 2, n - 1)])
            encoded = write_graph6(g)
            assert encoded[0] == 126
            assert parse_graph6(encoded) == g
            assert _from_nx(nx.from_graph6_bytes(encoded)) == g

    def test_byte_out_of_range(self):
        with pytest.raises(Graph6Error) as err:
            parse_graph6(bytes([67, 20, 63]))
        assert err.value.offset == 1

    def test_truncated_payload(self):
        with pytest.raises(Graph6Error):
            parse_graph6(b"C")  # n=4 needs one payload byte
        with pytest.raises(Graph6Error):
            parse_graph6(b"E~~")  # n=6 needs three

    def test_overlong_payload(self):
        with pytest.raises(Graph6Error):
            parse_graph6(b"C~~")

    def test_nonzero_padding_rejected(self):
        # n=2: one adjacency bit, five padding bits
        assert parse_graph6(bytes([65, 63 + 0b100000])).m == 1
        with pytest.raises(Graph6Error):
            parse_graph6(bytes([65, 63 + 0b110000]))

    def test_bit_flips_never_alias(self):
        # flipping any payload bit gives a different graph or an error
        rng = random.Random(55)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 12))
            encoded = write_graph6(g)
            header_len = 1
            for k in range(header_len, len(encoded)):
                for bit in range(8):
                    mutated = bytearray(encoded)
                    mutated[k] ^= 1 << bit
                    try:
                        other = parse_graph6(bytes(mutated))
                    except Graph6Error:
                        continue
                    assert other != g

    def test_empty_input(self):
        with pytest.raises(Graph6Error):
            parse_graph6(b"")


class TestEdgeList:
    def test_triangle(self):
        assert parse_edge_list("n 3\n0 1\n1 2\n2 0\n") == generate(complete_spec(3))

    def test_duplicates_collapse(self):
        g = parse_edge_list("n 2\n0 1\n0 1\n")
        assert (g.n, g.m) == (2, 1)

    def test_self_loop_rejected(self):
        with pytest.raises(EdgeListError) as err:
            parse_edge_list("n 2\n0 0\n")
        assert err.value.line == 2

    def test_out_of_range_rejected(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("n 2\n0 2\n")

    def test_syntax_error_carries_line_number(self):
        with pytest.raises(EdgeListError) as err:
            parse_edge_list("n 3\n0 1\n# fine\nzero two\n")
        assert err.value.line == 4

    def test_comments_and_blanks(self):
        text = "# c\n\nn 3  # three vertices\n0 1\n\n1 2 # last\n"
        g = parse_edge_list(text)
        assert set(g.edges()) == {(0, 1), (1, 2)}

    def test_missing_header(self):
        with pytest.raises(EdgeListError):
            parse_edge_list("0 1\n")
        with pytest.raises(EdgeListError):
            parse_edge_list("# only comments\n")

    def test_roundtrip(self):
        rng = random.Random(8)
        for _ in range(50):
            g = random_graph(rng, rng.randint(0, 15))
            assert parse_edge_list(write_edge_list(g)) == g


def _record(**overrides) -> ReportRecord:
    base = dict(
        family="wheel",
        params="n=6",
        n=6,
        m=10,
        d1=0,
        d2=0,
        d1_lower=0,
        d1_upper=0,
        witness_d1="000111",
        witness_d2="000111",
        cordial=True,
        source="both",
        elapsed_ms=0,
    )
    base.update(overrides)
    return ReportRecord(**base)


class TestRecords:
    HEADER = (
        "family,params,n,m,d1,d2,d1_lower,d1_upper,"
        "witness_d1,witness_d2,cordial,source,elapsed_ms"
    )

    def test_csv_header_only(self):
        assert write_records([], "csv") == (self.HEADER + "\n").encode()

    def test_json_empty(self):
        assert json.loads(write_records([], "json")) == []

    def test_wheel_row(self):
        out = write_records([_record()], "csv").decode()
        lines = out.splitlines()
        assert lines[0] == self.HEADER
        assert lines[1] == "wheel,n=6,6,10,0,0,0,0,000111,000111,true,both,0"

    def test_numeric_fields_never_quoted(self):
        rec = _record(params="parts=3,5,2", family="multipartite")
        out = write_records([rec], "csv").decode()
        row = out.splitlines()[1]
        assert '"parts=3,5,2"' in row  # comma forces quoting of the text field
        for token in (",6,", ",10,", ",0,"):
            assert token in row.replace('"parts=3,5,2"', "P")
        parsed = next(csv.DictReader(io.StringIO(out)))
        assert parsed["params"] == "parts=3,5,2"
        assert parsed["n"] == "6"

    def test_json_order_preserved(self):
        recs = [_record(params="n=6"), _record(params="n=7", d2=2, cordial=False)]
        loaded = json.loads(write_records(recs, "json"))
        assert len(loaded) == 2
        assert [r["params"] for r in loaded] == ["n=6", "n=7"]
        assert loaded[1]["cordial"] is False
        assert list(loaded[0].keys()) == self.HEADER.split(",")

    def test_lf_line_endings(self):
        out = write_records([_record()], "csv")
        assert b"\r" not in out
