"""Quiver input records and named Dynkin templates.

Record format (JSON):
    {"type": "A"|"B"|"C"|"D"|"E"|"F"|"G", "rank": n, "orientation": [[i,j],...]}
or  {"cartan": [[...]], "orientation": [[i,j],...]}
Vertices are 1-based and [i, j] is an arrow i -> j.  "orientation" may be
omitted: each edge {i, j} with i < j then defaults to j -> i, which makes
(1..n) an admissible sink sequence for the path-numbered templates.
Supplying both "type" and "cartan" is an error.
"""

from __future__ import annotations

from typing import Mapping

from .errors import (
    NotGeneralizedCartan,
    NotSymmetrizable,
    QuiverInputError,
)
from .rootsys import CartanMatrix, Orientation


def named_cartan_rows(type_char: str, rank: int) -> list:
    """Generalized Cartan matrix of the named Dynkin type."""
    t = type_char.upper()
    if rank < 1:
        raise QuiverInputError(f"rank must be positive, got {rank}")

    def path(n):
        rows = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
        for i in range(n - 1):
            rows[i][i + 1] = rows[i + 1][i] = -1
        return rows

    if t == "A":
        return path(rank)
    if t in ("B", "C"):
        if rank < 2:
            raise QuiverInputError(f"type {t} needs rank >= 2")
        rows = path(rank)
        if t == "B":
            rows[rank - 1][rank - 2] = -2
        else:
            rows[rank - 2][rank - 1] = -2
        return rows
    if t == "D":
        if rank < 4:
            raise QuiverInputError("type D needs rank >= 4")
        rows = path(rank - 1)
        for row in rows:
            row.append(0)
        rows.append([0] * rank)
        rows[rank - 1][rank - 1] = 2
        rows[rank - 1][rank - 3] = rows[rank - 3][rank - 1] = -1
        return rows
    if t == "E":
        if rank not in (6, 7, 8):
            raise QuiverInputError("type E needs rank 6, 7 or 8")
        rows = path(rank - 1)
        for row in rows:
            row.append(0)
        rows.append([0] * rank)
        rows[rank - 1][rank - 1] = 2
        rows[rank - 1][2] = rows[2][rank - 1] = -1
        return rows
    if t == "F":
        if rank != 4:
            raise QuiverInputError("type F needs rank 4")
        return [[2, -1, 0, 0], [-1, 2, -2, 0], [0, -1, 2, -1], [0, 0, -1, 2]]
    if t == "G":
        if rank != 2:
            raise QuiverInputError("type G needs rank 2")
        return [[2, -1], [-3, 2]]
    raise QuiverInputError(f"unknown Dynkin type {type_char!r}")


def default_orientation_edges(cartan: CartanMatrix) -> list:
    return [(j, i) for i, j in cartan.undirected_edges()]


def parse_quiver_record(record: Mapping) -> tuple:
    """(CartanMatrix, Orientation) from an input record.

    The orientation's edge coverage is validated here but acyclicity is NOT:
    mutation and enumeration accept cyclic quivers, the orbit/denominator
    verifiers and the explorer reject them at their own boundaries.
    """
    if not isinstance(record, Mapping):
        raise QuiverInputError("quiver record must be a JSON object")
    has_named = "type" in record
    has_cartan = "cartan" in record
    if has_named and has_cartan:
        raise QuiverInputError('supply either "type"/"rank" or "cartan", not both')
    if has_named:
        if "rank" not in record:
            raise QuiverInputError('named type needs a "rank"')
        try:
            rank = int(record["rank"])
        except (TypeError, ValueError) as exc:
            raise QuiverInputError(f'bad "rank": {record["rank"]!r}') from exc
        rows = named_cartan_rows(str(record["type"]), rank)
    elif has_cartan:
        rows = record["cartan"]
        if not isinstance(rows, (list, tuple)):
            raise QuiverInputError('"cartan" must be a matrix (list of rows)')
    else:
        raise QuiverInputError('quiver record needs "type"/"rank" or "cartan"')
    try:
        cartan = CartanMatrix(rows)
    except (NotGeneralizedCartan, NotSymmetrizable, TypeError, ValueError) as exc:
        raise QuiverInputError(f"bad Cartan matrix: {exc}") from exc

    raw_edges = record.get("orientation")
    if raw_edges is None:
        edges = default_orientation_edges(cartan)
    else:
        if not isinstance(raw_edges, (list, tuple)):
            raise QuiverInputError('"orientation" must be a list of [i, j] arrows')
        edges = []
        for item in raw_edges:
            if (
                not isinstance(item, (list, tuple))
                or len(item) != 2
                or not all(isinstance(x, int) for x in item)
            ):
                raise QuiverInputError(f"bad arrow {item!r}")
            edges.append((item[0], item[1]))
    try:
        orientation = Orientation.checked(cartan, edges, require_acyclic=False)
    except NotGeneralizedCartan as exc:
        raise QuiverInputError(f"bad orientation: {exc}") from exc
    return cartan, orientation


def dynkin_catalog() -> list:
    """Ready-to-post template records for the explorer."""
    entries = [
        ("A2", "A", 2),
        ("A3", "A", 3),
        ("A4", "A", 4),
        ("B2", "B", 2),
        ("B3", "B", 3),
        ("C3", "C", 3),
        ("D4", "D", 4),
        ("E6", "E", 6),
        ("F4", "F", 4),
        ("G2", "G", 2),
    ]
    catalog = []
    for name, t, rank in entries:
        cartan = CartanMatrix(named_cartan_rows(t, rank))
        catalog.append(
            {
                "name": name,
                "spec": {
                    "type": t,
                    "rank": rank,
                    "orientation": [
                        list(e) for e in sorted(default_orientation_edges(cartan))
                    ],
                },
            }
        )
    return catalog
