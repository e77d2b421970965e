"""JSON schemas (versioned "cellkit/1") for the data the CLI moves around.

Conventions: permutations are lists of 0-based images; reduced words and
generator indices in human-facing fields are 1-based; all numbers exact.
"""

from __future__ import annotations

import json

import numpy as np

from .basedring import BasedRing
from .cells import CellPartition
from .errors import InvalidInput
from .grouptheory import CharacterTable, FiniteGroup, TwoCocycle

SCHEMA = "cellkit/1"


def _tag(kind: str, body: dict) -> dict:
    return {"schema": SCHEMA, "kind": kind, **body}


def check_schema(data: dict, kind: str | None = None) -> dict:
    if data.get("schema") != SCHEMA:
        raise InvalidInput(f"expected schema '{SCHEMA}'")
    if kind is not None and data.get("kind") != kind:
        raise InvalidInput(f"expected kind '{kind}', got '{data.get('kind')}'")
    return data


# -- groups -------------------------------------------------------------------


def group_to_json(G: FiniteGroup) -> dict:
    gens = [list(G.elements[i]) for i in G.generator_indices] or [list(range(G.degree))]
    return _tag("group", {"degree": G.degree, "generators": gens, "order": G.order})


def group_from_json(data: dict) -> FiniteGroup:
    check_schema(data, "group")
    G = FiniteGroup.from_generators(data["generators"], int(data["degree"]))
    if "order" in data and G.order != int(data["order"]):
        raise InvalidInput("group order does not match the serialized value")
    return G


# -- cocycles ------------------------------------------------------------------


def cocycle_to_json(psi: TwoCocycle) -> dict:
    return _tag(
        "two_cocycle",
        {
            "modulus": psi.modulus,
            "group": group_to_json(psi.group),
            "values": psi.values.tolist(),
        },
    )


def cocycle_from_json(data: dict) -> TwoCocycle:
    check_schema(data, "two_cocycle")
    G = group_from_json(data["group"])
    return TwoCocycle(G, int(data["modulus"]), np.array(data["values"], dtype=np.int64))


# -- character tables -------------------------------------------------------------


def character_table_to_json(ct: CharacterTable) -> dict:
    return _tag(
        "character_table",
        {
            "group": group_to_json(ct.group),
            "class_representatives": [list(ct.group.elements[r]) for r in ct.class_reps],
            "class_sizes": ct.class_sizes,
            "degrees": ct.degrees,
            "values": [
                [{"order": v.n, "coeffs": list(v.coeffs)} for v in row]
                for row in ct._values
            ],
        },
    )


# -- cell partitions ----------------------------------------------------------------


def _key_json(key):
    if isinstance(key, tuple):
        y, o = key
        return {"word": [i + 1 for i in y.word], "omega": o}
    return {"word": [i + 1 for i in key.word]}


def cells_to_json(partition: CellPartition, involutions: dict | None = None) -> dict:
    body = {
        "type": partition.datum.cartan_label,
        "extended": partition.kind == "extended",
        "elements": len(partition.keys),
        "two_sided_cells": [],
        "left_cell_count": len(partition.left_cells),
        "right_cell_count": len(partition.right_cells),
    }
    for cid, cell in enumerate(partition.two_cells):
        entry = {
            "id": cid,
            "a": partition.a_value[cid],
            "size": len(cell),
            "left_cells": [
                [_key_json(k) for k in lc]
                for lc in partition.left_cells
                if partition.two_id[lc[0]] == cid
            ],
        }
        if involutions is not None and cid in involutions:
            entry["distinguished_involutions"] = [
                _key_json(k) for k in involutions[cid]
            ]
        body["two_sided_cells"].append(entry)
    return _tag("cell_partition", body)


# -- based rings (delegates) ----------------------------------------------------------


def ring_to_json(ring: BasedRing) -> dict:
    return ring.to_json()


def ring_from_json(data: dict) -> BasedRing:
    check_schema(data)
    return BasedRing.from_json(data)


def dump(data: dict) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def load(text: str) -> dict:
    return json.loads(text)
