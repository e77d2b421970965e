"""Persistent KL cache, format "KLC1".

Plain text: a header line, the datum label, then one record per pair
    x-word|w-word|e1:c1,e2:c2,...
with 1-based dot-separated reduced words ('e' for the identity) and exact
integer exponent/coefficient pairs.  Only whole columns are written, and
the loader inserts only whole columns, so a cache file can be deleted or
truncated at any time and everything is recomputed.
"""

from __future__ import annotations

import os

from .coxeter import CoxeterDatum, GroupElement
from .errors import InvalidInput
from .hecke import KLTable, kl_table
from .laurent import LaurentPoly

HEADER = "KLC1"


def _word_str(word) -> str:
    return ".".join(str(i + 1) for i in word) or "e"


def _word_parse(text: str) -> tuple[int, ...]:
    if text == "e":
        return ()
    return tuple(int(p) - 1 for p in text.split("."))


def datum_cache_label(datum: CoxeterDatum) -> str:
    if datum.cartan_label:
        return datum.cartan_label
    return "matrix:" + ";".join(
        ",".join(str(m) for m in row) for row in datum.coxeter_matrix
    )


def save_kl_cache(datum: CoxeterDatum, path: str):
    table = kl_table(datum)
    lines = [HEADER, datum_cache_label(datum)]
    for w_word in sorted(table.known_columns(), key=lambda w: (len(w), w)):
        col = table.known_columns()[w_word]
        for x_word in sorted(col, key=lambda x: (len(x), x)):
            poly = col[x_word]
            pairs = ",".join(f"{e}:{c}" for e, c in sorted(poly.items()))
            lines.append(f"{_word_str(x_word)}|{_word_str(w_word)}|{pairs}")
    tmp = path + ".tmp"
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(tmp, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    os.replace(tmp, path)


def load_kl_cache(datum: CoxeterDatum, path: str) -> int:
    """Merge cached columns into the datum's KL table; returns columns loaded."""
    if not os.path.exists(path):
        return 0
    with open(path) as fh:
        lines = [line.rstrip("\n") for line in fh]
    if len(lines) < 2 or lines[0] != HEADER:
        raise InvalidInput(f"{path}: not a KLC1 cache file")
    if lines[1] != datum_cache_label(datum):
        raise InvalidInput(
            f"{path}: cache is for '{lines[1]}', not '{datum_cache_label(datum)}'"
        )
    columns: dict[tuple[int, ...], dict[tuple[int, ...], LaurentPoly]] = {}
    for line in lines[2:]:
        if not line.strip():
            continue
        try:
            x_text, w_text, pairs = line.split("|")
        except ValueError as exc:
            raise InvalidInput(f"{path}: malformed record '{line}'") from exc
        coeffs = {}
        if pairs:
            for item in pairs.split(","):
                e, c = item.split(":")
                coeffs[int(e)] = int(c)
        columns.setdefault(_word_parse(w_text), {})[_word_parse(x_text)] = LaurentPoly(
            coeffs
        )
    table = kl_table(datum)
    loaded = 0
    for w_word, col in columns.items():
        if col.get(w_word) != LaurentPoly.one():
            raise InvalidInput(f"{path}: column {w_word} lacks a unit diagonal")
        table.insert_column(w_word, col)
        loaded += 1
    return loaded


def default_cache_dir() -> str:
    env = os.environ.get("CELLKIT_CACHE")
    if env:
        return env
    return os.path.join(os.path.expanduser("~"), ".cache", "cellkit")


def cache_path_for(datum: CoxeterDatum, cache_dir: str) -> str:
    label = datum_cache_label(datum).replace("/", "_").replace(";", "_")
    return os.path.join(cache_dir, f"kl_{label}.klc")
