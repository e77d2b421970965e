"""Command-line interface.

Subcommands: cells, kl, modcats, jring, convring, double, match, subrings.
Exit codes: 0 success/match, 1 resource-guard stop, 2 invalid input,
3 golden or isomorphism mismatch, 4 internal integrity error.

Words on the command line are 1-based comma-separated generator indices;
all output is deterministic byte-for-byte for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import klcache, serialize
from .basedring import based_ring_iso, based_subrings, fpdim
from .cells import (
    cell_partition,
    compute_cells,
    distinguished_involutions,
    extended_cell_orbits,
    j_ring,
)
from .coxeter import datum_from_type
from .errors import (
    CellkitError,
    GoldenMismatch,
    GuardExceeded,
    IntegrityError,
    InvalidInput,
)
from .fusioncat import (
    GSet,
    convolution_ring,
    drinfeld_double,
    module_category_table,
    render_table_csv,
)
from .grouptheory import FiniteGroup, h2_classes
from .guards import Guards
from .hecke import ExtendedHeckeDatum, kl_polynomial, kl_h_polynomial, mu, kl_table


@dataclass
class RunConfig:
    """Per-run configuration: cache location, guard overrides, output."""

    cache_dir: str = field(default_factory=klcache.default_cache_dir)
    guards: Guards = field(default_factory=Guards)
    output_format: str = "pretty"
    precision_report: bool = False
    jobs: int = 1


def _parse_word(text: str) -> list[int]:
    text = text.strip()
    if not text or text == "e":
        return []
    try:
        return [int(p) - 1 for p in text.replace(".", ",").split(",")]
    except ValueError as exc:
        raise InvalidInput(f"bad word '{text}'") from exc


def _parse_group(spec: str, guards: Guards) -> FiniteGroup:
    spec = spec.strip()
    if spec.startswith("gens:"):
        try:
            gens = json.loads(spec[5:])
        except json.JSONDecodeError as exc:
            raise InvalidInput(f"bad generator JSON: {exc}") from exc
        gens0 = [[int(x) - 1 for x in g] for g in gens]
        return FiniteGroup.from_generators(gens0, guards=guards)
    name = spec.upper()
    if name in ("1", "E", "TRIVIAL"):
        return FiniteGroup.trivial(1)
    try:
        if name.startswith("S"):
            return FiniteGroup.symmetric(int(name[1:]), guards)
        if name.startswith("A"):
            return FiniteGroup.alternating(int(name[1:]), guards)
        if name.startswith(("Z", "C")):
            return FiniteGroup.cyclic(int(name[1:]), guards)
        if name.startswith("D"):
            order = int(name[1:])
            if order % 2:
                raise InvalidInput("dihedral groups have even order")
            return FiniteGroup.dihedral(order // 2, guards)
    except ValueError as exc:
        raise InvalidInput(f"cannot parse group '{spec}'") from exc
    raise InvalidInput(f"unknown group '{spec}'")


def _parse_subgroup(G: FiniteGroup, spec: str) -> list[int]:
    spec = spec.strip()
    if spec.startswith("gens:"):
        gens = json.loads(spec[5:])
        idx = []
        for g in gens:
            perm = tuple(int(x) - 1 for x in g)
            perm = perm + tuple(range(len(perm), G.degree))
            if perm not in G.index:
                raise InvalidInput(f"generator {g} is not in the group")
            idx.append(G.index[perm])
        return sorted(G.subgroup_closure(idx))
    name = spec.upper()
    if name in ("1", "E", "TRIVIAL"):
        return [0]
    if name.startswith("S") and name[1:].isdigit():
        k = int(name[1:])
        if k > G.degree:
            raise InvalidInput(f"S{k} does not fit in degree {G.degree}")
        gens = []
        for i in range(k - 1):
            perm = list(range(G.degree))
            perm[i], perm[i + 1] = perm[i + 1], perm[i]
            gens.append(G.index[tuple(perm)])
        return sorted(G.subgroup_closure(gens)) if gens else [0]
    raise InvalidInput(f"unknown subgroup spec '{spec}'")


def _parse_extended(datum, spec: str, guards: Guards):
    spec = spec.strip()
    if spec.startswith("cyclic:"):
        n = int(spec.split(":", 1)[1])
        omega = FiniteGroup.cyclic(n, guards)
        action = tuple(datum.identity_automorphism() for _ in range(omega.order))
        return ExtendedHeckeDatum(datum, omega, action)
    if spec.startswith("perms:"):
        perms = json.loads(spec[6:])
        perms0 = [tuple(int(x) - 1 for x in p) for p in perms]
        omega = FiniteGroup.from_generators(perms0, datum.generator_count, guards)
        action = tuple(
            datum.diagram_automorphism(omega.elements[i]) for i in range(omega.order)
        )
        return ExtendedHeckeDatum(datum, omega, action)
    raise InvalidInput("extended spec must be 'cyclic:N' or 'perms:[[...],...]'")


def _emit(config: RunConfig, pretty_lines: list[str], payload: dict):
    if config.output_format == "json":
        sys.stdout.write(serialize.dump(payload))
    else:
        for line in pretty_lines:
            print(line)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_cells(args, config: RunConfig) -> int:
    datum = datum_from_type(args.type, config.guards)
    if args.extended:
        ed = _parse_extended(datum, args.extended, config.guards)
        partition = compute_cells(ed, config.guards)
        base = compute_cells(datum, config.guards)
        orbits = extended_cell_orbits(base, partition)
    else:
        partition = compute_cells(datum, config.guards)
        orbits = None
    involutions = {
        cid: distinguished_involutions(partition, cid)
        for cid in range(len(partition.two_cells))
    }
    lines = [
        f"type {args.type}: {len(partition.keys)} elements, "
        f"{len(partition.two_cells)} two-sided cells, "
        f"{len(partition.left_cells)} left cells"
    ]
    for cid, cell in enumerate(partition.two_cells):
        invs = " ".join(_fmt_key(k) for k in involutions[cid])
        nleft = sum(1 for lc in partition.left_cells if partition.two_id[lc[0]] == cid)
        lines.append(
            f"  cell {cid}: size {len(cell)}, a = {partition.a_value[cid]}, "
            f"left cells {nleft}, distinguished involutions [{invs}]"
        )
    payload = serialize.cells_to_json(partition, involutions)
    if orbits is not None:
        payload["orbit_bijection"] = {str(k): sorted(v) for k, v in orbits.items()}
        lines.append(f"  extended cells <-> base-cell orbits: "
                     f"{ {k: sorted(v) for k, v in orbits.items()} }")
    _emit(config, lines, payload)
    return 0


def _fmt_key(key) -> str:
    if isinstance(key, tuple):
        y, o = key
        return (".".join(str(i + 1) for i in y.word) or "e") + f"|{o}"
    return ".".join(str(i + 1) for i in key.word) or "e"


def cmd_kl(args, config: RunConfig) -> int:
    datum = datum_from_type(args.type, config.guards)
    cache_file = klcache.cache_path_for(datum, config.cache_dir)
    try:
        klcache.load_kl_cache(datum, cache_file)
    except InvalidInput:
        pass  # stale or foreign cache: recompute from scratch
    x = datum.normalize(_parse_word(args.x))
    w = datum.normalize(_parse_word(args.w))
    P = kl_polynomial(datum, x, w)
    h = kl_h_polynomial(datum, x, w)
    m = mu(datum, x, w)
    klcache.save_kl_cache(datum, cache_file)
    lines = [f"P = {P.format('q')}", f"h = {h.format('v')}", f"mu = {m}"]
    _emit(
        config,
        lines,
        {
            "schema": serialize.SCHEMA,
            "kind": "kl_polynomial",
            "P": P.format("q"),
            "h": h.format("v"),
            "mu": m,
        },
    )
    return 0


def _table_to_rows(path: str) -> dict[str, tuple[int, int]]:
    out = {}
    with open(path) as fh:
        header = fh.readline().strip()
        if header != "M,num_simple,num_fun":
            raise InvalidInput(f"{path}: unexpected golden header '{header}'")
        for line in fh:
            line = line.strip()
            if not line:
                continue
            label, a, b = line.rsplit(",", 2)
            if label in out:
                raise InvalidInput(f"{path}: duplicate row '{label}'")
            out[label] = (int(a), int(b))
    return out


def cmd_modcats(args, config: RunConfig) -> int:
    G = _parse_group(args.group, config.guards)
    rows = module_category_table(G, config.guards)
    csv = render_table_csv(rows)
    payload = {
        "schema": serialize.SCHEMA,
        "kind": "module_category_table",
        "group": args.group,
        "rows": [
            {
                "label": r.label,
                "subgroup_order": r.subgroup.order,
                "twisted": r.twisted,
                "num_simple": r.n_simple,
                "num_fun": r.n_fun,
            }
            for r in rows
        ],
    }
    if config.output_format == "json":
        sys.stdout.write(serialize.dump(payload))
    else:
        sys.stdout.write(csv)
    if args.golden:
        golden = _table_to_rows(args.golden)
        computed = {r.label: (r.n_simple, r.n_fun) for r in rows}
        if golden != computed:
            missing = sorted(set(golden) - set(computed))
            extra = sorted(set(computed) - set(golden))
            diff = sorted(
                k for k in set(golden) & set(computed) if golden[k] != computed[k]
            )
            print(
                f"golden mismatch: missing={missing} extra={extra} differing={diff}",
                file=sys.stderr,
            )
            raise GoldenMismatch(args.golden)
        print(f"golden match: {len(rows)} rows", file=sys.stderr)
    return 0


def _select_two_cell(partition, selector: str) -> int:
    if selector == "middle":
        inner = [
            cid
            for cid in range(len(partition.two_cells))
            if 0 < partition.a_value[cid] < max(partition.a_value.values())
        ]
        if len(inner) != 1:
            raise InvalidInput(
                f"'middle' is ambiguous: candidate cells {inner}; use an id"
            )
        return inner[0]
    if selector.startswith("a="):
        want = int(selector[2:])
        hits = [
            cid
            for cid in range(len(partition.two_cells))
            if partition.a_value[cid] == want
        ]
        if len(hits) != 1:
            raise InvalidInput(f"a={want} selects {len(hits)} cells")
        return hits[0]
    cid = int(selector)
    if not 0 <= cid < len(partition.two_cells):
        raise InvalidInput(f"cell id {cid} out of range")
    return cid


def cmd_jring(args, config: RunConfig) -> int:
    datum = datum_from_type(args.type, config.guards)
    partition = cell_partition(datum, config.guards)
    cid = _select_two_cell(partition, args.cell)
    cell = partition.two_cells[cid]
    if args.gamma_gamma_inv:
        lid = min(partition.left_id[k] for k in cell)
        gamma = [k for k in partition.keys if partition.left_id[k] == lid]
        subset = sorted(
            set(gamma) & {partition.inverse_key(k) for k in gamma},
            key=lambda k: (k.length, k.word),
        )
    else:
        subset = cell
    ring = j_ring(partition, subset, config.guards)
    payload = ring.to_json()
    text = serialize.dump(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out} ({ring.rank} basis elements)")
    else:
        sys.stdout.write(text)
    return 0


def cmd_convring(args, config: RunConfig) -> int:
    G = _parse_group(args.group, config.guards)
    parts = [GSet.coset_space(G, _parse_subgroup(G, s)) for s in args.stab]
    X = parts[0] if len(parts) == 1 else GSet.disjoint_union(parts)
    ring = convolution_ring(G, X, config.guards)
    text = serialize.dump(ring.to_json())
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
        print(f"wrote {args.out} ({ring.rank} basis elements)")
    else:
        sys.stdout.write(text)
    return 0


def cmd_double(args, config: RunConfig) -> int:
    G = _parse_group(args.group, config.guards)
    labels, fm = drinfeld_double(G, config.guards)
    S = fm.entries
    n = len(labels)
    dev_unitary = float(np.abs(S @ S.conj().T - np.eye(n)).max())
    dev_sym = float(np.abs(S - S.T).max())
    lines = [
        f"double of {args.group}: {n} simple objects",
        f"unitarity deviation {dev_unitary:.2e}, symmetry deviation {dev_sym:.2e}",
    ]
    if config.precision_report:
        lines.append(f"permutation check max deviation "
                     f"{float(np.abs(np.abs(S @ S.conj()) - np.abs(S @ S.conj()).round()).max()):.2e}")
    payload = {
        "schema": serialize.SCHEMA,
        "kind": "fourier_matrix",
        "labels": [list(l) for l in labels],
        "entries": [[[z.real, z.imag] for z in row] for row in S.tolist()],
        "unitarity_deviation": dev_unitary,
    }
    _emit(config, lines, payload)
    return 0


def cmd_match(args, config: RunConfig) -> int:
    with open(args.left) as fh:
        r1 = serialize.ring_from_json(json.load(fh))
    with open(args.right) as fh:
        r2 = serialize.ring_from_json(json.load(fh))
    bijection = based_ring_iso(r1, r2, config.guards)
    if bijection is None:
        print("no based-ring isomorphism")
        return 3
    print(f"isomorphism found: {bijection}")
    return 0


def cmd_subrings(args, config: RunConfig) -> int:
    with open(args.ring) as fh:
        ring = serialize.ring_from_json(json.load(fh))
    subs = based_subrings(ring, config.guards)
    lines = []
    for s in subs:
        tag = "trivial" if s["trivial"] else ("full" if not s["proper"] else "proper")
        lines.append(
            f"subring {s['basis']} fpdim {s['fpdim_total']:.6f} [{tag}]"
        )
    _emit(
        config,
        lines,
        {"schema": serialize.SCHEMA, "kind": "based_subrings", "subrings": [
            {k: v for k, v in s.items() if k != "labels"} for s in subs
        ]},
    )
    return 0


# ---------------------------------------------------------------------------
# entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cache-dir", default=argparse.SUPPRESS,
                        help="KL cache directory")
    common.add_argument(
        "--guard",
        action="append",
        default=argparse.SUPPRESS,
        metavar="NAME=VALUE",
        help="override a guard (lowering only, unless --unsafe-guards)",
    )
    common.add_argument("--unsafe-guards", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--format", choices=["pretty", "json", "csv"],
                        default=argparse.SUPPRESS)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS)
    common.add_argument("--precision-report", action="store_true",
                        default=argparse.SUPPRESS)

    parser = argparse.ArgumentParser(
        prog="cellkit",
        description="Exact KL cells, asymptotic based rings, and module-category tables.",
        parents=[common],
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cells", help="cell partition report", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--extended", default=None, help="cyclic:N or perms:[[...],...]")
    p.set_defaults(func=cmd_cells)

    p = sub.add_parser("kl", help="Kazhdan-Lusztig polynomial", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--w", required=True)
    p.set_defaults(func=cmd_kl)

    p = sub.add_parser("modcats", help="module category table", parents=[common])
    p.add_argument("--group", required=True)
    p.add_argument("--golden", default=None)
    p.set_defaults(func=cmd_modcats)

    p = sub.add_parser("jring", help="asymptotic based ring of a cell", parents=[common])
    p.add_argument("--type", required=True)
    p.add_argument("--cell", required=True, help="cell id, 'middle', or a=K")
    p.add_argument("--gamma-gamma-inv", action="store_true")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_jring)

    p = sub.add_parser("convring", help="convolution ring K_G(X x X)", parents=[common])
    p.add_argument("--group", required=True)
    p.add_argument("--stab", action="append", required=True,
                   help="subgroup of the coset block (repeatable)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_convring)

    p = sub.add_parser("double", help="Drinfeld double simple count and S-matrix", parents=[common])
    p.add_argument("--group", required=True)
    p.set_defaults(func=cmd_double)

    p = sub.add_parser("match", help="based ring isomorphism search", parents=[common])
    p.add_argument("--left", required=True)
    p.add_argument("--right", required=True)
    p.set_defaults(func=cmd_match)

    p = sub.add_parser("subrings", help="based subrings of a ring", parents=[common])
    p.add_argument("--ring", required=True)
    p.set_defaults(func=cmd_subrings)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    overrides = {}
    for item in getattr(args, "guard", []):
        if "=" not in item:
            print(f"bad --guard '{item}'", file=sys.stderr)
            return 2
        name, value = item.split("=", 1)
        try:
            overrides[name.strip()] = int(value)
        except ValueError:
            print(f"bad --guard value '{value}'", file=sys.stderr)
            return 2
    config = RunConfig(
        cache_dir=getattr(args, "cache_dir", None) or klcache.default_cache_dir(),
        guards=Guards(overrides, getattr(args, "unsafe_guards", False)),
        output_format=getattr(args, "format", "pretty"),
        precision_report=getattr(args, "precision_report", False),
        jobs=max(1, getattr(args, "jobs", 1)),
    )
    try:
        return args.func(args, config)
    except GuardExceeded as exc:
        print(f"guard stop: {exc}", file=sys.stderr)
        return 1
    except GoldenMismatch as exc:
        print(f"golden mismatch: {exc}", file=sys.stderr)
        return 3
    except IntegrityError as exc:
        print(f"integrity error (bug): {exc}", file=sys.stderr)
        return 4
    except InvalidInput as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return 2
    except CellkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
