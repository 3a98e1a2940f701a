"""Command-line entry point: canonical JSON on stdout, diagnostics on stderr.

Exit codes: 0 success, 2 schema or input validation failure, 3 mathematical
precondition failure.  Output documents carry a "schema" version field and the
seed whenever randomness was involved; identical inputs and seeds give
byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from itertools import combinations

from . import serialize
from .apolarity import catalecticant
from .combinatorics import Partition, SkewShape, lr_tableaux, schur_dimension
from .ideals import ideal_piece
from .linalg import rational_to_str
from .points import random_flag_point, flag_tensor
from .ranks import (
    Sigma2Unclassified,
    classify_sigma2,
    decomposition_membership,
    lower_bound_trace,
    solve_coefficients,
    tangent_space_basis,
)
from .serialize import SchemaError, canonical_dumps
from .spaces import AmbientElement, schur_basis, schur_basis_labels

EXIT_OK = 0
EXIT_SCHEMA = 2
EXIT_MATH = 3

DEFAULT_MAX_DEGREE = 10


def _max_degree() -> int:
    raw = os.environ.get("SCHUR_MAX_DEGREE")
    if raw is None:
        return DEFAULT_MAX_DEGREE
    try:
        return int(raw)
    except ValueError as exc:
        raise SchemaError(f"SCHUR_MAX_DEGREE must be an integer, got {raw!r}") from exc


def parse_partition(text: str, name: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "[]"):
        return Partition(())
    try:
        parts = tuple(int(chunk.strip()) for chunk in text.split(","))
    except ValueError as exc:
        raise SchemaError(f"--{name} must look like '3,2,1', got {text!r}") from exc
    try:
        p = Partition(parts)
    except ValueError as exc:
        raise SchemaError(str(exc)) from exc
    cap = _max_degree()
    if p.size > cap:
        raise SchemaError(f"|{name}| = {p.size} exceeds SCHUR_MAX_DEGREE = {cap}")
    return p


def load_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise SchemaError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise SchemaError(
            f"malformed JSON in {path}: {exc.msg} at line {exc.lineno} column {exc.colno}"
        ) from exc


def load_element(path: str) -> AmbientElement:
    el = serialize.element_from_json(load_json(path))
    cap = _max_degree()
    if el.lam.size > cap:
        raise SchemaError(f"|lambda| = {el.lam.size} exceeds SCHUR_MAX_DEGREE = {cap}")
    return el


def _doc(command: str, payload: dict, seed: int | None = None) -> dict:
    out = {"schema": serialize.SCHEMA_VERSION, "command": command}
    if seed is not None:
        out["seed"] = seed
    out.update(payload)
    return out


def cmd_lr(args) -> dict:
    lam = parse_partition(args.lam, "lambda")
    mu = parse_partition(args.mu, "mu")
    nu = parse_partition(args.nu, "nu")
    tabs = lr_tableaux(SkewShape(nu, lam), mu) if nu.contains(lam) else ()
    return _doc(
        "lr",
        {
            "coefficient": len(tabs),
            "tableaux": [serialize.tableau_to_json(t) for t in tabs],
        },
    )


def cmd_dimension(args) -> dict:
    lam = parse_partition(args.lam, "lambda")
    return _doc("dimension", {"lambda": list(lam.parts), "n": args.n, "dimension": schur_dimension(lam, args.n)})


def cmd_basis(args) -> dict:
    lam = parse_partition(args.lam, "lambda")
    els = schur_basis(lam, args.n, dual=args.dual)
    labels = schur_basis_labels(lam, args.n)
    return _doc(
        "basis",
        {
            "labels": [serialize.tableau_to_json(t) for t in labels],
            "elements": [serialize.element_to_json(e) for e in els],
        },
    )


def cmd_apolarity(args) -> dict:
    f = load_element(args.f)
    g = load_element(args.g)
    from .apolarity import schur_apolarity

    image = schur_apolarity(f, g)
    return _doc("apolarity", {"image": serialize.any_element_to_json(image)})


def cmd_catalecticant(args) -> dict:
    f = load_element(args.input)
    mu = parse_partition(args.mu, "mu")
    cat = catalecticant(f, mu)
    payload: dict = {"lambda": list(f.lam.parts), "mu": list(mu.parts), "n": f.n}
    if args.emit == "rank":
        payload["rank"] = cat.rank()
    elif args.emit == "kernel":
        kernel = cat.kernel()
        payload["kernel"] = [
            {
                serialize.canonical_dumps(serialize.tableau_to_json(lab)).strip(): rational_to_str(v)
                for lab, v in vec.items()
            }
            for vec in kernel.basis_vectors()
        ]
        payload["kernel_dimension"] = kernel.dim
    else:
        payload["matrix"] = serialize.matrix_to_json(cat.matrix)
        payload["rank"] = cat.rank()
    return _doc("catalecticant", payload)


def cmd_ideal(args) -> dict:
    point = serialize.flag_point_from_json(load_json(args.point))
    nu = parse_partition(args.nu, "nu")
    piece = ideal_piece(point, nu, iterate=not args.no_iterate)
    return _doc(
        "ideal",
        {
            "nu": list(nu.parts),
            "dimension": piece.dim,
            "basis": [serialize.element_to_json(e) for e in piece.basis_elements()],
        },
    )


def cmd_lower_bound(args) -> dict:
    t = load_element(args.input)
    res = lower_bound_trace(t)
    return _doc("lower-bound", {"bound": res.bound, "stage_ranks": list(res.stage_ranks)})


def cmd_classify(args) -> dict:
    t = load_element(args.input)
    verdict = classify_sigma2(t, args.k, args.n)
    return _doc("classify-sigma2", serialize.verdict_to_json(verdict))


def cmd_check_decomposition(args) -> dict:
    f = load_element(args.input)
    data = load_json(args.points)
    if not isinstance(data, list):
        raise SchemaError("points file must hold a list of flag points")
    points = [serialize.flag_point_from_json(p) for p in data]
    member = decomposition_membership(f, points)
    payload: dict = {"member": member}
    if args.solve:
        if member:
            coeffs = solve_coefficients(f, points)
            payload["coefficients"] = None if coeffs is None else [rational_to_str(c) for c in coeffs]
        else:
            payload["coefficients"] = None
    return _doc("check-decomposition", payload)


def _reproduce_grassmann_table(seed: int) -> dict:
    point = random_flag_point(Partition((2, 2)), 4, seed)
    p = flag_tensor(point)
    rows = []
    for mu in [(1,), (2,), (1, 1)]:
        cat = catalecticant(p, Partition(mu))
        rows.append({"mu": list(mu), "rank": cat.rank(), "shape": list(cat.shape)})
    return {"table": rows}


def _reproduce_rank6() -> dict:
    terms = {(pair, pair): Fraction(1) for pair in combinations(range(1, 5), 2)}
    t = AmbientElement(Partition((2, 2)), 4, terms)
    cat = catalecticant(t, Partition((1, 1)))
    nonzero_per_col: dict[int, int] = {}
    for (i, j) in cat.matrix.entries:
        nonzero_per_col[j] = nonzero_per_col.get(j, 0) + 1
    return {
        "rank": cat.rank(),
        "shape": list(cat.shape),
        "diagonal_up_to_scaling": all(v == 1 for v in nonzero_per_col.values())
        and len(nonzero_per_col) == 6,
    }


def _reproduce_flag_kernels() -> dict:
    P = Partition
    t1 = AmbientElement(P((3, 2, 1)), 4, {((1, 2, 3), (1, 2), (1,)): Fraction(1)})
    t = t1 + AmbientElement(P((3, 2, 1)), 4, {((1, 2, 3), (2, 3), (3,)): Fraction(1)})
    out = {}
    c1 = catalecticant(t1, P((2,)))
    c2 = catalecticant(t, P((2,)))
    c3 = catalecticant(t, P((1, 1, 1)))
    out["one_term"] = {"rank": c1.rank(), "kernel_dimension": c1.kernel().dim}
    out["two_term"] = {"rank": c2.rank(), "kernel_dimension": c2.kernel().dim}
    out["full_column"] = {"rank": c3.rank()}
    return out


def _reproduce_lower_bound() -> dict:
    P = Partition
    t = AmbientElement(
        P((3, 2, 1)),
        4,
        {((1, 2, 3), (1, 2), (1,)): Fraction(1), ((1, 2, 3), (2, 3), (3,)): Fraction(1)},
    )
    neg = AmbientElement(
        P((3, 2, 1, 1)),
        6,
        {((1, 2, 3, 4), (1, 2), (1,)): Fraction(1), ((1, 2, 5, 6), (1, 2), (1,)): Fraction(1)},
    )
    a = lower_bound_trace(t)
    b = lower_bound_trace(neg)
    return {
        "two_flag_example": {"bound": a.bound, "stage_ranks": list(a.stage_ranks)},
        "shared_flag_control": {"bound": b.bound, "stage_ranks": list(b.stage_ranks)},
    }


def _sigma2_representatives(k: int, n: int) -> list[tuple[str, AmbientElement]]:
    P = Partition
    lam = P((2,) + (1,) * (k - 1))
    base = tuple(range(1, k + 1))
    reps = [("rank1", AmbientElement(lam, n, {(base, (1,)): Fraction(1)}))]
    fams = tangent_space_basis(k, n)
    reps.append(("tangential_rank2", fams[-1]))
    if n >= k + 2:
        # wedge leg with v_2 replaced by v_{k+1}, mixed with the new direction v_{k+2}
        two_key = tuple(x for x in base if x != 2) + (k + 1,)
        two = AmbientElement(lam, n, {(two_key, (1,)): Fraction(1)})
        three_h = k + 2
        second = tuple(range(2, k + 1)) + (three_h,)
        three = AmbientElement(
            lam,
            n,
            {(base, (three_h,)): Fraction(1), (second, (1,)): Fraction(-1 if (k - 1) % 2 else 1)},
        )
        reps.append(("tangential_rank3", two + three))
    for h in range(max(0, 2 * k - n), k - 1):
        second = tuple(range(1, h + 1)) + tuple(range(k + 1, 2 * k - h + 1))
        reps.append(
            (
                f"secant_h{h}_distinct",
                AmbientElement(
                    lam, n, {(base, (base[-1],)): Fraction(1), (second, (second[-1],)): Fraction(1)}
                ),
            )
        )
        if h >= 1:
            reps.append(
                (
                    f"secant_h{h}_equal",
                    AmbientElement(
                        lam, n, {(base, (1,)): Fraction(1), (second, (1,)): Fraction(1)}
                    ),
                )
            )
    return reps


def _reproduce_sigma2() -> dict:
    out = {}
    for k, n in [(2, 4), (3, 5)]:
        rows = []
        for name, t in _sigma2_representatives(k, n):
            try:
                verdict = serialize.verdict_to_json(classify_sigma2(t, k, n))
            except Sigma2Unclassified as exc:
                verdict = {"unclassified": str(exc)}
            rows.append({"case": name, "verdict": verdict})
        out[f"k{k}_n{n}"] = rows
    return out


def _reproduce_decomposition() -> dict:
    P = Partition
    t = AmbientElement(
        P((3, 2, 1)),
        4,
        {((1, 2, 3), (1, 2), (3,)): Fraction(1), ((1, 2, 3), (2, 3), (1,)): Fraction(-1)},
    )
    flag1 = serialize.flag_point_from_json(
        {
            "n": 4,
            "lambda": [3, 2, 1],
            "subspaces": [
                [["1", "0", "1", "0"]],
                [["1", "0", "1", "0"], ["0", "1", "0", "0"]],
                [["1", "0", "1", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]],
            ],
        }
    )
    flag2 = serialize.flag_point_from_json(
        {
            "n": 4,
            "lambda": [3, 2, 1],
            "subspaces": [
                [["1", "0", "-1", "0"]],
                [["1", "0", "-1", "0"], ["0", "1", "0", "0"]],
                [["1", "0", "-1", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"]],
            ],
        }
    )
    member = decomposition_membership(t, [flag1, flag2])
    coeffs = solve_coefficients(t, [flag1, flag2]) if member else None
    check: bool | None = None
    if coeffs is not None:
        recon = flag_tensor(flag1).scaled(coeffs[0]) + flag_tensor(flag2).scaled(coeffs[1])
        check = recon == t
    return {
        "member": member,
        "coefficients": None if coeffs is None else [rational_to_str(c) for c in coeffs],
        "reconstruction_exact": check,
    }


REPRODUCE_IDS = {
    "grassmann-table": lambda seed: _reproduce_grassmann_table(seed),
    "table1": lambda seed: _reproduce_grassmann_table(seed),
    "rank6": lambda seed: _reproduce_rank6(),
    "flag-kernels": lambda seed: _reproduce_flag_kernels(),
    "lower-bound": lambda seed: _reproduce_lower_bound(),
    "sigma2-tables": lambda seed: _reproduce_sigma2(),
    "table2": lambda seed: _reproduce_sigma2(),
    "table3": lambda seed: _reproduce_sigma2(),
    "decomposition": lambda seed: _reproduce_decomposition(),
}


def cmd_reproduce(args) -> dict:
    ident = args.id
    if ident not in REPRODUCE_IDS:
        raise SchemaError(f"unknown reproduce id {ident!r}; known: {sorted(REPRODUCE_IDS)}")
    payload = REPRODUCE_IDS[ident](args.seed)
    return _doc("reproduce", {"id": ident, **payload}, seed=args.seed)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="schur",
        description="Exact computations with Schur modules, apolarity contractions, "
        "catalecticants, flag ideals, and structured-rank analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient and fillings")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.set_defaults(func=cmd_lr)

    p = sub.add_parser("dimension", help="dimension of the shape-lambda module over C^n")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_dimension)

    p = sub.add_parser("basis", help="canonical module basis")
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--dual", action="store_true")
    p.set_defaults(func=cmd_basis)

    p = sub.add_parser("apolarity", help="contraction of a dual element against an element")
    p.add_argument("--f", required=True, help="primal element JSON file")
    p.add_argument("--g", required=True, help="dual element JSON file")
    p.set_defaults(func=cmd_apolarity)

    p = sub.add_parser("catalecticant", help="catalecticant matrix / rank / kernel")
    p.add_argument("--input", required=True, help="primal element JSON file")
    p.add_argument("--mu", required=True)
    p.add_argument("--emit", choices=["matrix", "rank", "kernel"], default="matrix")
    p.set_defaults(func=cmd_catalecticant)

    p = sub.add_parser("ideal", help="degree-nu ideal piece of a flag point")
    p.add_argument("--point", required=True, help="flag point JSON file")
    p.add_argument("--nu", required=True)
    p.add_argument("--no-iterate", action="store_true")
    p.set_defaults(func=cmd_ideal)

    p = sub.add_parser("lower-bound", help="structured-rank lower bound by catalecticant peeling")
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_lower_bound)

    p = sub.add_parser("classify-sigma2", help="rank classifier on the second secant of F(1,k;n)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--input", required=True)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("check-decomposition", help="span membership against flag points")
    p.add_argument("--input", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--solve", action="store_true")
    p.set_defaults(func=cmd_check_decomposition)

    p = sub.add_parser("reproduce", help="recompute a named golden computation")
    p.add_argument("id")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        document = args.func(args)
    except SchemaError as exc:
        print(f"schema error: {exc}", file=sys.stderr)
        return EXIT_SCHEMA
    except Sigma2Unclassified as exc:
        print(f"unclassified: {exc}", file=sys.stderr)
        return EXIT_MATH
    except ValueError as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return EXIT_MATH
    sys.stdout.write(canonical_dumps(document))
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
