"""Command-line interface.

Every command prints one key-sorted JSON report to stdout and exits with
0 (property holds / success), 1 (property fails; witnesses are in the
report), 2 (input or parse error) or 3 (budget exceeded).  The report
carries a timestamp unless --deterministic is given, in which case
identical inputs produce byte-identical output.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction
from typing import Optional

from . import catalog as cat
from .cohomology import cohomology_table
from .constructions import PreconditionError, fingerprint, untwist, yau_twist
from .core import (
    check_hom_associative,
    check_morphism,
    check_multiplicative,
    check_unital,
)
from .deformation import check_deformation
from .derivations import derivation_space
from .dsl import ParseError, parse, parse_jet, parse_map, serialize
from .groebner import (
    NonIso,
    default_order,
    homass_ideal,
    noniso_certificate,
    structure_variable_names,
)
from .linalg import Subspace
from .poly import BudgetExceeded, buchberger, parse_poly
from .scalars import format_scalar
from .structure import (
    AssocType,
    Verdict,
    associative_type_check,
    center,
    simplicity_certificate,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
EXIT_BUDGET = 3


def _vector_text(vec) -> str:
    chunks = [
        f"{format_scalar(c)}*e{i + 1}" for i, c in enumerate(vec) if c
    ]
    return " + ".join(chunks) if chunks else "0"


def _witnesses_json(report) -> list[dict]:
    return [
        {
            "indices": list(w.indices),
            "lhs": _vector_text(w.lhs),
            "rhs": _vector_text(w.rhs),
        }
        for w in report.witnesses
    ]


def _discrepancies_json(discrepancies) -> list[dict]:
    return [
        {
            "kind": d.kind,
            "subject": d.subject,
            "expected": d.expected,
            "computed": d.computed,
            "detail": d.detail,
        }
        for d in discrepancies
    ]


def _subspace_json(space: Subspace) -> dict:
    return {
        "dim": space.dim,
        "ambient_dim": space.ambient_dim,
        "basis": [_vector_text(v) for v in space.vectors()],
    }


def _read_file(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise _InputError(f"cannot read {path}: {exc}") from exc


class _InputError(Exception):
    pass


def _load_algebra(path: str):
    return parse(_read_file(path)).to_algebra()


def _parse_params(spec: Optional[str]) -> dict:
    if not spec:
        return {}
    out = {}
    for chunk in spec.split(","):
        chunk = chunk.strip()
        if not chunk:
            continue
        if "=" not in chunk:
            raise _InputError(f"bad parameter assignment {chunk!r}")
        key, value = chunk.split("=", 1)
        try:
            out[key.strip()] = Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise _InputError(f"bad parameter value {value!r}") from exc
    return out


def _cmd_verify(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    hom = check_hom_associative(algebra)
    multi = check_multiplicative(algebra)
    reports = {"hom_associative": hom, "multiplicative": multi}
    if algebra.unit is not None:
        reports["unital"] = check_unital(algebra)
    ok = all(r.holds for r in reports.values())
    witnesses = []
    for name, rep in reports.items():
        for w in _witnesses_json(rep):
            w["property"] = name
            witnesses.append(w)
    report = {
        "command": "verify",
        "algebra_label": algebra.label,
        "status": "ok" if ok else "fail",
        "dims": {"dim": algebra.dim},
        "witnesses": witnesses,
        "discrepancies": [],
        "stats": {name: rep.holds for name, rep in reports.items()},
    }
    return (EXIT_OK if ok else EXIT_FAIL), report


def _cmd_twist(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    _, phi = parse_map(_read_file(args.morphism))
    morph = check_morphism(phi, algebra, algebra)
    if not morph.holds:
        report = {
            "command": "twist",
            "algebra_label": algebra.label,
            "status": "fail",
            "dims": {"dim": algebra.dim},
            "witnesses": _witnesses_json(morph),
            "discrepancies": [],
            "stats": {"morphism": False},
        }
        return EXIT_FAIL, report
    twisted = yau_twist(algebra, phi, label=f"{algebra.label}_twisted")
    report = {
        "command": "twist",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": {"dim": algebra.dim},
        "witnesses": [],
        "discrepancies": [],
        "stats": {"morphism": True},
        "document": serialize(twisted),
    }
    return EXIT_OK, report


def _cmd_untwist(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    try:
        result = untwist(algebra, label=f"{algebra.label}_untwist")
    except PreconditionError as exc:
        raise _InputError(str(exc)) from exc
    report = {
        "command": "untwist",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": {"dim": algebra.dim},
        "witnesses": [],
        "discrepancies": [],
        "stats": {},
        "document": serialize(result),
    }
    return EXIT_OK, report


def _cmd_cohomology(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    degree = args.degree or 3
    table = cohomology_table(algebra, max_degree=degree)
    dims = {}
    for n, data in table.degrees.items():
        dims[f"c{n}"] = data.dim_cochain
        dims[f"z{n}"] = data.dim_z
        dims[f"b{n}"] = data.dim_b
        dims[f"h{n}"] = data.dim_h
    discrepancies = []
    if degree >= 3:
        discrepancies = cat.cohomology_discrepancies(algebra.label, table)
    report = {
        "command": "cohomology",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": dims,
        "witnesses": [],
        "discrepancies": _discrepancies_json(discrepancies),
        "stats": {
            f"degree_{n}": dict(cert) for n, cert in table.certificates.items()
        },
    }
    return EXIT_OK, report


def _cmd_derivations(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    space = derivation_space(algebra, args.k)
    report = {
        "command": "derivations",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": {"der_dim": space.space.dim, "k": args.k},
        "witnesses": [],
        "discrepancies": [],
        "stats": {},
        "operators": [_vector_text(v) for v in space.space.vectors()],
    }
    return EXIT_OK, report


def _cmd_simple(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    verdict = simplicity_certificate(algebra)
    payload = {
        "command": "simple",
        "algebra_label": algebra.label,
        "status": "ok" if verdict.is_simple else "fail",
        "dims": {
            "dim": algebra.dim,
            "multiplication_algebra_dim": verdict.multiplication_algebra_dim,
        },
        "witnesses": [],
        "discrepancies": [],
        "stats": {"verdict": verdict.verdict.value},
    }
    if verdict.ideal is not None:
        payload["ideal"] = _subspace_json(verdict.ideal)
    return (EXIT_OK if verdict.is_simple else EXIT_FAIL), payload


def _cmd_center(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    space = center(algebra)
    report = {
        "command": "center",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": {"center_dim": space.dim},
        "witnesses": [],
        "discrepancies": [],
        "stats": {},
        "basis": [_vector_text(v) for v in space.vectors()],
    }
    return EXIT_OK, report


def _cmd_assoc_type(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    result = associative_type_check(algebra, budget=args.budget)
    status = {
        AssocType.YES: "ok",
        AssocType.NO: "fail",
        AssocType.INCONCLUSIVE: "budget",
    }[result.kind]
    report = {
        "command": "assoc-type",
        "algebra_label": algebra.label,
        "status": status,
        "dims": {"dim": algebra.dim},
        "witnesses": [],
        "discrepancies": [],
        "stats": {"kind": result.kind.value, "detail": result.detail},
    }
    if result.compatible is not None:
        report["document"] = serialize(result.compatible)
    code = {
        AssocType.YES: EXIT_OK,
        AssocType.NO: EXIT_FAIL,
        AssocType.INCONCLUSIVE: EXIT_BUDGET,
    }[result.kind]
    return code, report


def _cmd_catalog(args) -> tuple[int, dict]:
    if args.action == "list":
        ids = cat.catalog_list(args.family)
        report = {
            "command": "catalog list",
            "algebra_label": "",
            "status": "ok",
            "dims": {"count": len(ids)},
            "witnesses": [],
            "discrepancies": [],
            "stats": {},
            "ids": ids,
        }
        return EXIT_OK, report
    if args.action == "show":
        if not args.id:
            raise _InputError("catalog show needs an entry id")
        try:
            algebra = cat.catalog_get(args.id, _parse_params(args.params))
        except (cat.UnknownEntry, cat.InadmissibleParameter) as exc:
            raise _InputError(str(exc)) from exc
        report = {
            "command": "catalog show",
            "algebra_label": args.id,
            "status": "ok",
            "dims": {"dim": algebra.dim},
            "witnesses": [],
            "discrepancies": [],
            "stats": {},
            "document": serialize(algebra),
        }
        return EXIT_OK, report
    if args.action == "verify-all":
        result = cat.catalog_verify_all()
        failures = {
            id_: {k: v for k, v in rep.checks.items() if not v}
            for id_, rep in result.entries.items()
            if not rep.ok
        }
        report = {
            "command": "catalog verify-all",
            "algebra_label": "",
            "status": "ok" if result.ok else "fail",
            "dims": {"entries": len(result.entries)},
            "witnesses": [
                {"entry": id_, "failed_checks": checks}
                for id_, checks in failures.items()
            ],
            "discrepancies": _discrepancies_json(result.discrepancies()),
            "stats": {
                id_: rep.checks for id_, rep in sorted(result.entries.items())
            },
        }
        return (EXIT_OK if result.ok else EXIT_FAIL), report
    raise _InputError(f"unknown catalog action {args.action!r}")


def _cmd_groebner(args) -> tuple[int, dict]:
    n = args.n
    if n is None:
        raise _InputError("groebner commands need -n DIMENSION")
    gens = homass_ideal(
        n, hom_assoc=not args.multiplicativity, multiplicativity=args.multiplicativity
    )
    order = default_order(n)
    try:
        basis = buchberger(
            [g for g in gens if not g.is_zero()], order, budget=args.budget
        )
    except BudgetExceeded as exc:
        report = {
            "command": f"groebner {args.action}",
            "algebra_label": "",
            "status": "budget",
            "dims": {"n": n},
            "witnesses": [],
            "discrepancies": [],
            "stats": exc.stats,
        }
        return EXIT_BUDGET, report
    if args.action == "ideal":
        report = {
            "command": "groebner ideal",
            "algebra_label": "",
            "status": "ok",
            "dims": {"n": n, "generators": len(gens), "basis_size": len(basis.generators)},
            "witnesses": [],
            "discrepancies": [],
            "stats": dict(basis.stats),
            "basis": [g.text(order) for g in basis.generators],
        }
        return EXIT_OK, report
    if args.action == "member":
        if not args.poly:
            raise _InputError("groebner member needs -p POLYNOMIAL")
        try:
            p = parse_poly(args.poly, structure_variable_names(n))
        except ValueError as exc:
            raise _InputError(str(exc)) from exc
        remainder = basis.normal_form(p)
        member = remainder.is_zero()
        report = {
            "command": "groebner member",
            "algebra_label": "",
            "status": "ok" if member else "fail",
            "dims": {"n": n},
            "witnesses": []
            if member
            else [{"normal_form": remainder.text(order)}],
            "discrepancies": [],
            "stats": dict(basis.stats),
        }
        return (EXIT_OK if member else EXIT_FAIL), report
    raise _InputError(f"unknown groebner action {args.action!r}")


def _cmd_noniso(args) -> tuple[int, dict]:
    a1 = _load_algebra(args.file1)
    a2 = _load_algebra(args.file2)
    if a1.dim != a2.dim:
        report = {
            "command": "noniso",
            "algebra_label": f"{a1.label} vs {a2.label}",
            "status": "ok",
            "dims": {"dim1": a1.dim, "dim2": a2.dim},
            "witnesses": [],
            "discrepancies": [],
            "stats": {"verdict": "proven_non_isomorphic", "reason": "dimension"},
        }
        return EXIT_OK, report
    result = noniso_certificate(a1, a2, budget=args.budget)
    proven = result.proven
    budgeted = result.detail == "budget exceeded"
    report = {
        "command": "noniso",
        "algebra_label": f"{a1.label} vs {a2.label}",
        "status": "ok" if proven else ("budget" if budgeted else "fail"),
        "dims": {"dim": a1.dim},
        "witnesses": [],
        "discrepancies": [],
        "stats": {"verdict": result.kind.value, **result.stats},
    }
    code = EXIT_OK if proven else (EXIT_BUDGET if budgeted else EXIT_FAIL)
    return code, report


def _cmd_deform(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    jet = parse_jet(_read_file(args.jet), algebra)
    up_to = args.order if args.order is not None else 2 * jet.order
    result = check_deformation(jet, up_to)
    report = {
        "command": "deform",
        "algebra_label": algebra.label,
        "status": "ok" if result.holds else "fail",
        "dims": {"jet_order": jet.order, "checked_up_to": up_to},
        "witnesses": _witnesses_json(result),
        "discrepancies": [],
        "stats": {},
    }
    return (EXIT_OK if result.holds else EXIT_FAIL), report


def _cmd_fingerprint(args) -> tuple[int, dict]:
    algebra = _load_algebra(args.file)
    fp = fingerprint(algebra)
    report = {
        "command": "fingerprint",
        "algebra_label": algebra.label,
        "status": "ok",
        "dims": {
            "dim": fp.dim,
            "twist_rank": fp.twist_rank,
            "der0_dim": fp.der0_dim,
            "der1_dim": fp.der1_dim,
            "center_dim": fp.center_dim,
            "z2": fp.z2,
            "b2": fp.b2,
            "h2": fp.h2,
            "z3": fp.z3,
            "h3": fp.h3,
        },
        "witnesses": [],
        "discrepancies": [],
        "stats": {
            "twist_charpoly": [format_scalar(c) for c in fp.twist_charpoly]
        },
    }
    return EXIT_OK, report


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="homassoc",
        description="Exact computations with multiplicative Hom-associative algebras",
    )
    parser.add_argument(
        "--deterministic",
        action="store_true",
        help="suppress volatile report fields (timestamps)",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=1_000_000,
        help="step budget for Groebner computations",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("verify", help="check the algebra axioms of a document")
    p.add_argument("file")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("twist", help="twist an algebra by a self-morphism")
    p.add_argument("file")
    p.add_argument("--morphism", required=True)
    p.set_defaults(func=_cmd_twist)

    p = sub.add_parser("untwist", help="compatible associative product")
    p.add_argument("file")
    p.set_defaults(func=_cmd_untwist)

    p = sub.add_parser("cohomology", help="cocycle/coboundary dimensions")
    p.add_argument("file")
    p.add_argument("--degree", type=int, choices=(2, 3), default=None)
    p.set_defaults(func=_cmd_cohomology)

    p = sub.add_parser("derivations", help="twisted derivation space")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=_cmd_derivations)

    p = sub.add_parser("simple", help="simplicity certificate")
    p.add_argument("file")
    p.set_defaults(func=_cmd_simple)

    p = sub.add_parser("center", help="center of the algebra")
    p.add_argument("file")
    p.set_defaults(func=_cmd_center)

    p = sub.add_parser("assoc-type", help="compatible associative product search")
    p.add_argument("file")
    p.set_defaults(func=_cmd_assoc_type)

    p = sub.add_parser("catalog", help="built-in reference algebras")
    p.add_argument("action", choices=("list", "show", "verify-all"))
    p.add_argument("id", nargs="?")
    p.add_argument("--family")
    p.add_argument("--params")
    p.set_defaults(func=_cmd_catalog)

    p = sub.add_parser("groebner", help="variety ideals and membership")
    p.add_argument("action", choices=("ideal", "member"))
    p.add_argument("-n", type=int)
    p.add_argument("-p", "--poly")
    p.add_argument(
        "--multiplicativity",
        action="store_true",
        help="use the twist-compatibility ideal instead of the associativity ideal",
    )
    p.set_defaults(func=_cmd_groebner)

    p = sub.add_parser("noniso", help="non-isomorphism certificate")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(func=_cmd_noniso)

    p = sub.add_parser("deform", help="check a truncated deformation")
    p.add_argument("file")
    p.add_argument("--jet", required=True)
    p.add_argument("--order", type=int)
    p.set_defaults(func=_cmd_deform)

    p = sub.add_parser("fingerprint", help="isomorphism invariants")
    p.add_argument("file")
    p.set_defaults(func=_cmd_fingerprint)

    return parser


def run(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report = args.func(args)
    except (_InputError, ParseError, OSError) as exc:
        report = {
            "command": args.cmd,
            "algebra_label": "",
            "status": "error",
            "dims": {},
            "witnesses": [],
            "discrepancies": [],
            "stats": {},
            "error": str(exc),
        }
        if isinstance(exc, ParseError):
            report["position"] = {"line": exc.line, "column": exc.col}
        code = EXIT_INPUT
    if not args.deterministic:
        report["generated_at"] = time.strftime("%Y-%m-%dT%H:%M:%S")
    print(json.dumps(report, sort_keys=True, indent=2, default=str))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
