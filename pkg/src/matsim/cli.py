"""JSON command-line interface.

One job per invocation: a subcommand, a ring descriptor, and a JSON payload.
Results are emitted as canonical JSON (sorted keys, LF) so identical jobs
produce byte-identical output.  Boolean answers never drive nonzero exit
codes; only operational failures do:

    exit 0  success (including "similar": false)
    exit 2  malformed input (JSON, ring descriptor, element syntax)
    exit 3  precondition violation reported by the library
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import lattices as lat
from . import lm
from .classify import (
    LowerBound,
    Mat2,
    Reducible,
    canonical_matrix,
    class_list,
    class_number,
    classify,
    ideal_reps,
    to_canonical,
    witness,
)
from .errors import MatsimError
from .oracle import DEFAULT_BUDGET, conj_search_mod
from .polys import parse_monic
from .rings import ring_from_json


class InputError(Exception):
    """Bad input syntax: exit code 2."""


def _read_source(arg):
    if arg == "-":
        return sys.stdin.read()
    if os.path.exists(arg):
        with open(arg, "r", encoding="utf-8") as fh:
            return fh.read()
    return arg


def _load_json(arg, what):
    try:
        return json.loads(_read_source(arg))
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON for {what}: {exc}") from exc


def _ring(args, allow_zz=False):
    if args.ring is None:
        raise InputError("--ring is required for this command")
    doc = _load_json(args.ring, "--ring")
    try:
        if doc.get("kind") == "ZZ":
            if not allow_zz:
                raise InputError("ring ZZ is only valid for lm-* commands")
            return lm.ZZ
        return ring_from_json(doc)
    except (KeyError, ValueError, TypeError) as exc:
        raise InputError(f"bad ring descriptor: {exc}") from exc


def _parse_matrix(ring, doc, key):
    try:
        rows = doc[key]
        entries = [[_parse_elem(ring, x) for x in row] for row in rows]
        return Mat2(ring, entries)
    except MatsimError:
        raise
    except Exception as exc:
        raise InputError(f"bad matrix {key!r}: {exc}") from exc


def _parse_elem(ring, x):
    if isinstance(x, str):
        return ring.parse(x)
    if isinstance(x, int):
        return ring.from_int(x)
    raise InputError(f"matrix entries must be strings or integers, got {x!r}")


def _parse_poly(ring, doc):
    try:
        return parse_monic(doc["f"], ring)
    except Exception as exc:
        raise InputError(f"bad polynomial: {exc}") from exc


def _emit(args, doc):
    text = json.dumps(doc, sort_keys=True, indent=2) + "\n"
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _encode_mat(ring, M):
    return M.encode()


# ---------------------------------------------------------------------------
# subcommands


def cmd_classify(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    A = _parse_matrix(ring, doc, "matrix")
    form, U = to_canonical(ring, A)
    C = canonical_matrix(form)
    verified = (U @ A) == (C @ U) and U.is_unit()
    return {
        "form": form.label(),
        "canonical_matrix": _encode_mat(ring, C),
        "witness": _encode_mat(ring, U),
        "verified": verified,
    }


def cmd_similar(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    A = _parse_matrix(ring, doc, "A")
    B = _parse_matrix(ring, doc, "B")
    forms = [classify(ring, A).label(), classify(ring, B).label()]
    result = {
        "similar": A.char_poly() == B.char_poly() and forms[0] == forms[1],
        "forms": forms,
    }
    if args.cross_check:
        N = doc.get("N", 3)
        found = conj_search_mod(ring, A, B, N, args.oracle_budget)
        result["oracle"] = {"N": N, "witness_mod": None if found is None else _encode_mat(ring, found.U)}
        if found is None and result["similar"]:
            raise AssertionError("oracle contradicts an exact similarity")
    return result


def cmd_witness(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    A = _parse_matrix(ring, doc, "A")
    B = _parse_matrix(ring, doc, "B")
    w = witness(ring, A, B)
    if w is None:
        return {"similar": False, "witness": None, "verified": None}
    verified = w.check(A, B)
    return {"similar": True, "witness": _encode_mat(ring, w.U), "verified": verified}


def cmd_class_list(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    f = _parse_poly(ring, doc)
    forms = class_list(ring, f, args.insep_bound)
    out = []
    reducible = forms and isinstance(forms[0], Reducible)
    reps = None if reducible else ideal_reps(ring, f, args.insep_bound)
    for i, fo in enumerate(forms):
        entry = {
            "form": fo.label(),
            "matrix": _encode_mat(ring, canonical_matrix(fo)),
        }
        if reps is not None:
            (g1, z), (c, o) = reps[i]
            entry["ideal"] = [[ring.encode(g1), ring.encode(z)], [ring.encode(c), ring.encode(o)]]
        out.append(entry)
    return {"classes": out, "count": len(out)}


def cmd_class_number(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    f = _parse_poly(ring, doc)
    n = class_number(ring, f, args.insep_bound or 10)
    if isinstance(n, LowerBound):
        return {"class_number_lower_bound": n.count}
    return {"class_number": n}


def cmd_lm_to_ideal(args):
    ring = _ring(args, allow_zz=True)
    doc = _load_json(args.payload, "--in")
    f = _parse_poly(ring, doc)
    rows = doc["matrix"]
    A = [[_parse_elem(ring, x) for x in row] for row in rows]
    J = lm.matrix_to_ideal(f, A, ring)
    result = {"basis": J.encode(), "verified": True}
    if isinstance(ring, lm.IntegerRing) and f.degree == 2:
        disc = f.a * f.a + 4 * f.b
        if disc < 0:
            F = lm.reduce_form(lm.ideal_to_form(J))
            result["reduced_form"] = [F.a, F.b, F.c]
    return result


def cmd_lm_to_matrix(args):
    ring = _ring(args, allow_zz=True)
    doc = _load_json(args.payload, "--in")
    f = _parse_poly(ring, doc)
    basis = tuple(tuple(_parse_elem(ring, c) for c in u) for u in doc["basis"])
    J = lm.IdealBasis(f, ring, basis)
    A = lm.ideal_to_matrix(f, J)
    return {"matrix": [[ring.encode(x) for x in row] for row in A]}


def cmd_lattice_free(args):
    doc = _load_json(args.payload, "--in")
    try:
        base = lat.QuadBase(int(doc["d"]))
        ctx = lat.RelExt.from_poly_string(base, doc["f"])
        gens = [lat.lelem(ctx, [Fraction(str(c)) for c in g]) for g in doc["generators"]]
    except MatsimError:
        raise
    except Exception as exc:
        raise InputError(f"bad lattice payload: {exc}") from exc
    J = lat.lattice_from_generators(ctx, gens)
    x0 = lat.lelem(ctx, [Fraction(str(c)) for c in doc["x0"]]) if "x0" in doc else lat.default_x0(J)
    frak_a = lat.coefficient_ideal(J, x0)
    frak_b = lat.intersect_base(J)
    st = lat.ideal_mul(frak_a, frak_b)
    gen = lat.is_principal(base, st)
    basis = lat.is_free(J, x0)
    result = {
        "x0": [str(c) for c in x0.coords()],
        "intersect_base": frak_b.encode(),
        "coefficient_ideal": frak_a.encode(),
        "steinitz": st.encode(),
        "steinitz_generator": None if gen is None else gen.encode(),
        "free": basis is not None,
    }
    if basis is not None:
        result["free_basis"] = [b.encode() for b in basis]
        A = lat.mult_matrix(J, basis)
        result["mult_matrix"] = [[e.encode() for e in row] for row in A]
    return result


def cmd_cross_check(args):
    ring = _ring(args)
    doc = _load_json(args.payload, "--in")
    A = _parse_matrix(ring, doc, "A")
    B = _parse_matrix(ring, doc, "B")
    N = int(doc.get("N", 3))
    found = conj_search_mod(ring, A, B, N, args.oracle_budget)
    return {
        "N": N,
        "witness_mod": None if found is None else _encode_mat(ring, found.U),
        "similar_mod": found is not None,
    }


COMMANDS = {
    "classify": cmd_classify,
    "similar": cmd_similar,
    "witness": cmd_witness,
    "class-list": cmd_class_list,
    "class-number": cmd_class_number,
    "lm-to-ideal": cmd_lm_to_ideal,
    "lm-to-matrix": cmd_lm_to_matrix,
    "lattice-free": cmd_lattice_free,
    "cross-check": cmd_cross_check,
}


def build_parser():
    p = argparse.ArgumentParser(
        prog="matsim",
        description="Exact 2x2 matrix similarity over DVRs, the matrix/ideal "
        "correspondence over Z, and freeness of ideal lattices over Z[sqrt(d)].",
    )
    p.add_argument("command", choices=sorted(COMMANDS))
    p.add_argument("--ring", help="ring descriptor: JSON text, a file, or -")
    p.add_argument("--in", dest="payload", default="-", help="payload: JSON text, a file, or - (stdin)")
    p.add_argument("--out", default="-", help="output file or - (stdout)")
    p.add_argument("--insep-bound", dest="insep_bound", type=int, default=None)
    p.add_argument("--oracle-budget", dest="oracle_budget", type=int, default=DEFAULT_BUDGET)
    p.add_argument("--cross-check", dest="cross_check", action="store_true",
                   help="also run the mod-pi^N conjugacy oracle on similar jobs")
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        result = COMMANDS[args.command](args)
    except InputError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except MatsimError as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 3
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        sys.stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 2
    _emit(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
