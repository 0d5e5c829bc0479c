"""Command-line entry point (``qmatroids``)."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import classical, verify
from .codes import generalized_rank_weights, verify_lemma62
from .errors import ConsistencyError
from .euler import euler_report
from .grassmann import DEFAULT_SUBSPACE_BUDGET
from .io import DescriptionError, Loaded, load
from .lattice import (
    DEFAULT_CIRCUIT_CAP,
    brute_force_join_counts,
    build_cycle_lattice,
    mobius,
    mu_bar,
    rota_crosscut,
    to_dot,
)

SCHEMA_VERSION = 1


class CheckFailed(Exception):
    """A computed check did not hold; the report is still emitted."""


def _load(args) -> Loaded:
    text = Path(args.input).read_text() if args.input else None
    return load(text, args.family, args.budget_subspaces)


def _expect(loaded: Loaded, *kinds: str) -> None:
    if loaded.kind not in kinds:
        raise DescriptionError(f"this command needs a {' or '.join(kinds)} description, got {loaded.kind}")


def _text(report: dict, indent: str = "") -> str:
    lines = []
    for k, v in report.items():
        if isinstance(v, dict) and v and all(not isinstance(x, (dict, list)) for x in v.values()):
            lines.append(f"{indent}{k}: " + ", ".join(f"{a}={b}" for a, b in v.items()))
        elif isinstance(v, dict):
            lines.append(f"{indent}{k}:")
            lines.append(_text(v, indent + "  "))
        else:
            lines.append(f"{indent}{k}: {v}")
    return "\n".join(x for x in lines if x)


def cmd_euler(args) -> tuple[dict, str | None]:
    loaded = _load(args)
    _expect(loaded, "q")
    M = loaded.obj
    rep = euler_report(M)
    out = {"schema": SCHEMA_VERSION, "input": loaded.label, "n": M.n, "q": M.q, "rank": M.r}
    out.update(rep.to_json())
    out["formula_terms"] = [
        {"i": i, "l": l, "lambda": c, "summands": s} for i, l, c, s in rep.formula.terms
    ]
    dot = to_dot(build_cycle_lattice(M)) if M.nullity else None
    if not rep.shelling_ok:
        raise CheckFailed(out, dot, "reverse-lex facet order is not a shelling of this complex")
    return out, dot


def cmd_classical(args) -> tuple[dict, str | None]:
    loaded = _load(args)
    _expect(loaded, "classical")
    M = loaded.obj
    faces = classical.face_census(M)
    t32 = classical.theorem32_check(M)
    out = {
        "schema": SCHEMA_VERSION, "input": loaded.label, "n": M.n, "rank": M.r,
        "f": list(faces.f), "d": list(faces.d), "chi": faces.chi,
        "coloop": t32.coloop, "mu": t32.mu, "mu_crosscut": t32.mu_crosscut,
        "lambda": {str(i): c for i, c in sorted(t32.lambdas.items())},
        "theorem32_ok": t32.ok,
    }
    if M.n <= 10:
        cp = classical.chain_proof_check(M)
        out["chain_route"] = {"lemma36": list(cp.lemma36), "chi_chains": cp.chi_chains, "ok": cp.ok}
    dot = to_dot(build_cycle_lattice(M))
    if not t32.ok or not out.get("chain_route", {"ok": True})["ok"]:
        raise CheckFailed(out, dot, "classical identities failed")
    return out, dot


def cmd_weights(args) -> tuple[dict, str | None]:
    loaded = _load(args)
    _expect(loaded, "code")
    C = loaded.obj
    lem = verify_lemma62(C)
    out = {"schema": SCHEMA_VERSION, "input": loaded.label, "n": C.n, "m": C.m, "k": C.k, "q": C.field.q,
           "lemma62": {"ok": lem.ok, "reading": lem.reading, "attempts": lem.attempts}}
    if not lem.ok:
        raise CheckFailed(out, None, "subcode supports do not match the q-cycles under either reading")
    out.update(generalized_rank_weights(C, reading=lem.reading).to_json())
    return out, None


def cmd_mobius(args) -> tuple[dict, str | None]:
    loaded = _load(args)
    _expect(loaded, "q", "classical")
    M = loaded.obj
    L = build_cycle_lattice(M)
    mu = mobius(L)
    out = {"schema": SCHEMA_VERSION, "input": loaded.label, "mu": mu, "mu_bar": mu_bar(M),
           "nodes": len(L), "atoms": len(L.atoms), "diagnostics": L.diagnostics}
    ok = True
    if L.nullity[L.top] >= 2:
        cross, lam = rota_crosscut(L)
        out["mu_crosscut"] = cross
        out["lambda"] = {str(i): c for i, c in sorted(lam.items())}
        ok = cross == mu
        if len(L.atoms) <= args.budget_circuits:
            brute = brute_force_join_counts(L, args.budget_circuits).get(L.keys[L.top], [])
            brute_mu = sum((-1) ** i * c for i, c in enumerate(brute) if i >= 1)
            out["mu_bruteforce"] = brute_mu
            ok = ok and brute_mu == mu
        else:
            out["mu_bruteforce"] = None
    dot = to_dot(L)
    if not ok:
        raise CheckFailed(out, dot, "Möbius routes disagree")
    return out, dot


def cmd_verify(args) -> tuple[dict, str | None]:
    results = verify.run(args.battery, args.seed)
    out = {"schema": SCHEMA_VERSION, "seed": args.seed, "batteries": [r.to_json() for r in results]}
    if not all(r.ok for r in results):
        raise CheckFailed(out, None, "; ".join(r.name for r in results if not r.ok) + " failed")
    return out, None


COMMANDS = {
    "euler": cmd_euler,
    "classical": cmd_classical,
    "weights": cmd_weights,
    "mobius": cmd_mobius,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qmatroids", description="Exact q-matroid Euler characteristics and rank weights")
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        s = sub.add_parser(name)
        if name == "verify":
            s.add_argument("battery", help=f"one of {', '.join(verify.BATTERIES)} or all")
        else:
            src = s.add_mutually_exclusive_group(required=True)
            src.add_argument("--input", help="JSON description file")
            src.add_argument("--family", help='named family, e.g. "uniform:q=2,k=1,n=3" or "p1"')
        s.add_argument("--budget-subspaces", type=int, default=DEFAULT_SUBSPACE_BUDGET)
        s.add_argument("--budget-circuits", type=int, default=DEFAULT_CIRCUIT_CAP)
        s.add_argument("--format", choices=("json", "text", "dot"), default="json")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--out", help="write the report here instead of stdout")
    return p


def _render(report: dict, dot: str | None, fmt: str) -> str:
    if fmt == "dot":
        if dot is None:
            raise DescriptionError("no lattice to draw for this command")
        return dot
    if fmt == "text":
        return _text(report) + "\n"
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    status = 0
    try:
        report, dot = COMMANDS[args.command](args)
    except CheckFailed as exc:
        report, dot, reason = exc.args
        print(f"check failed: {reason}", file=sys.stderr)
        status = 1
    except (ValueError, OSError) as exc:
        # DescriptionError, BudgetExceeded and AxiomError are ValueErrors
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConsistencyError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return 1
    try:
        text = _render(report, dot, args.format)
    except DescriptionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
