"""Command-line front end.

Exit status: 0 on success, 1 on a domain error (or a failed check),
2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import DomainError, NumericalSemigroupError, UsageError, from_generators, render
from .covariety import DescriptorError, adjoined_elements
from .gencov import generated_covariety
from .oracle import oracle_rfm
from .rfm import (
    RfmFamily,
    genus_range,
    is_mr,
    maximal_elements,
    rfm_closure,
    rfm_enumerate,
    rfm_enumerate_genus,
    rfm_minimal_generators,
    rfm_rank,
)
from .verify import run_checks


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(" ", "").split(",") if t]
    except ValueError:
        raise UsageError(f"cannot parse integer list {text!r}") from None


def _braces(xs) -> str:
    return "{" + ",".join(str(x) for x in xs) + "}"


def _threads(args) -> int:
    if args.threads is not None:
        return args.threads
    env = os.environ.get("NSGP_THREADS")
    try:
        return int(env) if env else 1
    except ValueError:
        raise UsageError(f"NSGP_THREADS={env!r} is not an integer") from None


def _emit(args, text: str) -> None:
    if not text.endswith("\n"):
        text += "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False)


def _family_label(S, root, F, m) -> str:
    extra = adjoined_elements(S, root)
    return f"Δ({F},{m})" + ("∪" + _braces(extra) if extra else "")


# -- commands ---------------------------------------------------------------


def cmd_analyze(args):
    S = from_generators(_ints(args.generators))
    record = S.to_dict()
    if not S.is_naturals:
        inv = S.invariants()
        cls = S.classify()
        record.update(
            ratio=inv.ratio,
            embedding_dimension=inv.embedding_dimension,
            pseudo_frobenius=S.pseudo_frobenius(),
            special_gaps=S.special_gaps(),
            classification=cls._asdict(),
        )
    if args.format == "json":
        return _json(record)
    lines = [render(S), f"m={S.multiplicity}", f"F={S.frobenius}", f"g={S.genus}"]
    if S.is_naturals:
        return "\n".join(lines)
    lines += [
        f"r={record['ratio']}",
        f"e={record['embedding_dimension']}",
        f"Ap(S,{S.multiplicity})={_braces(S.apery)}",
        f"PF={_braces(record['pseudo_frobenius'])}",
        f"SG={_braces(record['special_gaps'])}",
    ]
    kinds = [k for k, v in record["classification"].items() if v]
    lines.append("class=" + (",".join(kinds) if kinds else "none"))
    return "\n".join(lines)


def _records(semigroups, fam, parents=None, labels=None):
    out = []
    for i, S in enumerate(semigroups):
        rec = S.to_dict()
        rec["adjoined"] = list(adjoined_elements(S, fam.delta))
        if parents is not None:
            rec["parent"] = parents[i]
            rec["edge"] = labels[i]
        out.append(rec)
    return out


def cmd_enumerate(args):
    fam = RfmFamily(args.frobenius, args.multiplicity)
    threads = _threads(args)
    F, m = fam.F, fam.m
    if args.genus is not None:
        if args.format == "dot":
            raise UsageError("--format dot needs the whole tree; drop --genus")
        members = rfm_enumerate_genus(fam, args.genus, threads=threads)
        if not members:
            r = genus_range(F, m)
            print(f"note: genus {args.genus} is outside {r[0]}..{r[-1]}", file=sys.stderr)
        parents = labels = None
    else:
        tree = rfm_enumerate(fam, threads=threads)
        members, parents, labels = tree.vertices, tree.parents, tree.labels
    if args.oracle:
        expected = oracle_rfm(F, m)
        if args.genus is not None:
            expected = {S for S in expected if S.genus == args.genus}
        if set(members) != expected:
            raise DomainError(f"oracle disagrees: {len(members)} enumerated vs {len(expected)} expected")
        print(f"oracle: agrees ({len(expected)} semigroups)", file=sys.stderr)
    if args.format == "dot":
        return tree.to_dot()
    if args.format == "json":
        body = {"frobenius": F, "multiplicity": m, "count": len(members)}
        if args.genus is not None:
            body["genus"] = args.genus
        body["semigroups"] = _records(members, fam, parents, labels)
        return _json(body)
    lines = [f"R({F},{m})" + (f" genus {args.genus}" if args.genus is not None else "") + f": {len(members)} semigroups"]
    for i, S in enumerate(members):
        tail = ""
        if parents is not None and parents[i] is not None:
            tail = f"  parent=#{parents[i]} +{labels[i]}"
        lines.append(f"#{i} g={S.genus} {_family_label(S, fam.delta, F, m)}  {render(S)}{tail}")
    return "\n".join(lines)


def cmd_genus_range(args):
    r = genus_range(args.frobenius, args.multiplicity)
    if args.format == "json":
        return _json(list(r))
    return _braces(r)


def cmd_max_elements(args):
    F, m = args.frobenius, args.multiplicity
    members = maximal_elements(F, m)
    if args.format == "json":
        return _json([S.to_dict() for S in members])
    lines = [f"Max(R({F},{m})): {len(members)} semigroups"]
    lines += [f"g={S.genus} {render(S)}" for S in members]
    return "\n".join(lines)


def cmd_closure(args):
    fam = RfmFamily(args.frobenius, args.multiplicity)
    X = _ints(args.elements)
    S = rfm_closure(X, fam)
    if args.format == "json":
        return _json(dict(S.to_dict(), generators=X))
    return f"R({fam.F},{fam.m})[{_braces(X)}] = {render(S)}"


def _family_arg(args, S):
    if args.frobenius is None and args.multiplicity is None:
        return None
    return RfmFamily(
        args.frobenius if args.frobenius is not None else S.frobenius,
        args.multiplicity if args.multiplicity is not None else S.multiplicity,
    )


def cmd_rank(args):
    S = from_generators(_ints(args.generators))
    fam = _family_arg(args, S)
    X = rfm_minimal_generators(S, fam)
    F, m = S.frobenius, S.multiplicity
    if args.format == "json":
        return _json({"frobenius": F, "multiplicity": m, "rank": len(X), "minimal_system": list(X)})
    return f"R({F},{m})-rank={len(X)} minimal system={_braces(X)}"


def cmd_mr_check(args):
    S = from_generators(_ints(args.generators))
    verdict = is_mr(S)
    rank = rfm_rank(S) if S.frobenius > S.multiplicity else None
    if args.format == "json":
        return _json({"mr": verdict, "rank": rank, "frobenius": S.frobenius, "multiplicity": S.multiplicity})
    return f"{render(S)}\nMR={'yes' if verdict else 'no'} rank={rank} m-2={S.multiplicity - 2}"


def cmd_generate(args):
    groups = [g for g in args.semigroups.split(";") if g.strip()]
    family = [from_generators(_ints(g)) for g in groups]
    tree = generated_covariety(family)
    if args.format == "dot":
        return tree.to_dot()
    if args.format == "json":
        return _json(tree.to_dict())
    lines = [f"{tree.name}: {len(tree)} semigroups"]
    for i, S in enumerate(tree.vertices):
        tail = "" if tree.parents[i] is None else f"  parent=#{tree.parents[i]} +{tree.labels[i]}"
        lines.append(f"#{i} g={S.genus} {render(S)}{tail}")
    return "\n".join(lines)


def cmd_verify(args):
    failed = 0
    lines = []
    for name, ok in run_checks(args.max_frobenius):
        failed += not ok
        lines.append(f"{'PASS' if ok else 'FAIL'} {name}")
    lines.append(f"{len(lines) - failed} passed, {failed} failed")
    _emit(args, "\n".join(lines))
    return 1 if failed else 0


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nsgp", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_, formats=("text", "json")):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=formats, default="text")
        sp.add_argument("--out", help="write output to this file instead of stdout")
        return sp

    def fm(sp, required=True):
        sp.add_argument("--frobenius", "-F", type=int, required=required)
        sp.add_argument("--multiplicity", "-m", type=int, required=required)

    sp = add("analyze", cmd_analyze, "invariants, PF, SG and classification of <generators>")
    sp.add_argument("--generators", "-g", required=True)

    sp = add("enumerate", cmd_enumerate, "enumerate R(F,m) or R(F,m,g)", ("text", "json", "dot"))
    fm(sp)
    sp.add_argument("--genus", type=int)
    sp.add_argument("--threads", type=int)
    sp.add_argument("--oracle", action="store_true", help="cross-check against the brute-force oracle")

    sp = add("genus-range", cmd_genus_range, "genera attained in R(F,m)")
    fm(sp)

    sp = add("max-elements", cmd_max_elements, "maximal elements of R(F,m)")
    fm(sp)

    sp = add("closure", cmd_closure, "smallest member of R(F,m) containing the elements")
    fm(sp)
    sp.add_argument("--elements", "-x", required=True)

    sp = add("rank", cmd_rank, "R(F,m)-rank and minimal R-system of a semigroup")
    sp.add_argument("--generators", "-g", required=True)
    fm(sp, required=False)

    sp = add("mr-check", cmd_mr_check, "maximal-rank test")
    sp.add_argument("--generators", "-g", required=True)

    sp = add("generate-covariety", cmd_generate, "ratio-covariety generated by semigroups", ("text", "json", "dot"))
    sp.add_argument("--semigroups", "-s", required=True, help='e.g. "5,7,9;5,6,8"')

    sp = add("verify", cmd_verify, "run the golden checks and the oracle sweep")
    sp.add_argument("--max-frobenius", type=int, default=18)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        result = args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, DescriptorError, NumericalSemigroupError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if isinstance(result, int):
        return result
    _emit(args, result)
    return 0


if __name__ == "__main__":
    sys.exit(main())
