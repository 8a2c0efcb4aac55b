"""Command-line entry point.

Exit codes: 0 for success or a holding verdict, 1 for a failing verdict,
2 for usage, validation or precondition errors.  Identical inputs and
flags produce byte-identical primary output.  The environment variable
ACTALAB_MAX_CELLS (default 10^8) caps the |S|^2 * |A| * |B| work estimate
of a command before it starts.
"""

from __future__ import annotations

import argparse
import os
import sys
from itertools import islice

from . import zoo
from .act import Act, enumerate_acts
from .axioms import (
    AXIOM_CLASS_IDS,
    emit_axioms,
    model_check,
    sentence_to_text,
    verify_axiomatisation,
)
from .conditions import (
    CONDITION_IDS,
    check_condition,
    check_flat_bounded,
    check_pwf,
    check_wf,
)
from .errors import ActalabError
from .monoid import FiniteMonoid
from .replacement import REPLACEMENT_CLASS_IDS, replacement_skeletons, verify_replacement
from .serialize import (
    act_from_dict,
    act_to_dict,
    axiom_set_to_dict,
    dump_json,
    load_json,
    monoid_from_dict,
    monoid_to_dict,
    sentences_from_dict,
    tossing_to_dict,
)
from .tensor import find_tossing, format_tossing, tensor_product

DEFAULT_MAX_CELLS = 10**8


class BudgetExceeded(ActalabError):
    pass


def _budget() -> int:
    raw = os.environ.get("ACTALAB_MAX_CELLS", "")
    try:
        return int(raw) if raw else DEFAULT_MAX_CELLS
    except ValueError:
        return DEFAULT_MAX_CELLS


def _guard(n_s: int, n_a: int, n_b: int):
    estimate = n_s * n_s * n_a * n_b
    cap = _budget()
    if estimate > cap:
        raise BudgetExceeded(
            f"work estimate |S|^2*|A|*|B| = {estimate} exceeds "
            f"ACTALAB_MAX_CELLS = {cap}"
        )


def _load_monoid(path: str) -> FiniteMonoid:
    return monoid_from_dict(load_json(path))


def _load_act(path: str, M: FiniteMonoid) -> Act:
    return act_from_dict(load_json(path), M)


def _emit(args, data: dict, text: str) -> None:
    if getattr(args, "json", False):
        print(dump_json(data))
    else:
        print(text)


def _cmd_monoid_validate(args) -> int:
    M = _load_monoid(args.file)
    _emit(args, {"monoid": M.name, "size": M.size, "valid": True},
          f"{M.name}: valid monoid with {M.size} elements")
    return 0


def _cmd_act_validate(args) -> int:
    M = _load_monoid(args.monoid)
    act = _load_act(args.file, M)
    _emit(args, {"monoid": M.name, "side": act.side, "size": act.size,
                 "valid": True},
          f"valid {act.side} act with {act.size} elements over {M.name}")
    return 0


def _cmd_tensor(args) -> int:
    M = _load_monoid(args.monoid)
    A = _load_act(args.right_act, M)
    B = _load_act(args.left_act, M)
    _guard(M.size, A.size, B.size)
    T = tensor_product(A, B)
    classes = [
        [[A.label(a), B.label(b)] for a, b in cls] for cls in T.classes
    ]
    text = [f"{T.n_classes} classes on {A.size}x{B.size} pairs"]
    for i, cls in enumerate(classes):
        text.append(f"  class {i}: " + " ".join(f"({a},{b})" for a, b in cls))
    _emit(args, {"n_classes": T.n_classes, "classes": classes}, "\n".join(text))
    return 0


def _parse_pair(raw: str, A: Act, B: Act) -> tuple[int, int]:
    parts = raw.split(",")
    if len(parts) != 2:
        raise ActalabError(f"pair {raw!r} must be 'aLabel,bLabel'")
    return A.index(parts[0]), B.index(parts[1])


def _cmd_tossing(args) -> int:
    M = _load_monoid(args.monoid)
    A = _load_act(args.right_act, M)
    B = _load_act(args.left_act, M)
    _guard(M.size, A.size, B.size)
    a, b = _parse_pair(args.src, A, B)
    a2, b2 = _parse_pair(args.dst, A, B)
    toss = find_tossing(A, B, a, b, a2, b2)
    if toss is None:
        _emit(args, {"connected": False},
              f"({args.src}) and ({args.dst}) are not tensor-equal")
        return 1
    data = {"connected": True, "tossing": tossing_to_dict(toss)}
    text = format_tossing(toss) + "\n" + dump_json(tossing_to_dict(toss))
    _emit(args, data, text)
    return 0


def _cmd_check(args) -> int:
    M = _load_monoid(args.monoid)
    B = _load_act(args.act, M)
    _guard(M.size, B.size, B.size)
    cond = args.condition.lower()
    if cond == "pwf":
        report = check_pwf(B)
    elif cond == "wf":
        report = check_wf(B)
    elif cond == "flat":
        report = check_flat_bounded(B, args.flat_bound)
    elif cond.upper() in CONDITION_IDS:
        report = check_condition(B, cond.upper(), want_witnesses=args.witnesses)
    else:
        raise ActalabError(f"unknown condition {args.condition!r}")
    text = f"{report.condition}: {report.verdict}"
    if report.witness:
        text += f"\n  witness: {report.witness}"
    _emit(args, report.to_dict(), text)
    return 0 if report.holds else 1


def _cmd_axioms_emit(args) -> int:
    M = _load_monoid(args.monoid)
    axset = emit_axioms(M, args.cls)
    data = axiom_set_to_dict(axset)
    if args.out:
        dump_json(data, args.out)
        print(f"wrote {len(axset.sentences)} sentences to {args.out}")
        return 0
    text = "\n".join(sentence_to_text(M, s) for s in axset.sentences)
    _emit(args, data, text)
    return 0


def _cmd_axioms_modelcheck(args) -> int:
    M = _load_monoid(args.monoid)
    B = _load_act(args.act, M)
    _guard(M.size, B.size, B.size)
    sentences = sentences_from_dict(load_json(args.sentences), M)
    failures = []
    for sent in sentences:
        ok, env = model_check(B, sent)
        if not ok:
            failures.append({"sentence": sent.name, "assignment": env})
    data = {"sentences": len(sentences), "satisfied": not failures,
            "failures": failures}
    if failures:
        text = "\n".join(
            f"fails {f['sentence']} at {f['assignment']}" for f in failures
        )
    else:
        text = f"all {len(sentences)} sentences hold"
    _emit(args, data, text)
    return 0 if not failures else 1


def _cmd_axioms_verify(args) -> int:
    M = _load_monoid(args.monoid)
    _guard(M.size, args.max_size, args.max_size)
    report = verify_axiomatisation(M, args.cls, args.max_size, threads=args.threads)
    text = (
        f"class {report.class_id} over {report.monoid}: "
        f"{report.acts_checked} acts checked, "
        + ("equivalence holds" if report.ok else
           f"{len(report.divergences)} divergences")
    )
    _emit(args, report.to_dict(), text)
    return 0 if report.ok else 1


def _cmd_replace_compute(args) -> int:
    M = _load_monoid(args.monoid)
    s = M.index(args.s)
    t = M.index(args.t) if args.t is not None else s
    rset = replacement_skeletons(M, s, t, args.cls)
    data = {
        "class": rset.class_id,
        "s": M.label(rset.s),
        "t": M.label(rset.t),
        "trigger": list(rset.trigger.labels(M)),
        "skeletons": [list(sk.labels(M)) for sk in rset.skeletons],
    }
    text = [f"trigger {data['trigger']}"]
    text += [f"  replacement {sk}" for sk in data["skeletons"]]
    if not rset.skeletons:
        text.append("  (empty replacement set: underlying structure is empty)")
    _emit(args, data, "\n".join(text))
    return 0


def _cmd_replace_verify(args) -> int:
    M = _load_monoid(args.monoid)
    B = _load_act(args.act, M)
    _guard(M.size, B.size, B.size)
    cid = args.cls.upper()
    if args.s is not None:
        s = M.index(args.s)
        t = M.index(args.t) if args.t is not None else s
        pairs = [(s, t)]
    elif cid == "PWP":
        pairs = [(t, t) for t in M.elements()]
    else:
        pairs = [(s, t) for s in M.elements() for t in M.elements()]
    reports = [verify_replacement(B, s, t, cid) for s, t in pairs]
    lines = [
        f"({rep.s},{rep.t}): {rep.status}, {len(rep.instances)} instances"
        for rep in reports
    ]
    data = {"class": cid, "reports": [rep.to_dict() for rep in reports]}
    _emit(args, data, "\n".join(lines))
    if any(rep.status == "violation" for rep in reports):
        return 1
    if all(rep.status == "inapplicable" for rep in reports):
        return 2  # the act is outside the class: precondition failure
    return 0


def _cmd_zoo_build(args) -> int:
    params = {}
    if args.family == "semilattice_of_groups":
        params["n1"] = args.g1
        params["n0"] = args.g0
    else:
        if args.n is None:
            raise ActalabError("--n is required for this family")
        params["n"] = args.n
    M = zoo.build(args.family, **params)
    data = monoid_to_dict(M)
    if args.out:
        dump_json(data, args.out)
        print(f"wrote {M.name} ({M.size} elements) to {args.out}")
    else:
        print(dump_json(data))
    return 0


def _cmd_zoo_report(args) -> int:
    lo, _, hi = args.range.partition("..")
    try:
        values = list(range(int(lo), int(hi) + 1))
    except ValueError:
        raise ActalabError(f"--range must look like '2..4', got {args.range!r}")
    report = zoo.family_report(args.family, values)
    lines = [f"{report.family} over n = {values}"]
    for row in report.rows:
        c = row["generator_counts"]
        lines.append(
            f"  n={row['param']}: pair={tuple(row['pair'])} "
            f"|gen R|={c['R']} |gen r|={c['r']} |gen cap|={c['cap']}"
        )
    lines.append(f"  monotonicity: {report.monotonicity}")
    _emit(args, report.to_dict(), "\n".join(lines))
    return 0


def _cmd_zoo_families(args) -> int:
    data = {"families": list(zoo.FAMILIES), "excluded": zoo.EXCLUSIONS}
    lines = ["families:"] + [f"  {f}" for f in zoo.FAMILIES]
    lines.append("excluded:")
    for name, why in zoo.EXCLUSIONS.items():
        lines.append(f"  {name}: {why}")
    _emit(args, data, "\n".join(lines))
    return 0


def _cmd_enumerate(args) -> int:
    import json as _json

    M = _load_monoid(args.monoid)
    _guard(M.size, args.max_size, args.max_size)
    count = 0
    stream = enumerate_acts(M, args.side, args.max_size, distinct=args.distinct)
    if args.limit is not None:
        stream = islice(stream, args.limit)
    for act in stream:
        data = act_to_dict(act)
        print(dump_json(data) if args.json else _json.dumps(data))
        count += 1
    print(f"# {count} acts", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="actalab",
        description="finite monoids, acts, tensor products and their conditions",
    )
    sub = p.add_subparsers(dest="verb", required=True)

    def add_json(sp):
        sp.add_argument("--json", action="store_true", help="machine output")

    sp = sub.add_parser("monoid", help="validate a monoid file")
    msub = sp.add_subparsers(dest="action", required=True)
    v = msub.add_parser("validate")
    v.add_argument("file")
    add_json(v)
    v.set_defaults(func=_cmd_monoid_validate)

    sp = sub.add_parser("act", help="validate an act file")
    asub = sp.add_subparsers(dest="action", required=True)
    v = asub.add_parser("validate")
    v.add_argument("file")
    v.add_argument("--monoid", required=True)
    add_json(v)
    v.set_defaults(func=_cmd_act_validate)

    v = sub.add_parser("tensor", help="compute a tensor product")
    v.add_argument("--monoid", required=True)
    v.add_argument("--right-act", required=True)
    v.add_argument("--left-act", required=True)
    add_json(v)
    v.set_defaults(func=_cmd_tensor)

    v = sub.add_parser("tossing", help="connect two pairs by a tossing")
    v.add_argument("--monoid", required=True)
    v.add_argument("--right-act", required=True)
    v.add_argument("--left-act", required=True)
    v.add_argument("--from", dest="src", required=True, metavar="A,B")
    v.add_argument("--to", dest="dst", required=True, metavar="A,B")
    add_json(v)
    v.set_defaults(func=_cmd_tossing)

    v = sub.add_parser("check", help="decide a condition on an act")
    v.add_argument("--condition", required=True,
                   choices=[c.lower() for c in CONDITION_IDS] + ["pwf", "wf", "flat"])
    v.add_argument("--act", required=True)
    v.add_argument("--monoid", required=True)
    v.add_argument("--flat-bound", type=int, default=2)
    v.add_argument("--witnesses", action="store_true")
    add_json(v)
    v.set_defaults(func=_cmd_check)

    sp = sub.add_parser("axioms", help="emit, model-check or verify sentence sets")
    axsub = sp.add_subparsers(dest="action", required=True)
    v = axsub.add_parser("emit")
    v.add_argument("--class", dest="cls", required=True,
                   choices=[c.lower() for c in AXIOM_CLASS_IDS])
    v.add_argument("--monoid", required=True)
    v.add_argument("-o", "--out")
    add_json(v)
    v.set_defaults(func=_cmd_axioms_emit)
    v = axsub.add_parser("modelcheck")
    v.add_argument("--act", required=True)
    v.add_argument("--monoid", required=True)
    v.add_argument("--sentences", required=True)
    add_json(v)
    v.set_defaults(func=_cmd_axioms_modelcheck)
    v = axsub.add_parser("verify")
    v.add_argument("--class", dest="cls", required=True,
                   choices=[c.lower() for c in AXIOM_CLASS_IDS])
    v.add_argument("--monoid", required=True)
    v.add_argument("--max-size", type=int, required=True)
    v.add_argument("--threads", type=int, default=1,
                   help="parallel sweep width; results are order-stable")
    add_json(v)
    v.set_defaults(func=_cmd_axioms_verify)

    sp = sub.add_parser("replace", help="replacement skeleton sets")
    rsub = sp.add_subparsers(dest="action", required=True)
    v = rsub.add_parser("compute")
    v.add_argument("--class", dest="cls", required=True,
                   choices=[c.lower() for c in REPLACEMENT_CLASS_IDS])
    v.add_argument("--monoid", required=True)
    v.add_argument("--s", required=True)
    v.add_argument("--t")
    add_json(v)
    v.set_defaults(func=_cmd_replace_compute)
    v = rsub.add_parser("verify")
    v.add_argument("--class", dest="cls", required=True,
                   choices=[c.lower() for c in REPLACEMENT_CLASS_IDS])
    v.add_argument("--monoid", required=True)
    v.add_argument("--act", required=True)
    v.add_argument("--s")
    v.add_argument("--t")
    add_json(v)
    v.set_defaults(func=_cmd_replace_verify)

    sp = sub.add_parser("zoo", help="build example monoids and growth reports")
    zsub = sp.add_subparsers(dest="action", required=True)
    v = zsub.add_parser("build")
    v.add_argument("--family", required=True, choices=zoo.FAMILIES)
    v.add_argument("--n", type=int)
    v.add_argument("--g1", type=int, default=2)
    v.add_argument("--g0", type=int, default=2)
    v.add_argument("-o", "--out")
    v.set_defaults(func=_cmd_zoo_build)
    v = zsub.add_parser("report")
    v.add_argument("--family", required=True, choices=zoo.FAMILIES)
    v.add_argument("--range", required=True, metavar="LO..HI")
    add_json(v)
    v.set_defaults(func=_cmd_zoo_report)
    v = zsub.add_parser("families")
    add_json(v)
    v.set_defaults(func=_cmd_zoo_families)

    v = sub.add_parser("enumerate", help="stream every act up to a size")
    v.add_argument("--monoid", required=True)
    v.add_argument("--side", required=True, choices=["left", "right"])
    v.add_argument("--max-size", type=int, required=True)
    v.add_argument("--distinct", action="store_true",
                   help="emit one act per isomorphism class")
    v.add_argument("--limit", type=int)
    add_json(v)
    v.set_defaults(func=_cmd_enumerate)
    return p


def run_command(argv) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except ActalabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run_command(sys.argv[1:]))


if __name__ == "__main__":
    main()
