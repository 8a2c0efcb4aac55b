"""JSON interchange for monoids, acts, skeletons, sentences and tossings.

Formats:

  monoid   {"name": str, "elements": [str], "identity": str,
            "table": [[str]]}                  with table[i][j] = label of ei*ej
  act      {"monoid": str, "side": "left"|"right", "elements": [str],
            "action": {s_label: [carrier labels in carrier order]}}
  skeleton {"skeleton": [labels]}

Loading always revalidates, so a round-trip reproduces an equal value or
raises the same diagnostics as direct construction.
"""

from __future__ import annotations

import json
from pathlib import Path

from .act import Act, validate_act
from .axioms import AxiomSet, Equation, Sentence, Term, sentence_to_text
from .errors import MonoidMismatchError, ValidationError
from .monoid import FiniteMonoid, validate_monoid
from .tensor import Skeleton, Tossing
from .zoo import FamilyReport


def monoid_to_dict(M: FiniteMonoid) -> dict:
    names = M.element_names
    return {
        "name": M.name,
        "elements": list(names),
        "identity": names[M.identity],
        "table": [[names[v] for v in row] for row in M.mul],
    }


def monoid_from_dict(data: dict) -> FiniteMonoid:
    for key in ("name", "elements", "identity", "table"):
        if key not in data:
            raise ValidationError(f"monoid JSON missing key {key!r}")
    return validate_monoid(
        data["elements"], data["table"], data["identity"], name=data["name"]
    )


def act_to_dict(act: Act) -> dict:
    names = act.carrier_names
    return {
        "monoid": act.monoid.name,
        "side": act.side,
        "elements": list(names),
        "action": {
            act.monoid.element_names[s]: [names[v] for v in act.table[s]]
            for s in act.monoid.elements()
        },
    }


def act_from_dict(data: dict, M: FiniteMonoid) -> Act:
    for key in ("monoid", "side", "elements", "action"):
        if key not in data:
            raise ValidationError(f"act JSON missing key {key!r}")
    if data["monoid"] != M.name:
        raise MonoidMismatchError(
            f"act references monoid {data['monoid']!r}, loaded {M.name!r}"
        )
    carrier = list(data["elements"])
    pos = {label: i for i, label in enumerate(carrier)}
    action = data["action"]
    table = []
    for s_label in M.element_names:
        if s_label not in action:
            raise ValidationError(f"action row for {s_label!r} missing")
        row = action[s_label]
        if len(row) != len(carrier):
            raise ValidationError(f"action row for {s_label!r} has wrong length")
        try:
            table.append([pos[v] for v in row])
        except KeyError as exc:
            raise ValidationError(f"action value {exc.args[0]!r} not in carrier")
    return validate_act(M, data["side"], carrier, table)


def skeleton_to_dict(sk: Skeleton, M: FiniteMonoid) -> dict:
    return {"skeleton": list(sk.labels(M))}


def skeleton_from_dict(data: dict, M: FiniteMonoid) -> Skeleton:
    if "skeleton" not in data:
        raise ValidationError("skeleton JSON missing key 'skeleton'")
    return Skeleton(tuple(M.index(label) for label in data["skeleton"]))


def _term_to_dict(M: FiniteMonoid, term: Term) -> dict:
    return {"word": [M.element_names[s] for s in term.word], "var": term.var}


def _term_from_dict(M: FiniteMonoid, data: dict) -> Term:
    return Term(tuple(M.index(label) for label in data["word"]), data["var"])


def _eq_to_dict(M, eq: Equation) -> dict:
    return {"lhs": _term_to_dict(M, eq.lhs), "rhs": _term_to_dict(M, eq.rhs)}


def _eq_from_dict(M, data: dict) -> Equation:
    return Equation(_term_from_dict(M, data["lhs"]), _term_from_dict(M, data["rhs"]))


def sentence_to_dict(M: FiniteMonoid, sentence: Sentence) -> dict:
    out = {
        "name": sentence.name,
        "forall": list(sentence.forall),
        "kind": sentence.kind,
        "text": sentence_to_text(M, sentence),
    }
    if sentence.kind in ("equation", "inequation"):
        out["equation"] = _eq_to_dict(M, sentence.equation)
    else:
        out["antecedent"] = [_eq_to_dict(M, eq) for eq in sentence.antecedent]
        out["exists"] = list(sentence.exists)
        out["consequent"] = [
            [_eq_to_dict(M, eq) for eq in conj] for conj in sentence.consequent
        ]
    return out


def sentence_from_dict(M: FiniteMonoid, data: dict) -> Sentence:
    kind = data["kind"]
    if kind in ("equation", "inequation"):
        return Sentence(
            data["name"], tuple(data["forall"]), kind,
            _eq_from_dict(M, data["equation"]),
        )
    return Sentence(
        data["name"],
        tuple(data["forall"]),
        kind,
        antecedent=tuple(_eq_from_dict(M, eq) for eq in data["antecedent"]),
        exists=tuple(data["exists"]),
        consequent=tuple(
            tuple(_eq_from_dict(M, eq) for eq in conj) for conj in data["consequent"]
        ),
    )


def axiom_set_to_dict(axset: AxiomSet) -> dict:
    M = axset.monoid
    return {
        "class": axset.class_id,
        "monoid": M.name,
        "sentences": [sentence_to_dict(M, s) for s in axset.sentences],
        "provenance": axset.provenance,
    }


def sentences_from_dict(data: dict, M: FiniteMonoid) -> tuple[Sentence, ...]:
    if data.get("monoid") != M.name:
        raise MonoidMismatchError(
            f"sentences reference monoid {data.get('monoid')!r}, loaded {M.name!r}"
        )
    return tuple(sentence_from_dict(M, s) for s in data["sentences"])


def tossing_to_dict(t: Tossing) -> dict:
    A, B = t.right_act, t.left_act
    M = A.monoid
    return {
        "skeleton": list(t.skeleton.labels(M)),
        "from": [A.label(t.start[0]), B.label(t.start[1])],
        "to": [A.label(t.end[0]), B.label(t.end[1])],
        "a_witnesses": [A.label(a) for a in t.a_witnesses],
        "b_witnesses": [B.label(b) for b in t.b_witnesses],
    }


def family_report_to_dict(report: FamilyReport) -> dict:
    return report.to_dict()


def load_json(path: str | Path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            return json.load(fh)
        except json.JSONDecodeError as exc:
            raise ValidationError(
                f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}"
            ) from exc


def dump_json(data: dict, path: str | Path | None = None) -> str:
    text = json.dumps(data, indent=2, ensure_ascii=False)
    if path is not None:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    return text
