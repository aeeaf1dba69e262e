"""Instance loading and the full law-checking suite."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from . import algebra, riesz, wspace
from .algebra import LawReport, Model, PolytopeModel, SemilatticeInstance
from .numeric import DomainError, format_vector, neg, zero
from .polytope import Polytope, contains_point, translate
from .sampling import Sampler


def instance_from_json(data: dict) -> SemilatticeInstance:
    if not isinstance(data, dict) or "vertices" not in data:
        raise DomainError("instance needs a 'vertices' list")
    if not data["vertices"]:
        raise DomainError("empty vertex list")
    carrier = Polytope.from_json(data)
    join_kind = data.get("join_kind", "componentwise_max")
    shift = None
    if data.get("translate_to_zero", True) and not contains_point(carrier, zero(carrier.dim)):
        shift = neg(carrier.vertices[0])
        carrier = translate(carrier, shift)
    return SemilatticeInstance(carrier, join_kind, translation=shift)


def load_instance(path) -> SemilatticeInstance:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DomainError(f"{path}: not valid JSON ({exc})") from None
    return instance_from_json(data)


MODEL_LAWS = ["convex", "semilattice", "distributivity", "cancellativity", "order-cancellation"]
W_LAWS = ["w-oracle", "w-well-defined", "w-closure", "w-restriction", "w-axioms"]
ALL_LAWS = MODEL_LAWS + ["homomorphism", "sup-closure", "perspective"] + W_LAWS + [
    "riesz", "embedding", "polytope-model",
]
LAW_GROUPS = {"all": ALL_LAWS, "model": MODEL_LAWS, "w-construction": W_LAWS}


def expand_laws(selectors: Sequence[str]) -> List[str]:
    chosen = []
    for sel in selectors:
        names = LAW_GROUPS.get(sel, [sel])
        for n in names:
            if n not in ALL_LAWS:
                raise DomainError(f"unknown law {n!r}; choose from {', '.join(ALL_LAWS + list(LAW_GROUPS))}")
            if n not in chosen:
                chosen.append(n)
    # keep a canonical order so bundles do not depend on flag order
    return [n for n in ALL_LAWS if n in chosen]


@dataclass
class SuiteConfig:
    seed: int = 0
    cases_per_law: int = 500
    laws: List[str] = field(default_factory=lambda: list(ALL_LAWS))
    denominator_bound: int = 64

    def __post_init__(self):
        if self.cases_per_law < 1:
            raise DomainError("cases_per_law must be >= 1")
        if self.denominator_bound < 2:
            raise DomainError("denominator_bound must be >= 2")
        self.laws = expand_laws(self.laws)

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cases_per_law": self.cases_per_law,
            "laws": self.laws,
            "denominator_bound": self.denominator_bound,
        }


def _runners(inst: SemilatticeInstance, model: Model, n: int) -> Dict[str, Callable[[Sampler], List[LawReport]]]:
    return {
        "convex": lambda s: [algebra.check_convex_axioms(model, s, n)],
        "semilattice": lambda s: [algebra.check_semilattice_axioms(model, s, n)],
        "distributivity": lambda s: [algebra.check_distributivity(model, s, n)],
        "cancellativity": lambda s: [algebra.check_cancellativity(model, s, n)],
        "order-cancellation": lambda s: [algebra.check_order_cancellation(model, s, n)],
        "homomorphism": lambda s: [algebra.check_perspective_homomorphism(model, s, n)],
        "sup-closure": lambda s: [algebra.check_sup_closure(inst, s, n)],
        "perspective": lambda s: [algebra.check_perspective_lemmas(inst.dim, s, n)],
        "w-oracle": lambda s: (
            [wspace.check_w_oracle(inst, s, n)] if inst.join_kind == "componentwise_max" else []
        ),
        "w-well-defined": lambda s: [wspace.check_w_well_defined(inst, s, n)],
        "w-closure": lambda s: [wspace.check_w_closure(inst, s, n)],
        "w-restriction": lambda s: [wspace.check_w_restriction(inst, s, n)],
        "w-axioms": lambda s: [wspace.verify_w_axioms(inst, s, n)],
        "riesz": lambda s: [riesz.check_riesz_laws(d, s, n) for d in (2, 3, 4)],
        "embedding": lambda s: [
            riesz.check_embedding_homomorphism(Sampler(s.seed, min(s.denominator_bound, 16)), n)
        ],
        "polytope-model": lambda s: [
            _renamed(chk(PolytopeModel(inst.dim), s, n), "polytope_model.")
            for chk in algebra.MODEL_CHECKERS.values()
        ],
    }


def _renamed(rep: LawReport, prefix: str) -> LawReport:
    rep.law = prefix + rep.law
    return rep


def run_suite(
    inst: SemilatticeInstance,
    config: SuiteConfig,
    model: Optional[Model] = None,
    log: Optional[Callable[[str], None]] = None,
) -> Tuple[int, dict]:
    """Run the selected laws; returns ``(exit_status, bundle)``.

    ``model`` overrides the object the model-level checkers see, which is
    how mutated operations are injected.
    """
    model = model or inst
    sampler = Sampler(config.seed, config.denominator_bound)
    runners = _runners(inst, model, config.cases_per_law)
    reports: List[LawReport] = []
    for law in config.laws:
        for rep in runners[law](sampler):
            reports.append(rep)
            if log:
                log(rep.line())
    passed = all(r.passed for r in reports)
    bundle = {
        "summary": {
            "instance": inst.carrier.to_json(),
            "join_kind": inst.join_kind,
            "translation": None if inst.translation is None else format_vector(inst.translation),
            "config": config.to_json(),
            "passed": passed,
            "results": [
                {"law": r.law, "status": r.status, "cases": r.cases,
                 "violations": len(r.violations) + r._dropped}
                for r in reports
            ],
        },
        "reports": {r.law: r.to_json() for r in reports},
    }
    return (0 if passed else 1), bundle


def write_bundle(bundle: dict, out_dir) -> List[str]:
    os.makedirs(out_dir, exist_ok=True)
    written = []
    for law, rep in bundle["reports"].items():
        fname = "".join(c if c.isalnum() or c in "._-" else "_" for c in law) + ".json"
        path = os.path.join(out_dir, fname)
        with open(path, "w") as fh:
            json.dump(rep, fh, indent=2, sort_keys=True)
            fh.write("\n")
        written.append(path)
    path = os.path.join(out_dir, "summary.json")
    with open(path, "w") as fh:
        json.dump(bundle["summary"], fh, indent=2, sort_keys=True)
        fh.write("\n")
    written.append(path)
    return written
