"""Random anticommutative algebras filtered through the Malcev identity.

Random dense constants almost never satisfy the Malcev identity, so the
sampler draws sparse tensors: most pairs bracket to zero, the rest to a single
basis vector (occasionally two).  Half of the trials additionally let the
first basis vector act diagonally, which is where small solvable non-Lie
examples live.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .algebra import Algebra, validate
from .catalog import from_document, to_document
from .ideals import (
    IdealHandle,
    decompose,
    ideal_product,
    is_ideal,
    product_counterexample_search,
)
from .linalg import rref_span, subspace_intersect

TARGETS = ("non-lie-malcev", "ideal-product-failure", "non-direct-decomposition")


@dataclass(frozen=True)
class FuzzConfig:
    dim: int
    trials: int
    seed: int = 0
    target: str = "non-lie-malcev"
    coefficient_bound: int = 2
    zero_probability: float = 0.6

    def __post_init__(self):
        if self.target not in TARGETS:
            raise ValueError(f"unknown target {self.target!r}; choose from {', '.join(TARGETS)}")
        if self.coefficient_bound < 1:
            raise ValueError("coefficient_bound must be positive")


@dataclass(frozen=True)
class Finding:
    trial: int
    target: str
    document: dict
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {"trial": self.trial, "target": self.target,
                "document": self.document, "witness": self.witness}

    @classmethod
    def from_dict(cls, d: dict) -> "Finding":
        return cls(d["trial"], d["target"], d["document"], d.get("witness", {}))


def _coefficient(rng: random.Random, bound: int) -> Fraction:
    num = 0
    while num == 0:
        num = rng.randint(-bound, bound)
    return Fraction(num, rng.randint(1, bound))


def random_algebra(rng: random.Random, dim: int, bound: int = 2,
                   zero_probability: float = 0.6, name: str = "fuzz") -> Algebra:
    brackets = {}
    diagonal = dim > 1 and rng.random() < 0.5
    for i in range(dim):
        for j in range(i + 1, dim):
            v = [Fraction(0)] * dim
            if diagonal and i == 0:
                if rng.random() >= 0.3:
                    v[j] = _coefficient(rng, bound)
            elif rng.random() >= zero_probability:
                for _ in range(1 if rng.random() < 0.8 else 2):
                    v[rng.randrange(dim)] = _coefficient(rng, bound)
            brackets[(i, j)] = v
    return Algebra.from_brackets(name, [f"e{k + 1}" for k in range(dim)], brackets)


def _witness(a: Algebra, target: str):
    """Witness data for ``target``, or None when the algebra is not an instance."""
    report = validate(a)
    if not report.is_malcev:
        return None
    if target == "non-lie-malcev":
        if report.is_lie:
            return None
        w = report.witnesses_for("jacobi")[0]
        return {"jacobi_indices": list(w.indices), "residual": [str(x) for x in w.residual]}
    if target == "ideal-product-failure":
        pair = product_counterexample_search(a, a.dim)
        if pair is None:
            return None
        p, q = pair
        return {"p": [[str(x) for x in v] for v in p.space.basis],
                "q": [[str(x) for x in v] for v in q.space.basis],
                "product_dim": ideal_product(p, q).dim}
    if target == "non-direct-decomposition":
        ctx = decompose(a)
        if ctx.direct:
            return None
        return {"dim_N": ctx.N.dim, "dim_J": ctx.J.dim,
                "dim_N_cap_J": subspace_intersect(ctx.N, ctx.J).dim}
    raise ValueError(f"unknown target {target!r}")


def fuzz(config: FuzzConfig) -> list:
    """Findings in trial order; identical configs give identical lists."""
    rng = random.Random(config.seed)
    findings = []
    for trial in range(config.trials):
        a = random_algebra(rng, config.dim, config.coefficient_bound, config.zero_probability,
                           name=f"fuzz_d{config.dim}_s{config.seed}_t{trial}")
        w = _witness(a, config.target)
        if w is not None:
            findings.append(Finding(trial, config.target, to_document(a), w))
    return findings


def verify_finding(finding: Finding) -> bool:
    """Re-derive the claimed refutation from the stored document alone."""
    a = from_document(finding.document)
    if finding.target == "ideal-product-failure":
        # the stored pair itself must multiply to a non-ideal
        p = rref_span([[Fraction(x) for x in v] for v in finding.witness["p"]], a.dim)
        q = rref_span([[Fraction(x) for x in v] for v in finding.witness["q"]], a.dim)
        if not (validate(a).is_malcev and is_ideal(a, p) and is_ideal(a, q)):
            return False
        return not is_ideal(a, ideal_product(IdealHandle(a, p, False), IdealHandle(a, q, False)))
    return _witness(a, finding.target) is not None


def write_findings(findings: list, directory) -> list:
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    paths = []
    for f in findings:
        path = out / f"{f.document['name']}.json"
        path.write_text(json.dumps(f.as_dict(), indent=2) + "\n", encoding="utf-8")
        paths.append(path)
    return paths


def read_finding(path) -> Finding:
    return Finding.from_dict(json.loads(Path(path).read_text(encoding="utf-8")))


def committed_findings() -> list:
    """Findings shipped with the package, sorted by file name."""
    root = resources.files("malcev") / "data" / "findings"
    return [Finding.from_dict(json.loads(entry.read_text(encoding="utf-8")))
            for entry in sorted(root.iterdir(), key=lambda e: e.name)
            if entry.name.endswith(".json")]
