"""Classification of two-row partitions mod p and brute-force H^1 dimension.

classify() sorts (a, b) into three kinds by digit arithmetic alone. The
brute-force route computes the same answer from nothing but ranks of
inclusion matrices: the space of elements with every level constant,
modulo the kernel of all levels and the span of the all-ones element.
check_main_theorem() sweeps a range and reports any disagreement between
the two.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass

from .designs import constant_level_system
from .linalg import MatFp, rank_fp_prefix
from .numtheory import (
    all_binoms_divisible,
    p_adic_length,
    p_adic_val,
    require_odd_prime,
)
from .tabloid import Partition2, f_lambda, james_check, specht_membership

__all__ = [
    "Classification",
    "H1Report",
    "classify",
    "predicted_h1",
    "brute_force_h1",
    "check_main_theorem",
    "survey",
    "survey_csv",
]


@dataclass(frozen=True, slots=True)
class Classification:
    """Kind of (a, b) mod p: "james", "pointed", or "neither".

    For the pointed kind, beta is the leading digit position of b and
    bhat = b - p^beta is the index of the isolated level.
    """

    a: int
    b: int
    p: int
    kind: str
    beta: int | None = None
    bhat: int | None = None

    def to_json(self) -> dict:
        out: dict = {"a": self.a, "b": self.b, "p": self.p, "kind": self.kind}
        if self.kind == "pointed":
            out["beta"] = self.beta
            out["bhat"] = self.bhat
        return out


def classify(a: int, b: int, p: int) -> Classification:
    """Classify the partition (a, b) mod p.

    james: every C(a+j, j) for 1 <= j <= b vanishes mod p.
    pointed: not james, and with beta the leading digit position of b,
    bhat = b - p^beta and nu = nu_p(a+1): the leading digit of b is 1,
    bhat < p^nu, and nu < beta.
    neither: everything else.
    """
    Partition2(a, b)
    require_odd_prime(p)
    if all_binoms_divisible(a, b, p):
        return Classification(a, b, p, "james")
    beta = p_adic_length(b, p)
    bhat = b - p**beta
    nu = p_adic_val(a + 1, p)
    if bhat < p**beta and bhat < p**nu and nu < beta:
        return Classification(a, b, p, "pointed", beta=beta, bhat=bhat)
    return Classification(a, b, p, "neither")


def predicted_h1(a: int, b: int, p: int) -> int:
    """Predicted dimension of the quotient: 1 for james and pointed, else 0."""
    return 0 if classify(a, b, p).kind == "neither" else 1


@dataclass(frozen=True, slots=True)
class H1Report:
    """Brute-force result next to the digit-arithmetic prediction."""

    a: int
    b: int
    p: int
    kind: str
    dim_S: int
    dim_D: int
    f_in_S: bool
    quotient: int
    predicted: int

    @property
    def match(self) -> bool:
        return self.quotient == self.predicted

    def to_json(self) -> dict:
        return {
            "a": self.a,
            "b": self.b,
            "p": self.p,
            "kind": self.kind,
            "dim_S": self.dim_S,
            "dim_D": self.dim_D,
            "f_in_S": self.f_in_S,
            "quotient": self.quotient,
            "predicted": self.predicted,
            "match": self.match,
        }


def brute_force_h1(a: int, b: int, p: int, budget: int = 4000) -> H1Report:
    """Compute the quotient dimension by rank alone.

    D = {u : psi_v(u) constant for v = 0..b-1} contains both the kernel
    of all levels (dim_S) and the all-ones element f. The quotient is
    dim D - dim_S minus one more when f itself is outside the kernel.
    Both ranks come from a single elimination of the augmented system:
    the first C(n, b) columns alone give the kernel rank.

    budget caps C(n, b); larger instances raise before allocating.
    """
    Partition2(a, b)
    require_odd_prime(p)
    n = a + b
    ncols = math.comb(n, b)
    if ncols > budget:
        raise ValueError(
            f"C({n}, {b}) = {ncols} exceeds the budget of {budget} columns"
        )
    aug = constant_level_system(n, b, range(b))
    total, prefix = rank_fp_prefix(MatFp(aug, p), ncols)
    dim_D = aug.shape[1] - total
    dim_S = ncols - prefix
    f_in_S = specht_membership(f_lambda(a, b, p))
    if f_in_S != james_check((a, b), p):
        raise AssertionError("membership of the all-ones element disagrees "
                             "with the digit criterion")
    quotient = dim_D - dim_S - (0 if f_in_S else 1)
    cls = classify(a, b, p)
    return H1Report(
        a, b, p, cls.kind, dim_S, dim_D, f_in_S, quotient, predicted_h1(a, b, p)
    )


def survey(n_max: int, primes, budget: int = 4000) -> list[H1Report]:
    """Brute-force reports for every (a, b) with a + b <= n_max, each prime."""
    out = []
    for p in primes:
        for n in range(2, n_max + 1):
            for b in range(1, n // 2 + 1):
                out.append(brute_force_h1(n - b, b, p, budget=budget))
    return out


def check_main_theorem(n_max: int, primes, budget: int = 4000) -> list[H1Report]:
    """Reports where brute force contradicts the classification.

    A report is a discrepancy when the quotient misses the prediction or
    when dim_D - dim_S is not 2 for pointed and 1 otherwise. Empty list
    means full agreement over the range.
    """
    bad = []
    for r in survey(n_max, primes, budget=budget):
        gap = 2 if r.kind == "pointed" else 1
        if not r.match or r.dim_D - r.dim_S != gap:
            bad.append(r)
    return bad


def survey_csv(reports) -> str:
    """Render reports as CSV with a fixed header."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(
        ["a", "b", "p", "kind", "beta", "bhat", "dim_S", "dim_D",
         "f_in_S", "quotient", "predicted", "match"]
    )
    for r in reports:
        c = classify(r.a, r.b, r.p)
        w.writerow(
            [r.a, r.b, r.p, r.kind,
             "" if c.beta is None else c.beta,
             "" if c.bhat is None else c.bhat,
             r.dim_S, r.dim_D, r.f_in_S, r.quotient, r.predicted, r.match]
        )
    return buf.getvalue()
