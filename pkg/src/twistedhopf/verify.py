"""The verification program behind ``twistedhopf verify``.

Each check yields a :class:`~twistedhopf.report.LawReport`; the program
collects them into one JSON report.  Apart from the ``timing`` fields the
report is a deterministic function of the profile and seed.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import permutations
from math import factorial
from typing import Callable

from . import __version__, perm
from .exact import row_space_rank
from .freealg import IDENTITY_MODULE, FiniteSModule, free_primitive_dimensions, plethysm_dimension
from .hopf import check_hopf_laws, is_primitive, primitive_space
from .operads import applicable_laws, check_operad_laws, compose_partial, get_operad, lie_dynkin_expand
from .operads.base import Operad
from .report import LawReport
from .smod import SElement

PROFILES = ("quick", "full")


@dataclass(frozen=True)
class Bounds:
    operad_laws: int  # As, Com, Mag3
    pois_laws: int
    coalgebra_as: int
    coalgebra_other: int
    prim_as: int
    pois_count: int
    prim_pois: int
    closure_as: int
    closure_other: int
    free_n: int
    free_identity_n: int


BOUNDS = {
    "quick": Bounds(4, 4, 4, 4, 5, 6, 4, 4, 4, 3, 5),
    "full": Bounds(6, 4, 5, 4, 6, 7, 5, 5, 4, 4, 6),
}

Registry = Callable[[str], Operad]


def _fixtures() -> LawReport:
    r = LawReport("perm", "fixtures", (0, 8))
    cases = [
        ("standardize", perm.standardize((3, 2, 1, 8, 7, 5, 4)), (3, 2, 1, 7, 6, 5, 4)),
        ("restrict", perm.restrict((3, 2, 6, 1, 8, 7, 5, 4), (1, 4, 6, 7)), (2, 1, 4, 3)),
        ("partial_compose", perm.partial_compose((3, 4, 2, 5, 1), 2, (1, 2, 3)), (3, 4, 5, 6, 2, 7, 1)),
        ("block_permutation", perm.block_permutation((2, 3, 1), (1, 2, 2)), (3, 4, 5, 1, 2)),
    ]
    for name, got, want in cases:
        r.record(got == want, {"fixture": name}, perm.format_perm(got), perm.format_perm(want))
    return r


def _convention(As: Operad) -> LawReport:
    """Startup self-check: the product convention must satisfy both the fixtures and equivariance."""
    r = LawReport(As.name, "product_convention", (1, 3))
    fixtures = _fixtures()
    equivariance = check_operad_laws(As, "equivariance", 3)
    for rep in (fixtures, equivariance):
        r.record(rep.passed, {"check": rep.law}, rep.status, "pass")
        r.counterexamples.extend(rep.counterexamples[: 5 - len(r.counterexamples)])
    return r


def _span_check(r: LawReport, inputs, prims: list[SElement], reference: list[SElement], expected: int) -> None:
    """Record whether two families span the same space of the expected dimension."""
    a = row_space_rank([p.terms for p in prims])
    b = row_space_rank([q.terms for q in reference])
    both = row_space_rank([p.terms for p in prims] + [q.terms for q in reference])
    r.record(a == b == both == expected, inputs, f"ranks {a}, {b}, union {both}", f"all {expected}")


def _prim_as(As: Operad, n_max: int) -> LawReport:
    r = LawReport(As.name, "primitive_dimension_and_dynkin_span", (1, n_max))
    for n in range(1, n_max + 1):
        prims = primitive_space(As, n).basis
        r.record(len(prims) == factorial(n - 1), {"n": n}, len(prims), factorial(n - 1))
        dynkin = [lie_dynkin_expand(As, (1,) + rest) for rest in _anchors(n)]
        _span_check(r, {"n": n, "span": "dynkin"}, prims, dynkin, factorial(n - 1))
    return r


def _anchors(n: int):
    return permutations(range(2, n + 1))


def _pois_structure(P: Operad, count_max: int, prim_max: int) -> LawReport:
    r = LawReport(P.name, "poisson_structure", (1, count_max))
    for n in range(1, count_max + 1):
        r.record(len(P.basis(n)) == factorial(n), {"n": n, "check": "basis_count"}, len(P.basis(n)), factorial(n))
    bracket = P.element(P.bracket_label())
    product = P.element(P.product_label(2))
    r.record(is_primitive(P, bracket), {"check": "bracket_primitive"}, is_primitive(P, bracket), True)
    r.record(not is_primitive(P, product), {"check": "product_not_primitive"}, is_primitive(P, product), False)
    for n in range(1, prim_max + 1):
        prims = primitive_space(P, n).basis
        r.record(len(prims) == factorial(n - 1), {"n": n, "check": "primitive_dimension"}, len(prims), factorial(n - 1))
        lie_part = [P.element(label) for label in P.basis(n) if len(label) == 1]
        _span_check(r, {"n": n, "check": "lie_span"}, prims, lie_part, factorial(n - 1))
    return r


def _mag2_primitives(M: Operad) -> LawReport:
    r = LawReport(M.name, "primitive_arity_two", (2, 2))
    prims = primitive_space(M, 2).basis
    expected = M.element((1, 2)) - M.element((2, 1))
    same = len(prims) == 1 and row_space_rank([prims[0].terms, expected.terms]) == 1
    r.record(same, {"n": 2}, " ; ".join(str(p) for p in prims), str(expected))
    return r


def _lie_closure(Lie: Operad, n_max: int) -> LawReport:
    """Partial compositions of Dynkin brackets straighten back into Lie."""
    r = LawReport(Lie.name, "closure_in_as", (1, n_max))
    for a in range(1, n_max + 1):
        for b in range(1, n_max + 2 - a):
            for x in Lie.basis(a):
                for y in Lie.basis(b):
                    for i in range(1, a + 1):
                        try:
                            z = compose_partial(Lie, Lie.element(x), i, Lie.element(y))
                            ok, shown = True, str(z)
                        except ArithmeticError as exc:
                            ok, shown = False, str(exc)
                        inputs = {"x": Lie.format_label(x), "i": i, "y": Lie.format_label(y)}
                        r.record(ok, inputs, shown, "a Lie element")
    return r


def _free_dimensions(As: Operad, Com: Operad, n_max: int, identity_n: int) -> LawReport:
    r = LawReport("free", "free_primitive_dimensions", (1, n_max))
    V = FiniteSModule.from_dims({1: 2})
    lie_dims = {k: factorial(k - 1) for k in range(1, identity_n + 1)}
    dims = {}
    for P, q_dims in ((As, lie_dims), (Com, {1: 1})):
        got = dims[P.name] = free_primitive_dimensions(P, V, n_max)
        want = [plethysm_dimension(q_dims, V, n) for n in range(1, n_max + 1)]
        r.record(got == want, {"operad": P.name, "V": str(V)}, got, want)
    closed_form = [factorial(n - 1) * 2**n for n in range(1, n_max + 1)]
    got = dims[As.name]
    r.record(got == closed_form, {"operad": As.name, "V": str(V), "formula": "(n-1)!*2^n"}, got, closed_form)
    got = free_primitive_dimensions(As, IDENTITY_MODULE, identity_n)
    want = [factorial(n - 1) for n in range(1, identity_n + 1)]
    r.record(got == want, {"operad": As.name, "V": str(IDENTITY_MODULE)}, got, want)
    return r


def _checks(profile: str, seed: int, registry: Registry):
    """Yield ``(name, thunk)`` pairs in report order."""
    b = BOUNDS[profile]
    As, Com, Pois = registry("as"), registry("com"), registry("pois")
    Mag2, Mag3, Lie = registry("mag2"), registry("mag3"), registry("lie")

    yield "convention", lambda: _convention(As)
    yield "fixtures", _fixtures
    for P, n in ((As, b.operad_laws), (Com, b.operad_laws), (Mag3, b.operad_laws), (Pois, b.pois_laws), (Lie, b.pois_laws)):
        for law in applicable_laws(P):
            yield f"operad_laws/{law}", lambda P=P, law=law, n=n: check_operad_laws(P, law, n, seed)
    yield "lie_closure", lambda: _lie_closure(Lie, 4)
    for P, n in ((As, b.coalgebra_as), (Com, b.coalgebra_other), (Pois, b.coalgebra_other), (Mag2, b.coalgebra_other)):
        for law in ("coassoc", "counit", "cocommutative", "connectedness"):
            yield f"coalgebra/{law}", lambda P=P, law=law, n=n: check_hopf_laws(P, law, n, seed)
    for P in (As, Com, Pois, Mag2):
        for law in ("algebra_morphism", "delta_operad_morphism"):
            yield f"morphism/{law}", lambda P=P, law=law: check_hopf_laws(P, law, 4, seed)
    yield "primitives/as", lambda: _prim_as(As, b.prim_as)
    yield "primitives/pois", lambda: _pois_structure(Pois, b.pois_count, b.prim_pois)
    for P, n in ((As, b.closure_as), (Pois, b.closure_other), (Mag2, b.closure_other)):
        yield "closure/primitive_closure", lambda P=P, n=n: check_hopf_laws(P, "primitive_closure", n, seed)
    for P in (As, Pois):
        yield "reciprocity", lambda P=P: check_hopf_laws(P, "reciprocity", 3, seed)
    yield "free_algebra", lambda: _free_dimensions(As, Com, b.free_n, b.free_identity_n)
    yield "primitives/mag2", lambda: _mag2_primitives(Mag2)


def run_verify(profile: str = "quick", seed: int = 0, registry: Registry | None = None) -> dict:
    """Run every check of ``profile``; ``registry`` maps operad names to instances."""
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}")
    registry = registry or get_operad
    records = []
    for name, thunk in _checks(profile, seed, registry):
        start = time.perf_counter()
        rep = thunk()
        elapsed = time.perf_counter() - start
        records.append(
            {
                "name": name,
                "operad": rep.operad,
                "law": rep.law,
                "arity_range": list(rep.arity_range),
                "status": rep.status,
                "checked": rep.checked,
                "timing": {"seconds": round(elapsed, 3)},
                "counterexamples": rep.counterexamples,
            }
        )
    status = "pass" if all(r["status"] == "pass" for r in records) else "fail"
    return {"tool_version": __version__, "seed": seed, "profile": profile, "status": status, "records": records}


def strip_timing(report: dict) -> dict:
    """Copy of a report without timing fields, for determinism comparisons."""
    out = dict(report)
    out["records"] = [{k: v for k, v in r.items() if k != "timing"} for r in report["records"]]
    return out
