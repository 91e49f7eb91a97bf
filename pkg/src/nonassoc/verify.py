"""Cross-check grids behind ``nonassoc verify``.

Each suite returns a :class:`Report` holding one :class:`Check` per
(quantity, grid point).  ``nmax`` bounds the brute-force side; series and
closed forms are compared further out where that is cheap.
"""
from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field

from . import formulas as F
from . import oracles as O
from . import series as S
from ._kernels import dyck_height_histogram
from .equivalence import (
    Params,
    check_conjecture,
    class_key,
    count_classes,
    max_class_size,
    minimal_trees,
)
from .opsim import RingParams, expand, profile_magma, subtraction_magma
from .trees import enumerate_trees

__all__ = ["Check", "Report", "SUITES", "run_suite"]


@dataclass
class Check:
    name: str
    point: dict
    expected: object
    got: object

    @property
    def ok(self) -> bool:
        return self.expected == self.got

    def to_json(self) -> dict:
        out = asdict(self)
        out["ok"] = self.ok
        for key in ("expected", "got"):
            if not isinstance(out[key], (int, bool, list, dict, type(None))):
                out[key] = str(out[key])
        return out


@dataclass
class Report:
    suite: str
    grid: dict
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def add(self, name, point, expected, got):
        self.checks.append(Check(name, dict(point), expected, got))

    @property
    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    @property
    def passed(self) -> bool:
        return not self.failed

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "grid": self.grid,
            "total": len(self.checks),
            "failed": len(self.failed),
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "notes": self.notes,
            "checks": [c.to_json() for c in self.checks],
        }


def _coeff(s, n):
    return int(s[n + 1])


def suite_formulas(nmax: int = 9) -> Report:
    order = max(S.DEFAULT_ORDER, nmax + 4)
    rep = Report("formulas", {"nmax": nmax, "order": order})
    for d in range(1, 6):
        gf = S.gf_Cd(d, order)
        for n in range(1, order - 1):
            val = F.c_d1(n, d)
            rep.add("c_d1 vs gf_Cd", {"n": n, "d": d}, _coeff(gf, n), val)
            rep.add("adnil_sum vs c_d1", {"n": n, "d": d}, val, F.adnil_sum(n, d))
    for d in range(2, 5):
        gf = S.gf_Cde(d, 2, order)
        for n in range(2, order - 1):
            rep.add("c_d2 vs gf_Cde", {"n": n, "d": d}, _coeff(gf, n), F.c_d2(n, d))
    for case, (d, low) in {22: (2, 2), 32: (3, 2), 42: (4, 3)}.items():
        gf = S.gf_Cde(d, 2, order)
        for n in range(low, order - 1):
            rep.add("special_de vs gf_Cde", {"n": n, "case": case}, _coeff(gf, n), F.special_de(n, case))
    for d in range(1, 5):
        gf = S.gf_Ckd(3, d, order)
        for n in range(0, min(order - 1, 13)):
            rep.add("c3dn vs gf_Ckd", {"n": n, "d": d}, _coeff(gf, n), F.c3dn(n, d))
    for k in range(1, 5):
        m_series = S.gf_M(k - 1, order)
        c1 = S.gf_Ckd(k, 1, order)
        c2 = S.gf_Ckd(k, 2, order)
        for m in range(1, 5):
            for n in range(0, 11):
                rep.add("forest_count vs series", {"n": n, "m": m, "k": k},
                        int(S.power_coeff(m_series, m, n)), F.forest_count(n, m, k))
                if n >= 1:
                    rep.add("forest_nonroot_count vs series", {"n": n, "m": m, "k": k},
                            int(S.power_coeff(c1, m, n)), F.forest_nonroot_count(n, m, k))
                rep.add("ck2_power vs series", {"n": n, "m": m, "k": k},
                        int(S.power_coeff(c2, m, n)), F.ck2_power(n, m, k))
    c2 = S.gf_Ckd(2, 1, order)
    for m in range(1, 5):
        for n in range(0, 11):
            count = F.weakcomp_count(n, m)
            rep.add("weakcomp_count vs series", {"n": n, "m": m}, int(S.power_coeff(c2, m, n)), count)
            rep.add("weakcomp_count vs enumeration", {"n": n, "m": m},
                    sum(1 for _ in F.weakcomp_enumerate(n, m)), count)
    for n in range(1, 11):
        rep.add("c22_fib vs F_{2n-1}", {"n": n}, F.fibonacci(2 * n - 1), F.c22_fib(n))
    for d in range(1, 4):
        for e in range(1, 4):
            for n in range(0, nmax + 1):
                top, mult = max_class_size(n, Params(d, e, 1, 1))
                value, formula_mult = F.tilde_formula(n, d, e)
                # the multiplicity is only predicted once n >= d + e
                want = [top, mult] if formula_mult is not None else [top]
                got = [value, formula_mult] if formula_mult is not None else [value]
                rep.add("tilde_formula vs brute force", {"n": n, "d": d, "e": e}, want, got)
    return rep


def suite_series(nmax: int = 9) -> Report:
    order = S.DEFAULT_ORDER
    rep = Report("series", {"nmax": nmax, "order": order})
    for d in range(0, 6):
        rep.add("gf_C3d_closed vs gf_Ckd(3, d)", {"d": d},
                S.gf_Ckd(3, d, order).integers(), S.gf_C3d_closed(d, order).integers())
    for d in range(1, 6):
        rep.add("gf_Ckd(1, d) vs gf_Cd", {"d": d}, S.gf_Cd(d, order).integers(), S.gf_Ckd(1, d, order).integers())
        rep.add("gf_Ckd(2, d) vs gf_Cd(d + 1)", {"d": d},
                S.gf_Cd(d + 1, order).integers(), S.gf_Ckd(2, d, order).integers())
    for k in (2, 3, 4):
        for d in range(0, 4):
            rep.add("gf_Mkd(k - 1, d + 1) vs gf_Ckd", {"k": k, "d": d},
                    S.gf_Ckd(k, d, order).integers(), S.gf_Mkd(k - 1, d + 1, order).integers())
    for d in range(1, 5):
        for e in range(1, 5):
            rep.add("gf_Cde symmetry", {"d": d, "e": e},
                    S.gf_Cde(d, e, order).integers(), S.gf_Cde(e, d, order).integers())
    for d in range(1, 13):
        f0, f1, f2 = S.fibonacci_poly(d), S.fibonacci_poly(d + 1), S.fibonacci_poly(d + 2)
        rep.add("F_{d+1}^2 - F_d F_{d+2} = x^d", {"d": d},
                S.Poly([0] * d + [1]).coeffs, (f1 * f1 - f0 * f2).coeffs)
    for k in range(2, 5):
        x = S.TruncatedSeries.x(order)
        A = x * (1 - x) / (1 - S.TruncatedSeries.monomial(k, order))
        rep.add("series_revert(A) vs gf_M(k - 1)", {"k": k},
                S.gf_M(k - 1, order).integers(), S.series_revert(A).integers())
        for ell in range(1, 5):
            rep.add("Lagrange identity", {"k": k, "l": ell}, True, S.lagrange_check(A, ell, 12))
    for d in range(1, 4):
        for e in range(1, 4):
            gf = S.gf_Cde(d, e, order)
            for n in range(0, nmax + 1):
                rep.add("gf_Cde vs brute force", {"n": n, "d": d, "e": e},
                        _coeff(gf, n), count_classes(n, Params(d, e, 1, 1)))
    for k in range(1, 5):
        for d in range(1, 5):
            gf = S.gf_Ckd(k, d, order)
            for n in range(0, min(nmax, 8) + 1):
                rep.add("gf_Ckd vs brute force", {"n": n, "k": k, "d": d},
                        _coeff(gf, n), count_classes(n, Params(d, 1, k, 1)))
    return rep


def suite_oracles(nmax: int = 9) -> Report:
    rep = Report("oracles", {"nmax": nmax})
    for n in range(1, nmax + 1):
        ideals = list(O.enumerate_ideals(n))
        rep.add("ideal count = C_n", {"n": n}, F.catalan(n), len(ideals))
        rep.add("ideal_order = bounce_parts", {"n": n}, [O.ideal_order(I) for I in ideals],
                [O.bounce_parts(I) for I in ideals])
        rep.add("order histogram = height histogram", {"n": n},
                O.order_histogram(n), dyck_height_histogram(n))
        for d in range(1, 6):
            want = F.c_d1(n, d)
            point = {"n": n, "d": d}
            rep.add("ideals by order", point, want, O.count_ideals_by_order(n, d))
            rep.add("Dyck height at most d", point, want, O.count_dyck_height_at_most(n, d))
            rep.add("132-avoiding permutations", point, want, O.count_avoiding_perms(n, d))
    for k in range(1, 4):
        for d in range(1, 4):
            for n in range(0, nmax + 1):
                point = {"n": n, "d": d, "k": k}
                want = len(minimal_trees(n, d, k))
                rep.add("constrained plane trees", point, want, O.count_plane_trees_constrained(n, d, k))
                rep.add("DU^k-avoiding Dyck paths", point, want, O.count_dyck_avoiding(n, k, d))
    for d in range(0, 4):
        for n in range(0, 11):
            want = F.motzkin(n) if d == 0 else F.c3dn(n, d)
            rep.add("weighted paths", {"n": n, "d": d}, want, O.weighted_path_count(n, d))
    return rep


def suite_eq3(nmax: int = 6) -> Report:
    rep = Report("eq3", {"nmax": nmax})
    grid = [(d, e, k, l) for d in (1, 2, 3) for e in (1, 2, 3) for k in (1, 2, 3) for l in (1, 2, 3)]  # noqa: E741
    for n in range(0, nmax + 1):
        trees = enumerate_trees(n)
        for d, e, k, l in grid:  # noqa: E741
            p = Params(d, e, k, l)
            rp = RingParams(d, k, e, l)
            keys = [class_key(t, p) for t in trees]
            vecs = [expand(t, rp) for t in trees]
            agree = all(
                (keys[i] == keys[j]) == (vecs[i] == vecs[j])
                for i in range(len(trees))
                for j in range(i + 1, len(trees))
            )
            rep.add("TermVector equality = class_key equality", {"n": n, **p.as_dict()}, True, agree)
    profile = profile_magma(subtraction_magma(5), min(nmax, 6))
    for n, got in enumerate(profile.counts):
        rep.add("subtraction mod 5", {"n": n}, count_classes(n, Params(1, 1, 1, 2)), got)
    rep.notes["subtraction_depth"] = profile.depth
    return rep


def suite_conjecture(nmax: int = 9) -> Report:
    """Compares both sides of the conjecture.  Disagreement is reported, never counted as a failure."""
    rep = Report("conjecture-scan", {"nmax": nmax, "k": [1, 2, 3], "l": [1, 2, 3]})
    outcomes = []
    for k in range(1, 4):
        for ell in range(1, 4):
            result = check_conjecture(k, ell, nmax)
            outcomes.append(result)
    rep.notes["outcomes"] = outcomes
    rep.notes["all_equal"] = all(r["holds"] for r in outcomes)
    return rep


SUITES = {
    "formulas": suite_formulas,
    "series": suite_series,
    "oracles": suite_oracles,
    "eq3": suite_eq3,
    "conjecture-scan": suite_conjecture,
}


def run_suite(name: str, nmax: int | None = None) -> Report:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    start = time.perf_counter()
    rep = SUITES[name]() if nmax is None else SUITES[name](nmax)
    rep.seconds = time.perf_counter() - start
    return rep
