"""Upper and lower bounds on A(n, d), the largest (n, d) tree-code.

Every certifying bound is evaluated as an exact ``Fraction`` and rounded
toward the feasible side: upper bounds are floored and lower bounds are
ceiled, since A(n, d) is an integer.  Asymptotic forms with unnamed
constants are returned with ``certifying=False`` and never take part in
consistency checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .errors import BoundInconsistencyError, ParameterError

UPPER, LOWER = "upper", "lower"


@dataclass(frozen=True)
class BoundValue:
    name: str
    kind: str
    n: int
    d: int
    exact: Fraction | None
    rounded: int | None
    log10: float
    applicable: bool = True
    requires: str = ""
    note: str = ""
    certifying: bool = True
    shared: int = 0  # i in A(n, d; i): codewords share at least i edges

    def as_dict(self) -> dict:
        return {
            "name": self.name, "kind": self.kind, "n": self.n, "d": self.d,
            "shared": self.shared,
            "exact": None if self.exact is None else str(self.exact),
            "rounded": self.rounded, "log10": self.log10,
            "applicable": self.applicable, "requires": self.requires,
            "certifying": self.certifying, "note": self.note,
        }


def _log10(x: Fraction) -> float:
    x = Fraction(x)
    if x <= 0:
        return float("-inf")
    return math.log10(x.numerator) - math.log10(x.denominator)


def _round(kind: str, x: Fraction) -> int:
    return math.floor(x) if kind == UPPER else math.ceil(x)


def _bound(name, kind, n, d, value, **kw) -> BoundValue:
    value = Fraction(value)
    return BoundValue(name, kind, n, d, value, _round(kind, value), _log10(value), **kw)


def _pow(base: int, e: int) -> Fraction:
    return Fraction(base) ** e


# --- upper bounds ------------------------------------------------------------


def first_upper_bound(n: int, d: int) -> BoundValue:
    """n^(n-d) / (n-d+1), valid for 1 <= d <= n-2."""
    if not 1 <= d <= n - 2:
        raise ParameterError(f"first upper bound needs 1 <= d <= n-2, got n={n}, d={d}")
    return _bound("first_upper", UPPER, n, d, Fraction(n ** (n - d), n - d + 1),
                  requires="1 <= d <= n-2")


def forest_count_estimate(n: int, d: int) -> Fraction:
    """Double-counting upper estimate C(n,d) d n^(n-1-d) / (n-d+1) of |F(n,d)|."""
    return comb(n, d) * d * _pow(n, n - 1 - d) / (n - d + 1)


SPHERE_EXACT_CAP = 400


def sphere_packing_bound(n: int, d: int, method: str = "auto") -> BoundValue:
    """|F(n,d)| / C(n-1, d-1), F(n,d) = forests with exactly d components.

    ``method``: ``exact`` (component recurrence), ``enumerate`` (brute force,
    n <= 8), ``estimate`` (double-counting estimate), or ``auto`` (exact when
    n <= SPHERE_EXACT_CAP, else estimate).
    """
    from . import oracle

    if not 1 <= d <= n - 1:
        raise ParameterError(f"sphere packing bound needs 1 <= d <= n-1, got n={n}, d={d}")
    if method == "auto":
        method = "exact" if n <= SPHERE_EXACT_CAP else "estimate"
    if method == "exact":
        count = Fraction(oracle.forest_count(n, d))
    elif method == "enumerate":
        count = Fraction(oracle.count_forests(n, d))
    elif method == "estimate":
        count = forest_count_estimate(n, d)
    else:
        raise ParameterError(f"unknown forest-count method {method!r}")
    return _bound("sphere_packing", UPPER, n, d, count / comb(n - 1, d - 1),
                  requires="1 <= d <= n-1", note=f"forest count: {method}")


def shared_edge_code_bound(n: int, d: int) -> tuple[Fraction, str]:
    """Bound on A(n, d; n-d-2) from counting 2-stars in the incidence graph.

    Returns the smaller of the two available bounds and which one won.
    """
    pairs = comb(n, 2)
    rest = pairs - (n - d - 2)
    b1 = Fraction(comb(pairs, 2), comb(d + 1, 2))
    denom = (d + 1) ** 2 - rest
    if denom > 0:
        b2 = Fraction(d * rest, denom)
        if b2 <= b1:
            return b2, "degree-variance"
    return b1, "pair-count"


def second_upper_bound(n: int, d: int) -> BoundValue:
    """A(n,d;n-d-2) * C(n,2)^(n-d-2) / ((d+2)(d+3)...(n-1)), exactly."""
    if not 1 < d <= n - 2:
        raise ParameterError(f"second upper bound needs 1 < d <= n-2, got n={n}, d={d}")
    core, branch = shared_edge_code_bound(n, d)
    steps = n - d - 2
    value = core * _pow(comb(n, 2), steps) / math.prod(range(d + 2, n))
    return _bound("second_upper", UPPER, n, d, value, requires="1 < d <= n-2",
                  note=f"A(n,d;{steps}) <= {core} via {branch} bound")


EXPLICIT_GAP_NOTE = "supporting shared-edge bound holds from n >= 69; the code-size bound is stated from n >= 117"


def explicit_upper_bounds(n: int) -> list[BoundValue]:
    """Closed-form bounds for d = n-3, n-4, n-5, each with its threshold.

    Entries whose threshold is not met are returned with applicable=False.
    """
    out = []

    def add(name, d, value, threshold, shared=0, note=""):
        ok = n >= threshold and d >= 1
        out.append(_bound(name, UPPER, n, d, value, applicable=ok,
                          requires=f"n >= {threshold}", shared=shared, note=note))

    add("legacy_n_squared", n - 3, n * n, 9)
    add("explicit_n_minus_3", n - 3, Fraction(n * (n + 2), 2), 13)
    add("explicit_n_minus_4", n - 4, Fraction(n**3 + 5 * n**2 + 6 * n + 12, 4), 35)
    add("explicit_n_minus_5", n - 5, Fraction(n**4 + 9 * n**3 + 28 * n**2 + 92 * n + 292, 8), 117,
        note=EXPLICIT_GAP_NOTE)
    add("shared_edge_n_minus_3", n - 3, n + 2, 13, shared=1)
    add("shared_edge_n_minus_4", n - 4, n + 4, 35, shared=2)
    add("shared_edge_n_minus_5", n - 5, n + 6, 69, shared=3)
    return out


# --- lower bounds ------------------------------------------------------------


def independent_set_formulas(n: int, d: int) -> tuple[Fraction, Fraction]:
    """(d^d n^(n-2d), (n/2)^(n-d)), each divided by C(n-1, d-1).

    The second is a valid bound only when d > n/2.
    """
    c = comb(n - 1, d - 1)
    general = Fraction(d**d) * _pow(n, n - 2 * d) / c
    half = Fraction(n, 2) ** (n - d) / c
    return general, half


def lower_bound_independent(n: int, d: int) -> BoundValue:
    """Independent-set lower bound on the conflict graph of all trees."""
    if not 1 <= d < n:
        raise ParameterError(f"independent-set bound needs 1 <= d < n, got n={n}, d={d}")
    c = comb(n - 1, d - 1)
    if 2 * d > n:
        # the general formula is never larger here, and is costly for huge n
        value, which = Fraction(n, 2) ** (n - d) / c, "half-size components"
    else:
        value, which = Fraction(d**d) * _pow(n, n - 2 * d) / c, "general"
    b = _bound("independent_set", LOWER, n, d, value, requires="1 <= d < n",
               note=f"formula: {which}")
    if b.rounded < 1:
        b = BoundValue(b.name, LOWER, n, d, b.exact, 1, b.log10, requires=b.requires,
                       note=b.note + "; clamped to 1 (a single tree is a code)")
    return b


@dataclass(frozen=True)
class DeltaCurvePoint:
    delta: float
    C_delta: float
    c_delta: float


def delta_constants(delta) -> DeltaCurvePoint:
    """Growth constants of the upper (C) and lower (c) bounds at d = delta*n."""
    dl = float(delta)
    if not 0.0 < dl < 1.0:
        raise ParameterError(f"delta must lie in (0, 1), got {delta}")
    h = dl ** (dl / (1.0 - dl))
    return DeltaCurvePoint(dl, math.e / 2.0 * h, (1.0 - dl) * h * max(h, 0.5))


def delta_curve(start: float = 0.01, stop: float = 0.99, step: float = 0.01) -> list[DeltaCurvePoint]:
    count = int(round((stop - start) / step)) + 1
    return [delta_constants(round(start + k * step, 12)) for k in range(count)]


def polynomial_regime_distance(n: int, k: int) -> tuple[int, BoundValue]:
    """d = round(n - (k+1) ln n / ln ln n) and the independent-set bound there."""
    if n < 16 or k < 1:
        raise ParameterError("need n >= 16 and k >= 1")
    lln = math.log(math.log(n))
    if lln <= 0:
        raise ParameterError("ln ln n must be positive")
    d = round(n - (k + 1) * math.log(n) / lln)
    if not 1 <= d < n:
        raise ParameterError(f"distance {d} outside [1, n) for n={n}, k={k}")
    return d, lower_bound_independent(n, d)


def asymptotic_forms(n: int, d: int) -> list[BoundValue]:
    """Leading-order forms of the large-n bounds; informational only."""
    out = []
    delta = d / n
    theta = n - d

    def add(name, kind, log10, requires):
        out.append(BoundValue(name, kind, n, d, None, None, log10, applicable=True,
                              requires=requires, certifying=False,
                              note="asymptotic, holds only for sufficiently large n"))

    if 0.1313 < delta < 1:
        C = delta_constants(delta).C_delta
        add("upper_linear_regime", UPPER, math.log10(1.2) + theta * math.log10(C * n),
            "d = delta n, 0.1313 < delta < 1")
    if theta >= 2:
        add("upper_constant_gap_leading", UPPER,
            math.log10(2) + (theta - 1) * math.log10(n / 2), "n - d constant")
        add("upper_sublinear_gap", UPPER,
            math.log10(2.1) + (theta - 1) * math.log10(n / 2), "n - d = o(sqrt n)")
    if 0 < delta < 1:
        c = delta_constants(delta).c_delta
        add("lower_linear_regime", LOWER, math.log10(2.5) + (theta + 0.5) * math.log10(c * n),
            "d = delta n")
        add("lower_sublinear_distance", LOWER,
            2 * d * math.log10(d / (math.sqrt(math.e) * n)) + theta * math.log10(n), "d = o(n)")
    if theta > 0:
        add("lower_small_gap", LOWER, theta * math.log10(theta / (2 * math.e)), "n - d = o(n)")
    return out


# --- aggregation -------------------------------------------------------------


def witness_bounds(n: int, d: int) -> list[BoundValue]:
    """Lower bounds from explicit codes whose distance is at least d."""
    from .constructions import FAMILY_DISTANCE, family_size

    out = [_bound("single_tree", LOWER, n, d, 1, note="witness")]
    for fam, dist in FAMILY_DISTANCE.items():
        size = family_size(fam, n)
        if size is not None and d <= dist(n):
            out.append(_bound(f"witness:{fam}", LOWER, n, d, size,
                              requires=f"d <= {dist(n)}", note="construction witness"))
    return out


def known_exact(n: int, d: int) -> list[BoundValue]:
    """Closed-form values of A(n, d) known in general: d = 1, n-2, n-1."""
    vals = []
    if d == 1:
        vals.append(("cayley", n ** (n - 2)))
    if d == n - 1 and n >= 2:
        vals.append(("edge_disjoint_paths", n // 2))
    if d == n - 2 and n >= 3:
        vals.append(("all_stars", n))
    out = []
    for name, v in vals:
        out.append(_bound(f"known:{name}", UPPER, n, d, v, note="known exact value"))
        out.append(_bound(f"known:{name}", LOWER, n, d, v, note="known exact value"))
    return out


@dataclass(frozen=True)
class BoundsTable:
    n: int
    d: int
    entries: tuple[BoundValue, ...]
    exact: int | None = None

    def __iter__(self):
        return iter(self.entries)

    def __len__(self):
        return len(self.entries)

    def _active(self, kind):
        return [b for b in self.entries
                if b.kind == kind and b.applicable and b.certifying and b.shared == 0]

    @property
    def best_lower(self) -> BoundValue:
        return max(self._active(LOWER), key=lambda b: b.rounded)

    @property
    def best_upper(self) -> BoundValue:
        return min(self._active(UPPER), key=lambda b: b.rounded)


def bounds_table(n: int, d: int, witnesses: bool = True, oracle_exact: bool = False,
                 budget=None) -> BoundsTable:
    """Every bound that applies at (n, d), checked for consistency.

    Raises BoundInconsistencyError if some lower bound exceeds some upper
    bound (or the oracle value falls outside the sandwich).
    """
    if not 1 <= d <= n - 1:
        raise ParameterError(f"need 1 <= d <= n-1, got n={n}, d={d}")
    entries = [_bound("all_trees", UPPER, n, d, n ** (n - 2), note="Cayley count")]
    if d <= n - 2:
        entries.append(first_upper_bound(n, d))
    entries.append(sphere_packing_bound(n, d))
    if 1 < d <= n - 2:
        entries.append(second_upper_bound(n, d))
    entries += [b for b in explicit_upper_bounds(n) if b.d == d]
    entries += known_exact(n, d)
    entries.append(lower_bound_independent(n, d))
    if witnesses:
        entries += witness_bounds(n, d)
    entries += asymptotic_forms(n, d)
    entries.sort(key=lambda b: (b.kind != UPPER, not b.certifying, b.log10, b.name))

    exact = None
    if oracle_exact:
        from .oracle import exact_A

        res = exact_A(n, d, budget=budget, opt_in=True)
        if res.certified:
            exact = res.value
    table = BoundsTable(n, d, tuple(entries), exact)
    lo, hi = table.best_lower, table.best_upper
    if lo.rounded > hi.rounded:
        raise BoundInconsistencyError(
            f"A({n},{d}): lower {lo.name}={lo.rounded} exceeds upper {hi.name}={hi.rounded}", lo, hi)
    if exact is not None and not lo.rounded <= exact <= hi.rounded:
        raise BoundInconsistencyError(
            f"A({n},{d}) = {exact} outside [{lo.rounded}, {hi.rounded}]", lo, hi)
    return table
