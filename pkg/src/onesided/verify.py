"""The one-shot verification runner behind ``onesided verify``.

Each suite returns a JSON-ready dict with a ``passed`` flag.  Reports carry
no timings, so two runs with the same seed serialize identically.
"""
from __future__ import annotations

import itertools
import random

from . import coherence, resolution, rewrite
from .actions import (act_left, act_right_on_ypoly, e_unit_action, nilpotence_index, poly,
                      x_minus_one_injective_on_ypolys, ypoly)
from .algebra import SnAlgebra, expand_E
from .coeff_ring import FieldRequiredError
from .division import T_ON_LEFT, T_ON_RIGHT, check_t2_condition, divide, regularity_report, tau
from .expr import Config
from .linalg import FULL, TruncBasis, mult_map, solve
from .sampling import random_element, random_monomial

SUITES = ("oracle", "delta", "identities", "regularity", "normality", "non-normality",
          "tau", "t2", "actions", "coherence", "sam")
FIELD_SUITES = frozenset({"regularity", "normality", "non-normality", "tau", "t2",
                          "actions", "coherence", "sam"})


def suite_oracle(cfg: Config, seed: int) -> dict:
    runs = [rewrite.exhaustive_check(1, 8), rewrite.exhaustive_check(2, 6),
            rewrite.random_word_check(1000, 10, None, seed)]
    return {"runs": [r.to_json() for r in runs], "passed": all(r.passed for r in runs)}


def delta_calculus(n: int, max_index: int, ring) -> dict:
    """E_ab E_cr == delta(b, c) E_ar for every index vector with entries <= max_index."""
    S = SnAlgebra(n, ring)
    idx = list(itertools.product(range(max_index + 1), repeat=n))
    units = {(a, b): expand_E(S, a, b) for a in idx for b in idx}
    checked = 0
    for (a, b), e1 in units.items():
        for (c, r), e2 in units.items():
            expected = units[(a, r)] if b == c else S.zero
            checked += 1
            if e1 * e2 != expected:
                return {"n": n, "max_index": max_index, "checked": checked, "passed": False,
                        "failure": {"alpha": a, "beta": b, "gamma": c, "rho": r}}
    return {"n": n, "max_index": max_index, "checked": checked, "passed": True}


def suite_delta(cfg: Config, seed: int) -> dict:
    runs = [delta_calculus(1, 3, cfg.ring), delta_calculus(2, 2, cfg.ring)]
    return {"runs": runs, "passed": all(r["passed"] for r in runs)}


def identities(ring) -> dict:
    S = SnAlgebra(1, ring)
    x, y = S.x(), S.y()
    split = (x - 1) * y - (1 - (x - 1) * y) * (x - 1)
    shift = 1 - y - y * (x - 1)
    return {"split_residual": str(split), "shift_residual": str(shift),
            "passed": split.is_zero() and shift.is_zero()}


def suite_identities(cfg: Config, seed: int) -> dict:
    return identities(cfg.ring)


def suite_regularity(cfg: Config, seed: int) -> dict:
    S = SnAlgebra(1, cfg.ring)
    reps = [regularity_report(S.x() - 1, cfg.max_deg), regularity_report(S.y() - 1, cfg.max_deg)]
    return {"reports": [{"t": r["t"], "max_d": r["max_d"], "passed": r["passed"]} for r in reps],
            "passed": all(r["passed"] for r in reps)}


def normality(ring, count: int, seed: int, max_d: int = 8) -> dict:
    """(x-1)m in S(x-1) and m(y-1) in (y-1)S for random monomials m, and (x-1) = (y-1)."""
    rng = random.Random(seed)
    S = SnAlgebra(1, ring)
    x, y = S.x(), S.y()
    failures = []
    for _ in range(count):
        m = S.element({random_monomial(rng, 1, 3): 1})
        r1 = divide((x - 1) * m, x - 1, T_ON_RIGHT, max_d)
        r2 = divide(m * (y - 1), y - 1, T_ON_LEFT, max_d)
        if not (r1.found and r2.found):
            failures.append(str(m))
    eq1 = divide(y - 1, x - 1, T_ON_RIGHT, max_d)
    eq2 = divide(x - 1, y - 1, T_ON_LEFT, max_d)
    return {"samples": count, "failures": failures,
            "y_minus_1_over_x_minus_1": eq1.to_json(), "x_minus_1_over_y_minus_1": eq2.to_json(),
            "passed": not failures and eq1.found and eq2.found}


def suite_normality(cfg: Config, seed: int) -> dict:
    return normality(cfg.ring, 20, seed)


def non_normality(ring, max_d: int) -> dict:
    """No g with (x-1)g = E_00, nor with g(y-1) = E_00, on boxes 0..max_d."""
    S = SnAlgebra(1, ring)
    x, y = S.x(), S.y()
    e00 = expand_E(S, (0,), (0,))
    rows = []
    for d in range(max_d + 1):
        box = TruncBasis(1, d, FULL)
        right_ideal = solve(mult_map(x - 1, "left", box), e00)
        left_ideal = solve(mult_map(y - 1, "right", box), e00)
        rows.append({"d": d, "in_(x-1)S": right_ideal is not None,
                     "in_S(y-1)": left_ideal is not None})
    return {"target": str(e00), "boxes": rows,
            "passed": not any(r["in_(x-1)S"] or r["in_S(y-1)"] for r in rows)}


def suite_non_normality(cfg: Config, seed: int) -> dict:
    return non_normality(cfg.ring, cfg.max_deg)


def tau_checks(ring, pairs: int, box: int, seed: int) -> dict:
    rng = random.Random(seed)
    S = SnAlgebra(1, ring)
    x, y = S.x(), S.y()
    t = y - 1
    tx = tau(t, x)
    closed = tx == 1 + x - x * y
    max_d = 4 * box + 2
    mult_ok = True
    pi_ok = True
    for _ in range(pairs):
        a = random_element(rng, S, box)
        b = random_element(rng, S, box)
        ta, tb = tau(t, a, max_d), tau(t, b, max_d)
        if tau(t, a * b, max_d) != ta * tb:
            mult_ok = False
        if ta.pi() != a.pi():
            pi_ok = False
    return {"tau_y_minus_1_of_x": str(tx), "closed_form": closed, "pairs": pairs,
            "multiplicative": mult_ok, "pi_invariant": pi_ok,
            "passed": closed and mult_ok and pi_ok}


def suite_tau(cfg: Config, seed: int) -> dict:
    return tau_checks(cfg.ring, 10, 2, seed)


def suite_t2(cfg: Config, seed: int) -> dict:
    S = SnAlgebra(1, cfg.ring)
    x, y = S.x(), S.y()
    return check_t2_condition(y - 1, [x, x * x, x * y, expand_E(S, (0,), (0,))])


def suite_actions(cfg: Config, seed: int) -> dict:
    rng = random.Random(seed)
    ring = cfg.ring
    S1 = SnAlgebra(1, ring)
    S2 = SnAlgebra(2, ring)
    assoc = True
    for _ in range(30):
        f, g = random_element(rng, S2, 2), random_element(rng, S2, 2)
        p = poly(S2, {(rng.randint(0, 3), rng.randint(0, 3)): rng.randint(1, 4)})
        if act_left(f * g, p) != act_left(f, act_left(g, p)):
            assoc = False
    e_rule = True
    for b, c, a in itertools.product(range(3), repeat=3):
        got = act_left(expand_E(S1, (b,), (c,)), poly(S1, {(a,): 1}))
        if got != e_unit_action((b,), (c,), (a,), S1):
            e_rule = False
    right_assoc = True
    for _ in range(30):
        f, g = random_element(rng, S1, 2), random_element(rng, S1, 2)
        q = ypoly(S1, [rng.randint(-3, 3) for _ in range(4)])
        if act_right_on_ypoly(q, f * g) != act_right_on_ypoly(act_right_on_ypoly(q, f), g):
            right_assoc = False
    nilpotent = all(nilpotence_index(ypoly(S1, [1] * (k + 1))) == k + 1 for k in range(6))
    injective = x_minus_one_injective_on_ypolys(S1, cfg.max_deg)
    return {"left_associative": assoc, "e_unit_rule": e_rule, "right_associative": right_assoc,
            "locally_nilpotent": nilpotent, "x_minus_1_injective_on_A[y]": injective,
            "passed": assoc and e_rule and right_assoc and nilpotent and injective}


def suite_coherence(cfg: Config, seed: int) -> dict:
    return coherence.coherence_report(min(cfg.max_deg, 2), cfg.ring)


def suite_sam(cfg: Config, seed: int) -> dict:
    rng = random.Random(seed)
    S = SnAlgebra(1, cfg.ring)
    seqs = [resolution.sam_sequence_check(d, cfg.ring) for d in range(min(cfg.max_deg, 4) + 1)]
    decomp = [resolution.decomposition_check(random_element(rng, S, 3)) for _ in range(50)]
    return {"sequences": [{"d": s["d"], "passed": s["passed"]} for s in seqs],
            "decompositions_checked": len(decomp),
            "passed": all(s["passed"] for s in seqs) and all(r["passed"] for r in decomp)}


_RUNNERS = {
    "oracle": suite_oracle, "delta": suite_delta, "identities": suite_identities,
    "regularity": suite_regularity, "normality": suite_normality,
    "non-normality": suite_non_normality, "tau": suite_tau, "t2": suite_t2,
    "actions": suite_actions, "coherence": suite_coherence, "sam": suite_sam,
}


def verify_all(cfg: Config, seed: int = 0, suites=SUITES) -> tuple[int, dict]:
    """Run the selected suites; returns (exit code, report).  Exit code 0 iff all pass.

    Raises :class:`FieldRequiredError` up front if a selected suite needs a
    field and the configured ring is not one.
    """
    unknown = [s for s in suites if s not in _RUNNERS]
    if unknown:
        raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
    needs_field = [s for s in suites if s in FIELD_SUITES]
    if needs_field and not cfg.ring.is_field:
        raise FieldRequiredError(
            f"field required: suites {', '.join(needs_field)} need Q or Z/p, got {cfg.ring}")
    results = {}
    for name in suites:
        results[name] = _RUNNERS[name](cfg, seed)
    passed = all(r["passed"] for r in results.values())
    report = {"ring": str(cfg.ring), "max_deg": cfg.max_deg, "seed": seed,
              "suites": results, "passed": passed}
    return (0 if passed else 1), report
