"""Named verification targets shared by the CLI and the acceptance tests.

Each target maps an options dict to a list of VerificationReport. Options:
``type`` (Cartan name or CartanData), ``cox`` (0-based word, or None for all
Coxeter words), ``max_coeff``, ``bound``, ``n``, ``kind``, ``seed``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable

from . import level0
from .cambrian import (
    FanViolation,
    check_cone_reflection,
    cones_meet_properly,
    doubled_fan,
    fan_membership,
    is_c_sortable,
    ray_cone_key,
    sortable_elements,
)
from .cluster import explorer, opposite_seed_check
from .report import VerificationReport, equal_or_witness, run_check
from .roots import FINITE_TYPES, CartanData, cartan, check_coxeter_word, weyl_elements
from .typea import verify as typea


def resolve_type(value) -> CartanData:
    return value if isinstance(value, CartanData) else cartan(value)


def coxeter_words(cd: CartanData, cox=None) -> list[tuple[int, ...]]:
    if cox is not None:
        return [check_coxeter_word(cd, cox)]
    return list(itertools.permutations(range(cd.n)))


def _inst(cd, c_word, **extra):
    out = {"type": cd.name, "cox": [i + 1 for i in c_word]}
    out.update(extra)
    return out


# combinatorial checks


def check_sortable_counts(cd: CartanData, c_word, bound: int = 12) -> VerificationReport:
    """Sortable elements versus seeds of the mutation class (finite type)."""

    def run():
        sortables = sortable_elements(cd, c_word, bound)
        ex = explorer(cd, c_word)
        ex.expand_to(bound)
        if not ex.closed:
            return False, {"reason": f"mutation class not closed within depth {bound}"}
        return equal_or_witness(len(sortables), len(ex.seeds), ("sortables", "seeds"))

    return run_check("sortable-count", _inst(cd, c_word), run)


def check_gvector_fan(cd: CartanData, c_word, bound: int = 12) -> VerificationReport:
    """Maximal cones of the doubled fan are exactly the g-vector cones of seeds."""

    def run():
        cones = {ray_cone_key(cone.generators) for cone in doubled_fan(cd, c_word, bound)}
        ex = explorer(cd, c_word)
        ex.expand_to(bound)
        seeds = {ray_cone_key(seed.gvecs) for seed in ex.seeds.values()}
        if cones == seeds:
            return True, None
        fmt = lambda keys: [sorted(k) for k in sorted(keys, key=sorted)]
        return False, {"fan_only": fmt(cones - seeds), "seed_only": fmt(seeds - cones)}

    return run_check("gvector-fan", _inst(cd, c_word, bound=bound), run)


def check_fan_axiom(cd: CartanData, c_word, bound: int) -> VerificationReport:
    def run():
        unique = {}
        for cone in doubled_fan(cd, c_word, bound):
            unique.setdefault(cone.rays, cone)
        cones = list(unique.values())
        for first, second in itertools.permutations(cones, 2):
            ok, witness = cones_meet_properly(first, second)
            if not ok:
                return False, {"first": first.describe(), "second": second.describe(), **witness}
        return True, None

    return run_check("fan-axiom", _inst(cd, c_word, bound=bound), run)


def check_cone_reflections(cd: CartanData, c_word, bound: int = 8) -> list[VerificationReport]:
    out = []
    first = c_word[0]
    for w in weyl_elements(cd, bound):
        if not w.is_left_descent(first) or not is_c_sortable(cd, c_word, w):
            continue

        def run(w=w):
            ok, witness = check_cone_reflection(cd, c_word, w)
            return ok, {k: [list(r) for r in v] for k, v in witness.items()}

        out.append(run_check("cone-reflection", _inst(cd, c_word, w=[i + 1 for i in w.reduced_word]), run))
    return out


def check_opposite_seed(cd: CartanData, c_word) -> VerificationReport:
    return run_check(
        "opposite-seed",
        _inst(cd, c_word),
        lambda: (opposite_seed_check(cd, c_word), {"reason": "g-vectors of the opposite seed are not the negative fundamentals"}),
    )


def check_negative_control(cd: CartanData, c_word, lam, bound: int = 12) -> list[VerificationReport]:
    """A weight expected outside the fan: no cone and no cluster monomial."""
    lam = tuple(lam)

    def in_cones():
        hit = fan_membership(cd, c_word, lam, bound)
        if hit is None:
            return True, None
        cone, coords = hit
        return False, {"cone": cone.describe(), "coordinates": [str(x) for x in coords]}

    def in_seeds():
        mono = explorer(cd, c_word).find(lam, bound)
        if mono is None:
            return True, None
        return False, {"monomial": str(mono.value)}

    inst = _inst(cd, c_word, gvec=list(lam), bound=bound)
    return [run_check("not-in-fan", inst, in_cones), run_check("not-a-cluster-monomial", inst, in_seeds)]


# the registry


@dataclass(frozen=True)
class Target:
    name: str
    covers: str
    defaults: dict
    runner: Callable[[dict], list[VerificationReport]]


def _per_word(fn):
    def runner(opts):
        cd = resolve_type(opts["type"])
        out = []
        for c_word in coxeter_words(cd, opts.get("cox")):
            res = fn(cd, c_word, opts)
            out.extend(res if isinstance(res, list) else [res])
        return out

    runner.per_word = True
    return runner


def _thm_main(cd, c_word, opts):
    if opts.get("max_coeff") is None:
        gvecs = typea.cluster_variable_gvecs(cd, c_word)
    else:
        gvecs = typea.box_weights(cd.n, opts["max_coeff"])
    return typea.verify_main_theorem(cd, c_word, gvecs)


def _projection(cd, c_word, opts):
    return typea.check_projection_independence(cd, c_word, typea.box_weights(cd.n, opts.get("max_coeff") or 2))


def _shuffles(cd, c_word, opts):
    return typea.check_shuffle_independence(cd, c_word, typea.box_weights(cd.n, opts.get("max_coeff") or 1))


def _fan(cd, c_word, opts):
    bound = opts.get("bound") or 8
    out = []
    if cd.name in FINITE_TYPES:
        out += [check_sortable_counts(cd, c_word), check_gvector_fan(cd, c_word), check_opposite_seed(cd, c_word)]
    out.append(check_fan_axiom(cd, c_word, min(bound, 6)))
    return out


def _basis(opts):
    kinds = level0.KINDS if opts.get("kind") in (None, "all") else (opts["kind"],)
    ns = [opts["n"]] if opts.get("n") else range(1, 6)
    out = []
    for kind in kinds:
        for n in ns:
            out += level0.verify_basis(kind, n) + [level0.verify_unitriangular(kind, n)]
    return out


def _minor_formula(opts):
    ns = [opts["n"]] if opts.get("n") else range(1, 5)
    out = []
    for n in ns:
        out += level0.verify_minor_formula(n, seed=opts.get("seed") or 0) + level0.verify_d_boundary(n)
    return out


def _negative(opts):
    cd = resolve_type(opts["type"])
    out = []
    for c_word in coxeter_words(cd, opts.get("cox")):
        out += check_negative_control(cd, c_word, opts.get("gvec") or (-1, 1), opts.get("bound") or 12)
    return out


TARGETS: dict[str, Target] = {
    t.name: t
    for t in [
        Target(
            "thm-main",
            "every cluster monomial equals the extremal minor of its g-vector on the generic cell point",
            {"type": "A2"},
            _per_word(_thm_main),
        ),
        Target(
            "projection",
            "minors do not depend on the choice of extremal vector, projection or module model",
            {"type": "A2"},
            _per_word(_projection),
        ),
        Target(
            "shuffles",
            "the identification holds on every factorization order of the cell",
            {"type": "A2"},
            _per_word(_shuffles),
        ),
        Target(
            "intro-example",
            "on SL3 the 2x2 minor agrees with a product of principal minors exactly on tridiagonal points",
            {},
            lambda opts: typea.check_intro_example(),
        ),
        Target(
            "exchange",
            "initial and opposite cluster variables are minors and satisfy the acyclic exchange relations",
            {"type": "A2"},
            _per_word(lambda cd, c, o: typea.check_exchange_relations(cd, c)),
        ),
        Target(
            "psi",
            "frozen and cluster variables pulled back along the sink-source rewriting; round trip and involution",
            {"type": "A2"},
            _per_word(lambda cd, c, o: typea.check_psi_pullbacks(cd, c) + typea.check_psi_inverse(cd, c)),
        ),
        Target(
            "psi-minors",
            "minors at s lambda pulled back along the rewriting at the first and last letter of c",
            {"type": "A2"},
            _per_word(lambda cd, c, o: typea.check_psi_minors(cd, c)),
        ),
        Target(
            "root-subgroups",
            "minors are invariant under left/right root subgroups of the appropriate sign",
            {"type": "A2"},
            lambda opts: typea.check_one_extra_step(resolve_type(opts["type"])),
        ),
        Target(
            "lift",
            "conjugation by any torus translate of the lift gives the same minor",
            {"type": "A2"},
            _per_word(lambda cd, c, o: typea.check_lift_independence(cd, c, 20, o.get("seed") or 0)),
        ),
        Target(
            "eta",
            "frozens, cluster variables, minors and monomials factor through the corank-one restrictions",
            {"type": "A3"},
            _per_word(lambda cd, c, o: typea.check_eta_pullbacks(cd, c) + typea.check_corank_one_factorizations(cd, c)),
        ),
        Target(
            "fan",
            "sortable counts, g-vector cones and the fan intersection property of the doubled Cambrian fan",
            {"type": "A2", "bound": 8},
            _per_word(_fan),
        ),
        Target(
            "cone-reflection",
            "reflecting a Cambrian cone by the initial letter gives the cone for the rotated Coxeter word",
            {"type": "A2", "bound": 8},
            _per_word(lambda cd, c, o: check_cone_reflections(cd, c, o.get("bound") or 8)),
        ),
        Target(
            "negative-control",
            "the null root direction of the affine rank-two type lies in no cone and labels no cluster monomial",
            {"type": "A1~", "cox": (0, 1), "gvec": (-1, 1), "bound": 12},
            _negative,
        ),
        Target(
            "minor-formula",
            "the level-zero principal minor equals its closed double sum with brute-force S",
            {},
            _minor_formula,
        ),
        Target(
            "basis",
            "greedy, triangular and generic coefficients from elementary symmetric constraints",
            {"kind": "all"},
            _basis,
        ),
        Target(
            "remark-identity",
            "e_n d(m,0) = e_m e_(n-m) in the elementary basis",
            {},
            lambda opts: level0.verify_remark_identity(opts.get("n") or 5),
        ),
        Target(
            "binomial",
            "the alternating binomial convolution identity for a <= 12",
            {},
            lambda opts: [level0.verify_binomial_identity(opts.get("bound") or 12)],
        ),
    ]
}


def splits_by_word(name: str) -> bool:
    return getattr(TARGETS[name].runner, "per_word", False)


def run_target(name: str, opts: dict | None = None) -> list[VerificationReport]:
    if name not in TARGETS:
        raise KeyError(f"unknown check {name!r}")
    target = TARGETS[name]
    merged = dict(target.defaults)
    merged.update({k: v for k, v in (opts or {}).items() if v is not None})
    return target.runner(merged)


def manifest() -> list[dict]:
    return [{"target": t.name, "covers": t.covers, "defaults": _jsonable(t.defaults)} for t in TARGETS.values()]


def _jsonable(opts: dict) -> dict:
    out = {}
    for k, v in opts.items():
        if k == "cox" and v is not None:
            v = [i + 1 for i in v]
        elif isinstance(v, tuple):
            v = list(v)
        out[k] = v
    return out


__all__ = ["TARGETS", "Target", "run_target", "manifest", "FanViolation"]
