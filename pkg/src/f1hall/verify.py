"""Exhaustive verification of the Hall algebra and Hall module identities.

Every check walks all basis instances inside a cap, in order of increasing
total dimension and then encoding, and records failures as data.  The first
recorded failure is therefore a minimal witness.
"""

from __future__ import annotations

import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from f1hall import f1vect
from f1hall.f1vect import PartialInjection
from f1hall.forms import (
    SymmetricForm,
    canonical_isometry_class,
    hyperbolic,
    is_isotropic,
    isotropics,
    orthogonal_sum,
    perp,
    reduce,
)
from f1hall.hall import HallAlgebra
from f1hall.hallmod import HallModule, coefficient_table
from f1hall.lincomb import LinComb, linear_sum
from f1hall.quiverrep import (
    DimVector,
    Quiver,
    Rep,
    add_dims,
    complement,
    dims_below,
    dims_leq,
    quotient,
    restrict,
    subrepresentations,
    validate,
)

MAX_STORED_FAILURES = 10
MAX_LOGGED_ZEROS = 50


@dataclass(frozen=True)
class Cap:
    """Component-wise bound on dimension vectors, optionally with a total bound."""

    bound: DimVector
    total: int | None = None

    @classmethod
    def total_only(cls, quiver: Quiver, total: int) -> Cap:
        return cls((total,) * len(quiver.vertices), total)

    def admits(self, d: DimVector) -> bool:
        return dims_leq(d, self.bound) and (self.total is None or sum(d) <= self.total)

    def grades(self) -> list[DimVector]:
        return [d for d in dims_below(self.bound) if self.admits(d)]

    def to_json(self) -> dict:
        return {"bound": list(self.bound), "total": self.total}


@dataclass
class CheckReport:
    check: str
    statement: str
    quiver: str
    cap: Cap
    instances: int = 0
    failure_count: int = 0
    failures: list[dict] = field(default_factory=list)
    notes: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def tick(self) -> None:
        self.instances += 1

    def expect(self, identity: str, inputs: Any, expected: Any, actual: Any) -> bool:
        self.instances += 1
        if expected == actual:
            return True
        self.failure_count += 1
        if len(self.failures) < MAX_STORED_FAILURES:
            self.failures.append(
                {
                    "identity": identity,
                    "inputs": _render(inputs),
                    "expected": _render(expected),
                    "actual": _render(actual),
                }
            )
        return False

    def to_json(self, timings: bool = False) -> dict:
        out = {
            "check": self.check,
            "statement": self.statement,
            "quiver": self.quiver,
            "cap": self.cap.to_json(),
            "instances": self.instances,
            "passed": self.passed,
            "failure_count": self.failure_count,
            "failures": self.failures,
            "notes": self.notes,
        }
        if timings:
            out["wall_time"] = round(self.wall_time, 3)
        return out


def _render(x: Any) -> Any:
    if isinstance(x, LinComb):
        return [{"term": k, "coeff": f"{c.numerator}/{c.denominator}"} for k, c in coefficient_table(x)]
    if isinstance(x, (Rep, SymmetricForm)):
        return x.encode()
    if isinstance(x, (tuple, list)):
        return [_render(v) for v in x]
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    return x


def _basis(k) -> LinComb:
    return LinComb.basis(k)


def _by_size(items: Iterable[tuple]) -> list[tuple]:
    """Sort instance tuples by total dimension, then encoding."""
    return sorted(items, key=lambda t: (sum(x.total_dim for x in t), tuple(x.key for x in t)))


class Context:
    """Algebra and module for one quiver with shared caches."""

    def __init__(self, quiver: Quiver) -> None:
        problems = validate(quiver)
        if problems:
            raise ValueError("invalid involution: " + "; ".join(problems))
        self.quiver = quiver
        self.alg = HallAlgebra(quiver)
        self.mod = HallModule(self.alg)

    @property
    def name(self) -> str:
        return self.quiver.name or ",".join(self.quiver.vertices)

    def classes(self, cap: Cap) -> list[Rep]:
        return [w for d in cap.grades() for w in self.alg.classes(d)]

    def hall_pairs(self, cap: Cap) -> list[tuple[Rep, Rep]]:
        cls = self.classes(cap)
        return _by_size((u, v) for u in cls for v in cls if cap.admits(add_dims(u.dims, v.dims)))

    def forms(self, cap: Cap) -> list[SymmetricForm]:
        return [m for e in cap.grades() for m in self.mod.forms(e) if self.quiver.is_symmetric_dims(e)]

    def module_pairs(self, cap: Cap) -> list[tuple[Rep, SymmetricForm]]:
        q = self.quiver
        return _by_size(
            (u, m)
            for u in self.classes(cap)
            for m in self.forms(cap)
            if cap.admits(add_dims(q.hyperbolic_dims(u.dims), m.dims))
        )


# ---------------------------------------------------------------------------
# checks


def verify_bialgebra(ctx: Context, cap: Cap) -> CheckReport:
    alg = ctx.alg
    rep = CheckReport("bialgebra", CHECKS["bialgebra"][1], ctx.name, cap)
    one = alg.zero_class()
    rep.expect("coproduct of unit", [one], _basis((one, one)), alg.coproduct(alg.unit()))
    for u, v in ctx.hall_pairs(cap):
        x, y = _basis(u), _basis(v)
        rep.expect(
            "coproduct is multiplicative",
            [u, v],
            alg.tensor_product(alg.coproduct(x), alg.coproduct(y)),
            alg.coproduct(alg.product(x, y)),
        )
    for w in ctx.classes(cap):
        dw = alg.coproduct(_basis(w))
        rep.expect(
            "coassociativity",
            [w],
            alg.tensor_map(dw, 0, lambda k: alg.coproduct(_basis(k))),
            alg.tensor_map(dw, 1, lambda k: alg.coproduct(_basis(k))),
        )
        rep.expect("cocommutativity", [w], dw, dw.map_keys(lambda k: (k[1], k[0])))
        left = linear_sum([LinComb.basis(k[1]) * c for k, c in dw.items() if k[0] == one])
        right = linear_sum([LinComb.basis(k[0]) * c for k, c in dw.items() if k[1] == one])
        rep.expect("left counit", [w], _basis(w), left)
        rep.expect("right counit", [w], _basis(w), right)
        rep.expect("counit on grade 0", [w], Fraction(int(w == one)), alg.counit(_basis(w)))
    for u, v in ctx.hall_pairs(cap):
        for w in ctx.classes(cap):
            if not cap.admits(add_dims(add_dims(u.dims, v.dims), w.dims)):
                continue
            x, y, z = _basis(u), _basis(v), _basis(w)
            rep.expect(
                "associativity",
                [u, v, w],
                alg.product(x, alg.product(y, z)),
                alg.product(alg.product(x, y), z),
            )
    return rep


def verify_yd(ctx: Context, cap: Cap) -> CheckReport:
    alg, mod = ctx.alg, ctx.mod
    rep = CheckReport("yetter_drinfeld", CHECKS["yetter_drinfeld"][1], ctx.name, cap)
    for u, m in ctx.module_pairs(cap):
        x, xi = _basis(u), _basis(m)
        rep.expect(
            "coaction of action",
            [u, m],
            mod.star_p(alg.coproduct2(x), mod.coact(xi)),
            mod.coact(mod.act(x, xi)),
        )
    return rep


def coaction_by_definition(ctx: Context, cap: Cap) -> dict[SymmetricForm, LinComb]:
    """``ρ`` on every form in the cap, straight from ``H(U) ⊕ M ≅_P N``."""
    q = ctx.quiver
    out: dict[SymmetricForm, set] = {n: set() for n in ctx.forms(cap)}
    for u in ctx.classes(cap):
        hu = hyperbolic(u)
        for m in ctx.forms(cap):
            if cap.admits(add_dims(q.hyperbolic_dims(u.dims), m.dims)):
                n = canonical_isometry_class(orthogonal_sum(hu, m))
                out[n].add((u, m))
    return {n: LinComb((um, 1) for um in pairs) for n, pairs in out.items()}


def verify_module_comodule(ctx: Context, cap: Cap) -> CheckReport:
    alg, mod = ctx.alg, ctx.mod
    q = ctx.quiver
    rep = CheckReport("module_comodule", CHECKS["module_comodule"][1], ctx.name, cap)
    one = alg.zero_class()
    for m in ctx.forms(cap):
        rep.expect("unit acts trivially", [m], _basis(m), mod.act(alg.unit(), _basis(m)))
    for u, v in ctx.hall_pairs(cap):
        huv = add_dims(q.hyperbolic_dims(u.dims), q.hyperbolic_dims(v.dims))
        for m in ctx.forms(cap):
            if not cap.admits(add_dims(huv, m.dims)):
                continue
            x, y, xi = _basis(u), _basis(v), _basis(m)
            rep.expect(
                "module associativity",
                [u, v, m],
                mod.act(x, mod.act(y, xi)),
                mod.act(alg.product(x, y), xi),
            )
    by_definition = coaction_by_definition(ctx, cap)
    for n in ctx.forms(cap):
        rho = mod.coact(_basis(n))
        rep.expect("coaction matches its definition", [n], by_definition[n], rho)
        rep.expect(
            "comodule coassociativity",
            [n],
            alg.tensor_map(rho, 1, lambda k: mod.coact(_basis(k))),
            alg.tensor_map(rho, 0, lambda k: alg.coproduct(_basis(k))),
        )
        counit = linear_sum([LinComb.basis(k[1]) * c for k, c in rho.items() if k[0] == one])
        rep.expect("comodule counit", [n], _basis(n), counit)
        rep.expect(
            "coaction invariant under duality",
            [n],
            rho,
            rho.map_keys(lambda k: (alg.dual_class(k[0]), k[1])),
        )
    return rep


def verify_duality(ctx: Context, cap: Cap) -> CheckReport:
    alg = ctx.alg
    rep = CheckReport("duality", CHECKS["duality"][1], ctx.name, cap)
    P = alg.dual_class
    for w in ctx.classes(cap):
        rep.expect("duality is an involution", [w], w, P(P(w)))
        for du in dims_below(w.dims):
            dv = tuple(a - b for a, b in zip(w.dims, du))
            for u in alg.classes(du):
                for v in alg.classes(dv):
                    rep.expect(
                        "Hall numbers reverse under duality",
                        [u, v, w],
                        alg.hall_number(u, v, w),
                        alg.hall_number(P(v), P(u), P(w)),
                    )
        dw = alg.coproduct(_basis(w))
        rep.expect(
            "duality preserves the coproduct",
            [w],
            dw.map_keys(lambda k: (P(k[0]), P(k[1]))),
            alg.coproduct(_basis(P(w))),
        )
    for u, v in ctx.hall_pairs(cap):
        x, y = _basis(u), _basis(v)
        rep.expect(
            "duality reverses products",
            [u, v],
            alg.product(alg.p_involution(y), alg.p_involution(x)),
            alg.p_involution(alg.product(x, y)),
        )
    prims = alg.primitive_basis(cap.bound)
    prims = [j for j in prims if cap.admits(j.dims)]
    for a, b in itertools.product(prims, repeat=2):
        if not cap.admits(add_dims(a.dims, b.dims)):
            continue
        x, y = _basis(a), _basis(b)
        rep.expect(
            "duality is a Lie anti-involution on primitives",
            [a, b],
            -alg.bracket(alg.p_involution(x), alg.p_involution(y)),
            alg.p_involution(alg.bracket(x, y)),
        )
    plus, minus = _pm(ctx, cap)
    for (s, x), (t, y) in itertools.product(minus, minus):
        if cap.admits(add_dims(s, t)):
            z = alg.bracket(x, y)
            rep.expect("[-,-] is primitive", [x, y], True, alg.is_primitive(z))
            rep.expect("[-,-] is anti-invariant", [x, y], -z, alg.p_involution(z))
    for (s, x), (t, y) in itertools.product(minus, plus):
        if cap.admits(add_dims(s, t)):
            z = alg.bracket(x, y)
            rep.expect("[-,+] is primitive", [x, y], True, alg.is_primitive(z))
            rep.expect("[-,+] is invariant", [x, y], z, alg.p_involution(z))
    return rep


def _pm(ctx: Context, cap: Cap) -> tuple[list, list]:
    """The ± primitive bases inside the cap, each element paired with its grade."""
    plus, minus = ctx.alg.split_pm(cap.bound)

    def grade(x: LinComb) -> DimVector:
        return next(iter(x)).dims

    return (
        [(grade(x), x) for x in plus if cap.admits(grade(x))],
        [(grade(x), x) for x in minus if cap.admits(grade(x))],
    )


def _dual_copy(x: Rep, subset_of_x_by_vertex: list[list[int]]) -> tuple[tuple[int, ...], ...]:
    """Indices in ``H(x)`` of the dual-copy elements lying over the given elements of ``x``."""
    vm = x.quiver.sigma.vertex_map
    return tuple(
        tuple(sorted(x.dims[i] + y for y in subset_of_x_by_vertex[vm[i]])) for i in range(len(x.dims))
    )


def _merge(a, b):
    return tuple(tuple(sorted(set(p) | set(q))) for p, q in zip(a, b))


def _factors_through_quotient(x: Rep, s1, k) -> bool:
    """Whether ``X ↠ X/K`` factors through ``X ↠ X/S1`` as a morphism of representations.

    The only candidate is forced on elements outside ``S1``; it must send
    the collapsed elements to the basepoint and commute with the arrows.
    """
    q1 = quotient(x, s1)
    qk = quotient(x, k)
    keep1 = complement(x.dims, s1)
    keepk = complement(x.dims, k)
    idx1 = [{old: new for new, old in enumerate(ks)} for ks in keep1]
    idxk = [{old: new for new, old in enumerate(ks)} for ks in keepk]
    g = []
    for v in range(len(x.dims)):
        # the composite must agree with π on every element of X
        for e in s1[v]:
            if e in idxk[v]:
                return False
        g.append(
            PartialInjection(
                q1.dims[v],
                qk.dims[v],
                tuple((idx1[v][e], idxk[v][e]) for e in keep1[v] if e in idxk[v]),
            )
        )
    for a, m1, mk in zip(x.quiver.arrows, q1.maps, qk.maps):
        if f1vect.compose(m1, g[a.tgt]) != f1vect.compose(g[a.src], mk):
            return False
    return True


def verify_reduction_lemmas(ctx: Context, cap: Cap, x_total: int = 3) -> CheckReport:
    rep = CheckReport("reduction_lemmas", CHECKS["reduction_lemmas"][1], ctx.name, cap)
    rep.notes["x_total"] = x_total
    xs = [
        w
        for d in dims_below((x_total,) * len(ctx.quiver.vertices))
        if sum(d) <= x_total
        for w in ctx.alg.classes(d)
    ]
    isotropic_instances = 0
    for x in xs:
        hx = hyperbolic(x)
        subs = subrepresentations(x)
        for s1, k in itertools.product(subs, subs):
            t = _merge(s1, _dual_copy(x, complement(x.dims, k)))
            iso = is_isotropic(hx, t)
            factors_ker = all(set(a) <= set(b) for a, b in zip(s1, k))
            factors_quot = _factors_through_quotient(x, s1, k)
            inputs = [x, str(s1), str(k)]
            rep.expect("isotropic iff inflation factors through kernel", inputs, factors_ker, iso)
            rep.expect("isotropic iff deflation factors through cokernel", inputs, factors_quot, iso)
            if not iso:
                continue
            isotropic_instances += 1
            rep.expect(
                "orthogonal is kernel plus dual of cokernel",
                inputs,
                _merge(k, _dual_copy(x, complement(x.dims, s1))),
                perp(hx, t),
            )
            ker = restrict(x, k)
            s1_in_k = tuple(tuple(k[v].index(e) for e in s1[v]) for v in range(len(k)))
            expected = canonical_isometry_class(hyperbolic(quotient(ker, s1_in_k)))
            rep.expect("reduction of a hyperbolic form", inputs, expected, canonical_isometry_class(reduce(hx, t)))
    rep.notes["isotropic_instances"] = isotropic_instances
    forms = ctx.forms(cap)
    for m1, m2 in _by_size((a, b) for a in forms for b in forms if cap.admits(add_dims(a.dims, b.dims))):
        n = orthogonal_sum(m1, m2)
        isos = isotropics(n)
        for u in isos:
            u1 = tuple(tuple(e for e in ks if e < m1.dims[v]) for v, ks in enumerate(u))
            u2 = tuple(tuple(e - m1.dims[v] for e in ks if e >= m1.dims[v]) for v, ks in enumerate(u))
            ok = is_isotropic(m1, u1) and is_isotropic(m2, u2)
            rep.expect("isotropics of orthogonal sums split", [m1, m2, str(u)], True, ok)
        rep.expect(
            "isotropics of orthogonal sums are products",
            [m1, m2],
            len(isotropics(m1)) * len(isotropics(m2)),
            len(isos),
        )
    return rep


def verify_coinv_action(ctx: Context, cap: Cap) -> CheckReport:
    alg, mod = ctx.alg, ctx.mod
    q = ctx.quiver
    rep = CheckReport("coinvariant_action", CHECKS["coinvariant_action"][1], ctx.name, cap)
    one = alg.zero_class()
    coinv = mod.coinvariant_basis(cap.bound)
    coinv = [m for m in coinv if cap.admits(m.dims)]
    coinv_set = set(coinv)
    for m in ctx.forms(cap):
        rep.expect("coinvariant basis", [m], m in coinv_set, mod.is_coinvariant(_basis(m)))
    zeros: list[list[str]] = []
    zero_count = 0

    def fits(grade: DimVector, *forms_: SymmetricForm) -> bool:
        total = q.hyperbolic_dims(grade)
        for f in forms_:
            total = add_dims(total, f.dims)
        return cap.admits(total)

    for j in alg.primitive_basis(cap.bound):
        u = _basis(j)
        for m in coinv:
            if not fits(j.dims, m):
                continue
            y = mod.act(u, _basis(m))
            expected = (u + alg.p_involution(u)).map_keys(lambda k: (k, m)) + y.map_keys(lambda k: (one, k))
            rep.expect("coaction of a primitive acting on a coinvariant", [j, m], expected, mod.coact(y))

    plus, minus = _pm(ctx, cap)
    for sign, basis in (("-", minus), ("+", plus)):
        for g, u in basis:
            for m in coinv:
                if not fits(g, m):
                    continue
                y = mod.act(u, _basis(m))
                if not y:
                    zero_count += 1
                    if len(zeros) < MAX_LOGGED_ZEROS:
                        zeros.append([sign, _render(u), m.encode()])
                    continue
                rep.expect(
                    f"u in V{sign} acting on a coinvariant",
                    [u, m],
                    sign == "-",
                    mod.is_coinvariant(y),
                )
    for (g, u), (h, v) in itertools.product(minus, minus):
        for m in coinv:
            if not fits(add_dims(g, h), m):
                continue
            xi = _basis(m)
            lhs = mod.act(alg.bracket(u, v), xi)
            rhs = mod.act(u, mod.act(v, xi)) - mod.act(v, mod.act(u, xi))
            rep.expect("Lie representation", [u, v, m], rhs, lhs)
    rep.notes["zero_results"] = zero_count
    rep.notes["zero_result_instances"] = zeros
    return rep


def verify_mm(ctx: Context, cap: Cap) -> CheckReport:
    rep = CheckReport("milnor_moore", CHECKS["milnor_moore"][1], ctx.name, cap)
    grades = []
    for g in ctx.alg.mm_graded_report(cap.bound):
        if not cap.admits(g.grade):
            continue
        rep.expect("rank of primitive monomials", [list(g.grade)], g.classes, g.rank)
        grades.append({"grade": list(g.grade), "classes": g.classes, "monomials": g.monomials, "rank": g.rank})
    rep.notes["grades"] = grades
    rep.notes["lower_central_series"] = [
        [{"grade": list(d), "dim": n} for d, n in sorted(term.items(), key=lambda kv: (sum(kv[0]), kv[0]))]
        for term in ctx.alg.lower_central_series(cap.bound)
    ]
    return rep


def verify_non_hopf(ctx: Context, cap: Cap) -> CheckReport:
    """Search for ``u, ξ`` with ``ρ(u ⋆ ξ) ≠ Δ(u) · ρ(ξ)``; passes iff one is found."""
    alg, mod = ctx.alg, ctx.mod
    rep = CheckReport("non_hopf", CHECKS["non_hopf"][1], ctx.name, cap)
    for u, m in ctx.module_pairs(cap):
        rep.tick()
        x, xi = _basis(u), _basis(m)
        lhs = mod.coact(mod.act(x, xi))
        rhs = mod.hopf_action(alg.coproduct(x), mod.coact(xi))
        if lhs != rhs:
            rep.notes["witness"] = {
                "u": u.encode(),
                "xi": m.encode(),
                "coaction_of_action": _render(lhs),
                "hopf_module_side": _render(rhs),
            }
            return rep
    rep.failure_count += 1
    rep.failures.append({"identity": "non-Hopf witness", "inputs": [], "expected": "a witness", "actual": "none found"})
    return rep


CHECKS: dict[str, tuple[Callable[..., CheckReport], str]] = {
    "bialgebra": (
        verify_bialgebra,
        "Hall product and split coproduct form a cocommutative bialgebra",
    ),
    "milnor_moore": (
        verify_mm,
        "ordered products of indecomposable classes span every graded piece of the Hall algebra",
    ),
    "duality": (
        verify_duality,
        "duality reverses Hall numbers and products, preserves the coproduct, "
        "anti-preserves brackets of primitives, and its sign spaces close under brackets",
    ),
    "module_comodule": (
        verify_module_comodule,
        "forms carry a Hall module and comodule structure whose coaction is invariant under duality",
    ),
    "yetter_drinfeld": (
        verify_yd,
        "coaction of u acting on xi equals the double coproduct of u acting on the coaction of xi "
        "through the duality-twisted action",
    ),
    "reduction_lemmas": (
        verify_reduction_lemmas,
        "reduction of H(X) by U1 + P(U2) is H(ker/U1); isotropics of orthogonal sums split",
    ),
    "coinvariant_action": (
        verify_coinv_action,
        "primitives preserve coinvariants exactly when duality negates them, giving a Lie representation",
    ),
    "non_hopf": (
        verify_non_hopf,
        "the Hall module is not a Hopf module over the split coproduct",
    ),
}


def run_check(name: str, quiver: Quiver, cap: Cap, ctx: Context | None = None, **kwargs: Any) -> CheckReport:
    if name not in CHECKS:
        raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    ctx = ctx or Context(quiver)
    start = time.perf_counter()
    report = CHECKS[name][0](ctx, cap, **kwargs)
    report.wall_time = time.perf_counter() - start
    return report


def _run_isolated(args: tuple) -> CheckReport:
    name, quiver, cap, kwargs = args
    return run_check(name, quiver, cap, **kwargs)


ALGEBRA_CHECKS = ("bialgebra", "milnor_moore", "duality")
DEFAULT_ALGEBRA_TOTAL = 5
DEFAULT_MODULE_TOTAL = 4


def default_cap(quiver: Quiver, name: str) -> Cap:
    """Total-dimension cap of 5 for algebra checks and 4 for module checks."""
    total = DEFAULT_ALGEBRA_TOTAL if name in ALGEBRA_CHECKS else DEFAULT_MODULE_TOTAL
    return Cap.total_only(quiver, total)


def run_plan(
    quiver: Quiver,
    plan: list[tuple[str, Cap]],
    jobs: int = 1,
    options: dict[str, dict] | None = None,
) -> list[CheckReport]:
    """Run ``(check, cap)`` pairs; reports come back in plan order whatever ``jobs`` is."""
    options = options or {}
    for name, _ in plan:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}; choose from {', '.join(CHECKS)}")
    if jobs > 1 and len(plan) > 1:
        Context(quiver)  # validate before forking
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_run_isolated, [(n, quiver, c, options.get(n, {})) for n, c in plan]))
    ctx = Context(quiver)
    return [run_check(n, quiver, c, ctx, **options.get(n, {})) for n, c in plan]


def verify_all(
    quiver: Quiver,
    cap: Cap | None = None,
    names: Iterable[str] | None = None,
    jobs: int = 1,
    options: dict[str, dict] | None = None,
) -> list[CheckReport]:
    """Run the named checks (all by default) in registry order.

    Without a cap each check gets its default from ``default_cap``.
    """
    names = list(names or CHECKS)
    plan = [(n, cap if cap is not None else default_cap(quiver, n)) for n in names]
    return run_plan(quiver, plan, jobs, options)


def reports_to_json(reports: list[CheckReport], timings: bool = False) -> str:
    return json.dumps([r.to_json(timings) for r in reports], sort_keys=True, indent=2, ensure_ascii=False)
