"""Property suites shared by the command line and the test-suite.

Each suite returns an ordered ``{name: bool}`` report.
"""
from __future__ import annotations

import random

from .envelope import DiagramHandle, PiEnvelope, round_trip_report
from .scalars import LaurentPoly, RatFunc, quantum_int


def random_scalar(rng: random.Random) -> RatFunc:
    coeffs = {rng.randint(-2, 2): rng.choice([-2, -1, 1, 2, 3]) for _ in range(rng.randint(1, 2))}
    return RatFunc(LaurentPoly(coeffs))


def random_morphism(rng: random.Random, m: int, n: int, eps: int = -1,
                    category: str = "stl", max_terms: int = 3):
    """A random linear combination of basis diagrams ``m → n``."""
    from . import brauer, tl

    mod, basis = (tl, tl.enumerate_basis) if category == "stl" else (brauer, brauer.enumerate_diagrams)
    ds = basis(m, n)
    out = None
    for d in rng.sample(ds, min(len(ds), rng.randint(1, max_terms))):
        term = random_scalar(rng) * mod.basis_morphism(d, eps)
        out = term if out is None else out + term
    return out


def _arity(rng: random.Random, parity_of: int, max_n: int) -> int:
    return rng.choice([k for k in range(max_n + 1) if k % 2 == parity_of % 2])


def random_interchange(count: int = 500, seed: int = 0, max_n: int = 4, eps: int = -1) -> int:
    """Failures of ``(f⊗g)∘(h⊗k) = (−1)^{|g||h|} (f∘h)⊗(g∘k)`` on random data."""
    rng = random.Random(seed)
    failures = 0
    for _ in range(count):
        a, c = rng.randint(0, max_n), rng.randint(0, max_n)
        p, r = _arity(rng, a, max_n), _arity(rng, c, max_n)
        b, d = _arity(rng, a, max_n), _arity(rng, c, max_n)
        f, g = random_morphism(rng, a, b, eps), random_morphism(rng, c, d, eps)
        h, k = random_morphism(rng, p, a, eps), random_morphism(rng, r, c, eps)
        lhs = f.tensor(g) @ h.tensor(k)
        rhs = (f @ h).tensor(g @ k)
        if g.parity * h.parity:
            rhs = -rhs
        failures += lhs != rhs
    return failures


def random_envelope_interchange(count: int = 100, seed: int = 0, max_n: int = 4,
                                eps: int = -1) -> int:
    """As :func:`random_interchange` inside the Π-envelope with random shifts."""
    rng = random.Random(seed)
    env = PiEnvelope(DiagramHandle(2 * max_n, "stl", eps))
    failures = 0

    def lift(m, n, a, b):
        return env.lift(random_morphism(rng, m, n, eps), a, b)

    for _ in range(count):
        sh = [rng.randint(0, 1) for _ in range(6)]
        a, c = rng.randint(0, max_n), rng.randint(0, max_n)
        p, r = _arity(rng, a, max_n), _arity(rng, c, max_n)
        b, d = _arity(rng, a, max_n), _arity(rng, c, max_n)
        # shifts: h: p[sh0] → a[sh1], f: a[sh1] → b[sh2], k: r[sh3] → c[sh4], g: c[sh4] → d[sh5]
        h, f = lift(p, a, sh[0], sh[1]), lift(a, b, sh[1], sh[2])
        k, g = lift(r, c, sh[3], sh[4]), lift(c, d, sh[4], sh[5])
        lhs = env.compose(env.tensor(f, g), env.tensor(h, k))
        rhs = env.tensor(env.compose(f, h), env.compose(g, k))
        if g.parity * h.parity:
            rhs = -rhs
        failures += lhs != rhs
    return failures


def relation_report(eps: int = -1) -> dict[str, bool]:
    from . import brauer, tl

    out = {f"stl: {k}": v for k, v in tl.relation_suite(eps).items()}
    out.update({f"sb: {k}": v for k, v in brauer.relation_suite(eps).items()})
    return out


def jw_report(max_n: int = 6, eps: int = -1) -> dict[str, bool]:
    """The projector identities for every ``n ≤ max_n``."""
    from . import jones_wenzl as J
    from .tl import identity

    r: dict[str, bool] = {}
    one = identity(1, eps)
    for n in range(1, max_n + 1):
        f = J.jw(n, eps)
        r[f"f_{n} idempotent"] = f @ f == f
        r[f"f_{n} killed by caps and cups"] = all(
            J.cap_annihilates(n, i, eps) and J.cup_annihilates(n, i, eps) for i in range(n - 1))
        ratio = RatFunc(quantum_int(n + 1, eps), quantum_int(n, eps))
        r[f"f_{n} partial closure"] = J.partial_closure(f) == -(ratio * J.jw(n - 1, eps))
        if n >= 2:
            g, u, v = J.gn(n, eps), J.un(n, eps), J.vn(n, eps)
            r[f"f_{n} split"] = J.jw(n - 1, eps).tensor(one) == f + g
            r[f"g_{n} idempotent"] = g @ g == g
            r[f"g_{n} orthogonal"] = (g @ f).is_zero() and (f @ g).is_zero()
            r[f"u_{n} v_{n} = g_{n}"] = u @ v == g
            r[f"v_{n} u_{n} = f_{n - 2}"] = v @ u == J.jw(n - 2, eps)
    return r


def osp_report(max_m: int = 6, max_k: int = 5, eps: int = -1) -> dict[str, bool]:
    from . import osp

    r = {f"relation on V({m})": osp.check_sl2_relation(osp.WeightModule(m, eps)) for m in range(max_m + 1)}
    r.update({f"relation on V^{k}": osp.check_sl2_relation(osp.tensor_power_module(k, eps))
              for k in range(1, max_k + 1)})
    r.update({f"equivariance: {k}": v for k, v in osp.equivariance_check(eps).items()})
    return r


def k0_report(max_n: int = 8, order: int = 20) -> dict[str, bool]:
    from . import k0, osp

    r = {}
    r["Clebsch-Gordan"] = all(
        k0.qint_xpi(n + 1) * k0.qint_xpi(m + 1) == k0.clebsch_gordan(n, m)
        for n in range(max_n + 1) for m in range(max_n + 1))
    r["generating function"] = k0.chebyshev_genfun_check(order)
    r["supercharacters"] = all(
        osp.supercharacter(osp.WeightModule(n)) == k0.qint_xpi(n + 1) for n in range(max_n + 1))
    r["decomposition of [2]^n"] = all(
        k0.decompose_in_basis(k0.k0_class_of_tensor_power(n)) == osp.decompose_tensor_power(n)
        and sum(mult * (w + 1) for w, _, mult in osp.decompose_tensor_power(n)) == 2 ** n
        for n in range(max_n + 3))
    return r


def envelope_report(max_n: int = 3, count: int = 100, seed: int = 0, eps: int = -1) -> dict[str, bool]:
    r = {"interchange with shifts": random_envelope_interchange(count, seed, eps=eps) == 0}
    env = PiEnvelope(DiagramHandle(max_n, "stl", eps))
    r.update({f"round trip: {k}": v for k, v in round_trip_report(env).items()})
    return r


def idempotent_report(max_n: int = 6, eps: int = -1) -> dict[str, bool]:
    from .k0 import jw_witnesses, verify_idempotent_equivalence

    return {f"(g_{n})^0_0 ~ (f_{n - 2})^1_1": verify_idempotent_equivalence(*jw_witnesses(n, eps))
            for n in range(2, max_n + 1)}

