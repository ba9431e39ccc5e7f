"""Acceptance suite: one test per criterion, each timed against its budget.

The terminal summary (see conftest.py) prints one PASS/FAIL line per criterion.
"""

import json
import random
import time
from fractions import Fraction
from itertools import combinations_with_replacement, product
from math import prod

import pytest

from wdcalc import levi, segments
from wdcalc.catalog import default_catalog, entry_from_json
from wdcalc.certcheck import check_certificate
from wdcalc.cuspidal import CuspidalDatum, SelfDual
from wdcalc.errors import CatalogError, DomainError
from wdcalc.expr import CuspidalRef, Product, Seg, St, Twist, parse_expr, print_expr
from wdcalc.levi import (
    DiscreteRep,
    LeviShape,
    all_shapes,
    candidate_levis_discrete,
    candidate_levis_generic,
    cert_to_json,
    excluded_discrete,
    middle_shape,
)
from wdcalc.lfactor import euler_eval, euler_pole_at, has_pole_at, l_expr_of, lgalois_product
from wdcalc.segments import Segment, bz_factors_product, bz_factors_single, linked, make_generic, steinberg_segment
from wdcalc.shalika import shalika_criterion
from wdcalc.sl2 import Sl2Sum, decompose_character, ext2, ext2_character, sp, sp_character, sym2, sym2_character
from wdcalc.weil_deligne import ext2_wd, wd_of_steinberg

CAT = default_catalog()
HALF_INTS = [Fraction(n, 2) for n in range(-20, 21)]


def _clear_caches():
    for f in (
        levi._excluded_generic,
        levi._generic_is_excluded,
        levi._excluded_discrete,
        segments._bz_factors_product,
        segments.distinct_factor_taus,
        segments.derivative,
    ):
        f.cache_clear()


@pytest.fixture
def timed(record_property):
    def run(label: str, limit: float, body):
        record_property("criterion", label)
        _clear_caches()
        t0 = time.perf_counter()
        body()
        elapsed = time.perf_counter() - t0
        record_property("timing", f"{elapsed:.2f}s (limit {limit:g}s)")
        assert elapsed < limit, f"{label}: {elapsed:.2f}s exceeds {limit}s"

    return run


def test_1_plethysm_vs_character(timed):
    def body():
        for k in range(1, 61):
            chi = sp_character(k)
            assert sym2(sp(k)) == decompose_character(sym2_character(chi))
            assert ext2(sp(k)) == decompose_character(ext2_character(chi))

    timed("1 plethysm vs character oracle", 1, body)


def test_2_dimension_conservation(timed):
    rng = random.Random(20261014)
    samples = []
    while len(samples) < 200:
        v = Sl2Sum({rng.randint(1, 12): rng.randint(1, 4) for _ in range(rng.randint(1, 4))})
        if v.dim <= 60:
            samples.append(v)

    def body():
        for v in samples:
            d = v.dim
            assert sym2(v).dim + ext2(v).dim == d * d
            assert sym2(v).dim == d * (d + 1) // 2

    timed("2 dimension conservation", 1, body)


def test_3_two_path_identity(timed):
    def body():
        for name, k in product(sorted(CAT), range(1, 13)):
            rho = CAT[name]
            assert l_expr_of(ext2_wd(wd_of_steinberg(rho, k))) == lgalois_product(rho, k), (name, k)

    timed("3 two-path L-factor identity", 1, body)


def test_4_explicit_atomic_poles(timed):
    chars = [CAT["chi_triv"], CAT["chi_sign"], CAT["chi_half"]]

    def body():
        # alpha = q^(1/2) cannot be declared unitary.
        with pytest.raises(DomainError, match="unitary"):
            CuspidalDatum.from_explicit("w", 1, 1, unitary=True)
        with pytest.raises(CatalogError, match="unitary"):
            entry_from_json({"name": "w", "dim": 1, "unitary": True, "explicit": {"c": "1", "m": 1}})
        for chi, k in product(chars, range(1, 9)):
            e = lgalois_product(chi, k)
            f = euler_eval(e)
            for s0 in HALF_INTS:
                assert has_pole_at(e, s0).has_pole == euler_pole_at(f, s0).has_pole, (chi.name, k, s0)

    timed("4 explicit vs atomic poles", 1, body)


def test_5_shalika_closed_form(timed):
    def body():
        checked = 0
        for name, k in product(sorted(CAT), range(1, 13)):
            rho = CAT[name]
            if not rho.unitary or rho.dim * k % 2:
                continue
            v = shalika_criterion(rho, k)
            closed = (k % 2 == 1 and rho.self_dual is SelfDual.EXT2) or (
                k % 2 == 0 and rho.self_dual is SelfDual.SYM2
            )
            assert v.has_model == closed, (name, k)
            assert v.has_model == has_pole_at(lgalois_product(rho, k), 0).has_pole, (name, k)
            checked += 1
        assert checked > 0

    timed("5 Shalika closed form", 1, body)


def test_6_levi_discrete(timed):
    def body():
        for r, k in product(range(1, 13), range(1, 13)):
            n = r * k
            if n > 12:
                continue
            d = DiscreteRep(f"rho{r}", r, k)
            assert candidate_levis_discrete(d) == ({LeviShape(n // 2, n // 2)} if n % 2 == 0 else set())
            rep = {"kind": "discrete", "rho": d.rho_name, "dim": r, "k": k}
            for shape in all_shapes(n):
                cert = excluded_discrete(d, shape)
                if cert is not None:
                    payload = json.loads(json.dumps(cert_to_json(cert)))
                    assert check_certificate(payload, rep, (shape.p, shape.q)) == cert.size()

    timed("6 Levi exclusion, discrete", 10, body)


# Two inequivalent characters, one cuspidal each of dim 2 and 3.  Segments of
# length 1..3 start at 0 (and at -1/2 for a and c), which mixes integer and
# half-integer offsets on the same cuspidal.
A, B = CuspidalDatum("a", 1), CuspidalDatum("b", 1)
C, D = CuspidalDatum("c", 2), CuspidalDatum("d", 3)
POOL = sorted(
    (
        Segment(rho, x, x + length - 1)
        for rho, lefts in ((A, (Fraction(-1, 2), 0)), (B, (0,)), (C, (Fraction(-1, 2), 0)), (D, (0,)))
        for x in map(Fraction, lefts)
        for length in (1, 2, 3)
    ),
    key=Segment.sort_key,
)


def unlinked_products(pool, max_n):
    def rec(start, cur, n):
        if cur:
            yield tuple(cur), n
        for i in range(start, len(pool)):
            s = pool[i]
            if n + s.size <= max_n and not any(linked(s, e) for e in cur):
                yield from rec(i, cur + [s], n + s.size)

    return rec(0, [], 0)


def test_7_levi_generic(timed):
    def body():
        one = CuspidalDatum("one", 1)
        eg = make_generic([steinberg_segment(one, 2), Segment(one, Fraction(0), Fraction(0))])
        assert candidate_levis_generic(eg) == {LeviShape(2, 1)}
        count = 0
        for segs, n in unlinked_products(POOL, 10):
            assert candidate_levis_generic(segs) == {middle_shape(n)}, segs
            count += 1
        assert count == 10492

    timed("7 Levi exclusion, generic", 60, body)


def test_8_filtration_enumeration(timed):
    pool = [
        Segment(rho, x, x + length - 1)
        for rho in (CAT["chi"], CAT["rho"])
        for x in (Fraction(0), Fraction(1, 2), Fraction(1))
        for length in (1, 2, 3)
    ]

    def body():
        for rho, k in product((CAT["chi"], CAT["rho"], CAT["sigma"]), range(1, 7)):
            r = rho.dim
            f = bz_factors_single(steinberg_segment(rho, k))
            assert len(f) == k
            for i, x in enumerate(f, start=1):
                assert x.phi_power == i * r - 1 and x.multiplicity == 1
                if i == k:
                    assert x.tau is None
                else:
                    assert x.tau == (steinberg_segment(rho, k - i),) and x.extra_twist == (Fraction(i, 2),)
        for t in (1, 2, 3):
            for segs in combinations_with_replacement(pool, t):
                f = bz_factors_product(segs)
                trivial = [x for x in f if x.tau is None]
                assert len(trivial) == 1 and trivial[0].multiplicity == 1
                assert len(f) == prod(s.length + 1 for s in segs) - 1

    timed("8 filtration enumeration", 1, body)


def _random_expr(rng: random.Random, depth: int):
    def ref():
        return CuspidalRef(rng.choice(["rho", "chi", "sigma_2", "_t", "Rho9"]))

    def half():
        return Fraction(rng.randint(-30, 30), 2)

    def leaf():
        kind = rng.randrange(3)
        if kind == 0:
            return ref()
        if kind == 1:
            return St(rng.randint(0, 40), ref())
        return Seg(ref(), half(), half())

    def term(d):
        if d <= 1 or rng.random() < 0.5:
            return leaf()
        return Twist(expr(d - 1), half())

    def expr(d):
        if d <= 1 or rng.random() < 0.6:
            return term(d)
        return Product(tuple(term(d - 1) for _ in range(rng.randint(2, 3))))

    return expr(depth)


def test_9_parser_and_catalog_validation(timed):
    rng = random.Random(7)
    asts = [_random_expr(rng, 5) for _ in range(500)]
    bad_entries = [
        ({"name": "bad", "dim": 2, "self_dual": ["sym2", "ext2"]}, "at most one self-duality type"),
        ({"name": "bad", "dim": 2, "self_dual": "both"}, "at most one self-duality type"),
        ({"name": "bad", "dim": 1, "unitary": True, "std_pole_shifts": ["1/2"]}, "unitary cuspidal cannot have a pole"),
        ({"name": "bad", "dim": 1, "unitary": True, "explicit": {"c": "1", "m": 1}}, "unitary cuspidal cannot have a pole"),
    ]

    def body():
        for e in asts:
            text = print_expr(e)
            assert parse_expr(text) == e, text
            assert print_expr(parse_expr(text)) == text
        for entry, invariant in bad_entries:
            with pytest.raises(CatalogError, match=invariant):
                entry_from_json(entry)

    timed("9 parser round trip, catalog validation", 1, body)
