import copy
import inspect
import json
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from wdcalc import certcheck
from wdcalc.certcheck import check_certificate, expected_reduction
from wdcalc.cuspidal import CuspidalDatum, SelfDual
from wdcalc.errors import CertificateError, DomainError
from wdcalc.levi import (
    DiscreteRep,
    LeviShape,
    Rule,
    all_shapes,
    candidate_levis_discrete,
    candidate_levis_generic,
    cert_to_json,
    excluded_discrete,
    excluded_generic,
    homsteak_target,
    levi_report,
    middle_shape,
    reduce_shapes,
    repr_json,
)
from wdcalc.segments import Segment, linked, make_generic, steinberg_segment

RHO = CuspidalDatum("rho", 2, True, SelfDual.EXT2)
ONE = CuspidalDatum("one", 1)
CHI = CuspidalDatum("chi", 1)
CHI2 = CuspidalDatum("chi2", 1)


def seg(rho, a, b):
    return Segment(rho, Fraction(a), Fraction(b))


def walk_json(node):
    yield node
    for c in node.get("children", []):
        yield from walk_json(c)


def test_shape_validation():
    assert LeviShape(3, 1).n == 4 and LeviShape(3, 1).gap == 2
    assert str(LeviShape(2, 1)) == "(2,1)"
    assert middle_shape(5) == LeviShape(3, 2) and middle_shape(4) == LeviShape(2, 2)
    assert all_shapes(4) == [LeviShape(4, 0), LeviShape(3, 1), LeviShape(2, 2)]
    for p, q in [(1, 2), (0, 0), (2, -1)]:
        with pytest.raises(DomainError):
            LeviShape(p, q)


def test_reduce_shapes_examples():
    assert reduce_shapes(LeviShape(3, 1), 2) == LeviShape(2, 0)
    assert reduce_shapes(LeviShape(4, 2), 2) == LeviShape(3, 1)
    assert reduce_shapes(LeviShape(3, 1), 1) == LeviShape(3, 0)
    assert reduce_shapes(LeviShape(3, 1), 3) is None  # second Phi+ step meets G_2 with no H-part left
    assert reduce_shapes(LeviShape(4, 0), 1) == LeviShape(3, 0)
    assert reduce_shapes(LeviShape(4, 0), 2) is None
    with pytest.raises(DomainError):
        reduce_shapes(LeviShape(2, 2), 0)


shapes = st.builds(lambda q, g: LeviShape(q + g, q), st.integers(0, 8), st.integers(1, 8)) | st.builds(
    lambda q: LeviShape(q, q), st.integers(1, 8)
)


@settings(max_examples=400, deadline=None)
@given(shapes, st.integers(1, 16))
def test_reduce_shapes_closed_form(shape, steps):
    red = reduce_shapes(shape, steps)
    expected = expected_reduction(shape.p, shape.q, steps)
    assert (None if red is None else (red.p, red.q)) == expected
    if red is not None:
        assert red.n == shape.n - steps
        if not (shape.q == 0 and steps == 1):
            assert red.gap >= shape.gap


@pytest.mark.parametrize("m", range(1, 7))
def test_homsteak_identity(m):
    for k in range(1, 2 * m):
        expect = LeviShape(k // 2, k // 2) if k % 2 == 0 else LeviShape((k + 1) // 2, (k - 1) // 2)
        assert homsteak_target(m, k) == expect


def test_discrete_examples():
    c = excluded_discrete(steinberg_segment(RHO, 1), LeviShape(2, 0))
    assert c is not None and c.rule is Rule.BASE_CUSPIDAL
    assert excluded_discrete(steinberg_segment(RHO, 2), LeviShape(2, 2)) is None
    c = excluded_discrete(steinberg_segment(RHO, 2), LeviShape(3, 1))
    assert c.rule is Rule.INDUCTION
    b1, b2 = c.children
    assert (b1.rule, b1.index, b1.steps, b1.reduced) == (Rule.RECURSE, (1,), 2, LeviShape(2, 0))
    assert b1.children[0].rule is Rule.BASE_CUSPIDAL
    assert (b2.rule, b2.index) == (Rule.HOM_ZERO, (2,))
    with pytest.raises(DomainError, match="size mismatch"):
        excluded_discrete(steinberg_segment(RHO, 2), LeviShape(3, 2))


def test_candidate_discrete_examples():
    assert candidate_levis_discrete(steinberg_segment(RHO, 2)) == {LeviShape(2, 2)}
    assert candidate_levis_discrete(steinberg_segment(CHI, 3)) == set()
    assert candidate_levis_discrete(steinberg_segment(RHO, 1)) == {LeviShape(1, 1)}


@pytest.mark.parametrize("r,k", [(r, k) for r in range(1, 13) for k in range(1, 13) if r * k <= 12])
def test_discrete_closed_form_and_certificates(r, k):
    d = DiscreteRep(f"rho{r}", r, k)
    n = d.n
    assert candidate_levis_discrete(d) == ({LeviShape(n // 2, n // 2)} if n % 2 == 0 else set())
    for shape in all_shapes(n):
        cert = excluded_discrete(d, shape)
        if cert is not None:
            payload = json.loads(json.dumps(cert_to_json(cert)))
            rep = {"kind": "discrete", "rho": d.rho_name, "dim": r, "k": k}
            assert check_certificate(payload, rep, (shape.p, shape.q)) == cert.size()


def test_generic_examples():
    st2 = steinberg_segment(ONE, 2)
    pi = make_generic([st2, seg(CHI, 0, 0)])
    assert candidate_levis_generic(pi) == {LeviShape(2, 1)}
    assert excluded_generic(pi, LeviShape(2, 1)) is None
    assert candidate_levis_generic(make_generic([steinberg_segment(RHO, 2)])) == {LeviShape(2, 2)}
    assert candidate_levis_generic(make_generic([seg(CHI, 0, 0), seg(CHI2, 0, 0)])) == {LeviShape(1, 1)}


def test_generic_input_checks():
    with pytest.raises(DomainError, match="linked"):
        candidate_levis_generic([seg(CHI, 0, 1), seg(CHI, 1, 2)])
    with pytest.raises(DomainError, match="unordered"):
        candidate_levis_generic([seg(CHI2, 0, 0), seg(CHI, 0, 0)])
    with pytest.raises(DomainError, match="not ordered"):
        excluded_generic([seg(CHI, 1, 1), seg(CHI, 0, 0)], LeviShape(2, 0))
    with pytest.raises(DomainError, match="size mismatch"):
        excluded_generic([seg(CHI, 0, 0)], LeviShape(2, 0))


def _generic_certs(segs):
    kind, rows = levi_report(segs)
    for shape, cert in rows:
        if cert is not None:
            yield shape, cert


SMALL_PRODUCTS = [
    [steinberg_segment(ONE, 2), seg(CHI, 0, 0)],
    [seg(CHI, 0, 0), seg(CHI, 0, 0), seg(CHI2, 0, 0), seg(CHI2, Fraction(1, 2), Fraction(1, 2))],
    [steinberg_segment(RHO, 2), seg(CHI, 0, 1)],
    [seg(CHI, 0, 2), seg(CHI, 1, 1), seg(CHI2, 0, 0)],
    [steinberg_segment(CuspidalDatum("sig", 3), 2), steinberg_segment(RHO, 1)],
]


@pytest.mark.parametrize("segs", SMALL_PRODUCTS, ids=range(len(SMALL_PRODUCTS)))
def test_generic_certificates_replay(segs):
    segs = make_generic(segs).segments
    n = sum(s.size for s in segs)
    assert candidate_levis_generic(segs) == {middle_shape(n)}
    for shape, cert in _generic_certs(segs):
        payload = cert_to_json(cert)
        assert check_certificate(payload, repr_json(("generic", *segs)), (shape.p, shape.q)) >= 1


def _paths(node):
    """(parent exclusion shape, child exclusion shape, steps) along every Recurse edge."""
    for b in node.children:
        if b.rule is Rule.RECURSE:
            child = b.children[0]
            yield node.shape, child.shape, b.steps
            yield from _paths(child)


@pytest.mark.parametrize("segs", SMALL_PRODUCTS + [[steinberg_segment(RHO, 4)], [steinberg_segment(CHI, 9)]])
def test_certificate_paths_shrink(segs):
    segs = make_generic(segs).segments if len(segs) > 1 else tuple(segs)
    for _, cert in _generic_certs(segs):
        for parent, child, steps in _paths(cert):
            assert child.n < parent.n
            assert child.gap >= 1
            if not (parent.q == 0 and steps == 1):
                assert child.gap >= parent.gap


# -- the checker --------------------------------------------------------------

def test_checker_is_independent():
    src = inspect.getsource(certcheck)
    for mod in ("levi", "segments", "weil_deligne", "lfactor"):
        assert f".{mod}" not in src


@pytest.fixture
def discrete_cert():
    return cert_to_json(excluded_discrete(DiscreteRep("rho", 2, 3), LeviShape(4, 2)))


@pytest.fixture
def generic_cert():
    segs = make_generic([seg(CHI, 0, 2), seg(CHI, 1, 1), seg(CHI2, 0, 0)]).segments
    return cert_to_json(excluded_generic(segs, LeviShape(4, 1)))


def _first(cert, rule):
    return next(n for n in walk_json(cert) if n.get("rule") == rule)


def _tamper_cases():
    def drop_branch(c):
        c["children"].pop()

    def bump_steps(c):
        _first(c, "Recurse")["steps"] += 1

    def wrong_reduced(c):
        r = _first(c, "Recurse")
        r["reduced"] = [r["reduced"][0] + 1, r["reduced"][1] - 1] if r["reduced"][1] else [r["reduced"][0] - 1, 0]

    def fake_axiom(c):
        c["rule"] = "BaseCuspidal"
        c.pop("children")

    def middle_shape_claim(c):
        c["shape"] = [3, 3]

    def vacuous_lie(c):
        r = _first(c, "Recurse")
        r["rule"] = "Vacuous"
        r.pop("children")
        r.pop("reduced")

    def homzero_lie(c):
        r = _first(c, "Recurse")
        r["rule"] = "HomZero"

    def child_rep(c):
        child = _first(c, "Recurse")["children"][0]
        child["rep"]["k"] = child["rep"].get("k", 1) + 1

    def duplicate(c):
        c["children"].append(copy.deepcopy(c["children"][0]))

    return [drop_branch, bump_steps, wrong_reduced, fake_axiom, middle_shape_claim, vacuous_lie, homzero_lie,
            child_rep, duplicate]


@pytest.mark.parametrize("tamper", _tamper_cases(), ids=lambda f: f.__name__)
def test_checker_rejects_tampered_discrete(discrete_cert, tamper):
    assert check_certificate(discrete_cert) > 1
    bad = copy.deepcopy(discrete_cert)
    tamper(bad)
    with pytest.raises(CertificateError):
        check_certificate(bad)


def test_checker_rejects_tampered_generic(generic_cert):
    assert check_certificate(generic_cert) > 1
    bad = copy.deepcopy(generic_cert)
    bad["rep"]["segments"].reverse()
    with pytest.raises(CertificateError):
        check_certificate(bad)
    bad = copy.deepcopy(generic_cert)
    bad["shape"] = [3, 2]  # middle shape for n = 5 is never excludable
    with pytest.raises(CertificateError):
        check_certificate(bad)
    bad = copy.deepcopy(generic_cert)
    bad["children"][0]["index"] = [9, 9, 9]
    with pytest.raises(CertificateError):
        check_certificate(bad)
    bad = copy.deepcopy(generic_cert)
    bad["rule"] = "BaseSmallN"
    with pytest.raises(CertificateError):
        check_certificate(bad)


def test_checker_pins_root(discrete_cert):
    with pytest.raises(CertificateError):
        check_certificate(discrete_cert, {"kind": "discrete", "rho": "rho", "dim": 2, "k": 2})
    with pytest.raises(CertificateError):
        check_certificate(discrete_cert, shape=(5, 1))


def _unlinked_products(pool, max_n):
    def rec(start, cur, n):
        if cur:
            yield tuple(cur)
        for i in range(start, len(pool)):
            s = pool[i]
            if n + s.size <= max_n and not any(linked(s, e) for e in cur):
                yield from rec(i, cur + [s], n + s.size)

    return rec(0, [], 0)


def test_boolean_route_matches_certificates():
    pool = sorted(
        [seg(CHI, a, a + l) for a in (Fraction(-1, 2), Fraction(0)) for l in range(3)]
        + [seg(CHI2, 0, l) for l in range(2)]
        + [steinberg_segment(RHO, 1), seg(RHO, 0, 1)],
        key=Segment.sort_key,
    )
    for segs in _unlinked_products(pool, 7):
        n = sum(s.size for s in segs)
        assert candidate_levis_generic(segs) == candidate_levis_generic(segs, certify=True) == {middle_shape(n)}
