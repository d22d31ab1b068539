import itertools

import pytest

from katospec.bits import full, members
from katospec.enumeration import based_spaces, enumerate_monoids
from katospec.errors import EmptyFamily
from katospec.monoid import enumerate_primes, spec, validate_monoid
from katospec.semilattice import (
    check_mcjs,
    check_spec_homeomorphism,
    join_structure,
    phi,
    theta,
    universal_semilattice,
    weakprop2_prime,
)
from katospec.space import BasedSpace, FinitePoset, blobs, image, is_m_morphism, specialization_order

SMALL_MONOIDS = [m for n in range(1, 5) for m in enumerate_monoids(n)]
BASED = [b for n in range(1, 5) for _, b in based_spaces(n)]
TINY = [b for n in range(1, 4) for _, b in based_spaces(n)]


@pytest.fixture
def sierp_based(sierpinski):
    return BasedSpace(sierpinski, (0b01, 0b11))


class TestJoinStructure:
    def test_chain(self):
        p = FinitePoset.from_pairs(3, [(0, 1), (1, 2)])
        j, missing = join_structure(p)
        assert missing is None
        assert j.sup(0) == 0 and j.sup(0b101) == 2 and j.sup(0b011) == 1

    def test_antichain_has_no_least_element(self):
        j, missing = join_structure(FinitePoset.from_pairs(2, []))
        assert j is None and missing == 0

    def test_v_missing_join(self):
        p = FinitePoset.from_pairs(3, [(0, 1), (0, 2)])
        j, missing = join_structure(p)
        assert j is None and missing == 0b110

    @pytest.mark.parametrize("b", BASED[:120], ids=str)
    def test_sup_is_least_upper_bound(self, b):
        p = specialization_order(b.space)
        j, _ = join_structure(p)
        if j is None:
            return
        for a in range(1 << p.size):
            s = j.sup(a)
            assert all(p.le(x, s) for x in members(a))
            ub = [y for y in range(p.size) if all(p.le(x, y) for x in members(a))]
            assert all(p.le(s, y) for y in ub)


class TestCheckMCJS:
    def test_sierpinski(self, sierp_based):
        w, failure = check_mcjs(sierp_based)
        assert failure is None
        assert [w.sup(a) for a in range(4)] == [0, 0, 1, 1]

    def test_sierpinski_with_empty_member(self, sierpinski):
        w, failure = check_mcjs(BasedSpace(sierpinski, (0, 0b01, 0b11)))
        assert w is None
        assert failure.subset == 0 and failure.base_member == 0

    def test_discrete_fails(self, discrete2):
        w, failure = check_mcjs(BasedSpace(discrete2, (0, 0b01, 0b10, 0b11)))
        assert w is None and failure.base_member is None

    @pytest.mark.parametrize("m", SMALL_MONOIDS, ids=lambda m: str(m.table))
    def test_spectrum_sup_is_union(self, m):
        s = spec(m)
        w, failure = check_mcjs(s.based)
        assert failure is None
        for a in range(1 << len(s.points)):
            union = 0
            for x in members(a):
                union |= s.points[x]
            assert s.points[w.sup(a)] == union

    @pytest.mark.parametrize("b", BASED, ids=str)
    def test_witness_properties(self, b):
        w, _ = check_mcjs(b)
        if w is None:
            return
        assert w.join.poset == specialization_order(b.space)
        assert set(blobs(b.space)[1]) == set(b.base)
        for u in b.base:
            for a in range(1 << b.size):
                assert (a & ~u == 0) == bool(u >> w.sup(a) & 1)


class TestUniversalSemilattice:
    def test_trivial(self):
        us = universal_semilattice((1,))
        assert us.monoid.order == 1

    def test_sierpinski(self, sierp_based):
        us = universal_semilattice(sierp_based.base)
        assert us.legend == (0b01, 0b11)
        assert us.monoid.unit == 1 and us.monoid.table == ((0, 0), (0, 1))

    def test_z6(self, z6):
        us = universal_semilattice(spec(z6).d_base)
        assert us.monoid.order == 4

    def test_duplicates_collapse(self):
        assert universal_semilattice((3, 1, 3)).legend == (1, 3)

    @pytest.mark.parametrize("b", BASED, ids=str)
    def test_idempotent_monoid(self, b):
        us = universal_semilattice(b.base)
        m = us.monoid
        validate_monoid(m.order, m.unit, m.table)
        assert all(m.mul(x, x) == x for x in range(m.order))
        assert us.legend[m.unit] == b.space.whole

    def test_json_legend(self, sierp_based):
        assert universal_semilattice(sierp_based.base).to_json()["legend"] == [[0], [0, 1]]


class TestPhiTheta:
    def test_phi_sierpinski(self, sierp_based):
        assert phi(sierp_based) == (0, 0b01)

    def test_phi_point(self, point_top_base):
        assert phi(point_top_base) == (0,)

    def test_theta_sierpinski(self, sierp_based):
        w, _ = check_mcjs(sierp_based)
        assert theta(w, 0) == 0
        assert theta(w, 0b01) == 1

    def test_theta_point(self, point_top_base):
        w, _ = check_mcjs(point_top_base)
        assert theta(w, 0) == 0

    @pytest.mark.parametrize("b", BASED, ids=str)
    def test_round_trips(self, b):
        w, _ = check_mcjs(b)
        if w is None:
            return
        us = universal_semilattice(b.base)
        images = phi(b, us)
        assert all(theta(w, images[x], us) == x for x in range(b.size))
        for p in enumerate_primes(us.monoid):
            assert images[theta(w, p, us)] == p


class TestSpecHomeomorphism:
    def test_sierpinski(self, sierp_based):
        assert check_spec_homeomorphism(sierp_based)

    def test_discrete(self, discrete2):
        b = BasedSpace(discrete2, (0, 0b01, 0b10, 0b11))
        assert len(spec(universal_semilattice(b.base).monoid).points) == 4
        assert not check_spec_homeomorphism(b)

    @pytest.mark.parametrize("m", SMALL_MONOIDS, ids=lambda m: str(m.table))
    def test_spectra(self, m):
        assert check_spec_homeomorphism(spec(m).based)

    @pytest.mark.parametrize("b", BASED, ids=str)
    def test_agrees_with_mcjs(self, b):
        assert check_spec_homeomorphism(b) == (check_mcjs(b)[0] is not None)


class TestWeakProp2:
    def test_whole(self, sierp_based):
        assert weakprop2_prime(sierp_based, [0b11]) == 0b01

    def test_blob(self, sierp_based):
        assert weakprop2_prime(sierp_based, [0b01]) == 0

    def test_empty(self, sierp_based):
        with pytest.raises(EmptyFamily):
            weakprop2_prime(sierp_based, [])

    @pytest.mark.parametrize("b", TINY, ids=str)
    def test_brute_force(self, b):
        us = universal_semilattice(b.base)
        for k in (1, 2, 3):
            for fam in itertools.combinations(b.base, k):
                meets = set()
                for r in range(1, k + 1):
                    for sub in itertools.combinations(fam, r):
                        acc = full(b.size)
                        for u in sub:
                            acc &= u
                        meets.add(acc)
                expected = sum(1 << i for i, u in enumerate(us.legend) if not any(c & ~u == 0 for c in meets))
                assert weakprop2_prime(b, list(fam), us) == expected


def test_morphisms_between_mcjs_preserve_sups():
    spaces = [(b, w) for b in BASED for w in [check_mcjs(b)[0]] if w is not None]
    checked = 0
    for (a, wa), (b, wb) in itertools.product(spaces, repeat=2):
        for f in itertools.product(range(b.size), repeat=a.size):
            if not is_m_morphism(f, a, b):
                continue
            checked += 1
            for s in range(1 << a.size):
                assert f[wa.sup(s)] == wb.sup(image(s, f))
    assert checked > 100
