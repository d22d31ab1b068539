import json
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from katospec.enumeration import (
    OrderTooLarge,
    SizeTooLarge,
    based_spaces,
    enumerate_monoids,
    enumerate_posets,
    labeled_monoids,
    monoid_canonical_form,
)
from katospec.monoid import validate_monoid
from katospec.space import poset_canonical_form
from katospec.suite import run_suite, summarize, write_census_csv

from tests.oracles import labeled_posets, monoid_orbits, poset_orbits

GOLDEN = Path(__file__).parent / "golden"


def golden(name):
    return {int(k): v for k, v in json.loads((GOLDEN / name).read_text())["counts"].items()}


class TestMonoids:
    def test_order_two(self):
        tables = [m.table for m in enumerate_monoids(2)]
        assert tables == [((0, 1), (1, 0)), ((0, 1), (1, 1))]

    @pytest.mark.parametrize("order, count", sorted(golden("monoid_counts.json").items()))
    def test_golden(self, order, count):
        assert len(enumerate_monoids(order)) == count

    @pytest.mark.parametrize("order", [1, 2, 3])
    def test_orbit_oracle(self, order):
        assert monoid_orbits(order) == len(enumerate_monoids(order))

    def test_recorded_larger_counts(self):
        recorded = json.loads((GOLDEN / "monoid_counts.json").read_text())["recorded"]
        assert {int(k): len(enumerate_monoids(int(k))) for k in recorded} == {int(k): v for k, v in recorded.items()}

    def test_labeled_counts(self):
        assert [len(labeled_monoids(n)) for n in range(1, 6)] == [1, 2, 9, 94, 1486]

    @pytest.mark.parametrize("order", range(1, 6))
    def test_valid_and_distinct(self, order):
        ms = enumerate_monoids(order)
        for m in ms:
            assert validate_monoid(m.order, m.unit, m.table) == m
            assert monoid_canonical_form(m.table) == m.table
        assert len({m.table for m in ms}) == len(ms)

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(labeled_monoids(4)), st.permutations([1, 2, 3]))
    def test_canonical_form_is_invariant(self, table, rest):
        perm = (0, *rest)
        moved = [[0] * 4 for _ in range(4)]
        for a in range(4):
            for b in range(4):
                moved[perm[a]][perm[b]] = perm[table[a][b]]
        assert monoid_canonical_form(moved) == monoid_canonical_form(table)

    def test_limits(self):
        with pytest.raises(OrderTooLarge):
            enumerate_monoids(6)
        with pytest.raises(OrderTooLarge):
            labeled_monoids(0)


class TestPosets:
    def test_small(self):
        assert len(enumerate_posets(1)) == 1
        assert sorted(len(p.pairs()) for p in enumerate_posets(2)) == [0, 1]

    @pytest.mark.parametrize("size, count", sorted(golden("poset_counts.json").items()))
    def test_golden(self, size, count):
        assert len(enumerate_posets(size)) == count

    @pytest.mark.parametrize("size", [1, 2, 3, 4])
    def test_orbit_oracle(self, size):
        assert poset_orbits(size) == len(enumerate_posets(size))

    def test_labeled_oracle_size_4(self):
        assert len(labeled_posets(4)) == 219

    def test_size_six(self):
        assert len(enumerate_posets(6)) == 318

    @pytest.mark.parametrize("size", range(1, 6))
    def test_pairwise_distinct(self, size):
        ps = enumerate_posets(size)
        forms = [poset_canonical_form(p) for p in ps]
        assert len(set(forms)) == len(ps)
        assert all(f == (p.size, p.down) for f, p in zip(forms, ps))

    @settings(max_examples=40, deadline=None)
    @given(st.sampled_from(enumerate_posets(5)), st.permutations(range(5)))
    def test_canonical_form_is_invariant(self, p, perm):
        assert poset_canonical_form(p.relabel(perm)) == poset_canonical_form(p)

    def test_limits(self):
        with pytest.raises(SizeTooLarge):
            enumerate_posets(7)


class TestBasedSpaces:
    def test_counts(self):
        assert [len(based_spaces(n)) for n in range(1, 5)] == [2, 3, 16, 686]


class TestSuite:
    def test_trivial(self):
        rows, summary = run_suite(1, 1)
        assert summary["all_pass"] and len(rows) == 2
        assert summary["monoid_classes"] == 1 and summary["poset_classes"] == 1

    def test_default_bounds(self):
        rows, summary = run_suite(4, 4)
        assert summary["all_pass"], summary["failures"]
        assert summary["monoid_classes"] == 1 + 2 + 5 + 19
        assert summary["poset_classes"] == 1 + 2 + 5 + 16
        assert summary["expchar_agree"] == summary["poset_classes"]

    def test_order_five_sample(self):
        rows, summary = run_suite(5, 1, seed=7)
        assert summary["all_pass"], summary["failures"]
        sampled = [r for r in rows if r.get("order") == 5]
        assert sum(r["samples"] for r in sampled) == 200

    def test_seed_changes_sample_only(self):
        a = run_suite(5, 2, seed=1)
        b = run_suite(5, 2, seed=2)
        assert [r for r in a[0] if r["kind"] == "poset"] == [r for r in b[0] if r["kind"] == "poset"]
        assert run_suite(5, 2, seed=1) == a

    def test_failures_are_reported(self):
        rows, _ = run_suite(2, 2)
        rows[0]["brenner"] = False
        s = summarize(rows)
        assert not s["all_pass"] and s["failures"] == [rows[0]["id"]]

    def test_csv(self, tmp_path):
        rows, _ = run_suite(2, 2)
        out = tmp_path / "census.csv"
        write_census_csv(rows, str(out))
        lines = out.read_text().splitlines()
        assert len(lines) == len(rows) + 1 and "hash" in lines[0]
