import itertools

import pytest

from hyperind import CapacityError, EnumSpec, Hypergraph, InvalidArgumentError, \
    canonical_form, enumerate_regular
from hyperind.enumeration import first_edge_choices


def collect(spec):
    out = []
    enumerate_regular(spec, out.append)
    return out


class TestLabeled:
    def test_perfect_matchings_on_4(self):
        # (4-1)!! = 3 perfect matchings, confirmed by explicit generation
        got = collect(EnumSpec(r=2, d=1, n=4))
        assert len(got) == 3
        expected = {Hypergraph(4, [(0, 1), (2, 3)]),
                    Hypergraph(4, [(0, 2), (1, 3)]),
                    Hypergraph(4, [(0, 3), (1, 2)])}
        assert set(got) == expected

    def test_two_regular_on_5(self):
        # 5!/(5*2) = 12 labeled 5-cycles
        got = collect(EnumSpec(r=2, d=2, n=5))
        assert len(got) == 12

    def test_single_triple(self):
        got = collect(EnumSpec(r=3, d=1, n=3))
        assert got == [Hypergraph(3, [(0, 1, 2)])]

    def test_infeasible_divisibility(self):
        assert enumerate_regular(EnumSpec(r=3, d=1, n=4)) == 0
        assert enumerate_regular(EnumSpec(r=3, d=2, n=4)) == 0

    def test_each_emission_is_regular_and_uniform(self):
        for spec in [EnumSpec(r=2, d=2, n=6), EnumSpec(r=3, d=2, n=6)]:
            for g in collect(spec):
                assert g.uniformity() == spec.r
                assert g.regularity() == spec.d

    def test_no_duplicates_and_deterministic(self):
        spec = EnumSpec(r=3, d=2, n=6)
        a = collect(spec)
        b = collect(spec)
        assert a == b
        assert len(set(a)) == len(a)


class TestUpToIso:
    def test_two_regular_on_5_single_class(self):
        got = collect(EnumSpec(r=2, d=2, n=5, up_to_iso=True))
        assert len(got) == 1  # the 5-cycle

    def test_one_regular_3graphs_on_6(self):
        got = collect(EnumSpec(r=3, d=1, n=6, up_to_iso=True))
        assert len(got) == 1  # two disjoint triples

    def test_classes_are_canonical_and_distinct(self):
        got = collect(EnumSpec(r=2, d=2, n=6, up_to_iso=True))
        assert len(got) == 2  # C6 and two triangles
        for g in got:
            assert canonical_form(g) == g

    def test_cap(self):
        with pytest.raises(CapacityError):
            EnumSpec(r=2, d=1, n=14, up_to_iso=True)


class TestAutomorphismPartition:
    def test_labeled_count_from_iso_classes(self):
        # one class of perfect matchings on 4 vertices; |Aut| = 8 by brute force
        g = Hypergraph(4, [(0, 1), (2, 3)])
        auts = 0
        for perm in itertools.permutations(range(4)):
            mapped = Hypergraph(4, [tuple(perm[v] for v in e) for e in g.edges])
            if mapped == g:
                auts += 1
        assert auts == 8
        labeled = enumerate_regular(EnumSpec(r=2, d=1, n=4))
        import math
        assert labeled == math.factorial(4) // auts == 3


class TestPrefixSplitting:
    def test_union_over_first_edges_matches_unsplit(self):
        spec = EnumSpec(r=3, d=2, n=6)
        whole = collect(spec)
        merged = []
        for e in first_edge_choices(spec):
            merged.extend(collect(EnumSpec(r=3, d=2, n=6, prefix=(e,))))
        assert sorted(merged, key=lambda g: g.edges) == \
            sorted(whole, key=lambda g: g.edges)
        assert len(merged) == len(whole)

    def test_invalid_prefix(self):
        with pytest.raises(InvalidArgumentError):
            enumerate_regular(EnumSpec(r=2, d=1, n=4, prefix=((0, 1), (0, 2))))


class TestSpecValidation:
    def test_bad_args(self):
        with pytest.raises(InvalidArgumentError):
            EnumSpec(r=0, d=1, n=3)
        with pytest.raises(InvalidArgumentError):
            EnumSpec(r=3, d=1, n=2)
