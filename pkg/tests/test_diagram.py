"""
Tests for PD parsing, faces, orientation and diagram predicates.
"""

import pytest
from hypothesis import given, settings

from aajones.diagram import (
    crossing_signs,
    faces,
    flip_crossing,
    is_alternating,
    is_prime,
    is_reduced,
    is_split,
    linking_number,
    mirror,
    nugatory_crossings,
    parse_pd,
    r1_variant,
    r2_variant,
    r3_variant,
    reidemeister_variants,
    reverse_components,
    serialize,
    triangle_faces,
    writhe,
)
from aajones.errors import NotApplicableError, ParseError, SplitError, ValidationError
from aajones.kauffman import bracket, jones
from aajones.laurent import LaurentPoly, Unit
from tests.builders import alternating_diagrams, braid_closure, random_alternating


class TestParsing:
    """Tests for the PD text format."""

    def test_trefoil(self, trefoil):
        """The trefoil has three crossings and one component."""
        assert trefoil.c == 3
        assert trefoil.component_count == 1
        assert trefoil.unknotted_loops == 0

    def test_crossingless_unknot(self, unknot):
        """A loops header alone gives a 0-crossing diagram."""
        assert unknot.c == 0
        assert unknot.component_count == 1

    def test_kink(self, kink):
        """X[1,1,2,2] is a one-crossing knot."""
        assert kink.c == 1
        assert kink.component_count == 1

    def test_wrapped_and_comma_separated(self, trefoil):
        """PD[...] wrappers and commas between tokens are accepted."""
        d = parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]")
        assert d == trefoil

    @pytest.mark.parametrize(
        "text",
        ["X[1,2,3]", "Y[1,2,3,4]", "X[0,1,1,0]", "loops=x", "X[1,1,2,2] reverse=a"],
    )
    def test_malformed_syntax(self, text):
        """Broken tokens raise ParseError."""
        with pytest.raises(ParseError):
            parse_pd(text)

    def test_arc_multiplicity(self):
        """An arc that does not appear exactly twice is a validation error."""
        with pytest.raises(ValidationError):
            parse_pd("X[1,2,3,4]")

    def test_empty(self):
        """No crossings and no loops is not a diagram."""
        with pytest.raises(ValidationError):
            parse_pd("")

    def test_non_planar(self):
        """Reversing the cyclic order at one trefoil crossing breaks the Euler count."""
        with pytest.raises(ValidationError):
            parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,3,6,2]")

    def test_reverse_out_of_range(self, trefoil):
        """Reversal indices must name existing components."""
        with pytest.raises(ValidationError):
            parse_pd(serialize(trefoil), reverse=[1])


class TestSerialize:
    """Tests for the canonical text form."""

    def test_round_trip_fixtures(self, fixture_table):
        """parse_pd(serialize(d)) equals the canonical diagram for every fixture."""
        for pd_text in fixture_table["pd"]:
            d = parse_pd(pd_text)
            assert parse_pd(serialize(d)) == d.canonical()

    def test_unknot(self, unknot):
        """A crossingless unknot serializes to its header."""
        assert serialize(unknot) == "loops=1"

    def test_reversed_component_round_trip(self, hopf):
        """A reversed component survives serialization; relabelling needs no header."""
        flipped = reverse_components(hopf, [0])
        text = serialize(flipped)
        assert "reverse=" not in text
        assert parse_pd(text) == flipped.canonical()
        assert jones(parse_pd(text)) == jones(flipped)

    def test_reverse_header(self):
        """A circle lying over another one twice keeps its orientation through a reverse header."""
        raw = "X[1,4,2,3] X[2,4,1,3]"
        default = parse_pd(raw)
        assert default.over_entries == (1, 3)
        assert serialize(default) == raw

        d = parse_pd("reverse=1 " + raw)
        assert d.over_entries == (3, 1)
        assert crossing_signs(d) == (1, -1)
        assert serialize(d) == "reverse=1 " + raw
        assert parse_pd(serialize(d)) == d

    @settings(max_examples=30, deadline=None)
    @given(alternating_diagrams(max_c=10))
    def test_round_trip_random(self, d):
        """Round trip holds on random alternating diagrams."""
        assert parse_pd(serialize(d)) == d.canonical()


class TestFaces:
    """Tests for face extraction."""

    def test_face_counts(self, trefoil, kink, aa_example):
        """Connected diagrams have c + 2 faces."""
        assert len(faces(trefoil)) == 5
        assert len(faces(kink)) == 3
        assert len(faces(aa_example)) == 12

    def test_every_corner_in_one_face(self, aa_example):
        """Faces partition the corners."""
        fs = faces(aa_example)
        corners = [corner for face in fs.faces for corner in face.corners]
        assert len(corners) == 4 * aa_example.c
        assert len(set(corners)) == len(corners)

    def test_unbounded_face_is_deterministic(self, trefoil):
        """The unbounded face holds the smallest (arc, side) incidence."""
        fs = faces(trefoil)
        smallest = min(inc for face in fs.faces for inc in face.incidences)
        assert smallest in fs.faces[fs.unbounded_face_index].incidences

    def test_split_and_empty(self, unknot):
        """Faces need a connected diagram with crossings."""
        with pytest.raises(NotApplicableError):
            faces(unknot)
        with pytest.raises(SplitError):
            faces(parse_pd("loops=1 X[1,1,2,2]"))

    @settings(max_examples=30, deadline=None)
    @given(alternating_diagrams(max_c=12))
    def test_euler_random(self, d):
        """c + 2 faces on random connected diagrams."""
        assert len(faces(d)) == d.c + 2


class TestOrientation:
    """Tests for signs, writhe and linking numbers."""

    def test_trefoil_writhe(self, trefoil):
        """Every trefoil crossing is negative."""
        assert crossing_signs(trefoil) == (-1, -1, -1)
        assert writhe(trefoil) == -3

    def test_kink_is_positive(self, kink):
        """X[1,1,2,2] is a positive kink."""
        assert writhe(kink) == 1

    def test_unknot_writhe(self, unknot):
        """No crossings, no writhe."""
        assert writhe(unknot) == 0

    def test_hopf_linking(self, hopf):
        """Both Hopf crossings join the two components."""
        assert writhe(hopf) == 2
        assert linking_number(hopf, 0, 1) == 1

    def test_reverse_one_component(self, hopf):
        """Reversing one component negates every mixed crossing."""
        flipped = reverse_components(hopf, [0])
        assert crossing_signs(flipped) == tuple(-s for s in crossing_signs(hopf))
        assert linking_number(flipped, 0, 1) == -1

    def test_reverse_all_components(self, aa_example):
        """Global reversal keeps every sign."""
        everything = range(len(aa_example.components))
        assert writhe(reverse_components(aa_example, everything)) == writhe(aa_example)

    def test_aa_example_writhe(self, aa_example):
        """The fixture orientation gives writhe -6."""
        assert writhe(aa_example) == -6
        assert aa_example.component_count == 2

    def test_self_crossings_keep_sign(self, granny):
        """Reversing a knot's only component changes no sign."""
        assert crossing_signs(reverse_components(granny, [0])) == crossing_signs(granny)


class TestPredicates:
    """Tests for alternation, reducedness, primality and splitness."""

    def test_alternating(self, trefoil, kink, aa_example):
        """The trefoil and the kink alternate, the AA example does not."""
        assert is_alternating(trefoil)
        assert is_alternating(kink)
        assert not is_alternating(aa_example)

    def test_reduced(self, trefoil, kink, aa_example):
        """The kink has a nugatory crossing."""
        assert is_reduced(trefoil)
        assert is_reduced(aa_example)
        assert not is_reduced(kink)
        assert nugatory_crossings(kink) == [0]

    def test_prime(self, trefoil, granny, kink):
        """A connected sum is not prime; neither is a kink."""
        assert is_prime(trefoil)
        assert not is_prime(granny)
        assert not is_prime(kink)

    def test_split(self, trefoil):
        """Extra unknotted loops make a diagram split."""
        assert not is_split(trefoil)
        assert is_split(parse_pd("loops=1 " + serialize(trefoil)))
        assert is_split(parse_pd("X[1,1,2,2] X[3,3,4,4]"))


class TestCrossingChanges:
    """Tests for flips and mirror images."""

    def test_flip_is_involution(self, aa_example):
        """Flipping twice restores the diagram."""
        for i in range(aa_example.c):
            assert flip_crossing(flip_crossing(aa_example, i), i) == aa_example

    def test_flip_out_of_range(self, trefoil):
        """Crossing indices are bounds-checked."""
        with pytest.raises(IndexError):
            flip_crossing(trefoil, 3)

    def test_flip_trefoil_gives_unknot(self, trefoil):
        """Any single flip of the trefoil unknots it; the bracket is a unit monomial."""
        for i in range(3):
            br = bracket(flip_crossing(trefoil, i))
            assert len(br) == 1
            assert abs(br.terms[0][1]) == 1

    def test_flip_dealternator(self, aa_example):
        """Flipping crossing 0 of the AA example makes it alternating."""
        assert is_alternating(flip_crossing(aa_example, 0))

    def test_flip_negates_sign(self, trefoil):
        """A flipped crossing changes sign."""
        assert crossing_signs(flip_crossing(trefoil, 1)) == (-1, 1, -1)

    def test_mirror_writhe(self, aa_example):
        """Mirroring negates the writhe."""
        assert writhe(mirror(aa_example)) == -writhe(aa_example)


class TestReidemeister:
    """Tests for the Reidemeister move generators."""

    def test_r1_on_unknot(self, unknot, kink):
        """A positive kink on the crossingless unknot is the kink diagram."""
        d = r1_variant(unknot, positive=True)
        assert d.c == 1
        assert d.unknotted_loops == 0
        assert writhe(d) == 1
        assert bracket(d) == bracket(kink)

    def test_r1_bracket_factor(self, trefoil):
        """R1 multiplies the bracket by -A^3 or -A^-3."""
        base = bracket(trefoil)
        pos = bracket(r1_variant(trefoil, positive=True))
        neg = bracket(r1_variant(trefoil, positive=False))
        assert pos == base * LaurentPoly.monomial(Unit.QUARTER_A, -1, 3)
        assert neg == base * LaurentPoly.monomial(Unit.QUARTER_A, -1, -3)

    def test_r2_adds_two_crossings(self, trefoil):
        """R2 adds two crossings and keeps the Jones polynomial."""
        d = r2_variant(trefoil)
        assert d.c == trefoil.c + 2
        assert jones(d) == jones(trefoil)

    def test_r3_on_braid_closure(self):
        """The closure of s1 s2 s1 has a triangle that can be slid."""
        d = braid_closure(3, [1, 2, 1])
        assert triangle_faces(d)
        slid = r3_variant(d)
        assert slid is not None
        assert slid.c == d.c
        assert slid != d
        assert jones(slid) == jones(d)

    def test_r3_mixed_signs(self):
        """A slide also works when the triangle mixes positive and negative generators."""
        d = braid_closure(3, [-1, -2, -1, 2])
        slid = r3_variant(d)
        if slid is None:
            pytest.skip("no slidable triangle in this diagram")
        assert jones(slid) == jones(d)

    def test_variants_unknot(self, unknot):
        """Kinks on the unknot keep its Jones polynomial."""
        for d in reidemeister_variants(unknot):
            assert jones(d) == jones(unknot)

    @pytest.mark.slow
    def test_jones_invariance_random(self):
        """Jones is unchanged by every generated move on 50 random diagrams."""
        for seed in range(50):
            _, d = random_alternating(seed, 3, 9)
            expected = jones(d)
            variants = reidemeister_variants(d)
            assert len(variants) >= 3
            for v in variants:
                assert jones(v) == expected, f"seed {seed}: {serialize(v)}"
            assert bracket(variants[0]) == bracket(d) * LaurentPoly.monomial(Unit.QUARTER_A, -1, 3)
            assert bracket(variants[1]) == bracket(d) * LaurentPoly.monomial(Unit.QUARTER_A, -1, -3)
