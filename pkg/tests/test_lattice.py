import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from k3walls import lattice as lat
from k3walls import linalg
from k3walls.errors import NotDefinite

A1_GRAM = [[0, 4], [4, 0]]


def random_even_lattice(rng, n, spread=3):
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = 2 * rng.randint(-spread, spread)
        for j in range(i + 1, n):
            g[i][j] = g[j][i] = rng.randint(-spread, spread)
    return lat.PicardLattice(g)


def random_definite_lattice(rng, n, sign=1):
    while True:
        b = [[rng.randint(-2, 2) for _ in range(n)] for _ in range(n)]
        if oracles.det_fraction(b) != 0:
            break
    g = [[2 * sign * sum(b[k][i] * b[k][j] for k in range(n)) for j in range(n)]
         for i in range(n)]
    return lat.PicardLattice(g)


def test_constructor_rejects_bad_gram():
    with pytest.raises(ValueError):
        lat.PicardLattice([[0, 1], [2, 0]])
    with pytest.raises(ValueError):
        lat.PicardLattice([[1]])
    with pytest.raises(ValueError):
        lat.PicardLattice([[0, 1], [1, 0]], ["x", "x"])


def test_pairing_examples(elliptic):
    p, h, _ = elliptic
    assert lat.pairing(p, h, h) == 4
    assert lat.pairing(p, h, (0, 0)) == 0
    a1 = lat.PicardLattice(A1_GRAM)
    assert lat.pairing(a1, (1, 1), (1, 1)) == 8


def test_pairing_dimension_mismatch(elliptic):
    p, _, _ = elliptic
    with pytest.raises(ValueError):
        lat.pairing(p, (1, 2, 3), (1, 0))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 6), st.lists(st.integers(-9, 9), min_size=3, max_size=3),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3),
       st.lists(st.integers(-9, 9), min_size=3, max_size=3),
       st.integers(-5, 5), st.integers(-5, 5))
def test_pairing_symmetric_bilinear(seed, x, y, z, c, d):
    rng = random.Random(seed)
    p = random_even_lattice(rng, 3)
    assert lat.pairing(p, x, y) == lat.pairing(p, y, x)
    cx_dy = [c * a + d * b for a, b in zip(x, y)]
    assert lat.pairing(p, cx_dy, z) == c * lat.pairing(p, x, z) + d * lat.pairing(p, y, z)


def test_signature_examples(elliptic):
    p, _, _ = elliptic
    assert lat.signature(p) == (1, 1, 0)
    assert lat.signature(lat.PicardLattice([[2]])) == (1, 0, 0)
    assert lat.signature(lat.PicardLattice(A1_GRAM)) == (1, 1, 0)


def test_signature_against_charpoly_oracle():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(1, 4)
        p = random_even_lattice(rng, n)
        pos, neg, null = lat.signature(p)
        assert (pos, neg, null) == oracles.signature_by_charpoly(p.gram)
        assert pos + neg + null == n


def test_signature_unimodular_invariance():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(2, 4)
        p = random_even_lattice(rng, n)
        u = linalg.identity_matrix(n)
        for _ in range(6):
            i, j = rng.sample(range(n), 2)
            c = rng.randint(-2, 2)
            for k in range(n):
                u[i][k] += c * u[j][k]
        g = [[sum(u[i][a] * p.gram[a][b] * u[j][b] for a in range(n) for b in range(n))
              for j in range(n)] for i in range(n)]
        assert lat.signature(lat.PicardLattice(g)) == lat.signature(p)


def test_negative_definite_examples(a1_instance):
    h_perp = lat.orthogonal_complement(a1_instance.lattice, [a1_instance.polarization])
    assert lat.pairing(a1_instance.lattice, h_perp.basis[0], h_perp.basis[0]) == -8
    assert lat.is_negative_definite(h_perp)
    span_h = lat.Sublattice(a1_instance.lattice, [a1_instance.polarization])
    assert not lat.is_negative_definite(span_h)
    empty = lat.Sublattice(a1_instance.lattice, [])
    assert lat.is_negative_definite(empty)


def test_orthogonal_complement_examples(elliptic, a1_instance):
    c = lat.orthogonal_complement(a1_instance.lattice, [(1, 1)])
    assert c.basis == ((1, -1),)
    assert c.saturated
    p, h, _ = elliptic
    full = lat.orthogonal_complement(p, [])
    assert full.rank == 2
    c2 = lat.orthogonal_complement(p, [h])
    assert c2.rank == 1
    assert lat.pairing(p, c2.basis[0], h) == 0


def test_orthogonal_complement_properties():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 4)
        p = random_definite_lattice(rng, n)
        k = rng.randint(1, n)
        vs = []
        while len(vs) < k:
            v = tuple(rng.randint(-2, 2) for _ in range(n))
            if any(v):
                vs.append(v)
        comp = lat.orthogonal_complement(p, vs)
        for b in comp.basis:
            for v in vs:
                assert lat.pairing(p, b, v) == 0
        span_rank = len(vs) - len(linalg.integer_kernel(
            [list(col) for col in zip(*vs)], len(vs)))
        # definite form: complement rank is complementary to the span rank
        assert comp.rank + span_rank == n


def test_enumeration_examples(a1_instance, a2_instance):
    h_perp = lat.orthogonal_complement(a1_instance.lattice, [a1_instance.polarization])
    assert lat.enumerate_norm_vectors(h_perp, -2, -2) == []
    assert lat.enumerate_norm_vectors(h_perp, 0, 0) == [(0, 0)]
    # sign-flipped phi image of the rank-2 cyclic type: no norm-2 vectors
    host = lat.PicardLattice(a2_instance.affine_matrix.entries)
    diffs = [linalg.vec_sub(host.basis_vector(i), host.basis_vector(i + 1))
             for i in range(2)]
    phi_image = lat.Sublattice(host, diffs)
    assert lat.enumerate_norm_vectors(phi_image, 2, 2) == []
    assert lat.enumerate_norm_vectors(phi_image, 0, 2) == [(0, 0, 0)]


def test_enumeration_rejects_indefinite(elliptic):
    p, _, _ = elliptic
    with pytest.raises(NotDefinite):
        lat.enumerate_norm_vectors(lat.full_sublattice(p), -2, -2)
    with pytest.raises(ValueError):
        lat.enumerate_norm_vectors(lat.full_sublattice(p), 2, -2)


def test_enumeration_against_box_oracle():
    rng = random.Random(19)
    for _ in range(25):
        n = rng.randint(1, 4)
        sign = rng.choice((1, -1))
        p = random_definite_lattice(rng, n, sign)
        sub = lat.full_sublattice(p)
        lo = rng.randint(-6, 2) * sign
        hi = lo + rng.randint(0, 8)
        lo, hi = min(lo, hi), max(lo, hi)
        assert lat.enumerate_norm_vectors(sub, lo, hi) == oracles.box_norm_vectors(sub, lo, hi)


def test_enumeration_sign_convention():
    p = lat.PicardLattice([[2, -1], [-1, 2]])
    vecs = lat.enumerate_norm_vectors(lat.full_sublattice(p), 2, 2)
    for v in vecs:
        first = next(c for c in v if c != 0)
        assert first > 0
    assert len(vecs) == 3  # A2: three root pairs


def test_saturate_examples(elliptic):
    p, h, _ = elliptic
    doubled = lat.Sublattice(p, [(2, 6)])
    sat = lat.saturate(doubled)
    assert sat.basis == ((1, 3),)
    again = lat.saturate(sat)
    assert again.basis == sat.basis
    full = lat.saturate(lat.Sublattice(p, [(2, 0), (0, 2)]))
    assert full.rank == 2
    assert oracles.smith_invariants([list(b) for b in full.basis]) == [1, 1]


def test_saturate_properties():
    rng = random.Random(23)
    for _ in range(30):
        n = rng.randint(2, 4)
        p = random_even_lattice(rng, n)
        k = rng.randint(1, n)
        basis = []
        while len(basis) < k:
            v = tuple(rng.randint(-3, 3) for _ in range(n))
            try:
                lat.Sublattice(p, basis + [v])
            except ValueError:
                continue
            basis.append(v)
        sub = lat.Sublattice(p, basis)
        sat = lat.saturate(sub)
        assert sat.rank == sub.rank
        assert oracles.smith_invariants([list(b) for b in sat.basis]) == [1] * sat.rank
        for b in sub.basis:
            assert sat.contains(b)
        for b in sat.basis:
            assert sub.contains(b, over_z=False)
        sat2 = lat.saturate(sat)
        assert sorted(sat2.basis) == sorted(sat.basis)
