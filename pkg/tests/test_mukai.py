import random
from fractions import Fraction

import pytest

from k3walls import lattice as lat
from k3walls import mukai as mk
from k3walls.errors import InvalidTwist


def rnd_vector(rng, lattice, lo=-6, hi=6):
    return mk.MukaiVector(rng.randint(lo, hi),
                          tuple(rng.randint(lo, hi) for _ in range(lattice.rank)),
                          rng.randint(lo, hi), lattice)


def test_pairing_examples(elliptic, a1_instance):
    p, _, v = elliptic
    one = mk.unit(p)
    assert mk.mukai_pairing(one, mk.rho(p)) == -1
    assert mk.mukai_square(v) == 0
    v0, v1 = a1_instance.v_list
    assert mk.mukai_pairing(v0, v1) == 2
    assert mk.mukai_square(v0) == -2


def test_pairing_ambient_mismatch(elliptic, a1_instance):
    _, _, v = elliptic
    with pytest.raises(ValueError):
        mk.mukai_pairing(v, a1_instance.v)


def test_pairing_symmetry_random(elliptic):
    p, _, _ = elliptic
    rng = random.Random(5)
    for _ in range(200):
        x, y = rnd_vector(rng, p), rnd_vector(rng, p)
        assert mk.mukai_pairing(x, y) == mk.mukai_pairing(y, x)
        assert mk.euler_pairing(x, y) == -mk.mukai_pairing(x, y)


def test_from_chern(elliptic):
    p, _, _ = elliptic
    structure = mk.mukai_vector_from_chern(1, (0, 0), 0, p)
    assert structure == mk.MukaiVector(1, (0, 0), 1, p)
    v = mk.mukai_vector_from_chern(2, (1, 3), 3, p)
    assert v == mk.MukaiVector(2, (1, 3), 1, p)
    point = mk.mukai_vector_from_chern(0, (0, 0), -1, p)
    assert point == mk.rho(p)
    rng = random.Random(9)
    for _ in range(100):
        rank = rng.randint(0, 5)
        c1 = tuple(rng.randint(-4, 4) for _ in range(2))
        c2 = rng.randint(-5, 5)
        assert mk.chern_data(mk.mukai_vector_from_chern(rank, c1, c2, p)) == (rank, c1, c2)


def test_euler_examples(elliptic, a1_instance):
    p, _, _ = elliptic
    structure = mk.mukai_vector_from_chern(1, (0, 0), 0, p)
    assert mk.euler_pairing(structure, structure) == 2
    v = a1_instance.v
    for vi in a1_instance.v_list:
        assert mk.euler_pairing(v, vi) == 0


def test_delta_map(elliptic, a1_instance):
    p, h, v = elliptic
    d_hat = mk.delta_map(v, h)
    assert d_hat == mk.MukaiVector(0, (1, 3), 2, p)
    # the diagonal family: delta(H) with rank-2 total vector
    inst = a1_instance
    h_hat = mk.delta_map(inst.v, inst.polarization)
    assert h_hat == mk.MukaiVector(0, (1, 1), 4, inst.lattice)
    # orthogonal divisor maps to point component 0
    orth = lat.orthogonal_complement(p, [v.c1]).basis[0]
    assert mk.delta_map(v, orth).s == 0
    with pytest.raises(ValueError):
        mk.delta_map(mk.rho(p), h)


def test_delta_isometry_and_orthogonality(elliptic):
    p, _, v = elliptic
    rng = random.Random(13)
    for _ in range(150):
        d1 = tuple(rng.randint(-5, 5) for _ in range(2))
        d2 = tuple(rng.randint(-5, 5) for _ in range(2))
        x, y = mk.delta_map(v, d1), mk.delta_map(v, d2)
        assert mk.mukai_pairing(x, y) == lat.pairing(p, d1, d2)
        assert mk.mukai_pairing(v, x) == 0
        assert mk.mukai_pairing(mk.rho(p), x) == 0


def test_decompose(elliptic, a1_instance):
    p, _, v = elliptic
    assert mk.decompose(v, v) == (1, 0, (0, 0))
    assert mk.decompose(v, mk.rho(p)) == (0, 1, (0, 0))
    inst = a1_instance
    cv, cr, d = mk.decompose(inst.v, inst.v_list[0])
    rebuilt = cv * inst.v + cr * mk.rho(inst.lattice) + mk.delta_map(inst.v, d)
    assert rebuilt == inst.v_list[0]
    rng = random.Random(17)
    for _ in range(100):
        x = mk.MukaiVector(Fraction(rng.randint(-9, 9), rng.randint(1, 4)),
                           tuple(Fraction(rng.randint(-9, 9), rng.randint(1, 3))
                                 for _ in range(2)),
                           Fraction(rng.randint(-9, 9), rng.randint(1, 4)), p)
        cv, cr, d = mk.decompose(v, x)
        assert cv * v + cr * mk.rho(p) + mk.delta_map(v, d) == x


def test_isotropic_primitive(elliptic):
    p, _, v = elliptic
    assert mk.is_isotropic(v)
    assert mk.is_primitive(v)
    assert not mk.is_primitive(2 * v)
    assert mk.is_isotropic(mk.rho(p))
    with pytest.raises(ValueError):
        mk.is_primitive(mk.MukaiVector(Fraction(1, 2), (0, 0), 0, p))


def test_twist_parameter_constraints(a1_instance):
    inst = a1_instance
    v, h = inst.v, inst.polarization
    # valid: delta of an H-orthogonal divisor
    good = mk.delta_map(v, (1, -1))
    mk.TwistParameter(good, v, h)
    with pytest.raises(InvalidTwist):
        mk.TwistParameter(mk.unit(inst.lattice), v, h)  # rank not 0
    with pytest.raises(InvalidTwist):
        mk.TwistParameter(mk.delta_map(v, (1, 0)), v, h)  # (c1, H) != 0
    with pytest.raises(InvalidTwist):
        mk.TwistParameter(mk.MukaiVector(0, (1, -1), 5, inst.lattice), v, h)  # bad s


def test_twisted_comparator(elliptic, a1_instance):
    p, h, v = elliptic
    x = mk.MukaiVector(1, (0, 1), 2, p)
    assert mk.twisted_comparator(v, h, x, x) == 0
    # equal slopes, w-term decides: equality of <w,x>/rk x forces 0
    inst = a1_instance
    v0, v1 = inst.v_list
    assert mk.twisted_comparator(inst.v, inst.polarization, v0, v1) == 0
    # fundamental-chamber twist makes the stratum side strictly smaller
    from k3walls import families
    alpha = families.fundamental_alpha(inst).alpha
    w = inst.v + alpha
    assert mk.twisted_comparator(w, inst.polarization, v1, inst.v) == -1
    assert mk.twisted_comparator(w, inst.polarization, inst.v, v1) == 1
    with pytest.raises(ValueError):
        mk.twisted_comparator(w, inst.polarization, mk.rho(inst.lattice), v1)
    # equal slopes, w = v: the Euler term alone decides
    x = mk.MukaiVector(1, (0, 1), 0, p)
    y = mk.MukaiVector(1, (0, 1), 1, p)
    assert mk.twisted_comparator(v, h, x, y) == -1
    assert mk.twisted_comparator(v, h, y, x) == 1
