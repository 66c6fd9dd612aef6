import random
from itertools import product

import pytest

from motive_calc.endos import (
    aff_compose,
    aff_end,
    aff_identity,
    chi_tilde,
    enumerate_surf,
    mu0,
    mu_minus1,
    mu_tilde,
    sigma_end,
    surf_compose,
    surf_end,
    surf_identity,
    tau_end,
    tensor_compose,
    tensor_end,
    tensor_identity,
    verify_structure_identities,
)
from motive_calc.groups import GElem, LevelMismatchError


def test_collapse_absorbs_right():
    n = 5
    m0 = mu0(n)
    assert surf_compose(m0, tau_end(n, 2, 3)) == m0
    assert surf_compose(m0, mu_minus1(n)) == m0
    assert surf_compose(mu_minus1(n), m0) == m0  # inversion fixes the zero section


def test_translation_after_collapse():
    n = 5
    got = surf_compose(tau_end(n, 2, 3), mu0(n))
    assert got == surf_end(n, 2, 3, 1, collapse=True)


def test_identity_law():
    n = 4
    for f in enumerate_surf(n):
        assert surf_compose(surf_identity(n), f) == f
        assert surf_compose(f, surf_identity(n)) == f


def test_collapse_sign_normalization():
    n = 3
    # the presentation has 2|G| collapse pairs but only N^2 distinct maps
    raw = {surf_end(n, b1, b2, s, True) for b1 in range(n) for b2 in range(n) for s in (1, -1)}
    assert len(raw) == n * n
    assert len(enumerate_surf(n)) == 3 * n * n


def test_surf_associativity_exhaustive():
    n = 3
    elems = enumerate_surf(n)
    for a, b, c in product(elems, repeat=3):
        assert surf_compose(surf_compose(a, b), c) == surf_compose(a, surf_compose(b, c))


def test_surf_associativity_sampled_larger_level():
    n = 5
    elems = enumerate_surf(n)
    rng = random.Random(13)
    for _ in range(20000):
        a, b, c = (rng.choice(elems) for _ in range(3))
        assert surf_compose(surf_compose(a, b), c) == surf_compose(a, surf_compose(b, c))


def test_collapse_ideal():
    n = 3
    for f in enumerate_surf(n):
        for g in enumerate_surf(n):
            if g.collapse:
                assert surf_compose(f, g).collapse


def test_level_mismatch():
    with pytest.raises(LevelMismatchError):
        surf_compose(mu0(3), mu0(4))


def test_tensor_products_of_partial_collapses():
    n = 4
    m01 = mu_tilde(n, True, False)
    m10 = mu_tilde(n, False, True)
    m00 = mu_tilde(n, True, True)
    assert tensor_compose(m01, m10) == m00
    assert tensor_compose(m10, m01) == m00


def test_sigma_involution_and_conjugation():
    n = 4
    s = sigma_end(n)
    assert tensor_compose(s, s) == tensor_identity(n)
    g1 = GElem(n, 1, 2, 1)
    g2 = GElem(n, 3, 0, -1)
    conj = tensor_compose(tensor_compose(s, chi_tilde(n, g1, g2)), s)
    assert conj == chi_tilde(n, g2, g1)


def test_swap_conjugation_is_automorphism():
    n = 3
    s = sigma_end(n)
    elems = enumerate_surf(n)
    rng = random.Random(3)
    for _ in range(300):
        a = tensor_end(n, rng.choice(elems), rng.choice(elems), rng.random() < 0.5)
        b = tensor_end(n, rng.choice(elems), rng.choice(elems), rng.random() < 0.5)
        conj_a = tensor_compose(tensor_compose(s, a), s)
        conj_b = tensor_compose(tensor_compose(s, b), s)
        assert tensor_compose(conj_a, conj_b) == tensor_compose(
            tensor_compose(s, tensor_compose(a, b)), s
        )
        assert tensor_compose(tensor_compose(s, conj_a), s) == a


def test_tensor_associativity_submodel_exhaustive():
    n = 3
    factors = [surf_identity(n), mu0(n), surf_end(n, 1, 0, 1, True)]
    elems = [tensor_end(n, a, b, sw) for a in factors for b in factors for sw in (False, True)]
    for a, b, c in product(elems, repeat=3):
        assert tensor_compose(tensor_compose(a, b), c) == tensor_compose(a, tensor_compose(b, c))


def test_tensor_associativity_sampled():
    n = 3
    elems = enumerate_surf(n)
    rng = random.Random(11)
    for _ in range(4000):
        xs = [
            tensor_end(n, rng.choice(elems), rng.choice(elems), rng.random() < 0.5)
            for _ in range(3)
        ]
        a, b, c = xs
        assert tensor_compose(tensor_compose(a, b), c) == tensor_compose(a, tensor_compose(b, c))


def test_aff_composition():
    n = 5
    assert aff_compose(aff_end(n, n), aff_end(n, 1, 2, 3)) == aff_end(n, n)  # mu(N) kills torsion
    assert aff_compose(aff_end(n, -1), aff_end(n, -1)) == aff_identity(n)
    assert aff_compose(aff_end(n, 1, 1, 2), aff_end(n, 1, 3, 4)) == aff_end(n, 1, 4, 1)


def test_aff_inverse():
    n = 7
    f = aff_end(n, -1, 2, 5)
    assert aff_compose(f, f.inv()) == aff_identity(n)
    with pytest.raises(ValueError):
        aff_end(n, 2).inv()


@pytest.mark.parametrize("n", [3, 4, 5])
def test_structure_identities(n):
    entries = verify_structure_identities(n)
    assert len(entries) == 3
    assert all(e["status"] == "pass" for e in entries)
