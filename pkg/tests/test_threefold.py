import random
from itertools import product

import pytest

from motive_calc.endos import enumerate_surf, mu0, surf_end, surf_identity
from motive_calc.surface import VERT, build_pi_bars, restrict_to_open
from motive_calc.threefold import (
    FIBER3,
    OpenTCorr,
    TCorr,
    ThreefoldDivClass,
    act_on_threefold_divisor,
    b_term_expr,
    build_pi_tildes,
    cusp_incidence,
    estimate_n,
    euler_fiber,
    factor_projector_expr,
    model_full_fiber,
    pair_projector_expr,
    restrict_to_open_t,
    sigma_expr,
    split_sym_alt,
    support_label,
    t_atom,
    t_compose,
    t_delta_expr,
    t_transpose,
    tensor_open,
    theta_half,
    theta_int,
)


def t_delta(n):
    return t_delta_expr(n).expand()


def test_b_terms_orthogonal_and_nilpotent():
    n = 3
    b1 = b_term_expr(n, 1).expand()
    b2 = b_term_expr(n, 2).expand()
    assert t_compose(b1, b2).is_zero()
    assert t_compose(b2, b1).is_zero()
    assert t_compose(b1, b1).is_zero()
    assert support_label(next(iter(b1.terms))) == 1
    assert support_label(next(iter(b2.terms))) == 2


def test_partial_collapse_relations():
    n = 3
    m0 = mu0(n)
    ident = surf_identity(n)
    tg01 = TCorr.of(n, t_atom(("T", m0), ("G", ident)))
    g10 = TCorr.of(n, t_atom(("G", ident), ("G", m0)))
    lhs = t_compose(tg01, g10)
    rhs = t_compose(g10, tg01)
    assert lhs == rhs  # partial collapses on different slots commute
    assert not lhs.is_zero()


def test_sigma_involution():
    n = 3
    sig = sigma_expr(n).expand()
    assert t_compose(sig, sig) == t_delta(n)


def test_two_vertical_factors_vanish():
    assert t_atom(VERT, VERT) is None
    n = 3
    left = TCorr.of(n, t_atom(VERT, ("G", surf_identity(n))))
    right = TCorr.of(n, t_atom(("G", surf_identity(n)), VERT))
    assert t_compose(left, right).is_zero()


@pytest.mark.parametrize("j", [1, 2])
def test_factor_projectors_orthogonal_for_fixed_slot(j, n=3):
    exprs = [factor_projector_expr(n, i, j) for i in range(3)]
    for a in range(3):
        for b in range(3):
            got = exprs[a].compose(exprs[b]).expand()
            want = exprs[a].expand() if a == b else TCorr.zero(n)
            assert got == want


def test_slots_commute(n=3):
    for i1 in range(3):
        for i2 in range(3):
            one = factor_projector_expr(n, i1, 1)
            two = factor_projector_expr(n, i2, 2)
            assert one.compose(two).expand() == two.compose(one).expand()


def test_pair_projectors_kronecker_small(n=3):
    pairs = {(i1, i2): pair_projector_expr(n, i1, i2) for i1 in range(3) for i2 in range(3)}
    keys = list(pairs)
    rng = random.Random(2)
    sample = [(a, b) for a in keys for b in keys]
    for a, b in rng.sample(sample, 30):
        got = pairs[a].compose(pairs[b]).expand()
        want = pairs[a].expand() if a == b else TCorr.zero(n)
        assert got == want


def test_split_sym_alt(n=3):
    from motive_calc.threefold import split_sym_alt_exprs

    alt_expr, sym_expr = split_sym_alt_exprs(n)
    alt, sym = split_sym_alt(n)
    p11 = pair_projector_expr(n, 1, 1).expand()
    assert alt + sym == p11
    assert alt_expr.compose(alt_expr).expand() == alt
    assert sym_expr.compose(sym_expr).expand() == sym
    assert alt_expr.compose(sym_expr).expand().is_zero()
    assert sym_expr.compose(alt_expr).expand().is_zero()


def test_transpose_pairs(n=3):
    tildes = build_pi_tildes(n)
    assert t_transpose(tildes["pi(0,2)"]) == tildes["pi(2,0)"]
    assert t_transpose(tildes["pi(1,1)"]) == tildes["pi(1,1)"]
    assert t_transpose(tildes["pi(0,0)"]) == tildes["pi(2,2)"]


def test_restriction_factorizes(n=3):
    bars = build_pi_bars(n)
    tildes = build_pi_tildes(n)
    for i1 in range(3):
        for i2 in range(3):
            lhs = restrict_to_open_t(tildes[f"pi({i1},{i2})"])
            rhs = tensor_open(restrict_to_open(bars[f"pi{i1}"]), restrict_to_open(bars[f"pi{i2}"]))
            assert lhs == rhs
    assert restrict_to_open_t(b_term_expr(n, 1).expand()) == OpenTCorr(n)
    assert restrict_to_open_t(b_term_expr(n, 2).expand()) == OpenTCorr(n)


def test_action_rows(n=3):
    tildes = build_pi_tildes(n)
    f3 = ThreefoldDivClass.of(n, FIBER3)
    assert act_on_threefold_divisor(tildes["pi(0,0)"], f3) == f3
    assert act_on_threefold_divisor(tildes["pi(1,2)"], f3).is_zero()
    ident = ThreefoldDivClass.of(n, theta_int(0, 0, 0))
    assert act_on_threefold_divisor(tildes["pi(0,0)"], ident) == model_full_fiber(n, 0)
    for key in (theta_int(0, 1, 0), theta_int(0, 0, 2), theta_half(0, 0, 0), theta_half(0, 2, 1)):
        z = ThreefoldDivClass.of(n, key)
        for i1 in range(3):
            for i2 in range(3):
                assert act_on_threefold_divisor(tildes[f"pi({i1},{i2})"], z).is_zero()


def test_sigma_action_transposes_indices(n=3):
    sig = sigma_expr(n).expand()
    z = ThreefoldDivClass.of(n, theta_int(0, 1, 2))
    assert act_on_threefold_divisor(sig, z) == ThreefoldDivClass.of(n, theta_int(0, 2, 1))
    h = ThreefoldDivClass.of(n, theta_half(0, 1, 0))
    assert act_on_threefold_divisor(sig, h) == ThreefoldDivClass.of(n, theta_half(0, 0, 1))


def test_half_index_action(n=4):
    # inversion on a half-integer index: -(p + 1/2) = (-p - 1) + 1/2
    auto = t_atom(("G", surf_end(n, 1, 0, -1)), ("G", surf_identity(n)))
    x = TCorr.of(n, auto)
    z = ThreefoldDivClass.of(n, theta_half(0, 1, 1))
    want = ThreefoldDivClass.of(n, theta_half(0, (1 - 1 - 1) % n, 1))
    assert act_on_threefold_divisor(x, z) == want


def test_action_coherence_sampled(n=3):
    ends = enumerate_surf(n)
    satoms = [("G", e) for e in ends] + [("T", e) for e in ends if e.collapse] + [VERT]
    keys = [FIBER3]
    keys += [theta_int(0, m, k) for m in range(n) for k in range(n)]
    keys += [theta_half(0, p, q) for p in range(n) for q in range(n)]
    rng = random.Random(17)
    checked = 0
    while checked < 4000:
        la, ra = rng.choice(satoms), rng.choice(satoms)
        lb, rb = rng.choice(satoms), rng.choice(satoms)
        xa = t_atom(la, ra, rng.random() < 0.5)
        xb = t_atom(lb, rb, rng.random() < 0.5)
        if xa is None or xb is None:
            continue
        x, y = TCorr.of(n, xa), TCorr.of(n, xb)
        z = ThreefoldDivClass.of(n, rng.choice(keys))
        lhs = act_on_threefold_divisor(t_compose(x, y), z)
        rhs = act_on_threefold_divisor(x, act_on_threefold_divisor(y, z))
        assert lhs == rhs
        checked += 1


def test_t_compose_associativity_submodel(n=3):
    factors = [("G", surf_identity(n)), ("G", mu0(n)), ("T", mu0(n)), VERT]
    atoms = []
    for left in factors:
        for right in factors:
            for sw in (False, True):
                a = t_atom(left, right, sw)
                if a is not None:
                    atoms.append(a)
    corrs = {a: TCorr.of(n, a) for a in atoms}
    for a, b, c in product(atoms, repeat=3):
        lhs = t_compose(t_compose(corrs[a], corrs[b]), corrs[c])
        rhs = t_compose(corrs[a], t_compose(corrs[b], corrs[c]))
        assert lhs == rhs


def test_t_compose_associativity_sampled(n=3):
    ends = enumerate_surf(n)
    satoms = [("G", e) for e in ends] + [("T", e) for e in ends if e.collapse] + [VERT]
    rng = random.Random(23)
    done = 0
    while done < 2500:
        picks = []
        while len(picks) < 3:
            a = t_atom(rng.choice(satoms), rng.choice(satoms), rng.random() < 0.5)
            if a is not None:
                picks.append(TCorr.of(n, a))
        a, b, c = picks
        assert t_compose(t_compose(a, b), c) == t_compose(a, t_compose(b, c))
        done += 1


def test_factored_and_naive_composition_agree(n=3):
    exprs = [pair_projector_expr(n, i1, i2) for i1 in range(3) for i2 in range(3)]
    rng = random.Random(31)
    for _ in range(12):
        a = rng.choice(exprs)
        b = rng.choice(exprs)
        assert a.compose(b).expand() == t_compose(a.expand(), b.expand())


def test_incidence_complex_counts():
    for n in (3, 4):
        ic = cusp_incidence(n)
        assert len(ic.vertices) == 2 * n * n
        assert len(ic.edges) == 6 * n * n
        assert len(ic.triples) == 4 * n * n
        data = ic.to_json()
        quad_neighbors = data["adjacency"]["Q(0+1/2,0+1/2)"]
        assert len(quad_neighbors) == 4
        assert all(name.startswith("T(") for name in quad_neighbors)


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_euler_fiber_closed_form(n):
    assert euler_fiber(n) == 4 * n * n


@pytest.mark.parametrize("n", [3, 4, 5])
def test_estimate_n_consistent(n):
    est = estimate_n(n)
    assert est["experimental"] is True
    assert est["consistent"] is True
    assert est["positive_integer"] is True
    assert est["n_euler"] == est["n_lattice"]


def test_estimate_n_level_three_value():
    # lattice route: 4 + cusps * (2 N^2 - 1) = 4 + 4 * 17
    assert estimate_n(3)["n_lattice"] == 72
