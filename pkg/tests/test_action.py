import random

import pytest

from maxcurves.action import (ActionError, Mat2, family_census,
                              common_fixed_curve_points, fixed_points,
                              is_semiregular, line_image, orbits,
                              restrict_to_line, sharply_2_transitive,
                              stabilizer_census, sylow_census)
from maxcurves.curves import FermatHermitian, NormTraceHermitian
from maxcurves.gf import build_field
from maxcurves.pgu3 import (Projectivity, generate, make_alpha, make_alpha_a,
                            make_beta, make_three_cycle)
from maxcurves.proj3 import ProjLine, ProjPoint, all_points

random.seed(903)


def curve_point_list(model):
    return [P for P in all_points(model.field) if model.contains(P)]


def brute_fixed_on_curve(sigma, model):
    """Oracle: scan every rational curve point for sigma(P) = P."""
    return sorted(P.coords for P in curve_point_list(model)
                  if sigma.apply_point(P) == P)


def test_identity_fixes_all():
    model = FermatHermitian(4)
    fps = fixed_points(Projectivity.identity(model.field), model)
    assert fps.kind == "all"
    with pytest.raises(ActionError):
        fps.on_curve_count()


def test_alpha_fixes_fundamental_triangle_off_curve():
    F = build_field(2, 10)
    model = FermatHermitian(32)
    fps = fixed_points(make_alpha(F, F.root_of_unity(11), 2), model)
    assert fps.kind == "points"
    assert sorted(p.coords for p, _ in fps.points) == [
        (0, 0, 1), (0, 1, 0), (1, 0, 0)]
    assert fps.on_curve_count() == 0


@pytest.mark.parametrize("q", [2, 4, 8])
def test_fixed_points_match_brute_force_scan(q):
    """Oracle equivalence at small q: eigen analysis vs full curve scan."""
    model = FermatHermitian(q)
    F = model.field
    elements = [make_alpha(F, F.root_of_unity(q + 1), 1),
                make_alpha(F, F.root_of_unity(q + 1), 2),
                make_three_cycle(F, 1, 1)]
    if (q + 1) % 3 == 0 and (q + 1) // 3 > 1:
        elements.append(make_alpha(F, F.root_of_unity((q + 1) // 3), 2))
    # a homology: repeated unit eigenvalue, secant axis
    elements.append(Projectivity(F, (1, 0, 0, 0, F.root_of_unity(q + 1), 0,
                                     0, 0, 1)))
    for sigma in elements:
        fps = fixed_points(sigma, model)
        rational = sorted(P.coords for P in fps.curve_points()
                          if P.field is F)
        assert rational == brute_fixed_on_curve(sigma, model)


def test_homology_axis_classification_matches_enumeration():
    model = FermatHermitian(4)
    F = model.field
    # diag(1, mu, 1): axis Y = 0, center (0, 1, 0) off the curve
    sigma = Projectivity(F, (1, 0, 0, 0, F.root_of_unity(5), 0, 0, 0, 1))
    fps = fixed_points(sigma, model)
    assert fps.kind == "line"
    assert fps.axis_curve_count == 5  # secant: q + 1
    assert fps.center is not None and not fps.center[1]
    assert len(brute_fixed_on_curve(sigma, model)) == 5


def test_beta_fixes_infinite_line_one_curve_point():
    F = build_field(2, 12)
    model = NormTraceHermitian(64)
    fps = fixed_points(make_beta(F, 1, conj_exp=64), model)
    assert fps.kind == "line"
    assert fps.axis.coords == (0, 0, 1)
    assert fps.axis_curve_count == 1  # tangent at the ideal point
    assert [P.coords for P in fps.curve_points()] == [(1, 0, 0)]


def test_semiregular_examples():
    F = build_field(2, 10)
    model = FermatHermitian(32)
    G = generate([make_alpha(F, F.root_of_unity(11), 2)])
    assert is_semiregular(G, model)
    F12 = build_field(2, 12)
    nt = NormTraceHermitian(64)
    withbeta = generate([make_beta(F12, 1, conj_exp=64)])
    assert not is_semiregular(withbeta, nt)
    trivial = generate([Projectivity.identity(F)])
    assert is_semiregular(trivial, model)


def test_semiregularity_forces_count_divisibility():
    # free action: the rational point count is a multiple of the group order
    F = build_field(2, 10)
    model = FermatHermitian(32)
    G = generate([make_alpha(F, F.root_of_unity(11), 2)])
    assert is_semiregular(G, model)
    assert model.count_rational_points() % G.order == 0
    assert 32**3 + 1 == 11 * 2979


def test_orbits_of_fundamental_triangle_under_three_cycle():
    F = build_field(2, 4)
    h = generate([make_three_cycle(F, 1, 1)])
    tri = [ProjPoint(F, (1, 0, 0)), ProjPoint(F, (0, 1, 0)),
           ProjPoint(F, (0, 0, 1))]
    parts = orbits(h, tri)
    assert len(parts) == 1 and len(parts[0]) == 3


def test_orbits_singleton_group():
    F = build_field(2, 4)
    trivial = generate([Projectivity.identity(F)])
    pts = [ProjPoint(F, (1, 0, 0)), ProjPoint(F, (1, 1, 1))]
    assert [len(o) for o in orbits(trivial, pts)] == [1, 1]


def test_orbits_rejects_unclosed_sets():
    F = build_field(2, 4)
    h = generate([make_three_cycle(F, 1, 1)])
    with pytest.raises(ActionError):
        orbits(h, [ProjPoint(F, (1, 0, 0))])


def test_orbit_stabilizer_identity():
    model = FermatHermitian(4)
    F = model.field
    G = generate([make_alpha(F, F.root_of_unity(5), 2),
                  make_three_cycle(F, 1, 1)])
    pts = curve_point_list(model)
    for orbit in orbits(G, pts):
        P = orbit[0]
        stab = sum(1 for g in G.elements if g.apply_point(P) == P)
        assert len(orbit) * stab == G.order


def test_stabilizer_census_semiregular_group_is_empty():
    F = build_field(2, 10)
    model = FermatHermitian(32)
    G = generate([make_alpha(F, F.root_of_unity(11), 2)])
    census = stabilizer_census(G, G, model)
    assert census.incidence == 0 and census.size == 0
    assert census.n_orbits == 0


def test_stabilizer_census_degenerate_nesting():
    model = FermatHermitian(4)
    F = model.field
    G = generate([make_alpha(F, F.root_of_unity(5), 2)])
    census = stabilizer_census(G, G, model)
    assert census.incidence == 0  # fundamental points are off the curve


def test_stabilizer_census_requires_normality():
    F = build_field(2, 18)
    model = FermatHermitian(512)
    xi = F.root_of_unity(57)
    zeta = F.root_of_unity(513)
    G = generate([make_alpha(F, xi, 8), make_three_cycle(F, zeta, 1, q=512)])
    H = generate([make_three_cycle(F, zeta, 1, q=512)])  # not normal in G
    with pytest.raises(ActionError):
        stabilizer_census(G, H, model)


def test_mini_census_n3():
    """The n = 3 instance of the weighted 3-cycle census: |I| = 4(q+1)/3,
    half as many points, two orbits of the diagonal stabilizer."""
    q = 8
    F = build_field(2, 6)
    model = FermatHermitian(q)
    theta = F.root_of_unity(3)
    zeta = F.root_of_unity(9)
    h = make_three_cycle(F, zeta, 1, q=q)
    family = []
    for j in (1, 2):
        s = make_alpha(F, F.pow(theta, j), 2) * h
        family.append(s)
        family.append(s * s)
    omega = F.root_of_unity(3)
    stab = generate([Projectivity(F, (omega, 0, 0, 0, F.mul(omega, omega), 0,
                                      0, 0, 1))])
    census = family_census(family, stab, model)
    assert census.incidence == 4 * (q + 1) // 3 == 12
    assert census.size == 2 * (q + 1) // 3 == 6
    assert census.n_orbits == 2
    assert sorted(len(o) for o in census.orbit_partition) == [3, 3]
    assert census.pointwise_incidence(family) == census.incidence
    # all census points lie in the cubic extension and on the curve
    assert {P.field.k for P in census.points} == {18}


def test_mini_census_same_for_other_three_cycle_shape():
    # the two 3-cycle shapes act as the two possible cycles on the
    # fundamental triangle; the census data is identical for either
    q = 8
    F = build_field(2, 6)
    model = FermatHermitian(q)
    theta = F.root_of_unity(3)
    zeta = F.root_of_unity(9)
    results = []
    for shape in (1, 2):
        h = make_three_cycle(F, zeta, 1, q=q, shape=shape)
        family = []
        for j in (1, 2):
            s = make_alpha(F, F.pow(theta, j), 2) * h
            family.extend([s, s * s])
        omega = F.root_of_unity(3)
        stab = generate([Projectivity(F, (omega, 0, 0, 0,
                                          F.mul(omega, omega), 0, 0, 0, 1))])
        census = family_census(family, stab, model)
        results.append((census.incidence, census.size, census.n_orbits))
    assert results[0] == results[1] == (12, 6, 2)


def test_census_double_count_against_brute_force_n3():
    # independent recount on the same family through raw point fixing
    q = 8
    F = build_field(2, 6)
    model = FermatHermitian(q)
    theta = F.root_of_unity(3)
    h = make_three_cycle(F, F.root_of_unity(9), 1, q=q)
    family = []
    for j in (1, 2):
        s = make_alpha(F, F.pow(theta, j), 2) * h
        family.extend([s, s * s])
    stab = generate([Projectivity.identity(F)])
    census = family_census(family, stab, model)
    by_points = census.pointwise_incidence(family)
    by_elements = sum(c for _, c in census.per_element)
    assert by_points == by_elements == census.incidence


def test_restrict_to_line_basics():
    F = build_field(2, 10)
    line = ProjLine(F, (0, 0, 1))
    ident = Projectivity.identity(F)
    assert restrict_to_line(ident, line).is_identity()
    theta = F.root_of_unity(11)
    a = make_alpha(F, theta, 2)
    r = restrict_to_line(a, line)
    assert r == Mat2(F, (theta, 0, 0, F.pow(theta, 2)))


def test_restrict_to_line_homomorphism_random_pairs():
    F = build_field(2, 10)
    line = ProjLine(F, (0, 0, 1))
    G = generate([make_alpha(F, F.root_of_unity(33), 2)])
    els = G.elements
    for _ in range(100):
        a, b = random.choice(els), random.choice(els)
        assert restrict_to_line(a * b, line) == \
            restrict_to_line(a, line) * restrict_to_line(b, line)


def test_restrict_to_line_requires_stabilization():
    F = build_field(2, 10)
    h = make_three_cycle(F, 1, 1)
    line = ProjLine(F, (0, 0, 1))
    assert line_image(h, line) != line
    with pytest.raises(ActionError):
        restrict_to_line(h, line)


def test_restrict_to_general_line_via_frame_change():
    F = build_field(2, 4)
    line = ProjLine(F, (1, 0, 0))  # X = 0, stabilized by diagonals
    a = make_alpha(F, F.root_of_unity(5), 2)
    r = restrict_to_line(a, line)
    b = make_alpha(F, F.root_of_unity(5), 3)
    assert restrict_to_line(a * b, line) == r * restrict_to_line(b, line)


def order20_group():
    F = build_field(2, 12)
    kernel = [c for c in F.elements() if F.add(F.pow(c, 64), c) == 0]
    u = min(c for c in kernel if c not in (0, 1))
    return F, generate([make_beta(F, 1, conj_exp=64),
                        make_beta(F, u, conj_exp=64),
                        make_alpha_a(F, F.root_of_unity(5), 64)])


def test_sylow_census_cyclic_group():
    F = build_field(2, 10)
    G = generate([make_alpha(F, F.root_of_unity(11), 2)])
    count, sylows = sylow_census(G, 11)
    assert count == 1 and sylows[0].order == 11


def test_sylow_census_order20_group():
    F, G = order20_group()
    assert G.order == 20
    count, sylows = sylow_census(G, 2)
    assert count == 1 and sylows[0].order == 4
    model = NormTraceHermitian(64)
    fixed = common_fixed_curve_points(sylows[0], model)
    assert [P.coords for P in fixed] == [(1, 0, 0)]
    assert len(orbits(G, fixed)) == 1  # a single orbit
    assert not sharply_2_transitive(G, fixed)  # orbit of length 1


def test_sylow_census_requires_dividing_prime():
    F, G = order20_group()
    with pytest.raises(ActionError):
        sylow_census(G, 3)


def test_sharply_2_transitive_cases():
    F = build_field(2, 4)
    trivial = generate([Projectivity.identity(F)])
    single = [ProjPoint(F, (1, 0, 0))]
    assert sharply_2_transitive(trivial, single)  # vacuous
    G = generate([make_alpha(F, F.root_of_unity(5), 2)])
    tri = [ProjPoint(F, (1, 0, 0)), ProjPoint(F, (0, 1, 0)),
           ProjPoint(F, (0, 0, 1))]
    assert not sharply_2_transitive(G, tri)  # not even transitive
