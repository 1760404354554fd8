"""Group actions on Hermitian curves: fixed points, orbits, censuses, Sylow.

Fixed points come from eigen-analysis, never from curve enumeration: the
characteristic polynomial (degree 3) is factored over the base field and,
for the irreducible part, over the quadratic or cubic extension where its
roots live.  One-dimensional eigenspaces give isolated fixed points;
two-dimensional ones give a pointwise-fixed line (homology or elation),
whose curve intersection is decided by the tangent/secant classification
through the polarity (and by enumeration in oracle tests at small q).
"""

from .gf import build_field, embed
from .polyroots import divmod_poly, roots, roots_with_multiplicity
from .proj3 import ProjLine, ProjPoint, line_points, pole
from .pgu3 import Projectivity, SubgroupSpec, generate


class ActionError(ValueError):
    pass


class FixedPointSet:
    """Fixed points of one projectivity: kind 'all', 'points', or 'line'.

    kind 'points': up to three isolated fixed points, each tagged on-curve.
    kind 'line': a pointwise-fixed axis plus, for a homology, its center.
    """

    def __init__(self, kind, points=(), axis=None, center=None,
                 axis_curve_count=None, model=None):
        self.kind = kind
        self.points = list(points)  # [(ProjPoint, on_curve)]
        self.axis = axis
        self.center = center        # (ProjPoint, on_curve) or None
        self.axis_curve_count = axis_curve_count
        self.model = model

    def on_curve_count(self):
        if self.kind == "all":
            raise ActionError("the identity fixes the whole curve")
        n = sum(1 for _, on in self.points if on)
        if self.kind == "line":
            n += self.axis_curve_count
            if self.center is not None and self.center[1]:
                n += 1
        return n

    def curve_points(self, enumerate_axis=True):
        """The on-curve fixed points as ProjPoints (axis enumerated if needed)."""
        if self.kind == "all":
            raise ActionError("the identity fixes the whole curve")
        pts = [p for p, on in self.points if on]
        if self.kind == "line":
            if self.center is not None and self.center[1]:
                pts.append(self.center[0])
            if self.axis_curve_count:
                if not enumerate_axis:
                    raise ActionError("axis points requested without enumeration")
                pts.extend(p for p in line_points(self.axis)
                           if self.model.contains(p))
        return pts


def _nullspace3(F, m):
    rows = [list(m[0:3]), list(m[3:6]), list(m[6:9])]
    pivots = []
    r = 0
    for c in range(3):
        pr = next((i for i in range(r, 3) if rows[i][c]), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, v) for v in rows[r]]
        for i in range(3):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [F.sub(rows[i][j], F.mul(f, rows[r][j])) for j in range(3)]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(3) if c not in pivots):
        v = [0, 0, 0]
        v[fc] = 1
        for pi, pc in enumerate(pivots):
            v[pc] = F.neg(rows[pi][fc])
        basis.append(tuple(v))
    return basis


def _cross(F, a, b):
    return (
        F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
        F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
        F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0])),
    )


def _axis_curve_count(axis, model):
    """|axis intersect curve| by the tangent/secant classification (the
    oracle tests compare this against enumeration at small q)."""
    P = pole(axis, model)
    return model.tangent_line_size() if model.contains(P) else model.secant_line_size()


def fixed_points(sigma: Projectivity, model) -> FixedPointSet:
    """Fixed points of sigma on PG(2), tagged by membership in the model."""
    F = sigma.field
    if F is not model.field:
        raise ActionError("element is not over the model's field")
    if sigma.is_identity():
        return FixedPointSet("all", model=model)
    cp = sigma.char_poly()
    eigendata = []  # (field, transported matrix entries, eigenvalue)
    rem = cp
    for lam, mult in roots_with_multiplicity(F, cp):
        eigendata.append((F, sigma.m, lam))
        for _ in range(mult):
            rem = divmod_poly(F, rem, (F.neg(lam), 1))[0]
    if len(rem) - 1 > 0:
        d = len(rem) - 1  # 2 or 3: roots live in the degree-d extension
        E = build_field(F.p, F.k * d)
        tm = embed(F, E)
        rem_e = tuple(tm(c) for c in rem)
        m_e = tuple(tm(c) for c in sigma.m)
        for lam in roots(E, rem_e):
            eigendata.append((E, m_e, lam))
    isolated = []
    axis = None
    axis_field = None
    for E, m_e, lam in eigendata:
        shifted = list(m_e)
        for di in (0, 4, 8):
            shifted[di] = E.sub(shifted[di], lam)
        basis = _nullspace3(E, shifted)
        if len(basis) == 1:
            isolated.append(ProjPoint(E, basis[0]))
        elif len(basis) == 2:
            axis = ProjLine(E, _cross(E, basis[0], basis[1]))
            axis_field = E
    if axis is None:
        pts = [(P, model.contains(P)) for P in isolated]
        fps = FixedPointSet("points", pts, model=model)
    else:
        center = None
        if isolated:
            P = isolated[0]
            center = (P, model.contains(P))
        fps = FixedPointSet("line", axis=axis, center=center,
                            axis_curve_count=_axis_curve_count(axis, model),
                            model=model)
    return fps


def is_semiregular(group: SubgroupSpec, model) -> bool:
    """True iff no nontrivial element fixes a point of the curve."""
    return all(fixed_points(s, model).on_curve_count() == 0
               for s in group.nontrivial())


def _transported_generators(group, field):
    if group.field is field:
        return list(group.generators)
    tm = embed(group.field, field)
    return [g.transport(tm) for g in group.generators]


def orbits(group: SubgroupSpec, points):
    """Partition of the points into group orbits.

    The points must be closed under the action (checked).  Each orbit is
    sorted, and orbits are listed by their least representative.
    """
    points = list(points)
    if not points:
        return []
    by_field = {}
    for P in points:
        by_field.setdefault(id(P.field), (P.field, set()))[1].add(P)
    out = []
    for _, (field, pts) in sorted(by_field.items(), key=lambda kv: kv[1][0].order):
        gens = _transported_generators(group, field)
        for P in pts:
            for g in gens:
                if g.apply_point(P) not in pts:
                    raise ActionError("points are not closed under the action")
        remaining = set(pts)
        while remaining:
            seed = min(remaining, key=lambda p: p.coords)
            orbit = {seed}
            frontier = [seed]
            while frontier:
                nxt = []
                for P in frontier:
                    for g in gens:
                        Q = g.apply_point(P)
                        if Q not in orbit:
                            orbit.add(Q)
                            nxt.append(Q)
                frontier = nxt
            remaining -= orbit
            out.append(sorted(orbit, key=lambda p: p.coords))
    out.sort(key=lambda orb: orb[0].coords)
    return out


class StabilizerCensus:
    """Incidence data for a family of nontrivial elements acting on a curve."""

    def __init__(self, incidence, points, per_element, orbit_partition):
        self.incidence = incidence            # |I|: sum of on-curve fixed counts
        self.points = points                  # distinct on-curve fixed points
        self.per_element = per_element        # [(element, count)]
        self.orbit_partition = orbit_partition
        self.n_orbits = len(orbit_partition)

    @property
    def size(self):
        return len(self.points)

    def pointwise_incidence(self, elements):
        """Independent recount of |I|: sum over census points of the number
        of the given nontrivial elements fixing them."""
        total = 0
        cache = {}
        for P in self.points:
            fid = id(P.field)
            if fid not in cache:
                cache[fid] = [_maybe_transport(e, P.field) for e in elements]
            total += sum(1 for e in cache[fid] if _fixes_point(e, P))
        return total


def _fixes_point(g, P):
    # proportionality of g(P) and P without any inversion
    F = g.field
    a = g.apply(P.coords)
    b = P.coords
    return (F.mul(a[0], b[1]) == F.mul(a[1], b[0])
            and F.mul(a[0], b[2]) == F.mul(a[2], b[0])
            and F.mul(a[1], b[2]) == F.mul(a[2], b[1]))


def _maybe_transport(g, field):
    if g.field is field:
        return g
    return g.transport(embed(g.field, field))


def family_census(elements, group: SubgroupSpec, model) -> StabilizerCensus:
    """Census of the on-curve fixed points of an explicit element family,
    with the census set partitioned into orbits of `group`."""
    incidence = 0
    per_element = []
    census = []
    seen = set()
    for s in elements:
        if s.is_identity():
            continue
        fps = fixed_points(s, model)
        pts = fps.curve_points()
        incidence += len(pts)
        per_element.append((s, len(pts)))
        for P in pts:
            if P not in seen:
                seen.add(P)
                census.append(P)
    partition = orbits(group, census) if census else []
    return StabilizerCensus(incidence, census, per_element, partition)


def stabilizer_census(gbar: SubgroupSpec, g_normal: SubgroupSpec, model) -> StabilizerCensus:
    """Census over all nontrivial elements of gbar, with g_normal-orbits.

    g_normal must be normal in gbar (verified by conjugating generators).
    """
    if not g_normal.is_normal_in(gbar):
        raise ActionError("the designated subgroup is not normal")
    return family_census(gbar.nontrivial(), g_normal, model)


# -- restriction to a stabilized line -----------------------------------------


class Mat2:
    """A 2x2 projectivity (matrix mod scalars) over a field."""

    __slots__ = ("field", "m")

    def __init__(self, field, entries):
        m = tuple(entries)
        for e in m:
            if e:
                inv = field.inv(e)
                m = tuple(field.mul(inv, x) for x in m)
                break
        else:
            raise ActionError("zero 2x2 matrix")
        if field.sub(field.mul(m[0], m[3]), field.mul(m[1], m[2])) == 0:
            raise ActionError("singular 2x2 matrix")
        self.field = field
        self.m = m

    def __eq__(self, other):
        return (isinstance(other, Mat2) and self.field is other.field
                and self.m == other.m)

    def __hash__(self):
        return hash((id(self.field), "mat2", self.m))

    def __mul__(self, other):
        F = self.field
        a, b = self.m, other.m
        return Mat2(F, (
            F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])),
            F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
            F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])),
            F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3])),
        ))

    def is_identity(self):
        return self.m == (1, 0, 0, 1)

    def __repr__(self):
        return f"Mat2[{self.m[0:2]}, {self.m[2:4]}]"


def line_image(sigma: Projectivity, line: ProjLine) -> ProjLine:
    """The image line: coordinates transform by the inverse matrix."""
    F = sigma.field
    inv = sigma.inverse().m
    l = line.coords
    out = []
    for i in range(3):
        acc = 0
        for j in range(3):
            acc = F.add(acc, F.mul(l[j], inv[3 * j + i]))
        out.append(acc)
    return ProjLine(F, out)


def _frame_to_infinity(line: ProjLine) -> Projectivity:
    """A change of frame carrying the line to T = 0 (third row = line coords)."""
    F = line.field
    j = next(i for i, c in enumerate(line.coords) if c)
    rows = []
    for i in range(3):
        if i != j:
            e = [0, 0, 0]
            e[i] = 1
            rows.append(tuple(e))
    rows.append(line.coords)
    return Projectivity(F, rows[0] + rows[1] + rows[2])


def restrict_to_line(sigma: Projectivity, line: ProjLine) -> Mat2:
    """The action induced on a stabilized line, as a 2x2 matrix mod scalars."""
    if line_image(sigma, line) != line:
        raise ActionError("element does not stabilize the line")
    F = sigma.field
    g = _frame_to_infinity(line)
    s = g * sigma * g.inverse()
    m = s.m
    if m[6] != 0 or m[7] != 0:
        raise ActionError("conjugated matrix does not fix T = 0 (unreachable)")
    return Mat2(F, (m[0], m[1], m[3], m[4]))


# -- Sylow analysis ------------------------------------------------------------


def _is_p_power(n, p):
    while n % p == 0:
        n //= p
    return n == 1


def sylow_census(group: SubgroupSpec, p: int):
    """All Sylow p-subgroups, found as maximal p-subgroups by closure over
    the p-elements.  Returns (count, subgroups)."""
    if group.order % p != 0:
        raise ActionError(f"{p} does not divide the group order {group.order}")
    target = 1
    n = group.order
    while n % p == 0:
        n //= p
        target *= p
    p_elements = [g for g in group.elements if _is_p_power(g.order(), p)]
    sylows = []
    seen = set()
    for x in p_elements:
        if x.is_identity():
            continue
        current = generate([x])
        grown = True
        while grown and current.order < target:
            grown = False
            for y in p_elements:
                if y in current.element_set:
                    continue
                trial = generate(current.generators + [y])
                if _is_p_power(trial.order, p):
                    current = trial
                    grown = True
                    break
        key = frozenset(g.m for g in current.elements)
        if key not in seen:
            seen.add(key)
            sylows.append(current)
    if not sylows:
        raise ActionError("no nontrivial p-elements found")
    return len(sylows), sylows


def common_fixed_curve_points(subgroup: SubgroupSpec, model):
    """Curve points fixed by every nontrivial element of the subgroup."""
    common = None
    for s in subgroup.nontrivial():
        pts = set(fixed_points(s, model).curve_points())
        common = pts if common is None else (common & pts)
        if not common:
            return []
    return sorted(common or [], key=lambda P: P.coords)


def sharply_2_transitive(group: SubgroupSpec, orbit) -> bool:
    """Regularity on ordered pairs: |G| = n(n-1) and trivial 2-point stabilizers.

    A trivial group on a single point is vacuously sharply 2-transitive
    (there are no ordered pairs to move).
    """
    orbit = list(orbit)
    n = len(orbit)
    pts = set(orbit)
    for g in group.elements:
        for P in orbit:
            if g.apply_point(P) not in pts:
                raise ActionError("orbit is not closed under the action")
    if n == 1 and group.order == 1:
        return True
    if group.order != n * (n - 1):
        return False
    for P in orbit:
        for Q in orbit:
            if P == Q:
                continue
            fixers = sum(1 for g in group.elements
                         if g.apply_point(P) == P and g.apply_point(Q) == Q)
            if fixers != 1:
                return False
    return True
