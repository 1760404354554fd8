"""Projectivities of PG(2, F_{q^2}) modulo scalars, and small subgroups.

A Projectivity stores a 3x3 invertible matrix as a 9-tuple (row-major) in
canonical form: scaled so the first nonzero entry is 1.  All equality and
hashing goes through that form, so scalar multiples collapse to one object.
Element orders are computed against the divisor lattice of |PGL(3, Q)|
rather than by naive iteration.

Subgroup generation is breadth-first product saturation from the identity,
which is exact and deterministic for the group sizes this package handles
(a few hundred elements; the default cap is 2 * 10^6).
"""

from .numbertheory import factorize


class GroupError(ValueError):
    pass


class Projectivity:
    __slots__ = ("field", "m", "_order", "_det")

    def __init__(self, field, entries):
        m = tuple(entries)
        if len(m) != 9:
            raise GroupError("expected nine matrix entries")
        for e in m:
            if e:
                inv = field.inv(e)
                m = tuple(field.mul(inv, x) for x in m)
                break
        else:
            raise GroupError("zero matrix")
        self.field = field
        self.m = m
        self._order = None
        self._det = None
        if self.det() == 0:
            raise GroupError("singular matrix is not a projectivity")

    # -- basics -------------------------------------------------------------

    def __eq__(self, other):
        return (isinstance(other, Projectivity) and self.field is other.field
                and self.m == other.m)

    def __hash__(self):
        return hash((id(self.field), self.m))

    def __repr__(self):
        r = self.m
        return f"Projectivity[{r[0:3]}, {r[3:6]}, {r[6:9]}]"

    @classmethod
    def identity(cls, field):
        return cls(field, (1, 0, 0, 0, 1, 0, 0, 0, 1))

    def is_identity(self):
        return self.m == (1, 0, 0, 0, 1, 0, 0, 0, 1)

    def det(self):
        if self._det is None:
            F, m = self.field, self.m
            t1 = F.mul(m[0], F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7])))
            t2 = F.mul(m[1], F.sub(F.mul(m[3], m[8]), F.mul(m[5], m[6])))
            t3 = F.mul(m[2], F.sub(F.mul(m[3], m[7]), F.mul(m[4], m[6])))
            self._det = F.add(F.sub(t1, t2), t3)
        return self._det

    def __mul__(self, other):
        if self.field is not other.field:
            raise GroupError("projectivities over different fields")
        F = self.field
        a, b = self.m, other.m
        out = []
        for i in range(3):
            for j in range(3):
                acc = 0
                for t in range(3):
                    acc = F.add(acc, F.mul(a[3 * i + t], b[3 * t + j]))
                out.append(acc)
        return Projectivity(F, out)

    def inverse(self):
        F, m = self.field, self.m
        cof = []
        idx = ((1, 2), (0, 2), (0, 1))
        for j in range(3):
            for i in range(3):
                r0, r1 = idx[i]
                c0, c1 = idx[j]
                minor = F.sub(F.mul(m[3 * r0 + c0], m[3 * r1 + c1]),
                              F.mul(m[3 * r0 + c1], m[3 * r1 + c0]))
                cof.append(F.neg(minor) if (i + j) % 2 else minor)
        return Projectivity(F, cof)

    def __pow__(self, e):
        if e < 0:
            return self.inverse() ** (-e)
        r = Projectivity.identity(self.field)
        b = self
        while e:
            if e & 1:
                r = r * b
            b = b * b
            e >>= 1
        return r

    def apply(self, coords):
        """Image of a homogeneous coordinate triple (raw tuple in, raw out)."""
        F, m = self.field, self.m
        x, y, t = coords
        return (
            F.add(F.add(F.mul(m[0], x), F.mul(m[1], y)), F.mul(m[2], t)),
            F.add(F.add(F.mul(m[3], x), F.mul(m[4], y)), F.mul(m[5], t)),
            F.add(F.add(F.mul(m[6], x), F.mul(m[7], y)), F.mul(m[8], t)),
        )

    def apply_point(self, point):
        from .proj3 import ProjPoint
        return ProjPoint(point.field, self.apply(point.coords))

    def char_poly(self):
        """Coefficients (c0, c1, c2, 1) of det(tI - M), low degree first."""
        F, m = self.field, self.m
        tr = F.add(F.add(m[0], m[4]), m[8])
        m00 = F.sub(F.mul(m[4], m[8]), F.mul(m[5], m[7]))
        m11 = F.sub(F.mul(m[0], m[8]), F.mul(m[2], m[6]))
        m22 = F.sub(F.mul(m[0], m[4]), F.mul(m[1], m[3]))
        c1 = F.add(F.add(m00, m11), m22)
        return (F.neg(self.det()), c1, F.neg(tr), 1)

    def transport(self, tower_map):
        """The same projectivity with entries embedded into an extension."""
        return Projectivity(tower_map.dst, tuple(tower_map(e) for e in self.m))

    def order(self):
        """Least n >= 1 with self^n scalar, via the divisors of |PGL(3, Q)|."""
        if self._order is None:
            Q = self.field.order
            n = Q**3 * (Q**3 - 1) * (Q**2 - 1)
            for r, e in factorize(n):
                for _ in range(e):
                    if (self ** (n // r)).is_identity():
                        n //= r
                    else:
                        break
            self._order = n
        return self._order


def order_of(m: Projectivity) -> int:
    return m.order()


# -- the named generator shapes ---------------------------------------------


def make_alpha(field, theta, i):
    """diag(theta, theta^i, 1): (X, Y, T) -> (theta X, theta^i Y, T)."""
    if theta == 0:
        raise GroupError("theta must be nonzero")
    return Projectivity(field, (theta, 0, 0, 0, field.pow(theta, i), 0, 0, 0, 1))


def make_three_cycle(field, lam, mu, q=None, shape=1):
    """A weighted 3-cycle on the fundamental points.

    shape=1: rows (0 lam 0 / 0 0 mu / 1 0 0); shape=2 is the other 3-cycle.
    When q is given, unitarity of the Fermat model demands
    lam^(q+1) = mu^(q+1) = 1, and violations raise.
    """
    if lam == 0 or mu == 0:
        raise GroupError("weights must be nonzero")
    if q is not None:
        if field.pow(lam, q + 1) != 1 or field.pow(mu, q + 1) != 1:
            raise GroupError("weights must be (q+1)-th roots of unity")
    if shape == 1:
        return Projectivity(field, (0, lam, 0, 0, 0, mu, 1, 0, 0))
    if shape == 2:
        return Projectivity(field, (0, 0, lam, mu, 0, 0, 0, 1, 0))
    raise GroupError("shape must be 1 or 2")


def make_beta(field, c, conj_exp=None):
    """(X, Y, T) -> (X + cT, Y, T).  With conj_exp = q^3 the trace-zero
    condition c^(q^3) + c = 0 is enforced (unitarity for the norm-trace model)."""
    if conj_exp is not None:
        if field.add(field.pow(c, conj_exp), c) != 0:
            raise GroupError("c fails the trace-zero condition")
    return Projectivity(field, (1, 0, c, 0, 1, 0, 0, 0, 1))


def make_alpha_a(field, a, q3):
    """(X, Y, T) -> (a^(q^3+1) X, a Y, T) over F_{q^6}."""
    if a == 0:
        raise GroupError("a must be nonzero")
    return Projectivity(field, (field.pow(a, q3 + 1), 0, 0, 0, a, 0, 0, 0, 1))


# -- unitarity ---------------------------------------------------------------


def _gram_elements(field, model):
    from .proj3 import _const
    return [[_const(field, e) for e in row] for row in model.hermitian_gram()]


def unitarity_scalar(m: Projectivity, model):
    """The lambda with conj(M)^T H M = lambda H, or None if M is not unitary."""
    F = m.field
    if F is not model.field:
        raise GroupError("projectivity is not over the model's field")
    q = model.q
    H = _gram_elements(F, model)
    a = m.m
    # B = conj(M)^T H M
    conj = [F.pow(e, q) for e in a]
    HM = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            acc = 0
            for t in range(3):
                acc = F.add(acc, F.mul(H[i][t], a[3 * t + j]))
            HM[i][j] = acc
    lam = None
    for i in range(3):
        for j in range(3):
            acc = 0
            for t in range(3):
                acc = F.add(acc, F.mul(conj[3 * t + i], HM[t][j]))
            h = H[i][j]
            if h == 0:
                if acc != 0:
                    return None
            else:
                ratio = F.div(acc, h)
                if lam is None:
                    lam = ratio
                elif ratio != lam:
                    return None
    return lam


def is_unitary(m: Projectivity, model) -> bool:
    """True iff m commutes with the model's unitary polarity (mod scalars)."""
    return unitarity_scalar(m, model) is not None


def in_psu(m: Projectivity, model) -> bool:
    """True iff det(m), rescaled so the unitarity scalar is 1, is a cube."""
    lam = unitarity_scalar(m, model)
    if lam is None:
        raise GroupError("projectivity is not unitary for this model")
    F = m.field
    q = model.q
    # s^(q+1) = lambda^(-1) is solvable because lambda lies in F_q*
    s = F.nth_root(F.inv(lam), q + 1)
    det = F.mul(F.pow(s, 3), m.det())
    return F.is_dth_power(det, 3)


# -- subgroup generation -------------------------------------------------------


class SubgroupSpec:
    """A finite subgroup given by generators, with its full closure cached."""

    def __init__(self, generators, elements):
        self.generators = list(generators)
        self.elements = list(elements)  # BFS order, identity first
        self.element_set = set(elements)
        self.order = len(elements)
        self.field = generators[0].field if generators else None

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g):
        return g in self.element_set

    def __len__(self):
        return self.order

    def nontrivial(self):
        return (g for g in self.elements if not g.is_identity())

    def is_subgroup_of(self, other):
        return self.element_set <= other.element_set

    def is_normal_in(self, other):
        """Conjugation test of this subgroup's generators by the other's elements."""
        if not self.is_subgroup_of(other):
            return False
        for g in other.elements:
            gi = g.inverse()
            for h in self.generators:
                if g * h * gi not in self.element_set:
                    return False
        return True


def generate(gens, cap=2_000_000) -> SubgroupSpec:
    """Closure of the generators under products (breadth-first, deterministic)."""
    gens = list(gens)
    if not gens:
        raise GroupError("need at least one generator")
    F = gens[0].field
    for g in gens:
        if g.field is not F:
            raise GroupError("generators over different fields")
    ident = Projectivity.identity(F)
    seen = {ident}
    order_list = [ident]
    frontier = [ident]
    while frontier:
        new = []
        for x in frontier:
            for g in gens:
                y = x * g
                if y not in seen:
                    seen.add(y)
                    order_list.append(y)
                    new.append(y)
                    if len(seen) > cap:
                        raise GroupError(f"closure exceeded the cap {cap}")
        frontier = new
    return SubgroupSpec(gens, order_list)
