"""Linearized (additive) polynomials and their p-associates.

A linearized polynomial over F_{p^m} is  Sum c_i X^(p^i),  stored as a
sparse map index -> coefficient.  Composition corresponds to the twisted
multiplication  (a t^i) (b t^j) = a b^(p^i) t^(i+j)  of associates; the
conventional associate  Sum c_i t^i  with ordinary multiplication mirrors
composition only when the coefficients stay in the prime field, which is
why divisibility questions here are always decided by explicit twisted
division, with the conventional-associate verdict computed alongside.
"""

class LinPolyError(ValueError):
    pass


class LinearizedPoly:
    """Sum c_i X^(p^i) over a fixed field; keys with zero values are dropped."""

    def __init__(self, field, coeffs):
        self.field = field
        self.coeffs = {int(i): c for i, c in dict(coeffs).items() if c}

    def __eq__(self, other):
        return (isinstance(other, LinearizedPoly) and self.field is other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((id(self.field), tuple(sorted(self.coeffs.items()))))

    def __bool__(self):
        return bool(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "LinearizedPoly(0)"
        terms = [f"{c}*X^{self.field.p}^{i}" for i, c in sorted(self.coeffs.items())]
        return "LinearizedPoly(" + " + ".join(terms) + ")"

    @property
    def top_index(self):
        return max(self.coeffs) if self.coeffs else None

    def degree(self):
        return self.field.p ** self.top_index if self.coeffs else 0

    def evaluate(self, x):
        F = self.field
        acc = 0
        for i, c in self.coeffs.items():
            acc = F.add(acc, F.mul(c, F.pow(x, F.p**i)))
        return acc

    def add(self, other):
        F = self.field
        out = dict(self.coeffs)
        for i, c in other.coeffs.items():
            out[i] = F.add(out.get(i, 0), c)
        return LinearizedPoly(F, out)

    def scale(self, c):
        F = self.field
        return LinearizedPoly(F, {i: F.mul(c, v) for i, v in self.coeffs.items()})

    def kernel(self):
        """All roots inside the owning field, via F_p-linear algebra on a basis."""
        F = self.field
        p, k = F.p, F.k
        basis = [F.pow(F.generator, j) if j else 1 for j in range(k)]
        basis[0] = 1
        cols = [F.digits(self.evaluate(b)) for b in basis]
        # solve sum_j x_j * cols[j] = 0 over F_p
        rows = [[cols[j][i] for j in range(k)] for i in range(k)]
        sols = _nullspace_fp(rows, p)
        out = set()
        for vec in _span_fp(sols, p):
            e = 0
            for xj, b in zip(vec, basis):
                if xj:
                    term = b
                    acc = 0
                    for _ in range(xj):
                        acc = F.add(acc, term)
                    e = F.add(e, acc)
            out.add(e)
        return sorted(out)


def _nullspace_fp(rows, p):
    n = len(rows[0]) if rows else 0
    m = [row[:] for row in rows]
    pivots = []
    r = 0
    for c in range(n):
        pr = next((i for i in range(r, len(m)) if m[i][c] % p), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        inv = pow(m[r][c], p - 2, p) if p > 2 else 1
        m[r] = [(v * inv) % p for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] % p:
                f = m[i][c]
                m[i] = [(m[i][j] - f * m[r][j]) % p for j in range(n)]
        pivots.append(c)
        r += 1
    basis = []
    for fc in (c for c in range(n) if c not in pivots):
        v = [0] * n
        v[fc] = 1
        for pi, pc in enumerate(pivots):
            v[pc] = (-m[pi][fc]) % p
        basis.append(v)
    return basis


def _span_fp(basis, p):
    out = [[0] * (len(basis[0]) if basis else 0)]
    for b in basis:
        out = [[(x + t * y) % p for x, y in zip(v, b)] for v in out for t in range(p)]
    return out


def from_kernel(field, roots) -> LinearizedPoly:
    """The monic linearized polynomial whose root set is the given additive
    subgroup, built by expanding the product of the linear factors."""
    roots = sorted(set(roots))
    rs = set(roots)
    if 0 not in rs:
        raise LinPolyError("an additive subgroup must contain 0")
    for a in roots:
        for b in roots:
            if field.add(a, b) not in rs:
                raise LinPolyError("root set is not closed under addition")
    n = len(roots)
    p = field.p
    size = n
    while size % p == 0:
        size //= p
    if size != 1:
        raise LinPolyError("an additive subgroup must have p-power order")
    # expand prod (X - c)
    poly = [1]
    for c in roots:
        nc = field.neg(c)
        nxt = [0] * (len(poly) + 1)
        for i, a in enumerate(poly):
            nxt[i] = field.add(nxt[i], field.mul(a, nc))
            nxt[i + 1] = field.add(nxt[i + 1], a)
        poly = nxt
    coeffs = {}
    for d, c in enumerate(poly):
        if not c:
            continue
        i = 0
        dd = d
        while dd > 1 and dd % p == 0:
            dd //= p
            i += 1
        if dd != 1:
            raise LinPolyError("product is not linearized (kernel not additive?)")
        coeffs[i] = c
    lp = LinearizedPoly(field, coeffs)
    for c in roots:
        if lp.evaluate(c) != 0:
            raise LinPolyError("kernel round-trip failed")
    return lp


def compose(outer: LinearizedPoly, inner: LinearizedPoly) -> LinearizedPoly:
    """outer(inner(X)): twisted product of the coefficient maps."""
    F = outer.field
    if F is not inner.field:
        raise LinPolyError("operands over different fields")
    out = {}
    for i, a in outer.coeffs.items():
        pi = F.p**i
        for j, b in inner.coeffs.items():
            k = i + j
            out[k] = F.add(out.get(k, 0), F.mul(a, F.pow(b, pi)))
    return LinearizedPoly(F, out)


def decompose(target: LinearizedPoly, inner: LinearizedPoly):
    """The outer F with F(inner(X)) = target, or None if none exists."""
    F = target.field
    if F is not inner.field:
        raise LinPolyError("operands over different fields")
    if not inner:
        raise LinPolyError("cannot decompose by the zero polynomial")
    s = inner.top_index
    b_s = inner.coeffs[s]
    work = dict(target.coeffs)
    out = {}
    while work:
        t = max(work)
        if t < s:
            return None
        d = t - s
        # a_d * b_s^(p^d) = work[t]
        a_d = F.div(work[t], F.pow(b_s, F.p**d))
        out[d] = a_d
        pd = F.p**d
        for j, b in inner.coeffs.items():
            k = d + j
            work[k] = F.sub(work.get(k, 0), F.mul(a_d, F.pow(b, pd)))
            if work[k] == 0:
                del work[k]
    return LinearizedPoly(F, out)


def left_quotient(outer: LinearizedPoly, target: LinearizedPoly):
    """The Q with outer(Q(X)) = target, or None; solved top-down using the
    inverse Frobenius (always available in a finite field)."""
    F = target.field
    if F is not outer.field:
        raise LinPolyError("operands over different fields")
    if not outer:
        raise LinPolyError("cannot divide by the zero polynomial")
    s = outer.top_index
    a_s = outer.coeffs[s]
    work = dict(target.coeffs)
    out = {}
    while work:
        t = max(work)
        if t < s:
            return None
        d = t - s
        # a_s * q_d^(p^s) = work[t]  ->  q_d = (work[t]/a_s)^(p^-s)
        rhs = F.div(work[t], a_s)
        q_d = F.frobenius(rhs, (F.k - s % F.k) % F.k) if s % F.k else rhs
        out[d] = q_d
        for i, a in outer.coeffs.items():
            k = i + d
            work[k] = F.sub(work.get(k, 0), F.mul(a, F.pow(q_d, F.p**i)))
            if work[k] == 0:
                del work[k]
    return LinearizedPoly(F, out)


def symbolic_divides(l: LinearizedPoly, m: LinearizedPoly, side: str) -> bool:
    """side 'right': some Q has Q(l(X)) = m (l is the inner factor);
    side 'left':  some Q has l(Q(X)) = m (l is the outer factor).

    Right-divisibility is cross-checked against kernel containment whenever
    both kernels split inside the owning field."""
    if side == "right":
        verdict = decompose(m, l) is not None
        kl, km = l.kernel(), m.kernel()
        if len(kl) == l.degree() and len(km) == m.degree():
            contained = set(kl) <= set(km)
            if contained != verdict:
                raise LinPolyError(
                    "kernel-containment and twisted division disagree")
        return verdict
    if side == "left":
        return left_quotient(l, m) is not None
    raise LinPolyError("side must be 'left' or 'right'")


# -- p-associates ---------------------------------------------------------------


class AssociatePoly:
    """Ordinary polynomial Sum c_i t^i attached to a linearized polynomial.

    convention 'conventional': ordinary commutative multiplication;
    convention 'twisted': t a = a^p t, so multiplication mirrors composition.
    """

    def __init__(self, field, coeffs, convention="conventional"):
        if convention not in ("conventional", "twisted"):
            raise LinPolyError("unknown associate convention")
        self.field = field
        self.coeffs = tuple(coeffs)
        while self.coeffs and self.coeffs[-1] == 0:
            self.coeffs = self.coeffs[:-1]
        self.convention = convention

    def __eq__(self, other):
        return (isinstance(other, AssociatePoly) and self.field is other.field
                and self.coeffs == other.coeffs
                and self.convention == other.convention)

    def __repr__(self):
        return f"AssociatePoly({self.coeffs}, {self.convention})"

    def degree(self):
        return len(self.coeffs) - 1

    def __mul__(self, other):
        F = self.field
        if self.convention != other.convention:
            raise LinPolyError("mixed associate conventions")
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            pi = F.p**i
            for j, b in enumerate(other.coeffs):
                if not b:
                    continue
                bb = F.pow(b, pi) if self.convention == "twisted" else b
                out[i + j] = F.add(out[i + j], F.mul(a, bb))
        return AssociatePoly(F, out, self.convention)

    def divides(self, other) -> bool:
        """Ordinary polynomial divisibility; conventional associates only."""
        if self.convention != "conventional":
            raise LinPolyError("divides() is for the conventional associate")
        from . import polyroots
        if not self.coeffs:
            return not other.coeffs
        _, rem = polyroots.divmod_poly(self.field, other.coeffs, self.coeffs)
        return not rem


def p_associate(l: LinearizedPoly, convention="conventional") -> AssociatePoly:
    n = (l.top_index or 0) + 1 if l else 0
    coeffs = [0] * n
    for i, c in l.coeffs.items():
        coeffs[i] = c
    return AssociatePoly(l.field, coeffs, convention)


def inverse_associate(a: AssociatePoly) -> LinearizedPoly:
    return LinearizedPoly(a.field, {i: c for i, c in enumerate(a.coeffs) if c})


# -- the quotient-equation family scan ------------------------------------------


def quotient_family_scan(field, q):
    """Scan the family A X^(q^2) + B X with A = k^-1 a^(q^2), B = -k^-1 a
    (a nonzero, k a (q^2-q+1)-th power) for left-divisibility into
    X^(q^3) + X, under both the composition criterion and the conventional
    p-associate criterion.

    Returns (families_tested, divisible_count, criteria_disagreements).
    """
    F = field
    p = F.p
    import math
    e2 = round(math.log(q * q, p))
    e3 = round(math.log(q**3, p))
    if p**e2 != q * q or p**e3 != q**3:
        raise LinPolyError("q is not a power of the field characteristic")
    target = LinearizedPoly(F, {e3: 1, 0: 1 if p == 2 else 1})
    target_assoc = p_associate(target)
    n = F.units
    m13 = q * q - q + 1
    from math import gcd
    k_subgroup_size = n // gcd(m13, n)
    gk = F.pow(F.generator, gcd(m13, n))  # generates the (q^2-q+1)-th powers
    r_exp = gcd(q * q - 1, n)
    tested = 0
    divisible = 0
    disagreements = 0
    # representatives a_r, one per value of a^(q^2-1): scaling a by a
    # (q^2-1)-th root of unity rescales (A, B) by a unit already covered
    # through the k-subgroup, so representatives suffice.
    seen_r = set()
    a = 1
    reps = []
    for t in range(n):
        r = F.pow(a, q * q - 1)
        if r not in seen_r:
            seen_r.add(r)
            reps.append(a)
        a = F.mul(a, F.generator)
    for a in reps:
        a_q2 = F.pow(a, q * q)
        kinv = 1
        for _ in range(k_subgroup_size):
            kinv = F.mul(kinv, gk)
            A = F.mul(kinv, a_q2)
            B = F.neg(F.mul(kinv, a))
            cand = LinearizedPoly(F, {e2: A, 0: B})
            tested += 1
            by_composition = left_quotient(cand, target) is not None
            by_conventional = p_associate(cand).divides(target_assoc)
            if by_composition != by_conventional:
                disagreements += 1
            if by_composition:
                divisible += 1
    return tested, divisible, disagreements
