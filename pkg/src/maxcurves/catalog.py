"""Order catalogs for the case analyses: maximal subgroups of PSU(3, q),
subgroups of PGL(2, q), and the pure-integer divisibility scans.

Catalog entries are data, not derivations: each carries an order formula
evaluated at the given q together with the applicability condition that
produced it.  The scans use arbitrary-precision integers throughout
(q^9 (q^9 + 1)(q^6 - 1) overflows fixed-width arithmetic long before the
scan bound of 10^6).
"""

from math import gcd

from .numbertheory import divisors, is_prime, is_prime_power


class CatalogError(ValueError):
    pass


class CatalogEntry:
    """One subgroup class: case label, concrete order, structure note."""

    def __init__(self, label, order, structure, source, params=None):
        self.label = label
        self.order = order
        self.structure = structure
        self.source = source
        self.params = dict(params or {})

    def __repr__(self):
        return f"CatalogEntry({self.label}: {self.structure}, order {self.order})"


def psu3_order(q: int) -> int:
    return q**3 * (q * q - 1) * (q**3 + 1) // gcd(3, q + 1)


def pgu3_order(q: int) -> int:
    return q**3 * (q * q - 1) * (q**3 + 1)


def pgl2_order(q: int) -> int:
    return q * (q * q - 1)


def _is_square_in_fq(c: int, p: int, k: int) -> bool:
    """Is the integer c a square in F_{p^k} (p odd)?"""
    c %= p
    if c == 0:
        return True
    return pow(c, (p**k - 1) // 2, p) == 1


def mh_orders(q: int):
    """The applicable maximal-subgroup classes of PSU(3, q) with their orders.

    Parametrized classes (subfield-unitary groups and their index-3
    extensions) expand into one entry per admissible subfield parameter m.
    """
    pk = is_prime_power(q)
    if pk is None:
        raise CatalogError(f"{q} is not a prime power")
    p, k = pk
    d = gcd(q + 1, 3)
    entries = [
        CatalogEntry("i", q**3 * (q * q - 1) // d,
                     "stabilizer of a rational curve point", "psu3-maximal"),
        CatalogEntry("ii", q * (q - 1) * (q + 1) ** 2 // d,
                     "stabilizer of a point off the curve and its polar line",
                     "psu3-maximal"),
        CatalogEntry("iii", 6 * (q + 1) ** 2 // d,
                     "stabilizer of a self-polar triangle", "psu3-maximal"),
        CatalogEntry("iv", 3 * (q * q - q + 1) // d,
                     "normalizer of a cyclic Singer group", "psu3-maximal"),
    ]
    if p > 2:
        entries.append(CatalogEntry("v", pgl2_order(q),
                                    "PGL(2,q) preserving a conic", "psu3-maximal"))
        for m in divisors(k):
            if m < k and (k // m) % 2 == 1:
                entries.append(CatalogEntry(
                    "vi", psu3_order(p**m),
                    f"subfield unitary group, subfield degree {m}",
                    "psu3-maximal", {"m": m}))
                if (k // m) % 3 == 0 and (q + 1) % 3 == 0:
                    entries.append(CatalogEntry(
                        "vii", 3 * psu3_order(p**m),
                        f"index-3 extension of a subfield unitary group, degree {m}",
                        "psu3-maximal", {"m": m}))
        if (q + 1) % 9 == 0:
            entries.append(CatalogEntry("viii", 216, "Hessian group", "psu3-maximal"))
        if (q + 1) % 3 == 0:
            entries.append(CatalogEntry("viii", 72, "Hessian group", "psu3-maximal"))
            entries.append(CatalogEntry("viii", 36, "Hessian group", "psu3-maximal"))
        if p == 7 or not _is_square_in_fq(-7, p, k):
            entries.append(CatalogEntry("ix", 168, "PSL(2,7)", "psu3-maximal"))
        if (p == 3 and k % 2 == 0) or (
                _is_square_in_fq(5, p, k) and (q - 1) % 3 != 0):
            entries.append(CatalogEntry("x", 360, "alternating group A6",
                                        "psu3-maximal"))
        if p == 5 and k % 2 == 1:
            entries.append(CatalogEntry("xi", 720, "symmetric group S6",
                                        "psu3-maximal"))
            entries.append(CatalogEntry("xii", 2520, "alternating group A7",
                                        "psu3-maximal"))
    else:
        for m in divisors(k):
            if m < k and is_prime(k // m) and (k // m) % 2 == 1:
                entries.append(CatalogEntry(
                    "xiii", psu3_order(2**m),
                    f"subfield unitary group, subfield degree {m}",
                    "psu3-maximal", {"m": m}))
        if k % 3 == 0 and (k // 3) % 2 == 1:
            m = k // 3
            entries.append(CatalogEntry(
                "xiv", 3 * psu3_order(2**m),
                f"index-3 extension of a subfield unitary group, degree {m}",
                "psu3-maximal", {"m": m}))
        if k == 1:
            entries.append(CatalogEntry("xv", 36, "a group of order 36",
                                        "psu3-maximal"))
    return entries


def order_excluded(m: int, q: int, multiplier: int = 1):
    """The catalog cases whose order times the multiplier is divisible by m
    (the survivors of a Lagrange exclusion; an empty list is a full exclusion)."""
    if m < 1:
        raise CatalogError("m must be positive")
    return [e for e in mh_orders(q) if (e.order * multiplier) % m == 0]


def dickson_orders(q: int):
    """The subgroup classes of PGL(2, q), as order families.

    Families with a free parameter carry the parameter ranges; the cyclic
    family i) and the semidirect family vii) are the only classes that can
    have odd order prime to p, which is what the odd-order queries use.
    """
    pk = is_prime_power(q)
    if pk is None:
        raise CatalogError(f"{q} is not a prime power")
    p, k = pk
    entries = [
        CatalogEntry("i", None, "cyclic of order h, h | q-1 or h | q+1",
                     "pgl2-subgroups",
                     {"orders": sorted(set(divisors(q - 1) + divisors(q + 1)))}),
        CatalogEntry("ii", None, "elementary abelian of order p^f, f <= k",
                     "pgl2-subgroups", {"orders": [p**f for f in range(1, k + 1)]}),
        CatalogEntry("iii", None, "dihedral of order 2h, h | q-1 or h | q+1",
                     "pgl2-subgroups",
                     {"orders": sorted({2 * h for h in
                                        divisors(q - 1) + divisors(q + 1)})}),
    ]
    if p > 2 or k % 2 == 0:
        entries.append(CatalogEntry("iv", 12, "alternating group A4",
                                    "pgl2-subgroups"))
    if (q * q - 1) % 16 == 0:
        entries.append(CatalogEntry("v", 24, "symmetric group S4", "pgl2-subgroups"))
    if p == 5 or (q * q - 1) % 5 == 0:
        entries.append(CatalogEntry("vi", 60, "alternating group A5",
                                    "pgl2-subgroups"))
    entries.append(CatalogEntry(
        "vii", None,
        "semidirect product of an elementary abelian p-group of order p^f "
        "by a cyclic group of order h, f <= k, h | q-1",
        "pgl2-subgroups", {"f_max": k, "h_orders": divisors(q - 1)}))
    for f in divisors(k):
        entries.append(CatalogEntry(
            "viii", p**f * (p ** (2 * f) - 1) // gcd(p**f - 1, 2),
            f"PSL(2,p^{f})", "pgl2-subgroups", {"f": f}))
        entries.append(CatalogEntry(
            "ix", pgl2_order(p**f), f"PGL(2,p^{f})", "pgl2-subgroups", {"f": f}))
    return entries


def odd_order_subgroups_cyclic(q: int, coprime_to_char: bool = True) -> bool:
    """Does the catalog force every odd-order subgroup of PGL(2, q)
    (of order prime to p, when requested) to be cyclic?

    Case filter: dihedral groups, A4, S4, A5, PSL and PGL are all of even
    order; elementary abelian p-groups and the semidirect products of class
    vii) are the only possible odd non-cyclic subgroups, and they have
    order divisible by p.
    """
    pk = is_prime_power(q)
    if pk is None:
        raise CatalogError(f"{q} is not a prime power")
    p, _ = pk
    if p == 2:
        return True  # any p-part would make the order even
    return bool(coprime_to_char)


# -- integer scans ----------------------------------------------------------


def alternating_power_sum(pprime: int, m: int) -> int:
    """Sum of (-1)^i 2^(im) for i < pprime, i.e. (2^(pprime m)+1)/(2^m+1)."""
    return sum((-1) ** i * 2 ** (i * m) for i in range(pprime))


def lemmino_scan(m_max: int):
    """Verify the three impossibility facts behind the subfield-case
    exclusion, for all odd primes p' and odd m up to the bound with
    p' >= 5, or p' = 3 and m >= 5.  Returns the list of violations."""
    if m_max < 3:
        raise CatalogError("m_max must be at least 3")
    violations = []
    odd_primes = [r for r in range(3, m_max + 1) if is_prime(r) and r % 2 == 1]
    for pprime in odd_primes:
        for m in range(1, m_max + 1, 2):
            if not (pprime >= 5 or m >= 5):
                continue
            s = alternating_power_sum(pprime, m)
            if (2 ** (2 * m) - 1) % s == 0:
                violations.append((pprime, m, "alternating sum divides 2^(2m)-1"))
            if not s > 3 * (2**m + 1):
                violations.append((pprime, m, "alternating sum bound fails"))
            if not (2 ** (pprime * m) + 1) // 3 > 2 ** (2 * m) - 2**m + 1:
                violations.append((pprime, m, "Singer-normalizer bound fails"))
    return violations


def quattordici_scan(m_max: int):
    """For odd m with 3 <= m <= m_max: which subfield-catalog cases survive
    the Lagrange test  (2^(3m)+1)/3  divides  3 * (case order at 2^m)?

    Returns {m: [surviving case labels]}.  The unique survivor overall is
    case iv at m = 3, where (2^m + 1) | 9.
    """
    out = {}
    for m in range(3, m_max + 1, 2):
        g_order = (2 ** (3 * m) + 1) // 3
        survivors = [e.label for e in mh_orders(2**m)
                     if (3 * e.order) % g_order == 0]
        out[m] = survivors
    return out


def primovalore_scan(q_max: int):
    """{q <= q_max : (q^2+q+2) divides q^9 (q^9+1)(q^6-1)}, computed both by
    direct big-integer divisibility and by the linear remainder 2128 q - 1568
    of the polynomial division.  The two methods must agree everywhere."""
    if q_max < 10:
        raise CatalogError("q_max must be at least 10")
    hits = []
    for q in range(1, q_max + 1):
        m = q * q + q + 2
        a = pow(q, 9, m)
        direct = (a * (a + 1) % m) * ((pow(q, 6, m) - 1) % m) % m == 0
        linear = (2128 * q - 1568) % m == 0
        if direct != linear:
            raise CatalogError(
                f"divisibility methods disagree at q = {q}: the linear "
                f"remainder reduction is wrong")
        if direct:
            hits.append(q)
    return hits
