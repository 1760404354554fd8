"""Finite fields F_{p^k} with deterministic construction and subfield embeddings.

Elements are plain Python ints in [0, p^k): the value Sum c_i * p^i encodes
the coefficient vector (c_0, ..., c_{k-1}) of the residue class modulo the
field's defining polynomial, low degree first.  This integer value is also
the canonical element ordering used wherever a "smallest" element or root
is required.

The defining modulus is the lexicographically smallest monic primitive
irreducible polynomial of degree k over F_p, comparing coefficient vectors
low degree first.  Construction is deterministic and cached: build_field(p, k)
always returns the same object with the same modulus.  A configuration file
may override the modulus for a given (p, k); non-irreducible overrides are
refused.

Two representations are used internally:
  * log/antilog tables when p^k <= table limit (default 2^20) - supports
    fast multiplication and full enumeration;
  * coefficient vectors (carry-less masks in characteristic 2) above the
    limit - supports arithmetic in fields like F_{2^54} where enumeration
    is never needed.
"""

import threading
from math import gcd

from .numbertheory import factorize, is_prime, prime_divisors

TABLE_LIMIT = 1 << 20
SIZE_CAP = 1 << 62


class FieldError(ValueError):
    pass


# ---------------------------------------------------------------------------
# polynomial helpers over the prime field F_p
#
# For p = 2 a polynomial is an int bitmask (bit i = coefficient of X^i).
# For general p it is a tuple of digits in [0, p), low degree first, with
# no trailing zeros.


def _gf2_mulmod(a, b, mod, k):
    r = 0
    while b:
        lsb = b & -b
        r ^= a << (lsb.bit_length() - 1)
        b ^= lsb
    while True:
        d = r.bit_length() - 1
        if d < k:
            return r
        r ^= mod << (d - k)


def _gf2_powmod_x(e, mod, k):
    # X^e mod `mod`, binary exponentiation
    r = 1
    base = (mod & 1) if k == 1 else 2  # degree 1: X reduces to its root c0
    while e:
        if e & 1:
            r = _gf2_mulmod(r, base, mod, k)
        base = _gf2_mulmod(base, base, mod, k)
        e >>= 1
    return r


def _gf2_gcd(a, b):
    while b:
        while a.bit_length() >= b.bit_length() and a:
            a ^= b << (a.bit_length() - b.bit_length())
        a, b = b, a
    return a


def _poly_trim(t):
    i = len(t)
    while i and t[i - 1] == 0:
        i -= 1
    return tuple(t[:i])


def _poly_mulmod(a, b, mod, p):
    # a, b digit tuples reduced mod `mod` (monic, degree k)
    k = len(mod) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    for d in range(len(prod) - 1, k - 1, -1):
        c = prod[d]
        if c:
            for j in range(k + 1):
                prod[d - k + j] = (prod[d - k + j] - c * mod[j]) % p
    return _poly_trim(prod)


def _poly_powmod(base, e, mod, p):
    r = (1,)
    b = base
    while e:
        if e & 1:
            r = _poly_mulmod(r, b, mod, p)
        b = _poly_mulmod(b, b, mod, p)
        e >>= 1
    return r


def _poly_gcd(a, b, p):
    a, b = _poly_trim(a), _poly_trim(b)
    while b:
        # a mod b
        a = list(a)
        db, lb = len(b) - 1, b[-1]
        inv_lb = pow(lb, p - 2, p)
        for d in range(len(a) - 1, db - 1, -1):
            c = a[d]
            if c:
                f = c * inv_lb % p
                for j in range(db + 1):
                    a[d - db + j] = (a[d - db + j] - f * b[j]) % p
        a, b = b, _poly_trim(a)
    return a


def _is_irreducible(coeffs, p):
    """coeffs: monic polynomial over F_p, digit tuple low-first, degree k >= 1."""
    k = len(coeffs) - 1
    if k == 1:
        return True
    if coeffs[0] == 0:
        return False
    if p == 2:
        mod = sum(c << i for i, c in enumerate(coeffs))
        prime_steps = sorted({k // r for r in prime_divisors(k)})
        frob = 2  # X
        powers = {}
        for i in range(1, k + 1):
            frob = _gf2_mulmod(frob, frob, mod, k)
            powers[i] = frob
        if powers[k] != 2:  # X^(2^k) must equal X
            return False
        for s in prime_steps:
            if _gf2_gcd(powers[s] ^ 2, mod) != 1:
                return False
        return True
    x = (0, 1)
    frob = x
    powers = {}
    for i in range(1, k + 1):
        frob = _poly_powmod(frob, p, coeffs, p)
        powers[i] = frob
    if powers[k] != x:
        return False
    for r in prime_divisors(k):
        g = _poly_gcd(_poly_sub(powers[k // r], x, p), coeffs, p)
        if len(g) - 1 != 0:
            return False
    return True


def _poly_sub(a, b, p):
    n = max(len(a), len(b))
    a = list(a) + [0] * (n - len(a))
    for i, bi in enumerate(b):
        a[i] = (a[i] - bi) % p
    return _poly_trim(a)


def _is_primitive_root_x(coeffs, p):
    """True if X generates the multiplicative group modulo `coeffs`."""
    k = len(coeffs) - 1
    n = p**k - 1
    if n == 1:
        return True
    if p == 2:
        mod = sum(c << i for i, c in enumerate(coeffs))
        for r in prime_divisors(n):
            if _gf2_powmod_x(n // r, mod, k) == 1:
                return False
        return True
    x = (0, 1)
    for r in prime_divisors(n):
        if _poly_powmod(x, n // r, coeffs, p) == (1,):
            return False
    return True


def _canonical_modulus(p, k):
    """Lexicographically smallest monic primitive irreducible of degree k.

    Coefficient vectors (c_0, ..., c_{k-1}) are compared low degree first,
    so candidates are enumerated with c_0 as the most significant digit.
    """
    if k == 1:
        # X + c: root is -c; need -c to generate F_p*
        for c in range(1, p):
            root = (-c) % p
            if _order_mod_p(root, p) == p - 1 or p == 2:
                return (c, 1)
        raise FieldError("no primitive degree-1 modulus found")
    # t encodes (c_0, ..., c_{k-1}) with c_0 as the most significant digit,
    # so increasing t enumerates candidates in the canonical lex order;
    # c_0 = 0 is reducible, so start where c_0 becomes 1.
    for t in range(p ** (k - 1), p**k):
        digits = []
        v = t
        for _ in range(k):
            digits.append(v % p)
            v //= p
        coeffs = tuple(reversed(digits)) + (1,)
        if _is_irreducible(coeffs, p) and _is_primitive_root_x(coeffs, p):
            return coeffs
    raise FieldError("no primitive irreducible found (unreachable)")


def _order_mod_p(a, p):
    if a % p == 0:
        return 0
    o = 1
    x = a % p
    while x != 1:
        x = x * a % p
        o += 1
    return o


# ---------------------------------------------------------------------------


class GF:
    """The finite field F_{p^k}.  Elements are ints in [0, p^k)."""

    def __init__(self, p, k, modulus, table_limit=None):
        self.p = p
        self.k = k
        self.order = p**k
        self.units = self.order - 1
        self.modulus = modulus  # digit tuple, low degree first, length k+1
        limit = TABLE_LIMIT if table_limit is None else table_limit
        self.table_mode = self.order <= limit
        self._mod_mask = sum(c << i for i, c in enumerate(modulus)) if p == 2 else None
        self._pow_cache = [p**i for i in range(k + 1)]
        self.exp = None
        self.log = None
        self.generator = self._find_generator()
        if self.table_mode:
            self._build_tables()
        self._embed_cache = {}
        self._unit_factors = None

    def __repr__(self):
        return f"GF({self.p}^{self.k})"

    # -- construction internals ------------------------------------------

    def _find_generator(self):
        # X itself when the modulus is primitive (the canonical case);
        # otherwise scan elements in canonical order.
        if self.k == 1:
            root = (-self.modulus[0]) % self.p
            return root
        if _is_primitive_root_x(self.modulus, self.p):
            return self.p  # the element X
        n = self.units
        primes = prime_divisors(n)
        for cand in range(2, self.order):
            if all(self._pow_novtable(cand, n // r) != 1 for r in primes):
                return cand
        raise FieldError("no generator found")

    def _build_tables(self):
        n = self.units
        exp = [0] * n
        log = [0] * self.order
        g = self.generator
        x = 1
        if self.p == 2 and self.k > 1:
            mm = self._mod_mask
            k = self.k
            if g == 2:
                for i in range(n):
                    exp[i] = x
                    log[x] = i
                    x <<= 1
                    if x >> k:
                        x ^= mm
            else:
                for i in range(n):
                    exp[i] = x
                    log[x] = i
                    x = _gf2_mulmod(x, g, mm, k)
        else:
            for i in range(n):
                exp[i] = x
                log[x] = i
                x = self._mul_novtable(x, g)
        if x != 1:
            raise FieldError("generator order mismatch while building tables")
        self.exp = exp
        self.log = log

    # -- digit conversions -----------------------------------------------

    def digits(self, e):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(e % p)
            e //= p
        return out

    def from_digits(self, ds):
        v = 0
        for c, w in zip(ds, self._pow_cache):
            v += (c % self.p) * w
        return v

    # -- arithmetic --------------------------------------------------------

    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return self.from_digits([(x + y) % p for x, y in zip(da, db)])

    def sub(self, a, b):
        if self.p == 2:
            return a ^ b
        da, db = self.digits(a), self.digits(b)
        p = self.p
        return self.from_digits([(x - y) % p for x, y in zip(da, db)])

    def neg(self, a):
        if self.p == 2:
            return a
        return self.from_digits([(-x) % self.p for x in self.digits(a)])

    def _mul_novtable(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.p == 2:
            return _gf2_mulmod(a, b, self._mod_mask, self.k)
        prod = _poly_mulmod(tuple(self.digits(a)), tuple(self.digits(b)),
                            self.modulus, self.p)
        return self.from_digits(list(prod) + [0] * self.k)

    def _pow_novtable(self, a, e):
        r = 1
        b = a
        while e:
            if e & 1:
                r = self._mul_novtable(r, b)
            b = self._mul_novtable(b, b)
            e >>= 1
        return r

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        if self.table_mode:
            return self.exp[(self.log[a] + self.log[b]) % self.units]
        return self._mul_novtable(a, b)

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        if self.table_mode:
            return self.exp[(-self.log[a]) % self.units]
        return self._pow_novtable(a, self.units - 1)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, e):
        if a == 0:
            if e > 0:
                return 0
            if e == 0:
                return 1
            raise ZeroDivisionError("0 to a negative power")
        e %= self.units
        if self.table_mode:
            return self.exp[self.log[a] * e % self.units]
        return self._pow_novtable(a, e)

    def frobenius(self, a, times=1):
        """a^(p^times)."""
        if a == 0:
            return 0
        return self.pow(a, pow(self.p, times, self.units))

    def elements(self):
        """Iterate all elements in canonical order.  Requires table mode."""
        if not self.table_mode:
            raise FieldError(f"{self} is beyond the enumeration limit")
        return range(self.order)

    # -- multiplicative structure -----------------------------------------

    def _factors_of_units(self):
        if self._unit_factors is None:
            self._unit_factors = factorize(self.units)
        return self._unit_factors

    def multiplicative_order(self, a):
        if a == 0:
            raise FieldError("0 has no multiplicative order")
        o = self.units
        for r, e in self._factors_of_units():
            for _ in range(e):
                if self.pow(a, o // r) == 1:
                    o //= r
                else:
                    break
        return o

    def root_of_unity(self, m):
        """A primitive m-th root of unity (generator^((p^k-1)/m)); m must divide p^k - 1."""
        if m < 1:
            raise FieldError("m must be positive")
        if self.units % m != 0:
            raise FieldError(f"{m} does not divide {self.units}")
        return self.pow(self.generator, self.units // m)

    def is_dth_power(self, e, d):
        """True iff nonzero e is a d-th power, via e^((p^k-1)/gcd(d, p^k-1)) = 1."""
        if e == 0:
            raise FieldError("is_dth_power is undefined at 0")
        g = gcd(d, self.units)
        return self.pow(e, self.units // g) == 1

    def nth_root(self, a, d):
        """Some y with y^d = a, deterministic; raises if a is not a d-th power."""
        if d < 1:
            raise FieldError("d must be positive")
        if a == 0:
            return 0
        if not self.is_dth_power(a, d):
            raise FieldError("element is not a d-th power")
        y = a
        for r, e in factorize(d):
            for _ in range(e):
                y = self._prime_root(y, r)
        return y

    def _prime_root(self, a, r):
        n = self.units
        if n % r != 0:
            return self.pow(a, pow(r, -1, n))
        s, u = 0, n
        while u % r == 0:
            u //= r
            s += 1
        # y0^r = a * w with w in the Sylow-r subgroup (order r^s, small here)
        v = pow(r, -1, u)
        y0 = self.pow(a, v)
        w = self.div(self.pow(y0, r), a)
        if w == 1:
            return y0
        z = self.pow(self.generator, u)  # order r^s
        size = r**s
        zr = self.pow(z, r)
        w_inv = self.inv(w)
        c = 1
        for _ in range(size):
            if self.pow(c, r) == w_inv:
                return self.mul(y0, c)
            c = self.mul(c, z)
        raise FieldError("not an r-th power (unreachable after is_dth_power)")

    # -- subfield structure -------------------------------------------------

    def norm(self, e, sub):
        """Norm of e down to the subfield `sub`; returns an element of sub."""
        tm = embed(sub, self)
        m, ratio = sub.k, self.k // sub.k
        acc = 1
        x = e
        for _ in range(ratio):
            acc = self.mul(acc, x)
            x = self.frobenius(x, m)
        return tm.pullback(acc)

    def trace(self, e, sub):
        """Trace of e down to the subfield `sub`; returns an element of sub."""
        tm = embed(sub, self)
        m, ratio = sub.k, self.k // sub.k
        acc = 0
        x = e
        for _ in range(ratio):
            acc = self.add(acc, x)
            x = self.frobenius(x, m)
        return tm.pullback(acc)


class TowerMap:
    """The canonical embedding of one field into an extension.

    Determined by the image of the source generator: the smallest root (in
    canonical element order) of the source modulus inside the destination.
    Composition of two tower maps is again a ring homomorphism carrying the
    source generator to some root of the source modulus, but not always to
    the smallest one; compose() builds such explicit composites.
    """

    def __init__(self, src, dst, gen_image):
        self.src = src
        self.dst = dst
        self.gen_image = gen_image
        self._gen_powers = [1]
        for _ in range(src.k - 1):
            self._gen_powers.append(dst.mul(self._gen_powers[-1], gen_image))
        self._const = [self._embed_const(c) for c in range(src.p)]
        self._inverse = None

    def _embed_const(self, c):
        acc = 0
        for _ in range(c):
            acc = self.dst.add(acc, 1)
        return acc

    def apply(self, e):
        ds = self.src.digits(e)
        acc = 0
        for c, w in zip(ds, self._gen_powers):
            if c:
                acc = self.dst.add(acc, self.dst.mul(self._const[c], w))
        return acc

    def __call__(self, e):
        return self.apply(e)

    def pullback(self, e):
        """Preimage of e, which must lie in the embedded subfield image."""
        if self._inverse is None:
            if not self.src.table_mode:
                raise FieldError("pullback needs an enumerable source field")
            self._inverse = {self.apply(x): x for x in self.src.elements()}
        try:
            return self._inverse[e]
        except KeyError:
            raise FieldError("element is not in the embedded subfield") from None

    def compose(self, outer):
        """The composite map src -> outer.dst (self first, then outer)."""
        if outer.src is not self.dst:
            raise FieldError("tower maps do not chain")
        return TowerMap(self.src, outer.dst, outer.apply(self.gen_image))


# ---------------------------------------------------------------------------

_FIELDS = {}
_MODULUS_OVERRIDES = {}
_BUILD_LOCK = threading.Lock()  # concurrent checks must share field objects


def set_modulus_override(p, k, coeffs):
    """Override the modulus used for (p, k).  Refuses non-irreducible input."""
    coeffs = tuple(int(c) % p for c in coeffs)
    if len(coeffs) != k + 1 or coeffs[-1] != 1:
        raise FieldError("override must be monic of degree k")
    if not _is_irreducible(coeffs, p):
        raise FieldError(f"override for ({p},{k}) is not irreducible")
    _MODULUS_OVERRIDES[(p, k)] = coeffs
    _FIELDS.pop((p, k), None)


def clear_modulus_overrides():
    _MODULUS_OVERRIDES.clear()
    _FIELDS.clear()


def load_field_config(path):
    """Read modulus overrides from a config file.

    Each non-comment line has the form  ``p k : c0 c1 ... ck``  giving the
    coefficients of the modulus for F_{p^k}, low degree first.
    """
    with open(path) as fh:
        for lineno, line in enumerate(fh, 1):
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                head, tail = line.split(":")
                p, k = (int(t) for t in head.split())
                coeffs = [int(t) for t in tail.split()]
            except ValueError:
                raise FieldError(f"bad field-config line {lineno}: {line!r}") from None
            set_modulus_override(p, k, coeffs)


def build_field(p, k, table_limit=None):
    """The canonical field F_{p^k}.  Idempotent: repeated calls share one object."""
    if not is_prime(p):
        raise FieldError(f"{p} is not prime")
    if k < 1:
        raise FieldError("k must be >= 1")
    if p**k > SIZE_CAP:
        raise FieldError(f"p^k exceeds the size cap 2^62")
    key = (p, k)
    fld = _FIELDS.get(key)
    if fld is None:
        with _BUILD_LOCK:
            fld = _FIELDS.get(key)
            if fld is None:
                modulus = _MODULUS_OVERRIDES.get(key) or _canonical_modulus(p, k)
                fld = GF(p, k, modulus, table_limit=table_limit)
                _FIELDS[key] = fld
    return fld


def embed(src: GF, dst: GF) -> TowerMap:
    """Canonical embedding: source generator maps to the smallest root of the
    source modulus in the destination."""
    if src.p != dst.p:
        raise FieldError("characteristic mismatch")
    if dst.k % src.k != 0:
        raise FieldError(f"degree {src.k} does not divide {dst.k}")
    cached = src._embed_cache.get(id(dst))
    if cached is not None:
        return cached
    if src.k == dst.k:
        tm = TowerMap(src, dst, dst.from_digits(src.digits(src.generator)))
        if src is not dst:
            # identical (p, k) construction can only differ by modulus override
            tm = TowerMap(src, dst, _smallest_root_in(src, dst))
    elif src.k == 1:
        tm = TowerMap(src, dst, _embed_prime_const(src.generator, dst))
    else:
        tm = TowerMap(src, dst, _smallest_root_in(src, dst))
    src._embed_cache[id(dst)] = tm
    return tm


def _embed_prime_const(c, dst):
    acc = 0
    for _ in range(c):
        acc = dst.add(acc, 1)
    return acc


def _smallest_root_in(src, dst):
    """Smallest root of src's modulus inside dst, in canonical element order.

    The roots are primitive (p^m - 1)-th roots of unity in dst (the source
    modulus is primitive), so the search walks the canonical generator of
    that cyclic subgroup and Horner-evaluates the modulus, then minimizes
    over the Frobenius orbit of the first root found.
    """
    m = src.k
    sub_units = src.p**m - 1
    w = dst.pow(dst.generator, dst.units // sub_units)
    coeffs = [_embed_prime_const(c, dst) for c in src.modulus]
    wj = 1
    root = None
    for j in range(1, sub_units + 1):
        wj = dst.mul(wj, w)
        if gcd(j, sub_units) != 1:
            continue
        acc = 0
        for c in reversed(coeffs):
            acc = dst.mul(acc, wj)
            acc = dst.add(acc, c)
        if acc == 0:
            root = wj
            break
    if root is None:
        raise FieldError("no root of subfield modulus found (unreachable)")
    best = root
    x = root
    for _ in range(m - 1):
        x = dst.frobenius(x)
        if x < best:
            best = x
    return best
