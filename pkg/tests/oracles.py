"""Independent brute-force oracles used by the tests.

These deliberately avoid the library's own code paths: the lattice
count enumerates pairs directly, irreducibility is tested by trial
factorization, and semigroup membership by double loop.
"""


def lattice_dimension(q: int, r: int, ell: int) -> int:
    """#{(i, j) : i >= 0, 0 <= j < q^{r-1}, i q^{r-1} + j c <= ell q^{r-1}}."""
    h = q ** (r - 1)
    c = (q ** r - 1) // (q - 1)
    s = ell * h
    count = 0
    for j in range(h):
        for i in range(s // h + 1):
            if i * h + j * c <= s:
                count += 1
    return count


def semigroup_by_force(h: int, c: int, bound: int) -> list[int]:
    out = set()
    for a in range(bound // h + 1):
        for b in range(bound // c + 1):
            v = a * h + b * c
            if v <= bound:
                out.add(v)
    return sorted(out)


def poly_eval_mod(coeffs, x, p):
    out = 0
    for a in reversed(coeffs):
        out = (out * x + a) % p
    return out


def irreducible_by_trial(coeffs, p: int) -> bool:
    """Monic polynomial irreducibility by brute trial division over
    GF(p), via enumeration of all monic factors of degree <= deg/2."""
    deg = len(coeffs) - 1
    if deg == 1:
        return True
    if deg <= 3:
        # a quadratic or cubic is reducible iff it has a root
        return all(poly_eval_mod(coeffs, x, p) for x in range(p))
    for d in range(1, deg // 2 + 1):
        for enc in range(p ** d):
            factor = []
            e = enc
            for _ in range(d):
                e, digit = divmod(e, p)
                factor.append(digit)
            factor.append(1)
            if _poly_divides(factor, coeffs, p):
                return False
    return True


def _poly_divides(g, f, p):
    f = list(f)
    dg = len(g) - 1
    while len(f) - 1 >= dg and any(f):
        lead = f[-1]
        shift = len(f) - 1 - dg
        for i in range(dg + 1):
            f[shift + i] = (f[shift + i] - lead * g[i]) % p
        while f and f[-1] == 0:
            f.pop()
    return not any(f)
