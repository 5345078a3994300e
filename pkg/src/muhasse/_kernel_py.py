"""Pure-Python arithmetic kernels for matrices over W(F_{p^L}) mod p^N.

A ring element is a tuple of L integers in [0, p^N), the coefficients of a
polynomial in the ring generator, lowest degree first.  Two static tables
drive the arithmetic:

  red   -- reduction table: red[j] is the coefficient tuple of g^(L+j)
           for 0 <= j <= L-2 (empty for L == 1);
  smat  -- an L x L row-major integer matrix expressing a power of the
           Frobenius lift on coefficient vectors.

Matrices are flat row-major lists of coefficient tuples.  The compiled
backend (muhasse._kernel) implements the same signatures; the two are
interchangeable and tested against each other.
"""


def add(a, b, pN):
    return tuple((x + y) % pN for x, y in zip(a, b))


def sub(a, b, pN):
    return tuple((x - y) % pN for x, y in zip(a, b))


def neg(a, pN):
    return tuple((-x) % pN for x in a)


def smul(c, a, pN):
    """Scalar (integer) times element."""
    return tuple((c * x) % pN for x in a)


def mul(a, b, red, pN):
    L = len(a)
    if L == 1:
        return ((a[0] * b[0]) % pN,)
    conv = [0] * (2 * L - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                conv[i + j] += ai * bj
    for j in range(2 * L - 2, L - 1, -1):
        cj = conv[j]
        if cj:
            row = red[j - L]
            for i in range(L):
                conv[i] += cj * row[i]
    return tuple(c % pN for c in conv[:L])


def sigma_apply(a, smat, pN):
    L = len(a)
    return tuple(sum(row[j] * a[j] for j in range(L)) % pN for row in smat)


def mat_mul(A, B, r, m, c, red, pN):
    """Product of a flat r x m and a flat m x c matrix."""
    L = len(A[0]) if A else 1
    zero = (0,) * L
    out = []
    for i in range(r):
        base = i * m
        for j in range(c):
            acc = zero
            for k in range(m):
                acc = add(acc, mul(A[base + k], B[k * c + j], red, pN), pN)
            out.append(acc)
    return out


def mat_sigma(A, smat, pN):
    return [sigma_apply(a, smat, pN) for a in A]


def berkowitz(A, n, red, pN, L):
    """Division-free characteristic polynomial of a flat n x n matrix.

    Returns the coefficients lowest degree first; the leading (degree n)
    coefficient is 1.
    """
    one = (1,) + (0,) * (L - 1)
    zero = (0,) * L
    poly = [one]  # descending coefficients of charpoly of the leading block
    for k in range(1, n + 1):
        a = A[(k - 1) * n + (k - 1)]
        R = [A[(k - 1) * n + j] for j in range(k - 1)]
        C = [A[i * n + (k - 1)] for i in range(k - 1)]
        t = [one, neg(a, pN)]
        v = C
        for i in range(k - 1):
            s = zero
            for j in range(k - 1):
                s = add(s, mul(R[j], v[j], red, pN), pN)
            t.append(neg(s, pN))
            if i < k - 2:
                nv = []
                for row in range(k - 1):
                    acc = zero
                    for j in range(k - 1):
                        acc = add(acc, mul(A[row * n + j], v[j], red, pN), pN)
                    nv.append(acc)
                v = nv
        newpoly = []
        for i in range(k + 1):
            acc = zero
            for j in range(min(i, k - 1), -1, -1):
                if i - j <= k:
                    acc = add(acc, mul(t[i - j], poly[j], red, pN), pN)
            newpoly.append(acc)
        poly = newpoly
    poly.reverse()
    return poly
