"""Reference implementation of the exhaustive scan kernels.

These four functions are the hot loops of the whole package: every verifier
reduces to one of them, and the enumeration oracle calls them hundreds of
thousands of times. A compiled twin with identical semantics lives in
``_ckernels.pyx``; this module is the fallback and the source of truth.

All kernels take dense integer tables (sequences of sequences / sequences)
and return the first failing witness in row-major scan order, or ``None``
when the law holds everywhere. Scan order is fixed, so witnesses are the
lexicographic minimum and independent of any parallel split a caller might
do.
"""

IMPL = "python"


def assoc_witness(mul):
    """First (a, b, c) with (a*b)*c != a*(b*c), else None."""
    n = len(mul)
    rng = range(n)
    for a in rng:
        ma = mul[a]
        for b in rng:
            mab = mul[ma[b]]
            mb = mul[b]
            for c in rng:
                if mab[c] != ma[mb[c]]:
                    return (a, b, c)
    return None


def left_scan(mul, tri, phi):
    """Scan the left-sided laws; returns (w_hom, w_bij, w_assoc, w_cocycle).

    w_hom     first (a, b, c) with a|>(b*c) != (a|>b)*(a|>c)
    w_bij     first a whose row b -> a|>b is not a bijection
    w_assoc   first (a, b, c) with (a o b)|>c != a|>(b|>c)
    w_cocycle first (a, b) with Phi(a o b) != a o Phi(b)

    where a o b = Phi(a)*(a|>b). Each slot is None when the law holds.
    """
    n = len(mul)
    rng = range(n)

    w_hom = None
    for a in rng:
        ta = tri[a]
        for b in rng:
            mb = mul[b]
            rab = mul[ta[b]]
            for c in rng:
                if ta[mb[c]] != rab[ta[c]]:
                    w_hom = (a, b, c)
                    break
            if w_hom is not None:
                break
        if w_hom is not None:
            break

    w_bij = None
    for a in rng:
        if len(set(tri[a])) != n:
            w_bij = a
            break

    circ = [[mul[phi[a]][x] for x in tri[a]] for a in rng]

    w_assoc = None
    for a in rng:
        ta = tri[a]
        ca = circ[a]
        for b in rng:
            tab = tri[ca[b]]
            tb = tri[b]
            for c in rng:
                if tab[c] != ta[tb[c]]:
                    w_assoc = (a, b, c)
                    break
            if w_assoc is not None:
                break
        if w_assoc is not None:
            break

    w_cocycle = None
    for a in rng:
        ca = circ[a]
        for b in rng:
            if phi[ca[b]] != ca[phi[b]]:
                w_cocycle = (a, b)
                break
        if w_cocycle is not None:
            break

    return (w_hom, w_bij, w_assoc, w_cocycle)


def right_scan(mul, tri, phi):
    """Mirror of left_scan for a right-sided table (tri[a][b] = a<|b).

    w_hom     first (b, x, y) with (x*y)<|b != (x<|b)*(y<|b)
    w_bij     first b whose column a -> a<|b is not a bijection
    w_assoc   first (a, b, c) with a<|(b o c) != (a<|b)<|c
    w_cocycle first (a, b) with Phi(a o b) != Phi(a) o b

    where a o b = (a<|b)*Phi(b).
    """
    n = len(mul)
    rng = range(n)

    w_hom = None
    for b in rng:
        for x in rng:
            mx = mul[x]
            rxb = mul[tri[x][b]]
            for y in rng:
                if tri[mx[y]][b] != rxb[tri[y][b]]:
                    w_hom = (b, x, y)
                    break
            if w_hom is not None:
                break
        if w_hom is not None:
            break

    w_bij = None
    for b in rng:
        if len({tri[a][b] for a in rng}) != n:
            w_bij = b
            break

    circ = [[mul[tri[a][b]][phi[b]] for b in rng] for a in rng]

    w_assoc = None
    for a in rng:
        ta = tri[a]
        for b in rng:
            cb = circ[b]
            tab = tri[ta[b]]
            for c in rng:
                if ta[cb[c]] != tab[c]:
                    w_assoc = (a, b, c)
                    break
            if w_assoc is not None:
                break
        if w_assoc is not None:
            break

    w_cocycle = None
    for a in rng:
        ca = circ[a]
        cpa = circ[phi[a]]
        for b in rng:
            if phi[ca[b]] != cpa[b]:
                w_cocycle = (a, b)
                break
        if w_cocycle is not None:
            break

    return (w_hom, w_bij, w_assoc, w_cocycle)


def braid_witness(r1, r2):
    """First (a, b, c) where the braid relation fails for r(a,b)=(r1[a][b], r2[a][b]).

    Checks (r x id)(id x r)(r x id) == (id x r)(r x id)(id x r) on all triples.
    """
    n = len(r1)
    rng = range(n)
    for a in rng:
        r1a = r1[a]
        r2a = r2[a]
        for b in rng:
            x1 = r1a[b]
            y1 = r2a[b]
            r1x1 = r1[x1]
            r2x1 = r2[x1]
            r1y1 = r1[y1]
            r2y1 = r2[y1]
            r1b = r1[b]
            r2b = r2[b]
            for c in rng:
                u = r1y1[c]
                lhs0 = r1x1[u]
                lhs1 = r2x1[u]
                lhs2 = r2y1[c]
                p = r1b[c]
                s = r1a[p]
                t = r2a[p]
                q = r2b[c]
                if lhs0 != s or lhs1 != r1[t][q] or lhs2 != r2[t][q]:
                    return (a, b, c)
    return None
