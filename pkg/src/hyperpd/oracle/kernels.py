"""Rank and reduced-homology kernels for the Hochster oracle.

Two interchangeable backends compute the same quantities:

* a numba ``@njit`` backend (default when numba imports), and
* a pure-numpy backend, selected with ``HYPERPD_DISABLE_NUMBA=1``.

Simplicial complexes are passed as int64 arrays of face bitmasks sorted by
``(popcount, mask)``.  Characteristic 0 ranks first eliminate with unit
pivots (boundary matrices are mostly +-1, so this stays integral and small)
and finish the leftover block with fraction-free (Bareiss) elimination.
Both run in int64 behind an overflow guard; a guarded step that would
overflow falls back to the numpy path on Python integers, so results stay
exact.
"""
from __future__ import annotations

import os

import numpy as np

_FLAG = os.environ.get("HYPERPD_DISABLE_NUMBA", "").strip().lower()
NUMBA_DISABLED = _FLAG not in ("", "0", "false", "no")

try:
    if NUMBA_DISABLED:
        raise ImportError
    from numba import njit
    HAS_NUMBA = True
except ImportError:  # pragma: no cover - exercised via the env flag
    HAS_NUMBA = False

# |entry| bound under which a*b - c*d cannot overflow int64
_SAFE = 1 << 31


def popcounts(masks: np.ndarray) -> np.ndarray:
    m = masks.astype(np.uint64)
    out = np.zeros(m.shape, dtype=np.int64)
    while np.any(m):
        out += (m & np.uint64(1)).astype(np.int64)
        m = m >> np.uint64(1)
    return out


def sort_faces(masks) -> np.ndarray:
    masks = np.unique(np.asarray(masks, dtype=np.int64))
    order = np.lexsort((masks, popcounts(masks)))
    return masks[order]


# ---------------------------------------------------------------------------
# numpy backend
# ---------------------------------------------------------------------------

def boundary_matrix_np(rows: np.ndarray, cols: np.ndarray, nbits: int, signed: bool = True) -> np.ndarray:
    """Boundary matrix from faces ``cols`` (popcount c) to ``rows`` (popcount c-1)."""
    mat = np.zeros((rows.size, cols.size), dtype=np.int64)
    if rows.size == 0 or cols.size == 0:
        return mat
    below = np.zeros(cols.size, dtype=np.int64)  # set bits seen so far
    for b in range(nbits):
        bit = np.int64(1) << np.int64(b)
        has = (cols & bit) != 0
        if np.any(has):
            j = np.nonzero(has)[0]
            child = cols[j] ^ bit
            i = np.searchsorted(rows, child)
            sign = np.where(below[j] % 2 == 0, 1, -1) if signed else 1
            mat[i, j] = sign
        below += has
    return mat


def rank_mod_p_np(mat: np.ndarray, p: int) -> int:
    a = np.array(mat, dtype=np.int64) % p
    nrows, ncols = a.shape
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, c]), -1, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1:, c].copy()
        if np.any(below):
            a[r + 1:] = (a[r + 1:] - np.outer(below, a[r])) % p
        r += 1
    return r


def _int_array(mat) -> np.ndarray:
    # object input may already hold integers past int64
    if isinstance(mat, np.ndarray) and mat.dtype == object:
        return mat.copy()
    return np.array(mat, dtype=np.int64)


def rank_bareiss_np(mat: np.ndarray) -> int:
    """Exact rank over Q by fraction-free elimination.

    Runs in int64 while entries stay below 2**31 and switches to Python
    integers (object dtype) on the first step that could overflow.
    """
    a = _int_array(mat)
    nrows, ncols = a.shape
    prev = 1
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        if a.dtype != object and (np.abs(a[r:, c:]).max() >= _SAFE or abs(prev) >= _SAFE):
            a = a.astype(object)
        pv = a[r, c]
        sub = a[r + 1:, c + 1:]
        a[r + 1:, c + 1:] = (sub * pv - np.outer(a[r + 1:, c], a[r, c + 1:])) // prev
        a[r + 1:, c] = 0
        prev = pv
        r += 1
    return r


def rank_int_np(mat: np.ndarray) -> int:
    """Exact rank over Q: unit-pivot elimination, then Bareiss on the rest."""
    a = _int_array(mat)
    nrows, ncols = a.shape
    done = np.zeros(ncols, dtype=bool)
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        units = np.nonzero(np.abs(a[r:, c]) == 1)[0]
        if units.size == 0:
            continue
        piv = r + units[0]
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        f = a[r + 1:, c] * a[r, c]
        if np.any(f):
            if a.dtype != object and (np.abs(a[r:]).max() >= _SAFE):
                a = a.astype(object)
            a[r + 1:] -= np.outer(f, a[r])
        done[c] = True
        r += 1
    rest = a[r:][:, ~done]
    if rest.size == 0 or not np.any(rest):
        return r
    return r + rank_bareiss_np(rest)


def rank_np(mat: np.ndarray, p: int) -> int:
    if mat.size == 0:
        return 0
    return rank_int_np(mat) if p == 0 else rank_mod_p_np(mat, p)


def reduced_homology_np(faces: np.ndarray, nbits: int, p: int) -> np.ndarray:
    """Reduced Betti numbers ``h[c] = dim H~_{c-1}`` of a complex.

    ``faces`` must be sorted by popcount and contain the empty face; the
    result has length ``nbits + 1``.
    """
    h = np.zeros(nbits + 1, dtype=np.int64)
    if faces.size == 0:
        return h
    pc = popcounts(faces)
    top = int(pc[-1])
    groups = [faces[pc == c] for c in range(top + 1)]
    ranks = np.zeros(top + 2, dtype=np.int64)
    for c in range(1, top + 1):
        mat = boundary_matrix_np(groups[c - 1], groups[c], nbits, signed=(p != 2))
        ranks[c] = rank_np(mat, p)
    for c in range(top + 1):
        h[c] = groups[c].size - ranks[c] - ranks[c + 1]
    return h


def scan_np(faces: np.ndarray, sigmas: np.ndarray, nbits: int, p: int) -> np.ndarray:
    out = np.zeros((sigmas.size, nbits + 1), dtype=np.int64)
    for s, sigma in enumerate(sigmas):
        sub = faces[(faces & ~sigma) == 0]
        out[s] = reduced_homology_np(sub, nbits, p)
    return out


# ---------------------------------------------------------------------------
# numba backend
# ---------------------------------------------------------------------------

if HAS_NUMBA:

    @njit(cache=True)
    def _popcount_nb(x):
        c = 0
        while x:
            x &= x - 1
            c += 1
        return c

    @njit(cache=True)
    def _boundary_nb(faces, lo_r, hi_r, lo_c, hi_c, nbits, signed):
        nr = hi_r - lo_r
        nc = hi_c - lo_c
        mat = np.zeros((nr, nc), dtype=np.int64)
        for j in range(nc):
            f = faces[lo_c + j]
            t = 0
            for b in range(nbits):
                bit = np.int64(1) << b
                if f & bit:
                    child = f ^ bit
                    # binary search within the row segment
                    lo = lo_r
                    hi = hi_r
                    while lo < hi:
                        mid = (lo + hi) // 2
                        if faces[mid] < child:
                            lo = mid + 1
                        else:
                            hi = mid
                    if signed and t % 2 == 1:
                        mat[lo - lo_r, j] = -1
                    else:
                        mat[lo - lo_r, j] = 1
                    t += 1
        return mat

    @njit(cache=True)
    def _rank_mod_p_nb(a, p):
        nrows, ncols = a.shape
        for i in range(nrows):
            for j in range(ncols):
                a[i, j] = a[i, j] % p
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            # modular inverse by extended Euclid
            x0, x1, g0, g1 = 1, 0, a[r, c], p
            while g1 != 0:
                q = g0 // g1
                g0, g1 = g1, g0 - q * g1
                x0, x1 = x1, x0 - q * x1
            inv = x0 % p
            for j in range(c, ncols):
                a[r, j] = (a[r, j] * inv) % p
            for i in range(r + 1, nrows):
                f = a[i, c]
                if f != 0:
                    for j in range(c, ncols):
                        a[i, j] = (a[i, j] - f * a[r, j]) % p
            r += 1
        return r

    @njit(cache=True)
    def _rank_bareiss_nb(a):
        """Fraction-free rank in int64; returns -1 if a step could overflow."""
        nrows, ncols = a.shape
        prev = np.int64(1)
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] != 0:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(c, ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            pv = a[r, c]
            if pv >= _SAFE or pv <= -_SAFE:
                return -1
            for i in range(r + 1, nrows):
                f = a[i, c]
                if f >= _SAFE or f <= -_SAFE:
                    return -1
                for j in range(c + 1, ncols):
                    x = a[i, j]
                    y = a[r, j]
                    if x >= _SAFE or x <= -_SAFE or y >= _SAFE or y <= -_SAFE:
                        return -1
                    a[i, j] = (x * pv - f * y) // prev
                a[i, c] = 0
            prev = pv
            r += 1
        return r

    @njit(cache=True)
    def _rank_int_nb(a):
        """Unit-pivot elimination then Bareiss on the leftover block; -1 on overflow risk."""
        nrows, ncols = a.shape
        done = np.zeros(ncols, dtype=np.bool_)
        r = 0
        for c in range(ncols):
            if r == nrows:
                break
            piv = -1
            for i in range(r, nrows):
                if a[i, c] == 1 or a[i, c] == -1:
                    piv = i
                    break
            if piv < 0:
                continue
            if piv != r:
                for j in range(ncols):
                    tmp = a[r, j]
                    a[r, j] = a[piv, j]
                    a[piv, j] = tmp
            s = a[r, c]
            for i in range(r + 1, nrows):
                f = a[i, c]
                if f == 0:
                    continue
                f *= s
                if f >= _SAFE or f <= -_SAFE:
                    return -1
                for j in range(ncols):
                    v = a[r, j]
                    if v != 0:
                        if v >= _SAFE or v <= -_SAFE or a[i, j] >= _SAFE or a[i, j] <= -_SAFE:
                            return -1
                        a[i, j] -= f * v
            done[c] = True
            r += 1
        m = 0
        for c in range(ncols):
            if not done[c]:
                m += 1
        if r == nrows or m == 0:
            return r
        rest = np.empty((nrows - r, m), dtype=np.int64)
        k = 0
        nonzero = False
        for c in range(ncols):
            if not done[c]:
                for i in range(r, nrows):
                    rest[i - r, k] = a[i, c]
                    if a[i, c] != 0:
                        nonzero = True
                k += 1
        if not nonzero:
            return r
        rk = _rank_bareiss_nb(rest)
        if rk < 0:
            return -1
        return r + rk

    @njit(cache=True)
    def _reduced_homology_nb(faces, nbits, p, h):
        """Fill ``h`` like :func:`reduced_homology_np`; False on int64 overflow."""
        for c in range(h.size):
            h[c] = 0
        n = faces.size
        if n == 0:
            return True
        top = _popcount_nb(faces[n - 1])
        starts = np.zeros(top + 2, dtype=np.int64)
        for i in range(n):
            starts[_popcount_nb(faces[i]) + 1] += 1
        for c in range(1, top + 2):
            starts[c] += starts[c - 1]
        ranks = np.zeros(top + 2, dtype=np.int64)
        for c in range(1, top + 1):
            nr = starts[c] - starts[c - 1]
            nc = starts[c + 1] - starts[c]
            if nr == 0 or nc == 0:
                continue
            mat = _boundary_nb(faces, starts[c - 1], starts[c], starts[c], starts[c + 1], nbits, p != 2)
            if p == 0:
                rk = _rank_int_nb(mat)
                if rk < 0:
                    return False
            else:
                rk = _rank_mod_p_nb(mat, p)
            ranks[c] = rk
        for c in range(top + 1):
            h[c] = (starts[c + 1] - starts[c]) - ranks[c] - ranks[c + 1]
        return True

    @njit(cache=True)
    def _scan_nb(faces, sigmas, nbits, p):
        out = np.zeros((sigmas.size, nbits + 1), dtype=np.int64)
        ok = np.ones(sigmas.size, dtype=np.bool_)
        buf = np.empty(faces.size, dtype=np.int64)
        h = np.zeros(nbits + 1, dtype=np.int64)
        for s in range(sigmas.size):
            sigma = sigmas[s]
            m = 0
            for i in range(faces.size):
                if (faces[i] & ~sigma) == 0:
                    buf[m] = faces[i]
                    m += 1
            if _reduced_homology_nb(buf[:m], nbits, p, h):
                out[s, :] = h
            else:
                ok[s] = False
        return out, ok


def reduced_homology(faces: np.ndarray, nbits: int, p: int) -> np.ndarray:
    faces = np.ascontiguousarray(faces, dtype=np.int64)
    if HAS_NUMBA:
        h = np.zeros(nbits + 1, dtype=np.int64)
        if _reduced_homology_nb(faces, nbits, p, h):
            return h
    return reduced_homology_np(faces, nbits, p)


def scan(faces: np.ndarray, sigmas: np.ndarray, nbits: int, p: int, backend: str | None = None) -> np.ndarray:
    """Reduced homology of ``faces`` restricted to each mask in ``sigmas``.

    Row ``s`` of the result holds ``dim H~_{c-1}`` of the subcomplex on
    ``sigmas[s]`` at column ``c``.
    """
    faces = np.ascontiguousarray(faces, dtype=np.int64)
    sigmas = np.ascontiguousarray(sigmas, dtype=np.int64)
    backend = backend or ("numba" if HAS_NUMBA else "numpy")
    if backend == "numpy" or not HAS_NUMBA:
        return scan_np(faces, sigmas, nbits, p)
    out, ok = _scan_nb(faces, sigmas, nbits, p)
    for s in np.nonzero(~ok)[0]:
        sub = faces[(faces & ~sigmas[s]) == 0]
        out[s] = reduced_homology_np(sub, nbits, p)
    return out


def rank(mat, p: int = 0) -> int:
    """Rank of an integer matrix over Q (``p == 0``) or GF(p)."""
    mat = np.ascontiguousarray(mat, dtype=np.int64)
    if mat.size == 0:
        return 0
    if HAS_NUMBA:
        if p == 0:
            r = _rank_int_nb(mat.copy())
            if r >= 0:
                return int(r)
        else:
            return int(_rank_mod_p_nb(mat.copy(), p))
    return rank_np(mat, p)
