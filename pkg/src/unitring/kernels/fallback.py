"""Pure-numpy kernel implementations.

Same contracts as the compiled module; see the package docstring. The
sequential recurrences are vectorized by processing index waves: a value is
computable once its cofactor's value exists, and every wave strictly shrinks
(each pass resolves all m whose cofactor was resolved before it).
"""

import numpy as np


def build_spf(limit: int) -> np.ndarray:
    """Smallest-prime-factor table for 0..limit (int32).

    spf[0] = 0, spf[1] = 1, spf[p] = p for primes. Assigns p*p::p slices for
    primes descending, so the smallest prime wins the final write: any
    composite m has its least factor p0 <= sqrt(m), hence lies in p0's slice.
    """
    limit = max(int(limit), 1)
    if limit >= 2**31:
        raise ValueError("sieve limit must fit in int32")
    spf = np.arange(limit + 1, dtype=np.int32)
    root = int(np.sqrt(limit)) + 1
    while root * root > limit:
        root -= 1
    composite = np.zeros(root + 1, dtype=bool)
    small = []
    for p in range(2, root + 1):
        if not composite[p]:
            small.append(p)
            composite[p * p :: p] = True
    for p in reversed(small):
        spf[p * p :: p] = p
    return spf


def split_tables(spf: np.ndarray, n: int) -> tuple[np.ndarray, np.ndarray]:
    """component[m] = p^{v_p(m)} for p = spf[m]; cofactor[m] = m // component[m].

    Both int64, indices 0..n; entries 0 and 1 are (0,0) and (1,1).
    """
    if n + 1 > spf.shape[0]:
        raise ValueError("spf table smaller than requested range")
    s = spf[: n + 1].astype(np.int64)
    idx = np.arange(n + 1, dtype=np.int64)
    comp = s.copy()
    cof = np.zeros(n + 1, dtype=np.int64)
    np.floor_divide(idx, comp, out=cof, where=comp > 0)
    if n >= 1:
        comp[1] = 1
        cof[1] = 1
    active = np.flatnonzero((cof > 1) & (s[cof] == s))
    while active.size:
        comp[active] *= s[active]
        cof[active] = idx[active] // comp[active]
        c = cof[active]
        keep = (c > 1) & (s[c] == s[active])
        active = active[keep]
    return comp, cof


def _wave_apply(ppval, component, cofactor, combine):
    n = component.shape[0] - 1
    out = np.zeros(n + 1, dtype=np.complex128)
    if combine is np.multiply and n >= 1:
        out[1] = 1.0
    done = np.zeros(n + 1, dtype=bool)
    done[: min(2, n + 1)] = True
    pending = np.arange(2, n + 1, dtype=np.int64)
    while pending.size:
        ready = done[cofactor[pending]]
        sel = pending[ready]
        out[sel] = combine(out[cofactor[sel]], ppval[component[sel]])
        done[sel] = True
        pending = pending[~ready]
    return out


def multiplicative_values(ppval, component, cofactor):
    """out[m] = out[cofactor[m]] * ppval[component[m]], out[1] = 1."""
    return _wave_apply(ppval, component, cofactor, np.multiply)


def additive_values(ppval, component, cofactor):
    """out[m] = out[cofactor[m]] + ppval[component[m]], out[1] = 0."""
    return _wave_apply(ppval, component, cofactor, np.add)
