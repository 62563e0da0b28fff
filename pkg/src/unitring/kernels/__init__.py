"""Hot numeric kernels with a compiled core and a pure-numpy fallback.

The compiled module (`unitring.kernels._native`, Cython) and the fallback
(`unitring.kernels.fallback`) implement the same four functions:

    build_spf(limit)                  smallest-prime-factor table, int32
    split_tables(spf, n)              (component, cofactor) int64 tables where
                                      component[m] = p^{v_p(m)} for p = spf[m]
                                      and cofactor[m] = m // component[m]
    multiplicative_values(ppval, component, cofactor)
                                      out[m] = out[cofactor[m]] * ppval[component[m]]
    additive_values(ppval, component, cofactor)
                                      out[m] = out[cofactor[m]] + ppval[component[m]]

Selection: the compiled module wins when importable; set UNITRING_KERNELS to
"fallback" or "native" to force a backend (forcing "native" raises if the
extension is not built).
"""

import os

from . import fallback as _fallback

_forced = os.environ.get("UNITRING_KERNELS", "").strip().lower()

if _forced == "fallback":
    _impl = _fallback
elif _forced == "native":
    from . import _native as _impl  # noqa: F401  (ImportError is the contract)
else:
    try:
        from . import _native as _impl
    except ImportError:
        _impl = _fallback

build_spf = _impl.build_spf
split_tables = _impl.split_tables
multiplicative_values = _impl.multiplicative_values
additive_values = _impl.additive_values


def backend_name() -> str:
    """'native' when the compiled extension is active, else 'fallback'."""
    return "native" if _impl.__name__.endswith("_native") else "fallback"
