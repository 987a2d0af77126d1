"""Hot-kernel backend selection.

The compiled extension (osctab._kernels_c, built from Cython) is used
when it imports cleanly; otherwise the pure-Python twin takes over.
Setting OSCTAB_PURE=1 forces the fallback, which is how the benchmark
and the backend-parity tests obtain both implementations side by side.
"""

import os

from . import _kernels_py

STATUS_FOUND = _kernels_py.STATUS_FOUND
STATUS_INFEASIBLE = _kernels_py.STATUS_INFEASIBLE
STATUS_BUDGET = _kernels_py.STATUS_BUDGET

if os.environ.get("OSCTAB_PURE"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kernels_py

BACKEND = "compiled" if _impl.__name__.endswith("_kernels_c") else "pure"

matching_stats = _impl.matching_stats
joint_distribution_counts = _impl.joint_distribution_counts
ot_weight_profile = _impl.ot_weight_profile


def triple_search(values, target, node_budget, time_budget, mate=None):
    """Dispatch to the active backend; values beyond 64 bits use the pure one."""
    try:
        return _impl.triple_search(values, target, node_budget, time_budget, mate)
    except OverflowError:
        return _kernels_py.triple_search(values, target, node_budget, time_budget, mate)


def backends() -> dict[str, object]:
    """Every importable backend module keyed by name (for tests and benchmarks)."""
    available: dict[str, object] = {"pure": _kernels_py}
    try:
        from . import _kernels_c

        available["compiled"] = _kernels_c
    except ImportError:
        pass
    return available
