"""Adiabatic ground-state metrology on a perturbed two-spin Ising model.

The heavy lifting lives in the compiled extension; this package re-exports
its public surface.
"""

from ._core import *  # noqa: F401,F403
from ._core import __doc__ as _core_doc

__doc__ = _core_doc
