"""Positive braid rewriting and coherence toolkit.

String-based wrappers over the C++ core: braid words ("3: s1 s2 s1"),
diagram cells ("(comp (braid b a) (braid a b))"), and reduction traces all
cross the boundary as text.
"""

try:
    from ._core import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # pragma: no cover - in-tree test layout
    from _core import *  # noqa: F401,F403
