"""Degenerate fourth-order beam operators: C1 Galerkin solver and checks."""

try:
    from ._degenbeam import *  # noqa: F401,F403  (installed package layout)
except ImportError:
    from _degenbeam import *  # noqa: F401,F403  (build-tree layout)
