"""Restrictions of equivariant Schubert classes of classical Grassmannians to fixed points."""

__version__ = "0.1.0"
