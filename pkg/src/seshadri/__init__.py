"""Exact computational algebra for local positivity of hyperplane bundles.

Core layers: sparse exact polynomials (``poly``), Groebner machinery
(``groebner``, ``hilbert``), point-local geometry (``geometry``), bound
certificates and enumerations (``certificates``), verified example families
(``factory``), plus a text format (``parsing``), a JSON report shape
(``reports``), an HTTP service (``service``) and a CLI (``cli``).
"""

from .reports import VERSION as __version__

__all__ = ["__version__"]
