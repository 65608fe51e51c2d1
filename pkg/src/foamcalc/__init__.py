"""Exact calculators for colored sl(N) link homology and its foam scalars."""
from .deformed import SigmaSpec, deformed_homology, simple_resolution
from .functorial import ScalarExpr, omega, r_scalar, verify_movie_moves
from .grassmann import GrassmannAlgebra, idempotents, sylvester
from .linkcx import ColoredDiagram, euler_char
from .poly import LaurentPoly, Poly
from .symcore import Partition, SymElt, lr_coeff, lr_product, qbinomial, schur_product
from .webmoy import Web, WebBuilder, hom_dim, moy_eval

__all__ = [
    "ColoredDiagram",
    "GrassmannAlgebra",
    "LaurentPoly",
    "Partition",
    "Poly",
    "ScalarExpr",
    "SigmaSpec",
    "SymElt",
    "Web",
    "WebBuilder",
    "deformed_homology",
    "euler_char",
    "hom_dim",
    "idempotents",
    "lr_coeff",
    "lr_product",
    "moy_eval",
    "omega",
    "qbinomial",
    "r_scalar",
    "schur_product",
    "simple_resolution",
    "sylvester",
    "verify_movie_moves",
]
