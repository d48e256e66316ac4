"""Computations in 0-Hecke monoids and their quotients, plus crystal graphs."""

from .perms import Permutation, all_perms, catalan, length, reduced_word
from .algebra import (AlgebraElement, SignedDiagram, all_diagrams, diagram_demipotent,
                      diagram_idempotent, idempotent_family, nilpotence_degrees)
from .ndpf import NdpfFunction, quotient_phi, quotient_psi_phi, omega_map
from .affine import AffinePermutation
from .affine_ndpf import AffineNdpf
from .orp import Poset, get_poset
from .crystal import CrystalGraph, Tableau, tableau_crystal, tensor, check_stembridge
from .qpoly import LaurentPoly, q_binomial, structure_constants

__version__ = "0.1.0"
