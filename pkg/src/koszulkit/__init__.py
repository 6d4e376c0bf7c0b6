"""Exact computations with graded linear categories given by quivers with relations.

The main entry points: build a ``Presentation``, resolve its simple
functors with ``minimal_resolution``, certify Koszulity with ``is_koszul``
and compare with ``quadratic_dual`` / ``ext_algebra``.  Finite-dimensional
algebras and their radical filtrations live in ``filtered``; mesh
categories of translation quivers in ``ar``.
"""

from .xla import QQ, GF, Field, Mat, Subspace, rref, span, kernel, intersect
from .presentation import Presentation, PresentationError, TruncationError, load_presentation, check_generated_01
from .gmod import (GradedModule, FreeModule, CokernelData, projective, simple, radical, top, tensor, dual,
                   hom_degree0, cokernel_module)
from .resolve import minimal_resolution, is_linear, is_koszul, butler_check, global_dim_probe, ext_dims
from .dual import quadratic_dual, ext_algebra, koszul_dual_compare, orthogonal_relations
from .filtered import (FDAlgebra, FModule, PreconditionError, weakly_koszul, weakly_koszul_algebra, assoc_graded,
                       g_functor, load_algebra)
from .ar import TranslationQuiver, mesh_presentation, verify_ar_resolutions

__version__ = "0.1.0"
