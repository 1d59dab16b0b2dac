"""Exact Galois-module invariants of tame abelian extensions of Q.

The modules build on each other: ``cyclo``/``intmat``/``padic`` (exact core),
``chars`` (finite abelian groups and character functions), ``fields``
(abelian fields by conductor and kernel), ``gauss`` (Gauss sums and
Pfaffians), ``resolvends`` (group algebras and torsors), ``relk`` (class
representatives and their projections), ``torsion`` (the Chase module) and
``cli``.
"""

__version__ = "0.1.0"

from .kernels import BACKEND
from .cyclo import ComplexApprox, CycloNumber
from .intmat import IntegerMatrix, SNFResult, snf
from .padic import cyclo_valuations
from .chars import CharFn, Character, FinAbGroup, GroupElement, char_act, characters_of, \
    charfn_check_equivariance
from .fields import AbelianField, build_field, discriminant, nib_generator, ramification_data, \
    tame_fields
from .gauss import DirichletCharacter, epsilon_constant, gauss_sum, pfaffian, \
    symplectic_characters, unramified_characteristic, w_infinity
from .resolvends import GroupAlgebraElement, TorsorDescriptor, h_membership, primitivity_test, \
    resolvend_of_torsor, torsor_relk_class
from .relk import RelKRep, class_projections, delta_rep_of_field, gauss_rep_of_field, \
    metrised_class, to_arith_class
from .torsion import chase_cokernel, chase_matrix, cht_check

__all__ = [
    "BACKEND", "ComplexApprox", "CycloNumber", "IntegerMatrix", "SNFResult", "snf",
    "cyclo_valuations", "CharFn", "Character", "FinAbGroup", "GroupElement", "char_act",
    "characters_of", "charfn_check_equivariance", "AbelianField", "build_field", "discriminant",
    "nib_generator", "ramification_data", "tame_fields", "DirichletCharacter",
    "epsilon_constant", "gauss_sum", "pfaffian", "symplectic_characters",
    "unramified_characteristic", "w_infinity", "GroupAlgebraElement", "TorsorDescriptor",
    "h_membership", "primitivity_test", "resolvend_of_torsor", "torsor_relk_class", "RelKRep",
    "class_projections", "delta_rep_of_field", "gauss_rep_of_field", "metrised_class",
    "to_arith_class", "chase_cokernel", "chase_matrix", "cht_check",
]
