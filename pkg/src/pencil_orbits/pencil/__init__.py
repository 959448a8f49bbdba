# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Pencils of quadrics in P³, their discriminant and their classification."""

from ._members import (
    LineInD,
    OrbitClass,
    OrbitTag,
    SingularMember,
    classify,
    kernel_modulo,
    rank_modulo,
    singular_members,
)
from ._pencil import (
    COORDINATES,
    AsymmetricMatrix,
    DependentPencil,
    Pencil,
    SingularGroupElement,
    SymMat4,
    basis_change,
    congruence_act,
    discriminant_quartic,
    pencil_from_forms,
    quadratic_form,
    rational_matrix,
    sym_mat4,
    upper_triangle,
)
from ._stabilizer import StabilizerReport, infinitesimal_stabilizer_dim

__all__ = [
    "AsymmetricMatrix",
    "COORDINATES",
    "DependentPencil",
    "LineInD",
    "OrbitClass",
    "OrbitTag",
    "Pencil",
    "SingularGroupElement",
    "SingularMember",
    "StabilizerReport",
    "SymMat4",
    "basis_change",
    "classify",
    "congruence_act",
    "discriminant_quartic",
    "infinitesimal_stabilizer_dim",
    "kernel_modulo",
    "pencil_from_forms",
    "quadratic_form",
    "rank_modulo",
    "rational_matrix",
    "singular_members",
    "sym_mat4",
    "upper_triangle",
]
