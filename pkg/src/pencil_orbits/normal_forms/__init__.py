# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Normal forms of smooth and nodal pencils, with explicit transformations."""

from ._diagonalize import (
    DiagonalizationResult,
    NotSmooth,
    RepeatedLambda,
    diagonal_pencil,
    realize_quartic,
    simultaneous_diagonalize,
)
from ._linear import Path, congruence_diagonalize
from ._nodal import (
    W_NODE,
    CanonicalForm,
    NodalFormResult,
    NotNodal,
    nodal_canonicalize,
    nodal_normalize,
    tangent_member,
    w_pencil,
)
from ._node import NodePoint, NodeReport, verify_node

__all__ = [
    "CanonicalForm",
    "DiagonalizationResult",
    "NodalFormResult",
    "NodePoint",
    "NodeReport",
    "NotNodal",
    "NotSmooth",
    "Path",
    "RepeatedLambda",
    "W_NODE",
    "congruence_diagonalize",
    "diagonal_pencil",
    "nodal_canonicalize",
    "nodal_normalize",
    "realize_quartic",
    "simultaneous_diagonalize",
    "tangent_member",
    "verify_node",
    "w_pencil",
]
