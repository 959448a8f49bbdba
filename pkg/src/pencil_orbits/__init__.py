# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Exact orbit geometry of pencils of quadrics in P³.

The subpackages follow the flow of the computation: binary quartics
(`core_algebra`), pencils and their discriminants (`pencil`), normal
forms of smooth and tangent pencils (`normal_forms`), the j-map on the
Legendre line (`moduli`), Schubert classes on Gr(2, n) (`schubert`) and
enumerative checks on plane slices (`slice_lab`).
"""
