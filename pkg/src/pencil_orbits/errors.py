# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Root classes of all exceptions raised by this package.

Every module declares its own, more specific exceptions. They all
derive from one of the two classes here, which is what the command-line
interface uses to pick an exit status:

- :exc:`PreconditionError` means the input lies outside the domain of
  an operation (exit status 2);
- :exc:`CertificationError` means the computation itself could not be
  brought to a certified result (exit status 3).
"""

from __future__ import annotations

__all__ = [
    "CertificationError",
    "PreconditionError",
]


class PreconditionError(ValueError):
    """The arguments of an operation violate its precondition."""


class CertificationError(ArithmeticError):
    """A numeric result could not be certified or an experiment deviated."""
