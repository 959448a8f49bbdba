# SPDX-FileCopyrightText: 2020-2023 CERN
# SPDX-FileCopyrightText: 2023 GSI Helmholtzzentrum für Schwerionenforschung
# SPDX-FileNotice: All rights not expressly granted are reserved.
#
# SPDX-License-Identifier: GPL-3.0-or-later OR EUPL-1.2+

"""Required code to get our logging setup off the ground."""

from __future__ import annotations

import io
import logging
import os
import tempfile
import typing as t
from logging import FileHandler, StreamHandler

FORMAT = "%(asctime)s:%(levelname)s:%(name)s:%(message)s"


def create_handler(filename: t.Union[None, str, os.PathLike]) -> StreamHandler:
    """Create the logging handler of the command-line tool.

    If *filename* is a file path, this creates a :class:`FileHandler`
    for it. If *filename* is None, a fresh file in the temporary
    directory is used. If *filename* is the string ``"-"``, the returned
    :class:`StreamHandler` logs to standard error. Standard output is
    never used; it carries the JSON result.
    """
    if filename == "-":
        handler = StreamHandler()
    elif filename is not None:
        # FileHandler is a StreamHandler[io.TextIOWrapper], which MyPy
        # does not relate to StreamHandler[t.TextIO].
        handler = t.cast(StreamHandler, FileHandler(filename))
    else:
        # Open the temporary file ourselves (no TOC/TOU race) and hand
        # the open stream to a delayed FileHandler, which closes it.
        file = tempfile.NamedTemporaryFile(  # pylint: disable=consider-using-with
            mode="w", prefix=__package__ + "_", suffix=".log", delete=False
        )
        handler = t.cast(StreamHandler, FileHandler(file.name, delay=True))
        handler.setStream(t.cast(io.TextIOWrapper, file))
    handler.setLevel(logging.DEBUG)
    handler.setFormatter(logging.Formatter(FORMAT))
    return handler
