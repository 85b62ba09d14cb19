from ._kschur import NotInSpanError
from .base import (
    Core,
    IndexedRootIdeal,
    KExpansion,
    RootIdeal,
    SymFunc,
    TPoly,
    VerifyParam,
)
from .kschur import KSchurLab

__version__ = "0.1.0"
