from __future__ import absolute_import, division, print_function

try:
    from _engelgroups_version import version as __version__  # noqa
except ImportError:  # source checkout without a build
    __version__ = "unknown"

from . import alphabet, engel, finitewreath, metrics, treeauto, utils
from .alphabet import TreeSignature, parse_signature
from .finitewreath import WreathSpec, parse_wreath_spec
from .treeauto import Word, parse_word
from .utils.log import verbose

# Turn off verbosity for engelgroups
verbose(override=True)

__all__ = [
    "TreeSignature",
    "Word",
    "WreathSpec",
    "alphabet",
    "engel",
    "finitewreath",
    "metrics",
    "parse_signature",
    "parse_word",
    "parse_wreath_spec",
    "treeauto",
    "utils",
    "verbose",
]
