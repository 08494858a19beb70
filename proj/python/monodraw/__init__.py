"""Monotone, strictly convex, and strongly monotone straight-line drawings.

Thin wrapper around the C++ core; drawings and graphs travel as JSON/text
strings, matching the file formats of the `monodraw` command-line tool.
"""

from ._core import (
    __version__,
    draw,
    farey_size,
    farey_vectors,
    gen,
    render_svg,
    select_d_for,
    verify,
)

__all__ = [
    "__version__",
    "draw",
    "farey_size",
    "farey_vectors",
    "gen",
    "render_svg",
    "select_d_for",
    "verify",
]
