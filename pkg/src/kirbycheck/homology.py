"""Homology of handle structures and of their boundary 3-manifolds.

For a compact connected structure with one 0-handle and no 3-handles the
chain complex is Z^{2-handles} -> Z^{1-handles} -> Z with the passage
matrix as middle map, so H0 = Z, H1 = coker, H2 = ker.  H3 and H4 vanish
for everything in scope and are not reported.  Structures with
uncancelled 3-handles are refused rather than guessing their boundary
maps; cancel them first (see the moves module).
"""

from __future__ import annotations

from .linalg import AbelianGroup, Z, cokernel, generates_cokernel, kernel_rank
from .structures import HandleStructure, boundary_surgery_form, curve_class, passage_matrix


def homology(hs: HandleStructure) -> tuple[AbelianGroup, AbelianGroup, AbelianGroup]:
    """(H0, H1, H2) of the 4-manifold carried by the structure."""
    if hs.three_handle_count:
        raise ValueError(
            f"uncancelled 3-handles ({hs.three_handle_count}): use verify_product first"
        )
    pm = passage_matrix(hs)
    return Z, cokernel(pm), AbelianGroup(kernel_rank(pm))


def boundary_h1(hs: HandleStructure) -> AbelianGroup:
    """H1 of the boundary 3-manifold, from the dot-for-zero surgery form."""
    return cokernel(boundary_surgery_form(hs))


def euler_characteristic(hs: HandleStructure) -> int:
    return 1 - len(hs.one_handles) + len(hs.two_handles) - hs.three_handle_count


def curve_generates_h1(hs: HandleStructure, curve_name: str) -> bool:
    """True when the marked curve's class generates H1 of the structure."""
    return generates_cokernel(passage_matrix(hs), curve_class(hs, curve_name))
