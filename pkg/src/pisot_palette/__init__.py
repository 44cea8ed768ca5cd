"""Exact Voronoi palettes and spectra of numeration sets in cubic complex Pisot bases."""

from .cutproject import DiskQuery, Window, enumerate_sigma, l_bound_sq
from .delone import DualFace, delone_faces, delta_star_sq
from .errors import PaletteError
from .expr import format_qbeta, parse_window
from .field import BaseSpec, QBeta, ZGamma, make_base
from .numeration import renyi_expand, xm_witness
from .spectra import (
    SpectralReport, density_profile, k_for_m, spectra_for_m, tribo_closed_form, window_for_m,
)
from .sweep import PaletteAtlas, sweep
from .voronoi import Protocell, palette, palette_run, protocell_from_patch

__version__ = "0.1.0"

__all__ = [
    "BaseSpec", "QBeta", "ZGamma", "make_base", "Window", "DiskQuery", "enumerate_sigma", "l_bound_sq",
    "renyi_expand", "xm_witness", "Protocell", "palette", "palette_run", "protocell_from_patch",
    "PaletteAtlas", "sweep", "DualFace", "delone_faces", "delta_star_sq", "SpectralReport",
    "window_for_m", "k_for_m", "spectra_for_m", "tribo_closed_form", "density_profile",
    "parse_window", "format_qbeta", "PaletteError",
]
