"""Numerics for a path of quasi-Fuchsian structures on a genus-2 handlebody.

Submodules:
  complexalg  Möbius maps, fixed points, cross-ratios
  reppath     the representation path, words, symmetry checks, orbit samples
  corebend    bending angle, lengths, cusp threshold
  profile     the grafted quadrilateral and its normalized profile region
  modnum      conformal modulus by finite elements
  exactcert   certified interval arithmetic for the supporting inequalities
"""

__version__ = "0.1.0"
