"""gnvanish: admissible-exponent calculus and grid experiments for
interpolation inequalities with Fourier symbols vanishing on a surface."""

__version__ = "0.1.0"
