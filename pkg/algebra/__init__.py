# Algebra module - exact polynomials, matrices, resultants
