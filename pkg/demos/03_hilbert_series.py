"""Hilbert series of the Stanley-Reisner ring, two ways.

Run:  python demos/03_hilbert_series.py
"""

from spancom import (
    expand_series,
    f_vector,
    hilbert_closed,
    hilbert_function_direct,
    make_unicyclic,
    series_from_f,
    spanning_complex,
)

u = make_unicyclic(4, 3, [3])  # triangle plus one pendant edge
cx = spanning_complex(u.base)

# Summing f_i t^(i+1) / (1-t)^(i+1) and clearing denominators leaves a
# numerator with no factor of (1 - t) once normalized.
s = series_from_f(f_vector(cx))
print("numerator:", s.numerator, "pole order:", s.pole_order)  # 1 + t + t^2 over (1-t)^3

# The closed form gives the same rational function.
print("closed form:", hilbert_closed(4, 3))

# Expanding the series counts monomials by degree; compare with a direct count
# of monomials supported on faces.
print("expanded:     ", expand_series(s, 8))
print("direct count: ", [hilbert_function_direct(cx, j) for j in range(9)])
