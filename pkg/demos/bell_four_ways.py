#!/usr/bin/env python3
"""Four independent routes to the flickering Bell sequence (OEIS A395022),
then the hierarchy of integer kernels it leaves under iterated inverse
binomial transforms.
"""

from flick import (
    antidiagonal_sums,
    bell_closed_form,
    bell_ogf_coefficients,
    bell_with_leading_one,
    binomial_transform,
    kernel,
    row_sums,
)

N = 14

print(f"First {N} terms by four unrelated computations:")
print(f"  triangle row sums:        {row_sums(N).values}")
print(f"  grid anti-diagonal sums:  {antidiagonal_sums(N).values}")
print(f"  OGF series expansion:     {bell_ogf_coefficients(N + 1)}")
print(f"  hyperbolic closed form:   {[bell_closed_form(n) for n in range(1, N + 1)]}")

print()
print("Prepend a 1 and peel inverse binomial transforms off the sequence;")
print("every second layer is an alternating integer kernel:")
for q in range(0, 9, 2):
    values = kernel(q, 7).values
    print(f"  q={q}: {values}")

print()
print("Each kernel transforms back exactly:")
reference = bell_with_leading_one(10)
for q in (2, 4, 6, 8):
    seq = kernel(q, 10)
    for _ in range(q):
        seq = binomial_transform(seq)
    print(f"  q={q}: {q} forward transforms recover the sequence: {seq == reference}")
