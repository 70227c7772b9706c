#!/usr/bin/env python3
"""The divergent-tail witness for r < q.

The sequence x(n) = n^(-1/r) lies in lq but not in lr.  Its basis expansion
sum x(n) e_n converges unconditionally in lq (the tail lq norm vanishes),
yet multiplying termwise by the bounded multipliers e_n reproduces the same
series seen in lr, whose partial norms are harmonic sums to the power 1/r
and grow beyond every level B.
"""

from uncond import divergent_tail_norm, tail_q_bound, tail_witness

q, r = 2, 1

print(f"x(n) = n^(-1/{r}) viewed in l_{q} (summable tail) vs l_{r} (divergent)")
print("-" * 72)
print(f"{'B':>4} {'N':>6} {'partial lr norm':>16} {'lq tail bound':>14}")
for B in (1, 2, 3, 5, 6, 7):
    w = tail_witness(q, r, B)
    print(f"{B:>4} {w.N:>6} {w.partial_r_norm:>16.6f} {w.tail_q_bound:>14.6f}")

print("\npartial lr norms are monotone and unbounded; the lq tail vanishes:")
for N in (1, 10, 100, 1000, 10000):
    print(f"  N = {N:>6}: partial {divergent_tail_norm(r, N):9.4f}, "
          f"tail {tail_q_bound(q, r, N):.6f}")

# The same construction certifies sup-space series: with q = inf the tail
# bound is just the first omitted term.
w = tail_witness("inf", 2, 3.0)
print(f"\nq = inf, r = 2, B = 3: N = {w.N}, tail bound {w.tail_q_bound:.6f}")

# The CLI equivalent:
#   uncond witness-tail --q 2 --r 1 --B 5
