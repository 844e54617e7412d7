"""Perft cross-validation: both backends must count the same game tree.

Run:  python demos/03_perft.py
"""

import time

from chesslut import (
    DirectBackend,
    RotatedBackend,
    build_attack_tables,
    build_line_attack_bytes,
    build_rotation_maps,
    perft,
    startpos,
)

backends = (
    DirectBackend(build_attack_tables()),
    RotatedBackend(build_rotation_maps(), build_line_attack_bytes()),
)

position = startpos()
print("startpos leaf counts per depth, direct vs rotated\n")
print(f"{'depth':>5}  {'direct':>10}  {'rotated':>10}")
for depth in range(1, 5):
    row = []
    for backend in backends:
        start = time.perf_counter()
        nodes = perft(position, depth, backend)
        row.append((nodes, time.perf_counter() - start))
    (d_nodes, d_time), (r_nodes, r_time) = row
    marker = "ok" if d_nodes == r_nodes else "MISMATCH"
    print(f"{depth:>5}  {d_nodes:>10}  {r_nodes:>10}   {marker}  ({d_time:.2f}s / {r_time:.2f}s)")
