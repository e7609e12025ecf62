"""Grow the complexes C^n(k) chamber by chamber and watch spheres appear.

Each new chamber either attaches along all of its facets (adding one
(n-1)-sphere) or along some of them (no change up to homotopy).  The top
reduced Betti number of C^n(k) should therefore increase by exactly the
number of full attachments at each stage.

Run: python3 demos/filtration_homology.py
"""

from artinstab import ArtinSequence, build_filtration, connectivity_check, shelling_report

seq = ArtinSequence()

for n, k_max in ((2, 5), (3, 4), (4, 3)):
    print(f"n = {n}")
    rep = shelling_report(seq, n, k_max)
    print(f"  points (A)/(B): {rep.status}, chambers checked {rep.point_A['checked']}")
    print(f"  case labels: {rep.cases}")
    prev = 0
    for k in range(k_max + 1):
        fc = build_filtration(seq, n, k)
        h = connectivity_check(fc)
        new = h.top_betti - prev
        attached = rep.spheres_attached[k - 1] if k else 0
        print(f"  k={k}: cells per level {fc.dims()}, top Betti {h.top_betti} (+{new}, full attachments {attached})")
        prev = h.top_betti
