"""Regenerate tests/data/erf_reference.csv.

1000 points drawn uniformly from the closed disk |z| <= 10 (rejection sampling,
fixed seed), with erf(z) evaluated by mpmath at 30 significant digits. The test
suite compares the library's complex error function against these rows, so the
sampling and formatting here must stay byte-stable.
"""
import pathlib

import mpmath as mp
import numpy as np

mp.mp.dps = 30

rng = np.random.default_rng(20260816)
pts = []
while len(pts) < 1000:
    x, y = rng.uniform(-10, 10, 2)
    if x * x + y * y <= 100.0:
        pts.append(complex(x, y))

rows = []
for z in pts:
    r = mp.erf(mp.mpc(z.real, z.imag))
    rows.append(f"{z.real!r},{z.imag!r},{mp.nstr(r.real, 17)},{mp.nstr(r.imag, 17)}")

out = pathlib.Path(__file__).resolve().parent.parent / "tests" / "data" / "erf_reference.csv"
out.write_text("re_z,im_z,re_erf,im_erf\n" + "\n".join(rows) + "\n")
print(f"wrote {out} ({len(rows)} rows)")
