"""
==========================
Census tables and pictures
==========================

Write JSON tables for one size and SVG drawings of a few objects.
"""

# %%

from pathlib import Path

from tfplkit import Config, enumerate_fpl, enumerate_puzzles, enumerate_tfpl, render_svg, run_census, verify_all
from tfplkit.tfpl import canonical_orientation

out = Path("tfplkit-demo")
print(run_census(Config(output_dir=out, parallelism=2), 3))

# %%

pictures = {
    "fpl.svg": enumerate_fpl(4)[0],
    "tfpl.svg": canonical_orientation(enumerate_tfpl("00011101", "00011011", "00110101")[0]),
    "puzzle.svg": enumerate_puzzles("00011101", "00011011", "00110101")[0],
}
for name, obj in pictures.items():
    (out / name).write_text(render_svg(obj))

# %%
# The full verification pipeline with reduced bounds

for line in verify_all(Config(tfpl_max_n=3))["lines"]:
    print(line)
