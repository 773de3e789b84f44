"""Watch the group convolution matrix form during training.

At step 0 the generator is close to the identity, so every column of L is the
same (cropped) filter and L has rank one.  As the entropy rank grows the
columns separate and L gains rank.  The script trains a small translation run
and writes one PNG strip of L snapshots plus one of the cropped generator,
printing the rank and generator cosine at each snapshot.

    python3 demos/snapshots.py [out_dir]
"""
import sys
from pathlib import Path

import numpy as np

from symforge import datagen as dg
from symforge import evaluation as ev
from symforge import io
from symforge.trainer import TrainConfig, train

out = Path(sys.argv[1] if len(sys.argv) > 1 else "demo_out/snapshots")
out.mkdir(parents=True, exist_ok=True)

ds = dg.build_dataset(dg.DatasetConfig(signal="gaussian", transform="identity", n_samples=10_000, d=17))
trainer = train(TrainConfig(steps=2000, snapshot_every=250), ds.X, progress_every=250)

for snap in trainer.state.snapshots:
    L = snap.conv
    sv = np.linalg.svd(L, compute_uv=False)
    cos = ev.best_alignment(snap.generator, ds.generator).cosine
    print(f"step {snap.step:5d}  cosine {cos:+.3f}  effective rank of L {np.sum(sv > 0.05 * sv[0]):2d}")

io.write_heatmaps(out / "conv_snapshots.png", [s.conv for s in trainer.state.snapshots], cell=6, gap=1)
io.write_heatmaps(out / "generator_snapshots.png", [s.generator for s in trainer.state.snapshots], cell=6, gap=1)
print(f"wrote {out}/conv_snapshots.png and {out}/generator_snapshots.png")
