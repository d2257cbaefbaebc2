"""Tour of the tabletop world: both tasks, every shift condition, masks.

Saves a contact sheet to demos/out/world_tour.png.

Run:  python3 demos/02_tabletop_world.py
"""

from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt
import numpy as np

from vca import sim

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)

panels = [
    ("block_sort / basic", "block_sort", "basic"),
    ("block_sort / new_color", "block_sort", "new_color"),
    ("block_sort / checkered", "block_sort", "checkered"),
    ("block_sort / plaid", "block_sort", "plaid"),
    ("hanoi / basic", "hanoi", "basic"),
    ("hanoi / new_shape", "hanoi", "new_shape"),
    ("hanoi / new_color", "hanoi", "new_color"),
    ("hanoi / plaid", "hanoi", "plaid"),
]

fig, axes = plt.subplots(3, 4, figsize=(11, 8))
for ax, (title, task, shift) in zip(axes.flat, panels):
    state = sim.reset(task, seed=7, shift=sim.ShiftCondition(shift))
    ax.imshow(sim.render(state, "head"))
    ax.set_title(title, fontsize=9)
    ax.axis("off")

# last row: wrist view over a block, and a ground-truth mask
state = sim.reset("block_sort", seed=7)
block = next(o for o in state.objects if o.kind == "block")
for _ in range(30):
    sim.step(state, sim.SimAction(block.position, 1.0))
axes.flat[8].imshow(sim.render(state, "wrist"))
axes.flat[8].set_title("wrist view over a block", fontsize=9)
axes.flat[8].axis("off")
axes.flat[9].imshow(sim.ground_truth_mask(state, "head", block.id), cmap="gray")
axes.flat[9].set_title("ground-truth instance mask", fontsize=9)
axes.flat[9].axis("off")

state = sim.reset("hanoi", seed=3)
rings = sorted(state.graspable_objects(), key=lambda o: -o.size)
axes.flat[10].imshow(sim.render(state, "head"))
axes.flat[10].set_title(f"7 rings, radii {rings[0].size:.3f}..{rings[-1].size:.3f}",
                        fontsize=9)
axes.flat[10].axis("off")
axes.flat[11].axis("off")

fig.tight_layout()
fig.savefig(out_dir / "world_tour.png", dpi=110)
print(f"wrote {out_dir / 'world_tour.png'}")

# determinism: identical seeds, identical worlds
a = sim.reset("hanoi", seed=42)
b = sim.reset("hanoi", seed=42)
same = all(np.array_equal(x.position, y.position)
           for x, y in zip(a.objects, b.objects))
print(f"same seed twice gives identical layouts: {same}")
