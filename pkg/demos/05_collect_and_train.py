"""Record a small demonstration set and behavior-clone a policy on it.

Desk-scale version of the full pipeline (the acceptance suite runs the real
one: 200 episodes, 5000 steps). Writes demos/out/loss_curve.png.

Run:  python3 demos/05_collect_and_train.py
"""

import json
from pathlib import Path

import matplotlib
matplotlib.use("Agg")
import matplotlib.pyplot as plt

from vca.pipeline import DemoDataset, TrainConfig, collect, train

out_dir = Path(__file__).parent / "out"
out_dir.mkdir(exist_ok=True)
data_dir = out_dir / "mini_demos"

if not (data_dir / "episode_00019").exists():
    print("collecting 20 block-sort episodes (tracker masks, idle prefixes, "
          "15% reset injections)...")
    collect("block_sort", n_episodes=20, seed=1, out_dir=data_dir, log=print)

dataset = DemoDataset(data_dir)
ticks = [ep["idle"].shape[0] for ep in dataset.episodes]
idle = sum(int(ep["idle"].sum()) for ep in dataset.episodes) / sum(ticks)
print(f"{len(dataset)} episodes, {sum(ticks)} ticks, {idle:.0%} idle")
resets = sum(1 for m in dataset.metas
             if any(e["op"] == "reset" for e in m["prompt_log"]))
print(f"{resets} episodes contain a mid-episode reset + re-click\n")

config = TrainConfig(steps=300, batch_size=16, log_every=50)
print(f"training variant={config.variant} for {config.steps} steps "
      f"(lr {config.lr:g}, batch {config.batch_size})")
net, metrics = train(config, data_dir, out_dir / "mini_policy.vcad", log=print)

steps = [m["step"] for m in metrics]
fig, ax = plt.subplots(figsize=(6, 3.5))
ax.plot(steps, [m["train_l1"] for m in metrics], label="train L1")
ax.plot(steps, [m["val_l1"] for m in metrics], label="val L1")
ax.set_xlabel("step")
ax.set_ylabel("mean |pred - target|")
ax.legend()
fig.tight_layout()
fig.savefig(out_dir / "loss_curve.png", dpi=110)
print(f"\nwrote {out_dir / 'loss_curve.png'} and mini_policy.vcad")
print(json.dumps(metrics[-1]))
