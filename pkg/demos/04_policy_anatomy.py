"""Anatomy of the mask-conditioned chunking policy: token layout, the CVAE
latent, rotation encoding, and temporal ensembling.

Run:  python3 demos/04_policy_anatomy.py
"""

import numpy as np

from vca import sim
from vca.policy import (PolicyConfig, TemporalEnsembler, VcaPolicy, encode_proprio,
                        kl_to_standard_normal, proprio_from_sim, rot_from_6d, rot_to_6d)

cfg = PolicyConfig()
net = VcaPolicy(cfg, seed=0)
base = VcaPolicy(PolicyConfig(variant="baseline"), seed=0)
n_params = sum(t.data.size for t in net.params.values())
print(f"policy: {n_params / 1e3:.0f}K parameters, d_model={cfg.d_model}, "
      f"chunk length {cfg.chunk_len}")
print(f"tokens: vca={net.token_count()} "
      f"(head {cfg.head_grid ** 2} + wrist {cfg.wrist_grid ** 2} + mask {cfg.head_grid ** 2}"
      f" + proprio 1 + latent 1), baseline={base.token_count()}")
print(f"mask tokens share the head positional storage: "
      f"{net.mask_pos_embedding is net.pos_head}\n")

# rotation 6d round trip
rz = np.array([[0, -1, 0], [1, 0, 0], [0, 0, 1]], dtype=float)
v = rot_to_6d(rz)
print(f"90deg-about-z as 6d: {v}")
print(f"reconstruction error: {np.abs(rot_from_6d(v) - rz).max():.2e}")

# proprioception: planar arm and the bimanual 29-dim encoding
state = sim.reset("block_sort", seed=0)
print(f"\nplanar proprio (10d): {proprio_from_sim(state)}")
two_arms = encode_proprio([((0.2, 0.3, 0.0), np.eye(3), 1.0),
                           ((0.5, 0.3, 0.1), rz, 0.0)])
print(f"bimanual proprio length: {len(two_arms)} (10 + 10 + 9 relative)")

# the KL regularizer in closed form
mu = np.array([1.0, 0.0])
logvar = np.array([0.0, 0.0])
print(f"\nKL(N([1,0],I) || N(0,I)) = {kl_to_standard_normal(mu, logvar).item():.3f} "
      f"(one half per unit mean shift)")

# a forward pass on a live observation; z is the prior mean at inference
frame = sim.render(state, "head")
wrist = sim.render(state, "wrist")
mask = sim.ground_truth_mask(state, "head", 2).astype(np.float32)
chunk = net.act(frame, wrist, mask, proprio_from_sim(state))
print(f"\none forward pass -> chunk of {chunk.shape[0]} future actions, "
      f"first: target=({chunk[0, 0]:.2f},{chunk[0, 1]:.2f}) grip={chunk[0, 2]:.2f}")

# temporal ensembling blends overlapping chunks, newest weighted highest
ens = TemporalEnsembler(decay=0.1)
ens.add(np.full((4, 3), 0.2), emitted_at=0)
ens.add(np.full((4, 3), 0.8), emitted_at=2)
for t in range(2, 5):
    print(f"tick {t}: blended action {ens.action_at(t)[0]:.3f} "
          f"(between 0.2 and 0.8, leaning to the newer chunk)")
