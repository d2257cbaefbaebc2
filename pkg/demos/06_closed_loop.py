"""The full closed loop: click prompts steer a policy mid-episode.

Uses the trained checkpoint from the acceptance cache when present
(.cache/acceptance/vca.vcad, produced by running pytest), otherwise the
mini policy from demo 05, otherwise a fresh untrained network (wiring demo
only).

Run:  python3 demos/06_closed_loop.py
"""

from pathlib import Path

import numpy as np

from vca import sim
from vca.pipeline import save_checkpoint
from vca.policy import PolicyConfig, VcaPolicy
from vca.runtime import (ChunkingPolicy, ScriptedPrompts, format_report,
                         run_episode, run_eval)

root = Path(__file__).resolve().parent.parent
candidates = [root / ".cache" / "acceptance" / "vca.vcad",
              Path(__file__).parent / "out" / "mini_policy.vcad"]
ckpt = next((p for p in candidates if p.exists()), None)
if ckpt is None:
    print("no trained checkpoint found; using an untrained network\n")
    ckpt = Path(__file__).parent / "out" / "untrained.vcad"
    ckpt.parent.mkdir(exist_ok=True)
    save_checkpoint(ckpt, VcaPolicy(PolicyConfig(), seed=0))
else:
    print(f"using checkpoint {ckpt}\n")
policy = ChunkingPolicy.from_checkpoint(ckpt)

# one episode: idle wait, click at t=15, watch the loop execute
state = sim.reset("block_sort", seed=303)
target = next(o for o in state.objects if o.kind == "block")
print(f"clicking block {target.id} at ({target.position[0]:.2f},{target.position[1]:.2f}) "
      f"on tick 15")
schedule = ScriptedPrompts([{"t": 15, "op": "click", "class": 0,
                             "object_id": target.id}])
log = []


def on_frame(t, st, frame, masks, status, chunk_age):
    if t % 15 == 0:
        log.append(f"  t={t:3d} status={status:9s} gripper=({st.gripper.position[0]:.2f},"
                   f"{st.gripper.position[1]:.2f}) mask_px={int(masks[0].sum())}")


result, final = run_episode(policy, "block_sort", 303, prompt_source=schedule,
                            intended_object_id=target.id, on_frame=on_frame)
print("\n".join(log))
print(f"episode finished after {result.ticks} ticks: outcome={result.outcome}, "
      f"first grasp={result.grasped_object_id}\n")

# a small evaluation battery (the acceptance suite runs 100 trials)
report = run_eval(policy, "block_sort", trials=10, seed=99)
print(format_report(report))
print("\nfor the live browser console:  vca serve --ckpt", ckpt,
      "--ui-dir frontend/dist --port 8765")
