"""Click-to-track: select one of several identical blocks, follow it while
the gripper carries it around, reset the selection, select another.

Run:  python3 demos/03_click_tracking.py
"""

import numpy as np

from vca import sim
from vca.tracker import StreamTracker


def iou(a, b):
    union = np.logical_or(a, b).sum()
    return 1.0 if union == 0 else np.logical_and(a, b).sum() / union


state = sim.reset("block_sort", seed=11)
orange = [o for o in state.objects if o.kind == "block" and o.goal_color == "orange"]
left = min(orange, key=lambda o: o.position[0])
right = max(orange, key=lambda o: o.position[0])
print(f"{len(orange)} identical orange blocks; clicking the leftmost one\n")

tracker = StreamTracker(num_classes=4)
frame = sim.render(state, "head")
masks = tracker.add_prompt(0, sim.click_point(state, left.id), frame, 0)
print(f"t=0 click  IoU(left)={iou(masks[0], sim.ground_truth_mask(state, 'head', left.id)):.3f}  "
      f"overlap(right)={np.logical_and(masks[0], sim.ground_truth_mask(state, 'head', right.id)).sum()}")

# carry the selected block toward the bin; the memory bank follows it
for t in range(1, 40):
    held = state.gripper.held_object is not None
    near = np.linalg.norm(state.gripper.position - left.position) < 0.012
    action = sim.SimAction(np.array([0.22, 0.13]) if held else left.position,
                           0.0 if (held or near) else 1.0)
    sim.step(state, action)
    masks = tracker.process_frame(sim.render(state, "head"), t)
    if t % 8 == 0:
        gt = sim.ground_truth_mask(state, "head", left.id)
        print(f"t={t:2d} track  IoU={iou(masks[0], gt):.3f}  "
              f"block at ({left.position[0]:.2f},{left.position[1]:.2f})  held={held}")

# reset: the class goes empty and stays empty
masks = tracker.reset_class(0, sim.render(state, "head"), 40)
print(f"\nt=40 reset  mask pixels={masks[0].sum()}  "
      f"bank epoch restarted at frame {tracker.epoch_start}")
masks = tracker.process_frame(sim.render(state, "head"), 41)
print(f"t=41 track  mask pixels={masks[0].sum()} (stays empty until re-prompted)")

# select the other identical instance
masks = tracker.add_prompt(0, sim.click_point(state, right.id), sim.render(state, "head"), 42)
gt = sim.ground_truth_mask(state, "head", right.id)
print(f"t=42 click  IoU(right)={iou(masks[0], gt):.3f}  "
      f"slots hold {tracker.slot_sizes()} entries (one conditioned anchor each)")
