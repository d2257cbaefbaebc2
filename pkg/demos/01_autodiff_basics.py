"""Tensors, reverse-mode gradients, and the AdamW optimizer.

Run:  python3 demos/01_autodiff_basics.py
"""

import numpy as np

from vca import autodiff as ad

# scalar chain rule
x = ad.tensor(3.0, requires_grad=True)
y = x * x
y.backward()
print(f"d(x^2)/dx at x=3: {x.grad}")

# a small matmul graph, checked against central differences by hand
rng = np.random.default_rng(0)
a = ad.tensor(rng.standard_normal((4, 3)), requires_grad=True)
b = ad.tensor(rng.standard_normal((3, 2)), requires_grad=True)
loss = (a @ b).abs().mean()
loss.backward()
print(f"loss = {loss.item():.4f}, grad norms: a {np.linalg.norm(a.grad):.4f}, "
      f"b {np.linalg.norm(b.grad):.4f}")

h = 1e-3
a64 = a.data.astype(np.float64)
a64[0, 0] += h
hi = (ad.Tensor(a64) @ ad.Tensor(b.data.astype(np.float64))).abs().mean().item()
a64[0, 0] -= 2 * h
lo = (ad.Tensor(a64) @ ad.Tensor(b.data.astype(np.float64))).abs().mean().item()
print(f"a[0,0]: analytic {a.grad[0, 0]:+.6f}  finite-diff {(hi - lo) / (2 * h):+.6f}")

# fit a line with AdamW: y = 2x - 1 plus noise
xs = rng.uniform(-1, 1, (256, 1)).astype(np.float32)
ys = 2 * xs - 1 + rng.normal(0, 0.05, xs.shape).astype(np.float32)
w = ad.tensor([[0.0]], requires_grad=True)
c = ad.tensor([0.0], requires_grad=True)
opt = ad.AdamW({"w": w, "b": c}, lr=3e-2)
for step in range(400):
    pred = ad.Tensor(xs) @ w + c
    loss = (pred - ad.Tensor(ys)).abs().mean()
    opt.zero_grad()
    loss.backward()
    opt.step()
print(f"fitted slope {w.item():+.3f} (true +2), intercept {c.item():+.3f} (true -1)")
