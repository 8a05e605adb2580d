"""Tape-based autodiff, checked against finite differences.

A separable convolution block (ReLU, depthwise 3x3, pointwise 1x1, batch
norm) is run on a random batch; the gradient the tape returns for the
depthwise filter is compared with central differences.

    python3 demos/01_gradients_by_hand.py
"""
import numpy as np

from edgenas.autograd import Tape, Tensor
from edgenas.autograd import functional as F

rng = np.random.default_rng(0)
x = Tensor(rng.standard_normal((4, 6, 10, 10)))
dw = Tensor(rng.standard_normal((6, 1, 3, 3)) * 0.3, requires_grad=True)
pw = Tensor(rng.standard_normal((6, 6, 1, 1)) * 0.3, requires_grad=True)
target = rng.standard_normal((4, 6, 10, 10))


def loss_value():
    y = F.conv2d(x, dw, padding=1, groups=6, relu_input=True)
    y = F.batchnorm2d(F.conv2d(y, pw), None, None, None, None, training=True)
    return F.sum_all(F.mul(y, Tensor(target)))


with Tape() as tape:
    loss = loss_value()
    recorded = len(tape)
    tape.backward(loss)
print(f"loss {loss.item():.6f}, tape recorded {recorded} nodes")

h = 1e-6
numeric = np.zeros_like(dw.data)
for idx in np.ndindex(dw.shape):
    keep = dw.data[idx]
    dw.data[idx] = keep + h
    up = loss_value().item()
    dw.data[idx] = keep - h
    down = loss_value().item()
    dw.data[idx] = keep
    numeric[idx] = (up - down) / (2 * h)

err = np.linalg.norm(numeric - dw.grad) / np.linalg.norm(numeric)
print(f"depthwise filter: {dw.size} entries, relative error {err:.2e}")
