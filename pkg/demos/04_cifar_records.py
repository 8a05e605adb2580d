"""Reading CIFAR-10 binary batches, and what happens when one is damaged.

Writes a five-record batch in the 3073-byte format to a temporary
directory, loads it back, then truncates it.  Point ``EDGENAS_DATA`` at a
real ``cifar-10-batches-bin`` directory to load the actual dataset.

    python3 demos/04_cifar_records.py
"""
import os
import tempfile
from pathlib import Path

import numpy as np

from edgenas.data import DATA_ENV, load_cifar_binary, parse_cifar_records, write_cifar_binary
from edgenas.errors import FormatError

rng = np.random.default_rng(0)
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "data_batch_1.bin"
    write_cifar_binary(path, rng.integers(0, 256, (5, 3, 32, 32), dtype=np.uint8), [0, 3, 9, 1, 4])
    print(f"{path.name}: {path.stat().st_size} bytes = 5 x 3073")
    data = load_cifar_binary(path)
    print(f"labels {data.labels.tolist()}, per-channel mean {np.round(data.mean, 3).tolist()}")
    try:
        parse_cifar_records(path.read_bytes()[:-100])
    except FormatError as exc:
        print(f"truncated copy rejected: {exc}")

root = os.environ.get(DATA_ENV)
if root:
    train = load_cifar_binary(root, limit=10000)
    print(f"{DATA_ENV}: {len(train)} records, mean {np.round(train.mean, 4).tolist()}")
