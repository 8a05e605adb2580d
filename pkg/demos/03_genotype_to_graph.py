"""Derive a cell from an α table and draw it.

A hand-made α table favours a few operations; derivation keeps the two
strongest incoming edges of every node.  The DOT text can be piped to
``dot -Tpng``.

    python3 demos/03_genotype_to_graph.py > cell.dot
"""
import sys

import numpy as np

from edgenas.cell import DEFAULT_TOPOLOGY as TOPO
from edgenas.derive import derive_genotype, build_eval_network, model_size_mb
from edgenas.ops import OP_NAMES, param_count

alpha = np.random.default_rng(3).normal(0, 0.1, (2, 14, 8))
favourites = {(0, 2): "sep_conv_3x3", (1, 2): "skip_connect", (2, 3): "dil_conv_5x5",
              (1, 4): "max_pool_3x3", (4, 5): "sep_conv_5x5"}
for (i, j), op in favourites.items():
    alpha[0, TOPO.edge_index(i, j), OP_NAMES.index(op)] += 2.0

genotype = derive_genotype(alpha)
net = build_eval_network(genotype, channels=16, n_cells=8)
print(f"# genotype {genotype.digest()}: {param_count(net)} parameters, "
      f"{model_size_mb(net)} MB at 16 channels x 8 cells", file=sys.stderr)
sys.stdout.write(genotype.to_dot("normal"))
