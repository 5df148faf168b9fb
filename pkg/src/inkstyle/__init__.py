"""inkstyle: unpaired ink-style transfer workbench.

Builds seeded procedural datasets of decorative motif compositions, normalizes
silhouette corpora, and trains a from-scratch CycleGAN (U-Net generators,
patch discriminators) to carry the motif style onto silhouettes, including a
loss-weight sweep harness and comparison grids.
"""

__version__ = "0.1.0"
