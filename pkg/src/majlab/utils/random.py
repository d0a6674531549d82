import os
import random

import numpy as np
import torch


def seed_rng(seed: int) -> None:
  """Seed all random number generators for reproducibility.

  Library code never draws from the global generators; it takes explicit
  generators from `make_rng`. Seeding the globals keeps ad-hoc experiments
  reproducible too.
  """
  os.environ["PYTHONHASHSEED"] = str(seed)

  random.seed(seed)
  np.random.seed(seed)

  # Ref: https://docs.pytorch.org/docs/stable/notes/randomness.html
  torch.manual_seed(seed)


def make_rng(seed: int, *keys: int) -> np.random.Generator:
  """Generator keyed by `(seed, *keys)`.

  Keying by vertex, edge or trial index makes generated objects independent of
  evaluation order, so prefixes of a countable construction stay consistent.
  """
  return np.random.default_rng([seed, *keys])
