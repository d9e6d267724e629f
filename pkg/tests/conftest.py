from __future__ import annotations

import sys
from pathlib import Path

from hypothesis import settings

sys.path.insert(0, str(Path(__file__).parent))

settings.register_profile("workbench", derandomize=True, max_examples=60, deadline=None)
settings.load_profile("workbench")
