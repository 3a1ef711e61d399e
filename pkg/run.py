"""Run the poncelet-ratio command line from a source checkout."""

from __future__ import annotations

import sys
from pathlib import Path

# Add src directory to Python path
src_path = str(Path(__file__).parent / "src")
if src_path not in sys.path:
    sys.path.append(src_path)

from poncelet_ratio.commands.cli import main  # noqa: E402

if __name__ == "__main__":
    sys.exit(main())
