#!/usr/bin/env python3
"""
Run the Mahlersol HTTP service.

Usage:
  python run_server.py

Then POST operators to http://localhost:8000/solve, e.g.
  {"ell": 2, "expression": "z*M^2 + (z-1)*M - 2", "height": 8}
Settings overrides (MAHLERSOL_MEMORY_BUDGET, ...) may be placed in .env.
"""
import uvicorn
from pathlib import Path
import sys

from dotenv import load_dotenv

sys.path.insert(0, str(Path(__file__).parent))

if __name__ == "__main__":
    load_dotenv()
    uvicorn.run(
        "src.server.server:app",
        host="0.0.0.0",
        port=8000,
        reload=True,
    )
