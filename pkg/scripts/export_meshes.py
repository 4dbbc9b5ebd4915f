#!/usr/bin/env python3
"""Export the three catalog helicoids as OBJ meshes for plotting."""

import argparse
import os

from lruled.catalog import catalog_names
from lruled.cli import main as cli_main


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("outdir", nargs="?", default="meshes")
    parser.add_argument("--u-samples", type=int, default=61)
    parser.add_argument("--v-samples", type=int, default=33)
    args = parser.parse_args()

    os.makedirs(args.outdir, exist_ok=True)
    for name in catalog_names():
        path = os.path.join(args.outdir, f"{name}.obj")
        status = cli_main(
            [
                "mesh",
                "--surface", name,
                "--u-samples", str(args.u_samples),
                "--v-samples", str(args.v_samples),
                "--output", path,
            ]
        )
        print(f"{path}: {'ok' if status == 0 else f'failed ({status})'}")


if __name__ == "__main__":
    main()
