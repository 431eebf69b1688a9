"""Export coordinate-line tables of the constant-curvature planes.

Writes one CSV per requested geometry with the chart's coordinate lines
sampled in Beltrami coordinates, ready for plotting.  Rows that leave
the chart's domain are kept as flagged truncation points so line breaks
land in the right place.

  python3 scripts/export_geodesic_charts.py --out-dir /tmp/geodesics
  python3 scripts/export_geodesic_charts.py --chart polar --span 0.8
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from pathlib import Path

from ckgeom import NORMALIZED_PAIRS, KappaPair
from ckgeom.cli import ReportRequest, Report, _cmd_export_geodesics, render_csv
from ckgeom.checks import SweepConfig


@dataclass
class ExportConfig:
    chart: str = "parallel1"
    points: int = 64
    lines: int = 5
    span: float = 0.45
    out_dir: Path = Path("geodesic_tables")
    pairs: tuple[KappaPair, ...] = field(default_factory=lambda: NORMALIZED_PAIRS)


def export_one(cfg: ExportConfig, kp: KappaPair) -> Path:
    req = ReportRequest(
        command="export-geodesics",
        sweep=SweepConfig(kappa_grid=(kp,)).validated(),
        output_format="csv",
        options={
            "chart": cfg.chart,
            "points": cfg.points,
            "lines": cfg.lines,
            "span": cfg.span,
        },
    )
    report: Report = _cmd_export_geodesics(req)
    name = f"{cfg.chart}_k1_{kp.k1:+g}_k2_{kp.k2:+g}.csv".replace("+", "p").replace("-", "m")
    path = cfg.out_dir / name
    path.write_text(render_csv(report), newline="")
    return path


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--chart", choices=["parallel1", "parallel2", "polar"], default="parallel1")
    parser.add_argument("--points", type=int, default=64)
    parser.add_argument("--lines", type=int, default=5)
    parser.add_argument("--span", type=float, default=0.45)
    parser.add_argument("--out-dir", type=Path, default=Path("geodesic_tables"))
    args = parser.parse_args(argv)

    cfg = ExportConfig(
        chart=args.chart,
        points=args.points,
        lines=args.lines,
        span=args.span,
        out_dir=args.out_dir,
    )
    cfg.out_dir.mkdir(parents=True, exist_ok=True)
    for kp in cfg.pairs:
        path = export_one(cfg, kp)
        print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
