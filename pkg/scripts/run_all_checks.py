"""Run every registered identity check and print a timing table.

    python scripts/run_all_checks.py [--jobs 4] [--json out.json]
"""

import argparse
import json
from dataclasses import asdict, dataclass

from permcheb.verify.checks import CHECKS, CheckConfig, run_checks


@dataclass
class Config:
    jobs: int = 1
    json_path: str | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--jobs", type=int, default=1, help="checks run concurrently")
    ap.add_argument("--json", dest="json_path")
    cfg = Config(**vars(ap.parse_args()))

    reports = run_checks(list(CHECKS), CheckConfig(), workers=cfg.jobs)
    for r in reports:
        print(r.to_text(timing=True))
    failed = [r.id for r in reports if not r.passed]
    print(f"\n{len(reports) - len(failed)}/{len(reports)} checks passed")
    if cfg.json_path:
        with open(cfg.json_path, "w") as fh:
            json.dump({"config": asdict(cfg), "reports": [json.loads(r.to_json()) for r in reports]}, fh, indent=2)
    return 1 if failed else 0


if __name__ == "__main__":
    raise SystemExit(main())
