#!/usr/bin/env python3
"""Download the US Airports 1997 network into data/USAir97.net.

The dataset is third-party, so it is fetched on demand rather than
committed to the repository. After download the file is structurally
validated (332 nodes, 2126 edges once normalized) and its SHA-256 is
pinned in data/USAir97.net.sha256; later runs verify against that pin.

Usage: python scripts/fetch_usair97.py [destination-dir]
"""

from __future__ import annotations

import hashlib
import sys
import urllib.error
import urllib.request
from pathlib import Path

REPO_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(REPO_ROOT / "src"))

from netdensity import pajek  # noqa: E402

URLS = (
    "http://vlado.fmf.uni-lj.si/pub/networks/data/mix/USAir97.net",
    "http://vlado.fmf.uni-lj.si/pub/networks/data/map/USAir97.net",
    "http://vlado.fmf.uni-lj.si/pub/networks/pajek/data/USAir97.net",
)
EXPECTED_NODES = 332
EXPECTED_EDGES = 2126


def validate(raw: bytes) -> None:
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError:
        text = raw.decode("latin-1")
    net, diag = pajek.parse_net(text)
    if net.n != EXPECTED_NODES or len(net.edges) != EXPECTED_EDGES:
        raise SystemExit(
            f"downloaded file has {net.n} nodes / {len(net.edges)} edges, "
            f"expected {EXPECTED_NODES} / {EXPECTED_EDGES}; refusing to install it"
        )
    print(
        f"validated: {net.n} nodes, {len(net.edges)} edges "
        f"({diag.weights_discarded} weights ignored, {diag.loops_dropped} loops, "
        f"{diag.duplicates_dropped} duplicates dropped)"
    )


def main() -> int:
    dest_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else REPO_ROOT / "data"
    dest_dir.mkdir(parents=True, exist_ok=True)
    dest = dest_dir / "USAir97.net"
    pin = dest_dir / "USAir97.net.sha256"

    raw = None
    for url in URLS:
        try:
            print(f"fetching {url} ...")
            with urllib.request.urlopen(url, timeout=30) as resp:
                raw = resp.read()
            break
        except (urllib.error.URLError, OSError) as exc:
            print(f"  failed: {exc}")
    if raw is None:
        print("could not download USAir97.net from any mirror", file=sys.stderr)
        return 1

    validate(raw)
    digest = hashlib.sha256(raw).hexdigest()
    if pin.is_file():
        pinned = pin.read_text().split()[0]
        if pinned != digest:
            print(
                f"sha256 mismatch: pinned {pinned}, downloaded {digest}; "
                "delete the pin file if the upstream dataset legitimately changed",
                file=sys.stderr,
            )
            return 1
    else:
        pin.write_text(digest + "\n")
        print(f"pinned sha256 {digest}")
    dest.write_bytes(raw)
    print(f"wrote {dest}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
