"""Download OEIS b-files into a directory for use with `polyreps crosscheck`.

The bundled fixtures under src/polyreps/fixtures/ are used by the test
suite; this helper is only for refreshing or extending them by hand.

    python scripts/fetch_bfiles.py A001318 A004018 --out /tmp/bfiles
"""

import argparse
import pathlib
import urllib.request


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("ids", nargs="+")
    parser.add_argument("--out", default=".")
    args = parser.parse_args()
    out = pathlib.Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for aid in args.ids:
        digits = aid.lstrip("Aa").zfill(6)
        url = f"https://oeis.org/A{digits}/b{digits}.txt"
        with urllib.request.urlopen(url, timeout=30) as resp:
            (out / f"b{digits}.txt").write_bytes(resp.read())
        print(f"wrote {out / f'b{digits}.txt'}")


if __name__ == "__main__":
    main()
