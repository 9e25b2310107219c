"""Export the feedback-gain surface and region snapshots for one channel.

Writes three files into --out-dir:

    sweep_<tag>.csv      gains for every feedback pair up to saturation
    region_<tag>.json    region with the requested feedback levels
    metrics_<tag>.json   gains, thresholds, and the uselessness flag

where <tag> encodes the forward and cross exponents.
"""

import argparse
import json
import os

from ldic import (
    ChannelParams,
    capacity_region,
    compute_metrics,
    feedback_threshold,
    feedback_useless,
    sweep,
)
from ldic.output import metrics_document, region_document, sweep_csv


def nonneg(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n11", type=nonneg, required=True)
    ap.add_argument("--n22", type=nonneg, required=True)
    ap.add_argument("--n12", type=nonneg, required=True)
    ap.add_argument("--n21", type=nonneg, required=True)
    ap.add_argument("--fb11", type=nonneg, default=0)
    ap.add_argument("--fb22", type=nonneg, default=0)
    ap.add_argument("--out-dir", default="surfaces")
    args = ap.parse_args()

    params = ChannelParams(args.n11, args.n22, args.n12, args.n21, args.fb11, args.fb22)
    tag = f"{args.n11}_{args.n22}_{args.n12}_{args.n21}"
    os.makedirs(args.out_dir, exist_ok=True)

    written = []

    path = os.path.join(args.out_dir, f"sweep_{tag}.csv")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(sweep_csv(sweep(params)))
    written.append(path)

    path = os.path.join(args.out_dir, f"region_{tag}.json")
    doc = region_document(params, capacity_region(params))
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    written.append(path)

    path = os.path.join(args.out_dir, f"metrics_{tag}.json")
    doc = metrics_document(
        params,
        compute_metrics(params),
        [feedback_threshold(params, link) for link in (1, 2)],
        feedback_useless(params),
    )
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")
    written.append(path)

    for path in written:
        print(path)


if __name__ == "__main__":
    main()
