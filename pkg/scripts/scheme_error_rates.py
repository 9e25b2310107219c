"""Run the bundled transmission schemes and report their empirical error rates.

Each scheme is run over several random messages per block length; the table
shows the attempted rates and the fraction of message bits each decoder got
wrong, averaged over trials.

The default channel has no cross links, so point-to-point decodes cleanly at
full rate. Add --n12/--n21 to watch interference corrupt the naive schemes.
"""

import argparse
from fractions import Fraction

from ldic import SCHEMES, ChannelParams, derive_config, draw_messages, run_scheme


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n11", type=int, default=4)
    ap.add_argument("--n22", type=int, default=3)
    ap.add_argument("--n12", type=int, default=0)
    ap.add_argument("--n21", type=int, default=0)
    ap.add_argument("--fb11", type=int, default=4)
    ap.add_argument("--fb22", type=int, default=3)
    ap.add_argument("--blocks", type=int, nargs="+", default=[1, 2, 4, 8])
    ap.add_argument("--trials", type=int, default=20)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    params = ChannelParams(args.n11, args.n22, args.n12, args.n21, args.fb11, args.fb22)
    print(f"channel: {params}")
    print(f"{'scheme':>16s} {'block':>5s} {'rate1':>6s} {'rate2':>6s} {'err1':>8s} {'err2':>8s}")

    for name in sorted(SCHEMES):
        scheme = SCHEMES[name]
        for block in args.blocks:
            cfg = derive_config(params, block_length=block)
            err1 = err2 = Fraction(0)
            lengths = scheme.message_lengths(cfg)
            for trial in range(args.trials):
                messages = draw_messages(lengths, seed=args.seed + trial)
                result = run_scheme(cfg, scheme, messages)
                err1 += result.p1
                err2 += result.p2
            rate1 = Fraction(lengths[0], block)
            rate2 = Fraction(lengths[1], block)
            print(
                f"{name:>16s} {block:5d} {str(rate1):>6s} {str(rate2):>6s}"
                f" {str(err1 / args.trials):>8s} {str(err2 / args.trials):>8s}"
            )


if __name__ == "__main__":
    main()
