"""Tour a few interference channels and print what feedback buys in each.

Run from the repository root:

    python3 scripts/example_scenarios.py
"""

from ldic import (
    ChannelParams,
    build_bounds,
    capacity_region,
    compute_metrics,
    feedback_threshold,
    feedback_useless,
)
from ldic.output import format_rational

SCENARIOS = {
    "strong forward links": ChannelParams(20, 15, 12, 13, 15, 14),
    "mild cross links": ChannelParams(10, 10, 3, 8, 9, 4),
    "lopsided users": ChannelParams(10, 20, 6, 12, 10, 11),
    "cross dominant": ChannelParams(7, 8, 15, 13, 11, 9),
    "feedback useless": ChannelParams(10, 9, 2, 15, 10, 15),
}


def describe(name, params):
    print(f"== {name} ==")
    print(f"   {params}")

    bounds = build_bounds(params)
    for c in bounds.constraints:
        if c.r1_coeff < 0 or c.r2_coeff < 0:
            continue
        label = f"{c.r1_coeff}*R1 + {c.r2_coeff}*R2"
        source = c.source.value if c.source is not None else "tie"
        print(f"   {label:14s} <= {c.rhs:3d}   ({source})")

    region = capacity_region(params)
    corners = ", ".join(
        f"({format_rational(v.r1)}, {format_rational(v.r2)})" for v in region.vertices
    )
    print(f"   corners: {corners}")

    m = compute_metrics(params)
    print(
        f"   gains: delta1={format_rational(m.delta1)}"
        f" delta2={format_rational(m.delta2)} sigma={format_rational(m.sigma)}"
    )
    for link in (1, 2):
        report = feedback_threshold(params, link)
        if report.threshold is None:
            note = "no level helps"
        else:
            note = f"useful above {report.threshold}"
        print(f"   link {link}: saturates at {report.saturation}, {note}")
    if feedback_useless(params):
        print("   feedback cannot enlarge this region at any level")
    print()


def main():
    for name, params in SCENARIOS.items():
        describe(name, params)


if __name__ == "__main__":
    main()
