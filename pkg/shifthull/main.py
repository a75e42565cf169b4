"""
ShiftHull makes the combinatorial algebra of one-sided subshifts executable:
follower sets, inverse hulls, characters, covers and groupoid models.

Copyright (C) 2022-2025 Travis L. Seymour, PhD

This program is free software: you can redistribute it and/or modify
it under the terms of the GNU General Public License as published by
the Free Software Foundation, either version 3 of the License, or
(at your option) any later version.

This program is distributed in the hope that it will be useful,
but WITHOUT ANY WARRANTY; without even the implied warranty of
MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
GNU General Public License for more details.

You should have received a copy of the GNU General Public License
along with this program.  If not, see <http://www.gnu.org/licenses/>.
"""

import argparse
import logging
import sys
from typing import List, Optional

from shifthull.commands import COMMANDS, execute
from shifthull.errors import ShiftHullError
from shifthull.settings import load_settings
from shifthull.version import __version__

LOG_FORMAT = "%(asctime)s [%(levelname)s] %(name)s: %(message)s"


def common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--spec", help="bundled corpus name or path to a spec file")
    common.add_argument("--json", action="store_true", help="print the machine-readable report")
    common.add_argument("--config", help="settings file (default: $SHIFTHULL_CONFIG or ~/.config/shifthull/config.toml)")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for progress, -vv for debugging")

    overrides = common.add_argument_group("settings overrides")
    overrides.add_argument("--max-len", type=int)
    overrides.add_argument("--witness-bound", type=int)
    overrides.add_argument("--lattice-limit", type=int)
    overrides.add_argument("--state-limit", type=int)
    overrides.add_argument("--budget", type=int, dest="sample_budget")
    overrides.add_argument("--radius", type=int)
    overrides.add_argument("--germ-limit", type=int)
    overrides.add_argument("--cover-bound", type=int)
    overrides.add_argument("--seed", type=int, dest="random_seed")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="shifthull", description="Follower sets, inverse hulls, characters and covers of one-sided subshifts."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")
    common = common_options()

    def add(name: str, help_text: str) -> argparse.ArgumentParser:
        return sub.add_parser(name, parents=[common], help=help_text)

    p = add("lang", "count and list the words of the language")
    p.add_argument("--count", action="store_true", help="counts only, no word listing")
    p.add_argument("--member", help="word or eventually periodic point pre(period) to test")

    p = add("mul", "product in the semigroup S_X")
    p.add_argument("x")
    p.add_argument("y")

    p = add("follower", "follower set F_Λ or F_{Λ,Γ}")
    p.add_argument("--lambda", dest="lam", required=True, help="comma separated words")
    p.add_argument("--gamma", help="comma separated excluded words")
    p.add_argument("--against", help="set expression to compare with")
    p.add_argument("--boundary", action="store_true", help="also report interior and boundary")

    for name, help_text in (("hull-mul", "product of two inverse hull elements"), ("hull-eq", "equality and order")):
        p = add(name, help_text)
        p.add_argument("a", help="I, T:μ, H:u|t1,t2|v or ∅; ~ inverts")
        p.add_argument("b")

    p = add("char-eval", "evaluate a character on a constructible set")
    p.add_argument("--char", required=True, help="S:word, S:pre(period) or Y:<set>")
    p.add_argument("--set", required=True)
    p.add_argument("--family", help="';' separated sets for the essential check")

    p = add("cover", "decide whether sets cover X")
    p.add_argument("--set", required=True)
    p.add_argument("--with", dest="with_", required=True, help="';' separated candidate sets")

    p = add("defect", "defect set of a cover, on a shift or on a finite universe")
    p.add_argument("--universe", help="bundled universe name or path")
    p.add_argument("--set", help="set expression, or ',' separated names with --universe")
    p.add_argument("--with", dest="with_", help="cover members")
    p.add_argument("--exclude", help="',' separated names Y of the region E^(X,Y)")

    add("hyp", "sufficient conditions for essential tightness")

    p = add("star", "condition (*) on all follower classes or one pair")
    p.add_argument("--lambda", dest="lam")
    p.add_argument("--gamma")

    add("ground", "is every F_Λ empty or infinite")
    add("groupoid-check", "partial action and Deaconu-Renault checks on a point sample")

    p = add("matrix-verify", "operator identities on truncated bases")
    p.add_argument("--size", type=int, help="single truncation size instead of the configured ones")
    p.add_argument("--tensor-radius", type=int, default=1)
    p.add_argument("--export", metavar="MU", help="also print T_μ as coordinate triplets")

    add("canon", "canonical serialization of a spec file")
    add("corpus", "list the bundled spec files")
    assert set(sub.choices) == set(COMMANDS)
    return parser


OVERRIDES = (
    "max_len",
    "witness_bound",
    "lattice_limit",
    "state_limit",
    "sample_budget",
    "radius",
    "germ_limit",
    "cover_bound",
    "random_seed",
)


def main(argv: Optional[List[str]] = None):
    parser = build_parser()
    args = parser.parse_args(argv)
    for key in OVERRIDES:
        value = getattr(args, key)
        if value is not None and value < (0 if key == "random_seed" else 1):
            parser.error(f"setting {key} out of range: {value}")

    level = {0: logging.WARNING, 1: logging.INFO}.get(args.verbose, logging.DEBUG)
    logging.basicConfig(level=level, format=LOG_FORMAT, stream=sys.stderr)

    try:
        settings = load_settings(args.config).replace(**{key: getattr(args, key) for key in OVERRIDES})
        report = execute(args, settings)
    except ShiftHullError as e:
        print(f"shifthull {args.command}: {e}", file=sys.stderr)
        sys.exit(2)

    sys.stdout.write(report.to_json() if args.json else report.render())
    exit_code = report.exit_status

    sys.exit(exit_code)


if __name__ == "__main__":
    main()
