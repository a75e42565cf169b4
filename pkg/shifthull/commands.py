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

from __future__ import annotations

import itertools
import logging
from argparse import Namespace
from typing import Any, Callable, Dict, List

from shifthull.automaton import ShiftAutomaton, compile_spec, enumerate_language, language_counts, membership, sx_mul
from shifthull.characters import (
    InfiniteString,
    PrincipalUltra,
    StringChar,
    char_eval,
    classify_string,
    criteria,
    ess_membership_witness,
    ground_report,
    principal_ultra,
)
from shifthull.constructible import analyze, as_regular, follower_lattice, interior_boundary
from shifthull.errors import UsageError
from shifthull.expressions import (
    parse_character,
    parse_constructible,
    parse_hull,
    parse_set,
    parse_sets,
    parse_word,
    parse_words,
)
from shifthull.groupoid import action_report, build_sample, groupoid_report
from shifthull.hull import HullZero, d_map, equals, identity, invert, is_idempotent, leq, mul, theta
from shifthull.matrices import (
    compact_difference_columns,
    diag_expectation,
    export_coordinates,
    is_partial_isometry,
    matrix_unit,
    pi_matrix,
    product_check,
    t_matrix,
    tensor_rep,
    vacuum_projection,
)
from shifthull.report import Report, describe_cardinality, describe_set, word_list
from shifthull.settings import Settings
from shifthull.specfile import corpus_names, load_spec, serialize_spec
from shifthull.tightness import (
    Covered,
    NotCovered,
    StarStatus,
    condition_star,
    condition_star_pair,
    cover_verdict,
    defect_set,
    hypotheses_check,
    star_separation,
)
from shifthull.universe import family_report, load_universe
from shifthull.words import ZERO, parse_point, show

logger = logging.getLogger(__name__)

# longest words whose matrix units matrix-verify checks
_UNIT_WORD_LEN = 2

Command = Callable[[Namespace, Settings], Report]
COMMANDS: Dict[str, Command] = {}


def command(name: str):
    def register(func: Command) -> Command:
        COMMANDS[name] = func
        return func

    return register


def shift_for(args: Namespace, settings: Settings) -> ShiftAutomaton:
    if not getattr(args, "spec", None):
        raise UsageError(f"{args.command} needs --spec NAME|PATH")
    return compile_spec(load_spec(args.spec), settings.state_limit)


def _base(args: Namespace, aut: ShiftAutomaton, **inputs) -> Report:
    return Report(args.command, {"spec": aut.name, **{k: v for k, v in inputs.items() if v is not None}})


@command("lang")
def cmd_lang(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    report = _base(args, aut, max_len=settings.max_len, member=args.member)
    report.verdicts["counts"] = language_counts(aut, settings.max_len)
    if args.member:
        point = "(" in args.member
        w = parse_point(args.member, aut.alphabet) if point else aut.alphabet.check(args.member)
        report.verdicts["member"] = membership(aut, w)
    if not args.count:
        report.witnesses["language"] = word_list(enumerate_language(aut, settings.max_len), 200)
    return report


@command("mul")
def cmd_mul(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    x, y = parse_word(args.x, aut.alphabet), parse_word(args.y, aut.alphabet)
    report = _base(args, aut, x=show(x), y=show(y))
    report.verdicts["product"] = show(sx_mul(aut, x, y))
    return report


@command("follower")
def cmd_follower(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    text = f"F:{args.lam}" + (f"/{args.gamma}" if args.gamma else "")
    s = parse_set(aut, text)
    report = _base(args, aut, set=text, against=args.against)
    region = as_regular(s)
    report.verdicts["set"] = describe_set(region, settings.witness_bound)
    if args.boundary:
        interior, boundary = interior_boundary(s)
        report.verdicts["interior"] = describe_set(interior, settings.witness_bound)
        report.verdicts["boundary"] = describe_set(boundary, settings.witness_bound)
    if args.against:
        analysis = analyze(s, parse_set(aut, args.against))
        report.verdicts["comparison"] = {
            "equal": analysis.equal,
            "subset": analysis.subset,
            "superset": analysis.superset,
            "intersection": describe_cardinality(analysis.intersection),
        }
    report.scope["listing"] = f"members up to length {settings.witness_bound}"
    return report


def _hull_summary(e) -> Dict[str, Any]:
    if isinstance(e, HullZero):
        return {"element": "0", "d": show(ZERO)}
    return {"element": str(e), "d": str(d_map(e)), "idempotent": is_idempotent(e)}


@command("hull-mul")
def cmd_hull_mul(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    a, b = parse_hull(aut, args.a), parse_hull(aut, args.b)
    report = _base(args, aut, a=str(a), b=str(b))
    report.verdicts["product"] = _hull_summary(mul(a, b))
    report.verdicts["inverse_of_product"] = _hull_summary(invert(mul(a, b)))
    return report


@command("hull-eq")
def cmd_hull_eq(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    a, b = parse_hull(aut, args.a), parse_hull(aut, args.b)
    report = _base(args, aut, a=str(a), b=str(b))
    report.verdicts.update({"equal": equals(a, b), "a_leq_b": leq(a, b), "b_leq_a": leq(b, a)})
    return report


@command("char-eval")
def cmd_char_eval(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    c = parse_character(aut, args.char)
    x = parse_constructible(aut, args.set)
    report = _base(args, aut, character=str(c), set=str(x), family=args.family)
    report.verdicts["value"] = int(char_eval(c, x))
    if isinstance(c, StringChar):
        kind = classify_string(c.string)
        report.verdicts["string"] = {"open": kind.open, "maximal": kind.maximal, "bounded": kind.bounded}
        if isinstance(c.string, InfiniteString):
            bits = criteria(c, x)
            report.verdicts["criteria"] = {
                "prefix": int(bits.prefix),
                "epsilon": int(bits.epsilon),
                "finiteness": int(bits.finiteness),
                "agree": bits.agree,
            }
    if args.family is not None:
        family = [parse_constructible(aut, part) for part in args.family.split(";") if part.strip()]
        ess = ess_membership_witness(c, x, family)
        report.verdicts["essential"] = {
            "value": int(ess.value),
            "join": int(ess.joined),
            "finiteness": None if ess.finiteness is None else int(ess.finiteness),
            "agree": ess.agree,
        }
    return report


@command("cover")
def cmd_cover(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    x = parse_set(aut, args.set)
    candidates = parse_sets(aut, args.with_)
    report = _base(args, aut, set=args.set, candidates=args.with_)
    verdict = cover_verdict(aut, x, candidates, settings.cover_bound, settings.lattice_limit)
    report.verdicts["verdict"] = type(verdict).__name__
    if isinstance(verdict, Covered):
        report.verdicts["n0"] = verdict.n0
        report.scope["search"] = f"exhaustive: {verdict.pairs} state pairs, {verdict.checks} inclusion checks"
    elif isinstance(verdict, NotCovered):
        report.witnesses["uncovered"] = {"set": str(verdict.witness), "sample": verdict.sample}
    else:
        report.scope["search"] = f"bounded: words up to length {verdict.bound}"
    report.verdicts["defect"] = describe_set(defect_set(x, candidates), settings.witness_bound)
    return report


@command("defect")
def cmd_defect(args: Namespace, settings: Settings) -> Report:
    if args.universe:
        family = load_universe(args.universe)
        report = Report(args.command, {"universe": family.name})
        if args.set:
            x = [part for part in args.set.split(",") if part]
            cover = [part for part in (args.with_ or "").split(",") if part]
            exclude = [part for part in (args.exclude or "").split(",") if part]
            report.inputs.update({"set": x, "cover": cover, "exclude": exclude})
            defect = family.defect(x, cover, exclude)
            report.verdicts.update(
                {
                    "is_cover": family.is_cover(x, cover, exclude),
                    "defect": family.show(defect),
                    "cardinality": "Infinite" if defect.infinite else ("Empty" if defect.is_empty else "Finite"),
                }
            )
        summary = family_report(family)
        report.verdicts.update({"tight": summary.tight, "essentially_tight": summary.essentially_tight})
        report.witnesses["nonempty_defects"] = [
            {"x": list(d.x), "y": list(d.y), "cover": list(d.cover), "defect": family.show(d.defect)}
            for d in summary.defects[:10]
        ]
        report.scope["covers"] = f"{summary.covers} covers of every region E^(X,Y)"
        return report
    aut = shift_for(args, settings)
    x = parse_set(aut, args.set)
    report = _base(args, aut, set=args.set, candidates=args.with_)
    report.verdicts["defect"] = describe_set(defect_set(x, parse_sets(aut, args.with_ or "")), settings.witness_bound)
    return report


@command("hyp")
def cmd_hyp(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    result = hypotheses_check(aut, settings.max_len, follower_lattice(aut, settings.lattice_limit))
    report = _base(args, aut)
    report.verdicts.update(
        {
            "length_function": result.length_function,
            "leftover_finite": result.leftover.is_finite,
            "boundaries_finite": not result.failures,
            "holds": result.holds,
        }
    )
    report.witnesses["leftover"] = describe_cardinality(result.leftover)
    report.witnesses["infinite_boundaries"] = [
        {"set": str(f.witness), "sample": list(f.sample)} for f in result.failures
    ]
    report.scope["classes"] = result.classes
    return report


def _star_entry(v) -> Dict[str, Any]:
    return {
        "lambda": [show(t) for t in v.lam],
        "gamma": [show(r) for r in v.gamma],
        "status": v.status.value,
        "premise": v.cardinality.kind.value,
        "witness": None if v.witness is None else str(v.witness),
    }


@command("star")
def cmd_star(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    report = _base(args, aut, lam=args.lam, gamma=args.gamma)
    if args.lam:
        verdict = condition_star_pair(aut, parse_words(args.lam, aut.alphabet), parse_words(args.gamma or "", aut.alphabet))
        report.verdicts["pair"] = _star_entry(verdict)
        refuted = [verdict] if verdict.status is StarStatus.REFUTED else []
    else:
        result = condition_star(aut, follower_lattice(aut, settings.lattice_limit))
        report.verdicts["holds"] = result.holds
        report.verdicts["classes"] = [_star_entry(v) for v in result.verdicts]
        report.scope["pairs"] = f"{result.examined} examined, {result.pruned} pruned as finite"
        refuted = result.refuted
    if refuted:
        sample = build_sample(aut, settings.sample_budget, settings.seed_count, settings.seed_period)
        separation = star_separation(aut, refuted[0], sample)
        report.witnesses["separation"] = {
            "set": separation.x.label,
            "family": [y.label for y in separation.family],
            "defect": separation.defect.kind.value,
            "points": separation.points,
            "disagreements": [str(p) for p in separation.disagreements],
            "separates": separation.separates,
        }
        report.scope["separation"] = f"{separation.points} sampled points, budget {settings.sample_budget}"
    return report


@command("ground")
def cmd_ground(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    lattice = follower_lattice(aut, settings.lattice_limit)
    result = ground_report(aut, lattice)
    report = _base(args, aut)
    report.verdicts["holds"] = result.holds
    if result.witness is not None:
        report.witnesses["finite_class"] = {"set": str(result.witness), "members": list(result.cardinality.words)}
        psi = principal_ultra(result.witness, lattice)
        ess = ess_membership_witness(psi, result.witness, [])
        report.witnesses["principal_character"] = {
            "character": str(psi),
            "value": int(ess.value),
            "join": int(ess.joined),
            "matches_join": ess.agree,
        }
    report.scope["classes"] = result.classes
    return report


def _check_entry(check) -> Dict[str, Any]:
    return {
        "passed": check.passed,
        "checked": check.checked,
        "exhaustive": check.exhaustive,
        "failures": list(check.failures),
    }


@command("groupoid-check")
def cmd_groupoid_check(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    sample = build_sample(aut, settings.sample_budget, settings.seed_count, settings.seed_period)
    report = _base(args, aut, radius=settings.radius, budget=settings.sample_budget)
    action = action_report(sample, settings.radius)
    groupoid = groupoid_report(sample, settings.radius, settings.germ_limit, settings.random_seed)
    report.verdicts["action"] = {c.name: _check_entry(c) for c in action.checks}
    report.verdicts["groupoid"] = {c.name: _check_entry(c) for c in groupoid.checks}
    report.verdicts["passed"] = action.passed and groupoid.passed
    report.scope.update(
        {
            "points": len(sample),
            "germs": groupoid.germs,
            "pairs": groupoid.pairs,
            "sampled": not groupoid.exhaustive,
        }
    )
    return report


def hull_sample(aut: ShiftAutomaton) -> List:
    """The identity, θ_a for each letter, their inverses and pairwise products, without repeats."""
    base = [identity(aut)] + [theta(aut, a) for a in enumerate_language(aut, 1)]
    elements = base + [invert(e) for e in base]
    elements += [mul(a, b) for a, b in itertools.product(elements, repeat=2)]
    unique = []
    for e in elements:
        if not isinstance(e, HullZero) and not any(equals(e, f) for f in unique):
            unique.append(e)
    return unique


@command("matrix-verify")
def cmd_matrix_verify(args: Namespace, settings: Settings) -> Report:
    aut = shift_for(args, settings)
    sizes = [args.size] if args.size is not None else list(settings.matrix_sizes)
    if min(sizes) < 1:
        raise UsageError(f"truncation sizes must be positive, got {min(sizes)}")
    radius = args.tensor_radius
    report = _base(args, aut, sizes=sizes, tensor_radius=radius)
    elements = hull_sample(aut)
    words = enumerate_language(aut, _UNIT_WORD_LEN)
    results = {}
    for n in sizes:
        # matrix units need both words inside the truncation
        short = [w for w in words if len(w) <= n]
        ops = [t_matrix(aut, mu, n, unitized) for mu in short for unitized in (False, True)]
        ops += [pi_matrix(aut, e, n) for e in elements]
        vacuum = vacuum_projection(aut, n)
        units = all(
            matrix_unit(aut, mu, nu, n).entries == {(vacuum.basis.index[mu], vacuum.basis.index[nu])}
            for mu in short
            for nu in short
        )
        diagonal = all(
            diag_expectation(pi_matrix(aut, e, n)).is_zero for e in elements if not is_idempotent(e)
        ) and all(diag_expectation(pi_matrix(aut, e, n)) == pi_matrix(aut, e, n) for e in elements if is_idempotent(e))
        grading = all(
            tensor_rep(aut, e, n, radius).diagonal_blocks_zero(aut.alphabet)
            for e in elements
            if not d_map(e).is_identity
        )
        guarded = [product_check(aut, a, b, n) for a, b in itertools.product(elements[:8], repeat=2)]
        results[str(n)] = {
            "partial_isometries": all(is_partial_isometry(op) for op in ops),
            "vacuum_rank": vacuum.trace(),
            "vacuum_fixes_empty_word": vacuum.entries == {(0, 0)},
            "matrix_units": units,
            "diagonal_expectation": diagonal,
            "tensor_grading": grading,
            "guarded_products": all(c.truncated for c in guarded if c.safe),
            "widened_products": all(c.guarded for c in guarded),
        }
    report.verdicts["sizes"] = results
    report.verdicts["passed"] = all(
        all(v for k, v in r.items() if k != "vacuum_rank") and r["vacuum_rank"] == 1 for r in results.values()
    )
    report.scope.update(
        {
            "hull_elements": len(elements),
            "words": [show(w) for w in words],
            "tensor_grading": f"every size, free group ball of radius {radius}",
        }
    )
    if args.export:
        mu = aut.alphabet.check(args.export)
        n = min(sizes)
        report.witnesses["export"] = {
            "operator": f"T_{mu} at size {n}",
            "coordinates": export_coordinates(t_matrix(aut, mu, n)),
            "unitized_extra_columns": compact_difference_columns(aut, mu, n),
        }
    return report


@command("canon")
def cmd_canon(args: Namespace, settings: Settings) -> Report:
    if not args.spec:
        raise UsageError("canon needs --spec NAME|PATH")
    spec = load_spec(args.spec)
    report = Report(args.command, {"spec": spec.name})
    report.verdicts["canonical"] = serialize_spec(spec)
    return report


@command("corpus")
def cmd_corpus(args: Namespace, settings: Settings) -> Report:
    report = Report(args.command)
    for name in corpus_names():
        spec = load_spec(name)
        report.verdicts[name] = {"alphabet": "".join(spec.alphabet.symbols), "patterns": len(spec.forbidden)}
    return report


def execute(args: Namespace, settings: Settings) -> Report:
    try:
        func = COMMANDS[args.command]
    except KeyError:
        raise UsageError(f"unknown command {args.command!r}; known: {', '.join(COMMANDS)}")
    logger.debug(f"running {args.command} with {vars(args)}")
    return func(args, settings)
