#!/usr/bin/env python3
"""
Command-line verification suite
===============================
Each subcommand runs a batch of checks and prints a RunReport, as text or as
JSON with --json. Exit codes: 0 every check passed, 1 a check failed,
2 usage or input error.

    python cli.py order 2 2 --enumerate
    python cli.py verify-presentation 2 2 --define --json --no-timing
"""

import argparse
import logging
import sys
from typing import List, Optional

from block_monoid import count_partition_preserving, order_formula, order_table
from config import ENUMERATION_LIMIT, LOG_FORMAT, LOG_LEVEL, QUOTIENT_NODE_LIMIT
from enumeration import (
    canonical_forms_per_class, closure, congruences_equal, kernel_congruence,
    single_pair_congruence, tail_universal_check,
)
from exporter import EdgeListExporter
from generators import (
    FIVE_SYMBOLS, SLOT_SYMBOLS, TAIL_SYMBOLS, build_named_generators, eval_word,
    parse_word, xi_words,
)
from presentations import (
    build_R1, build_R2, build_R3, candidate_rp, candidate_rt, check_relations,
    eqt2_discrepancy, extra_relation, extra_relation_bar, free_quotient_size,
    load_presentation, self_check_rp, self_check_rt, substitute, wreath_presentation,
)
from report import CheckStatus, RunReport, validate_report
from utils import MonoidError
from wreath import full_wreath_order, tail_projection, units_order, wreath_order

logger = logging.getLogger(__name__)

# The published order table, keyed (n, m); n = 1 is the |PT_m| column.
PUBLISHED_ORDERS = {
    (1, 1): 2, (2, 1): 9, (3, 1): 64, (4, 1): 625, (5, 1): 7776,
    (1, 2): 9, (2, 2): 289, (3, 2): 16129, (4, 2): 1560001, (5, 2): 241833601,
    (1, 3): 64, (2, 3): 15625, (3, 3): 6859000, (4, 3): 6570725617, (5, 3): 12691729689976,
    (1, 4): 625, (2, 4): 1185921, (3, 4): 4097152081, (4, 4): 38875337230081,
    (5, 4): 935615510827384401,
    (1, 5): 7776, (2, 5): 115856201, (3, 5): 3150905752576, (4, 5): 296120751810639601,
    (5, 5): 88798957515761812069376,
}


class Limits:
    def __init__(self, limit: Optional[int]):
        self.closure = limit or ENUMERATION_LIMIT
        self.quotient = limit or QUOTIENT_NODE_LIMIT


def cmd_order(args, report: RunReport, limits: Limits):
    n, m = args.n, args.m
    with report.check('order formula') as c:
        value = order_formula(n, m)
        c.measure(order=value)
        c.passed()
    report.emit(f"|PT_{{{n}x{m}}}| = {value}")
    if not args.enumerate:
        return

    with report.check('closure of the five generators in PT_{n x m}', expected=value) as c:
        if min(n, m) < 2:
            c.skipped('the five generators need n, m >= 2')
        else:
            block = build_named_generators(n, m).restrict(FIVE_SYMBOLS).to_block()
            size = closure(block.elements(), names=block.symbols, limit=limits.closure).size
            c.measure(closure=size)
            c.expect(size == value)
    with report.check('brute-force partition-preserving count', expected=value) as c:
        count = count_partition_preserving(n, m)
        c.measure(count=count)
        c.expect(count == value)


def cmd_verify_generators(args, report: RunReport, limits: Limits):
    n, m = args.n, args.m
    alphabet = build_named_generators(n, m).restrict(FIVE_SYMBOLS)
    block = alphabet.to_block()
    full_wreath, full_block = wreath_order(n, m), order_formula(n, m)

    with report.check('five generators generate PT_n wr T_m', expected=full_wreath) as c:
        size = closure(alphabet.elements(), FIVE_SYMBOLS, limit=limits.closure).size
        c.measure(closure=size)
        c.expect(size == full_wreath)
    with report.check('five generators generate PT_{n x m}', expected=full_block) as c:
        size = closure(block.elements(), FIVE_SYMBOLS, limit=limits.closure).size
        c.measure(closure=size)
        c.expect(size == full_block)

    for omitted in FIVE_SYMBOLS:
        names = [s for s in FIVE_SYMBOLS if s != omitted]
        with report.check(f'subset without {omitted} is not generating') as c:
            wreath_size = closure(alphabet.elements(names), names, limit=limits.closure).size
            block_size = closure(block.elements(names), names, limit=limits.closure).size
            c.measure(wreath=wreath_size, block=block_size)
            c.expect(wreath_size < full_wreath and block_size < full_block)

    full_names = [s for s in FIVE_SYMBOLS if s != 'sigma']
    with report.check('x1 x2 tau tauB generate T_n wr T_m', expected=full_wreath_order(n, m)) as c:
        wreath_size = closure(alphabet.elements(full_names), full_names, limit=limits.closure).size
        full_block = closure(block.elements(full_names), full_names, limit=limits.closure)
        all_full = all(x.is_full for x in full_block.elements)
        c.measure(closure=wreath_size, block_all_full=all_full)
        c.expect(wreath_size == full_wreath_order(n, m) and all_full)

    with report.check('units generated by x1, x2', expected=units_order(n, m)) as c:
        units = closure(alphabet.elements(['x1', 'x2']), ['x1', 'x2'], limit=limits.closure)
        permutations = all(tail_projection(x).is_permutation for x in units.elements)
        c.measure(closure=units.size, tails_are_permutations=permutations)
        c.expect(units.size == units_order(n, m) and permutations)

    expected_ranks = {'x1': n * m, 'x2': n * m, 'tau': n * m - 1, 'sigma': n * m - 1, 'tauB': n * (m - 1)}
    with report.check('ranks of the generators in PT_{n x m}', expected=expected_ranks) as c:
        ranks = {name: block[name].rank() for name in FIVE_SYMBOLS}
        c.measure(**ranks)
        c.expect(ranks == expected_ranks and block['tau'].is_full and not block['sigma'].is_full)


def cmd_verify_congruence(args, report: RunReport, limits: Limits):
    n, m = args.n, args.m
    alphabet = build_named_generators(n, m).restrict(FIVE_SYMBOLS)
    expected = order_formula(n, m)

    with report.check('enumerate PT_n wr T_m', expected=wreath_order(n, m)) as c:
        em = closure(alphabet.elements(), FIVE_SYMBOLS, limit=limits.closure)
        c.measure(size=em.size)
        c.expect(em.size == wreath_order(n, m))
    if report.checks[-1].status is not CheckStatus.PASS:
        return

    kernel = kernel_congruence(em)
    with report.check('kernel classes', expected=expected) as c:
        c.measure(classes=kernel.class_count)
        c.expect(kernel.class_count == expected)
    with report.check('single-pair congruence equals the kernel', expected=expected) as c:
        pair = single_pair_congruence(em)
        c.measure(classes=pair.class_count)
        c.expect(congruences_equal(kernel, pair))
    with report.check('kernel is compatible with both translations') as c:
        c.expect(kernel.is_compatible())
    with report.check('one canonical form per kernel class') as c:
        counts = canonical_forms_per_class(em, kernel)
        c.measure(largest=max(counts.values()), classes=len(counts))
        c.expect(all(k == 1 for k in counts.values()))
    with report.check('all-empty elements form one class') as c:
        c.expect(tail_universal_check(em, pair))


def _relation_check(report: RunReport, name: str, alphabet, relations):
    with report.check(name) as c:
        outcome = check_relations(alphabet, relations)
        c.measure(relations=len(outcome), failures=len(outcome.failures))
        c.expect(outcome.passed, None if outcome.passed else str(outcome.failures[0].relation))


def _separating_check(report: RunReport, name: str, relation, wreath, block):
    with report.check(f'{name} fails in PT_n wr T_m') as c:
        holds = check_relations(wreath, [relation]).passed
        c.measure(holds=holds)
        if holds:
            c.failed(str(relation))
        else:
            c.expected_fail(str(relation))
    _relation_check(report, f'{name} holds in PT_{{n x m}}', block, [relation])


def _candidate(path: Optional[str], symbols, label: str, fallback):
    if path:
        return load_presentation(path, symbols, default_label=label).relations, path
    return fallback()


def cmd_verify_presentation(args, report: RunReport, limits: Limits):
    n, m = args.n, args.m
    wreath = build_named_generators(n, m)
    block = wreath.to_block()
    five = wreath.restrict(FIVE_SYMBOLS)
    relations = build_R1(m) + build_R2(m) + build_R3(m)

    _relation_check(report, 'R1 R2 R3 hold in PT_n wr T_m', wreath, relations)
    _relation_check(report, 'R1 R2 R3 hold in PT_{n x m}', block, relations)

    xi = xi_words(n, m)
    with report.check('xi-words evaluate to pi, rho, piB, rhoB') as c:
        wrong = [name for name, word in xi.items() if eval_word(five, word) != wreath[name]]
        c.measure(lengths={name: len(word) for name, word in xi.items()})
        c.expect(not wrong, ', '.join(wrong) or None)

    five_block = five.to_block()
    substituted = substitute(relations, xi)
    _relation_check(report, 'substituted R1 R2 R3 hold in PT_n wr T_m', five, substituted)
    _relation_check(report, 'substituted R1 R2 R3 hold in PT_{n x m}', five_block, substituted)

    _separating_check(report, 'extra relation', extra_relation(n), wreath, block)
    _separating_check(report, 'substituted extra relation', extra_relation_bar(n, m), five, five_block)

    for printed, corrected in eqt2_discrepancy(m):
        with report.check(f'misprinted form {printed}') as c:
            holds = check_relations(wreath, [printed]).passed
            c.measure(holds=holds)
            if holds:
                c.failed('holds as printed')
            else:
                c.expected_fail('fails as printed')
        _relation_check(report, f'corrected form {corrected}', wreath, [corrected])

    rp, rp_source = _candidate(args.rp, SLOT_SYMBOLS, 'R_P', lambda: candidate_rp(n))
    rt, rt_source = _candidate(args.rt, TAIL_SYMBOLS, 'R_T', lambda: candidate_rt(m))
    _relation_check(report, f'R_P ({rp_source}) holds in PT_n wr T_m', wreath, rp)
    _relation_check(report, f'R_T ({rt_source}) holds in PT_n wr T_m', wreath, rt)
    for label, candidate in (('R_P', rp), ('R_T', rt)):
        bar = substitute(candidate, xi)
        _relation_check(report, f'substituted {label} holds in PT_n wr T_m', five, bar)
        _relation_check(report, f'substituted {label} holds in PT_{{n x m}}', five_block, bar)

    with report.check('R_P defines PT_n', expected=(n + 1) ** n) as c:
        rp_ok = self_check_rp(rp, n, limits.quotient)
        c.measure(size=rp_ok.order)
        c.expect(rp_ok.holds, None if rp_ok.order is not None else 'enumeration limit exceeded')
    with report.check('R_T defines T_m', expected=m ** m) as c:
        rt_ok = self_check_rt(rt, m, limits.quotient)
        c.measure(size=rt_ok.order)
        c.expect(rt_ok.holds, None if rt_ok.order is not None else 'enumeration limit exceeded')

    if not args.define:
        return
    for with_extra, expected, name in ((False, wreath_order(n, m), 'PT_n wr T_m'),
                                       (True, order_formula(n, m), 'PT_{n x m}')):
        with report.check(f'presentation defines {name}', expected=expected) as c:
            if not (rp_ok.holds and rt_ok.holds):
                c.skipped('R_P or R_T failed its self-check')
                continue
            size = free_quotient_size(wreath_presentation(m, rp, rt, n=n, with_extra=with_extra), limits.quotient)
            c.measure(size=size)
            c.expect(size == expected)


def cmd_eval(args, report: RunReport, limits: Limits):
    alphabet = build_named_generators(args.n, args.m)
    if args.block:
        alphabet = alphabet.to_block()
    report.emit(str(eval_word(alphabet, parse_word(args.expr))))


def cmd_enumerate(args, report: RunReport, limits: Limits):
    alphabet = build_named_generators(args.n, args.m).restrict(FIVE_SYMBOLS)
    if args.block:
        alphabet = alphabet.to_block()
    em = closure(alphabet.elements(), FIVE_SYMBOLS, limit=limits.closure)
    report.emit(f"{em.size} elements")
    if args.export:
        with report.check('edge-list export', expected=em.size * len(FIVE_SYMBOLS)) as c:
            edges = EdgeListExporter(em).export(args.export)
            c.measure(edges=edges)
            c.expect(edges == em.size * len(FIVE_SYMBOLS))


def _table_column(n: int) -> str:
    return '|PT_m|' if n == 1 else f'|PT_{n}xm|'


def cmd_table(args, report: RunReport, limits: Limits):
    table = order_table(args.max_n, args.max_m)
    report.emit(table.to_string())
    with report.check('table matches the published orders') as c:
        compared = {(n, m): v for (n, m), v in PUBLISHED_ORDERS.items()
                    if n <= args.max_n and m <= args.max_m}
        wrong = [f"{n}x{m}" for (n, m), v in compared.items() if int(table.loc[m, _table_column(n)]) != v]
        c.measure(compared=len(compared))
        c.expect(not wrong, ', '.join(wrong) or None)


COMMANDS = {
    'order': cmd_order,
    'verify-generators': cmd_verify_generators,
    'verify-congruence': cmd_verify_congruence,
    'verify-presentation': cmd_verify_presentation,
    'eval': cmd_eval,
    'enumerate': cmd_enumerate,
    'table': cmd_table,
}


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _add_global_flags(parser: argparse.ArgumentParser, suppress: bool):
    # Suppressed in subcommands so a flag given before the subcommand survives.
    default = argparse.SUPPRESS if suppress else None
    flag = argparse.SUPPRESS if suppress else False
    parser.add_argument('--limit', type=_positive, default=default,
                        help='cap on enumerated elements and word-graph nodes')
    parser.add_argument('--json', action='store_true', default=flag, help='print the report as JSON')
    parser.add_argument('--no-timing', dest='no_timing', action='store_true', default=flag,
                        help='omit elapsed times so reports are byte-identical across runs')
    parser.add_argument('-v', '--verbose', action='store_true', default=flag, help='log progress to stderr')


def _subcommand(sub, name: str, help: str) -> argparse.ArgumentParser:
    parser = sub.add_parser(name, help=help)
    _add_global_flags(parser, suppress=True)
    return parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog='ptw', description='Verify facts about PT_{n x m} and PT_n wr T_m')
    _add_global_flags(parser, suppress=False)
    sub = parser.add_subparsers(dest='command', required=True)

    def dims(p):
        p.add_argument('n', type=_positive)
        p.add_argument('m', type=_positive)

    p = _subcommand(sub, 'order', help='order formula, optionally cross-checked')
    dims(p)
    p.add_argument('--enumerate', action='store_true', help='cross-check by closure and brute force')

    for name, text in (('verify-generators', 'five-generator set and its subsets'),
                       ('verify-congruence', 'kernel of phi against the single-pair congruence')):
        dims(_subcommand(sub, name, help=text))

    p = _subcommand(sub, 'verify-presentation', help='relation sets by evaluation')
    dims(p)
    p.add_argument('--rp', help='presentation file for PT_n over pi rho tau sigma')
    p.add_argument('--rt', help='presentation file for T_m over piB rhoB tauB')
    p.add_argument('--define', action='store_true', help='enumerate the presented monoids')

    p = _subcommand(sub, 'eval', help='evaluate a word in the named generators')
    p.add_argument('expr')
    dims(p)
    p.add_argument('--block', action='store_true', help='evaluate in PT_{n x m} instead')

    p = _subcommand(sub, 'enumerate', help='enumerate the monoid from the five generators')
    dims(p)
    p.add_argument('--block', action='store_true', help='enumerate PT_{n x m} instead')
    p.add_argument('--export', metavar='PATH', help='write the right Cayley graph as an edge list')

    p = _subcommand(sub, 'table', help='print the order table')
    p.add_argument('--max-n', dest='max_n', type=_positive, default=5)
    p.add_argument('--max-m', dest='max_m', type=_positive, default=5)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(level=logging.INFO if args.verbose else LOG_LEVEL, format=LOG_FORMAT, stream=sys.stderr)
    report = RunReport(command=' '.join(argv if argv is not None else sys.argv[1:]),
                       n=getattr(args, 'n', None), m=getattr(args, 'm', None))
    try:
        COMMANDS[args.command](args, report, Limits(args.limit))
    except (MonoidError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2

    timing = not args.no_timing
    if args.json:
        document = report.to_dict(timing)
        validate_report(document)
        print(report.to_json(timing))
    else:
        print(report.render_text(timing))
    return report.exit_code


if __name__ == '__main__':
    sys.exit(main())
