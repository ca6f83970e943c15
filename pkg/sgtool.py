"""
Command-line tool for the subtraction game S = {F_(2n+1) - 1}.

Sieves Grundy values, classifies positions by the closed form, runs the
exhaustive verifiers, and plays the game interactively.
"""

import argparse
import json
import sys
import time
from dataclasses import replace
from typing import Callable, Dict, Iterator, List, Optional, TextIO

import numpy as np

from engine.errors import PositionOverflow, ValueOverflow
from engine.fibzeck import POSITION_LIMIT, zeckendorf_encode
from engine.grundy import SIEVE_LIMIT, grundy_sieve, nim_value_group, odd_fibonacci_set, period_scan
from engine.theorem import (
    classify,
    classify_range,
    codes_from_low_indices,
    verify_equivalence,
    verify_follower_properties,
    verify_partition,
    verify_word_agreement,
    zero_density,
    zeckendorf_low_indices,
)
from models.output_record import OutputRecord
from models.play_context import PlayContext
from models.position_class import GRUNDY_BY_CODE, PositionClass
from models.reports import VerificationReport, counts_by_tag
from models.state_enums import Command
from models.tool_config import ToolConfig
from states.session import PlaySession
from utils.logging import setup_logging
from utils.records import FORMATS, write_records

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_IO = 2
EXIT_FAILED = 3


class UsageError(Exception):
    """Raised instead of argparse's own exit on bad command lines."""


class ToolArgumentParser(argparse.ArgumentParser):
    def error(self, message: str) -> None:
        raise UsageError(message)


class GrundyTool:
    """
    Command dispatcher.

    Loads configuration, sets up logging and maps each Command to its
    handler. Handlers return the process exit code.
    """

    def __init__(self, stdin: Optional[TextIO] = None, stdout: Optional[TextIO] = None):
        self.load_configuration()
        self.logger = setup_logging(self.config.log_level, self.config.log_file)
        self.stdin = stdin if stdin is not None else sys.stdin
        self.stdout = stdout if stdout is not None else sys.stdout

        self.command_registry: Dict[Command, Callable[[argparse.Namespace], int]] = {}
        self._register_commands()
        self.parser = self.build_parser()

    def load_configuration(self) -> None:
        """Load configuration from environment variables and .env."""
        self.config = ToolConfig.from_env()

    def build_parser(self) -> ToolArgumentParser:
        parser = ToolArgumentParser(prog='sgtool', description=__doc__.strip().splitlines()[0])
        subparsers = parser.add_subparsers(dest='command', required=True)

        output = ToolArgumentParser(add_help=False)
        output.add_argument('--max', type=int, default=None, help='largest position (default from SGTOOL_MAX)')
        output.add_argument('--format', choices=FORMATS, default=None)
        output.add_argument('--out', default=None, help='output path (default standard output)')

        for command in (Command.SIEVE, Command.VERIFY, Command.PARTITION, Command.GROUP,
                        Command.FOLLOWERS, Command.WORD, Command.BENCH):
            subparsers.add_parser(command.value, parents=[output])

        period = subparsers.add_parser(Command.PERIOD.value, parents=[output])
        period.add_argument('--max-period', type=int, default=None)
        period.add_argument('--max-preperiod', type=int, default=None)

        classify_parser = subparsers.add_parser(Command.CLASSIFY.value)
        classify_parser.add_argument('--format', choices=FORMATS, default='csv')
        classify_parser.add_argument('positions', nargs='+')

        play = subparsers.add_parser(Command.PLAY.value)
        play.add_argument('--engine-first', action='store_true')
        play.add_argument('positions', nargs='+')
        return parser

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse argv and execute one command."""
        try:
            args = self.parser.parse_args(argv)
        except UsageError as e:
            self.logger.error(f"Usage error: {e}")
            sys.stderr.write(self.parser.format_usage())
            return EXIT_USAGE

        handler = self.command_registry[Command(args.command)]
        try:
            return handler(args)
        except ValueOverflow as e:
            self.logger.error(f"Internal invariant violated: {e}")
            return EXIT_FAILED
        except (ValueError, UsageError) as e:
            self.logger.error(f"Invalid input: {e}")
            return EXIT_USAGE
        except OSError as e:
            self.logger.error(f"I/O error: {e}")
            return EXIT_IO

    # Command handlers

    def cmd_sieve(self, args: argparse.Namespace) -> int:
        """One record per position 0..max from the sieve and the closed form."""
        max_position = self._max(args)
        table = grundy_sieve(odd_fibonacci_set(), max_position)
        sieve = table.values()
        z1, z2 = zeckendorf_low_indices(0, max_position, self.config.workers)
        codes = codes_from_low_indices(z1, z2)

        disagreements = np.flatnonzero(np.array(GRUNDY_BY_CODE, dtype=np.uint8)[codes] != sieve)
        if disagreements.size:
            x = int(disagreements[0])
            self.logger.error(f"Sieve value {int(sieve[x])} at {x} contradicts class {PositionClass.from_code(codes[x]).value}")
            return EXIT_FAILED

        def records() -> Iterator[OutputRecord]:
            for x in range(max_position + 1):
                yield OutputRecord(x, int(sieve[x]), PositionClass.from_code(codes[x]), int(z1[x]), int(z2[x]))

        written = self._emit(lambda stream: write_records(records(), args.format or 'csv', stream), args.out)
        self.logger.info(f"Wrote {written} records")
        return EXIT_OK

    def cmd_classify(self, args: argparse.Namespace) -> int:
        """Closed-form records for the given positions; no sieve involved."""
        positions = [self._parse_position(raw) for raw in args.positions]
        records = []
        for x in positions:
            rep = zeckendorf_encode(x)
            position_class = classify(x)
            records.append(OutputRecord(x, position_class.grundy, position_class, rep.z1, rep.z2))
        write_records(records, args.format, self.stdout)
        return EXIT_OK

    def cmd_verify(self, args: argparse.Namespace) -> int:
        report = verify_equivalence(self._max(args), self.config.workers)
        extra = f"P-position density {zero_density(report):.6f}" if report.size > 1 else None
        return self._report(Command.VERIFY, report, args, extra)

    def cmd_partition(self, args: argparse.Namespace) -> int:
        report = verify_partition(self._max(args))
        return self._report(Command.PARTITION, report, args)

    def cmd_followers(self, args: argparse.Namespace) -> int:
        report = verify_follower_properties(self._max(args), self.config.workers)
        return self._report(Command.FOLLOWERS, report, args)

    def cmd_word(self, args: argparse.Namespace) -> int:
        report = verify_word_agreement(self._max(args), self.config.workers)
        return self._report(Command.WORD, report, args)

    def cmd_period(self, args: argparse.Namespace) -> int:
        """Exit 0 iff no period is found inside the search window."""
        max_position = self._max(args)
        max_period = args.max_period if args.max_period is not None else self.config.max_period
        max_preperiod = args.max_preperiod if args.max_preperiod is not None else self.config.max_preperiod

        start = time.perf_counter()
        table = grundy_sieve(odd_fibonacci_set(), max_position)
        report = replace(period_scan(table, max_period, max_preperiod),
                         elapsed_ms=(time.perf_counter() - start) * 1000.0)
        if report.found:
            summary = f"FOUND period {report.period} with preperiod {report.preperiod} on [0, {max_position}]"
        else:
            summary = (f"PASS, no period <= {max_period} with preperiod <= {max_preperiod} "
                       f"on [0, {max_position}]")
        self._summarise(summary, report.to_dict(Command.PERIOD.value, max_position), args)
        return EXIT_FAILED if report.found else EXIT_OK

    def cmd_group(self, args: argparse.Namespace) -> int:
        max_position = self._max(args)
        start = time.perf_counter()
        table = grundy_sieve(odd_fibonacci_set(), max_position)
        values = sorted(int(v) for v in np.unique(table.values()))
        closure = sorted(nim_value_group(table))
        summary = (f"values {{{','.join(map(str, values))}}}, closure {{{','.join(map(str, closure))}}}, "
                   f"order {len(closure)}")
        report = {
            'command': Command.GROUP.value,
            'range': [0, max_position],
            'passed': True,
            'values': values,
            'closure': closure,
            'order': len(closure),
            'counts': counts_by_tag(table.class_counts()),
            'elapsed_ms': round((time.perf_counter() - start) * 1000.0, 3),
        }
        self._summarise(summary, report, args)
        return EXIT_OK

    def cmd_play(self, args: argparse.Namespace) -> int:
        positions = [self._parse_position(raw) for raw in args.positions]
        context = PlayContext(
            positions=positions,
            input_stream=self.stdin,
            output_stream=self.stdout,
            logger=self.logger,
        )
        PlaySession(context, engine_first=args.engine_first).run()
        return EXIT_OK

    def cmd_bench(self, args: argparse.Namespace) -> int:
        """Throughput of the sieve and of the bulk closed form."""
        max_position = self._max(args)
        # compile the kernels before timing
        grundy_sieve(odd_fibonacci_set(), 16)
        classify_range(0, 16)

        start = time.perf_counter()
        table = grundy_sieve(odd_fibonacci_set(), max_position)
        sieve_seconds = time.perf_counter() - start

        start = time.perf_counter()
        classify_range(0, max_position, self.config.workers)
        classify_seconds = time.perf_counter() - start

        positions = max_position + 1
        self.stdout.write(
            f"sieve: {positions} positions in {sieve_seconds:.3f} s "
            f"({positions / max(sieve_seconds, 1e-9):,.0f} positions/s), table {table.nbytes} bytes\n"
        )
        self.stdout.write(
            f"closed form: {positions} positions in {classify_seconds:.3f} s "
            f"({positions / max(classify_seconds, 1e-9):,.0f} positions/s)\n"
        )
        return EXIT_OK

    # Helpers

    def _max(self, args: argparse.Namespace) -> int:
        max_position = args.max if args.max is not None else self.config.default_max
        if not 0 <= max_position < SIEVE_LIMIT:
            raise UsageError(f"--max must be in 0..{SIEVE_LIMIT - 1}, got {max_position}")
        return max_position

    def _parse_position(self, raw: str) -> int:
        try:
            x = int(raw)
        except ValueError:
            raise UsageError(f"cannot parse position {raw!r}") from None
        if x < 0:
            raise UsageError(f"position must be nonnegative, got {x}")
        if x >= POSITION_LIMIT:
            raise PositionOverflow(f"position {x} is not below 2^63")
        return x

    def _emit(self, write: Callable[[TextIO], int], path: Optional[str]) -> int:
        if path is None:
            return write(self.stdout)
        with open(path, 'w', encoding='utf-8', newline='') as stream:
            return write(stream)

    def _summarise(self, summary: str, report: dict, args: argparse.Namespace) -> None:
        """
        Summary on stdout; the JSON report goes to --out if given, otherwise it
        replaces the summary when --format json is requested.
        """
        as_json = json.dumps(report, indent=2) + "\n"
        if args.format == 'json' and args.out is None:
            self.stdout.write(as_json)
            return
        self.stdout.write(summary + "\n")
        if args.out is not None:
            self._emit(lambda stream: stream.write(as_json), args.out)

    def _report(self, command: Command, report: VerificationReport, args: argparse.Namespace,
                extra: Optional[str] = None) -> int:
        counts = report.class_counts
        summary = (
            f"{'PASS' if report.passed else 'FAIL'}, {report.mismatches} mismatches, counts "
            f"{counts.get(PositionClass.CLASS_B, 0)}/{counts.get(PositionClass.CLASS_B1, 0)}/"
            f"{counts.get(PositionClass.CLASS_AB1, 0)} (B/B1/AB1) on "
            f"[{report.range_checked[0]}, {report.range_checked[1]}]"
        )
        if extra:
            summary += f"\n{extra}"
        if report.first_counterexample:
            counterexample = report.first_counterexample
            summary += f"\nfirst counterexample: x={counterexample.position}: {counterexample.detail}"
        self._summarise(summary, report.to_dict(command.value), args)
        return EXIT_OK if report.passed else EXIT_FAILED

    def _register_commands(self) -> None:
        self.command_registry[Command.SIEVE] = self.cmd_sieve
        self.command_registry[Command.CLASSIFY] = self.cmd_classify
        self.command_registry[Command.VERIFY] = self.cmd_verify
        self.command_registry[Command.PARTITION] = self.cmd_partition
        self.command_registry[Command.PERIOD] = self.cmd_period
        self.command_registry[Command.GROUP] = self.cmd_group
        self.command_registry[Command.FOLLOWERS] = self.cmd_followers
        self.command_registry[Command.WORD] = self.cmd_word
        self.command_registry[Command.PLAY] = self.cmd_play
        self.command_registry[Command.BENCH] = self.cmd_bench


def main() -> None:
    """Main entry point for the tool."""
    try:
        tool = GrundyTool()
    except ValueError as e:
        sys.stderr.write(f"Configuration error: {e}\n")
        sys.exit(EXIT_USAGE)
    sys.exit(tool.run())


if __name__ == "__main__":
    main()
