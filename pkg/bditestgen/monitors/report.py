
import os
import logging
from dataclasses import dataclass, field
from typing import Dict

import numpy as np
import pandas as pd

from .outcome import AssertionOutcome, REQUIREMENTS, VERDICTS


logger = logging.getLogger(__name__)

REPORT_FILE = 'report.csv'
ASSERTIONS_FILE = 'assertions.csv'
SORTED_COVERAGE_FILE = 'coverage_sorted.csv'


@dataclass
class TestResult:
    """ Outcome of simulating one concrete test. """
    __test__ = False

    test_id: str
    code_coverage: float
    outcomes: Dict[str, AssertionOutcome] = field(default_factory=dict)
    timed_out: bool = False
    strategy: str = ''

    def row(self):
        row = {'test_id': self.test_id, 'strategy': self.strategy,
               'code_coverage': self.code_coverage, 'timed_out': self.timed_out}
        for requirement in REQUIREMENTS:
            outcome = self.outcomes[requirement]
            row[requirement] = outcome.verdict
            row[requirement+'_triggers'] = outcome.triggers
            row[requirement+'_diagnostic'] = outcome.diagnostic
        return row


class SuiteReport:
    """ Per-test rows of a suite with the assertion tallies and coverage curve derived from them. """
    def __init__(self, rows, strategy=''):
        """

        :param rows: one row per test, with `test_id`, `code_coverage` and one verdict column per requirement
        :param strategy: name of the strategy that produced the suite (Default: '')
        :type rows: pandas.DataFrame
        :type strategy: str
        """
        self.rows = rows.sort_values('test_id', kind='mergesort').reset_index(drop=True)
        self.strategy = strategy

    def __len__(self):
        return len(self.rows)

    @property
    def tallies(self):
        """ Passed, Failed and NotChecked counts per requirement. """
        counts = {verdict: [int((self.rows[requirement] == verdict).sum()) for requirement in REQUIREMENTS]
                  for verdict in VERDICTS}
        return pd.DataFrame(counts, index=list(REQUIREMENTS))

    @property
    def sorted_coverage(self):
        return np.sort(self.rows['code_coverage'].to_numpy(dtype=float))

    @property
    def diversity(self):
        """ Number of distinct coverage values, i.e. plateaus of the sorted coverage curve. """
        return len(np.unique(self.rows['code_coverage'].to_numpy(dtype=float)))

    @property
    def max_coverage(self):
        return float(self.rows['code_coverage'].max())

    @property
    def mean_coverage(self):
        return float(self.rows['code_coverage'].mean())

    def summary(self):
        summary = {'strategy': self.strategy, 'tests': len(self), 'max_coverage': self.max_coverage,
                   'mean_coverage': self.mean_coverage, 'diversity': self.diversity}
        tallies = self.tallies
        for requirement in REQUIREMENTS:
            for verdict in VERDICTS:
                summary[requirement+'_'+verdict] = int(tallies.loc[requirement, verdict])
        return summary

    def __add__(self, other):
        overlap = set(self.rows['test_id']) & set(other.rows['test_id'])
        if len(overlap) > 0:
            raise ValueError('Suites share test ids: '+', '.join(sorted(overlap)))
        strategy = self.strategy if self.strategy == other.strategy else self.strategy+'+'+other.strategy
        return SuiteReport(pd.concat([self.rows, other.rows], ignore_index=True), strategy)


def aggregate(results, strategy=''):
    """ Aggregate the per-test results of a suite into a report.

    :param results: test results
    :param strategy: strategy name (Default: '')
    :return: suite report
    :raise: ValueError when there is no result
    :type results: list
    :type strategy: str
    :rtype: SuiteReport
    """
    if len(results) == 0:
        raise ValueError('Cannot aggregate an empty suite')
    rows = pd.DataFrame([result.row() for result in results])
    report = SuiteReport(rows, strategy)
    logger.info('Aggregated %d tests of strategy %s: max coverage %.1f%%, diversity %d',
                len(report), strategy, report.max_coverage, report.diversity)
    return report


def save_report(report, directory):
    """ Write the per-test CSV, the assertion table and the sorted coverage curve in `directory`. """
    os.makedirs(directory, exist_ok=True)
    report.rows.to_csv(os.path.join(directory, REPORT_FILE), index=False)
    report.tallies.to_csv(os.path.join(directory, ASSERTIONS_FILE), index_label='requirement')
    sorted_coverage = report.sorted_coverage
    pd.DataFrame({'rank': np.arange(1, len(sorted_coverage) + 1), 'code_coverage': sorted_coverage}) \
        .to_csv(os.path.join(directory, SORTED_COVERAGE_FILE), index=False)


def load_report(directory, strategy=None):
    rows = pd.read_csv(os.path.join(directory, REPORT_FILE), dtype={'test_id': str}, keep_default_na=False)
    if strategy is None:
        strategies = rows['strategy'].unique() if 'strategy' in rows.columns else []
        strategy = strategies[0] if len(strategies) == 1 else os.path.basename(os.path.normpath(directory))
    return SuiteReport(rows, str(strategy))
