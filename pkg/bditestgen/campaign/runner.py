
import os
import glob
import logging
from math import ceil

import numpy as np
import pandas as pd

from .baseline import baseline_abstract_tests
from .config import MANUAL, RANDOM, RL, BASELINE
from ..explorer.manual import manual_subsets, DEFAULT_MANUAL_PATH
from ..explorer.pseudorandom import random_subsets
from ..explorer.qlearning import LearningConfig, QLearner, load_qlearner
from ..monitors.report import TestResult, aggregate, save_report
from ..monitors.requirements import check_requirements
from ..scenario.builder import run_subset
from ..sim.driver import run_simulation
from ..sim.eventlog import load_event_log
from ..sim.coverage import load_coverage_map
from ..sim.faults import FaultConfig
from ..testgen.abstract import trace_to_abstract, save_abstract_test
from ..testgen.concrete import expand, derive_seeds, save_concrete_test, load_concrete_test
from ..testgen.ranges import load_range_table, default_range_table
from ..utils.exceptions import CampaignStageException
from ..utils.misc import get_executor


logger = logging.getLogger(__name__)

TESTS_DIR = 'tests'
REPORT_DIR = 'report'
ABSTRACT_FILE = 'abstract.txt'
CONCRETE_FILE = 'concrete.jsonl'
EVENTS_FILE = 'events.csv'
COVERAGE_FILE = 'coverage.csv'
SUBSETS_FILE = 'subsets.txt'
DIAGNOSTICS_FILE = 'diagnostics.csv'
COMPARISON_COLUMNS = ['max_coverage', 'mean_coverage', 'diversity']


def artifact_dir(output_dir, test_id):
    return os.path.join(output_dir, TESTS_DIR, test_id)


def _stage_error(stage, test_id, e):
    reason = getattr(e, 'message', None) or str(e) or e.__class__.__name__
    return CampaignStageException(stage, test_id, reason)


def select_subsets(config):
    """ Run the exploration strategy of the campaign.

    :param config: campaign configuration, with a BDI-model strategy
    :return: subsets with provenance (and learning diagnostics for `rl`)
    :rtype: bditestgen.explorer.base.StrategyResult
    """
    if config.strategy == MANUAL:
        return manual_subsets(DEFAULT_MANUAL_PATH if config.manual_path is None else config.manual_path)
    if config.strategy == RANDOM:
        return random_subsets(config.suite_size, config.seed)
    if config.strategy == RL:
        if config.model_path is not None:
            return load_qlearner(config.model_path).policy()
        if config.learning_path is not None:
            learning = LearningConfig.from_file(config.learning_path)
        else:
            learning = LearningConfig(seed=config.seed)
        return QLearner(learning).learn()
    raise ValueError('Strategy '+config.strategy+' does not explore the agent model')


def abstract_tests_of(subsets, prefix):
    """ Run the agent model once per subset and format each trace into an abstract test. """
    tests = []
    for i, subset in enumerate(subsets):
        trace_id = '%s-%04d' % (prefix, i)
        try:
            _, trace, _ = run_subset(subset)
            tests.append(trace_to_abstract(trace, subset, trace_id))
        except Exception as e:
            raise _stage_error('model', trace_id, e) from e
    return tests


def concretize_suite(abstract_tests, ranges, suite_size, concretizations, seed):
    """ Expand the abstract tests into exactly `suite_size` concrete tests.

    Abstract tests are concretized round-robin: every first concretization
    comes before any second one. Each abstract test gets at least
    `concretizations` sub-seeds, more if needed to fill the suite.

    :return: list of (abstract test, concrete test)
    :rtype: list
    """
    if len(abstract_tests) == 0:
        raise CampaignStageException('concretize', None, 'no abstract test to concretize')
    per_test = max(concretizations, int(ceil(suite_size / len(abstract_tests))))
    expanded = []
    for abstract, subseed in zip(abstract_tests, derive_seeds(seed, len(abstract_tests))):
        try:
            expanded.append(expand(abstract, ranges, per_test, subseed))
        except Exception as e:
            raise _stage_error('concretize', abstract.trace_id, e) from e
    suite = []
    for j in range(per_test):
        for abstract, concretes in zip(abstract_tests, expanded):
            suite.append((abstract, concretes[j]))
    return suite[:suite_size]


def generate_suite(config):
    """ Produce the concrete tests of a campaign and write their abstract and concrete files.

    :param config: campaign configuration
    :return: list of (abstract test, concrete test)
    :raise: CampaignStageException
    :type config: bditestgen.campaign.config.CampaignConfig
    :rtype: list
    """
    if config.strategy == BASELINE:
        abstract_tests = baseline_abstract_tests(config.suite_size, config.seed)
    else:
        try:
            result = select_subsets(config)
        except Exception as e:
            raise _stage_error('generate', None, e) from e
        os.makedirs(config.output_dir, exist_ok=True)
        result.save_subsets(os.path.join(config.output_dir, SUBSETS_FILE))
        if result.diagnostics is not None:
            result.save_diagnostics(os.path.join(config.output_dir, DIAGNOSTICS_FILE))
        abstract_tests = abstract_tests_of(result.subsets, config.strategy)

    ranges = default_range_table() if config.ranges_path is None else load_range_table(config.ranges_path)
    suite = concretize_suite(abstract_tests, ranges, config.suite_size, config.concretizations, config.seed)
    for abstract, concrete in suite:
        directory = artifact_dir(config.output_dir, concrete.test_id)
        os.makedirs(directory, exist_ok=True)
        save_abstract_test(abstract, os.path.join(directory, ABSTRACT_FILE))
        save_concrete_test(concrete, os.path.join(directory, CONCRETE_FILE))
    logger.info('Generated %d concrete tests from %d abstract tests (%s)',
                len(suite), len(abstract_tests), config.strategy)
    return suite


def load_suite(output_dir):
    """ Read back the concrete tests written under `output_dir`, in test id order. """
    paths = sorted(glob.glob(os.path.join(output_dir, TESTS_DIR, '*', CONCRETE_FILE)))
    return [load_concrete_test(path) for path in paths]


def simulation_seed(seed, index):
    return int(np.random.SeedSequence([seed, index]).generate_state(1)[0])


def simulate_test(concrete, faults, seed, wall_limit, output_dir):
    """ Simulate one concrete test and write its event log and coverage map. """
    try:
        eventlog, coverage = run_simulation(concrete, faults, seed, wall_limit)
    except Exception as e:
        raise _stage_error('simulate', concrete.test_id, e) from e
    directory = artifact_dir(output_dir, concrete.test_id)
    os.makedirs(directory, exist_ok=True)
    eventlog.to_csv(os.path.join(directory, EVENTS_FILE))
    coverage.to_csv(os.path.join(directory, COVERAGE_FILE))
    return concrete.test_id


def simulate_suite(config, concrete_tests):
    """ Simulate every concrete test, in parallel when `n_jobs` is not 1.

    :return: test ids simulated
    :rtype: list
    """
    faults = FaultConfig() if config.faults_path is None else FaultConfig.from_file(config.faults_path)
    # seeds follow test id order, whether the tests come from memory or from disk
    concrete_tests = sorted(concrete_tests, key=lambda test: test.test_id)
    n = len(concrete_tests)
    seeds = [simulation_seed(config.seed, i) for i in range(n)]
    executor = get_executor(config.n_jobs)
    test_ids = executor.map(simulate_test, concrete_tests, [faults] * n, seeds,
                            [config.wall_limit] * n, [config.output_dir] * n)
    logger.info('Simulated %d tests', n)
    return test_ids


def evaluate_test(output_dir, test_id, release_threshold, safe_distance, strategy=''):
    """ Run the monitors over the stored log of one test. """
    directory = artifact_dir(output_dir, test_id)
    try:
        eventlog = load_event_log(os.path.join(directory, EVENTS_FILE))
        coverage = load_coverage_map(os.path.join(directory, COVERAGE_FILE))
        outcomes = check_requirements(eventlog, release_threshold, safe_distance)
    except Exception as e:
        raise _stage_error('monitor', test_id, e) from e
    return TestResult(test_id, coverage.percentage(), outcomes, eventlog.timed_out, strategy)


def report_suite(config, test_ids=None):
    """ Monitor the stored logs of the campaign and write the suite report.

    :param config: campaign configuration
    :param test_ids: tests to include (Default: every test with an event log)
    :return: suite report
    :rtype: bditestgen.monitors.report.SuiteReport
    """
    if test_ids is None:
        paths = glob.glob(os.path.join(config.output_dir, TESTS_DIR, '*', EVENTS_FILE))
        test_ids = sorted(os.path.basename(os.path.dirname(path)) for path in paths)
    results = [evaluate_test(config.output_dir, test_id, config.release_threshold, config.safe_distance,
                             config.strategy)
               for test_id in test_ids]
    try:
        report = aggregate(results, config.strategy)
        save_report(report, os.path.join(config.output_dir, REPORT_DIR))
    except Exception as e:
        raise _stage_error('report', None, e) from e
    return report


def run_campaign(config):
    """ Generate, simulate and monitor a whole suite; write every artifact under `output_dir`.

    :param config: campaign configuration
    :return: suite report
    :raise: CampaignStageException
    :type config: bditestgen.campaign.config.CampaignConfig
    :rtype: bditestgen.monitors.report.SuiteReport
    """
    logger.info('Campaign %s: %d tests, seed %s, output in %s',
                config.strategy, config.suite_size, config.seed, config.output_dir)
    suite = generate_suite(config)
    concrete_tests = [concrete for _, concrete in suite]
    test_ids = simulate_suite(config, concrete_tests)
    return report_suite(config, test_ids)


def compare(*reports):
    """ Tabulate coverage and assertion tallies of several suite reports.

    The `delta_` columns are differences to the first report.

    :param reports: at least two suite reports
    :return: one row per report
    :raise: ValueError
    :rtype: pandas.DataFrame
    """
    if len(reports) < 2:
        raise ValueError('compare needs at least two reports')
    table = pd.DataFrame([report.summary() for report in reports])
    for column in COMPARISON_COLUMNS:
        table['delta_'+column] = table[column] - table[column].iloc[0]
    return table
