import os
import shutil
import tempfile
import unittest

from bditestgen.agents.coverage import plan_coverage
from bditestgen.campaign import CampaignConfig, run_campaign
from bditestgen.campaign.config import BASELINE, MANUAL, RANDOM, RL
from bditestgen.explorer import LearningConfig, QLearner
from bditestgen.monitors import PASSED, FAILED, REQUIREMENTS
from bditestgen.scenario import run_subset, enumerate_valid_subsets, parse_subset, ROBOT
from bditestgen.sim import NO_FAULTS, run_simulation
from bditestgen.testgen import trace_to_abstract, concretize, default_range_table


SEEDS = range(5)
SUITE_SIZE = 100
ALL_READY_FOUR_LEGS = 'legs_requested(4), not_bored, gpl(1,1,1,1), gpl(2,1,1,1), gpl(3,1,1,1), gpl(4,1,1,1)'


def coverage_ceiling():
    """ Highest fault-free code coverage over every one-leg subset and the all-ready four-leg subset. """
    subsets = list(enumerate_valid_subsets(legs=1)) + [parse_subset(ALL_READY_FOUR_LEGS)]
    ranges = default_range_table()
    ceiling = 0.0
    for i, subset in enumerate(subsets):
        _, trace, _ = run_subset(subset)
        test = concretize(trace_to_abstract(trace, subset, 'ceiling-%02d' % i), ranges, seed=i)
        _, coverage = run_simulation(test, NO_FAULTS)
        ceiling = max(ceiling, coverage.percentage())
    return ceiling


class TestLearning(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.learner = QLearner(LearningConfig())
        cls.result = cls.learner.learn()

    def test_convergence(self):
        self.assertTrue(self.result.converged)
        self.assertLessEqual(len(self.result.diagnostics), 1000)
        self.assertLess(self.result.diagnostics['max_delta_q'].iloc[-1], 1e-4)

    def test_policy_covers_robot_plans(self):
        merged, mas = None, None
        for subset in self.result.subsets:
            mas, trace, _ = run_subset(subset)
            coverage = plan_coverage(trace, mas)
            merged = coverage if merged is None else merged.merge(coverage)
        self.assertEqual(len(mas.agents[ROBOT].plans), 12)
        self.assertEqual(len(merged.covered(ROBOT)), 12)


class TestSuites(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tempdir = tempfile.mkdtemp()
        cls.reports = {}
        for strategy in (RL, BASELINE):
            for seed in SEEDS:
                cls.reports[strategy, seed] = cls.campaign(strategy, seed)
        cls.reports[MANUAL, 0] = cls.campaign(MANUAL, 0, concretizations=5)
        cls.reports[RANDOM, 0] = cls.campaign(RANDOM, 0)

    @classmethod
    def tearDownClass(cls):
        shutil.rmtree(cls.tempdir)

    @classmethod
    def campaign(cls, strategy, seed, concretizations=1):
        output = os.path.join(cls.tempdir, '%s-%d' % (strategy, seed))
        return run_campaign(CampaignConfig(strategy=strategy, suite_size=SUITE_SIZE, seed=seed,
                                           concretizations=concretizations, output_dir=output))

    def test_baseline_mean_coverage(self):
        for seed in SEEDS:
            self.assertLess(self.reports[BASELINE, seed].mean_coverage, self.reports[RL, seed].mean_coverage)
        self.assertLess(self.reports[BASELINE, 0].mean_coverage, self.reports[MANUAL, 0].mean_coverage)
        self.assertLess(self.reports[BASELINE, 0].mean_coverage, self.reports[RANDOM, 0].mean_coverage)

    def test_baseline_diversity(self):
        rl = [self.reports[RL, seed].diversity for seed in SEEDS]
        baseline = [self.reports[BASELINE, seed].diversity for seed in SEEDS]
        self.assertLessEqual(sum(baseline), sum(rl))

    def test_coverage_ceiling(self):
        ceiling = coverage_ceiling()
        self.assertGreater(ceiling, 0.0)
        for strategy in (MANUAL, RANDOM, RL):
            self.assertGreaterEqual(self.reports[strategy, 0].max_coverage, ceiling - 1e-9)

    def test_monitor_tallies(self):
        tallies = self.reports[RL, 0].tallies
        r1, r2, r3, r4 = REQUIREMENTS
        for requirement in REQUIREMENTS:
            self.assertGreater(tallies.loc[requirement, PASSED] + tallies.loc[requirement, FAILED], 0)
        self.assertEqual(tallies.loc[r2, FAILED], 0)
        self.assertEqual(tallies.loc[r4, FAILED], 0)
        self.assertGreater(tallies.loc[r1, FAILED], 0)
        self.assertGreater(tallies.loc[r3, FAILED], 0)


if __name__ == '__main__':
    unittest.main()
