import os
import shutil
import tempfile
import unittest

from bditestgen.campaign import CampaignConfig, baseline_abstract_tests, run_campaign, compare
from bditestgen.campaign import generate_suite, simulate_suite, report_suite, load_suite
from bditestgen.campaign.config import BASELINE, MANUAL, RANDOM
from bditestgen.campaign.console import main
from bditestgen.campaign.runner import concretize_suite, artifact_dir
from bditestgen.monitors import REQUIREMENTS, load_report
from bditestgen.testgen import COMMAND_ALPHABET, default_range_table
from bditestgen.utils.exceptions import CampaignStageException


class TestBaseline(unittest.TestCase):
    def test_sampling(self):
        tests = baseline_abstract_tests(20, 4)
        self.assertEqual([t.trace_id for t in tests[:2]], ['baseline-0000', 'baseline-0001'])
        self.assertTrue(all(1 <= len(t) <= 12 for t in tests))
        self.assertTrue(all(action in COMMAND_ALPHABET for t in tests for action in t.actions))
        self.assertEqual([t.lines() for t in tests], [t.lines() for t in baseline_abstract_tests(20, 4)])
        self.assertRaises(ValueError, baseline_abstract_tests, 0, 4)


class TestCampaignConfig(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def test_validation(self):
        self.assertRaises(ValueError, CampaignConfig, strategy='exhaustive')
        self.assertRaises(ValueError, CampaignConfig, suite_size=0)
        self.assertRaises(ValueError, CampaignConfig, faults_path=os.path.join(self.tempdir, 'missing.cfg'))

    def test_file(self):
        path = os.path.join(self.tempdir, 'campaign.cfg')
        with open(path, 'w') as f:
            f.write('strategy = random\nsuite_size = 12\nwall_limit = 200\n')
        config = CampaignConfig.from_file(path)
        self.assertEqual(config.strategy, RANDOM)
        self.assertEqual(config.suite_size, 12)
        self.assertEqual(config.wall_limit, 200.0)
        self.assertEqual(CampaignConfig.from_dict(config.to_dict()), config)


class TestConcretizeSuite(unittest.TestCase):
    def test_round_robin_fill(self):
        tests = baseline_abstract_tests(2, 0)
        suite = concretize_suite(tests, default_range_table(), 5, 1, 0)
        self.assertEqual([c.test_id for _, c in suite],
                         ['baseline-0000-c0', 'baseline-0001-c0', 'baseline-0000-c1',
                          'baseline-0001-c1', 'baseline-0000-c2'])
        self.assertRaises(CampaignStageException, concretize_suite, [], default_range_table(), 5, 1, 0)


class TestCampaign(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def test_random_campaign(self):
        output = os.path.join(self.tempdir, 'random')
        config = CampaignConfig(strategy=RANDOM, suite_size=3, seed=1, output_dir=output)
        report = run_campaign(config)
        self.assertEqual(len(report), 3)
        self.assertTrue((report.tallies.sum(axis=1) == 3).all())
        self.assertTrue(os.path.isfile(os.path.join(output, 'subsets.txt')))
        for test_id in ['random-0000', 'random-0001', 'random-0002']:
            directory = artifact_dir(output, test_id)
            for filename in ['abstract.txt', 'concrete.jsonl', 'events.csv', 'coverage.csv']:
                self.assertTrue(os.path.isfile(os.path.join(directory, filename)))
        self.assertGreater(report.max_coverage, 0.0)

    def test_stages_reproduce_campaign(self):
        whole = CampaignConfig(strategy=BASELINE, suite_size=2, seed=3, output_dir=os.path.join(self.tempdir, 'a'))
        staged = CampaignConfig(strategy=BASELINE, suite_size=2, seed=3, output_dir=os.path.join(self.tempdir, 'b'))
        first = run_campaign(whole)
        generate_suite(staged)
        simulate_suite(staged, load_suite(staged.output_dir))
        second = report_suite(staged)
        self.assertTrue(first.rows.equals(second.rows))

        table = compare(first, second)
        self.assertEqual(list(table['delta_max_coverage']), [0.0, 0.0])
        self.assertEqual(list(table['delta_diversity']), [0, 0])
        self.assertRaises(ValueError, compare, first)

    def test_manual_campaign(self):
        path = os.path.join(self.tempdir, 'manual.txt')
        with open(path, 'w') as f:
            f.write('legs_requested(1), not_bored, gpl(1,1,1,1)\n')
        output = os.path.join(self.tempdir, 'manual')
        report = run_campaign(CampaignConfig(strategy=MANUAL, manual_path=path, suite_size=2,
                                             concretizations=2, output_dir=output))
        self.assertEqual(list(report.rows['test_id']), ['manual-0000-c0', 'manual-0000-c1'])
        loaded = load_report(os.path.join(output, 'report'))
        self.assertEqual(loaded.strategy, MANUAL)
        self.assertEqual(list(loaded.tallies.index), list(REQUIREMENTS))

    def test_bundled_manual_subsets(self):
        config = CampaignConfig(strategy=MANUAL, suite_size=100, concretizations=5, output_dir=self.tempdir)
        self.assertIsNone(config.manual_path)
        suite = generate_suite(config)
        self.assertEqual(len(suite), 100)
        abstract_ids = [abstract.trace_id for abstract, _ in suite]
        self.assertEqual(len(set(abstract_ids)), 20)
        self.assertTrue(all(abstract_ids.count(trace_id) == 5 for trace_id in set(abstract_ids)))
        self.assertEqual(suite[20][1].test_id, 'manual-0000-c1')


class TestConsole(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.mkdtemp()

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def test_campaign_verb(self):
        output = os.path.join(self.tempdir, 'out')
        code = main(['campaign', '--strategy', BASELINE, '--suite-size', '2', '--output', output])
        self.assertEqual(code, 0)
        self.assertTrue(os.path.isfile(os.path.join(output, 'report', 'report.csv')))
        self.assertEqual(main(['compare', os.path.join(output, 'report'), os.path.join(output, 'report')]), 0)

    def test_error_exit_code(self):
        self.assertEqual(main(['generate', '--strategy', MANUAL, '--manual', os.path.join(self.tempdir, 'missing.txt'),
                               '--output', self.tempdir]), 1)
        self.assertEqual(main(['compare', os.path.join(self.tempdir, 'nowhere')]), 1)

    def test_bad_arguments(self):
        with self.assertRaises(SystemExit):
            main(['generate', '--strategy', 'exhaustive'])


if __name__ == '__main__':
    unittest.main()
