import unittest

import numpy as np

from bditestgen.scenario import build_mas, seed_mas, run_subset, get_vocabulary, BeliefSubset
from bditestgen.scenario import validate_subset, is_valid, legal_mask, parse_subset, format_subset
from bditestgen.scenario import enumerate_valid_subsets, count_valid_subsets, META, HUMAN, SENSORS, ROBOT
from bditestgen.scenario.subsets import is_complete, is_prefix_legal
from bditestgen.scenario.vocabulary import SensorTriple, LEGS_GROUP, BOREDOM_GROUP
from bditestgen.utils.exceptions import InvalidBeliefSubsetException, UnknownBeliefException


def subset_of(line):
    return parse_subset(line)


class TestVocabulary(unittest.TestCase):
    def setUp(self):
        self.vocab = get_vocabulary()

    def test_size_and_groups(self):
        self.assertEqual(len(self.vocab), 38)
        sizes = self.vocab.group_sizes()
        self.assertEqual(sizes[LEGS_GROUP], 4)
        self.assertEqual(sizes[BOREDOM_GROUP], 2)
        for leg in range(1, 5):
            self.assertEqual(sizes['gpl_leg'+str(leg)], 8)

    def test_indexing(self):
        self.assertEqual(self.vocab.index('legs_requested(1)'), 0)
        self.assertEqual(self.vocab.index('not_bored'), 5)
        self.assertEqual(self.vocab.index('gpl(1,1,1,1)'), 13)
        self.assertEqual(self.vocab.gpl_index(2, (0, 0, 0)), 14)
        self.assertEqual(self.vocab.triple_of(13), SensorTriple(1, 1, 1))
        self.assertRaises(UnknownBeliefException, self.vocab.index, 'gpl(5,1,1,1)')

    def test_sensor_triple(self):
        self.assertTrue(SensorTriple(1, 1, 1).ready)
        self.assertFalse(SensorTriple(1, 0, 1).ready)
        self.assertRaises(ValueError, SensorTriple, 2, 0, 0)


class TestSubsets(unittest.TestCase):
    def test_validation(self):
        validate_subset(subset_of('legs_requested(2), bored, gpl(1,0,0,0), gpl(2,1,1,1)'))
        self.assertFalse(is_valid(subset_of('legs_requested(2), bored, gpl(1,0,0,0)')))
        self.assertFalse(is_valid(subset_of('legs_requested(1), bored, not_bored, gpl(1,0,0,0)')))
        self.assertFalse(is_valid(subset_of('legs_requested(1), legs_requested(2), bored, gpl(1,0,0,0)')))
        with self.assertRaises(InvalidBeliefSubsetException):
            validate_subset(subset_of('legs_requested(1), bored, gpl(1,0,0,0), gpl(2,0,0,0)'))

    def test_counts(self):
        self.assertEqual(count_valid_subsets(), 2 * (8 + 64 + 512 + 4096))
        self.assertEqual(len(list(enumerate_valid_subsets(max_legs=1))), 16)
        self.assertEqual(len(list(enumerate_valid_subsets(legs=2))), 128)
        for subset in enumerate_valid_subsets(max_legs=2):
            self.assertTrue(is_valid(subset))

    def test_mask_follows_episode_order(self):
        vocab = get_vocabulary()
        mask = legal_mask(BeliefSubset(()))
        self.assertEqual(list(np.flatnonzero(mask)), vocab.group_indices(LEGS_GROUP))
        mask = legal_mask(BeliefSubset((1,)))
        self.assertEqual(list(np.flatnonzero(mask)), [4, 5])
        mask = legal_mask(BeliefSubset((1, 5, 13)))
        self.assertEqual(list(np.flatnonzero(mask)), list(range(14, 22)))
        complete = BeliefSubset((0, 5, 13))
        self.assertTrue(is_complete(complete))
        self.assertFalse(legal_mask(complete).any())
        self.assertTrue(is_prefix_legal(BeliefSubset((3, 4))))
        self.assertFalse(is_prefix_legal(BeliefSubset((4, 3))))

    def test_text_format(self):
        line = 'legs_requested(1), not_bored, gpl(1,1,0,1)'
        subset = subset_of(line)
        self.assertEqual(subset.indices, (0, 5, 11))
        self.assertEqual(format_subset(subset), line)
        self.assertEqual(subset.canonical(), subset_of('not_bored, gpl(1,1,0,1), legs_requested(1)').canonical())


class TestScenarioModel(unittest.TestCase):
    def test_plan_inventory(self):
        mas = build_mas()
        self.assertEqual(mas.order, [META, HUMAN, SENSORS, ROBOT])
        self.assertEqual(len(mas.agent(META).plans), 0)
        self.assertEqual(len(mas.agent(HUMAN).plans), 48)
        self.assertEqual(len(mas.agent(SENSORS).plans), 3)
        self.assertEqual(len(mas.agent(ROBOT).plans), 12)

    def test_seeding(self):
        subset = subset_of('legs_requested(1), not_bored, gpl(1,1,1,1)')
        mas = seed_mas(build_mas(), subset)
        self.assertEqual(len(mas.agent(META).plans), 1)
        self.assertEqual(len(mas.agent(META).plans[0].body), 4)
        self.assertRaises(InvalidBeliefSubsetException, seed_mas, build_mas(), BeliefSubset((0, 5)))
        self.assertRaises(InvalidBeliefSubsetException, seed_mas, build_mas(), BeliefSubset((5, 0)), True)

    def test_release_run(self):
        _, trace, coverage = run_subset(subset_of('legs_requested(1), not_bored, gpl(1,1,1,1)'))
        self.assertFalse(trace.truncated)
        robot = coverage.covered(ROBOT)
        for plan_id in ['robot/1', 'robot/3', 'robot/4', 'robot/5', 'robot/6', 'robot/7', 'robot/11']:
            self.assertIn(plan_id, robot)
        self.assertNotIn('robot/12', robot)
        human = coverage.covered(HUMAN)
        for plan_id in ['human/1', 'human/3', 'human/4', 'human/13', 'human/39', 'human/41', 'human/48']:
            self.assertIn(plan_id, human)

    def test_discard_run(self):
        _, _, coverage = run_subset(subset_of('legs_requested(1), not_bored, gpl(1,1,0,1)'))
        robot = coverage.covered(ROBOT)
        self.assertIn('robot/8', robot)
        self.assertIn('robot/12', robot)
        self.assertNotIn('robot/11', robot)

    def test_bored_run(self):
        _, trace, coverage = run_subset(subset_of('legs_requested(1), bored, gpl(1,1,1,1)'))
        self.assertIn('human/5', coverage.covered(HUMAN))
        self.assertIn('robot/9', coverage.covered(ROBOT))
        self.assertGreaterEqual(trace.elapsed, 60.0)

    def test_four_legs(self):
        line = 'legs_requested(4), not_bored, gpl(1,1,1,1), gpl(2,0,0,0), gpl(3,1,1,1), gpl(4,0,1,1)'
        _, trace, coverage = run_subset(subset_of(line))
        self.assertFalse(trace.truncated)
        self.assertIn('human/47', coverage.covered(HUMAN))
        self.assertEqual(trace.plan_ids().count('robot/11'), 2)
        self.assertEqual(trace.plan_ids().count('robot/12'), 2)

    def test_partial_subset_terminates(self):
        for indices in [(1,), (1, 5), (2, 5, 13)]:
            _, trace, coverage = run_subset(BeliefSubset(indices), partial=True)
            self.assertFalse(trace.truncated)
            self.assertIn('human/38', coverage.covered(HUMAN))

    def test_determinism(self):
        subset = subset_of('legs_requested(2), not_bored, gpl(1,1,1,1), gpl(2,1,0,0)')
        self.assertEqual(run_subset(subset)[1], run_subset(subset)[1])


if __name__ == '__main__':
    unittest.main()
