import os
import shutil
import tempfile
import unittest

import numpy as np
import pandas as pd

from bditestgen.monitors import AssertionOutcome, PASSED, FAILED, NOT_CHECKED, REQUIREMENTS
from bditestgen.monitors import monitor_r1, monitor_r2, monitor_r3, monitor_r4, check_requirements
from bditestgen.monitors import TestResult, aggregate, save_report, load_report
from bditestgen.monitors.outcome import judge, R1, R2, R3, R4
from bditestgen.sim import SimEventLog, NO_FAULTS, run_simulation
from bditestgen.sim.eventlog import SENSOR_READING, LEG_RELEASE, LEG_DISCARD, STATE, HAND_CLOSE, HAND_DISTANCE
from bditestgen.sim.eventlog import JOINT_SPEED
from bditestgen.testgen import AbstractTest, parse_abstract_action, concretize


def reading(eventlog, time, g, p, l):
    eventlog.log(time, SENSOR_READING, g=g, p=p, l=l)


def random_log(rng, nbevents=40):
    eventlog = SimEventLog()
    time = 0.0
    for _ in range(nbevents):
        time += float(rng.choice([0.0, 0.5, 1.0, 3.0, 8.0]))
        kind = rng.integers(7)
        if kind == 0:
            ready = rng.random() < 0.5
            triple = (1, 1, 1) if ready else tuple(int(x) for x in rng.integers(0, 2, size=3))
            reading(eventlog, time, *triple)
        elif kind == 1:
            eventlog.log(time, LEG_RELEASE)
        elif kind == 2:
            eventlog.log(time, LEG_DISCARD)
        elif kind == 3:
            eventlog.log(time, STATE, state=str(rng.choice(['Reset', 'Sensing', 'GrabLeg'])))
        elif kind == 4:
            eventlog.log(time, JOINT_SPEED, speed=float(rng.uniform(0.1, 0.3)))
        elif kind == 5:
            eventlog.log(time, HAND_CLOSE)
        else:
            eventlog.log(time, HAND_DISTANCE, distance=float(rng.uniform(0.0, 0.3)))
    return eventlog


def oracle_r1(eventlog, threshold):
    releases = np.array([r.time for r in eventlog.of_channel(LEG_RELEASE)])
    triggers, violations = 0, []
    for record in eventlog.of_channel(SENSOR_READING):
        if (record.payload['g'], record.payload['p'], record.payload['l']) != (1, 1, 1):
            continue
        triggers += 1
        pos = np.searchsorted(releases, record.time, side='left')
        if pos == len(releases) or releases[pos] > record.time + threshold:
            violations.append(record.time)
    return triggers, violations


def oracle_r2(eventlog):
    records = eventlog.records
    triggers, violations = 0, []
    for i, record in enumerate(records):
        if record.channel != SENSOR_READING:
            continue
        if (record.payload['g'], record.payload['p'], record.payload['l']) == (1, 1, 1):
            continue
        triggers += 1
        for later in records[i + 1:]:
            if later.channel == LEG_DISCARD or (later.channel == STATE and later.payload['state'] == 'Reset'):
                break
            if later.channel == LEG_RELEASE:
                violations.append(record.time)
                break
    return triggers, violations


def oracle_r3(eventlog, safe_distance, window=1.0):
    samples = eventlog.of_channel(HAND_DISTANCE)
    times = np.array([r.time for r in samples])
    distances = np.array([r.payload['distance'] for r in samples])
    triggers, violations = 0, []
    for record in eventlog.of_channel(HAND_CLOSE):
        gaps = np.abs(times - record.time)
        inside = np.flatnonzero(gaps <= window)
        if len(inside) == 0:
            continue
        triggers += 1
        # nearest sample; ties go to the earlier, then to the closer hand
        nearest = inside[np.lexsort((distances[inside], times[inside], gaps[inside]))[0]]
        if distances[nearest] < safe_distance:
            violations.append(record.time)
    return triggers, violations


def expected_verdict(triggers, violations):
    if triggers == 0:
        return NOT_CHECKED
    return FAILED if len(violations) > 0 else PASSED


class TestMonitorExamples(unittest.TestCase):
    def test_r1(self):
        eventlog = SimEventLog()
        reading(eventlog, 37.0, 1, 1, 1)
        eventlog.log(38.5, LEG_RELEASE)
        self.assertEqual(monitor_r1(eventlog).verdict, PASSED)

        late = SimEventLog()
        reading(late, 37.0, 1, 1, 1)
        late.log(48.0, LEG_RELEASE)
        outcome = monitor_r1(late)
        self.assertEqual(outcome.verdict, FAILED)
        self.assertEqual(outcome.first_violation, 37.0)
        self.assertEqual(monitor_r1(late, threshold=12.0).verdict, PASSED)
        self.assertEqual(monitor_r1(SimEventLog()).verdict, NOT_CHECKED)
        self.assertRaises(ValueError, monitor_r1, late, 0.0)

    def test_r2(self):
        eventlog = SimEventLog()
        reading(eventlog, 10.0, 1, 0, 1)
        eventlog.log(12.0, LEG_RELEASE)
        outcome = monitor_r2(eventlog)
        self.assertEqual((outcome.verdict, outcome.first_violation), (FAILED, 10.0))

        cleared = SimEventLog()
        reading(cleared, 10.0, 0, 0, 0)
        cleared.log(10.0, LEG_DISCARD)
        cleared.log(50.0, LEG_RELEASE)
        outcome = monitor_r2(cleared)
        self.assertEqual((outcome.verdict, outcome.triggers), (PASSED, 1))

    def test_r3(self):
        eventlog = SimEventLog()
        eventlog.log(5.0, HAND_DISTANCE, distance=0.05)
        eventlog.log(5.0, HAND_CLOSE)
        self.assertEqual(monitor_r3(eventlog).verdict, FAILED)
        self.assertEqual(monitor_r3(eventlog, safe_distance=0.04).verdict, PASSED)

        tie = SimEventLog()
        tie.log(4.5, HAND_DISTANCE, distance=0.05)
        tie.log(5.0, HAND_CLOSE)
        tie.log(5.5, HAND_DISTANCE, distance=0.5)
        self.assertEqual(monitor_r3(tie).verdict, FAILED)

        outcome = monitor_r3(SimEventLog())
        self.assertEqual((outcome.verdict, outcome.diagnostic), (NOT_CHECKED, 'no hand-close'))

        unsampled = SimEventLog()
        unsampled.log(5.0, HAND_CLOSE)
        unsampled.log(7.0, HAND_DISTANCE, distance=0.01)
        outcome = monitor_r3(unsampled)
        self.assertEqual(outcome.verdict, NOT_CHECKED)
        self.assertEqual(outcome.diagnostic, 'missing distance samples at 1 of 1 hand-closes')

    def test_r4(self):
        eventlog = SimEventLog()
        eventlog.log(1.0, JOINT_SPEED, speed=0.2)
        self.assertEqual(monitor_r4(eventlog).verdict, PASSED)
        eventlog.log(2.0, JOINT_SPEED, speed=0.25)
        outcome = monitor_r4(eventlog)
        self.assertEqual((outcome.verdict, outcome.triggers, outcome.first_violation), (FAILED, 2, 2.0))

    def test_outcome_consistency(self):
        self.assertRaises(ValueError, AssertionOutcome, R1, PASSED, 0)
        self.assertRaises(ValueError, AssertionOutcome, R1, NOT_CHECKED, 2)
        self.assertRaises(ValueError, AssertionOutcome, R1, FAILED, 1)
        self.assertRaises(ValueError, AssertionOutcome, 'R5', PASSED, 1)

    def test_simulated_happy_path(self):
        lines = ['tell leg', 'receivesignal', 'tell humanReady', 'set_param gaze=1',
                 'set_param pressure=1', 'set_param location=1', 'set_param leave=1']
        test = concretize(AbstractTest(tuple(parse_abstract_action(line) for line in lines), trace_id='happy'))
        eventlog, _ = run_simulation(test, NO_FAULTS)
        outcomes = check_requirements(eventlog)
        self.assertEqual([outcomes[r].verdict for r in REQUIREMENTS], [PASSED, NOT_CHECKED, PASSED, PASSED])
        self.assertEqual(outcomes[R3].diagnostic, 'missing distance samples at 1 of 2 hand-closes')


class TestMonitorOracles(unittest.TestCase):
    def test_random_logs(self):
        rng = np.random.default_rng(2024)
        for _ in range(10000):
            eventlog = random_log(rng)

            triggers, violations = oracle_r1(eventlog, 10.0)
            outcome = monitor_r1(eventlog, 10.0)
            self.assertEqual(outcome.triggers, triggers)
            self.assertEqual(outcome.verdict, expected_verdict(triggers, violations))
            self.assertEqual(outcome.first_violation, min(violations) if len(violations) > 0 else None)

            triggers, violations = oracle_r2(eventlog)
            outcome = monitor_r2(eventlog)
            self.assertEqual(outcome.triggers, triggers)
            self.assertEqual(outcome.verdict, expected_verdict(triggers, violations))
            self.assertEqual(outcome.first_violation, min(violations) if len(violations) > 0 else None)

            speeds = [r.payload['speed'] for r in eventlog.of_channel(JOINT_SPEED)]
            outcome = monitor_r4(eventlog)
            self.assertEqual(outcome.verdict,
                             expected_verdict(len(speeds), [s for s in speeds if s >= 0.25]))

            triggers, violations = oracle_r3(eventlog, 0.1)
            outcome = monitor_r3(eventlog, 0.1)
            self.assertEqual(outcome.triggers, triggers)
            self.assertLessEqual(outcome.triggers, eventlog.count(HAND_CLOSE))
            self.assertEqual(outcome.verdict, expected_verdict(triggers, violations))
            self.assertEqual(outcome.first_violation, min(violations) if len(violations) > 0 else None)


def make_result(test_id, coverage, verdicts, strategy='rl'):
    outcomes = {}
    for requirement, verdict in zip(REQUIREMENTS, verdicts):
        if verdict == NOT_CHECKED:
            outcomes[requirement] = judge(requirement, 0, [])
        elif verdict == FAILED:
            outcomes[requirement] = judge(requirement, 2, [3.0])
        else:
            outcomes[requirement] = judge(requirement, 2, [])
    return TestResult(test_id, coverage, outcomes, False, strategy)


class TestReport(unittest.TestCase):
    def setUp(self):
        self.tempdir = tempfile.mkdtemp()
        self.results = [
            make_result('rl-0002', 60.0, [PASSED, NOT_CHECKED, PASSED, PASSED]),
            make_result('rl-0000', 70.0, [FAILED, NOT_CHECKED, PASSED, PASSED]),
            make_result('rl-0001', 60.0, [PASSED, PASSED, NOT_CHECKED, FAILED]),
        ]

    def tearDown(self):
        shutil.rmtree(self.tempdir)

    def test_tallies(self):
        report = aggregate(self.results, 'rl')
        self.assertEqual(list(report.rows['test_id']), ['rl-0000', 'rl-0001', 'rl-0002'])
        tallies = report.tallies
        self.assertEqual(list(tallies.loc[R1]), [2, 1, 0])
        self.assertEqual(list(tallies.loc[R2]), [1, 0, 2])
        self.assertTrue((tallies.sum(axis=1) == len(self.results)).all())
        self.assertEqual(report.diversity, 2)
        self.assertEqual(report.max_coverage, 70.0)
        self.assertEqual(list(report.sorted_coverage), [60.0, 60.0, 70.0])
        self.assertEqual(report.summary()['R4_Failed'], 1)

    def test_additivity(self):
        first = aggregate(self.results[:1], 'rl')
        second = aggregate(self.results[1:], 'rl')
        combined = first + second
        pd.testing.assert_frame_equal(combined.tallies, aggregate(self.results, 'rl').tallies)
        self.assertRaises(ValueError, first.__add__, first)

    def test_empty(self):
        self.assertRaises(ValueError, aggregate, [])

    def test_files(self):
        report = aggregate(self.results, 'rl')
        directory = os.path.join(self.tempdir, 'report')
        save_report(report, directory)
        for filename in ['report.csv', 'assertions.csv', 'coverage_sorted.csv']:
            self.assertTrue(os.path.isfile(os.path.join(directory, filename)))
        loaded = load_report(directory)
        self.assertEqual(loaded.strategy, 'rl')
        pd.testing.assert_frame_equal(loaded.tallies, report.tallies)
        self.assertEqual(loaded.diversity, report.diversity)


if __name__ == '__main__':
    unittest.main()
