import unittest
import warnings

import bditestgen
from bditestgen.agents import Belief, Goal, BeliefBase, MultiAgentSystem, parse_plans, plan_coverage
from bditestgen.agents.beliefs import add_belief_event
from bditestgen.agents.plans import SEND_BELIEF, EMIT, ADVANCE_TIME
from bditestgen.agents.parser import parse_belief
from bditestgen.agents.trace import FIRED, FAILED, IGNORED
from bditestgen.utils.exceptions import PlanSyntaxException, UnknownAgentException


PINGPONG = """
// two plans for the same trigger: declaration order decides
!start.
+!start : ready <- .emit(first).
+!start : true <- add_time(5); .send(pong, tell, ball); .emit(second).
"""

PONG = """
+ball[source(ping)] : true <- .emit(tell, humanReady); .emit(set_param, gaze, 1).
"""


class TestPlanParser(unittest.TestCase):
    def test_agent_structure(self):
        agent = parse_plans(PINGPONG, 'ping')
        self.assertEqual(len(agent.plans), 2)
        self.assertEqual([p.id for p in agent.plans], ['ping/1', 'ping/2'])
        self.assertEqual(agent.initial_goals, (Goal('start'),))
        self.assertEqual(len(agent.plans[0].context), 1)
        self.assertEqual(len(agent.plans[1].context), 0)

    def test_actions(self):
        body = parse_plans(PINGPONG, 'ping').plans[1].body
        self.assertEqual([a.kind for a in body], [ADVANCE_TIME, SEND_BELIEF, EMIT])
        self.assertEqual(body[0].duration, 5.0)
        self.assertEqual(body[1].target, 'pong')
        self.assertEqual(str(body[1]), '.send(pong, tell, ball)')

    def test_emit_arguments(self):
        body = parse_plans(PONG, 'pong').plans[0].body
        self.assertEqual(body[1].label, 'set_param')
        self.assertEqual(body[1].args, ('gaze', 1))

    def test_belief(self):
        belief = parse_belief('gpl(1,0,1,1)')
        self.assertEqual(belief.functor, 'gpl')
        self.assertEqual(belief.args, (1, 0, 1, 1))
        self.assertEqual(str(belief), 'gpl(1,0,1,1)')

    def test_syntax_error_position(self):
        with self.assertRaises(PlanSyntaxException) as context:
            parse_plans('leg.\n+!go : true <- !next\n', 'bad')
        self.assertEqual(context.exception.line, 3)

        with self.assertRaises(PlanSyntaxException) as context:
            parse_plans('+!go : true <- $oops.', 'bad')
        self.assertEqual(context.exception.line, 1)
        self.assertEqual(context.exception.column, 16)

    def test_nonground_initial_belief(self):
        self.assertRaises(PlanSyntaxException, parse_plans, 'reading(_,1,1).', 'bad')

    def test_empty_body(self):
        self.assertRaises(PlanSyntaxException, parse_plans, '+!go : true <- .', 'bad')


class TestBeliefBase(unittest.TestCase):
    def test_add_remove(self):
        beliefbase = BeliefBase()
        self.assertTrue(beliefbase.add(Belief('reading', (1, 0, 1))))
        self.assertFalse(beliefbase.add(Belief('reading', (1, 0, 1), 'sensors')))
        self.assertTrue(beliefbase.holds(Belief('reading', ('_', 0, '_'))))
        removed = beliefbase.remove(Belief('reading', ('_', '_', '_')))
        self.assertEqual(len(removed), 1)
        self.assertEqual(len(beliefbase), 0)

    def test_snapshot_sorted(self):
        beliefbase = BeliefBase([Belief('b'), Belief('a')])
        self.assertEqual(beliefbase.snapshot(), ('a', 'b'))


class TestEngine(unittest.TestCase):
    def setUp(self):
        self.mas = MultiAgentSystem([parse_plans(PINGPONG, 'ping'), parse_plans(PONG, 'pong')])

    def tearDown(self):
        pass

    def test_first_applicable_plan(self):
        trace = self.mas.run_to_quiescence()
        self.assertEqual(trace.records[0].plan_id, 'ping/2')
        self.assertEqual(trace.elapsed, 5.0)
        self.assertFalse(trace.truncated)
        self.assertTrue(self.mas.quiescent)

    def test_context_after_update(self):
        mas = MultiAgentSystem([parse_plans('ready.\n'+PINGPONG, 'ping'), parse_plans(PONG, 'pong')])
        trace = mas.run_to_quiescence()
        self.assertEqual(trace.plan_ids(), ['ping/1'])
        self.assertEqual(trace.records[0].outcome, IGNORED)

    def test_message_delivery(self):
        trace = self.mas.run_to_quiescence()
        pong = trace.records_of('pong')
        self.assertEqual(len(pong), 1)
        self.assertEqual(pong[0].plan_id, 'pong/1')
        self.assertEqual(pong[0].beliefs, ('ball',))

    def test_duplicate_belief_ignored(self):
        ping = self.mas.agent('ping')
        self.mas.agent('pong').post_event(add_belief_event(Belief('ball', (), 'ping')))
        self.mas.run_to_quiescence()
        records = self.mas.trace.records_of('pong')
        self.assertEqual([r.outcome for r in records], [FIRED, IGNORED])
        self.assertTrue(ping.is_idle)

    def test_failed_goal(self):
        mas = MultiAgentSystem([parse_plans('!nowhere.\n+!elsewhere : true <- .emit(x).', 'lost')])
        trace = mas.run_to_quiescence()
        self.assertEqual([r.outcome for r in trace], [FAILED])

    def test_unknown_target(self):
        mas = MultiAgentSystem([parse_plans('!go.\n+!go : true <- .send(nobody, tell, hello).', 'a')])
        self.assertRaises(UnknownAgentException, mas.run_to_quiescence)

    def test_truncation(self):
        mas = MultiAgentSystem([parse_plans('!loop.\n+!loop : true <- !loop.', 'spinner')])
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter('always')
            trace = mas.run_to_quiescence(50)
        self.assertTrue(trace.truncated)
        self.assertEqual(len(trace), 50)
        self.assertTrue(any('truncated' in str(w.message) for w in caught))

    def test_round_robin(self):
        one = parse_plans('!a.\n!a.\n+!a : true <- .emit(a).', 'one')
        two = parse_plans('!b.\n!b.\n+!b : true <- .emit(b).', 'two')
        trace = MultiAgentSystem([one, two]).run_to_quiescence()
        self.assertEqual([r.agent for r in trace], ['one', 'two', 'one', 'two'])
        self.assertEqual([r.step for r in trace], [1, 2, 3, 4])

    def test_determinism_and_reset(self):
        first = self.mas.copy().run_to_quiescence()
        second = self.mas.copy().run_to_quiescence()
        self.assertEqual(first, second)
        self.mas.run_to_quiescence()
        self.mas.reset()
        self.assertEqual(len(self.mas.trace), 0)
        self.assertEqual(self.mas.run_to_quiescence(), first)

    def test_plan_coverage(self):
        trace = self.mas.run_to_quiescence()
        coverage = plan_coverage(trace, self.mas)
        self.assertAlmostEqual(coverage.percentage('ping'), 0.5)
        self.assertAlmostEqual(coverage.percentage('pong'), 1.0)
        self.assertEqual(coverage.covered('ping'), ['ping/2'])
        merged = coverage.merge(coverage)
        self.assertEqual(merged.hits['pong']['pong/1'], 2)

    def test_package_reexports(self):
        self.assertIs(bditestgen.MultiAgentSystem, MultiAgentSystem)


if __name__ == '__main__':
    unittest.main()
