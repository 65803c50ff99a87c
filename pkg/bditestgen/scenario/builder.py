
import os
from functools import lru_cache

from ..agents.agent import Agent
from ..agents.beliefs import Belief, Goal, TriggerEvent, ADD
from ..agents.plans import Plan, send_belief
from ..agents.mas import MultiAgentSystem, DEFAULT_STEP_BUDGET
from ..agents.parser import load_agent
from ..agents.coverage import plan_coverage
from .vocabulary import ASSET_DIR, vocabulary
from .subsets import validate_subset, is_prefix_legal
from ..utils.exceptions import InvalidBeliefSubsetException


META = 'meta'
HUMAN = 'human'
SENSORS = 'sensors'
ROBOT = 'robot'

AGENT_FILES = ((HUMAN, 'human.asl'), (SENSORS, 'sensors.asl'), (ROBOT, 'robot.asl'))

START_BELIEF = Belief('start')
SEED_GOAL = 'seed'


@lru_cache(maxsize=8)
def _template(asset_dir):
    agents = [Agent(META)]
    for name, filename in AGENT_FILES:
        agents.append(load_agent(os.path.join(asset_dir, filename), name))
    return MultiAgentSystem(agents)


def build_mas(asset_dir=None):
    """ Build the multi-agent model of the table-assembly task.

    Agents, in scheduling order: the meta verification agent (no plans until
    seeded), the human (48 plans), the sensor relay and the robot code (12 plans).

    :param asset_dir: directory holding human.asl, sensors.asl and robot.asl (Default: bundled assets)
    :return: fresh multi-agent system
    :type asset_dir: str
    :rtype: bditestgen.agents.mas.MultiAgentSystem
    """
    asset_dir = ASSET_DIR if asset_dir is None else asset_dir
    return _template(os.path.abspath(asset_dir)).copy()


def seed_mas(mas, subset, partial=False, vocab=None):
    """ Install the meta agent's tell-messages for a belief subset.

    The meta agent tells the human every belief of the subset in order, then `start`.

    :param mas: multi-agent system built by :func:`build_mas`
    :param subset: belief subset
    :param partial: accept an incomplete subset built in episode order (Default: False)
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: a new, seeded multi-agent system
    :raise: InvalidBeliefSubsetException
    :type mas: bditestgen.agents.mas.MultiAgentSystem
    :type subset: bditestgen.scenario.subsets.BeliefSubset
    :type partial: bool
    :rtype: bditestgen.agents.mas.MultiAgentSystem
    """
    vocab = vocabulary() if vocab is None else vocab
    if partial:
        if not is_prefix_legal(subset, vocab):
            raise InvalidBeliefSubsetException('beliefs out of episode order')
    else:
        validate_subset(subset, vocab)

    body = [send_belief(HUMAN, belief) for belief in subset.beliefs(vocab)]
    body.append(send_belief(HUMAN, START_BELIEF))
    plan = Plan(META+'/1', TriggerEvent(ADD, Goal(SEED_GOAL)), (), tuple(body))
    meta = Agent(META, initial_goals=[Goal(SEED_GOAL)], plans=[plan])
    return mas.replace_agent(meta)


def run_subset(subset, partial=False, step_budget=DEFAULT_STEP_BUDGET, asset_dir=None):
    """ Seed a fresh MAS with the subset and run it to quiescence.

    :param subset: belief subset
    :param partial: accept an incomplete subset (Default: False)
    :param step_budget: step budget of the run (Default: 20000)
    :param asset_dir: agent asset directory (Default: bundled assets)
    :return: the seeded MAS, its trace and plan coverage
    :type subset: bditestgen.scenario.subsets.BeliefSubset
    :rtype: tuple
    """
    mas = seed_mas(build_mas(asset_dir), subset, partial=partial)
    trace = mas.run_to_quiescence(step_budget)
    return mas, trace, plan_coverage(trace, mas)
