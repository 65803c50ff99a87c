
import logging
import warnings
from dataclasses import dataclass

from .beliefs import ADD, add_belief_event, delete_belief_event, add_goal_event
from .plans import ADD_BELIEF, REMOVE_BELIEF, CREATE_GOAL, SEND_BELIEF, ADVANCE_TIME, PRINT
from .trace import MasTrace, TraceRecord, FIRED, FAILED, IGNORED
from ..utils.exceptions import UnknownAgentException


logger = logging.getLogger(__name__)

DEFAULT_STEP_BUDGET = 20000


@dataclass(frozen=True)
class StepOutcome:
    record: TraceRecord
    quiescent: bool


class MultiAgentSystem:
    """ A set of agents stepped in deterministic round-robin order.

    Each step takes the next event of the next agent with a non-empty queue,
    selects the first applicable plan and runs its body to completion.
    """
    def __init__(self, agents):
        """

        :param agents: agents in scheduling order; names must be unique
        :type agents: list
        """
        self.agents = {}
        for agent in agents:
            if agent.name in self.agents:
                raise ValueError('Duplicate agent name: '+agent.name)
            self.agents[agent.name] = agent
        self.order = [agent.name for agent in agents]
        self.trace = MasTrace()
        self._cursor = 0
        self._stepcount = 0

    def agent(self, name):
        try:
            return self.agents[name]
        except KeyError:
            raise UnknownAgentException(name)

    def copy(self):
        """ Return an independent MAS with the same plan libraries, in its initial state. """
        return MultiAgentSystem([self.agents[name].fresh() for name in self.order])

    def replace_agent(self, agent):
        """ Return a copy of this MAS where the agent of the same name is replaced. """
        if agent.name not in self.agents:
            raise UnknownAgentException(agent.name)
        return MultiAgentSystem([agent if name == agent.name else self.agents[name].fresh()
                                 for name in self.order])

    def reset(self):
        for agent in self.agents.values():
            agent.reset()
        self.trace = MasTrace()
        self._cursor = 0
        self._stepcount = 0

    @property
    def quiescent(self):
        return all(agent.is_idle for agent in self.agents.values())

    def _next_agent(self):
        nbagents = len(self.order)
        for offset in range(nbagents):
            idx = (self._cursor + offset) % nbagents
            agent = self.agents[self.order[idx]]
            if not agent.is_idle:
                self._cursor = (idx + 1) % nbagents
                return agent
        return None

    def _execute(self, agent, action):
        if action.kind == ADD_BELIEF:
            agent.post_event(add_belief_event(action.belief))
        elif action.kind == REMOVE_BELIEF:
            agent.post_event(delete_belief_event(action.belief))
        elif action.kind == CREATE_GOAL:
            agent.post_event(add_goal_event(action.goal))
        elif action.kind == SEND_BELIEF:
            if action.target not in self.agents:
                raise UnknownAgentException(action.target)
            self.agents[action.target].post_event(add_belief_event(action.belief.with_source(agent.name)))
        elif action.kind == ADVANCE_TIME:
            self.trace.elapsed += action.duration
        elif action.kind == PRINT:
            logger.debug('[%s] %s', agent.name, action.text)

    def step(self):
        """ Process one event of the next agent in round-robin order.

        :return: outcome holding the appended trace record
        :raise: UnknownAgentException (send to an agent that does not exist)
        :rtype: StepOutcome
        """
        agent = self._next_agent()
        if agent is None:
            raise ValueError('No agent has a pending event')
        event = agent.queue.popleft()
        self._stepcount += 1

        changed = True
        if not event.is_goal:
            if event.polarity == ADD:
                changed = agent.beliefbase.add(event.payload)
            else:
                changed = len(agent.beliefbase.remove(event.payload)) > 0

        plan = agent.select_plan(event) if changed else None
        if plan is None:
            outcome = FAILED if event.is_goal else IGNORED
            if event.is_goal:
                logger.debug('[%s] no applicable plan for %s', agent.name, event)
            actions = ()
        else:
            outcome = FIRED
            for action in plan.body:
                self._execute(agent, action)
            actions = plan.body

        record = TraceRecord(self._stepcount, agent.name, None if plan is None else plan.id,
                             event, actions, outcome, agent.beliefbase.snapshot())
        self.trace.append(record)
        return StepOutcome(record, self.quiescent)

    def run_to_quiescence(self, step_budget=DEFAULT_STEP_BUDGET):
        """ Step until every queue is empty or the budget is spent.

        :param step_budget: maximum number of steps (Default: 20000)
        :return: the trace of the run, flagged truncated when the budget ran out
        :type step_budget: int
        :rtype: MasTrace
        """
        if step_budget <= 0:
            raise ValueError('step budget must be positive')
        nbsteps = 0
        while not self.quiescent:
            if nbsteps >= step_budget:
                self.trace.truncated = True
                warnings.warn('MAS run truncated after '+str(step_budget)+' steps; the model may livelock.')
                break
            self.step()
            nbsteps += 1
        return self.trace

    def __repr__(self):
        return 'MultiAgentSystem('+', '.join(repr(self.agents[n]) for n in self.order)+')'


def post_event(agent, event):
    """ Append an event to the agent's queue.

    :param agent: agent
    :param event: trigger event
    :type agent: bditestgen.agents.agent.Agent
    :type event: bditestgen.agents.beliefs.TriggerEvent
    """
    agent.post_event(event)


def step(mas):
    return mas.step()


def run_to_quiescence(mas, step_budget=DEFAULT_STEP_BUDGET):
    return mas.run_to_quiescence(step_budget)
