
from collections import deque

from .beliefs import BeliefBase, add_belief_event, add_goal_event


class Agent:
    """ A BDI agent: initial beliefs and goals, an ordered plan library,
    a belief base and a FIFO queue of trigger events.

    """
    def __init__(self, name, initial_beliefs=(), initial_goals=(), plans=()):
        """

        :param name: agent name
        :param initial_beliefs: initial beliefs
        :param initial_goals: initial goals, duplicates are kept
        :param plans: plans in declaration order
        :type name: str
        :type initial_beliefs: list
        :type initial_goals: list
        :type plans: list
        """
        self.name = name
        self.initial_beliefs = tuple(initial_beliefs)
        self.initial_goals = tuple(initial_goals)
        self.plans = tuple(plans)
        self.plan_index = {}
        for plan in self.plans:
            if plan.id in self.plan_index:
                raise ValueError('Duplicate plan id: '+plan.id)
            self.plan_index[plan.id] = plan
        self.reset()

    def reset(self):
        """ Restore the initial belief base and queue the initial events.

        Initial beliefs post belief-addition events, followed by the initial goals.
        """
        self.beliefbase = BeliefBase()
        self.queue = deque()
        for belief in self.initial_beliefs:
            self.queue.append(add_belief_event(belief))
        for goal in self.initial_goals:
            self.queue.append(add_goal_event(goal))

    def fresh(self):
        """ Return an independent copy of this agent in its initial state. """
        return Agent(self.name, self.initial_beliefs, self.initial_goals, self.plans)

    def post_event(self, event):
        self.queue.append(event)

    def plan(self, plan_id):
        return self.plan_index[plan_id]

    def select_plan(self, event):
        """ Select the first plan, in declaration order, that is relevant and applicable.

        :param event: trigger event
        :return: the plan, or None
        :type event: bditestgen.agents.beliefs.TriggerEvent
        :rtype: bditestgen.agents.plans.Plan
        """
        for plan in self.plans:
            if plan.is_applicable(event, self.beliefbase):
                return plan
        return None

    @property
    def is_idle(self):
        return len(self.queue) == 0

    def __repr__(self):
        return 'Agent('+self.name+', '+str(len(self.plans))+' plans)'
