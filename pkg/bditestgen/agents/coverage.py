
from collections import Counter


class PlanCoverage:
    """ Plan hit counts per agent, derived from a trace. """
    def __init__(self, hits):
        """

        :param hits: agent name -> (plan id -> hit count), holding every plan of the agent
        :type hits: dict
        """
        self.hits = hits

    def covered(self, agent):
        return sorted(plan_id for plan_id, count in self.hits[agent].items() if count > 0)

    def percentage(self, agent):
        """ Fraction of the agent's plans hit at least once.

        :param agent: agent name
        :return: fraction in [0, 1]; 0 for an agent without plans
        :type agent: str
        :rtype: float
        """
        nbplans = len(self.hits[agent])
        if nbplans == 0:
            return 0.0
        return len(self.covered(agent)) / nbplans

    def percentages(self):
        return {agent: self.percentage(agent) for agent in self.hits}

    def merge(self, other):
        """ Sum the hit counts of two coverages over the same MAS. """
        return PlanCoverage({agent: {plan_id: count + other.hits[agent][plan_id]
                                     for plan_id, count in planhits.items()}
                             for agent, planhits in self.hits.items()})

    def __repr__(self):
        return 'PlanCoverage('+', '.join(agent+'='+'%.3f' % pct for agent, pct in self.percentages().items())+')'


def plan_coverage(trace, mas):
    """ Compute the plan coverage of a trace produced by the given MAS.

    :param trace: trace of a run
    :param mas: the MAS that produced the trace
    :return: coverage with a hit count for every plan of every agent
    :type trace: bditestgen.agents.trace.MasTrace
    :type mas: bditestgen.agents.mas.MultiAgentSystem
    :rtype: PlanCoverage
    """
    counter = Counter(trace.plan_ids())
    return PlanCoverage({name: {plan.id: counter[plan.id] for plan in mas.agents[name].plans}
                         for name in mas.order})
