
from . import beliefs
from . import plans
from . import agent
from . import parser
from . import trace
from . import mas
from . import coverage

from .beliefs import Belief, Goal, TriggerEvent, BeliefBase, WILDCARD
from .beliefs import add_belief_event, delete_belief_event, add_goal_event
from .plans import Action, Literal, Plan
from .agent import Agent
from .parser import parse_plans, load_agent
from .trace import MasTrace, TraceRecord
from .mas import MultiAgentSystem, StepOutcome, post_event, step, run_to_quiescence
from .coverage import PlanCoverage, plan_coverage
