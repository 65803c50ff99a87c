
from . import utils
from . import agents
from . import scenario
from . import explorer
from . import testgen
from . import sim
from . import monitors
from . import campaign

from .agents import parse_plans, load_agent, MultiAgentSystem
from .scenario import build_mas, seed_mas, run_subset
from .explorer import learn, load_qlearner
from .testgen import trace_to_abstract, concretize, expand
from .sim import run_simulation
from .campaign import run_campaign, compare, CampaignConfig
