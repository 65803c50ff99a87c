
from . import config
from . import baseline
from . import runner
from . import console

from .config import CampaignConfig, STRATEGIES
from .baseline import baseline_abstract_tests
from .runner import run_campaign, compare, generate_suite, simulate_suite, report_suite, load_suite
