
from . import base
from . import manual
from . import pseudorandom
from . import qlearning

from .base import StrategyResult, SubsetStrategy, MANUAL, RANDOM, LEARNED
from .manual import manual_subsets, ManualStrategy, DEFAULT_MANUAL_PATH
from .pseudorandom import random_subsets, sample_subset, GroupedRandomStrategy
from .qlearning import LearningConfig, QLearner, learn, extract_policy, load_qlearner
from .qlearning import boltzmann_select, boltzmann_probabilities, q_update, coverage_reward, rank_legal
