
from . import vocabulary
from . import subsets
from . import builder

from .vocabulary import BeliefVocabulary, SensorTriple, load_vocabulary
from .vocabulary import vocabulary as get_vocabulary
from .subsets import BeliefSubset, validate_subset, is_valid, legal_mask, next_group
from .subsets import enumerate_valid_subsets, count_valid_subsets, parse_subset, format_subset
from .builder import build_mas, seed_mas, run_subset, META, HUMAN, SENSORS, ROBOT
