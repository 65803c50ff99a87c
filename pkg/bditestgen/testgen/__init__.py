
from . import abstract
from . import ranges
from . import concrete

from .abstract import AbstractAction, AbstractTest, COMMAND_ALPHABET
from .abstract import trace_to_abstract, parse_abstract_action, save_abstract_test, load_abstract_test
from .ranges import ParamRange, ParamRangeTable, load_range_table, default_range_table
from .concrete import TimedStimulus, ConcreteTest, concretize, expand, derive_seeds
from .concrete import save_concrete_test, load_concrete_test
