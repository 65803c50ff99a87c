
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd

from ..scenario.subsets import format_subset
from ..utils.exceptions import NotImplementedException


MANUAL = 'manual'
RANDOM = 'random'
LEARNED = 'learned'


@dataclass
class StrategyResult:
    """ Belief subsets chosen by an exploration strategy.

    `diagnostics` holds the per-iteration learning curve (columns
    iteration, max_delta_q, reward) for the learning strategy.
    """
    subsets: List = field(default_factory=list)
    provenance: List[str] = field(default_factory=list)
    diagnostics: Optional[pd.DataFrame] = None
    converged: Optional[bool] = None

    def __post_init__(self):
        if len(self.subsets) != len(self.provenance):
            raise ValueError('One provenance entry per subset is required')

    @property
    def unconverged(self):
        return self.converged is False

    def __len__(self):
        return len(self.subsets)

    def lines(self):
        return [format_subset(subset) for subset in self.subsets]

    def save_subsets(self, filepath):
        """ Write the subsets in the manual-subset file format, one per line. """
        with open(filepath, 'w') as f:
            for line in self.lines():
                f.write(line+'\n')

    def save_diagnostics(self, filepath):
        if self.diagnostics is None:
            raise ValueError('No learning diagnostics to save')
        self.diagnostics.to_csv(filepath, index=False, float_format='%.10g')


class SubsetStrategy(ABC):
    """ Base class for belief-subset selection strategies.

    This class is not implemented; this is an "abstract class."

    """
    name = None

    @abstractmethod
    def generate(self):
        """ Produce the belief subsets.

        :return: subsets with provenance
        :rtype: StrategyResult
        """
        raise NotImplementedException()
