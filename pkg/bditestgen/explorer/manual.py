
import os
import logging
import warnings

from .base import StrategyResult, SubsetStrategy, MANUAL
from ..scenario.subsets import parse_subset, validate_subset
from ..scenario.vocabulary import ASSET_DIR
from ..utils.misc import textfile_generator, strip_comment
from ..utils.exceptions import UnknownBeliefException, InvalidBeliefSubsetException


logger = logging.getLogger(__name__)

DEFAULT_MANUAL_PATH = os.path.join(ASSET_DIR, 'manual_subsets.txt')


def manual_subsets(filepath=DEFAULT_MANUAL_PATH, vocab=None):
    """ Read hand-written belief subsets, one per line, belief names separated by commas.

    Lines starting with `#` and empty lines are skipped. Entries naming an unknown
    belief or violating the structural constraints are skipped with a warning.

    :param filepath: path of the subset file (Default: the bundled hand-picked subsets)
    :param vocab: vocabulary (Default: the scenario vocabulary)
    :return: valid subsets in file order
    :type filepath: str
    :rtype: StrategyResult
    """
    subsets = []
    with open(filepath, 'r') as f:
        for lineno, line in enumerate(textfile_generator(f, linebreak=False), start=1):
            line = strip_comment(line)
            if len(line) == 0:
                continue
            try:
                subset = parse_subset(line, vocab)
                validate_subset(subset, vocab)
            except (UnknownBeliefException, InvalidBeliefSubsetException) as e:
                warnings.warn('Line '+str(lineno)+' of '+filepath+' skipped: '+e.message)
                continue
            subsets.append(subset)

    if len(subsets) == 0:
        warnings.warn('No belief subset found in '+filepath)
    logger.info('Read %d manual subsets from %s', len(subsets), filepath)
    return StrategyResult(subsets, [MANUAL] * len(subsets))


class ManualStrategy(SubsetStrategy):
    """ Subsets specified by hand in a configuration file. """
    name = 'manual'

    def __init__(self, filepath=DEFAULT_MANUAL_PATH):
        self.filepath = filepath

    def generate(self):
        return manual_subsets(self.filepath)
