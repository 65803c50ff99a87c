
import logging

from joblib import Parallel, delayed


logger = logging.getLogger(__name__)


def textfile_generator(textfile, linebreak=True, encoding=None):
    """ Return a generator that reads lines in a text file.

    :param textfile: file object of a text file
    :param linebreak: whether to return a line break at the end of each line (Default: True)
    :param encoding: encoding of the text file (Default: None)
    :return: a generator that reads lines in a text file
    :type textfile: file
    :type linebreak: bool
    :type encoding: str
    :rtype: generator
    """
    for t in textfile:
        if len(t) > 0:
            if encoding is None:
                yield t.strip() + ('\n' if linebreak else '')
            else:
                yield t.decode(encoding).strip() + ('\n' if linebreak else '')


def strip_comment(line, marker='#'):
    """ Remove a trailing comment from a line.

    :param line: line of text
    :param marker: comment marker (Default: '#')
    :return: the line without comment, stripped
    :type line: str
    :type marker: str
    :rtype: str
    """
    pos = line.find(marker)
    if pos >= 0:
        line = line[:pos]
    return line.strip()


def read_keyvalue_file(filepath):
    """ Read a configuration file made of `key = value` lines.

    Empty lines and `#` comments are skipped. Values are returned as strings.

    :param filepath: path of the configuration file
    :return: dictionary of the entries, in file order
    :raise: ValueError
    :type filepath: str
    :rtype: dict
    """
    entries = {}
    with open(filepath, 'r') as f:
        for lineno, line in enumerate(textfile_generator(f, linebreak=False), start=1):
            line = strip_comment(line)
            if len(line) == 0:
                continue
            if '=' not in line:
                raise ValueError('Line '+str(lineno)+' of '+filepath+' is not of the form key = value')
            key, value = line.split('=', 1)
            entries[key.strip()] = value.strip()
    return entries


def parse_interval(text):
    """ Parse an interval written as two comma-separated numbers.

    :param text: e.g. "1.0, 12.0"
    :return: (low, high)
    :type text: str
    :rtype: tuple
    """
    low, high = [float(x) for x in text.split(',')]
    return low, high


class SinglePoolExecutor:
    """ It is a wrapper for Python `map` functions.

    """
    def map(self, func, *iterables):
        """ Refer to Python `map` documentation.

        :param func: function
        :param iterables: iterables to loop
        :return: list of the results
        :type func: function
        :type iterables: iterables
        :rtype: list
        """
        return list(map(func, *iterables))


class JoblibExecutor:
    """ Executor that fans the calls out over `joblib` workers.

    Results come back in the order of the inputs.
    """
    def __init__(self, n_jobs=-1, backend='loky'):
        """

        :param n_jobs: number of workers (Default: -1, all cores)
        :param backend: joblib backend (Default: 'loky')
        :type n_jobs: int
        :type backend: str
        """
        self.n_jobs = n_jobs
        self.backend = backend

    def map(self, func, *iterables):
        """ Apply `func` on the zipped iterables in parallel.

        :param func: function, must be picklable
        :param iterables: iterables to loop
        :return: list of the results
        :type func: function
        :type iterables: iterables
        :rtype: list
        """
        arguments = list(zip(*iterables))
        logger.info('Dispatching %d jobs to %s workers', len(arguments), self.n_jobs)
        return Parallel(n_jobs=self.n_jobs, backend=self.backend)(delayed(func)(*args) for args in arguments)


def get_executor(n_jobs):
    """ Return the executor for the given number of workers.

    :param n_jobs: number of workers; 1 runs in-process
    :return: executor with a `map` method
    :type n_jobs: int
    :rtype: SinglePoolExecutor or JoblibExecutor
    """
    if n_jobs == 1:
        return SinglePoolExecutor()
    return JoblibExecutor(n_jobs=n_jobs)
