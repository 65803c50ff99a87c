
from . import misc
from . import exceptions
from . import compactmodel_io

from .misc import textfile_generator, read_keyvalue_file, get_executor
from .compactmodel_io import CompactIOMachine, get_model_name
