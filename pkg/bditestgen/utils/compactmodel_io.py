"""
Single-file persistence of learned models.

A model writes its state as several files sharing a prefix (a table, its
configuration, a learning curve). A compact model file is a zip archive of
these files plus `manifest.json`, which names the model kind and the members.

::

    qlearner.bin
    ├── manifest.json        {"model": "qlearner", "format": 1, "members": [...]}
    ├── qlearner_qtable.npy
    ├── qlearner_config.json
    └── qlearner_diagnostics.csv
"""

import os
import json
import zipfile
from tempfile import TemporaryDirectory

from . import exceptions as e


MANIFEST = 'manifest.json'
FORMAT_VERSION = 1


def read_manifest(filename):
    """ Return the manifest of a compact model file.

    :param filename: path of the compact model file
    :return: manifest, with at least the keys `model`, `format` and `members`
    :raise: IncorrectModelFileException when the archive has no manifest
    :type filename: str
    :rtype: dict
    """
    with zipfile.ZipFile(filename, mode='r') as archive:
        if MANIFEST not in archive.namelist():
            raise e.IncorrectModelFileException('a compact model', os.path.basename(filename))
        return json.loads(archive.read(MANIFEST).decode('utf-8'))


def save_compact_model(filename, savefunc, prefix, suffices, model_name, extra=None):
    """ Run `savefunc` in a scratch directory and zip the files it wrote.

    :param filename: path of the compact model file
    :param savefunc: callable taking the file prefix
    :param prefix: prefix of the member names
    :param suffices: suffices of the member names
    :param model_name: kind of model, checked on loading
    :param extra: further manifest entries (Default: None)
    :type filename: str
    :type savefunc: function
    :type prefix: str
    :type suffices: list
    :type model_name: str
    :type extra: dict
    """
    members = [prefix+suffix for suffix in suffices]
    manifest = dict(extra or {}, model=model_name, format=FORMAT_VERSION, members=members)
    with TemporaryDirectory() as tempdir:
        savefunc(os.path.join(tempdir, prefix))
        with zipfile.ZipFile(filename, mode='w', compression=zipfile.ZIP_DEFLATED, allowZip64=True) as archive:
            for member in members:
                archive.write(os.path.join(tempdir, member), member)
            archive.writestr(MANIFEST, json.dumps(manifest, sort_keys=True))


def load_compact_model(filename, loadfunc, prefix, model_name):
    """ Unzip a compact model file and run `loadfunc` on the extracted files.

    :param filename: path of the compact model file
    :param loadfunc: callable taking the file prefix
    :param prefix: prefix of the member names
    :param model_name: expected kind of model
    :return: what `loadfunc` returns
    :raise: IncorrectModelFileException
    :type filename: str
    :type loadfunc: function
    :type prefix: str
    :type model_name: str
    """
    manifest = read_manifest(filename)
    if manifest['model'] != model_name:
        raise e.IncorrectModelFileException(model_name, manifest['model'])
    with TemporaryDirectory() as tempdir:
        with zipfile.ZipFile(filename, mode='r') as archive:
            missing = [member for member in manifest['members'] if member not in archive.namelist()]
            if len(missing) > 0:
                raise e.IncorrectModelFileException(model_name, 'archive without '+', '.join(missing))
            archive.extractall(tempdir)
        return loadfunc(os.path.join(tempdir, prefix))


class CompactIOMachine:
    """ Mixin giving a model `save_compact_model` and `load_compact_model`.

    Subclasses set `model_name`, `prefix` and `suffices`, and implement
    :func:`savemodel` and :func:`loadmodel` on a file prefix.
    """
    model_name = None
    prefix = None
    suffices = ()

    def savemodel(self, nameprefix):
        raise e.OperationNotDefinedException('savemodel')

    def loadmodel(self, nameprefix):
        raise e.OperationNotDefinedException('loadmodel')

    def manifest_extra(self):
        """ Entries added to the manifest; none by default. """
        return {}

    def save_compact_model(self, filename):
        """ Save the model as one compact file.

        :param filename: path of the compact model file
        :type filename: str
        """
        save_compact_model(filename, self.savemodel, self.prefix, self.suffices, self.model_name,
                           self.manifest_extra())

    def load_compact_model(self, filename):
        """ Load the model from a compact file.

        :param filename: path of the compact model file
        :raise: IncorrectModelFileException
        :type filename: str
        """
        return load_compact_model(filename, self.loadmodel, self.prefix, self.model_name)


def get_model_config_field(filename, parameter):
    return read_manifest(filename)[parameter]


def get_model_name(filename):
    """ Return the kind of model stored in a compact model file, e.g. `qlearner`. """
    return get_model_config_field(filename, 'model')
