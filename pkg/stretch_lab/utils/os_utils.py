import os

from stretch_lab.exceptions import IoError


def makedirs(folder):
    """Makes folder and any missing parents, leaving existing folders alone

    Parameters
    ----------
    folder : string
        path of the output folder

    Raises
    ------
    IoError
        if a regular file is in the way or the folder cannot be created
    """
    if os.path.isfile(folder):
        raise IoError("%s exists as a regular file." % folder)
    try:
        os.makedirs(folder, exist_ok=True)
    except OSError as err:
        raise IoError("cannot create %s: %s" % (folder, err)) from err


def write_output(path, data):
    """Writes text or bytes to path, creating missing parent folders

    Parameters
    ----------
    path : string
        output file
    data : string or bytes
        text is written as utf-8 with '\\n' line endings
    """
    parent = os.path.dirname(path)
    if parent:
        makedirs(parent)
    if isinstance(data, str):
        data = data.encode("utf-8")
    try:
        with open(path, "wb") as f:
            f.write(data)
    except OSError as err:
        raise IoError("cannot write %s: %s" % (path, err)) from err
