from pathlib import Path
from .log import Handle

logger = Handle(__name__)


def almostprime_datafolder(subfolder=None):
    """
    Returns the path of the almostprime data folder.

    Parameters
    -----------
    subfolder : :class:`str`
        Subfolder within the almostprime data folder.

    Returns
    -------
    :class:`pathlib.Path`
    """
    folder = Path(__file__).resolve().parent.parent / "data"
    if subfolder is not None:
        folder = folder / subfolder
    return folder
