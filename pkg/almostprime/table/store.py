"""
HDF cache for tabulated functions, keyed by table kind, grid end and step.
"""
import os
import pandas as pd
from pathlib import Path
from ..util.meta import almostprime_datafolder
from ..util.errors import CacheError
from ..util.log import Handle

logger = Handle(__name__)

_COMPLEVEL = 4
_COMPLIB = "zlib"
_FILENAME = "tables.h5"


def store_path(cache_dir=None):
    """
    Path of the HDF store within a cache folder.

    Parameters
    ----------
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Cache folder, defaulting to the package data folder.

    Returns
    -------
    :class:`pathlib.Path`
    """
    folder = Path(cache_dir).expanduser() if cache_dir is not None else almostprime_datafolder("cache")
    return folder / _FILENAME


def table_key(kind, s_max, step):
    """
    Store key for a table, e.g. `/rho/smax250_inv256`.

    Parameters
    ----------
    kind : :class:`str`
        Table kind (`rho` or `sievefn`).
    s_max : :class:`float`
        Requested upper end of the grid.
    step : :class:`float`
        Grid spacing.

    Returns
    -------
    :class:`str`
    """
    smax = "{:g}".format(float(s_max)).replace(".", "p")
    return "/{}/smax{}_inv{:d}".format(kind, smax, int(round(1.0 / step)))


def load_arrays(kind, s_max, step, cache_dir):
    """
    Load the arrays and metadata of a cached table.

    Parameters
    ----------
    kind : :class:`str`
        Table kind.
    s_max : :class:`float`
        Requested upper end of the grid.
    step : :class:`float`
        Grid spacing.
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Cache folder.

    Returns
    -------
    :class:`tuple` | `None`
        `(arrays, attrs)` with a :class:`dict` of :class:`numpy.ndarray` and a
        :class:`dict` of scalars, or `None` on a cache miss.
    """
    path = store_path(cache_dir)
    key = table_key(kind, s_max, step)
    if not path.exists():
        logger.debug("No store at {}; cache miss for {}.".format(path, key))
        return None
    with pd.HDFStore(path, mode="r") as store:
        if key not in store.keys():
            logger.debug("Cache miss for {}.".format(key))
            return None
        df = store.get(key)
        attrs = dict(store.get_storer(key).attrs.metadata)
    if attrs.get("s_max") != float(s_max) or attrs.get("step") != float(step):
        raise CacheError("Cached table {} does not match its key.".format(key))
    logger.debug("Cache hit for {}.".format(key))
    arrays = {c: df[c].to_numpy(dtype=float, copy=True) for c in df.columns}
    return arrays, attrs


def dump_arrays(kind, s_max, step, cache_dir, arrays, attrs, complevel=_COMPLEVEL):
    """
    Write a table to the cache, replacing any entry under the same key.

    Parameters
    ----------
    kind : :class:`str`
        Table kind.
    s_max : :class:`float`
        Requested upper end of the grid.
    step : :class:`float`
        Grid spacing.
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Cache folder.
    arrays : :class:`dict`
        Equal-length arrays, stored as columns.
    attrs : :class:`dict`
        Scalar metadata.
    complevel : :class:`int`
        Compression level option for the HDF store.
    """
    path = store_path(cache_dir)
    if not path.parent.exists():
        logger.debug("Creating folder for store.")
        path.parent.mkdir(parents=True)
    key = table_key(kind, s_max, step)
    df = pd.DataFrame({name: arr for name, arr in arrays.items()})
    metadata = {name: float(v) for name, v in attrs.items()}
    metadata.update({"s_max": float(s_max), "step": float(step)})
    logger.debug("Dumping {} ({:d} rows) to {}.".format(key, df.index.size, path.name))
    with pd.HDFStore(path, mode="a", complevel=complevel, complib=_COMPLIB) as store:
        store.put(key, df, format="fixed")
        store.get_storer(key).attrs.metadata = metadata


def reset_store(cache_dir=None, remove=True):
    """
    Reset or remove the cache store.

    Parameters
    ----------
    cache_dir : :class:`str` | :class:`pathlib.Path`
        Cache folder.
    remove : :class:`bool`
        Whether to remove the file from disk; otherwise every key is dropped.
    """
    path = store_path(cache_dir)
    if remove:
        logger.debug("Removing store.")
        try:
            os.remove(path)
        except FileNotFoundError:
            logger.debug("Store already removed or not present.")
    elif path.exists():
        with pd.HDFStore(path, mode="a") as store:
            for key in store.keys():
                logger.debug("Dropping {}".format(key))
                store.remove(key)
