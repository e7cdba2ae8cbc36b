from .log import Handle

logger = Handle(__name__)
