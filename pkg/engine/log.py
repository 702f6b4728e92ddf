import logging


LOGGER_NAME = 'normq'


def setup_logger(debug: bool=False):
    """Stage traces on stderr with --debug; silent otherwise."""
    logger = logging.getLogger(LOGGER_NAME)
    if not debug:
        logger.addHandler(logging.NullHandler())
        return
    handler = logging.StreamHandler()
    handler.setFormatter(logging.Formatter(fmt='%(module)s - %(message)s'))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG)
