from pathlib import Path

DOCUMENT_VERSION = 1
DEFAULT_SEPARATOR = '|'

DEFAULT_NODE_BUDGET = 200_000
DEFAULT_ORACLE_BUDGET = 2_000_000

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_NEGATIVE = 2
EXIT_RESOURCE = 3

DATA_DIR = Path(__file__).resolve().parent / 'assets' / 'data'
SUM_IDENTITY_WITNESS_PATH = DATA_DIR / 'path_abc.json'
CONSTANT_PATH_PATH = DATA_DIR / 'constant_path4.json'
