import os

BASE_DIR = os.path.dirname(os.path.abspath(__file__))

# Enumeration Configuration
ENUMERATION_LIMIT = int(os.getenv('PTW_ENUMERATION_LIMIT', '2000000'))
PROGRESS_EVERY = int(os.getenv('PTW_PROGRESS_EVERY', '10000'))

# Word Graph Configuration
QUOTIENT_NODE_LIMIT = int(os.getenv('PTW_QUOTIENT_NODE_LIMIT', '500000'))
LOOKAHEAD_THRESHOLD = int(os.getenv('PTW_LOOKAHEAD_THRESHOLD', '20000'))

# Brute Force Configuration
BRUTE_FORCE_MAX_POINTS = int(os.getenv('PTW_BRUTE_FORCE_MAX_POINTS', '6'))
RANDOM_SEED = int(os.getenv('PTW_SEED', '0'))

# Bundled Data
RELATIONS_DIR = os.getenv('PTW_RELATIONS_DIR', os.path.join(BASE_DIR, 'relations'))
REPORT_SCHEMA_PATH = os.path.join(BASE_DIR, 'report_schema.json')

# Logging Configuration
LOG_LEVEL = os.environ.get('LOG_LEVEL', 'WARNING')
LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# Debug Configuration
DEBUG = os.environ.get('PTW_DEBUG', '').lower() in ('1', 'true', 'yes')
