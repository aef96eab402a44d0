"""
Application Configuration for the Flat Manifold Spectral Toolkit
All computations are exact and deterministic; these knobs only bound
search sizes, truncations and presentation.
"""

import os
from fractions import Fraction

from dotenv import load_dotenv

# Base Paths
BASE_DIR = os.path.dirname(os.path.abspath(__file__))

load_dotenv(os.path.join(BASE_DIR, '.env'))


# Environment-driven settings
class Config:
    CLOSURE_BOUND = int(os.environ.get('FLATSPEC_CLOSURE_BOUND', 1024))
    LOG_LEVEL = os.environ.get('FLATSPEC_LOG_LEVEL', 'WARNING').upper()
    STRICT_TORSION = os.environ.get('FLATSPEC_STRICT', '0') == '1'


# Exact core / group closure
EXACT_CONFIG = {
    'closure_bound': Config.CLOSURE_BOUND,
}

# Spectrum computations
SPECTRUM_CONFIG = {
    'default_mu_max': Fraction(6),
    'bijection_mu_max': Fraction(4),
    'rational_moduli': (1, 2, 3, 4, 6),  # 2cos(2πk/q) is rational exactly for these
}

# Closed geodesics
GEODESIC_CONFIG = {
    'default_cutoff_sq': Fraction(4),
    'include_zero_length': False,
    'oracle_margin': 1,
    'injectivity_start_cutoff': Fraction(1),
    'injectivity_max_doublings': 16,
}

# Zeta / heat trace evaluation
ZETA_CONFIG = {
    'base_tolerance': 1e-8,
    'default_s_values': (0.1, 0.2, 0.5),
    'max_refinements': 12,
    'theta_tail_epsilon': 1e-18,
    'asymptotic_s_values': (0.02, 0.01),
}

# Built-in corpus references
CORPUS_PREFIX = 'corpus:'

# Report Configuration
REPORT_CONFIG = {
    'organization_name': 'Flat Manifold Spectral Toolkit',
    'report_title': 'Isospectrality Comparison Report',
    'include_timestamp': True,
}

# Verdict colours (PDF tables)
VERDICT_COLORS = {
    'equal': '#22c55e',
    'divergent': '#ef4444',
    'not_applicable': '#94a3b8',
}

# Logging
LOGGING_CONFIG = {
    'level': Config.LOG_LEVEL,
    'format': '%(asctime)s %(levelname)s %(name)s: %(message)s',
}
