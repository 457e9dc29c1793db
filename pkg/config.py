"""
Configuration for the return-times lab.
Budgets, tolerances and logging, all overridable from the environment.
"""

import os
from dotenv import load_dotenv

# Load environment variables
load_dotenv()


def _env_int(name: str, default: int) -> int:
    return int(os.getenv(name, str(default)))


# Application Configuration
APP_CONFIG = {
    "debug": os.getenv("DEBUG", "false").lower() == "true",
    "name": "Return Times Lab",
    "version": "1.0.0",

    # Server settings
    "host": os.getenv("HOST", "0.0.0.0"),
    "port": _env_int("PORT", 8000),
}

# Meta-Fibonacci sequences
METAFIB_CONFIG = {
    "gamma_tol": float(os.getenv("METAFIB_GAMMA_TOL", "1e-12")),
    "max_k": _env_int("METAFIB_MAX_K", 4096),
}

# Trees with dynamics: search budgets
TWD_CONFIG = {
    "n_max": _env_int("TWD_N_MAX", 4096),
    "scan_budget": _env_int("TWD_SCAN_BUDGET", 1024),  # levels scanned per chain step
    "k_lo": _env_int("TWD_K_LO", -8),
    "validate_depth": _env_int("TWD_VALIDATE_DEPTH", 10),
    "period_probe": _env_int("TWD_PERIOD_PROBE", 16),
    "period_window": _env_int("TWD_PERIOD_WINDOW", 16),
    "z2_width": _env_int("TWD_Z2_WIDTH", 8),
}

# Combinatorial Yoccoz puzzles
YOCCOZ_CONFIG = {
    "max_depth": _env_int("YOCCOZ_MAX_DEPTH", 12),
    "max_joint_groupings": _env_int("YOCCOZ_MAX_JOINT_GROUPINGS", 4096),
}

# Logging Configuration
LOG_CONFIG = {
    "level": "DEBUG" if APP_CONFIG["debug"] else os.getenv("LOG_LEVEL", "WARNING").upper(),
    "format": "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
}


def check_config():
    """Check configuration and log anything suspicious."""
    import logging

    logger = logging.getLogger(__name__)

    for key in ("n_max", "scan_budget", "period_probe", "period_window", "z2_width"):
        if TWD_CONFIG[key] < 1:
            logger.warning(f"⚠️  TWD_CONFIG[{key!r}] = {TWD_CONFIG[key]} is not positive")

    if TWD_CONFIG["k_lo"] > 0:
        logger.warning(f"⚠️  TWD_K_LO = {TWD_CONFIG['k_lo']} > 0, backward chains will be empty")

    if not 0 < METAFIB_CONFIG["gamma_tol"] < 1:
        logger.warning(f"⚠️  METAFIB_GAMMA_TOL = {METAFIB_CONFIG['gamma_tol']} outside (0, 1)")

    if APP_CONFIG["debug"]:
        logger.info(f"🚀 {APP_CONFIG['name']} {APP_CONFIG['version']} (Debug Mode)")
        logger.info(f"   budgets: {TWD_CONFIG}")
        logger.info(f"   yoccoz: {YOCCOZ_CONFIG}")
