"""Entry point for the policy-reuse harness."""

import argparse
import asyncio
import logging
import sys
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .config import ExperimentConfig, HarnessSettings, load_config
from .exceptions import BPRError, ConfigError
from .harness import cmd_compare, cmd_run, cmd_sweep, cmd_train

logger = logging.getLogger(__name__)

DEFAULT_CONFIG = Path(__file__).parent.parent.parent / "config" / "config.yaml"
COMMANDS = {"train": cmd_train, "run": cmd_run, "compare": cmd_compare, "sweep": cmd_sweep}

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def setup_logging(config: ExperimentConfig):
    """Setup logging from config."""
    level = getattr(logging, config.logging.level.upper(), logging.INFO)
    logging.basicConfig(level=level, format=config.logging.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bpr", description="Bayesian policy reuse experiments")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("--config", default=str(DEFAULT_CONFIG), help="YAML config file")
    parser.add_argument("--seed", type=int, default=None, help="Override the master seed")
    parser.add_argument("--out", default=None, help="Override the output directory")
    parser.add_argument("--kb", default=None, help="Knowledge-base file")
    return parser


async def main(argv: Optional[List[str]] = None) -> int:
    """Main entry point."""
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config)
        overrides = {}
        if args.seed is not None:
            overrides["seed"] = args.seed
        if args.out is not None:
            overrides["output"] = args.out
        if args.kb is not None:
            overrides["kb_path"] = args.kb
        if overrides:
            try:
                config.harness = HarnessSettings.model_validate(
                    {**config.harness.model_dump(), **overrides}
                )
            except ValidationError as e:
                raise ConfigError("command line", str(e)) from e
        setup_logging(config)
        path = await COMMANDS[args.command](config)
    except ConfigError as e:
        logging.basicConfig()
        logger.error(e.message)
        return EXIT_CONFIG
    except BPRError as e:
        logger.error(e.message, exc_info=True)
        return EXIT_RUNTIME
    except Exception as e:
        logger.error(f"Unexpected error: {e}", exc_info=True)
        return EXIT_RUNTIME
    logger.info(f"{args.command} finished: {path}")
    return EXIT_OK


def run():
    """Console script entry point."""
    try:
        sys.exit(asyncio.run(main()))
    except KeyboardInterrupt:
        sys.exit(0)


if __name__ == "__main__":
    run()
