from datetime import datetime, timezone
import logging
from pathlib import Path
from typing import Any, Dict, Optional

from rich.console import Console
from rich.logging import RichHandler


class VerificationLogger:
    """Logger for one command-line verification run.

    Writes a timestamped file under the configured log directory and mirrors
    records to stderr through rich. The report itself never goes through here.
    """

    def __init__(self, config: Dict[str, Any], level: Optional[str] = None):
        log_config = config["logging"]
        self.level = (level or log_config["level"]).upper()
        self.log_dir = Path(log_config["file_path"]).parent
        self.log_dir.mkdir(parents=True, exist_ok=True)
        stamp = datetime.now(timezone.utc).strftime("%Y%m%d_%H%M%S")
        self.log_file = self.log_dir / f"verification_{stamp}.log"

        file_handler = logging.FileHandler(self.log_file, encoding="utf-8")
        file_handler.setFormatter(logging.Formatter(log_config["format"]))
        console_handler = RichHandler(console=Console(stderr=True), show_path=False)
        logging.basicConfig(
            level=self.level,
            format="%(message)s",
            handlers=[file_handler, console_handler],
            force=True,
        )
        self.logger = logging.getLogger("crossed_bimodules")

    def log_command_start(self, command: str, instance: str):
        self.logger.info(f"Running {command} on {instance}")

    def log_check(self, name: str, status: str, reason: Optional[str] = None):
        if status == "fail":
            suffix = f" ({reason})" if reason else ""
            self.logger.warning(f"{name}: {status}{suffix}")
        else:
            self.logger.info(f"{name}: {status}" + (f" ({reason})" if reason else ""))

    def log_error(self, error_msg: str):
        self.logger.error(f"Error occurred: {error_msg}")

    def log_summary(self, command: str, status: str, exit_code: int):
        self.logger.info(f"{command} finished: {status} (exit {exit_code})")
