"""Builder."""

import abc
from pathlib import Path
from typing import Optional
from typing_extensions import final

from indcomplex.campaign import CampaignResult
from indcomplex.config import Config, resolve_config
from indcomplex.log import logger


class Builder(abc.ABC):
    """Builder renders one report file of a campaign result."""

    name: str = "report"
    """File stem under the output directory."""

    def __init__(self, result: CampaignResult, config: Optional[Config] = None) -> None:
        self.result = result
        self.config = resolve_config(config)
        # setting some lazy config
        self.output_dir = Path(self.config["output_dir"])
        self.write_encoding = self.config["write_encoding"]

    @property
    def path(self) -> Path:
        return (self.output_dir / self.name).with_suffix(self.get_suffix())

    @final
    def write(self) -> Path:
        path = self.path
        if path.is_dir():
            raise IsADirectoryError(f"report path {str(path)!r} is a directory")
        if path.exists():
            logger.info(f"overwriting {str(path)!r}...")
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.text(), encoding=self.write_encoding)
        return path

    @abc.abstractmethod
    def get_suffix(self) -> str:
        raise NotImplementedError

    @abc.abstractmethod
    def text(self) -> str:
        raise NotImplementedError
