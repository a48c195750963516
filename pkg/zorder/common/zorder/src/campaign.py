"""Campaign base implementation for zorder.

A campaign is a batch computation with three steps (extract, transform, load), run the same way from
the CLI and from a Dagster asset. This module contains the abstract base class with the common flow,
logging and error handling.
"""

from abc import ABC, abstractmethod
from typing import Generic, TypeVar

import pandas as pd

import zorder.common.zorder.src.zorder_logging as logging

RecordT = TypeVar("RecordT")
ResultT = TypeVar("ResultT")


class Campaign(ABC, Generic[RecordT, ResultT]):
    """Abstract base class that implements the main campaign flow.

    Subclasses implement extract (compute raw records), transform (records to a validated
    DataFrame) and load (persist the DataFrame and build the result object).

    Attributes:
        fail_on_disagreement: If True, run() raises when load() reports disagreements.
    """

    def __init__(self, fail_on_disagreement: bool) -> None:
        self.fail_on_disagreement: bool = fail_on_disagreement

    def run(self) -> ResultT:
        """Run the complete campaign.

        Returns:
            ResultT: The result object created by load().

        Raises:
            RuntimeError: If nothing was extracted, or if disagreements were found and
                fail_on_disagreement is True.
        """
        logger = logging.get_zorder_logger(__name__)
        logger.debug("Start campaign %s ...", type(self).__name__)
        logger.debug(" Extracting records...")
        records = self.extract()

        if len(records) == 0:
            raise RuntimeError("Campaign extracted no records.")

        logger.debug(" Transforming %d records...", len(records))
        df = self.transform(records=records)

        logger.debug(" Loading results...")
        result, disagreements = self.load(df=df)

        if disagreements > 0:
            logger.error("%d disagreements found by %s", disagreements, type(self).__name__)
            if self.fail_on_disagreement:
                raise RuntimeError(f"{disagreements} disagreements found.")

        return result

    @abstractmethod
    def extract(self) -> list[RecordT]:
        """Compute the raw records of the campaign."""

    @abstractmethod
    def transform(self, records: list[RecordT]) -> pd.DataFrame:
        """Turn the raw records into a validated DataFrame."""

    @abstractmethod
    def load(self, df: pd.DataFrame) -> tuple[ResultT, int]:
        """Persist the DataFrame.

        Returns:
            tuple[ResultT, int]: The result object and the number of disagreements it contains.
        """
