"""Persistence model for stored verification runs."""

import json
from typing import Any, Dict

from sqlalchemy import Column, DateTime, Float, Index, Integer, String, Text
from sqlalchemy.orm import declarative_base
from sqlalchemy.sql import func

Base = declarative_base()


class VerificationRun(Base):
    """One verification report, as written by `verify --store`."""

    __tablename__ = 'verification_runs'

    id = Column(Integer, primary_key=True, autoincrement=True)
    claim = Column(String(50), nullable=False)
    n = Column(Integer, nullable=True)
    k = Column(Integer, nullable=True)
    verdict = Column(String(20), nullable=False)
    graphs_examined = Column(Integer, nullable=False, default=0)
    mismatch_count = Column(Integer, nullable=False, default=0)
    elapsed_s = Column(Float, nullable=False, default=0.0)
    payload = Column(Text, nullable=False)
    created_at = Column(DateTime, default=func.now())

    __table_args__ = (
        Index('idx_verification_runs_claim', 'claim'),
    )

    @classmethod
    def from_report(cls, report: Dict[str, Any]) -> 'VerificationRun':
        return cls(
            claim=report['claim'],
            n=report['params']['n'],
            k=report['params']['k'],
            verdict=report['verdict'],
            graphs_examined=report['graphs_examined'],
            mismatch_count=len(report['mismatches']),
            elapsed_s=report['elapsed_s'],
            payload=json.dumps(report),
        )

    def report(self) -> Dict[str, Any]:
        """The stored report dictionary."""
        return json.loads(self.payload)

    def __repr__(self) -> str:
        return f"<VerificationRun(id={self.id}, claim='{self.claim}', n={self.n}, k={self.k}, verdict='{self.verdict}')>"
