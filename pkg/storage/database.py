"""Database connection and run storage for verification reports."""

from typing import Any, Dict, Iterable, List, Optional

from sqlalchemy import create_engine
from sqlalchemy.orm import sessionmaker, Session
from sqlalchemy.exc import SQLAlchemyError

from core.config import Config
from core.models import Base, VerificationRun


class DatabaseManager:
    """Manages database connections and stored verification runs."""

    def __init__(self, database_url: Optional[str] = None) -> None:
        """Initialize database manager.

        Args:
            database_url: Database connection URL. Defaults to the configured SQLite file.
        """
        if database_url is None:
            database_url = Config.DATABASE_URL

        self.engine = create_engine(database_url)
        self.SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=self.engine)

    def create_tables(self) -> None:
        """Create all database tables."""
        try:
            Base.metadata.create_all(bind=self.engine)
        except SQLAlchemyError as e:
            raise RuntimeError(f"Failed to create database tables: {e}")

    def get_session(self) -> Session:
        """Get a database session.

        Returns:
            SQLAlchemy session object.
        """
        return self.SessionLocal()

    def save_reports(self, reports: Iterable[Dict[str, Any]]) -> int:
        """Store report dictionaries in one transaction.

        Returns:
            Number of runs stored.

        Raises:
            RuntimeError: If the transaction fails.
        """
        session = self.get_session()
        try:
            runs = [VerificationRun.from_report(report) for report in reports]
            session.add_all(runs)
            session.commit()
            return len(runs)
        except SQLAlchemyError as e:
            session.rollback()
            raise RuntimeError(f"Failed to store verification runs: {e}")
        finally:
            session.close()

    def list_runs(self, claim: Optional[str] = None) -> List[VerificationRun]:
        """Stored runs, oldest first, optionally restricted to one claim."""
        session = self.get_session()
        try:
            query = session.query(VerificationRun)
            if claim:
                query = query.filter(VerificationRun.claim == claim)
            runs = query.order_by(VerificationRun.id).all()
            session.expunge_all()
            return runs
        finally:
            session.close()

    def close(self) -> None:
        """Close the database connection."""
        self.engine.dispose()
