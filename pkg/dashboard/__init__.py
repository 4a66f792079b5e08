from .builder import build_dashboard

__all__ = ["build_dashboard"]
